// Copyright 2026 The qgauss Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "qgauss/specfun.hpp"

namespace sf = qgauss::specfun;
using doctest::Approx;
using sf::Status;

TEST_CASE("gamma: reference values and poles") {
  CHECK(sf::gamma(0.5).value == Approx(1.7724538509055160).epsilon(1e-14));
  CHECK(sf::gamma(5.0).value == 24.0);
  CHECK(sf::gamma(5.0).status == Status::exact);
  CHECK(sf::gamma(1.0).value == 1.0);
  for (double z : {0.0, -1.0, -2.0, -17.0}) {
    CHECK(sf::gamma(z).status == Status::domain_error);
    CHECK(sf::log_gamma(z).status == Status::domain_error);
  }
  CHECK(sf::gamma(-0.5).value == Approx(-2.0 * std::sqrt(oracle::pi)).epsilon(1e-14));
  CHECK(sf::gamma(200.0).status == Status::diverged);
}

TEST_CASE("gamma agrees with the Euler product") {
  for (double z : {0.3, 1.7, 4.25, 9.5}) {
    CHECK(oracle::close_rel(sf::gamma(z).value, oracle::gamma_euler_product(z), 1e-9));
  }
}

TEST_CASE("gamma recurrence holds on random arguments") {
  oracle::Sampler draw(7);
  for (int i = 0; i < 1000; ++i) {
    const double z = draw(0.1, 20.0);
    const double lhs = sf::gamma(z + 1.0).value;
    const double rhs = z * sf::gamma(z).value;
    REQUIRE(oracle::close_rel(lhs, rhs, 1e-12));
  }
}

TEST_CASE("gamma matches Boost across signs") {
  oracle::Sampler draw(8);
  for (int i = 0; i < 500; ++i) {
    double z = draw(-30.0, 170.0);
    if (std::abs(z - std::round(z)) < 1e-3) continue;
    REQUIRE(oracle::close_rel(sf::gamma(z).value, oracle::gamma(z), 5e-13));
    REQUIRE(sf::log_gamma(z).value == Approx(std::lgamma(z)).epsilon(1e-12));
  }
}

TEST_CASE("log_gamma_ratio stays accurate for large close arguments") {
  for (double b : {10.0, 1e3, 1e6, 1e9}) {
    const double a = b + 0.5;
    const double ref = std::log(boost::math::tgamma_ratio(a, b));
    CHECK(sf::log_gamma_ratio(a, b) == Approx(ref).epsilon(1e-12));
  }
  CHECK(sf::log_gamma_ratio(3.0, 2.0) == Approx(std::log(2.0)).epsilon(1e-15));
}

TEST_CASE("beta: values, symmetry, identity with gamma") {
  CHECK(sf::beta(1.0, 1.0).value == 1.0);
  CHECK(sf::beta(0.5, 0.5).value == Approx(oracle::pi).epsilon(1e-14));
  CHECK(sf::beta(1.5, 5.0).value == sf::beta(5.0, 1.5).value);
  CHECK(sf::beta(0.0, 2.0).status == Status::domain_error);
  CHECK(sf::beta(-1.0, 0.5).status == Status::domain_error);
  CHECK(sf::beta(-0.5, -0.5).status == Status::domain_error);  // x + y = -1

  oracle::Sampler draw(9);
  for (int i = 0; i < 300; ++i) {
    const double x = draw(0.05, 30.0);
    const double y = draw(0.05, 30.0);
    const double b = sf::beta(x, y).value;
    REQUIRE(oracle::close_rel(b * sf::gamma(x + y).value, sf::gamma(x).value * sf::gamma(y).value, 1e-12));
    REQUIRE(oracle::close_rel(b, oracle::beta(x, y), 1e-12));
  }
}

TEST_CASE("bessel_j: reference values and domain") {
  CHECK(sf::bessel_j(0.0, 0.0).value == 1.0);
  CHECK(sf::bessel_j(0.5, oracle::pi / 2).value == Approx(2.0 / oracle::pi).epsilon(1e-14));
  CHECK(sf::bessel_j(-2.5, 0.0).status == Status::domain_error);
  CHECK(sf::bessel_j(-2.0, 1.0).status == Status::domain_error);
  CHECK(sf::bessel_j(0.3, -1.0).status == Status::domain_error);
  CHECK(sf::bessel_j(3.0, -2.0).value == Approx(-oracle::bessel_j(3.0, 2.0)).epsilon(1e-13));
  // half-integer closed form
  for (double x : {0.3, 2.0, 7.5, 31.0, 120.0}) {
    CHECK(sf::bessel_j(0.5, x).value == Approx(std::sqrt(2.0 / (oracle::pi * x)) * std::sin(x)).epsilon(1e-12));
  }
}

TEST_CASE("bessel_j matches Boost on a wide grid") {
  for (double nu : {0.0, 0.3, 0.8333333333333334, 1.5, 2.1, 7.5, 25.5, 100.5, 400.25}) {
    for (double x : {0.01, 0.7, 3.0, 5.5, 12.0, 26.0, 60.0, 150.0, 900.0}) {
      const double ref = oracle::bessel_j(nu, x);
      const double got = sf::bessel_j(nu, x).value;
      INFO("nu=" << nu << " x=" << x);
      // absolute scale: the oscillatory envelope sqrt(2/(pi x)) near zeros
      const double scale = std::max(std::abs(ref), 1e-300);
      if (std::abs(ref) > 1e-3 * std::sqrt(2.0 / (oracle::pi * x)) || x < nu) {
        CHECK(std::abs(got - ref) <= 1e-11 * scale);
      } else {
        CHECK(std::abs(got - ref) <= 1e-13 * std::sqrt(2.0 / (oracle::pi * x)));
      }
    }
  }
}

TEST_CASE("bessel_j negative non-integer order matches Boost") {
  for (double nu : {-0.5, -1.3, -4.7}) {
    for (double x : {0.5, 3.0, 9.0, 40.0}) {
      INFO("nu=" << nu << " x=" << x);
      CHECK(sf::bessel_j(nu, x).value == Approx(oracle::bessel_j(nu, x)).epsilon(1e-10));
    }
  }
}

TEST_CASE("bessel_j evaluation routes agree where they overlap") {
  using sf::detail::LogMagnitude;
  auto value = [](LogMagnitude m) { return m.sign * std::exp(m.log_abs); };
  // series vs Steed
  for (double nu : {0.2, 1.5, 2.3, 6.0}) {
    for (double x = 2.0; x <= 4.0; x += 0.25) {
      const double a = value(sf::detail::bessel_j_series(nu, x));
      const double b = value(sf::detail::bessel_j_steed(nu, x));
      REQUIRE(std::abs(a - b) <= 1e-10 * std::max(std::abs(a), 1e-3));
    }
  }
  // Steed vs Hankel
  for (double nu : {0.0, 0.8, 1.5, 3.2}) {
    for (double x = 26.0; x <= 40.0; x += 0.7) {
      const double a = value(sf::detail::bessel_j_steed(nu, x));
      const double b = value(sf::detail::bessel_j_hankel(nu, x));
      REQUIRE(std::abs(a - b) <= 1e-10 * std::sqrt(2.0 / (oracle::pi * x)));
    }
  }
  // Hankel-plus-recurrence vs Steed and vs Hankel itself
  for (double nu : {4.5, 11.3, 24.0}) {
    for (double x = 30.0; x <= 300.0; x *= 1.37) {
      const double env = std::sqrt(2.0 / (oracle::pi * x));
      const double r = value(sf::detail::bessel_j_recurrence(nu, x));
      REQUIRE(std::abs(r - value(sf::detail::bessel_j_steed(nu, x))) <= 1e-10 * env);
      if (x > 0.5 * nu * nu) REQUIRE(std::abs(r - value(sf::detail::bessel_j_hankel(nu, x))) <= 1e-12 * env);
    }
  }
}

TEST_CASE("J_nu(x)/x^nu is even") {
  for (double nu : {0.0, 1.0, 2.0, 5.0}) {
    for (double x : {0.4, 1.9, 6.3}) {
      const double p = sf::bessel_j(nu, x).value / std::pow(x, nu);
      const double m = sf::bessel_j(nu, -x).value / std::pow(-x, nu);
      CHECK(p == m);
    }
  }
  for (double nu : {0.83, 1.61, 3.5}) {
    for (double x : {0.4, 1.9, 6.3, 50.0}) CHECK(sf::bessel_lambda(nu, x).value == sf::bessel_lambda(nu, -x).value);
  }
}

TEST_CASE("bessel_lambda agrees with its definition") {
  CHECK(sf::bessel_lambda(2.5, 0.0).value == 1.0);
  CHECK(sf::bessel_lambda(-1.0, 1.0).status == Status::domain_error);
  for (double nu : {0.8333, 1.6111, 2.5, 100.5}) {
    for (double x : {0.5, 3.0, 17.0, 80.0, 300.0}) {
      const double ref = std::tgamma(std::min(nu + 1.0, 170.0)) * std::pow(2.0 / x, nu) * oracle::bessel_j(nu, x);
      if (nu > 100 || !std::isfinite(ref)) continue;
      INFO("nu=" << nu << " x=" << x);
      CHECK(sf::bessel_lambda(nu, x).value == Approx(ref).epsilon(1e-10).scale(1e-12));
    }
  }
}

TEST_CASE("bessel_j_imag follows the principal branch") {
  // J_nu(i t) = i^nu I_nu(t)
  for (double nu : {0.0, 0.5, 1.7, 3.25}) {
    for (double t : {0.3, 2.0, 9.0}) {
      const auto v = sf::bessel_j_imag(nu, t);
      REQUIRE(v.ok());
      const std::complex<double> ref = std::polar(1.0, 0.5 * oracle::pi * nu) * boost::math::cyl_bessel_i(nu, t);
      CHECK(std::abs(v.value - ref) <= 1e-13 * std::abs(ref));
    }
  }
  CHECK(sf::bessel_j_imag(-1.0, 1.0).status == Status::domain_error);
}

TEST_CASE("bessel_k: reference values, evenness, decay") {
  CHECK(sf::bessel_k(0.5, 1.0).value == Approx(0.4610685044478946).epsilon(1e-13));
  CHECK(sf::bessel_k(0.75, 2.0).value == sf::bessel_k(-0.75, 2.0).value);
  const double asym = std::sqrt(oracle::pi / 60.0) * std::exp(-30.0);
  CHECK(std::abs(sf::bessel_k(0.25, 30.0).value / asym - 1.0) < 0.01);
  CHECK(sf::bessel_k(0.5, 0.0).status == Status::domain_error);
  CHECK(sf::bessel_k(0.5, -1.0).status == Status::domain_error);
  CHECK(sf::bessel_k(2.0, 1.0).status == Status::domain_error);
}

TEST_CASE("bessel_k matches Boost and the integral representation") {
  for (double mu : {0.1, 0.5, 1.3, 4.7, 20.5, 150.25, 999.5}) {
    for (double x : {1e-3, 0.4, 1.9, 2.1, 10.0, 80.0, 600.0}) {
      const double ref = oracle::bessel_k(mu, x);
      if (!(ref > 0.0) || !std::isfinite(ref)) continue;
      INFO("mu=" << mu << " x=" << x);
      CHECK(oracle::close_rel(sf::bessel_k(mu, x).value, ref, 1e-12));
    }
  }
  // K_mu(x) = integral_0^inf exp(-x cosh t) cosh(mu t) dt
  for (double mu : {0.25, 1.75}) {
    for (double x : {0.5, 3.0}) {
      const double ref = oracle::integrate_half_line([&](double t) { return 0.5 * (std::exp(mu * t - x * std::cosh(t)) + std::exp(-mu * t - x * std::cosh(t))); }, 0.0);
      CHECK(oracle::close_rel(sf::bessel_k(mu, x).value, ref, 1e-11));
    }
  }
}

TEST_CASE("large-order K: recurrence and uniform expansion agree") {
  for (double mu : {1000.5, 2000.25, 9999.5}) {
    for (double x : {1.0, 500.0, 5000.0, 1e5}) {
      const double a = sf::detail::log_bessel_k_recurrence(mu, x).value;
      const double b = sf::detail::log_bessel_k_debye(mu, x).value;
      INFO("mu=" << mu << " x=" << x);
      CHECK(std::abs(a - b) <= 1e-11 * std::max(1.0, std::abs(a)));
    }
  }
}

TEST_CASE("K_mu(x) = K_-mu(x) on random points") {
  oracle::Sampler draw(11);
  for (int i = 0; i < 200; ++i) {
    double mu = draw(0.0, 30.0);
    if (std::abs(mu - std::round(mu)) < 1e-6) mu += 0.25;
    const double x = draw(0.01, 100.0);
    REQUIRE(sf::bessel_k(mu, x).value == sf::bessel_k(-mu, x).value);
  }
}

TEST_CASE("whittaker_w0: values and symmetry") {
  CHECK(sf::whittaker_w0(0.5, 2.0).value == Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(sf::whittaker_w0(1.2, 3.0).value == sf::whittaker_w0(-1.2, 3.0).value);
  const auto tiny = sf::whittaker_w0(0.5, 1e-8);
  CHECK(tiny.status == Status::converged);
  CHECK(tiny.value == Approx(std::sqrt(1e-8 / oracle::pi) * std::sqrt(oracle::pi / 1e-8) * std::exp(-0.5e-8)).epsilon(1e-12));
  CHECK(sf::whittaker_w0(0.5, 0.0).status == Status::domain_error);
  CHECK(sf::whittaker_w0(3.0, 1.0).status == Status::domain_error);
}

TEST_CASE("whittaker_w0 against the series chain through J at imaginary argument") {
  // K_mu(x) = (pi/2) (I_-mu(x) - I_mu(x)) / sin(mu pi), I_nu(x) = i^-nu J_nu(i x)
  oracle::Sampler draw(13);
  int checked = 0;
  while (checked < 50) {
    const double mu = draw(0.05, 3.95);
    if (std::abs(mu - std::round(mu)) < 0.05) continue;
    const double z = draw(0.2, 8.0);
    const double x = 0.5 * z;
    const auto jp = sf::bessel_j_imag(mu, x);
    const auto jm = sf::bessel_j_imag(-mu, x);
    REQUIRE(jp.ok());
    REQUIRE(jm.ok());
    const double ip = (std::polar(1.0, -0.5 * oracle::pi * mu) * jp.value).real();
    const double im = (std::polar(1.0, 0.5 * oracle::pi * mu) * jm.value).real();
    const double k = 0.5 * oracle::pi * (im - ip) / std::sin(mu * oracle::pi);
    const double w = std::sqrt(z / oracle::pi) * k;
    INFO("mu=" << mu << " z=" << z);
    CHECK(oracle::close_rel(sf::whittaker_w0(mu, z).value, w, 1e-10));
    ++checked;
  }
}

TEST_CASE("log K stays finite at extreme arguments") {
  for (double mu : {0.3, 4.5, 19.5, 250.25}) {
    const double tiny = sf::log_bessel_k(mu, 1e-200).value;
    // K_mu(x) ~ Gamma(mu) / 2 (x/2)^-mu
    CHECK(tiny == Approx(std::lgamma(mu) - std::log(2.0) - mu * std::log(0.5e-200)).epsilon(1e-10));
    const double huge = sf::log_bessel_k(mu, 1e300).value;
    CHECK(std::isfinite(huge));
    CHECK(huge == Approx(-1e300).epsilon(1e-12));
  }
}
