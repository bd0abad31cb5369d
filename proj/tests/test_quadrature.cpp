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
#include <vector>

#include "oracles.hpp"
#include "qgauss/quadrature.hpp"

namespace quad = qgauss::quad;
using doctest::Approx;

TEST_CASE("polynomials are exact") {
  const auto r = quad::integrate([](double x) { return x * x * x - 2 * x + 1; }, -1.0, 3.0);
  CHECK(r.converged);
  CHECK(r.value == Approx(20.0 - 8.0 + 4.0).epsilon(1e-15));
  CHECK(r.intervals == 1);
}

TEST_CASE("endpoint singularity is resolved by bisection") {
  const auto r = quad::integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
  CHECK(r.converged);
  CHECK(r.value == Approx(2.0).epsilon(1e-11));
}

TEST_CASE("oscillatory integrand on a finite interval") {
  const auto r = quad::integrate([](double x) { return std::cos(40.0 * x) * std::exp(-x); }, 0.0, 10.0);
  const double ref = (1.0 - std::exp(-10.0) * (std::cos(400.0) - 40.0 * std::sin(400.0))) / (1.0 + 1600.0);
  CHECK(r.converged);
  CHECK(r.value == Approx(ref).epsilon(1e-11));
}

TEST_CASE("semi-infinite with algebraic tail") {
  // integral_0^inf (1+x^2)^-p dx = sqrt(pi) Gamma(p - 1/2) / (2 Gamma(p))
  for (double p : {0.6, 1.0, 3.0}) {
    const auto r = quad::integrate_semi_infinite([&](double x) { return std::pow(1.0 + x * x, -p); }, 0.0, 1.0);
    const double ref = std::sqrt(oracle::pi) * std::tgamma(p - 0.5) / (2.0 * std::tgamma(p));
    INFO("p=" << p);
    CHECK(r.converged);
    CHECK(r.value == Approx(ref).epsilon(1e-10));
  }
}

TEST_CASE("whole line gaussian") {
  const auto r = quad::integrate_whole_line([](double x) { return std::exp(-0.5 * (x - 0.3) * (x - 0.3)); }, 1.0);
  CHECK(r.value == Approx(std::sqrt(2.0 * oracle::pi)).epsilon(1e-12));
}

TEST_CASE("fourier tail with slow algebraic decay") {
  // integral_0^inf cos(w x) / (1 + x^2) dx = (pi/2) e^-w
  for (double w : {0.5, 3.0, 20.0}) {
    const auto r = quad::integrate_fourier([](double x) { return 1.0 / (1.0 + x * x); }, 0.0, w);
    INFO("w=" << w);
    CHECK(r.converged);
    const double ref = 0.5 * oracle::pi * std::exp(-w);
    CHECK(std::abs(r.value - ref) <= 1e-9 * ref + 1e-13);
  }
  // integral_0^inf cos(x) x^-1/2 dx = sqrt(pi/2), starting past the singularity
  const auto head = quad::integrate([](double x) { return std::cos(x) / std::sqrt(x); }, 0.0, 1.0);
  const auto tail = quad::integrate_fourier([](double x) { return 1.0 / std::sqrt(x); }, 1.0, 1.0);
  CHECK(tail.converged);
  CHECK(head.value + tail.value == Approx(std::sqrt(oracle::pi / 2.0)).epsilon(1e-10));
}

TEST_CASE("wynn epsilon accelerates an alternating series") {
  std::vector<double> s;
  double acc = 0.0;
  for (int k = 0; k < 20; ++k) {
    acc += (k % 2 ? -1.0 : 1.0) / (k + 1.0);
    s.push_back(acc);
  }
  const auto e = quad::wynn_epsilon(s.data(), s.size());
  CHECK(e.value == Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("budget exhaustion is reported") {
  quad::QuadOptions o;
  o.max_intervals = 3;
  const auto r = quad::integrate([](double x) { return std::sin(1.0 / x); }, 1e-6, 1.0, o);
  CHECK_FALSE(r.converged);
  CHECK(r.intervals <= 3);
}
