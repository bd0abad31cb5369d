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
#include "qgauss/analysis.hpp"
#include "qgauss/error.hpp"
#include "qgauss/fourier.hpp"

using namespace qgauss;
using doctest::Approx;

namespace {

std::vector<double> heavy_grid() {
  std::vector<double> v;
  for (int k = 0; k < 26; ++k) v.push_back(1.05 + 0.05 * k);
  return v;
}

std::vector<double> compact_grid() {
  std::vector<double> v;
  for (int k = 0; k < 60; ++k) v.push_back(-2.0 + 0.05 * k);
  v.push_back(0.99);
  return v;
}

// ||G||^2 and ||x G||^2 by direct quadrature.
std::pair<double, double> moments(const KernelSpec1D& k) {
  auto g2 = [&](double x) { const double v = k.eval(x); return v * v; };
  auto xg2 = [&](double x) { const double v = x * k.eval(x); return v * v; };
  if (k.regime() == Regime::compact) {
    const double r = k.support_radius();
    return {2 * oracle::integrate(g2, 0, r), 2 * oracle::integrate(xg2, 0, r)};
  }
  return {2 * oracle::integrate_half_line(g2, 0), 2 * oracle::integrate_half_line(xg2, 0)};
}

}  // namespace

TEST_CASE("window radius reference values") {
  const auto w = window_report(KernelSpec1D::make({2.0, 0.1, 0.5}));
  CHECK(w.delta == Approx(1 / std::sqrt(50.0)).epsilon(1e-13));
  CHECK(w.ft_bound == Approx(0.59696).epsilon(1e-4 / 0.59696));
  CHECK(w.center == 0.0);
  CHECK(w.regime == WindowRegime::heavy_tail);
  CHECK(window_report(KernelSpec1D::make({0.5, 1.0, 0.5})).delta == Approx(std::sqrt(4.0 / 11.0)).epsilon(1e-13));
  CHECK(window_report(KernelSpec1D::make({1.0 + 1e-6, 0.3, 0.5})).delta == Approx(0.3 / std::sqrt(2.0)).epsilon(1e-5));
  CHECK(window_report(KernelSpec1D::make({1.0, 0.3, 0.5})).delta == Approx(0.3 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(window_report(KernelSpec1D::make({7.0 / 3.0, 0.1, 0.5})), Error);
  CHECK_THROWS_AS(window_report(KernelSpec1D::make({2.5, 0.1, 0.5})), Error);
}

TEST_CASE("closed-form norms match direct moments") {
  std::vector<double> qs = heavy_grid();
  for (double q : compact_grid()) qs.push_back(q);
  for (double q : qs) {
    const auto k = KernelSpec1D::make({q, 0.1, 0.5});
    const auto w = window_report(k);
    const auto [m0, m1] = moments(k);
    INFO("q=" << q);
    CHECK(w.l2_norm * w.l2_norm == Approx(m0).epsilon(1e-10));
    CHECK(w.delta == Approx(std::sqrt(m1 / m0)).epsilon(1e-8));
    CHECK(w.ft_bound == Approx(m0 / (4 * oracle::pi * std::sqrt(m1))).epsilon(1e-8));
  }
}

TEST_CASE("window radius rises and frequency bound falls along both q grids") {
  for (const auto& grid : {heavy_grid(), compact_grid()}) {
    for (std::size_t i = 1; i < grid.size(); ++i) {
      const auto a = window_report(KernelSpec1D::make({grid[i - 1], 0.1, 0.5}));
      const auto b = window_report(KernelSpec1D::make({grid[i], 0.1, 0.5}));
      INFO("q=" << grid[i]);
      REQUIRE(b.delta > a.delta + 1e-12);
      REQUIRE(b.ft_bound < a.ft_bound - 1e-12);
    }
  }
}

TEST_CASE("Heisenberg inequality") {
  const auto g = heisenberg_check(KernelSpec1D::make({1.0001, 1.0, 0.5}));
  CHECK(g.ratio == Approx(1.0).epsilon(1e-2));
  CHECK(g.satisfied);
  const auto h = heisenberg_check(KernelSpec1D::make({2.0, 0.1, 0.5}));
  CHECK(h.satisfied);
  CHECK(h.ratio > 1.0);
  // at q = 2 the frequency norm has a closed form: ||y F|| with F = exp(-2 pi |y| / sqrt(a))
  const double b = 2 * oracle::pi / std::sqrt(50.0);
  CHECK(frequency_norm(KernelSpec1D::make({2.0, 0.1, 0.5})) == Approx(std::sqrt(2 * 2 / std::pow(2 * b, 3))).epsilon(1e-9));
  CHECK(heisenberg_check(KernelSpec1D::make({0.5, 1.0, 0.5})).satisfied);

  const auto d = heisenberg_check(KernelSpec1D::make({-1.5, 0.1, 0.5}));
  CHECK_FALSE(d.finite);
  CHECK(d.satisfied);
  CHECK(std::isinf(d.lhs));

  std::vector<double> qs = heavy_grid();
  for (double q : compact_grid()) qs.push_back(q);
  for (double q : qs) {
    if (!validity_check({q, 0.1, 0.5}).valid) continue;
    INFO("q=" << q);
    REQUIRE(heisenberg_check(KernelSpec1D::make({q, 0.1, 0.5})).satisfied);
  }
  for (double q : {1.0 - 1e-3, 1.0 + 1e-3}) {
    CHECK(heisenberg_check(KernelSpec1D::make({q, 0.1, 0.5})).ratio == Approx(1.0).epsilon(1e-2));
  }
}

TEST_CASE("frequency norm against direct quadrature of the transform") {
  for (double q : {0.1, 0.5, 1.2, 2.3}) {
    const auto k = KernelSpec1D::make({q, 1.0, 0.5});
    double ref = 0.0;
    if (q > 1) {
      ref = oracle::integrate_half_line([&](double y) { const double f = ft1d_analytic(k, y).value.real(); return f == 0.0 ? 0.0 : y * y * f * f; }, 0.0, 1e-12);
    } else {
      ref = oracle::integrate_panels([&](double y) { const double f = ft1d_analytic(k, y).value.real(); return y * y * f * f; }, 0.0, 400.0, 800);
      // the remaining tail is covered by a loose tolerance
    }
    INFO("q=" << q);
    CHECK(frequency_norm(k) == Approx(std::sqrt(2 * ref)).epsilon(q > 1 ? 1e-8 : 2e-2));
  }
}

TEST_CASE("cut-off frequency") {
  const double lorentz = std::sqrt(50.0) * std::log(10.0) / (2 * oracle::pi);
  CHECK(cutoff_frequency(KernelSpec1D::make({2.0, 0.1, 0.5})) == Approx(lorentz).epsilon(1e-10));
  CHECK(lorentz == Approx(2.5914).epsilon(1e-4));

  const double a = cutoff_frequency(KernelSpec1D::make({1.2, 0.1, 0.5}));
  const double b = cutoff_frequency(KernelSpec1D::make({2.0, 0.1, 0.5}));
  const double c = cutoff_frequency(KernelSpec1D::make({2.9, 0.1, 0.5}));
  CHECK(a > b);
  CHECK(b > c);

  double prev = kInfinity;
  for (double q : {-2.0, -1.0, 0.0, 0.5, 0.99}) {
    const auto k = KernelSpec1D::make({q, 0.1, 0.5});
    const double y = cutoff_frequency(k);
    CHECK(y < prev);
    prev = y;
    // crossing is genuine and nothing past it climbs back over the threshold
    CHECK(std::abs(ft1d_analytic(k, y).value.real()) == Approx(0.1).epsilon(1e-6));
    for (int i = 1; i < 4000; ++i) REQUIRE(std::abs(ft1d_analytic(k, y + 0.005 * i).value.real()) < 0.1 + 1e-9);
  }
  CHECK_THROWS_AS(cutoff_frequency(KernelSpec1D::make({2.0, 0.1, 0.5}), 1.5), Error);
}

TEST_CASE("cut-off decreases along both q grids") {
  std::vector<double> heavy;
  for (int k = 0; k < 38; ++k) heavy.push_back(1.05 + 0.05 * k);
  for (const auto& grid : {heavy, compact_grid()}) {
    double prev = kInfinity;
    for (double q : grid) {
      if (!validity_check({q, 0.1, 0.5}).valid) continue;
      const double y = cutoff_frequency(KernelSpec1D::make({q, 0.1, 0.5}));
      INFO("q=" << q);
      REQUIRE(y < prev - 1e-12);
      prev = y;
    }
  }
}

TEST_CASE("validity check") {
  CHECK(validity_check({1.5, 0.1, 0.5}).valid);
  const auto bad = validity_check({5.0 / 3.0, 0.1, 0.5});
  CHECK_FALSE(bad.valid);
  REQUIRE(bad.violations.size() == 1);
  CHECK(bad.violations[0].find("case-a") != std::string::npos);
  CHECK_FALSE(validity_check({1.4, 0.1, 0.5}).valid);
  for (double q : {1.41, 2.0, 2.3, 0.5, -2.0, 0.99, 1.0}) CHECK(validity_check({q, 0.1, 0.5}).valid);
  CHECK_FALSE(validity_check({3.0, 0.1, 0.5}).valid);
  CHECK(near_integer(2.0000000000001));
  CHECK_FALSE(near_integer(2.001));
}
