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

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "qgauss/specfun.hpp"

namespace qgauss::specfun {
namespace detail {

bool is_integer(double x) noexcept { return std::isfinite(x) && std::floor(x) == x; }

bool is_nonpositive_integer(double x) noexcept { return is_integer(x) && x <= 0.0; }

// sin(pi x) with the argument reduced exactly first, so that integers give 0.
double sin_pi(double x) noexcept {
  double r = std::fmod(x, 2.0);  // exact
  if (r < 0.0) r += 2.0;
  if (r == 0.0 || r == 1.0) return 0.0;
  if (r > 1.0) return -std::sin(std::numbers::pi * (r - 1.0));
  return std::sin(std::numbers::pi * r);
}

}  // namespace detail

namespace {

using detail::is_nonpositive_integer;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;

// Lanczos approximation, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

double lanczos_sum(double z) {
  const double zm1 = z - 1.0;
  double sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) sum += kLanczos[i] / (zm1 + static_cast<double>(i));
  return sum;
}

// ln Gamma(z) for z >= 0.5.
double log_gamma_positive(double z) {
  const double t = z - 0.5 + kLanczosG;
  return kHalfLog2Pi + (z - 0.5) * std::log(t) - t + std::log(lanczos_sum(z));
}

// Gamma(z) for z >= 0.5, split power to delay overflow up to z ~ 171.6.
double gamma_positive(double z) {
  const double t = z - 0.5 + kLanczosG;
  const double half_pow = std::pow(t, 0.5 * (z - 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half_pow * (half_pow * std::exp(-t)) * lanczos_sum(z);
}

// Remainder of the Stirling series, ln Gamma(z) - [(z-1/2)ln z - z + ln sqrt(2pi)].
double stirling_tail(double z) {
  const double zi = 1.0 / z;
  const double z2 = zi * zi;
  return zi * (1.0 / 12 +
               z2 * (-1.0 / 360 +
                     z2 * (1.0 / 1260 +
                           z2 * (-1.0 / 1680 + z2 * (1.0 / 1188 + z2 * (-691.0 / 360360 + z2 / 156.0))))));
}

int gamma_sign(double z) {
  if (z > 0.0) return 1;
  // Gamma alternates sign between consecutive negative integers.
  return (static_cast<long long>(std::ceil(-z)) % 2 == 0) ? 1 : -1;
}

}  // namespace

RealValue gamma(double z) {
  if (std::isnan(z) || is_nonpositive_integer(z)) return {kNaN, Status::domain_error};
  if (detail::is_integer(z) && z <= 171.0) {
    double f = 1.0;
    for (int k = 2; k < static_cast<int>(z); ++k) f *= k;
    return {f, Status::exact};
  }
  if (z >= 0.5) {
    if (z > 171.61447887182298) return {kInf, Status::diverged};
    return {gamma_positive(z), Status::converged};
  }
  // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
  const double s = detail::sin_pi(z);
  const double g = gamma_positive(1.0 - z);
  if (!std::isfinite(g)) return {0.0, Status::converged};
  const double value = std::numbers::pi / (s * g);
  if (!std::isfinite(value)) return {value, Status::diverged};
  return {value, Status::converged};
}

RealValue log_gamma(double z) {
  if (std::isnan(z) || is_nonpositive_integer(z)) return {kNaN, Status::domain_error};
  if (z == 1.0 || z == 2.0) return {0.0, Status::exact};
  if (z >= 0.5) return {log_gamma_positive(z), Status::converged};
  const double s = std::abs(detail::sin_pi(z));
  return {std::log(std::numbers::pi / s) - log_gamma_positive(1.0 - z), Status::converged};
}

double log_gamma_ratio(double a, double b) {
  if (a == b) return 0.0;
  if (a >= 10.0 && b >= 10.0) {
    const double d = a - b;
    return d * std::log(a) + (b - 0.5) * std::log1p(d / b) - d + stirling_tail(a) - stirling_tail(b);
  }
  return log_gamma(a).value - log_gamma(b).value;
}

RealValue log_beta(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) return {kNaN, Status::domain_error};
  const double lo = std::min(x, y);
  const double hi = std::max(x, y);
  return {log_gamma(lo).value + log_gamma_ratio(hi, hi + lo), Status::converged};
}

RealValue beta(double x, double y) {
  if (std::isnan(x) || std::isnan(y) || is_nonpositive_integer(x) || is_nonpositive_integer(y) ||
      is_nonpositive_integer(x + y)) {
    return {kNaN, Status::domain_error};
  }
  const double lo = std::min(x, y);
  const double hi = std::max(x, y);
  if (lo > 0.0) {
    if (lo == 1.0) return {1.0 / hi, Status::exact};
    return {std::exp(log_beta(lo, hi).value), Status::converged};
  }
  const double log_abs = log_gamma(lo).value + log_gamma(hi).value - log_gamma(lo + hi).value;
  const int sign = gamma_sign(lo) * gamma_sign(hi) * gamma_sign(lo + hi);
  return {sign * std::exp(log_abs), Status::converged};
}

}  // namespace qgauss::specfun
