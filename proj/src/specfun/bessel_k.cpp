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
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kEps = 1e-16;
constexpr int kMaxIterations = 100000;
constexpr double kPi = std::numbers::pi;

double chebyshev(const double* c, int m, double x) {
  double d = 0.0;
  double dd = 0.0;
  const double y2 = 2.0 * x;
  for (int j = m - 1; j >= 1; --j) {
    const double sv = d;
    d = y2 * d - dd + c[j];
    dd = sv;
  }
  return x * d - dd + 0.5 * c[0];
}

// gam1 = (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu), gam2 = (1/Gamma(1-mu) + 1/Gamma(1+mu)) / 2
// for |mu| <= 1/2, via Chebyshev expansions (Temme).
struct TemmeGammas {
  double gam1, gam2, gampl, gammi;
};

TemmeGammas temme_gammas(double mu) {
  static constexpr std::array<double, 7> c1 = {-1.142022680371168e0, 6.5165112670737e-3, 3.087090173086e-4,
                                               -3.4706269649e-6,     6.9437664e-9,       3.67795e-11,
                                               -1.356e-13};
  static constexpr std::array<double, 8> c2 = {1.843740587300905e0, -7.68528408447867e-2, 1.2719271366546e-3,
                                               -4.9717367042e-6,    -3.31261198e-8,       2.423096e-10,
                                               -1.702e-13,          -1.49e-15};
  const double xx = 8.0 * mu * mu - 1.0;
  TemmeGammas g{};
  g.gam1 = chebyshev(c1.data(), static_cast<int>(c1.size()), xx);
  g.gam2 = chebyshev(c2.data(), static_cast<int>(c2.size()), xx);
  g.gampl = g.gam2 - mu * g.gam1;
  g.gammi = g.gam2 + mu * g.gam1;
  return g;
}

struct KPair {
  double log_k;  // ln K_mu(x)
  double xratio;  // x K_{mu+1}(x) / K_mu(x), finite even for tiny x
  bool ok;
};

// Temme's series, x < 2, |mu| <= 1/2.
KPair temme_series(double mu, double x) {
  const double x2 = 0.5 * x;
  const double pimu = kPi * mu;
  const double fact = std::abs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
  double d = -std::log(x2);
  double e = mu * d;
  const double fact2 = std::abs(e) < kEps ? 1.0 : std::sinh(e) / e;
  const TemmeGammas g = temme_gammas(mu);
  double ff = fact * (g.gam1 * std::cosh(e) + g.gam2 * fact2 * d);
  double sum = ff;
  e = std::exp(e);
  double p = 0.5 * e / g.gampl;
  double q = 0.5 / (e * g.gammi);
  double c = 1.0;
  d = x2 * x2;
  double sum1 = p;
  const double mu2 = mu * mu;
  int i = 1;
  for (; i <= kMaxIterations; ++i) {
    ff = (i * ff + p + q) / (i * i - mu2);
    c *= d / i;
    p /= i - mu;
    q /= i + mu;
    const double del = c * ff;
    sum += del;
    sum1 += c * (p - i * ff);
    if (std::abs(del) < std::abs(sum) * kEps) break;
  }
  return {std::log(sum), 2.0 * sum1 / sum, i <= kMaxIterations};
}

// Steed's continued fraction CF2, x >= 2, |mu| <= 1/2.
KPair steed_cf2(double mu, double x) {
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  const double a1 = 0.25 - mu * mu;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  int i = 2;
  for (; i <= kMaxIterations; ++i) {
    a -= 2 * (i - 1);
    c = -a * c / i;
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < kEps) break;
  }
  h = a1 * h;
  const double log_k = 0.5 * std::log(kPi / (2.0 * x)) - x - std::log(s);
  return {log_k, mu + x + 0.5 - h, i <= kMaxIterations};
}

}  // namespace

namespace detail {

RealValue log_bessel_k_recurrence(double mu, double x) {
  if (!(x > 0.0) || std::isnan(mu)) return {kNaN, Status::domain_error};
  const double nu = std::abs(mu);
  const int nl = static_cast<int>(nu + 0.5);
  const double xmu = nu - nl;
  const KPair start = x < 2.0 ? temme_series(xmu, x) : steed_cf2(xmu, x);
  if (!start.ok) return {kNaN, Status::diverged};

  // Forward recurrence on s_n = x K_{m+1}/K_m, accumulating the log.
  const double log_x = std::log(x);
  double log_k = start.log_k;
  double sn = start.xratio;
  for (int n = 0; n < nl; ++n) {
    if (n > 0) sn = 2.0 * (xmu + n) + x * (x / sn);
    log_k += std::log(sn) - log_x;
  }
  return {log_k, Status::converged};
}

RealValue log_bessel_k_debye(double mu, double x) {
  if (!(x > 0.0) || std::isnan(mu)) return {kNaN, Status::domain_error};
  const double nu = std::abs(mu);
  if (nu == 0.0) return {kNaN, Status::domain_error};
  const double z = x / nu;
  const double s = std::hypot(1.0, z);
  const double t = 1.0 / s;
  const double eta = s + std::log(z / (1.0 + s));
  const double t2 = t * t;
  const double u1 = t * (3.0 - 5.0 * t2) / 24.0;
  const double u2 = t2 * (81.0 + t2 * (-462.0 + t2 * 385.0)) / 1152.0;
  const double u3 = t * t2 * (30375.0 + t2 * (-369603.0 + t2 * (765765.0 - t2 * 425425.0))) / 414720.0;
  const double u4 =
      t2 * t2 *
      (4465125.0 + t2 * (-94121676.0 + t2 * (349922430.0 + t2 * (-446185740.0 + t2 * 185910725.0)))) /
      39813120.0;
  const double inv = 1.0 / nu;
  const double series = 1.0 + inv * (-u1 + inv * (u2 + inv * (-u3 + inv * u4)));
  const double log_k = 0.5 * std::log(kPi / (2.0 * nu)) - nu * eta - 0.5 * std::log(s) + std::log(series);
  return {log_k, Status::converged};
}

}  // namespace detail

RealValue log_bessel_k(double mu, double x) {
  if (!(x > 0.0) || std::isnan(mu)) return {kNaN, Status::domain_error};
  if (detail::is_integer(mu)) return {kNaN, Status::domain_error};
  if (std::abs(mu) > detail::kDebyeOrder) return detail::log_bessel_k_debye(mu, x);
  return detail::log_bessel_k_recurrence(mu, x);
}

RealValue bessel_k(double mu, double x) {
  const RealValue lk = log_bessel_k(mu, x);
  if (!lk.ok()) return lk;
  return {std::exp(lk.value), Status::converged};
}

RealValue log_whittaker_w0(double mu, double z) {
  if (!(z > 0.0)) return {kNaN, Status::domain_error};
  const RealValue lk = log_bessel_k(mu, 0.5 * z);
  if (!lk.ok()) return lk;
  return {0.5 * std::log(z / kPi) + lk.value, Status::converged};
}

RealValue whittaker_w0(double mu, double z) {
  const RealValue lw = log_whittaker_w0(mu, z);
  if (!lw.ok()) return lw;
  return {std::exp(lw.value), Status::converged};
}

}  // namespace qgauss::specfun
