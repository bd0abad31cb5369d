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

#include <cmath>
#include <limits>
#include <numbers>

#include "qgauss/specfun.hpp"

namespace qgauss::specfun {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;
constexpr double kEps = 1e-16;
constexpr double kTiny = 1e-300;
constexpr int kMaxIterations = 1000000;

using detail::LogMagnitude;

LogMagnitude from_value(double v, Status st) {
  LogMagnitude r;
  r.log_abs = v == 0.0 ? -kInf : std::log(std::abs(v));
  r.sign = v < 0.0 ? -1 : 1;
  r.status = st;
  return r;
}

// sum_k (-x^2/4)^k / (k! (nu+1)_k); alternating, fine while the terms are
// not much larger than the result.
SpecialValue<double> reduced_series(double nu, double x) {
  const double w = -0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k <= kSeriesMaxTerms; ++k) {
    term *= w / (k * (nu + k));
    sum += term;
    if (std::abs(term) <= kSeriesTolerance * std::abs(sum)) return {sum, Status::converged};
  }
  return {sum, Status::diverged};
}

struct SteedResult {
  LogMagnitude j;  // J_nu(x)
  double y = kNaN;  // Y_nu(x), unscaled; may overflow for large nu
  bool ok = false;
};

// Steed's method (CF1 + CF2) for x >= 2, nu >= 0. The downward recurrence is
// rescaled whenever it grows, so J is returned in log form for any order.
SteedResult steed(double nu, double x) {
  SteedResult out;
  const int nl = std::max(0, static_cast<int>(nu - x + 1.5));
  const double xmu = nu - nl;
  const double xmu2 = xmu * xmu;
  const double xi = 1.0 / x;
  const double xi2 = 2.0 * xi;
  const double w = xi2 / kPi;

  int isign = 1;
  double h = std::max(nu * xi, kTiny);
  double b = xi2 * nu;
  double d = 0.0;
  double c = h;
  int i = 0;
  for (; i < kMaxIterations; ++i) {
    b += xi2;
    d = b - d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b - 1.0 / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = c * d;
    h *= del;
    if (d < 0.0) isign = -isign;
    if (std::abs(del - 1.0) < kEps) break;
  }
  if (i == kMaxIterations) return out;

  double rjl = isign;
  double rjpl = h * rjl;
  const double rjl1 = rjl;
  double log_scale = 0.0;
  double fact = nu * xi;
  for (int l = nl - 1; l >= 0; --l) {
    const double rjtemp = fact * rjl + rjpl;
    fact -= xi;
    rjpl = fact * rjtemp - rjl;
    rjl = rjtemp;
    if (std::abs(rjl) > 1e250) {
      log_scale += std::log(std::abs(rjl));
      rjpl /= std::abs(rjl);
      rjl = rjl > 0 ? 1.0 : -1.0;
    }
  }
  if (rjl == 0.0) rjl = kEps;
  const double f = rjpl / rjl;

  double a = 0.25 - xmu2;
  double p = -0.5 * xi;
  double q = 1.0;
  const double br = 2.0 * x;
  double bi = 2.0;
  fact = a * xi / (p * p + q * q);
  double cr = br + q * fact;
  double ci = bi + p * fact;
  double den = br * br + bi * bi;
  double dr = br / den;
  double di = -bi / den;
  double dlr = cr * dr - ci * di;
  double dli = cr * di + ci * dr;
  double temp = p * dlr - q * dli;
  q = p * dli + q * dlr;
  p = temp;
  for (i = 1; i < kMaxIterations; ++i) {
    a += 2 * i;
    bi += 2.0;
    dr = a * dr + br;
    di = a * di + bi;
    if (std::abs(dr) + std::abs(di) < kTiny) dr = kTiny;
    fact = a / (cr * cr + ci * ci);
    cr = br + cr * fact;
    ci = bi - ci * fact;
    if (std::abs(cr) + std::abs(ci) < kTiny) cr = kTiny;
    den = dr * dr + di * di;
    dr /= den;
    di /= -den;
    dlr = cr * dr - ci * di;
    dli = cr * di + ci * dr;
    temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    if (std::abs(dlr - 1.0) + std::abs(dli) < kEps) break;
  }
  if (i == kMaxIterations) return out;

  const double gam = (p - f) / q;
  double rjmu = std::sqrt(w / ((p - f) * gam + q));
  rjmu = std::copysign(rjmu, rjl);
  double rymu = rjmu * gam;
  const double rymup = rymu * (p + q / gam);
  double ry1 = xmu * xi * rymu - rymup;
  for (int k = 1; k <= nl; ++k) {
    const double rytemp = (xmu + k) * xi2 * ry1 - rymu;
    rymu = ry1;
    ry1 = rytemp;
  }

  // J_nu = rjl1 * rjmu / (rjl * exp(log_scale))
  out.j.log_abs = std::log(std::abs(rjmu)) - std::log(std::abs(rjl)) - log_scale;
  const int s = (rjl1 > 0) == (rjmu / rjl > 0) ? 1 : -1;
  out.j.sign = s;
  out.j.status = Status::converged;
  out.y = rymu;
  out.ok = true;
  return out;
}

// Hankel's large-argument expansion; also returns Y through the same P, Q.
struct HankelResult {
  double j = 0.0;
  double y = 0.0;
  Status status = Status::converged;
};

HankelResult hankel(double nu, double x) {
  const double mu = 4.0 * nu * nu;
  double p = 1.0;
  double q = 0.0;
  double term = 1.0;
  double last = kInf;
  Status st = Status::diverged;
  for (int k = 1; k <= kSeriesMaxTerms; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (k * 8.0 * x);
    // asymptotic: stop at the smallest term once past the turning point
    // k ~ nu + 1/2, where the factors first drop below one
    if (odd * odd > mu && std::abs(term) > last) {
      st = std::abs(last) < 1e-15 * std::abs(p) ? Status::converged : Status::diverged;
      break;
    }
    last = std::abs(term);
    // terms alternate between Q and P, each with alternating sign
    const int m = (k - 1) / 2;
    const double sgn = (k % 2 == 1) ? ((m % 2 == 0) ? 1.0 : -1.0) : ((k / 2) % 2 == 1 ? -1.0 : 1.0);
    if (k % 2 == 1) {
      q += sgn * term;
    } else {
      p += sgn * term;
    }
    if (std::abs(term) < kEps * std::abs(p)) {
      st = Status::converged;
      break;
    }
  }
  const double chi = x - (0.5 * nu + 0.25) * kPi;
  const double amp = std::sqrt(2.0 / (kPi * x));
  const double cs = std::cos(chi);
  const double sn = std::sin(chi);
  return {amp * (p * cs - q * sn), amp * (p * sn + q * cs), st};
}

// Hankel at mu = nu - floor(nu), then J and Y recurred up to nu. Both are
// oscillatory for order below x, so the forward recurrence is neutral.
HankelResult hankel_recurrence(double nu, double x) {
  const double n = std::floor(nu);
  const double mu = nu - n;
  HankelResult a = hankel(mu, x);
  if (n == 0.0) return a;
  HankelResult b = hankel(mu + 1.0, x);
  if (a.status != Status::converged || b.status != Status::converged) return {kNaN, kNaN, Status::diverged};
  for (double k = mu + 1.0; k < nu; k += 1.0) {
    const double f = 2.0 * k / x;
    const HankelResult c{f * b.j - a.j, f * b.y - a.y, Status::converged};
    a = b;
    b = c;
  }
  return b;
}

bool use_series(double nu, double x) { return x <= 4.0 || 0.25 * x * x <= nu + 1.0; }
bool use_hankel(double nu, double x) { return x > 25.0 && x > 0.5 * nu * nu; }
bool use_recurrence(double nu, double x) { return x > 25.0 && nu < x; }

}  // namespace

namespace detail {

LogMagnitude bessel_j_series(double nu, double x) {
  const auto s = reduced_series(nu, x);
  LogMagnitude r = from_value(s.value, s.status);
  r.log_abs += nu * std::log(0.5 * x) - std::lgamma(nu + 1.0);
  return r;
}

LogMagnitude bessel_j_steed(double nu, double x) {
  if (x < 2.0) return {kNaN, 1, Status::domain_error};
  const SteedResult s = steed(nu, x);
  if (!s.ok) return {kNaN, 1, Status::diverged};
  return s.j;
}

LogMagnitude bessel_j_hankel(double nu, double x) {
  const HankelResult h = hankel(nu, x);
  return from_value(h.j, h.status);
}

LogMagnitude bessel_j_recurrence(double nu, double x) {
  const HankelResult h = hankel_recurrence(nu, x);
  return from_value(h.j, h.status);
}

LogMagnitude bessel_j_log(double nu, double x) {
  if (use_series(nu, x)) return bessel_j_series(nu, x);
  if (use_hankel(nu, x)) return bessel_j_hankel(nu, x);
  if (use_recurrence(nu, x)) return bessel_j_recurrence(nu, x);
  return bessel_j_steed(nu, x);
}

}  // namespace detail

RealValue bessel_j(double nu, double x) {
  if (std::isnan(nu) || std::isnan(x)) return {kNaN, Status::domain_error};
  // A term with Gamma(nu+k+1) at a pole appears for every negative integer.
  if (nu < 0.0 && detail::is_integer(nu)) return {kNaN, Status::domain_error};
  if (x == 0.0) {
    if (nu == 0.0) return {1.0, Status::exact};
    if (nu > 0.0) return {0.0, Status::exact};
    return {kNaN, Status::domain_error};
  }
  if (x < 0.0) {
    if (!detail::is_integer(nu)) return {kNaN, Status::domain_error};
    const RealValue r = bessel_j(nu, -x);
    const bool odd = std::fmod(nu, 2.0) != 0.0;
    return {odd ? -r.value : r.value, r.status};
  }
  if (std::isinf(x)) return {0.0, Status::converged};

  if (nu >= 0.0) {
    const LogMagnitude r = detail::bessel_j_log(nu, x);
    if (r.status != Status::converged && r.status != Status::exact) return {kNaN, r.status};
    return {r.sign * std::exp(r.log_abs), Status::converged};
  }

  // Negative non-integer order.
  if (use_hankel(nu, x)) {
    const HankelResult h = hankel(nu, x);
    return {h.j, h.status};
  }
  if (use_recurrence(-nu, x)) {
    const HankelResult h = hankel_recurrence(-nu, x);
    const double v = -nu;
    return {std::cos(kPi * v) * h.j - detail::sin_pi(v) * h.y, h.status};
  }
  if (x >= 2.0 && -nu <= 100.0) {
    const SteedResult s = steed(-nu, x);
    if (!s.ok) return {kNaN, Status::diverged};
    const double jp = s.j.sign * std::exp(s.j.log_abs);
    // J_{-v} = cos(pi v) J_v - sin(pi v) Y_v
    const double v = -nu;
    return {std::cos(kPi * v) * jp - detail::sin_pi(v) * s.y, Status::converged};
  }
  const auto s = reduced_series(nu, x);
  const RealValue lg = log_gamma(nu + 1.0);
  const RealValue g = gamma(nu + 1.0);
  if (!lg.ok() || !g.ok()) return {kNaN, Status::domain_error};
  const double sign = g.value < 0.0 ? -1.0 : 1.0;
  return {sign * s.value * std::exp(nu * std::log(0.5 * x) - lg.value), s.status};
}

RealValue bessel_lambda(double nu, double x) {
  if (std::isnan(nu) || std::isnan(x) || !(nu > -1.0)) return {kNaN, Status::domain_error};
  const double ax = std::abs(x);
  if (ax == 0.0) return {1.0, Status::exact};
  if (use_series(nu, ax)) return reduced_series(nu, ax);
  const LogMagnitude r = detail::bessel_j_log(nu, ax);
  if (r.status != Status::converged) return {kNaN, r.status};
  const double log_pref = std::lgamma(nu + 1.0) + nu * std::log(2.0 / ax);
  return {r.sign * std::exp(log_pref + r.log_abs), Status::converged};
}

ComplexValue bessel_j_imag(double nu, double t) {
  if (std::isnan(nu) || std::isnan(t)) return {{kNaN, kNaN}, Status::domain_error};
  if (detail::is_nonpositive_integer(nu + 1.0)) return {{kNaN, kNaN}, Status::domain_error};
  if (t == 0.0) {
    if (nu == 0.0) return {{1.0, 0.0}, Status::exact};
    if (nu > 0.0) return {{0.0, 0.0}, Status::exact};
    return {{kNaN, kNaN}, Status::domain_error};
  }
  // (i t / 2)^nu sum_k (t^2/4)^k / (k! Gamma(nu+k+1)); every term has the
  // sign of Gamma(nu+k+1), which is fixed once nu+k+1 > 0.
  const double w = 0.25 * t * t;
  double term = 1.0;
  double sum = 1.0;
  Status st = Status::diverged;
  for (int k = 1; k <= kSeriesMaxTerms; ++k) {
    term *= w / (k * (nu + k));
    sum += term;
    if (std::abs(term) <= kSeriesTolerance * std::abs(sum)) {
      st = Status::converged;
      break;
    }
  }
  const RealValue g = gamma(nu + 1.0);
  const RealValue lg = log_gamma(nu + 1.0);
  const double sign = g.value < 0.0 ? -1.0 : 1.0;
  const double mag = sign * sum * std::exp(nu * std::log(0.5 * std::abs(t)) - lg.value);
  const double phase = (t > 0.0 ? 0.5 : -0.5) * kPi * nu;
  return {std::polar(1.0, phase) * mag, st};
}

}  // namespace qgauss::specfun
