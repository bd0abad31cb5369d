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

#include "qgauss/analysis.hpp"

#include <cmath>
#include <numbers>

#include "qgauss/error.hpp"
#include "qgauss/fourier.hpp"
#include "qgauss/quadrature.hpp"
#include "qgauss/specfun.hpp"

namespace qgauss {
namespace {

constexpr double kPi = std::numbers::pi;

double transform(const KernelSpec1D& spec, double y) { return ft1d_analytic(spec, y).value.real(); }

// Order of the Bessel function in the compact-support transform.
double compact_order(double q) { return 1.0 / (1.0 - q) + 0.5; }

}  // namespace

const char* to_string(WindowRegime r) noexcept {
  switch (r) {
    case WindowRegime::compact: return "q<1";
    case WindowRegime::gaussian: return "q=1";
    case WindowRegime::heavy_tail: return "1<q<7/3";
    case WindowRegime::out_of_range: return "out-of-range";
  }
  return "?";
}

bool near_integer(double v) noexcept {
  return std::isfinite(v) && std::abs(v - std::round(v)) <= 1e-9 * std::max(1.0, std::abs(v));
}

ValidityResult validity_check(const QParams& p) {
  ValidityResult r;
  auto fail = [&](std::string what) {
    r.valid = false;
    r.violations.push_back(std::move(what));
  };
  const double q = p.q;
  if (!std::isfinite(q)) {
    fail("q is not finite");
    return r;
  }
  if (is_gaussian_index(q)) return r;
  if (q >= 3.0) {
    fail("regime: q >= 3");
    return r;
  }
  if (q > 1.0) {
    const double s = 1.0 / (q - 1.0);
    if (near_integer(s + 0.5)) fail("case-a: 1/(q-1)+1/2 is an integer");
    if (near_integer(s) && s <= 0.5) fail("case-a: 1/(q-1) is a non-positive integer");
    return r;
  }
  const double t = 1.0 / (1.0 - q);
  const char* names[] = {"case-b: 1/(1-q)+1 is a non-positive integer", "case-b: 1/(1-q)+1/2 is a non-positive integer",
                         "case-b: 1/(1-q)+3/2 is a non-positive integer"};
  const double shifts[] = {1.0, 0.5, 1.5};
  for (int i = 0; i < 3; ++i) {
    const double v = t + shifts[i];
    if (v <= 0.5 && near_integer(v)) fail(names[i]);
  }
  return r;
}

WindowReport window_report(const KernelSpec1D& spec) {
  const double q = spec.params().q;
  const double log_c = std::log(spec.c());
  WindowReport w;
  double log_n0 = 0.0;  // ln ||G||
  double log_n1 = 0.0;  // ln ||x G||
  switch (spec.regime()) {
    case Regime::gaussian: {
      const double a2 = 2.0 * spec.a();
      log_n0 = log_c + 0.5 * std::log(std::sqrt(kPi / a2));
      log_n1 = log_c + 0.5 * std::log(std::sqrt(kPi) / (2.0 * a2 * std::sqrt(a2)));
      w.regime = WindowRegime::gaussian;
      break;
    }
    case Regime::heavy_tail: {
      const double s = 2.0 / (q - 1.0);
      if (!(s - 1.5 > 0.0)) {
        throw Error(ErrorCode::regime, "window radius requires q < 7/3 (q=" + std::to_string(q) + ")");
      }
      const double lk = std::log((q - 1.0) * spec.a());
      log_n0 = log_c - 0.25 * lk + 0.5 * specfun::log_beta(0.5, s - 0.5).value;
      log_n1 = log_c - 0.75 * lk + 0.5 * specfun::log_beta(1.5, s - 1.5).value;
      w.regime = WindowRegime::heavy_tail;
      break;
    }
    case Regime::compact: {
      const double s = 2.0 / (1.0 - q) + 1.0;
      const double lk = std::log((1.0 - q) * spec.a());
      log_n0 = log_c - 0.25 * lk + 0.5 * specfun::log_beta(0.5, s).value;
      log_n1 = log_c - 0.75 * lk + 0.5 * specfun::log_beta(1.5, s).value;
      w.regime = WindowRegime::compact;
      break;
    }
    case Regime::invalid:
      throw Error(ErrorCode::regime, "window radius requires q < 7/3");
  }
  w.center = 0.0;
  w.l2_norm = std::exp(log_n0);
  w.x_weighted_norm = std::exp(log_n1);
  w.delta = std::exp(log_n1 - log_n0);
  w.ft_bound = std::exp(2.0 * log_n0 - log_n1) / (4.0 * kPi);
  return w;
}

double frequency_norm(const KernelSpec1D& spec) {
  quad::QuadOptions opts;
  opts.abs_tol = 0.0;
  opts.rel_tol = 1e-10;

  if (spec.regime() == Regime::compact) {
    const double q = spec.params().q;
    const double nu = compact_order(q);
    // lambda_nu(z)^2 z^2 ~ z^(1-2nu): not integrable for nu <= 1.
    if (nu <= 1.0) return kInfinity;
    const double kappa = 2.0 * kPi / std::sqrt((1.0 - q) * spec.a());
    const double z_cap = std::max(2000.0, 40.0 * nu);
    const quad::QuadResult body = quad::integrate(
        [&](double z) {
          const double l = specfun::bessel_lambda(nu, z).value;
          return z * z * l * l;
        },
        0.0, z_cap, opts);
    if (!body.converged) throw Error(ErrorCode::convergence, "frequency norm quadrature did not converge");
    // Past the cap lambda ~ A z^(-nu-1/2) cos(...); cos^2 averages to 1/2.
    const double log_a = specfun::log_gamma(nu + 1.0).value + nu * std::log(2.0) + 0.5 * std::log(2.0 / kPi);
    const double tail = std::exp(2.0 * log_a + (2.0 - 2.0 * nu) * std::log(z_cap)) / (2.0 * (2.0 * nu - 2.0));
    return std::sqrt(2.0 * (body.value + tail) / (kappa * kappa * kappa));
  }

  const double scale = std::sqrt(spec.a()) / kPi;
  const quad::QuadResult r = quad::integrate_semi_infinite(
      [&](double y) {
        const double f = transform(spec, y);
        return f == 0.0 ? 0.0 : y * y * f * f;
      },
      0.0, scale, opts);
  if (!r.converged) throw Error(ErrorCode::convergence, "frequency norm quadrature did not converge");
  return std::sqrt(2.0 * r.value);
}

HeisenbergResult heisenberg_check(const KernelSpec1D& spec) {
  const WindowReport w = window_report(spec);
  HeisenbergResult h;
  h.rhs = w.l2_norm * w.l2_norm;
  const double fn = frequency_norm(spec);
  if (!std::isfinite(fn)) {
    h.finite = false;
    h.lhs = kInfinity;
    h.ratio = kInfinity;
    h.satisfied = true;
    return h;
  }
  h.lhs = 4.0 * kPi * w.x_weighted_norm * fn;
  h.ratio = h.lhs / h.rhs;
  h.satisfied = h.lhs >= h.rhs * (1.0 - 1e-9);
  return h;
}

double cutoff_frequency(const KernelSpec1D& spec, double threshold) {
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw Error(ErrorCode::invalid_argument, "threshold must lie in (0, 1)");
  }
  auto mod = [&](double y) { return std::abs(transform(spec, y)); };
  auto bisect = [&](double lo, double hi) {
    for (int i = 0; i < 200 && hi - lo > 1e-13 * hi; ++i) {
      const double mid = 0.5 * (lo + hi);
      (mod(mid) >= threshold ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };

  if (spec.regime() != Regime::compact) {
    // Monotone in |y| here: bracket by doubling.
    double lo = 0.0;
    double hi = 0.1 * std::sqrt(spec.a()) / kPi;
    while (mod(hi) >= threshold) {
      lo = hi;
      hi *= 2.0;
      if (lo > kCutoffHorizon) throw Error(ErrorCode::not_found, "no cut-off below the scan horizon");
    }
    return bisect(lo, hi);
  }

  const double q = spec.params().q;
  const double nu = compact_order(q);
  const double kappa = 2.0 * kPi / std::sqrt((1.0 - q) * spec.a());
  const double dy = kPi / kappa / 16.0;
  const double log_env0 = specfun::log_gamma(nu + 1.0).value + nu * std::log(2.0) + std::log(specfun::detail::kLandau);
  auto envelope = [&](double y) { return std::exp(log_env0 - (nu + 1.0 / 3.0) * std::log(kappa * y)); };

  double last_above = 0.0;
  for (long i = 1;; ++i) {
    const double y = i * dy;
    if (y > kCutoffHorizon) throw Error(ErrorCode::not_found, "no cut-off below the scan horizon");
    if (mod(y) >= threshold) last_above = y;
    if (envelope(y) < threshold) break;
  }
  return bisect(last_above, last_above + dy);
}

}  // namespace qgauss
