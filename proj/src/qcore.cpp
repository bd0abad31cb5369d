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

#include "qgauss/qcore.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qgauss/error.hpp"
#include "qgauss/specfun.hpp"

namespace qgauss {
namespace {

constexpr double kPi = std::numbers::pi;

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw Error(ErrorCode::invalid_argument, std::string(name) + " must be positive and finite");
  }
}

void require_finite_q(double q) {
  if (!std::isfinite(q)) throw Error(ErrorCode::invalid_argument, "q must be finite");
}

void require_spd(const Covariance2D& s) {
  if (!std::isfinite(s.xx) || !std::isfinite(s.xy) || !std::isfinite(s.yy) || !(s.xx > 0.0) ||
      !(s.determinant() > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "covariance must be symmetric positive definite");
  }
}

}  // namespace

const char* to_string(Regime r) noexcept {
  switch (r) {
    case Regime::compact: return "compact";
    case Regime::gaussian: return "gaussian";
    case Regime::heavy_tail: return "heavy-tail";
    case Regime::invalid: return "invalid";
  }
  return "?";
}

Regime classify_1d(double q) noexcept {
  if (is_gaussian_index(q)) return Regime::gaussian;
  if (q < 1.0) return Regime::compact;
  if (q < 3.0) return Regime::heavy_tail;
  return Regime::invalid;
}

Regime classify_2d(double q) noexcept {
  if (is_gaussian_index(q)) return Regime::gaussian;
  if (q < 1.0) return Regime::compact;
  if (q < 2.0) return Regime::heavy_tail;
  return Regime::invalid;
}

double q_exp(double x, double q) noexcept {
  if (is_gaussian_index(q)) return std::exp(x);
  const double s = (1.0 - q) * x;
  if (!(s > -1.0)) return 0.0;
  return std::exp(std::log1p(s) / (1.0 - q));
}

double c1q(const QParams& p) {
  require_finite_q(p.q);
  require_positive(p.sigma, "sigma");
  require_positive(p.beta, "beta");
  const double a = p.beta / (p.sigma * p.sigma);
  switch (classify_1d(p.q)) {
    case Regime::gaussian:
      return std::sqrt(a / kPi);
    case Regime::heavy_tail: {
      const double s = 1.0 / (p.q - 1.0);
      return std::exp(specfun::log_gamma_ratio(s, s - 0.5)) * std::sqrt((p.q - 1.0) * a / kPi);
    }
    case Regime::compact: {
      const double m = 1.0 / (1.0 - p.q);
      return std::exp(specfun::log_gamma_ratio(m + 1.5, m + 1.0)) * std::sqrt((1.0 - p.q) * a / kPi);
    }
    case Regime::invalid:
      break;
  }
  throw Error(ErrorCode::regime, "1D normalization diverges for q >= 3 (q=" + std::to_string(p.q) + ")");
}

double c2q(const QParams2D& p) {
  require_finite_q(p.q);
  require_positive(p.beta, "beta");
  require_spd(p.sigma);
  if (classify_2d(p.q) == Regime::invalid) {
    throw Error(ErrorCode::regime, "2D normalization diverges for q >= 2 (q=" + std::to_string(p.q) + ")");
  }
  const double factor = is_gaussian_index(p.q) ? 1.0 : 2.0 - p.q;
  return p.beta * factor / (kPi * std::sqrt(p.sigma.determinant()));
}

double support_radius(double q, double beta) noexcept {
  if (q < 1.0 && !is_gaussian_index(q)) return 1.0 / std::sqrt(beta * (1.0 - q));
  return kInfinity;
}

KernelSpec1D KernelSpec1D::make(const QParams& p) {
  KernelSpec1D k;
  k.c_ = c1q(p);
  k.params_ = p;
  k.regime_ = classify_1d(p.q);
  k.a_ = p.beta / (p.sigma * p.sigma);
  k.support_ = qgauss::support_radius(p.q, p.beta) * p.sigma;
  return k;
}

double KernelSpec1D::eval(double x) const noexcept {
  const double x2 = x * x;
  switch (regime_) {
    case Regime::gaussian:
      return c_ * std::exp(-a_ * x2);
    case Regime::compact: {
      const double s = (1.0 - params_.q) * a_ * x2;
      if (!(s < 1.0)) return 0.0;
      return c_ * std::exp(std::log1p(-s) / (1.0 - params_.q));
    }
    case Regime::heavy_tail: {
      const double k = (params_.q - 1.0) * a_;
      const double t = k * x2;
      // ln(1 + k x^2) without forming x^2 once it would overflow
      const double lb = std::isfinite(t) ? std::log1p(t) : 2.0 * std::log(std::abs(x)) + std::log(k);
      return c_ * std::exp(-lb / (params_.q - 1.0));
    }
    case Regime::invalid:
      break;
  }
  return 0.0;
}

KernelSpec2D KernelSpec2D::make(const QParams2D& p) {
  KernelSpec2D k;
  k.c_ = c2q(p);
  k.params_ = p;
  k.regime_ = classify_2d(p.q);
  k.support_ = qgauss::support_radius(p.q, p.beta);

  const Covariance2D& s = p.sigma;
  const double mean = 0.5 * (s.xx + s.yy);
  const double half_gap = std::hypot(0.5 * (s.xx - s.yy), s.xy);
  if (s.xy == 0.0) {
    // Already diagonal; keep the axes as they are.
    k.eigenvalues_ = {s.xx, s.yy};
    k.eigenvectors_ = {1.0, 0.0, 0.0, 1.0};
  } else {
    const double l1 = mean - half_gap;
    const double l2 = mean + half_gap;
    k.eigenvalues_ = {l1, l2};
    // (xy, l - xx) is an eigenvector for eigenvalue l.
    double v1x = s.xy, v1y = l1 - s.xx;
    const double n1 = std::hypot(v1x, v1y);
    v1x /= n1;
    v1y /= n1;
    k.eigenvectors_ = {v1x, -v1y, v1y, v1x};
  }
  k.inv_sqrt_ = {1.0 / std::sqrt(k.eigenvalues_[0]), 1.0 / std::sqrt(k.eigenvalues_[1])};
  return k;
}

std::array<double, 2> KernelSpec2D::whiten(double x, double y) const noexcept {
  const auto& u = eigenvectors_;
  // U^T x, U stored row-major with eigenvectors as columns.
  const double r1 = u[0] * x + u[2] * y;
  const double r2 = u[1] * x + u[3] * y;
  return {r1 * inv_sqrt_[0], r2 * inv_sqrt_[1]};
}

double KernelSpec2D::quadratic_form(double x, double y) const noexcept {
  const auto z = whiten(x, y);
  return z[0] * z[0] + z[1] * z[1];
}

double KernelSpec2D::eval_whitened(double z1, double z2) const noexcept {
  const double r2 = z1 * z1 + z2 * z2;
  const double q = params_.q;
  const double b = params_.beta;
  switch (regime_) {
    case Regime::gaussian:
      return c_ * std::exp(-b * r2);
    case Regime::compact: {
      const double s = (1.0 - q) * b * r2;
      if (!(s < 1.0)) return 0.0;
      return c_ * std::exp(std::log1p(-s) / (1.0 - q));
    }
    case Regime::heavy_tail: {
      const double t = (q - 1.0) * b * r2;
      if (!std::isfinite(t)) return 0.0;
      return c_ * std::exp(-std::log1p(t) / (q - 1.0));
    }
    case Regime::invalid:
      break;
  }
  return 0.0;
}

double KernelSpec2D::eval(double x, double y) const noexcept {
  const auto z = whiten(x, y);
  return eval_whitened(z[0], z[1]);
}

double gaussian_ref_1d(double sigma, double x) noexcept {
  const double u = x / sigma;
  return std::exp(-0.5 * u * u) / (sigma * std::sqrt(2.0 * kPi));
}

double gaussian_ref_2d(const Covariance2D& s, double x, double y) noexcept {
  const double det = s.determinant();
  const double qf = (s.yy * x * x - 2.0 * s.xy * x * y + s.xx * y * y) / det;
  return std::exp(-0.5 * qf) / (2.0 * kPi * std::sqrt(det));
}

}  // namespace qgauss
