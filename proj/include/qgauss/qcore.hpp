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

#pragma once

#include <array>
#include <limits>

namespace qgauss {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// |q - 1| below this is treated as the classical Gaussian.
inline constexpr double kGaussianBand = 1e-9;

inline bool is_gaussian_index(double q) noexcept { return q > 1.0 - kGaussianBand && q < 1.0 + kGaussianBand; }

enum class Regime {
  compact,     // q < 1
  gaussian,    // q == 1 within kGaussianBand
  heavy_tail,  // 1 < q < 3 (1D) or 1 < q < 2 (2D)
  invalid,     // normalization integral diverges
};

const char* to_string(Regime r) noexcept;

struct QParams {
  double q = 2.0;
  double sigma = 1.0;
  double beta = 0.5;
};

/// Symmetric 2x2 covariance [[xx, xy], [xy, yy]].
struct Covariance2D {
  double xx = 1.0;
  double xy = 0.0;
  double yy = 1.0;

  double determinant() const noexcept { return xx * yy - xy * xy; }
  static Covariance2D isotropic(double variance) noexcept { return {variance, 0.0, variance}; }
  static Covariance2D diagonal(double sigma1, double sigma2) noexcept {
    return {sigma1 * sigma1, 0.0, sigma2 * sigma2};
  }
};

struct QParams2D {
  double q = 1.5;
  Covariance2D sigma{};
  double beta = 0.5;
};

Regime classify_1d(double q) noexcept;
Regime classify_2d(double q) noexcept;

/// Tsallis q-exponential; exp(x) inside the Gaussian band.
double q_exp(double x, double q) noexcept;

/// 1D normalization constant. Throws Error(regime) for q >= 3 and
/// Error(invalid_argument) for non-positive sigma or beta.
double c1q(const QParams& p);

/// 2D normalization constant beta (2 - q) / (pi sqrt|Sigma|); regime error for q >= 2.
double c2q(const QParams2D& p);

/// Radius of the support in whitened coordinates, 1/sqrt(beta (1 - q)) for
/// q < 1, infinite otherwise.
double support_radius(double q, double beta) noexcept;

class KernelSpec1D {
 public:
  static KernelSpec1D make(const QParams& p);

  const QParams& params() const noexcept { return params_; }
  Regime regime() const noexcept { return regime_; }
  double c() const noexcept { return c_; }
  /// beta / sigma^2
  double a() const noexcept { return a_; }
  /// Support half-width in x: ((1-q) a)^(-1/2) for q < 1, infinite otherwise.
  double support_radius() const noexcept { return support_; }

  double operator()(double x) const noexcept { return eval(x); }
  double eval(double x) const noexcept;

 private:
  QParams params_{};
  Regime regime_ = Regime::invalid;
  double c_ = 0.0;
  double a_ = 0.0;
  double support_ = kInfinity;
};

class KernelSpec2D {
 public:
  static KernelSpec2D make(const QParams2D& p);

  const QParams2D& params() const noexcept { return params_; }
  Regime regime() const noexcept { return regime_; }
  double c() const noexcept { return c_; }
  /// Whitened support radius, see support_radius().
  double support_radius() const noexcept { return support_; }

  /// z = D^(-1/2) U^T x, so that x^T Sigma^-1 x = |z|^2.
  std::array<double, 2> whiten(double x, double y) const noexcept;
  double quadratic_form(double x, double y) const noexcept;

  double eval(double x, double y) const noexcept;
  /// Kernel value at a whitened point.
  double eval_whitened(double z1, double z2) const noexcept;

  /// Eigenvalues (ascending) and the matching unit eigenvectors as columns.
  const std::array<double, 2>& eigenvalues() const noexcept { return eigenvalues_; }
  const std::array<double, 4>& eigenvectors() const noexcept { return eigenvectors_; }

 private:
  QParams2D params_{};
  Regime regime_ = Regime::invalid;
  double c_ = 0.0;
  double support_ = kInfinity;
  std::array<double, 2> eigenvalues_{};
  std::array<double, 4> eigenvectors_{};  // row-major U
  std::array<double, 2> inv_sqrt_{};
};

/// Classical normalized Gaussians.
double gaussian_ref_1d(double sigma, double x) noexcept;
double gaussian_ref_2d(const Covariance2D& sigma, double x, double y) noexcept;

}  // namespace qgauss
