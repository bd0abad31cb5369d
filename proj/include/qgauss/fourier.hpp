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

// Fourier transforms under F(y) = integral of g(x) exp(-2 pi j x y) dx.

#include <complex>
#include <span>
#include <vector>

#include "qgauss/qcore.hpp"
#include "qgauss/quadrature.hpp"

namespace qgauss {

struct SpectrumSample {
  double freq = 0.0;
  std::complex<double> value{};
  double modulus = 0.0;
};

struct SpectrumSample2D {
  double omega1 = 0.0;
  double omega2 = 0.0;
  std::complex<double> value{};
  double modulus = 0.0;
};

/// Spatial nodes mT, -M <= m <= M, in both axes.
struct GridSpec {
  double step = 0.25;
  int half_width_index = 10;

  double half_width() const noexcept { return step * half_width_index; }
};

/// Closed-form transform. Throws Error(regime) for q >= 3 and Error(validity)
/// naming the violated condition when the parameters hit a pole.
SpectrumSample ft1d_analytic(const KernelSpec1D& spec, double y);

/// Direct adaptive quadrature of the transform integral; Error(convergence)
/// if the tolerance is not met.
SpectrumSample ft1d_quadrature(const KernelSpec1D& spec, double y, const quad::QuadOptions& opts = {});

/// exp(-2 pi^2 sigma^2 y^2), the transform of the normalized Gaussian.
SpectrumSample ft_gaussian_ref(double sigma, double y);

/// T^2 sum_{m,n} G(mT, nT) exp(-2 pi j (w1 mT + w2 nT)). Frequencies are
/// reduced modulo 1/T before the phases are formed.
SpectrumSample2D ft2d_discrete(const KernelSpec2D& spec, const GridSpec& grid, double omega1, double omega2);

/// Same sum on a tensor grid of frequencies, row-major with omega1 varying
/// slowest. Kernel samples are computed once for the whole grid.
std::vector<SpectrumSample2D> ft2d_discrete_grid(const KernelSpec2D& spec, const GridSpec& grid,
                                                 std::span<const double> omega1,
                                                 std::span<const double> omega2);

/// Smallest M >= 1 with G(MT, 0) < delta. Error(grid) if none below max_index.
int select_half_width(const KernelSpec2D& spec, double step, double delta, int max_index = 1 << 20);

/// M = ceil(half_width / step).
GridSpec grid_from_half_width(double step, double half_width);

}  // namespace qgauss
