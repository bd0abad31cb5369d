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

#include <cstddef>
#include <functional>

namespace qgauss::quad {

using Integrand = std::function<double(double)>;

struct QuadOptions {
  double abs_tol = 1e-12;
  double rel_tol = 0.0;
  std::size_t max_intervals = 1000000;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  std::size_t intervals = 0;
  std::size_t evaluations = 0;
  bool converged = false;
};

/// Globally adaptive 10/21-point Gauss-Kronrod on [a, b]. The worst interval
/// is bisected until the summed error estimate meets the tolerance or the
/// interval budget runs out. A roundoff floor of 100 eps * integral of |f| is
/// accepted as convergence.
QuadResult integrate(const Integrand& f, double a, double b, const QuadOptions& opts = {});

/// Integral over [a, infinity). [a, a+scale] is done directly, the rest through
/// x = a + scale*e^u and u = t/(1-t), which copes with algebraic tails.
QuadResult integrate_semi_infinite(const Integrand& f, double a, double scale,
                                   const QuadOptions& opts = {});

/// Integral over the real line, split at zero.
QuadResult integrate_whole_line(const Integrand& f, double scale, const QuadOptions& opts = {});

/// Integral of f(x) cos(omega x) over [a, infinity) for a slowly decaying,
/// non-oscillating f. Half-period pieces are summed and the partial sums are
/// extrapolated with Wynn's epsilon algorithm.
QuadResult integrate_fourier(const Integrand& f, double a, double omega, const QuadOptions& opts = {},
                             std::size_t max_cycles = 2000);

/// Wynn's epsilon algorithm applied to the whole sequence. Returns the latest
/// estimate and an error taken from the two latest ones.
struct Extrapolation {
  double value = 0.0;
  double error = 0.0;
};
Extrapolation wynn_epsilon(const double* partial_sums, std::size_t n);

}  // namespace qgauss::quad
