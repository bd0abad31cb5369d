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

#include <string>
#include <vector>

#include "qgauss/qcore.hpp"

namespace qgauss {

enum class WindowRegime { compact, gaussian, heavy_tail, out_of_range };

const char* to_string(WindowRegime r) noexcept;

struct WindowReport {
  double center = 0.0;
  double l2_norm = 0.0;
  double x_weighted_norm = 0.0;
  double delta = 0.0;
  double ft_bound = 0.0;
  WindowRegime regime = WindowRegime::out_of_range;
};

/// Norms from the Beta-function closed forms. Error(regime) for q >= 7/3.
WindowReport window_report(const KernelSpec1D& spec);

struct HeisenbergResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  bool satisfied = false;
  /// False when the frequency norm diverges (q <= -1); lhs is then infinite.
  bool finite = true;
};

/// ||y F||_2 by quadrature of the closed-form transform. Infinite for q <= -1.
double frequency_norm(const KernelSpec1D& spec);

HeisenbergResult heisenberg_check(const KernelSpec1D& spec);

/// Smallest y past which |F| stays below threshold. For q < 1 the scan
/// follows the Bessel lobes until Landau's envelope bound drops below the
/// threshold. Error(not_found) past a horizon of 1e3.
double cutoff_frequency(const KernelSpec1D& spec, double threshold = 0.1);

inline constexpr double kCutoffHorizon = 1e3;

struct ValidityResult {
  bool valid = true;
  std::vector<std::string> violations;
};

/// Pole conditions of the closed-form transforms: 1/(q-1)+1/2 and 1/(q-1)
/// for 1 < q < 3; 1/(1-q)+1, +1/2, +3/2 for q < 1.
ValidityResult validity_check(const QParams& params);

/// True when v is within 1e-9 (relative) of an integer.
bool near_integer(double v) noexcept;

}  // namespace qgauss
