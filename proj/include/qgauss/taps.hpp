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

#include <vector>

#include "qgauss/qcore.hpp"

namespace qgauss {

/// Taps at x = k T, -n <= k <= n. n reaches the support edge for q < 1 and
/// the point where the kernel drops to 1e-8 of its peak otherwise.
struct Taps1D {
  double step = 0.0;
  int half_count = 0;
  std::vector<double> values;  // 2n+1 entries, index k + n

  double offset(int i) const noexcept { return (i - half_count) * step; }
};

struct Taps2D {
  double step = 0.0;
  int half_count_x = 0;
  int half_count_y = 0;
  std::vector<double> values;  // row-major, x varies slowest
};

inline constexpr double kTapTailRatio = 1e-8;
inline constexpr long kMaxTapsPerSide = 1000000;

/// With normalize set, the taps are rescaled so that their left-to-right sum
/// is exactly 1. Error(grid) for step <= 0 or an excessive tap count.
Taps1D sample_taps_1d(const KernelSpec1D& spec, double step, bool normalize);
Taps2D sample_taps_2d(const KernelSpec2D& spec, double step, bool normalize);

}  // namespace qgauss
