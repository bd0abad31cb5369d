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

#include "qgauss/taps.hpp"

#include <cmath>

#include "qgauss/error.hpp"

namespace qgauss {
namespace {

// Whitened radius r with q_exp(-beta r^2) = kTapTailRatio, or the support edge.
double extent(double q, double beta) {
  if (is_gaussian_index(q)) return std::sqrt(std::log(1.0 / kTapTailRatio) / beta);
  if (q < 1.0) return support_radius(q, beta);
  return std::sqrt((std::pow(kTapTailRatio, 1.0 - q) - 1.0) / ((q - 1.0) * beta));
}

int tap_count(double reach, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw Error(ErrorCode::grid, "step must be positive");
  const double n = std::floor(reach / step * (1.0 + 1e-12));
  if (!(n <= static_cast<double>(kMaxTapsPerSide))) throw Error(ErrorCode::grid, "too many taps for this step");
  return static_cast<int>(n);
}

double left_to_right(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

// Walk the center tap ulp by ulp toward a left-to-right sum of exactly 1.
// The sum is monotone in that tap but can step over 1 near the binade edge.
bool settle_center(std::vector<double>& v, std::size_t center) {
  v[center] += 1.0 - left_to_right(v);
  double prev = left_to_right(v);
  for (int step = 0; step < 64; ++step) {
    if (prev == 1.0) return true;
    v[center] = std::nextafter(v[center], prev < 1.0 ? 2.0 : -1.0);
    const double s = left_to_right(v);
    if ((s - 1.0) * (prev - 1.0) < 0.0) return false;
    prev = s;
  }
  return prev == 1.0;
}

void normalize_in_place(std::vector<double>& v, std::size_t center) {
  const double total = left_to_right(v);
  if (!(total > 0.0)) throw Error(ErrorCode::grid, "taps sum to zero");
  const std::vector<double> raw = v;
  // Nudge the divisor when the center walk jumps over 1; every tap is scaled
  // alike so symmetry survives.
  double up = total, down = total;
  for (int attempt = 0; attempt < 256; ++attempt) {
    const double d = attempt % 2 ? (down = std::nextafter(down, 0.0)) : up;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = raw[i] / d;
    if (settle_center(v, center)) return;
    if (attempt % 2 == 0) up = std::nextafter(up, 2.0 * total);
  }
}

}  // namespace

Taps1D sample_taps_1d(const KernelSpec1D& spec, double step, bool normalize) {
  const double reach = extent(spec.params().q, spec.params().beta) * spec.params().sigma;
  Taps1D t;
  t.step = step;
  t.half_count = tap_count(reach, step);
  t.values.resize(2 * static_cast<std::size_t>(t.half_count) + 1);
  for (int k = -t.half_count; k <= t.half_count; ++k) t.values[k + t.half_count] = spec.eval(k * step);
  if (normalize) normalize_in_place(t.values, t.half_count);
  return t;
}

Taps2D sample_taps_2d(const KernelSpec2D& spec, double step, bool normalize) {
  const double r = extent(spec.params().q, spec.params().beta);
  const Covariance2D& s = spec.params().sigma;
  // Bounding box of the ellipse x^T Sigma^-1 x = r^2.
  Taps2D t;
  t.step = step;
  t.half_count_x = tap_count(r * std::sqrt(s.xx), step);
  t.half_count_y = tap_count(r * std::sqrt(s.yy), step);
  const int nx = 2 * t.half_count_x + 1;
  const int ny = 2 * t.half_count_y + 1;
  if (static_cast<double>(nx) * ny > 1e8) throw Error(ErrorCode::grid, "too many taps for this step");
  t.values.resize(static_cast<std::size_t>(nx) * ny);
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      t.values[static_cast<std::size_t>(i) * ny + j] =
          spec.eval((i - t.half_count_x) * step, (j - t.half_count_y) * step);
    }
  }
  if (normalize) normalize_in_place(t.values, static_cast<std::size_t>(t.half_count_x) * ny + t.half_count_y);
  return t;
}

}  // namespace qgauss
