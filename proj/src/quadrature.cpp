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

#include "qgauss/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <vector>

namespace qgauss::quad {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Kronrod nodes (positive half) and weights; Gauss weights for the embedded
// 10-point rule sit at the odd Kronrod nodes.
constexpr std::array<double, 11> xgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> wgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525452213, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> wg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
  double a, b, value, error, abs_value;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk21(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double resg = 0.0;
  double resk = fc * wgk[10];
  double resabs = std::abs(resk);
  std::array<double, 10> f1{};
  std::array<double, 10> f2{};
  for (int j = 0; j < 10; ++j) {
    const double dx = half * xgk[j];
    const double v1 = f(center - dx);
    const double v2 = f(center + dx);
    f1[j] = v1;
    f2[j] = v2;
    resk += wgk[j] * (v1 + v2);
    resabs += wgk[j] * (std::abs(v1) + std::abs(v2));
    if (j % 2 == 1) resg += wg[j / 2] * (v1 + v2);
  }
  const double mean = 0.5 * resk;
  double resasc = wgk[10] * std::abs(fc - mean);
  for (int j = 0; j < 10; ++j) resasc += wgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));

  const double ah = std::abs(half);
  const double result = resk * half;
  resabs *= ah;
  resasc *= ah;
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) err = std::max(50.0 * kEps * resabs, err);
  return {a, b, result, err, resabs};
}

}  // namespace

QuadResult integrate(const Integrand& f, double a, double b, const QuadOptions& opts) {
  QuadResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  std::priority_queue<Segment> heap;
  Segment first = gk21(f, a, b);
  heap.push(first);
  double value = first.value;
  double error = first.error;
  double abs_value = first.abs_value;
  out.evaluations = 21;
  std::size_t intervals = 1;

  auto tolerance = [&] {
    return std::max({opts.abs_tol, opts.rel_tol * std::abs(value), 100.0 * kEps * abs_value});
  };

  while (error > tolerance() && intervals < opts.max_intervals) {
    const Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    // No room left to bisect in floating point.
    if (!(mid > std::min(worst.a, worst.b) && mid < std::max(worst.a, worst.b))) break;
    heap.pop();
    const Segment left = gk21(f, worst.a, mid);
    const Segment right = gk21(f, mid, worst.b);
    out.evaluations += 42;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    abs_value += left.abs_value + right.abs_value - worst.abs_value;
    heap.push(left);
    heap.push(right);
    ++intervals;
    // Re-sum now and then so the running totals do not drift.
    if (intervals % 4096 == 0) {
      auto copy = heap;
      value = error = abs_value = 0.0;
      while (!copy.empty()) {
        value += copy.top().value;
        error += copy.top().error;
        abs_value += copy.top().abs_value;
        copy.pop();
      }
    }
  }
  // Final exact summation, smallest contributions first.
  std::vector<Segment> segs;
  segs.reserve(heap.size());
  while (!heap.empty()) {
    segs.push_back(heap.top());
    heap.pop();
  }
  std::sort(segs.begin(), segs.end(),
            [](const Segment& l, const Segment& r) { return std::abs(l.value) < std::abs(r.value); });
  value = error = abs_value = 0.0;
  for (const auto& s : segs) {
    value += s.value;
    error += s.error;
    abs_value += s.abs_value;
  }
  out.value = value;
  out.error = error;
  out.intervals = intervals;
  out.converged = std::isfinite(value) && error <= tolerance();
  return out;
}

QuadResult integrate_semi_infinite(const Integrand& f, double a, double scale, const QuadOptions& opts) {
  const QuadResult core = integrate(f, a, a + scale, opts);
  const Integrand mapped = [&](double t) {
    if (t >= 1.0) return 0.0;
    const double u = t / (1.0 - t);
    if (u > 700.0) return 0.0;
    const double e = scale * std::exp(u);
    const double x = a + e;
    if (!std::isfinite(x)) return 0.0;
    const double v = f(x);
    if (v == 0.0) return 0.0;
    return v * e / ((1.0 - t) * (1.0 - t));
  };
  const QuadResult tail = integrate(mapped, 0.0, 1.0, opts);
  QuadResult out;
  out.value = core.value + tail.value;
  out.error = core.error + tail.error;
  out.intervals = core.intervals + tail.intervals;
  out.evaluations = core.evaluations + tail.evaluations;
  out.converged = core.converged && tail.converged;
  return out;
}

QuadResult integrate_whole_line(const Integrand& f, double scale, const QuadOptions& opts) {
  const QuadResult right = integrate_semi_infinite(f, 0.0, scale, opts);
  const QuadResult left = integrate_semi_infinite([&](double x) { return f(-x); }, 0.0, scale, opts);
  QuadResult out;
  out.value = left.value + right.value;
  out.error = left.error + right.error;
  out.intervals = left.intervals + right.intervals;
  out.evaluations = left.evaluations + right.evaluations;
  out.converged = left.converged && right.converged;
  return out;
}

Extrapolation wynn_epsilon(const double* s, std::size_t n) {
  if (n == 0) return {0.0, std::numeric_limits<double>::infinity()};
  if (n < 3) return {s[n - 1], n == 2 ? std::abs(s[1] - s[0]) : std::numeric_limits<double>::infinity()};
  // e[k] holds column k of the table for the current diagonal.
  std::vector<double> prev(s, s + n);  // column 0
  std::vector<double> prev2(n + 1, 0.0);  // column -1
  double best = s[n - 1];
  double best_prev = s[n - 2];
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<double> cur(n - k);
    bool broken = false;
    for (std::size_t i = 0; i + k < n; ++i) {
      const double diff = prev[i + 1] - prev[i];
      if (diff == 0.0 || !std::isfinite(diff)) {
        broken = true;
        break;
      }
      cur[i] = prev2[i + 1] + 1.0 / diff;
    }
    if (broken) break;
    if (k % 2 == 0) {
      best = cur.back();
      best_prev = cur.size() >= 2 ? cur[cur.size() - 2] : best;
    }
    prev2 = std::move(prev);
    prev = std::move(cur);
  }
  return {best, std::abs(best - best_prev)};
}

QuadResult integrate_fourier(const Integrand& f, double a, double omega, const QuadOptions& opts,
                             std::size_t max_cycles) {
  QuadResult out;
  omega = std::abs(omega);
  if (omega == 0.0) return integrate_semi_infinite(f, a, 1.0, opts);

  const double half_period = std::numbers::pi / omega;
  const Integrand g = [&](double x) { return f(x) * std::cos(omega * x); };

  std::vector<double> sums;
  sums.reserve(64);
  double running = 0.0;
  double previous_estimate = std::numeric_limits<double>::quiet_NaN();
  const double cycle_tol = opts.abs_tol;
  QuadOptions piece = opts;
  piece.abs_tol = cycle_tol;
  for (std::size_t k = 0; k < max_cycles; ++k) {
    const double lo = a + k * half_period;
    const QuadResult r = integrate(g, lo, lo + half_period, piece);
    out.intervals += r.intervals;
    out.evaluations += r.evaluations;
    out.error += r.error;
    if (!r.converged) {
      out.value = running + r.value;
      return out;
    }
    running += r.value;
    sums.push_back(running);
    if (std::abs(r.value) <= opts.abs_tol * 1e-2 && k > 2) {
      out.value = running;
      out.converged = true;
      return out;
    }
    // Only the most recent stretch of partial sums goes into the table.
    if (sums.size() >= 8) {
      const std::size_t window = std::min<std::size_t>(sums.size(), 40);
      const Extrapolation e = wynn_epsilon(sums.data() + sums.size() - window, window);
      if (std::abs(e.value - previous_estimate) <= opts.abs_tol && e.error <= opts.abs_tol) {
        out.value = e.value;
        out.error += e.error;
        out.converged = true;
        return out;
      }
      previous_estimate = e.value;
    }
  }
  out.value = sums.empty() ? 0.0 : sums.back();
  return out;
}

}  // namespace qgauss::quad
