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

#include "qgauss/fourier.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qgauss/analysis.hpp"
#include "qgauss/error.hpp"
#include "qgauss/specfun.hpp"

namespace qgauss {
namespace {

constexpr double kPi = std::numbers::pi;

SpectrumSample real_sample(double y, double v) { return {y, {v, 0.0}, std::abs(v)}; }

void require_valid(const QParams& p) {
  if (classify_1d(p.q) == Regime::invalid) {
    throw Error(ErrorCode::regime, "no transform for q >= 3 (q=" + std::to_string(p.q) + ")");
  }
  const ValidityResult v = validity_check(p);
  if (!v.valid) {
    std::string msg = "parameters rejected:";
    for (const auto& s : v.violations) msg += " " + s + ";";
    msg.pop_back();
    throw Error(ErrorCode::validity, msg);
  }
}

// 2 (p/2)^nu K_nu(p) / Gamma(nu), nu = 1/(q-1) - 1/2, written through
// W(0, 1/2 - 1/(q-1))(2p) = sqrt(2p/pi) K_nu(p).
double heavy_tail_ft(const KernelSpec1D& spec, double y) {
  const double q = spec.params().q;
  const double k = (q - 1.0) * spec.a();
  const double nu = 1.0 / (q - 1.0) - 0.5;
  if (y == 0.0) {
    // C k^(-1/2) sqrt(pi) Gamma(nu) / Gamma(nu + 1/2)
    return spec.c() / std::sqrt(k) * std::sqrt(kPi) * std::exp(specfun::log_gamma_ratio(nu, nu + 0.5));
  }
  const double p = 2.0 * kPi * std::abs(y) / std::sqrt(k);
  if (p > 1e300) return 0.0;  // exp(-p) underflows long before this
  const specfun::RealValue lw = specfun::log_whittaker_w0(0.5 - 1.0 / (q - 1.0), 2.0 * p);
  if (!lw.ok()) throw Error(ErrorCode::domain, "Whittaker function failed at y=" + std::to_string(y));
  const double lg = specfun::log_gamma(nu).value;
  const double log_f = std::log(2.0) + nu * std::log(0.5 * p) - lg + 0.5 * std::log(kPi / (2.0 * p)) + lw.value;
  return std::exp(log_f);
}

double compact_ft(const KernelSpec1D& spec, double y) {
  const double q = spec.params().q;
  const double k = (1.0 - q) * spec.a();
  const double m = 1.0 / (1.0 - q);
  if (y == 0.0) {
    // C 2^(2m+1) k^(-1/2) Gamma(m+1)^2 / Gamma(2m+2)
    const double lg = (2.0 * m + 1.0) * std::log(2.0) - 0.5 * std::log(k) + 2.0 * specfun::log_gamma(m + 1.0).value -
                      specfun::log_gamma(2.0 * m + 2.0).value;
    return spec.c() * std::exp(lg);
  }
  const double z = 2.0 * kPi * std::abs(y) / std::sqrt(k);
  if (z > 1e300) return 0.0;
  const specfun::RealValue r = specfun::bessel_lambda(m + 0.5, z);
  if (!r.ok()) throw Error(ErrorCode::convergence, "Bessel evaluation failed at y=" + std::to_string(y));
  return r.value;
}

}  // namespace

SpectrumSample ft1d_analytic(const KernelSpec1D& spec, double y) {
  require_valid(spec.params());
  switch (spec.regime()) {
    case Regime::gaussian:
      return real_sample(y, std::exp(-kPi * kPi * y * y / spec.a()));
    case Regime::heavy_tail:
      return real_sample(y, heavy_tail_ft(spec, y));
    case Regime::compact:
      return real_sample(y, compact_ft(spec, y));
    case Regime::invalid:
      break;
  }
  throw Error(ErrorCode::regime, "invalid regime");
}

SpectrumSample ft1d_quadrature(const KernelSpec1D& spec, double y, const quad::QuadOptions& opts) {
  const double omega = 2.0 * kPi * y;
  const quad::Integrand g = [&](double x) { return spec.eval(x) * std::cos(omega * x); };
  quad::QuadResult r;
  switch (spec.regime()) {
    case Regime::compact:
      r = quad::integrate(g, 0.0, spec.support_radius(), opts);
      break;
    case Regime::gaussian:
      r = quad::integrate(g, 0.0, std::sqrt(45.0 / spec.a()), opts);
      break;
    case Regime::heavy_tail: {
      const double scale = 1.0 / std::sqrt(spec.a());
      if (y == 0.0) {
        r = quad::integrate_semi_infinite(g, 0.0, scale, opts);
        break;
      }
      const double half_period = 0.5 / std::abs(y);
      const double x0 = std::ceil(2.0 * scale / half_period) * half_period;
      const quad::QuadResult core = quad::integrate(g, 0.0, x0, opts);
      const quad::QuadResult tail =
          quad::integrate_fourier([&](double x) { return spec.eval(x); }, x0, omega, opts);
      r.value = core.value + tail.value;
      r.error = core.error + tail.error;
      r.converged = core.converged && tail.converged;
      break;
    }
    case Regime::invalid:
      throw Error(ErrorCode::regime, "invalid regime");
  }
  if (!r.converged) {
    throw Error(ErrorCode::convergence, "transform quadrature did not converge at y=" + std::to_string(y));
  }
  // The integrand is even, so the sine part vanishes and the cosine part doubles.
  return real_sample(y, 2.0 * r.value);
}

SpectrumSample ft_gaussian_ref(double sigma, double y) {
  if (!(sigma > 0.0)) throw Error(ErrorCode::invalid_argument, "sigma must be positive");
  return real_sample(y, std::exp(-2.0 * kPi * kPi * sigma * sigma * y * y));
}

namespace {

struct KernelGrid {
  int m = 0;
  double step = 0.0;
  std::vector<double> values;  // (2M+1)^2, row index m, column index n

  double at(int i, int j) const { return values[(i + m) * (2 * m + 1) + (j + m)]; }
};

KernelGrid sample_grid(const KernelSpec2D& spec, const GridSpec& grid) {
  if (!(grid.step > 0.0) || !std::isfinite(grid.step)) throw Error(ErrorCode::grid, "step must be positive");
  if (grid.half_width_index < 1) throw Error(ErrorCode::grid, "half-width index must be >= 1");
  KernelGrid g;
  g.m = grid.half_width_index;
  g.step = grid.step;
  const int n = 2 * g.m + 1;
  g.values.resize(static_cast<std::size_t>(n) * n);
  for (int i = -g.m; i <= g.m; ++i) {
    for (int j = -g.m; j <= g.m; ++j) {
      g.values[(i + g.m) * n + (j + g.m)] = spec.eval(i * grid.step, j * grid.step);
    }
  }
  return g;
}

std::vector<std::complex<double>> phases(double omega, const KernelGrid& g) {
  // Only omega*T mod 1 matters; std::remainder is exact.
  double u = std::remainder(omega * g.step, 1.0);
  if (u == 0.5) u = -0.5;  // one representative per residue class
  std::vector<std::complex<double>> p(g.m + 1);
  for (int k = 0; k <= g.m; ++k) p[k] = std::polar(1.0, -2.0 * kPi * u * k);
  return p;
}

SpectrumSample2D sum_grid(const KernelGrid& g, double w1, double w2) {
  const auto p1 = phases(w1, g);
  const auto p2 = phases(w2, g);
  auto phase = [&](const std::vector<std::complex<double>>& p, int k) { return k >= 0 ? p[k] : std::conj(p[-k]); };
  // Node (i, j) is paired with (-i, -j); the pair contributes
  // G (z + conj z), so the imaginary parts cancel exactly.
  std::complex<double> acc = g.at(0, 0);
  for (int i = 0; i <= g.m; ++i) {
    for (int j = -g.m; j <= g.m; ++j) {
      if (i == 0 && j <= 0) continue;
      const std::complex<double> z = phase(p1, i) * phase(p2, j);
      const std::complex<double> zc = phase(p1, -i) * phase(p2, -j);
      acc += g.at(i, j) * z + g.at(-i, -j) * zc;
    }
  }
  const std::complex<double> v = acc * (g.step * g.step);
  return {w1, w2, v, std::abs(v)};
}

}  // namespace

SpectrumSample2D ft2d_discrete(const KernelSpec2D& spec, const GridSpec& grid, double omega1, double omega2) {
  return sum_grid(sample_grid(spec, grid), omega1, omega2);
}

std::vector<SpectrumSample2D> ft2d_discrete_grid(const KernelSpec2D& spec, const GridSpec& grid,
                                                 std::span<const double> omega1,
                                                 std::span<const double> omega2) {
  const KernelGrid g = sample_grid(spec, grid);
  std::vector<SpectrumSample2D> out;
  out.reserve(omega1.size() * omega2.size());
  for (double w1 : omega1) {
    for (double w2 : omega2) out.push_back(sum_grid(g, w1, w2));
  }
  return out;
}

int select_half_width(const KernelSpec2D& spec, double step, double delta, int max_index) {
  if (!(step > 0.0)) throw Error(ErrorCode::grid, "step must be positive");
  if (!(delta > 0.0)) throw Error(ErrorCode::invalid_argument, "delta must be positive");
  for (int m = 1; m <= max_index; ++m) {
    if (spec.eval(m * step, 0.0) < delta) return m;
  }
  throw Error(ErrorCode::grid, "kernel does not fall below delta within the index limit");
}

GridSpec grid_from_half_width(double step, double half_width) {
  if (!(step > 0.0) || !std::isfinite(step)) throw Error(ErrorCode::grid, "step must be positive");
  if (!(half_width > 0.0)) throw Error(ErrorCode::grid, "half-width must be positive");
  const double m = std::ceil(half_width / step - 1e-12);
  if (m > 1e6) throw Error(ErrorCode::grid, "half-width index too large");
  return {step, std::max(1, static_cast<int>(m))};
}

}  // namespace qgauss
