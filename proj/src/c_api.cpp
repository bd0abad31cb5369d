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

#include "qgauss/qgauss.h"

#include <cmath>
#include <cstring>
#include <exception>
#include <limits>
#include <new>
#include <string>

#include "qgauss/analysis.hpp"
#include "qgauss/error.hpp"
#include "qgauss/fourier.hpp"
#include "qgauss/qcore.hpp"
#include "qgauss/specfun.hpp"
#include "qgauss/taps.hpp"

struct qg_kernel1d {
  qgauss::KernelSpec1D spec;
};

struct qg_kernel2d {
  qgauss::KernelSpec2D spec;
};

namespace {

thread_local std::string last_error;

qg_status map(qgauss::ErrorCode c) {
  using qgauss::ErrorCode;
  switch (c) {
    case ErrorCode::invalid_argument: return QG_ERR_INVALID_ARGUMENT;
    case ErrorCode::domain: return QG_ERR_DOMAIN;
    case ErrorCode::regime: return QG_ERR_REGIME;
    case ErrorCode::validity: return QG_ERR_VALIDITY;
    case ErrorCode::convergence: return QG_ERR_CONVERGENCE;
    case ErrorCode::grid: return QG_ERR_GRID;
    case ErrorCode::not_found: return QG_ERR_NOT_FOUND;
    case ErrorCode::io: return QG_ERR_IO;
  }
  return QG_ERR_INTERNAL;
}

qg_status fail(qg_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <typename F>
qg_status guard(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const qgauss::Error& e) {
    return fail(map(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(QG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(QG_ERR_INTERNAL, e.what());
  }
}

#define QG_REQUIRE(cond, what) \
  if (!(cond)) return fail(QG_ERR_INVALID_ARGUMENT, what)

qg_status special(const qgauss::specfun::RealValue& v, double* out, const char* name) {
  QG_REQUIRE(out, "null output pointer");
  *out = v.value;
  if (v.status == qgauss::specfun::Status::domain_error) return fail(QG_ERR_DOMAIN, std::string(name) + ": argument outside domain");
  if (v.status == qgauss::specfun::Status::diverged) return fail(QG_ERR_CONVERGENCE, std::string(name) + ": did not converge");
  return QG_OK;
}

int regime_code(qgauss::Regime r) {
  switch (r) {
    case qgauss::Regime::compact: return QG_REGIME_COMPACT;
    case qgauss::Regime::gaussian: return QG_REGIME_GAUSSIAN;
    case qgauss::Regime::heavy_tail: return QG_REGIME_HEAVY_TAIL;
    case qgauss::Regime::invalid: return QG_REGIME_INVALID;
  }
  return QG_REGIME_INVALID;
}

int regime_code(qgauss::WindowRegime r) {
  switch (r) {
    case qgauss::WindowRegime::compact: return QG_REGIME_COMPACT;
    case qgauss::WindowRegime::gaussian: return QG_REGIME_GAUSSIAN;
    case qgauss::WindowRegime::heavy_tail: return QG_REGIME_HEAVY_TAIL;
    case qgauss::WindowRegime::out_of_range: return QG_REGIME_INVALID;
  }
  return QG_REGIME_INVALID;
}

}  // namespace

extern "C" {

const char* qg_version(void) { return "0.1.0"; }

const char* qg_status_string(qg_status s) {
  switch (s) {
    case QG_OK: return "ok";
    case QG_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case QG_ERR_DOMAIN: return "domain-error";
    case QG_ERR_REGIME: return "regime-error";
    case QG_ERR_VALIDITY: return "validity-error";
    case QG_ERR_CONVERGENCE: return "convergence-failure";
    case QG_ERR_GRID: return "grid-error";
    case QG_ERR_NOT_FOUND: return "not-found";
    case QG_ERR_IO: return "io-error";
    case QG_ERR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

const char* qg_last_error(void) { return last_error.c_str(); }

qg_status qg_gamma(double z, double* out) {
  return guard([&] { return special(qgauss::specfun::gamma(z), out, "gamma"); });
}
qg_status qg_beta(double x, double y, double* out) {
  return guard([&] { return special(qgauss::specfun::beta(x, y), out, "beta"); });
}
qg_status qg_bessel_j(double nu, double x, double* out) {
  return guard([&] { return special(qgauss::specfun::bessel_j(nu, x), out, "bessel_j"); });
}
qg_status qg_bessel_k(double mu, double x, double* out) {
  return guard([&] { return special(qgauss::specfun::bessel_k(mu, x), out, "bessel_k"); });
}
qg_status qg_whittaker_w0(double mu, double z, double* out) {
  return guard([&] { return special(qgauss::specfun::whittaker_w0(mu, z), out, "whittaker_w0"); });
}

double qg_q_exp(double x, double q) { return qgauss::q_exp(x, q); }

qg_status qg_c1q(double q, double sigma, double beta, double* out) {
  return guard([&] {
    QG_REQUIRE(out, "null output pointer");
    *out = qgauss::c1q({q, sigma, beta});
    return QG_OK;
  });
}

qg_status qg_c2q(double q, double sxx, double sxy, double syy, double beta, double* out) {
  return guard([&] {
    QG_REQUIRE(out, "null output pointer");
    *out = qgauss::c2q({q, {sxx, sxy, syy}, beta});
    return QG_OK;
  });
}

double qg_gaussian_ref_1d(double sigma, double x) { return qgauss::gaussian_ref_1d(sigma, x); }

qg_status qg_kernel1d_create(double q, double sigma, double beta, qg_kernel1d** out) {
  return guard([&] {
    QG_REQUIRE(out, "null output pointer");
    *out = nullptr;
    *out = new qg_kernel1d{qgauss::KernelSpec1D::make({q, sigma, beta})};
    return QG_OK;
  });
}

void qg_kernel1d_destroy(qg_kernel1d* k) { delete k; }

qg_status qg_kernel1d_info_get(const qg_kernel1d* k, qg_kernel1d_info* out) {
  QG_REQUIRE(k && out, "null pointer");
  const auto& p = k->spec.params();
  *out = {p.q, p.sigma, p.beta, k->spec.c(), k->spec.support_radius(), regime_code(k->spec.regime())};
  return QG_OK;
}

qg_status qg_kernel1d_eval(const qg_kernel1d* k, const double* x, size_t n, double* out) {
  QG_REQUIRE(k && (n == 0 || (x && out)), "null pointer");
  for (size_t i = 0; i < n; ++i) out[i] = k->spec.eval(x[i]);
  return QG_OK;
}

qg_status qg_kernel2d_create(double q, double sxx, double sxy, double syy, double beta, qg_kernel2d** out) {
  return guard([&] {
    QG_REQUIRE(out, "null output pointer");
    *out = nullptr;
    *out = new qg_kernel2d{qgauss::KernelSpec2D::make({q, {sxx, sxy, syy}, beta})};
    return QG_OK;
  });
}

void qg_kernel2d_destroy(qg_kernel2d* k) { delete k; }

qg_status qg_kernel2d_info_get(const qg_kernel2d* k, qg_kernel2d_info* out) {
  QG_REQUIRE(k && out, "null pointer");
  const auto& p = k->spec.params();
  *out = {p.q, p.sigma.xx, p.sigma.xy, p.sigma.yy, p.beta, k->spec.c(), k->spec.support_radius(),
          regime_code(k->spec.regime())};
  return QG_OK;
}

qg_status qg_kernel2d_eval(const qg_kernel2d* k, double x, double y, double* out) {
  QG_REQUIRE(k && out, "null pointer");
  *out = k->spec.eval(x, y);
  return QG_OK;
}

qg_status qg_ft1d_analytic(const qg_kernel1d* k, const double* y, size_t n, double* re, double* im) {
  return guard([&] {
    QG_REQUIRE(k && (n == 0 || (y && re)), "null pointer");
    for (size_t i = 0; i < n; ++i) {
      const auto s = qgauss::ft1d_analytic(k->spec, y[i]);
      re[i] = s.value.real();
      if (im) im[i] = s.value.imag();
    }
    return QG_OK;
  });
}

qg_status qg_ft1d_quadrature(const qg_kernel1d* k, const double* y, size_t n, double* re, double* im) {
  return guard([&] {
    QG_REQUIRE(k && (n == 0 || (y && re)), "null pointer");
    for (size_t i = 0; i < n; ++i) {
      const auto s = qgauss::ft1d_quadrature(k->spec, y[i]);
      re[i] = s.value.real();
      if (im) im[i] = s.value.imag();
    }
    return QG_OK;
  });
}

qg_status qg_ft_gaussian_ref(double sigma, const double* y, size_t n, double* out) {
  return guard([&] {
    QG_REQUIRE(n == 0 || (y && out), "null pointer");
    for (size_t i = 0; i < n; ++i) out[i] = qgauss::ft_gaussian_ref(sigma, y[i]).value.real();
    return QG_OK;
  });
}

qg_status qg_ft2d_discrete(const qg_kernel2d* k, double step, int half_width_index, const double* w1, size_t n1,
                           const double* w2, size_t n2, double* re, double* im) {
  return guard([&] {
    QG_REQUIRE(k && (n1 * n2 == 0 || (w1 && w2 && re)), "null pointer");
    const auto samples = qgauss::ft2d_discrete_grid(k->spec, {step, half_width_index}, {w1, n1}, {w2, n2});
    for (size_t i = 0; i < samples.size(); ++i) {
      re[i] = samples[i].value.real();
      if (im) im[i] = samples[i].value.imag();
    }
    return QG_OK;
  });
}

qg_status qg_grid_from_half_width(double step, double half_width, int* half_width_index) {
  return guard([&] {
    QG_REQUIRE(half_width_index, "null output pointer");
    *half_width_index = qgauss::grid_from_half_width(step, half_width).half_width_index;
    return QG_OK;
  });
}

qg_status qg_select_half_width(const qg_kernel2d* k, double step, double delta, int* half_width_index) {
  return guard([&] {
    QG_REQUIRE(k && half_width_index, "null pointer");
    *half_width_index = qgauss::select_half_width(k->spec, step, delta);
    return QG_OK;
  });
}

qg_status qg_window(const qg_kernel1d* k, qg_window_report* out) {
  return guard([&] {
    QG_REQUIRE(k && out, "null pointer");
    const auto w = qgauss::window_report(k->spec);
    *out = {w.center, w.l2_norm, w.x_weighted_norm, w.delta, w.ft_bound, regime_code(w.regime)};
    return QG_OK;
  });
}

qg_status qg_heisenberg_check(const qg_kernel1d* k, qg_heisenberg* out) {
  return guard([&] {
    QG_REQUIRE(k && out, "null pointer");
    const auto h = qgauss::heisenberg_check(k->spec);
    *out = {h.lhs, h.rhs, h.ratio, h.satisfied ? 1 : 0, h.finite ? 1 : 0};
    return QG_OK;
  });
}

qg_status qg_cutoff_frequency(const qg_kernel1d* k, double threshold, double* out) {
  return guard([&] {
    QG_REQUIRE(k && out, "null pointer");
    *out = qgauss::cutoff_frequency(k->spec, threshold);
    return QG_OK;
  });
}

qg_status qg_validity_check(double q, double sigma, double beta, int* valid, char* buf, size_t buflen) {
  return guard([&] {
    QG_REQUIRE(valid, "null output pointer");
    const auto r = qgauss::validity_check({q, sigma, beta});
    *valid = r.valid ? 1 : 0;
    if (buf && buflen > 0) {
      std::string joined;
      for (const auto& v : r.violations) joined += (joined.empty() ? "" : "; ") + v;
      const size_t n = std::min(joined.size(), buflen - 1);
      std::memcpy(buf, joined.data(), n);
      buf[n] = '\0';
    }
    return QG_OK;
  });
}

qg_status qg_taps1d(const qg_kernel1d* k, double step, int normalize, double* values, size_t capacity,
                    size_t* count) {
  return guard([&] {
    QG_REQUIRE(k && count, "null pointer");
    const auto t = qgauss::sample_taps_1d(k->spec, step, normalize != 0);
    *count = t.values.size();
    if (!values) return QG_OK;
    QG_REQUIRE(capacity >= t.values.size(), "buffer too small");
    std::memcpy(values, t.values.data(), t.values.size() * sizeof(double));
    return QG_OK;
  });
}

qg_status qg_taps2d(const qg_kernel2d* k, double step, int normalize, double* values, size_t capacity, int* nx,
                    int* ny) {
  return guard([&] {
    QG_REQUIRE(k && nx && ny, "null pointer");
    const auto t = qgauss::sample_taps_2d(k->spec, step, normalize != 0);
    *nx = 2 * t.half_count_x + 1;
    *ny = 2 * t.half_count_y + 1;
    if (!values) return QG_OK;
    QG_REQUIRE(capacity >= t.values.size(), "buffer too small");
    std::memcpy(values, t.values.data(), t.values.size() * sizeof(double));
    return QG_OK;
  });
}

}  // extern "C"
