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

#ifndef QGAUSS_QGAUSS_H_
#define QGAUSS_QGAUSS_H_

/* C interface to the qgauss library. Kernels are opaque handles; every call
 * returns a qg_status and, on failure, leaves a message retrievable with
 * qg_last_error() on the calling thread. */

#include <stddef.h>

#if defined(_WIN32)
#if defined(QG_BUILDING_LIBRARY)
#define QG_API __declspec(dllexport)
#else
#define QG_API __declspec(dllimport)
#endif
#else
#define QG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qg_status {
  QG_OK = 0,
  QG_ERR_INVALID_ARGUMENT = 1,
  QG_ERR_DOMAIN = 2,
  QG_ERR_REGIME = 3,
  QG_ERR_VALIDITY = 4,
  QG_ERR_CONVERGENCE = 5,
  QG_ERR_GRID = 6,
  QG_ERR_NOT_FOUND = 7,
  QG_ERR_IO = 8,
  QG_ERR_INTERNAL = 9
} qg_status;

enum {
  QG_REGIME_COMPACT = 0,
  QG_REGIME_GAUSSIAN = 1,
  QG_REGIME_HEAVY_TAIL = 2,
  QG_REGIME_INVALID = 3
};

typedef struct qg_kernel1d qg_kernel1d;
typedef struct qg_kernel2d qg_kernel2d;

QG_API const char* qg_version(void);
QG_API const char* qg_status_string(qg_status status);
/* Message for the most recent failure on this thread; "" if none. */
QG_API const char* qg_last_error(void);

/* ---- special functions ---- */
QG_API qg_status qg_gamma(double z, double* out);
QG_API qg_status qg_beta(double x, double y, double* out);
QG_API qg_status qg_bessel_j(double nu, double x, double* out);
QG_API qg_status qg_bessel_k(double mu, double x, double* out);
QG_API qg_status qg_whittaker_w0(double mu, double z, double* out);

/* ---- kernels ---- */
QG_API double qg_q_exp(double x, double q);
QG_API qg_status qg_c1q(double q, double sigma, double beta, double* out);
/* Sigma = [[sxx, sxy], [sxy, syy]]. */
QG_API qg_status qg_c2q(double q, double sxx, double sxy, double syy, double beta, double* out);
QG_API double qg_gaussian_ref_1d(double sigma, double x);

typedef struct qg_kernel1d_info {
  double q, sigma, beta;
  double c;              /* normalization constant */
  double support_radius; /* in x; +inf for q >= 1 */
  int regime;            /* QG_REGIME_* */
} qg_kernel1d_info;

QG_API qg_status qg_kernel1d_create(double q, double sigma, double beta, qg_kernel1d** out);
QG_API void qg_kernel1d_destroy(qg_kernel1d* k);
QG_API qg_status qg_kernel1d_info_get(const qg_kernel1d* k, qg_kernel1d_info* out);
QG_API qg_status qg_kernel1d_eval(const qg_kernel1d* k, const double* x, size_t n, double* out);

typedef struct qg_kernel2d_info {
  double q, sxx, sxy, syy, beta;
  double c;
  double support_radius; /* whitened; +inf for q >= 1 */
  int regime;
} qg_kernel2d_info;

QG_API qg_status qg_kernel2d_create(double q, double sxx, double sxy, double syy, double beta,
                                    qg_kernel2d** out);
QG_API void qg_kernel2d_destroy(qg_kernel2d* k);
QG_API qg_status qg_kernel2d_info_get(const qg_kernel2d* k, qg_kernel2d_info* out);
QG_API qg_status qg_kernel2d_eval(const qg_kernel2d* k, double x, double y, double* out);

/* ---- transforms; im may be NULL ---- */
QG_API qg_status qg_ft1d_analytic(const qg_kernel1d* k, const double* y, size_t n, double* re, double* im);
QG_API qg_status qg_ft1d_quadrature(const qg_kernel1d* k, const double* y, size_t n, double* re, double* im);
QG_API qg_status qg_ft_gaussian_ref(double sigma, const double* y, size_t n, double* out);

/* Discrete 2D transform on an n1 x n2 frequency grid, row-major (w1 slowest). */
QG_API qg_status qg_ft2d_discrete(const qg_kernel2d* k, double step, int half_width_index, const double* w1,
                                  size_t n1, const double* w2, size_t n2, double* re, double* im);
QG_API qg_status qg_grid_from_half_width(double step, double half_width, int* half_width_index);
QG_API qg_status qg_select_half_width(const qg_kernel2d* k, double step, double delta, int* half_width_index);

/* ---- analysis ---- */
typedef struct qg_window_report {
  double center, l2_norm, x_weighted_norm, delta, ft_bound;
  int regime; /* QG_REGIME_* */
} qg_window_report;

typedef struct qg_heisenberg {
  double lhs, rhs, ratio;
  int satisfied;
  int finite; /* 0 when the frequency norm diverges */
} qg_heisenberg;

QG_API qg_status qg_window(const qg_kernel1d* k, qg_window_report* out);
QG_API qg_status qg_heisenberg_check(const qg_kernel1d* k, qg_heisenberg* out);
QG_API qg_status qg_cutoff_frequency(const qg_kernel1d* k, double threshold, double* out);

/* valid is set to 1 or 0. Violations are joined with "; " into buf when buf
 * is non-NULL (truncated to buflen). */
QG_API qg_status qg_validity_check(double q, double sigma, double beta, int* valid, char* buf, size_t buflen);

/* ---- filter taps ----
 * Call with values == NULL to learn the count, then again with a buffer. */
QG_API qg_status qg_taps1d(const qg_kernel1d* k, double step, int normalize, double* values, size_t capacity,
                           size_t* count);
/* Row-major (x slowest), nx * ny values. */
QG_API qg_status qg_taps2d(const qg_kernel2d* k, double step, int normalize, double* values, size_t capacity,
                           int* nx, int* ny);

#ifdef __cplusplus
}
#endif

#endif /* QGAUSS_QGAUSS_H_ */
