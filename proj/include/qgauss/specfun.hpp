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

// Real special functions needed by the q-Gaussian transforms: Gamma, Beta,
// Bessel J (real and purely imaginary argument), modified Bessel K and the
// Whittaker function W(0, mu). Every function is pure and thread safe.

#include <complex>

namespace qgauss::specfun {

enum class Status {
  exact,         // closed form, no truncation involved
  converged,     // iterative method reached its tolerance
  diverged,      // iteration budget exhausted or result not representable
  domain_error,  // argument outside the domain of the function
};

template <typename T>
struct SpecialValue {
  T value{};
  Status status = Status::converged;

  bool ok() const noexcept { return status == Status::exact || status == Status::converged; }
};

using RealValue = SpecialValue<double>;
using ComplexValue = SpecialValue<std::complex<double>>;

/// Series are truncated once a term falls below this fraction of the sum.
inline constexpr double kSeriesTolerance = 1e-16;
/// Number of series terms after which the result is reported as diverged.
inline constexpr int kSeriesMaxTerms = 500;

/// Gamma function. Domain error at z = 0, -1, -2, ...
RealValue gamma(double z);

/// ln|Gamma(z)|; domain error at the poles.
RealValue log_gamma(double z);

/// ln(Gamma(a) / Gamma(b)) for a, b > 0, accurate when a and b are large and
/// close, where the difference of two log_gamma calls would cancel.
double log_gamma_ratio(double a, double b);

/// Beta function Gamma(x)Gamma(y)/Gamma(x+y); symmetric in its arguments.
RealValue beta(double x, double y);

/// ln B(x, y) for x, y > 0.
RealValue log_beta(double x, double y);

/// Bessel function of the first kind J_nu(x) for real order and real
/// argument. Negative x is accepted only for integer order, since the
/// principal value is complex otherwise (see bessel_lambda for the even form).
RealValue bessel_j(double nu, double x);

/// Gamma(nu+1) (2/x)^nu J_nu(x): the even entire function attached to J_nu,
/// equal to 1 at x = 0. Requires nu > -1.
RealValue bessel_lambda(double nu, double x);

/// J_nu(i t) on the principal branch, by the defining power series.
ComplexValue bessel_j_imag(double nu, double t);

/// Modified Bessel function of the second kind K_mu(x), x > 0. Even in mu.
/// Integer orders are rejected: the Hankel-function representation this
/// library follows is singular there.
RealValue bessel_k(double mu, double x);

/// ln K_mu(x); usable for orders and arguments where K itself under/overflows.
RealValue log_bessel_k(double mu, double x);

/// W(0, mu)(z) = sqrt(z/pi) K_mu(z/2), z > 0.
RealValue whittaker_w0(double mu, double z);

/// ln W(0, mu)(z).
RealValue log_whittaker_w0(double mu, double z);

namespace detail {

// Individual evaluation routes for J_nu, nu >= 0, x > 0. Exposed so the
// overlap between methods can be tested directly. Results are ln|J| and sign.
struct LogMagnitude {
  double log_abs = 0.0;
  int sign = 1;
  Status status = Status::converged;
};

LogMagnitude bessel_j_series(double nu, double x);
LogMagnitude bessel_j_steed(double nu, double x);
LogMagnitude bessel_j_hankel(double nu, double x);
LogMagnitude bessel_j_recurrence(double nu, double x);

// Method selection used by bessel_j / bessel_lambda: series for small x or
// x*x/4 <= nu+1, Hankel expansion for x > max(25, 2 nu^2), Steed otherwise.
LogMagnitude bessel_j_log(double nu, double x);

// K via Temme series / Steed continued fraction plus forward recurrence, and
// via the uniform large-order expansion (used above kDebyeOrder).
RealValue log_bessel_k_recurrence(double mu, double x);
RealValue log_bessel_k_debye(double mu, double x);

inline constexpr double kDebyeOrder = 1000.0;

// Landau's bound: |J_nu(x)| <= kLandau * x^(-1/3) for nu >= 0, x > 0.
inline constexpr double kLandau = 0.7858;

bool is_integer(double x) noexcept;
bool is_nonpositive_integer(double x) noexcept;
double sin_pi(double x) noexcept;

}  // namespace detail

}  // namespace qgauss::specfun
