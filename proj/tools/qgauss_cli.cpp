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

// qgauss command-line tool. Talks to the library only through qgauss.h.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qgauss/qgauss.h"

namespace {

constexpr double kPi = 3.14159265358979323846;

enum ExitCode { kOk = 0, kUsage = 1, kValidity = 2, kConvergence = 3, kIo = 4 };

struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(qg_status s) {
  switch (s) {
    case QG_OK: return kOk;
    case QG_ERR_VALIDITY:
    case QG_ERR_REGIME: return kValidity;
    case QG_ERR_CONVERGENCE: return kConvergence;
    case QG_ERR_IO: return kIo;
    default: return kUsage;
  }
}

void check(qg_status s) {
  if (s != QG_OK) {
    throw Failure{exit_code_for(s), std::string(qg_status_string(s)) + ": " + qg_last_error()};
  }
}

struct Kernel1DDeleter {
  void operator()(qg_kernel1d* k) const { qg_kernel1d_destroy(k); }
};
struct Kernel2DDeleter {
  void operator()(qg_kernel2d* k) const { qg_kernel2d_destroy(k); }
};
using Kernel1D = std::unique_ptr<qg_kernel1d, Kernel1DDeleter>;
using Kernel2D = std::unique_ptr<qg_kernel2d, Kernel2DDeleter>;

Kernel1D make_1d(double q, double sigma, double beta) {
  qg_kernel1d* k = nullptr;
  check(qg_kernel1d_create(q, sigma, beta, &k));
  return Kernel1D(k);
}

Kernel2D make_2d(double q, double s1, double s2, double beta) {
  qg_kernel2d* k = nullptr;
  check(qg_kernel2d_create(q, s1 * s1, 0.0, s2 * s2, beta, &k));
  return Kernel2D(k);
}

// ---------------------------------------------------------------- output

using Cell = std::variant<double, std::string>;

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct Table {
  std::vector<std::pair<std::string, Cell>> params;
  std::vector<std::string> notes;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void param(const std::string& k, Cell v) { params.emplace_back(k, std::move(v)); }
};

std::string cell_text(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) return fmt(*d);
  return std::get<std::string>(c);
}

std::string to_csv(const Table& t) {
  std::ostringstream os;
  os << "# params:";
  for (std::size_t i = 0; i < t.params.size(); ++i) {
    os << (i ? ", " : " ") << t.params[i].first << "=" << cell_text(t.params[i].second);
  }
  os << "\n";
  for (const auto& n : t.notes) os << "# " << n << "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i]);
    os << "\n";
  }
  return os.str();
}

nlohmann::ordered_json json_cell(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) {
    if (std::isfinite(*d)) return std::stod(fmt(*d));
    return fmt(*d);
  }
  return std::get<std::string>(c);
}

std::string to_json(const Table& t) {
  nlohmann::ordered_json j;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : t.params) j["params"][k] = json_cell(v);
  if (!t.notes.empty()) j["notes"] = t.notes;
  j["columns"] = t.columns;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    auto r = nlohmann::ordered_json::array();
    for (const auto& c : row) r.push_back(json_cell(c));
    j["rows"].push_back(std::move(r));
  }
  return j.dump(1) + "\n";
}

void emit(const Table& t, const std::string& format, const std::string& out) {
  const std::string text = format == "json" ? to_json(t) : to_csv(t);
  if (out.empty() || out == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw Failure{kIo, "io-error: cannot write to stdout"};
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw Failure{kIo, "io-error: cannot open " + out};
  f << text;
  f.close();
  if (!f) throw Failure{kIo, "io-error: write to " + out + " failed"};
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  if (n == 1) {
    v[0] = a;
    return v;
  }
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}

// q = start + k*step, k = 0..count-1, computed without accumulation.
std::vector<double> q_grid(double start, double step, int count) {
  std::vector<double> v;
  for (int k = 0; k < count; ++k) v.push_back(start + step * k);
  return v;
}

std::string violations(double q, double sigma, double beta, bool* valid) {
  int ok = 0;
  char buf[512];
  check(qg_validity_check(q, sigma, beta, &ok, buf, sizeof buf));
  *valid = ok != 0;
  return buf;
}

const char* regime_name(int r) {
  switch (r) {
    case QG_REGIME_COMPACT: return "q<1";
    case QG_REGIME_GAUSSIAN: return "q=1";
    case QG_REGIME_HEAVY_TAIL: return "q>1";
    default: return "invalid";
  }
}

// ---------------------------------------------------------------- commands

struct Options {
  double q = 2.0;
  double sigma = 0.1;
  double beta = 0.5;
  double sigma1 = 0.0;
  double sigma2 = 0.0;
  double step = 0.25;
  double half_width = 2.5;
  double delta = 0.0;
  double threshold = 0.1;
  std::vector<double> range;
  int samples = 0;
  std::string out;
  std::string format = "csv";
  std::string method = "analytic";
  std::string figure;
  bool normalize = false;
  bool two_d = false;
};

void add_1d_params(Table& t, const Options& o) {
  t.param("q", o.q);
  t.param("sigma", o.sigma);
  t.param("beta", o.beta);
}

std::pair<double, double> diag_sigmas(const Options& o) {
  const double s1 = o.sigma1 > 0 ? o.sigma1 : o.sigma;
  const double s2 = o.sigma2 > 0 ? o.sigma2 : o.sigma;
  return {s1, s2};
}

void add_2d_params(Table& t, const Options& o) {
  const auto [s1, s2] = diag_sigmas(o);
  t.param("q", o.q);
  t.param("sigma1", s1);
  t.param("sigma2", s2);
  t.param("beta", o.beta);
}

double range_lo(const Options& o, double d) { return o.range.size() == 2 ? o.range[0] : d; }
double range_hi(const Options& o, double d) { return o.range.size() == 2 ? o.range[1] : d; }

Table cmd_kernel(const Options& o) {
  Table t;
  const int n = o.samples > 0 ? o.samples : 201;
  if (o.two_d) {
    add_2d_params(t, o);
    auto k = make_2d(o.q, diag_sigmas(o).first, diag_sigmas(o).second, o.beta);
    const auto xs = linspace(range_lo(o, -1.0), range_hi(o, 1.0), n);
    t.columns = {"x", "y", "value"};
    for (double x : xs) {
      for (double y : xs) {
        double v = 0;
        check(qg_kernel2d_eval(k.get(), x, y, &v));
        t.rows.push_back({x, y, v});
      }
    }
    return t;
  }
  add_1d_params(t, o);
  auto k = make_1d(o.q, o.sigma, o.beta);
  const auto xs = linspace(range_lo(o, -1.0), range_hi(o, 1.0), n);
  std::vector<double> v(xs.size());
  check(qg_kernel1d_eval(k.get(), xs.data(), xs.size(), v.data()));
  t.columns = {"x", "value", "gaussian"};
  for (std::size_t i = 0; i < xs.size(); ++i) t.rows.push_back({xs[i], v[i], qg_gaussian_ref_1d(o.sigma, xs[i])});
  return t;
}

Table cmd_ft1d(const Options& o) {
  Table t;
  add_1d_params(t, o);
  t.param("method", o.method);
  auto k = make_1d(o.q, o.sigma, o.beta);
  const auto ys = linspace(range_lo(o, -20.0), range_hi(o, 20.0), o.samples > 0 ? o.samples : 41);
  const std::size_t n = ys.size();
  std::vector<double> re(n), im(n), qre(n), qim(n);
  const bool analytic = o.method == "analytic" || o.method == "both";
  const bool quadrature = o.method == "quadrature" || o.method == "both";
  if (analytic) check(qg_ft1d_analytic(k.get(), ys.data(), n, re.data(), im.data()));
  if (quadrature) check(qg_ft1d_quadrature(k.get(), ys.data(), n, qre.data(), qim.data()));
  if (o.method == "both") {
    t.columns = {"y", "re", "im", "modulus", "quadrature_re", "abs_diff"};
    for (std::size_t i = 0; i < n; ++i) {
      t.rows.push_back({ys[i], re[i], im[i], std::hypot(re[i], im[i]), qre[i], std::abs(re[i] - qre[i])});
    }
  } else {
    const auto& r = analytic ? re : qre;
    const auto& m = analytic ? im : qim;
    t.columns = {"y", "re", "im", "modulus"};
    for (std::size_t i = 0; i < n; ++i) t.rows.push_back({ys[i], r[i], m[i], std::hypot(r[i], m[i])});
  }
  return t;
}

Table ft2d_table(const Options& o, const std::vector<double>& w) {
  Table t;
  add_2d_params(t, o);
  auto k = make_2d(o.q, diag_sigmas(o).first, diag_sigmas(o).second, o.beta);
  int m = 0;
  if (o.delta > 0) {
    check(qg_select_half_width(k.get(), o.step, o.delta, &m));
  } else {
    check(qg_grid_from_half_width(o.step, o.half_width, &m));
  }
  t.param("step", o.step);
  t.param("half_width", o.step * m);
  t.param("M", static_cast<double>(m));
  std::vector<double> re(w.size() * w.size()), im(re.size());
  check(qg_ft2d_discrete(k.get(), o.step, m, w.data(), w.size(), w.data(), w.size(), re.data(), im.data()));
  t.columns = {"omega1", "omega2", "re", "im", "modulus"};
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      const std::size_t idx = i * w.size() + j;
      t.rows.push_back({w[i], w[j], re[idx], im[idx], std::hypot(re[idx], im[idx])});
    }
  }
  return t;
}

Table cmd_ft2d(const Options& o) {
  return ft2d_table(o, linspace(range_lo(o, -2.0), range_hi(o, 2.0), o.samples > 0 ? o.samples : 129));
}

std::vector<Cell> window_row(double q, double sigma, double beta) {
  auto k = make_1d(q, sigma, beta);
  qg_window_report w{};
  check(qg_window(k.get(), &w));
  qg_heisenberg h{};
  check(qg_heisenberg_check(k.get(), &h));
  return {q,           w.center,   w.l2_norm, w.x_weighted_norm, w.delta,
          w.ft_bound,  h.lhs,      h.rhs,     std::string(h.satisfied ? "true" : "false"),
          std::string(regime_name(w.regime))};
}

Table cmd_window(const Options& o) {
  Table t;
  add_1d_params(t, o);
  t.columns = {"q", "center", "l2_norm", "x_weighted_norm", "delta", "ft_bound", "heisenberg_lhs", "heisenberg_rhs",
               "heisenberg_satisfied", "regime"};
  t.rows.push_back(window_row(o.q, o.sigma, o.beta));
  return t;
}

Table cutoff_table(const std::vector<double>& qs, double sigma, double beta, double threshold) {
  Table t;
  t.param("sigma", sigma);
  t.param("beta", beta);
  t.param("threshold", threshold);
  t.columns = {"q", "cutoff"};
  for (double q : qs) {
    bool valid = true;
    const std::string why = violations(q, sigma, beta, &valid);
    if (!valid) {
      t.notes.push_back("skipped q=" + fmt(q) + ": " + why);
      continue;
    }
    auto k = make_1d(q, sigma, beta);
    double y = 0;
    check(qg_cutoff_frequency(k.get(), threshold, &y));
    t.rows.push_back({q, y});
  }
  return t;
}

Table cmd_cutoff(const Options& o) {
  if (o.range.size() == 2) {
    return cutoff_table(linspace(o.range[0], o.range[1], o.samples > 0 ? o.samples : 20), o.sigma, o.beta,
                        o.threshold);
  }
  bool valid = true;
  const std::string why = violations(o.q, o.sigma, o.beta, &valid);
  if (!valid) throw Failure{kValidity, "validity-error: " + why};
  return cutoff_table({o.q}, o.sigma, o.beta, o.threshold);
}

Table cmd_taps(const Options& o) {
  Table t;
  t.param("step", o.step);
  t.param("normalize", std::string(o.normalize ? "true" : "false"));
  if (o.two_d) {
    add_2d_params(t, o);
    auto k = make_2d(o.q, diag_sigmas(o).first, diag_sigmas(o).second, o.beta);
    int nx = 0, ny = 0;
    check(qg_taps2d(k.get(), o.step, o.normalize, nullptr, 0, &nx, &ny));
    std::vector<double> v(static_cast<std::size_t>(nx) * ny);
    check(qg_taps2d(k.get(), o.step, o.normalize, v.data(), v.size(), &nx, &ny));
    t.columns = {"i", "j", "x", "y", "value"};
    for (int i = 0; i < nx; ++i) {
      for (int j = 0; j < ny; ++j) {
        const int di = i - nx / 2, dj = j - ny / 2;
        t.rows.push_back({double(di), double(dj), di * o.step, dj * o.step, v[static_cast<std::size_t>(i) * ny + j]});
      }
    }
    return t;
  }
  add_1d_params(t, o);
  auto k = make_1d(o.q, o.sigma, o.beta);
  std::size_t n = 0;
  check(qg_taps1d(k.get(), o.step, o.normalize, nullptr, 0, &n));
  std::vector<double> v(n);
  check(qg_taps1d(k.get(), o.step, o.normalize, v.data(), v.size(), &n));
  t.columns = {"index", "x", "value"};
  const int half = static_cast<int>(n / 2);
  for (std::size_t i = 0; i < n; ++i) {
    const int d = static_cast<int>(i) - half;
    t.rows.push_back({double(d), d * o.step, v[i]});
  }
  return t;
}

// ---------------------------------------------------------------- figures

constexpr double kFigSigma = 0.1;
constexpr double kFigBeta = 0.5;

std::vector<double> heavy_q_grid() { return q_grid(1.05, 0.05, 26); }  // 1.05 .. 2.30

std::vector<double> compact_q_grid() {
  auto v = q_grid(-2.0, 0.05, 60);  // -2 .. 0.95
  v.push_back(0.99);
  return v;
}

double gaussian_delta() { return kFigSigma / std::sqrt(2.0); }
double gaussian_ft_bound() { return 1.0 / (4.0 * kPi * kFigSigma * std::sqrt(2.0)); }

Table figure_window(const std::vector<double>& qs, bool bound) {
  Table t;
  t.param("sigma", kFigSigma);
  t.param("beta", kFigBeta);
  t.columns = {"q", bound ? "ft_bound" : "delta", bound ? "gaussian_ft_bound" : "gaussian_delta"};
  for (double q : qs) {
    auto k = make_1d(q, kFigSigma, kFigBeta);
    qg_window_report w{};
    check(qg_window(k.get(), &w));
    t.rows.push_back({q, bound ? w.ft_bound : w.delta, bound ? gaussian_ft_bound() : gaussian_delta()});
  }
  return t;
}

Table figure_space(const std::vector<double>& qs) {
  Table t;
  t.param("sigma", kFigSigma);
  t.param("beta", kFigBeta);
  const auto xs = linspace(-0.5, 0.5, 401);
  t.columns = {"x"};
  std::vector<std::vector<double>> cols;
  for (double q : qs) {
    t.columns.push_back("q=" + fmt(q));
    auto k = make_1d(q, kFigSigma, kFigBeta);
    std::vector<double> v(xs.size());
    check(qg_kernel1d_eval(k.get(), xs.data(), xs.size(), v.data()));
    cols.push_back(std::move(v));
  }
  t.columns.push_back("gaussian");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<Cell> row{xs[i]};
    for (const auto& c : cols) row.push_back(c[i]);
    row.push_back(qg_gaussian_ref_1d(kFigSigma, xs[i]));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table figure_spectrum(const std::vector<double>& qs, bool modulus) {
  Table t;
  t.param("sigma", kFigSigma);
  t.param("beta", kFigBeta);
  t.param("quantity", std::string(modulus ? "abs(F)" : "F"));
  const auto ys = linspace(-40.0, 40.0, 401);
  t.columns = {"y"};
  std::vector<std::vector<double>> cols;
  for (double q : qs) {
    t.columns.push_back("q=" + fmt(q));
    auto k = make_1d(q, kFigSigma, kFigBeta);
    std::vector<double> re(ys.size());
    check(qg_ft1d_analytic(k.get(), ys.data(), ys.size(), re.data(), nullptr));
    if (modulus) {
      for (double& r : re) r = std::abs(r);
    }
    cols.push_back(std::move(re));
  }
  t.columns.push_back("gaussian");
  std::vector<double> g(ys.size());
  check(qg_ft_gaussian_ref(kFigSigma, ys.data(), ys.size(), g.data()));
  for (std::size_t i = 0; i < ys.size(); ++i) {
    std::vector<Cell> row{ys[i]};
    for (const auto& c : cols) row.push_back(c[i]);
    row.push_back(g[i]);
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table figure_6(const Options& o) {
  Options f = o;
  f.q = 0.5;
  f.beta = 1.0;
  // Covariance sqrt(8) I, i.e. standard deviation 8^(1/4) per axis.
  f.sigma = std::pow(8.0, 0.25);
  f.sigma1 = f.sigma2 = 0.0;
  f.delta = 0.0;
  std::vector<double> w(129);
  for (int i = 0; i < 129; ++i) w[i] = -2.0 + i / 32.0;
  Table t = ft2d_table(f, w);
  t.param("covariance", std::string("sqrt(8)*I"));
  // Keep only the modulus, as plotted.
  for (auto& r : t.rows) r = {r[0], r[1], r[4]};
  t.columns = {"omega1", "omega2", "modulus"};
  return t;
}

Table cmd_figure(const Options& o) {
  const std::string& id = o.figure;
  Table t;
  if (id == "1a") t = figure_window(heavy_q_grid(), false);
  else if (id == "1b") t = figure_window(heavy_q_grid(), true);
  else if (id == "2a") t = figure_space({1.41, 2.0, 2.3});
  else if (id == "2b") t = figure_spectrum({1.41, 2.0, 2.3}, true);
  else if (id == "3a") t = figure_window(compact_q_grid(), false);
  else if (id == "3b") t = figure_window(compact_q_grid(), true);
  else if (id == "4a") t = figure_space({0.1, 0.5, 0.99});
  else if (id == "4b") t = figure_spectrum({0.1, 0.5, 0.99}, false);
  else if (id == "5a") t = cutoff_table(q_grid(1.05, 0.05, 38), kFigSigma, kFigBeta, 0.1);  // 1.05 .. 2.90
  else if (id == "5b") t = cutoff_table(compact_q_grid(), kFigSigma, kFigBeta, 0.1);
  else if (id == "6") t = figure_6(o);
  else throw Failure{kUsage, "unknown figure id: " + id};
  t.params.insert(t.params.begin(), {"figure", id});
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-Gaussian kernels, their Fourier transforms and localization analysis"};
  app.require_subcommand(1);
  Options o;

  auto common_1d = [&](CLI::App* c) {
    c->add_option("--q", o.q, "entropic index")->capture_default_str();
    c->add_option("--sigma", o.sigma, "scale (2D: isotropic standard deviation)")->capture_default_str();
    c->add_option("--beta", o.beta, "shape parameter")->capture_default_str();
  };
  auto common_2d = [&](CLI::App* c) {
    c->add_option("--sigma1", o.sigma1, "2D: standard deviation along x");
    c->add_option("--sigma2", o.sigma2, "2D: standard deviation along y");
  };
  auto output = [&](CLI::App* c) {
    c->add_option("--out", o.out, "output file (default stdout)");
    c->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  };
  auto sweep = [&](CLI::App* c) {
    c->add_option("--range", o.range, "lo,hi")->expected(2)->delimiter(',');
    c->add_option("--samples", o.samples, "number of samples")->check(CLI::PositiveNumber);
  };

  auto* kernel = app.add_subcommand("kernel", "sample the kernel");
  common_1d(kernel);
  common_2d(kernel);
  sweep(kernel);
  output(kernel);
  kernel->add_flag("--2d", o.two_d, "two-dimensional kernel with Sigma = diag(sigma1^2, sigma2^2)");

  auto* ft1d = app.add_subcommand("ft1d", "1D Fourier transform");
  common_1d(ft1d);
  sweep(ft1d);
  output(ft1d);
  ft1d->add_option("--method", o.method, "analytic, quadrature or both")
      ->check(CLI::IsMember({"analytic", "quadrature", "both"}))
      ->capture_default_str();

  auto* ft2d = app.add_subcommand("ft2d", "discrete 2D Fourier transform");
  common_1d(ft2d);
  common_2d(ft2d);
  sweep(ft2d);
  output(ft2d);
  ft2d->add_option("--step", o.step, "sampling step T")->capture_default_str();
  ft2d->add_option("--half-width", o.half_width, "spatial half-width; M = ceil(half_width / T)")->capture_default_str();
  ft2d->add_option("--delta", o.delta, "choose M as the smallest index with G(MT, 0) < delta");

  auto* window = app.add_subcommand("window", "window radius, norms and Heisenberg check");
  common_1d(window);
  output(window);

  auto* cutoff = app.add_subcommand("cutoff", "cut-off frequency; a q sweep with --range");
  common_1d(cutoff);
  sweep(cutoff);
  output(cutoff);
  cutoff->add_option("--threshold", o.threshold, "modulus threshold in (0, 1)")->capture_default_str();

  auto* figure = app.add_subcommand("figure", "reproduce a figure's data");
  figure->add_option("id", o.figure, "1a 1b 2a 2b 3a 3b 4a 4b 5a 5b 6")->required();
  figure->add_option("--step", o.step, "figure 6: sampling step T")->capture_default_str();
  figure->add_option("--half-width", o.half_width, "figure 6: spatial half-width")->capture_default_str();
  output(figure);

  auto* taps = app.add_subcommand("taps", "sampled filter taps");
  common_1d(taps);
  common_2d(taps);
  output(taps);
  taps->add_option("--step", o.step, "tap spacing T")->capture_default_str();
  taps->add_flag("--normalize", o.normalize, "rescale so the taps sum to 1");
  taps->add_flag("--2d", o.two_d, "two-dimensional taps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    Table t;
    if (*kernel) t = cmd_kernel(o);
    else if (*ft1d) t = cmd_ft1d(o);
    else if (*ft2d) t = cmd_ft2d(o);
    else if (*window) t = cmd_window(o);
    else if (*cutoff) t = cmd_cutoff(o);
    else if (*figure) t = cmd_figure(o);
    else if (*taps) t = cmd_taps(o);
    emit(t, o.format, o.out);
  } catch (const Failure& f) {
    std::cerr << "qgauss: " << f.message << "\n";
    return f.exit_code;
  }
  return kOk;
}
