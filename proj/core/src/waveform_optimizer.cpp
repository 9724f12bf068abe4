// Copyright 2026 The rykick Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rykick/waveform_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numeric>

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <boost/math/quadrature/gauss.hpp>

#include "rykick/constants.hpp"
#include "rykick/detail/divided_exp.hpp"
#include "rykick/error.hpp"

namespace rykick {

using cd = std::complex<double>;
using detail::nested_oscillatory_integral;
using detail::oscillatory_integral;

const char* to_string(Method m) {
  return m == Method::kSlices ? "slices" : "fourier";
}

const char* to_string(Boundary b) {
  switch (b) {
    case Boundary::kNone: return "none";
    case Boundary::kZeroEndpoints: return "zero_endpoints";
    case Boundary::kAntisymmetric: return "antisymmetric";
  }
  return "?";
}

Method parse_method(const std::string& s) {
  if (s == "slices") return Method::kSlices;
  if (s == "fourier") return Method::kFourier;
  throw Error(ErrorCode::kValidation, "unknown method '" + s + "'");
}

Boundary parse_boundary(const std::string& s) {
  if (s == "none") return Boundary::kNone;
  if (s == "zero_endpoints") return Boundary::kZeroEndpoints;
  if (s == "antisymmetric") return Boundary::kAntisymmetric;
  throw Error(ErrorCode::kValidation, "unknown boundary '" + s + "'");
}

namespace {

// Exponential-sum expansion of every Fourier column (sine terms, then cosine).
std::vector<std::vector<ExpTerm>> fourier_columns(double gate_time, int n_terms) {
  std::vector<std::vector<ExpTerm>> cols;
  cols.reserve(2 * static_cast<std::size_t>(n_terms));
  for (int n = 1; n <= n_terms; ++n) cols.push_back(sine_terms(n * constants::kPi / gate_time));
  for (int n = 1; n <= n_terms; ++n) cols.push_back(cosine_terms(n * constants::kPi / gate_time));
  return cols;
}

// One complex closure row per (sigma, k); appended as Re and Im rows.
template <typename ColumnFn>
void append_closure_rows(const GateModel& model, int n_cols, ColumnFn column,
                         std::vector<Eigen::RowVectorXd>& rows, std::vector<std::string>& labels) {
  for (PairState s : kPairStates) {
    const auto& modes = model.of(s);
    for (std::size_t k = 0; k < modes.size(); ++k) {
      Eigen::RowVectorXd re(n_cols);
      Eigen::RowVectorXd im(n_cols);
      for (int j = 0; j < n_cols; ++j) {
        const cd v = modes[k].coupling * column(modes[k].frequency, j);
        re[j] = v.real();
        im[j] = v.imag();
      }
      const std::string base = std::string(to_string(s)) + "/mode" + std::to_string(k + 1);
      rows.push_back(std::move(re));
      labels.push_back(base + "/re");
      rows.push_back(std::move(im));
      labels.push_back(base + "/im");
    }
  }
}

ClosureSystem assemble(Method method, Boundary boundary, double gate_time, int n_closure,
                       std::vector<Eigen::RowVectorXd> rows, std::vector<std::string> row_labels,
                       std::vector<std::string> column_labels) {
  ClosureSystem sys;
  sys.method = method;
  sys.boundary = boundary;
  sys.gate_time = gate_time;
  sys.n_closure_rows = n_closure;
  sys.matrix.resize(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(column_labels.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) sys.matrix.row(static_cast<Eigen::Index>(i)) = rows[i];
  sys.row_labels = std::move(row_labels);
  sys.column_labels = std::move(column_labels);
  if (!sys.matrix.allFinite()) throw Error(ErrorCode::kValidation, "closure matrix not finite");
  return sys;
}

// Integration domain and shape of one waveform column.
struct ColumnShape {
  double a = 0.0;
  double b = 0.0;
  int panels = 1;
  std::function<double(double)> phi;
};

constexpr int kSeriesTerms = 40;
constexpr double kMergeTolerance = 1e-12;
constexpr double kMaxClusterSpread = 2.0;  // (nu_max - nu_min) t_g

// Row of the divided difference over `nodes` (in nu) of int phi_j e^{-i nu t} dt,
// up to the constant factor (-i t_g)^m:
//   int phi_j(t) e^{-i nubar t} sum_p h_p(D) (t/t_g)^{m+p} / (p+m)! dt
// with D_i = -i (nu_i - nubar) t_g and h_p the complete homogeneous polynomials.
Eigen::RowVectorXcd divided_difference_row(const std::vector<double>& nodes, double t_g, int n_cols,
                                           const std::function<ColumnShape(int)>& shape) {
  const int m = static_cast<int>(nodes.size()) - 1;
  double nubar = 0.0;
  for (double nu : nodes) nubar += nu;
  nubar /= static_cast<double>(nodes.size());
  std::vector<cd> h(kSeriesTerms + 1, cd(0.0));
  h[0] = 1.0;
  for (double nu : nodes) {
    const cd d(0.0, -(nu - nubar) * t_g);
    for (int p = 1; p <= kSeriesTerms; ++p) h[static_cast<std::size_t>(p)] += d * h[static_cast<std::size_t>(p - 1)];
  }
  double fact = 1.0;
  for (int i = 2; i <= m; ++i) fact *= i;
  std::vector<cd> c(kSeriesTerms + 1);
  for (int p = 0; p <= kSeriesTerms; ++p) {
    if (p > 0) fact *= (p + m);
    c[static_cast<std::size_t>(p)] = h[static_cast<std::size_t>(p)] / fact;
  }
  auto kernel = [&](double t) {
    const double tau = t / t_g;
    cd acc = 0.0;
    for (int p = kSeriesTerms; p >= 0; --p) acc = acc * tau + c[static_cast<std::size_t>(p)];
    return std::polar(std::pow(tau, m), -nubar * t) * acc;
  };
  Eigen::RowVectorXcd row(n_cols);
  for (int j = 0; j < n_cols; ++j) {
    const ColumnShape sh = shape(j);
    const double w = (sh.b - sh.a) / sh.panels;
    cd sum = 0.0;
    for (int q = 0; q < sh.panels; ++q) {
      const double lo = sh.a + q * w;
      sum += boost::math::quadrature::gauss<double, 10>::integrate(
          [&](double t) { return sh.phi(t) * kernel(t); }, lo, lo + w);
    }
    row[j] = sum;
  }
  return row;
}

// Closure constraints mode by mode: frequencies of one mode index across the
// internal states (zero-coupling states contribute nothing) are merged when
// equal and expressed through divided differences when clustered.
Eigen::MatrixXd conditioned_closure(const GateModel& model, double t_g, int n_cols,
                                    const std::function<cd(double, int)>& plain,
                                    const std::function<ColumnShape(int)>& shape) {
  std::size_t n_modes = 0;
  for (const auto& c : model.couplings) n_modes = std::max(n_modes, c.size());
  std::vector<Eigen::RowVectorXcd> rows;
  auto plain_row = [&](double nu) {
    Eigen::RowVectorXcd r(n_cols);
    for (int j = 0; j < n_cols; ++j) r[j] = plain(nu, j);
    return r;
  };
  for (std::size_t k = 0; k < n_modes; ++k) {
    std::vector<double> nu;
    for (PairState s : kPairStates) {
      const auto& modes = model.of(s);
      if (k < modes.size() && modes[k].coupling != 0.0) nu.push_back(modes[k].frequency);
    }
    std::sort(nu.begin(), nu.end());
    std::vector<double> nodes;
    for (double v : nu)
      if (nodes.empty() || v - nodes.back() > kMergeTolerance * v) nodes.push_back(v);
    if (nodes.empty()) continue;
    if (nodes.size() == 1 || (nodes.back() - nodes.front()) * t_g > kMaxClusterSpread) {
      for (double v : nodes) rows.push_back(plain_row(v));
      continue;
    }
    rows.push_back(plain_row(nodes.front()));
    for (std::size_t m = 1; m < nodes.size(); ++m) {
      const std::vector<double> sub(nodes.begin(), nodes.begin() + static_cast<std::ptrdiff_t>(m + 1));
      rows.push_back(divided_difference_row(sub, t_g, n_cols, shape));
    }
  }
  Eigen::MatrixXd out(2 * static_cast<Eigen::Index>(rows.size()), n_cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.row(2 * static_cast<Eigen::Index>(i)) = rows[i].real();
    out.row(2 * static_cast<Eigen::Index>(i) + 1) = rows[i].imag();
  }
  return out;
}

Eigen::MatrixXd append_rows(const Eigen::MatrixXd& top, const Eigen::MatrixXd& full, int from) {
  Eigen::MatrixXd out(top.rows() + full.rows() - from, full.cols());
  out << top, full.bottomRows(full.rows() - from);
  return out;
}

Eigen::RowVectorXd unit_row(int n, int j) {
  Eigen::RowVectorXd r = Eigen::RowVectorXd::Zero(n);
  r[j] = 1.0;
  return r;
}

void require_gate_time(double gate_time) {
  if (!(std::isfinite(gate_time) && gate_time > 0.0))
    throw Error(ErrorCode::kValidation, "gate time must be > 0");
}

}  // namespace

ClosureSystem build_closure_system_slices(const GateModel& model, double gate_time, int n_slices,
                                          Boundary boundary) {
  require_gate_time(gate_time);
  if (n_slices < 1) throw Error(ErrorCode::kValidation, "n_slices must be positive");
  const double h = gate_time / n_slices;
  std::vector<Eigen::RowVectorXd> rows;
  std::vector<std::string> labels;
  auto column = [h](double nu, int j) {
    return std::polar(1.0, -nu * j * h) * oscillatory_integral(-nu, h);
  };
  append_closure_rows(model, n_slices, column, rows, labels);
  const int n_closure = static_cast<int>(rows.size());
  if (boundary != Boundary::kNone) {
    rows.push_back(unit_row(n_slices, 0));
    labels.push_back("boundary/first");
    rows.push_back(unit_row(n_slices, n_slices - 1));
    labels.push_back("boundary/last");
  }
  if (boundary == Boundary::kAntisymmetric) {
    for (int i = 1; i < n_slices - 1 - i; ++i) {
      Eigen::RowVectorXd r = unit_row(n_slices, i);
      r[n_slices - 1 - i] = 1.0;
      rows.push_back(std::move(r));
      labels.push_back("antisymmetric/" + std::to_string(i + 1));
    }
    if (n_slices % 2 == 1) {
      rows.push_back(unit_row(n_slices, n_slices / 2));
      labels.push_back("antisymmetric/center");
    }
  }
  if (n_slices <= static_cast<int>(rows.size()) + 1)
    throw Error(ErrorCode::kInsufficientSlices,
                "n_t = " + std::to_string(n_slices) + " leaves no room beyond " +
                    std::to_string(rows.size()) + " constraint rows");
  std::vector<std::string> cols;
  cols.reserve(static_cast<std::size_t>(n_slices));
  for (int j = 0; j < n_slices; ++j) cols.push_back("slice" + std::to_string(j + 1));
  ClosureSystem sys = assemble(Method::kSlices, boundary, gate_time, n_closure, std::move(rows),
                               std::move(labels), std::move(cols));
  const Eigen::MatrixXd cond = conditioned_closure(
      model, gate_time, n_slices, column,
      [h](int j) { return ColumnShape{j * h, (j + 1) * h, 1, [](double) { return 1.0; }}; });
  sys.conditioned = append_rows(cond, sys.matrix, n_closure);
  return sys;
}

ClosureSystem build_closure_system_fourier(const GateModel& model, double gate_time, int n_terms,
                                           Boundary boundary) {
  require_gate_time(gate_time);
  if (n_terms < 1) throw Error(ErrorCode::kValidation, "n_terms must be positive");
  const int n_cols = 2 * n_terms;
  const auto basis = fourier_columns(gate_time, n_terms);
  std::vector<Eigen::RowVectorXd> rows;
  std::vector<std::string> labels;
  auto column = [&](double nu, int j) {
    cd sum = 0.0;
    for (const ExpTerm& t : basis[static_cast<std::size_t>(j)])
      sum += t.coefficient * oscillatory_integral(t.rate - nu, gate_time);
    return sum;
  };
  append_closure_rows(model, n_cols, column, rows, labels);
  const int n_closure = static_cast<int>(rows.size());
  if (boundary != Boundary::kNone) {
    // E(0) = sum A^c_n and E(t_g) = sum (-1)^n A^c_n.
    Eigen::RowVectorXd start = Eigen::RowVectorXd::Zero(n_cols);
    Eigen::RowVectorXd end = Eigen::RowVectorXd::Zero(n_cols);
    for (int n = 1; n <= n_terms; ++n) {
      start[n_terms + n - 1] = 1.0;
      end[n_terms + n - 1] = (n % 2 == 0) ? 1.0 : -1.0;
    }
    rows.push_back(std::move(start));
    labels.push_back("boundary/start");
    rows.push_back(std::move(end));
    labels.push_back("boundary/end");
  }
  if (boundary == Boundary::kAntisymmetric) {
    // Odd about t_g/2: sine terms with odd n and cosine terms with even n vanish.
    for (int n = 1; n <= n_terms; ++n) {
      if (n % 2 == 1) {
        rows.push_back(unit_row(n_cols, n - 1));
        labels.push_back("antisymmetric/s" + std::to_string(n));
      } else {
        rows.push_back(unit_row(n_cols, n_terms + n - 1));
        labels.push_back("antisymmetric/c" + std::to_string(n));
      }
    }
  }
  if (n_cols <= static_cast<int>(rows.size()) + 1)
    throw Error(ErrorCode::kInsufficientTerms,
                "2 n_f = " + std::to_string(n_cols) + " leaves no room beyond " +
                    std::to_string(rows.size()) + " constraint rows");
  std::vector<std::string> cols;
  cols.reserve(static_cast<std::size_t>(n_cols));
  for (int n = 1; n <= n_terms; ++n) cols.push_back("s" + std::to_string(n));
  for (int n = 1; n <= n_terms; ++n) cols.push_back("c" + std::to_string(n));
  ClosureSystem sys = assemble(Method::kFourier, boundary, gate_time, n_closure, std::move(rows),
                               std::move(labels), std::move(cols));
  double nu_max = 0.0;
  for (const auto& modes : model.couplings)
    for (const ModeCoupling& m : modes) nu_max = std::max(nu_max, m.frequency);
  const Eigen::MatrixXd cond = conditioned_closure(
      model, gate_time, n_cols, column, [&](int j) {
        const int n = j % n_terms + 1;
        const double w = n * constants::kPi / gate_time;
        const bool sine = j < n_terms;
        const int panels = 1 + static_cast<int>(std::ceil((w + nu_max) * gate_time / 0.5));
        return ColumnShape{0.0, gate_time, panels, [w, sine](double t) {
                             return sine ? std::sin(w * t) : std::cos(w * t);
                           }};
      });
  sys.conditioned = append_rows(cond, sys.matrix, n_closure);
  return sys;
}

ClosureSystem build_closure_system(const GateModel& model, double gate_time,
                                   const OptimizerOptions& options) {
  return options.method == Method::kSlices
             ? build_closure_system_slices(model, gate_time, options.n_slices, options.boundary)
             : build_closure_system_fourier(model, gate_time, options.n_terms, options.boundary);
}

NullSpaceBasis null_space(const ClosureSystem& system, double tolerance) {
  if (!(tolerance > 0.0)) throw Error(ErrorCode::kValidation, "tolerance must be > 0");
  const Eigen::MatrixXd& m = system.conditioned.rows() > 0 ? system.conditioned : system.matrix;
  const Eigen::Index n_cols = m.cols();
  std::vector<Eigen::Index> kept;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    if (m.row(i).norm() > 0.0) kept.push_back(i);
  Eigen::MatrixXd a(static_cast<Eigen::Index>(kept.size()), n_cols);
  for (std::size_t r = 0; r < kept.size(); ++r) {
    const auto row = m.row(kept[r]);
    a.row(static_cast<Eigen::Index>(r)) = row / row.norm();
  }
  Eigen::Index rank = 0;
  Eigen::MatrixXd v;
  if (a.rows() == 0) {
    v = Eigen::MatrixXd::Identity(n_cols, n_cols);
  } else {
    Eigen::BDCSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
    const Eigen::VectorXd& sv = svd.singularValues();
    const double cut = tolerance * sv[0];
    while (rank < sv.size() && sv[rank] > cut) ++rank;
    v = svd.matrixV();
  }
  if (rank >= n_cols)
    throw Error(ErrorCode::kEmptyNullSpace, "closure conditions admit no nonzero waveform");
  return {v.rightCols(n_cols - rank)};
}

Eigen::MatrixXd waveform_gram(const ClosureSystem& system) {
  const Eigen::Index n = system.matrix.cols();
  if (system.method == Method::kSlices)
    return Eigen::MatrixXd::Identity(n, n) / static_cast<double>(n);
  const double t_g = system.gate_time;
  const auto basis = fourier_columns(t_g, static_cast<int>(n / 2));
  Eigen::MatrixXd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      cd acc = 0.0;
      for (const ExpTerm& p : basis[static_cast<std::size_t>(i)])
        for (const ExpTerm& q : basis[static_cast<std::size_t>(j)])
          acc += p.coefficient * q.coefficient * oscillatory_integral(p.rate + q.rate, t_g);
      g(i, j) = g(j, i) = acc.real() / t_g;
    }
  }
  return g;
}

NullSpaceBasis metric_orthonormalize(const NullSpaceBasis& basis, const ClosureSystem& system,
                                     double tolerance) {
  const Eigen::MatrixXd gram = waveform_gram(system);
  Eigen::MatrixXd m = basis.vectors.transpose() * gram * basis.vectors;
  m = 0.5 * (m + m.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  const Eigen::VectorXd& lam = es.eigenvalues();
  const double top = lam.maxCoeff();
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < lam.size(); ++i)
    if (lam[i] > tolerance * top) keep.push_back(i);
  if (keep.empty() || !(top > 0.0))
    throw Error(ErrorCode::kEmptyNullSpace, "null space contains only zero waveforms");
  NullSpaceBasis out;
  out.vectors.resize(basis.vectors.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c)
    out.vectors.col(static_cast<Eigen::Index>(c)) =
        basis.vectors * es.eigenvectors().col(keep[c]) / std::sqrt(lam[keep[c]]);
  return out;
}

Eigen::MatrixXd phase_kernel(const GateModel& model, const ClosureSystem& system) {
  const Eigen::Index n = system.matrix.cols();
  const double t_g = system.gate_time;
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
  if (system.method == Method::kSlices) {
    const double h = t_g / static_cast<double>(n);
    std::vector<cd> s(static_cast<std::size_t>(n));
    for (PairState st : kPairStates) {
      for (const ModeCoupling& m : model.of(st)) {
        const double w = phase_sign(st) * m.coupling * m.coupling;
        const double nu = m.frequency;
        const cd base = oscillatory_integral(nu, h);
        for (Eigen::Index j = 0; j < n; ++j)
          s[static_cast<std::size_t>(j)] = std::polar(1.0, nu * static_cast<double>(j) * h) * base;
        const double diag = nested_oscillatory_integral(nu, -nu, h).imag();
        for (Eigen::Index i = 0; i < n; ++i) {
          q(i, i) += w * diag;
          for (Eigen::Index j = 0; j < i; ++j) {
            const double v = 0.5 * w *
                             (std::conj(s[static_cast<std::size_t>(i)]) *
                              s[static_cast<std::size_t>(j)]).imag();
            q(i, j) += v;
            q(j, i) += v;
          }
        }
      }
    }
    return q;
  }
  const auto basis = fourier_columns(t_g, static_cast<int>(n / 2));
  for (PairState st : kPairStates) {
    for (const ModeCoupling& m : model.of(st)) {
      const double w = phase_sign(st) * m.coupling * m.coupling;
      const double nu = m.frequency;
      for (Eigen::Index i = 0; i < n; ++i) {      // inner (earlier) column
        for (Eigen::Index j = 0; j < n; ++j) {    // outer column
          cd acc = 0.0;
          for (const ExpTerm& p : basis[static_cast<std::size_t>(i)])
            for (const ExpTerm& r : basis[static_cast<std::size_t>(j)])
              acc += p.coefficient * r.coefficient *
                     nested_oscillatory_integral(p.rate + nu, r.rate - nu, t_g);
          q(i, j) += w * acc.imag();
        }
      }
    }
  }
  return 0.5 * (q + q.transpose());
}

PhaseQuadraticForm phase_matrix(const NullSpaceBasis& basis, const GateModel& model,
                                const ClosureSystem& system) {
  if (basis.dimension() == 0) throw Error(ErrorCode::kEmptyNullSpace, "empty basis");
  const Eigen::MatrixXd q = phase_kernel(model, system);
  Eigen::MatrixXd p = basis.vectors.transpose() * q * basis.vectors;
  return {0.5 * (p + p.transpose())};
}

namespace {

Waveform make_waveform(const ClosureSystem& system, const Eigen::VectorXd& x) {
  const std::vector<double> coeffs(x.data(), x.data() + x.size());
  if (system.method == Method::kSlices) return Waveform::slices(system.gate_time, coeffs);
  const auto half = static_cast<std::ptrdiff_t>(coeffs.size() / 2);
  return Waveform::fourier(system.gate_time,
                           std::vector<double>(coeffs.begin(), coeffs.begin() + half),
                           std::vector<double>(coeffs.begin() + half, coeffs.end()),
                           system.boundary != Boundary::kNone);
}

// Sign convention shared by both representations: int E(t) (1 - t/t_g) dt > 0,
// falling back to the first non-negligible midpoint sample.
double sign_overlap(const Waveform& w) {
  constexpr int kSamples = 4096;
  const double h = w.duration() / kSamples;
  double overlap = 0.0;
  double scale = 0.0;
  double first = 0.0;
  std::vector<double> v(kSamples);
  for (int i = 0; i < kSamples; ++i) {
    const double t = (i + 0.5) * h;
    v[static_cast<std::size_t>(i)] = w.value(t);
    overlap += v[static_cast<std::size_t>(i)] * (1.0 - t / w.duration());
    scale += std::abs(v[static_cast<std::size_t>(i)]);
  }
  if (std::abs(overlap) > 1e-9 * scale) return overlap;
  const double big = *std::max_element(v.begin(), v.end(), [](double a, double b) {
    return std::abs(a) < std::abs(b);
  });
  for (double x : v)
    if (std::abs(x) > 1e-6 * std::abs(big)) return x;
  return first;
}

}  // namespace

OptimalWaveform optimize(const PhaseQuadraticForm& form, const NullSpaceBasis& basis,
                         const ClosureSystem& system, double degeneracy_tolerance) {
  const Eigen::Index d = form.matrix.rows();
  if (d == 0 || d != basis.vectors.cols())
    throw Error(ErrorCode::kEmptyNullSpace, "phase form does not match basis");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(form.matrix);
  const Eigen::VectorXd& lam = es.eigenvalues();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(d));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return std::abs(lam[a]) > std::abs(lam[b]);
  });
  OptimalWaveform out;
  out.method = system.method;
  out.null_dimension = static_cast<int>(d);
  out.top_eigenvalue = lam[order[0]];
  out.second_eigenvalue = d > 1 ? lam[order[1]] : 0.0;
  if (!(std::abs(out.top_eigenvalue) > 0.0))
    throw Error(ErrorCode::kNoConvergence, "phase form vanishes on the null space");
  out.degenerate = d > 1 && std::abs(out.top_eigenvalue) - std::abs(out.second_eigenvalue) <
                                degeneracy_tolerance * std::abs(out.top_eigenvalue);
  out.negative_phase = out.top_eigenvalue < 0.0;
  out.scale = std::sqrt(constants::kPi / std::abs(out.top_eigenvalue));

  Eigen::VectorXd c = es.eigenvectors().col(order[0]);
  Eigen::VectorXd x = basis.vectors * c;
  out.waveform = make_waveform(system, x);
  if (sign_overlap(out.waveform) < 0.0) {
    c = -c;
    x = -x;
  }
  out.basis_coefficients = c;
  out.column_coefficients = x * out.scale;
  out.waveform = make_waveform(system, out.column_coefficients);
  return out;
}

void rescale(OptimalWaveform& w, double factor) {
  w.scale *= factor;
  w.column_coefficients *= factor;
  w.waveform = w.waveform.scaled(factor);
}

SynthesisResult synthesize(const GateModel& model, double gate_time,
                           const OptimizerOptions& options) {
  const ClosureSystem system = build_closure_system(model, gate_time, options);
  const NullSpaceBasis raw = null_space(system, options.svd_tolerance);
  const NullSpaceBasis basis = metric_orthonormalize(raw, system, options.metric_tolerance);
  const PhaseQuadraticForm form = phase_matrix(basis, model, system);
  SynthesisResult r{optimize(form, basis, system, options.degeneracy_tolerance), {}};
  // Remove round-off left by the quadratic form with one direct evaluation.
  const double direct = std::abs(delta_phase(r.optimal.waveform, model));
  if (direct > 0.0) rescale(r.optimal, std::sqrt(constants::kPi / direct));
  r.report = gate_conditions(r.optimal.waveform, model, options.simulation);
  return r;
}

}  // namespace rykick
