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


// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (capped at 1 for ctest).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rykick/constants.hpp"
#include "rykick/crystal_modes.hpp"
#include "rykick/discrete_kick.hpp"
#include "rykick/error.hpp"
#include "rykick/feasibility.hpp"
#include "rykick/pair_scan.hpp"
#include "rykick/phase_dynamics.hpp"
#include "rykick/trap_model.hpp"
#include "rykick/waveform_optimizer.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace {

using namespace rykick;
using Clock = std::chrono::steady_clock;
using cd = std::complex<double>;

constexpr double kKhz = constants::kTwoPi * 1e3;
constexpr double kMhz = constants::kTwoPi * 1e6;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const GateModel& two_ion() {
  static const GateModel m =
      build_gate_model(2, {0, 1}, reference_trap(), calcium_ion(), calcium_49s());
  return m;
}

Outcome bare_frequencies_criterion() {
  const SecularFrequencies f = bare_frequencies(reference_trap(), calcium_ion());
  const double dx = f.omega_x / kKhz - 6000.0;
  const double dy = f.omega_y / kKhz - 6500.0;
  const double dz = f.omega_z / kKhz - 3953.0;
  const bool ok = std::abs(dx) <= 1.0 && std::abs(dy) <= 1.0 && std::abs(dz) <= 1.0;
  return {ok, fmt("(%.4f, %.4f, %.4f) MHz, deviations (%+.3f, %+.3f, %+.3f) kHz, limit 1 kHz",
                  f.omega_x / kMhz, f.omega_y / kMhz, f.omega_z / kMhz, dx, dy, dz)};
}

Outcome polarizability_shift_criterion() {
  const SecularFrequencies b = bare_frequencies(reference_trap(), calcium_ion());
  const SecularFrequencies s = shifted_frequencies(reference_trap(), calcium_ion(), calcium_49s());
  const double dx = (b.omega_x - s.omega_x) / kKhz;
  const double dz = (b.omega_z - s.omega_z) / kKhz;
  const bool okx = std::abs(dx / 53.0 - 1.0) <= 0.05;
  const bool okz = std::abs(dz / 2.4 - 1.0) <= 0.05;
  return {okx && okz, fmt("transverse %.2f kHz (target 53 +-5%%: %s), axial %.2f kHz (target 2.4 +-5%%: %s)",
                          dx, okx ? "ok" : "out", dz, okz ? "ok" : "out")};
}

double table_deviation(const TrapParameters& trap) {
  using S = InternalState;
  struct Row {
    std::vector<S> labels;
    double com;
    double rock;
  };
  const std::vector<Row> rows = {{{S::kGround, S::kGround}, 6000.0, 4514.0},
                                 {{S::kGround, S::kRydberg}, 5974.0, 4478.0},
                                 {{S::kRydberg, S::kRydberg}, 5947.0, 4443.0}};
  double worst = 0.0;
  for (const Row& r : rows) {
    const ModeStructure m =
        mode_structure(Direction::kX, {r.labels, calcium_ion(), calcium_49s()}, trap);
    worst = std::max(worst, std::abs(m.frequencies(0) / kKhz - r.com));
    worst = std::max(worst, std::abs(m.frequencies(1) / kKhz - r.rock));
  }
  return worst;
}

Outcome table_criterion() {
  const auto t0 = Clock::now();
  const TrapParameters tuned = tune_commensurate(reference_trap(), calcium_ion(), calcium_49s());
  const double dev_tuned = table_deviation(tuned);
  const double dev_untuned = table_deviation(reference_trap());
  const double ratio = commensurability_error(tuned, calcium_ion(), calcium_49s());
  const double dt = seconds_since(t0);
  return {dev_tuned <= 2.0 && dt < 1.0,
          fmt("tuned gamma_dc %.6e V/m^2, 4nu2-3nu1 rel %.1e, max deviation tuned %.2f kHz, untuned %.2f kHz "
              "(limit 2 kHz), %.3f s",
              tuned.gamma_dc, ratio, dev_tuned, dev_untuned, dt)};
}

Outcome four_kick_criterion() {
  const TrapParameters tuned = tune_commensurate(reference_trap(), calcium_ion(), calcium_49s());
  const GateModel model = build_gate_model(2, {0, 1}, tuned, calcium_ion(), calcium_49s());
  const FourKickPlan plan = build_four_kick(model);
  const GateReport r = gate_conditions(plan.waveform(), model);
  double mixed = 0.0;
  for (PairState s : {PairState::k0R, PairState::kR0})
    for (const ModeOutcome& m : r.states[index(s)].modes) mixed = std::max(mixed, std::abs(m.final_displacement));
  const double n00 = std::norm(r.states[index(PairState::k00)].modes[0].final_displacement);
  const double nrr = std::norm(r.states[index(PairState::kRR)].modes[0].final_displacement);
  const double loss = r.fidelity_terms.displacement_loss;
  const bool ok_tg = std::abs(plan.gate_time / 0.669e-6 - 1.0) <= 0.01;
  const bool ok_phi = std::abs(std::abs(r.delta_phi) - constants::kPi) <= 1e-6;
  const bool ok_closed = mixed < 1e-6;
  const bool ok_n = n00 >= 1e-4 && n00 <= 1e-3 && nrr >= 1e-4 && nrr <= 1e-3;
  const bool ok_loss = std::abs(std::log10(loss / 4e-4)) <= 1.0;
  return {ok_tg && ok_phi && ok_closed && ok_n && ok_loss,
          fmt("t_g %.4f us, amplitude %.2f V/m, |dphi|-pi %.1e, 0R/R0 max|beta| %.1e, "
              "COM n 00 %.2e RR %.2e, displacement infidelity %.2e",
              plan.gate_time * 1e6, plan.amplitude, std::abs(r.delta_phi) - constants::kPi, mixed, n00, nrr,
              loss)};
}

Outcome continuous_criterion() {
  const auto t0 = Clock::now();
  const SynthesisResult s = synthesize(two_ion(), 0.67e-6);
  const double dt = seconds_since(t0);
  double residual = 0.0;
  for (PairState st : kPairStates)
    for (const ModeCoupling& m : two_ion().of(st))
      residual = std::max(residual, std::abs(oracle::displacement(s.optimal.waveform, m, 0.67e-6)));
  const double dphi = oracle::delta_phase(s.optimal.waveform, two_ion());
  const bool ok = residual < 1e-8 && std::abs(std::abs(dphi) - constants::kPi) <= 1e-6 &&
                  std::abs(s.report.e_max / 150.0 - 1.0) <= 0.2 && dt < 10.0;
  return {ok, fmt("n_t 128: re-simulated closure %.1e, |dphi|-pi %.1e, e_max %.2f V/m (150 +-20%%), "
                  "x_max %.1f, %.3f s",
                  residual, std::abs(dphi) - constants::kPi, s.report.e_max, s.report.x_max, dt)};
}

Waveform from_columns(const ClosureSystem& sys, const Eigen::VectorXd& x) {
  const std::vector<double> v(x.data(), x.data() + x.size());
  if (sys.method == Method::kSlices) return Waveform::slices(sys.gate_time, v);
  const auto n = static_cast<long>(v.size() / 2);
  return Waveform::fourier(sys.gate_time, {v.begin(), v.begin() + n}, {v.begin() + n, v.end()});
}

Outcome oracle_criterion() {
  std::mt19937_64 rng(20260101);
  std::normal_distribution<double> nd;
  // Worst relative c^T P c error per representation. Slices are the gate;
  // Fourier coefficients cancel (null-space vectors reach ~30x the field
  // peak), which puts a ~1e-12 floor on per-state phases and is reported only.
  double worst[2] = {0.0, 0.0};
  int samples[2] = {0, 0};
  for (Method method : {Method::kSlices, Method::kFourier}) {
    OptimizerOptions o;
    o.method = method;
    // Fewer Fourier terms keep the nested quadrature affordable.
    if (method == Method::kFourier) o.n_terms = 16;
    const ClosureSystem sys = build_closure_system(two_ion(), 0.67e-6, o);
    const NullSpaceBasis basis = metric_orthonormalize(null_space(sys), sys);
    const PhaseQuadraticForm form = phase_matrix(basis, two_ion(), sys);
    const auto m = static_cast<std::size_t>(method);
    const int trials = method == Method::kSlices ? 50 : 25;
    for (int i = 0; i < trials; ++i) {
      Eigen::VectorXd c(basis.dimension());
      for (Eigen::Index k = 0; k < c.size(); ++k) c[k] = nd(rng);
      c.normalize();
      const double q = c.dot(form.matrix * c);
      const double direct = oracle::delta_phase(from_columns(sys, basis.vectors * c), two_ion());
      worst[m] = std::max(worst[m], std::abs(q - direct) / std::abs(direct));
      ++samples[m];
    }
  }
  double worst_beta = 0.0;
  int beta_samples = 0;
  std::uniform_real_distribution<double> tg(0.2e-6, 3e-6);
  for (int i = 0; i < 200; ++i) {
    const double t_g = tg(rng);
    const Waveform w = i % 2 == 0 ? oracle::random_slices(rng, t_g, 1 + i % 48, 200.0)
                                  : oracle::random_fourier(rng, t_g, 1 + i % 12, 100.0);
    const double t = std::uniform_real_distribution<double>(0.0, t_g)(rng);
    for (PairState s : kPairStates) {
      for (const ModeCoupling& m : two_ion().of(s)) {
        if (m.w == 0.0) continue;
        const cd b = displacement(w, m, t);
        const cd q = oracle::displacement(w, m, t);
        worst_beta = std::max(worst_beta, std::abs(b - q) / std::max(std::abs(q), 1e-3));
      }
    }
    ++beta_samples;
  }
  return {worst[0] <= 1e-9 && worst_beta <= 1e-10,
          fmt("c^T P c vs quadrature dphi over %d slice null-space waveforms: max rel %.1e (limit 1e-9), "
              "%d Fourier ones: max rel %.1e (not gated); beta vs quadrature over %d waveforms: max rel %.1e "
              "(limit 1e-10)",
              samples[0], worst[0], samples[1], worst[1], beta_samples, worst_beta)};
}

Outcome convergence_criterion() {
  OptimizerOptions s;
  s.n_slices = 256;
  s.boundary = Boundary::kNone;
  OptimizerOptions f = s;
  f.method = Method::kFourier;
  f.n_terms = 64;
  const SynthesisResult a = synthesize(two_ion(), 0.67e-6, s);
  const SynthesisResult b = synthesize(two_ion(), 0.67e-6, f);
  const auto field = a.optimal.waveform.slice_field();
  const double h = a.optimal.waveform.slice_duration();
  double diff = 0.0;
  double norm = 0.0;
  for (std::size_t i = 0; i < field.size(); ++i) {
    // Slice average of the Fourier waveform.
    const double t0 = static_cast<double>(i) * h;
    const double avg =
        oracle::gk([&](double t) { return b.optimal.waveform.value(t); }, t0, t0 + h) / h;
    diff += (field[i] - avg) * (field[i] - avg);
    norm += field[i] * field[i];
  }
  const double l2 = std::sqrt(diff / norm);
  const double de = std::abs(a.report.e_max / b.report.e_max - 1.0);
  return {l2 < 0.01 && de < 0.05,
          fmt("boundary none, n_t 256 vs n_f 64: L2 difference %.3f%% (limit 1%%), e_max %.2f vs %.2f V/m "
              "(%.2f%%, limit 5%%)",
              100 * l2, a.report.e_max, b.report.e_max, 100 * de)};
}

Outcome field_scan_criterion() {
  const double width = 0.005e-6;
  std::vector<int> counts;
  for (int n = 30; n <= 200; n += 2) counts.push_back(n);
  const auto scan = field_scan(two_ion(), counts, width);
  bool monotone = true;
  int raw_rises = 0;
  bool closed = true;
  for (std::size_t i = 1; i < scan.size(); ++i) {
    if (scan[i].required_field > scan[i - 1].required_field) monotone = false;
    if (scan[i].e_max > scan[i - 1].e_max) ++raw_rises;
  }
  for (const FieldScanPoint& p : scan)
    if (std::isfinite(p.e_max) && !(p.closure_residual < 1e-8)) closed = false;
  const double t_trap = constants::kTwoPi / bare_frequencies(reference_trap(), calcium_ion()).omega_x;
  const double onset = steep_rise_onset(scan);
  const double r = onset / t_trap;
  const bool near = std::isfinite(r) && r >= 1.5 && r <= 2.5;
  return {monotone && closed && near,
          fmt("%zu gate times 0.15-1.00 us: required field non-increasing %s (raw optimum rises %d), "
              "field %.0f V/m at %.3f us, %.1f V/m at 1 us, steep-rise onset %.3f us = %.2f T_trap (window 1.5-2.5)",
              scan.size(), monotone ? "yes" : "no", raw_rises, scan.front().required_field,
              scan.front().gate_time * 1e6, scan.back().required_field, onset * 1e6, r)};
}

Outcome pair_scan_criterion() {
  const auto t0 = Clock::now();
  const TrapParameters trap = fixture::six_ion_trap();
  const RydbergStateInfo state = fixture::anchored_49s();
  const FeasibilityLimits limits = FeasibilityLimits::for_state(state, false);
  const PairScanResult a = scan_pairs(6, trap, calcium_ion(), state, 2.5e-6, {}, limits);
  const PairScanResult b = scan_pairs(6, trap, calcium_ion(), state, 2.0e-6, {}, limits);
  const double dt = seconds_since(t0);
  bool all_closed = true;
  double mirror_err = 0.0;
  double max_a = 0.0;
  int feasible = 0;
  for (const PairScanEntry& e : a.entries) {
    if (!e.ok || !(e.closure_residual < 1e-8)) all_closed = false;
    if (e.check.feasible) ++feasible;
    max_a = std::max(max_a, e.e_max);
    const GatePair m = mirror(e.pair, 6);
    mirror_err = std::max(mirror_err, std::abs(e.e_max / a.find(m.first, m.second)->e_max - 1.0));
  }
  double max_b = 0.0;
  int over_it = 0;
  for (const PairScanEntry& e : b.entries) {
    max_b = std::max(max_b, e.e_max);
    if (e.check.it_violation) ++over_it;
  }
  const InteractionRanking rank = interaction_ranking(a);
  const double margin = max_b / max_a;
  const bool ok = all_closed && mirror_err <= 1e-6 && rank.symmetric_best_in_class && margin >= 1.2 && dt < 300.0;
  return {ok, fmt("2.5 us: 15 closed %s, %d/15 under IT %.1f V/m, max e_max %.1f V/m, mirror rel %.1e, "
                  "symmetric best in class %s; 2.0 us: max e_max %.1f V/m = %.2fx the 2.5 us maximum (margin 1.2), "
                  "%d over IT; %.1f s",
                  all_closed ? "yes" : "no", feasible, limits.it_field, max_a, mirror_err,
                  rank.symmetric_best_in_class ? "yes" : "no", max_b, margin, over_it, dt)};
}

Outcome lifetime_criterion() {
  const double a = 1.0 - lifetime_infidelity(0.67e-6, 6.2e-6);
  const double b = lifetime_infidelity(0.1e-6, 6.2e-6);
  const double c = lifetime_infidelity(2.5e-6, 190e-6);
  const double d = lifetime_infidelity(0.1e-6, 190e-6);
  const double e = lifetime_infidelity(0.67e-6, 190e-6);
  const bool ok = std::abs(a - 0.81) <= 0.01 && std::abs(b - 0.03) <= 0.005 && std::abs(c - 0.03) <= 0.005 &&
                  std::abs(d - 0.001) <= 0.0002;
  return {ok, fmt("F(0.67 us, 6.2 us) %.4f, loss(0.1 us, 6.2 us) %.2f%%, loss(2.5 us, 190 us) %.2f%%, "
                  "loss(0.1 us, 190 us) %.3f%%; 49P at 0.67 us gives %.2f%%",
                  a, 100 * b, 100 * c, 100 * d, 100 * e)};
}

Outcome scaling_criterion() {
  std::vector<int> ns;
  for (int n = 40; n <= 80; n += 5) ns.push_back(n);
  const auto scan = scaling_scan(ns, reference_trap(), calcium_ion(), fixture::anchored_49s());
  bool monotone = true;
  std::string rise;
  bool converged = true;
  std::ostringstream table;
  for (std::size_t i = 0; i < scan.size(); ++i) {
    table << (i ? " " : "") << scan[i].n << ":" << fmt("%.3f", scan[i].gate_time * 1e6);
    if (i > 0 && scan[i].gate_time > scan[i - 1].gate_time) {
      monotone = false;
      rise += fmt(" %d->%d +%.0f ns", scan[i - 1].n, scan[i].n,
                  (scan[i].gate_time - scan[i - 1].gate_time) * 1e9);
    }
    if (scan[i].n >= 70 && std::abs(scan[i].gate_time / 0.38e-6 - 1.0) > 0.15) converged = false;
  }
  return {monotone && converged,
          fmt("min t_g [us] %s; non-increasing %s%s; n>=70 within 0.38 us +-15%% %s", table.str().c_str(),
              monotone ? "yes" : "no", rise.c_str(), converged ? "yes" : "no")};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism_criterion(const std::string& cli) {
  if (cli.empty()) return {false, "command-line tool not available (pass --cli PATH)"};
  namespace fs = std::filesystem;
  const fs::path root = fs::temp_directory_path() / fmt("rykick_acceptance_%u", std::random_device{}());
  int files = 0;
  for (const char* target : {"table1", "fig2", "fig3", "fig4"}) {
    std::vector<fs::path> dirs;
    for (int run = 0; run < 2; ++run) {
      const fs::path dir = root / target / std::to_string(run);
      fs::create_directories(dir);
      const std::string cmd = "\"" + cli + "\" --out-dir \"" + dir.string() + "\" reproduce " + target + " > \"" +
                              (dir / "stdout.txt").string() + "\" 2>&1";
      if (std::system(cmd.c_str()) != 0) return {false, fmt("reproduce %s exited nonzero", target)};
      dirs.push_back(dir);
    }
    for (const auto& entry : fs::directory_iterator(dirs[0])) {
      const fs::path other = dirs[1] / entry.path().filename();
      if (!fs::exists(other) || slurp(entry.path()) != slurp(other))
        return {false, fmt("reproduce %s: %s differs between runs", target, entry.path().filename().c_str())};
      ++files;
    }
  }
  fs::remove_all(root);
  return {files > 0, fmt("reproduce table1/fig2/fig3/fig4 run twice: %d output files byte-identical", files)};
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  int only = 0;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--cli") cli = argv[i + 1];
    if (std::string(argv[i]) == "--only") only = std::atoi(argv[i + 1]);
  }

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"bare secular frequencies", bare_frequencies_criterion},
      {"polarizability shifts", polarizability_shift_criterion},
      {"two-ion mode table after tuning", table_criterion},
      {"four-kick scheme", four_kick_criterion},
      {"continuous optimizer N=2 0.67 us", continuous_criterion},
      {"oracle equivalence", oracle_criterion},
      {"slice/Fourier convergence", convergence_criterion},
      {"field versus gate time", field_scan_criterion},
      {"six-ion pair scan", pair_scan_criterion},
      {"lifetime infidelities", lifetime_criterion},
      {"principal quantum number scaling", scaling_criterion},
      {"determinism", [&] { return determinism_criterion(cli); }},
  };
  int failed = 0;
  int run = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<int>(i) + 1 != only) continue;
    ++run;
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("[%s] %2zu %s: %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(),
                seconds_since(t0));
    std::fflush(stdout);
  }
  std::printf("%d criteria, %d passed, %d failed\n", run, run - failed, failed);
  return failed == 0 ? 0 : 1;
}
