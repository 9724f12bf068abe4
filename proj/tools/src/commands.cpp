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


#include "commands.hpp"

#include <cmath>
#include <vector>

#include "rykick/constants.hpp"
#include "rykick/crystal_modes.hpp"
#include "rykick/discrete_kick.hpp"
#include "rykick/error.hpp"
#include "rykick/feasibility.hpp"
#include "rykick/pair_scan.hpp"
#include "rykick/phase_dynamics.hpp"
#include "rykick/waveform_optimizer.hpp"

namespace rykick::cli {
namespace {

namespace fs = std::filesystem;

constexpr double kHz = 1.0 / constants::kTwoPi;

fs::path out(const RunConfig& c, const std::string& name) { return c.output_dir / name; }

Json files(std::initializer_list<std::string> names) {
  Json j = Json::array();
  for (const std::string& n : names) j.push_back(n);
  return j;
}

Json trap_json(const TrapParameters& t) {
  return {{"gamma_dc_v_per_m2", t.gamma_dc},
          {"gamma_rf_v_per_m2", t.gamma_rf},
          {"trap_asymmetry", t.epsilon},
          {"rf_drive_rad_per_s", t.omega_rf}};
}

Json frequencies_json(const SecularFrequencies& f) {
  return {{"x_hz", f.omega_x * kHz}, {"y_hz", f.omega_y * kHz}, {"z_hz", f.omega_z * kHz}};
}

Json optimal_json(const OptimalWaveform& o) {
  return {{"method", to_string(o.method)},
          {"null_dimension", o.null_dimension},
          {"top_eigenvalue", o.top_eigenvalue},
          {"second_eigenvalue", o.second_eigenvalue},
          {"scale", o.scale},
          {"negative_phase", o.negative_phase},
          {"degenerate", o.degenerate}};
}

Json optimizer_json(const OptimizerOptions& o) {
  return {{"method", to_string(o.method)},
          {"boundary", to_string(o.boundary)},
          {"n_slices", o.n_slices},
          {"n_terms", o.n_terms}};
}

Json limits_json(const FeasibilityLimits& l) {
  return {{"it_field_v_per_m", l.it_field},
          {"x_max_limit_ground_lengths", l.x_max_limit},
          {"placeholder_it_field", l.placeholder_it_field}};
}

std::vector<int> field_scan_counts(const RunConfig& c) {
  std::vector<int> counts;
  for (int n = c.field_scan_count_min; n <= c.field_scan_count_max; n += c.field_scan_count_step) counts.push_back(n);
  return counts;
}

void write_pair_rows(CsvWriter& csv, const PairScanResult& r) {
  for (const PairScanEntry& e : r.entries) {
    csv.row({r.gate_time, static_cast<long long>(e.pair.first), static_cast<long long>(e.pair.second),
             static_cast<long long>(e.pair.second - e.pair.first), std::string(e.ok ? "ok" : "error"),
             std::string(e.error_code ? std::string(to_string(*e.error_code)) : ""), e.e_max, e.x_max,
             e.closure_residual, e.delta_phi, static_cast<long long>(e.check.feasible ? 1 : 0), e.check.it_margin,
             e.check.verdict()});
  }
}

const std::vector<std::string> kPairHeader = {"gate_time_s", "first",      "second",           "separation",
                                              "status",      "error",      "e_max_v_per_m",    "x_max_ground_lengths",
                                              "closure_residual", "delta_phi_rad", "feasible", "it_margin",
                                              "verdict"};

Json pair_scan_json(const PairScanResult& r) {
  const InteractionRanking rank = interaction_ranking(r);
  Json order = Json::array();
  for (const GatePair& p : rank.order) order.push_back({p.first, p.second});
  double max_e = 0.0;
  int feasible = 0;
  int failed = 0;
  for (const PairScanEntry& e : r.entries) {
    if (!e.ok) ++failed;
    if (e.ok) max_e = std::max(max_e, e.e_max);
    if (e.ok && e.check.feasible) ++feasible;
  }
  return {{"n_ions", r.n_ions},
          {"gate_time_s", r.gate_time},
          {"pairs", r.entries.size()},
          {"failed", failed},
          {"feasible", feasible},
          {"max_e_max_v_per_m", max_e},
          {"ranking", order},
          {"symmetric_best_in_class", rank.symmetric_best_in_class},
          {"asymmetric_monotone", rank.asymmetric_monotone}};
}

CommandResult write_synthesis(const RunConfig& c, const GateModel& model, const SynthesisResult& s,
                              const std::string& prefix, bool with_trajectories) {
  const std::string wave_csv = prefix + "_waveform.csv";
  const std::string wave_json = prefix + "_waveform.json";
  const std::string report = prefix + "_report.json";
  write_waveform_csv(out(c, wave_csv), s.optimal.waveform);
  write_json(out(c, wave_json), to_json(s.optimal.waveform));
  const FeasibilityCheck check = rykick::check(s.report, c.limits());
  Json j;
  j["n_ions"] = model.n_ions;
  j["pair"] = {model.pair.first, model.pair.second};
  j["optimizer"] = optimizer_json(c.optimizer);
  j["optimum"] = optimal_json(s.optimal);
  j["report"] = to_json(s.report);
  j["feasibility"] = to_json(check);
  j["limits"] = limits_json(c.limits());
  write_json(out(c, report), j);
  Json written = files({wave_csv, wave_json, report});
  if (with_trajectories) {
    const std::string traj = prefix + "_trajectories.csv";
    write_trajectories_csv(out(c, traj), trajectories(s.optimal.waveform, model, c.optimizer.simulation));
    written.push_back(traj);
  }
  Json summary = {{"gate_time_s", s.report.gate_time},
                  {"e_max_v_per_m", s.report.e_max},
                  {"delta_phi_rad", s.report.delta_phi},
                  {"closure_residual", s.report.closure_residual},
                  {"verdict", check.verdict()},
                  {"files", written}};
  return {summary, 0};
}

}  // namespace

CommandResult run_modes(const RunConfig& c) {
  const GateModel model = c.gate_model();
  const std::string modes_csv = "modes.csv";
  const std::string modes_json = "modes.json";
  std::vector<std::string> header = {"state", "direction", "mode", "frequency_hz"};
  for (int i = 0; i < model.n_ions; ++i) header.push_back("b_ion" + std::to_string(i + 1));
  CsvWriter csv(out(c, modes_csv), header);
  for (PairState s : kPairStates) {
    const ModeStructure& m = model.modes[index(s)];
    for (int k = 0; k < m.n_modes(); ++k) {
      std::vector<Cell> row = {std::string(to_string(s)), std::string(to_string(m.direction)),
                               static_cast<long long>(k + 1), m.frequencies(k) * kHz};
      for (int i = 0; i < model.n_ions; ++i) row.emplace_back(m.eigenvectors(i, k));
      csv.row(row);
    }
  }
  const TrapParameters trap = c.trap_for(c.n_ions);
  const Json j = {{"trap", trap_json(trap)},
                  {"bare", frequencies_json(bare_frequencies(trap, c.species))},
                  {"shifted", frequencies_json(shifted_frequencies(trap, c.species, c.rydberg))},
                  {"n_ions", c.n_ions},
                  {"pair", {c.pair.first, c.pair.second}}};
  write_json(out(c, modes_json), j);
  return {{{"bare", j["bare"]}, {"shifted", j["shifted"]}, {"files", files({modes_csv, modes_json})}}, 0};
}

CommandResult run_four_kick(const RunConfig& c, const std::string& prefix) {
  if (c.n_ions != 2) throw Error(ErrorCode::kValidation, "four-kick scheme needs n_ions = 2");
  const TrapParameters tuned = tune_commensurate(c.trap, c.species, c.rydberg);
  const GateModel model = build_gate_model(2, {0, 1}, tuned, c.species, c.rydberg);
  const FourKickPlan plan = build_four_kick(model);
  const Waveform w = plan.waveform();
  const GateReport r = gate_conditions(w, model, c.optimizer.simulation);
  const FidelityEstimate f = fidelity_estimate(r, c.rydberg, plan.gate_time);

  const std::string wave = prefix + "_waveform.csv";
  const std::string traj = prefix + "_trajectories.csv";
  const std::string dist = prefix + "_distortion.csv";
  const std::string report = prefix + "_report.json";
  write_waveform_csv(out(c, wave), w);
  write_trajectories_csv(out(c, traj), trajectories(w, model, c.optimizer.simulation));

  const std::vector<double> gs = {0.01, 0.03, 0.1, 0.3, 1.0, 3.0};
  const auto scan = distortion_scan(model, plan, gs);
  CsvWriter csv(out(c, dist), {"g", "amplitude_v_per_m", "infidelity", "delta_phi_rad", "closure_residual"});
  for (const DistortionPoint& p : scan)
    csv.row({p.g, p.amplitude, p.infidelity, p.report.delta_phi, p.report.closure_residual});

  Json j;
  j["tuned_trap"] = trap_json(tuned);
  j["commensurability_error"] = commensurability_error(tuned, c.species, c.rydberg);
  j["kick_duration_s"] = plan.kick_duration;
  j["gate_time_s"] = plan.gate_time;
  j["amplitude_v_per_m"] = plan.amplitude;
  j["pattern"] = plan.pattern;
  j["phase_sign"] = plan.phase_sign;
  j["residual_phonons"] = {
      {"00_com", std::norm(r.states[index(PairState::k00)].modes[0].final_displacement)},
      {"rr_com", std::norm(r.states[index(PairState::kRR)].modes[0].final_displacement)}};
  j["fidelity"] = {{"total", f.total}, {"phase", f.phase}, {"displacement", f.displacement}, {"lifetime", f.lifetime}};
  j["report"] = to_json(r);
  write_json(out(c, report), j);
  return {{{"gate_time_s", plan.gate_time},
           {"amplitude_v_per_m", plan.amplitude},
           {"delta_phi_rad", r.delta_phi},
           {"displacement_loss", r.fidelity_terms.displacement_loss},
           {"files", files({wave, traj, dist, report})}},
          0};
}

CommandResult run_optimize(const RunConfig& c, const std::string& prefix) {
  const GateModel model = c.gate_model();
  return write_synthesis(c, model, synthesize(model, c.gate_time, c.optimizer), prefix, false);
}

CommandResult run_simulate(const RunConfig& c, const fs::path& waveform_path) {
  std::ifstream in(waveform_path);
  if (!in) throw Error(ErrorCode::kValidation, "cannot open waveform '" + waveform_path.string() + "'");
  nlohmann::json wj;
  try {
    in >> wj;
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kValidation, std::string("waveform is not valid JSON: ") + e.what());
  }
  const Waveform w = waveform_from_json(wj);
  const GateModel model = c.gate_model();
  const GateReport r = gate_conditions(w, model, c.optimizer.simulation);
  const FeasibilityCheck check = rykick::check(r, c.limits());
  const std::string traj = "simulate_trajectories.csv";
  const std::string report = "simulate_report.json";
  write_trajectories_csv(out(c, traj), trajectories(w, model, c.optimizer.simulation));
  write_json(out(c, report), {{"report", to_json(r)}, {"feasibility", to_json(check)}});
  return {{{"delta_phi_rad", r.delta_phi},
           {"closure_residual", r.closure_residual},
           {"e_max_v_per_m", r.e_max},
           {"files", files({traj, report})}},
          0};
}

CommandResult run_scan_pairs(const RunConfig& c) {
  const PairScanResult r = scan_pairs(c.n_ions, c.trap_for(c.n_ions), c.species, c.rydberg, c.gate_time, c.optimizer,
                                      c.limits(), c.threads);
  const std::string csv_name = "scan_pairs.csv";
  const std::string json_name = "scan_pairs.json";
  CsvWriter csv(out(c, csv_name), kPairHeader);
  write_pair_rows(csv, r);
  Json j = pair_scan_json(r);
  write_json(out(c, json_name), j);
  j["files"] = files({csv_name, json_name});
  return {j, 0};
}

CommandResult run_feasibility(const RunConfig& c) {
  const GateModel model = c.gate_model();
  const SynthesisResult s = synthesize(model, c.gate_time, c.optimizer);
  const FeasibilityCheck check = rykick::check(s.report, c.limits());
  const FidelityEstimate f = fidelity_estimate(s.report, c.rydberg, c.gate_time);
  const std::string report = "feasibility_report.json";
  Json j = {{"gate_time_s", c.gate_time},
            {"e_max_v_per_m", s.report.e_max},
            {"x_max_ground_lengths", s.report.x_max},
            {"limits", limits_json(c.limits())},
            {"check", to_json(check)},
            {"lifetime_infidelity", lifetime_infidelity(c.gate_time, c.rydberg.lifetime)},
            {"fidelity", {{"total", f.total}, {"phase", f.phase}, {"displacement", f.displacement},
                          {"lifetime", f.lifetime}}}};
  write_json(out(c, report), j);
  return {{{"verdict", check.verdict()}, {"feasible", check.feasible}, {"files", files({report})}},
          check.feasible ? 0 : 4};
}

CommandResult run_scaling(const RunConfig& c) {
  std::vector<int> ns;
  for (int n = c.scaling_n_min; n <= c.scaling_n_max; n += c.scaling_n_step) ns.push_back(n);
  MinimalGateTimeOptions o;
  o.t_min = c.scaling_t_min;
  o.t_max = c.scaling_t_max;
  o.optimizer = c.optimizer;
  const auto scan = scaling_scan(ns, c.trap_for(c.n_ions), c.species, c.rydberg, o, c.threads);
  const std::string csv_name = "scaling.csv";
  const std::string json_name = "scaling.json";
  CsvWriter csv(out(c, csv_name),
                {"n", "gate_time_s", "e_max_v_per_m", "it_field_v_per_m", "lifetime_infidelity"});
  Json rows = Json::array();
  for (const MinimalGateTime& m : scan) {
    csv.row({static_cast<long long>(m.n), m.gate_time, m.e_max, m.it_field, m.lifetime_infidelity});
    rows.push_back({{"n", m.n}, {"gate_time_s", m.gate_time}, {"e_max_v_per_m", m.e_max}});
  }
  write_json(out(c, json_name),
             {{"reference_n", c.rydberg.principal_n}, {"reference_it_field_v_per_m", c.rydberg.it_field_limit},
              {"optimizer", optimizer_json(c.optimizer)}, {"points", rows}});
  return {{{"points", rows}, {"files", files({csv_name, json_name})}}, 0};
}

CommandResult run_reproduce(const RunConfig& config, const std::string& target) {
  RunConfig c = config;
  if (target == "table1") {
    const TrapParameters tuned = tune_commensurate(c.trap, c.species, c.rydberg);
    struct Row {
      const char* state;
      std::vector<InternalState> labels;
      double com;
      double rock;
    };
    using S = InternalState;
    const std::vector<Row> rows = {{"00", {S::kGround, S::kGround}, 6.000e6, 4.514e6},
                                   {"0R", {S::kGround, S::kRydberg}, 5.974e6, 4.478e6},
                                   {"RR", {S::kRydberg, S::kRydberg}, 5.947e6, 4.443e6}};
    const std::string csv_name = "table1.csv";
    const std::string json_name = "table1.json";
    CsvWriter csv(out(c, csv_name),
                  {"state", "mode", "frequency_hz", "untuned_frequency_hz", "reference_hz", "deviation_hz"});
    double worst = 0.0;
    for (const Row& r : rows) {
      const CrystalState crystal{r.labels, c.species, c.rydberg};
      const ModeStructure t = mode_structure(Direction::kX, crystal, tuned);
      const ModeStructure u = mode_structure(Direction::kX, crystal, c.trap);
      const double ref[2] = {r.com, r.rock};
      const char* names[2] = {"com", "rock"};
      for (int k = 0; k < 2; ++k) {
        const double f = t.frequencies(k) * kHz;
        worst = std::max(worst, std::abs(f - ref[k]));
        csv.row({std::string(r.state), std::string(names[k]), f, u.frequencies(k) * kHz, ref[k], f - ref[k]});
      }
    }
    write_json(out(c, json_name), {{"tuned_trap", trap_json(tuned)},
                                   {"commensurability_error", commensurability_error(tuned, c.species, c.rydberg)},
                                   {"max_deviation_hz", worst}});
    return {{{"max_deviation_hz", worst}, {"files", files({csv_name, json_name})}}, 0};
  }
  if (target == "fig2") {
    c.n_ions = 2;
    c.pair = {0, 1};
    return run_four_kick(c, "fig2");
  }
  if (target == "fig3") {
    c.n_ions = 2;
    c.pair = {0, 1};
    const GateModel model = c.gate_model();
    CommandResult res = write_synthesis(c, model, synthesize(model, c.gate_time, c.optimizer), "fig3", true);
    const auto scan = field_scan(model, field_scan_counts(c), c.field_scan_slice_width, c.optimizer, c.threads);
    const std::string scan_csv = "fig3_field_scan.csv";
    CsvWriter csv(out(c, scan_csv), {"gate_time_s", "n_slices", "e_max_v_per_m", "x_max_ground_lengths",
                                     "required_field_v_per_m", "required_source_s", "closure_residual"});
    for (const FieldScanPoint& p : scan)
      csv.row({p.gate_time, static_cast<long long>(p.n_slices), p.e_max, p.x_max, p.required_field,
               p.required_source, p.closure_residual});
    const double t_trap = constants::kTwoPi / bare_frequencies(c.trap, c.species).omega_x;
    const double onset = steep_rise_onset(scan);
    res.summary["steep_rise_onset_s"] = real(onset);
    res.summary["steep_rise_onset_trap_periods"] = real(onset / t_trap);
    res.summary["files"].push_back(scan_csv);
    return res;
  }
  if (target == "fig4") {
    c.n_ions = 6;
    if (c.axial_anisotropy_fraction == 0.0) c.axial_anisotropy_fraction = 0.95;
    const TrapParameters trap = c.trap_for(6);
    const std::string csv_name = "fig4_pairs.csv";
    const std::string json_name = "fig4_report.json";
    CsvWriter csv(out(c, csv_name), kPairHeader);
    Json scans = Json::array();
    double reference_max = 0.0;
    for (double t_g : {2.5e-6, 2.0e-6}) {
      const PairScanResult r = scan_pairs(6, trap, c.species, c.rydberg, t_g, c.optimizer, c.limits(), c.threads);
      write_pair_rows(csv, r);
      Json j = pair_scan_json(r);
      if (t_g == 2.5e-6)
        reference_max = j["max_e_max_v_per_m"].get<double>();
      else
        j["ratio_to_2_5us_max"] = j["max_e_max_v_per_m"].get<double>() / reference_max;
      scans.push_back(j);
    }
    write_json(out(c, json_name), {{"trap", trap_json(trap)},
                                   {"axial_anisotropy_fraction", c.axial_anisotropy_fraction},
                                   {"limits", limits_json(c.limits())},
                                   {"scans", scans}});
    return {{{"scans", scans}, {"files", files({csv_name, json_name})}}, 0};
  }
  throw Error(ErrorCode::kValidation, "unknown reproduce target '" + target + "' (table1, fig2, fig3, fig4)");
}

}  // namespace rykick::cli
