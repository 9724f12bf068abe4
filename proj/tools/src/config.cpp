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


#include "config.hpp"

#include <fstream>
#include <functional>
#include <map>

#include "rykick/constants.hpp"
#include "rykick/crystal_modes.hpp"
#include "rykick/error.hpp"

namespace rykick::cli {
namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& message) { throw Error(ErrorCode::kValidation, message); }

double number(const json& v, const std::string& key) {
  if (!v.is_number()) invalid("config key '" + key + "' must be a number");
  return v.get<double>();
}

int integer(const json& v, const std::string& key) {
  if (!v.is_number_integer()) invalid("config key '" + key + "' must be an integer");
  return v.get<int>();
}

std::string text(const json& v, const std::string& key) {
  if (!v.is_string()) invalid("config key '" + key + "' must be a string");
  return v.get<std::string>();
}

bool boolean(const json& v, const std::string& key) {
  if (!v.is_boolean()) invalid("config key '" + key + "' must be a boolean");
  return v.get<bool>();
}

constexpr double kOperatingField = 150.0;
constexpr double kOperatingAdmixture = 0.03;
constexpr double kTargetAdmixture = 0.10;

RydbergStateInfo preset(const std::string& name) {
  RydbergStateInfo s;
  if (name == "49S")
    s = calcium_49s();
  else if (name == "49P")
    s = calcium_49p();
  else
    invalid("rydberg_state must be \"49S\" or \"49P\", got \"" + name + "\"");
  s.it_field_limit = it_field_for_admixture(kOperatingField, kOperatingAdmixture, kTargetAdmixture);
  return s;
}

struct ItAnchor {
  double field = kOperatingField;
  double admixture = kOperatingAdmixture;
  double target = kTargetAdmixture;
  bool touched = false;
};

using Setter = std::function<void(RunConfig&, ItAnchor&, const json&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"gamma_dc_v_per_m2", [](RunConfig& c, ItAnchor&, const json& v, const std::string& k) { c.trap.gamma_dc = number(v, k); }},
      {"gamma_rf_v_per_m2", [](RunConfig& c, ItAnchor&, const json& v, const std::string& k) { c.trap.gamma_rf = number(v, k); }},
      {"trap_asymmetry", [](RunConfig& c, ItAnchor&, const json& v, const std::string& k) { c.trap.epsilon = number(v, k); }},
      {"rf_drive_rad_per_s", [](RunConfig& c, ItAnchor&, const json& v, const std::string& k) { c.trap.omega_rf = number(v, k); }},
      {"ion_mass_u", [](RunConfig& c, ItAnchor&, const json& v, const std::string& k) {
         c.species.mass = number(v, k) * constants::kAtomicMassUnit;
       }},
      {"ion_charge_e", [](RunConfig& c, ItAnchor&, const json& v, const std::string& k) {
         c.species.charge = number(v, k) * constants::kElementaryCharge;
       }},
      {"rydberg_n", [](RunConfig& c, ItAnchor&, const json& v, const std::string& k) { c.rydberg.principal_n = integer(v, k); }},
      {"polarizability_c_m2_per_v", [](RunConfig& c, ItAnchor&, const json& v, const std::string& k) {
         c.rydberg.polarizability = number(v, k);
       }},
      {"rydberg_lifetime_us", [](RunConfig& c, ItAnchor&, const json& v, const std::string& k) {
         c.rydberg.lifetime = number(v, k) * 1e-6;
       }},
      {"it_field_v_per_m", [](RunConfig& c, ItAnchor&, const json& v, const std::string& k) {
         c.rydberg.it_field_limit = number(v, k);
       }},
      {"it_operating_field_v_per_m", [](RunConfig&, ItAnchor& a, const json& v, const std::string& k) {
         a.field = number(v, k);
         a.touched = true;
       }},
      {"it_operating_admixture", [](RunConfig&, ItAnchor& a, const json& v, const std::string& k) {
         a.admixture = number(v, k);
         a.touched = true;
       }},
      {"it_target_admixture", [](RunConfig&, ItAnchor& a, const json& v, const std::string& k) {
         a.target = number(v, k);
         a.touched = true;
       }},
      {"it_field_placeholder", [](RunConfig& c, ItAnchor&, const json& v, const std::string& k) {
         c.it_field_placeholder = boolean(v, k);
       }},
      {"x_max_limit_ground_lengths", [](RunConfig& c, ItAnchor&, const json& v, const std::string& k) {
         c.x_max_limit = number(v, k);
       }},
      {"axial_anisotropy_fraction", [](RunConfig& c, ItAnchor&, const json& v, const std::string& k) {
         c.axial_anisotropy_fraction = number(v, k);
       }},
      {"n_ions", [](RunConfig& c, ItAnchor&, const json& v, const std::string& k) { c.n_ions = integer(v, k); }},
      {"pair_first", [](RunConfig& c, ItAnchor&, const json& v, const std::string& k) { c.pair.first = integer(v, k); }},
      {"pair_second", [](RunConfig& c, ItAnchor&, const json& v, const std::string& k) { c.pair.second = integer(v, k); }},
      {"gate_time_us", [](RunConfig& c, ItAnchor&, const json& v, const std::string& k) { c.gate_time = number(v, k) * 1e-6; }},
      {"method", [](RunConfig& c, ItAnchor&, const json& v, const std::string& k) {
         c.optimizer.method = parse_method(text(v, k));
       }},
      {"boundary", [](RunConfig& c, ItAnchor&, const json& v, const std::string& k) {
         c.optimizer.boundary = parse_boundary(text(v, k));
       }},
      {"n_slices", [](RunConfig& c, ItAnchor&, const json& v, const std::string& k) { c.optimizer.n_slices = integer(v, k); }},
      {"n_terms", [](RunConfig& c, ItAnchor&, const json& v, const std::string& k) { c.optimizer.n_terms = integer(v, k); }},
      {"svd_tolerance", [](RunConfig& c, ItAnchor&, const json& v, const std::string& k) {
         c.optimizer.svd_tolerance = number(v, k);
       }},
      {"metric_tolerance", [](RunConfig& c, ItAnchor&, const json& v, const std::string& k) {
         c.optimizer.metric_tolerance = number(v, k);
       }},
      {"scaling_n_min", [](RunConfig& c, ItAnchor&, const json& v, const std::string& k) { c.scaling_n_min = integer(v, k); }},
      {"scaling_n_max", [](RunConfig& c, ItAnchor&, const json& v, const std::string& k) { c.scaling_n_max = integer(v, k); }},
      {"scaling_n_step", [](RunConfig& c, ItAnchor&, const json& v, const std::string& k) { c.scaling_n_step = integer(v, k); }},
      {"scaling_t_min_us", [](RunConfig& c, ItAnchor&, const json& v, const std::string& k) {
         c.scaling_t_min = number(v, k) * 1e-6;
       }},
      {"scaling_t_max_us", [](RunConfig& c, ItAnchor&, const json& v, const std::string& k) {
         c.scaling_t_max = number(v, k) * 1e-6;
       }},
      {"field_scan_slice_width_ns", [](RunConfig& c, ItAnchor&, const json& v, const std::string& k) {
         c.field_scan_slice_width = number(v, k) * 1e-9;
       }},
      {"field_scan_count_min", [](RunConfig& c, ItAnchor&, const json& v, const std::string& k) {
         c.field_scan_count_min = integer(v, k);
       }},
      {"field_scan_count_max", [](RunConfig& c, ItAnchor&, const json& v, const std::string& k) {
         c.field_scan_count_max = integer(v, k);
       }},
      {"field_scan_count_step", [](RunConfig& c, ItAnchor&, const json& v, const std::string& k) {
         c.field_scan_count_step = integer(v, k);
       }},
      {"output_dir", [](RunConfig& c, ItAnchor&, const json& v, const std::string& k) { c.output_dir = text(v, k); }},
      {"threads", [](RunConfig& c, ItAnchor&, const json& v, const std::string& k) {
         const int t = integer(v, k);
         if (t < 0) invalid("threads must be non-negative");
         c.threads = static_cast<unsigned>(t);
       }},
  };
  return table;
}

}  // namespace

RydbergStateInfo default_rydberg_state() { return preset("49S"); }

TrapParameters RunConfig::trap_for(int n) const {
  if (axial_anisotropy_fraction <= 0.0 || n <= 2) return trap;
  return with_axial_anisotropy(trap, species, axial_anisotropy_fraction * critical_anisotropy(n));
}

GateModel RunConfig::gate_model() const {
  return build_gate_model(n_ions, pair, trap_for(n_ions), species, rydberg);
}

FeasibilityLimits RunConfig::limits() const {
  return FeasibilityLimits::for_state(rydberg, it_field_placeholder, x_max_limit);
}

nlohmann::ordered_json default_config_json() {
  const RunConfig c;
  nlohmann::ordered_json j;
  j["gamma_dc_v_per_m2"] = c.trap.gamma_dc;
  j["gamma_rf_v_per_m2"] = c.trap.gamma_rf;
  j["trap_asymmetry"] = c.trap.epsilon;
  j["rf_drive_rad_per_s"] = c.trap.omega_rf;
  j["ion_mass_u"] = c.species.mass / constants::kAtomicMassUnit;
  j["ion_charge_e"] = c.species.charge / constants::kElementaryCharge;
  j["rydberg_state"] = c.rydberg.label;
  j["rydberg_n"] = c.rydberg.principal_n;
  j["polarizability_c_m2_per_v"] = c.rydberg.polarizability;
  j["rydberg_lifetime_us"] = c.rydberg.lifetime / 1e-6;
  j["it_operating_field_v_per_m"] = kOperatingField;
  j["it_operating_admixture"] = kOperatingAdmixture;
  j["it_target_admixture"] = kTargetAdmixture;
  j["it_field_placeholder"] = c.it_field_placeholder;
  j["x_max_limit_ground_lengths"] = c.x_max_limit;
  j["axial_anisotropy_fraction"] = c.axial_anisotropy_fraction;
  j["n_ions"] = c.n_ions;
  j["pair_first"] = c.pair.first;
  j["pair_second"] = c.pair.second;
  j["gate_time_us"] = c.gate_time / 1e-6;
  j["method"] = to_string(c.optimizer.method);
  j["boundary"] = to_string(c.optimizer.boundary);
  j["n_slices"] = c.optimizer.n_slices;
  j["n_terms"] = c.optimizer.n_terms;
  j["svd_tolerance"] = c.optimizer.svd_tolerance;
  j["metric_tolerance"] = c.optimizer.metric_tolerance;
  j["scaling_n_min"] = c.scaling_n_min;
  j["scaling_n_max"] = c.scaling_n_max;
  j["scaling_n_step"] = c.scaling_n_step;
  j["scaling_t_min_us"] = c.scaling_t_min / 1e-6;
  j["scaling_t_max_us"] = c.scaling_t_max / 1e-6;
  j["field_scan_slice_width_ns"] = c.field_scan_slice_width / 1e-9;
  j["field_scan_count_min"] = c.field_scan_count_min;
  j["field_scan_count_max"] = c.field_scan_count_max;
  j["field_scan_count_step"] = c.field_scan_count_step;
  j["output_dir"] = c.output_dir.string();
  j["threads"] = c.threads;
  return j;
}

void apply_json(RunConfig& config, const nlohmann::json& j) {
  if (!j.is_object()) invalid("config must be a flat JSON object");
  // The state preset resets the Rydberg fields, so it goes first.
  if (j.contains("rydberg_state")) config.rydberg = preset(text(j.at("rydberg_state"), "rydberg_state"));
  ItAnchor anchor;
  const auto& table = setters();
  for (const auto& [key, value] : j.items()) {
    if (key == "rydberg_state") continue;
    const auto it = table.find(key);
    if (it == table.end()) invalid("unknown config key '" + key + "'");
    it->second(config, anchor, value, key);
  }
  if (anchor.touched && j.contains("it_field_v_per_m"))
    invalid("it_field_v_per_m conflicts with the it_operating_* anchor keys");
  if (anchor.touched)
    config.rydberg.it_field_limit = it_field_for_admixture(anchor.field, anchor.admixture, anchor.target);
  validate(config);
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) invalid("cannot open config file '" + path.string() + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    invalid("config file '" + path.string() + "' is not valid JSON: " + e.what());
  }
  RunConfig c;
  apply_json(c, j);
  return c;
}

void validate(const RunConfig& c) {
  rykick::validate(c.trap);
  rykick::validate(c.species);
  rykick::validate(c.rydberg);
  if (c.n_ions < 1) invalid("n_ions must be at least 1");
  if (c.n_ions >= 2) rykick::validate(c.pair, c.n_ions);
  if (!(c.gate_time > 0.0)) invalid("gate_time_us must be positive");
  if (c.optimizer.n_slices < 1 || c.optimizer.n_terms < 1) invalid("n_slices and n_terms must be positive");
  if (c.axial_anisotropy_fraction < 0.0 || c.axial_anisotropy_fraction >= 1.0)
    invalid("axial_anisotropy_fraction must lie in [0, 1)");
  if (c.scaling_n_step < 1 || c.scaling_n_min > c.scaling_n_max || c.scaling_n_min < 1)
    invalid("scaling_n range is empty or invalid");
  if (!(c.scaling_t_min > 0.0) || !(c.scaling_t_max > c.scaling_t_min)) invalid("scaling_t range is invalid");
  if (!(c.field_scan_slice_width > 0.0)) invalid("field_scan_slice_width_ns must be positive");
  if (c.field_scan_count_step < 1 || c.field_scan_count_min < 1 || c.field_scan_count_min > c.field_scan_count_max)
    invalid("field_scan_count range is empty or invalid");
  rykick::validate(c.limits());
}

}  // namespace rykick::cli
