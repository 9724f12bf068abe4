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


#ifndef RYKICK_TOOLS_CONFIG_HPP
#define RYKICK_TOOLS_CONFIG_HPP

#include <filesystem>
#include <string>

#include <json.hpp>

#include "rykick/feasibility.hpp"
#include "rykick/phase_dynamics.hpp"
#include "rykick/trap_model.hpp"
#include "rykick/waveform_optimizer.hpp"

namespace rykick::cli {

/// 49S with the IT limit anchored at 150 V/m for 3% admixture, 10% allowed.
RydbergStateInfo default_rydberg_state();

/// Flat run configuration. Every physical key carries its unit in the name.
struct RunConfig {
  TrapParameters trap = reference_trap();
  IonSpecies species = calcium_ion();
  RydbergStateInfo rydberg = default_rydberg_state();
  bool it_field_placeholder = false;
  double x_max_limit = 1e4;

  /// Fraction of the critical anisotropy for chains with more than two ions;
  /// 0 keeps the configured gamma_dc.
  double axial_anisotropy_fraction = 0.0;

  int n_ions = 2;
  GatePair pair{0, 1};
  double gate_time = 0.67e-6;
  OptimizerOptions optimizer;

  int scaling_n_min = 40;
  int scaling_n_max = 80;
  int scaling_n_step = 5;
  double scaling_t_min = 0.2e-6;
  double scaling_t_max = 2.0e-6;

  double field_scan_slice_width = 10e-9;
  int field_scan_count_min = 16;
  int field_scan_count_max = 100;
  int field_scan_count_step = 2;

  std::filesystem::path output_dir = ".";
  unsigned threads = 0;

  /// Trap used for an n-ion chain after the optional anisotropy adjustment.
  TrapParameters trap_for(int n) const;
  GateModel gate_model() const;
  FeasibilityLimits limits() const;
};

/// Documented defaults as a JSON object; `rykick config` prints it.
nlohmann::ordered_json default_config_json();

/// Applies a flat JSON object on top of `config`. Unknown keys, wrong types
/// and out-of-range values raise a validation error.
void apply_json(RunConfig& config, const nlohmann::json& j);

RunConfig load_config(const std::filesystem::path& path);

void validate(const RunConfig& config);

}  // namespace rykick::cli

#endif  // RYKICK_TOOLS_CONFIG_HPP
