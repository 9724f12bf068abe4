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

#ifndef RYKICK_FEASIBILITY_HPP
#define RYKICK_FEASIBILITY_HPP

#include <limits>
#include <string>
#include <vector>

#include "rykick/phase_dynamics.hpp"
#include "rykick/trap_model.hpp"
#include "rykick/waveform_optimizer.hpp"

namespace rykick {

/// Principal-quantum-number scaling of Rydberg properties.
struct ScalingLaws {
  static constexpr int kPolarizabilityExponent = 7;
  static constexpr int kItExponent = -5;
  static constexpr int kLifetimeExponent = 3;
};

struct FeasibilityLimits {
  double it_field = kPlaceholderItField;  ///< V/m
  double x_max_limit = 1e4;               ///< ground-state lengths
  int reference_n = 49;
  double reference_it_field = kPlaceholderItField;
  bool placeholder_it_field = true;  ///< results must not be read as physical

  static FeasibilityLimits for_state(const RydbergStateInfo& state, bool placeholder,
                                     double x_max_limit = 1e4);
};

void validate(const FeasibilityLimits& limits);

struct FeasibilityCheck {
  bool feasible = true;
  bool it_violation = false;
  bool excursion_violation = false;
  double it_margin = std::numeric_limits<double>::infinity();         ///< it_field / e_max
  double excursion_margin = std::numeric_limits<double>::infinity();  ///< limit / x_max
  bool placeholder_it_field = false;

  /// "feasible", "it_violation", "excursion_violation" or "it_and_excursion_violation".
  std::string verdict() const;
};

FeasibilityCheck check(const GateReport& report, const FeasibilityLimits& limits);

/// alpha (n/n_ref)^7, it_field (n/n_ref)^-5, lifetime (n/n_ref)^3.
RydbergStateInfo scale_state(const RydbergStateInfo& reference, int target_n);

/// Field that produces `target_admixture` when `operating_field` produces
/// `operating_admixture` (admixture grows as E^2).
double it_field_for_admixture(double operating_field, double operating_admixture,
                              double target_admixture);

/// 1 - exp(-2 t_g / tau).
double lifetime_infidelity(double gate_time, double lifetime);

struct MinimalGateTimeOptions {
  double t_min = 0.2e-6;
  double t_max = 2.0e-6;
  double grid_step = 0.02e-6;
  double tolerance = 10e-9;
  OptimizerOptions optimizer;
};

struct MinimalGateTime {
  int n = 0;
  double gate_time = 0.0;  ///< s
  double e_max = 0.0;      ///< at gate_time
  double it_field = 0.0;
  double lifetime_infidelity = 0.0;
};

/// Smallest t_g whose optimized N=2 waveform stays at or below the n-scaled IT
/// field: the first feasible point of a uniform grid is refined by bisection
/// against its infeasible neighbour. Throws kNoConvergence if no grid point is
/// feasible; propagates instability of the scaled state.
MinimalGateTime minimal_gate_time(int n, const TrapParameters& trap, const IonSpecies& species,
                                  const RydbergStateInfo& reference,
                                  const MinimalGateTimeOptions& options = {});

std::vector<MinimalGateTime> scaling_scan(const std::vector<int>& ns, const TrapParameters& trap,
                                          const IonSpecies& species,
                                          const RydbergStateInfo& reference,
                                          const MinimalGateTimeOptions& options = {},
                                          unsigned threads = 0);

struct FieldScanPoint {
  double gate_time = 0.0;
  int n_slices = 0;
  double e_max = 0.0;           ///< optimum at this t_g
  double x_max = 0.0;
  double required_field = 0.0;  ///< best over this and idle-padded shorter optima
  double required_source = 0.0; ///< t_g of the optimum that achieves required_field
  double closure_residual = 0.0;
};

/// e_max versus t_g on t_g = m h for the given slice counts m at fixed slice
/// width h. A shorter optimum followed by zero field is also a valid gate at
/// the longer t_g, so the required field is the running minimum; every padded
/// candidate is re-simulated before use.
std::vector<FieldScanPoint> field_scan(const GateModel& model, const std::vector<int>& slice_counts,
                                       double slice_width, const OptimizerOptions& options = {},
                                       unsigned threads = 0);

/// End of the short-gate regime where the required field rises steeply.
/// Walking from the longest gate towards shorter ones, the t_g where the
/// log-log slope of the required field, taken over
/// [t_g, (1 + relative_window) t_g], first reaches `slope_threshold`. NaN if
/// the longest evaluable gate is already steep or no point is.
double steep_rise_onset(const std::vector<FieldScanPoint>& scan, double slope_threshold = 4.0,
                        double relative_window = 0.2);

}  // namespace rykick

#endif  // RYKICK_FEASIBILITY_HPP
