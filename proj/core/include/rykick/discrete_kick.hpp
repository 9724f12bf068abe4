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

#ifndef RYKICK_DISCRETE_KICK_HPP
#define RYKICK_DISCRETE_KICK_HPP

#include <array>
#include <vector>

#include "rykick/phase_dynamics.hpp"
#include "rykick/trap_model.hpp"
#include "rykick/waveform.hpp"

namespace rykick {

/// Target q nu_2 = p nu_1 for the 0R configuration of a two-ion crystal,
/// i.e. nu_2 / nu_1 = p / q. The four-kick scheme uses 3:4.
struct CommensurateTarget {
  int p = 3;
  int q = 4;
};

/// Adjusts gamma_dc (axial confinement; gamma_rf held fixed) so that the 0R
/// transverse modes satisfy the target to 1e-10 relative. Throws kValidation
/// for p/q >= 1 (Rock lies strictly below COM), kUnstableTrap if no stable
/// bracket exists, kNoConvergence otherwise.
TrapParameters tune_commensurate(const TrapParameters& trap, const IonSpecies& species,
                                 const RydbergStateInfo& rydberg,
                                 CommensurateTarget target = {});

/// Relative mismatch (q nu_2 - p nu_1) / (p nu_1) for the 0R configuration.
double commensurability_error(const TrapParameters& trap, const IonSpecies& species,
                              const RydbergStateInfo& rydberg, CommensurateTarget target = {});

struct FourKickPlan {
  double kick_duration = 0.0;  ///< one 0R COM period, s
  std::array<int, 4> pattern = {1, -1, 1, -1};
  double amplitude = 0.0;  ///< V/m
  double gate_time = 0.0;  ///< 4 kick_duration
  int phase_sign = 1;      ///< sign of the achieved delta_phi

  Waveform waveform() const;
};

/// Four constant kicks of one 0R COM period each with alternating sign, the
/// amplitude scaled so that |delta_phi| = pi.
FourKickPlan build_four_kick(const GateModel& model, double amplitude_guess = 50.0);

/// Kick train with finite switching time,
///   G(t) = (2A/pi) arctan(sin(pi t / tau_kick) / g),
/// sampled at slice midpoints. Tends to the square pattern as g -> 0.
Waveform distorted_kicks(const FourKickPlan& plan, double amplitude, double g,
                         int n_slices = 4096);

struct DistortionPoint {
  double g = 0.0;
  double amplitude = 0.0;   ///< A after recalibration to |delta_phi| = pi
  double infidelity = 0.0;  ///< 1 - F_phase F_disp (motional part only)
  GateReport report;
};

std::vector<DistortionPoint> distortion_scan(const GateModel& model, const FourKickPlan& plan,
                                             const std::vector<double>& g_values,
                                             int n_slices = 4096);

}  // namespace rykick

#endif  // RYKICK_DISCRETE_KICK_HPP
