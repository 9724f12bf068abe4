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

#ifndef RYKICK_TRAP_MODEL_HPP
#define RYKICK_TRAP_MODEL_HPP

#include <string>
#include <vector>

namespace rykick {

/// Electrode parameters of a linear Paul trap in the pseudopotential picture.
struct TrapParameters {
  double gamma_dc = 0.0;  ///< static field gradient, V/m^2
  double gamma_rf = 0.0;  ///< rf field gradient, V/m^2
  double epsilon = 0.0;   ///< radial asymmetry of the dc confinement
  double omega_rf = 0.0;  ///< rf drive, rad/s
};

struct RydbergStateInfo {
  std::string label;
  int principal_n = 0;
  double polarizability = 0.0;  ///< C m^2 / V, positive lowers the secular frequency
  double lifetime = 0.0;        ///< s
  double it_field_limit = 0.0;  ///< V/m, field at which state purity drops below target
};

struct IonSpecies {
  double mass = 0.0;    ///< kg
  double charge = 0.0;  ///< C
  std::vector<RydbergStateInfo> rydberg_states;
};

/// Angular frequencies in rad/s.
struct SecularFrequencies {
  double omega_x = 0.0;
  double omega_y = 0.0;
  double omega_z = 0.0;
  bool shifted = false;
};

/// Squared frequencies, useful before taking roots (and for stability checks).
struct SquaredFrequencies {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

// Throw Error(kValidation) on violated field invariants.
void validate(const TrapParameters& trap);
void validate(const IonSpecies& ion);
void validate(const RydbergStateInfo& state);

SquaredFrequencies bare_frequencies_squared(const TrapParameters& trap, const IonSpecies& ion);
SquaredFrequencies shifted_frequencies_squared(const TrapParameters& trap, const IonSpecies& ion,
                                               double polarizability);

/// Pseudopotential secular frequencies. Throws kUnstableTrap if any squared
/// frequency is not positive.
SecularFrequencies bare_frequencies(const TrapParameters& trap, const IonSpecies& ion);

/// Secular frequencies of an ion whose internal state has the given static
/// polarizability. Throws kUnstableTrap if the shift destabilizes a direction.
SecularFrequencies shifted_frequencies(const TrapParameters& trap, const IonSpecies& ion,
                                       const RydbergStateInfo& state);

// Reference configuration: 40Ca+ in the segmented trap used throughout the
// examples and the acceptance suite.
TrapParameters reference_trap();
IonSpecies calcium_ion();
RydbergStateInfo calcium_49s();
RydbergStateInfo calcium_49p();

/// Placeholder Inglis-Teller field used when no value is configured. Results
/// derived from it must be flagged.
inline constexpr double kPlaceholderItField = 300.0;

}  // namespace rykick

#endif  // RYKICK_TRAP_MODEL_HPP
