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

#include "rykick/trap_model.hpp"

#include <cmath>
#include <sstream>

#include "rykick/constants.hpp"
#include "rykick/error.hpp"

namespace rykick {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kValidation, what);
}

SecularFrequencies roots(const SquaredFrequencies& sq, bool shifted) {
  if (!(sq.x > 0.0) || !(sq.y > 0.0) || !(sq.z > 0.0)) {
    std::ostringstream msg;
    msg << "squared secular frequencies (" << sq.x << ", " << sq.y << ", " << sq.z
        << ") rad^2/s^2 are not all positive";
    throw Error(ErrorCode::kUnstableTrap, msg.str());
  }
  return {std::sqrt(sq.x), std::sqrt(sq.y), std::sqrt(sq.z), shifted};
}

}  // namespace

void validate(const TrapParameters& trap) {
  require(std::isfinite(trap.gamma_dc) && trap.gamma_dc > 0.0, "gamma_dc must be > 0");
  require(std::isfinite(trap.gamma_rf) && trap.gamma_rf > 0.0, "gamma_rf must be > 0");
  require(std::isfinite(trap.omega_rf) && trap.omega_rf > 0.0, "omega_rf must be > 0");
  require(std::isfinite(trap.epsilon), "epsilon must be finite");
}

void validate(const IonSpecies& ion) {
  require(std::isfinite(ion.mass) && ion.mass > 0.0, "ion mass must be > 0");
  require(std::isfinite(ion.charge) && ion.charge > 0.0, "ion charge must be > 0");
  for (const auto& s : ion.rydberg_states) validate(s);
}

void validate(const RydbergStateInfo& state) {
  require(state.principal_n >= 10, "principal_n must be >= 10");
  require(std::isfinite(state.lifetime) && state.lifetime > 0.0, "lifetime must be > 0");
  require(std::isfinite(state.it_field_limit) && state.it_field_limit > 0.0,
          "it_field_limit must be > 0");
  // Sign convention: a positive polarizability lowers the frequency.
  require(std::isfinite(state.polarizability) && state.polarizability >= 0.0,
          "polarizability must be >= 0");
}

SquaredFrequencies bare_frequencies_squared(const TrapParameters& trap, const IonSpecies& ion) {
  const double e = ion.charge;
  const double m = ion.mass;
  const double rf = 2.0 * e * e * trap.gamma_rf * trap.gamma_rf /
                    (m * m * trap.omega_rf * trap.omega_rf);
  return {
      rf - 2.0 * e * trap.gamma_dc * (1.0 + trap.epsilon) / m,
      rf - 2.0 * e * trap.gamma_dc * (1.0 - trap.epsilon) / m,
      4.0 * e * trap.gamma_dc / m,
  };
}

SquaredFrequencies shifted_frequencies_squared(const TrapParameters& trap, const IonSpecies& ion,
                                               double polarizability) {
  SquaredFrequencies sq = bare_frequencies_squared(trap, ion);
  if (polarizability == 0.0) return sq;
  const double a = polarizability / ion.mass;
  const double g2 = trap.gamma_dc * trap.gamma_dc;
  const double rf2 = trap.gamma_rf * trap.gamma_rf;
  const double px = 1.0 + trap.epsilon;
  const double py = 1.0 - trap.epsilon;
  sq.x -= a * (rf2 + 2.0 * g2 * px * px);
  sq.y -= a * (rf2 + 2.0 * g2 * py * py);
  sq.z -= 16.0 * a * g2;
  return sq;
}

SecularFrequencies bare_frequencies(const TrapParameters& trap, const IonSpecies& ion) {
  validate(trap);
  validate(ion);
  return roots(bare_frequencies_squared(trap, ion), false);
}

SecularFrequencies shifted_frequencies(const TrapParameters& trap, const IonSpecies& ion,
                                       const RydbergStateInfo& state) {
  validate(trap);
  validate(ion);
  validate(state);
  // Bare trap must be stable before the shift is meaningful.
  roots(bare_frequencies_squared(trap, ion), false);
  return roots(shifted_frequencies_squared(trap, ion, state.polarizability), true);
}

TrapParameters reference_trap() {
  return {6.406e7, 1.123e9, 0.400, constants::kTwoPi * 14.135e6};
}

IonSpecies calcium_ion() {
  IonSpecies ion;
  // Standard atomic weight of Ca; reproduces the quoted 6.000/6.500/3.953 MHz.
  ion.mass = 40.078 * constants::kAtomicMassUnit;
  ion.charge = constants::kElementaryCharge;
  ion.rydberg_states = {calcium_49s(), calcium_49p()};
  return ion;
}

RydbergStateInfo calcium_49s() {
  return {"49S", 49, 1.3e-30, 6.2e-6, kPlaceholderItField};
}

RydbergStateInfo calcium_49p() {
  // Only the lifetime of 49P is known here; polarizability is scaled from 49S.
  return {"49P", 49, 1.3e-30, 190e-6, kPlaceholderItField};
}

}  // namespace rykick
