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

#ifndef RYKICK_CONSTANTS_HPP
#define RYKICK_CONSTANTS_HPP

#include <numbers>

namespace rykick::constants {

// CODATA 2018 exact / recommended values, SI units.
inline constexpr double kElementaryCharge = 1.602176634e-19;   // C
inline constexpr double kHbar = 1.054571817e-34;               // J s
inline constexpr double kVacuumPermittivity = 8.8541878128e-12; // F/m
inline constexpr double kAtomicMassUnit = 1.66053906660e-27;   // kg

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Coulomb constant 1/(4 pi eps0).
inline constexpr double kCoulomb = 1.0 / (4.0 * kPi * kVacuumPermittivity);

}  // namespace rykick::constants

#endif  // RYKICK_CONSTANTS_HPP
