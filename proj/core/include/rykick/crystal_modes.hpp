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

#ifndef RYKICK_CRYSTAL_MODES_HPP
#define RYKICK_CRYSTAL_MODES_HPP

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "rykick/trap_model.hpp"

namespace rykick {

enum class InternalState : std::uint8_t { kGround, kRydberg };

enum class Direction : std::uint8_t { kX, kY, kZ };

const char* to_string(Direction d);

/// Internal configuration of a linear N-ion crystal. Rydberg-labelled ions
/// carry the polarizability of `rydberg_state`.
struct CrystalState {
  std::vector<InternalState> internal;
  IonSpecies species;
  RydbergStateInfo rydberg_state;

  int n_ions() const { return static_cast<int>(internal.size()); }

  static CrystalState all_ground(int n_ions, IonSpecies species, RydbergStateInfo state);
};

/// Dimensionless equilibrium positions u_n = z_n / l, sorted ascending.
struct EquilibriumPositions {
  std::vector<double> u;
  double length_scale = 0.0;  ///< l, metres; l^3 = e^2 / (4 pi eps0 M omega_z^2)
};

struct EquilibriumOptions {
  int max_iterations = 200;
  double tolerance = 1e-13;
};

struct ModeStructure {
  Direction direction = Direction::kX;
  Eigen::VectorXd frequencies;  ///< nu_k in rad/s; descending for x/y, ascending for z
  Eigen::MatrixXd eigenvectors;  ///< column k is the normalized mode vector b_k
  CrystalState crystal;

  int n_modes() const { return static_cast<int>(frequencies.size()); }
};

/// Uniform-force coupling of one mode: W_k = sum_n b_kn and the ground-state
/// length l_k = sqrt(hbar / (M nu_k)).
struct ModeForce {
  double w = 0.0;
  double ground_length = 0.0;
};

EquilibriumPositions equilibrium_positions(int n_ions, double omega_z, const IonSpecies& species,
                                           const EquilibriumOptions& options = {});

/// Residual of the dimensionless force balance, max norm.
double equilibrium_residual(const std::vector<double>& u);

/// Hessian B^(j) of the crystal potential in units of M omega_z^2 (bare omega_z).
Eigen::MatrixXd hessian(Direction direction, const CrystalState& crystal,
                        const TrapParameters& trap, const EquilibriumPositions& positions);

/// Normal modes along `direction`. Eigenvector signs are fixed so that the
/// largest-magnitude component of each mode is positive. Throws
/// kLinearInstability if a Hessian eigenvalue is not positive.
ModeStructure mode_structure(Direction direction, const CrystalState& crystal,
                             const TrapParameters& trap);

/// Same as above with precomputed positions (they depend only on the bare
/// axial frequency and N).
ModeStructure mode_structure(Direction direction, const CrystalState& crystal,
                             const TrapParameters& trap, const EquilibriumPositions& positions);

std::vector<ModeForce> mode_force_factors(const ModeStructure& modes, const IonSpecies& species);

/// Anisotropy kappa = omega_z^2 / omega_x^2 at which the lowest transverse
/// all-ground mode of an N-ion chain softens to zero (linear-zigzag point).
/// Found by bisection to the given relative tolerance; independent of the
/// trap because the Hessian only depends on kappa once omega_x is fixed.
double critical_anisotropy(int n_ions, double relative_tolerance = 1e-6);

/// Lowest transverse all-ground eigenvalue nu_min^2 / omega_x^2 at anisotropy kappa.
double lowest_transverse_ratio(int n_ions, double kappa);

/// Trap whose bare omega_x is unchanged but whose omega_z^2 / omega_x^2 equals
/// `kappa`: gamma_dc sets omega_z and gamma_rf is re-solved to hold omega_x.
TrapParameters with_anisotropy(const TrapParameters& trap, const IonSpecies& species,
                               double kappa);

/// Same anisotropy reached with the rf drive untouched: only gamma_dc moves,
/// so omega_x rises slightly as the axial confinement is relaxed.
TrapParameters with_axial_anisotropy(const TrapParameters& trap, const IonSpecies& species,
                                     double kappa);

}  // namespace rykick

#endif  // RYKICK_CRYSTAL_MODES_HPP
