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

#ifndef RYKICK_PHASE_DYNAMICS_HPP
#define RYKICK_PHASE_DYNAMICS_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "rykick/crystal_modes.hpp"
#include "rykick/trap_model.hpp"
#include "rykick/waveform.hpp"

namespace rykick {

/// Ions (0-based) that are mapped to the Rydberg state during the gate.
struct GatePair {
  int first = 0;
  int second = 1;
};

void validate(const GatePair& pair, int n_ions);

/// Internal state of the gate pair; spectators stay in the ground state.
enum class PairState : std::uint8_t { k00, k0R, kR0, kRR };

inline constexpr std::array<PairState, 4> kPairStates = {PairState::k00, PairState::k0R,
                                                         PairState::kR0, PairState::kRR};

const char* to_string(PairState s);

/// Weight of each state in delta_phi = phi(RR) + phi(00) - phi(0R) - phi(R0).
inline int phase_sign(PairState s) {
  return (s == PairState::k00 || s == PairState::kRR) ? 1 : -1;
}

inline std::size_t index(PairState s) { return static_cast<std::size_t>(s); }

CrystalState crystal_for(PairState sigma, GatePair pair, int n_ions, const IonSpecies& species,
                         const RydbergStateInfo& rydberg);

/// Uniform-field coupling of one normal mode: beta = -i g int E e^{-i nu t} dt
/// with g = q W l / hbar (units 1/(V/m s)).
struct ModeCoupling {
  double frequency = 0.0;  ///< nu_k, rad/s
  double coupling = 0.0;   ///< g_k
  double w = 0.0;
  double ground_length = 0.0;
};

/// Mode data for the four internal configurations of one gate pair.
struct GateModel {
  int n_ions = 0;
  GatePair pair;
  TrapParameters trap;
  IonSpecies species;
  RydbergStateInfo rydberg;
  std::array<ModeStructure, 4> modes;
  std::array<std::vector<ModeCoupling>, 4> couplings;

  const std::vector<ModeCoupling>& of(PairState s) const { return couplings[index(s)]; }
};

/// Builds mode structures (transverse x) for all four configurations.
/// Propagates kLinearInstability / kUnstableTrap.
GateModel build_gate_model(int n_ions, GatePair pair, const TrapParameters& trap,
                           const IonSpecies& species, const RydbergStateInfo& rydberg);

/// Closed-form displacement beta(t) in ground-state-length units.
std::complex<double> displacement(const Waveform& waveform, const ModeCoupling& mode, double t);

/// beta at each of the ascending `times` (one pass over the waveform).
std::vector<std::complex<double>> displacement_trajectory(const Waveform& waveform,
                                                          const ModeCoupling& mode,
                                                          std::span<const double> times);

/// Geometric phase phi_k(t_g), closed form.
double geometric_phase(const Waveform& waveform, const ModeCoupling& mode);

/// phi^(sigma)(t_g) = sum_k phi_k.
double total_phase(const Waveform& waveform, std::span<const ModeCoupling> modes);

/// delta_phi = phi(RR) + phi(00) - phi(0R) - phi(R0).
double delta_phase(const Waveform& waveform, const GateModel& model);

struct ModeOutcome {
  std::complex<double> final_displacement;
  double phase = 0.0;
  double max_abs_im = 0.0;  ///< max_t |Im beta|
  double max_abs = 0.0;     ///< max_t |beta|
};

struct StateOutcome {
  PairState sigma = PairState::k00;
  std::vector<ModeOutcome> modes;
  double total_phase = 0.0;
};

struct FidelityTerms {
  double phase_error = 0.0;        ///< 1 - cos^2((delta_phi -+ pi)/2)
  double displacement_loss = 0.0;  ///< 1 - motional overlap
  double lifetime_loss = 0.0;      ///< 1 - exp(-2 t_g / tau)
};

struct GateReport {
  double gate_time = 0.0;
  std::array<StateOutcome, 4> states;
  double closure_residual = 0.0;  ///< max_{k,sigma} |beta_k(t_g)|
  double delta_phi = 0.0;
  double e_max = 0.0;      ///< V/m
  double x_max = 0.0;      ///< max |Im beta|, the headline excursion
  double x_max_abs = 0.0;  ///< max |beta|
  FidelityTerms fidelity_terms;
  double fidelity = 0.0;
};

struct SimulationOptions {
  int min_samples = 1000;          ///< trajectory grid size lower bound
  int samples_per_period = 200;    ///< per period of the fastest mode
  std::vector<double> thermal_nbar;  ///< per mode; empty means ground-state cooled
};

/// Uniform sampling grid over [0, t_g] satisfying both sampling bounds.
std::vector<double> sampling_times(const Waveform& waveform, const GateModel& model,
                                   const SimulationOptions& options);

/// Final displacements, phases, excursions and fidelity terms for all states.
GateReport gate_conditions(const Waveform& waveform, const GateModel& model,
                           const SimulationOptions& options = {});

struct TrajectoryRecord {
  std::vector<double> times;
  /// beta[sigma][k][i] at times[i]
  std::array<std::vector<std::vector<std::complex<double>>>, 4> beta;
};

TrajectoryRecord trajectories(const Waveform& waveform, const GateModel& model,
                              const SimulationOptions& options = {});

struct FidelityEstimate {
  double total = 0.0;
  double phase = 0.0;
  double displacement = 0.0;
  double lifetime = 0.0;
};

/// Error budget: F = F_phase F_disp F_lifetime with
///   F_lifetime = exp(-2 t_g / tau)     (both gate ions excited for the full gate)
///   F_disp     = |1/4 sum_sigma prod_k exp(-|beta_k|^2 (2 nbar_k + 1) / 2)|
///   F_phase    = cos^2((delta_phi - pi)/2), with -pi accepted as locally equivalent.
FidelityEstimate fidelity_estimate(const GateReport& report, const RydbergStateInfo& rydberg,
                                   double gate_time, std::span<const double> thermal_nbar = {});

}  // namespace rykick

#endif  // RYKICK_PHASE_DYNAMICS_HPP
