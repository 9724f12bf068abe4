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

#include "rykick/discrete_kick.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>

#include <boost/math/tools/roots.hpp>

#include "rykick/constants.hpp"
#include "rykick/crystal_modes.hpp"
#include "rykick/error.hpp"

namespace rykick {

namespace {

struct ZeroRModes {
  double nu1 = 0.0;
  double nu2 = 0.0;
};

ZeroRModes zero_r_modes(const TrapParameters& trap, const IonSpecies& species,
                        const RydbergStateInfo& rydberg) {
  const CrystalState c = crystal_for(PairState::k0R, {0, 1}, 2, species, rydberg);
  const ModeStructure m = mode_structure(Direction::kX, c, trap);
  return {m.frequencies[0], m.frequencies[1]};
}

void validate(CommensurateTarget t) {
  if (t.p <= 0 || t.q <= 0) throw Error(ErrorCode::kValidation, "ratio terms must be positive");
  if (t.p >= t.q)
    throw Error(ErrorCode::kValidation, "Rock cannot reach or exceed COM: need p/q < 1");
}

}  // namespace

double commensurability_error(const TrapParameters& trap, const IonSpecies& species,
                              const RydbergStateInfo& rydberg, CommensurateTarget target) {
  validate(target);
  const ZeroRModes m = zero_r_modes(trap, species, rydberg);
  return (target.q * m.nu2 - target.p * m.nu1) / (target.p * m.nu1);
}

TrapParameters tune_commensurate(const TrapParameters& trap, const IonSpecies& species,
                                 const RydbergStateInfo& rydberg, CommensurateTarget target) {
  validate(trap);
  validate(target);
  auto at = [&](double gamma_dc) {
    TrapParameters t = trap;
    t.gamma_dc = gamma_dc;
    return t;
  };
  auto mismatch = [&](double gamma_dc) -> std::optional<double> {
    try {
      return commensurability_error(at(gamma_dc), species, rydberg, target);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kUnstableTrap || e.code() == ErrorCode::kLinearInstability)
        return std::nullopt;
      throw;
    }
  };

  // Geometric grid around the start; keep the sign change closest to it.
  const double g0 = trap.gamma_dc;
  constexpr int kGrid = 400;
  constexpr double kLo = 1e-3;
  constexpr double kHi = 20.0;
  std::optional<std::pair<double, double>> bracket;
  double best_distance = std::numeric_limits<double>::infinity();
  bool any_unstable = false;
  std::optional<double> prev_val;
  double prev_x = 0.0;
  for (int i = 0; i <= kGrid; ++i) {
    const double x = g0 * kLo * std::pow(kHi / kLo, static_cast<double>(i) / kGrid);
    const std::optional<double> v = mismatch(x);
    if (!v) any_unstable = true;
    if (v && prev_val && ((*v <= 0.0) != (*prev_val <= 0.0))) {
      const double d = std::abs(std::log(0.5 * (x + prev_x) / g0));
      if (d < best_distance) {
        best_distance = d;
        bracket = std::make_pair(prev_x, x);
      }
    }
    prev_val = v;
    prev_x = x;
  }
  if (!bracket) {
    throw Error(any_unstable ? ErrorCode::kUnstableTrap : ErrorCode::kNoConvergence,
                "no stable gamma_dc reaches the commensurate ratio");
  }

  auto f = [&](double x) { return *mismatch(x); };
  std::uintmax_t iterations = 200;
  const auto root = boost::math::tools::toms748_solve(
      f, bracket->first, bracket->second, boost::math::tools::eps_tolerance<double>(52),
      iterations);
  const double x = 0.5 * (root.first + root.second);
  const TrapParameters tuned = at(x);
  if (std::abs(commensurability_error(tuned, species, rydberg, target)) > 1e-10)
    throw Error(ErrorCode::kNoConvergence, "commensurate tuning missed tolerance");
  return tuned;
}

Waveform FourKickPlan::waveform() const {
  std::vector<double> field;
  field.reserve(pattern.size());
  for (int s : pattern) field.push_back(amplitude * s);
  return Waveform::slices(gate_time, std::move(field));
}

FourKickPlan build_four_kick(const GateModel& model, double amplitude_guess) {
  if (!(amplitude_guess > 0.0))
    throw Error(ErrorCode::kValidation, "amplitude guess must be positive");
  const double nu1 = model.of(PairState::k0R).front().frequency;
  FourKickPlan plan;
  plan.kick_duration = constants::kTwoPi / nu1;
  plan.gate_time = 4.0 * plan.kick_duration;
  plan.amplitude = amplitude_guess;
  const double dphi = delta_phase(plan.waveform(), model);
  if (dphi == 0.0) throw Error(ErrorCode::kNoConvergence, "four-kick pattern gives no phase");
  plan.phase_sign = dphi > 0.0 ? 1 : -1;
  plan.amplitude = amplitude_guess * std::sqrt(constants::kPi / std::abs(dphi));
  return plan;
}

Waveform distorted_kicks(const FourKickPlan& plan, double amplitude, double g, int n_slices) {
  if (!(g > 0.0)) throw Error(ErrorCode::kValidation, "distortion parameter g must be positive");
  if (n_slices < 4) throw Error(ErrorCode::kValidation, "need at least 4 slices");
  const double h = plan.gate_time / n_slices;
  std::vector<double> field(static_cast<std::size_t>(n_slices));
  for (int i = 0; i < n_slices; ++i) {
    const double t = (i + 0.5) * h;
    const double s = std::sin(constants::kPi * t / plan.kick_duration);
    field[static_cast<std::size_t>(i)] = 2.0 * amplitude / constants::kPi * std::atan(s / g);
  }
  return Waveform::slices(plan.gate_time, std::move(field));
}

std::vector<DistortionPoint> distortion_scan(const GateModel& model, const FourKickPlan& plan,
                                             const std::vector<double>& g_values, int n_slices) {
  std::vector<DistortionPoint> out;
  out.reserve(g_values.size());
  for (double g : g_values) {
    const Waveform trial = distorted_kicks(plan, 1.0, g, n_slices);
    const double dphi = std::abs(delta_phase(trial, model));
    if (dphi == 0.0) throw Error(ErrorCode::kNoConvergence, "distorted pulse gives no phase");
    DistortionPoint p;
    p.g = g;
    p.amplitude = std::sqrt(constants::kPi / dphi);
    p.report = gate_conditions(distorted_kicks(plan, p.amplitude, g, n_slices), model);
    p.infidelity =
        1.0 - (1.0 - p.report.fidelity_terms.phase_error) *
                  (1.0 - p.report.fidelity_terms.displacement_loss);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace rykick
