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

#include <gtest/gtest.h>

#include "rykick/constants.hpp"
#include "rykick/error.hpp"

namespace rykick {
namespace {

struct Tuned {
  TrapParameters trap;
  GateModel model;
  FourKickPlan plan;
};

const Tuned& tuned() {
  static const Tuned t = [] {
    Tuned out;
    out.trap = tune_commensurate(reference_trap(), calcium_ion(), calcium_49s());
    out.model = build_gate_model(2, {0, 1}, out.trap, calcium_ion(), calcium_49s());
    out.plan = build_four_kick(out.model);
    return out;
  }();
  return t;
}

TEST(DiscreteKick, TuningHitsRatio) {
  const ModeStructure m = mode_structure(
      Direction::kX, crystal_for(PairState::k0R, {0, 1}, 2, calcium_ion(), calcium_49s()),
      tuned().trap);
  const double nu1 = m.frequencies(0);
  const double nu2 = m.frequencies(1);
  EXPECT_LT(std::abs(4.0 * nu2 - 3.0 * nu1) / (3.0 * nu1), 1e-10);
  EXPECT_LT(std::abs(commensurability_error(tuned().trap, calcium_ion(), calcium_49s())), 1e-10);
  // Only the dc gradient moves.
  EXPECT_EQ(tuned().trap.gamma_rf, reference_trap().gamma_rf);
  EXPECT_EQ(tuned().trap.epsilon, reference_trap().epsilon);
  EXPECT_EQ(tuned().trap.omega_rf, reference_trap().omega_rf);
}

TEST(DiscreteKick, DegenerateRatioRejected) {
  EXPECT_THROW(tune_commensurate(reference_trap(), calcium_ion(), calcium_49s(), {1, 1}), Error);
  EXPECT_THROW(tune_commensurate(reference_trap(), calcium_ion(), calcium_49s(), {5, 4}), Error);
}

TEST(DiscreteKick, GateTimeIsFourComPeriods) {
  const FourKickPlan& p = tuned().plan;
  const double nu1 = tuned().model.of(PairState::k0R)[0].frequency;
  EXPECT_NEAR(p.kick_duration, constants::kTwoPi / nu1, 1e-22);
  EXPECT_EQ(p.gate_time, 4.0 * p.kick_duration);
  EXPECT_NEAR(p.gate_time / 0.669e-6, 1.0, 0.01);
  for (int s : p.pattern) EXPECT_EQ(std::abs(s), 1);
}

TEST(DiscreteKick, CalibratedPlanReachesPi) {
  const Waveform w = tuned().plan.waveform();
  EXPECT_NEAR(std::abs(delta_phase(w, tuned().model)), constants::kPi, 1e-9);
  // Bilinearity: a different guess gives the same amplitude.
  EXPECT_NEAR(build_four_kick(tuned().model, 3.0).amplitude / tuned().plan.amplitude, 1.0, 1e-12);
}

TEST(DiscreteKick, ClosureOfMixedStatesAndResidualPhonons) {
  const GateReport r = gate_conditions(tuned().plan.waveform(), tuned().model);
  for (PairState s : {PairState::k0R, PairState::kR0})
    for (const ModeOutcome& m : r.states[index(s)].modes) EXPECT_LT(std::abs(m.final_displacement), 1e-6);
  for (PairState s : {PairState::k00, PairState::kRR}) {
    const double n_com = std::norm(r.states[index(s)].modes[0].final_displacement);
    EXPECT_GE(n_com, 1e-4);
    EXPECT_LE(n_com, 1e-3);
    EXPECT_LT(std::abs(r.states[index(s)].modes[1].final_displacement), 1e-9);
  }
}

TEST(DiscreteKick, ReversedPatternNegatesDisplacements) {
  FourKickPlan flipped = tuned().plan;
  for (int& s : flipped.pattern) s = -s;
  const Waveform a = tuned().plan.waveform();
  const Waveform b = flipped.waveform();
  for (PairState s : kPairStates) {
    for (const ModeCoupling& m : tuned().model.of(s)) {
      const auto ba = displacement(a, m, 0.3e-6);
      const auto bb = displacement(b, m, 0.3e-6);
      EXPECT_LT(std::abs(ba + bb), 1e-15 + 1e-14 * std::abs(ba));
      EXPECT_NEAR(geometric_phase(a, m), geometric_phase(b, m), 1e-14);
    }
  }
}

TEST(DiscreteKick, DistortionRecalibratesAndDegrades) {
  const auto pts = distortion_scan(tuned().model, tuned().plan, {1e-4, 0.01, 1.0});
  ASSERT_EQ(pts.size(), 3u);
  for (const DistortionPoint& p : pts) EXPECT_NEAR(std::abs(p.report.delta_phi), constants::kPi, 1e-6);
  const GateReport ideal = gate_conditions(tuned().plan.waveform(), tuned().model);
  const double ideal_infidelity = ideal.fidelity_terms.displacement_loss;
  EXPECT_NEAR(pts[0].infidelity, ideal_infidelity, 0.05 * ideal_infidelity + 1e-6);
  EXPECT_GT(pts[2].infidelity, pts[1].infidelity);
  EXPECT_NEAR(pts[0].amplitude / tuned().plan.amplitude, 1.0, 1e-2);
}

TEST(DiscreteKick, DistortionInputsValidated) {
  EXPECT_THROW(distorted_kicks(tuned().plan, 1.0, 0.0), Error);
  EXPECT_THROW(distorted_kicks(tuned().plan, 1.0, 0.1, 2), Error);
  EXPECT_THROW(build_four_kick(tuned().model, -1.0), Error);
}

}  // namespace
}  // namespace rykick
