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


#include <vector>

#include <benchmark/benchmark.h>

#include "rykick/crystal_modes.hpp"
#include "rykick/discrete_kick.hpp"
#include "rykick/phase_dynamics.hpp"
#include "rykick/trap_model.hpp"
#include "rykick/waveform_optimizer.hpp"

namespace {

using namespace rykick;

const GateModel& two_ion() {
  static const GateModel m =
      build_gate_model(2, {0, 1}, reference_trap(), calcium_ion(), calcium_49s());
  return m;
}

TrapParameters linear_trap(int n) {
  if (n <= 2) return reference_trap();
  return with_axial_anisotropy(reference_trap(), calcium_ion(), 0.9 * critical_anisotropy(n));
}

void BM_ModeStructure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const TrapParameters trap = linear_trap(n);
  const CrystalState crystal = CrystalState::all_ground(n, calcium_ion(), calcium_49s());
  for (auto _ : state) benchmark::DoNotOptimize(mode_structure(Direction::kX, crystal, trap));
}
BENCHMARK(BM_ModeStructure)->Arg(2)->Arg(6)->Arg(20)->Arg(50);

void BM_Displacement(benchmark::State& state) {
  std::vector<double> field(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < field.size(); ++i) field[i] = static_cast<double>(i % 7) - 3.0;
  const Waveform w = Waveform::slices(0.67e-6, field);
  const ModeCoupling& m = two_ion().of(PairState::k0R)[0];
  for (auto _ : state) benchmark::DoNotOptimize(displacement(w, m, 0.67e-6));
}
BENCHMARK(BM_Displacement)->Arg(128)->Arg(1024);

void BM_GeometricPhase(benchmark::State& state) {
  std::vector<double> field(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < field.size(); ++i) field[i] = static_cast<double>(i % 5) - 2.0;
  const Waveform w = Waveform::slices(0.67e-6, field);
  for (auto _ : state) benchmark::DoNotOptimize(delta_phase(w, two_ion()));
}
BENCHMARK(BM_GeometricPhase)->Arg(128)->Arg(1024);

void BM_SynthesizeSlices(benchmark::State& state) {
  OptimizerOptions o;
  o.n_slices = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(synthesize(two_ion(), 0.67e-6, o));
}
BENCHMARK(BM_SynthesizeSlices)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_SynthesizeFourier(benchmark::State& state) {
  OptimizerOptions o;
  o.method = Method::kFourier;
  o.n_terms = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(synthesize(two_ion(), 0.67e-6, o));
}
BENCHMARK(BM_SynthesizeFourier)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_FourKick(benchmark::State& state) {
  const TrapParameters tuned = tune_commensurate(reference_trap(), calcium_ion(), calcium_49s());
  const GateModel model = build_gate_model(2, {0, 1}, tuned, calcium_ion(), calcium_49s());
  for (auto _ : state) benchmark::DoNotOptimize(build_four_kick(model));
}
BENCHMARK(BM_FourKick)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
