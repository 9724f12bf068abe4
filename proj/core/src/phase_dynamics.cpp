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

#include "rykick/phase_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rykick/constants.hpp"
#include "rykick/detail/divided_exp.hpp"
#include "rykick/error.hpp"

namespace rykick {

using cd = std::complex<double>;
using detail::nested_oscillatory_integral;
using detail::oscillatory_integral;

void validate(const GatePair& pair, int n_ions) {
  if (pair.first < 0 || pair.second < 0 || pair.first >= n_ions || pair.second >= n_ions)
    throw Error(ErrorCode::kValidation, "gate ion index out of range");
  if (pair.first == pair.second)
    throw Error(ErrorCode::kValidation, "gate ions must be distinct");
}

const char* to_string(PairState s) {
  switch (s) {
    case PairState::k00: return "00";
    case PairState::k0R: return "0R";
    case PairState::kR0: return "R0";
    case PairState::kRR: return "RR";
  }
  return "?";
}

CrystalState crystal_for(PairState sigma, GatePair pair, int n_ions, const IonSpecies& species,
                         const RydbergStateInfo& rydberg) {
  validate(pair, n_ions);
  CrystalState c = CrystalState::all_ground(n_ions, species, rydberg);
  const auto a = static_cast<std::size_t>(pair.first);
  const auto b = static_cast<std::size_t>(pair.second);
  if (sigma == PairState::kR0 || sigma == PairState::kRR) c.internal[a] = InternalState::kRydberg;
  if (sigma == PairState::k0R || sigma == PairState::kRR) c.internal[b] = InternalState::kRydberg;
  return c;
}

GateModel build_gate_model(int n_ions, GatePair pair, const TrapParameters& trap,
                           const IonSpecies& species, const RydbergStateInfo& rydberg) {
  validate(trap);
  validate(species);
  validate(rydberg);
  validate(pair, n_ions);
  GateModel model;
  model.n_ions = n_ions;
  model.pair = pair;
  model.trap = trap;
  model.species = species;
  model.rydberg = rydberg;
  const double omega_z = bare_frequencies(trap, species).omega_z;
  const EquilibriumPositions positions = equilibrium_positions(n_ions, omega_z, species);
  for (PairState s : kPairStates) {
    const CrystalState crystal = crystal_for(s, pair, n_ions, species, rydberg);
    ModeStructure modes = mode_structure(Direction::kX, crystal, trap, positions);
    const std::vector<ModeForce> forces = mode_force_factors(modes, species);
    std::vector<ModeCoupling>& out = model.couplings[index(s)];
    out.reserve(forces.size());
    for (std::size_t k = 0; k < forces.size(); ++k) {
      out.push_back({modes.frequencies[static_cast<Eigen::Index>(k)],
                     species.charge * forces[k].w * forces[k].ground_length / constants::kHbar,
                     forces[k].w, forces[k].ground_length});
    }
    model.modes[index(s)] = std::move(modes);
  }
  return model;
}

namespace {

// int over slice [t0, t0 + h] of e^{i a tau}
cd slice_integral(double a, double t0, double h) {
  return std::polar(1.0, a * t0) * oscillatory_integral(a, h);
}

cd fourier_drive(const std::vector<ExpTerm>& terms, double nu, double t) {
  cd sum = 0.0;
  for (const ExpTerm& term : terms) sum += term.coefficient * oscillatory_integral(term.rate - nu, t);
  return sum;
}

}  // namespace

std::complex<double> displacement(const Waveform& waveform, const ModeCoupling& mode, double t) {
  const double tc = std::clamp(t, 0.0, waveform.duration());
  const std::vector<double> times{tc};
  return displacement_trajectory(waveform, mode, times).front();
}

std::vector<std::complex<double>> displacement_trajectory(const Waveform& waveform,
                                                          const ModeCoupling& mode,
                                                          std::span<const double> times) {
  std::vector<cd> out;
  out.reserve(times.size());
  const cd pref(0.0, -mode.coupling);
  const double nu = mode.frequency;
  if (waveform.kind() == WaveformKind::kFourier) {
    const std::vector<ExpTerm> terms = waveform.exp_terms();
    for (double t : times) out.push_back(pref * fourier_drive(terms, nu, t));
    return out;
  }
  const auto field = waveform.slice_field();
  const int n = waveform.n_slices();
  const double h = waveform.slice_duration();
  const cd full = oscillatory_integral(-nu, h);  // same for every complete slice
  cd acc = 0.0;  // contribution of completed slices
  int done = 0;
  double prev = -1.0;
  for (double t : times) {
    if (t < prev) throw Error(ErrorCode::kValidation, "trajectory times must be ascending");
    prev = t;
    const double tc = std::clamp(t, 0.0, waveform.duration());
    while (done < n && (done + 1) * h <= tc) {
      acc += field[static_cast<std::size_t>(done)] * std::polar(1.0, -nu * done * h) * full;
      ++done;
    }
    cd partial = 0.0;
    if (done < n) {
      const double t0 = done * h;
      partial = field[static_cast<std::size_t>(done)] * slice_integral(-nu, t0, tc - t0);
    }
    out.push_back(pref * (acc + partial));
  }
  return out;
}

double geometric_phase(const Waveform& waveform, const ModeCoupling& mode) {
  const double nu = mode.frequency;
  const double g2 = mode.coupling * mode.coupling;
  if (waveform.kind() == WaveformKind::kFourier) {
    const std::vector<ExpTerm> terms = waveform.exp_terms();
    const double t_g = waveform.duration();
    cd sum = 0.0;
    for (const ExpTerm& outer : terms)
      for (const ExpTerm& inner : terms)
        sum += inner.coefficient * outer.coefficient *
               nested_oscillatory_integral(inner.rate + nu, outer.rate - nu, t_g);
    return g2 * sum.imag();
  }
  const auto field = waveform.slice_field();
  const double h = waveform.slice_duration();
  const double diag = nested_oscillatory_integral(nu, -nu, h).imag();
  const cd full = oscillatory_integral(nu, h);
  cd running = 0.0;
  double phi = 0.0;
  for (std::size_t i = 0; i < field.size(); ++i) {
    const double e = field[i];
    const cd s = std::polar(1.0, nu * static_cast<double>(i) * h) * full;
    phi += e * ((running * std::conj(s)).imag() + e * diag);
    running += e * s;
  }
  return g2 * phi;
}

double total_phase(const Waveform& waveform, std::span<const ModeCoupling> modes) {
  double phi = 0.0;
  for (const ModeCoupling& m : modes) phi += geometric_phase(waveform, m);
  return phi;
}

double delta_phase(const Waveform& waveform, const GateModel& model) {
  double d = 0.0;
  for (PairState s : kPairStates) d += phase_sign(s) * total_phase(waveform, model.of(s));
  return d;
}

std::vector<double> sampling_times(const Waveform& waveform, const GateModel& model,
                                   const SimulationOptions& options) {
  if (options.min_samples < 2 || options.samples_per_period < 1)
    throw Error(ErrorCode::kValidation, "invalid sampling options");
  double nu_max = 0.0;
  for (const auto& modes : model.couplings)
    for (const ModeCoupling& m : modes) nu_max = std::max(nu_max, m.frequency);
  const double t_g = waveform.duration();
  const double periods = nu_max * t_g / constants::kTwoPi;
  const auto by_period =
      static_cast<long>(std::ceil(periods * options.samples_per_period)) + 1;
  const long n = std::max<long>(options.min_samples, by_period);
  std::vector<double> times(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i)
    times[static_cast<std::size_t>(i)] = t_g * static_cast<double>(i) / static_cast<double>(n - 1);
  times.back() = t_g;
  return times;
}

TrajectoryRecord trajectories(const Waveform& waveform, const GateModel& model,
                              const SimulationOptions& options) {
  TrajectoryRecord rec;
  rec.times = sampling_times(waveform, model, options);
  for (PairState s : kPairStates) {
    auto& per_mode = rec.beta[index(s)];
    for (const ModeCoupling& m : model.of(s))
      per_mode.push_back(displacement_trajectory(waveform, m, rec.times));
  }
  return rec;
}

GateReport gate_conditions(const Waveform& waveform, const GateModel& model,
                           const SimulationOptions& options) {
  GateReport r;
  r.gate_time = waveform.duration();
  r.e_max = waveform.peak_field();
  const std::vector<double> times = sampling_times(waveform, model, options);
  for (PairState s : kPairStates) {
    StateOutcome& st = r.states[index(s)];
    st.sigma = s;
    for (const ModeCoupling& m : model.of(s)) {
      const std::vector<cd> traj = displacement_trajectory(waveform, m, times);
      ModeOutcome mo;
      mo.final_displacement = traj.back();
      mo.phase = geometric_phase(waveform, m);
      for (const cd& b : traj) {
        mo.max_abs_im = std::max(mo.max_abs_im, std::abs(b.imag()));
        mo.max_abs = std::max(mo.max_abs, std::abs(b));
      }
      st.total_phase += mo.phase;
      r.closure_residual = std::max(r.closure_residual, std::abs(mo.final_displacement));
      r.x_max = std::max(r.x_max, mo.max_abs_im);
      r.x_max_abs = std::max(r.x_max_abs, mo.max_abs);
      st.modes.push_back(mo);
    }
    r.delta_phi += phase_sign(s) * st.total_phase;
  }
  const FidelityEstimate f =
      fidelity_estimate(r, model.rydberg, r.gate_time, options.thermal_nbar);
  r.fidelity_terms = {1.0 - f.phase, 1.0 - f.displacement, 1.0 - f.lifetime};
  r.fidelity = f.total;
  return r;
}

FidelityEstimate fidelity_estimate(const GateReport& report, const RydbergStateInfo& rydberg,
                                   double gate_time, std::span<const double> thermal_nbar) {
  if (gate_time < 0.0) throw Error(ErrorCode::kValidation, "gate time must be non-negative");
  for (double n : thermal_nbar)
    if (!(n >= 0.0)) throw Error(ErrorCode::kValidation, "thermal occupation must be >= 0");
  FidelityEstimate f;
  f.lifetime = rydberg.lifetime > 0.0 ? std::exp(-2.0 * gate_time / rydberg.lifetime) : 1.0;
  double overlap = 0.0;
  for (const StateOutcome& st : report.states) {
    double exponent = 0.0;
    for (std::size_t k = 0; k < st.modes.size(); ++k) {
      const double nbar = k < thermal_nbar.size() ? thermal_nbar[k] : 0.0;
      exponent += std::norm(st.modes[k].final_displacement) * (2.0 * nbar + 1.0) / 2.0;
    }
    overlap += std::exp(-exponent);
  }
  f.displacement = std::abs(overlap / 4.0);
  const double target = report.delta_phi >= 0.0 ? constants::kPi : -constants::kPi;
  const double c = std::cos((report.delta_phi - target) / 2.0);
  f.phase = c * c;
  f.total = f.phase * f.displacement * f.lifetime;
  return f;
}

}  // namespace rykick
