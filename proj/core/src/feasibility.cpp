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

#include "rykick/feasibility.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "rykick/constants.hpp"
#include "rykick/error.hpp"
#include "rykick/parallel.hpp"

namespace rykick {

FeasibilityLimits FeasibilityLimits::for_state(const RydbergStateInfo& state, bool placeholder,
                                               double x_max_limit) {
  FeasibilityLimits l;
  l.it_field = state.it_field_limit;
  l.x_max_limit = x_max_limit;
  l.reference_n = state.principal_n;
  l.reference_it_field = state.it_field_limit;
  l.placeholder_it_field = placeholder;
  validate(l);
  return l;
}

void validate(const FeasibilityLimits& limits) {
  if (!(limits.it_field > 0.0)) throw Error(ErrorCode::kValidation, "it_field must be > 0");
  if (!(limits.x_max_limit > 0.0)) throw Error(ErrorCode::kValidation, "x_max_limit must be > 0");
}

std::string FeasibilityCheck::verdict() const {
  if (it_violation && excursion_violation) return "it_and_excursion_violation";
  if (it_violation) return "it_violation";
  if (excursion_violation) return "excursion_violation";
  return "feasible";
}

FeasibilityCheck check(const GateReport& report, const FeasibilityLimits& limits) {
  validate(limits);
  FeasibilityCheck c;
  c.placeholder_it_field = limits.placeholder_it_field;
  if (report.e_max > 0.0) c.it_margin = limits.it_field / report.e_max;
  if (report.x_max > 0.0) c.excursion_margin = limits.x_max_limit / report.x_max;
  c.it_violation = report.e_max > limits.it_field;
  c.excursion_violation = report.x_max > limits.x_max_limit;
  c.feasible = !c.it_violation && !c.excursion_violation;
  return c;
}

RydbergStateInfo scale_state(const RydbergStateInfo& reference, int target_n) {
  validate(reference);
  if (reference.principal_n <= 0 || !(reference.lifetime > 0.0) ||
      !(reference.it_field_limit > 0.0))
    throw Error(ErrorCode::kValidation, "reference state needs n, lifetime and IT field");
  if (target_n <= 0) throw Error(ErrorCode::kValidation, "principal quantum number must be > 0");
  const double r = static_cast<double>(target_n) / reference.principal_n;
  RydbergStateInfo s = reference;
  s.principal_n = target_n;
  s.polarizability = reference.polarizability * std::pow(r, ScalingLaws::kPolarizabilityExponent);
  s.it_field_limit = reference.it_field_limit * std::pow(r, ScalingLaws::kItExponent);
  s.lifetime = reference.lifetime * std::pow(r, ScalingLaws::kLifetimeExponent);
  const auto digits = static_cast<std::size_t>(
      std::find_if(reference.label.begin(), reference.label.end(),
                   [](unsigned char ch) { return !std::isdigit(ch); }) -
      reference.label.begin());
  if (digits > 0) s.label = std::to_string(target_n) + reference.label.substr(digits);
  return s;
}

double it_field_for_admixture(double operating_field, double operating_admixture,
                              double target_admixture) {
  if (!(operating_field > 0.0) || !(operating_admixture > 0.0) || !(target_admixture > 0.0))
    throw Error(ErrorCode::kValidation, "fields and admixtures must be > 0");
  return operating_field * std::sqrt(target_admixture / operating_admixture);
}

double lifetime_infidelity(double gate_time, double lifetime) {
  if (!(gate_time >= 0.0) || !(lifetime > 0.0))
    throw Error(ErrorCode::kValidation, "need t_g >= 0 and lifetime > 0");
  return -std::expm1(-2.0 * gate_time / lifetime);
}

namespace {

// e_max of the optimum at t_g, or +inf when no waveform exists there.
double optimal_field(const GateModel& model, double t_g, const OptimizerOptions& options) {
  try {
    return synthesize(model, t_g, options).report.e_max;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kEmptyNullSpace || e.code() == ErrorCode::kNoConvergence)
      return std::numeric_limits<double>::infinity();
    throw;
  }
}

}  // namespace

MinimalGateTime minimal_gate_time(int n, const TrapParameters& trap, const IonSpecies& species,
                                  const RydbergStateInfo& reference,
                                  const MinimalGateTimeOptions& options) {
  if (!(options.t_min > 0.0) || !(options.t_max > options.t_min) || !(options.grid_step > 0.0) ||
      !(options.tolerance > 0.0))
    throw Error(ErrorCode::kValidation, "invalid gate-time search range");
  const RydbergStateInfo state = scale_state(reference, n);
  const GateModel model = build_gate_model(2, {0, 1}, trap, species, state);
  const double limit = state.it_field_limit;

  double lo = 0.0;
  double hi = 0.0;
  double hi_field = 0.0;
  bool found = false;
  const int steps = static_cast<int>(std::floor((options.t_max - options.t_min) / options.grid_step + 1e-9));
  for (int i = 0; i <= steps; ++i) {
    const double t = options.t_min + i * options.grid_step;
    const double e = optimal_field(model, t, options.optimizer);
    if (e <= limit) {
      hi = t;
      hi_field = e;
      lo = i > 0 ? t - options.grid_step : t;
      found = true;
      break;
    }
  }
  if (!found)
    throw Error(ErrorCode::kNoConvergence,
                "no gate time up to t_max meets the IT field for n = " + std::to_string(n));
  while (hi - lo > options.tolerance) {
    const double mid = 0.5 * (lo + hi);
    const double e = optimal_field(model, mid, options.optimizer);
    if (e <= limit) {
      hi = mid;
      hi_field = e;
    } else {
      lo = mid;
    }
  }
  return {n, hi, hi_field, limit, lifetime_infidelity(hi, state.lifetime)};
}

std::vector<MinimalGateTime> scaling_scan(const std::vector<int>& ns, const TrapParameters& trap,
                                          const IonSpecies& species,
                                          const RydbergStateInfo& reference,
                                          const MinimalGateTimeOptions& options,
                                          unsigned threads) {
  std::vector<MinimalGateTime> out(ns.size());
  parallel_for(ns.size(), threads, [&](std::size_t i) {
    out[i] = minimal_gate_time(ns[i], trap, species, reference, options);
  });
  return out;
}

std::vector<FieldScanPoint> field_scan(const GateModel& model, const std::vector<int>& slice_counts,
                                       double slice_width, const OptimizerOptions& options,
                                       unsigned threads) {
  if (!(slice_width > 0.0)) throw Error(ErrorCode::kValidation, "slice width must be > 0");
  std::vector<int> counts = slice_counts;
  std::sort(counts.begin(), counts.end());
  counts.erase(std::unique(counts.begin(), counts.end()), counts.end());
  std::vector<SynthesisResult> optima(counts.size(), {{}, {}});
  std::vector<bool> ok(counts.size(), false);
  parallel_for(counts.size(), threads, [&](std::size_t i) {
    OptimizerOptions o = options;
    o.method = Method::kSlices;
    o.n_slices = counts[i];
    try {
      optima[i] = synthesize(model, counts[i] * slice_width, o);
      ok[i] = true;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kEmptyNullSpace && e.code() != ErrorCode::kInsufficientSlices)
        throw;
    }
  });

  std::vector<FieldScanPoint> out;
  std::size_t best = counts.size();  // index of the best optimum so far
  for (std::size_t i = 0; i < counts.size(); ++i) {
    FieldScanPoint p;
    p.n_slices = counts[i];
    p.gate_time = counts[i] * slice_width;
    p.e_max = ok[i] ? optima[i].report.e_max : std::numeric_limits<double>::infinity();
    p.x_max = ok[i] ? optima[i].report.x_max : std::numeric_limits<double>::infinity();
    p.closure_residual = ok[i] ? optima[i].report.closure_residual
                               : std::numeric_limits<double>::infinity();
    p.required_field = p.e_max;
    p.required_source = p.gate_time;
    if (best < counts.size() && optima[best].report.e_max < p.e_max) {
      // Pad the earlier optimum with idle slices and confirm it is still a gate.
      const auto src = optima[best].optimal.waveform.slice_field();
      std::vector<double> padded(src.begin(), src.end());
      padded.resize(static_cast<std::size_t>(counts[i]), 0.0);
      const GateReport r =
          gate_conditions(Waveform::slices(p.gate_time, std::move(padded)), model,
                          options.simulation);
      if (r.closure_residual < 1e-8 && std::abs(std::abs(r.delta_phi) - constants::kPi) < 1e-6) {
        p.required_field = r.e_max;
        p.required_source = counts[best] * slice_width;
      }
    }
    if (ok[i] && (best == counts.size() || optima[i].report.e_max <= optima[best].report.e_max))
      best = i;
    out.push_back(p);
  }
  return out;
}

double steep_rise_onset(const std::vector<FieldScanPoint>& scan, double slope_threshold,
                        double relative_window) {
  if (!(relative_window > 0.0)) throw Error(ErrorCode::kValidation, "relative_window must be positive");
  std::vector<double> lt;
  std::vector<double> le;
  for (const FieldScanPoint& p : scan) {
    if (!std::isfinite(p.required_field) || !(p.required_field > 0.0) || !(p.gate_time > 0.0)) continue;
    if (!lt.empty() && !(std::log(p.gate_time) > lt.back())) continue;
    lt.push_back(std::log(p.gate_time));
    le.push_back(std::log(p.required_field));
  }
  const double span = std::log1p(relative_window);
  // Walk from the long-gate end towards shorter gates; the onset is the first
  // boundary where the slope reaches the threshold.
  std::vector<double> slope;
  std::size_t j = 0;
  for (std::size_t i = 0; i < lt.size(); ++i) {
    // Log-log slope over [t, (1 + w) t], the far end interpolated in log space,
    // so the estimate does not depend on the grid spacing.
    const double target = lt[i] + span;
    if (target > lt.back()) break;
    j = std::max(j, i);
    while (lt[j + 1] < target) ++j;
    const double f = (target - lt[j]) / (lt[j + 1] - lt[j]);
    const double far = le[j] + f * (le[j + 1] - le[j]);
    slope.push_back((le[i] - far) / span);
  }
  for (std::size_t i = slope.size(); i-- > 1;) {
    if (slope[i] >= slope_threshold) return std::numeric_limits<double>::quiet_NaN();
    if (slope[i - 1] >= slope_threshold) return std::exp(0.5 * (lt[i - 1] + lt[i]));
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace rykick
