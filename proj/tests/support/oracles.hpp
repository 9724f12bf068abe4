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

// Quadrature oracles for displacements and phases. They only use
// Waveform::value and plain Gauss-Kronrod integration, never the closed forms
// under test.

#ifndef RYKICK_TESTS_ORACLES_HPP
#define RYKICK_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "rykick/phase_dynamics.hpp"
#include "rykick/waveform.hpp"

namespace rykick::oracle {

using cd = std::complex<double>;

/// Panel edges on which the waveform is smooth and no panel spans more than
/// about a third of the fastest oscillation: slice boundaries, each split
/// further when needed, or a uniform grid for Fourier waveforms.
inline std::vector<double> panel_edges(const Waveform& w, double nu, double t_end) {
  std::vector<double> edges{0.0};
  const double t_g = w.duration();
  const bool slices = w.kind() == WaveformKind::kSlices;
  const double fastest = slices ? nu : w.term_frequency(w.n_terms()) + nu;
  const int blocks = slices ? w.n_slices() : 1;
  const double block = t_g / blocks;
  const int per_block = std::max(1, static_cast<int>(std::ceil(fastest * block / 2.0)));
  const int panels = blocks * per_block;
  for (int i = 1; i <= panels; ++i) {
    // Slice boundaries are hit exactly so no panel straddles two slices.
    const double e = std::min(i % per_block == 0 ? (i / per_block) * block : i * (block / per_block), t_end);
    if (e > edges.back()) edges.push_back(e);
    if (e >= t_end) break;
  }
  return edges;
}

/// Midpoint-sampled field so that slice edges are never evaluated exactly.
inline double field_on(const Waveform& w, double a, double b, double t) {
  const double mid = 0.5 * (a + b);
  if (w.kind() == WaveformKind::kSlices) return w.value(mid);
  return w.value(t);
}

/// Adaptive Gauss-Kronrod on [a, b], mapped to [0, 1] so that the error
/// control does not depend on the time unit. Boost's error test is relative
/// to the panel estimate, so panels where the integrand cancels recurse on
/// rounding noise; panels are sized so one 31-point pass is already at
/// rounding level and a shallow depth suffices.
template <class F>
double gk(F f, double a, double b, unsigned depth = 5) {
  const double h = b - a;
  if (!(h > 0.0)) return 0.0;
  double err = 0.0;
  auto g = [&](double x) { return f(a + h * x); };
  return h * boost::math::quadrature::gauss_kronrod<double, 31>::integrate(g, 0.0, 1.0, depth, 1e-12, &err);
}

/// int_0^t E(s) e^{i k s} ds by adaptive Gauss-Kronrod per panel.
inline cd field_transform(const Waveform& w, double k, double t) {
  const std::vector<double> edges = panel_edges(w, std::abs(k), t);
  double re = 0.0;
  double im = 0.0;
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double a = edges[p];
    const double b = edges[p + 1];
    re += gk([&](double s) { return field_on(w, a, b, s) * std::cos(k * s); }, a, b);
    im += gk([&](double s) { return field_on(w, a, b, s) * std::sin(k * s); }, a, b);
  }
  return {re, im};
}

/// beta(t) = -i g int_0^t E(s) e^{-i nu s} ds
inline cd displacement(const Waveform& w, const ModeCoupling& m, double t) {
  return cd(0.0, -m.coupling) * field_transform(w, -m.frequency, t);
}

/// phi = -g^2 int_0^T dt2 E(t2) int_0^t2 dt1 E(t1) sin(nu (t2 - t1)). The
/// inner integral over complete panels is split with the angle-sum identity
/// into cosine and sine moments, each integrated once; the partial panel is
/// integrated directly, with a single Kronrod pass, for every outer node.
inline double geometric_phase(const Waveform& w, const ModeCoupling& m) {
  const double nu = m.frequency;
  const std::vector<double> edges = panel_edges(w, nu, w.duration());
  const std::size_t n = edges.size() - 1;
  std::vector<double> cos_moment(n + 1, 0.0);
  std::vector<double> sin_moment(n + 1, 0.0);
  for (std::size_t p = 0; p < n; ++p) {
    const double a = edges[p];
    const double b = edges[p + 1];
    cos_moment[p + 1] =
        cos_moment[p] + gk([&](double t) { return field_on(w, a, b, t) * std::cos(nu * t); }, a, b);
    sin_moment[p + 1] =
        sin_moment[p] + gk([&](double t) { return field_on(w, a, b, t) * std::sin(nu * t); }, a, b);
  }
  double phi = 0.0;
  for (std::size_t p = 0; p < n; ++p) {
    const double a = edges[p];
    const double b = edges[p + 1];
    auto inner = [&](double t2) {
      const double done = std::sin(nu * t2) * cos_moment[p] - std::cos(nu * t2) * sin_moment[p];
      if (t2 <= a) return done;
      return done + gk([&](double t1) { return field_on(w, a, b, t1) * std::sin(nu * (t2 - t1)); },
                       a, t2, 0);
    };
    phi += gk([&](double t2) { return field_on(w, a, b, t2) * inner(t2); }, a, b);
  }
  return -m.coupling * m.coupling * phi;
}

inline double delta_phase(const Waveform& w, const GateModel& model) {
  double d = 0.0;
  for (PairState s : kPairStates) {
    double phi = 0.0;
    for (const ModeCoupling& m : model.of(s))
      if (m.coupling != 0.0) phi += oracle::geometric_phase(w, m);
    d += phase_sign(s) * phi;
  }
  return d;
}

inline Waveform random_slices(std::mt19937_64& rng, double t_g, int n, double amplitude) {
  std::uniform_real_distribution<double> u(-amplitude, amplitude);
  std::vector<double> f(static_cast<std::size_t>(n));
  for (double& x : f) x = u(rng);
  return Waveform::slices(t_g, std::move(f));
}

inline Waveform random_fourier(std::mt19937_64& rng, double t_g, int n, double amplitude) {
  std::uniform_real_distribution<double> u(-amplitude, amplitude);
  std::vector<double> s(static_cast<std::size_t>(n));
  std::vector<double> c(static_cast<std::size_t>(n));
  for (double& x : s) x = u(rng);
  for (double& x : c) x = u(rng);
  return Waveform::fourier(t_g, std::move(s), std::move(c));
}

}  // namespace rykick::oracle

#endif  // RYKICK_TESTS_ORACLES_HPP
