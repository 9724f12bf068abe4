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

#include "rykick/waveform.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rykick/constants.hpp"
#include "rykick/detail/divided_exp.hpp"
#include "rykick/error.hpp"

namespace rykick {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kValidation, what);
}

bool all_finite(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

}  // namespace

std::vector<ExpTerm> sine_terms(double omega, double amplitude) {
  // sin(w t) = (e^{i w t} - e^{-i w t}) / 2i
  const std::complex<double> c(0.0, -0.5 * amplitude);
  return {{c, omega}, {-c, -omega}};
}

std::vector<ExpTerm> cosine_terms(double omega, double amplitude) {
  return {{0.5 * amplitude, omega}, {0.5 * amplitude, -omega}};
}

Waveform Waveform::slices(double duration, std::vector<double> field) {
  require(std::isfinite(duration) && duration > 0.0, "waveform duration must be > 0");
  require(!field.empty(), "slice waveform needs at least one slice");
  require(all_finite(field), "slice amplitudes must be finite");
  Waveform w;
  w.kind_ = WaveformKind::kSlices;
  w.duration_ = duration;
  w.field_ = std::move(field);
  return w;
}

Waveform Waveform::fourier(double duration, std::vector<double> sine, std::vector<double> cosine,
                           bool zero_endpoints) {
  require(std::isfinite(duration) && duration > 0.0, "waveform duration must be > 0");
  require(!sine.empty() && sine.size() == cosine.size(),
          "Fourier waveform needs equal, non-empty sine and cosine lists");
  require(all_finite(sine) && all_finite(cosine), "Fourier amplitudes must be finite");
  if (zero_endpoints) {
    double sum = 0.0;
    double scale = 0.0;
    for (double a : cosine) {
      sum += a;
      scale += std::abs(a);
    }
    require(std::abs(sum) <= 1e-9 * std::max(scale, 1e-300),
            "zero-endpoint Fourier waveform must have sum of cosine amplitudes = 0");
  }
  Waveform w;
  w.kind_ = WaveformKind::kFourier;
  w.duration_ = duration;
  w.sine_ = std::move(sine);
  w.cosine_ = std::move(cosine);
  w.zero_endpoints_ = zero_endpoints;
  return w;
}

double Waveform::term_frequency(int n) const {
  return static_cast<double>(n) * constants::kPi / duration_;
}

double Waveform::value(double t) const {
  if (t < 0.0 || t > duration_) return 0.0;
  if (kind_ == WaveformKind::kSlices) {
    if (t == duration_) return 0.0;
    auto i = static_cast<std::size_t>(t / slice_duration());
    i = std::min(i, field_.size() - 1);
    return field_[i];
  }
  double v = 0.0;
  for (int n = 1; n <= n_terms(); ++n) {
    const double ph = term_frequency(n) * t;
    v += sine_[static_cast<std::size_t>(n - 1)] * std::sin(ph) +
         cosine_[static_cast<std::size_t>(n - 1)] * std::cos(ph);
  }
  return v;
}

double Waveform::peak_field() const {
  if (kind_ == WaveformKind::kSlices) {
    double m = 0.0;
    for (double f : field_) m = std::max(m, std::abs(f));
    return m;
  }
  // 16 samples per half period of the fastest term, then a local refinement
  // around the best sample by golden-section search.
  const int samples = std::max(4096, 32 * n_terms());
  const double dt = duration_ / samples;
  int best = 0;
  double vbest = -1.0;
  for (int i = 0; i <= samples; ++i) {
    const double v = std::abs(value(i * dt));
    if (v > vbest) {
      vbest = v;
      best = i;
    }
  }
  double a = std::max(0.0, (best - 1) * dt);
  double b = std::min(duration_, (best + 1) * dt);
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int it = 0; it < 60; ++it) {
    const double c = b - g * (b - a);
    const double d = a + g * (b - a);
    if (std::abs(value(c)) > std::abs(value(d))) {
      b = d;
    } else {
      a = c;
    }
  }
  return std::max(vbest, std::abs(value(0.5 * (a + b))));
}

Waveform Waveform::scaled(double factor) const {
  Waveform w = *this;
  for (double& f : w.field_) f *= factor;
  for (double& f : w.sine_) f *= factor;
  for (double& f : w.cosine_) f *= factor;
  return w;
}

double Waveform::mean_square() const {
  if (kind_ == WaveformKind::kSlices) {
    const double s = std::inner_product(field_.begin(), field_.end(), field_.begin(), 0.0);
    return s / static_cast<double>(field_.size());
  }
  const auto terms = exp_terms();
  std::complex<double> acc = 0.0;
  for (const auto& p : terms)
    for (const auto& q : terms)
      acc += p.coefficient * q.coefficient *
             detail::oscillatory_integral(p.rate + q.rate, duration_);
  return acc.real() / duration_;
}

std::vector<ExpTerm> Waveform::exp_terms() const {
  std::vector<ExpTerm> out;
  if (kind_ != WaveformKind::kFourier) return out;
  out.reserve(4 * sine_.size());
  for (int n = 1; n <= n_terms(); ++n) {
    const double w = term_frequency(n);
    for (const auto& t : sine_terms(w, sine_[static_cast<std::size_t>(n - 1)])) out.push_back(t);
    for (const auto& t : cosine_terms(w, cosine_[static_cast<std::size_t>(n - 1)]))
      out.push_back(t);
  }
  return out;
}

}  // namespace rykick
