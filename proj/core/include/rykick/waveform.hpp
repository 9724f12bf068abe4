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

#ifndef RYKICK_WAVEFORM_HPP
#define RYKICK_WAVEFORM_HPP

#include <complex>
#include <span>
#include <vector>

namespace rykick {

enum class WaveformKind { kSlices, kFourier };

/// One term c * exp(i a t) of a real waveform written as a complex
/// exponential sum. Fourier waveforms expand into pairs of these.
struct ExpTerm {
  std::complex<double> coefficient;
  double rate = 0.0;  ///< rad/s
};

/// Electric field E(t) in V/m on [0, t_g], either as n_t equal-duration
/// constant slices or as a sine/cosine series with omega_n = n pi / t_g,
/// n = 1..n_f.
class Waveform {
 public:
  static Waveform slices(double duration, std::vector<double> field);
  static Waveform fourier(double duration, std::vector<double> sine, std::vector<double> cosine,
                          bool zero_endpoints = false);

  WaveformKind kind() const { return kind_; }
  double duration() const { return duration_; }

  std::span<const double> slice_field() const { return field_; }
  int n_slices() const { return static_cast<int>(field_.size()); }
  double slice_duration() const { return duration_ / static_cast<double>(field_.size()); }

  std::span<const double> sine() const { return sine_; }
  std::span<const double> cosine() const { return cosine_; }
  int n_terms() const { return static_cast<int>(sine_.size()); }
  double term_frequency(int n) const;  ///< omega_n for 1-based n
  bool zero_endpoints() const { return zero_endpoints_; }

  /// Field at time t (V/m); right-continuous for slices, 0 outside [0, t_g).
  double value(double t) const;

  /// max_t |E(t)|. Exact for slices; dense sampling for Fourier series.
  double peak_field() const;

  /// Waveform with every amplitude multiplied by `factor`.
  Waveform scaled(double factor) const;

  /// Mean-square field (1/t_g) int E^2 dt.
  double mean_square() const;

  /// Real-valued exponential-sum expansion of a Fourier waveform.
  std::vector<ExpTerm> exp_terms() const;

 private:
  Waveform() = default;

  WaveformKind kind_ = WaveformKind::kSlices;
  double duration_ = 0.0;
  std::vector<double> field_;
  std::vector<double> sine_;
  std::vector<double> cosine_;
  bool zero_endpoints_ = false;
};

/// Exponential-sum expansion of the single basis function sin(omega t) or
/// cos(omega t).
std::vector<ExpTerm> sine_terms(double omega, double amplitude = 1.0);
std::vector<ExpTerm> cosine_terms(double omega, double amplitude = 1.0);

}  // namespace rykick

#endif  // RYKICK_WAVEFORM_HPP
