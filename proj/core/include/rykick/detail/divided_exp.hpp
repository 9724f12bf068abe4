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

#ifndef RYKICK_DETAIL_DIVIDED_EXP_HPP
#define RYKICK_DETAIL_DIVIDED_EXP_HPP

#include <complex>

namespace rykick::detail {

// Divided differences of exp on complex nodes. They express every closed-form
// integral used here:
//   int_0^T e^{i a t} dt                             = T   exp[i a T, 0]
//   int_0^T e^{i b t} int_0^t e^{i a s} ds dt       = T^2 exp[i (a+b) T, i b T, 0]
// Both stay accurate when the nodes coalesce (resonant or short slices).
std::complex<double> exp_divided_difference(std::complex<double> z0, std::complex<double> z1);
std::complex<double> exp_divided_difference(std::complex<double> z0, std::complex<double> z1,
                                            std::complex<double> z2);

/// int_0^t e^{i a s} ds
std::complex<double> oscillatory_integral(double a, double t);

/// int_0^t e^{i b s} int_0^s e^{i a r} dr ds
std::complex<double> nested_oscillatory_integral(double a, double b, double t);

}  // namespace rykick::detail

#endif  // RYKICK_DETAIL_DIVIDED_EXP_HPP
