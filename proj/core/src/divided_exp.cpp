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

#include "rykick/detail/divided_exp.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace rykick::detail {
namespace {

using cplx = std::complex<double>;

constexpr int kTaylorTerms = 30;

// exp[z_0..z_m] = e^c sum_k h_k(z - c) / (k + m)!, h_k the complete
// homogeneous symmetric polynomial. Used when all nodes lie within ~1 of c.
template <std::size_t N>
cplx taylor_divided_difference(const std::array<cplx, N>& z) {
  cplx c = 0.0;
  for (const auto& v : z) c += v;
  c /= static_cast<double>(N);
  std::array<cplx, kTaylorTerms> h{};
  h.fill(0.0);
  h[0] = 1.0;
  // h_k for the first node, then fold in the remaining nodes.
  {
    const cplx d = z[0] - c;
    for (int k = 1; k < kTaylorTerms; ++k) h[static_cast<std::size_t>(k)] = h[static_cast<std::size_t>(k - 1)] * d;
  }
  for (std::size_t i = 1; i < N; ++i) {
    const cplx d = z[i] - c;
    for (int k = 1; k < kTaylorTerms; ++k)
      h[static_cast<std::size_t>(k)] += d * h[static_cast<std::size_t>(k - 1)];
  }
  constexpr int m = static_cast<int>(N) - 1;
  double fact = 1.0;
  for (int j = 2; j <= m; ++j) fact *= j;  // m!
  cplx sum = 0.0;
  for (int k = 0; k < kTaylorTerms; ++k) {
    sum += h[static_cast<std::size_t>(k)] / fact;
    fact *= static_cast<double>(k + m + 1);
  }
  return std::exp(c) * sum;
}

}  // namespace

cplx exp_divided_difference(cplx z0, cplx z1) {
  const double spread = std::abs(z0 - z1);
  if (spread <= 1.0) return taylor_divided_difference<2>({z0, z1});
  return (std::exp(z0) - std::exp(z1)) / (z0 - z1);
}

cplx exp_divided_difference(cplx z0, cplx z1, cplx z2) {
  const double d01 = std::abs(z0 - z1);
  const double d02 = std::abs(z0 - z2);
  const double d12 = std::abs(z1 - z2);
  const double spread = std::max({d01, d02, d12});
  if (spread <= 1.0) return taylor_divided_difference<3>({z0, z1, z2});
  // Recurse across the widest pair so the final division is well conditioned.
  if (d02 >= d01 && d02 >= d12)
    return (exp_divided_difference(z0, z1) - exp_divided_difference(z1, z2)) / (z0 - z2);
  if (d01 >= d12)
    return (exp_divided_difference(z0, z2) - exp_divided_difference(z2, z1)) / (z0 - z1);
  return (exp_divided_difference(z1, z0) - exp_divided_difference(z0, z2)) / (z1 - z2);
}

cplx oscillatory_integral(double a, double t) {
  if (t == 0.0) return 0.0;
  return t * exp_divided_difference(cplx(0.0, a * t), cplx(0.0, 0.0));
}

cplx nested_oscillatory_integral(double a, double b, double t) {
  if (t == 0.0) return 0.0;
  return t * t *
         exp_divided_difference(cplx(0.0, (a + b) * t), cplx(0.0, b * t), cplx(0.0, 0.0));
}

}  // namespace rykick::detail
