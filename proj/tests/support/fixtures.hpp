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


// Shared configurations for the test suites.

#ifndef RYKICK_TESTS_FIXTURES_HPP
#define RYKICK_TESTS_FIXTURES_HPP

#include "rykick/crystal_modes.hpp"
#include "rykick/feasibility.hpp"
#include "rykick/trap_model.hpp"

namespace rykick::fixture {

/// 49S with the IT threshold anchored so that 150 V/m corresponds to a 3%
/// admixture and the limit sits at 10%.
inline RydbergStateInfo anchored_49s() {
  RydbergStateInfo s = calcium_49s();
  s.it_field_limit = it_field_for_admixture(150.0, 0.03, 0.10);
  return s;
}

/// Reference trap with the dc gradient lowered until a six-ion chain sits at
/// 95% of its critical anisotropy.
inline TrapParameters six_ion_trap() {
  return with_axial_anisotropy(reference_trap(), calcium_ion(), 0.95 * critical_anisotropy(6));
}

}  // namespace rykick::fixture

#endif  // RYKICK_TESTS_FIXTURES_HPP
