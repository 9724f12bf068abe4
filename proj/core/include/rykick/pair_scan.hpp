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

#ifndef RYKICK_PAIR_SCAN_HPP
#define RYKICK_PAIR_SCAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "rykick/error.hpp"
#include "rykick/feasibility.hpp"
#include "rykick/phase_dynamics.hpp"
#include "rykick/waveform_optimizer.hpp"

namespace rykick {

struct PairScanEntry {
  GatePair pair;
  bool ok = false;
  std::optional<ErrorCode> error_code;
  std::string error;
  double e_max = 0.0;
  double x_max = 0.0;
  double closure_residual = 0.0;
  double delta_phi = 0.0;
  FeasibilityCheck check;
};

struct PairScanResult {
  int n_ions = 0;
  double gate_time = 0.0;
  std::vector<PairScanEntry> entries;  ///< ordered by (first, second), first < second

  /// Entry for the unordered pair {a, b}; nullptr if absent.
  const PairScanEntry* find(int a, int b) const;
};

/// Optimizes every unordered pair of an N-ion crystal at fixed t_g. Failures
/// are recorded per entry and the scan continues.
PairScanResult scan_pairs(int n_ions, const TrapParameters& trap, const IonSpecies& species,
                          const RydbergStateInfo& rydberg, double gate_time,
                          const OptimizerOptions& options, const FeasibilityLimits& limits,
                          unsigned threads = 0);

/// Pair reflected through the crystal centre.
GatePair mirror(GatePair pair, int n_ions);

struct InteractionRanking {
  std::vector<GatePair> order;  ///< successful entries by ascending e_max, ties by (first, second)
  bool symmetric_best_in_class = true;  ///< mirror-symmetric pair is best in its separation class
  bool asymmetric_monotone = true;      ///< class-mean e_max of asymmetric pairs rises with separation
};

InteractionRanking interaction_ranking(const PairScanResult& result);

}  // namespace rykick

#endif  // RYKICK_PAIR_SCAN_HPP
