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

#include "rykick/pair_scan.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "rykick/parallel.hpp"

namespace rykick {

const PairScanEntry* PairScanResult::find(int a, int b) const {
  if (a > b) std::swap(a, b);
  for (const PairScanEntry& e : entries)
    if (e.pair.first == a && e.pair.second == b) return &e;
  return nullptr;
}

GatePair mirror(GatePair pair, int n_ions) {
  return {n_ions - 1 - pair.second, n_ions - 1 - pair.first};
}

PairScanResult scan_pairs(int n_ions, const TrapParameters& trap, const IonSpecies& species,
                          const RydbergStateInfo& rydberg, double gate_time,
                          const OptimizerOptions& options, const FeasibilityLimits& limits,
                          unsigned threads) {
  if (n_ions < 2) throw Error(ErrorCode::kValidation, "pair scan needs at least two ions");
  validate(limits);
  PairScanResult result;
  result.n_ions = n_ions;
  result.gate_time = gate_time;
  for (int a = 0; a < n_ions; ++a)
    for (int b = a + 1; b < n_ions; ++b) {
      PairScanEntry e;
      e.pair = {a, b};
      result.entries.push_back(e);
    }

  parallel_for(result.entries.size(), threads, [&](std::size_t i) {
    PairScanEntry& e = result.entries[i];
    try {
      const GateModel model = build_gate_model(n_ions, e.pair, trap, species, rydberg);
      const SynthesisResult r = synthesize(model, gate_time, options);
      e.e_max = r.report.e_max;
      e.x_max = r.report.x_max;
      e.closure_residual = r.report.closure_residual;
      e.delta_phi = r.report.delta_phi;
      e.check = check(r.report, limits);
      e.ok = true;
    } catch (const Error& err) {
      e.error_code = err.code();
      e.error = err.what();
    }
  });
  return result;
}

InteractionRanking interaction_ranking(const PairScanResult& result) {
  InteractionRanking r;
  std::vector<const PairScanEntry*> ok;
  for (const PairScanEntry& e : result.entries)
    if (e.ok) ok.push_back(&e);
  std::stable_sort(ok.begin(), ok.end(), [](const PairScanEntry* a, const PairScanEntry* b) {
    return a->e_max < b->e_max;
  });
  for (const PairScanEntry* e : ok) r.order.push_back(e->pair);

  const int n = result.n_ions;
  std::map<int, std::vector<const PairScanEntry*>> classes;
  for (const PairScanEntry* e : ok) classes[e->pair.second - e->pair.first].push_back(e);
  double last_mean = -1.0;
  for (const auto& [separation, members] : classes) {
    const PairScanEntry* sym = nullptr;
    double sum = 0.0;
    int count = 0;
    for (const PairScanEntry* e : members) {
      if (e->pair.first + e->pair.second == n - 1) {
        sym = e;
      } else {
        sum += e->e_max;
        ++count;
      }
    }
    if (sym) {
      for (const PairScanEntry* e : members)
        if (e != sym && !(sym->e_max < e->e_max)) r.symmetric_best_in_class = false;
    }
    if (count > 0) {
      const double mean = sum / count;
      if (mean < last_mean) r.asymmetric_monotone = false;
      last_mean = mean;
    }
  }
  return r;
}

}  // namespace rykick
