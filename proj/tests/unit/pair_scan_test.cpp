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

#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "rykick/constants.hpp"
#include "rykick/error.hpp"
#include "fixtures.hpp"

namespace rykick {
namespace {

const PairScanResult& six_ion_scan() {
  static const PairScanResult r =
      scan_pairs(6, fixture::six_ion_trap(), calcium_ion(), fixture::anchored_49s(), 2.5e-6, {},
                 FeasibilityLimits::for_state(fixture::anchored_49s(), false));
  return r;
}

TEST(PairScan, MirrorIndices) {
  EXPECT_EQ(mirror({0, 1}, 6).first, 4);
  EXPECT_EQ(mirror({0, 1}, 6).second, 5);
  EXPECT_EQ(mirror({1, 4}, 6).first, 1);
  EXPECT_EQ(mirror({1, 4}, 6).second, 4);
}

TEST(PairScan, TwoIonScanMatchesDirectSynthesis) {
  const PairScanResult r = scan_pairs(2, reference_trap(), calcium_ion(), calcium_49s(), 0.67e-6, {},
                                      FeasibilityLimits{});
  ASSERT_EQ(r.entries.size(), 1u);
  ASSERT_TRUE(r.entries[0].ok);
  const GateModel m = build_gate_model(2, {0, 1}, reference_trap(), calcium_ion(), calcium_49s());
  EXPECT_DOUBLE_EQ(r.entries[0].e_max, synthesize(m, 0.67e-6).report.e_max);
  const InteractionRanking rank = interaction_ranking(r);
  ASSERT_EQ(rank.order.size(), 1u);
  EXPECT_TRUE(rank.symmetric_best_in_class);
}

TEST(PairScan, SixIonEntriesOrderedAndClosed) {
  const PairScanResult& r = six_ion_scan();
  ASSERT_EQ(r.entries.size(), 15u);
  int prev = -1;
  for (const PairScanEntry& e : r.entries) {
    EXPECT_TRUE(e.ok) << e.error;
    EXPECT_LT(e.closure_residual, 1e-8);
    EXPECT_NEAR(std::abs(e.delta_phi), constants::kPi, 1e-6);
    const int key = e.pair.first * 6 + e.pair.second;
    EXPECT_GT(key, prev);
    prev = key;
    EXPECT_EQ(r.find(e.pair.second, e.pair.first), &e);
  }
  EXPECT_EQ(r.find(2, 2), nullptr);
}

TEST(PairScan, MirrorSymmetricFields) {
  const PairScanResult& r = six_ion_scan();
  for (const PairScanEntry& e : r.entries) {
    const GatePair m = mirror(e.pair, 6);
    const PairScanEntry* other = r.find(m.first, m.second);
    ASSERT_NE(other, nullptr);
    EXPECT_NEAR(e.e_max / other->e_max, 1.0, 1e-6) << e.pair.first << "," << e.pair.second;
  }
}

TEST(PairScan, SymmetricPairsRankBestInClass) {
  const InteractionRanking rank = interaction_ranking(six_ion_scan());
  EXPECT_EQ(rank.order.size(), 15u);
  EXPECT_TRUE(rank.symmetric_best_in_class);
  const PairScanEntry* centre = six_ion_scan().find(2, 3);
  const PairScanEntry* edges = six_ion_scan().find(0, 5);
  const PairScanEntry* outer = six_ion_scan().find(0, 1);
  EXPECT_LT(centre->e_max, outer->e_max);
  EXPECT_LT(edges->e_max, six_ion_scan().find(0, 4)->e_max);
}

TEST(PairScan, SymmetricPairsLeaveOddModesUnexcited) {
  const GateModel m = build_gate_model(6, {1, 4}, fixture::six_ion_trap(), calcium_ion(), calcium_49s());
  for (PairState s : {PairState::k00, PairState::kRR}) {
    const auto& modes = m.of(s);
    for (std::size_t k = 1; k < modes.size(); k += 2) EXPECT_NEAR(modes[k].w, 0.0, 1e-12);
  }
}

TEST(PairScan, EntryErrorsAreRecorded) {
  OptimizerOptions o;
  o.n_slices = 40;
  const PairScanResult r = scan_pairs(6, fixture::six_ion_trap(), calcium_ion(), calcium_49s(), 2.5e-6, o,
                                      FeasibilityLimits{});
  ASSERT_EQ(r.entries.size(), 15u);
  for (const PairScanEntry& e : r.entries) {
    EXPECT_FALSE(e.ok);
    ASSERT_TRUE(e.error_code.has_value());
    EXPECT_EQ(*e.error_code, ErrorCode::kInsufficientSlices);
  }
  EXPECT_TRUE(interaction_ranking(r).order.empty());
}

TEST(PairScan, ResultsIndependentOfThreadCount) {
  OptimizerOptions o;
  o.n_slices = 96;
  const auto run = [&](unsigned threads) {
    return scan_pairs(4, with_axial_anisotropy(reference_trap(), calcium_ion(), 0.9 * critical_anisotropy(4)),
                      calcium_ion(), calcium_49s(), 2.0e-6, o, FeasibilityLimits{}, threads);
  };
  const PairScanResult a = run(1);
  const PairScanResult b = run(4);
  for (std::size_t i = 0; i < a.entries.size(); ++i) EXPECT_EQ(a.entries[i].e_max, b.entries[i].e_max);
}

TEST(PairScan, SingleIonRejected) {
  EXPECT_THROW(scan_pairs(1, reference_trap(), calcium_ion(), calcium_49s(), 1e-6, {}, {}), Error);
}

}  // namespace
}  // namespace rykick
