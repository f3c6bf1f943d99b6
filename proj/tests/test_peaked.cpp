// Copyright 2026 The hafair Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include "hafair/hafair.hpp"
#include "support.hpp"

namespace hafair {
namespace {

using testing::data_path;

Instance peaked_instance(std::uint64_t s) {
  const int n = 3 + static_cast<int>(s % 4);
  const int m = n + static_cast<int>(s / 4 % (9 - n));
  return s % 2 ? gen_single_peaked(n, m, s) : gen_clustered_peaked(n, m, s);
}

TEST(Peaked, Example2) {
  const auto inst = load_instance(data_path("example2.json"));
  EXPECT_TRUE(validate_single_peaked(inst).ok);
  const auto pp = peak_profile(inst);
  EXPECT_EQ(pp.base[3], (std::vector<AgentId>{1, 2, 3}));
  EXPECT_EQ(pp.span[3], (std::vector<HouseId>{3, 4, 5}));
  EXPECT_EQ(pp.individual_peaks, 1);
  EXPECT_EQ(pp.shared_peaks, 1);
  EXPECT_EQ(pp.kind[1], PeakKind::individual);
  const auto a = min_envy_single_peaked(inst);
  a.validate(inst);
  EXPECT_EQ(measure_value(inst, a, Measure::envy), 1);
  EXPECT_EQ(min_measure_exhaustive(inst, Measure::envy).value, 1);
  EXPECT_EQ(a[0], 1);
}

TEST(Peaked, Example2LeavesTheSpanEmpty) {
  const auto inst = load_instance(data_path("example2.json"));
  const auto a = min_envy_single_peaked(inst);
  for (HouseId h : {3, 4, 5}) EXPECT_EQ(std::count(a.houses().begin(), a.houses().end(), h), 0) << h;
}

TEST(Peaked, ValidatorReportsWitness) {
  const Instance inst(PreferenceProfile::ordinal(3, {{{1}, {2}, {0}}, {{0}, {2}, {1}}}),
                      std::vector<HouseId>{0, 1, 2});
  const auto c = validate_single_peaked(inst);
  ASSERT_FALSE(c.ok);
  EXPECT_EQ(c.witness->agent, 1);
  EXPECT_THROW(min_envy_single_peaked(inst), DomainError);
  EXPECT_THROW(min_envy_single_peaked(Instance(inst.prefs())), ValidationError);
}

TEST(Peaked, MatchesOracle) {
  for (std::uint64_t s = 0; s < 80; ++s) {
    const auto inst = peaked_instance(s);
    const auto a = min_envy_single_peaked(inst);
    a.validate(inst);
    ASSERT_EQ(measure_value(inst, a, Measure::envy), min_measure_exhaustive(inst, Measure::envy).value)
        << "seed " << s;
  }
}

TEST(Peaked, StructuralProperties) {
  int sets = 0;
  for (std::uint64_t s = 0; s < 30; ++s) {
    const auto inst = s % 2 ? gen_single_peaked(4, 6, s) : gen_clustered_peaked(5, 6, s);
    EXPECT_EQ(testing::shared_peak_violations(inst), 0) << s;
    EXPECT_EQ(testing::envy_free_bound_violations(inst), 0) << s;
    const auto spans = testing::overlapping_span_counts(inst);
    sets += spans.sets;
    EXPECT_EQ(spans.above, 0) << s;
    EXPECT_EQ(spans.unmet, 0) << s;
    EXPECT_TRUE(testing::individual_peaks_kept(inst)) << s;
  }
  EXPECT_GT(sets, 0);
}

TEST(Peaked, OptimumMayGiveSharedPeakAway) {
  const auto inst = gen_clustered_peaked(5, 6, 24);
  const Allocation a({0, 1, 4, 3, 5});
  EXPECT_EQ(measure_value(inst, a, Measure::envy), min_measure_exhaustive(inst, Measure::envy).value);
  const auto ef = testing::envy_free_flags(inst.prefs(), a.houses());
  EXPECT_EQ(testing::count_in(ef, peak_profile(inst).base[1]), 0);
  const auto spans = testing::overlapping_span_counts(inst);
  EXPECT_GT(spans.below, 0);
  EXPECT_EQ(spans.unmet, 0);
}

TEST(Peaked, ParetoDecisionMatchesOracle) {
  int found = 0, none = 0;
  for (std::uint64_t s = 0; s < 80; ++s) {
    const auto inst = peaked_instance(s);
    const auto ours = min_envy_pareto_single_peaked(inst);
    const auto oracle = pareto_min_envy_exhaustive(inst);
    ASSERT_EQ(ours.has_value(), oracle.has_value()) << "seed " << s;
    if (!ours) {
      ++none;
      continue;
    }
    ++found;
    EXPECT_TRUE(is_pareto_optimal_exhaustive(inst, *ours).optimal);
    EXPECT_EQ(measure_value(inst, *ours, Measure::envy), min_measure_exhaustive(inst, Measure::envy).value);
  }
  EXPECT_GT(found, 0);
  EXPECT_GT(none, 0);
}

// The minimum-envy output resolves h4 by handing h5 away and leaves h4
// empty, but giving every peak to a base agent is just as good.
TEST(Peaked, ParetoWhenResolutionWastesAnotherPeak) {
  const Instance inst(PreferenceProfile::ordinal(6, {{{3}, {4}, {2}, {1}, {0}, {5}},
                                                     {{4}, {5}, {3}, {2}, {1}, {0}},
                                                     {{4}, {3}, {5}, {2}, {1}, {0}},
                                                     {{3}, {2}, {4}, {5}, {1}, {0}},
                                                     {{4}, {3}, {2}, {1}, {0}, {5}}}),
                      std::vector<HouseId>{0, 1, 2, 3, 4, 5});
  ASSERT_TRUE(validate_single_peaked(inst).ok);
  const auto a = min_envy_single_peaked(inst);
  EXPECT_EQ(measure_value(inst, a, Measure::envy), 3);
  EXPECT_FALSE(pareto_from_min_envy(inst, a));
  const auto po = min_envy_pareto_single_peaked(inst);
  ASSERT_TRUE(po);
  EXPECT_EQ(measure_value(inst, *po, Measure::envy), 3);
  EXPECT_TRUE(is_pareto_optimal_exhaustive(inst, *po).optimal);
}

TEST(Peaked, OperationCountGrowsWithSize) {
  OpCounter small, large;
  min_envy_single_peaked(gen_single_peaked(4, 8, 1), &small);
  min_envy_single_peaked(gen_single_peaked(16, 32, 1), &large);
  EXPECT_GT(small.ops, 0u);
  EXPECT_GT(large.ops, 4 * small.ops);
}

}  // namespace
}  // namespace hafair
