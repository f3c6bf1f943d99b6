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

#include "hafair/io.hpp"
#include "hafair/refine.hpp"
#include "support.hpp"

namespace hafair {
namespace {

struct Example1 {
  Instance inst = load_instance(testing::data_path("example1.json"));
  Allocation base{{0, 1, 2, 3, 4}};
  Allocation target{{7, 0, 6, 2, 5}};
};

// All vertices red; base and new edges of the moves red; the rest green.
Coloring move_coloring(const RefineProblem& pb, const Allocation& target) {
  const auto& g = pb.graph();
  Coloring c;
  c.vertex.assign(g.num_vertices(), Color::red);
  c.edge.assign(g.num_edges(), Color::green);
  for (AgentId i = 0; i < target.num_agents(); ++i) {
    if (target[i] == pb.base()[i]) continue;
    c.edge[g.edge_index(i, target[i])] = Color::red;
    c.edge[g.edge_index(i, pb.base()[i])] = Color::red;
  }
  return c;
}

TEST(Refine, Example1ExhaustiveFindsEnvyFreeAllocation) {
  Example1 ex;
  RefineOptions opt;
  opt.mode = RefineMode::exhaustive_colorings;
  const auto r = refine(ex.inst, ex.base, 5, 5, Measure::envy, opt);
  ASSERT_TRUE(r.allocation);
  EXPECT_EQ(*r.allocation, ex.target);
  EXPECT_EQ(measure_value(ex.inst, *r.allocation, Measure::envy), 0);
  EXPECT_EQ(r.allocation->distance(ex.base), 5);
  EXPECT_EQ(r.colorings_tried, 480u);
  ASSERT_TRUE(r.success_index);
  EXPECT_EQ(*r.success_index, 479u);
}

TEST(Refine, Example1FourReallocationsAreNotEnough) {
  Example1 ex;
  RefineOptions opt;
  opt.mode = RefineMode::exhaustive_colorings;
  EXPECT_FALSE(refine(ex.inst, ex.base, 4, 5, Measure::envy, opt).allocation);
  EXPECT_GT(min_measure_within_q(ex.inst, ex.base, 4, Measure::envy, {}, true).value, 0);
}

TEST(Refine, Example1SinglePassOnTheRightColoring) {
  Example1 ex;
  const RefineProblem pb(ex.inst, ex.base, Measure::envy);
  EXPECT_EQ(pb.base_value(), 5);
  const auto c = move_coloring(pb, ex.target);
  const auto pass = refine_pass(pb, c, 5, 5);
  ASSERT_TRUE(pass.allocation);
  EXPECT_EQ(*pass.allocation, ex.target);
  ASSERT_EQ(pass.candidates.size(), 1u);
  EXPECT_EQ(pass.candidates[0].reallocated, 5);
  EXPECT_EQ(pass.candidates[0].drop, 5);
  EXPECT_EQ(pass.candidates[0].paths.size(), 3u);
  EXPECT_FALSE(refine_pass(pb, c, 4, 5).allocation);
}

TEST(Refine, GreenVertexDeletesItsComponent) {
  Example1 ex;
  const RefineProblem pb(ex.inst, ex.base, Measure::envy);
  auto c = move_coloring(pb, ex.target);
  c.vertex[pb.graph().house_vertex(2)] = Color::green;
  const auto comps = components_after_blue_removal(pb.graph(), c);
  const auto f = feasibility_filter(pb, c, comps);
  ASSERT_EQ(f.verdicts.size(), 1u);
  EXPECT_EQ(f.verdicts[0], ComponentVerdict::non_red_vertex);
  EXPECT_TRUE(f.kept.empty());
}

TEST(Refine, AgentWithTwoNewEdgesIsRejected) {
  Example1 ex;
  const RefineProblem pb(ex.inst, ex.base, Measure::envy);
  auto c = move_coloring(pb, ex.target);
  c.edge[pb.graph().edge_index(0, 4)] = Color::red;
  const auto f = feasibility_filter(pb, c, components_after_blue_removal(pb.graph(), c));
  EXPECT_EQ(f.verdicts[0], ComponentVerdict::bad_red_subgraph);
}

TEST(Refine, InternalBlueEdgeIsRejected) {
  Example1 ex;
  const RefineProblem pb(ex.inst, ex.base, Measure::envy);
  auto c = move_coloring(pb, ex.target);
  c.edge[pb.graph().edge_index(0, 4)] = Color::blue;
  const auto f = feasibility_filter(pb, c, components_after_blue_removal(pb.graph(), c));
  EXPECT_EQ(f.verdicts[0], ComponentVerdict::internal_blue_edge);
}

// Agent 0 holds house 0 and likes free house 1; agent 1 holds house 3,
// envies agent 0 and likes free house 2 best. Either move alone fixes
// agent 1's envy, so the pair is dependent.
TEST(Refine, DependentComponentsAreBothDeleted) {
  const Instance inst(PreferenceProfile::ordinal(4, {{{1}, {0}}, {{2}, {0}, {3}}}));
  const Allocation base({0, 3});
  const RefineProblem pb(inst, base, Measure::envy);
  EXPECT_EQ(pb.base_value(), 1);
  const auto& g = pb.graph();
  Coloring c;
  c.vertex.assign(g.num_vertices(), Color::red);
  c.edge.assign(g.num_edges(), Color::red);
  c.edge[g.edge_index(1, 0)] = Color::blue;
  const auto comps = components_after_blue_removal(g, c);
  ASSERT_EQ(comps.size(), 2u);
  const auto f = feasibility_filter(pb, c, comps);
  EXPECT_EQ(f.verdicts[0], ComponentVerdict::dependent);
  EXPECT_EQ(f.verdicts[1], ComponentVerdict::dependent);
  EXPECT_FALSE(refine_once(pb, c, 2, 1));

  RefineOptions opt;
  opt.mode = RefineMode::exhaustive_colorings;
  const auto r = refine(inst, base, 1, 1, Measure::envy, opt);
  ASSERT_TRUE(r.allocation);
  EXPECT_EQ(measure_value(inst, *r.allocation, Measure::envy), 0);
}

TEST(Refine, TrivialBudgets) {
  Example1 ex;
  for (auto mode : {RefineMode::randomized, RefineMode::exhaustive_colorings, RefineMode::oracle_fallback}) {
    RefineOptions opt;
    opt.mode = mode;
    EXPECT_EQ(refine(ex.inst, ex.base, 0, 0, Measure::envy, opt).allocation, ex.base);
    EXPECT_EQ(refine(ex.inst, ex.base, 3, -2, Measure::envy, opt).allocation, ex.base);
    EXPECT_FALSE(refine(ex.inst, ex.base, 0, 1, Measure::envy, opt).allocation);
    EXPECT_FALSE(refine(ex.inst, ex.base, 5, 6, Measure::envy, opt).allocation);
  }
  EXPECT_THROW(refine(ex.inst, ex.base, -1, 1, Measure::envy), ValidationError);
}

TEST(Refine, AllColoringsModeIsGated) {
  Example1 ex;
  RefineOptions opt;
  opt.mode = RefineMode::exhaustive_all_colorings;
  EXPECT_THROW(refine(ex.inst, ex.base, 5, 5, Measure::envy, opt), CapExceeded);
}

TEST(Refine, MoveColoringsAgreeWithAllColoringsOnTinyGraphs) {
  int compared = 0;
  for (std::uint64_t s = 0; s < 400 && compared < 60; ++s) {
    const auto inst = testing::sparse_instance(2 + static_cast<int>(s % 2), 3 + static_cast<int>(s % 2), 2, s);
    const auto base = testing::random_allocation(inst.num_agents(), inst.num_houses(), s);
    const PreferenceGraph g(inst, base);
    if (g.num_vertices() + g.num_edges() > 12) continue;
    for (auto meas : {Measure::envy, Measure::total}) {
      const auto bv = measure_value(inst, base, meas);
      for (int q = 1; q <= inst.num_agents(); ++q) {
        for (std::int64_t k = 1; k <= bv; ++k) {
          RefineOptions a, b;
          a.mode = RefineMode::exhaustive_colorings;
          b.mode = RefineMode::exhaustive_all_colorings;
          b.exhaustive_limit = 12;
          const bool ya = refine(inst, base, q, k, meas, a).allocation.has_value();
          const bool yb = refine(inst, base, q, k, meas, b).allocation.has_value();
          const bool yo = min_measure_within_q(inst, base, q, meas, {}, true).value <= bv - k;
          ASSERT_EQ(ya, yo) << "seed " << s;
          ASSERT_EQ(yb, yo) << "seed " << s;
          ++compared;
        }
      }
    }
  }
  EXPECT_GE(compared, 20);
}

TEST(Refine, EveryModeIsSound) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const int n = 2 + static_cast<int>(s % 4), m = n + static_cast<int>(s % 3);
    const auto inst = testing::sparse_instance(n, m, 3, s);
    const auto base = testing::random_allocation(n, m, s);
    for (auto meas : {Measure::envy, Measure::total, Measure::max}) {
      const auto bv = measure_value(inst, base, meas);
      for (auto mode : {RefineMode::randomized, RefineMode::sampled, RefineMode::exhaustive_colorings,
                        RefineMode::oracle_fallback}) {
        RefineOptions opt;
        opt.mode = mode;
        opt.seed = s;
        opt.repetition_cap = 2000;
        for (int q = 1; q <= 2; ++q) {
          const std::int64_t k = std::max<std::int64_t>(1, bv / 2);
          const auto r = refine(inst, base, q, k, meas, opt);
          if (!r.allocation) continue;
          r.allocation->validate(inst);
          EXPECT_LE(r.allocation->distance(base), q);
          EXPECT_LE(measure_value(inst, *r.allocation, meas), bv - k);
        }
      }
    }
  }
}

TEST(Refine, RandomizedRunIsDeterministic) {
  const auto inst = testing::sparse_instance(3, 5, 2, 2);
  const auto base = testing::random_allocation(3, 5, 2);
  RefineOptions opt;
  opt.seed = 2026;
  const auto a = refine(inst, base, 2, 2, Measure::envy, opt);
  const auto b = refine(inst, base, 2, 2, Measure::envy, opt);
  ASSERT_TRUE(a.allocation);
  EXPECT_EQ(a.allocation, b.allocation);
  EXPECT_EQ(a.success_index, b.success_index);
  EXPECT_EQ(*a.success_index, 525u);
  EXPECT_EQ(*a.allocation, Allocation({0, 2, 3}));
  EXPECT_EQ(a.colorings_tried, 526u);
}

TEST(Refine, RepetitionCountsAndSampleSize) {
  const auto inst = testing::sparse_instance(3, 5, 2, 2);
  const RefineProblem pb(inst, testing::random_allocation(3, 5, 2), Measure::envy);
  const int d = pb.degree_bound();
  EXPECT_DOUBLE_EQ(pb.theoretical_repetitions(1), std::pow(3.0, 3.0 * (d + 1)));
  EXPECT_EQ(detail::sample_size(1, 1, 20), 0);
  EXPECT_EQ(detail::sample_size(2, 2, 10), 5);
  EXPECT_EQ(detail::sample_size(3, 3, 10), 0);
  EXPECT_DOUBLE_EQ(detail::binomial(6, 2), 15.0);
}

TEST(Refine, SampleColoringIsSeeded) {
  Example1 ex;
  const PreferenceGraph g(ex.inst, ex.base);
  CounterRng r1(5), r2(5);
  const auto a = sample_coloring(g, r1), b = sample_coloring(g, r2);
  EXPECT_EQ(a.vertex, b.vertex);
  EXPECT_EQ(a.edge, b.edge);
  EXPECT_EQ(a.vertex.size(), 13u);
  EXPECT_EQ(a.edge.size(), 25u);
}

TEST(Refine, ParseMode) {
  EXPECT_EQ(parse_refine_mode("exhaustive"), RefineMode::exhaustive_colorings);
  EXPECT_EQ(parse_refine_mode("exhaustive-all"), RefineMode::exhaustive_all_colorings);
  EXPECT_EQ(parse_refine_mode("oracle"), RefineMode::oracle_fallback);
  EXPECT_EQ(parse_refine_mode("sampled"), RefineMode::sampled);
  EXPECT_EQ(parse_refine_mode("randomized"), RefineMode::randomized);
  EXPECT_THROW(parse_refine_mode("fast"), std::invalid_argument);
}

}  // namespace
}  // namespace hafair
