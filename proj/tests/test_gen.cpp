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

#include <cmath>

#include "hafair/hafair.hpp"

namespace hafair {
namespace {

TEST(Gen, UniformFixtureAndRange) {
  const auto inst = gen_uniform_cardinal(2, 3, 5);
  EXPECT_EQ(inst.prefs().values(), (std::vector<std::vector<std::int64_t>>{{9, 6, 2}, {0, 3, 4}}));
  EXPECT_FALSE(inst.has_axis());
  const auto big = gen_uniform_cardinal(6, 11, 1);
  EXPECT_EQ(big.num_agents(), 6);
  EXPECT_EQ(big.num_houses(), 11);
}

TEST(Gen, PeakedFixture) {
  const auto inst = gen_single_peaked(3, 5, 11);
  EXPECT_EQ(inst.prefs().values(),
            (std::vector<std::vector<std::int64_t>>{{11, 14, 23, 20, 17}, {14, 16, 19, 21, 22}, {7, 8, 11, 13, 15}}));
  EXPECT_EQ(inst.axis(), (std::vector<HouseId>{0, 1, 2, 3, 4}));
}

TEST(Gen, SameSeedSameBytes) {
  for (auto model : {Model::uniform, Model::peaked, Model::dipped}) {
    const auto a = instance_to_json(generate(model, 5, 9, 77)).dump();
    const auto b = instance_to_json(generate(model, 5, 9, 77)).dump();
    EXPECT_EQ(a, b);
    EXPECT_NE(a, instance_to_json(generate(model, 5, 9, 78)).dump());
  }
}

TEST(Gen, UniformHistogramIsFlat) {
  std::vector<int> bucket(11, 0);
  int draws = 0;
  for (std::uint64_t s = 0; draws < 100000; ++s) {
    const auto inst = gen_uniform_cardinal(10, 20, s);
    for (const auto& row : inst.prefs().values())
      for (auto v : row) {
        ASSERT_GE(v, 0);
        ASSERT_LE(v, 10);
        ++bucket[v];
        ++draws;
      }
  }
  const double p = 1.0 / 11, mean = draws * p, sigma = std::sqrt(draws * p * (1 - p));
  for (int v = 0; v <= 10; ++v) EXPECT_NEAR(bucket[v], mean, 3 * sigma) << v;
}

TEST(Gen, GeneratedInstancesPassTheirValidators) {
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const int n = 1 + static_cast<int>(s % 10), m = n + static_cast<int>(s % 7);
    const auto p = gen_single_peaked(n, m, s);
    ASSERT_TRUE(validate_single_peaked(p).ok) << s;
    ASSERT_TRUE(p.prefs().is_strict());
    const auto d = gen_single_dipped(n, m, s);
    ASSERT_TRUE(validate_single_dipped(d).ok) << s;
    ASSERT_TRUE(validate_single_peaked(gen_clustered_peaked(n, m, s)).ok) << s;
    ASSERT_TRUE(validate_single_dipped(gen_clustered_dipped(n, m, s)).ok) << s;
    ASSERT_TRUE(validate_single_dipped(gen_single_dipped_ties(n, m, s)).ok) << s;
  }
}

TEST(Gen, PeakedValuesArePositiveAndDistinct) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto inst = gen_single_peaked(10, 25, s);
    for (const auto& row : inst.prefs().values()) {
      auto sorted = row;
      std::sort(sorted.begin(), sorted.end());
      EXPECT_GT(sorted.front(), 0);
      EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
    }
  }
}

TEST(Gen, TinyAndInvalidDimensions) {
  EXPECT_EQ(gen_single_peaked(1, 1, 3).num_houses(), 1);
  const auto d = gen_single_dipped(2, 2, 3);
  for (const auto& row : d.prefs().values()) EXPECT_NE(row[0], row[1]);
  EXPECT_EQ(gen_single_dipped(10, 10, 3).num_agents(), 10);
  EXPECT_THROW(gen_uniform_cardinal(3, 2, 1), ValidationError);
  EXPECT_THROW(gen_single_peaked(0, 2, 1), ValidationError);
  EXPECT_EQ(parse_model("peaked"), Model::peaked);
  EXPECT_THROW(parse_model("mallows"), ValidationError);
}

}  // namespace
}  // namespace hafair
