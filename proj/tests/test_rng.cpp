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

#include <set>

#include "hafair/rng.hpp"

namespace hafair {
namespace {

TEST(Rng, MatchesSplitMix64Reference) {
  CounterRng r(0);
  EXPECT_EQ(r(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(r(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(r(), 0x06c45d188009454fULL);
  EXPECT_EQ(r.position(), 3u);
}

TEST(Rng, DerivedStreamFixture) {
  CounterRng r(derive_key(42, {1, 2}));
  EXPECT_EQ(r(), 0x71ac0ba8fa41fbd8ULL);
  EXPECT_EQ(r(), 0xa3c1eb36dc7a85beULL);
  EXPECT_EQ(r(), 0xe3e83edd41a94020ULL);
}

TEST(Rng, UniformAndShuffleFixtures) {
  CounterRng r(7);
  std::vector<std::int64_t> rolls;
  for (int i = 0; i < 8; ++i) rolls.push_back(r.uniform_int(1, 6));
  EXPECT_EQ(rolls, (std::vector<std::int64_t>{4, 1, 1, 4, 5, 4, 5, 1}));

  CounterRng s(9);
  std::vector<int> v{0, 1, 2, 3, 4, 5, 6, 7};
  shuffle(v, s);
  EXPECT_EQ(v, (std::vector<int>{3, 6, 5, 1, 7, 0, 2, 4}));
}

TEST(Rng, SplitDoesNotAdvanceParent) {
  CounterRng a(5), b(5);
  auto child = a.split(3);
  EXPECT_EQ(a(), b());
  EXPECT_EQ(child.key(), derive_key(5, 3));
}

TEST(Rng, DeriveKeyChainsTags) {
  EXPECT_EQ(derive_key(11, {4, 9}), derive_key(derive_key(11, 4), 9));
  EXPECT_NE(derive_key(11, {4, 9}), derive_key(11, {9, 4}));
}

TEST(Rng, UniformStaysInRangeAndCoversIt) {
  CounterRng r(123);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const auto x = r.uniform(7);
    ASSERT_LT(x, 7u);
    seen.insert(x);
  }
  EXPECT_EQ(seen.size(), 7u);
}

}  // namespace
}  // namespace hafair
