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

#ifndef HAFAIR_GEN_HPP_
#define HAFAIR_GEN_HPP_

// Seeded synthetic instances. Every agent draws from its own stream
// derive_key(seed, {model tag, agent}), so instances are reproducible from
// (model, n, m, seed) alone.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "hafair/core.hpp"
#include "hafair/rng.hpp"

namespace hafair {

enum class Model { uniform, peaked, dipped };

inline Model parse_model(const std::string& s) {
  if (s == "uniform") return Model::uniform;
  if (s == "peaked") return Model::peaked;
  if (s == "dipped") return Model::dipped;
  throw ValidationError("unknown model '" + s + "'");
}

namespace detail {

inline constexpr std::uint64_t kUniformTag = 1;
inline constexpr std::uint64_t kPeakedTag = 2;
inline constexpr std::uint64_t kDippedTag = 3;
inline constexpr std::uint64_t kDippedTiesTag = 4;
inline constexpr std::uint64_t kClusteredPeakedTag = 5;
inline constexpr std::uint64_t kClusteredDippedTag = 6;

inline void check_dimensions(int n, int m) {
  if (n < 1 || m < n) throw ValidationError("generators need 1 <= n <= m");
}

inline std::vector<HouseId> identity_axis(int m) {
  std::vector<HouseId> axis(m);
  for (int h = 0; h < m; ++h) axis[h] = h;
  return axis;
}

// Houses in order of growing distance from position p: each step extends
// the visited interval to the left or right, choosing a side uniformly
// while both remain.
inline std::vector<HouseId> outward_order(int m, int p, CounterRng& rng) {
  std::vector<HouseId> out{p};
  int lo = p, hi = p;
  while (static_cast<int>(out.size()) < m) {
    const bool left_ok = lo > 0, right_ok = hi < m - 1;
    const bool go_left = left_ok && (!right_ok || rng.uniform(2) == 0);
    out.push_back(go_left ? --lo : ++hi);
  }
  return out;
}

// Houses taken from the two ends of [0, m) inward, i.e. a best-first
// single-dipped order. `template_sides` fixes the first choices.
inline std::vector<HouseId> inward_order(int m, int stop_lo, int stop_hi, CounterRng& rng,
                                         const std::vector<int>& template_sides = {}) {
  std::vector<HouseId> out;
  int lo = 0, hi = m - 1;
  std::size_t step = 0;
  const int target = stop_lo <= stop_hi ? m - (stop_hi - stop_lo + 1) : m;
  while (static_cast<int>(out.size()) < target) {
    const bool left_ok = lo < stop_lo && lo <= hi, right_ok = hi > stop_hi && lo <= hi;
    bool go_left;
    if (left_ok && right_ok) {
      go_left = step < template_sides.size() ? template_sides[step] == 0 : rng.uniform(2) == 0;
    } else {
      go_left = left_ok;
    }
    out.push_back(go_left ? lo++ : hi--);
    ++step;
  }
  return out;
}

inline Instance ordinal_from_orders(int m, const std::vector<std::vector<HouseId>>& orders) {
  std::vector<PreferenceProfile::Ranking> rk(orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i)
    for (HouseId h : orders[i]) rk[i].push_back({h});
  return Instance(PreferenceProfile::ordinal(m, std::move(rk)), identity_axis(m));
}

}  // namespace detail

/// Values i.i.d. uniform on {0, ..., 10}.
inline Instance gen_uniform_cardinal(int n, int m, std::uint64_t seed) {
  detail::check_dimensions(n, m);
  std::vector<std::vector<std::int64_t>> v(n, std::vector<std::int64_t>(m));
  for (int i = 0; i < n; ++i) {
    CounterRng rng(derive_key(seed, {detail::kUniformTag, static_cast<std::uint64_t>(i)}));
    for (int h = 0; h < m; ++h) v[i][h] = rng.uniform_int(0, 10);
  }
  return Instance(PreferenceProfile::cardinal(std::move(v)));
}

/// Axis h1..hm; uniform peak with value 3m + U{0..10}; walking outward the
/// value drops by U{1,2,3} per house, the side of each step chosen at random,
/// so an agent's values are pairwise distinct and positive.
inline Instance gen_single_peaked(int n, int m, std::uint64_t seed) {
  detail::check_dimensions(n, m);
  std::vector<std::vector<std::int64_t>> v(n, std::vector<std::int64_t>(m));
  for (int i = 0; i < n; ++i) {
    CounterRng rng(derive_key(seed, {detail::kPeakedTag, static_cast<std::uint64_t>(i)}));
    const int p = static_cast<int>(rng.uniform(m));
    std::int64_t val = 3LL * m + rng.uniform_int(0, 10);
    const auto order = detail::outward_order(m, p, rng);
    for (std::size_t k = 0; k < order.size(); ++k) {
      if (k > 0) val -= rng.uniform_int(1, 3);
      v[i][order[k]] = val;
    }
  }
  return Instance(PreferenceProfile::cardinal(std::move(v)), detail::identity_axis(m));
}

/// Mirror image: uniform dip with value U{0..10}, rising by U{1,2,3} per
/// house walking outward.
inline Instance gen_single_dipped(int n, int m, std::uint64_t seed) {
  detail::check_dimensions(n, m);
  std::vector<std::vector<std::int64_t>> v(n, std::vector<std::int64_t>(m));
  for (int i = 0; i < n; ++i) {
    CounterRng rng(derive_key(seed, {detail::kDippedTag, static_cast<std::uint64_t>(i)}));
    const int p = static_cast<int>(rng.uniform(m));
    std::int64_t val = rng.uniform_int(0, 10);
    const auto order = detail::outward_order(m, p, rng);
    for (std::size_t k = 0; k < order.size(); ++k) {
      if (k > 0) val += rng.uniform_int(1, 3);
      v[i][order[k]] = val;
    }
  }
  return Instance(PreferenceProfile::cardinal(std::move(v)), detail::identity_axis(m));
}

/// Ordinal single-dipped rankings sharing a bottom tie-group: a contiguous
/// axis interval of uniform width in 1..m, ranked last (tied) by everyone.
inline Instance gen_single_dipped_ties(int n, int m, std::uint64_t seed) {
  detail::check_dimensions(n, m);
  CounterRng shared(derive_key(seed, {detail::kDippedTiesTag, ~std::uint64_t{0}}));
  const int width = static_cast<int>(shared.uniform_int(1, m));
  const int lo = static_cast<int>(shared.uniform(m - width + 1));
  const int hi = lo + width - 1;
  std::vector<PreferenceProfile::Ranking> rk(n);
  for (int i = 0; i < n; ++i) {
    CounterRng rng(derive_key(seed, {detail::kDippedTiesTag, static_cast<std::uint64_t>(i)}));
    for (HouseId h : detail::inward_order(m, lo, hi, rng)) rk[i].push_back({h});
    PreferenceProfile::TieGroup bottom;
    for (int h = lo; h <= hi; ++h) bottom.push_back(h);
    rk[i].push_back(bottom);
  }
  return Instance(PreferenceProfile::ordinal(m, std::move(rk)), detail::identity_axis(m));
}

/// Ordinal single-peaked rankings with few distinct peaks and agents that
/// copy a cluster template for a random number of steps, so that shared
/// peaks with long and overlapping spans are common.
inline Instance gen_clustered_peaked(int n, int m, std::uint64_t seed) {
  detail::check_dimensions(n, m);
  CounterRng shared(derive_key(seed, {detail::kClusteredPeakedTag, ~std::uint64_t{0}}));
  const int clusters = static_cast<int>(shared.uniform_int(1, std::max(1, (n + 1) / 2)));
  std::vector<int> peak(clusters);
  std::vector<std::vector<HouseId>> tmpl(clusters);
  for (int c = 0; c < clusters; ++c) {
    peak[c] = static_cast<int>(shared.uniform(m));
    tmpl[c] = detail::outward_order(m, peak[c], shared);
  }
  std::vector<std::vector<HouseId>> orders(n);
  for (int i = 0; i < n; ++i) {
    CounterRng rng(derive_key(seed, {detail::kClusteredPeakedTag, static_cast<std::uint64_t>(i)}));
    const int c = static_cast<int>(rng.uniform(clusters));
    const int keep = static_cast<int>(rng.uniform_int(1, m));
    auto& o = orders[i];
    o.assign(tmpl[c].begin(), tmpl[c].begin() + keep);
    int lo = m, hi = -1;
    for (HouseId h : o) {
      lo = std::min(lo, h);
      hi = std::max(hi, h);
    }
    while (static_cast<int>(o.size()) < m) {
      const bool left_ok = lo > 0, right_ok = hi < m - 1;
      const bool go_left = left_ok && (!right_ok || rng.uniform(2) == 0);
      o.push_back(go_left ? --lo : ++hi);
    }
  }
  return detail::ordinal_from_orders(m, orders);
}

/// Ordinal single-dipped rankings where agents copy a common template for a
/// random number of leading choices (long common top spans).
inline Instance gen_clustered_dipped(int n, int m, std::uint64_t seed) {
  detail::check_dimensions(n, m);
  CounterRng shared(derive_key(seed, {detail::kClusteredDippedTag, ~std::uint64_t{0}}));
  std::vector<int> sides(m);
  for (auto& s : sides) s = static_cast<int>(shared.uniform(2));
  const bool common = shared.uniform(2) == 0;
  std::vector<std::vector<HouseId>> orders(n);
  for (int i = 0; i < n; ++i) {
    CounterRng rng(derive_key(seed, {detail::kClusteredDippedTag, static_cast<std::uint64_t>(i)}));
    const int keep = common ? static_cast<int>(rng.uniform_int(1, m)) : static_cast<int>(rng.uniform(m + 1));
    const std::vector<int> prefix(sides.begin(), sides.begin() + keep);
    orders[i] = detail::inward_order(m, m, -1, rng, prefix);
  }
  return detail::ordinal_from_orders(m, orders);
}

inline Instance generate(Model model, int n, int m, std::uint64_t seed) {
  switch (model) {
    case Model::uniform: return gen_uniform_cardinal(n, m, seed);
    case Model::peaked: return gen_single_peaked(n, m, seed);
    case Model::dipped: return gen_single_dipped(n, m, seed);
  }
  return gen_uniform_cardinal(n, m, seed);
}

}  // namespace hafair

#endif  // HAFAIR_GEN_HPP_
