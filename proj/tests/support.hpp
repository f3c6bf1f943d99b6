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


#ifndef HAFAIR_TESTS_SUPPORT_HPP_
#define HAFAIR_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hafair/hafair.hpp"

namespace hafair::testing {

inline std::string data_path(const std::string& name) { return std::string(HAFAIR_DATA_DIR) + "/" + name; }

// Partial ordinal lists of length <= d with occasional ties.
inline Instance sparse_instance(int n, int m, int d, std::uint64_t seed) {
  CounterRng rng(derive_key(seed, 0x7370));
  std::vector<PreferenceProfile::Ranking> rk(n);
  for (int i = 0; i < n; ++i) {
    std::vector<HouseId> hs(m);
    for (int h = 0; h < m; ++h) hs[h] = h;
    shuffle(hs, rng);
    const int len = std::min<int>(m, 1 + static_cast<int>(rng.uniform(d)));
    for (int t = 0; t < len; ++t) {
      if (t > 0 && rng.uniform(4) == 0)
        rk[i].back().push_back(hs[t]);
      else
        rk[i].push_back({hs[t]});
    }
  }
  return Instance(PreferenceProfile::ordinal(m, rk));
}

inline Allocation random_allocation(int n, int m, std::uint64_t seed) {
  CounterRng rng(derive_key(seed, 0x616c));
  std::vector<HouseId> b(m);
  for (int h = 0; h < m; ++h) b[h] = h;
  shuffle(b, rng);
  b.resize(n);
  return Allocation(b);
}

// Agents with a positive value and the product of those values.
struct NashKey {
  int positive = 0;
  boost::multiprecision::cpp_int product = 1;
  friend bool operator==(const NashKey&, const NashKey&) = default;
  friend bool operator<(const NashKey& a, const NashKey& b) {
    return a.positive != b.positive ? a.positive < b.positive : a.product < b.product;
  }
};

inline NashKey nash_key(const Instance& inst, const Allocation& a) {
  NashKey k;
  for (AgentId i = 0; i < inst.num_agents(); ++i) {
    const auto v = a[i] == kNoHouse ? 0 : inst.prefs().value(i, a[i]);
    if (v > 0) {
      ++k.positive;
      k.product *= v;
    }
  }
  return k;
}

// Envy-free flags of every agent under a complete allocation.
inline std::vector<char> envy_free_flags(const PreferenceProfile& p, const std::vector<HouseId>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<char> ef(n, 1);
  for (AgentId i = 0; i < n; ++i)
    for (AgentId j = 0; j < n; ++j)
      if (i != j && p.prefers(i, a[j], a[i])) ef[i] = 0;
  return ef;
}

inline int count_in(const std::vector<char>& flags, const std::vector<AgentId>& agents) {
  int c = 0;
  for (AgentId i : agents) c += flags[i];
  return c;
}

// At most two envy-free agents per shared-peak base, over every allocation.
inline int shared_peak_violations(const Instance& inst) {
  const auto pp = peak_profile(inst);
  int bad = 0;
  for_each_allocation(inst, {}, [&](const std::vector<HouseId>& a) {
    const auto ef = envy_free_flags(inst.prefs(), a);
    for (HouseId h = 0; h < inst.num_houses(); ++h)
      if (pp.kind[h] == PeakKind::shared && count_in(ef, pp.base[h]) > 2) ++bad;
  });
  return bad;
}

// p_I + p_S <= |EF| <= p_I + 2 p_S for the solver output and every optimum.
inline int envy_free_bound_violations(const Instance& inst) {
  const auto pp = peak_profile(inst);
  const int lo = pp.individual_peaks + pp.shared_peaks, hi = pp.individual_peaks + 2 * pp.shared_peaks;
  int bad = 0;
  auto check = [&](const Allocation& a) {
    const int ef = inst.num_agents() - static_cast<int>(measure_value(inst, a, Measure::envy));
    if (ef < lo || ef > hi) ++bad;
  };
  check(min_envy_single_peaked(inst));
  for (const auto& a : all_optimal_allocations(inst, Measure::envy)) check(a);
  return bad;
}

struct SpanCounts {
  int sets = 0;
  int below = 0;
  int above = 0;
  int unmet = 0;
};

// For every set of k shared peaks with pairwise intersecting spans, counts
// the optima with fewer than k or more than k+1 envy-free agents in the
// union of bases, and the sets where no optimum reaches k.
inline SpanCounts overlapping_span_counts(const Instance& inst) {
  const auto pp = peak_profile(inst);
  std::vector<HouseId> shared;
  for (HouseId h = 0; h < inst.num_houses(); ++h)
    if (pp.kind[h] == PeakKind::shared) shared.push_back(h);
  auto meet = [&](HouseId a, HouseId b) {
    for (HouseId x : pp.span[a])
      if (pp.in_span(b, x)) return true;
    return false;
  };
  std::vector<std::vector<AgentId>> groups;
  std::vector<int> sizes;
  for (unsigned mask = 1; mask < (1u << shared.size()); ++mask) {
    std::vector<HouseId> s;
    for (std::size_t t = 0; t < shared.size(); ++t)
      if (mask >> t & 1) s.push_back(shared[t]);
    bool ok = true;
    for (std::size_t x = 0; x < s.size() && ok; ++x)
      for (std::size_t y = x + 1; y < s.size() && ok; ++y) ok = meet(s[x], s[y]);
    if (!ok) continue;
    std::vector<AgentId> g;
    for (HouseId h : s) g.insert(g.end(), pp.base[h].begin(), pp.base[h].end());
    groups.push_back(std::move(g));
    sizes.push_back(static_cast<int>(s.size()));
  }
  SpanCounts out;
  out.sets = static_cast<int>(groups.size());
  std::vector<char> reached(groups.size(), 0);
  for (const auto& a : all_optimal_allocations(inst, Measure::envy)) {
    const auto ef = envy_free_flags(inst.prefs(), a.houses());
    for (std::size_t g = 0; g < groups.size(); ++g) {
      const int c = count_in(ef, groups[g]);
      if (c < sizes[g]) ++out.below;
      if (c > sizes[g] + 1) ++out.above;
      if (c >= sizes[g]) reached[g] = 1;
    }
  }
  for (char r : reached) out.unmet += !r;
  return out;
}

// Some optimum gives every individual peak to its base agent.
inline bool individual_peaks_kept(const Instance& inst) {
  const auto pp = peak_profile(inst);
  for (const auto& a : all_optimal_allocations(inst, Measure::envy)) {
    bool ok = true;
    for (HouseId h = 0; h < inst.num_houses() && ok; ++h)
      if (pp.kind[h] == PeakKind::individual) ok = a[pp.base[h].front()] == h;
    if (ok) return true;
  }
  return false;
}

// Largest number of envy-free agents over every allocation, and whether
// some allocation has between 3 and n-1 of them.
struct EnvyFreeSpread {
  int most = 0;
  bool middle = false;
};

inline EnvyFreeSpread envy_free_spread(const Instance& inst) {
  EnvyFreeSpread s;
  const int n = inst.num_agents();
  for_each_allocation(inst, {}, [&](const std::vector<HouseId>& a) {
    const auto ef = envy_free_flags(inst.prefs(), a);
    int c = 0;
    for (char f : ef) c += f;
    s.most = std::max(s.most, c);
    if (c > 2 && c < n) s.middle = true;
  });
  return s;
}

}  // namespace hafair::testing

#endif  // HAFAIR_TESTS_SUPPORT_HPP_
