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

#ifndef HAFAIR_WELFARE_HPP_
#define HAFAIR_WELFARE_HPP_

// Welfare-maximizing allocations for cardinal profiles.
//
// Ties between optimal assignments go to the lexicographically smallest
// house vector (agent 0's house first): the tie-break enters only through
// comparison weights, never through stored values.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "hafair/core.hpp"
#include "hafair/matching.hpp"

namespace hafair {

inline WelfareKind parse_welfare_kind(const std::string& s) {
  if (s == "util" || s == "utilitarian") return WelfareKind::utilitarian;
  if (s == "nash") return WelfareKind::nash;
  if (s == "egal" || s == "egalitarian") return WelfareKind::egalitarian;
  throw ValidationError("unknown welfare objective '" + s + "'");
}

namespace detail {

using Wide = __int128;

// Weights value * scale + tie, where the tie term sum (m-1-h) m^(n-1-i) is a
// base-m number that is largest for the lexicographically least vector.
struct LexWeights {
  Wide scale = 1;
  std::vector<Wide> place;  // m^(n-1-i)
  bool enabled = false;

  LexWeights(int n, int m, std::int64_t max_abs_value) : place(n, 0) {
    const Wide limit = static_cast<Wide>(1) << 100;
    Wide p = 1;
    bool ok = true;
    for (int i = n - 1; i >= 0; --i) {
      place[i] = p;
      if (i > 0) {
        if (p > limit / std::max(m, 2)) ok = false;
        p *= std::max(m, 2);
      }
    }
    const Wide base = std::max(m, 2);
    if (ok && p <= limit / base && p * base <= limit / ((max_abs_value + 1) * (n + 1))) {
      scale = p * base;
      enabled = true;
    } else {
      std::fill(place.begin(), place.end(), 0);
    }
  }

  Wide tie(AgentId i, HouseId h, int m) const { return enabled ? place[i] * (m - 1 - h) : 0; }
};

// Max of sum value(i,h) over allowed cells, lexicographic tie-break.
// allowed may be empty (everything allowed); the caller guarantees that a
// saturating matching over allowed cells exists.
inline Allocation max_weight_lex(const Instance& inst, const std::vector<std::vector<std::int64_t>>& value,
                                 const std::vector<std::vector<char>>& allowed) {
  const int n = inst.num_agents(), m = inst.num_houses();
  std::int64_t mx = 0;
  for (const auto& row : value)
    for (auto v : row) mx = std::max<std::int64_t>(mx, v < 0 ? -v : v);
  const LexWeights lw(n, m, mx);
  const Wide penalty = (static_cast<Wide>(1) << 110);
  std::vector<std::vector<Wide>> cost(n, std::vector<Wide>(m));
  for (int i = 0; i < n; ++i)
    for (int h = 0; h < m; ++h) {
      const bool ok = allowed.empty() || allowed[i][h];
      cost[i][h] = ok ? -(static_cast<Wide>(value[i][h]) * lw.scale + lw.tie(i, h, m)) : penalty;
    }
  return Allocation(min_cost_assignment(cost));
}

}  // namespace detail

inline Allocation max_utilitarian(const Instance& inst) {
  detail::require_cardinal(inst);
  return detail::max_weight_lex(inst, inst.prefs().values(), {});
}

/// Largest threshold admitting an agent-saturating matching on value >= t,
/// then the best utilitarian (then lexicographic) assignment at that level.
inline Allocation max_egalitarian(const Instance& inst) {
  detail::require_cardinal(inst);
  const int n = inst.num_agents(), m = inst.num_houses();
  const auto& val = inst.prefs().values();
  std::vector<std::int64_t> levels;
  for (const auto& row : val) levels.insert(levels.end(), row.begin(), row.end());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  auto allowed_at = [&](std::int64_t t) {
    std::vector<std::vector<char>> ok(n, std::vector<char>(m));
    for (int i = 0; i < n; ++i)
      for (int h = 0; h < m; ++h) ok[i][h] = val[i][h] >= t;
    return ok;
  };
  std::size_t lo = 0, hi = levels.size() - 1;  // levels[lo] is always feasible
  while (lo < hi) {
    const std::size_t mid = (lo + hi + 1) / 2;
    if (matching_size(max_cardinality_matching(allowed_at(levels[mid]), m)) == n) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return detail::max_weight_lex(inst, val, allowed_at(levels[lo]));
}

/// Most agents with positive utility first, then the largest product of
/// positive utilities. Products are compared through long double logs; the
/// lexicographic tie-break is applied by fixing agents one at a time.
inline Allocation max_nash(const Instance& inst) {
  detail::require_cardinal(inst);
  const int n = inst.num_agents(), m = inst.num_houses();
  const auto& val = inst.prefs().values();
  long double max_log = 0;
  for (const auto& row : val)
    for (auto v : row)
      if (v > 0) max_log = std::max(max_log, std::log(static_cast<long double>(v)));
  const long double bonus = 4 * (n + 1) * (max_log + 1);
  const long double forbidden = 1e6L * bonus * (n + 1);
  std::vector<std::vector<long double>> weight(n, std::vector<long double>(m, 0));
  for (int i = 0; i < n; ++i)
    for (int h = 0; h < m; ++h)
      if (val[i][h] > 0) weight[i][h] = bonus + std::log(static_cast<long double>(val[i][h]));

  std::vector<HouseId> fixed(n, kNoHouse);
  auto solve = [&](std::vector<int>& out) {
    std::vector<std::vector<long double>> cost(n, std::vector<long double>(m));
    for (int i = 0; i < n; ++i)
      for (int h = 0; h < m; ++h) {
        const bool ok = fixed[i] == kNoHouse ? true : fixed[i] == h;
        cost[i][h] = ok ? -weight[i][h] : forbidden;
      }
    out = min_cost_assignment(cost);
    long double total = 0;
    for (int i = 0; i < n; ++i) {
      if (fixed[i] != kNoHouse && out[i] != fixed[i]) return -forbidden;
      total += weight[i][out[i]];
    }
    return total;
  };
  std::vector<int> cur;
  const long double best = solve(cur);
  const long double tol = 1e-9L * (1 + std::fabs(best));
  std::vector<char> taken(m, 0);
  for (int i = 0; i < n; ++i) {
    for (int h = 0; h < m; ++h) {
      if (taken[h]) continue;
      fixed[i] = h;
      std::vector<int> trial;
      if (solve(trial) >= best - tol) break;
      fixed[i] = kNoHouse;
    }
    if (fixed[i] == kNoHouse) fixed[i] = cur[i];
    taken[fixed[i]] = 1;
  }
  return Allocation(fixed);
}

inline Allocation max_welfare(const Instance& inst, WelfareKind kind) {
  switch (kind) {
    case WelfareKind::utilitarian: return max_utilitarian(inst);
    case WelfareKind::nash: return max_nash(inst);
    case WelfareKind::egalitarian: return max_egalitarian(inst);
  }
  return max_utilitarian(inst);
}

}  // namespace hafair

#endif  // HAFAIR_WELFARE_HPP_
