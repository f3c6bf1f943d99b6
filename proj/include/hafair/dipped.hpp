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

#ifndef HAFAIR_DIPPED_HPP_
#define HAFAIR_DIPPED_HPP_

// Minimum-envy allocation for single-dipped preferences, with an optional
// common tie-group at the bottom of every ranking.

#include <algorithm>
#include <optional>
#include <vector>

#include "hafair/core.hpp"
#include "hafair/domain.hpp"
#include "hafair/pareto.hpp"
#include "hafair/peaked.hpp"

namespace hafair {

namespace detail {

// Per agent, a level for every house (0 = best); houses on one level are
// tied. Only the last level may hold more than one house.
struct BottomTiedRankings {
  std::vector<std::vector<int>> level;
  std::vector<std::vector<HouseId>> bottom;  // last level, ascending house id
};

inline BottomTiedRankings bottom_tied_rankings(const Instance& inst) {
  const auto& p = inst.prefs();
  const int n = inst.num_agents(), m = inst.num_houses();
  BottomTiedRankings out;
  out.level.assign(n, std::vector<int>(m, -1));
  out.bottom.assign(n, {});
  for (AgentId i = 0; i < n; ++i) {
    std::vector<std::vector<HouseId>> groups;
    if (p.is_ordinal()) {
      groups = p.rankings()[i];
    } else {
      std::vector<HouseId> ord(m);
      for (HouseId h = 0; h < m; ++h) ord[h] = h;
      std::stable_sort(ord.begin(), ord.end(), [&](HouseId a, HouseId b) { return p.value(i, a) > p.value(i, b); });
      for (int r = 0; r < m; ++r) {
        if (r == 0 || p.value(i, ord[r]) != p.value(i, ord[r - 1])) groups.emplace_back();
        groups.back().push_back(ord[r]);
      }
    }
    int covered = 0;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (groups[g].size() > 1 && g + 1 != groups.size())
        throw DomainError("agent i" + std::to_string(i + 1) + " has ties above its bottom group");
      for (HouseId h : groups[g]) out.level[i][h] = static_cast<int>(g);
      covered += static_cast<int>(groups[g].size());
    }
    if (covered != m) throw DomainError("ranking of agent i" + std::to_string(i + 1) + " is incomplete");
    out.bottom[i] = groups.back();
    std::sort(out.bottom[i].begin(), out.bottom[i].end());
  }
  return out;
}

}  // namespace detail

/// Checks single-dippedness against the instance axis: the bottom group is
/// a contiguous axis interval and rankings strictly improve moving away
/// from it. The witness is a house ranked above a house farther out.
inline DomainCheck validate_single_dipped(const Instance& inst) {
  const auto r = detail::bottom_tied_rankings(inst);
  const auto& axis = inst.axis();
  const auto pos = axis_positions(axis);
  const int m = inst.num_houses();
  for (AgentId i = 0; i < inst.num_agents(); ++i) {
    const auto& lv = r.level[i];
    int lo = m, hi = -1;
    for (HouseId h : r.bottom[i]) {
      lo = std::min(lo, pos[h]);
      hi = std::max(hi, pos[h]);
    }
    const int bottom = lv[r.bottom[i].front()];
    for (int k = lo; k <= hi; ++k)
      if (lv[axis[k]] != bottom) return {false, AxisViolation{i, axis[k], axis[hi]}};
    for (int k = lo - 1; k >= 0; --k)
      if (lv[axis[k]] >= lv[axis[k + 1]]) return {false, AxisViolation{i, axis[k + 1], axis[k]}};
    for (int k = hi + 1; k < m; ++k)
      if (lv[axis[k]] >= lv[axis[k - 1]]) return {false, AxisViolation{i, axis[k - 1], axis[k]}};
  }
  return {};
}

struct DipProfile {
  std::vector<HouseId> dip;       // per agent, last-ranked house
  std::vector<HouseId> first;     // S_1, ascending axis position
  std::vector<HouseId> span;      // common top prefix when |S_1| = 1
};

namespace detail {

inline void require_single_dipped(const Instance& inst) {
  const auto check = validate_single_dipped(inst);
  if (!check.ok) {
    const auto& w = *check.witness;
    throw DomainError("not single-dipped on the axis: agent i" + std::to_string(w.agent + 1) + " ranks h" +
                      std::to_string(w.better + 1) + " above h" + std::to_string(w.worse + 1));
  }
}

inline DipProfile build_dip_profile(const RankView& rv, const std::vector<int>& pos) {
  const int n = rv.num_agents(), m = rv.num_houses();
  DipProfile dp;
  dp.dip.resize(n);
  for (AgentId i = 0; i < n; ++i) {
    dp.dip[i] = rv.at(i, m - 1);
    const HouseId t = rv.top(i);
    if (std::find(dp.first.begin(), dp.first.end(), t) == dp.first.end()) dp.first.push_back(t);
  }
  std::sort(dp.first.begin(), dp.first.end(), [&](HouseId a, HouseId b) { return pos[a] < pos[b]; });
  if (dp.first.size() == 1) {
    for (int r = 0; r < m; ++r) {
      const HouseId x = rv.at(0, r);
      bool same = true;
      for (AgentId i = 1; i < n && same; ++i) same = rv.at(i, r) == x;
      if (!same) break;
      dp.span.push_back(x);
    }
  }
  return dp;
}

inline AgentId lowest_agent_ranking_at(const RankView& rv, HouseId h, int r) {
  for (AgentId i = 0; i < rv.num_agents(); ++i)
    if (rv.at(i, r) == h) return i;
  return kNoAgent;
}

inline Allocation dipped_core(const RankView& rv, const std::vector<int>& pos) {
  const int n = rv.num_agents(), m = rv.num_houses();
  const auto dp = build_dip_profile(rv, pos);
  std::vector<HouseId> alloc(n, kNoHouse);
  std::vector<char> blocked(m, 0);
  auto give = [&](AgentId i, HouseId h) {
    alloc[i] = h;
    blocked[h] = 1;
  };
  if (dp.first.size() > 1) {
    const HouseId a = dp.first.front(), b = dp.first.back();
    give(lowest_agent_ranking_at(rv, a, 0), a);
    give(lowest_agent_ranking_at(rv, b, 0), b);
  } else {
    const int len = static_cast<int>(dp.span.size());
    if (m - len >= n) {
      std::vector<HouseId> next;
      for (AgentId i = 0; i < n; ++i) {
        const HouseId x = rv.at(i, len);
        if (std::find(next.begin(), next.end(), x) == next.end()) next.push_back(x);
      }
      std::sort(next.begin(), next.end(), [&](HouseId a, HouseId b) { return pos[a] < pos[b]; });
      const HouseId a = next.front(), b = next.back();
      give(lowest_agent_ranking_at(rv, a, len), a);
      give(lowest_agent_ranking_at(rv, b, len), b);
      for (HouseId x : dp.span) blocked[x] = 1;
    } else {
      give(0, dp.first.front());
    }
  }
  std::vector<AgentId> rest;
  for (AgentId i = 0; i < n; ++i)
    if (alloc[i] == kNoHouse) rest.push_back(i);
  serial_dictatorship(rv, rest, blocked, alloc);
  return Allocation(std::move(alloc));
}

}  // namespace detail

inline DipProfile dip_profile(const Instance& inst) {
  return detail::build_dip_profile(RankView(strict_rankings(inst), nullptr), axis_positions(inst.axis()));
}

/// Two envy-free agents whenever possible: distinct first choices, or the
/// common top span left empty with two agents taking their next house;
/// otherwise the common top goes to agent 1. The rest choose in ascending
/// agent order.
inline Allocation min_envy_single_dipped(const Instance& inst, OpCounter* counter = nullptr) {
  const RankView rv(strict_rankings(inst), counter);
  detail::require_single_dipped(inst);
  return detail::dipped_core(rv, axis_positions(inst.axis()));
}

/// Variant for a bottom tie-group T shared by all agents: if |T| >= n the
/// agents (ascending) take T in axis order and nobody envies; otherwise ties
/// are broken by axis order and the strict procedure runs.
inline Allocation min_envy_single_dipped_ties(const Instance& inst) {
  const auto r = detail::bottom_tied_rankings(inst);
  const int n = inst.num_agents(), m = inst.num_houses();
  bool strict = true;
  for (const auto& b : r.bottom) strict = strict && b.size() == 1;
  if (strict) return min_envy_single_dipped(inst);
  for (const auto& b : r.bottom)
    if (b != r.bottom[0]) throw DomainError("bottom tie-groups differ between agents");
  detail::require_single_dipped(inst);
  const auto pos = axis_positions(inst.axis());
  auto tied = r.bottom[0];
  std::sort(tied.begin(), tied.end(), [&](HouseId a, HouseId b) { return pos[a] < pos[b]; });
  if (static_cast<int>(tied.size()) >= n) {
    std::vector<HouseId> alloc(tied.begin(), tied.begin() + n);
    return Allocation(std::move(alloc));
  }
  StrictRankings s;
  s.order.assign(n, {});
  s.position.assign(n, std::vector<int>(m, -1));
  for (AgentId i = 0; i < n; ++i) {
    auto& ord = s.order[i];
    ord.resize(m);
    for (HouseId h = 0; h < m; ++h) ord[h] = h;
    std::sort(ord.begin(), ord.end(), [&](HouseId a, HouseId b) {
      if (r.level[i][a] != r.level[i][b]) return r.level[i][a] < r.level[i][b];
      return pos[a] < pos[b];
    });
    for (int k = 0; k < m; ++k) s.position[i][ord[k]] = k;
  }
  return detail::dipped_core(RankView(std::move(s), nullptr), pos);
}

/// Minimum-envy allocation that is also Pareto optimal, if one exists.
inline std::optional<Allocation> min_envy_pareto_single_dipped(const Instance& inst) {
  const auto a = min_envy_single_dipped(inst);
  return pareto_from_min_envy(to_strict_ordinal(inst), a);
}

}  // namespace hafair

#endif  // HAFAIR_DIPPED_HPP_
