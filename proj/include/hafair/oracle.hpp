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

#ifndef HAFAIR_ORACLE_HPP_
#define HAFAIR_ORACLE_HPP_

// Exponential-time reference solvers. They enumerate complete allocations
// in lexicographic order of (house of i1, house of i2, ...) and are meant
// for desk-scale cross-checks of the polynomial and FPT solvers.

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "hafair/core.hpp"

namespace hafair {

struct OracleCaps {
  int max_agents = 7;
  int max_houses = 10;
};

struct OracleResult {
  std::int64_t value = 0;
  Allocation witness;
  std::uint64_t explored = 0;  // complete allocations evaluated
};

namespace detail {

inline void check_caps(const Instance& inst, const OracleCaps& caps) {
  if (inst.num_agents() > caps.max_agents || inst.num_houses() > caps.max_houses)
    throw CapExceeded("exhaustive search refused: n=" + std::to_string(inst.num_agents()) +
                      ", m=" + std::to_string(inst.num_houses()) + " exceeds caps n<=" +
                      std::to_string(caps.max_agents) + ", m<=" + std::to_string(caps.max_houses));
}

// Depth-first enumeration; `allowed(i, h)` filters choices. Returning false
// from `visit` stops the enumeration.
template <typename Allowed, typename Visit>
bool enumerate(int n, int m, std::vector<HouseId>& cur, std::vector<char>& used, int i, Allowed& allowed,
               Visit& visit) {
  if (i == n) return visit(static_cast<const std::vector<HouseId>&>(cur));
  for (HouseId h = 0; h < m; ++h) {
    if (used[h] || !allowed(i, h)) continue;
    used[h] = 1;
    cur[i] = h;
    const bool go_on = enumerate(n, m, cur, used, i + 1, allowed, visit);
    used[h] = 0;
    if (!go_on) return false;
  }
  return true;
}

}  // namespace detail

/// Calls visit(houses) for every complete allocation in lexicographic order.
template <typename Visit>
void for_each_allocation(const Instance& inst, const OracleCaps& caps, Visit visit) {
  detail::check_caps(inst, caps);
  const int n = inst.num_agents(), m = inst.num_houses();
  std::vector<HouseId> cur(n, kNoHouse);
  std::vector<char> used(m, 0);
  auto all = [](AgentId, HouseId) { return true; };
  auto v = [&](const std::vector<HouseId>& a) {
    if constexpr (std::is_same_v<decltype(visit(a)), void>) {
      visit(a);
      return true;
    } else {
      return static_cast<bool>(visit(a));
    }
  };
  detail::enumerate(n, m, cur, used, 0, all, v);
}

inline OracleResult min_measure_exhaustive(const Instance& inst, Measure measure, const OracleCaps& caps = {}) {
  OracleResult best;
  best.value = std::numeric_limits<std::int64_t>::max();
  for_each_allocation(inst, caps, [&](const std::vector<HouseId>& a) {
    ++best.explored;
    const auto v = measure_unchecked(inst.prefs(), a, measure);
    if (v < best.value) {
      best.value = v;
      best.witness = Allocation(a);
    }
  });
  return best;
}

/// Optimum over complete allocations that change the house of at most q
/// agents relative to `base`. With `on_graph_only`, a changed agent may only
/// move to a house it ranks (positively values).
inline OracleResult min_measure_within_q(const Instance& inst, const Allocation& base, int q, Measure measure,
                                         const OracleCaps& caps = {}, bool on_graph_only = false) {
  detail::check_caps(inst, caps);
  base.validate(inst);
  if (q < 0) throw ValidationError("q must be non-negative");
  const int n = inst.num_agents(), m = inst.num_houses();
  const auto& prefs = inst.prefs();
  OracleResult best;
  best.value = std::numeric_limits<std::int64_t>::max();
  std::vector<HouseId> cur(n, kNoHouse);
  std::vector<char> used(m, 0);
  int changes = 0;
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      ++best.explored;
      const auto v = measure_unchecked(prefs, cur, measure);
      if (v < best.value) {
        best.value = v;
        best.witness = Allocation(cur);
      }
      return;
    }
    for (HouseId h = 0; h < m; ++h) {
      if (used[h]) continue;
      const bool change = h != base[i];
      if (change && (changes >= q || (on_graph_only && !prefs.ranks(i, h)))) continue;
      used[h] = 1;
      cur[i] = h;
      changes += change;
      rec(i + 1);
      changes -= change;
      used[h] = 0;
    }
  };
  rec(0);
  return best;
}

/// All allocations attaining the minimum of `measure`, in enumeration order.
inline std::vector<Allocation> all_optimal_allocations(const Instance& inst, Measure measure,
                                                       const OracleCaps& caps = {}) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<Allocation> out;
  for_each_allocation(inst, caps, [&](const std::vector<HouseId>& a) {
    const auto v = measure_unchecked(inst.prefs(), a, measure);
    if (v < best) {
      best = v;
      out.clear();
    }
    if (v == best) out.emplace_back(a);
  });
  return out;
}

struct ParetoCheck {
  bool optimal = true;
  std::optional<Allocation> dominator;
};

/// Searches every allocation in which no agent is worse off than under `a`;
/// `a` is Pareto optimal iff none of them makes some agent strictly better.
inline ParetoCheck is_pareto_optimal_exhaustive(const Instance& inst, const Allocation& a,
                                                const OracleCaps& caps = {}) {
  detail::check_caps(inst, caps);
  a.validate(inst);
  const auto& prefs = inst.prefs();
  const int n = inst.num_agents(), m = inst.num_houses();
  ParetoCheck res;
  std::vector<HouseId> cur(n, kNoHouse);
  std::vector<char> used(m, 0);
  auto not_worse = [&](AgentId i, HouseId h) { return !prefs.prefers(i, a[i], h); };
  auto visit = [&](const std::vector<HouseId>& b) {
    for (AgentId i = 0; i < n; ++i) {
      if (prefs.prefers(i, b[i], a[i])) {
        res.optimal = false;
        res.dominator = Allocation(b);
        return false;
      }
    }
    return true;
  };
  detail::enumerate(n, m, cur, used, 0, not_worse, visit);
  return res;
}

/// First minimum-Envy allocation (enumeration order) that is Pareto
/// optimal, if any.
inline std::optional<Allocation> pareto_min_envy_exhaustive(const Instance& inst, const OracleCaps& caps = {}) {
  for (const auto& a : all_optimal_allocations(inst, Measure::envy, caps))
    if (is_pareto_optimal_exhaustive(inst, a, caps).optimal) return a;
  return std::nullopt;
}

}  // namespace hafair

#endif  // HAFAIR_ORACLE_HPP_
