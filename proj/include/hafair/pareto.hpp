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

#ifndef HAFAIR_PARETO_HPP_
#define HAFAIR_PARETO_HPP_

// Envy graphs and Pareto optimality for strict preferences: an allocation
// is Pareto optimal iff its envy graph is acyclic and no agent prefers an
// unallocated house to its own.

#include <algorithm>
#include <optional>
#include <vector>

#include "hafair/core.hpp"

namespace hafair {

/// Adjacency lists, ascending: i -> j iff i envies j under a.
inline std::vector<std::vector<AgentId>> envy_graph(const Instance& inst, const Allocation& a) {
  const int n = inst.num_agents();
  const auto& p = inst.prefs();
  std::vector<std::vector<AgentId>> g(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && p.envy_amount(i, a[i], a[j]) > 0) g[i].push_back(j);
  return g;
}

/// A directed cycle (agents in order, i_t envies i_{t+1}) or empty.
/// Search starts from the lowest agent and follows successors ascending.
inline std::vector<AgentId> find_envy_cycle(const std::vector<std::vector<AgentId>>& g) {
  const int n = static_cast<int>(g.size());
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<AgentId> stack;
  std::vector<AgentId> cycle;
  auto dfs = [&](auto&& self, AgentId v) -> bool {
    state[v] = 1;
    stack.push_back(v);
    for (AgentId w : g[v]) {
      if (state[w] == 1) {
        auto it = std::find(stack.begin(), stack.end(), w);
        cycle.assign(it, stack.end());
        return true;
      }
      if (state[w] == 0 && self(self, w)) return true;
    }
    stack.pop_back();
    state[v] = 2;
    return false;
  };
  for (AgentId s = 0; s < n; ++s)
    if (state[s] == 0 && dfs(dfs, s)) return cycle;
  return {};
}

/// Cyclic exchanges until the envy graph is acyclic; every agent on a cycle
/// receives the house of its successor.
inline Allocation resolve_envy_cycles(const Instance& inst, Allocation a) {
  for (;;) {
    const auto cyc = find_envy_cycle(envy_graph(inst, a));
    if (cyc.empty()) return a;
    std::vector<HouseId> next(cyc.size());
    for (std::size_t t = 0; t < cyc.size(); ++t) next[t] = a[cyc[(t + 1) % cyc.size()]];
    for (std::size_t t = 0; t < cyc.size(); ++t) a.assign(cyc[t], next[t]);
  }
}

/// Some agent that prefers an unallocated house to its own, if any.
inline std::optional<AgentId> covets_unallocated(const Instance& inst, const Allocation& a) {
  const auto holder = a.holders(inst.num_houses());
  for (int i = 0; i < inst.num_agents(); ++i)
    for (int h = 0; h < inst.num_houses(); ++h)
      if (holder[h] == kNoAgent && inst.prefs().prefers(i, h, a[i])) return i;
  return std::nullopt;
}

/// Pareto optimality for strict preferences.
inline bool is_pareto_optimal(const Instance& inst, const Allocation& a) {
  return find_envy_cycle(envy_graph(inst, a)).empty() && !covets_unallocated(inst, a);
}

/// Cycle resolution on a minimum-envy allocation followed by the
/// unallocated-house test.
inline std::optional<Allocation> pareto_from_min_envy(const Instance& inst, const Allocation& a) {
  auto b = resolve_envy_cycles(inst, a);
  if (covets_unallocated(inst, b)) return std::nullopt;
  return b;
}

}  // namespace hafair

#endif  // HAFAIR_PARETO_HPP_
