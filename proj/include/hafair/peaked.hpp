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

#ifndef HAFAIR_PEAKED_HPP_
#define HAFAIR_PEAKED_HPP_

// Minimum-envy allocation for complete strict single-peaked preferences.

#include <algorithm>
#include <optional>
#include <vector>

#include "hafair/core.hpp"
#include "hafair/domain.hpp"
#include "hafair/pareto.hpp"

namespace hafair {

/// Agent i ranks `better` above `worse` although `worse` lies strictly
/// between `better` and i's peak on the axis.
struct AxisViolation {
  AgentId agent = kNoAgent;
  HouseId better = kNoHouse;
  HouseId worse = kNoHouse;
};

struct DomainCheck {
  bool ok = true;
  std::optional<AxisViolation> witness;
};

/// Checks single-peakedness of every ranking against the instance axis.
/// Throws DomainError for incomplete or non-strict profiles.
inline DomainCheck validate_single_peaked(const Instance& inst, OpCounter* counter = nullptr) {
  const RankView rv(strict_rankings(inst), counter);
  const auto& axis = inst.axis();
  const auto pos = axis_positions(axis);
  const int m = inst.num_houses();
  for (AgentId i = 0; i < inst.num_agents(); ++i) {
    const int p = pos[rv.top(i)];
    // Moving away from the peak, each step must be ranked below the previous.
    for (int k = p - 1; k >= 0; --k)
      if (rv.rank(i, axis[k]) < rv.rank(i, axis[k + 1])) return {false, AxisViolation{i, axis[k], axis[k + 1]}};
    for (int k = p + 1; k < m; ++k)
      if (rv.rank(i, axis[k]) < rv.rank(i, axis[k - 1])) return {false, AxisViolation{i, axis[k], axis[k - 1]}};
  }
  return {};
}

enum class PeakKind { none, individual, shared };

struct PeakProfile {
  std::vector<HouseId> peak;                 // per agent
  std::vector<std::vector<AgentId>> base;    // per house, ascending
  std::vector<std::vector<HouseId>> span;    // per house, in the common ranking order
  std::vector<PeakKind> kind;                // per house
  int individual_peaks = 0;                  // p_I
  int shared_peaks = 0;                      // p_S

  bool in_span(HouseId of, HouseId h) const {
    return std::find(span[of].begin(), span[of].end(), h) != span[of].end();
  }
};

namespace detail {

inline PeakProfile build_peak_profile(const RankView& rv) {
  const int n = rv.num_agents(), m = rv.num_houses();
  PeakProfile pp;
  pp.peak.resize(n);
  pp.base.assign(m, {});
  pp.span.assign(m, {});
  pp.kind.assign(m, PeakKind::none);
  for (AgentId i = 0; i < n; ++i) {
    pp.peak[i] = rv.top(i);
    pp.base[pp.peak[i]].push_back(i);
  }
  for (HouseId h = 0; h < m; ++h) {
    const auto& b = pp.base[h];
    if (b.empty()) continue;
    if (b.size() == 1) {
      pp.kind[h] = PeakKind::individual;
      ++pp.individual_peaks;
      continue;
    }
    pp.kind[h] = PeakKind::shared;
    ++pp.shared_peaks;
    for (int r = 0; r < m; ++r) {
      const HouseId x = rv.at(b[0], r);
      bool same = true;
      for (std::size_t t = 1; t < b.size() && same; ++t) same = rv.at(b[t], r) == x;
      if (!same) break;
      pp.span[h].push_back(x);
    }
  }
  return pp;
}

}  // namespace detail

inline PeakProfile peak_profile(const Instance& inst) {
  return detail::build_peak_profile(RankView(strict_rankings(inst), nullptr));
}

namespace detail {

inline void require_single_peaked(const Instance& inst, OpCounter* counter) {
  const auto check = validate_single_peaked(inst, counter);
  if (!check.ok) {
    const auto& w = *check.witness;
    throw DomainError("not single-peaked on the axis: agent i" + std::to_string(w.agent + 1) + " ranks h" +
                      std::to_string(w.better + 1) + " above h" + std::to_string(w.worse + 1));
  }
}

}  // namespace detail

/// Individual peaks and mutually/one-way contained shared peaks are given to
/// a base agent; the remaining shared peaks are resolved greedily by span
/// size (span left empty, two base agents take the houses next to it) while
/// enough houses remain; everything else is filled by serial dictatorship
/// in ascending agent order, avoiding resolved spans.
inline Allocation min_envy_single_peaked(const Instance& inst, OpCounter* counter = nullptr) {
  detail::require_single_peaked(inst, counter);
  const RankView rv(strict_rankings(inst), counter);
  const int n = inst.num_agents(), m = inst.num_houses();
  const auto pos = axis_positions(inst.axis());
  const auto pp = detail::build_peak_profile(rv);

  std::vector<HouseId> alloc(n, kNoHouse);
  std::vector<AgentId> holder(m, kNoAgent);
  std::vector<char> reserved(m, 0);  // U
  auto give = [&](AgentId i, HouseId h) {
    alloc[i] = h;
    holder[h] = i;
  };
  auto give_to_base = [&](HouseId h) {
    if (holder[h] == kNoAgent) give(pp.base[h].front(), h);
  };

  for (HouseId h = 0; h < m; ++h)
    if (pp.kind[h] == PeakKind::individual) give_to_base(h);

  std::vector<HouseId> shared;
  for (HouseId h = 0; h < m; ++h)
    if (pp.kind[h] == PeakKind::shared) shared.push_back(h);
  for (HouseId a : shared)
    for (HouseId b : shared) {
      if (a == b || !pp.in_span(b, a)) continue;
      if (pp.in_span(a, b)) {
        give_to_base(a);
        give_to_base(b);
      } else {
        give_to_base(b);
      }
    }

  std::vector<HouseId> order;
  for (HouseId h : shared)
    if (holder[h] == kNoAgent) order.push_back(h);
  std::stable_sort(order.begin(), order.end(), [&](HouseId a, HouseId b) {
    if (pp.span[a].size() != pp.span[b].size()) return pp.span[a].size() < pp.span[b].size();
    return pos[a] < pos[b];
  });

  auto available = [&](HouseId h) { return holder[h] == kNoAgent && !reserved[h]; };
  for (std::size_t z = 0; z < order.size(); ++z) {
    const HouseId h = order[z];
    if (holder[h] != kNoAgent || reserved[h]) continue;
    const int len = static_cast<int>(pp.span[h].size());
    int free_houses = 0, free_agents = 0;
    for (HouseId x = 0; x < m; ++x) free_houses += available(x);
    for (AgentId i = 0; i < n; ++i) free_agents += alloc[i] == kNoHouse;

    // Two base agents whose next house after the span differs.
    AgentId first = kNoAgent, second = kNoAgent;
    HouseId first_house = kNoHouse, second_house = kNoHouse;
    bool span_free = len < m;
    for (HouseId x : pp.span[h]) span_free = span_free && available(x);
    if (span_free) {
      for (AgentId i : pp.base[h]) {
        const HouseId next = rv.at(i, len);
        if (first == kNoAgent) {
          first = i;
          first_house = next;
        } else if (next != first_house && second == kNoAgent) {
          second = i;
          second_house = next;
        }
      }
    }
    const bool resolvable = span_free && second != kNoAgent && available(first_house) && available(second_house);
    if (!resolvable) {
      give_to_base(h);
      continue;
    }
    if (free_houses - len >= free_agents) {
      give(first, first_house);
      give(second, second_house);
      for (HouseId x : pp.span[h]) reserved[x] = 1;
    } else {
      for (std::size_t y = z; y < order.size(); ++y)
        if (!reserved[order[y]]) give_to_base(order[y]);
      break;
    }
  }

  std::vector<AgentId> rest;
  for (AgentId i = 0; i < n; ++i)
    if (alloc[i] == kNoHouse) rest.push_back(i);
  std::vector<char> blocked(m, 0);
  for (HouseId h = 0; h < m; ++h) blocked[h] = holder[h] != kNoAgent || reserved[h];
  serial_dictatorship(rv, rest, blocked, alloc);
  return Allocation(std::move(alloc));
}

/// Minimum-envy allocation that is also Pareto optimal, if one exists.
///
/// The minimum-envy allocation is first repaired by cyclic exchanges. If it
/// still leaves a coveted house empty, the answer is decided by counting:
/// a Pareto-optimal allocation allocates every peak, so at most one agent
/// per peak is envy-free, and serial dictatorship with one base agent per
/// peak choosing first attains exactly p_I + p_S envy-free agents.
inline std::optional<Allocation> min_envy_pareto_single_peaked(const Instance& inst) {
  const auto strict = to_strict_ordinal(inst);
  const auto a = min_envy_single_peaked(inst);
  if (auto b = pareto_from_min_envy(strict, a)) return b;
  const auto pp = peak_profile(inst);
  const int envy_free = inst.num_agents() - static_cast<int>(measure_value(strict, a, Measure::envy));
  if (envy_free != pp.individual_peaks + pp.shared_peaks) return std::nullopt;
  const RankView rv(strict_rankings(inst), nullptr);
  const int n = inst.num_agents(), m = inst.num_houses();
  std::vector<AgentId> order;
  std::vector<char> first(n, 0);
  for (HouseId h = 0; h < m; ++h)
    if (!pp.base[h].empty()) first[pp.base[h].front()] = 1;
  for (AgentId i = 0; i < n; ++i)
    if (first[i]) order.push_back(i);
  for (AgentId i = 0; i < n; ++i)
    if (!first[i]) order.push_back(i);
  std::vector<HouseId> alloc(n, kNoHouse);
  std::vector<char> blocked(m, 0);
  serial_dictatorship(rv, order, blocked, alloc);
  return Allocation(std::move(alloc));
}

}  // namespace hafair

#endif  // HAFAIR_PEAKED_HPP_
