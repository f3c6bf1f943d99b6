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

#ifndef HAFAIR_CORE_HPP_
#define HAFAIR_CORE_HPP_

// Domain types for house allocation: preference profiles, instances,
// allocations, envy measures, the agent/house preference graph and
// alternating paths/cycles between two allocations.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hafair/errors.hpp"

namespace hafair {

using AgentId = int;
using HouseId = int;
inline constexpr HouseId kNoHouse = -1;
inline constexpr AgentId kNoAgent = -1;

enum class Measure { envy, total, max };

inline const char* to_string(Measure m) {
  switch (m) {
    case Measure::envy: return "envy";
    case Measure::total: return "total";
    case Measure::max: return "max";
  }
  return "?";
}

inline Measure parse_measure(const std::string& s) {
  if (s == "envy") return Measure::envy;
  if (s == "total") return Measure::total;
  if (s == "max") return Measure::max;
  throw ValidationError("unknown envy measure '" + s + "'");
}

/// Per-agent preferences, either a (partial, weak) ranking given as a list
/// of tie-groups from best to worst, or non-negative integer values.
///
/// Ordinal semantics for partial lists: a ranked house is strictly better
/// than any unranked one, and unranked houses are mutually indifferent.
class PreferenceProfile {
 public:
  enum class Kind { ordinal, cardinal };
  using TieGroup = std::vector<HouseId>;
  using Ranking = std::vector<TieGroup>;

  static PreferenceProfile ordinal(int num_houses, std::vector<Ranking> rankings) {
    PreferenceProfile p;
    p.kind_ = Kind::ordinal;
    p.n_ = static_cast<int>(rankings.size());
    p.m_ = num_houses;
    if (num_houses < 0) throw ValidationError("negative house count");
    p.level_.assign(p.n_, std::vector<int>(num_houses, -1));
    for (int i = 0; i < p.n_; ++i) {
      for (std::size_t g = 0; g < rankings[i].size(); ++g) {
        if (rankings[i][g].empty())
          throw ValidationError("agent " + std::to_string(i + 1) + " has an empty tie-group");
        for (HouseId h : rankings[i][g]) {
          if (h < 0 || h >= num_houses)
            throw ValidationError("agent " + std::to_string(i + 1) + " ranks unknown house");
          if (p.level_[i][h] != -1)
            throw ValidationError("agent " + std::to_string(i + 1) + " ranks house h" +
                                  std::to_string(h + 1) + " twice");
          p.level_[i][h] = static_cast<int>(g);
        }
      }
    }
    p.rankings_ = std::move(rankings);
    return p;
  }

  static PreferenceProfile cardinal(std::vector<std::vector<std::int64_t>> values) {
    PreferenceProfile p;
    p.kind_ = Kind::cardinal;
    p.n_ = static_cast<int>(values.size());
    p.m_ = values.empty() ? 0 : static_cast<int>(values.front().size());
    for (const auto& row : values) {
      if (static_cast<int>(row.size()) != p.m_)
        throw ValidationError("cardinal value rows have different lengths");
      for (auto v : row)
        if (v < 0) throw ValidationError("cardinal values must be non-negative");
    }
    p.values_ = std::move(values);
    return p;
  }

  Kind kind() const { return kind_; }
  bool is_ordinal() const { return kind_ == Kind::ordinal; }
  bool is_cardinal() const { return kind_ == Kind::cardinal; }
  int num_agents() const { return n_; }
  int num_houses() const { return m_; }

  const std::vector<Ranking>& rankings() const { return rankings_; }
  const std::vector<std::vector<std::int64_t>>& values() const { return values_; }

  // Tie-group index of h for agent i (0 = best), -1 when unranked.
  int level(AgentId i, HouseId h) const { return level_[i][h]; }
  std::int64_t value(AgentId i, HouseId h) const { return values_[i][h]; }

  // Edge predicate of the preference graph.
  bool ranks(AgentId i, HouseId h) const {
    return is_ordinal() ? level_[i][h] >= 0 : values_[i][h] > 0;
  }

  // Strict preference of agent i for `better` over `worse`.
  bool prefers(AgentId i, HouseId better, HouseId worse) const {
    if (is_cardinal()) return values_[i][better] > values_[i][worse];
    const int b = level_[i][better];
    const int w = level_[i][worse];
    return b >= 0 && (w < 0 || b < w);
  }

  // envy_{i,j} when i holds `own` and j holds `other`.
  std::int64_t envy_amount(AgentId i, HouseId own, HouseId other) const {
    if (is_cardinal()) return std::max<std::int64_t>(values_[i][other] - values_[i][own], 0);
    return prefers(i, other, own) ? 1 : 0;
  }

  bool is_complete() const {
    for (int i = 0; i < n_; ++i)
      for (int h = 0; h < m_; ++h)
        if (!ranks(i, h)) return false;
    return true;
  }

  // Ordinal: no tie-group larger than one. Cardinal: the positively valued
  // houses of each agent carry pairwise distinct values.
  bool is_strict() const {
    if (is_ordinal()) {
      for (const auto& r : rankings_)
        for (const auto& g : r)
          if (g.size() > 1) return false;
      return true;
    }
    for (const auto& row : values_) {
      std::vector<std::int64_t> pos;
      for (auto v : row)
        if (v > 0) pos.push_back(v);
      std::sort(pos.begin(), pos.end());
      if (std::adjacent_find(pos.begin(), pos.end()) != pos.end()) return false;
    }
    return true;
  }

  friend bool operator==(const PreferenceProfile& a, const PreferenceProfile& b) {
    return a.kind_ == b.kind_ && a.n_ == b.n_ && a.m_ == b.m_ && a.rankings_ == b.rankings_ &&
           a.values_ == b.values_;
  }

 private:
  Kind kind_ = Kind::ordinal;
  int n_ = 0;
  int m_ = 0;
  std::vector<Ranking> rankings_;
  std::vector<std::vector<int>> level_;
  std::vector<std::vector<std::int64_t>> values_;
};

/// Agents 0..n-1, houses 0..m-1, a profile and an optional axis (a
/// permutation of all houses) used by the single-peaked/dipped solvers.
///
/// m = n is accepted even though the strict-excess setting m > n is the
/// usual one.
class Instance {
 public:
  explicit Instance(PreferenceProfile prefs, std::optional<std::vector<HouseId>> axis = {})
      : prefs_(std::move(prefs)), axis_(std::move(axis)) {
    const int n = prefs_.num_agents();
    const int m = prefs_.num_houses();
    if (n < 1) throw ValidationError("an instance needs at least one agent");
    if (m < n)
      throw ValidationError("an instance needs m >= n (got n=" + std::to_string(n) +
                            ", m=" + std::to_string(m) + ")");
    if (axis_) {
      if (static_cast<int>(axis_->size()) != m)
        throw ValidationError("axis must list every house exactly once");
      std::vector<char> seen(m, 0);
      for (HouseId h : *axis_) {
        if (h < 0 || h >= m || seen[h]) throw ValidationError("axis is not a permutation of the houses");
        seen[h] = 1;
      }
    }
  }

  int num_agents() const { return prefs_.num_agents(); }
  int num_houses() const { return prefs_.num_houses(); }
  const PreferenceProfile& prefs() const { return prefs_; }
  bool has_axis() const { return axis_.has_value(); }
  const std::vector<HouseId>& axis() const {
    if (!axis_) throw ValidationError("instance has no axis");
    return *axis_;
  }
  const std::optional<std::vector<HouseId>>& maybe_axis() const { return axis_; }

  Instance with_axis(std::vector<HouseId> axis) const { return Instance(prefs_, std::move(axis)); }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.prefs_ == b.prefs_ && a.axis_ == b.axis_;
  }

 private:
  PreferenceProfile prefs_;
  std::optional<std::vector<HouseId>> axis_;
};

/// agent -> house. Completeness and injectivity are checked against an
/// instance by validate().
class Allocation {
 public:
  Allocation() = default;
  explicit Allocation(std::vector<HouseId> house_of) : house_of_(std::move(house_of)) {}

  int num_agents() const { return static_cast<int>(house_of_.size()); }
  HouseId operator[](AgentId i) const { return house_of_[i]; }
  HouseId house_of(AgentId i) const { return house_of_[i]; }
  const std::vector<HouseId>& houses() const { return house_of_; }

  void assign(AgentId i, HouseId h) { house_of_[i] = h; }

  // house -> agent (kNoAgent when unallocated).
  std::vector<AgentId> holders(int num_houses) const {
    std::vector<AgentId> out(num_houses, kNoAgent);
    for (AgentId i = 0; i < num_agents(); ++i)
      if (house_of_[i] >= 0 && house_of_[i] < num_houses) out[house_of_[i]] = i;
    return out;
  }

  // Number of agents whose house differs, i.e. the reallocation count.
  int distance(const Allocation& other) const {
    int d = 0;
    for (AgentId i = 0; i < num_agents(); ++i) d += house_of_[i] != other.house_of_[i];
    return d;
  }

  void validate(const Instance& inst) const {
    if (num_agents() != inst.num_agents())
      throw ValidationError("allocation covers " + std::to_string(num_agents()) + " agents, instance has " +
                            std::to_string(inst.num_agents()));
    std::vector<char> used(inst.num_houses(), 0);
    for (AgentId i = 0; i < num_agents(); ++i) {
      const HouseId h = house_of_[i];
      if (h < 0 || h >= inst.num_houses())
        throw ValidationError("agent i" + std::to_string(i + 1) + " holds no valid house");
      if (used[h]) throw ValidationError("house h" + std::to_string(h + 1) + " is assigned twice");
      used[h] = 1;
    }
  }

  friend bool operator==(const Allocation&, const Allocation&) = default;
  friend auto operator<=>(const Allocation&, const Allocation&) = default;

 private:
  std::vector<HouseId> house_of_;
};

struct EnvyReport {
  std::vector<std::vector<std::int64_t>> pairwise;  // [i][j]
  std::vector<std::int64_t> per_agent;
  std::vector<AgentId> envious;
  int envy_count = 0;
  std::int64_t total_envy = 0;
  std::int64_t max_envy = 0;

  std::int64_t measure(Measure m) const {
    switch (m) {
      case Measure::envy: return envy_count;
      case Measure::total: return total_envy;
      case Measure::max: return max_envy;
    }
    return 0;
  }
};

inline EnvyReport envy_report(const Instance& inst, const Allocation& a) {
  a.validate(inst);
  const int n = inst.num_agents();
  const auto& p = inst.prefs();
  EnvyReport r;
  r.pairwise.assign(n, std::vector<std::int64_t>(n, 0));
  r.per_agent.assign(n, 0);
  for (AgentId i = 0; i < n; ++i) {
    for (AgentId j = 0; j < n; ++j) {
      if (i == j) continue;
      r.pairwise[i][j] = p.envy_amount(i, a[i], a[j]);
      r.per_agent[i] += r.pairwise[i][j];
    }
    if (r.per_agent[i] > 0) r.envious.push_back(i);
    r.total_envy += r.per_agent[i];
    r.max_envy = std::max(r.max_envy, r.per_agent[i]);
  }
  r.envy_count = static_cast<int>(r.envious.size());
  return r;
}

// Envy measure without building the report and without validation; hot
// path for enumerations.
inline std::int64_t measure_unchecked(const PreferenceProfile& p, const std::vector<HouseId>& a,
                                      Measure m) {
  const int n = static_cast<int>(a.size());
  std::int64_t count = 0, total = 0, mx = 0;
  for (AgentId i = 0; i < n; ++i) {
    std::int64_t e = 0;
    for (AgentId j = 0; j < n; ++j) {
      if (i == j) continue;
      if (m == Measure::envy) {
        if (p.prefers(i, a[j], a[i])) {
          e = 1;
          break;
        }
      } else {
        e += p.envy_amount(i, a[i], a[j]);
      }
    }
    count += e > 0;
    total += e;
    mx = std::max(mx, e);
  }
  switch (m) {
    case Measure::envy: return count;
    case Measure::total: return total;
    case Measure::max: return mx;
  }
  return 0;
}

inline std::int64_t measure_value(const Instance& inst, const Allocation& a, Measure m) {
  a.validate(inst);
  return measure_unchecked(inst.prefs(), a.houses(), m);
}

// Agents with no envy under a.
inline std::vector<AgentId> envy_free_agents(const Instance& inst, const Allocation& a) {
  const auto r = envy_report(inst, a);
  std::vector<AgentId> out;
  for (AgentId i = 0; i < inst.num_agents(); ++i)
    if (r.per_agent[i] == 0) out.push_back(i);
  return out;
}

// ---------------------------------------------------------------------------
// Preference graph

struct Edge {
  AgentId agent;
  HouseId house;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Bipartite agents/houses graph with an edge (i, h) whenever agent i ranks
/// (ordinal) or positively values (cardinal) house h. Vertices are numbered
/// agents first (0..n-1) then houses (n..n+m-1); edges agent-major.
class PreferenceGraph {
 public:
  explicit PreferenceGraph(const Instance& inst) : PreferenceGraph(inst, nullptr) {}

  // Also adds every allocated edge of `extra`, so that the allocation is a
  // matching of the graph even when it uses unranked/zero-valued houses.
  PreferenceGraph(const Instance& inst, const Allocation& extra) : PreferenceGraph(inst, &extra) {}

  int num_agents() const { return n_; }
  int num_houses() const { return m_; }
  int num_vertices() const { return n_ + m_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }

  int agent_vertex(AgentId i) const { return i; }
  int house_vertex(HouseId h) const { return n_ + h; }
  bool is_agent_vertex(int v) const { return v < n_; }

  const std::vector<int>& incident(int vertex) const { return incident_[vertex]; }
  int edge_index(AgentId i, HouseId h) const { return index_[static_cast<std::size_t>(i) * m_ + h]; }
  bool has_edge(AgentId i, HouseId h) const { return edge_index(i, h) >= 0; }

  int degree(int vertex) const { return static_cast<int>(incident_[vertex].size()); }
  int max_degree() const {
    int d = 0;
    for (int v = 0; v < num_vertices(); ++v) d = std::max(d, degree(v));
    return d;
  }

 private:
  PreferenceGraph(const Instance& inst, const Allocation* extra)
      : n_(inst.num_agents()), m_(inst.num_houses()) {
    if (extra) extra->validate(inst);
    index_.assign(static_cast<std::size_t>(n_) * m_, -1);
    incident_.assign(n_ + m_, {});
    for (AgentId i = 0; i < n_; ++i) {
      for (HouseId h = 0; h < m_; ++h) {
        if (!inst.prefs().ranks(i, h) && !(extra && (*extra)[i] == h)) continue;
        const int e = static_cast<int>(edges_.size());
        edges_.push_back({i, h});
        index_[static_cast<std::size_t>(i) * m_ + h] = e;
        incident_[i].push_back(e);
        incident_[n_ + h].push_back(e);
      }
    }
  }

  int n_;
  int m_;
  std::vector<Edge> edges_;
  std::vector<int> index_;
  std::vector<std::vector<int>> incident_;
};

// ---------------------------------------------------------------------------
// Alternating paths and cycles

/// An alternating path or cycle relative to a base allocation.
///
/// Path: houses = (h0, h1, ..., hk), agents = (a0, ..., a{k-1}); agent a_t
/// holds h_{t+1} in the base allocation and moves to h_t. h0 is unallocated
/// in the base and hk becomes unallocated.
/// Cycle: houses.size() == agents.size(); a_t moves from h_{(t+1) mod k}
/// to h_t.
struct AlternatingPath {
  bool cycle = false;
  std::vector<AgentId> agents;
  std::vector<HouseId> houses;

  // Vertex sequence h0, a0, h1, a1, ... encoded as +(h+1) for houses and
  // -(a+1) for agents; handy for comparisons in tests and printing.
  std::vector<int> vertex_sequence() const {
    std::vector<int> out;
    for (std::size_t t = 0; t < agents.size(); ++t) {
      out.push_back(houses[t] + 1);
      out.push_back(-(agents[t] + 1));
    }
    if (!cycle && !houses.empty()) out.push_back(houses.back() + 1);
    return out;
  }

  std::string to_string() const {
    std::string s = cycle ? "cycle(" : "(";
    for (std::size_t t = 0; t < agents.size(); ++t) {
      s += "h" + std::to_string(houses[t] + 1) + ",i" + std::to_string(agents[t] + 1);
      if (!cycle || t + 1 < agents.size()) s += ",";
    }
    if (!cycle && !houses.empty()) s += "h" + std::to_string(houses.back() + 1);
    return s + ")";
  }

  friend bool operator==(const AlternatingPath&, const AlternatingPath&) = default;
};

namespace detail {

inline HouseId path_old_house(const AlternatingPath& p, std::size_t t) {
  return p.cycle ? p.houses[(t + 1) % p.houses.size()] : p.houses[t + 1];
}

inline void check_edge(const PreferenceGraph* g, AgentId i, HouseId h) {
  if (g && !g->has_edge(i, h))
    throw GraphInconsistency("edge (i" + std::to_string(i + 1) + ", h" + std::to_string(h + 1) +
                             ") of the symmetric difference is not in the preference graph");
}

}  // namespace detail

/// Decomposes target Δ base into base-alternating paths and cycles, ordered
/// by their smallest agent. When a graph is given every edge involved must
/// belong to it; without a graph off-graph assignments are accepted.
inline std::vector<AlternatingPath> symmetric_difference(const Allocation& target, const Allocation& base,
                                                         int num_houses,
                                                         const PreferenceGraph* graph = nullptr) {
  if (target.num_agents() != base.num_agents())
    throw ValidationError("allocations cover different agent sets");
  const int n = base.num_agents();
  const auto target_holder = target.holders(num_houses);
  const auto base_holder = base.holders(num_houses);
  std::vector<char> visited(n, 0);
  std::vector<AlternatingPath> out;

  for (AgentId i = 0; i < n; ++i) {
    if (target[i] == base[i]) continue;
    detail::check_edge(graph, i, target[i]);
    detail::check_edge(graph, i, base[i]);
  }

  // Paths start at a house held in target but free in base.
  for (HouseId h = 0; h < num_houses; ++h) {
    if (target_holder[h] == kNoAgent || base_holder[h] != kNoAgent) continue;
    AlternatingPath p;
    HouseId cur = h;
    p.houses.push_back(cur);
    while (target_holder[cur] != kNoAgent) {
      const AgentId a = target_holder[cur];
      visited[a] = 1;
      p.agents.push_back(a);
      cur = base[a];
      p.houses.push_back(cur);
    }
    out.push_back(std::move(p));
  }
  // Everything else that changed lies on a cycle.
  for (AgentId i = 0; i < n; ++i) {
    if (visited[i] || target[i] == base[i]) continue;
    AlternatingPath c;
    c.cycle = true;
    HouseId cur = target[i];
    while (true) {
      const AgentId a = target_holder[cur];
      if (visited[a]) break;
      visited[a] = 1;
      c.houses.push_back(cur);
      c.agents.push_back(a);
      cur = base[a];
    }
    out.push_back(std::move(c));
  }
  auto min_agent = [](const AlternatingPath& p) {
    return *std::min_element(p.agents.begin(), p.agents.end());
  };
  std::sort(out.begin(), out.end(),
            [&](const AlternatingPath& x, const AlternatingPath& y) { return min_agent(x) < min_agent(y); });
  return out;
}

inline std::vector<AlternatingPath> symmetric_difference(const Instance& inst, const Allocation& target,
                                                         const Allocation& base,
                                                         const PreferenceGraph* graph = nullptr) {
  target.validate(inst);
  base.validate(inst);
  return symmetric_difference(target, base, inst.num_houses(), graph);
}

/// A ⊕ P. Throws ValidationError when p does not alternate with a.
inline Allocation apply_path(const Allocation& a, const AlternatingPath& p, int num_houses) {
  if (p.agents.empty()) {
    if (!p.houses.empty() && !(p.houses.size() == 1 && !p.cycle))
      throw ValidationError("malformed alternating path");
    return a;
  }
  const std::size_t k = p.agents.size();
  if (p.cycle ? p.houses.size() != k : p.houses.size() != k + 1)
    throw ValidationError("alternating path has mismatched agent/house counts");
  std::vector<char> seen_house(num_houses, 0), seen_agent(a.num_agents(), 0);
  for (HouseId h : p.houses) {
    if (h < 0 || h >= num_houses || seen_house[h]) throw ValidationError("alternating path repeats a house");
    seen_house[h] = 1;
  }
  for (AgentId i : p.agents) {
    if (i < 0 || i >= a.num_agents() || seen_agent[i])
      throw ValidationError("alternating path repeats an agent");
    seen_agent[i] = 1;
  }
  for (std::size_t t = 0; t < k; ++t)
    if (a[p.agents[t]] != detail::path_old_house(p, t))
      throw ValidationError("path is not alternating: agent i" + std::to_string(p.agents[t] + 1) +
                            " does not hold h" + std::to_string(detail::path_old_house(p, t) + 1));
  if (!p.cycle) {
    const auto holder = a.holders(num_houses);
    if (holder[p.houses.front()] != kNoAgent)
      throw ValidationError("alternating path must start at an unallocated house");
  }
  Allocation out = a;
  for (std::size_t t = 0; t < k; ++t) out.assign(p.agents[t], p.houses[t]);
  return out;
}

inline Allocation apply_paths(Allocation a, const std::vector<AlternatingPath>& ps, int num_houses) {
  for (const auto& p : ps) a = apply_path(a, p, num_houses);
  return a;
}

// ---------------------------------------------------------------------------
// Welfare

enum class WelfareKind { utilitarian, nash, egalitarian };

inline const char* to_string(WelfareKind w) {
  switch (w) {
    case WelfareKind::utilitarian: return "utilitarian";
    case WelfareKind::nash: return "nash";
    case WelfareKind::egalitarian: return "egalitarian";
  }
  return "?";
}

namespace detail {
inline void require_cardinal(const Instance& inst) {
  if (!inst.prefs().is_cardinal())
    throw UnsupportedMeasure("welfare is only defined for cardinal preferences");
}
}  // namespace detail

inline std::int64_t utilitarian_welfare(const Instance& inst, const Allocation& a) {
  detail::require_cardinal(inst);
  a.validate(inst);
  std::int64_t s = 0;
  for (AgentId i = 0; i < inst.num_agents(); ++i) s += inst.prefs().value(i, a[i]);
  return s;
}

inline std::int64_t egalitarian_welfare(const Instance& inst, const Allocation& a) {
  detail::require_cardinal(inst);
  a.validate(inst);
  std::int64_t mn = inst.prefs().value(0, a[0]);
  for (AgentId i = 1; i < inst.num_agents(); ++i) mn = std::min(mn, inst.prefs().value(i, a[i]));
  return mn;
}

// Exact product of utilities; Nash welfare is its n-th root.
inline boost::multiprecision::cpp_int nash_product(const Instance& inst, const Allocation& a) {
  detail::require_cardinal(inst);
  a.validate(inst);
  boost::multiprecision::cpp_int p = 1;
  for (AgentId i = 0; i < inst.num_agents(); ++i) p *= inst.prefs().value(i, a[i]);
  return p;
}

// Geometric mean as a double; 0 when any utility is 0.
inline double nash_welfare(const Instance& inst, const Allocation& a) {
  detail::require_cardinal(inst);
  a.validate(inst);
  long double log_sum = 0;
  for (AgentId i = 0; i < inst.num_agents(); ++i) {
    const auto v = inst.prefs().value(i, a[i]);
    if (v == 0) return 0.0;
    log_sum += std::log(static_cast<long double>(v));
  }
  return static_cast<double>(std::exp(log_sum / inst.num_agents()));
}

inline double welfare(const Instance& inst, const Allocation& a, WelfareKind kind) {
  switch (kind) {
    case WelfareKind::utilitarian: return static_cast<double>(utilitarian_welfare(inst, a));
    case WelfareKind::nash: return nash_welfare(inst, a);
    case WelfareKind::egalitarian: return static_cast<double>(egalitarian_welfare(inst, a));
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Strict complete rankings

/// Complete strict ranking per agent: order[i] best-first and its inverse.
struct StrictRankings {
  std::vector<std::vector<HouseId>> order;
  std::vector<std::vector<int>> position;

  int num_agents() const { return static_cast<int>(order.size()); }
  int rank(AgentId i, HouseId h) const { return position[i][h]; }
};

/// Ordinal profiles must be complete and strict; cardinal profiles must give
/// each agent pairwise distinct values over all houses (a zero is allowed).
inline StrictRankings strict_rankings(const Instance& inst) {
  const auto& p = inst.prefs();
  const int n = inst.num_agents(), m = inst.num_houses();
  StrictRankings s;
  s.order.assign(n, {});
  s.position.assign(n, std::vector<int>(m, -1));
  for (AgentId i = 0; i < n; ++i) {
    auto& ord = s.order[i];
    if (p.is_ordinal()) {
      for (const auto& g : p.rankings()[i]) {
        if (g.size() != 1) throw DomainError("ranking of agent i" + std::to_string(i + 1) + " has ties");
        ord.push_back(g.front());
      }
      if (static_cast<int>(ord.size()) != m)
        throw DomainError("ranking of agent i" + std::to_string(i + 1) + " is incomplete");
    } else {
      ord.resize(m);
      std::iota(ord.begin(), ord.end(), 0);
      std::stable_sort(ord.begin(), ord.end(),
                       [&](HouseId a, HouseId b) { return p.value(i, a) > p.value(i, b); });
      for (int r = 1; r < m; ++r)
        if (p.value(i, ord[r]) == p.value(i, ord[r - 1]))
          throw DomainError("agent i" + std::to_string(i + 1) + " values two houses equally");
    }
    for (int r = 0; r < m; ++r) s.position[i][ord[r]] = r;
  }
  return s;
}

// Ordinal instance with the same strict rankings (axis kept).
inline Instance to_strict_ordinal(const Instance& inst) {
  const auto s = strict_rankings(inst);
  std::vector<PreferenceProfile::Ranking> rk(s.num_agents());
  for (AgentId i = 0; i < s.num_agents(); ++i)
    for (HouseId h : s.order[i]) rk[i].push_back({h});
  return Instance(PreferenceProfile::ordinal(inst.num_houses(), std::move(rk)), inst.maybe_axis());
}

}  // namespace hafair

#endif  // HAFAIR_CORE_HPP_
