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

#ifndef HAFAIR_REFINE_HPP_
#define HAFAIR_REFINE_HPP_

// Refining an allocation: lower an envy measure by at least k while
// reallocating at most q agents, by color coding on the preference graph.
//
// One pass colors every vertex and edge red/green/blue, drops the blue
// edges, keeps the connected components that look like independent
// improvement sets (all vertices red, red subgraph made of base-alternating
// paths/cycles, no blue edge inside, not dependent on another survivor) and
// selects a subset of them with a 0/1 knapsack (profit = measure drop,
// weight = reallocated agents).

#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hafair/core.hpp"
#include "hafair/knapsack.hpp"
#include "hafair/oracle.hpp"
#include "hafair/rng.hpp"

namespace hafair {

enum class Color : std::uint8_t { red = 0, green = 1, blue = 2 };

struct Coloring {
  std::vector<Color> vertex;
  std::vector<Color> edge;
  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// i.i.d. uniform colors: all vertices in index order, then all edges.
inline Coloring sample_coloring(const PreferenceGraph& g, CounterRng& rng) {
  Coloring c;
  c.vertex.resize(g.num_vertices());
  c.edge.resize(g.num_edges());
  for (auto& x : c.vertex) x = static_cast<Color>(rng.uniform(3));
  for (auto& x : c.edge) x = static_cast<Color>(rng.uniform(3));
  return c;
}

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace detail

/// Connected components of G minus its blue edges; each component lists its
/// vertices ascending and components are ordered by smallest vertex.
inline std::vector<std::vector<int>> components_after_blue_removal(const PreferenceGraph& g, const Coloring& c) {
  detail::DisjointSets ds(g.num_vertices());
  for (int e = 0; e < g.num_edges(); ++e) {
    if (c.edge[e] == Color::blue) continue;
    ds.unite(g.agent_vertex(g.edge(e).agent), g.house_vertex(g.edge(e).house));
  }
  std::vector<int> slot(g.num_vertices(), -1);
  std::vector<std::vector<int>> out;
  for (int v = 0; v < g.num_vertices(); ++v) {
    const int r = ds.find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(v);
  }
  return out;
}

/// A feasible component: its red paths/cycles, the allocation they produce
/// and the quantities the knapsack uses.
struct Component {
  std::vector<int> vertices;
  std::vector<std::pair<AgentId, HouseId>> moves;  // agent -> new house
  std::vector<AlternatingPath> paths;
  std::int64_t drop = 0;  // measure(base) - measure(base ⊕ C)
  int reallocated = 0;    // agents that change house
};

enum class ComponentVerdict {
  kept,
  non_red_vertex,       // (1)
  bad_red_subgraph,     // (2)
  internal_blue_edge,   // (3)
  dependent,            // (4)
};

/// Shared state for refining one base allocation: the working graph is the
/// preference graph plus the base allocation's own edges, so that base is a
/// matching of it even when it uses unranked/zero-valued houses.
class RefineProblem {
 public:
  RefineProblem(Instance inst, Allocation base, Measure measure)
      : inst_(std::move(inst)), base_(std::move(base)), measure_(measure), graph_(inst_, base_),
        pref_degree_(PreferenceGraph(inst_).max_degree()) {
    base_value_ = measure_unchecked(inst_.prefs(), base_.houses(), measure_);
    base_holder_ = base_.holders(inst_.num_houses());
  }

  const Instance& instance() const { return inst_; }
  const Allocation& base() const { return base_; }
  Measure measure() const { return measure_; }
  const PreferenceGraph& graph() const { return graph_; }
  std::int64_t base_value() const { return base_value_; }
  AgentId base_holder(HouseId h) const { return base_holder_[h]; }
  // Maximum degree of the plain preference graph (the parameter d).
  int degree_bound() const { return pref_degree_; }

  bool is_base_edge(int e) const {
    const auto& ed = graph_.edge(e);
    return base_[ed.agent] == ed.house;
  }

  std::int64_t value(const std::vector<HouseId>& a) const { return measure_unchecked(inst_.prefs(), a, measure_); }

  // 3^{3q(d+1)}: colorings needed for constant success probability.
  double theoretical_repetitions(int q) const { return std::pow(3.0, 3.0 * q * (pref_degree_ + 1)); }

 private:
  Instance inst_;
  Allocation base_;
  Measure measure_;
  PreferenceGraph graph_;
  int pref_degree_;
  std::int64_t base_value_ = 0;
  std::vector<AgentId> base_holder_;
};

struct FilterOutcome {
  std::vector<ComponentVerdict> verdicts;  // one per input component
  std::vector<Component> kept;             // verdict == kept, input order
};

namespace detail {

// Conditions (1)-(3) for one component; fills moves on success.
inline ComponentVerdict check_structure(const RefineProblem& pb, const Coloring& c, const std::vector<int>& comp,
                                        const std::vector<int>& comp_of, int comp_id,
                                        std::vector<std::pair<AgentId, HouseId>>& moves) {
  const auto& g = pb.graph();
  for (int v : comp)
    if (c.vertex[v] != Color::red) return ComponentVerdict::non_red_vertex;

  for (int v : comp) {
    for (int e : g.incident(v)) {
      const auto& ed = g.edge(e);
      const int other = g.is_agent_vertex(v) ? g.house_vertex(ed.house) : g.agent_vertex(ed.agent);
      if (c.edge[e] == Color::blue && comp_of[other] == comp_id) return ComponentVerdict::internal_blue_edge;
    }
  }

  moves.clear();
  for (int v : comp) {
    int red_base = 0, red_other = 0;
    int other_edge = -1;
    for (int e : g.incident(v)) {
      if (c.edge[e] != Color::red) continue;
      if (pb.is_base_edge(e)) {
        ++red_base;
      } else {
        ++red_other;
        other_edge = e;
      }
    }
    if (g.is_agent_vertex(v)) {
      // An agent is either untouched or leaves its base house for one new house.
      if (red_base != red_other || red_other > 1) return ComponentVerdict::bad_red_subgraph;
      if (red_other == 1) moves.emplace_back(g.edge(other_edge).agent, g.edge(other_edge).house);
    } else {
      const HouseId h = v - g.num_agents();
      if (red_other > 1) return ComponentVerdict::bad_red_subgraph;
      // A house receiving a new agent must be free in base or vacated.
      if (red_other == 1 && red_base == 0 && pb.base_holder(h) != kNoAgent) return ComponentVerdict::bad_red_subgraph;
    }
  }
  return ComponentVerdict::kept;
}

inline std::vector<HouseId> apply_moves(std::vector<HouseId> a, const std::vector<std::pair<AgentId, HouseId>>& moves) {
  for (const auto& [i, h] : moves) a[i] = h;
  return a;
}

}  // namespace detail

/// Deletes infeasible components and computes drop/reallocation counts for
/// the rest. Dependence (4) is tested pairwise among the components that
/// pass (1)-(3): C and C' are both deleted when applying them together drops
/// the measure by less than the sum of their individual drops. Deletions are
/// simultaneous.
inline FilterOutcome feasibility_filter(const RefineProblem& pb, const Coloring& c,
                                        const std::vector<std::vector<int>>& components) {
  const auto& g = pb.graph();
  const int n = pb.instance().num_agents();
  const int m = pb.instance().num_houses();
  std::vector<int> comp_of(g.num_vertices(), -1);
  for (std::size_t k = 0; k < components.size(); ++k)
    for (int v : components[k]) comp_of[v] = static_cast<int>(k);

  FilterOutcome out;
  out.verdicts.assign(components.size(), ComponentVerdict::kept);
  std::vector<Component> pass;
  std::vector<std::size_t> pass_index;
  std::vector<std::pair<AgentId, HouseId>> moves;
  for (std::size_t k = 0; k < components.size(); ++k) {
    const auto verdict = detail::check_structure(pb, c, components[k], comp_of, static_cast<int>(k), moves);
    out.verdicts[k] = verdict;
    if (verdict != ComponentVerdict::kept) continue;
    Component comp;
    comp.vertices = components[k];
    comp.moves = moves;
    comp.reallocated = static_cast<int>(moves.size());
    if (!moves.empty()) {
      const auto after = detail::apply_moves(pb.base().houses(), moves);
      comp.drop = pb.base_value() - pb.value(after);
      comp.paths = symmetric_difference(Allocation(after), pb.base(), m);
    }
    (void)n;
    pass.push_back(std::move(comp));
    pass_index.push_back(k);
  }

  std::vector<char> dependent(pass.size(), 0);
  for (std::size_t x = 0; x < pass.size(); ++x) {
    if (pass[x].moves.empty()) continue;
    for (std::size_t y = x + 1; y < pass.size(); ++y) {
      if (pass[y].moves.empty()) continue;
      auto both = detail::apply_moves(pb.base().houses(), pass[x].moves);
      both = detail::apply_moves(std::move(both), pass[y].moves);
      const std::int64_t joint = pb.base_value() - pb.value(both);
      if (joint < pass[x].drop + pass[y].drop) dependent[x] = dependent[y] = 1;
    }
  }
  for (std::size_t x = 0; x < pass.size(); ++x) {
    if (dependent[x]) {
      out.verdicts[pass_index[x]] = ComponentVerdict::dependent;
    } else {
      out.kept.push_back(std::move(pass[x]));
    }
  }
  return out;
}

struct PassResult {
  std::vector<Component> candidates;     // feasible with positive drop
  std::vector<std::size_t> selected;     // indices into candidates
  std::optional<Allocation> allocation;
  bool rejected_by_check = false;        // knapsack plan failed re-evaluation
};

/// One pass under a fixed coloring. The returned allocation is re-evaluated
/// and only reported when it really satisfies measure <= base - k.
inline PassResult refine_pass(const RefineProblem& pb, const Coloring& c, int q, std::int64_t k) {
  PassResult res;
  if (k <= 0) {
    res.allocation = pb.base();
    return res;
  }
  if (q <= 0 || k > pb.base_value()) return res;
  const auto comps = components_after_blue_removal(pb.graph(), c);
  auto filtered = feasibility_filter(pb, c, comps);
  std::vector<KnapsackItem> items;
  for (auto& comp : filtered.kept) {
    if (comp.drop <= 0) continue;
    items.push_back({comp.reallocated, comp.drop});
    res.candidates.push_back(std::move(comp));
  }
  const auto pick = knapsack_select(items, q, k);
  if (!pick) return res;
  res.selected = *pick;
  auto a = pb.base().houses();
  for (std::size_t idx : res.selected) a = detail::apply_moves(std::move(a), res.candidates[idx].moves);
  const Allocation out(std::move(a));
  if (pb.value(out.houses()) > pb.base_value() - k || out.distance(pb.base()) > q) {
    res.rejected_by_check = true;
    return res;
  }
  res.allocation = out;
  return res;
}

inline std::optional<Allocation> refine_once(const RefineProblem& pb, const Coloring& c, int q, std::int64_t k) {
  return refine_pass(pb, c, q, k).allocation;
}

inline std::optional<Allocation> refine_once(const Instance& inst, const Allocation& base, int q, std::int64_t k,
                                             Measure measure, const Coloring& c) {
  return refine_once(RefineProblem(inst, base, measure), c, q, k);
}

// ---------------------------------------------------------------------------
// Drivers

enum class RefineMode { randomized, exhaustive_colorings, exhaustive_all_colorings, oracle_fallback, sampled };

inline RefineMode parse_refine_mode(const std::string& s) {
  if (s == "randomized") return RefineMode::randomized;
  if (s == "exhaustive" || s == "exhaustive_colorings") return RefineMode::exhaustive_colorings;
  if (s == "exhaustive-all" || s == "exhaustive_all_colorings") return RefineMode::exhaustive_all_colorings;
  if (s == "oracle" || s == "oracle_fallback") return RefineMode::oracle_fallback;
  if (s == "sampled") return RefineMode::sampled;
  throw ValidationError("unknown refine mode '" + s + "'");
}

struct RefineOptions {
  RefineMode mode = RefineMode::randomized;
  std::uint64_t seed = 0;
  // Colorings to try; default min(3^{3q(d+1)}, repetition_cap).
  std::optional<std::uint64_t> repetitions;
  std::uint64_t repetition_cap = 1'000'000;
  std::optional<double> time_budget_seconds;
  // exhaustive_all_colorings refuses graphs with |V| + |E| above this.
  int exhaustive_limit = 18;
  OracleCaps oracle_caps;
};

struct RefineResult {
  std::optional<Allocation> allocation;
  std::uint64_t colorings_tried = 0;
  double theoretical_repetitions = 0;
  std::optional<std::uint64_t> success_index;
  int sample_size = 0;  // houses pre-colored by the sampled mode
};

namespace detail {

inline constexpr std::uint64_t kColoringStreamTag = 0x636F6C6F72ULL;  // "color"
inline constexpr std::uint64_t kSampleStreamTag = 0x73616D706CULL;    // "sampl"

class Deadline {
 public:
  explicit Deadline(std::optional<double> seconds) {
    if (seconds)
      end_ = std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(*seconds));
  }
  bool expired() const { return end_ && std::chrono::steady_clock::now() >= *end_; }

 private:
  std::optional<std::chrono::steady_clock::time_point> end_;
};

inline std::uint64_t default_repetitions(const RefineOptions& opt, double theoretical) {
  if (opt.repetitions) return *opt.repetitions;
  const double cap = static_cast<double>(opt.repetition_cap);
  return static_cast<std::uint64_t>(std::max(1.0, std::min(std::ceil(theoretical), cap)));
}

// Colorings up to the equivalences that never change a pass: green and blue
// vertices behave identically (their component is dropped), an edge with
// one non-red end only matters as blue/non-blue, and an edge with two
// non-red ends does not matter at all. Calls visit(coloring) until it
// returns true.
template <typename Visit>
std::uint64_t enumerate_canonical_colorings(const PreferenceGraph& g, Visit visit) {
  const int nv = g.num_vertices();
  const int ne = g.num_edges();
  Coloring c;
  c.vertex.assign(nv, Color::green);
  c.edge.assign(ne, Color::green);
  std::uint64_t tried = 0;
  std::vector<int> free_edges;
  std::vector<int> radix;
  std::vector<int> digit;
  const std::uint64_t masks = std::uint64_t{1} << nv;
  // Larger red sets first; masks are visited from all-red downwards.
  for (std::uint64_t step = 0; step < masks; ++step) {
    const std::uint64_t mask = masks - 1 - step;
    for (int v = 0; v < nv; ++v) c.vertex[v] = (mask >> v & 1) ? Color::red : Color::green;
    free_edges.clear();
    radix.clear();
    for (int e = 0; e < ne; ++e) {
      const bool ra = mask >> g.agent_vertex(g.edge(e).agent) & 1;
      const bool rh = mask >> g.house_vertex(g.edge(e).house) & 1;
      c.edge[e] = Color::green;
      if (ra && rh) {
        free_edges.push_back(e);
        radix.push_back(3);
      } else if (ra || rh) {
        free_edges.push_back(e);
        radix.push_back(2);
      }
    }
    digit.assign(free_edges.size(), 0);
    static constexpr Color kThree[3] = {Color::red, Color::green, Color::blue};
    static constexpr Color kTwo[2] = {Color::green, Color::blue};
    for (;;) {
      for (std::size_t x = 0; x < free_edges.size(); ++x)
        c.edge[free_edges[x]] = radix[x] == 3 ? kThree[digit[x]] : kTwo[digit[x]];
      ++tried;
      if (visit(static_cast<const Coloring&>(c))) return tried;
      std::size_t x = 0;
      while (x < digit.size() && ++digit[x] == radix[x]) digit[x++] = 0;
      if (x == digit.size()) break;
    }
  }
  return tried;
}

// Colorings with every vertex red, the base and new edges of a valid set of
// 1..q moves red and every other edge green. Moves follow graph edges;
// agents are visited ascending, each staying first, then moving along its
// edges in index order.
template <typename Visit>
std::uint64_t enumerate_move_colorings(const RefineProblem& pb, int q, Visit visit) {
  const auto& g = pb.graph();
  const int n = g.num_agents(), m = g.num_houses();
  const auto& base = pb.base();
  std::vector<int> target(n, -1);  // edge index of the new house, -1 = stays
  std::vector<char> taken(m, 0);
  Coloring c;
  c.vertex.assign(g.num_vertices(), Color::red);
  c.edge.assign(g.num_edges(), Color::green);
  std::uint64_t tried = 0;
  bool stop = false;
  int movers = 0;
  auto leaf = [&]() {
    if (movers == 0) return;
    for (AgentId i = 0; i < n; ++i) {
      if (target[i] < 0) continue;
      const AgentId h0 = pb.base_holder(g.edge(target[i]).house);
      if (h0 != kNoAgent && target[h0] < 0) return;
    }
    std::fill(c.edge.begin(), c.edge.end(), Color::green);
    for (AgentId i = 0; i < n; ++i) {
      if (target[i] < 0) continue;
      c.edge[target[i]] = Color::red;
      c.edge[g.edge_index(i, base[i])] = Color::red;
    }
    ++tried;
    stop = visit(static_cast<const Coloring&>(c));
  };
  auto rec = [&](auto&& self, AgentId i) -> void {
    if (stop) return;
    if (i == n) {
      leaf();
      return;
    }
    self(self, i + 1);
    if (movers == q) return;
    for (int e : g.incident(g.agent_vertex(i))) {
      if (stop) return;
      const HouseId h = g.edge(e).house;
      if (h == base[i] || taken[h]) continue;
      taken[h] = 1;
      target[i] = e;
      ++movers;
      self(self, i + 1);
      --movers;
      target[i] = -1;
      taken[h] = 0;
    }
  };
  rec(rec, 0);
  return tried;
}

// Largest t with (a - t) / (m - t) > 1/9, where a = q(d+1); 0 when a >= m.
inline int sample_size(int q, int d, int m) {
  const long long a = static_cast<long long>(q) * (d + 1);
  if (a >= m) return 0;
  int t = 0;
  for (int cand = 0; cand < m; ++cand) {
    if (9 * (a - cand) > (m - cand)) {
      t = cand;
    } else {
      break;
    }
  }
  return t;
}

inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail

/// Decides whether some allocation within q reallocations of `base` lowers
/// `measure` by at least k, and returns one. Absence means "not found".
/// In oracle mode it proves that no such allocation exists; in the
/// exhaustive modes it proves it for envy and total envy among allocations
/// that move agents only to houses they rank (positively value).
inline RefineResult refine(const Instance& inst, const Allocation& base, int q, std::int64_t k, Measure measure,
                           const RefineOptions& opt = {}) {
  base.validate(inst);
  if (q < 0) throw ValidationError("q must be non-negative");
  const RefineProblem pb(inst, base, measure);
  RefineResult res;
  res.theoretical_repetitions = pb.theoretical_repetitions(q);
  if (k <= 0) {
    res.allocation = base;
    return res;
  }
  if (q == 0 || k > pb.base_value()) return res;

  switch (opt.mode) {
    case RefineMode::oracle_fallback: {
      const auto best = min_measure_within_q(inst, base, q, measure, opt.oracle_caps);
      if (best.value <= pb.base_value() - k) res.allocation = best.witness;
      return res;
    }
    case RefineMode::exhaustive_colorings: {
      res.colorings_tried = detail::enumerate_move_colorings(pb, q, [&](const Coloring& c) {
        auto a = refine_once(pb, c, q, k);
        if (!a) return false;
        res.allocation = std::move(a);
        return true;
      });
      if (res.allocation) res.success_index = res.colorings_tried - 1;
      return res;
    }
    case RefineMode::exhaustive_all_colorings: {
      const auto& g = pb.graph();
      if (g.num_vertices() + g.num_edges() > opt.exhaustive_limit || g.num_vertices() > 62)
        throw CapExceeded("enumerating all colorings refused: |V|+|E| = " +
                          std::to_string(g.num_vertices() + g.num_edges()) + " exceeds " +
                          std::to_string(opt.exhaustive_limit));
      res.colorings_tried = detail::enumerate_canonical_colorings(g, [&](const Coloring& c) {
        auto a = refine_once(pb, c, q, k);
        if (!a) return false;
        res.allocation = std::move(a);
        return true;
      });
      if (res.allocation) res.success_index = res.colorings_tried - 1;
      return res;
    }
    case RefineMode::randomized: {
      const std::uint64_t reps = detail::default_repetitions(opt, res.theoretical_repetitions);
      const detail::Deadline deadline(opt.time_budget_seconds);
      for (std::uint64_t r = 0; r < reps; ++r) {
        if ((r & 255) == 255 && deadline.expired()) break;
        CounterRng rng(derive_key(opt.seed, {detail::kColoringStreamTag, r}));
        const auto c = sample_coloring(pb.graph(), rng);
        ++res.colorings_tried;
        if (auto a = refine_once(pb, c, q, k)) {
          res.allocation = std::move(a);
          res.success_index = r;
          return res;
        }
      }
      return res;
    }
    case RefineMode::sampled: {
      const int m = inst.num_houses();
      const int d = pb.degree_bound();
      const int t = detail::sample_size(q, d, m);
      if (t == 0) {
        RefineOptions plain = opt;
        plain.mode = RefineMode::randomized;
        return refine(inst, base, q, k, measure, plain);
      }
      res.sample_size = t;
      const long long a = static_cast<long long>(q) * (d + 1);
      const double pr = detail::binomial(static_cast<int>(a), t) / detail::binomial(m, t);
      const double scheduled = std::ceil(1.0 / pr) * std::pow(9.0, static_cast<double>(a - t));
      const std::uint64_t reps = detail::default_repetitions(opt, scheduled);
      const auto& g = pb.graph();
      const detail::Deadline deadline(opt.time_budget_seconds);
      std::vector<HouseId> houses(m);
      for (std::uint64_t r = 0; r < reps; ++r) {
        if ((r & 255) == 255 && deadline.expired()) break;
        CounterRng srng(derive_key(opt.seed, {detail::kSampleStreamTag, r}));
        std::iota(houses.begin(), houses.end(), 0);
        shuffle(houses, srng);
        CounterRng crng(derive_key(opt.seed, {detail::kColoringStreamTag, r}));
        auto c = sample_coloring(g, crng);
        // Assume the sampled houses and their base holders lie in the
        // improvement set: they must be red.
        for (int s = 0; s < t; ++s) {
          const HouseId h = houses[s];
          c.vertex[g.house_vertex(h)] = Color::red;
          if (pb.base_holder(h) != kNoAgent) c.vertex[g.agent_vertex(pb.base_holder(h))] = Color::red;
        }
        ++res.colorings_tried;
        if (auto found = refine_once(pb, c, q, k)) {
          res.allocation = std::move(found);
          res.success_index = r;
          return res;
        }
      }
      return res;
    }
  }
  return res;
}

inline RefineResult refine_sampled(const Instance& inst, const Allocation& base, int q, std::int64_t k,
                                   Measure measure, RefineOptions opt = {}) {
  opt.mode = RefineMode::sampled;
  return refine(inst, base, q, k, measure, opt);
}

}  // namespace hafair

#endif  // HAFAIR_REFINE_HPP_
