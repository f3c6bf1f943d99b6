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

#ifndef HAFAIR_BENCH_HPP_
#define HAFAIR_BENCH_HPP_

// Experiment harness: envy drop and welfare loss as functions of the
// reallocation budget q, and welfare loss of the structured-domain solvers.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hafair/core.hpp"
#include "hafair/dipped.hpp"
#include "hafair/domain.hpp"
#include "hafair/gen.hpp"
#include "hafair/knapsack.hpp"
#include "hafair/oracle.hpp"
#include "hafair/peaked.hpp"
#include "hafair/welfare.hpp"

namespace hafair {

struct BenchRow {
  int m = 0;
  std::optional<int> q;  // empty for domain sweeps
  std::string metric;
  double mean = 0;
  double stddev = 0;
  int instances = 0;
  std::uint64_t seed = 0;
};

inline std::string format_number(double x) {
  if (x == 0) x = 0;  // no negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

inline std::string to_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "m,q,metric,mean,stddev,instances,seed\n";
  for (const auto& r : rows) {
    out << r.m << ',' << (r.q ? std::to_string(*r.q) : std::string()) << ',' << r.metric << ','
        << format_number(r.mean) << ',' << format_number(r.stddev) << ',' << r.instances << ',' << r.seed << '\n';
  }
  return out.str();
}

namespace detail {

// Population mean and standard deviation.
inline std::pair<double, double> mean_stddev(const std::vector<double>& xs) {
  if (xs.empty()) return {0, 0};
  double s = 0;
  for (double x : xs) s += x;
  const double mean = s / static_cast<double>(xs.size());
  double ss = 0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / static_cast<double>(xs.size()))};
}

inline std::uint64_t instance_seed(std::uint64_t seed, int m, int index) {
  return derive_key(seed, {static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(index)});
}

// Loss of `a` against `best`; exact for Nash through the integer products.
inline double welfare_loss(const Instance& inst, const Allocation& best, const Allocation& a, WelfareKind kind) {
  if (kind == WelfareKind::nash && nash_product(inst, best) == nash_product(inst, a)) return 0;
  return welfare(inst, best, kind) - welfare(inst, a, kind);
}

}  // namespace detail

struct QSweepConfig {
  int n = 6;
  std::vector<int> m_values{6, 7, 8, 9, 10, 11};
  int instances = 100;
  WelfareKind initial = WelfareKind::utilitarian;
  Measure measure = Measure::envy;
  std::uint64_t seed = 0;
  OracleCaps caps{7, 11};
};

/// One instance of a q-sweep: value[q] is the measure after the best
/// reallocation of at most q agents toward the oracle optimum.
struct QSweepTrace {
  int m = 0;
  int index = 0;
  Allocation initial;
  Allocation optimum;
  std::int64_t initial_value = 0;
  std::int64_t optimum_value = 0;
  std::vector<Allocation> chosen;          // per q
  std::vector<std::int64_t> value;         // per q
  std::vector<double> welfare_loss_abs;    // per q
  std::vector<double> welfare_loss_rel;    // per q
};

/// The differences between the initial allocation and an optimum are split
/// into alternating paths/cycles; paths whose joint effect is not additive
/// are merged. Components are then chosen by knapsack (weight = agents,
/// profit = measure drop) for every budget, each plan is re-evaluated, and
/// budget q keeps the best evaluated plan of weight <= q, which makes the
/// curve monotone and reach the optimum at q = n.
inline QSweepTrace q_sweep_instance(const Instance& inst, const Allocation& initial, const Allocation& optimum,
                                    Measure measure, WelfareKind kind) {
  const int n = inst.num_agents(), m = inst.num_houses();
  QSweepTrace tr;
  tr.initial = initial;
  tr.optimum = optimum;
  const auto& p = inst.prefs();
  auto value_of = [&](const Allocation& a) { return measure_unchecked(p, a.houses(), measure); };
  tr.initial_value = value_of(initial);
  tr.optimum_value = value_of(optimum);

  const auto paths = symmetric_difference(optimum, initial, m);
  const int k = static_cast<int>(paths.size());
  std::vector<std::int64_t> single(k);
  for (int x = 0; x < k; ++x) single[x] = tr.initial_value - value_of(apply_path(initial, paths[x], m));
  std::vector<int> group(k);
  for (int x = 0; x < k; ++x) group[x] = x;
  auto find = [&](int x) {
    while (group[x] != x) x = group[x];
    return x;
  };
  for (int x = 0; x < k; ++x)
    for (int y = x + 1; y < k; ++y) {
      const auto both = apply_path(apply_path(initial, paths[x], m), paths[y], m);
      if (tr.initial_value - value_of(both) != single[x] + single[y]) {
        const int a = find(x), b = find(y);
        group[std::max(a, b)] = std::min(a, b);
      }
    }
  std::vector<std::vector<int>> members;
  std::vector<int> slot(k, -1);
  for (int x = 0; x < k; ++x) {
    const int r = find(x);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(members.size());
      members.emplace_back();
    }
    members[slot[r]].push_back(x);
  }
  auto apply_components = [&](const std::vector<std::size_t>& chosen) {
    Allocation a = initial;
    for (std::size_t c : chosen)
      for (int x : members[c]) a = apply_path(a, paths[x], m);
    return a;
  };
  std::vector<KnapsackItem> items;
  for (std::size_t c = 0; c < members.size(); ++c) {
    std::vector<std::size_t> one{c};
    KnapsackItem it;
    it.weight = 0;
    for (int x : members[c]) it.weight += static_cast<int>(paths[x].agents.size());
    it.profit = tr.initial_value - value_of(apply_components(one));
    items.push_back(it);
  }
  int total_weight = 0;
  for (const auto& it : items) total_weight += it.weight;
  const KnapsackTable table(items, n);

  Allocation best = initial;
  std::int64_t best_value = tr.initial_value;
  for (int q = 0; q <= n; ++q) {
    auto consider = [&](const Allocation& a) {
      const auto v = value_of(a);
      if (v < best_value) {
        best_value = v;
        best = a;
      }
    };
    consider(apply_components(table.best_subset(q)));
    if (total_weight <= q) consider(optimum);
    best.validate(inst);
    tr.chosen.push_back(best);
    tr.value.push_back(best_value);
    const double loss = detail::welfare_loss(inst, initial, best, kind);
    const double base_w = welfare(inst, initial, kind);
    tr.welfare_loss_abs.push_back(loss);
    tr.welfare_loss_rel.push_back(base_w == 0 ? 0 : loss / base_w);
  }
  return tr;
}

struct QSweepResult {
  std::vector<BenchRow> rows;
  std::vector<QSweepTrace> traces;
};

inline QSweepResult run_q_sweep(const QSweepConfig& cfg) {
  QSweepResult res;
  for (int m : cfg.m_values) {
    const int first = static_cast<int>(res.traces.size());
    for (int idx = 0; idx < cfg.instances; ++idx) {
      const auto inst = gen_uniform_cardinal(cfg.n, m, detail::instance_seed(cfg.seed, m, idx));
      const auto initial = max_welfare(inst, cfg.initial);
      const auto opt = min_measure_exhaustive(inst, cfg.measure, cfg.caps);
      auto tr = q_sweep_instance(inst, initial, opt.witness, cfg.measure, cfg.initial);
      tr.m = m;
      tr.index = idx;
      res.traces.push_back(std::move(tr));
    }
    for (int q = 0; q <= cfg.n; ++q) {
      std::vector<double> drop, value, abs_loss, rel_loss;
      for (std::size_t t = first; t < res.traces.size(); ++t) {
        const auto& tr = res.traces[t];
        drop.push_back(static_cast<double>(tr.initial_value - tr.value[q]));
        value.push_back(static_cast<double>(tr.value[q]));
        abs_loss.push_back(tr.welfare_loss_abs[q]);
        rel_loss.push_back(tr.welfare_loss_rel[q]);
      }
      const std::pair<const char*, const std::vector<double>*> metrics[] = {
          {"measure_drop", &drop}, {"measure_value", &value}, {"welfare_loss_abs", &abs_loss},
          {"welfare_loss_rel", &rel_loss}};
      for (const auto& [name, xs] : metrics) {
        const auto [mean, sd] = detail::mean_stddev(*xs);
        res.rows.push_back({m, q, name, mean, sd, cfg.instances, cfg.seed});
      }
    }
  }
  return res;
}

struct DomainSweepConfig {
  int n = 10;
  std::vector<int> m_values;  // default 10..25
  int instances = 1000;
  Domain domain = Domain::peaked;
  std::uint64_t seed = 0;
};

struct DomainSweepResult {
  std::vector<BenchRow> rows;
  std::vector<double> mean_loss;  // per m, utilitarian welfare, absolute
};

/// Utilitarian welfare lost by the minimum-envy allocation of the domain
/// solver relative to the utilitarian optimum.
inline DomainSweepResult run_domain_sweep(DomainSweepConfig cfg) {
  if (cfg.m_values.empty())
    for (int m = 10; m <= 25; ++m) cfg.m_values.push_back(m);
  DomainSweepResult res;
  for (int m : cfg.m_values) {
    std::vector<double> abs_loss, rel_loss, envy;
    for (int idx = 0; idx < cfg.instances; ++idx) {
      const auto s = detail::instance_seed(cfg.seed, m, idx);
      const auto inst = cfg.domain == Domain::peaked ? gen_single_peaked(cfg.n, m, s) : gen_single_dipped(cfg.n, m, s);
      const auto a = cfg.domain == Domain::peaked ? min_envy_single_peaked(inst) : min_envy_single_dipped(inst);
      a.validate(inst);
      const auto best = max_utilitarian(inst);
      const double w = static_cast<double>(utilitarian_welfare(inst, best));
      const double loss = w - static_cast<double>(utilitarian_welfare(inst, a));
      abs_loss.push_back(loss);
      rel_loss.push_back(w == 0 ? 0 : loss / w);
      envy.push_back(static_cast<double>(measure_value(inst, a, Measure::envy)));
    }
    const std::pair<const char*, const std::vector<double>*> metrics[] = {
        {"welfare_loss_abs", &abs_loss}, {"welfare_loss_rel", &rel_loss}, {"envy_value", &envy}};
    for (const auto& [name, xs] : metrics) {
      const auto [mean, sd] = detail::mean_stddev(*xs);
      res.rows.push_back({m, std::nullopt, name, mean, sd, cfg.instances, cfg.seed});
    }
    res.mean_loss.push_back(detail::mean_stddev(abs_loss).first);
  }
  return res;
}

}  // namespace hafair

#endif  // HAFAIR_BENCH_HPP_
