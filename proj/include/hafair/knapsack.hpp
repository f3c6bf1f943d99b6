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

#ifndef HAFAIR_KNAPSACK_HPP_
#define HAFAIR_KNAPSACK_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hafair {

struct KnapsackItem {
  int weight = 1;            // reallocated agents
  std::int64_t profit = 0;   // measure drop
};

/// 0/1 knapsack by dynamic programming over integer capacities, O(items * q).
/// best_profit[c] is the largest total profit with total weight <= c.
class KnapsackTable {
 public:
  KnapsackTable(const std::vector<KnapsackItem>& items, int capacity)
      : items_(items), capacity_(capacity < 0 ? 0 : capacity) {
    const std::size_t k = items_.size();
    const std::size_t width = static_cast<std::size_t>(capacity_) + 1;
    table_.assign((k + 1) * width, 0);
    for (std::size_t j = 1; j <= k; ++j) {
      const auto& it = items_[j - 1];
      if (it.weight < 0) throw std::invalid_argument("knapsack weights must be non-negative");
      for (int c = 0; c <= capacity_; ++c) {
        std::int64_t v = at(j - 1, c);
        if (it.weight <= c) v = std::max(v, at(j - 1, c - it.weight) + it.profit);
        table_[j * width + c] = v;
      }
    }
  }

  int capacity() const { return capacity_; }
  std::int64_t best_profit(int c) const { return at(items_.size(), clamp(c)); }

  // Indices (ascending) of a subset attaining best_profit(c). Ties prefer
  // leaving later items out.
  std::vector<std::size_t> best_subset(int c) const {
    c = clamp(c);
    std::vector<std::size_t> chosen;
    for (std::size_t j = items_.size(); j >= 1; --j) {
      if (at(j, c) != at(j - 1, c)) {
        chosen.push_back(j - 1);
        c -= items_[j - 1].weight;
      }
    }
    return {chosen.rbegin(), chosen.rend()};
  }

 private:
  int clamp(int c) const { return c < 0 ? 0 : (c > capacity_ ? capacity_ : c); }
  std::int64_t at(std::size_t j, int c) const {
    return table_[j * (static_cast<std::size_t>(capacity_) + 1) + c];
  }

  std::vector<KnapsackItem> items_;
  int capacity_;
  std::vector<std::int64_t> table_;
};

/// A subset with total weight <= q and total profit >= k, or nothing.
/// k <= 0 always yields the empty subset.
inline std::optional<std::vector<std::size_t>> knapsack_select(const std::vector<KnapsackItem>& items, int q,
                                                               std::int64_t k) {
  if (k <= 0) return std::vector<std::size_t>{};
  if (q <= 0) return std::nullopt;
  KnapsackTable t(items, q);
  if (t.best_profit(q) < k) return std::nullopt;
  return t.best_subset(q);
}

}  // namespace hafair

#endif  // HAFAIR_KNAPSACK_HPP_
