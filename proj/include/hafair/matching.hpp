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

#ifndef HAFAIR_MATCHING_HPP_
#define HAFAIR_MATCHING_HPP_

// Rectangular assignment (Hungarian method with potentials) and bipartite
// maximum-cardinality matching.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace hafair {

namespace detail {

template <typename T>
constexpr T assignment_infinity() {
  if constexpr (std::is_floating_point_v<T>) {
    return std::numeric_limits<T>::max() / 4;
  } else if constexpr (sizeof(T) > sizeof(std::int64_t)) {
    return static_cast<T>(1) << (8 * sizeof(T) - 8);
  } else {
    return std::numeric_limits<T>::max() / 4;
  }
}

}  // namespace detail

/// Minimum-cost assignment of every row to a distinct column, rows <= cols.
/// Returns the column of each row. T must be a signed arithmetic type whose
/// range exceeds rows * max|cost| by a comfortable margin.
template <typename T>
std::vector<int> min_cost_assignment(const std::vector<std::vector<T>>& cost) {
  const int n = static_cast<int>(cost.size());
  if (n == 0) return {};
  const int m = static_cast<int>(cost[0].size());
  if (m < n) throw std::invalid_argument("assignment needs at least as many columns as rows");
  const T inf = detail::assignment_infinity<T>();
  std::vector<T> u(n + 1, T{0}), v(m + 1, T{0}), minv(m + 1);
  std::vector<int> p(m + 1, 0), way(m + 1, 0);
  std::vector<char> used(m + 1);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      T delta = inf;
      int j1 = 0;
      for (int j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const T cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= m; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> col(n, -1);
  for (int j = 1; j <= m; ++j)
    if (p[j] != 0) col[p[j] - 1] = j - 1;
  return col;
}

/// Maximum-cardinality matching of rows into columns over allowed[r][c]
/// (augmenting paths, rows tried in index order, columns ascending).
/// Returns the column of each row or -1.
inline std::vector<int> max_cardinality_matching(const std::vector<std::vector<char>>& allowed, int cols) {
  const int rows = static_cast<int>(allowed.size());
  std::vector<int> row_of(cols, -1), col_of(rows, -1);
  std::vector<char> seen(cols);
  auto augment = [&](auto&& self, int r) -> bool {
    for (int c = 0; c < cols; ++c) {
      if (!allowed[r][c] || seen[c]) continue;
      seen[c] = 1;
      if (row_of[c] < 0 || self(self, row_of[c])) {
        row_of[c] = r;
        col_of[r] = c;
        return true;
      }
    }
    return false;
  };
  for (int r = 0; r < rows; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    augment(augment, r);
  }
  return col_of;
}

inline int matching_size(const std::vector<int>& col_of) {
  int k = 0;
  for (int c : col_of) k += c >= 0;
  return k;
}

}  // namespace hafair

#endif  // HAFAIR_MATCHING_HPP_
