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

#ifndef HAFAIR_DOMAIN_HPP_
#define HAFAIR_DOMAIN_HPP_

// Shared pieces of the structured-domain solvers.

#include <cstdint>
#include <string>
#include <vector>

#include "hafair/core.hpp"

namespace hafair {

enum class Domain { peaked, dipped };

inline Domain parse_domain(const std::string& s) {
  if (s == "peaked" || s == "single-peaked") return Domain::peaked;
  if (s == "dipped" || s == "single-dipped") return Domain::dipped;
  throw ValidationError("unknown domain '" + s + "'");
}

inline const char* to_string(Domain d) { return d == Domain::peaked ? "peaked" : "dipped"; }

/// Counts ranking lookups, for empirical running-time checks.
struct OpCounter {
  std::uint64_t ops = 0;
};

/// Strict rankings with optional access counting.
class RankView {
 public:
  RankView(StrictRankings s, OpCounter* counter) : s_(std::move(s)), counter_(counter) {
    if (counter_) counter_->ops += static_cast<std::uint64_t>(s_.num_agents()) * (s_.order.empty() ? 0 : s_.order[0].size());
  }

  int num_agents() const { return s_.num_agents(); }
  int num_houses() const { return s_.order.empty() ? 0 : static_cast<int>(s_.order[0].size()); }

  // 0-based position of h in i's ranking.
  int rank(AgentId i, HouseId h) const {
    tick();
    return s_.rank(i, h);
  }
  // House at 0-based position r of i's ranking.
  HouseId at(AgentId i, int r) const {
    tick();
    return s_.order[i][r];
  }
  HouseId top(AgentId i) const { return at(i, 0); }

  const StrictRankings& rankings() const { return s_; }

 private:
  void tick() const {
    if (counter_) ++counter_->ops;
  }
  StrictRankings s_;
  OpCounter* counter_;
};

/// Agents in `order` take, one at a time, their best house among those with
/// blocked[h] == 0; taken houses become blocked.
inline void serial_dictatorship(const RankView& rv, const std::vector<AgentId>& order, std::vector<char>& blocked,
                                std::vector<HouseId>& alloc) {
  const int m = rv.num_houses();
  for (AgentId i : order) {
    for (int r = 0; r < m; ++r) {
      const HouseId h = rv.at(i, r);
      if (blocked[h]) continue;
      alloc[i] = h;
      blocked[h] = 1;
      break;
    }
    if (alloc[i] == kNoHouse) throw GraphInconsistency("serial dictatorship ran out of houses");
  }
}

/// Position of every house on the axis.
inline std::vector<int> axis_positions(const std::vector<HouseId>& axis) {
  std::vector<int> pos(axis.size());
  for (std::size_t k = 0; k < axis.size(); ++k) pos[axis[k]] = static_cast<int>(k);
  return pos;
}

}  // namespace hafair

#endif  // HAFAIR_DOMAIN_HPP_
