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

#ifndef HAFAIR_SOLVE_HPP_
#define HAFAIR_SOLVE_HPP_

// Dispatch over the structured domains.

#include <optional>

#include "hafair/dipped.hpp"
#include "hafair/domain.hpp"
#include "hafair/oracle.hpp"
#include "hafair/peaked.hpp"

namespace hafair {

inline bool in_domain(const Instance& inst, Domain d) {
  if (!inst.has_axis()) return false;
  try {
    return d == Domain::peaked ? validate_single_peaked(inst).ok : validate_single_dipped(inst).ok;
  } catch (const DomainError&) {
    return false;
  }
}

struct ParetoDecision {
  std::optional<Allocation> allocation;
  bool exhaustive = false;  // decided by enumeration because the instance is outside the domain
};

/// Minimum-envy Pareto-optimal allocation, if any. Instances outside the
/// domain (no axis, or rankings not single-peaked/dipped on it) are decided
/// by enumeration within `caps`.
inline ParetoDecision min_envy_pareto(const Instance& inst, Domain d, const OracleCaps& caps = {}) {
  if (!in_domain(inst, d)) return {pareto_min_envy_exhaustive(inst, caps), true};
  return {d == Domain::peaked ? min_envy_pareto_single_peaked(inst) : min_envy_pareto_single_dipped(inst), false};
}

}  // namespace hafair

#endif  // HAFAIR_SOLVE_HPP_
