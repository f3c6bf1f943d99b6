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

#ifndef HAFAIR_HAFAIR_HPP_
#define HAFAIR_HAFAIR_HPP_

#include "hafair/bench.hpp"
#include "hafair/core.hpp"
#include "hafair/dipped.hpp"
#include "hafair/domain.hpp"
#include "hafair/errors.hpp"
#include "hafair/gen.hpp"
#include "hafair/io.hpp"
#include "hafair/knapsack.hpp"
#include "hafair/matching.hpp"
#include "hafair/oracle.hpp"
#include "hafair/pareto.hpp"
#include "hafair/peaked.hpp"
#include "hafair/refine.hpp"
#include "hafair/rng.hpp"
#include "hafair/solve.hpp"
#include "hafair/welfare.hpp"

#endif  // HAFAIR_HAFAIR_HPP_
