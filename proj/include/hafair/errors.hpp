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

#ifndef HAFAIR_ERRORS_HPP_
#define HAFAIR_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace hafair {

// Malformed input: bad instance, incomplete or non-injective allocation,
// non-alternating path.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The instance is outside the preference domain an algorithm requires
// (not single-peaked, ties where none are allowed, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A welfare measure was requested for a profile that cannot support it.
class UnsupportedMeasure : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An edge of a symmetric difference is missing from the preference graph.
class GraphInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive routine refused to run because its size caps are exceeded.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hafair

#endif  // HAFAIR_ERRORS_HPP_
