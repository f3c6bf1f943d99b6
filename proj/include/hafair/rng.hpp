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

#ifndef HAFAIR_RNG_HPP_
#define HAFAIR_RNG_HPP_

// ctr64 v1: a counter-based generator built on the SplitMix64 finalizer.
//
//   mix(z)      = SplitMix64 finalizer
//   next()      = mix(key + (++counter) * 0x9E3779B97F4A7C15)
//   derive(k,t) = mix(mix(k) ^ (t * 0xD1B54A32D192ED03 + 0x632BE59BD9B4E019))
//   uniform(b)  = first next() value x with x >= (2^64 mod b), reduced mod b
//
// Everything is defined on unsigned 64-bit arithmetic so a stream can be
// reproduced bit-for-bit in any language.

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <utility>
#include <vector>

namespace hafair {

inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t derive_key(std::uint64_t key, std::uint64_t tag) {
  return mix64(mix64(key) ^ (tag * 0xD1B54A32D192ED03ULL + 0x632BE59BD9B4E019ULL));
}

inline constexpr std::uint64_t derive_key(std::uint64_t key,
                                          std::initializer_list<std::uint64_t> tags) {
  for (std::uint64_t t : tags) key = derive_key(key, t);
  return key;
}

class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit constexpr CounterRng(std::uint64_t key) : key_(key) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  constexpr result_type operator()() {
    ++counter_;
    return mix64(key_ + counter_ * 0x9E3779B97F4A7C15ULL);
  }

  // Unbiased integer in [0, bound). bound must be positive.
  constexpr std::uint64_t uniform(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t x = (*this)();
      if (x >= threshold) return x % bound;
    }
  }

  // Integer in [lo, hi].
  constexpr std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(uniform(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  // Independent child stream; the parent is not advanced.
  constexpr CounterRng split(std::uint64_t tag) const { return CounterRng(derive_key(key_, tag)); }

  constexpr std::uint64_t key() const { return key_; }
  constexpr std::uint64_t position() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Fisher-Yates with the generator above (std::shuffle is not portable).
template <typename T>
void shuffle(std::vector<T>& items, CounterRng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.uniform(i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace hafair

#endif  // HAFAIR_RNG_HPP_
