// Copyright 2026 The objectaug Authors.
//
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

#ifndef OBJECTAUG_RANDOM_HPP_
#define OBJECTAUG_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <string_view>

namespace objectaug {

// SplitMix64 finalizer: a bijective avalanche mix of one 64-bit word.
constexpr std::uint64_t avalanche(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

// Derives a child seed from a parent seed and a salt. Child seeds for
// distinct salts are decorrelated, and the result only depends on the two
// inputs, never on call order.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  return avalanche(seed ^ avalanche(salt + 0x9E3779B97F4A7C15ULL));
}

// 64-bit FNV-1a.
constexpr std::uint64_t hash_id(std::string_view id) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : id) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

// Seeded generator with platform-independent derived draws. The engine
// sequence of std::mt19937_64 is fixed by the standard; the standard
// distributions are not, so the draws below are computed by hand.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, 1) with 53 bits of resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform in [lo, hi].
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [lo, hi], rejection-sampled to avoid modulo bias.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return lo + static_cast<std::int64_t>(r % span);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace objectaug

#endif  // OBJECTAUG_RANDOM_HPP_
