// Copyright 2026 The rpivot Authors.
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

// The single random source of the library: std::mt19937_64 seeded through a
// SplitMix64 mix of (seed, stream). Every randomized routine takes either an
// explicit seed or an Rng&, so runs replay bit-identically from their seed.
// Sampling helpers are written out here rather than going through
// <random> distributions, whose outputs are implementation-defined.

#ifndef RPIVOT_RANDOM_H_
#define RPIVOT_RANDOM_H_

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace rpivot {

using Rng = std::mt19937_64;
using uint128 = unsigned __int128;

inline std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent substream `stream` of `seed`; trial i of an experiment uses
// MakeRng(seed, i).
inline Rng MakeRng(std::uint64_t seed, std::uint64_t stream = 0) {
  return Rng(SplitMix64(SplitMix64(seed) ^ SplitMix64(~stream)));
}

// Uniform in [0, bound), bound >= 1. Rejection sampling, no modulo bias.
inline std::uint64_t UniformBelow(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= limit) return x % bound;
  }
}

inline uint128 UniformBelow128(Rng& rng, uint128 bound) {
  if (bound >> 64 == 0) {
    return UniformBelow(rng, static_cast<std::uint64_t>(bound));
  }
  const uint128 limit = -bound % bound;
  for (;;) {
    const uint128 x = (static_cast<uint128>(rng()) << 64) | rng();
    if (x >= limit) return x % bound;
  }
}

// Uniform in [0, 1) with 53 random bits.
inline double UniformUnit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Fisher-Yates.
template <class T>
void Shuffle(std::span<T> items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = UniformBelow(rng, i);
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

}  // namespace rpivot

#endif  // RPIVOT_RANDOM_H_
