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

#ifndef RPIVOT_RANK_H_
#define RPIVOT_RANK_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rpivot/graph.h"
#include "rpivot/random.h"

namespace rpivot {

// A random order on the vertices: either a true permutation or independent
// integer ranks drawn from [0, n^c).
//
// Every comparison goes through the strict total order (rank, vertex ID),
// for both kinds. Key(v) is v's position in that order, so Key is always a
// bijection onto [0, n) and algorithms compare keys only.
class RankAssignment {
 public:
  enum class Kind { kPermutation, kIntegerRanks };

  RankAssignment() = default;

  // `rank` must be a bijection onto [0, n).
  static RankAssignment FromPermutation(std::vector<std::uint32_t> rank);
  // Every rank must be < n^exponent.
  static RankAssignment FromIntegerRanks(std::vector<uint128> rank,
                                         int exponent);
  static RankAssignment Identity(VertexId n);

  // The order restricted to `vertices`, renumbered 0..k-1 in list order.
  // Integer ranks keep their raw values and the original range, so the
  // (rank, ID) order is preserved whenever `vertices` is increasing.
  RankAssignment Restrict(std::span<const VertexId> vertices) const;

  Kind kind() const { return kind_; }
  bool is_permutation() const { return kind_ == Kind::kPermutation; }
  VertexId n() const { return static_cast<VertexId>(key_.size()); }
  // 1 for permutations.
  int exponent() const { return exponent_; }
  // Exclusive upper bound on raw ranks (n for permutations).
  uint128 range() const { return range_; }

  uint128 raw(VertexId v) const { return raw_[v]; }
  std::uint32_t Key(VertexId v) const { return key_[v]; }
  // The vertex at position k of the order.
  VertexId AtKey(std::uint32_t k) const { return order_[k]; }
  bool Less(VertexId a, VertexId b) const { return key_[a] < key_[b]; }

  std::span<const std::uint32_t> keys() const { return key_; }
  // Vertices in increasing (rank, ID) order.
  std::span<const VertexId> order() const { return order_; }

 private:
  void BuildOrder();

  Kind kind_ = Kind::kPermutation;
  int exponent_ = 1;
  uint128 range_ = 0;
  std::vector<uint128> raw_;
  std::vector<std::uint32_t> key_;
  std::vector<VertexId> order_;
};

// Uniform permutation by Fisher-Yates.
RankAssignment RandomPermutation(VertexId n, Rng& rng);
RankAssignment RandomPermutation(VertexId n, std::uint64_t seed);

// Independent uniform ranks in [0, n^c). Throws std::invalid_argument if
// n < 1, c < 1, or n^c does not fit in 128 bits.
RankAssignment RandomIntegerRanks(VertexId n, int c, Rng& rng);
RankAssignment RandomIntegerRanks(VertexId n, int c, std::uint64_t seed);

// n^c, throwing std::invalid_argument on 128-bit overflow.
uint128 CheckedPow(std::uint64_t n, int c);

// Bits needed to write any value in [0, range): ceil(log2(range)), at least 1.
int BitWidth(uint128 range);

std::string ToDecimal(uint128 value);

}  // namespace rpivot

#endif  // RPIVOT_RANK_H_
