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

#include "rpivot/rank.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rpivot {

RankAssignment RankAssignment::FromPermutation(std::vector<std::uint32_t> rank) {
  const std::size_t n = rank.size();
  std::vector<char> seen(n, 0);
  for (std::uint32_t r : rank) {
    if (r >= n || seen[r]) {
      throw std::invalid_argument(
          "permutation ranks must be exactly {0, ..., n-1}, each once");
    }
    seen[r] = 1;
  }
  RankAssignment out;
  out.kind_ = Kind::kPermutation;
  out.exponent_ = 1;
  out.range_ = n;
  out.raw_.assign(rank.begin(), rank.end());
  out.key_ = std::move(rank);
  out.order_.assign(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    out.order_[out.key_[v]] = static_cast<VertexId>(v);
  }
  return out;
}

RankAssignment RankAssignment::FromIntegerRanks(std::vector<uint128> rank,
                                                int exponent) {
  const uint128 range = CheckedPow(std::max<std::size_t>(rank.size(), 1),
                                   exponent);
  for (uint128 r : rank) {
    if (r >= range) {
      throw std::invalid_argument("integer rank " + ToDecimal(r) +
                                  " outside [0, n^c)");
    }
  }
  RankAssignment out;
  out.kind_ = Kind::kIntegerRanks;
  out.exponent_ = exponent;
  out.range_ = range;
  out.raw_ = std::move(rank);
  out.BuildOrder();
  return out;
}

RankAssignment RankAssignment::Identity(VertexId n) {
  std::vector<std::uint32_t> rank(static_cast<std::size_t>(n));
  std::iota(rank.begin(), rank.end(), 0u);
  return FromPermutation(std::move(rank));
}

RankAssignment RankAssignment::Restrict(
    std::span<const VertexId> vertices) const {
  if (is_permutation()) {
    std::vector<VertexId> sub(vertices.begin(), vertices.end());
    std::vector<std::uint32_t> idx(sub.size());
    std::iota(idx.begin(), idx.end(), 0u);
    std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
      return key_[sub[a]] < key_[sub[b]];
    });
    std::vector<std::uint32_t> rank(sub.size());
    for (std::size_t k = 0; k < idx.size(); ++k) {
      rank[idx[k]] = static_cast<std::uint32_t>(k);
    }
    return FromPermutation(std::move(rank));
  }
  RankAssignment out;
  out.kind_ = Kind::kIntegerRanks;
  out.exponent_ = exponent_;
  out.range_ = range_;
  out.raw_.reserve(vertices.size());
  for (VertexId v : vertices) out.raw_.push_back(raw_[v]);
  out.BuildOrder();
  return out;
}

void RankAssignment::BuildOrder() {
  const std::size_t n = raw_.size();
  order_.resize(n);
  std::iota(order_.begin(), order_.end(), 0);
  std::sort(order_.begin(), order_.end(), [&](VertexId a, VertexId b) {
    if (raw_[a] != raw_[b]) return raw_[a] < raw_[b];
    return a < b;
  });
  key_.assign(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    key_[order_[k]] = static_cast<std::uint32_t>(k);
  }
}

RankAssignment RandomPermutation(VertexId n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("RandomPermutation: n must be >= 1");
  std::vector<std::uint32_t> rank(static_cast<std::size_t>(n));
  std::iota(rank.begin(), rank.end(), 0u);
  Shuffle(std::span<std::uint32_t>(rank), rng);
  return RankAssignment::FromPermutation(std::move(rank));
}

RankAssignment RandomPermutation(VertexId n, std::uint64_t seed) {
  Rng rng = MakeRng(seed);
  return RandomPermutation(n, rng);
}

RankAssignment RandomIntegerRanks(VertexId n, int c, Rng& rng) {
  if (n < 1) throw std::invalid_argument("RandomIntegerRanks: n must be >= 1");
  if (c < 1) throw std::invalid_argument("RandomIntegerRanks: c must be >= 1");
  const uint128 range = CheckedPow(static_cast<std::uint64_t>(n), c);
  std::vector<uint128> rank(static_cast<std::size_t>(n));
  for (auto& r : rank) r = UniformBelow128(rng, range);
  return RankAssignment::FromIntegerRanks(std::move(rank), c);
}

RankAssignment RandomIntegerRanks(VertexId n, int c, std::uint64_t seed) {
  Rng rng = MakeRng(seed);
  return RandomIntegerRanks(n, c, rng);
}

uint128 CheckedPow(std::uint64_t n, int c) {
  if (c < 1) throw std::invalid_argument("rank exponent must be >= 1");
  uint128 out = 1;
  for (int i = 0; i < c; ++i) {
    if (n != 0 && out > (~static_cast<uint128>(0)) / n) {
      throw std::invalid_argument("n^c overflows 128 bits (n=" +
                                  std::to_string(n) +
                                  ", c=" + std::to_string(c) + ")");
    }
    out *= n;
  }
  return out;
}

int BitWidth(uint128 range) {
  int bits = 0;
  uint128 top = range - 1;
  while (top > 0) {
    ++bits;
    top >>= 1;
  }
  return std::max(bits, 1);
}

std::string ToDecimal(uint128 value) {
  if (value == 0) return "0";
  std::string out;
  while (value > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace rpivot
