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

#ifndef RPIVOT_CLUSTERING_H_
#define RPIVOT_CLUSTERING_H_

#include <cstdint>
#include <span>
#include <vector>

#include "rpivot/graph.h"

namespace rpivot {

using ClusterId = std::int32_t;

// Partition of [0, n) as a per-vertex cluster ID. IDs are dense in
// [0, num_clusters).
class Clustering {
 public:
  Clustering() = default;

  // Throws std::invalid_argument unless the IDs are dense.
  static Clustering FromIds(std::vector<ClusterId> ids);
  // Arbitrary labels, renumbered by first appearance.
  static Clustering FromLabels(std::span<const std::int64_t> labels);
  static Clustering Singletons(VertexId n);
  static Clustering OneCluster(VertexId n);

  VertexId n() const { return static_cast<VertexId>(ids_.size()); }
  ClusterId num_clusters() const { return num_clusters_; }
  ClusterId operator[](VertexId v) const { return ids_[v]; }
  std::span<const ClusterId> ids() const { return ids_; }

  std::vector<std::vector<VertexId>> Members() const;
  std::vector<VertexId> Sizes() const;

  // Same partition, IDs renumbered by first appearance in vertex order.
  // Two clusterings describe the same partition iff their canonical forms
  // are equal.
  Clustering Canonical() const;

  friend bool operator==(const Clustering&, const Clustering&) = default;

 private:
  std::vector<ClusterId> ids_;
  ClusterId num_clusters_ = 0;
};

bool SamePartition(const Clustering& a, const Clustering& b);

// Cut edges plus intra-cluster non-edges, computed as
//   cut + sum_C [ C(|C|, 2) - intra_edges(C) ]
// in O(n + m).
std::int64_t ClusteringCost(const Graph& g, const Clustering& c);

// True iff every cluster of `fine` lies inside one cluster of `coarse`.
bool IsRefinement(const Clustering& fine, const Clustering& coarse);

}  // namespace rpivot

#endif  // RPIVOT_CLUSTERING_H_
