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

#include "rpivot/clustering.h"

#include <stdexcept>
#include <string>
#include <unordered_map>

namespace rpivot {

Clustering Clustering::FromIds(std::vector<ClusterId> ids) {
  ClusterId max_id = -1;
  for (ClusterId id : ids) {
    if (id < 0) throw std::invalid_argument("negative cluster ID");
    max_id = std::max(max_id, id);
  }
  std::vector<char> used(static_cast<std::size_t>(max_id + 1), 0);
  for (ClusterId id : ids) used[id] = 1;
  for (ClusterId id = 0; id <= max_id; ++id) {
    if (!used[id]) {
      throw std::invalid_argument("cluster IDs not dense: " +
                                  std::to_string(id) + " unused");
    }
  }
  Clustering c;
  c.ids_ = std::move(ids);
  c.num_clusters_ = max_id + 1;
  return c;
}

Clustering Clustering::FromLabels(std::span<const std::int64_t> labels) {
  std::unordered_map<std::int64_t, ClusterId> remap;
  std::vector<ClusterId> ids;
  ids.reserve(labels.size());
  for (std::int64_t label : labels) {
    auto [it, inserted] =
        remap.emplace(label, static_cast<ClusterId>(remap.size()));
    ids.push_back(it->second);
  }
  Clustering c;
  c.ids_ = std::move(ids);
  c.num_clusters_ = static_cast<ClusterId>(remap.size());
  return c;
}

Clustering Clustering::Singletons(VertexId n) {
  Clustering c;
  c.ids_.resize(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) c.ids_[v] = v;
  c.num_clusters_ = n;
  return c;
}

Clustering Clustering::OneCluster(VertexId n) {
  Clustering c;
  c.ids_.assign(static_cast<std::size_t>(n), 0);
  c.num_clusters_ = n > 0 ? 1 : 0;
  return c;
}

std::vector<std::vector<VertexId>> Clustering::Members() const {
  std::vector<std::vector<VertexId>> out(static_cast<std::size_t>(num_clusters_));
  for (VertexId v = 0; v < n(); ++v) out[ids_[v]].push_back(v);
  return out;
}

std::vector<VertexId> Clustering::Sizes() const {
  std::vector<VertexId> out(static_cast<std::size_t>(num_clusters_), 0);
  for (ClusterId id : ids_) ++out[id];
  return out;
}

Clustering Clustering::Canonical() const {
  std::vector<ClusterId> remap(static_cast<std::size_t>(num_clusters_), -1);
  ClusterId next = 0;
  Clustering c;
  c.ids_.resize(ids_.size());
  for (std::size_t v = 0; v < ids_.size(); ++v) {
    ClusterId& slot = remap[ids_[v]];
    if (slot < 0) slot = next++;
    c.ids_[v] = slot;
  }
  c.num_clusters_ = next;
  return c;
}

bool SamePartition(const Clustering& a, const Clustering& b) {
  return a.n() == b.n() && a.Canonical() == b.Canonical();
}

std::int64_t ClusteringCost(const Graph& g, const Clustering& c) {
  if (c.n() != g.n()) {
    throw std::invalid_argument("clustering covers " + std::to_string(c.n()) +
                                " vertices, graph has " +
                                std::to_string(g.n()));
  }
  std::vector<std::int64_t> intra(static_cast<std::size_t>(c.num_clusters()), 0);
  std::int64_t cut = 0;
  for (VertexId u = 0; u < g.n(); ++u) {
    for (VertexId v : g.Neighbors(u)) {
      if (v <= u) continue;
      if (c[u] == c[v]) {
        ++intra[c[u]];
      } else {
        ++cut;
      }
    }
  }
  std::int64_t cost = cut;
  const auto sizes = c.Sizes();
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    const std::int64_t s = sizes[k];
    cost += s * (s - 1) / 2 - intra[k];
  }
  return cost;
}

bool IsRefinement(const Clustering& fine, const Clustering& coarse) {
  if (fine.n() != coarse.n()) {
    throw std::invalid_argument("IsRefinement: vertex counts differ");
  }
  std::vector<ClusterId> host(static_cast<std::size_t>(fine.num_clusters()), -1);
  for (VertexId v = 0; v < fine.n(); ++v) {
    ClusterId& h = host[fine[v]];
    if (h < 0) {
      h = coarse[v];
    } else if (h != coarse[v]) {
      return false;
    }
  }
  return true;
}

}  // namespace rpivot
