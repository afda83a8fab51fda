// Copyright 2026 The Clustval Authors
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

#include "clustval/graph.h"

#include <algorithm>
#include <set>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace clustval {

absl::StatusOr<Graph> Graph::Create(VertexId vertex_count,
                                    std::vector<Edge> edges) {
  if (vertex_count < 0) {
    return absl::InvalidArgumentError("negative vertex count");
  }
  std::set<std::pair<VertexId, VertexId>> seen;
  for (Edge& edge : edges) {
    if (edge.u < 0 || edge.v < 0 || edge.u >= vertex_count ||
        edge.v >= vertex_count) {
      return absl::InvalidArgumentError(
          absl::StrCat("edge (", edge.u, ",", edge.v,
                       ") out of range for ", vertex_count, " vertices"));
    }
    if (edge.u == edge.v) {
      return absl::InvalidArgumentError(
          absl::StrCat("self-loop on vertex ", edge.u));
    }
    if (!(edge.weight > 0.0)) {
      return absl::InvalidArgumentError(absl::StrCat(
          "non-positive weight on edge (", edge.u, ",", edge.v, ")"));
    }
    if (edge.u > edge.v) std::swap(edge.u, edge.v);
    if (!seen.emplace(edge.u, edge.v).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate edge (", edge.u, ",", edge.v, ")"));
    }
  }

  Graph graph;
  graph.vertex_count_ = vertex_count;
  graph.adjacency_.resize(static_cast<std::size_t>(vertex_count));
  for (const Edge& edge : edges) {
    graph.adjacency_[edge.u].push_back({edge.v, edge.weight});
    graph.adjacency_[edge.v].push_back({edge.u, edge.weight});
    graph.total_weight_ += edge.weight;
  }
  graph.edges_ = std::move(edges);
  return graph;
}

double Graph::weighted_degree(VertexId v) const {
  double degree = 0.0;
  for (const Neighbor& neighbor : neighbors(v)) degree += neighbor.weight;
  return degree;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.vertex_count_ != b.vertex_count_ || a.edges_.size() != b.edges_.size())
    return false;
  auto key = [](const Edge& e) { return std::tie(e.u, e.v, e.weight); };
  auto less = [&](const Edge& x, const Edge& y) { return key(x) < key(y); };
  std::vector<Edge> lhs = a.edges_;
  std::vector<Edge> rhs = b.edges_;
  std::sort(lhs.begin(), lhs.end(), less);
  std::sort(rhs.begin(), rhs.end(), less);
  return lhs == rhs;
}

}  // namespace clustval
