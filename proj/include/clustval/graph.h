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

#ifndef CLUSTVAL_GRAPH_H_
#define CLUSTVAL_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"

namespace clustval {

using VertexId = std::int32_t;

struct Edge {
  VertexId u;
  VertexId v;
  double weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  VertexId vertex;
  double weight;
};

// Undirected weighted simple graph over vertex ids [0, vertex_count).
//
// Edges are stored with u < v in insertion order. There are no self-loops, no
// parallel edges, and every weight is strictly positive. Instances are
// immutable once created.
class Graph {
 public:
  Graph() = default;

  // Validates `edges` and builds the adjacency lists. Edges may be given in
  // either orientation.
  static absl::StatusOr<Graph> Create(VertexId vertex_count,
                                      std::vector<Edge> edges);

  VertexId vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Neighbor> neighbors(VertexId v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  double total_weight() const { return total_weight_; }
  // Sum of incident edge weights.
  double weighted_degree(VertexId v) const;

  // Same vertex count and same edge set (order-insensitive).
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  VertexId vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  double total_weight_ = 0.0;
};

}  // namespace clustval

#endif  // CLUSTVAL_GRAPH_H_
