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

#ifndef CLUSTVAL_GENERATORS_H_
#define CLUSTVAL_GENERATORS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "clustval/clustering.h"
#include "clustval/graph.h"

namespace clustval {

struct PlantedConfig {
  VertexId n = 0;
  std::int32_t k = 1;
  double p_in = 0.0;
  double p_out = 0.0;
  std::uint64_t seed = 0;
};

absl::Status ValidatePlantedConfig(const PlantedConfig& config);

// Planted-partition random graph. Vertices are split into k contiguous blocks
// whose sizes differ by at most one (the first n % k blocks are larger). Pairs
// u < v are visited in lexicographic order and joined with probability p_in
// inside a block and p_out across blocks. Returns the graph and the block
// assignment.
absl::StatusOr<std::pair<Graph, Clustering>> GeneratePlantedPartition(
    const PlantedConfig& config);

// Subgraph induced on a set of vertices.
struct Phase {
  // Sorted global ids; local vertex i of `graph` is vertices[i].
  std::vector<VertexId> vertices;
  Graph graph;
};

// Nested snapshots of a graph revealed over time. The last phase is the full
// graph.
struct PhasedDataset {
  std::vector<Phase> phases;
  std::optional<Clustering> truth;
};

// Induced subgraph on `vertices` (sorted, distinct, in range). Edges keep the
// order they have in `graph`.
absl::StatusOr<Phase> InducedPhase(const Graph& graph,
                                   std::vector<VertexId> vertices);

// Phase i reveals the first ceil(fraction_i * n) vertices of one seeded
// uniform permutation, so phases are nested by construction.
absl::StatusOr<PhasedDataset> GeneratePhasedDataset(
    const Graph& graph, std::optional<Clustering> truth,
    std::span<const double> phase_fractions, std::uint64_t seed);

}  // namespace clustval

#endif  // CLUSTVAL_GENERATORS_H_
