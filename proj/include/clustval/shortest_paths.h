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

#ifndef CLUSTVAL_SHORTEST_PATHS_H_
#define CLUSTVAL_SHORTEST_PATHS_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "clustval/graph.h"

namespace clustval {

// Unweighted hop distances from `source` by breadth-first search. Unreachable
// vertices get vertex_count, which exceeds every finite path length.
absl::StatusOr<std::vector<std::int32_t>> ShortestPathDistances(
    const Graph& graph, VertexId source);

// Row-major n x n hop-distance matrix with the same sentinel.
std::vector<std::int32_t> AllPairsHopDistances(const Graph& graph);

}  // namespace clustval

#endif  // CLUSTVAL_SHORTEST_PATHS_H_
