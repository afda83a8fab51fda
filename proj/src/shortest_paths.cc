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

#include "clustval/shortest_paths.h"

#include <deque>

#include "absl/strings/str_cat.h"

namespace clustval {
namespace {

void Bfs(const Graph& graph, VertexId source, std::span<std::int32_t> dist) {
  const std::int32_t unreachable = graph.vertex_count();
  std::fill(dist.begin(), dist.end(), unreachable);
  std::deque<VertexId> queue;
  dist[source] = 0;
  queue.push_back(source);
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (const Neighbor& neighbor : graph.neighbors(u)) {
      if (dist[neighbor.vertex] == unreachable) {
        dist[neighbor.vertex] = dist[u] + 1;
        queue.push_back(neighbor.vertex);
      }
    }
  }
}

}  // namespace

absl::StatusOr<std::vector<std::int32_t>> ShortestPathDistances(
    const Graph& graph, VertexId source) {
  if (source < 0 || source >= graph.vertex_count()) {
    return absl::OutOfRangeError(
        absl::StrCat("source ", source, " out of range"));
  }
  std::vector<std::int32_t> dist(static_cast<std::size_t>(graph.vertex_count()));
  Bfs(graph, source, dist);
  return dist;
}

std::vector<std::int32_t> AllPairsHopDistances(const Graph& graph) {
  const auto n = static_cast<std::size_t>(graph.vertex_count());
  std::vector<std::int32_t> dist(n * n);
  for (std::size_t s = 0; s < n; ++s) {
    Bfs(graph, static_cast<VertexId>(s),
        std::span<std::int32_t>(dist).subspan(s * n, n));
  }
  return dist;
}

}  // namespace clustval
