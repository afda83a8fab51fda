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

#include "clustval/generators.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "absl/strings/str_cat.h"
#include "clustval/random.h"
#include "clustval/status_macros.h"

namespace clustval {

absl::Status ValidatePlantedConfig(const PlantedConfig& config) {
  if (config.n < 0) return absl::InvalidArgumentError("n must be >= 0");
  if (config.k < 1) return absl::InvalidArgumentError("k must be >= 1");
  if (!(config.p_out >= 0.0 && config.p_out <= config.p_in &&
        config.p_in <= 1.0)) {
    return absl::InvalidArgumentError("need 0 <= p_out <= p_in <= 1");
  }
  return absl::OkStatus();
}

absl::StatusOr<std::pair<Graph, Clustering>> GeneratePlantedPartition(
    const PlantedConfig& config) {
  RETURN_IF_ERROR(ValidatePlantedConfig(config));
  const VertexId n = config.n;
  const std::int32_t base = n / config.k;
  const std::int32_t larger = n % config.k;

  std::vector<Label> blocks;
  blocks.reserve(static_cast<std::size_t>(n));
  for (Label b = 0; b < config.k; ++b) {
    const std::int32_t size = base + (b < larger ? 1 : 0);
    blocks.insert(blocks.end(), static_cast<std::size_t>(size), b);
  }

  Rng rng(config.seed);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      const double p = blocks[u] == blocks[v] ? config.p_in : config.p_out;
      if (rng.Bernoulli(p)) edges.push_back({u, v, 1.0});
    }
  }
  ASSIGN_OR_RETURN(Graph graph, Graph::Create(n, std::move(edges)));
  return std::make_pair(std::move(graph), Clustering(std::move(blocks)));
}

absl::StatusOr<Phase> InducedPhase(const Graph& graph,
                                   std::vector<VertexId> vertices) {
  const VertexId n = graph.vertex_count();
  std::vector<VertexId> local(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const VertexId v = vertices[i];
    if (v < 0 || v >= n) {
      return absl::InvalidArgumentError(absl::StrCat("vertex ", v,
                                                     " out of range"));
    }
    if (i > 0 && vertices[i - 1] >= v) {
      return absl::InvalidArgumentError("phase vertices must be sorted");
    }
    local[v] = static_cast<VertexId>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& edge : graph.edges()) {
    if (local[edge.u] >= 0 && local[edge.v] >= 0) {
      edges.push_back({local[edge.u], local[edge.v], edge.weight});
    }
  }
  ASSIGN_OR_RETURN(
      Graph induced,
      Graph::Create(static_cast<VertexId>(vertices.size()), std::move(edges)));
  return Phase{std::move(vertices), std::move(induced)};
}

absl::StatusOr<PhasedDataset> GeneratePhasedDataset(
    const Graph& graph, std::optional<Clustering> truth,
    std::span<const double> phase_fractions, std::uint64_t seed) {
  if (phase_fractions.empty()) {
    return absl::InvalidArgumentError("no phase fractions");
  }
  for (std::size_t i = 0; i < phase_fractions.size(); ++i) {
    const double f = phase_fractions[i];
    if (!(f > 0.0 && f <= 1.0)) {
      return absl::InvalidArgumentError(
          absl::StrCat("phase fraction ", f, " outside (0, 1]"));
    }
    if (i > 0 && !(f > phase_fractions[i - 1])) {
      return absl::InvalidArgumentError(
          "phase fractions must be strictly increasing");
    }
  }
  if (phase_fractions.back() != 1.0) {
    return absl::InvalidArgumentError("last phase fraction must be 1");
  }
  const VertexId n = graph.vertex_count();
  if (truth.has_value() && truth->size() != static_cast<std::size_t>(n)) {
    return absl::InvalidArgumentError("truth does not match the graph");
  }

  std::vector<VertexId> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  rng.Shuffle(std::span<VertexId>(order));

  PhasedDataset dataset;
  for (double f : phase_fractions) {
    // The epsilon keeps products like 0.7 * 10 from rounding up to 8.
    const auto count = static_cast<std::size_t>(std::min<double>(
        n, std::ceil(f * static_cast<double>(n) - 1e-9)));
    std::vector<VertexId> vertices(order.begin(), order.begin() + count);
    std::sort(vertices.begin(), vertices.end());
    ASSIGN_OR_RETURN(Phase phase, InducedPhase(graph, std::move(vertices)));
    dataset.phases.push_back(std::move(phase));
  }
  dataset.truth = std::move(truth);
  return dataset;
}

}  // namespace clustval
