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

#include "clustval/min_cut.h"

#include <algorithm>
#include <numeric>

namespace clustval {

WeightMatrix WeightMatrix::FromMetaGraph(const MetaGraph& meta) {
  WeightMatrix matrix(meta.size());
  for (std::size_t i = 0; i < meta.size(); ++i) {
    for (std::size_t j = 0; j < meta.size(); ++j) {
      matrix.weights_[i * meta.size() + j] = static_cast<double>(meta.at(i, j));
    }
  }
  return matrix;
}

WeightMatrix WeightMatrix::FromGraph(const Graph& graph) {
  WeightMatrix matrix(static_cast<std::size_t>(graph.vertex_count()));
  for (const Edge& edge : graph.edges()) {
    matrix.Set(edge.u, edge.v, edge.weight);
  }
  return matrix;
}

WeightMatrix WeightMatrix::Induced(std::span<const int> vertices) const {
  WeightMatrix sub(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      sub.weights_[i * vertices.size() + j] = at(vertices[i], vertices[j]);
    }
  }
  return sub;
}

double WeightMatrix::TotalWeight() const {
  double total = 0.0;
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = i + 1; j < size_; ++j) total += at(i, j);
  }
  return total;
}

WeightMatrix WeightMatrix::Scaled(double factor) const {
  WeightMatrix scaled = *this;
  for (double& w : scaled.weights_) w *= factor;
  return scaled;
}

absl::StatusOr<Cut> MinCut(const WeightMatrix& weights) {
  const std::size_t n = weights.size();
  if (n < 2) {
    return absl::InvalidArgumentError("min cut needs at least two vertices");
  }
  // Working copy; merged vertices accumulate rows/columns.
  std::vector<double> w(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w[i * n + j] = weights.at(i, j);
  }
  std::vector<std::vector<int>> members(n);
  for (std::size_t i = 0; i < n; ++i) members[i] = {static_cast<int>(i)};
  std::vector<std::size_t> active(n);
  std::iota(active.begin(), active.end(), 0);

  Cut best;
  bool have_best = false;
  std::vector<double> attachment(n);
  std::vector<bool> added(n);
  while (active.size() > 1) {
    // Maximum adjacency ordering starting from active[0].
    std::fill(attachment.begin(), attachment.end(), 0.0);
    std::fill(added.begin(), added.end(), false);
    std::size_t previous = active[0];
    std::size_t last = active[0];
    added[last] = true;
    for (std::size_t v : active) attachment[v] = w[last * n + v];
    for (std::size_t step = 1; step < active.size(); ++step) {
      std::size_t next = n;
      for (std::size_t v : active) {
        if (added[v]) continue;
        if (next == n || attachment[v] > attachment[next]) next = v;
      }
      previous = last;
      last = next;
      added[last] = true;
      if (step + 1 == active.size()) break;
      for (std::size_t v : active) {
        if (!added[v]) attachment[v] += w[last * n + v];
      }
    }
    const double phase_cut = attachment[last];
    if (!have_best || phase_cut < best.weight) {
      have_best = true;
      best.weight = phase_cut;
      best.side = members[last];
    }
    // Merge `last` into `previous`.
    for (std::size_t v : active) {
      w[previous * n + v] += w[last * n + v];
      w[v * n + previous] = w[previous * n + v];
    }
    w[previous * n + previous] = 0.0;
    members[previous].insert(members[previous].end(), members[last].begin(),
                             members[last].end());
    active.erase(std::find(active.begin(), active.end(), last));
  }

  std::sort(best.side.begin(), best.side.end());
  std::vector<bool> in_side(n, false);
  for (int v : best.side) in_side[v] = true;
  const std::size_t other = n - best.side.size();
  if (other < best.side.size() || (other == best.side.size() && !in_side[0])) {
    std::vector<int> complement;
    for (std::size_t v = 0; v < n; ++v) {
      if (!in_side[v]) complement.push_back(static_cast<int>(v));
    }
    best.side = std::move(complement);
  }
  return best;
}

}  // namespace clustval
