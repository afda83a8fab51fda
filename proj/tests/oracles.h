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

// Brute-force reference implementations used only by the tests. None of them
// calls into the library code paths they are compared against.

#ifndef CLUSTVAL_TESTS_ORACLES_H_
#define CLUSTVAL_TESTS_ORACLES_H_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "clustval/clustering.h"
#include "clustval/graph.h"
#include "clustval/min_cut.h"

namespace clustval::testing {

// Erdos-Renyi graph with integer weights in [1, max_weight] (all 1 when
// max_weight == 1).
inline Graph RandomGraph(int n, double p, std::mt19937_64& rng,
                         int max_weight = 1) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> weight(1, max_weight);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng) < p) edges.push_back({u, v, double(weight(rng))});
    }
  }
  return *Graph::Create(n, std::move(edges));
}

inline Clustering RandomClustering(int n, int k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> label(0, k - 1);
  std::vector<Label> labels(static_cast<std::size_t>(n));
  for (Label& l : labels) l = label(rng);
  return Clustering(std::move(labels));
}

// Q = 1/(2W) * sum_{u,v} [A_uv - d_u d_v / (2W)] * [c_u == c_v], summed over
// ordered vertex pairs including u == v.
inline double DirectModularity(const Graph& graph, const Clustering& c) {
  const int n = graph.vertex_count();
  std::vector<double> adjacency(std::size_t(n) * n, 0.0);
  for (const Edge& e : graph.edges()) {
    adjacency[std::size_t(e.u) * n + e.v] = e.weight;
    adjacency[std::size_t(e.v) * n + e.u] = e.weight;
  }
  std::vector<double> degree(n, 0.0);
  double two_w = 0.0;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) degree[u] += adjacency[std::size_t(u) * n + v];
    two_w += degree[u];
  }
  double q = 0.0;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (c.label(u) != c.label(v)) continue;
      q += adjacency[std::size_t(u) * n + v] - degree[u] * degree[v] / two_w;
    }
  }
  return q / two_w;
}

// Calls `visit` with every set partition of {0..n-1} as a restricted growth
// string.
inline void ForEachPartition(int n,
                             const std::function<void(const Clustering&)>& visit) {
  std::vector<Label> labels(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> recurse = [&](int i, int used) {
    if (i == n) {
      visit(Clustering(labels));
      return;
    }
    for (int l = 0; l <= used && l < n; ++l) {
      labels[i] = l;
      recurse(i + 1, std::max(used, l + 1));
    }
  };
  recurse(0, 0);
}

inline std::int64_t PairLoopAgreement(const Clustering& a, const Clustering& b) {
  std::int64_t agree = 0;
  for (std::size_t u = 0; u < a.size(); ++u) {
    for (std::size_t v = u + 1; v < a.size(); ++v) {
      const bool together_a = a.label(u) == a.label(v);
      const bool together_b = b.label(u) == b.label(v);
      if (together_a == together_b) ++agree;
    }
  }
  return agree;
}

// Largest number of vertices that can agree with `ref` under any injective
// relabeling of `c`, by trying every permutation.
inline std::int64_t BestMatchByPermutation(const Clustering& c,
                                           const Clustering& ref) {
  const std::vector<Label> rows = c.DistinctLabels();
  const std::vector<Label> cols = ref.DistinctLabels();
  // Pad the column list with "no partner" slots so every row has a target.
  const std::size_t size = std::max(rows.size(), cols.size());
  std::vector<int> perm(size);
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t best = 0;
  do {
    std::int64_t matched = 0;
    for (std::size_t x = 0; x < c.size(); ++x) {
      const std::size_t r = static_cast<std::size_t>(
          std::find(rows.begin(), rows.end(), c.label(x)) - rows.begin());
      const int col = perm[r];
      if (static_cast<std::size_t>(col) < cols.size() &&
          cols[col] == ref.label(x)) {
        ++matched;
      }
    }
    best = std::max(best, matched);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Minimum over all bipartitions, by enumerating subsets that contain vertex 0.
inline double BruteMinCut(const WeightMatrix& w) {
  const int n = static_cast<int>(w.size());
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
    // Bit i of mask says whether vertex i + 1 joins vertex 0's side; the full
    // side (all ones) is not a proper subset.
    if (mask == (1u << (n - 1)) - 1) continue;
    auto on_side = [&](int v) { return v == 0 || ((mask >> (v - 1)) & 1u); };
    double cut = 0.0;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (on_side(u) != on_side(v)) cut += w.at(u, v);
      }
    }
    best = std::min(best, cut);
  }
  // With mask == 0 the side is {0} alone.
  double single = 0.0;
  for (int v = 1; v < n; ++v) single += w.at(0, v);
  return std::min(best, single);
}

// All-pairs hop distances by Floyd-Warshall; unreachable = n.
inline std::vector<int> FloydWarshallHops(const Graph& graph) {
  const int n = graph.vertex_count();
  const int inf = std::numeric_limits<int>::max() / 4;
  std::vector<int> d(std::size_t(n) * n, inf);
  for (int v = 0; v < n; ++v) d[std::size_t(v) * n + v] = 0;
  for (const Edge& e : graph.edges()) {
    d[std::size_t(e.u) * n + e.v] = 1;
    d[std::size_t(e.v) * n + e.u] = 1;
  }
  for (int m = 0; m < n; ++m) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        d[std::size_t(i) * n + j] =
            std::min(d[std::size_t(i) * n + j],
                     d[std::size_t(i) * n + m] + d[std::size_t(m) * n + j]);
      }
    }
  }
  for (int& x : d) {
    if (x >= inf) x = n;
  }
  return d;
}

// Shortest hop count from `source` by enumerating every simple path.
inline std::vector<int> PathEnumerationHops(const Graph& graph, int source) {
  const int n = graph.vertex_count();
  std::vector<int> best(n, n);
  std::vector<bool> on_path(n, false);
  std::function<void(int, int)> walk = [&](int v, int length) {
    best[v] = std::min(best[v], length);
    on_path[v] = true;
    for (const Neighbor& nb : graph.neighbors(v)) {
      if (!on_path[nb.vertex]) walk(nb.vertex, length + 1);
    }
    on_path[v] = false;
  };
  walk(source, 0);
  return best;
}

inline double DirectDunn(const Graph& graph, const Clustering& c) {
  const int n = graph.vertex_count();
  const std::vector<int> d = FloydWarshallHops(graph);
  int between = std::numeric_limits<int>::max();
  int within = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      const int duv = d[std::size_t(u) * n + v];
      if (c.label(u) == c.label(v)) {
        within = std::max(within, duv);
      } else {
        between = std::min(between, duv);
      }
    }
  }
  return double(between) / double(within);
}

}  // namespace clustval::testing

#endif  // CLUSTVAL_TESTS_ORACLES_H_
