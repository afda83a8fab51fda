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

#ifndef CLUSTVAL_VALIDITY_H_
#define CLUSTVAL_VALIDITY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "clustval/alignment.h"
#include "clustval/clusterers.h"
#include "clustval/clustering.h"
#include "clustval/graph.h"
#include "clustval/meta_similarity.h"
#include "clustval/wgc.h"

namespace clustval {

// Edge-weight fractions between clusters. Rows and columns follow the
// clustering's distinct labels in ascending order. e(i,i) is the fraction of
// the total weight inside cluster i and e(i,j) is half the fraction between
// i and j, so the matrix is symmetric and sums to one. a(i) = sum_j e(i,j) is
// the fraction of edge ends attached to cluster i.
struct ModularityTerms {
  std::vector<Label> labels;
  std::vector<double> e;  // row-major k x k
  std::vector<double> a;

  std::size_t k() const { return labels.size(); }
  double at(std::size_t i, std::size_t j) const { return e[i * k() + j]; }
};

// Fails with FailedPrecondition on an edgeless graph.
absl::StatusOr<ModularityTerms> ComputeModularityTerms(
    const Graph& graph, const Clustering& clustering);

// Newman modularity: sum_i (e(i,i) - a(i)^2).
absl::StatusOr<double> Modularity(const Graph& graph,
                                  const Clustering& clustering);

// Smallest hop distance between vertices of different clusters divided by
// the largest hop distance between vertices of the same cluster. Unreachable
// pairs count as distance n. Needs at least two clusters and a positive
// diameter (not all singletons).
absl::StatusOr<double> DunnIndex(const Graph& graph,
                                 const Clustering& clustering);

// Consensus pick: the largest group wins (ties: larger total internal
// similarity, then smaller lowest member); within it, the member with the
// largest summed similarity to the rest of its group (ties: smaller index).
absl::StatusOr<int> SelectMostSimilar(const MetaGraph& meta,
                                      const MetaClustering& groups);

struct RunValidity {
  std::optional<double> q;
  std::optional<double> dunn;
  std::optional<ErrorRate> error;
};

struct ValidityReport {
  std::vector<RunValidity> runs;
  int selected = 0;
  // Run with the largest Q (smallest index on ties), when Q is defined.
  std::optional<int> argmax_q;
  MetaClustering meta_clustering;
  std::vector<std::size_t> group_sizes;
};

// Per-run measures plus the consensus selection. `graph` may be absent (no
// Q/Dunn) and `reference` may be absent (no error rates). With a graph, Q is
// omitted for an edgeless graph and Dunn for runs where it is undefined.
absl::StatusOr<ValidityReport> BuildValidityReport(
    const Graph* graph, std::span<const Clustering> runs,
    const Clustering* reference, const MetaGraph& meta,
    const MetaClustering& groups);

// Key-value text: a [run i] section per run followed by [consensus].
std::string SerializeReport(const ValidityReport& report);

// Two-row tables ("clustering,0,1,..." and "value,...") for error counts,
// Q and Dunn. Undefined entries are left empty.
std::string ErrorRateTableCsv(const ValidityReport& report);
std::string ModularityTableCsv(const ValidityReport& report);
std::string DunnTableCsv(const ValidityReport& report);

}  // namespace clustval

#endif  // CLUSTVAL_VALIDITY_H_
