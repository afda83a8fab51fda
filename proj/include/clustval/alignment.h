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

#ifndef CLUSTVAL_ALIGNMENT_H_
#define CLUSTVAL_ALIGNMENT_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "absl/status/statusor.h"
#include "clustval/clustering.h"
#include "clustval/graph.h"

namespace clustval {

// 1 if vertex x carries label z in `clustering`, else 0.
absl::StatusOr<int> MembershipIndicator(const Clustering& clustering,
                                        VertexId x, Label z);

// Contingency counts between a clustering (rows) and a reference (columns).
struct OverlapMatrix {
  std::vector<Label> row_labels;  // distinct labels of the clustering
  std::vector<Label> col_labels;  // distinct labels of the reference
  std::vector<std::int64_t> counts;  // row-major

  std::size_t rows() const { return row_labels.size(); }
  std::size_t cols() const { return col_labels.size(); }
  std::int64_t at(std::size_t row, std::size_t col) const {
    return counts[row * cols() + col];
  }
};

absl::StatusOr<OverlapMatrix> ComputeOverlapMatrix(const Clustering& clustering,
                                                   const Clustering& reference);

struct Alignment {
  Clustering aligned;
  // Original label -> new label. Labels without a partner in the reference
  // map to fresh labels above the reference's largest label, assigned in
  // ascending order of the original label.
  std::map<Label, Label> mapping;
  // Vertices whose new label equals the reference label.
  std::int64_t matched = 0;
};

// Relabels `clustering` to agree with `reference` as much as possible: the
// label mapping is a maximum-weight assignment on the overlap matrix, and the
// lexicographically smallest such mapping wins ties.
absl::StatusOr<Alignment> AlignLabels(const Clustering& clustering,
                                      const Clustering& reference);

struct ErrorRate {
  std::int64_t count = 0;
  double fraction = 0.0;
};

// Counts positions whose labels differ. `aligned` must already be aligned.
absl::StatusOr<ErrorRate> ComputeErrorRate(const Clustering& aligned,
                                           const Clustering& reference);

// AlignLabels followed by ComputeErrorRate.
absl::StatusOr<ErrorRate> AlignedErrorRate(const Clustering& clustering,
                                           const Clustering& reference);

}  // namespace clustval

#endif  // CLUSTVAL_ALIGNMENT_H_
