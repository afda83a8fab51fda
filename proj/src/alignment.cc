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

#include "clustval/alignment.h"

#include <algorithm>

#include "absl/strings/str_cat.h"
#include "clustval/assignment.h"
#include "clustval/status_macros.h"

namespace clustval {
namespace {

std::size_t IndexOf(const std::vector<Label>& sorted, Label label) {
  return static_cast<std::size_t>(
      std::lower_bound(sorted.begin(), sorted.end(), label) - sorted.begin());
}

}  // namespace

absl::StatusOr<int> MembershipIndicator(const Clustering& clustering,
                                        VertexId x, Label z) {
  if (x < 0 || static_cast<std::size_t>(x) >= clustering.size()) {
    return absl::OutOfRangeError(absl::StrCat("vertex ", x, " out of range"));
  }
  return clustering.label(static_cast<std::size_t>(x)) == z ? 1 : 0;
}

absl::StatusOr<OverlapMatrix> ComputeOverlapMatrix(
    const Clustering& clustering, const Clustering& reference) {
  RETURN_IF_ERROR(CheckSameLength(clustering, reference));
  OverlapMatrix overlap;
  overlap.row_labels = clustering.DistinctLabels();
  overlap.col_labels = reference.DistinctLabels();
  overlap.counts.assign(overlap.rows() * overlap.cols(), 0);
  for (std::size_t x = 0; x < clustering.size(); ++x) {
    const std::size_t i = IndexOf(overlap.row_labels, clustering.label(x));
    const std::size_t j = IndexOf(overlap.col_labels, reference.label(x));
    ++overlap.counts[i * overlap.cols() + j];
  }
  return overlap;
}

absl::StatusOr<Alignment> AlignLabels(const Clustering& clustering,
                                      const Clustering& reference) {
  ASSIGN_OR_RETURN(OverlapMatrix overlap,
                   ComputeOverlapMatrix(clustering, reference));
  const std::vector<int> assignment = LexMinMaxWeightAssignment(
      static_cast<int>(overlap.rows()), static_cast<int>(overlap.cols()),
      overlap.counts);

  Alignment alignment;
  Label fresh = overlap.col_labels.empty() ? 0 : overlap.col_labels.back() + 1;
  for (std::size_t i = 0; i < overlap.rows(); ++i) {
    const Label target = assignment[i] == kUnassigned
                             ? fresh++
                             : overlap.col_labels[assignment[i]];
    alignment.mapping.emplace(overlap.row_labels[i], target);
    if (assignment[i] != kUnassigned) {
      alignment.matched += overlap.at(i, static_cast<std::size_t>(assignment[i]));
    }
  }
  std::vector<Label> relabeled;
  relabeled.reserve(clustering.size());
  for (Label label : clustering.labels()) {
    relabeled.push_back(alignment.mapping.at(label));
  }
  alignment.aligned = Clustering(std::move(relabeled));
  return alignment;
}

absl::StatusOr<ErrorRate> ComputeErrorRate(const Clustering& aligned,
                                           const Clustering& reference) {
  RETURN_IF_ERROR(CheckSameLength(aligned, reference));
  ErrorRate rate;
  for (std::size_t x = 0; x < aligned.size(); ++x) {
    if (aligned.label(x) != reference.label(x)) ++rate.count;
  }
  rate.fraction = aligned.size() == 0
                      ? 0.0
                      : static_cast<double>(rate.count) /
                            static_cast<double>(aligned.size());
  return rate;
}

absl::StatusOr<ErrorRate> AlignedErrorRate(const Clustering& clustering,
                                           const Clustering& reference) {
  ASSIGN_OR_RETURN(Alignment alignment, AlignLabels(clustering, reference));
  return ComputeErrorRate(alignment.aligned, reference);
}

}  // namespace clustval
