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

#ifndef CLUSTVAL_CLUSTERING_H_
#define CLUSTVAL_CLUSTERING_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/status.h"

namespace clustval {

using Label = std::int32_t;

// Hard assignment of every vertex to a cluster label. Labels are arbitrary
// non-negative integers; `num_clusters` counts the distinct labels present.
class Clustering {
 public:
  Clustering() = default;
  explicit Clustering(std::vector<Label> labels);

  std::size_t size() const { return labels_.size(); }
  std::span<const Label> labels() const { return labels_; }
  Label label(std::size_t vertex) const { return labels_[vertex]; }
  std::size_t num_clusters() const { return num_clusters_; }

  // Relabels clusters to 0..k-1 in order of first appearance.
  Clustering Canonical() const;
  bool IsCanonical() const;

  // Distinct labels in ascending order.
  std::vector<Label> DistinctLabels() const;

  friend bool operator==(const Clustering&, const Clustering&) = default;

 private:
  std::vector<Label> labels_;
  std::size_t num_clusters_ = 0;
};

// Canonical relabeling of a raw label sequence (first appearance order).
std::vector<Label> CanonicalLabels(std::span<const Label> labels);

absl::Status CheckSameLength(const Clustering& a, const Clustering& b);

}  // namespace clustval

#endif  // CLUSTVAL_CLUSTERING_H_
