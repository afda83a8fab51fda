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

#ifndef CLUSTVAL_META_SIMILARITY_H_
#define CLUSTVAL_META_SIMILARITY_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "clustval/clusterers.h"
#include "clustval/clustering.h"

namespace clustval {

// Number of unordered vertex pairs on which the two clusterings agree, i.e.
// both put the pair together or both keep it apart. Computed from the
// contingency table in O(n + k_a * k_b).
absl::StatusOr<std::int64_t> PairAgreement(const Clustering& a,
                                           const Clustering& b);

// Complete weighted graph whose vertices are clusterings. Symmetric,
// non-negative, zero diagonal.
class MetaGraph {
 public:
  MetaGraph() = default;

  static absl::StatusOr<MetaGraph> FromMatrix(std::size_t size,
                                              std::vector<std::int64_t> weights);

  std::size_t size() const { return size_; }
  std::int64_t at(std::size_t i, std::size_t j) const {
    return weights_[i * size_ + j];
  }
  std::span<const std::int64_t> weights() const { return weights_; }

  friend bool operator==(const MetaGraph&, const MetaGraph&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::int64_t> weights_;
};

absl::StatusOr<MetaGraph> BuildMetaGraph(std::span<const Clustering> clusterings);
absl::StatusOr<MetaGraph> BuildMetaGraph(const Ensemble& ensemble);

// m lines of m comma-separated integers, no header.
std::string SerializeMetaGraphCsv(const MetaGraph& meta);
// Also accepts whitespace-separated rows (e.g. a pasted table).
absl::StatusOr<MetaGraph> ParseMetaGraphCsv(const std::string& text);

}  // namespace clustval

#endif  // CLUSTVAL_META_SIMILARITY_H_
