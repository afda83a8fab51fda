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

#ifndef CLUSTVAL_MIN_CUT_H_
#define CLUSTVAL_MIN_CUT_H_

#include <cstddef>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "clustval/graph.h"
#include "clustval/meta_similarity.h"

namespace clustval {

// Dense symmetric non-negative weight matrix with zero diagonal.
class WeightMatrix {
 public:
  WeightMatrix() = default;
  explicit WeightMatrix(std::size_t size)
      : size_(size), weights_(size * size, 0.0) {}

  static WeightMatrix FromMetaGraph(const MetaGraph& meta);
  static WeightMatrix FromGraph(const Graph& graph);

  std::size_t size() const { return size_; }
  double at(std::size_t i, std::size_t j) const {
    return weights_[i * size_ + j];
  }
  void Set(std::size_t i, std::size_t j, double weight) {
    weights_[i * size_ + j] = weight;
    weights_[j * size_ + i] = weight;
  }

  // Submatrix on `vertices`; local index i is vertices[i].
  WeightMatrix Induced(std::span<const int> vertices) const;
  // Sum over unordered pairs.
  double TotalWeight() const;
  WeightMatrix Scaled(double factor) const;

 private:
  std::size_t size_ = 0;
  std::vector<double> weights_;
};

struct Cut {
  double weight = 0.0;
  // Smaller side of the bipartition, sorted. On equal sizes, the side that
  // contains vertex 0.
  std::vector<int> side;
};

// Global minimum cut by Stoer-Wagner. Requires at least two vertices. A
// disconnected matrix yields a zero-weight cut. Deterministic: phases start
// at local vertex 0 and ties pick the smallest index.
absl::StatusOr<Cut> MinCut(const WeightMatrix& weights);

}  // namespace clustval

#endif  // CLUSTVAL_MIN_CUT_H_
