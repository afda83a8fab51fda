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

// Shared test fixtures.

#ifndef CLUSTVAL_TESTS_FIXTURES_H_
#define CLUSTVAL_TESTS_FIXTURES_H_

#include <cstdint>
#include <random>
#include <vector>

#include "clustval/meta_similarity.h"
#include "clustval/min_cut.h"

namespace clustval::testing {

// Pair-agreement matrix of ten clusterings of a 1133-vertex email
// network. Row/column i is run i (0-indexed).
inline MetaGraph EmailSimilarityMatrix() {
  const std::vector<std::int64_t> w = {
      0,      295103, 256331, 256133, 271857, 276110, 290615, 299755, 264138, 238910,
      295103, 0,      306462, 300546, 330041, 322390, 351844, 364421, 316995, 297961,
      256331, 306462, 0,      266670, 283163, 286792, 305892, 319234, 281329, 249949,
      256133, 300546, 266670, 0,      288318, 279170, 300185, 316771, 278838, 254273,
      271857, 330041, 283163, 288318, 0,      298401, 317803, 331593, 298879, 275383,
      276110, 322390, 286792, 279170, 298401, 0,      332039, 335560, 298008, 269108,
      290615, 351844, 305892, 300185, 317803, 332039, 0,      366598, 318968, 290417,
      299755, 364421, 319234, 316771, 331593, 335560, 366598, 0,      327866, 295330,
      264138, 316995, 281329, 278838, 298879, 298008, 318968, 327866, 0,      266450,
      238910, 297961, 249949, 254273, 275383, 269108, 290417, 295330, 266450, 0};
  return *MetaGraph::FromMatrix(10, w);
}

// Reference grouping of the matrix above with 0-indexed runs: one
// group {1, 6, 7} and seven singletons.
inline std::vector<std::vector<int>> EmailGrouping() {
  return {{0}, {1, 6, 7}, {2}, {3}, {4}, {5}, {8}, {9}};
}

// Two planted groups {0..4} and {5..9}: within weights 100 +- 10, cross
// weights 1 +- 1, drawn uniformly.
inline WeightMatrix PlantedMetaGraph(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> within(90.0, 110.0);
  std::uniform_real_distribution<double> cross(0.0, 2.0);
  WeightMatrix w(10);
  for (int i = 0; i < 10; ++i) {
    for (int j = i + 1; j < 10; ++j) {
      w.Set(i, j, (i < 5) == (j < 5) ? within(rng) : cross(rng));
    }
  }
  return w;
}

}  // namespace clustval::testing

#endif  // CLUSTVAL_TESTS_FIXTURES_H_
