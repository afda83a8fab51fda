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

#ifndef CLUSTVAL_ASSIGNMENT_H_
#define CLUSTVAL_ASSIGNMENT_H_

#include <cstdint>
#include <span>
#include <vector>

namespace clustval {

inline constexpr int kUnassigned = -1;

// Maximum-weight matching on a dense rows x cols matrix of non-negative
// integer weights (row-major). Every row is matched to at most one column and
// vice versa. Among all optimal matchings, returns the one whose vector of
// per-row columns is lexicographically smallest, with kUnassigned ordered
// after every real column.
std::vector<int> LexMinMaxWeightAssignment(int rows, int cols,
                                           std::span<const std::int64_t> weights);

// Optimal total weight only (Hungarian method).
std::int64_t MaxWeightAssignmentValue(int rows, int cols,
                                      std::span<const std::int64_t> weights);

}  // namespace clustval

#endif  // CLUSTVAL_ASSIGNMENT_H_
