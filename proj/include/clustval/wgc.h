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

#ifndef CLUSTVAL_WGC_H_
#define CLUSTVAL_WGC_H_

#include <string>
#include <variant>
#include <vector>

#include "absl/status/statusor.h"
#include "clustval/min_cut.h"

namespace clustval {

struct TargetGroups {
  int count = 1;
};
struct RelativeCutThreshold {
  double value = 0.0;
};
using StopRule = std::variant<TargetGroups, RelativeCutThreshold>;

// Partition of the meta-graph vertices 0..m-1. Groups are sorted by their
// smallest member and members are sorted ascending.
struct MetaClustering {
  std::vector<std::vector<int>> groups;

  friend bool operator==(const MetaClustering&,
                         const MetaClustering&) = default;
};

// Recursive minimum-cut bisection. Each group with two or more members is
// scored by its relative cut (min cut weight / internal weight, 0 for a group
// with no internal weight). The group with the smallest relative cut is split
// along its min cut; ties go to the group with the smaller lowest member.
// TargetGroups stops when the group count is reached. RelativeCutThreshold
// stops once every splittable group's relative cut exceeds the threshold.
absl::StatusOr<MetaClustering> WgcCluster(const WeightMatrix& weights,
                                          const StopRule& stop);

// Same, returning every intermediate partition (first: one group).
absl::StatusOr<std::vector<MetaClustering>> WgcClusterHistory(
    const WeightMatrix& weights, const StopRule& stop);

// "group,member" CSV with header.
std::string SerializeMetaClusteringCsv(const MetaClustering& clustering);
// One line: groups separated by " | ", members by ','.
std::string MetaClusteringSummary(const MetaClustering& clustering);

}  // namespace clustval

#endif  // CLUSTVAL_WGC_H_
