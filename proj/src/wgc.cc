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

#include "clustval/wgc.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "clustval/status_macros.h"

namespace clustval {
namespace {

struct Candidate {
  std::size_t group = 0;
  // Relative cut as the fraction cut / internal; a group without internal
  // weight scores 0 / 1.
  double cut = 0.0;
  double internal = 1.0;
  std::vector<int> side;  // global ids
};

// a.cut / a.internal < b.cut / b.internal, without dividing.
bool CheaperThan(const Candidate& a, const Candidate& b) {
  return a.cut * b.internal < b.cut * a.internal;
}

void Canonicalize(MetaClustering& clustering) {
  for (auto& group : clustering.groups) std::sort(group.begin(), group.end());
  std::sort(clustering.groups.begin(), clustering.groups.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

absl::Status ValidateStop(const StopRule& stop, std::size_t m) {
  if (const auto* target = std::get_if<TargetGroups>(&stop)) {
    if (target->count < 1 || static_cast<std::size_t>(target->count) > m) {
      return absl::InvalidArgumentError(absl::StrCat(
          "target group count ", target->count, " outside [1, ", m, "]"));
    }
  } else {
    const double threshold = std::get<RelativeCutThreshold>(stop).value;
    if (!(threshold >= 0.0) || !std::isfinite(threshold)) {
      return absl::InvalidArgumentError("threshold must be finite and >= 0");
    }
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<std::vector<MetaClustering>> WgcClusterHistory(
    const WeightMatrix& weights, const StopRule& stop) {
  const std::size_t m = weights.size();
  if (m == 0) return absl::InvalidArgumentError("empty meta-graph");
  RETURN_IF_ERROR(ValidateStop(stop, m));

  MetaClustering current;
  current.groups.emplace_back(m);
  std::iota(current.groups[0].begin(), current.groups[0].end(), 0);
  std::vector<MetaClustering> history = {current};

  std::map<std::vector<int>, Candidate> cache;
  auto evaluate = [&](const std::vector<int>& group) -> absl::StatusOr<Candidate> {
    if (auto it = cache.find(group); it != cache.end()) return it->second;
    const WeightMatrix sub = weights.Induced(group);
    ASSIGN_OR_RETURN(Cut cut, MinCut(sub));
    Candidate candidate;
    const double internal = sub.TotalWeight();
    if (internal > 0.0) {
      candidate.cut = cut.weight;
      candidate.internal = internal;
    }
    for (int local : cut.side) candidate.side.push_back(group[local]);
    cache.emplace(group, candidate);
    return candidate;
  };

  while (true) {
    if (const auto* target = std::get_if<TargetGroups>(&stop)) {
      if (current.groups.size() >= static_cast<std::size_t>(target->count)) {
        break;
      }
    }
    std::optional<Candidate> chosen;
    for (std::size_t g = 0; g < current.groups.size(); ++g) {
      if (current.groups[g].size() < 2) continue;
      ASSIGN_OR_RETURN(Candidate candidate, evaluate(current.groups[g]));
      candidate.group = g;
      if (const auto* threshold = std::get_if<RelativeCutThreshold>(&stop)) {
        if (candidate.cut > threshold->value * candidate.internal) continue;
      }
      // Groups are ordered by lowest member, so the first minimum wins ties.
      if (!chosen || CheaperThan(candidate, *chosen)) chosen = candidate;
    }
    if (!chosen) break;

    std::vector<int>& group = current.groups[chosen->group];
    std::vector<int> rest;
    std::set_difference(group.begin(), group.end(), chosen->side.begin(),
                        chosen->side.end(), std::back_inserter(rest));
    group = std::move(rest);
    current.groups.push_back(chosen->side);
    Canonicalize(current);
    history.push_back(current);
  }
  return history;
}

absl::StatusOr<MetaClustering> WgcCluster(const WeightMatrix& weights,
                                          const StopRule& stop) {
  ASSIGN_OR_RETURN(std::vector<MetaClustering> history,
                   WgcClusterHistory(weights, stop));
  return std::move(history.back());
}

std::string SerializeMetaClusteringCsv(const MetaClustering& clustering) {
  std::string out = "group,member\n";
  for (std::size_t g = 0; g < clustering.groups.size(); ++g) {
    for (int member : clustering.groups[g]) {
      absl::StrAppend(&out, g, ",", member, "\n");
    }
  }
  return out;
}

std::string MetaClusteringSummary(const MetaClustering& clustering) {
  std::vector<std::string> parts;
  for (const auto& group : clustering.groups) {
    parts.push_back(absl::StrJoin(group, ","));
  }
  return absl::StrJoin(parts, " | ");
}

}  // namespace clustval
