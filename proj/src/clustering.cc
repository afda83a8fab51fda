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

#include "clustval/clustering.h"

#include <algorithm>
#include <unordered_map>

#include "absl/strings/str_cat.h"

namespace clustval {

Clustering::Clustering(std::vector<Label> labels) : labels_(std::move(labels)) {
  std::vector<Label> distinct = labels_;
  std::sort(distinct.begin(), distinct.end());
  num_clusters_ = static_cast<std::size_t>(
      std::unique(distinct.begin(), distinct.end()) - distinct.begin());
}

std::vector<Label> CanonicalLabels(std::span<const Label> labels) {
  std::unordered_map<Label, Label> remap;
  std::vector<Label> out;
  out.reserve(labels.size());
  for (Label label : labels) {
    auto [it, inserted] =
        remap.emplace(label, static_cast<Label>(remap.size()));
    out.push_back(it->second);
  }
  return out;
}

Clustering Clustering::Canonical() const {
  return Clustering(CanonicalLabels(labels_));
}

bool Clustering::IsCanonical() const {
  Label next = 0;
  for (Label label : labels_) {
    if (label > next) return false;
    if (label == next) ++next;
    if (label < 0) return false;
  }
  return true;
}

std::vector<Label> Clustering::DistinctLabels() const {
  std::vector<Label> distinct = labels_;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  return distinct;
}

absl::Status CheckSameLength(const Clustering& a, const Clustering& b) {
  if (a.size() != b.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "clusterings have different lengths: ", a.size(), " vs ", b.size()));
  }
  return absl::OkStatus();
}

}  // namespace clustval
