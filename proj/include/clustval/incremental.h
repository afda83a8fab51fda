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

#ifndef CLUSTVAL_INCREMENTAL_H_
#define CLUSTVAL_INCREMENTAL_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "clustval/alignment.h"
#include "clustval/clusterers.h"
#include "clustval/clustering.h"
#include "clustval/generators.h"
#include "clustval/graph.h"

namespace clustval {

enum class AttachmentPolicy { kWeightedMajority, kBestModularityGain };

// "majority" / "modgain".
std::string PolicyName(AttachmentPolicy policy);
absl::StatusOr<AttachmentPolicy> ParsePolicy(const std::string& name);

inline constexpr Label kUnlabeled = -1;

// Label for arriving vertex `v` given the current partial labeling (indexed
// by vertex of `graph`, kUnlabeled for vertices not yet seen). Only edges to
// labeled vertices are considered.
//   kWeightedMajority: label with the largest total edge weight to v.
//   kBestModularityGain: label maximizing Q of the subgraph induced on the
//     labeled vertices plus v.
// Ties pick the smallest label. Without labeled neighbors, v gets a fresh
// label one above the largest label in use.
absl::StatusOr<Label> ChooseAttachmentLabel(const Graph& graph,
                                            std::span<const Label> labels,
                                            VertexId v, AttachmentPolicy policy);

// Applies ChooseAttachmentLabel in place.
absl::Status AttachVertex(const Graph& graph, std::vector<Label>& labels,
                          VertexId v, AttachmentPolicy policy);

struct PhaseSnapshot {
  // Global ids, sorted; labels[i] belongs to vertices[i].
  std::vector<VertexId> vertices;
  std::vector<Label> labels;
  std::optional<double> q;               // Q of the induced subgraph
  std::optional<double> error_fraction;  // vs truth restricted to vertices
};

struct PhaseTrace {
  std::vector<PhaseSnapshot> phases;
};

// Clusters the first phase with the base clusterer, then attaches the
// vertices revealed by each later phase in ascending id order. Earlier labels
// never change.
absl::StatusOr<PhaseTrace> RunPhased(const PhasedDataset& dataset,
                                     const ClustererConfig& base,
                                     AttachmentPolicy policy);

// "phase,vertex,label" rows, phases numbered from 0.
std::string SerializeTraceCsv(const PhaseTrace& trace);
// "phase,n,q,error_fraction" rows; undefined values left empty.
std::string SerializePhaseSummaryCsv(const PhaseTrace& trace);

}  // namespace clustval

#endif  // CLUSTVAL_INCREMENTAL_H_
