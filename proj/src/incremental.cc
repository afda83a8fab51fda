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

#include "clustval/incremental.h"

#include <algorithm>
#include <map>

#include "absl/strings/str_cat.h"
#include "clustval/graph_io.h"
#include "clustval/status_macros.h"
#include "clustval/validity.h"

namespace clustval {

std::string PolicyName(AttachmentPolicy policy) {
  switch (policy) {
    case AttachmentPolicy::kWeightedMajority:
      return "majority";
    case AttachmentPolicy::kBestModularityGain:
      return "modgain";
  }
  return "unknown";
}

absl::StatusOr<AttachmentPolicy> ParsePolicy(const std::string& name) {
  if (name == "majority") return AttachmentPolicy::kWeightedMajority;
  if (name == "modgain") return AttachmentPolicy::kBestModularityGain;
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown policy \"", name, "\" (expected majority or modgain)"));
}

absl::StatusOr<Label> ChooseAttachmentLabel(const Graph& graph,
                                            std::span<const Label> labels,
                                            VertexId v,
                                            AttachmentPolicy policy) {
  if (labels.size() != static_cast<std::size_t>(graph.vertex_count())) {
    return absl::InvalidArgumentError("labeling does not match the graph");
  }
  if (v < 0 || v >= graph.vertex_count()) {
    return absl::OutOfRangeError(absl::StrCat("vertex ", v, " out of range"));
  }
  if (labels[v] != kUnlabeled) {
    return absl::FailedPreconditionError(
        absl::StrCat("vertex ", v, " is already labeled"));
  }

  std::map<Label, double> to_cluster;
  double to_labeled = 0.0;
  for (const Neighbor& neighbor : graph.neighbors(v)) {
    const Label label = labels[neighbor.vertex];
    if (label == kUnlabeled) continue;
    to_cluster[label] += neighbor.weight;
    to_labeled += neighbor.weight;
  }
  if (to_cluster.empty()) {
    const Label largest = *std::max_element(labels.begin(), labels.end());
    return largest + 1;
  }

  if (policy == AttachmentPolicy::kWeightedMajority) {
    Label best = to_cluster.begin()->first;
    double best_weight = to_cluster.begin()->second;
    for (const auto& [label, weight] : to_cluster) {
      if (weight > best_weight) {
        best = label;
        best_weight = weight;
      }
    }
    return best;
  }

  // Q of the labeled subgraph plus v, as a function of v's label x, equals a
  // constant plus
  //   k_vx / W' - k_v * (2 * (tot_x + k_vx) + k_v) / (4 * W'^2),
  // where k_vx is v's weight into x, k_v its weight into labeled vertices,
  // tot_x the degree sum of x inside the labeled subgraph and W' the total
  // weight after v arrives.
  std::map<Label, double> degree_sum;
  double total = to_labeled;
  for (const Edge& edge : graph.edges()) {
    const Label lu = labels[edge.u];
    const Label lv = labels[edge.v];
    if (lu == kUnlabeled || lv == kUnlabeled) continue;
    degree_sum[lu] += edge.weight;
    degree_sum[lv] += edge.weight;
    total += edge.weight;
  }
  for (Label label : labels) {
    if (label != kUnlabeled) degree_sum.try_emplace(label, 0.0);
  }
  Label best = kUnlabeled;
  double best_gain = 0.0;
  for (const auto& [label, tot] : degree_sum) {
    const auto it = to_cluster.find(label);
    const double into = it == to_cluster.end() ? 0.0 : it->second;
    const double gain =
        into / total -
        to_labeled * (2.0 * (tot + into) + to_labeled) / (4.0 * total * total);
    if (best == kUnlabeled || gain > best_gain) {
      best = label;
      best_gain = gain;
    }
  }
  return best;
}

absl::Status AttachVertex(const Graph& graph, std::vector<Label>& labels,
                          VertexId v, AttachmentPolicy policy) {
  ASSIGN_OR_RETURN(Label label,
                   ChooseAttachmentLabel(graph, labels, v, policy));
  labels[v] = label;
  return absl::OkStatus();
}

absl::StatusOr<PhaseTrace> RunPhased(const PhasedDataset& dataset,
                                     const ClustererConfig& base,
                                     AttachmentPolicy policy) {
  if (dataset.phases.empty()) {
    return absl::InvalidArgumentError("dataset has no phases");
  }
  const Graph& full = dataset.phases.back().graph;
  const auto n = static_cast<std::size_t>(full.vertex_count());
  if (dataset.truth.has_value() && dataset.truth->size() != n) {
    return absl::InvalidArgumentError("truth does not match the graph");
  }

  std::vector<Label> labels(n, kUnlabeled);
  PhaseTrace trace;
  for (std::size_t p = 0; p < dataset.phases.size(); ++p) {
    const Phase& phase = dataset.phases[p];
    if (p == 0) {
      if (!phase.vertices.empty()) {
        ASSIGN_OR_RETURN(Clustering initial, RunClusterer(phase.graph, base));
        for (std::size_t i = 0; i < phase.vertices.size(); ++i) {
          labels[phase.vertices[i]] = initial.label(i);
        }
      }
    } else {
      for (VertexId v : phase.vertices) {
        if (labels[v] == kUnlabeled) {
          RETURN_IF_ERROR(AttachVertex(full, labels, v, policy));
        }
      }
    }

    PhaseSnapshot snapshot;
    snapshot.vertices = phase.vertices;
    std::vector<Label> truth_part;
    for (VertexId v : phase.vertices) {
      if (labels[v] == kUnlabeled) {
        return absl::InvalidArgumentError(
            absl::StrCat("phase ", p, " drops vertex ", v,
                         " revealed earlier"));
      }
      snapshot.labels.push_back(labels[v]);
      if (dataset.truth) truth_part.push_back(dataset.truth->label(v));
    }
    const Clustering local(snapshot.labels);
    if (phase.graph.edge_count() > 0) {
      ASSIGN_OR_RETURN(snapshot.q, Modularity(phase.graph, local));
    }
    if (dataset.truth) {
      ASSIGN_OR_RETURN(ErrorRate error,
                       AlignedErrorRate(local, Clustering(truth_part)));
      snapshot.error_fraction = error.fraction;
    }
    trace.phases.push_back(std::move(snapshot));
  }
  return trace;
}

std::string SerializeTraceCsv(const PhaseTrace& trace) {
  std::string out = "phase,vertex,label\n";
  for (std::size_t p = 0; p < trace.phases.size(); ++p) {
    const PhaseSnapshot& snapshot = trace.phases[p];
    for (std::size_t i = 0; i < snapshot.vertices.size(); ++i) {
      absl::StrAppend(&out, p, ",", snapshot.vertices[i], ",",
                      snapshot.labels[i], "\n");
    }
  }
  return out;
}

std::string SerializePhaseSummaryCsv(const PhaseTrace& trace) {
  std::string out = "phase,n,q,error_fraction\n";
  for (std::size_t p = 0; p < trace.phases.size(); ++p) {
    const PhaseSnapshot& snapshot = trace.phases[p];
    absl::StrAppend(&out, p, ",", snapshot.vertices.size(), ",",
                    snapshot.q ? FormatDouble(*snapshot.q) : "", ",",
                    snapshot.error_fraction
                        ? FormatDouble(*snapshot.error_fraction)
                        : "",
                    "\n");
  }
  return out;
}

}  // namespace clustval
