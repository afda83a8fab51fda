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

#include "clustval/validity.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <tuple>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "clustval/graph_io.h"
#include "clustval/shortest_paths.h"
#include "clustval/status_macros.h"

namespace clustval {
namespace {

absl::Status CheckCovers(const Graph& graph, const Clustering& clustering) {
  if (clustering.size() != static_cast<std::size_t>(graph.vertex_count())) {
    return absl::InvalidArgumentError(absl::StrCat(
        "clustering has ", clustering.size(), " labels for ",
        graph.vertex_count(), " vertices"));
  }
  return absl::OkStatus();
}

std::string OptionalValue(const std::optional<double>& value) {
  return value.has_value() ? FormatDouble(*value) : "undefined";
}

std::string TwoRowTable(std::size_t runs,
                        const std::function<std::string(std::size_t)>& cell) {
  std::string header = "clustering";
  std::string values = "value";
  for (std::size_t i = 0; i < runs; ++i) {
    absl::StrAppend(&header, ",", i);
    absl::StrAppend(&values, ",", cell(i));
  }
  return absl::StrCat(header, "\n", values, "\n");
}

}  // namespace

absl::StatusOr<ModularityTerms> ComputeModularityTerms(
    const Graph& graph, const Clustering& clustering) {
  RETURN_IF_ERROR(CheckCovers(graph, clustering));
  if (graph.edge_count() == 0) {
    return absl::FailedPreconditionError(
        "modularity is undefined on a graph without edges");
  }
  ModularityTerms terms;
  terms.labels = clustering.DistinctLabels();
  const std::size_t k = terms.k();
  terms.e.assign(k * k, 0.0);
  auto index = [&](VertexId v) {
    return static_cast<std::size_t>(
        std::lower_bound(terms.labels.begin(), terms.labels.end(),
                         clustering.label(static_cast<std::size_t>(v))) -
        terms.labels.begin());
  };
  // Raw weights first, one division at the end.
  for (const Edge& edge : graph.edges()) {
    const std::size_t i = index(edge.u);
    const std::size_t j = index(edge.v);
    if (i == j) {
      terms.e[i * k + i] += 2.0 * edge.weight;
    } else {
      terms.e[i * k + j] += edge.weight;
      terms.e[j * k + i] += edge.weight;
    }
  }
  const double two_w = 2.0 * graph.total_weight();
  terms.a.assign(k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) terms.a[i] += terms.e[i * k + j];
    terms.a[i] /= two_w;
  }
  for (double& x : terms.e) x /= two_w;
  return terms;
}

absl::StatusOr<double> Modularity(const Graph& graph,
                                  const Clustering& clustering) {
  ASSIGN_OR_RETURN(ModularityTerms terms,
                   ComputeModularityTerms(graph, clustering));
  double q = 0.0;
  for (std::size_t i = 0; i < terms.k(); ++i) {
    q += terms.at(i, i) - terms.a[i] * terms.a[i];
  }
  return q;
}

absl::StatusOr<double> DunnIndex(const Graph& graph,
                                 const Clustering& clustering) {
  RETURN_IF_ERROR(CheckCovers(graph, clustering));
  if (clustering.num_clusters() < 2) {
    return absl::FailedPreconditionError(
        "Dunn index needs at least two clusters");
  }
  const VertexId n = graph.vertex_count();
  std::int32_t min_between = std::numeric_limits<std::int32_t>::max();
  std::int32_t max_within = 0;
  for (VertexId s = 0; s < n; ++s) {
    ASSIGN_OR_RETURN(std::vector<std::int32_t> dist,
                     ShortestPathDistances(graph, s));
    const Label own = clustering.label(static_cast<std::size_t>(s));
    for (VertexId t = s + 1; t < n; ++t) {
      if (clustering.label(static_cast<std::size_t>(t)) == own) {
        max_within = std::max(max_within, dist[t]);
      } else {
        min_between = std::min(min_between, dist[t]);
      }
    }
  }
  if (max_within == 0) {
    return absl::FailedPreconditionError(
        "Dunn index is undefined when every cluster is a singleton");
  }
  return static_cast<double>(min_between) / static_cast<double>(max_within);
}

absl::StatusOr<int> SelectMostSimilar(const MetaGraph& meta,
                                      const MetaClustering& groups) {
  if (groups.groups.empty()) {
    return absl::InvalidArgumentError("empty meta-clustering");
  }
  std::vector<int> seen(meta.size(), 0);
  for (const auto& group : groups.groups) {
    if (group.empty()) return absl::InvalidArgumentError("empty group");
    for (int member : group) {
      if (member < 0 || static_cast<std::size_t>(member) >= meta.size() ||
          seen[member]++ > 0) {
        return absl::InvalidArgumentError(
            "meta-clustering is not a partition of the meta-graph");
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    return absl::InvalidArgumentError(
        "meta-clustering is not a partition of the meta-graph");
  }

  auto internal = [&](const std::vector<int>& group) {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        total += meta.at(group[i], group[j]);
      }
    }
    return total;
  };
  // Larger is better on every key; the lowest member is negated.
  auto rank = [&](const std::vector<int>& group) {
    return std::make_tuple(group.size(), internal(group),
                           -*std::min_element(group.begin(), group.end()));
  };
  const std::vector<int>* best = &groups.groups.front();
  for (const auto& group : groups.groups) {
    if (rank(group) > rank(*best)) best = &group;
  }

  int selected = -1;
  std::int64_t selected_sum = -1;
  for (int member : *best) {
    std::int64_t sum = 0;
    for (int other : *best) sum += meta.at(member, other);
    if (sum > selected_sum || (sum == selected_sum && member < selected)) {
      selected = member;
      selected_sum = sum;
    }
  }
  return selected;
}

absl::StatusOr<ValidityReport> BuildValidityReport(
    const Graph* graph, std::span<const Clustering> runs,
    const Clustering* reference, const MetaGraph& meta,
    const MetaClustering& groups) {
  if (!runs.empty() && runs.size() != meta.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        runs.size(), " runs but the meta-graph has ", meta.size(),
        " vertices"));
  }
  ValidityReport report;
  for (const Clustering& run : runs) {
    RunValidity validity;
    if (graph != nullptr) {
      RETURN_IF_ERROR(CheckCovers(*graph, run));
      if (graph->edge_count() > 0) {
        ASSIGN_OR_RETURN(validity.q, Modularity(*graph, run));
      }
      absl::StatusOr<double> dunn = DunnIndex(*graph, run);
      if (dunn.ok()) {
        validity.dunn = *dunn;
      } else if (dunn.status().code() != absl::StatusCode::kFailedPrecondition) {
        return dunn.status();
      }
    }
    if (reference != nullptr) {
      ASSIGN_OR_RETURN(validity.error, AlignedErrorRate(run, *reference));
    }
    report.runs.push_back(validity);
  }

  for (std::size_t i = 0; i < report.runs.size(); ++i) {
    const auto& q = report.runs[i].q;
    if (q.has_value() &&
        (!report.argmax_q || *q > *report.runs[*report.argmax_q].q)) {
      report.argmax_q = static_cast<int>(i);
    }
  }
  ASSIGN_OR_RETURN(report.selected, SelectMostSimilar(meta, groups));
  report.meta_clustering = groups;
  for (const auto& group : groups.groups) {
    report.group_sizes.push_back(group.size());
  }
  return report;
}

std::string SerializeReport(const ValidityReport& report) {
  std::string out;
  for (std::size_t i = 0; i < report.runs.size(); ++i) {
    const RunValidity& run = report.runs[i];
    absl::StrAppend(&out, "[run ", i, "]\n");
    absl::StrAppend(&out, "q=", OptionalValue(run.q), "\n");
    absl::StrAppend(&out, "dunn=", OptionalValue(run.dunn), "\n");
    if (run.error.has_value()) {
      absl::StrAppend(&out, "error_count=", run.error->count, "\n");
      absl::StrAppend(&out, "error_fraction=",
                      FormatDouble(run.error->fraction), "\n");
    }
    out += '\n';
  }
  absl::StrAppend(&out, "[consensus]\n");
  absl::StrAppend(&out, "selected=", report.selected, "\n");
  absl::StrAppend(&out, "argmax_q=",
                  report.argmax_q ? absl::StrCat(*report.argmax_q)
                                  : std::string("undefined"),
                  "\n");
  absl::StrAppend(&out, "groups=", MetaClusteringSummary(report.meta_clustering),
                  "\n");
  absl::StrAppend(&out, "group_sizes=", absl::StrJoin(report.group_sizes, ","),
                  "\n");
  return out;
}

std::string ErrorRateTableCsv(const ValidityReport& report) {
  return TwoRowTable(report.runs.size(), [&](std::size_t i) {
    const auto& error = report.runs[i].error;
    return error ? absl::StrCat(error->count) : std::string();
  });
}

std::string ModularityTableCsv(const ValidityReport& report) {
  return TwoRowTable(report.runs.size(), [&](std::size_t i) {
    const auto& q = report.runs[i].q;
    return q ? FormatDouble(*q) : std::string();
  });
}

std::string DunnTableCsv(const ValidityReport& report) {
  return TwoRowTable(report.runs.size(), [&](std::size_t i) {
    const auto& dunn = report.runs[i].dunn;
    return dunn ? FormatDouble(*dunn) : std::string();
  });
}

}  // namespace clustval
