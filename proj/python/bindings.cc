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

// Python bindings. Errors surface as ValueError.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "clustval/alignment.h"
#include "clustval/clusterers.h"
#include "clustval/clustering.h"
#include "clustval/generators.h"
#include "clustval/graph.h"
#include "clustval/graph_io.h"
#include "clustval/incremental.h"
#include "clustval/meta_similarity.h"
#include "clustval/min_cut.h"
#include "clustval/random.h"
#include "clustval/validity.h"
#include "clustval/wgc.h"
#include "pybind11/pybind11.h"
#include "pybind11/stl.h"

namespace py = pybind11;

namespace clustval {
namespace {

void ThrowIfError(const absl::Status& status) {
  if (!status.ok()) throw py::value_error(std::string(status.message()));
}

template <typename T>
T Unwrap(absl::StatusOr<T> value) {
  ThrowIfError(value.status());
  return *std::move(value);
}

using Matrix = std::vector<std::vector<double>>;
using Labels = std::vector<Label>;

ClustererConfig MakeConfig(const std::string& algorithm, std::int32_t k,
                           std::int32_t max_iterations, double tolerance,
                           std::uint64_t seed, std::int32_t restarts) {
  ClustererConfig config;
  config.algorithm = Unwrap(ParseAlgorithm(algorithm));
  config.k = k;
  config.max_iterations = max_iterations;
  config.tolerance = tolerance;
  config.seed = seed;
  config.restarts = restarts;
  ThrowIfError(ValidateClustererConfig(config));
  return config;
}

std::vector<Clustering> ToClusterings(const std::vector<Labels>& runs) {
  return {runs.begin(), runs.end()};
}

WeightMatrix ToWeights(const Matrix& rows) {
  WeightMatrix w(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw py::value_error("similarity matrix must be square");
    }
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (rows[i][j] != rows[j][i] || rows[i][j] < 0 || (i == j && rows[i][j] != 0)) {
        throw py::value_error(
            "similarity matrix must be symmetric, non-negative, zero diagonal");
      }
      if (i < j) w.Set(i, j, rows[i][j]);
    }
  }
  return w;
}

MetaGraph ToMetaGraph(const std::vector<std::vector<std::int64_t>>& rows) {
  std::vector<std::int64_t> flat;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) {
      throw py::value_error("similarity matrix must be square");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return Unwrap(MetaGraph::FromMatrix(rows.size(), std::move(flat)));
}

std::vector<std::vector<std::int64_t>> FromMetaGraph(const MetaGraph& meta) {
  std::vector<std::vector<std::int64_t>> rows(meta.size());
  for (std::size_t i = 0; i < meta.size(); ++i) {
    for (std::size_t j = 0; j < meta.size(); ++j) rows[i].push_back(meta.at(i, j));
  }
  return rows;
}

StopRule MakeStopRule(std::optional<int> target_groups,
                      std::optional<double> threshold) {
  if (target_groups.has_value() == threshold.has_value()) {
    throw py::value_error("pass exactly one of target_groups or threshold");
  }
  if (target_groups) return TargetGroups{*target_groups};
  return RelativeCutThreshold{*threshold};
}

py::dict SnapshotToDict(const PhaseSnapshot& snapshot) {
  py::dict d;
  d["vertices"] = snapshot.vertices;
  d["labels"] = snapshot.labels;
  d["q"] = snapshot.q;
  d["error_fraction"] = snapshot.error_fraction;
  return d;
}

}  // namespace
}  // namespace clustval

PYBIND11_MODULE(_clustval, m) {
  using namespace clustval;
  m.doc() = "Graph clustering validity by ensemble consensus.";

  py::class_<Graph>(m, "Graph")
      .def(py::init([](VertexId n, const std::vector<std::tuple<VertexId, VertexId, double>>& edges) {
             std::vector<Edge> list;
             for (const auto& [u, v, w] : edges) list.push_back({u, v, w});
             return Unwrap(Graph::Create(n, std::move(list)));
           }),
           py::arg("vertex_count"), py::arg("edges"),
           "Undirected weighted graph from (u, v, weight) triples.")
      .def_static("parse", [](const std::string& text) { return Unwrap(ParseEdgeList(text)); },
                  py::arg("text"), "Parses the edge-list text format.")
      .def_static("load", [](const std::string& path) { return Unwrap(LoadEdgeListFile(path)); },
                  py::arg("path"))
      .def("to_edge_list", &SerializeEdgeList)
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("total_weight", &Graph::total_weight)
      .def("edges", [](const Graph& g) {
        std::vector<std::tuple<VertexId, VertexId, double>> out;
        for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v, e.weight);
        return out;
      })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(vertex_count=" + std::to_string(g.vertex_count()) +
               ", edge_count=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("planted_partition",
        [](VertexId n, std::int32_t k, double p_in, double p_out, std::uint64_t seed) {
          auto [graph, truth] = Unwrap(GeneratePlantedPartition({n, k, p_in, p_out, seed}));
          return std::make_pair(std::move(graph), Labels(truth.labels().begin(), truth.labels().end()));
        },
        py::arg("n"), py::arg("k"), py::arg("p_in"), py::arg("p_out"), py::arg("seed") = 0,
        "Planted-partition graph and its block labels.");

  m.def("cluster",
        [](const Graph& graph, const std::string& algorithm, std::int32_t k,
           std::int32_t max_iterations, double tolerance, std::uint64_t seed,
           std::int32_t restarts) {
          const ClustererConfig config =
              MakeConfig(algorithm, k, max_iterations, tolerance, seed, restarts);
          const Clustering c = Unwrap(RunClusterer(graph, config));
          return Labels(c.labels().begin(), c.labels().end());
        },
        py::arg("graph"), py::arg("algorithm") = "em", py::arg("k") = 2,
        py::arg("max_iterations") = 200, py::arg("tolerance") = 1e-6,
        py::arg("seed") = 0, py::arg("restarts") = 1,
        "One run of the mixture-model EM ('em') or label propagation ('lp').");

  m.def("ensemble",
        [](const Graph& graph, std::int32_t runs, std::uint64_t seed,
           const std::string& algorithm, std::int32_t k, std::int32_t max_iterations,
           double tolerance, std::int32_t restarts, int threads) {
          const ClustererConfig config =
              MakeConfig(algorithm, k, max_iterations, tolerance, 0, restarts);
          Ensemble e;
          {
            py::gil_scoped_release release;
            e = Unwrap(RunEnsemble(graph, config, runs, seed, threads));
          }
          std::vector<Labels> out;
          for (const EnsembleRun& run : e.runs) {
            out.emplace_back(run.clustering.labels().begin(), run.clustering.labels().end());
          }
          return out;
        },
        py::arg("graph"), py::arg("runs"), py::arg("seed") = 0,
        py::arg("algorithm") = "em", py::arg("k") = 2,
        py::arg("max_iterations") = 200, py::arg("tolerance") = 1e-6,
        py::arg("restarts") = 1, py::arg("threads") = 1,
        "Independent runs; run i uses seed derive_seed(seed, i).");

  m.def("derive_seed", &DeriveSeed, py::arg("base"), py::arg("index"));

  m.def("modularity",
        [](const Graph& graph, const Labels& labels) {
          return Unwrap(Modularity(graph, Clustering(labels)));
        },
        py::arg("graph"), py::arg("labels"));
  m.def("dunn_index",
        [](const Graph& graph, const Labels& labels) {
          return Unwrap(DunnIndex(graph, Clustering(labels)));
        },
        py::arg("graph"), py::arg("labels"));
  m.def("pair_agreement",
        [](const Labels& a, const Labels& b) {
          return Unwrap(PairAgreement(Clustering(a), Clustering(b)));
        },
        py::arg("a"), py::arg("b"));
  m.def("align_labels",
        [](const Labels& labels, const Labels& reference) {
          Alignment a = Unwrap(AlignLabels(Clustering(labels), Clustering(reference)));
          return std::make_pair(Labels(a.aligned.labels().begin(), a.aligned.labels().end()),
                                a.mapping);
        },
        py::arg("labels"), py::arg("reference"),
        "Relabels to best match the reference; returns (aligned, mapping).");
  m.def("error_rate",
        [](const Labels& labels, const Labels& reference) {
          ErrorRate e = Unwrap(AlignedErrorRate(Clustering(labels), Clustering(reference)));
          return std::make_pair(e.count, e.fraction);
        },
        py::arg("labels"), py::arg("reference"),
        "(count, fraction) of vertices off the reference after alignment.");

  m.def("similarity_matrix",
        [](const std::vector<Labels>& runs) {
          return FromMetaGraph(Unwrap(BuildMetaGraph(ToClusterings(runs))));
        },
        py::arg("runs"), "Pairwise pair-agreement counts.");
  m.def("min_cut",
        [](const Matrix& weights) {
          Cut cut = Unwrap(MinCut(ToWeights(weights)));
          return std::make_pair(cut.weight, cut.side);
        },
        py::arg("weights"), "(weight, smaller side) of a global minimum cut.");
  m.def("wgc_cluster",
        [](const Matrix& weights, std::optional<int> target_groups,
           std::optional<double> threshold) {
          return Unwrap(WgcCluster(ToWeights(weights), MakeStopRule(target_groups, threshold)))
              .groups;
        },
        py::arg("weights"), py::kw_only(), py::arg("target_groups") = py::none(),
        py::arg("threshold") = py::none(),
        "Recursive min-cut bisection into groups of item indices.");
  m.def("select_most_similar",
        [](const std::vector<std::vector<std::int64_t>>& similarity,
           const std::vector<std::vector<int>>& groups) {
          return Unwrap(SelectMostSimilar(ToMetaGraph(similarity), MetaClustering{groups}));
        },
        py::arg("similarity"), py::arg("groups"));

  m.def("select",
        [](const std::vector<Labels>& runs, std::optional<int> target_groups,
           std::optional<double> threshold, const Graph* graph,
           std::optional<Labels> truth) {
          const std::vector<Clustering> clusterings = ToClusterings(runs);
          const MetaGraph meta = Unwrap(BuildMetaGraph(clusterings));
          const MetaClustering groups = Unwrap(WgcCluster(
              WeightMatrix::FromMetaGraph(meta), MakeStopRule(target_groups, threshold)));
          std::optional<Clustering> reference;
          if (truth) reference = Clustering(*truth);
          const ValidityReport report = Unwrap(BuildValidityReport(
              graph, clusterings, reference ? &*reference : nullptr, meta, groups));
          py::dict d;
          d["selected"] = report.selected;
          d["argmax_q"] = report.argmax_q;
          d["groups"] = report.meta_clustering.groups;
          d["similarity"] = FromMetaGraph(meta);
          py::list per_run;
          for (const RunValidity& run : report.runs) {
            py::dict r;
            r["q"] = run.q;
            r["dunn"] = run.dunn;
            r["error_fraction"] =
                run.error ? py::cast(run.error->fraction) : py::none();
            per_run.append(r);
          }
          d["runs"] = per_run;
          return d;
        },
        py::arg("runs"), py::kw_only(), py::arg("target_groups") = py::none(),
        py::arg("threshold") = py::none(), py::arg("graph") = nullptr,
        py::arg("truth") = py::none(),
        "Consensus selection over an ensemble, with per-run measures.");

  m.def("run_phased",
        [](const Graph& graph, const std::vector<double>& fractions, std::uint64_t seed,
           std::optional<Labels> truth, const std::string& policy,
           const std::string& algorithm, std::int32_t k, std::int32_t restarts) {
          std::optional<Clustering> reference;
          if (truth) reference = Clustering(*truth);
          const PhasedDataset ds =
              Unwrap(GeneratePhasedDataset(graph, reference, fractions, Mix64(seed)));
          const ClustererConfig config = MakeConfig(algorithm, k, 200, 1e-6, seed, restarts);
          const PhaseTrace trace = Unwrap(RunPhased(ds, config, Unwrap(ParsePolicy(policy))));
          py::list out;
          for (const PhaseSnapshot& s : trace.phases) out.append(SnapshotToDict(s));
          return out;
        },
        py::arg("graph"), py::arg("fractions"), py::arg("seed") = 0,
        py::arg("truth") = py::none(), py::arg("policy") = "majority",
        py::arg("algorithm") = "em", py::arg("k") = 2, py::arg("restarts") = 1,
        "Phased clustering with the same seeding as the phased command.");
}
