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

#ifndef CLUSTVAL_CLUSTERERS_H_
#define CLUSTVAL_CLUSTERERS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "clustval/clustering.h"
#include "clustval/graph.h"

namespace clustval {

enum class Algorithm { kErMixtureEm, kLabelPropagation };

// "em" / "lp".
std::string AlgorithmName(Algorithm algorithm);
absl::StatusOr<Algorithm> ParseAlgorithm(const std::string& name);

struct ClustererConfig {
  Algorithm algorithm = Algorithm::kErMixtureEm;
  // Requested class count; used by the mixture model only.
  std::int32_t k = 2;
  std::int32_t max_iterations = 200;
  // Stop once the log-likelihood improves by less than this.
  double tolerance = 1e-6;
  std::uint64_t seed = 0;
  // Mixture model only: independent starts, keeping the one with the highest
  // final log-likelihood. Start 0 uses `seed`, start r uses DeriveSeed(seed, r).
  std::int32_t restarts = 1;
};

absl::Status ValidateClustererConfig(const ClustererConfig& config);

struct EmTrace {
  Clustering clustering;
  // Complete-data log-likelihood after every iteration (assignment sweep
  // followed by parameter re-estimation).
  std::vector<double> log_likelihood;
  std::int32_t iterations = 0;
  double p_in = 0.0;
  double p_out = 0.0;
};

// Hard (classification) EM for a planted-partition Bernoulli mixture with
// class proportions and two edge probabilities: p_in inside a class and
// p_out across classes. Edges are treated as present/absent; weights are
// ignored. Starting from a seeded uniform random labeling, each iteration
// reassigns vertices one at a time in ascending id order to the class that
// maximizes the complete-data log-likelihood, then re-estimates the
// parameters from the hard assignment. Empty classes are dropped and the
// labels are canonicalized.
absl::StatusOr<EmTrace> EmMixtureClusterWithTrace(const Graph& graph,
                                                  const ClustererConfig& config);
absl::StatusOr<Clustering> EmMixtureCluster(const Graph& graph,
                                            const ClustererConfig& config);

// Asynchronous label propagation from unique labels. Each sweep visits the
// vertices in a freshly shuffled order and moves each one to the label with
// the largest incident weight among its neighbors (smallest label on ties).
// Stops after a sweep without changes or after max_iterations sweeps.
absl::StatusOr<Clustering> LabelPropagation(const Graph& graph,
                                            const ClustererConfig& config);

// Dispatches on config.algorithm.
absl::StatusOr<Clustering> RunClusterer(const Graph& graph,
                                        const ClustererConfig& config);

struct EnsembleRun {
  Clustering clustering;
  // Config actually used; its seed is the derived run seed.
  ClustererConfig config;
};

struct Ensemble {
  VertexId vertex_count = 0;
  std::vector<EnsembleRun> runs;
};

// Runs the clusterer `runs` times. Run i uses seed DeriveSeed(base_seed, i)
// (see random.h). With `threads` > 1 the runs execute concurrently; the
// result is identical to sequential execution.
absl::StatusOr<Ensemble> RunEnsemble(const Graph& graph,
                                     const ClustererConfig& config,
                                     std::int32_t runs, std::uint64_t base_seed,
                                     std::int32_t threads = 1);

}  // namespace clustval

#endif  // CLUSTVAL_CLUSTERERS_H_
