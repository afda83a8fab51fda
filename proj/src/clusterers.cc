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

#include "clustval/clusterers.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

#include "absl/strings/str_cat.h"
#include "clustval/random.h"
#include "clustval/status_macros.h"

namespace clustval {
namespace {

constexpr double kMinProbability = 1e-10;

double ClampProbability(double p) {
  return std::clamp(p, kMinProbability, 1.0 - kMinProbability);
}

// x * log(y) with 0 * log(0) = 0.
double XLogY(double x, double y) { return x == 0.0 ? 0.0 : x * std::log(y); }

// Sufficient statistics of a hard assignment under the planted-partition
// mixture.
struct MixtureState {
  std::vector<std::int64_t> sizes;
  std::int64_t within_edges = 0;
  std::int64_t between_edges = 0;
  std::int64_t within_pairs = 0;
  std::int64_t between_pairs = 0;
};

MixtureState Summarize(const Graph& graph, std::span<const Label> z,
                       std::int32_t k) {
  MixtureState state;
  state.sizes.assign(static_cast<std::size_t>(k), 0);
  for (Label label : z) ++state.sizes[label];
  for (const Edge& edge : graph.edges()) {
    (z[edge.u] == z[edge.v] ? state.within_edges : state.between_edges) += 1;
  }
  const std::int64_t n = static_cast<std::int64_t>(z.size());
  for (std::int64_t size : state.sizes) {
    state.within_pairs += size * (size - 1) / 2;
  }
  state.between_pairs = n * (n - 1) / 2 - state.within_pairs;
  return state;
}

struct MixtureParams {
  std::vector<double> proportions;
  double p_in = 0.5;
  double p_out = 0.5;
};

// Maximum-likelihood parameters for a fixed assignment under the assortative
// constraint p_in >= p_out, with edge probabilities restricted to
// [kMinProbability, 1 - kMinProbability]. When the unconstrained estimate has
// p_in < p_out, both take the overall density. When a pair class is empty
// its probability does not enter the likelihood; the overall edge density is
// used in that case.
MixtureParams Estimate(const MixtureState& state, std::int64_t n) {
  MixtureParams params;
  for (std::int64_t size : state.sizes) {
    params.proportions.push_back(static_cast<double>(size) /
                                 static_cast<double>(n));
  }
  const std::int64_t all_pairs = state.within_pairs + state.between_pairs;
  const double density =
      all_pairs == 0 ? 0.5
                     : static_cast<double>(state.within_edges +
                                           state.between_edges) /
                           static_cast<double>(all_pairs);
  params.p_in = ClampProbability(
      state.within_pairs == 0 ? density
                              : static_cast<double>(state.within_edges) /
                                    static_cast<double>(state.within_pairs));
  params.p_out = ClampProbability(
      state.between_pairs == 0 ? density
                               : static_cast<double>(state.between_edges) /
                                     static_cast<double>(state.between_pairs));
  if (params.p_in < params.p_out) {
    params.p_in = params.p_out = ClampProbability(density);
  }
  return params;
}

double LogLikelihood(const MixtureState& state, const MixtureParams& params) {
  double ll = 0.0;
  for (std::size_t q = 0; q < state.sizes.size(); ++q) {
    ll += XLogY(static_cast<double>(state.sizes[q]), params.proportions[q]);
  }
  ll += XLogY(static_cast<double>(state.within_edges), params.p_in);
  ll += XLogY(static_cast<double>(state.within_pairs - state.within_edges),
              1.0 - params.p_in);
  ll += XLogY(static_cast<double>(state.between_edges), params.p_out);
  ll += XLogY(static_cast<double>(state.between_pairs - state.between_edges),
              1.0 - params.p_out);
  return ll;
}

double PairTerm(std::int64_t edges, std::int64_t pairs, double p) {
  return XLogY(static_cast<double>(edges), p) +
         XLogY(static_cast<double>(pairs - edges), 1.0 - p);
}

// One pass over the vertices in id order (incremental EM). Each vertex moves
// to the class that maximizes the complete-data log-likelihood with the
// parameters re-estimated for that move, so the assignment step and the
// parameter step are interleaved per vertex and the likelihood never
// decreases. Ties keep the current class. Classes that are already empty
// have zero proportion and stay empty.
void AssignmentSweep(const Graph& graph, std::vector<Label>& z,
                     MixtureState& state) {
  const std::size_t k = state.sizes.size();
  const std::int64_t n = static_cast<std::int64_t>(z.size());
  const std::int64_t total_edges = state.within_edges + state.between_edges;
  const std::int64_t total_pairs = state.within_pairs + state.between_pairs;

  auto profile = [&](std::int64_t within_edges, std::int64_t within_pairs) {
    MixtureState trial;
    trial.within_edges = within_edges;
    trial.within_pairs = within_pairs;
    trial.between_edges = total_edges - within_edges;
    trial.between_pairs = total_pairs - within_pairs;
    MixtureParams params = Estimate(trial, n);
    return PairTerm(trial.within_edges, trial.within_pairs, params.p_in) +
           PairTerm(trial.between_edges, trial.between_pairs, params.p_out);
  };
  auto size_term = [&](std::int64_t size) {
    return XLogY(static_cast<double>(size),
                 static_cast<double>(size) / static_cast<double>(n));
  };

  std::vector<std::int64_t> neighbor_counts(k, 0);
  for (VertexId i = 0; i < graph.vertex_count(); ++i) {
    std::fill(neighbor_counts.begin(), neighbor_counts.end(), 0);
    for (const Neighbor& neighbor : graph.neighbors(i)) {
      ++neighbor_counts[z[neighbor.vertex]];
    }
    const auto current = static_cast<std::size_t>(z[i]);
    // Statistics with vertex i removed from its class.
    const std::int64_t base_edges =
        state.within_edges - neighbor_counts[current];
    const std::int64_t base_pairs = state.within_pairs - (state.sizes[current] - 1);
    auto score = [&](std::size_t q) {
      const std::int64_t others = state.sizes[q] - (q == current ? 1 : 0);
      double ll = profile(base_edges + neighbor_counts[q], base_pairs + others);
      for (std::size_t r = 0; r < k; ++r) {
        std::int64_t size = state.sizes[r];
        if (r == current) --size;
        if (r == q) ++size;
        ll += size_term(size);
      }
      return ll;
    };

    std::size_t best = current;
    double best_score = score(current);
    for (std::size_t q = 0; q < k; ++q) {
      if (q == current || state.sizes[q] == 0) continue;
      const double s = score(q);
      if (s > best_score) {
        best_score = s;
        best = q;
      }
    }
    if (best != current) {
      state.within_edges = base_edges + neighbor_counts[best];
      state.within_pairs = base_pairs + state.sizes[best];
      state.between_edges = total_edges - state.within_edges;
      state.between_pairs = total_pairs - state.within_pairs;
      --state.sizes[current];
      ++state.sizes[best];
      z[i] = static_cast<Label>(best);
    }
  }
}

}  // namespace

std::string AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kErMixtureEm:
      return "em";
    case Algorithm::kLabelPropagation:
      return "lp";
  }
  return "unknown";
}

absl::StatusOr<Algorithm> ParseAlgorithm(const std::string& name) {
  if (name == "em") return Algorithm::kErMixtureEm;
  if (name == "lp") return Algorithm::kLabelPropagation;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown algorithm \"", name, "\" (expected em or lp)"));
}

absl::Status ValidateClustererConfig(const ClustererConfig& config) {
  if (config.k < 1) return absl::InvalidArgumentError("k must be >= 1");
  if (config.max_iterations < 1) {
    return absl::InvalidArgumentError("max_iterations must be >= 1");
  }
  if (!(config.tolerance > 0.0)) {
    return absl::InvalidArgumentError("tolerance must be > 0");
  }
  if (config.restarts < 1) {
    return absl::InvalidArgumentError("restarts must be >= 1");
  }
  return absl::OkStatus();
}

namespace {

EmTrace EmSingleStart(const Graph& graph, const ClustererConfig& config,
                      std::uint64_t seed) {
  const VertexId n = graph.vertex_count();
  Rng rng(seed);
  // Uniformly shuffled balanced labeling: class sizes differ by at most one.
  std::vector<Label> z(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < z.size(); ++i) {
    z[i] = static_cast<Label>(i % static_cast<std::size_t>(config.k));
  }
  rng.Shuffle(std::span<Label>(z));

  EmTrace trace;
  MixtureState state = Summarize(graph, z, config.k);
  MixtureParams params = Estimate(state, n);
  trace.log_likelihood.push_back(LogLikelihood(state, params));

  for (std::int32_t iteration = 1; iteration <= config.max_iterations;
       ++iteration) {
    AssignmentSweep(graph, z, state);
    params = Estimate(state, n);
    const double ll = LogLikelihood(state, params);
    const double gain = ll - trace.log_likelihood.back();
    trace.log_likelihood.push_back(ll);
    trace.iterations = iteration;
    if (gain < config.tolerance) break;
  }

  trace.clustering = Clustering(CanonicalLabels(z));
  trace.p_in = params.p_in;
  trace.p_out = params.p_out;
  return trace;
}

}  // namespace

absl::StatusOr<EmTrace> EmMixtureClusterWithTrace(
    const Graph& graph, const ClustererConfig& config) {
  RETURN_IF_ERROR(ValidateClustererConfig(config));
  if (config.algorithm != Algorithm::kErMixtureEm) {
    return absl::InvalidArgumentError("config is not for the mixture model");
  }
  const VertexId n = graph.vertex_count();
  if (n < 1) return absl::InvalidArgumentError("graph has no vertices");
  if (config.k > n) {
    return absl::InvalidArgumentError(
        absl::StrCat("k = ", config.k, " exceeds the vertex count ", n));
  }

  EmTrace best = EmSingleStart(graph, config, config.seed);
  for (std::int32_t r = 1; r < config.restarts; ++r) {
    EmTrace trace = EmSingleStart(graph, config, DeriveSeed(config.seed, r));
    if (trace.log_likelihood.back() > best.log_likelihood.back()) {
      best = std::move(trace);
    }
  }
  return best;
}

absl::StatusOr<Clustering> EmMixtureCluster(const Graph& graph,
                                            const ClustererConfig& config) {
  ASSIGN_OR_RETURN(EmTrace trace, EmMixtureClusterWithTrace(graph, config));
  return std::move(trace.clustering);
}

absl::StatusOr<Clustering> LabelPropagation(const Graph& graph,
                                            const ClustererConfig& config) {
  RETURN_IF_ERROR(ValidateClustererConfig(config));
  if (config.algorithm != Algorithm::kLabelPropagation) {
    return absl::InvalidArgumentError("config is not for label propagation");
  }
  const auto n = static_cast<std::size_t>(graph.vertex_count());
  std::vector<Label> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);

  Rng rng(config.seed);
  std::vector<double> weight_by_label(n, 0.0);
  std::vector<Label> touched;
  for (std::int32_t sweep = 0; sweep < config.max_iterations; ++sweep) {
    rng.Shuffle(std::span<VertexId>(order));
    bool changed = false;
    for (VertexId v : order) {
      touched.clear();
      for (const Neighbor& neighbor : graph.neighbors(v)) {
        const Label label = labels[neighbor.vertex];
        if (weight_by_label[label] == 0.0) touched.push_back(label);
        weight_by_label[label] += neighbor.weight;
      }
      if (touched.empty()) continue;
      Label best = touched.front();
      for (Label label : touched) {
        const double w = weight_by_label[label];
        if (w > weight_by_label[best] ||
            (w == weight_by_label[best] && label < best)) {
          best = label;
        }
      }
      for (Label label : touched) weight_by_label[label] = 0.0;
      if (best != labels[v]) {
        labels[v] = best;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return Clustering(CanonicalLabels(labels));
}

absl::StatusOr<Clustering> RunClusterer(const Graph& graph,
                                        const ClustererConfig& config) {
  switch (config.algorithm) {
    case Algorithm::kErMixtureEm:
      return EmMixtureCluster(graph, config);
    case Algorithm::kLabelPropagation:
      return LabelPropagation(graph, config);
  }
  return absl::InvalidArgumentError("unknown algorithm");
}

absl::StatusOr<Ensemble> RunEnsemble(const Graph& graph,
                                     const ClustererConfig& config,
                                     std::int32_t runs, std::uint64_t base_seed,
                                     std::int32_t threads) {
  if (runs < 0) return absl::InvalidArgumentError("run count must be >= 0");
  RETURN_IF_ERROR(ValidateClustererConfig(config));

  const auto count = static_cast<std::size_t>(runs);
  std::vector<ClustererConfig> configs(count, config);
  for (std::size_t i = 0; i < count; ++i) {
    configs[i].seed = DeriveSeed(base_seed, i);
  }
  std::vector<absl::StatusOr<Clustering>> results(
      count, absl::UnknownError("not run"));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      results[i] = RunClusterer(graph, configs[i]);
    }
  };
  const std::size_t workers =
      std::min<std::size_t>(count, static_cast<std::size_t>(std::max(threads, 1)));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (std::thread& thread : pool) thread.join();
  }

  Ensemble ensemble;
  ensemble.vertex_count = graph.vertex_count();
  for (std::size_t i = 0; i < count; ++i) {
    if (!results[i].ok()) return results[i].status();
    ensemble.runs.push_back({*std::move(results[i]), configs[i]});
  }
  return ensemble;
}

}  // namespace clustval
