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

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <vector>

#include "clustval/incremental.h"
#include "clustval/validity.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace clustval {
namespace {

using ::testing::HasSubstr;

constexpr Label U = kUnlabeled;

// Q of the subgraph induced on the labeled vertices after v takes `label`.
double InducedQ(const Graph& graph, std::vector<Label> labels, VertexId v,
                Label label) {
  labels[v] = label;
  std::vector<VertexId> kept;
  std::vector<Label> kept_labels;
  for (VertexId u = 0; u < graph.vertex_count(); ++u) {
    if (labels[u] != U) {
      kept.push_back(u);
      kept_labels.push_back(labels[u]);
    }
  }
  Phase phase = *InducedPhase(graph, kept);
  return testing::DirectModularity(phase.graph, Clustering(kept_labels));
}

void ExpectPrefixConsistent(const PhaseTrace& trace) {
  for (std::size_t p = 0; p + 1 < trace.phases.size(); ++p) {
    const PhaseSnapshot& now = trace.phases[p];
    const PhaseSnapshot& next = trace.phases[p + 1];
    for (std::size_t i = 0; i < now.vertices.size(); ++i) {
      auto it = std::lower_bound(next.vertices.begin(), next.vertices.end(),
                                 now.vertices[i]);
      ASSERT_TRUE(it != next.vertices.end() && *it == now.vertices[i]);
      EXPECT_EQ(next.labels[it - next.vertices.begin()], now.labels[i]);
    }
  }
}

TEST(PolicyTest, Names) {
  EXPECT_EQ(*ParsePolicy("majority"), AttachmentPolicy::kWeightedMajority);
  EXPECT_EQ(*ParsePolicy("modgain"), AttachmentPolicy::kBestModularityGain);
  EXPECT_EQ(PolicyName(AttachmentPolicy::kBestModularityGain), "modgain");
  EXPECT_FALSE(ParsePolicy("nearest").ok());
}

TEST(AttachmentTest, UnanimousNeighborhood) {
  const Graph g = *Graph::Create(4, {{0, 3, 1}, {1, 3, 1}, {2, 3, 1}});
  const std::vector<Label> labels = {5, 5, 5, U};
  for (auto policy : {AttachmentPolicy::kWeightedMajority,
                      AttachmentPolicy::kBestModularityGain}) {
    EXPECT_EQ(*ChooseAttachmentLabel(g, labels, 3, policy), 5);
  }
}

TEST(AttachmentTest, IsolatedVertexGetsFreshLabel) {
  const Graph g = *Graph::Create(4, {{0, 1, 1}, {2, 3, 1}});
  const std::vector<Label> labels = {0, 4, U, U};
  // 2's only neighbor is unlabeled.
  for (auto policy : {AttachmentPolicy::kWeightedMajority,
                      AttachmentPolicy::kBestModularityGain}) {
    EXPECT_EQ(*ChooseAttachmentLabel(g, labels, 2, policy), 5);
  }
}

TEST(AttachmentTest, MajorityWithTies) {
  const Graph g = *Graph::Create(
      5, {{0, 4, 1}, {1, 4, 1}, {2, 4, 1}, {3, 4, 1}});
  EXPECT_EQ(*ChooseAttachmentLabel(g, std::vector<Label>{7, 7, 2, U, U}, 4,
                                   AttachmentPolicy::kWeightedMajority),
            7);
  EXPECT_EQ(*ChooseAttachmentLabel(g, std::vector<Label>{7, 7, 2, 2, U}, 4,
                                   AttachmentPolicy::kWeightedMajority),
            2);
}

TEST(AttachmentTest, MajorityMatchesBruteForceCount) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testing::RandomGraph(20, 0.4, rng, 5);
    std::vector<Label> labels(20);
    for (Label& l : labels) l = static_cast<Label>(rng() % 4);
    const VertexId v = static_cast<VertexId>(rng() % 20);
    labels[v] = U;
    std::vector<double> weight(4, 0.0);
    for (const Edge& e : g.edges()) {
      if (e.u == v && labels[e.v] != U) weight[labels[e.v]] += e.weight;
      if (e.v == v && labels[e.u] != U) weight[labels[e.u]] += e.weight;
    }
    const double best = *std::max_element(weight.begin(), weight.end());
    if (best == 0.0) continue;
    const Label expected = static_cast<Label>(
        std::find(weight.begin(), weight.end(), best) - weight.begin());
    EXPECT_EQ(*ChooseAttachmentLabel(g, labels, v,
                                     AttachmentPolicy::kWeightedMajority),
              expected);
  }
}

TEST(AttachmentTest, ModularityGainMaximizesInducedQ) {
  std::mt19937_64 rng(32);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 6 + trial % 10;
    const Graph g = testing::RandomGraph(n, 0.35, rng, 1 + trial % 3);
    std::vector<Label> labels(n);
    for (Label& l : labels) {
      l = rng() % 4 == 0 ? U : static_cast<Label>(rng() % 3);
    }
    const VertexId v = static_cast<VertexId>(rng() % n);
    labels[v] = U;
    bool has_labeled_neighbor = false;
    for (const Neighbor& nb : g.neighbors(v)) {
      has_labeled_neighbor |= labels[nb.vertex] != U;
    }
    if (!has_labeled_neighbor) continue;
    std::set<Label> present;
    for (Label l : labels) {
      if (l != U) present.insert(l);
    }
    double best = -std::numeric_limits<double>::infinity();
    for (Label l : present) best = std::max(best, InducedQ(g, labels, v, l));
    const Label chosen = *ChooseAttachmentLabel(
        g, labels, v, AttachmentPolicy::kBestModularityGain);
    EXPECT_TRUE(present.count(chosen));
    EXPECT_NEAR(InducedQ(g, labels, v, chosen), best, 1e-12);
    ++checked;
  }
  EXPECT_GE(checked, 100);
}

TEST(AttachmentTest, ScaleInvariant) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = testing::RandomGraph(15, 0.4, rng, 4);
    std::vector<Edge> scaled(g.edges().begin(), g.edges().end());
    for (Edge& e : scaled) e.weight *= 8.0;
    const Graph g8 = *Graph::Create(15, scaled);
    std::vector<Label> labels(15);
    for (Label& l : labels) l = static_cast<Label>(rng() % 3);
    labels[0] = U;
    for (auto policy : {AttachmentPolicy::kWeightedMajority,
                        AttachmentPolicy::kBestModularityGain}) {
      EXPECT_EQ(*ChooseAttachmentLabel(g, labels, 0, policy),
                *ChooseAttachmentLabel(g8, labels, 0, policy));
    }
  }
}

TEST(AttachmentTest, Errors) {
  const Graph g = *Graph::Create(2, {{0, 1, 1}});
  const auto p = AttachmentPolicy::kWeightedMajority;
  EXPECT_THAT(ChooseAttachmentLabel(g, std::vector<Label>{0, 1}, 1, p)
                  .status()
                  .message(),
              HasSubstr("already labeled"));
  EXPECT_FALSE(ChooseAttachmentLabel(g, std::vector<Label>{0}, 0, p).ok());
  EXPECT_FALSE(ChooseAttachmentLabel(g, std::vector<Label>{0, U}, 2, p).ok());
  std::vector<Label> labels = {3, U};
  ASSERT_TRUE(AttachVertex(g, labels, 1, p).ok());
  EXPECT_EQ(labels[1], 3);
}

TEST(RunPhasedTest, PrefixConsistentOnRandomDatasets) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 20 + static_cast<int>(rng() % 60);
    const Graph g = testing::RandomGraph(n, 0.1, rng);
    const Clustering truth = testing::RandomClustering(n, 3, rng);
    const std::vector<double> fractions = {0.3, 0.5, 0.8, 1.0};
    PhasedDataset ds = *GeneratePhasedDataset(g, truth, fractions, rng());
    ClustererConfig config;
    config.algorithm =
        trial % 2 ? Algorithm::kLabelPropagation : Algorithm::kErMixtureEm;
    config.k = 3;
    config.seed = rng();
    for (auto policy : {AttachmentPolicy::kWeightedMajority,
                        AttachmentPolicy::kBestModularityGain}) {
      PhaseTrace trace = *RunPhased(ds, config, policy);
      ASSERT_EQ(trace.phases.size(), 4u);
      ExpectPrefixConsistent(trace);
      for (std::size_t p = 0; p < 4; ++p) {
        EXPECT_EQ(trace.phases[p].vertices, ds.phases[p].vertices);
        EXPECT_TRUE(trace.phases[p].error_fraction.has_value());
      }
    }
  }
}

TEST(RunPhasedTest, SinglePhaseEqualsPlainRun) {
  std::mt19937_64 rng(35);
  const Graph g = testing::RandomGraph(40, 0.15, rng);
  const std::vector<double> fractions = {1.0};
  PhasedDataset ds = *GeneratePhasedDataset(g, std::nullopt, fractions, 9);
  ClustererConfig config;
  config.algorithm = Algorithm::kLabelPropagation;
  config.seed = 4;
  PhaseTrace trace = *RunPhased(ds, config, AttachmentPolicy::kWeightedMajority);
  ASSERT_EQ(trace.phases.size(), 1u);
  Clustering plain = *RunClusterer(g, config);
  EXPECT_EQ(Clustering(trace.phases[0].labels), plain);
  EXPECT_NEAR(*trace.phases[0].q, *Modularity(g, plain), 1e-12);
  EXPECT_FALSE(trace.phases[0].error_fraction.has_value());
}

TEST(RunPhasedTest, CliquesRevealedOneAtATime) {
  // Two 4-cliques joined by one edge; vertices 0..3 come first.
  std::vector<Edge> edges;
  for (int base : {0, 4}) {
    for (int u = base; u < base + 4; ++u) {
      for (int v = u + 1; v < base + 4; ++v) edges.push_back({u, v, 1.0});
    }
  }
  edges.push_back({3, 4, 1.0});
  const Graph g = *Graph::Create(8, edges);
  PhasedDataset ds;
  ds.phases.push_back(*InducedPhase(g, {0, 1, 2, 3}));
  ds.phases.push_back(*InducedPhase(g, {0, 1, 2, 3, 4, 5, 6, 7}));
  ds.truth = Clustering({0, 0, 0, 0, 1, 1, 1, 1});
  ClustererConfig config;
  config.algorithm = Algorithm::kLabelPropagation;
  PhaseTrace trace = *RunPhased(ds, config, AttachmentPolicy::kWeightedMajority);
  // Vertex 4 joins the first clique through the bridge and drags the rest of
  // its clique along.
  EXPECT_EQ(trace.phases[1].labels, std::vector<Label>(8, 0));
  EXPECT_EQ(*trace.phases[1].error_fraction, 0.5);
  ExpectPrefixConsistent(trace);
}

TEST(RunPhasedTest, Serialization) {
  PhaseTrace trace;
  trace.phases.push_back({{0, 2}, {0, 1}, 0.25, std::nullopt});
  trace.phases.push_back({{0, 1, 2}, {0, 0, 1}, std::nullopt, 0.5});
  EXPECT_EQ(SerializeTraceCsv(trace),
            "phase,vertex,label\n0,0,0\n0,2,1\n1,0,0\n1,1,0\n1,2,1\n");
  EXPECT_EQ(SerializePhaseSummaryCsv(trace),
            "phase,n,q,error_fraction\n0,2,0.25,\n1,3,,0.5\n");
}

TEST(RunPhasedTest, Errors) {
  EXPECT_FALSE(RunPhased(PhasedDataset{}, ClustererConfig{},
                         AttachmentPolicy::kWeightedMajority)
                   .ok());
}

}  // namespace
}  // namespace clustval
