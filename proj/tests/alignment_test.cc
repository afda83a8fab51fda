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
#include <numeric>
#include <random>
#include <vector>

#include "clustval/alignment.h"
#include "clustval/assignment.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace clustval {
namespace {

using ::testing::ElementsAre;
using ::testing::Pair;
using ::testing::UnorderedElementsAre;

Clustering PermuteLabels(const Clustering& c, std::mt19937_64& rng) {
  const std::vector<Label> distinct = c.DistinctLabels();
  std::vector<Label> image(distinct.size());
  std::iota(image.begin(), image.end(), 100);
  std::shuffle(image.begin(), image.end(), rng);
  std::vector<Label> out;
  for (Label l : c.labels()) {
    out.push_back(image[std::lower_bound(distinct.begin(), distinct.end(), l) -
                        distinct.begin()]);
  }
  return Clustering(out);
}

TEST(MembershipIndicatorTest, DirectMembership) {
  const Clustering c({0, 1});
  EXPECT_EQ(*MembershipIndicator(c, 0, 0), 1);
  EXPECT_EQ(*MembershipIndicator(c, 0, 1), 0);
  EXPECT_FALSE(MembershipIndicator(c, 2, 0).ok());
  EXPECT_FALSE(MembershipIndicator(c, -1, 0).ok());
}

TEST(MembershipIndicatorTest, EachVertexInExactlyOneCluster) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const Clustering c = testing::RandomClustering(25, 1 + trial % 6, rng);
    for (VertexId x = 0; x < 25; ++x) {
      int total = 0;
      for (Label z : c.DistinctLabels()) total += *MembershipIndicator(c, x, z);
      EXPECT_EQ(total, 1);
    }
  }
}

TEST(OverlapMatrixTest, IdenticalClusteringsAreDiagonal) {
  const Clustering c({0, 0, 1});
  OverlapMatrix m = *ComputeOverlapMatrix(c, c);
  EXPECT_THAT(m.counts, ElementsAre(2, 0, 0, 1));
}

TEST(OverlapMatrixTest, HandCountedExample) {
  const Clustering c({1, 1, 0, 0, 0, 0});
  const Clustering ref({0, 0, 0, 1, 1, 1});
  OverlapMatrix m = *ComputeOverlapMatrix(c, ref);
  EXPECT_THAT(m.row_labels, ElementsAre(0, 1));
  EXPECT_THAT(m.col_labels, ElementsAre(0, 1));
  EXPECT_THAT(m.counts, ElementsAre(1, 3, 2, 0));
}

TEST(OverlapMatrixTest, LengthMismatch) {
  EXPECT_FALSE(ComputeOverlapMatrix(Clustering({0}), Clustering({0, 1})).ok());
}

TEST(OverlapMatrixTest, MatchesIndicatorDoubleLoopAndMarginals) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 200);
    const Clustering c = testing::RandomClustering(n, 1 + trial % 7, rng);
    const Clustering ref = testing::RandomClustering(n, 1 + trial % 5, rng);
    OverlapMatrix m = *ComputeOverlapMatrix(c, ref);
    std::int64_t total = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      std::int64_t row_sum = 0;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        std::int64_t brute = 0;
        for (VertexId x = 0; x < n; ++x) {
          brute += *MembershipIndicator(c, x, m.row_labels[i]) *
                   *MembershipIndicator(ref, x, m.col_labels[j]);
        }
        EXPECT_EQ(m.at(i, j), brute);
        row_sum += m.at(i, j);
      }
      EXPECT_EQ(row_sum, std::count(c.labels().begin(), c.labels().end(),
                                    m.row_labels[i]));
      total += row_sum;
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::int64_t col_sum = 0;
      for (std::size_t i = 0; i < m.rows(); ++i) col_sum += m.at(i, j);
      EXPECT_EQ(col_sum, std::count(ref.labels().begin(), ref.labels().end(),
                                    m.col_labels[j]));
    }
    EXPECT_EQ(total, n);
  }
}

TEST(AssignmentTest, PrefersSmallestColumnsAmongOptima) {
  // Every permutation scores 3; the identity is lexicographically smallest.
  const std::vector<std::int64_t> ones(9, 1);
  EXPECT_THAT(LexMinMaxWeightAssignment(3, 3, ones), ElementsAre(0, 1, 2));
  // Two optimal matchings of value 5: {0->1, 1->0} and {0->0, 1->1}.
  const std::vector<std::int64_t> w = {2, 3, 2, 3};
  EXPECT_THAT(LexMinMaxWeightAssignment(2, 2, w), ElementsAre(0, 1));
  EXPECT_EQ(MaxWeightAssignmentValue(2, 2, w), 5);
}

TEST(AssignmentTest, RectangularLeavesSurplusRowsUnassigned) {
  // 3 rows, 1 column; row 1 has the largest weight.
  const std::vector<std::int64_t> w = {1, 4, 2};
  EXPECT_THAT(LexMinMaxWeightAssignment(3, 1, w),
              ElementsAre(kUnassigned, 0, kUnassigned));
  // 1 row, 3 columns.
  EXPECT_THAT(LexMinMaxWeightAssignment(1, 3, w), ElementsAre(1));
  EXPECT_THAT(LexMinMaxWeightAssignment(0, 3, {}), ElementsAre());
}

TEST(AlignLabelsTest, FixedPoint) {
  const Clustering c({3, 3, 5, 7, 5});
  Alignment a = *AlignLabels(c, c);
  EXPECT_EQ(a.aligned, c);
  EXPECT_THAT(a.mapping, UnorderedElementsAre(Pair(3, 3), Pair(5, 5), Pair(7, 7)));
  EXPECT_EQ(a.matched, 5);
}

TEST(AlignLabelsTest, HandExample) {
  const Clustering c({1, 1, 0, 0, 0, 0});
  const Clustering ref({0, 0, 0, 1, 1, 1});
  Alignment a = *AlignLabels(c, ref);
  EXPECT_THAT(a.mapping, ElementsAre(Pair(0, 1), Pair(1, 0)));
  EXPECT_EQ(a.aligned, Clustering({0, 0, 1, 1, 1, 1}));
  EXPECT_EQ(a.matched, 5);
  ErrorRate e = *ComputeErrorRate(a.aligned, ref);
  EXPECT_EQ(e.count, 1);
  EXPECT_DOUBLE_EQ(e.fraction, 1.0 / 6.0);
}

TEST(AlignLabelsTest, SurplusLabelsGetFreshLabels) {
  const Clustering c({0, 0, 1, 1, 2, 3});
  const Clustering ref({4, 4, 6, 6, 6, 6});
  Alignment a = *AlignLabels(c, ref);
  // 0 -> 4 and 1 -> 6 are forced; 2 and 3 get 7 and 8 in label order.
  EXPECT_THAT(a.mapping,
              ElementsAre(Pair(0, 4), Pair(1, 6), Pair(2, 7), Pair(3, 8)));
  EXPECT_EQ(a.matched, 4);
}

TEST(AlignLabelsTest, FewerLabelsMapInjectively) {
  const Clustering c({0, 0, 0, 0});
  const Clustering ref({0, 1, 1, 2});
  Alignment a = *AlignLabels(c, ref);
  EXPECT_THAT(a.mapping, ElementsAre(Pair(0, 1)));
  EXPECT_EQ(ComputeErrorRate(a.aligned, ref)->count, 2);
}

TEST(AlignLabelsTest, MatchesExhaustivePermutationOracle) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 40);
    const Clustering c =
        testing::RandomClustering(n, 1 + static_cast<int>(rng() % 6), rng);
    const Clustering ref =
        testing::RandomClustering(n, 1 + static_cast<int>(rng() % 6), rng);
    Alignment a = *AlignLabels(c, ref);
    EXPECT_EQ(a.matched, testing::BestMatchByPermutation(c, ref));
    EXPECT_EQ(n - ComputeErrorRate(a.aligned, ref)->count, a.matched);
    // Never worse than leaving the labels alone.
    std::int64_t identity = 0;
    for (int x = 0; x < n; ++x) identity += c.label(x) == ref.label(x);
    EXPECT_GE(a.matched, identity);
  }
}

TEST(AlignLabelsTest, ErrorIsInvariantUnderRelabeling) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Clustering c = testing::RandomClustering(40, 2 + trial % 5, rng);
    const Clustering ref = testing::RandomClustering(40, 2 + trial % 4, rng);
    EXPECT_EQ(AlignedErrorRate(c, ref)->count,
              AlignedErrorRate(PermuteLabels(c, rng), ref)->count);
  }
}

TEST(AlignLabelsTest, ErrorIsSymmetricForEqualClusterCounts) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = 2 + trial % 4;
    Clustering c = testing::RandomClustering(30, k, rng);
    Clustering ref = testing::RandomClustering(30, k, rng);
    if (c.num_clusters() != ref.num_clusters()) continue;
    EXPECT_EQ(AlignedErrorRate(c, ref)->count, AlignedErrorRate(ref, c)->count);
  }
}

TEST(ErrorRateTest, EdgeCases) {
  EXPECT_EQ(ComputeErrorRate(Clustering({0, 1}), Clustering({0, 1}))->count, 0);
  ErrorRate empty = *ComputeErrorRate(Clustering(), Clustering());
  EXPECT_EQ(empty.count, 0);
  EXPECT_EQ(empty.fraction, 0.0);
  EXPECT_FALSE(ComputeErrorRate(Clustering({0}), Clustering({0, 0})).ok());
  EXPECT_FALSE(AlignLabels(Clustering({0}), Clustering({0, 0})).ok());
}

}  // namespace
}  // namespace clustval
