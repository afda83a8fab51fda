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

#include "clustval/meta_similarity.h"

#include <algorithm>
#include <charconv>
#include <string_view>
#include <unordered_map>

#include "absl/strings/str_cat.h"
#include "clustval/status_macros.h"

namespace clustval {
namespace {

std::int64_t Choose2(std::int64_t x) { return x * (x - 1) / 2; }

}  // namespace

// Disagreeing pairs are those together in exactly one clustering:
//   sum_i C(a_i, 2) + sum_j C(b_j, 2) - 2 * sum_ij C(n_ij, 2).
absl::StatusOr<std::int64_t> PairAgreement(const Clustering& a,
                                           const Clustering& b) {
  RETURN_IF_ERROR(CheckSameLength(a, b));
  const std::vector<Label> ca = CanonicalLabels(a.labels());
  const std::vector<Label> cb = CanonicalLabels(b.labels());
  const std::size_t ka = a.num_clusters();
  const std::size_t kb = b.num_clusters();

  std::vector<std::int64_t> row(ka, 0), col(kb, 0);
  std::unordered_map<std::int64_t, std::int64_t> cells;
  for (std::size_t x = 0; x < ca.size(); ++x) {
    ++row[ca[x]];
    ++col[cb[x]];
    ++cells[static_cast<std::int64_t>(ca[x]) * static_cast<std::int64_t>(kb) +
            cb[x]];
  }
  std::int64_t together_a = 0, together_b = 0, together_both = 0;
  for (std::int64_t size : row) together_a += Choose2(size);
  for (std::int64_t size : col) together_b += Choose2(size);
  for (const auto& [cell, size] : cells) together_both += Choose2(size);

  const auto n = static_cast<std::int64_t>(a.size());
  return Choose2(n) - (together_a + together_b - 2 * together_both);
}

absl::StatusOr<MetaGraph> MetaGraph::FromMatrix(
    std::size_t size, std::vector<std::int64_t> weights) {
  if (weights.size() != size * size) {
    return absl::InvalidArgumentError("matrix is not square");
  }
  for (std::size_t i = 0; i < size; ++i) {
    if (weights[i * size + i] != 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("nonzero diagonal entry at ", i));
    }
    for (std::size_t j = 0; j < size; ++j) {
      if (weights[i * size + j] < 0) {
        return absl::InvalidArgumentError("negative similarity");
      }
      if (weights[i * size + j] != weights[j * size + i]) {
        return absl::InvalidArgumentError(
            absl::StrCat("matrix not symmetric at (", i, ",", j, ")"));
      }
    }
  }
  MetaGraph meta;
  meta.size_ = size;
  meta.weights_ = std::move(weights);
  return meta;
}

absl::StatusOr<MetaGraph> BuildMetaGraph(
    std::span<const Clustering> clusterings) {
  const std::size_t m = clusterings.size();
  for (const Clustering& c : clusterings) {
    RETURN_IF_ERROR(CheckSameLength(c, clusterings.front()));
  }
  std::vector<std::int64_t> weights(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      ASSIGN_OR_RETURN(std::int64_t w,
                       PairAgreement(clusterings[i], clusterings[j]));
      weights[i * m + j] = w;
      weights[j * m + i] = w;
    }
  }
  return MetaGraph::FromMatrix(m, std::move(weights));
}

absl::StatusOr<MetaGraph> BuildMetaGraph(const Ensemble& ensemble) {
  std::vector<Clustering> clusterings;
  for (const EnsembleRun& run : ensemble.runs) {
    clusterings.push_back(run.clustering);
  }
  return BuildMetaGraph(clusterings);
}

std::string SerializeMetaGraphCsv(const MetaGraph& meta) {
  std::string out;
  for (std::size_t i = 0; i < meta.size(); ++i) {
    for (std::size_t j = 0; j < meta.size(); ++j) {
      absl::StrAppend(&out, j == 0 ? "" : ",", meta.at(i, j));
    }
    out += '\n';
  }
  return out;
}

absl::StatusOr<MetaGraph> ParseMetaGraphCsv(const std::string& text) {
  std::vector<std::vector<std::int64_t>> rows;
  std::string_view rest = text;
  std::size_t line_no = 0;
  while (!rest.empty()) {
    ++line_no;
    const std::size_t end = rest.find('\n');
    std::string_view line = rest.substr(0, end);
    rest = end == std::string_view::npos ? std::string_view()
                                         : rest.substr(end + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos ||
        line.front() == '#') {
      continue;
    }
    std::vector<std::int64_t> row;
    std::size_t pos = 0;
    while (pos < line.size()) {
      const std::size_t start = line.find_first_not_of(" \t,", pos);
      if (start == std::string_view::npos) break;
      std::size_t stop = line.find_first_of(" \t,", start);
      if (stop == std::string_view::npos) stop = line.size();
      std::int64_t value = 0;
      auto [ptr, ec] =
          std::from_chars(line.data() + start, line.data() + stop, value);
      if (ec != std::errc() || ptr != line.data() + stop) {
        return absl::InvalidArgumentError(
            absl::StrCat("line ", line_no, ": not an integer"));
      }
      row.push_back(value);
      pos = stop;
    }
    rows.push_back(std::move(row));
  }
  const std::size_t m = rows.size();
  std::vector<std::int64_t> weights;
  weights.reserve(m * m);
  for (const auto& row : rows) {
    if (row.size() != m) {
      return absl::InvalidArgumentError(absl::StrCat(
          "expected ", m, " entries per row, got ", row.size()));
    }
    weights.insert(weights.end(), row.begin(), row.end());
  }
  return MetaGraph::FromMatrix(m, std::move(weights));
}

}  // namespace clustval
