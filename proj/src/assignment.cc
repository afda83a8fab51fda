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

#include "clustval/assignment.h"

#include <algorithm>
#include <limits>
#include <numeric>

namespace clustval {
namespace {

struct Solution {
  std::int64_t value = 0;
  std::vector<int> row_to_col;  // indexed like the `rows` argument
};

// Hungarian method (shortest augmenting paths with potentials) on the
// submatrix selected by `rows` x `cols`. Matches min(|rows|, |cols|) pairs,
// which is optimal because weights are non-negative.
Solution Solve(int total_cols, std::span<const std::int64_t> weights,
               std::span<const int> rows, std::span<const int> cols) {
  Solution solution;
  solution.row_to_col.assign(rows.size(), kUnassigned);
  if (rows.empty() || cols.empty()) return solution;

  const bool transpose = rows.size() > cols.size();
  const std::span<const int> left = transpose ? cols : rows;
  const std::span<const int> right = transpose ? rows : cols;
  auto cost = [&](std::size_t i, std::size_t j) {
    const int r = transpose ? right[j] : left[i];
    const int c = transpose ? left[i] : right[j];
    return -weights[static_cast<std::size_t>(r) * total_cols + c];
  };

  const std::size_t n = left.size();
  const std::size_t m = right.size();
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> u(n + 1, 0), v(m + 1, 0);
  std::vector<std::size_t> p(m + 1, 0), way(m + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<std::int64_t> minv(m + 1, kInf);
    std::vector<bool> used(m + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      std::int64_t delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const std::int64_t reduced = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (reduced < minv[j]) {
          minv[j] = reduced;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  for (std::size_t j = 1; j <= m; ++j) {
    if (p[j] == 0) continue;
    const std::size_t i = p[j] - 1;
    const std::size_t row_index = transpose ? j - 1 : i;
    const int col = transpose ? left[i] : right[j - 1];
    solution.row_to_col[row_index] = col;
    solution.value -= cost(i, j - 1);
  }
  return solution;
}

}  // namespace

std::int64_t MaxWeightAssignmentValue(int rows, int cols,
                                      std::span<const std::int64_t> weights) {
  std::vector<int> row_ids(static_cast<std::size_t>(rows));
  std::vector<int> col_ids(static_cast<std::size_t>(cols));
  std::iota(row_ids.begin(), row_ids.end(), 0);
  std::iota(col_ids.begin(), col_ids.end(), 0);
  return Solve(cols, weights, row_ids, col_ids).value;
}

// Row by row, each row takes the smallest column that still admits an
// optimal completion. `current` always holds one optimal completion of the
// fixed prefix, so only columns smaller than current[r] need a check.
std::vector<int> LexMinMaxWeightAssignment(
    int rows, int cols, std::span<const std::int64_t> weights) {
  std::vector<int> row_ids(static_cast<std::size_t>(rows));
  std::vector<int> col_ids(static_cast<std::size_t>(cols));
  std::iota(row_ids.begin(), row_ids.end(), 0);
  std::iota(col_ids.begin(), col_ids.end(), 0);
  const Solution best = Solve(cols, weights, row_ids, col_ids);
  std::vector<int> current = best.row_to_col;

  auto weight = [&](int r, int c) {
    return weights[static_cast<std::size_t>(r) * cols + c];
  };
  auto rank = [](int col) {
    return col == kUnassigned ? std::numeric_limits<int>::max() : col;
  };

  std::vector<bool> col_free(static_cast<std::size_t>(cols), true);
  std::int64_t fixed_value = 0;
  for (int r = 0; r < rows; ++r) {
    std::vector<int> rest_rows(row_ids.begin() + r + 1, row_ids.end());
    for (int c = 0; c < rank(current[r]) && c < cols; ++c) {
      if (!col_free[c]) continue;
      std::vector<int> rest_cols;
      for (int j = 0; j < cols; ++j) {
        if (col_free[j] && j != c) rest_cols.push_back(j);
      }
      const Solution rest = Solve(cols, weights, rest_rows, rest_cols);
      if (fixed_value + weight(r, c) + rest.value == best.value) {
        current[r] = c;
        std::copy(rest.row_to_col.begin(), rest.row_to_col.end(),
                  current.begin() + r + 1);
        break;
      }
    }
    if (current[r] != kUnassigned) {
      col_free[current[r]] = false;
      fixed_value += weight(r, current[r]);
    }
  }
  return current;
}

}  // namespace clustval
