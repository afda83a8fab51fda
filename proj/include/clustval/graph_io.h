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

#ifndef CLUSTVAL_GRAPH_IO_H_
#define CLUSTVAL_GRAPH_IO_H_

#include <string>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "clustval/clustering.h"
#include "clustval/graph.h"

namespace clustval {

// Parses an edge list. Each non-comment line is "u v" or "u v w" (weight
// defaults to 1). Lines starting with '#' and blank lines are skipped. An
// optional "n <count>" line fixes the vertex count; otherwise it is one more
// than the largest id seen. Both '\n' and "\r\n" line endings are accepted.
// Errors name the offending 1-based line.
absl::StatusOr<Graph> ParseEdgeList(const std::string& text);

// Writes "n <count>" followed by one "u v w" line per edge. Weights use the
// shortest decimal form that round-trips.
std::string SerializeEdgeList(const Graph& graph);

// Clustering CSV: one "vertex,label" pair per line, optional "vertex,label"
// header. Every vertex in [0, n) must appear exactly once.
absl::StatusOr<Clustering> ParseClusteringCsv(const std::string& text);
std::string SerializeClusteringCsv(const Clustering& clustering);

absl::StatusOr<std::string> ReadFile(const std::string& path);
absl::Status WriteFile(const std::string& path, const std::string& contents);

absl::StatusOr<Graph> LoadEdgeListFile(const std::string& path);
absl::StatusOr<Clustering> LoadClusteringFile(const std::string& path);

// Shortest round-trip decimal representation.
std::string FormatDouble(double value);

}  // namespace clustval

#endif  // CLUSTVAL_GRAPH_IO_H_
