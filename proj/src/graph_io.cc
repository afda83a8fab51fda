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

#include "clustval/graph_io.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <string_view>
#include <system_error>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "clustval/status_macros.h"

namespace clustval {
namespace {

// Splits on '\n', dropping a trailing '\r' from every line.
std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  return lines;
}

std::vector<std::string_view> SplitTokens(std::string_view line,
                                          std::string_view separators) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    std::size_t start = line.find_first_not_of(separators, pos);
    if (start == std::string_view::npos) break;
    std::size_t end = line.find_first_of(separators, start);
    if (end == std::string_view::npos) end = line.size();
    tokens.push_back(line.substr(start, end - start));
    pos = end;
  }
  return tokens;
}

std::string_view Trim(std::string_view s) {
  const std::string_view kSpace = " \t";
  std::size_t start = s.find_first_not_of(kSpace);
  if (start == std::string_view::npos) return {};
  std::size_t end = s.find_last_not_of(kSpace);
  return s.substr(start, end - start + 1);
}

std::optional<std::int64_t> ParseInt(std::string_view token) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(),
                                   value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    return std::nullopt;
  }
  return value;
}

std::optional<double> ParseReal(std::string_view token) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(),
                                   value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    return std::nullopt;
  }
  return value;
}

constexpr Label kUnsetLabel = -1;
constexpr std::int64_t kMaxVertexId = std::numeric_limits<VertexId>::max() - 1;

absl::Status LineError(std::size_t line, std::string_view what) {
  return absl::InvalidArgumentError(
      absl::StrCat("line ", line, ": ", std::string(what)));
}

}  // namespace

absl::StatusOr<Graph> ParseEdgeList(const std::string& text) {
  std::optional<std::int64_t> declared_count;
  std::vector<Edge> edges;
  std::int64_t max_id = -1;
  std::vector<std::size_t> edge_lines;

  const std::vector<std::string_view> lines = SplitLines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    std::string_view line = Trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string_view> tokens = SplitTokens(line, " \t");

    if (tokens[0] == "n") {
      if (tokens.size() != 2) return LineError(line_no, "malformed header");
      if (declared_count.has_value()) {
        return LineError(line_no, "repeated vertex-count header");
      }
      std::optional<std::int64_t> count = ParseInt(tokens[1]);
      if (!count || *count < 0 || *count > kMaxVertexId + 1) {
        return LineError(line_no, "invalid vertex count");
      }
      declared_count = count;
      continue;
    }

    if (tokens.size() != 2 && tokens.size() != 3) {
      return LineError(line_no, "expected \"u v\" or \"u v w\"");
    }
    std::optional<std::int64_t> u = ParseInt(tokens[0]);
    std::optional<std::int64_t> v = ParseInt(tokens[1]);
    if (!u || !v || *u < 0 || *v < 0 || *u > kMaxVertexId ||
        *v > kMaxVertexId) {
      return LineError(line_no, "invalid vertex id");
    }
    double weight = 1.0;
    if (tokens.size() == 3) {
      std::optional<double> w = ParseReal(tokens[2]);
      if (!w || !std::isfinite(*w)) return LineError(line_no, "invalid weight");
      weight = *w;
    }
    if (*u == *v) return LineError(line_no, "self-loop");
    if (!(weight > 0.0)) return LineError(line_no, "non-positive weight");
    max_id = std::max({max_id, *u, *v});
    edges.push_back({static_cast<VertexId>(*u), static_cast<VertexId>(*v),
                     weight});
    edge_lines.push_back(line_no);
  }

  std::int64_t vertex_count = max_id + 1;
  if (declared_count.has_value()) {
    if (max_id >= *declared_count) {
      return absl::InvalidArgumentError(
          absl::StrCat("vertex id ", max_id, " exceeds declared count ",
                       *declared_count));
    }
    vertex_count = *declared_count;
  }

  absl::StatusOr<Graph> graph =
      Graph::Create(static_cast<VertexId>(vertex_count), edges);
  if (!graph.ok()) {
    // Only duplicates can fail here; find the first offending line.
    std::set<std::pair<VertexId, VertexId>> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto key = std::minmax(edges[i].u, edges[i].v);
      if (!seen.insert(key).second) {
        return LineError(edge_lines[i],
                         absl::StrCat("duplicate edge (", key.first, ",",
                                      key.second, ")"));
      }
    }
    return graph.status();
  }
  return graph;
}

std::string FormatDouble(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

std::string SerializeEdgeList(const Graph& graph) {
  std::string out = absl::StrCat("n ", graph.vertex_count(), "\n");
  for (const Edge& edge : graph.edges()) {
    absl::StrAppend(&out, edge.u, " ", edge.v, " ", FormatDouble(edge.weight),
                    "\n");
  }
  return out;
}

absl::StatusOr<Clustering> ParseClusteringCsv(const std::string& text) {
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  const std::vector<std::string_view> lines = SplitLines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    std::string_view line = Trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    std::size_t comma = line.find(',');
    if (comma == std::string_view::npos) {
      return LineError(line_no, "expected \"vertex,label\"");
    }
    std::string_view first = Trim(line.substr(0, comma));
    std::string_view second = Trim(line.substr(comma + 1));
    if (pairs.empty() && first == "vertex" && second == "label") continue;
    std::optional<std::int64_t> vertex = ParseInt(first);
    std::optional<std::int64_t> label = ParseInt(second);
    if (!vertex || !label || *vertex < 0 || *vertex > kMaxVertexId ||
        *label < 0 || *label > std::numeric_limits<Label>::max()) {
      return LineError(line_no, "invalid vertex or label");
    }
    pairs.emplace_back(*vertex, *label);
  }

  std::vector<Label> labels(pairs.size(), kUnsetLabel);
  for (const auto& [vertex, label] : pairs) {
    if (vertex >= static_cast<std::int64_t>(pairs.size())) {
      return absl::InvalidArgumentError(absl::StrCat(
          "vertex ", vertex, " out of range: ", pairs.size(),
          " vertices listed"));
    }
    if (labels[vertex] != kUnsetLabel) {
      return absl::InvalidArgumentError(
          absl::StrCat("vertex ", vertex, " listed twice"));
    }
    labels[vertex] = static_cast<Label>(label);
  }
  return Clustering(std::move(labels));
}

std::string SerializeClusteringCsv(const Clustering& clustering) {
  std::string out = "vertex,label\n";
  for (std::size_t v = 0; v < clustering.size(); ++v) {
    absl::StrAppend(&out, v, ",", clustering.label(v), "\n");
  }
  return out;
}

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::ostringstream contents;
  contents << in.rdbuf();
  if (in.bad()) return absl::DataLossError(absl::StrCat("read failed: ", path));
  return contents.str();
}

absl::Status WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return absl::PermissionDeniedError(absl::StrCat("cannot write ", path));
  }
  out << contents;
  out.flush();
  if (!out) return absl::DataLossError(absl::StrCat("write failed: ", path));
  return absl::OkStatus();
}

absl::StatusOr<Graph> LoadEdgeListFile(const std::string& path) {
  ASSIGN_OR_RETURN(std::string text, ReadFile(path));
  absl::StatusOr<Graph> graph = ParseEdgeList(text);
  if (!graph.ok()) {
    return absl::Status(graph.status().code(),
                        absl::StrCat(path, ": ", graph.status().message()));
  }
  return graph;
}

absl::StatusOr<Clustering> LoadClusteringFile(const std::string& path) {
  ASSIGN_OR_RETURN(std::string text, ReadFile(path));
  absl::StatusOr<Clustering> clustering = ParseClusteringCsv(text);
  if (!clustering.ok()) {
    return absl::Status(
        clustering.status().code(),
        absl::StrCat(path, ": ", clustering.status().message()));
  }
  return clustering;
}

}  // namespace clustval
