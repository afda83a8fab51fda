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

#ifndef CLUSTVAL_TOOLS_COMMANDS_H_
#define CLUSTVAL_TOOLS_COMMANDS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "clustval/clusterers.h"
#include "clustval/incremental.h"

namespace clustval::cli {

// Flat key=value manifest, keys sorted.
using Manifest = std::map<std::string, std::string>;
std::string SerializeManifest(const Manifest& manifest);

struct EnsembleOptions {
  std::string graph_path;
  ClustererConfig clusterer;
  std::int32_t runs = 10;
  std::uint64_t seed = 0;
  std::int32_t threads = 1;
  std::string out_dir;
};

// Writes run_000.csv ... and manifest.txt.
absl::Status RunEnsembleCommand(const EnsembleOptions& options);

struct SelectOptions {
  // Exactly one of the two inputs.
  std::string ensemble_dir;  // run_*.csv files
  std::string matrix_path;   // precomputed similarity matrix
  std::string graph_path;    // optional: enables Q and Dunn
  std::string truth_path;    // optional: enables error rates
  std::optional<int> target_groups;
  std::optional<double> threshold;
  std::string out_dir;
};

// Writes cc.csv, metaclusters.csv, report.txt, manifest.txt and, when the
// per-run measures exist, error_rate.csv / q.csv / dunn.csv.
absl::Status RunSelectCommand(const SelectOptions& options);

struct PhasedOptions {
  std::string graph_path;
  std::string truth_path;  // optional
  std::vector<double> fractions;
  AttachmentPolicy policy = AttachmentPolicy::kWeightedMajority;
  ClustererConfig clusterer;
  std::uint64_t seed = 0;
  std::string out_dir;
};

// Writes trace.csv, phases.csv and manifest.txt.
absl::Status RunPhasedCommand(const PhasedOptions& options);

struct ValidateOptions {
  std::string graph_path;
  std::string clustering_path;
  std::string truth_path;  // optional
  bool csv = false;
  bool strict = false;
};

// Prints the measures to `out`; notes about undefined measures go to `err`.
// With `strict`, an undefined measure is an error.
absl::Status RunValidateCommand(const ValidateOptions& options,
                                std::ostream& out, std::ostream& err);

}  // namespace clustval::cli

#endif  // CLUSTVAL_TOOLS_COMMANDS_H_
