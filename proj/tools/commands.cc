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

#include "commands.h"

#include <algorithm>
#include <filesystem>
#include <system_error>
#include <utility>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "clustval/generators.h"
#include "clustval/graph_io.h"
#include "clustval/meta_similarity.h"
#include "clustval/min_cut.h"
#include "clustval/random.h"
#include "clustval/status_macros.h"
#include "clustval/validity.h"
#include "clustval/wgc.h"

namespace clustval::cli {
namespace {

namespace fs = std::filesystem;

// Collects output files in a sibling staging directory and moves them into
// place only on Commit(). Anything left over is removed on destruction.
class StagedOutput {
 public:
  explicit StagedOutput(std::string out_dir) : out_dir_(std::move(out_dir)) {}
  ~StagedOutput() {
    std::error_code ec;
    if (!staging_.empty()) fs::remove_all(staging_, ec);
  }
  StagedOutput(const StagedOutput&) = delete;
  StagedOutput& operator=(const StagedOutput&) = delete;

  absl::Status Open() {
    if (out_dir_.empty()) return absl::InvalidArgumentError("--out is required");
    fs::path target = fs::absolute(fs::path(out_dir_)).lexically_normal();
    if (target.filename().empty()) target = target.parent_path();
    staging_ = target.parent_path() / ("." + target.filename().string() +
                                       ".staging");
    std::error_code ec;
    fs::remove_all(staging_, ec);
    if (!fs::create_directories(staging_, ec) || ec) {
      staging_.clear();
      return absl::PermissionDeniedError(
          absl::StrCat("cannot create output directory next to ", out_dir_));
    }
    return absl::OkStatus();
  }

  absl::Status Write(const std::string& name, const std::string& contents) {
    files_.push_back(name);
    return WriteFile((staging_ / name).string(), contents);
  }

  absl::Status Commit() {
    const fs::path target(out_dir_);
    std::error_code ec;
    const bool existed = fs::exists(target, ec);
    fs::create_directories(target, ec);
    if (ec) {
      return absl::PermissionDeniedError(
          absl::StrCat("cannot create ", out_dir_, ": ", ec.message()));
    }
    for (const std::string& name : files_) {
      fs::rename(staging_ / name, target / name, ec);
      if (ec) {
        if (!existed) fs::remove_all(target, ec);
        return absl::InternalError(
            absl::StrCat("cannot move ", name, " into ", out_dir_));
      }
    }
    return absl::OkStatus();
  }

 private:
  std::string out_dir_;
  fs::path staging_;
  std::vector<std::string> files_;
};

void AddClustererFields(const ClustererConfig& config, Manifest& manifest) {
  manifest["algo"] = AlgorithmName(config.algorithm);
  manifest["k"] = absl::StrCat(config.k);
  manifest["max_iterations"] = absl::StrCat(config.max_iterations);
  manifest["restarts"] = absl::StrCat(config.restarts);
  manifest["tolerance"] = FormatDouble(config.tolerance);
}

std::string RunFileName(std::size_t index) {
  std::string digits = absl::StrCat(index);
  if (digits.size() < 3) digits.insert(0, 3 - digits.size(), '0');
  return absl::StrCat("run_", digits, ".csv");
}

absl::StatusOr<std::vector<std::string>> ListRunFiles(const std::string& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    return absl::NotFoundError(absl::StrCat("not a directory: ", dir));
  }
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    const std::string name = entry.path().filename().string();
    if (entry.is_regular_file() && name.starts_with("run_") &&
        name.ends_with(".csv")) {
      files.push_back(entry.path().string());
    }
  }
  if (ec) return absl::InternalError(absl::StrCat("cannot list ", dir));
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace

std::string SerializeManifest(const Manifest& manifest) {
  std::string out;
  for (const auto& [key, value] : manifest) {
    absl::StrAppend(&out, key, "=", value, "\n");
  }
  return out;
}

absl::Status RunEnsembleCommand(const EnsembleOptions& options) {
  StagedOutput output(options.out_dir);
  RETURN_IF_ERROR(output.Open());
  ASSIGN_OR_RETURN(Graph graph, LoadEdgeListFile(options.graph_path));
  ASSIGN_OR_RETURN(Ensemble ensemble,
                   RunEnsemble(graph, options.clusterer, options.runs,
                               options.seed, options.threads));

  Manifest manifest;
  manifest["command"] = "ensemble";
  manifest["out"] = options.out_dir;
  manifest["graph"] = options.graph_path;
  manifest["runs"] = absl::StrCat(options.runs);
  manifest["seed"] = absl::StrCat(options.seed);
  manifest["vertices"] = absl::StrCat(graph.vertex_count());
  manifest["edges"] = absl::StrCat(graph.edge_count());
  AddClustererFields(options.clusterer, manifest);
  for (std::size_t i = 0; i < ensemble.runs.size(); ++i) {
    const std::string name = RunFileName(i);
    RETURN_IF_ERROR(
        output.Write(name, SerializeClusteringCsv(ensemble.runs[i].clustering)));
    manifest[absl::StrCat("run.", name, ".seed")] =
        absl::StrCat(ensemble.runs[i].config.seed);
  }
  RETURN_IF_ERROR(output.Write("manifest.txt", SerializeManifest(manifest)));
  return output.Commit();
}

absl::Status RunSelectCommand(const SelectOptions& options) {
  if (options.ensemble_dir.empty() == options.matrix_path.empty()) {
    return absl::InvalidArgumentError(
        "give exactly one of --ensemble and --matrix");
  }
  if (options.target_groups.has_value() == options.threshold.has_value()) {
    return absl::InvalidArgumentError(
        "give exactly one of --target-groups and --threshold");
  }
  StagedOutput output(options.out_dir);
  RETURN_IF_ERROR(output.Open());

  Manifest manifest;
  manifest["command"] = "select";
  manifest["out"] = options.out_dir;
  std::vector<Clustering> runs;
  MetaGraph meta;
  if (!options.ensemble_dir.empty()) {
    manifest["ensemble"] = options.ensemble_dir;
    ASSIGN_OR_RETURN(std::vector<std::string> files,
                     ListRunFiles(options.ensemble_dir));
    if (files.empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("no run_*.csv files in ", options.ensemble_dir));
    }
    for (const std::string& file : files) {
      ASSIGN_OR_RETURN(Clustering run, LoadClusteringFile(file));
      if (!runs.empty() && run.size() != runs.front().size()) {
        return absl::InvalidArgumentError(absl::StrCat(
            file, " has ", run.size(), " vertices, expected ",
            runs.front().size()));
      }
      runs.push_back(std::move(run));
    }
    ASSIGN_OR_RETURN(meta, BuildMetaGraph(runs));
  } else {
    manifest["matrix"] = options.matrix_path;
    ASSIGN_OR_RETURN(std::string text, ReadFile(options.matrix_path));
    ASSIGN_OR_RETURN(meta, ParseMetaGraphCsv(text));
    if (meta.size() == 0) return absl::InvalidArgumentError("empty matrix");
  }

  StopRule stop;
  if (options.target_groups) {
    stop = TargetGroups{*options.target_groups};
    manifest["target_groups"] = absl::StrCat(*options.target_groups);
  } else {
    stop = RelativeCutThreshold{*options.threshold};
    manifest["threshold"] = FormatDouble(*options.threshold);
  }
  ASSIGN_OR_RETURN(MetaClustering groups,
                   WgcCluster(WeightMatrix::FromMetaGraph(meta), stop));

  std::optional<Graph> graph;
  if (!options.graph_path.empty()) {
    if (runs.empty()) {
      return absl::InvalidArgumentError("--graph needs --ensemble input");
    }
    ASSIGN_OR_RETURN(graph, LoadEdgeListFile(options.graph_path));
    manifest["graph"] = options.graph_path;
  }
  std::optional<Clustering> truth;
  if (!options.truth_path.empty()) {
    if (runs.empty()) {
      return absl::InvalidArgumentError("--truth needs --ensemble input");
    }
    ASSIGN_OR_RETURN(truth, LoadClusteringFile(options.truth_path));
    manifest["truth"] = options.truth_path;
  }
  ASSIGN_OR_RETURN(
      ValidityReport report,
      BuildValidityReport(graph ? &*graph : nullptr, runs,
                          truth ? &*truth : nullptr, meta, groups));

  RETURN_IF_ERROR(output.Write("cc.csv", SerializeMetaGraphCsv(meta)));
  RETURN_IF_ERROR(
      output.Write("metaclusters.csv", SerializeMetaClusteringCsv(groups)));
  RETURN_IF_ERROR(output.Write("report.txt", SerializeReport(report)));
  if (truth) {
    RETURN_IF_ERROR(output.Write("error_rate.csv", ErrorRateTableCsv(report)));
  }
  if (graph) {
    RETURN_IF_ERROR(output.Write("q.csv", ModularityTableCsv(report)));
    RETURN_IF_ERROR(output.Write("dunn.csv", DunnTableCsv(report)));
  }
  RETURN_IF_ERROR(output.Write("manifest.txt", SerializeManifest(manifest)));
  return output.Commit();
}

absl::Status RunPhasedCommand(const PhasedOptions& options) {
  StagedOutput output(options.out_dir);
  RETURN_IF_ERROR(output.Open());
  ASSIGN_OR_RETURN(Graph graph, LoadEdgeListFile(options.graph_path));
  std::optional<Clustering> truth;
  if (!options.truth_path.empty()) {
    ASSIGN_OR_RETURN(truth, LoadClusteringFile(options.truth_path));
  }
  // The vertex order uses a seed derived from --seed; the first-phase
  // clusterer uses --seed itself.
  const std::uint64_t phase_seed = Mix64(options.seed);
  ASSIGN_OR_RETURN(PhasedDataset dataset,
                   GeneratePhasedDataset(graph, truth, options.fractions,
                                         phase_seed));
  ClustererConfig clusterer = options.clusterer;
  clusterer.seed = options.seed;
  ASSIGN_OR_RETURN(PhaseTrace trace,
                   RunPhased(dataset, clusterer, options.policy));

  Manifest manifest;
  manifest["command"] = "phased";
  manifest["out"] = options.out_dir;
  manifest["graph"] = options.graph_path;
  if (truth) manifest["truth"] = options.truth_path;
  std::vector<std::string> fractions;
  for (double f : options.fractions) fractions.push_back(FormatDouble(f));
  manifest["fractions"] = absl::StrJoin(fractions, ",");
  manifest["policy"] = PolicyName(options.policy);
  manifest["seed"] = absl::StrCat(options.seed);
  manifest["phase_seed"] = absl::StrCat(phase_seed);
  AddClustererFields(clusterer, manifest);

  RETURN_IF_ERROR(output.Write("trace.csv", SerializeTraceCsv(trace)));
  RETURN_IF_ERROR(output.Write("phases.csv", SerializePhaseSummaryCsv(trace)));
  RETURN_IF_ERROR(output.Write("manifest.txt", SerializeManifest(manifest)));
  return output.Commit();
}

absl::Status RunValidateCommand(const ValidateOptions& options,
                                std::ostream& out, std::ostream& err) {
  ASSIGN_OR_RETURN(Graph graph, LoadEdgeListFile(options.graph_path));
  ASSIGN_OR_RETURN(Clustering clustering,
                   LoadClusteringFile(options.clustering_path));
  if (clustering.size() != static_cast<std::size_t>(graph.vertex_count())) {
    return absl::InvalidArgumentError(absl::StrCat(
        "clustering labels ", clustering.size(), " vertices, graph has ",
        graph.vertex_count()));
  }
  std::optional<ErrorRate> error;
  if (!options.truth_path.empty()) {
    ASSIGN_OR_RETURN(Clustering truth, LoadClusteringFile(options.truth_path));
    ASSIGN_OR_RETURN(error, AlignedErrorRate(clustering, truth));
  }

  std::vector<std::string> problems;
  auto measure = [&](const char* name, absl::StatusOr<double> value) {
    if (value.ok()) return FormatDouble(*value);
    err << name << " undefined: " << value.status().message() << "\n";
    problems.push_back(absl::StrCat(name, ": ", value.status().message()));
    return std::string();
  };
  const std::string q = measure("q", Modularity(graph, clustering));
  const std::string dunn = measure("dunn", DunnIndex(graph, clustering));
  const std::string count = error ? absl::StrCat(error->count) : "";
  const std::string fraction = error ? FormatDouble(error->fraction) : "";

  if (options.csv) {
    out << "q,dunn,error_count,error_fraction\n"
        << q << "," << dunn << "," << count << "," << fraction << "\n";
  } else {
    out << "q=" << (q.empty() ? "undefined" : q) << "\n";
    out << "dunn=" << (dunn.empty() ? "undefined" : dunn) << "\n";
    if (error) {
      out << "error_count=" << count << "\n";
      out << "error_fraction=" << fraction << "\n";
    }
  }
  if (options.strict && !problems.empty()) {
    return absl::FailedPreconditionError(absl::StrJoin(problems, "; "));
  }
  return absl::OkStatus();
}

}  // namespace clustval::cli
