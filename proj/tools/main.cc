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

// clustval: pick the most repeated clustering out of an ensemble of runs and
// compare it with modularity, Dunn and ground-truth error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "clustval/clusterers.h"
#include "clustval/incremental.h"
#include "commands.h"

namespace {

using clustval::Algorithm;
using clustval::AttachmentPolicy;
using clustval::ClustererConfig;

void AddClustererFlags(CLI::App* cmd, ClustererConfig& config,
                       std::string& algo) {
  cmd->add_option("--algo", algo, "Base clusterer: em or lp")
      ->check(CLI::IsMember({"em", "lp"}))
      ->capture_default_str();
  cmd->add_option("--k", config.k, "Class count for the mixture model")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--max-iterations", config.max_iterations,
                  "Iteration / sweep limit")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--tolerance", config.tolerance,
                  "Log-likelihood convergence threshold")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--restarts", config.restarts,
                  "Mixture-model starts; the best likelihood is kept")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

int Report(const absl::Status& status) {
  if (status.ok()) return 0;
  std::cerr << "error: " << status.message() << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Consensus selection over clustering ensembles"};
  app.require_subcommand(1);

  clustval::cli::EnsembleOptions ensemble;
  std::string ensemble_algo = "em";
  CLI::App* ensemble_cmd =
      app.add_subcommand("ensemble", "Cluster a graph repeatedly");
  ensemble_cmd->add_option("--graph", ensemble.graph_path, "Edge-list file")
      ->required();
  AddClustererFlags(ensemble_cmd, ensemble.clusterer, ensemble_algo);
  ensemble_cmd->add_option("--runs", ensemble.runs, "Number of runs")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  ensemble_cmd->add_option("--seed", ensemble.seed, "Base seed")
      ->capture_default_str();
  ensemble_cmd->add_option("--threads", ensemble.threads, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  ensemble_cmd->add_option("--out", ensemble.out_dir, "Output directory")
      ->required();

  clustval::cli::SelectOptions select;
  std::optional<int> target_groups;
  std::optional<double> threshold;
  CLI::App* select_cmd = app.add_subcommand(
      "select", "Meta-cluster an ensemble and pick the consensus run");
  auto* ensemble_opt = select_cmd->add_option(
      "--ensemble", select.ensemble_dir, "Directory of run_*.csv files");
  auto* matrix_opt = select_cmd->add_option(
      "--matrix", select.matrix_path, "Similarity matrix CSV");
  ensemble_opt->excludes(matrix_opt);
  select_cmd->add_option("--graph", select.graph_path,
                         "Edge-list file (enables Q and Dunn)");
  select_cmd->add_option("--truth", select.truth_path,
                         "Reference clustering (enables error rates)");
  auto* target_opt = select_cmd->add_option("--target-groups", target_groups,
                                            "Stop at this many groups");
  auto* threshold_opt = select_cmd->add_option(
      "--threshold", threshold, "Stop when every relative cut exceeds this");
  target_opt->excludes(threshold_opt);
  select_cmd->add_option("--out", select.out_dir, "Output directory")
      ->required();

  clustval::cli::PhasedOptions phased;
  std::string phased_algo = "em";
  std::string policy = "majority";
  CLI::App* phased_cmd = app.add_subcommand(
      "phased", "Reveal a graph in phases and attach arriving vertices");
  phased_cmd->add_option("--graph", phased.graph_path, "Edge-list file")
      ->required();
  phased_cmd->add_option("--truth", phased.truth_path, "Reference clustering");
  phased_cmd->add_option("--fractions", phased.fractions,
                         "Comma-separated cumulative fractions ending in 1")
      ->delimiter(',')
      ->required();
  phased_cmd->add_option("--policy", policy, "majority or modgain")
      ->check(CLI::IsMember({"majority", "modgain"}))
      ->capture_default_str();
  AddClustererFlags(phased_cmd, phased.clusterer, phased_algo);
  phased_cmd->add_option("--seed", phased.seed, "Seed")->capture_default_str();
  phased_cmd->add_option("--out", phased.out_dir, "Output directory")
      ->required();

  clustval::cli::ValidateOptions validate;
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "Print Q, Dunn and error for a clustering");
  validate_cmd->add_option("--graph", validate.graph_path, "Edge-list file")
      ->required();
  validate_cmd->add_option("--clustering", validate.clustering_path,
                           "Clustering CSV")
      ->required();
  validate_cmd->add_option("--truth", validate.truth_path,
                           "Reference clustering");
  validate_cmd->add_flag("--csv", validate.csv, "CSV output");
  validate_cmd->add_flag("--strict", validate.strict,
                         "Fail when a measure is undefined");

  CLI11_PARSE(app, argc, argv);

  if (*ensemble_cmd) {
    ensemble.clusterer.algorithm = *clustval::ParseAlgorithm(ensemble_algo);
    return Report(clustval::cli::RunEnsembleCommand(ensemble));
  }
  if (*select_cmd) {
    select.target_groups = target_groups;
    select.threshold = threshold;
    return Report(clustval::cli::RunSelectCommand(select));
  }
  if (*phased_cmd) {
    phased.clusterer.algorithm = *clustval::ParseAlgorithm(phased_algo);
    phased.policy = *clustval::ParsePolicy(policy);
    return Report(clustval::cli::RunPhasedCommand(phased));
  }
  return Report(
      clustval::cli::RunValidateCommand(validate, std::cout, std::cerr));
}
