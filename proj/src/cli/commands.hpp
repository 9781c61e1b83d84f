// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <exception>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "cli/report.hpp"

namespace mabeam::cli {

struct RunOutput {
  RunSummary summary;
  std::vector<PatternRow> pattern;
  std::optional<OptimizerTrace> trace;
};

/// Runs the configured algorithm. The reported minimum gain covers both the
/// optimization samples and the in-region pattern samples.
RunOutput execute(const ExperimentConfig& cfg);

/// execute() plus summary.yaml, pattern.csv and (when enabled) trace.csv in
/// cfg.output_dir.
RunOutput run(const ExperimentConfig& cfg);

struct CompareCell {
  std::string algorithm;
  int num_antennas = 0;
  std::uint64_t seed = 0;
  double min_gain_db = 0.0;
  double runtime_seconds = 0.0;
  std::string status = "ok";
};

/// Runs every (algorithm, N, seed) cell, each into its own subdirectory, and
/// writes comparison.csv sorted by algorithm, N, then seed. Cell failures are
/// recorded in the table instead of aborting the sweep.
std::vector<CompareCell> compare(const ExperimentConfig& base, const std::vector<std::string>& algorithms,
                                 const std::vector<std::uint64_t>& seeds, const std::vector<int>& antenna_counts,
                                 int jobs);

/// Short category label and process exit status for an error.
struct ErrorCategory {
  const char* label;
  int exit_code;
};
ErrorCategory categorize(const std::exception& e);

}  // namespace mabeam::cli
