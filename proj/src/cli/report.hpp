// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "mabeam/optimize.hpp"
#include "mabeam/solution.hpp"

namespace mabeam::cli {

/// Scientific notation with 16 significant digits.
std::string format_number(double value);

struct PatternRow {
  double angle_deg;
  double gain_linear;
  bool in_region;
};

/// Gain over [0, 180] degrees at `step_deg`, always including both ends.
std::vector<PatternRow> beam_pattern(const BeamSolution& solution, const CoverageSpec& coverage,
                                     double wavelength, double step_deg);

struct RunSummary {
  BeamSolution solution;
  double grid_objective = 0.0;  // worst gain over the optimization samples
  double wavelength = 0.0;
  int outer_rounds = 0;
};

void write_summary(const std::filesystem::path& path, const RunSummary& summary);
void write_pattern(const std::filesystem::path& path, const std::vector<PatternRow>& rows);
void write_trace(const std::filesystem::path& path, const OptimizerTrace& trace);

}  // namespace mabeam::cli
