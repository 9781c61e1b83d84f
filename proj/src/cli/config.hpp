// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "mabeam/core.hpp"
#include "mabeam/optimize.hpp"

namespace mabeam::cli {

struct RegionDegrees {
  double theta_min_deg = 0.0;
  double theta_max_deg = 0.0;
  double beta = 1.0;
};

/// Everything one run needs. Defaults reproduce the reference scenario:
/// 1 GHz carrier, 10-wavelength segment, 8 antennas at >= lambda/2 spacing,
/// coverage of [0, 20] and [150, 180] degrees, 500 grid points.
struct ExperimentConfig {
  double carrier_frequency_hz = 1e9;
  double aperture_wavelengths = 10.0;
  int num_antennas = 8;
  double min_spacing_wavelengths = 0.5;

  std::vector<RegionDegrees> regions{{0.0, 20.0, 1.0}, {150.0, 180.0, 1.0}};

  int num_positions = 500;
  double angular_step_deg = 0.5;

  OptimizerConfig optimizer;
  std::string initialization = "uniform";  // or "fpa"

  std::string algorithm = "mnf-su-gs";
  std::filesystem::path output_dir = "mabeam-out";
  double pattern_step_deg = 0.1;
  bool emit_trace = false;
  double exhaustive_cap = 1e6;

  double wavelength() const { return kSpeedOfLight / carrier_frequency_hz; }
  ArrayConfig array() const;
  CoverageSpec coverage() const;

  /// Throws ValidationError naming the offending field or region.
  void validate() const;
};

inline const std::vector<std::string>& known_algorithms() {
  static const std::vector<std::string> names{"mnf-su-gs", "mnf-su", "fpa", "random", "exhaustive"};
  return names;
}

/// Reads a YAML config on top of the defaults. Unknown keys are rejected.
ExperimentConfig load_config(const std::filesystem::path& path);
ExperimentConfig parse_config(const std::string& yaml_text);

}  // namespace mabeam::cli
