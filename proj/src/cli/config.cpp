// SPDX-License-Identifier: Apache-2.0
#include "cli/config.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace mabeam::cli {

ArrayConfig ExperimentConfig::array() const {
  const double lambda = wavelength();
  ArrayConfig a;
  a.wavelength = lambda;
  a.aperture = aperture_wavelengths * lambda;
  a.num_antennas = num_antennas;
  a.min_spacing = min_spacing_wavelengths * lambda;
  return a;
}

CoverageSpec ExperimentConfig::coverage() const {
  CoverageSpec spec;
  for (const auto& r : regions) spec.regions.push_back({deg2rad(r.theta_min_deg), deg2rad(r.theta_max_deg), r.beta});
  return spec;
}

void ExperimentConfig::validate() const {
  const auto fail = [](const std::string& msg) { throw ValidationError(msg); };
  if (!(carrier_frequency_hz > 0.0)) fail("array.carrier_frequency_hz must be positive");
  if (!(aperture_wavelengths > 0.0)) fail("array.aperture_wavelengths must be positive");
  if (num_antennas < 1) fail("array.num_antennas must be at least 1");
  if (!(min_spacing_wavelengths > 0.0)) fail("array.min_spacing_wavelengths must be positive");
  if (regions.empty()) fail("regions: at least one region is required");
  for (std::size_t k = 0; k < regions.size(); ++k) {
    const auto& r = regions[k];
    const std::string tag = "region " + std::to_string(k + 1) + ": ";
    if (!(r.theta_min_deg >= 0.0 && r.theta_max_deg <= 180.0))
      fail(tag + "angles must lie in [0, 180] degrees");
    if (r.theta_min_deg > r.theta_max_deg) fail(tag + "theta_min_deg exceeds theta_max_deg");
    if (!(r.beta > 0.0)) fail(tag + "beta must be positive");
  }
  coverage().validate();
  if (num_positions < 2) fail("grid.num_positions must be at least 2");
  if (!(angular_step_deg > 0.0)) fail("grid.angular_step_deg must be positive");
  optimizer.validate();
  if (initialization != "uniform" && initialization != "fpa")
    fail("optimizer.initialization must be 'uniform' or 'fpa'");
  const auto& algos = known_algorithms();
  if (std::find(algos.begin(), algos.end(), algorithm) == algos.end())
    fail("unknown algorithm '" + algorithm + "'");
  if (!(pattern_step_deg > 0.0 && pattern_step_deg <= 180.0))
    fail("pattern_step_deg must lie in (0, 180]");
  if (!(exhaustive_cap >= 1.0)) fail("exhaustive_cap must be at least 1");
}

namespace {

void reject_unknown(const YAML::Node& node, const std::string& section, const std::set<std::string>& allowed) {
  if (!node.IsMap()) throw ValidationError(section + " must be a mapping");
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    if (!allowed.count(key))
      throw ValidationError("unknown key '" + (section.empty() ? key : section + "." + key) + "'");
  }
}

template <typename T>
void read(const YAML::Node& node, const char* key, T& out, const std::string& section) {
  if (!node[key]) return;
  try {
    out = node[key].as<T>();
  } catch (const YAML::Exception&) {
    throw ValidationError("invalid value for '" + (section.empty() ? std::string(key) : section + "." + key) + "'");
  }
}

ExperimentConfig from_node(const YAML::Node& root) {
  ExperimentConfig cfg;
  if (root.IsNull()) return cfg;
  reject_unknown(root, "", {"array", "regions", "grid", "optimizer", "algorithm", "output_dir",
                            "pattern_step_deg", "emit_trace", "exhaustive_cap"});
  if (const auto a = root["array"]) {
    reject_unknown(a, "array", {"carrier_frequency_hz", "aperture_wavelengths", "num_antennas",
                                "min_spacing_wavelengths"});
    read(a, "carrier_frequency_hz", cfg.carrier_frequency_hz, "array");
    read(a, "aperture_wavelengths", cfg.aperture_wavelengths, "array");
    read(a, "num_antennas", cfg.num_antennas, "array");
    read(a, "min_spacing_wavelengths", cfg.min_spacing_wavelengths, "array");
  }
  if (const auto regions = root["regions"]) {
    if (!regions.IsSequence()) throw ValidationError("regions must be a list");
    cfg.regions.clear();
    for (std::size_t k = 0; k < regions.size(); ++k) {
      const std::string tag = "regions[" + std::to_string(k + 1) + "]";
      const auto r = regions[k];
      reject_unknown(r, tag, {"theta_min_deg", "theta_max_deg", "beta"});
      if (!r["theta_min_deg"] || !r["theta_max_deg"])
        throw ValidationError("region " + std::to_string(k + 1) + ": theta_min_deg and theta_max_deg are required");
      RegionDegrees rd;
      read(r, "theta_min_deg", rd.theta_min_deg, tag);
      read(r, "theta_max_deg", rd.theta_max_deg, tag);
      read(r, "beta", rd.beta, tag);
      cfg.regions.push_back(rd);
    }
  }
  if (const auto g = root["grid"]) {
    reject_unknown(g, "grid", {"num_positions", "angular_step_deg"});
    read(g, "num_positions", cfg.num_positions, "grid");
    read(g, "angular_step_deg", cfg.angular_step_deg, "grid");
  }
  if (const auto o = root["optimizer"]) {
    reject_unknown(o, "optimizer", {"gibbs_rounds", "max_index_shift", "gibbs_temperature", "candidates_per_step",
                                    "max_outer_rounds", "convergence_tol", "seed", "initialization"});
    auto& opt = cfg.optimizer;
    read(o, "gibbs_rounds", opt.gibbs_rounds, "optimizer");
    read(o, "max_index_shift", opt.max_index_shift, "optimizer");
    read(o, "gibbs_temperature", opt.gibbs_temperature, "optimizer");
    read(o, "candidates_per_step", opt.candidates_per_step, "optimizer");
    read(o, "max_outer_rounds", opt.max_outer_rounds, "optimizer");
    read(o, "convergence_tol", opt.convergence_tol, "optimizer");
    read(o, "seed", opt.rng_seed, "optimizer");
    read(o, "initialization", cfg.initialization, "optimizer");
  }
  read(root, "algorithm", cfg.algorithm, "");
  std::string out_dir;
  read(root, "output_dir", out_dir, "");
  if (!out_dir.empty()) cfg.output_dir = out_dir;
  read(root, "pattern_step_deg", cfg.pattern_step_deg, "");
  read(root, "emit_trace", cfg.emit_trace, "");
  read(root, "exhaustive_cap", cfg.exhaustive_cap, "");
  return cfg;
}

}  // namespace

ExperimentConfig parse_config(const std::string& yaml_text) {
  YAML::Node root;
  try {
    root = YAML::Load(yaml_text);
  } catch (const YAML::Exception& e) {
    throw ValidationError(std::string("config is not valid YAML: ") + e.what());
  }
  return from_node(root);
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace mabeam::cli
