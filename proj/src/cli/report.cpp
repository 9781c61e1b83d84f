// SPDX-License-Identifier: Apache-2.0
#include "cli/report.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>

namespace mabeam::cli {

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15e", value);
  return buf;
}

std::vector<PatternRow> beam_pattern(const BeamSolution& solution, const CoverageSpec& coverage,
                                     double wavelength, double step_deg) {
  std::vector<PatternRow> rows;
  const auto add = [&](double deg) {
    const double theta = std::min(deg2rad(deg), std::numbers::pi);
    rows.push_back({deg, beam_gain(solution.weights, solution.positions, theta, wavelength),
                    coverage.contains(theta, 1e-12)});
  };
  const auto count = static_cast<int>(std::floor(180.0 / step_deg + 1e-9));
  for (int i = 0; i <= count; ++i) add(std::min(i * step_deg, 180.0));
  if (count * step_deg < 180.0 - 1e-9) add(180.0);
  return rows;
}

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  return out;
}

}  // namespace

void write_summary(const std::filesystem::path& path, const RunSummary& summary) {
  const BeamSolution& s = summary.solution;
  YAML::Emitter y;
  y << YAML::BeginMap;
  y << YAML::Key << "algorithm" << YAML::Value << s.algorithm;
  if (!s.note.empty()) y << YAML::Key << "note" << YAML::Value << s.note;
  y << YAML::Key << "seed" << YAML::Value << s.seed;
  y << YAML::Key << "num_antennas" << YAML::Value << static_cast<int>(s.positions.size());
  y << YAML::Key << "wavelength_m" << YAML::Value << format_number(summary.wavelength);
  y << YAML::Key << "min_gain_linear" << YAML::Value << format_number(s.min_gain);
  y << YAML::Key << "min_gain_db" << YAML::Value << format_number(s.min_gain_db());
  y << YAML::Key << "argmin_angle_deg" << YAML::Value << format_number(rad2deg(s.argmin_angle));
  y << YAML::Key << "grid_objective_linear" << YAML::Value << format_number(summary.grid_objective);
  y << YAML::Key << "outer_rounds" << YAML::Value << summary.outer_rounds;
  if (s.indices) {
    y << YAML::Key << "indices" << YAML::Value << YAML::Flow << YAML::BeginSeq;
    for (int m : *s.indices) y << m;
    y << YAML::EndSeq;
  }
  y << YAML::Key << "positions_m" << YAML::Value << YAML::Flow << YAML::BeginSeq;
  for (Eigen::Index n = 0; n < s.positions.size(); ++n) y << format_number(s.positions[n]);
  y << YAML::EndSeq;
  y << YAML::Key << "positions_wavelengths" << YAML::Value << YAML::Flow << YAML::BeginSeq;
  for (Eigen::Index n = 0; n < s.positions.size(); ++n) y << format_number(s.positions[n] / summary.wavelength);
  y << YAML::EndSeq;
  y << YAML::Key << "weights" << YAML::Value << YAML::BeginSeq;
  for (Eigen::Index n = 0; n < s.weights.size(); ++n)
    y << YAML::Flow << YAML::BeginSeq << format_number(s.weights[n].real()) << format_number(s.weights[n].imag())
      << YAML::EndSeq;
  y << YAML::EndSeq;
  y << YAML::Key << "runtime_seconds" << YAML::Value << format_number(s.runtime_seconds);
  y << YAML::EndMap;
  auto out = open_output(path);
  out << y.c_str() << '\n';
}

void write_pattern(const std::filesystem::path& path, const std::vector<PatternRow>& rows) {
  auto out = open_output(path);
  out << "angle_deg,gain_linear,gain_db,in_region\n";
  for (const auto& r : rows)
    out << format_number(r.angle_deg) << ',' << format_number(r.gain_linear) << ','
        << format_number(to_db(r.gain_linear)) << ',' << (r.in_region ? 1 : 0) << '\n';
}

void write_trace(const std::filesystem::path& path, const OptimizerTrace& trace) {
  auto out = open_output(path);
  const auto join = [](const IndexVector& u) {
    std::string s;
    for (std::size_t n = 0; n < u.size(); ++n) s += (n ? " " : "") + std::to_string(u[n]);
    return s;
  };
  out << "round,phase,step,objective,elapsed_seconds,indices\n";
  out << "0,initial,0," << format_number(trace.initial_objective) << ',' << format_number(0.0) << ','
      << join(trace.initial) << '\n';
  for (std::size_t i = 0; i < trace.rounds.size(); ++i) {
    const auto& r = trace.rounds[i];
    const auto round = std::to_string(i + 1);
    out << round << ",sequential,0," << format_number(r.sequential_objective) << ",,\n";
    for (std::size_t t = 0; t < r.gibbs_best.size(); ++t)
      out << round << ",gibbs," << t << ',' << format_number(r.gibbs_best[t]) << ",,\n";
    out << round << ",outer,0," << format_number(r.objective) << ',' << format_number(r.elapsed_seconds) << ','
        << join(r.indices) << '\n';
  }
}

}  // namespace mabeam::cli
