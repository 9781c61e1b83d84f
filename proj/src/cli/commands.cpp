// SPDX-License-Identifier: Apache-2.0
#include "cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <thread>
#include <tuple>

#include "mabeam/baselines.hpp"

namespace mabeam::cli {

RunOutput execute(const ExperimentConfig& cfg) {
  cfg.validate();
  const Problem problem(cfg.array(), cfg.coverage(), cfg.num_positions, deg2rad(cfg.angular_step_deg));
  const std::uint64_t seed = cfg.optimizer.rng_seed;

  RunOutput out;
  const auto start = std::chrono::steady_clock::now();
  BeamSolution solution;
  if (cfg.algorithm == "mnf-su-gs" || cfg.algorithm == "mnf-su") {
    OptimizerConfig opt = cfg.optimizer;
    if (cfg.algorithm == "mnf-su") opt.gibbs_rounds = 0;
    std::optional<IndexVector> init;
    if (cfg.initialization == "fpa") init = fpa_indices(problem);
    SolveResult result = solve(problem, opt, std::move(init));
    solution = make_solution(problem, result.indices, cfg.algorithm);
    out.summary.outer_rounds = static_cast<int>(result.trace.rounds.size());
    out.trace = std::move(result.trace);
  } else if (cfg.algorithm == "fpa") {
    solution = fpa_solution(problem);
  } else if (cfg.algorithm == "random") {
    solution = random_solution(problem, seed);
  } else {
    solution = exhaustive_solution(problem, cfg.exhaustive_cap);
  }
  solution.seed = seed;
  solution.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  out.summary.wavelength = problem.array().wavelength;
  out.summary.grid_objective = solution.min_gain;
  const CoverageSpec coverage = cfg.coverage();
  out.pattern = beam_pattern(solution, coverage, problem.array().wavelength, cfg.pattern_step_deg);
  for (const auto& row : out.pattern)
    if (row.in_region && row.gain_linear < solution.min_gain) {
      solution.min_gain = row.gain_linear;
      solution.argmin_angle = deg2rad(row.angle_deg);
    }
  out.summary.solution = std::move(solution);
  return out;
}

RunOutput run(const ExperimentConfig& cfg) {
  RunOutput out = execute(cfg);
  std::filesystem::create_directories(cfg.output_dir);
  write_summary(cfg.output_dir / "summary.yaml", out.summary);
  write_pattern(cfg.output_dir / "pattern.csv", out.pattern);
  if (cfg.emit_trace && out.trace) write_trace(cfg.output_dir / "trace.csv", *out.trace);
  return out;
}

std::vector<CompareCell> compare(const ExperimentConfig& base, const std::vector<std::string>& algorithms,
                                 const std::vector<std::uint64_t>& seeds, const std::vector<int>& antenna_counts,
                                 int jobs) {
  if (algorithms.empty()) throw ValidationError("compare needs at least one algorithm");
  if (seeds.empty()) throw ValidationError("compare needs at least one seed");
  const auto& known = known_algorithms();
  for (const auto& a : algorithms)
    if (std::find(known.begin(), known.end(), a) == known.end())
      throw ValidationError("unknown algorithm '" + a + "'");
  const std::vector<int> counts = antenna_counts.empty() ? std::vector<int>{base.num_antennas} : antenna_counts;

  std::vector<CompareCell> cells;
  for (const auto& a : algorithms)
    for (int n : counts)
      for (auto s : seeds) cells.push_back({a, n, s, 0.0, 0.0, "ok"});
  std::sort(cells.begin(), cells.end(), [](const CompareCell& x, const CompareCell& y) {
    return std::tie(x.algorithm, x.num_antennas, x.seed) < std::tie(y.algorithm, y.num_antennas, y.seed);
  });
  cells.erase(std::unique(cells.begin(), cells.end(),
                          [](const CompareCell& x, const CompareCell& y) {
                            return x.algorithm == y.algorithm && x.num_antennas == y.num_antennas && x.seed == y.seed;
                          }),
              cells.end());

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      CompareCell& cell = cells[i];
      ExperimentConfig cfg = base;
      cfg.algorithm = cell.algorithm;
      cfg.num_antennas = cell.num_antennas;
      cfg.optimizer.rng_seed = cell.seed;
      cfg.output_dir = base.output_dir / "cells" /
                       (cell.algorithm + "_N" + std::to_string(cell.num_antennas) + "_seed" + std::to_string(cell.seed));
      try {
        const RunOutput out = run(cfg);
        cell.min_gain_db = out.summary.solution.min_gain_db();
        cell.runtime_seconds = out.summary.solution.runtime_seconds;
      } catch (const std::exception& e) {
        cell.status = std::string("error[") + categorize(e).label + "]: " + e.what();
        cell.min_gain_db = std::numeric_limits<double>::quiet_NaN();
        cell.runtime_seconds = std::numeric_limits<double>::quiet_NaN();
      }
    }
  };
  const int threads = std::clamp(jobs, 1, static_cast<int>(cells.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::filesystem::create_directories(base.output_dir);
  std::ofstream table(base.output_dir / "comparison.csv", std::ios::binary);
  if (!table) throw std::runtime_error("cannot write comparison table");
  table << "algorithm,N,seed,min_gain_db,runtime_seconds,status\n";
  for (const auto& c : cells) {
    std::string status = c.status;
    std::replace(status.begin(), status.end(), ',', ';');
    std::replace(status.begin(), status.end(), '\n', ' ');
    table << c.algorithm << ',' << c.num_antennas << ',' << c.seed << ',' << format_number(c.min_gain_db) << ','
          << format_number(c.runtime_seconds) << ',' << status << '\n';
  }
  return cells;
}

ErrorCategory categorize(const std::exception& e) {
  if (dynamic_cast<const ValidationError*>(&e)) return {"validation", 2};
  if (dynamic_cast<const InfeasibleGeometry*>(&e)) return {"infeasible", 3};
  if (dynamic_cast<const DegenerateProfile*>(&e)) return {"degenerate", 4};
  if (dynamic_cast<const SearchTooLarge*>(&e)) return {"search-too-large", 5};
  return {"runtime", 1};
}

}  // namespace mabeam::cli
