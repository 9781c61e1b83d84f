// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <yaml-cpp/yaml.h>

#include <cmath>

#include "cli/commands.hpp"
#include "cli_helpers.hpp"
#include "mabeam/baselines.hpp"

using namespace mabeam;
using namespace mabeam::cli;
using doctest::Approx;
namespace fs = std::filesystem;

namespace {

std::string error_of(const std::string& yaml) {
  try {
    parse_config(yaml).validate();
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

const std::string kBinary = MABEAM_BINARY;

}  // namespace

TEST_CASE("config parsing") {
  SUBCASE("shipped config matches the defaults apart from the seed") {
    const auto cfg = load_config(MABEAM_DEFAULT_CONFIG);
    const ExperimentConfig def;
    CHECK(cfg.num_antennas == def.num_antennas);
    CHECK(cfg.num_positions == def.num_positions);
    CHECK(cfg.regions.size() == 2);
    CHECK(cfg.regions[1].theta_min_deg == 150.0);
    CHECK(cfg.optimizer.rng_seed == 7);
    CHECK(cfg.optimizer.gibbs_temperature == 5.0);
    CHECK(cfg.wavelength() == Approx(kSpeedOfLight / 1e9));
    CHECK_NOTHROW(cfg.validate());
  }
  SUBCASE("partial config keeps the other defaults") {
    const auto cfg = parse_config("array: {num_antennas: 4}\noptimizer: {seed: 3}\n");
    CHECK(cfg.num_antennas == 4);
    CHECK(cfg.optimizer.rng_seed == 3);
    CHECK(cfg.aperture_wavelengths == 10.0);
    CHECK(cfg.algorithm == "mnf-su-gs");
  }
  SUBCASE("path gains reach the coverage spec") {
    const auto cfg = parse_config("regions:\n  - {theta_min_deg: 10, theta_max_deg: 30, beta: 2.5}\n");
    const auto cov = cfg.coverage();
    REQUIRE(cov.size() == 1);
    CHECK(cov.regions[0].path_gain == 2.5);
    CHECK(cov.regions[0].theta_max == Approx(deg2rad(30.0)));
  }
  SUBCASE("errors name what is wrong") {
    CHECK(error_of("regions:\n  - {theta_min_deg: 0, theta_max_deg: 20}\n  - {theta_min_deg: 90, theta_max_deg: 40}\n")
              .find("region 2") != std::string::npos);
    CHECK(error_of("regions:\n  - {theta_min_deg: 0, theta_max_deg: 200}\n").find("region 1") != std::string::npos);
    CHECK(error_of("array: {colour: red}\n").find("array.colour") != std::string::npos);
    CHECK(error_of("speed: 3\n").find("'speed'") != std::string::npos);
    CHECK(error_of("algorithm: simulated-annealing\n").find("simulated-annealing") != std::string::npos);
    CHECK(error_of("array: {num_antennas: many}\n").find("array.num_antennas") != std::string::npos);
    CHECK(error_of("optimizer: {gibbs_temperature: -1}\n") != "");
    CHECK(error_of("regions: [\n") != "");
    CHECK(error_of("regions:\n  - {theta_min_deg: 0, theta_max_deg: 30}\n  - {theta_min_deg: 20, theta_max_deg: 40}\n")
              .find("overlap") != std::string::npos);
  }
}

TEST_CASE("report formatting") {
  CHECK(format_number(1.0) == "1.000000000000000e+00");
  CHECK(format_number(-0.00125) == "-1.250000000000000e-03");
}

TEST_CASE("beam pattern sampling") {
  const ExperimentConfig cfg;
  const Problem p(cfg.array(), cfg.coverage(), 100, deg2rad(1.0));
  const auto s = fpa_solution(p);
  const auto rows = beam_pattern(s, cfg.coverage(), cfg.wavelength(), 0.1);
  REQUIRE(rows.size() == 1801);
  CHECK(rows.front().angle_deg == 0.0);
  CHECK(rows.back().angle_deg == 180.0);
  CHECK(rows[200].in_region);
  CHECK_FALSE(rows[201].in_region);
  CHECK(rows[1500].in_region);
  for (std::size_t i = 0; i < rows.size(); i += 97)
    CHECK(rows[i].gain_linear == Approx(beam_gain(s.weights, s.positions, deg2rad(rows[i].angle_deg), cfg.wavelength()))
                                     .epsilon(1e-12));
  CHECK(beam_pattern(s, cfg.coverage(), cfg.wavelength(), 7.0).back().angle_deg == 180.0);
}

TEST_CASE("run writes consistent, reproducible outputs") {
  const auto dir = testutil::scratch_dir("cli-run");
  auto cfg = load_config(MABEAM_DEFAULT_CONFIG);
  cfg.emit_trace = true;
  cfg.output_dir = dir / "a";
  const auto out = run(cfg);
  cfg.output_dir = dir / "b";
  run(cfg);

  const auto pattern = testutil::read_pattern(dir / "a" / "pattern.csv");
  REQUIRE(pattern.size() == 1801);
  double worst = 1e300, at = -1;
  for (const auto& r : pattern)
    if (r.in_region && r.gain_linear < worst) worst = r.gain_linear, at = r.angle_deg;

  const auto summary = YAML::LoadFile((dir / "a" / "summary.yaml").string());
  const double reported = std::stod(summary["min_gain_linear"].as<std::string>());
  CHECK(std::abs(reported - worst) <= 1e-6 * worst);
  CHECK(std::abs(std::stod(summary["min_gain_db"].as<std::string>()) - 10 * std::log10(worst)) < 1e-4);
  CHECK(std::stod(summary["argmin_angle_deg"].as<std::string>()) == Approx(at));
  CHECK(std::stod(summary["grid_objective_linear"].as<std::string>()) >= reported);
  CHECK(summary["indices"].size() == 8);
  CHECK(summary["weights"].size() == 8);
  CHECK(summary["algorithm"].as<std::string>() == "mnf-su-gs");
  CHECK(out.summary.solution.min_gain == Approx(reported).epsilon(1e-14));

  for (const char* f : {"pattern.csv", "trace.csv"})
    CHECK(testutil::trace_without_timing(testutil::read_text(dir / "a" / f)) ==
          testutil::trace_without_timing(testutil::read_text(dir / "b" / f)));
  CHECK(testutil::without_timing(testutil::read_text(dir / "a" / "summary.yaml")) ==
        testutil::without_timing(testutil::read_text(dir / "b" / "summary.yaml")));

  const auto trace = testutil::read_text(dir / "a" / "trace.csv");
  CHECK(trace.rfind("round,phase,step,objective,elapsed_seconds,indices\n0,initial,0,", 0) == 0);
  CHECK(trace.find(",gibbs,49,") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("other algorithms through execute") {
  ExperimentConfig cfg;
  cfg.output_dir = testutil::scratch_dir("cli-exec");
  SUBCASE("fpa with one antenna is isotropic") {
    cfg.algorithm = "fpa";
    cfg.num_antennas = 1;
    const auto out = execute(cfg);
    CHECK(out.summary.solution.min_gain_db() == Approx(0.0).scale(1.0).epsilon(1e-10));
    CHECK_FALSE(out.trace.has_value());
  }
  SUBCASE("Gibbs exploration never ends below sequential-only") {
    cfg.optimizer.rng_seed = 7;
    cfg.algorithm = "mnf-su";
    const double su = execute(cfg).summary.grid_objective;
    cfg.algorithm = "mnf-su-gs";
    const double gs = execute(cfg).summary.grid_objective;
    CHECK(gs >= su);
  }
  SUBCASE("exhaustive refuses the default scenario") {
    cfg.algorithm = "exhaustive";
    CHECK_THROWS_AS(execute(cfg), SearchTooLarge);
  }
  SUBCASE("random placement is reproducible") {
    cfg.algorithm = "random";
    cfg.optimizer.rng_seed = 11;
    CHECK(execute(cfg).summary.solution.indices == execute(cfg).summary.solution.indices);
  }
  fs::remove_all(cfg.output_dir);
}

TEST_CASE("compare sweeps and tabulates") {
  ExperimentConfig cfg;
  cfg.output_dir = testutil::scratch_dir("cli-compare");
  cfg.num_positions = 200;
  const auto cells = compare(cfg, {"random", "fpa", "exhaustive"}, {2, 1}, {4, 2}, 2);
  REQUIRE(cells.size() == 12);
  CHECK(cells[0].algorithm == "exhaustive");
  CHECK(cells[0].num_antennas == 2);
  CHECK(cells[0].seed == 1);
  CHECK(cells[0].status == "ok");
  CHECK(cells[2].num_antennas == 4);
  CHECK(cells[2].status.rfind("error[search-too-large]", 0) == 0);
  CHECK(std::isnan(cells[2].min_gain_db));
  CHECK(cells[11].algorithm == "random");
  CHECK(cells[11].seed == 2);
  const auto table = testutil::read_text(cfg.output_dir / "comparison.csv");
  CHECK(table.rfind("algorithm,N,seed,min_gain_db,runtime_seconds,status\n", 0) == 0);
  CHECK(std::count(table.begin(), table.end(), '\n') == 13);
  CHECK(fs::exists(cfg.output_dir / "cells" / "fpa_N4_seed2" / "summary.yaml"));

  CHECK_THROWS_AS(compare(cfg, {"fpa"}, {}, {}, 1), ValidationError);
  CHECK_THROWS_AS(compare(cfg, {"annealing"}, {1}, {}, 1), ValidationError);
  fs::remove_all(cfg.output_dir);
}

TEST_CASE("command line tool") {
  const auto dir = testutil::scratch_dir("cli-tool");
  const std::string out = " --output-dir " + (dir / "o").string();
  CHECK(testutil::run_command(kBinary + " run --algorithm fpa --num-antennas 2" + out) == 0);
  CHECK(fs::exists(dir / "o" / "summary.yaml"));
  CHECK(testutil::run_command(kBinary + " run --algorithm nope" + out) == 2);
  CHECK(testutil::run_command(kBinary + " run --num-antennas 40" + out) == 3);
  CHECK(testutil::run_command(kBinary + " run --algorithm exhaustive" + out) == 5);
  CHECK(testutil::run_command(kBinary + " run --config " + (dir / "missing.yaml").string() + out) == 2);
  CHECK(testutil::run_command(kBinary + " compare --algorithms fpa" + out) == 2);
  CHECK(testutil::run_command(kBinary + " compare --algorithms fpa,random --seeds 1,2 --num-antennas 2,3" + out) == 0);
  CHECK(testutil::read_text(dir / "o" / "comparison.csv").find("random,3,2,") != std::string::npos);
  CHECK(testutil::run_command(kBinary + " frobnicate") != 0);
  fs::remove_all(dir);
}
