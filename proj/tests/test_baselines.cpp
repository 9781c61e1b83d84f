// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <set>

#include "mabeam/baselines.hpp"
#include "oracles.hpp"

using namespace mabeam;
using doctest::Approx;

namespace {

const double kLambda = kSpeedOfLight / 1e9;

ArrayConfig make_array(int N, double aperture_wl) {
  ArrayConfig a;
  a.wavelength = kLambda;
  a.aperture = aperture_wl * kLambda;
  a.num_antennas = N;
  a.min_spacing = kLambda / 2;
  return a;
}

Problem default_problem(int N, int M = 500) {
  return Problem(make_array(N, 10.0), CoverageSpec::from_degrees({{0, 20}, {150, 180}}), M, deg2rad(0.5));
}

Problem tiny_problem() {
  return Problem(make_array(2, 3.0), CoverageSpec::from_degrees({{60, 120}}), 12, deg2rad(0.5));
}

std::vector<double> grid_of(const Problem& p) {
  const auto& v = p.grid().positions();
  return {v.data(), v.data() + v.size()};
}

double oracle_objective(const Problem& p, const IndexVector& u) {
  std::vector<oracle::Band> bands;
  for (const auto& b : p.profile().bands()) bands.push_back({b.omega_lo, b.omega_hi, b.mu});
  std::vector<double> x;
  for (int m : u) x.push_back(p.grid()[m]);
  const auto& a = p.angles().angles;
  return oracle::placement_objective(bands, x, {a.data(), a.data() + a.size()}, kLambda);
}

}  // namespace

TEST_CASE("fixed half-wavelength array") {
  SUBCASE("one antenna") {
    const auto s = fpa_solution(default_problem(1));
    CHECK(s.positions.size() == 1);
    CHECK(s.positions[0] == 0.0);
    CHECK(s.min_gain == Approx(1.0).epsilon(1e-12));
    CHECK(s.min_gain_db() == Approx(0.0).scale(1.0).epsilon(1e-10));
  }
  SUBCASE("positions and weights") {
    const auto p = default_problem(2);
    const auto s = fpa_solution(p);
    CHECK(s.positions[1] == Approx(kLambda / 2).epsilon(1e-15));
    const auto w = sample_beamformer(p.profile(), s.positions);
    CHECK((s.weights - w).cwiseAbs().maxCoeff() < 1e-15);
    CHECK_FALSE(s.indices.has_value());
    CHECK(s.algorithm == "fpa");
  }
  SUBCASE("eight antennas span 3.5 wavelengths") {
    const auto x = fpa_positions(make_array(8, 10.0));
    CHECK(x[7] == Approx(3.5 * kLambda).epsilon(1e-14));
  }
  SUBCASE("snapped onto the grid") {
    const auto p = default_problem(8);
    const auto u = fpa_indices(p);
    CHECK(p.feasible(u));
    CHECK(u.front() == 0);
    for (int n = 0; n < 8; ++n) CHECK(std::abs(p.grid()[u[n]] - n * kLambda / 2) < p.grid().spacing());
  }
  SUBCASE("aperture too short") {
    // Four antennas fit at 0.3 lambda spacing, but not a half-wavelength array.
    auto a = make_array(4, 1.0);
    a.min_spacing = 0.3 * kLambda;
    const Problem p(a, CoverageSpec::from_degrees({{0, 20}}), 50, deg2rad(1.0));
    CHECK_THROWS_AS(fpa_solution(p), InfeasibleGeometry);
  }
}

TEST_CASE("random feasible placement") {
  SUBCASE("one antenna") {
    const auto s = random_solution(default_problem(1), 5);
    CHECK(s.min_gain == Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("deterministic and feasible") {
    const auto p = default_problem(8);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Rng a(seed), b(seed);
      const auto u = random_indices(p, a);
      CHECK(u == random_indices(p, b));
      CHECK(p.feasible(u));
      CHECK(std::is_sorted(u.begin(), u.end()));
    }
  }
  SUBCASE("every feasible pair shows up on the tiny grid") {
    const auto p = tiny_problem();
    Rng rng(3);
    std::set<IndexVector> seen;
    for (int i = 0; i < 5000; ++i) seen.insert(random_indices(p, rng));
    CHECK(seen.size() == 55);
  }
  SUBCASE("optimizer beats random placements on average") {
    const auto p = default_problem(8);
    const double opt = solve(p, OptimizerConfig{}).objective;
    double sum = 0;
    int worse = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const double f = random_solution(p, seed).min_gain;
      sum += f;
      worse += f <= opt;
    }
    CHECK(sum / 100 < opt);
    CHECK(worse >= 90);
  }
  SUBCASE("crowded grid still finds the only placement") {
    // Three points one wavelength apart in total, lambda/2 spacing: one placement.
    const Problem p(make_array(3, 1.0), CoverageSpec::from_degrees({{0, 20}}), 3, deg2rad(1.0));
    Rng rng(1);
    CHECK(random_indices(p, rng) == IndexVector{0, 1, 2});
  }
}

TEST_CASE("binomial coefficient") {
  CHECK(combinations(12, 2) == 66);
  CHECK(combinations(500, 8) == Approx(91579127515482750.0).epsilon(1e-12));
  CHECK(combinations(5, 0) == 1);
  CHECK(combinations(3, 4) == 0);
}

TEST_CASE("exhaustive search") {
  SUBCASE("single antenna picks the best grid point") {
    const auto p = Problem(make_array(1, 3.0), CoverageSpec::from_degrees({{60, 120}}), 12, deg2rad(0.5));
    const auto r = exhaustive_search(p);
    CHECK(r.visited == 12);
    double best = -1;
    for (int m = 0; m < 12; ++m) best = std::max(best, oracle_objective(p, {m}));
    CHECK(r.objective == Approx(best).epsilon(1e-12));
  }
  SUBCASE("two antennas on twelve points") {
    const auto p = tiny_problem();
    const auto r = exhaustive_search(p);
    CHECK(r.visited == 55);
    const auto e = oracle::enumerate_ordered(2, grid_of(p), kLambda / 2,
                                             [&](const std::vector<int>& u) { return oracle_objective(p, u); });
    CHECK(e.visited == 110);
    CHECK(std::abs(r.objective - e.best) < 1e-12);
    CHECK(std::abs(oracle_objective(p, r.indices) - r.objective) < 1e-12);
    const auto s = exhaustive_solution(p);
    CHECK(s.indices == r.indices);
  }
  SUBCASE("refuses oversized searches") {
    CHECK_THROWS_AS(exhaustive_search(default_problem(8)), SearchTooLarge);
    CHECK_THROWS_AS(exhaustive_search(tiny_problem(), 10), SearchTooLarge);
  }
  SUBCASE("ordering against the other schemes") {
    const auto p = Problem(make_array(3, 4.0), CoverageSpec::from_degrees({{0, 20}, {150, 180}}), 40, deg2rad(0.5));
    const double best = exhaustive_search(p).objective;
    OptimizerConfig cfg;
    const auto init = fpa_indices(p);
    const double fpa_grid = p.objective(init);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      cfg.rng_seed = seed;
      const double f = solve(p, cfg, init).objective;
      CHECK(f <= best + 1e-12);
      CHECK(f >= fpa_grid);
    }
  }
}
