// SPDX-License-Identifier: Apache-2.0
#include "mabeam/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>

namespace mabeam {

VectorX<double> fpa_positions(const ArrayConfig& array) {
  VectorX<double> x(array.num_antennas);
  for (int n = 0; n < array.num_antennas; ++n) x[n] = n * array.wavelength / 2.0;
  return x;
}

IndexVector fpa_indices(const Problem& problem) { return snap_to_grid(problem, fpa_positions(problem.array())); }

BeamSolution fpa_solution(const Problem& problem) {
  const ArrayConfig& array = problem.array();
  if ((array.num_antennas - 1) * array.wavelength / 2.0 > array.aperture + kGridEpsilon)
    throw InfeasibleGeometry("aperture is too short for a half-wavelength fixed array");
  const auto start = std::chrono::steady_clock::now();
  BeamSolution s = make_solution(problem, fpa_positions(array), "fpa");
  s.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  s.note = "fixed half-wavelength array; weights from filter sampling (no SCA)";
  return s;
}

IndexVector random_indices(const Problem& problem, Rng& rng, int max_attempts) {
  const int N = problem.num_antennas();
  const auto M = static_cast<std::uint64_t>(problem.grid().size());
  IndexVector u(static_cast<std::size_t>(N));
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    for (int n = 0; n < N; ++n) {
      int m;
      do {
        m = static_cast<int>(rng.index(M));
      } while (std::find(u.begin(), u.begin() + n, m) != u.begin() + n);
      u[static_cast<std::size_t>(n)] = m;
    }
    if (problem.feasible(u)) {
      std::sort(u.begin(), u.end());
      return u;
    }
  }
  throw InfeasibleGeometry("no feasible random placement found within " + std::to_string(max_attempts) +
                           " attempts");
}

BeamSolution random_solution(const Problem& problem, std::uint64_t seed, int max_attempts) {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(seed);
  BeamSolution s = make_solution(problem, random_indices(problem, rng, max_attempts), "random");
  s.seed = seed;
  s.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return s;
}

double combinations(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return std::round(c);
}

ExhaustiveResult exhaustive_search(const Problem& problem, double cap) {
  const int N = problem.num_antennas();
  const int M = problem.grid().size();
  if (combinations(M, N) > cap)
    throw SearchTooLarge("exhaustive search over C(" + std::to_string(M) + ", " + std::to_string(N) +
                         ") placements exceeds the cap");
  const PositionGrid& grid = problem.grid();
  const double limit = problem.array().min_spacing - kGridEpsilon;

  ExhaustiveResult best;
  best.objective = -1.0;
  IndexVector u(static_cast<std::size_t>(N));
  // Increasing tuples only need the spacing check against the previous entry.
  std::function<void(int, int)> visit = [&](int depth, int from) {
    if (depth == N) {
      ++best.visited;
      double value = 0.0;
      try {
        value = problem.objective(u);
      } catch (const DegenerateProfile&) {
      }
      if (value > best.objective) {
        best.objective = value;
        best.indices = u;
      }
      return;
    }
    for (int m = from; m < M; ++m) {
      if (depth > 0 && grid[m] - grid[u[depth - 1]] < limit) continue;
      u[static_cast<std::size_t>(depth)] = m;
      visit(depth + 1, m + 1);
    }
  };
  visit(0, 0);
  if (best.indices.empty()) throw InfeasibleGeometry("no feasible placement on the position grid");
  return best;
}

BeamSolution exhaustive_solution(const Problem& problem, double cap) {
  const auto start = std::chrono::steady_clock::now();
  const ExhaustiveResult r = exhaustive_search(problem, cap);
  BeamSolution s = make_solution(problem, r.indices, "exhaustive");
  s.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return s;
}

}  // namespace mabeam
