// SPDX-License-Identifier: Apache-2.0
//
// Reference placements: a half-wavelength fixed array, uniformly random
// feasible placements, and exhaustive enumeration of the position grid.
// All of them use the same multi-notch weight synthesis as the optimizer, so
// comparisons isolate the effect of the antenna positions.
#pragma once

#include <cstdint>

#include "mabeam/optimize.hpp"
#include "mabeam/rng.hpp"
#include "mabeam/solution.hpp"

namespace mabeam {

enum class BaselineKind { fpa_half_wavelength, random_feasible, exhaustive };

inline constexpr double kDefaultExhaustiveCap = 1e6;

/// x_n = n * lambda / 2, anchored at the origin.
VectorX<double> fpa_positions(const ArrayConfig& array);

/// FPA positions snapped onto the problem's grid (spacing preserved).
IndexVector fpa_indices(const Problem& problem);

BeamSolution fpa_solution(const Problem& problem);

/// Rejection-samples N distinct grid indices until the spacing constraint
/// holds, which makes every feasible placement equally likely.
IndexVector random_indices(const Problem& problem, Rng& rng, int max_attempts = 1000000);

BeamSolution random_solution(const Problem& problem, std::uint64_t seed, int max_attempts = 1000000);

struct ExhaustiveResult {
  IndexVector indices;
  double objective = 0.0;
  std::uint64_t visited = 0;  // feasible placements evaluated
};

/// Binomial coefficient C(n, k) as a double.
double combinations(int n, int k);

/// Global optimum over all feasible placements, as increasing index tuples.
/// Throws SearchTooLarge when C(M, N) exceeds `cap`.
ExhaustiveResult exhaustive_search(const Problem& problem, double cap = kDefaultExhaustiveCap);

BeamSolution exhaustive_solution(const Problem& problem, double cap = kDefaultExhaustiveCap);

}  // namespace mabeam
