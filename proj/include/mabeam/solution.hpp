// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "mabeam/core.hpp"
#include "mabeam/optimize.hpp"

namespace mabeam {

/// Final placement and weights of one scheme, with its worst-case gain over
/// the problem's coverage samples.
struct BeamSolution {
  std::string algorithm;
  std::uint64_t seed = 0;
  std::optional<IndexVector> indices;  // set when positions lie on the grid
  VectorX<double> positions;           // meters
  BeamformingVector<double> weights;
  double min_gain = 0.0;
  double argmin_angle = 0.0;  // radians
  double runtime_seconds = 0.0;
  std::string note;

  double min_gain_db() const;
};

/// 10 log10(gain), with the gain floored at 1e-12.
double to_db(double linear);

/// Samples the multi-notch weights at `positions` and evaluates them over the
/// problem's coverage samples.
BeamSolution make_solution(const Problem& problem, VectorX<double> positions, std::string algorithm);

/// As above for a grid placement; records the indices.
BeamSolution make_solution(const Problem& problem, const IndexVector& indices, std::string algorithm);

}  // namespace mabeam
