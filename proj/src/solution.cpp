// SPDX-License-Identifier: Apache-2.0
#include "mabeam/solution.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "mabeam/mnf.hpp"

namespace mabeam {

double to_db(double linear) { return 10.0 * std::log10(std::max(linear, 1e-12)); }

double BeamSolution::min_gain_db() const { return to_db(min_gain); }

BeamSolution make_solution(const Problem& problem, VectorX<double> positions, std::string algorithm) {
  BeamSolution s;
  s.algorithm = std::move(algorithm);
  s.weights = sample_beamformer(problem.profile(), positions);
  const auto worst = min_gain(s.weights, positions, problem.angles(), problem.array().wavelength);
  s.min_gain = worst.value;
  s.argmin_angle = worst.angle;
  s.positions = std::move(positions);
  return s;
}

BeamSolution make_solution(const Problem& problem, const IndexVector& indices, std::string algorithm) {
  BeamSolution s = make_solution(problem, problem.grid().positions_of(indices), std::move(algorithm));
  s.indices = indices;
  return s;
}

}  // namespace mabeam
