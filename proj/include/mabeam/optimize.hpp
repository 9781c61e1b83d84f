// SPDX-License-Identifier: Apache-2.0
//
// Discrete antenna placement for max-min multi-region coverage.
//
// The antennas sit on a uniform grid of M candidate positions, their weights
// are always the sampled multi-notch beamformer, and the objective is the
// worst beam gain over the sampled coverage angles. Placement is improved by
// rounds of coordinate-wise exhaustive updates, each followed by a phase of
// Gibbs-sampling exploration that returns the best placement it visited.
#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mabeam/core.hpp"
#include "mabeam/mnf.hpp"
#include "mabeam/rng.hpp"

namespace mabeam {

struct OptimizerConfig {
  int gibbs_rounds = 50;           // T; 0 disables exploration
  int max_index_shift = 2;         // J
  double gibbs_temperature = 5.0;  // gamma
  int candidates_per_step = 10;    // S
  int max_outer_rounds = 20;
  double convergence_tol = 1e-6;  // relative objective improvement per outer round
  std::uint64_t rng_seed = 0;

  void validate() const;
};

/// Fixed data of one placement problem plus the tables every objective
/// evaluation reuses.
class Problem {
 public:
  Problem(ArrayConfig array, const CoverageSpec& coverage, int num_positions, double angular_step,
          double base_amplitude = 1.0);
  Problem(ArrayConfig array, MnfProfile<double> profile, PositionGrid grid, AngularGrid angles);

  const ArrayConfig& array() const { return array_; }
  const MnfProfile<double>& profile() const { return profile_; }
  const PositionGrid& grid() const { return grid_; }
  const AngularGrid& angles() const { return angles_; }
  int num_antennas() const { return array_.num_antennas; }

  /// Ideal weight sampled at every grid point.
  const ComplexVectorX<double>& grid_weights() const { return grid_weights_; }
  /// Column m holds conj(w(p_m)) * a(p_m, theta_l) over all coverage samples l.
  const Eigen::MatrixXcd& contributions() const { return contributions_; }

  bool feasible(const IndexVector& u) const;

  /// Worst-case gain of the multi-notch beamformer at the indexed positions.
  /// Throws DegenerateProfile when the weights cannot be normalized.
  double objective(const IndexVector& u) const;

  /// Grid indices antenna n may move to while the others stay put.
  std::vector<int> feasible_set(int n, const IndexVector& u) const;

 private:
  void build_tables();

  ArrayConfig array_;
  MnfProfile<double> profile_;
  PositionGrid grid_;
  AngularGrid angles_;
  ComplexVectorX<double> grid_weights_;
  Eigen::MatrixXcd contributions_;
};

/// Objective of u with antenna n moved to every index in `candidates`.
/// Values are computed incrementally from the other antennas' sum, so each
/// candidate costs O(L). Unnormalizable candidates score 0.
std::vector<double> objective_with_moves(const Problem& problem, const IndexVector& u, int n,
                                         std::span<const int> candidates);

/// Snaps target positions to the grid in order, pushing each index right as
/// needed to keep the minimum spacing. Throws InfeasibleGeometry on overflow.
IndexVector snap_to_grid(const Problem& problem, const VectorX<double>& targets);

/// Antennas spread uniformly over the aperture (centered for a single antenna).
IndexVector initial_indices(const Problem& problem);

/// One coordinate-wise pass: each antenna in turn moves to the feasible index
/// maximizing the objective, ties going to the smallest index.
IndexVector sequential_round(const Problem& problem, IndexVector u);

/// Exploration candidates for antenna n, sorted ascending.
std::vector<int> gibbs_candidates(const Problem& problem, int n, const IndexVector& u,
                                  const OptimizerConfig& cfg, Rng& rng);

/// Selection probabilities exp(gamma F_s) / sum_s' exp(gamma F_s').
Eigen::VectorXd gibbs_probabilities(std::span<const double> values, double gamma);

/// Draws a position in `values` by inverting the cumulative probabilities
/// at one uniform variate.
std::size_t gibbs_select(std::span<const double> values, double gamma, Rng& rng);

struct GibbsTrace {
  std::vector<double> round_objective;  // F(u_GS^(t)), t = 0..T
  std::vector<double> best_in_set;      // running max over the visited set
};

/// T rounds of per-antenna Gibbs moves; returns the best visited placement,
/// which is never worse than `u`.
IndexVector gibbs_phase(const Problem& problem, IndexVector u, const OptimizerConfig& cfg, Rng& rng,
                        GibbsTrace* trace = nullptr);

struct OuterRound {
  double objective;
  double sequential_objective;  // after the coordinate passes, before exploration
  IndexVector indices;
  double elapsed_seconds;  // since the start of the solve
  std::vector<double> gibbs_best;
};

struct OptimizerTrace {
  double initial_objective = 0.0;
  IndexVector initial;
  std::vector<OuterRound> rounds;
};

struct SolveResult {
  IndexVector indices;
  double objective = 0.0;
  OptimizerTrace trace;
};

/// Alternates coordinate passes (repeated until nothing moves) and exploration
/// until the relative gain of an outer round drops below the tolerance or the
/// round cap is hit.
SolveResult solve(const Problem& problem, const OptimizerConfig& cfg,
                  std::optional<IndexVector> initial = std::nullopt);

}  // namespace mabeam
