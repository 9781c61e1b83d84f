// SPDX-License-Identifier: Apache-2.0
#include "mabeam/optimize.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iterator>
#include <limits>
#include <string>

namespace mabeam {

void OptimizerConfig::validate() const {
  if (gibbs_rounds < 0) throw ValidationError("gibbs_rounds must be non-negative");
  if (max_index_shift < 1) throw ValidationError("max_index_shift must be at least 1");
  if (!(gibbs_temperature > 0.0)) throw ValidationError("gibbs_temperature must be positive");
  if (candidates_per_step < 1) throw ValidationError("candidates_per_step must be at least 1");
  if (max_outer_rounds < 1) throw ValidationError("max_outer_rounds must be at least 1");
  if (!(convergence_tol >= 0.0)) throw ValidationError("convergence_tol must be non-negative");
}

namespace {

MnfProfile<double> checked_profile(const ArrayConfig& array, const CoverageSpec& coverage,
                                   double base_amplitude) {
  array.validate();
  coverage.validate();
  return MnfProfile<double>::from_coverage(coverage, array.wavelength, base_amplitude);
}

}  // namespace

Problem::Problem(ArrayConfig array, const CoverageSpec& coverage, int num_positions,
                 double angular_step, double base_amplitude)
    : array_(array),
      profile_(checked_profile(array, coverage, base_amplitude)),
      grid_(array.aperture, num_positions),
      angles_(discretize_regions(coverage, angular_step)) {
  if (num_positions < array_.num_antennas)
    throw InfeasibleGeometry("position grid has fewer points than antennas");
  build_tables();
}

Problem::Problem(ArrayConfig array, MnfProfile<double> profile, PositionGrid grid, AngularGrid angles)
    : array_(array), profile_(std::move(profile)), grid_(std::move(grid)), angles_(std::move(angles)) {
  array_.validate();
  if (angles_.empty()) throw ValidationError("angular grid is empty");
  if (grid_.size() < array_.num_antennas)
    throw InfeasibleGeometry("position grid has fewer points than antennas");
  if (std::abs(grid_.aperture() - array_.aperture) > kGridEpsilon)
    throw ValidationError("position grid does not span the array aperture");
  build_tables();
}

void Problem::build_tables() {
  const int M = grid_.size();
  const Eigen::Index L = angles_.size();
  const double k = array_.wavenumber();
  grid_weights_.resize(M);
  contributions_.resize(L, M);
  for (int m = 0; m < M; ++m) {
    const double x = grid_[m];
    grid_weights_[m] = ideal_weight(profile_, x);
    const std::complex<double> cw = std::conj(grid_weights_[m]);
    for (Eigen::Index l = 0; l < L; ++l)
      contributions_(l, m) = cw * std::polar(1.0, k * x * std::cos(angles_.angles[l]));
  }
}

bool Problem::feasible(const IndexVector& u) const {
  return static_cast<int>(u.size()) == array_.num_antennas && is_feasible(u, grid_, array_.min_spacing);
}

namespace {

// Objective without the degenerate-profile exception; the search treats an
// unnormalizable placement as worthless.
double objective_or_zero(const Problem& problem, const IndexVector& u) {
  const auto& C = problem.contributions();
  const auto& w = problem.grid_weights();
  Eigen::VectorXcd sum = Eigen::VectorXcd::Zero(C.rows());
  double power = 0.0;
  for (int m : u) {
    sum += C.col(m);
    power += std::norm(w[m]);
  }
  if (!(power > 0.0)) return 0.0;
  return sum.cwiseAbs2().minCoeff() / power;
}

}  // namespace

double Problem::objective(const IndexVector& u) const {
  if (!feasible(u)) throw InfeasibleGeometry("index vector violates the placement constraints");
  double power = 0.0;
  for (int m : u) power += std::norm(grid_weights_[m]);
  if (!(power > 0.0)) throw DegenerateProfile("filter profile vanishes at every antenna position");
  return objective_or_zero(*this, u);
}

std::vector<int> Problem::feasible_set(int n, const IndexVector& u) const {
  std::vector<int> out;
  const double limit = array_.min_spacing - kGridEpsilon;
  for (int m = 0; m < grid_.size(); ++m) {
    bool ok = true;
    for (std::size_t j = 0; j < u.size() && ok; ++j)
      if (static_cast<int>(j) != n && std::abs(grid_[m] - grid_[u[j]]) < limit) ok = false;
    if (ok) out.push_back(m);
  }
  return out;
}

std::vector<double> objective_with_moves(const Problem& problem, const IndexVector& u, int n,
                                         std::span<const int> candidates) {
  const auto& C = problem.contributions();
  const auto& w = problem.grid_weights();
  Eigen::VectorXcd partial = Eigen::VectorXcd::Zero(C.rows());
  double partial_power = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (static_cast<int>(j) == n) continue;
    partial += C.col(u[j]);
    partial_power += std::norm(w[u[j]]);
  }
  std::vector<double> values;
  values.reserve(candidates.size());
  for (int m : candidates) {
    const double power = partial_power + std::norm(w[m]);
    values.push_back(power > 0.0 ? (partial + C.col(m)).cwiseAbs2().minCoeff() / power : 0.0);
  }
  return values;
}

IndexVector snap_to_grid(const Problem& problem, const VectorX<double>& targets) {
  const PositionGrid& grid = problem.grid();
  const double limit = problem.array().min_spacing - kGridEpsilon;
  IndexVector u;
  u.reserve(static_cast<std::size_t>(targets.size()));
  for (Eigen::Index n = 0; n < targets.size(); ++n) {
    int m = grid.nearest(targets[n]);
    if (!u.empty())
      while (m < grid.size() && grid[m] - grid[u.back()] < limit) ++m;
    if (m >= grid.size()) throw InfeasibleGeometry("antennas do not fit on the position grid");
    u.push_back(m);
  }
  return u;
}

IndexVector initial_indices(const Problem& problem) {
  const int N = problem.num_antennas();
  const double D = problem.array().aperture;
  VectorX<double> targets(N);
  if (N == 1)
    targets[0] = D / 2.0;
  else
    targets = VectorX<double>::LinSpaced(N, 0.0, D);
  return snap_to_grid(problem, targets);
}

IndexVector sequential_round(const Problem& problem, IndexVector u) {
  double current = objective_or_zero(problem, u);
  for (int n = 0; n < problem.num_antennas(); ++n) {
    const std::vector<int> candidates = problem.feasible_set(n, u);
    const std::vector<double> values = objective_with_moves(problem, u, n, candidates);
    const auto best = std::max_element(values.begin(), values.end()) - values.begin();
    const int target = candidates[static_cast<std::size_t>(best)];
    if (target == u[n]) continue;
    // The incremental and direct sums round differently; only accept a move
    // the direct objective agrees with, so the pass stays monotone exactly.
    IndexVector moved = u;
    moved[n] = target;
    const double value = objective_or_zero(problem, moved);
    if (value >= current) {
      u = std::move(moved);
      current = value;
    }
  }
  return u;
}

std::vector<int> gibbs_candidates(const Problem& problem, int n, const IndexVector& u,
                                  const OptimizerConfig& cfg, Rng& rng) {
  std::vector<int> feasible = problem.feasible_set(n, u);
  const auto S = static_cast<std::size_t>(cfg.candidates_per_step);
  if (feasible.size() <= S) return feasible;

  const auto is_feasible_index = [&](int m) {
    return std::binary_search(feasible.begin(), feasible.end(), m);
  };
  std::vector<int> chosen{u[n]};
  for (int j = 1; j <= cfg.max_index_shift && chosen.size() < S; ++j)
    for (int m : {u[n] - j, u[n] + j})
      if (chosen.size() < S && is_feasible_index(m)) chosen.push_back(m);

  std::vector<int> pool;
  pool.reserve(feasible.size());
  std::sort(chosen.begin(), chosen.end());
  std::set_difference(feasible.begin(), feasible.end(), chosen.begin(), chosen.end(),
                      std::back_inserter(pool));
  // Partial Fisher-Yates: the first `draws` slots become a uniform sample
  // without replacement.
  const std::size_t draws = std::min(S - chosen.size(), pool.size());
  for (std::size_t i = 0; i < draws; ++i) {
    const std::size_t r = i + static_cast<std::size_t>(rng.index(pool.size() - i));
    std::swap(pool[i], pool[r]);
    chosen.push_back(pool[i]);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

Eigen::VectorXd gibbs_probabilities(std::span<const double> values, double gamma) {
  Eigen::VectorXd p(static_cast<Eigen::Index>(values.size()));
  if (values.empty()) return p;
  const double peak = *std::max_element(values.begin(), values.end());
  for (std::size_t s = 0; s < values.size(); ++s)
    p[static_cast<Eigen::Index>(s)] = std::exp(gamma * (values[s] - peak));
  return p / p.sum();
}

std::size_t gibbs_select(std::span<const double> values, double gamma, Rng& rng) {
  if (values.empty()) throw ValidationError("cannot select from an empty candidate set");
  const Eigen::VectorXd p = gibbs_probabilities(values, gamma);
  const double u = rng.uniform01();
  double cumulative = 0.0;
  for (Eigen::Index s = 0; s < p.size(); ++s) {
    cumulative += p[s];
    if (u < cumulative) return static_cast<std::size_t>(s);
  }
  // Rounding left the total just below 1; the last candidate with mass wins.
  Eigen::Index last = p.size() - 1;
  while (last > 0 && p[last] == 0.0) --last;
  return static_cast<std::size_t>(last);
}

IndexVector gibbs_phase(const Problem& problem, IndexVector u, const OptimizerConfig& cfg, Rng& rng,
                        GibbsTrace* trace) {
  IndexVector best = u;
  double best_value = objective_or_zero(problem, u);
  if (trace) {
    trace->round_objective.assign(1, best_value);
    trace->best_in_set.assign(1, best_value);
  }
  for (int t = 0; t < cfg.gibbs_rounds; ++t) {
    for (int n = 0; n < problem.num_antennas(); ++n) {
      const std::vector<int> candidates = gibbs_candidates(problem, n, u, cfg, rng);
      const std::vector<double> values = objective_with_moves(problem, u, n, candidates);
      u[n] = candidates[gibbs_select(values, cfg.gibbs_temperature, rng)];
    }
    const double value = objective_or_zero(problem, u);
    if (value > best_value) {
      best_value = value;
      best = u;
    }
    if (trace) {
      trace->round_objective.push_back(value);
      trace->best_in_set.push_back(best_value);
    }
  }
  return best;
}

namespace {
constexpr int kMaxSequentialPasses = 100;
}  // namespace

SolveResult solve(const Problem& problem, const OptimizerConfig& cfg, std::optional<IndexVector> initial) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  SolveResult result;
  IndexVector u = initial ? std::move(*initial) : initial_indices(problem);
  if (!problem.feasible(u)) throw InfeasibleGeometry("initial placement violates the spacing constraint");

  Rng rng(cfg.rng_seed);
  double value = problem.objective(u);
  result.trace.initial = u;
  result.trace.initial_objective = value;

  for (int i = 0; i < cfg.max_outer_rounds; ++i) {
    // Coordinate passes run to a fixed point before any exploration, so the
    // sequential-only mode is exactly the first phase of the full one.
    for (int pass = 0; pass < kMaxSequentialPasses; ++pass) {
      IndexVector next = sequential_round(problem, u);
      if (next == u) break;
      u = std::move(next);
    }
    OuterRound round;
    round.sequential_objective = objective_or_zero(problem, u);
    if (cfg.gibbs_rounds > 0) {
      GibbsTrace gibbs;
      u = gibbs_phase(problem, std::move(u), cfg, rng, &gibbs);
      round.gibbs_best = std::move(gibbs.best_in_set);
    }
    round.objective = objective_or_zero(problem, u);
    round.indices = u;
    round.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const double previous = value;
    value = round.objective;
    result.trace.rounds.push_back(std::move(round));
    if (value - previous <= cfg.convergence_tol * std::abs(previous)) break;
  }
  result.indices = std::move(u);
  result.objective = value;
  return result;
}

}  // namespace mabeam
