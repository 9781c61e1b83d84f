// SPDX-License-Identifier: Apache-2.0
//
// Linear-array geometry, steering vectors and beam-gain kernels.
//
// Coordinates are measured along the movement segment [0, D] with the origin at
// one end. Angles are in radians and measured from the array axis, so the
// spatial frequency seen by the array is (2*pi/lambda) * cos(theta).
#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "mabeam/errors.hpp"

namespace mabeam {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using ComplexVectorX = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

/// Unit-power complex transmit weights, one per antenna.
template <typename Scalar>
using BeamformingVector = ComplexVectorX<Scalar>;

/// Grid indices of the antennas (0-based into a PositionGrid).
using IndexVector = std::vector<int>;

inline constexpr double kSpeedOfLight = 299792458.0;

/// Slack on the minimum-spacing test that absorbs grid rounding, in meters.
inline constexpr double kGridEpsilon = 1e-9;

inline double deg2rad(double deg) { return deg * std::numbers::pi / 180.0; }
inline double rad2deg(double rad) { return rad * 180.0 / std::numbers::pi; }

struct ArrayConfig {
  double wavelength = kSpeedOfLight / 1e9;
  double aperture = 10.0 * (kSpeedOfLight / 1e9);  // D
  int num_antennas = 8;                           // N
  double min_spacing = 0.5 * (kSpeedOfLight / 1e9);

  double wavenumber() const { return 2.0 * std::numbers::pi / wavelength; }

  void validate() const {
    if (!(wavelength > 0.0)) throw ValidationError("wavelength must be positive");
    if (!(aperture > 0.0)) throw ValidationError("aperture length must be positive");
    if (num_antennas < 1) throw ValidationError("number of antennas must be at least 1");
    if (!(min_spacing > 0.0)) throw ValidationError("minimum spacing must be positive");
    if ((num_antennas - 1) * min_spacing > aperture + kGridEpsilon)
      throw InfeasibleGeometry("cannot place " + std::to_string(num_antennas) +
                               " antennas with the requested minimum spacing inside the aperture");
  }
};

/// One angular subregion [theta_min, theta_max] with its path gain.
struct Region {
  double theta_min = 0.0;
  double theta_max = 0.0;
  double path_gain = 1.0;

  double width() const { return theta_max - theta_min; }
  bool contains(double theta, double tol = 1e-12) const {
    return theta >= theta_min - tol && theta <= theta_max + tol;
  }
};

struct CoverageSpec {
  std::vector<Region> regions;

  static CoverageSpec from_degrees(std::initializer_list<std::pair<double, double>> deg) {
    CoverageSpec spec;
    for (auto [lo, hi] : deg) spec.regions.push_back({deg2rad(lo), deg2rad(hi), 1.0});
    return spec;
  }

  std::size_t size() const { return regions.size(); }

  bool contains(double theta, double tol = 1e-12) const {
    for (const auto& r : regions)
      if (r.contains(theta, tol)) return true;
    return false;
  }

  void validate() const {
    if (regions.empty()) throw ValidationError("coverage needs at least one region");
    for (std::size_t k = 0; k < regions.size(); ++k) {
      const Region& r = regions[k];
      const std::string tag = "region " + std::to_string(k + 1) + ": ";
      if (!(r.theta_min >= 0.0 && r.theta_max <= std::numbers::pi))
        throw ValidationError(tag + "angles must lie in [0, 180] degrees");
      if (r.theta_min > r.theta_max) throw ValidationError(tag + "theta_min exceeds theta_max");
      if (!(r.path_gain > 0.0)) throw ValidationError(tag + "path gain must be positive");
    }
    for (std::size_t a = 0; a < regions.size(); ++a)
      for (std::size_t b = a + 1; b < regions.size(); ++b) {
        const Region& p = regions[a];
        const Region& q = regions[b];
        if (p.theta_min <= q.theta_max && q.theta_min <= p.theta_max)
          throw ValidationError("regions " + std::to_string(a + 1) + " and " +
                                std::to_string(b + 1) + " overlap");
      }
  }
};

/// M uniformly spaced candidate positions p_m = m / (M - 1) * D, m = 0..M-1.
class PositionGrid {
 public:
  PositionGrid(double aperture, int num_points) : aperture_(aperture) {
    if (num_points < 2) throw ValidationError("position grid needs at least 2 points");
    if (!(aperture > 0.0)) throw ValidationError("aperture length must be positive");
    positions_ = VectorX<double>::LinSpaced(num_points, 0.0, aperture);
    positions_[num_points - 1] = aperture;
  }

  int size() const { return static_cast<int>(positions_.size()); }
  double aperture() const { return aperture_; }
  double spacing() const { return aperture_ / (size() - 1); }
  double operator[](int m) const { return positions_[m]; }
  const VectorX<double>& positions() const { return positions_; }

  VectorX<double> positions_of(const IndexVector& u) const {
    VectorX<double> x(static_cast<Eigen::Index>(u.size()));
    for (std::size_t n = 0; n < u.size(); ++n) x[static_cast<Eigen::Index>(n)] = positions_[u[n]];
    return x;
  }

  /// Index of the grid point nearest to x (ties go to the lower index).
  int nearest(double x) const {
    const double t = x / spacing();
    int m = static_cast<int>(std::floor(t));
    if (t - m > 0.5) ++m;
    return std::clamp(m, 0, size() - 1);
  }

 private:
  double aperture_;
  VectorX<double> positions_;
};

/// True when every pair of indexed positions is at least min_spacing apart.
inline bool is_feasible(const IndexVector& u, const PositionGrid& grid, double min_spacing) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] < 0 || u[i] >= grid.size()) return false;
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (std::abs(grid[u[i]] - grid[u[j]]) < min_spacing - kGridEpsilon) return false;
  }
  return true;
}

/// Sampled coverage angles, flattened region by region.
struct AngularGrid {
  VectorX<double> angles;
  std::vector<int> region;       // region index of each sample
  std::vector<int> region_count; // L^(k)

  Eigen::Index size() const { return angles.size(); }
  bool empty() const { return angles.size() == 0; }
};

/// Samples region k at `counts[k]` uniformly spaced angles including both ends.
/// Zero-width regions are always sampled once.
inline AngularGrid discretize_regions(const CoverageSpec& spec, const std::vector<int>& counts) {
  if (counts.size() != spec.size()) throw ValidationError("one sample count per region is required");
  AngularGrid grid;
  Eigen::Index total = 0;
  for (std::size_t k = 0; k < spec.size(); ++k) {
    const int L = spec.regions[k].width() == 0.0 ? 1 : counts[k];
    if (L < 2 && spec.regions[k].width() > 0.0)
      throw ValidationError("a region of nonzero width needs at least 2 samples");
    grid.region_count.push_back(L);
    total += L;
  }
  grid.angles.resize(total);
  Eigen::Index i = 0;
  for (std::size_t k = 0; k < spec.size(); ++k) {
    const Region& r = spec.regions[k];
    const int L = grid.region_count[k];
    for (int l = 0; l < L; ++l, ++i) {
      grid.angles[i] = (L == 1) ? r.theta_min : r.theta_min + double(l) / double(L - 1) * r.width();
      grid.region.push_back(static_cast<int>(k));
    }
    if (L > 1) grid.angles[i - 1] = r.theta_max;
  }
  return grid;
}

/// L^(k) = max(2, ceil(Z_k / step) + 1) samples per region.
inline AngularGrid discretize_regions(const CoverageSpec& spec, double angular_step) {
  if (!(angular_step > 0.0)) throw ValidationError("angular step must be positive");
  std::vector<int> counts;
  for (const auto& r : spec.regions) {
    if (r.width() == 0.0) {
      counts.push_back(1);
      continue;
    }
    // The tolerance keeps exact multiples such as 20deg / 0.5deg from gaining a sample.
    const double steps = std::ceil(r.width() / angular_step - 1e-9);
    counts.push_back(std::max(2, static_cast<int>(steps) + 1));
  }
  return discretize_regions(spec, counts);
}

/// Spatial-frequency interval [Omega^-, Omega^+] covered by a region.
inline std::pair<double, double> omega_interval(const Region& region, double wavelength) {
  const double k = 2.0 * std::numbers::pi / wavelength;
  return {k * std::cos(region.theta_max), k * std::cos(region.theta_min)};
}

template <typename Scalar>
void check_angle(Scalar theta) {
  if (!(theta >= Scalar(0) && theta <= std::numbers::pi_v<Scalar>))
    throw ValidationError("steering angle must lie in [0, pi]");
}

/// a(x, theta)_n = exp(j * 2*pi/lambda * x_n * cos(theta)).
template <typename Derived>
ComplexVectorX<typename Derived::Scalar> steering_vector(const Eigen::MatrixBase<Derived>& positions,
                                                        typename Derived::Scalar theta,
                                                        typename Derived::Scalar wavelength) {
  using Scalar = typename Derived::Scalar;
  check_angle(theta);
  const Scalar spatial_freq = Scalar(2) * std::numbers::pi_v<Scalar> / wavelength * std::cos(theta);
  ComplexVectorX<Scalar> a(positions.size());
  for (Eigen::Index n = 0; n < positions.size(); ++n) a[n] = std::polar(Scalar(1), spatial_freq * positions[n]);
  return a;
}

/// G = |w^H a(x, theta)|^2.
template <typename DerivedW, typename DerivedX>
typename DerivedX::Scalar beam_gain(const Eigen::MatrixBase<DerivedW>& weights,
                                    const Eigen::MatrixBase<DerivedX>& positions,
                                    typename DerivedX::Scalar theta,
                                    typename DerivedX::Scalar wavelength) {
  return std::norm(weights.dot(steering_vector(positions, theta, wavelength)));
}

template <typename Scalar>
struct GainMinimum {
  Scalar value;
  double angle;
  Eigen::Index sample;
};

/// Minimum of the beam gain over all sampled angles, with its location.
template <typename DerivedW, typename DerivedX>
GainMinimum<typename DerivedX::Scalar> min_gain(const Eigen::MatrixBase<DerivedW>& weights,
                                               const Eigen::MatrixBase<DerivedX>& positions,
                                               const AngularGrid& grid,
                                               typename DerivedX::Scalar wavelength) {
  using Scalar = typename DerivedX::Scalar;
  if (grid.empty()) throw ValidationError("angular grid is empty");
  GainMinimum<Scalar> best{std::numeric_limits<Scalar>::infinity(), 0.0, 0};
  for (Eigen::Index l = 0; l < grid.size(); ++l) {
    const Scalar g = beam_gain(weights, positions, static_cast<Scalar>(grid.angles[l]), wavelength);
    if (g < best.value) best = {g, grid.angles[l], l};
  }
  return best;
}

}  // namespace mabeam
