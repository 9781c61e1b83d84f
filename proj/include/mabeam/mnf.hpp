// SPDX-License-Identifier: Apache-2.0
//
// Multi-notch spatial filter weights.
//
// The desired beam pattern is modelled as a spectrum that is flat with height
// mu_k on each spatial-frequency band [lo_k, hi_k] and zero elsewhere. Its
// inverse Fourier transform is a sum of modulated sinc pulses,
//
//   w(x) = sum_k mu_k (hi_k - lo_k) / (2 pi) * sinc((hi_k - lo_k) x / 2)
//                   * exp(j (lo_k + hi_k) x / 2),
//
// and sampling it at the antenna positions then normalizing to unit power
// gives the transmit weights.
#pragma once

#include <Eigen/Core>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "mabeam/core.hpp"
#include "mabeam/errors.hpp"

namespace mabeam {

/// sin(t) / t, with a series expansion near the origin.
template <typename Scalar>
Scalar sinc(Scalar t) {
  if (std::abs(t) < Scalar(1e-6)) return Scalar(1) - t * t / Scalar(6);
  return std::sin(t) / t;
}

template <typename Scalar>
struct MnfBand {
  Scalar omega_lo;  // rad/m
  Scalar omega_hi;  // rad/m
  Scalar mu;        // passband height
};

/// Passband description of the ideal weight function. Immutable once built.
template <typename Scalar = double>
class MnfProfile {
 public:
  MnfProfile(std::vector<MnfBand<Scalar>> bands, Scalar base_amplitude = Scalar(1))
      : bands_(std::move(bands)), base_amplitude_(base_amplitude) {
    if (bands_.empty()) throw ValidationError("filter profile needs at least one band");
    if (!(base_amplitude_ > Scalar(0))) throw ValidationError("base amplitude must be positive");
    for (const auto& b : bands_) {
      if (b.omega_lo > b.omega_hi) throw ValidationError("band edges out of order");
      if (!(b.mu > Scalar(0))) throw ValidationError("band amplitude must be positive");
    }
    for (std::size_t a = 0; a < bands_.size(); ++a)
      for (std::size_t c = a + 1; c < bands_.size(); ++c)
        if (bands_[a].omega_lo <= bands_[c].omega_hi && bands_[c].omega_lo <= bands_[a].omega_hi)
          throw ValidationError("filter bands overlap");
  }

  /// One band per coverage region, with mu_k = mu / beta_k so that regions
  /// with weaker path gain receive proportionally more amplitude.
  static MnfProfile from_coverage(const CoverageSpec& spec, double wavelength,
                                  Scalar base_amplitude = Scalar(1)) {
    std::vector<MnfBand<Scalar>> bands;
    bands.reserve(spec.size());
    for (const auto& r : spec.regions) {
      const auto [lo, hi] = omega_interval(r, wavelength);
      bands.push_back({static_cast<Scalar>(lo), static_cast<Scalar>(hi),
                       base_amplitude / static_cast<Scalar>(r.path_gain)});
    }
    return MnfProfile(std::move(bands), base_amplitude);
  }

  const std::vector<MnfBand<Scalar>>& bands() const { return bands_; }
  Scalar base_amplitude() const { return base_amplitude_; }

  /// Same passbands with every amplitude multiplied by c.
  MnfProfile scaled(Scalar c) const {
    auto bands = bands_;
    for (auto& b : bands) b.mu *= c;
    return MnfProfile(std::move(bands), base_amplitude_ * c);
  }

 private:
  std::vector<MnfBand<Scalar>> bands_;
  Scalar base_amplitude_;
};

/// Contribution of a single passband to the ideal weight at x. With one band
/// this is the whole band-pass profile.
template <typename Scalar>
std::complex<Scalar> band_pass_weight(const MnfBand<Scalar>& band, Scalar x) {
  const Scalar width = band.omega_hi - band.omega_lo;
  const Scalar center = (band.omega_lo + band.omega_hi) / Scalar(2);
  const Scalar amplitude = band.mu * width / (Scalar(2) * std::numbers::pi_v<Scalar>) *
                           sinc(width * x / Scalar(2));
  return std::polar(amplitude, center * x);
}

/// Ideal continuous weight w(x). The restriction to [0, D] is left to callers.
template <typename Scalar>
std::complex<Scalar> ideal_weight(const MnfProfile<Scalar>& profile, Scalar x) {
  std::complex<Scalar> w(0);
  for (const auto& band : profile.bands()) w += band_pass_weight(band, x);
  return w;
}

/// Samples the ideal weight at each position and normalizes to unit power.
template <typename Derived>
BeamformingVector<typename Derived::Scalar> sample_beamformer(
    const MnfProfile<typename Derived::Scalar>& profile, const Eigen::MatrixBase<Derived>& positions) {
  using Scalar = typename Derived::Scalar;
  BeamformingVector<Scalar> w(positions.size());
  for (Eigen::Index n = 0; n < positions.size(); ++n) w[n] = ideal_weight(profile, Scalar(positions[n]));
  const Scalar norm = w.norm();
  if (!(norm > Scalar(0)))
    throw DegenerateProfile("filter profile vanishes at every antenna position");
  w /= norm;
  return w;
}

/// Beam gain of the sampled multi-notch beamformer toward theta.
template <typename Derived>
typename Derived::Scalar mnf_gain(const MnfProfile<typename Derived::Scalar>& profile,
                                  const Eigen::MatrixBase<Derived>& positions,
                                  typename Derived::Scalar theta,
                                  typename Derived::Scalar wavelength) {
  using Scalar = typename Derived::Scalar;
  check_angle(theta);
  const Scalar spatial_freq = Scalar(2) * std::numbers::pi_v<Scalar> / wavelength * std::cos(theta);
  std::complex<Scalar> acc(0);
  Scalar power(0);
  for (Eigen::Index n = 0; n < positions.size(); ++n) {
    const std::complex<Scalar> w = ideal_weight(profile, Scalar(positions[n]));
    acc += std::conj(w) * std::polar(Scalar(1), spatial_freq * positions[n]);
    power += std::norm(w);
  }
  if (!(power > Scalar(0)))
    throw DegenerateProfile("filter profile vanishes at every antenna position");
  return std::norm(acc) / power;
}

}  // namespace mabeam
