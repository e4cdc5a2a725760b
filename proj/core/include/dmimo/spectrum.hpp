#pragma once

#include <vector>

namespace dmimo {

/// Symmetric circulant interference channel Y_m = X_m + alpha X_{m-1} + Z_m.
///
/// In the large-antenna limit the channel matrix diagonalizes onto the spatial
/// frequency axis f in [0,1) with power response
///     G(f) = |1 + alpha e^{-i 2 pi f}|^2 = 1 + alpha^2 + 2 alpha cos(2 pi f).
class ChannelSpec {
 public:
  /// Throws DomainError unless 0 <= alpha <= 1.
  explicit ChannelSpec(double alpha);

  /// Builds from the squared gain, taking the positive root.
  static ChannelSpec from_alpha2(double alpha2);

  double alpha() const noexcept { return alpha_; }
  double alpha2() const noexcept { return alpha_ * alpha_; }

  /// True when 1/(1 - alpha^2) is finite, i.e. alpha < 1.
  bool is_regular() const noexcept { return alpha_ < 1.0; }

  /// G(f) without range checking. Evaluated as (1-alpha)^2 + 4 alpha cos^2(pi f),
  /// which is algebraically identical and never rounds below zero.
  double gain(double f) const noexcept;

  double min_gain() const noexcept { return (1.0 - alpha_) * (1.0 - alpha_); }
  double max_gain() const noexcept { return (1.0 + alpha_) * (1.0 + alpha_); }

  friend bool operator==(const ChannelSpec&, const ChannelSpec&) = default;

 private:
  double alpha_;
};

/// G(f). Throws DomainError if f is outside [0,1).
double channel_gain(const ChannelSpec& spec, double f);

/// Effective SNR spectrum rho(f) = kappa G(f) / (u + v G(f)).
///
/// Every scheme's equivalent SNR density belongs to this family; the plain
/// channel is (kappa, u, v) = (1, 1, 0). Since rho is an increasing function of
/// G, it is even about f = 1/2 and nonincreasing on [0, 1/2].
struct SnrDensity {
  ChannelSpec channel;
  double kappa = 1.0;
  double u = 1.0;
  double v = 0.0;

  static SnrDensity plain(const ChannelSpec& spec) { return {spec, 1.0, 1.0, 0.0}; }

  /// rho as a function of the channel gain value g = G(f).
  double at_gain(double g) const noexcept { return kappa * g / (u + v * g); }

  bool is_zero() const noexcept { return kappa == 0.0; }
};

/// rho(f). Throws DomainError for f outside [0,1) and DegenerateError when
/// u + v G(f) = 0.
double density_eval(const SnrDensity& d, double f);

/// Eigenvalues |1 + alpha e^{-i 2 pi k / m}|^2 of the m x m circulant channel Gram matrix.
struct EigenSpectrum {
  int m = 0;
  std::vector<double> gains;
};

/// gains[k] = G(k/m), k = 0..m-1. Throws DomainError for m < 1.
EigenSpectrum eigen_spectrum(const ChannelSpec& spec, int m);

}  // namespace dmimo
