#include "dmimo/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dmimo/errors.hpp"

namespace dmimo {

ChannelSpec::ChannelSpec(double alpha) : alpha_(alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DomainError("interference gain alpha must lie in [0,1], got " + std::to_string(alpha));
  }
}

ChannelSpec ChannelSpec::from_alpha2(double alpha2) {
  if (!(alpha2 >= 0.0 && alpha2 <= 1.0)) {
    throw DomainError("alpha^2 must lie in [0,1], got " + std::to_string(alpha2));
  }
  return ChannelSpec(std::sqrt(alpha2));
}

double ChannelSpec::gain(double f) const noexcept {
  const double c = std::cos(std::numbers::pi * f);
  return (1.0 - alpha_) * (1.0 - alpha_) + 4.0 * alpha_ * c * c;
}

double channel_gain(const ChannelSpec& spec, double f) {
  if (!(f >= 0.0 && f < 1.0)) {
    throw DomainError("spatial frequency must lie in [0,1), got " + std::to_string(f));
  }
  return spec.gain(f);
}

double density_eval(const SnrDensity& d, double f) {
  const double g = channel_gain(d.channel, f);
  const double denom = d.u + d.v * g;
  if (denom == 0.0) {
    throw DegenerateError("SNR density denominator u + v G(f) vanishes");
  }
  return d.kappa * g / denom;
}

EigenSpectrum eigen_spectrum(const ChannelSpec& spec, int m) {
  if (m < 1) {
    throw DomainError("antenna count must be positive");
  }
  EigenSpectrum out;
  out.m = m;
  out.gains.resize(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    out.gains[static_cast<std::size_t>(k)] = spec.gain(static_cast<double>(k) / m);
  }
  return out;
}

}  // namespace dmimo
