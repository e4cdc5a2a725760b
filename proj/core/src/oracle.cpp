#include "dmimo/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "dmimo/errors.hpp"

namespace dmimo::oracle {

double discrete_waterfill(std::span<const double> snr, double total_power) {
  if (!(total_power >= 0.0)) throw DomainError("total power must be nonnegative");
  std::vector<double> inv;
  inv.reserve(snr.size());
  for (double s : snr) {
    if (s > 0.0) inv.push_back(1.0 / s);
  }
  if (inv.empty() || total_power == 0.0) return 0.0;
  std::sort(inv.begin(), inv.end());

  // Largest active set n whose level (P + sum_{k<n} inv_k)/n exceeds inv_{n-1};
  // the level is then automatically <= inv_n.
  double prefix = 0.0;
  double level = 0.0;
  std::size_t active = 0;
  for (std::size_t n = 1; n <= inv.size(); ++n) {
    prefix += inv[n - 1];
    const double candidate = (total_power + prefix) / static_cast<double>(n);
    if (candidate <= inv[n - 1]) break;
    level = candidate;
    active = n;
  }
  double rate = 0.0;
  for (std::size_t k = 0; k < active; ++k) {
    rate += std::log2(level / inv[k]);
  }
  return rate;
}

double finite_m_rate(const ChannelSpec& spec, double power, int m, FiniteMMode mode) {
  if (!(power >= 0.0)) throw DomainError("power must be nonnegative");
  const EigenSpectrum eig = eigen_spectrum(spec, m);
  if (mode == FiniteMMode::equal_power) {
    double sum = 0.0;
    for (double g : eig.gains) sum += std::log2(1.0 + power * g);
    return sum / m;
  }
  return discrete_waterfill(eig.gains, power * m) / m;
}

double brute_quadrature(const SnrDensity& d, double power, long points) {
  if (points < 1000) throw DomainError("brute_quadrature needs at least 1000 points");
  if (!(power >= 0.0)) throw DomainError("power must be nonnegative");
  std::vector<double> samples(static_cast<std::size_t>(points));
  for (long i = 0; i < points; ++i) {
    const double f = (static_cast<double>(i) + 0.5) / static_cast<double>(points);
    const double g = d.channel.gain(f);
    samples[static_cast<std::size_t>(i)] = d.kappa * g / (d.u + d.v * g);
  }
  return discrete_waterfill(samples, power * static_cast<double>(points)) /
         static_cast<double>(points);
}

OracleReport make_report(std::string target, double reference, double tested, long m_or_points) {
  return {std::move(target), reference, tested, std::abs(reference - tested), m_or_points};
}

}  // namespace dmimo::oracle
