#pragma once

// Test-only reference integrators and frozen values. Nothing here calls into
// the waterfill solver, so agreement with it is evidence rather than tautology.

#include <cmath>
#include <numbers>
#include <random>

namespace dmimo::test {

/// (1/n) sum_{i<n} fn((i + 1/2)/n): midpoint rule on [0,1).
template <class F>
double midpoint_mean(F&& fn, long n) {
  double sum = 0.0;
  for (long i = 0; i < n; ++i) sum += fn((static_cast<double>(i) + 0.5) / static_cast<double>(n));
  return sum / static_cast<double>(n);
}

/// Composite Simpson on [a, b] with `n` (even) intervals.
template <class F>
double simpson(F&& fn, double a, double b, long n) {
  if (n % 2) ++n;
  const double h = (b - a) / static_cast<double>(n);
  double sum = fn(a) + fn(b);
  for (long i = 1; i < n; ++i) sum += (i % 2 ? 4.0 : 2.0) * fn(a + h * static_cast<double>(i));
  return sum * h / 3.0;
}

/// G(f) in its textbook form, kept separate from ChannelSpec::gain.
inline double textbook_gain(double alpha, double f) {
  return 1.0 + alpha * alpha + 2.0 * alpha * std::cos(2.0 * std::numbers::pi * f);
}

// Frozen from an independent 30-digit mpmath implementation (adaptive
// tanh-sinh quadrature split at a numerically located waterline, bisection on
// the water level and on r*).
inline constexpr double kRwfA06P10 = 3.638261963545382475;    // R_WF(P=10), a^2 = 0.6
inline constexpr double kRwfA06P1 = 1.3917070282794201586;    // R_WF(P=1),  a^2 = 0.6
inline constexpr double kRwfA09P1 = 1.5249217732232311947;    // R_WF(P=1),  a^2 = 0.9
inline constexpr double kRwfA06P9375 = 3.5623367083877044928; // R_WF(P=9.375), a^2 = 0.6
inline constexpr double kQwA06P10C4 = 2.73010085122995977;    // R_QW, a^2=0.6, P=10, C=4
inline constexpr double kQwEcA06P1 = 1.1543476540935761295;   // R_QW-EC, a^2=0.6, P=1, C=C'=4
inline constexpr double kQwDcA06P1 = 1.14893712473264;        // R_QW-DC, a^2=0.6, P=1, C=C'=4
inline constexpr double kQwEcA06P10 = 2.2658830799479897417;  // R_QW-EC, a^2=0.6, P=10, C=C'=4
inline constexpr double kQwDcA06P10 = 2.32623083950403;       // R_QW-DC, a^2=0.6, P=10, C=C'=4

inline std::mt19937_64 seeded_rng(unsigned long long seed = 0x5eed) { return std::mt19937_64(seed); }

}  // namespace dmimo::test
