#pragma once

// Reference calculators that share no code path with the continuous
// waterfilling solver: finite-M circulant eigenvalue sums and a brute-force
// midpoint discretization. Used by the test suites to certify closed forms.

#include <span>
#include <string>

#include "dmimo/spectrum.hpp"

namespace dmimo::oracle {

enum class FiniteMMode { waterfill, equal_power };

/// Per-antenna rate of the m-antenna circulant channel.
/// equal_power: (1/m) sum_k log2(1 + P gains[k]).
/// waterfill:   classical discrete waterfilling over gains[k] with total power m P.
double finite_m_rate(const ChannelSpec& spec, double power, int m, FiniteMMode mode);

/// Midpoint-rule waterfilling rate of density `d` on `points` uniform samples.
/// Throws DomainError for points < 1000.
double brute_quadrature(const SnrDensity& d, double power, long points);

/// Discrete waterfilling over per-channel SNRs with total power `total_power`.
/// Returns the summed rate (bits) across channels. Staircase algorithm: sort
/// the inverse SNRs and grow the active set until the water level clears the
/// next step. Channels with zero SNR never receive power.
double discrete_waterfill(std::span<const double> snr, double total_power);

struct OracleReport {
  std::string target;
  double reference_value = 0.0;
  double tested_value = 0.0;
  double abs_gap = 0.0;
  long m_or_points = 0;
};

OracleReport make_report(std::string target, double reference, double tested, long m_or_points);

}  // namespace dmimo::oracle
