#pragma once

#include <vector>

#include "dmimo/spectrum.hpp"

namespace dmimo {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Waterfilling power allocation S(f) = (mu - 1/rho(f))^+ over f in [0,1).
struct WaterfillSolution {
  double mu = 0.0;          ///< water level, linear power units
  double rate = 0.0;        ///< bit/(symbol x antenna)
  double power_used = 0.0;  ///< integral of S(f) over [0,1)
  /// Where mu rho(f) > 1, restricted to [0, 1/2]; the allocation is even about 1/2.
  std::vector<Interval> active_band;
};

struct WaterfillOptions {
  int gl_order = 40;
  int panels = 32;
  double power_rtol = 1e-12;  ///< bisection target on |power_used - P| / max(P, 1)
};

/// Continuous waterfilling over the SNR density `d` with sum power P.
///
/// The water level is found by bisection against the exact power integral
/// (the waterline crossing and the integral of 1/G(f) are both closed form).
/// The rate integral is split at the crossing and evaluated with composite
/// Gauss-Legendre panels, graded toward the crossing when a singularity of
/// log G sits close to it.
///
/// Throws DomainError for P < 0 or an invalid density, DegenerateError when
/// rho is identically zero and P > 0.
WaterfillSolution waterfill(const SnrDensity& d, double power, const WaterfillOptions& opts = {});

/// Waterfilling rate over the plain channel density G(f).
double rate_wf_channel(const ChannelSpec& spec, double power);

/// Rate over `d`, or 0 when either the density or the power vanishes.
double waterfill_rate_or_zero(const SnrDensity& d, double power);

struct ClosedFormBound {
  double bound = 0.0;
  bool tight = false;
};

/// log2(snr + 1/(1 - alpha^2)), an upper bound on the waterfilling rate over
/// G(f)/N at snr = P/N. `tight` uses the sufficient condition as stated with
/// the bound: snr >= 2 alpha / ((1-alpha)^2 (1-alpha^2)).
/// Throws DomainError for alpha = 1.
ClosedFormBound lemma1_bound(const ChannelSpec& spec, double snr);

/// 2 alpha / ((1-alpha)^2 (1-alpha^2)), the threshold used by lemma1_bound.
double lemma1_threshold(const ChannelSpec& spec);

/// 2 alpha / ((1-alpha)(1-alpha^2)). This is the exact SNR above which the
/// waterfilling allocation over G(f) covers the whole band, i.e. where the
/// lemma1 bound holds with equality. Returns +inf for alpha = 1.
double full_band_threshold(const ChannelSpec& spec);

/// Integral of 1/G(f) over [0, x], x in [0, 1/2]. Equals 1/(2(1-alpha^2)) at x = 1/2.
double inverse_gain_integral(const ChannelSpec& spec, double x);

}  // namespace dmimo
