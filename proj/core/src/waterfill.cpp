#include "dmimo/waterfill.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "dmimo/errors.hpp"
#include "dmimo/quadrature.hpp"

namespace dmimo {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxBisections = 400;
constexpr double kAcceptRtol = 1e-10;

void validate(const SnrDensity& d, double power) {
  if (!(power >= 0.0) || !std::isfinite(power)) {
    throw DomainError("waterfilling power must be finite and nonnegative");
  }
  if (!(d.kappa >= 0.0) || !std::isfinite(d.kappa)) {
    throw DomainError("density gain kappa must be finite and nonnegative");
  }
  if (!(d.u > 0.0) || !std::isfinite(d.u)) {
    throw DomainError("density noise floor u must be finite and positive");
  }
  if (!(d.v >= 0.0) || !std::isfinite(d.v)) {
    throw DomainError("density self-interference v must be finite and nonnegative");
  }
}

// Geometry of the waterline for a fixed density. rho is nonincreasing on
// [0, 1/2], so the active set is always [0, cutoff] (mirrored about 1/2).
class Waterline {
 public:
  explicit Waterline(const SnrDensity& d) : d_(d), alpha_(d.channel.alpha()) {}

  // f in [0, 1/2] where mu rho(f) = 1, or 0 / 1/2 when no crossing exists.
  double cutoff(double mu) const {
    const double t = mu * d_.kappa - d_.v;
    if (!(t > 0.0)) return 0.0;
    const double g_star = d_.u / t;
    if (g_star >= d_.channel.max_gain()) return 0.0;
    if (g_star <= d_.channel.min_gain()) return 0.5;
    const double one_minus = 1.0 - alpha_;
    const double c2 = std::clamp((g_star - one_minus * one_minus) / (4.0 * alpha_), 0.0, 1.0);
    return std::acos(std::sqrt(c2)) / std::numbers::pi;
  }

  // Exact integral of (mu - 1/rho)^+ over [0, 1).
  double power(double mu) const {
    const double fc = cutoff(mu);
    if (fc <= 0.0) return 0.0;
    const double p = 2.0 * ((mu - d_.v / d_.kappa) * fc -
                            (d_.u / d_.kappa) * inverse_gain_integral(d_.channel, fc));
    return std::max(p, 0.0);
  }

 private:
  const SnrDensity& d_;
  double alpha_;
};

}  // namespace

double inverse_gain_integral(const ChannelSpec& spec, double x) {
  if (!(x >= 0.0 && x <= 0.5)) {
    throw DomainError("inverse_gain_integral: upper limit must lie in [0, 1/2]");
  }
  const double a = spec.alpha();
  const double s = std::sin(std::numbers::pi * x);
  const double c = std::cos(std::numbers::pi * x);
  if (a < 1.0) {
    return std::atan2((1.0 - a) * s, (1.0 + a) * c) / (std::numbers::pi * (1.0 - a * a));
  }
  // G(f) = 4 cos^2(pi f)
  if (x == 0.5) return kInf;
  return s / c / (4.0 * std::numbers::pi);
}

WaterfillSolution waterfill(const SnrDensity& d, double power, const WaterfillOptions& opts) {
  validate(d, power);
  const ChannelSpec& ch = d.channel;
  const double rho_max = d.at_gain(ch.max_gain());

  WaterfillSolution sol;
  if (power == 0.0) {
    sol.mu = d.is_zero() ? kInf : 1.0 / rho_max;
    return sol;
  }
  if (d.is_zero()) {
    throw DegenerateError("waterfilling over an identically zero SNR density with P > 0");
  }

  if (ch.alpha() == 0.0) {
    const double c = d.kappa / (d.u + d.v);
    sol.mu = power + 1.0 / c;
    sol.rate = std::log2(1.0 + power * c);
    sol.power_used = power;
    sol.active_band.push_back({0.0, 0.5});
    return sol;
  }

  const Waterline line(d);
  const double tol = opts.power_rtol * std::max(power, 1.0);
  const double rho_min = d.at_gain(ch.min_gain());

  double lo = 1.0 / rho_max;
  double hi;
  if (rho_min > 0.0) {
    hi = power + 1.0 / rho_min;
  } else {
    hi = lo + power;
    for (int k = 0; line.power(hi) < power; ++k) {
      if (k > 200) throw ConvergenceError("waterfill: failed to bracket the water level");
      hi = lo + 2.0 * (hi - lo);
    }
  }

  double mu = hi;
  double residual = std::abs(line.power(hi) - power);
  for (int iter = 0; iter < kMaxBisections && residual > tol; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double pm = line.power(mid);
    const double r = std::abs(pm - power);
    if (r < residual) {
      residual = r;
      mu = mid;
    }
    if (pm < power) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (residual > kAcceptRtol * std::max(power, 1.0)) {
    throw ConvergenceError("waterfill: water level bisection did not converge");
  }

  const double fc = line.cutoff(mu);
  sol.mu = mu;
  sol.power_used = line.power(mu);
  if (fc > 0.0) {
    sol.active_band.push_back({0.0, fc});
    const double a = ch.alpha();
    // log G has complex zeros at f = 1/2 +- i ln(1/alpha) / (2 pi).
    const double sing = std::hypot(0.5 - fc, std::log(1.0 / a) / (2.0 * std::numbers::pi));
    const auto breaks = graded_breaks(0.0, fc, opts.panels, sing);
    const auto& rule = gauss_legendre(opts.gl_order);
    const double integral = rule.integrate_panels(
        [&](double f) { return std::max(0.0, std::log2(mu * d.at_gain(ch.gain(f)))); }, breaks);
    sol.rate = 2.0 * integral;
  }
  return sol;
}

double rate_wf_channel(const ChannelSpec& spec, double power) {
  return waterfill(SnrDensity::plain(spec), power).rate;
}

double waterfill_rate_or_zero(const SnrDensity& d, double power) {
  if (d.is_zero() || power == 0.0) return 0.0;
  return waterfill(d, power).rate;
}

double lemma1_threshold(const ChannelSpec& spec) {
  const double a = spec.alpha();
  if (a >= 1.0) return kInf;
  return 2.0 * a / ((1.0 - a) * (1.0 - a) * (1.0 - a * a));
}

double full_band_threshold(const ChannelSpec& spec) {
  const double a = spec.alpha();
  if (a >= 1.0) return kInf;
  return 2.0 * a / ((1.0 - a) * (1.0 - a * a));
}

ClosedFormBound lemma1_bound(const ChannelSpec& spec, double snr) {
  if (!spec.is_regular()) {
    throw DomainError("closed-form bound contains 1/(1-alpha^2), undefined at alpha = 1");
  }
  if (!(snr >= 0.0)) {
    throw DomainError("snr must be nonnegative");
  }
  const double a2 = spec.alpha2();
  return {std::log2(snr + 1.0 / (1.0 - a2)), snr >= lemma1_threshold(spec)};
}

}  // namespace dmimo
