#pragma once

#include <array>
#include <limits>
#include <optional>
#include <string_view>

#include "dmimo/spectrum.hpp"

namespace dmimo {

inline constexpr double kUnlimited = std::numeric_limits<double>::infinity();

/// Transmission / compression strategies. Enum order is the canonical output order.
enum class Scheme {
  UB,     ///< cut-set upper bound
  IM,     ///< independent messages, C' = inf
  QW,     ///< quantized waterfilling, C' = inf
  EC,     ///< elementary compression, C = inf
  DC,     ///< distributed compression, C = inf
  IM_EC,
  IM_DC,
  QW_EC,
  QW_DC,
};

inline constexpr std::array<Scheme, 9> kAllSchemes = {
    Scheme::UB, Scheme::IM,    Scheme::QW,    Scheme::EC,   Scheme::DC,
    Scheme::IM_EC, Scheme::IM_DC, Scheme::QW_EC, Scheme::QW_DC};

/// "UB", "IM", ..., "IM-EC", ...
std::string_view scheme_name(Scheme s);

/// Accepts the canonical names, case-insensitive, with '-' or '_' as separator.
std::optional<Scheme> parse_scheme(std::string_view name);

/// Per-transmitter SNR and the two backhaul capacities in bit/symbol.
/// Capacities may be kUnlimited.
struct LinkBudget {
  double power = 0.0;
  double c = kUnlimited;
  double cprime = kUnlimited;
};

/// Throws DomainError for negative or NaN entries or non-finite power.
void validate(const LinkBudget& b);

struct SchemeRate {
  Scheme scheme = Scheme::UB;
  double rate = 0.0;  ///< bit/(symbol x antenna)
  /// Closed-form bound printed alongside the rate, when one exists and alpha < 1.
  std::optional<double> printed_bound;
  /// Regime predicate under which the printed bound is claimed to be attained.
  std::optional<bool> bound_tight;
  /// r* of the distributed-compression fixed point (+inf when C' is unlimited).
  std::optional<double> fixed_point;
};

// --- closed-form building blocks -------------------------------------------

/// No-cooperation rate: integral of log2(1 + P G(f)), in closed form.
double rate_nc(const ChannelSpec& spec, double power);

/// Equivalent noise of per-receiver compression at rate C'.
/// Throws DegenerateError at C' = 0 (infinite noise).
double n_ec(const ChannelSpec& spec, double power, double cprime);

/// High-SNR limit of the elementary compression bound,
/// log2((2^C' - 1)/(1 + alpha^2) + 1/(1 - alpha^2)). DomainError at alpha = 1.
double ec_high_snr_limit(const ChannelSpec& spec, double cprime);

// Regime predicates, each exactly as printed next to its bound. A threshold
// whose denominator is not positive is reported as not satisfied.

/// P >= 2a / ((1-a)(1-a^2)) (upper bound).
bool ub_power_condition(const ChannelSpec& spec, double power);
/// P >= 1/(1-2^-C) * 2a / ((1-a)(1-a^2)) (quantized waterfilling).
bool qw_power_condition(const ChannelSpec& spec, double power, double c);
/// P >= 2a / ((1+a)((1+a^2)(1-2^-C') - 2a)) (elementary compression).
bool ec_power_condition(const ChannelSpec& spec, double power, double cprime);
/// C' > log2((1+a^2)/(1-a)^2) (elementary compression).
bool ec_link_condition(const ChannelSpec& spec, double cprime);
/// P >= 2a / ((1-a)((1-a^2) - 2^-C')) (distributed compression).
bool dc_power_condition(const ChannelSpec& spec, double power, double cprime);
/// C' > 2 log2(1/(1-a)) (distributed compression).
bool dc_link_condition(const ChannelSpec& spec, double cprime);

// --- schemes ----------------------------------------------------------------

/// min{C, C', R_WF(P)} with the large-P closed form.
SchemeRate upper_bound(const ChannelSpec& spec, const LinkBudget& b);

/// Requires C' unlimited.
SchemeRate rate_im(const ChannelSpec& spec, const LinkBudget& b);
/// Requires C' unlimited.
SchemeRate rate_qw(const ChannelSpec& spec, const LinkBudget& b);
/// Requires C unlimited.
SchemeRate rate_ec(const ChannelSpec& spec, const LinkBudget& b);
/// Requires C unlimited.
SchemeRate rate_dc(const ChannelSpec& spec, const LinkBudget& b);

SchemeRate rate_im_ec(const ChannelSpec& spec, const LinkBudget& b);
SchemeRate rate_im_dc(const ChannelSpec& spec, const LinkBudget& b);
SchemeRate rate_qw_ec(const ChannelSpec& spec, const LinkBudget& b);
SchemeRate rate_qw_dc(const ChannelSpec& spec, const LinkBudget& b);

/// Whether `s` is defined at `b` (one-sided schemes need the other link unlimited).
bool is_applicable(Scheme s, const LinkBudget& b);

/// Dispatch on `s`. Throws PreconditionError when !is_applicable(s, b).
SchemeRate evaluate(Scheme s, const ChannelSpec& spec, const LinkBudget& b);

}  // namespace dmimo
