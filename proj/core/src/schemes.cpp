#include "dmimo/schemes.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

#include "dmimo/errors.hpp"
#include "dmimo/fixedpoint.hpp"
#include "dmimo/waterfill.hpp"

namespace dmimo {
namespace {

// 2^-x, with 2^-inf = 0.
double pow2neg(double x) { return std::exp2(-x); }

// 1 - 2^-x without cancellation for small x.
double one_minus_pow2neg(double x) {
  if (std::isinf(x)) return 1.0;
  return -std::expm1(-x * std::numbers::ln2);
}

double inv_one_minus_alpha2(const ChannelSpec& spec) { return 1.0 / (1.0 - spec.alpha2()); }

double clamp_rate(double r) { return std::max(r, 0.0); }

void require_unlimited_cprime(const LinkBudget& b, const char* scheme) {
  if (!std::isinf(b.cprime)) {
    throw PreconditionError(std::string(scheme) +
                            " is defined for an unlimited receive-side link (C' = inf); "
                            "use the combined scheme for finite C'");
  }
}

void require_unlimited_c(const LinkBudget& b, const char* scheme) {
  if (!std::isinf(b.c)) {
    throw PreconditionError(std::string(scheme) +
                            " is defined for an unlimited transmit-side link (C = inf); "
                            "use the combined scheme for finite C");
  }
}

}  // namespace

std::string_view scheme_name(Scheme s) {
  switch (s) {
    case Scheme::UB: return "UB";
    case Scheme::IM: return "IM";
    case Scheme::QW: return "QW";
    case Scheme::EC: return "EC";
    case Scheme::DC: return "DC";
    case Scheme::IM_EC: return "IM-EC";
    case Scheme::IM_DC: return "IM-DC";
    case Scheme::QW_EC: return "QW-EC";
    case Scheme::QW_DC: return "QW-DC";
  }
  return "?";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
  std::string norm;
  norm.reserve(name.size());
  for (char ch : name) {
    norm.push_back(ch == '_' ? '-' : static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  }
  for (Scheme s : kAllSchemes) {
    if (scheme_name(s) == norm) return s;
  }
  return std::nullopt;
}

void validate(const LinkBudget& b) {
  if (!(b.power >= 0.0) || !std::isfinite(b.power)) {
    throw DomainError("SNR P must be finite and nonnegative");
  }
  if (!(b.c >= 0.0)) throw DomainError("transmit-side capacity C must be nonnegative");
  if (!(b.cprime >= 0.0)) throw DomainError("receive-side capacity C' must be nonnegative");
}

double rate_nc(const ChannelSpec& spec, double power) {
  if (!(power >= 0.0)) throw DomainError("SNR P must be nonnegative");
  const double a2 = spec.alpha2();
  const double radicand =
      1.0 + 2.0 * (1.0 + a2) * power + (1.0 - a2) * (1.0 - a2) * power * power;
  return std::log2((1.0 + (1.0 + a2) * power + std::sqrt(radicand)) / 2.0);
}

double n_ec(const ChannelSpec& spec, double power, double cprime) {
  if (cprime == 0.0) {
    throw DegenerateError("elementary compression noise is infinite at C' = 0");
  }
  return (1.0 + (1.0 + spec.alpha2()) * power * pow2neg(cprime)) / one_minus_pow2neg(cprime);
}

double ec_high_snr_limit(const ChannelSpec& spec, double cprime) {
  if (!spec.is_regular()) {
    throw DomainError("high-SNR limit contains 1/(1-alpha^2), undefined at alpha = 1");
  }
  return std::log2(std::expm1(cprime * std::numbers::ln2) / (1.0 + spec.alpha2()) +
                   inv_one_minus_alpha2(spec));
}

bool ub_power_condition(const ChannelSpec& spec, double power) {
  return power >= full_band_threshold(spec);
}

bool qw_power_condition(const ChannelSpec& spec, double power, double c) {
  const double kappa = one_minus_pow2neg(c);
  if (!(kappa > 0.0)) return false;
  return power >= full_band_threshold(spec) / kappa;
}

bool ec_power_condition(const ChannelSpec& spec, double power, double cprime) {
  const double a = spec.alpha();
  const double denom = (1.0 + a) * ((1.0 + a * a) * one_minus_pow2neg(cprime) - 2.0 * a);
  if (!(denom > 0.0)) return false;
  return power >= 2.0 * a / denom;
}

bool ec_link_condition(const ChannelSpec& spec, double cprime) {
  const double a = spec.alpha();
  if (a >= 1.0) return false;
  return cprime > std::log2((1.0 + a * a) / ((1.0 - a) * (1.0 - a)));
}

bool dc_power_condition(const ChannelSpec& spec, double power, double cprime) {
  const double a = spec.alpha();
  const double denom = (1.0 - a) * ((1.0 - a * a) - pow2neg(cprime));
  if (!(denom > 0.0)) return false;
  return power >= 2.0 * a / denom;
}

bool dc_link_condition(const ChannelSpec& spec, double cprime) {
  const double a = spec.alpha();
  if (a >= 1.0) return false;
  return cprime > 2.0 * std::log2(1.0 / (1.0 - a));
}

SchemeRate upper_bound(const ChannelSpec& spec, const LinkBudget& b) {
  validate(b);
  SchemeRate out{.scheme = Scheme::UB};
  const double links = std::min(b.c, b.cprime);
  out.rate = links == 0.0 ? 0.0 : std::min(links, rate_wf_channel(spec, b.power));
  if (spec.is_regular()) {
    out.printed_bound = std::min(links, std::log2(b.power + inv_one_minus_alpha2(spec)));
    out.bound_tight = ub_power_condition(spec, b.power);
  }
  return out;
}

SchemeRate rate_im(const ChannelSpec& spec, const LinkBudget& b) {
  validate(b);
  require_unlimited_cprime(b, "IM");
  return {.scheme = Scheme::IM, .rate = std::min(b.c, rate_nc(spec, b.power))};
}

SchemeRate rate_qw(const ChannelSpec& spec, const LinkBudget& b) {
  validate(b);
  require_unlimited_cprime(b, "QW");
  SchemeRate out{.scheme = Scheme::QW};
  const SnrDensity d{spec, one_minus_pow2neg(b.c), 1.0, b.power * pow2neg(b.c)};
  out.rate = waterfill_rate_or_zero(d, b.power);
  if (spec.is_regular()) {
    out.printed_bound = clamp_rate(std::log2(b.power + inv_one_minus_alpha2(spec)) -
                                   rate_nc(spec, b.power * pow2neg(b.c)));
    out.bound_tight = qw_power_condition(spec, b.power, b.c);
  }
  return out;
}

SchemeRate rate_ec(const ChannelSpec& spec, const LinkBudget& b) {
  validate(b);
  require_unlimited_c(b, "EC");
  SchemeRate out{.scheme = Scheme::EC};
  const double snr = b.cprime == 0.0 ? 0.0 : b.power / n_ec(spec, b.power, b.cprime);
  out.rate = rate_wf_channel(spec, snr);
  if (spec.is_regular()) {
    out.printed_bound = std::log2(snr + inv_one_minus_alpha2(spec));
    out.bound_tight = ec_power_condition(spec, b.power, b.cprime) &&
                      ec_link_condition(spec, b.cprime);
  }
  return out;
}

SchemeRate rate_dc(const ChannelSpec& spec, const LinkBudget& b) {
  validate(b);
  require_unlimited_c(b, "DC");
  SchemeRate out{.scheme = Scheme::DC};
  if (std::isinf(b.cprime)) {
    out.rate = rate_wf_channel(spec, b.power);
    out.fixed_point = kUnlimited;
  } else {
    const auto lhs = [&](double r) {
      return rate_wf_channel(spec, b.power * one_minus_pow2neg(r));
    };
    const FixedPointResult fp = solve_fixed_point(lhs, b.cprime);
    out.rate = clamp_rate(lhs(fp.r_star));
    out.fixed_point = fp.r_star;
  }
  if (spec.is_regular()) {
    out.printed_bound = std::log2((b.power + inv_one_minus_alpha2(spec)) /
                                  (1.0 + b.power * pow2neg(b.cprime)));
    out.bound_tight = dc_power_condition(spec, b.power, b.cprime) &&
                      dc_link_condition(spec, b.cprime);
  }
  return out;
}

SchemeRate rate_im_ec(const ChannelSpec& spec, const LinkBudget& b) {
  validate(b);
  SchemeRate out{.scheme = Scheme::IM_EC};
  if (b.cprime == 0.0 || b.c == 0.0) return out;
  const double noise = n_ec(spec, b.power, b.cprime);
  const double a = spec.alpha();
  const double s = noise + (1.0 + a * a) * b.power;
  // s^2 - 4 a^2 P^2 factored to avoid cancellation
  const double disc = (noise + (1.0 - a) * (1.0 - a) * b.power) *
                      (noise + (1.0 + a) * (1.0 + a) * b.power);
  const double inner = std::log2((s + std::sqrt(disc)) / (2.0 * noise));
  out.rate = clamp_rate(std::min(b.c, inner));
  return out;
}

SchemeRate rate_im_dc(const ChannelSpec& spec, const LinkBudget& b) {
  validate(b);
  SchemeRate out{.scheme = Scheme::IM_DC};
  if (b.c == 0.0) return out;
  const double a2 = spec.alpha2();
  const double A = 1.0 + a2;
  const double B = 1.0 - a2;
  const double x = pow2neg(b.cprime);
  const double p = b.power;
  const double num = 1.0 + A * p + 2.0 * a2 * x * p * p +
                     std::sqrt(1.0 + 2.0 * A * p + (B * B + 4.0 * a2 * x) * p * p);
  const double den = 2.0 * (1.0 + x * p) * (1.0 + a2 * x * p);
  out.rate = clamp_rate(std::min(b.c, std::log2(num / den)));
  return out;
}

SchemeRate rate_qw_ec(const ChannelSpec& spec, const LinkBudget& b) {
  validate(b);
  SchemeRate out{.scheme = Scheme::QW_EC};
  if (b.c == 0.0 || b.cprime == 0.0) return out;
  const SnrDensity d{spec, one_minus_pow2neg(b.c), n_ec(spec, b.power, b.cprime),
                     b.power * pow2neg(b.c)};
  out.rate = waterfill_rate_or_zero(d, b.power);
  return out;
}

SchemeRate rate_qw_dc(const ChannelSpec& spec, const LinkBudget& b) {
  validate(b);
  SchemeRate out{.scheme = Scheme::QW_DC};
  const double kappa_tx = one_minus_pow2neg(b.c);
  const double v = b.power * pow2neg(b.c);
  if (std::isinf(b.cprime)) {
    out.rate = waterfill_rate_or_zero(SnrDensity{spec, kappa_tx, 1.0, v}, b.power);
    out.fixed_point = kUnlimited;
    return out;
  }
  const auto lhs = [&](double r) {
    return waterfill_rate_or_zero(SnrDensity{spec, one_minus_pow2neg(r) * kappa_tx, 1.0, v},
                                  b.power);
  };
  const FixedPointResult fp = solve_fixed_point(lhs, b.cprime);
  out.rate = clamp_rate(lhs(fp.r_star));
  out.fixed_point = fp.r_star;
  return out;
}

bool is_applicable(Scheme s, const LinkBudget& b) {
  switch (s) {
    case Scheme::IM:
    case Scheme::QW:
      return std::isinf(b.cprime);
    case Scheme::EC:
    case Scheme::DC:
      return std::isinf(b.c);
    default:
      return true;
  }
}

SchemeRate evaluate(Scheme s, const ChannelSpec& spec, const LinkBudget& b) {
  switch (s) {
    case Scheme::UB: return upper_bound(spec, b);
    case Scheme::IM: return rate_im(spec, b);
    case Scheme::QW: return rate_qw(spec, b);
    case Scheme::EC: return rate_ec(spec, b);
    case Scheme::DC: return rate_dc(spec, b);
    case Scheme::IM_EC: return rate_im_ec(spec, b);
    case Scheme::IM_DC: return rate_im_dc(spec, b);
    case Scheme::QW_EC: return rate_qw_ec(spec, b);
    case Scheme::QW_DC: return rate_qw_dc(spec, b);
  }
  throw PreconditionError("unknown scheme");
}

}  // namespace dmimo
