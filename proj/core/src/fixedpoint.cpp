#include "dmimo/fixedpoint.hpp"

#include <cmath>

#include "dmimo/errors.hpp"

namespace dmimo {
namespace {
constexpr int kMaxBisections = 200;
}

FixedPointResult solve_fixed_point(const std::function<double(double)>& lhs, double cprime,
                                   double tol) {
  if (!(cprime >= 0.0) || !std::isfinite(cprime)) {
    throw PreconditionError("fixed point: link capacity must be finite and nonnegative");
  }
  const auto g = [&](double r) { return lhs(r) - (cprime - r); };

  FixedPointResult out;
  const double g_lo = g(0.0);
  if (std::abs(g_lo) <= tol) {
    out.residual = g_lo;
    return out;
  }
  const double g_hi = g(cprime);
  if (std::abs(g_hi) <= tol) {
    out.r_star = cprime;
    out.residual = g_hi;
    return out;
  }
  if (g_lo > 0.0 || g_hi < 0.0) {
    throw ConvergenceError("fixed point: g(0) <= 0 <= g(C') violated; lhs is not a valid rate");
  }

  double lo = 0.0;
  double hi = cprime;
  out.r_star = g_hi < -g_lo ? hi : lo;
  out.residual = g_hi < -g_lo ? g_hi : g_lo;
  for (int iter = 1; iter <= kMaxBisections; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    out.iterations = iter;
    if (std::abs(gm) < std::abs(out.residual)) {
      out.r_star = mid;
      out.residual = gm;
    }
    if (std::abs(gm) <= tol) return out;
    if (mid <= lo || mid >= hi) break;
    if (gm < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // The bracket has collapsed to adjacent doubles; accept if the residual is
  // within float noise of the left-hand side.
  if (std::abs(out.residual) <= 1e-9) return out;
  throw ConvergenceError("fixed point: bisection exhausted without meeting tolerance");
}

}  // namespace dmimo
