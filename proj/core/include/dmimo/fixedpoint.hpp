#pragma once

#include <functional>

namespace dmimo {

struct FixedPointResult {
  double r_star = 0.0;    ///< in [0, C']
  double residual = 0.0;  ///< lhs(r_star) - (C' - r_star)
  int iterations = 0;
};

/// Root of g(r) = lhs(r) - (cprime - r) on [0, cprime] by bisection.
///
/// `lhs` must be continuous and nondecreasing with lhs(0) = 0, which makes g
/// strictly increasing with g(0) <= 0 <= g(cprime). Iteration stops once
/// |g| <= tol. Throws PreconditionError for a negative or non-finite cprime,
/// ConvergenceError if the bracket is violated or 200 bisections are exhausted.
FixedPointResult solve_fixed_point(const std::function<double(double)>& lhs, double cprime,
                                   double tol = 1e-11);

}  // namespace dmimo
