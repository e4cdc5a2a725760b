#pragma once

#include <stdexcept>
#include <string>

namespace dmimo {

/// Argument outside the mathematical domain of an operation
/// (frequency outside [0,1), alpha outside [0,1], alpha = 1 where 1/(1-alpha^2) appears).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A density or noise term that collapses (zero denominator, identically-zero SNR with P > 0).
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller broke an operation's precondition (e.g. a one-sided scheme with both links finite).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative solver failed to bracket or converge. Signals a bug, not bad input.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dmimo
