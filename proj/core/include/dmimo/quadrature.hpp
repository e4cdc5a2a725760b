#pragma once

#include <span>
#include <vector>

namespace dmimo {

/// Gauss-Legendre rule on [-1, 1], nodes found by Newton iteration on P_n.
class GaussLegendre {
 public:
  explicit GaussLegendre(int order);

  int order() const noexcept { return static_cast<int>(nodes_.size()); }
  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }

  template <class F>
  double integrate(F&& fn, double a, double b) const {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      sum += weights_[i] * fn(mid + half * nodes_[i]);
    }
    return half * sum;
  }

  /// Sum of the rule applied on each consecutive [breaks[i], breaks[i+1]].
  template <class F>
  double integrate_panels(F&& fn, std::span<const double> breaks) const {
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
      sum += integrate(fn, breaks[i], breaks[i + 1]);
    }
    return sum;
  }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Shared immutable rule of the given order (built once per order, thread-safe).
const GaussLegendre& gauss_legendre(int order);

/// Breakpoints of `panels` equal panels on [a, b], with the last panel halved
/// repeatedly while it is wider than `singular_distance`, the distance from b to
/// the nearest (possibly complex) singularity of the integrand. At most
/// `max_refinements` extra panels are added.
std::vector<double> graded_breaks(double a, double b, int panels, double singular_distance,
                                  int max_refinements = 60);

}  // namespace dmimo
