#include "dmimo/quadrature.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "dmimo/errors.hpp"

namespace dmimo {

GaussLegendre::GaussLegendre(int order) {
  if (order < 1) {
    throw DomainError("Gauss-Legendre order must be positive");
  }
  const auto n = static_cast<std::size_t>(order);
  nodes_.resize(n);
  weights_.resize(n);
  const double eps = 4.0 * std::numeric_limits<double>::epsilon();

  // Roots are symmetric; solve for the upper half and mirror.
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double kk = static_cast<double>(k);
        const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
        p0 = p1;
        p1 = p2;
      }
      // p1 = P_n(x), p0 = P_{n-1}(x)
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) <= eps) break;
    }
    // Recompute derivative at the converged root for the weight.
    double p0 = 1.0;
    double p1 = x;
    for (std::size_t k = 2; k <= n; ++k) {
      const double kk = static_cast<double>(k);
      const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
      p0 = p1;
      p1 = p2;
    }
    dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes_[i] = -x;
    nodes_[n - 1 - i] = x;
    weights_[i] = w;
    weights_[n - 1 - i] = w;
  }
  if (n % 2 == 1) {
    nodes_[n / 2] = 0.0;
  }
}

const GaussLegendre& gauss_legendre(int order) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussLegendre>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[order];
  if (!slot) {
    slot = std::make_unique<GaussLegendre>(order);
  }
  return *slot;
}

std::vector<double> graded_breaks(double a, double b, int panels, double singular_distance,
                                  int max_refinements) {
  if (panels < 1) {
    throw DomainError("panel count must be positive");
  }
  std::vector<double> breaks;
  breaks.reserve(static_cast<std::size_t>(panels + max_refinements + 1));
  const double width = (b - a) / panels;
  for (int i = 0; i < panels; ++i) {
    breaks.push_back(a + width * i);
  }
  double last = width;
  for (int k = 0; k < max_refinements && last > singular_distance; ++k) {
    last *= 0.5;
    breaks.push_back(b - last);
  }
  breaks.push_back(b);
  return breaks;
}

}  // namespace dmimo
