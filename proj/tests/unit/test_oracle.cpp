#include <cmath>
#include <vector>

#include "dmimo/errors.hpp"
#include "dmimo/oracle.hpp"
#include "dmimo/schemes.hpp"
#include "dmimo/waterfill.hpp"
#include "doctest.h"

using namespace dmimo;
using oracle::FiniteMMode;

TEST_CASE("discrete_waterfill basics") {
  const std::vector<double> flat(4, 1.0);
  CHECK(oracle::discrete_waterfill(flat, 4.0) == doctest::Approx(4.0));
  CHECK(oracle::discrete_waterfill(flat, 0.0) == 0.0);
  const std::vector<double> dead = {0.0, 0.0};
  CHECK(oracle::discrete_waterfill(dead, 5.0) == 0.0);
  CHECK_THROWS_AS(oracle::discrete_waterfill(flat, -1.0), DomainError);

  // gains {4, 1}: with P = 0.5 only the strong channel is active
  const std::vector<double> two = {1.0, 4.0};
  CHECK(oracle::discrete_waterfill(two, 0.5) == doctest::Approx(std::log2(3.0)));
  // P = 3: level (3 + 1.25)/2, both active
  CHECK(oracle::discrete_waterfill(two, 3.0) ==
        doctest::Approx(std::log2(2.125 * 4.0) + std::log2(2.125)));
}

TEST_CASE("finite_m_rate examples") {
  CHECK(oracle::finite_m_rate(ChannelSpec(0.0), 1.0, 8, FiniteMMode::equal_power) ==
        doctest::Approx(1.0));
  const auto spec = ChannelSpec::from_alpha2(0.6);
  CHECK(std::abs(oracle::finite_m_rate(spec, 10.0, 4096, FiniteMMode::equal_power) -
                 std::log2(12.0)) < 1e-4);
  CHECK(std::abs(oracle::finite_m_rate(spec, 100.0, 4096, FiniteMMode::waterfill) -
                 std::log2(102.5)) < 1e-4);
  CHECK_THROWS_AS(oracle::finite_m_rate(spec, 1.0, 0, FiniteMMode::waterfill), DomainError);
}

TEST_CASE("brute_quadrature examples") {
  CHECK(std::abs(oracle::brute_quadrature(SnrDensity::plain(ChannelSpec(0.0)), 3.0, 100000) -
                 2.0) < 1e-8);
  CHECK(oracle::brute_quadrature(SnrDensity::plain(ChannelSpec(0.5)), 0.0, 1000) == 0.0);
  CHECK_THROWS_AS(oracle::brute_quadrature(SnrDensity::plain(ChannelSpec(0.5)), 1.0, 999),
                  DomainError);

  const auto spec = ChannelSpec::from_alpha2(0.6);
  const SnrDensity qw{spec, 1.0 - 1.0 / 16.0, 1.0, 10.0 / 16.0};
  CHECK(std::abs(oracle::brute_quadrature(qw, 10.0, 1'000'000) - waterfill(qw, 10.0).rate) < 1e-5);
}

TEST_CASE("make_report records the gap") {
  const auto r = oracle::make_report("rate_nc", 2.0, 2.5, 4096);
  CHECK(r.abs_gap == 0.5);
  CHECK(r.target == "rate_nc");
  CHECK(r.m_or_points == 4096);
}

TEST_CASE("finite-m sums converge faster than first order") {
  // Equal-power sums of a smooth periodic integrand converge spectrally, so the
  // gap does not halve per doubling of m; it collapses to rounding level.
  for (double a2 : {0.3, 0.6, 0.9}) {
    const auto spec = ChannelSpec::from_alpha2(a2);
    for (double p : {1.0, 10.0}) {
      const double exact = rate_nc(spec, p);
      const double gap = std::abs(oracle::finite_m_rate(spec, p, 256, FiniteMMode::equal_power) - exact);
      CHECK(gap < 1e-12);
    }
  }
  // With waterfilling in the partial-band regime the kink at the waterline
  // makes convergence irregular but still monotone on average.
  const auto spec = ChannelSpec::from_alpha2(0.6);
  const double exact = rate_wf_channel(spec, 10.0);
  const double g256 = std::abs(oracle::finite_m_rate(spec, 10.0, 256, FiniteMMode::waterfill) - exact);
  const double g8192 = std::abs(oracle::finite_m_rate(spec, 10.0, 8192, FiniteMMode::waterfill) - exact);
  CHECK(g8192 < g256 / 32.0);
  CHECK(g8192 < 1e-9);
}

TEST_CASE("brute quadrature agrees with waterfill for every scheme density on the grid") {
  for (double a2 : {0.0, 0.3, 0.6, 0.9}) {
    const auto spec = ChannelSpec::from_alpha2(a2);
    for (double p : {0.1, 1.0, 10.0, 100.0}) {
      for (double link : {1.0, 4.0}) {
        const double x = std::exp2(-link);
        std::vector<SnrDensity> densities = {
            SnrDensity::plain(spec),                    // UB, and DC/QW at C' = inf
            SnrDensity{spec, 1.0 - x, 1.0, p * x},      // QW
            SnrDensity{spec, 1.0, n_ec(spec, p, link), 0.0},  // EC
            SnrDensity{spec, (1.0 - x) * (1.0 - x), 1.0, p * x},  // QW-DC at r = C
        };
        for (const auto& d : densities) {
          CHECK(std::abs(oracle::brute_quadrature(d, p, 1'000'000) - waterfill(d, p).rate) < 1e-5);
        }
      }
    }
  }
}
