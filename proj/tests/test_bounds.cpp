#include "gcfhs/bounds.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

#include "support.hpp"

namespace gcfhs {
namespace {

TEST(Bounds, LempelGreenberg) {
  EXPECT_EQ(lempel_greenberg_bound(9, 4).bound, 2);
  EXPECT_EQ(lempel_greenberg_bound(25, 4).bound, 6);
  EXPECT_EQ(lempel_greenberg_bound(27, 6).bound, 4);
  EXPECT_EQ(lempel_greenberg_bound(8, 8).bound, 0);
  EXPECT_THROW(lempel_greenberg_bound(0, 4), std::invalid_argument);
}

TEST(Bounds, LempelGreenbergMatchesFloorEverywhere) {
  for (std::uint64_t nu = 1; nu < 200; ++nu) {
    for (std::uint64_t m = 1; m <= nu; ++m) {
      const LempelGreenberg lg = lempel_greenberg_bound(nu, m);
      EXPECT_EQ(lg.bound, lg.corollary);
    }
  }
}

TEST(Bounds, PengFan) {
  const PengFan a = peng_fan_bounds(9, 4, 4);
  EXPECT_EQ(a.bound1, 3);
  EXPECT_EQ(a.bound2, 3);
  const PengFan b = peng_fan_bounds(27, 6, 6);
  EXPECT_EQ(b.bound1, 5);
  EXPECT_EQ(b.bound2, 5);
  EXPECT_THROW(peng_fan_bounds(1, 1, 1), std::invalid_argument);
}

TEST(Bounds, ReportForLengthNine) {
  const OptimalityReport r = optimality_report(FhsParams(3, 2));
  EXPECT_EQ(r.nu, 9u);
  EXPECT_EQ(r.lempel_greenberg.bound, 2);
  EXPECT_EQ(r.maxima.family_max, 7);
  EXPECT_EQ(r.maxima.max_cross, 6);
  EXPECT_FALSE(r.peng_fan_optimal);
  EXPECT_EQ(r.averages.auto_total, 56);
  EXPECT_EQ(r.averages.cross_total, 116);
  EXPECT_EQ(r.averages.auto_average, ExactRational::of(7, 4));
  EXPECT_EQ(r.averages.cross_average, ExactRational::of(58, 27));
  EXPECT_EQ(r.ah.lhs, ExactRational::of(1, 3));
  EXPECT_EQ(r.ah.rhs, ExactRational::of(1, 3));
  EXPECT_TRUE(r.ah.equality);
  EXPECT_TRUE(r.uniform);
}

TEST(Bounds, AhEqualityOnGrid) {
  for (const auto& [p, n] : testing::property_grid()) {
    const OptimalityReport r = optimality_report(FhsParams(p, n));
    EXPECT_TRUE(r.uniform) << p << '^' << n;
    EXPECT_TRUE(r.ah.equality) << p << '^' << n;
    EXPECT_EQ(r.ah.lhs, r.ah.rhs);
  }
}

TEST(Bounds, AhAndUniformityFailTogetherUnderPerturbation) {
  for (const auto& [p, n] : testing::property_grid()) {
    const FhsParams params(p, n);
    const FhsFamily family = build_family(params);
    for (std::uint64_t t : {std::uint64_t{0}, std::uint64_t{1}, params.nu() - 1}) {
      const FhsSequence& x = family[1];
      const FhsFamily mutant = family.with_sequence(x.with_symbol(t, (x[t] + 1) % params.m()));
      const OptimalityReport r = optimality_report(mutant);
      EXPECT_FALSE(r.uniform);
      EXPECT_FALSE(r.ah.equality);
      EXPECT_GT(r.ah.lhs, r.ah.rhs);
    }
  }
}

TEST(Bounds, AverageAutoRangeMatters) {
  const FhsParams params(3, 2);
  const FhsFamily family = build_family(params);
  const CorrelationSet tables = CorrelationSet::shift_reduced(family);
  const AverageCorrelations all = average_correlations(family, tables, AutoRange::kAllShifts);
  EXPECT_EQ(all.auto_total, 56 + 4 * 9);
  EXPECT_FALSE(ah_optimality_check(params, all).equality);
}

}  // namespace
}  // namespace gcfhs
