#include "gcfhs/numtheory.hpp"
#include "gcfhs/rational.hpp"

#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

namespace gcfhs {
namespace {

bool trial_division_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t d = 2; d * d <= x; ++d) {
    if (x % d == 0) return false;
  }
  return true;
}

TEST(NumTheory, OddPrimeAgreesWithTrialDivision) {
  for (std::uint64_t x = 0; x < 5000; ++x) {
    EXPECT_EQ(is_odd_prime(x), x != 2 && trial_division_prime(x)) << x;
  }
  EXPECT_TRUE(is_odd_prime(2147483647ULL));
  EXPECT_FALSE(is_odd_prime(2147483647ULL * 3));
  // Strong pseudoprime to several small bases.
  EXPECT_FALSE(is_odd_prime(3215031751ULL));
}

TEST(NumTheory, PowMod) {
  EXPECT_EQ(pow_mod(2, 10, 1000), 24u);
  EXPECT_EQ(pow_mod(7, 0, 13), 1u);
  EXPECT_EQ(pow_mod(0, 5, 13), 0u);
  EXPECT_EQ(pow_mod(3, 2147483646ULL, 2147483647ULL), 1u);  // Fermat
  EXPECT_THROW(pow_mod(2, 3, 1), std::invalid_argument);
}

TEST(NumTheory, PAdicDecomposition) {
  const PAdicDecomposition d = p_adic_decompose(3 * 3 * 3 * 5, 3);
  EXPECT_EQ(d.exponent, 3u);
  EXPECT_EQ(d.unit, 5u);
  EXPECT_EQ(p_adic_decompose(7, 3).exponent, 0u);
  EXPECT_THROW(p_adic_decompose(0, 3), std::invalid_argument);
}

TEST(NumTheory, QuadraticCharacterMatchesSquareSet) {
  for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    std::set<std::uint64_t> squares;
    for (std::uint64_t x = 1; x < p; ++x) squares.insert(x * x % p);
    for (std::uint64_t u = 1; u < 3 * p; ++u) {
      if (u % p == 0) continue;
      EXPECT_EQ(quadratic_character(u, p), squares.count(u % p) ? 1 : -1) << p << ' ' << u;
    }
    EXPECT_THROW(quadratic_character(p, p), std::invalid_argument);
  }
}

TEST(NumTheory, PrimitiveRootModPSquaredGeneratesAllUnits) {
  for (std::uint64_t p : {3, 5, 7, 11, 13, 29, 31, 37}) {
    const std::uint64_t g = primitive_root_mod_p_squared(p);
    const std::uint64_t q = p * p;
    std::set<std::uint64_t> seen;
    std::uint64_t x = 1;
    for (std::uint64_t s = 0; s < p * (p - 1); ++s) {
      seen.insert(x);
      x = x * g % q;
    }
    EXPECT_EQ(seen.size(), p * (p - 1)) << p;
  }
}

TEST(NumTheory, CheckedPow) {
  EXPECT_EQ(checked_pow(3, 4), 81u);
  EXPECT_EQ(checked_pow(5, 0), 1u);
  EXPECT_THROW(checked_pow(2, 31, std::uint64_t{1} << 30), std::overflow_error);
  EXPECT_THROW(checked_pow(10, 30), std::overflow_error);
}

TEST(Rational, ArithmeticAndFormatting) {
  const ExactRational a = ExactRational::of(7, 4);
  const ExactRational b = ExactRational::of(58, 27);
  EXPECT_EQ(a.to_fraction_string(), "7/4");
  EXPECT_EQ(b.to_fraction_string(), "58/27");
  EXPECT_EQ(ExactRational(3).to_fraction_string(), "3/1");
  EXPECT_EQ(ExactRational::of(6, 4), ExactRational::of(3, 2));
  EXPECT_EQ(a + b, ExactRational::of(7 * 27 + 58 * 4, 108));
  EXPECT_EQ(a * b / b, a);
  EXPECT_LT(a, b);
  EXPECT_EQ(ExactRational::of(7, 4).ceil(), 2);
  EXPECT_EQ(ExactRational::of(-7, 4).ceil(), -1);
  EXPECT_EQ(ExactRational::of(8, 4).ceil(), 2);
  EXPECT_EQ(rational_pow(3, -2), ExactRational::of(1, 9));
  EXPECT_EQ(rational_pow(3, 3), ExactRational(27));
  EXPECT_TRUE(ExactRational::of(8, 4).is_integer());
  EXPECT_FALSE(a.is_integer());
}

}  // namespace
}  // namespace gcfhs
