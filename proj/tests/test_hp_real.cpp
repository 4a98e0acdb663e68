#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "arctan_bounds/errors.hpp"
#include "arctan_bounds/hp_real.hpp"

using namespace arctan_bounds;

namespace {

// pi and ln 2 truncated to 49 and 50 decimals.
constexpr const char* kPi50 = "31415926535897932384626433832795028841971693993751";
constexpr const char* kLn2_50 = "69314718055994530941723212145817656807550013436025";

mpz_class truncated_digits(const HpReal& v, int digits) {
  return v.rescaled(digits).raw();
}

}  // namespace

TEST(HpReal, FromDoubleIsExactForDyadicValues) {
  const HpReal half = HpReal::from_double(0.5, 3);
  EXPECT_EQ(half.raw(), 500);
  const HpReal big = HpReal::from_double(0x1p60, 0);
  EXPECT_EQ(big.raw(), mpz_class("1152921504606846976"));
  EXPECT_EQ(HpReal::from_double(-0.75, 2).raw(), -75);
}

TEST(HpReal, ToDoubleRoundTripsDoubles) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> exponent(-30.0, 30.0);
  for (int i = 0; i < 2000; ++i) {
    const double v = std::pow(10.0, exponent(rng)) * ((i % 2) ? -1.0 : 1.0);
    // 60 fractional digits keep at least 30 significant digits for |v| >= 1e-30.
    EXPECT_EQ(HpReal::from_double(v, 60).to_double(), v) << v;
  }
}

TEST(HpReal, ArithmeticAlignsScales) {
  const HpReal a = HpReal::from_int(3, 2);   // 3.00
  const HpReal b = HpReal::from_double(0.25, 5);
  EXPECT_EQ((a + b).scale(), 5);
  EXPECT_EQ((a + b).raw(), 325000);
  EXPECT_EQ((a - b).raw(), 275000);
  EXPECT_EQ((a * b).raw(), 75000);
  EXPECT_EQ((b / a).raw(), 8333);  // truncated
  EXPECT_TRUE(a > b);
  EXPECT_TRUE(HpReal::from_int(1, 2) == HpReal::from_int(1, 9));
  EXPECT_THROW((void)(a / HpReal(0, 3)), DomainError);
}

TEST(HpReal, IsqrtIsFloorSquareRoot) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    mpz_class n = 1;
    const int words = 1 + i % 8;
    for (int w = 0; w < words; ++w) n = n * mpz_class(static_cast<unsigned long>(rng() >> 1)) + 1;
    const mpz_class r = isqrt(n);
    EXPECT_LE(r * r, n);
    EXPECT_GT((r + 1) * (r + 1), n);
  }
  EXPECT_EQ(isqrt(0), 0);
  EXPECT_EQ(isqrt(1), 1);
  EXPECT_EQ(isqrt(15), 3);
  EXPECT_EQ(isqrt(16), 4);
  EXPECT_THROW(isqrt(-1), DomainError);
}

TEST(HpReal, SqrtOfTwo) {
  const HpReal root = sqrt(HpReal::from_int(2, 40));
  EXPECT_EQ(root.raw(), mpz_class("14142135623730950488016887242096980785696"));
}

TEST(HpReal, PiMatchesReferenceDigits) {
  EXPECT_EQ(truncated_digits(pi_at_scale(60), 49), mpz_class(kPi50));
  EXPECT_EQ(truncated_digits(pi_at_scale(49), 49), mpz_class(kPi50));
}

TEST(HpReal, LogMatchesReferenceValues) {
  EXPECT_EQ(truncated_digits(ln2_at_scale(55), 50), mpz_class(kLn2_50));
  // log(10) and log(1 + 1e-16) from mpmath.
  const HpReal ln10 = log(HpReal::from_int(10, 45));
  EXPECT_EQ(truncated_digits(ln10, 40), mpz_class("23025850929940456840179914546843642076011"));
  const HpReal tiny = log(HpReal::from_int(1, 60) + HpReal::from_double(1e-16, 60));
  EXPECT_NEAR(tiny.to_double(), 9.99999999999999991845121660256944937228e-17, 1e-32);
  EXPECT_THROW(log(HpReal(0, 10)), DomainError);
}

TEST(HpReal, LogOfProductIsSumOfLogs) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> dist(1e-3, 1e3);
  for (int i = 0; i < 100; ++i) {
    const HpReal x = HpReal::from_double(dist(rng), 50);
    const HpReal y = HpReal::from_double(dist(rng), 50);
    const HpReal lhs = log(x * y);
    const HpReal rhs = log(x) + log(y);
    EXPECT_LT(abs(lhs - rhs).to_double(), 1e-40);
  }
}

TEST(HpReal, ToStringUsesScientificNotation) {
  EXPECT_EQ(HpReal::from_double(-0.125, 5).to_string(3), "-1.25e-1");
  EXPECT_EQ(HpReal::from_int(42, 2).to_string(5), "4.200e1");
  EXPECT_EQ(HpReal(0, 4).to_string(), "0");
}
