#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "arctan_bounds/errors.hpp"
#include "arctan_bounds/family_analysis.hpp"

using namespace arctan_bounds;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

double central_difference(auto&& fn, double x) {
  const double step = 1e-5 * std::max(1.0, x);
  return (fn(x + step) - fn(x - step)) / (2.0 * step);
}

// g_a exactly as printed, (x + x^3 + a x u) / ((1+x^2)(1 + a u)) - arctan x.
double g_printed(double a, double x) {
  const double u = std::sqrt(1.0 + x * x);
  return (x + x * x * x + a * x * u) / ((1.0 + x * x) * (1.0 + a * u)) - std::atan(x);
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (n - 1));
  }
  return xs;
}

struct Orderings {
  bool increasing_seen = false;
  bool decreasing_seen = false;
  bool always_increasing = true;
  bool always_decreasing = true;
};

// Random pairs x1 < x2 log-uniform on [1e-2, 1e4], at least 1% apart so the
// difference of f is resolved in double precision.
Orderings sample_orderings(double a, int pairs, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> log_x(-2.0, 4.0);
  Orderings o;
  const ShaferParam p(a);
  for (int i = 0; i < pairs; ++i) {
    double x1 = std::pow(10.0, log_x(rng));
    double x2 = std::pow(10.0, log_x(rng));
    if (x1 > x2) std::swap(x1, x2);
    if (x2 < 1.01 * x1) continue;
    const double f1 = f(p, x1);
    const double f2 = f(p, x2);
    if (f1 < f2) {
      o.increasing_seen = true;
      o.always_decreasing = false;
    } else if (f1 > f2) {
      o.decreasing_seen = true;
      o.always_increasing = false;
    } else {
      o.always_increasing = false;
      o.always_decreasing = false;
    }
  }
  return o;
}

}  // namespace

TEST(ShaferFamily, ValueAtOne) {
  EXPECT_NEAR(f(ShaferParam(0.0), 1.0), 1.1107207345395915618, 4e-16);
}

TEST(ShaferFamily, EndpointLimits) {
  for (double a : {-3.0, 0.0, 0.3, 0.6, 1.0, 2.0}) {
    const ShaferParam p(a);
    EXPECT_NEAR(f(p, 1e-6), f_limit_zero(p), 1e-10) << a;
    EXPECT_NEAR(f(p, 1e9), f_limit_infinity(), 1e-8) << a;
  }
  EXPECT_THROW(f(ShaferParam(0.3), 0.0), DomainError);
  EXPECT_THROW(f(ShaferParam(0.3), -1.0), DomainError);
}

TEST(ShaferFamily, MonotonicityMatchesClassification) {
  for (double a : {-3.0, -1.0, 0.0, 0.3, 0.5}) {
    ASSERT_EQ(classify_regime(ShaferParam(a)), Regime::Increasing);
    const Orderings o = sample_orderings(a, 10000, 101);
    EXPECT_TRUE(o.always_increasing) << "a=" << a;
  }
  for (double a : {kTwoOverPi, 0.8, 1.5}) {
    ASSERT_EQ(classify_regime(ShaferParam(a)), Regime::Decreasing);
    const Orderings o = sample_orderings(a, 10000, 202);
    EXPECT_TRUE(o.always_decreasing) << "a=" << a;
  }
  for (double a : {0.55, 0.6, 0.63}) {
    ASSERT_EQ(classify_regime(ShaferParam(a)), Regime::InteriorMinimum);
    const Orderings o = sample_orderings(a, 10000, 303);
    EXPECT_TRUE(o.increasing_seen && o.decreasing_seen) << "a=" << a;
  }
}

TEST(GFunction, StableFormMatchesPrintedForm) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> log_x(-2.0, 3.0);
  std::uniform_real_distribution<double> as(-3.0, 3.0);
  for (int i = 0; i < 2000; ++i) {
    const double x = std::pow(10.0, log_x(rng));
    const double a = as(rng);
    const double u = std::sqrt(1 + x * x);
    if (std::fabs(1 + a * u) < 1e-3) continue;
    const double conditioning = (1 + std::fabs(a * u)) / std::fabs(1 + a * u);
    const double expected = g_printed(a, x);
    EXPECT_NEAR(g(ShaferParam(a), x), expected, 1e-13 * conditioning * (1 + std::fabs(expected)));
  }
}

TEST(GFunction, Limits) {
  EXPECT_NEAR(g(ShaferParam(2.0), 1e8), 0.5 - kPi / 2, 1e-7);
  for (double a : {0.25, 0.6, 1.0, 2.0}) {
    const ShaferParam p(a);
    EXPECT_LT(std::fabs(g(p, 1e-8)), 1e-7);
    EXPECT_NEAR(g(p, 1e8), g_limit_infinity(p), 1e-6);  // O(1/x) approach
  }
}

TEST(GFunction, NegativeOnInitialBranchOfInteriorMinimumRegime) {
  EXPECT_NEAR(g(ShaferParam(0.6), 0.5), -0.0037967714098855533109, 1e-15);
}

TEST(GFunction, SingularityIsSignalled) {
  // 1 + a sqrt(1+x^2) = 0 at a = -1/2, x = sqrt(3).
  EXPECT_THROW(g(ShaferParam(-0.5), std::sqrt(3.0)), SingularityError);
  EXPECT_THROW(f_derivative(ShaferParam(-0.5), std::sqrt(3.0)), SingularityError);
  EXPECT_NO_THROW(g(ShaferParam(-0.5), 1.0));
}

TEST(GFunction, DerivativeSignsMatchFiniteDifferences) {
  for (double a : {-2.0, 0.3, 0.55, 0.6, 0.8, 2.0}) {
    const ShaferParam p(a);
    for (double x : log_grid(1e-2, 1e3, 200)) {
      const double gx = g(p, x);
      if (std::fabs(gx) < 1e-10) continue;
      const double fd = central_difference([&](double t) { return f(p, t); }, x);
      const double predicted = gx * (1.0 + a * std::sqrt(1 + x * x));
      if (std::fabs(fd) < 1e-9) continue;  // below finite-difference noise
      EXPECT_EQ(fd > 0, predicted > 0) << "a=" << a << " x=" << x;
    }
  }
}

TEST(GFunction, DerivativeFormulasMatchFiniteDifferences) {
  for (double a : {0.3, 0.6, 1.5}) {
    const ShaferParam p(a);
    for (double x : log_grid(1e-1, 1e2, 50)) {
      const double df = central_difference([&](double t) { return f(p, t); }, x);
      EXPECT_NEAR(f_derivative(p, x), df, 1e-7 * std::max(1.0, std::fabs(df)));
      const double dg = central_difference([&](double t) { return g(p, t); }, x);
      EXPECT_NEAR(g_derivative(p, x), dg, 1e-7 * std::max(1.0, std::fabs(dg)));
    }
  }
}

TEST(HFunction, Examples) {
  EXPECT_NEAR(h(ShaferParam(1.0), 1.0), 2.4142135623730950488, 4e-16);
  EXPECT_NEAR(h(ShaferParam(0.0), 1.0), -kSqrt2, 4e-16);
  EXPECT_THROW(h(ShaferParam(0.0), 0.0), DomainError);
}

TEST(HFunction, VanishesOnZeroCurves) {
  for (double x : log_grid(1e-3, 1e3, 1000)) {
    EXPECT_LE(std::fabs(h(ShaferParam(a2(x)), x)), 1e-12) << x;
    EXPECT_LE(std::fabs(h(ShaferParam(a1(x)), x)), 1e-12) << x;
  }
}

TEST(HFunction, FactorsThroughZeroCurves) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> log_x(-4.0, 4.0);
  std::uniform_real_distribution<double> as(-3.0, 3.0);
  for (int i = 0; i < 5000; ++i) {
    const double x = std::pow(10.0, log_x(rng));
    const double a = as(rng);
    const double u = std::sqrt(1 + x * x);
    const double factored = 2 * u * (a - a1(x)) * (a - a2(x));
    const double scale = 2 * a * a * u + std::fabs(a) + u;
    EXPECT_NEAR(h(ShaferParam(a), x), factored, 1e-12 * scale);
  }
}

TEST(ZeroCurves, ValueAtOne) {
  EXPECT_NEAR(a2(1.0), 0.55209229155902567776, 4e-16);
}

TEST(ZeroCurves, LimitsAndRanges) {
  EXPECT_NEAR(a1(1e-8), -1.0, 1e-12);
  EXPECT_NEAR(a2(1e-8), 0.5, 1e-12);
  EXPECT_NEAR(a1(1e8), -kSqrt2 / 2, 1e-7);
  EXPECT_NEAR(a2(1e8), kSqrt2 / 2, 1e-7);
  for (double x : log_grid(1e-3, 1e3, 1000)) {
    EXPECT_GT(a1(x), -1.0);
    EXPECT_LT(a1(x), -kSqrt2 / 2);
    EXPECT_GT(a2(x), 0.5);
    EXPECT_LT(a2(x), kSqrt2 / 2);
  }
  EXPECT_THROW(a1(0.0), DomainError);
  EXPECT_THROW(a2(-1.0), DomainError);
}

TEST(ZeroCurves, StrictlyIncreasing) {
  const auto xs = log_grid(1e-3, 1e3, 1000);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    EXPECT_GT(a1(xs[i]), a1(xs[i - 1])) << xs[i];
    EXPECT_GT(a2(xs[i]), a2(xs[i - 1])) << xs[i];
  }
}

TEST(ZeroCurves, DerivativesMatchFiniteDifferences) {
  for (double x : log_grid(1e-2, 1e2, 100)) {
    EXPECT_NEAR(a1_derivative(x), central_difference([](double t) { return a1(t); }, x), 1e-9);
    EXPECT_NEAR(a2_derivative(x), central_difference([](double t) { return a2(t); }, x), 1e-9);
    EXPECT_GT(a1_derivative(x), 0.0);
    EXPECT_GT(a2_derivative(x), 0.0);
  }
}

TEST(Grinstein, Examples) {
  EXPECT_EQ(grinstein_derivative(0.0), 0.0);
  EXPECT_NEAR(grinstein_derivative(1.0), 0.0058529911102770258770, 1e-17);
}

TEST(Grinstein, MatchesFiniteDifferenceOfShaferGap) {
  for (double x : log_grid(1e-3, 1e3, 1000)) {
    const double fd = central_difference([](double t) { return shafer_gap(t); }, x);
    EXPECT_NEAR(grinstein_derivative(x), fd, 1e-8) << x;
    EXPECT_GT(grinstein_derivative(x), 0.0);
  }
}

TEST(FindMinimum, CertifiesTheMinimum) {
  for (double a : {0.51, 0.55, 0.6, 0.63}) {
    const ShaferParam p(a);
    const MinimumResult m = find_minimum(p);
    EXPECT_LE(m.residual, 1e-12);
    EXPECT_NEAR(m.u, std::sqrt(1 + m.x0 * m.x0), 1e-15 * m.u);
    EXPECT_NEAR(m.value, f(p, m.x0), 0.0);
    EXPECT_NEAR(m.value, min_value_closed_form(p, m.u), 1e-11);
    EXPECT_GT(m.value, min_value_lower_bound(p));
    EXPECT_LT(m.value, std::min(1 + a, kPi / 2));

    // fixed-point form of g = 0
    const double u = m.u;
    const double rhs = (m.x0 + m.x0 * m.x0 * m.x0 + a * m.x0 * u) / ((1 + m.x0 * m.x0) * (1 + a * u));
    EXPECT_NEAR(std::atan(m.x0), rhs, 1e-11);

    const double delta = 1e-3 * m.x0;
    EXPECT_GT(f(p, m.x0 + delta), m.value);
    EXPECT_GT(f(p, m.x0 - delta), m.value);
  }
}

TEST(FindMinimum, Examples) {
  const MinimumResult near_half = find_minimum(ShaferParam(0.51));
  EXPECT_GT(near_half.value, 4 * 0.51 * (1 - 0.51 * 0.51));
  const MinimumResult mid = find_minimum(ShaferParam(0.6));
  EXPECT_GT(mid.value, 1.536);
  EXPECT_LT(mid.value, kPi / 2);
  // Reference minimum points (mpmath bisection): 0.4771767563717572, 4.6654019660788295.
  EXPECT_NEAR(near_half.x0, 0.4771767563717572, 1e-9);
  EXPECT_NEAR(mid.x0, 4.6654019660788295, 1e-8);
}

TEST(FindMinimum, Errors) {
  EXPECT_THROW(find_minimum(ShaferParam(0.4)), ParamError);
  EXPECT_THROW(find_minimum(ShaferParam(0.5)), ParamError);
  EXPECT_THROW(find_minimum(ShaferParam(kTwoOverPi)), ParamError);
  EXPECT_THROW(find_minimum(ShaferParam(-0.5)), ParamError);
  EXPECT_THROW(find_minimum(ShaferParam(0.6), SolverConfig{0.0, 200, 2.0}), ParamError);
  EXPECT_THROW(find_minimum(ShaferParam(0.6), SolverConfig{1e-12, 0, 2.0}), ParamError);
  EXPECT_THROW(find_minimum(ShaferParam(0.6), SolverConfig{1e-12, 200, 1.0}), ParamError);
  EXPECT_THROW(find_minimum(ShaferParam(0.6), SolverConfig{1e-300, 5, 2.0}), ConvergenceError);
  // The sign change of g at a = 0.63 sits near x = 28; four doublings from 1 stop at 16.
  EXPECT_THROW(find_minimum(ShaferParam(0.63), SolverConfig{1e-12, 4, 2.0}), BracketError);
}

TEST(MinimumClosedForm, Examples) {
  EXPECT_NEAR(min_value_closed_form(ShaferParam(0.6), 2.0), 6.76 / 4.4, 1e-15);
  EXPECT_THROW(min_value_closed_form(ShaferParam(0.6), 1.0), DomainError);
  EXPECT_THROW(min_value_closed_form(ShaferParam(0.6), 0.5), DomainError);
  EXPECT_THROW(min_value_closed_form(ShaferParam(0.3), 2.0), ParamError);
}

TEST(MinimumClosedForm, InfimumIsFourATimesOneMinusASquared) {
  for (double a : {0.51, 0.55, 0.6, 0.63}) {
    const ShaferParam p(a);
    const double bound = min_value_lower_bound(p);
    double smallest = INFINITY;
    for (int i = 1; i <= 200000; ++i) {
      const double u = 1.0 + i * (1e3 - 1.0) / 200000;
      smallest = std::min(smallest, min_value_closed_form(p, u));
    }
    EXPECT_GE(smallest, bound - 1e-15);
    EXPECT_NEAR(smallest, bound, 1e-6);
    // attained at u* = a / (1 - 2a^2)
    EXPECT_NEAR(min_value_closed_form(p, a / (1 - 2 * a * a)), bound, 1e-15);
  }
}
