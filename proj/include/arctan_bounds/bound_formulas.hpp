#pragma once

#include <cmath>
#include <numbers>

#include "arctan_bounds/bound_catalog.hpp"

namespace arctan_bounds {

// Scalar hooks for double; HpReal provides the same set by ADL.
inline double lift(double, double value) { return value; }
inline double pi_like(double) { return std::numbers::pi; }
inline double unit_hypot(double x) { return std::hypot(1.0, x); }
inline double log1p_like(double x) { return std::log1p(x); }

namespace formulas {

/// Closed form of bound `id` at x, written once for every scalar type the
/// library evaluates in (double for the public API, HpReal for verification).
/// The validity of (id, a) is the caller's responsibility.
template <class Real>
Real evaluate(BoundId id, double a, const Real& x) {
  const Real one = lift(x, 1.0);
  const Real two = lift(x, 2.0);
  const Real pi = pi_like(x);
  const Real half_pi = pi / two;
  const Real root = unit_hypot(x);
  const Real param = lift(x, a);

  switch (id) {
    case BoundId::ShaferLower:
      return lift(x, 3.0) * x / (one + two * root);
    case BoundId::HalfAngleUpper:
      return two * x / (one + root);
    case BoundId::RationalLower:
      return x / (one + x * x);
    case BoundId::IdentityUpper:
      return x;
    case BoundId::CubicLower:
      return x - x * x * x / lift(x, 3.0);
    case BoundId::LogLower:
      return log1p_like(x * x) / (two * x);
    case BoundId::LogUpper:
      return (one + x) * log1p_like(x);
    case BoundId::FamilyLower:
    case BoundId::ReversedUpper:
      return (one + param) * x / (param + root);
    case BoundId::FamilyUpper:
    case BoundId::ReversedLower:
      return half_pi * x / (param + root);
    case BoundId::MinimumLower:
      return lift(x, 4.0) * param * (one - param * param) * x / (param + root);
    case BoundId::MinimumUpper: {
      const Real one_plus_a = one + param;
      const Real coefficient = one_plus_a > half_pi ? one_plus_a : half_pi;
      return coefficient * x / (param + root);
    }
    case BoundId::TwoOverPiLowerErrata:
      return pi * pi * x / (two + two * pi * root);
    case BoundId::TwoOverPiLower:
      return pi * pi * x / (lift(x, 4.0) + two * pi * root);
    case BoundId::TwoOverPiUpper:
      return (pi + two) * x / (two + pi * root);
  }
  return x;
}

}  // namespace formulas
}  // namespace arctan_bounds
