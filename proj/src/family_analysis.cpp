#include "arctan_bounds/family_analysis.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "arctan_bounds/errors.hpp"

namespace arctan_bounds {

namespace {

void check_x(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("expected finite x > 0, got x = " + std::to_string(x));
  }
}

double unit_root(double x) { return std::hypot(1.0, x); }

// 1 + a u, refusing values indistinguishable from zero.
double singular_factor(double a, double u) {
  const double factor = 1.0 + a * u;
  if (std::fabs(factor) <= 8.0 * std::numeric_limits<double>::epsilon() * std::fabs(a * u)) {
    throw SingularityError("1 + a*sqrt(1+x^2) vanishes for a = " + std::to_string(a));
  }
  return factor;
}

void check_minimum_regime(double a) {
  if (!(a > 0.5 && a < kTwoOverPi)) {
    throw ParamError("f_a has an interior minimum only for 1/2 < a < 2/pi, got a = " +
                     std::to_string(a));
  }
}

}  // namespace

double f(ShaferParam param, double x) {
  check_x(x);
  return (param.value() + unit_root(x)) * std::atan(x) / x;
}

double f_derivative(ShaferParam param, double x) {
  check_x(x);
  const double u = unit_root(x);
  return singular_factor(param.value(), u) / (x * x * u) * g(param, x);
}

double g(ShaferParam param, double x) {
  check_x(x);
  const double a = param.value();
  const double u = unit_root(x);
  // x + x^3 + a x u = x u (u + a), so the printed quotient reduces without overflow.
  return x * (a + u) / (u * singular_factor(a, u)) - std::atan(x);
}

double g_derivative(ShaferParam param, double x) {
  check_x(x);
  const double a = param.value();
  const double u = unit_root(x);
  const double factor = singular_factor(a, u);
  return -(x / u) * (x / u) * h(param, x) / (u * factor * factor);
}

double h(ShaferParam param, double x) {
  check_x(x);
  const double a = param.value();
  const double u = unit_root(x);
  return 2.0 * a * a * u + a - u;
}

double a1(double x) {
  check_x(x);
  const double s = std::hypot(3.0, std::numbers::sqrt2 * 2.0 * x);
  return -(1.0 + s) / (4.0 * unit_root(x));
}

double a2(double x) {
  check_x(x);
  const double s = std::hypot(3.0, std::numbers::sqrt2 * 2.0 * x);
  return (s - 1.0) / (4.0 * unit_root(x));
}

double a1_derivative(double x) {
  check_x(x);
  const double s = std::hypot(3.0, std::numbers::sqrt2 * 2.0 * x);
  const double u = unit_root(x);
  return x * (1.0 + s) / (4.0 * u * u * u * s);
}

double a2_derivative(double x) {
  check_x(x);
  const double s = std::hypot(3.0, std::numbers::sqrt2 * 2.0 * x);
  const double u = unit_root(x);
  return x * (s - 1.0) / (4.0 * u * u * u * s);
}

double shafer_gap(double x) {
  if (!std::isfinite(x)) throw DomainError("expected finite x");
  return std::atan(x) - 3.0 * x / (1.0 + 2.0 * unit_root(x));
}

double grinstein_derivative(double x) {
  if (!std::isfinite(x)) throw DomainError("expected finite x");
  const double u = unit_root(x);
  // u - 1 = x^2 / (u + 1) avoids cancellation near 0.
  const double u_minus_one = x * x / (u + 1.0);
  const double denom = u * (1.0 + 2.0 * u);
  return (u_minus_one / denom) * (u_minus_one / denom);
}

void SolverConfig::validate() const {
  if (!(tolerance > 0.0)) throw ParamError("solver tolerance must be positive");
  if (max_iterations < 1) throw ParamError("solver max_iterations must be >= 1");
  if (!(bracket_growth > 1.0)) throw ParamError("solver bracket_growth must exceed 1");
}

MinimumResult find_minimum(ShaferParam param, const SolverConfig& config) {
  config.validate();
  const double a = param.value();
  check_minimum_regime(a);

  // g < 0 on (0, x0) and g > 0 on (x0, inf).
  double lo = 1.0;
  double hi = 1.0;
  double g_start = g(param, 1.0);
  int steps = 0;
  if (g_start > 0.0) {
    while (g(param, lo) >= 0.0) {
      if (++steps > config.max_iterations) {
        throw BracketError("no point with g_a < 0 found below x = 1");
      }
      hi = lo;
      lo /= config.bracket_growth;
    }
  } else {
    while (g(param, hi) <= 0.0) {
      if (++steps > config.max_iterations) {
        throw BracketError("no point with g_a > 0 found above x = 1");
      }
      lo = hi;
      hi *= config.bracket_growth;
    }
  }

  for (int iteration = 1; iteration <= config.max_iterations; ++iteration) {
    const double mid = lo + (hi - lo) / 2.0;
    const double g_mid = g(param, mid);
    if (std::fabs(g_mid) <= config.tolerance) {
      const double u = unit_root(mid);
      return {mid, f(param, mid), u, std::fabs(g_mid), iteration};
    }
    if (mid <= lo || mid >= hi) break;
    (g_mid < 0.0 ? lo : hi) = mid;
  }
  throw ConvergenceError("bisection did not reach |g_a| <= " + std::to_string(config.tolerance) +
                         " for a = " + std::to_string(a));
}

double min_value_closed_form(ShaferParam param, double u) {
  const double a = param.value();
  check_minimum_regime(a);
  if (!(u > 1.0) || !std::isfinite(u)) {
    throw DomainError("u = sqrt(1 + x0^2) must exceed 1, got " + std::to_string(u));
  }
  return (a + u) * (a + u) / (u * (1.0 + a * u));
}

double min_value_lower_bound(ShaferParam param) {
  const double a = param.value();
  return 4.0 * a * (1.0 - a * a);
}

}  // namespace arctan_bounds
