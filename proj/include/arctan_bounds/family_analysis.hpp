#pragma once

#include "arctan_bounds/bound_catalog.hpp"

namespace arctan_bounds {

// f_a(x) = (a + sqrt(1+x^2)) arctan(x) / x and the quantities that govern
// its monotonicity. All functions take x > 0 and throw DomainError otherwise.

double f(ShaferParam a, double x);
/// Continuous extension of f_a at 0.
inline double f_limit_zero(ShaferParam a) { return 1.0 + a.value(); }
inline double f_limit_infinity() { return kHalfPi; }

/// f'_a(x) = (1 + a u) / (x^2 u) * g_a(x), u = sqrt(1+x^2).
double f_derivative(ShaferParam a, double x);

/// g_a(x) = (x + x^3 + a x u) / ((1+x^2)(1 + a u)) - arctan x.
/// Evaluated as x (a+u) / (u (1+au)) - arctan x. Throws SingularityError
/// when 1 + a u vanishes (only possible for -1 < a < 0).
double g(ShaferParam a, double x);
inline double g_limit_infinity(ShaferParam a) { return 1.0 / a.value() - kHalfPi; }

/// g'_a(x) = -x^2 h_a(x) / (u^3 (1 + a u)^2).
double g_derivative(ShaferParam a, double x);

/// h_a(x) = 2 a^2 u + a - u; zero exactly on the curves a1(x), a2(x).
double h(ShaferParam a, double x);

/// Roots in a of h_a(x): a1 = -(1 + sqrt(9+8x^2)) / (4u), a2 = (-1 + sqrt(9+8x^2)) / (4u).
double a1(double x);
double a2(double x);
double a1_derivative(double x);
double a2_derivative(double x);

/// F(x) = arctan x - 3x / (1 + 2 sqrt(1+x^2)); positive for x > 0.
double shafer_gap(double x);
/// F'(x) = (u - 1)^2 / ((1+x^2)(1+2u)^2). Defined for every finite x; zero at 0.
double grinstein_derivative(double x);

struct SolverConfig {
  double tolerance = 1e-12;  // bound on |g_a(x0)|
  int max_iterations = 200;
  double bracket_growth = 2.0;

  void validate() const;
};

struct MinimumResult {
  double x0 = 0.0;
  double value = 0.0;     // f_a(x0)
  double u = 0.0;         // sqrt(1 + x0^2)
  double residual = 0.0;  // |g_a(x0)|
  int iterations = 0;
};

/// Unique interior minimum of f_a for 1/2 < a < 2/pi.
///
/// Brackets the sign change of g_a geometrically from x = 1 (growing until
/// g > 0, shrinking until g < 0), then bisects until |g_a| <= tolerance.
/// Throws ParamError outside (1/2, 2/pi), BracketError if no sign change is
/// found and ConvergenceError if the bisection budget runs out.
MinimumResult find_minimum(ShaferParam a, const SolverConfig& config = {});

/// Minimum value in terms of u = sqrt(1 + x0^2): (a+u)^2 / (u (1 + a u)).
double min_value_closed_form(ShaferParam a, double u);
/// Infimum of the closed form over u > 1, i.e. 4a(1 - a^2).
double min_value_lower_bound(ShaferParam a);

}  // namespace arctan_bounds
