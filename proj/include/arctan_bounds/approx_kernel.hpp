#pragma once

#include <vector>

#include "arctan_bounds/bound_catalog.hpp"
#include "arctan_bounds/reference_oracle.hpp"

namespace arctan_bounds {

/// Parameters of the two-branch kernel: the family enclosure with a_low is
/// used for |x| < crossover, the one with a_high above it.
struct KernelSpec {
  double a_low = 0.5;
  double a_high = kTwoOverPi;
  double crossover = 1.0;

  /// Requires a_low in [0, 1/2], a_high >= 2/pi, crossover > 0.
  void validate() const;
};

struct CertifiedValue {
  double value = 0.0;
  double error_bound = 0.0;  // half-width of the enclosure plus 8 eps |value|
  double x = 0.0;
};

/// Midpoint of the family enclosure at x; one square root and one division.
/// Odd in x; throws DomainError for non-finite input.
CertifiedValue approx(const KernelSpec& spec, double x);

/// Half-width of the family enclosure for parameter a at x > 0:
/// |pi/2 - (1+a)| / 2 * x / (a + sqrt(1+x^2)).
double enclosure_half_width(double a, double x);

/// Abscissa where the a_low and a_high half-widths cross on the grid,
/// refined by bisection. Throws NoCrossingError when one of them is
/// narrower at every grid point.
double tune_crossover(double a_low, double a_high, const GridSpec& grid);

/// tune_crossover, falling back to the grid end that hands the whole grid to
/// the narrower parameter when there is no crossing.
double choose_crossover(double a_low, double a_high, const GridSpec& grid);

/// a_low = 1/2, a_high = 2/pi, crossover from choose_crossover on the
/// default grid (computed once).
const KernelSpec& default_kernel_spec();

struct ProfileRow {
  double x = 0.0;
  double value = 0.0;
  double certified = 0.0;
  double actual = 0.0;
  double ratio = 0.0;  // certified / actual; +inf when actual == 0
  bool certified_ok = true;
};

struct ErrorProfile {
  KernelSpec spec;
  GridSpec grid;
  std::vector<ProfileRow> rows;
  double max_actual = 0.0;
  double max_certified = 0.0;
  int failures = 0;

  bool certified() const noexcept { return failures == 0; }
};

/// True when |value - oracle| <= error_bound, with a slack of two ulps of
/// the returned value.
bool is_certified(const CertifiedValue& cv, const HpReal& oracle, double* actual = nullptr);

ErrorProfile error_profile(const KernelSpec& spec, const GridSpec& grid,
                           Precision precision = {});

}  // namespace arctan_bounds
