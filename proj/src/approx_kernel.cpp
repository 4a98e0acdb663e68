#include "arctan_bounds/approx_kernel.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "arctan_bounds/errors.hpp"
#include "chunked.hpp"

namespace arctan_bounds {

namespace {

// Above this |x|, 1 + x^2 rounds to x^2 and x^2 would overflow soon after.
constexpr double kLargeArgument = 1e150;

double width_coefficient(double a) { return std::fabs(kHalfPi - (1.0 + a)) / 2.0; }

void check_params(double a_low, double a_high) {
  if (!(a_low >= 0.0 && a_low <= 0.5)) {
    throw ParamError("a_low must lie in [0, 1/2], got " + std::to_string(a_low));
  }
  if (!(a_high >= kTwoOverPi) || !std::isfinite(a_high)) {
    throw ParamError("a_high must be finite and >= 2/pi, got " + std::to_string(a_high));
  }
}

}  // namespace

void KernelSpec::validate() const {
  check_params(a_low, a_high);
  if (!(crossover > 0.0)) throw ParamError("kernel crossover must be positive");
}

CertifiedValue approx(const KernelSpec& spec, double x) {
  if (!std::isfinite(x)) throw DomainError("approx needs a finite argument");
  if (x == 0.0) return {0.0, 0.0, x};
  const double ax = std::fabs(x);
  const double a = ax < spec.crossover ? spec.a_low : spec.a_high;
  const double root = ax < kLargeArgument ? std::sqrt(std::fma(ax, ax, 1.0)) : ax;
  const double t = ax / (a + root);
  const double mid = (kHalfPi + (1.0 + a)) / 2.0 * t;
  // Rounding of the midpoint and of the width coefficient, a few ulps of mid.
  const double rounding = 8.0 * std::numeric_limits<double>::epsilon() * mid;
  const double half = width_coefficient(a) * t + rounding;
  return {x < 0.0 ? -mid : mid, half, x};
}

double enclosure_half_width(double a, double x) {
  return width_coefficient(a) * x / (a + std::hypot(1.0, x));
}

double tune_crossover(double a_low, double a_high, const GridSpec& grid) {
  check_params(a_low, a_high);
  const auto difference = [&](double x) {
    return enclosure_half_width(a_low, x) - enclosure_half_width(a_high, x);
  };
  const std::vector<double> xs = grid.abscissae();
  for (std::size_t i = 1; i < xs.size(); ++i) {
    double lo = xs[i - 1];
    double hi = xs[i];
    const double d_lo = difference(lo);
    const double d_hi = difference(hi);
    if (d_lo == 0.0) return lo;
    if ((d_lo < 0.0) == (d_hi < 0.0) && d_hi != 0.0) continue;
    for (int it = 0; it < 200; ++it) {
      const double mid = lo + (hi - lo) / 2.0;
      if (mid <= lo || mid >= hi) break;
      const double d_mid = difference(mid);
      if (d_mid == 0.0) return mid;
      ((d_mid < 0.0) == (d_lo < 0.0) ? lo : hi) = mid;
    }
    return lo + (hi - lo) / 2.0;
  }
  throw NoCrossingError("half-widths for a = " + std::to_string(a_low) + " and a = " +
                        std::to_string(a_high) + " do not cross on the grid");
}

double choose_crossover(double a_low, double a_high, const GridSpec& grid) {
  try {
    return tune_crossover(a_low, a_high, grid);
  } catch (const NoCrossingError&) {
    const double x = grid.x_min;
    return enclosure_half_width(a_high, x) <= enclosure_half_width(a_low, x) ? grid.x_min
                                                                             : grid.x_max;
  }
}

const KernelSpec& default_kernel_spec() {
  static const KernelSpec spec = [] {
    KernelSpec s;
    s.crossover = choose_crossover(s.a_low, s.a_high, GridSpec{});
    return s;
  }();
  return spec;
}

bool is_certified(const CertifiedValue& cv, const HpReal& oracle, double* actual) {
  const HpReal value = HpReal::from_double(cv.value, oracle.scale());
  const HpReal error = abs(value - oracle);
  const double slack = 2.0 * (std::nextafter(std::fabs(cv.value), std::numeric_limits<double>::infinity()) -
                              std::fabs(cv.value));
  const HpReal allowed = HpReal::from_double(cv.error_bound, oracle.scale()) +
                         HpReal::from_double(slack, oracle.scale());
  if (actual) *actual = error.to_double();
  return error <= allowed;
}

ErrorProfile error_profile(const KernelSpec& spec, const GridSpec& grid, Precision precision) {
  spec.validate();
  const OracleTable table(grid, precision);
  ErrorProfile profile;
  profile.spec = spec;
  profile.grid = grid;
  profile.rows.resize(table.xs().size());
  detail::for_each_chunk(profile.rows.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const double x = table.xs()[i];
      const CertifiedValue cv = approx(spec, x);
      ProfileRow& row = profile.rows[i];
      row.x = x;
      row.value = cv.value;
      row.certified = cv.error_bound;
      row.certified_ok = is_certified(cv, table.values()[i], &row.actual);
      row.ratio = row.actual > 0.0 ? row.certified / row.actual
                                   : std::numeric_limits<double>::infinity();
    }
  });
  for (const auto& row : profile.rows) {
    profile.max_actual = std::max(profile.max_actual, row.actual);
    profile.max_certified = std::max(profile.max_certified, row.certified);
    if (!row.certified_ok) ++profile.failures;
  }
  return profile;
}

}  // namespace arctan_bounds
