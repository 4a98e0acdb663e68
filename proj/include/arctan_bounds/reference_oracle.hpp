#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arctan_bounds/bound_catalog.hpp"
#include "arctan_bounds/hp_real.hpp"

namespace arctan_bounds {

/// Target number of correct decimal digits (absolute) of the oracle.
struct Precision {
  int decimal_digits = 30;

  /// Throws PrecisionError below 20 digits or above the series budget.
  void validate() const;
};

/// Default digits, overridable through ARCTAN_BOUNDS_DIGITS.
Precision default_precision();

enum class Spacing { Log, Linear };

struct GridSpec {
  double x_min = 1e-8;
  double x_max = 1e8;
  int points = 10000;
  Spacing spacing = Spacing::Log;

  void validate() const;
  /// Abscissae in increasing order; endpoints are hit exactly.
  std::vector<double> abscissae() const;
};

/// arctan x with absolute error below 10^-digits (and, for |x| < 1, relative
/// error below 10^-digits as well: working precision grows with -log10|x|).
///
/// |x| > 1 is reflected through pi/2 - arctan(1/x); the argument is halved
/// with arctan t = 2 arctan(t / (1 + sqrt(1+t^2))) until t < 1/8; the
/// alternating Taylor series is summed until the first omitted term drops
/// below one unit of the working scale.
HpReal oracle_arctan(double x, Precision precision = {});

/// Fractional digits the oracle works at for argument x.
int oracle_scale(double x, Precision precision);

/// Bound value evaluated in fixed point at the given scale.
HpReal eval_bound_extended(BoundId id, std::optional<ShaferParam> a, double x, int scale);

/// Oracle values on a grid, computed once and shared by several sweeps.
class OracleTable {
 public:
  OracleTable(const GridSpec& grid, Precision precision);

  const GridSpec& grid() const noexcept { return grid_; }
  Precision precision() const noexcept { return precision_; }
  const std::vector<double>& xs() const noexcept { return xs_; }
  const std::vector<HpReal>& values() const noexcept { return values_; }

 private:
  GridSpec grid_;
  Precision precision_;
  std::vector<double> xs_;
  std::vector<HpReal> values_;
};

struct SweepPoint {
  double x = 0.0;
  double bound = 0.0;   // bound value (extended evaluation, rounded)
  double oracle = 0.0;  // arctan x (rounded)
  double margin = 0.0;  // signed; absolute for x < 1, relative for x >= 1
};

struct SweepReport {
  BoundId bound_id = BoundId::ShaferLower;
  std::optional<double> a;
  Side side = Side::Lower;
  GridSpec grid;
  std::vector<SweepPoint> points;
  std::vector<SweepPoint> violations;
  double min_margin = 0.0;
  double min_margin_x = 0.0;
  /// Points where the plain double evaluation of the bound would fail
  /// containment although the exact bound holds. Informational only.
  int rounding_violations = 0;

  bool holds() const noexcept { return violations.empty(); }
  /// Associative, order-independent union of two partial sweeps of the
  /// same bound (chunks of one grid).
  void merge(const SweepReport& other);
};

/// Containment check of a bound against the oracle at every grid point.
/// A lower bound is violated where bound >= arctan x, an upper bound where
/// bound <= arctan x. `side` must match the bound's side.
SweepReport sweep(BoundId id, std::optional<ShaferParam> a, const GridSpec& grid, Side side,
                  Precision precision = {});
SweepReport sweep(BoundId id, std::optional<ShaferParam> a, const OracleTable& table);

enum class Expectation { Holds, KnownErrata };

struct SuiteCase {
  BoundId id;
  std::optional<double> a;
  Expectation expectation = Expectation::Holds;
};

/// Every bound of the catalog with the parameters it is claimed for, plus
/// the errata bound expected to fail.
std::vector<SuiteCase> standard_suite();

struct SuiteResult {
  SuiteCase suite_case;
  SweepReport report;
  /// "pass", "fail", "known-errata" or "errata-not-reproduced".
  std::string status;
};

struct SuiteReport {
  GridSpec grid;
  Precision precision;
  std::vector<SuiteResult> results;

  /// False iff some bound expected to hold has a violation.
  bool passed() const noexcept;
};

SuiteReport run_suite(const std::vector<SuiteCase>& cases, const GridSpec& grid,
                      Precision precision = {});

enum class Tighter { A, B, Equal };

std::string_view tighter_name(Tighter t) noexcept;

struct DominanceRegion {
  Tighter tighter = Tighter::Equal;
  double x_begin = 0.0;
  double x_end = 0.0;
  int points = 0;
};

struct DominanceOptions {
  double tie_relative = 1e-15;
  Precision precision{};
};

struct DominanceReport {
  BoundId id_a;
  std::optional<double> a_a;
  BoundId id_b;
  std::optional<double> a_b;
  Side side = Side::Lower;
  GridSpec grid;
  double tie_relative = 0.0;
  std::vector<double> xs;
  std::vector<Tighter> tighter;
  std::vector<DominanceRegion> regions;
  /// Abscissae where A and B swap roles, refined by bisection.
  std::vector<double> crossovers;
};

/// Compares two bounds on the same side pointwise in fixed point.
DominanceReport dominance_report(BoundId id_a, std::optional<ShaferParam> a_a, BoundId id_b,
                                 std::optional<ShaferParam> a_b, const GridSpec& grid,
                                 const DominanceOptions& options = {});

}  // namespace arctan_bounds
