#include "arctan_bounds/reference_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <string>

#include "arctan_bounds/bound_formulas.hpp"
#include "arctan_bounds/errors.hpp"
#include "chunked.hpp"

namespace arctan_bounds {

namespace {

constexpr int kGuardDigits = 10;
constexpr int kMaxDigits = 2000;
constexpr int kMaxExtraDigits = 330;
constexpr unsigned long kSeriesBudget = 100000;

// A sign is trusted once |difference| exceeds this many units of the scale;
// below it the comparison is repeated with more digits.
constexpr long kDecisionUnits = 10000;
constexpr int kRefineDigits = 20;
constexpr int kMaxRefinements = 4;

void check_x(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("expected finite x > 0, got x = " + std::to_string(x));
  }
}

bool decided(const HpReal& difference) {
  return mpz_cmpabs_ui(difference.raw().get_mpz_t(), kDecisionUnits) > 0;
}

}  // namespace

void Precision::validate() const {
  if (decimal_digits < 20) throw PrecisionError("oracle precision must be at least 20 digits");
  if (decimal_digits > kMaxDigits) {
    throw PrecisionError("oracle precision beyond the series budget (" + std::to_string(kMaxDigits) +
                         " digits)");
  }
}

Precision default_precision() {
  Precision p;
  if (const char* env = std::getenv("ARCTAN_BOUNDS_DIGITS")) {
    char* end = nullptr;
    const long digits = std::strtol(env, &end, 10);
    if (end != env && *end == '\0') p.decimal_digits = static_cast<int>(digits);
  }
  return p;
}

void GridSpec::validate() const {
  if (!(x_min > 0.0) || !std::isfinite(x_min) || !std::isfinite(x_max)) {
    throw DomainError("grid bounds must be finite with x_min > 0");
  }
  if (!(x_min < x_max)) throw DomainError("grid requires x_min < x_max");
  if (points < 2) throw DomainError("grid requires at least 2 points");
}

std::vector<double> GridSpec::abscissae() const {
  validate();
  std::vector<double> xs(static_cast<std::size_t>(points));
  const double steps = points - 1;
  if (spacing == Spacing::Log) {
    const double lo = std::log(x_min);
    const double hi = std::log(x_max);
    for (int i = 0; i < points; ++i) xs[i] = std::exp(lo + (hi - lo) * (i / steps));
  } else {
    for (int i = 0; i < points; ++i) xs[i] = x_min + (x_max - x_min) * (i / steps);
  }
  xs.front() = x_min;
  xs.back() = x_max;
  return xs;
}

int oracle_scale(double x, Precision precision) {
  int extra = 0;
  const double ax = std::fabs(x);
  if (ax > 0.0 && ax < 1.0) {
    extra = std::min(kMaxExtraDigits, static_cast<int>(std::ceil(-std::log10(ax))));
  }
  return precision.decimal_digits + kGuardDigits + extra;
}

HpReal oracle_arctan(double x, Precision precision) {
  precision.validate();
  if (!std::isfinite(x)) throw DomainError("oracle_arctan needs a finite argument");
  const int scale = oracle_scale(x, precision);
  if (x == 0.0) return HpReal(0, scale);

  const double ax = std::fabs(x);
  const bool reflect = ax > 1.0;
  const HpReal one = HpReal::from_int(1, scale);
  HpReal t = HpReal::from_double(ax, scale);
  if (reflect) t = one / t;

  const HpReal eighth = HpReal::from_int(1, scale).divided_by(8);
  int halvings = 0;
  while (t >= eighth) {
    t = t / (one + sqrt(one + t * t));
    ++halvings;
  }

  // Alternating series with decreasing terms: the tail is bounded by the
  // first omitted term, which is below one unit when the loop stops.
  const HpReal t2 = t * t;
  HpReal power = t;
  HpReal sum = t;
  unsigned long n = 1;
  for (;; ++n) {
    if (n > kSeriesBudget) throw PrecisionError("arctan series exceeded its term budget");
    power = power * t2;
    const HpReal term = power.divided_by(2 * n + 1);
    if (term.is_zero()) break;
    if (n % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
  }

  HpReal result = sum.times(1L << halvings);
  if (reflect) result = pi_at_scale(scale).divided_by(2) - result;
  return x < 0.0 ? -result : result;
}

HpReal eval_bound_extended(BoundId id, std::optional<ShaferParam> a, double x, int scale) {
  check_x(x);
  check_bound_params(id, a);
  return formulas::evaluate(id, a ? a->value() : 0.0, HpReal::from_double(x, scale));
}

OracleTable::OracleTable(const GridSpec& grid, Precision precision)
    : grid_(grid), precision_(precision), xs_(grid.abscissae()) {
  precision_.validate();
  values_.resize(xs_.size());
  detail::for_each_chunk(xs_.size(), [this](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) values_[i] = oracle_arctan(xs_[i], precision_);
  });
}

void SweepReport::merge(const SweepReport& other) {
  const auto by_x = [](const SweepPoint& l, const SweepPoint& r) { return l.x < r.x; };
  if (other.points.empty()) return;
  if (points.empty() || other.min_margin < min_margin ||
      (other.min_margin == min_margin && other.min_margin_x < min_margin_x)) {
    min_margin = other.min_margin;
    min_margin_x = other.min_margin_x;
  }
  points.insert(points.end(), other.points.begin(), other.points.end());
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  std::sort(points.begin(), points.end(), by_x);
  std::sort(violations.begin(), violations.end(), by_x);
  rounding_violations += other.rounding_violations;
}

namespace {

SweepReport sweep_range(BoundId id, std::optional<ShaferParam> a, const OracleTable& table,
                        std::size_t begin, std::size_t end) {
  const Side side = bound_side(id);
  const double a_value = a ? a->value() : 0.0;
  SweepReport report;
  report.bound_id = id;
  if (a) report.a = a->value();
  report.side = side;
  report.grid = table.grid();
  report.min_margin = std::numeric_limits<double>::infinity();

  for (std::size_t i = begin; i < end; ++i) {
    const double x = table.xs()[i];
    HpReal oracle = table.values()[i];
    HpReal bound = formulas::evaluate(id, a_value, HpReal::from_double(x, oracle.scale()));
    HpReal difference = side == Side::Lower ? oracle - bound : bound - oracle;
    Precision refined = table.precision();
    for (int r = 0; r < kMaxRefinements && !decided(difference); ++r) {
      if (refined.decimal_digits + kRefineDigits > kMaxDigits) break;
      refined.decimal_digits += kRefineDigits;
      oracle = oracle_arctan(x, refined);
      bound = formulas::evaluate(id, a_value, HpReal::from_double(x, oracle.scale()));
      difference = side == Side::Lower ? oracle - bound : bound - oracle;
    }

    SweepPoint point;
    point.x = x;
    point.bound = bound.to_double();
    point.oracle = oracle.to_double();
    point.margin = x < 1.0 ? difference.to_double() : (difference / oracle).to_double();
    if (difference.sign() <= 0) {
      point.margin = std::min(point.margin, 0.0);
      report.violations.push_back(point);
    }
    if (point.margin < report.min_margin) {
      report.min_margin = point.margin;
      report.min_margin_x = x;
    }

    const double plain = formulas::evaluate(id, a_value, x);
    const auto plain_cmp = HpReal::from_double(plain, oracle.scale()) <=> oracle;
    const bool plain_fails = side == Side::Lower ? plain_cmp >= 0 : plain_cmp <= 0;
    if (plain_fails && difference.sign() > 0) ++report.rounding_violations;

    report.points.push_back(point);
  }
  return report;
}

}  // namespace

SweepReport sweep(BoundId id, std::optional<ShaferParam> a, const OracleTable& table) {
  check_bound_params(id, a);
  std::vector<SweepReport> parts;
  std::mutex parts_mutex;
  detail::for_each_chunk(table.xs().size(), [&](std::size_t begin, std::size_t end) {
    SweepReport part = sweep_range(id, a, table, begin, end);
    std::lock_guard lock(parts_mutex);
    parts.push_back(std::move(part));
  });
  SweepReport report = std::move(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) report.merge(parts[i]);
  return report;
}

SweepReport sweep(BoundId id, std::optional<ShaferParam> a, const GridSpec& grid, Side side,
                  Precision precision) {
  check_bound_params(id, a);
  if (side != bound_side(id)) {
    throw ParamError(std::string(bound_name(id)) + " is a " + std::string(side_name(bound_side(id))) +
                     " bound");
  }
  const OracleTable table(grid, precision);
  return sweep(id, a, table);
}

std::vector<SuiteCase> standard_suite() {
  std::vector<SuiteCase> cases = {
      {BoundId::ShaferLower, std::nullopt},   {BoundId::HalfAngleUpper, std::nullopt},
      {BoundId::RationalLower, std::nullopt}, {BoundId::IdentityUpper, std::nullopt},
      {BoundId::CubicLower, std::nullopt},    {BoundId::LogLower, std::nullopt},
      {BoundId::LogUpper, std::nullopt},
  };
  for (double a : {0.0, 0.1, 0.25, 0.5}) {
    cases.push_back({BoundId::FamilyLower, a});
    cases.push_back({BoundId::FamilyUpper, a});
  }
  for (double a : {kTwoOverPi, 0.7, 1.0, 2.0}) {
    cases.push_back({BoundId::ReversedLower, a});
    cases.push_back({BoundId::ReversedUpper, a});
  }
  for (double a : {0.51, 0.55, 0.6, 0.63}) {
    cases.push_back({BoundId::MinimumLower, a});
    cases.push_back({BoundId::MinimumUpper, a});
  }
  cases.push_back({BoundId::TwoOverPiLower, std::nullopt});
  cases.push_back({BoundId::TwoOverPiUpper, std::nullopt});
  cases.push_back({BoundId::TwoOverPiLowerErrata, std::nullopt, Expectation::KnownErrata});
  return cases;
}

bool SuiteReport::passed() const noexcept {
  return std::none_of(results.begin(), results.end(),
                      [](const SuiteResult& r) { return r.status == "fail"; });
}

SuiteReport run_suite(const std::vector<SuiteCase>& cases, const GridSpec& grid,
                      Precision precision) {
  for (const auto& c : cases) {
    check_bound_params(c.id, c.a ? std::optional<ShaferParam>(ShaferParam(*c.a)) : std::nullopt);
  }
  const OracleTable table(grid, precision);
  SuiteReport suite{grid, precision, {}};
  for (const auto& c : cases) {
    const auto param = c.a ? std::optional<ShaferParam>(ShaferParam(*c.a)) : std::nullopt;
    SweepReport report = sweep(c.id, param, table);
    std::string status;
    if (c.expectation == Expectation::KnownErrata) {
      status = report.holds() ? "errata-not-reproduced" : "known-errata";
    } else {
      status = report.holds() ? "pass" : "fail";
    }
    suite.results.push_back({c, std::move(report), std::move(status)});
  }
  return suite;
}

std::string_view tighter_name(Tighter t) noexcept {
  switch (t) {
    case Tighter::A:
      return "a";
    case Tighter::B:
      return "b";
    case Tighter::Equal:
      return "equal";
  }
  return "equal";
}

namespace {

struct PairEvaluator {
  BoundId id_a;
  std::optional<ShaferParam> a_a;
  BoundId id_b;
  std::optional<ShaferParam> a_b;
  Side side;
  double tie_relative;
  Precision precision;

  // Positive when A is tighter.
  HpReal advantage(double x) const {
    const int scale = oracle_scale(x, precision);
    const HpReal va = eval_bound_extended(id_a, a_a, x, scale);
    const HpReal vb = eval_bound_extended(id_b, a_b, x, scale);
    return side == Side::Lower ? va - vb : vb - va;
  }

  Tighter classify(double x) const {
    const int scale = oracle_scale(x, precision);
    const HpReal va = eval_bound_extended(id_a, a_a, x, scale);
    const HpReal vb = eval_bound_extended(id_b, a_b, x, scale);
    const HpReal diff = side == Side::Lower ? va - vb : vb - va;
    const HpReal band = HpReal::from_double(tie_relative, scale) * std::max(abs(va), abs(vb));
    if (abs(diff) <= band) return Tighter::Equal;
    return diff.sign() > 0 ? Tighter::A : Tighter::B;
  }

  double refine_crossover(double lo, double hi) const {
    const int sign_lo = advantage(lo).sign();
    for (int i = 0; i < 200; ++i) {
      const double mid = lo + (hi - lo) / 2.0;
      if (mid <= lo || mid >= hi) break;
      const int s = advantage(mid).sign();
      if (s == 0) return mid;
      (s == sign_lo ? lo : hi) = mid;
    }
    return lo + (hi - lo) / 2.0;
  }
};

}  // namespace

DominanceReport dominance_report(BoundId id_a, std::optional<ShaferParam> a_a, BoundId id_b,
                                 std::optional<ShaferParam> a_b, const GridSpec& grid,
                                 const DominanceOptions& options) {
  check_bound_params(id_a, a_a);
  check_bound_params(id_b, a_b);
  options.precision.validate();
  if (bound_side(id_a) != bound_side(id_b)) {
    throw ParamError("dominance needs two bounds on the same side");
  }
  if (!(options.tie_relative >= 0.0)) throw ParamError("tie tolerance must be non-negative");

  const PairEvaluator eval{id_a, a_a, id_b, a_b, bound_side(id_a), options.tie_relative,
                           options.precision};
  DominanceReport report;
  report.id_a = id_a;
  report.id_b = id_b;
  if (a_a) report.a_a = a_a->value();
  if (a_b) report.a_b = a_b->value();
  report.side = eval.side;
  report.grid = grid;
  report.tie_relative = options.tie_relative;
  report.xs = grid.abscissae();
  report.tighter.resize(report.xs.size());
  detail::for_each_chunk(report.xs.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) report.tighter[i] = eval.classify(report.xs[i]);
  });

  for (std::size_t i = 0; i < report.xs.size(); ++i) {
    const Tighter t = report.tighter[i];
    if (report.regions.empty() || report.regions.back().tighter != t) {
      report.regions.push_back({t, report.xs[i], report.xs[i], 0});
    }
    report.regions.back().x_end = report.xs[i];
    ++report.regions.back().points;
  }

  std::optional<std::size_t> previous;
  for (std::size_t i = 0; i < report.xs.size(); ++i) {
    if (report.tighter[i] == Tighter::Equal) continue;
    if (previous && report.tighter[*previous] != report.tighter[i]) {
      report.crossovers.push_back(eval.refine_crossover(report.xs[*previous], report.xs[i]));
    }
    previous = i;
  }
  return report;
}

}  // namespace arctan_bounds
