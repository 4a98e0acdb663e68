#include "arctan_bounds/report_io.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>

#include "arctan_bounds/errors.hpp"

namespace arctan_bounds {

using nlohmann::json;

namespace {

// JSON has no infinities; those map to null.
json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> optional_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

json point_json(const SweepPoint& p) {
  return {{"x", p.x}, {"bound", p.bound}, {"oracle", p.oracle}, {"margin", p.margin}};
}

SweepPoint point_from(const json& j) {
  return {j.at("x").get<double>(), j.at("bound").get<double>(), j.at("oracle").get<double>(),
          j.at("margin").get<double>()};
}

class StreamPrecision {
 public:
  explicit StreamPrecision(std::ostream& out) : out_(out), saved_(out.precision(17)) {}
  ~StreamPrecision() { out_.precision(saved_); }

 private:
  std::ostream& out_;
  std::streamsize saved_;
};

// Shortest form that reads back to the same double.
std::string a_text(const std::optional<double>& a) {
  if (!a) return "";
  char buf[32];
  const auto result = std::to_chars(buf, buf + sizeof buf, *a);
  return std::string(buf, result.ptr);
}

}  // namespace

json to_json(const GridSpec& grid) {
  return {{"x_min", grid.x_min},
          {"x_max", grid.x_max},
          {"points", grid.points},
          {"spacing", grid.spacing == Spacing::Log ? "log" : "linear"}};
}

GridSpec grid_from_json(const json& j) {
  GridSpec grid;
  grid.x_min = j.at("x_min").get<double>();
  grid.x_max = j.at("x_max").get<double>();
  grid.points = j.at("points").get<int>();
  const auto spacing = j.at("spacing").get<std::string>();
  if (spacing != "log" && spacing != "linear") throw UsageError("unknown spacing " + spacing);
  grid.spacing = spacing == "log" ? Spacing::Log : Spacing::Linear;
  return grid;
}

json to_json(const Enclosure& e) {
  return {{"lower", e.lower}, {"upper", e.upper}, {"half_width", e.half_width}};
}

json to_json(const MinimumResult& m) {
  return {{"x0", m.x0},
          {"value", m.value},
          {"u", m.u},
          {"residual", m.residual},
          {"iterations", m.iterations}};
}

json to_json(const SweepReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) violations.push_back(point_json(v));
  return {{"bound", bound_name(report.bound_id)},
          {"a", optional_number(report.a)},
          {"side", side_name(report.side)},
          {"grid", to_json(report.grid)},
          {"points", report.points.size()},
          {"violation_count", report.violations.size()},
          {"violations", violations},
          {"min_margin", number(report.min_margin)},
          {"min_margin_x", report.min_margin_x},
          {"rounding_violations", report.rounding_violations},
          {"holds", report.holds()}};
}

SweepReport sweep_report_from_json(const json& j) {
  SweepReport report;
  report.bound_id = parse_bound(j.at("bound").get<std::string>());
  report.a = optional_from(j.at("a"));
  report.side = j.at("side").get<std::string>() == "lower" ? Side::Lower : Side::Upper;
  report.grid = grid_from_json(j.at("grid"));
  for (const auto& v : j.at("violations")) report.violations.push_back(point_from(v));
  const auto& margin = j.at("min_margin");
  report.min_margin =
      margin.is_null() ? std::numeric_limits<double>::infinity() : margin.get<double>();
  report.min_margin_x = j.at("min_margin_x").get<double>();
  report.rounding_violations = j.at("rounding_violations").get<int>();
  return report;
}

void write_csv(std::ostream& out, const SweepReport& report) {
  StreamPrecision guard(out);
  out << "x,bound,oracle,margin\n";
  for (const auto& p : report.points) {
    out << p.x << ',' << p.bound << ',' << p.oracle << ',' << p.margin << '\n';
  }
}

json to_json(const SuiteReport& suite) {
  json results = json::array();
  for (const auto& r : suite.results) {
    json entry = to_json(r.report);
    entry["status"] = r.status;
    entry["expectation"] =
        r.suite_case.expectation == Expectation::Holds ? "holds" : "known-errata";
    results.push_back(std::move(entry));
  }
  return {{"grid", to_json(suite.grid)},
          {"precision_digits", suite.precision.decimal_digits},
          {"passed", suite.passed()},
          {"results", results}};
}

void write_csv(std::ostream& out, const SuiteReport& suite) {
  StreamPrecision guard(out);
  out << "bound,a,x,bound_value,oracle,margin\n";
  for (const auto& r : suite.results) {
    const std::string name(bound_name(r.report.bound_id));
    const std::string a = a_text(r.report.a);
    for (const auto& p : r.report.points) {
      out << name << ',' << a << ',' << p.x << ',' << p.bound << ',' << p.oracle << ','
          << p.margin << '\n';
    }
  }
}

void write_text(std::ostream& out, const SuiteReport& suite) {
  const auto flags = out.flags();
  out << "grid: [" << suite.grid.x_min << ", " << suite.grid.x_max << "], " << suite.grid.points
      << (suite.grid.spacing == Spacing::Log ? " log" : " linear") << " points, "
      << suite.precision.decimal_digits << " oracle digits\n";
  out << std::left << std::setw(26) << "bound" << std::setw(20) << "a" << std::setw(12)
      << "violations" << std::setw(16) << "min margin" << "status\n";
  for (const auto& r : suite.results) {
    out << std::setw(26) << bound_name(r.report.bound_id) << std::setw(20) << a_text(r.report.a)
        << std::setw(12) << r.report.violations.size() << std::setw(16)
        << std::setprecision(6) << r.report.min_margin << r.status << '\n';
  }
  out << (suite.passed() ? "PASS" : "FAIL") << '\n';
  out.flags(flags);
}

json to_json(const DominanceReport& report) {
  json regions = json::array();
  for (const auto& r : report.regions) {
    regions.push_back({{"tighter", tighter_name(r.tighter)},
                       {"x_begin", r.x_begin},
                       {"x_end", r.x_end},
                       {"points", r.points}});
  }
  return {{"bound_a", bound_name(report.id_a)},
          {"a_a", optional_number(report.a_a)},
          {"bound_b", bound_name(report.id_b)},
          {"a_b", optional_number(report.a_b)},
          {"side", side_name(report.side)},
          {"grid", to_json(report.grid)},
          {"tie_relative", report.tie_relative},
          {"regions", regions},
          {"crossovers", report.crossovers}};
}

void write_csv(std::ostream& out, const DominanceReport& report) {
  StreamPrecision guard(out);
  out << "x,tighter\n";
  for (std::size_t i = 0; i < report.xs.size(); ++i) {
    out << report.xs[i] << ',' << tighter_name(report.tighter[i]) << '\n';
  }
}

void write_text(std::ostream& out, const DominanceReport& report) {
  StreamPrecision guard(out);
  out << "A = " << bound_name(report.id_a) << (report.a_a ? " a=" + a_text(report.a_a) : "")
      << ", B = " << bound_name(report.id_b) << (report.a_b ? " a=" + a_text(report.a_b) : "")
      << " (" << side_name(report.side) << " bounds)\n";
  for (const auto& r : report.regions) {
    out << "  [" << r.x_begin << ", " << r.x_end << "] " << r.points << " points: "
        << (r.tighter == Tighter::Equal ? "equal" : (r.tighter == Tighter::A ? "A tighter" : "B tighter"))
        << '\n';
  }
  for (double x : report.crossovers) out << "  crossover at x = " << x << '\n';
}

json to_json(const ErrorProfile& profile) {
  double min_ratio = std::numeric_limits<double>::infinity();
  for (const auto& row : profile.rows) min_ratio = std::min(min_ratio, row.ratio);
  return {{"a_low", profile.spec.a_low},
          {"a_high", profile.spec.a_high},
          {"crossover", profile.spec.crossover},
          {"grid", to_json(profile.grid)},
          {"max_actual", profile.max_actual},
          {"max_certified", profile.max_certified},
          {"min_ratio", number(min_ratio)},
          {"failures", profile.failures},
          {"certified", profile.certified()}};
}

void write_csv(std::ostream& out, const ErrorProfile& profile) {
  StreamPrecision guard(out);
  out << "x,value,certified,actual,ratio\n";
  for (const auto& r : profile.rows) {
    out << r.x << ',' << r.value << ',' << r.certified << ',' << r.actual << ',';
    if (std::isfinite(r.ratio)) {
      out << r.ratio;
    } else {
      out << "inf";
    }
    out << '\n';
  }
}

void write_text(std::ostream& out, const ErrorProfile& profile) {
  StreamPrecision guard(out);
  out << "kernel a_low=" << profile.spec.a_low << " a_high=" << profile.spec.a_high
      << " crossover=" << profile.spec.crossover << '\n';
  out << "points: " << profile.rows.size() << '\n';
  out << "max certified error: " << profile.max_certified << '\n';
  out << "max actual error:    " << profile.max_actual << '\n';
  out << "certification failures: " << profile.failures << '\n';
}

}  // namespace arctan_bounds
