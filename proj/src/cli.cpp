#include "arctan_bounds/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "arctan_bounds/approx_kernel.hpp"
#include "arctan_bounds/errors.hpp"
#include "arctan_bounds/family_analysis.hpp"
#include "arctan_bounds/report_io.hpp"

namespace arctan_bounds::cli {

using nlohmann::json;

namespace {

std::optional<ShaferParam> param_of(const std::vector<double>& a) {
  if (a.empty()) return std::nullopt;
  return ShaferParam(a.front());
}

std::optional<ShaferParam> param_of(const std::optional<double>& a) {
  if (!a) return std::nullopt;
  return ShaferParam(*a);
}

OutputFormat effective_format(const CliConfig& config) {
  if (config.format != OutputFormat::Text || !config.output_path) return config.format;
  const std::string& path = *config.output_path;
  const auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() && path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with(".json")) return OutputFormat::Json;
  if (ends_with(".csv")) return OutputFormat::Csv;
  return OutputFormat::Text;
}

struct Emitter {
  OutputFormat format;
  std::ostream& out;

  void json_doc(const json& j) const { out << j.dump(2) << '\n'; }
};

int cmd_eval(const CliConfig& c, const Emitter& e) {
  const BoundId id = parse_bound(c.bound);
  const double value = eval_bound(id, param_of(c.a), *c.x);
  const json a = c.a.empty() ? json(nullptr) : json(c.a.front());
  switch (e.format) {
    case OutputFormat::Json:
      e.json_doc({{"bound", c.bound}, {"a", a}, {"x", *c.x}, {"value", value}});
      break;
    case OutputFormat::Csv:
      e.out << std::setprecision(17) << "bound,a,x,value\n"
            << c.bound << ',' << (c.a.empty() ? std::string() : a.dump()) << ',' << *c.x << ','
            << value << '\n';
      break;
    case OutputFormat::Text:
      e.out << std::setprecision(17) << value << '\n';
      break;
  }
  return kExitOk;
}

int cmd_classify(const CliConfig& c, const Emitter& e) {
  const Regime regime = classify_regime(ShaferParam(c.a.front()));
  switch (e.format) {
    case OutputFormat::Json:
      e.json_doc({{"a", c.a.front()}, {"regime", regime_name(regime)}});
      break;
    case OutputFormat::Csv:
      e.out << std::setprecision(17) << "a,regime\n" << c.a.front() << ',' << regime_name(regime) << '\n';
      break;
    case OutputFormat::Text:
      e.out << regime_name(regime) << '\n';
      break;
  }
  return kExitOk;
}

int cmd_enclose(const CliConfig& c, const Emitter& e) {
  std::vector<ShaferParam> params;
  for (double a : c.a) params.emplace_back(a);
  const Enclosure enc = best_enclosure(*c.x, params);
  switch (e.format) {
    case OutputFormat::Json: {
      json j = to_json(enc);
      j["x"] = *c.x;
      j["a"] = c.a;
      e.json_doc(j);
      break;
    }
    case OutputFormat::Csv:
      e.out << std::setprecision(17) << "x,lower,upper,half_width\n"
            << *c.x << ',' << enc.lower << ',' << enc.upper << ',' << enc.half_width << '\n';
      break;
    case OutputFormat::Text:
      e.out << std::setprecision(17) << "lower      " << enc.lower << "\nupper      " << enc.upper
            << "\nhalf_width " << enc.half_width << '\n';
      break;
  }
  return kExitOk;
}

int cmd_find_min(const CliConfig& c, const Emitter& e) {
  SolverConfig solver;
  solver.tolerance = c.tolerance;
  solver.max_iterations = c.max_iterations;
  const ShaferParam a(c.a.front());
  const MinimumResult m = find_minimum(a, solver);
  switch (e.format) {
    case OutputFormat::Json: {
      json j = to_json(m);
      j["a"] = c.a.front();
      j["closed_form"] = min_value_closed_form(a, m.u);
      j["lower_bound"] = min_value_lower_bound(a);
      e.json_doc(j);
      break;
    }
    case OutputFormat::Csv:
      e.out << std::setprecision(17) << "a,x0,value,u,residual\n"
            << c.a.front() << ',' << m.x0 << ',' << m.value << ',' << m.u << ',' << m.residual
            << '\n';
      break;
    case OutputFormat::Text:
      e.out << std::setprecision(17) << "x0       " << m.x0 << "\nvalue    " << m.value
            << "\nu        " << m.u << "\nresidual " << m.residual << '\n';
      break;
  }
  return kExitOk;
}

int cmd_verify(const CliConfig& c, const Emitter& e) {
  std::vector<SuiteCase> cases;
  if (c.suite == "all") {
    cases = standard_suite();
  } else {
    const BoundId id = parse_bound(c.suite);
    const auto expectation = is_known_errata(id) ? Expectation::KnownErrata : Expectation::Holds;
    if (c.a.empty()) {
      cases.push_back({id, std::nullopt, expectation});
    } else {
      for (double a : c.a) cases.push_back({id, a, expectation});
    }
  }
  const SuiteReport suite = run_suite(cases, c.grid, c.precision);
  switch (e.format) {
    case OutputFormat::Json:
      e.json_doc(to_json(suite));
      break;
    case OutputFormat::Csv:
      write_csv(e.out, suite);
      break;
    case OutputFormat::Text:
      write_text(e.out, suite);
      break;
  }
  return suite.passed() ? kExitOk : kExitVerificationFailed;
}

int cmd_dominance(const CliConfig& c, const Emitter& e) {
  DominanceOptions options;
  options.tie_relative = c.tie_relative;
  options.precision = c.precision;
  const DominanceReport report = dominance_report(parse_bound(c.bound), param_of(c.a),
                                                  parse_bound(c.against), param_of(c.a_against),
                                                  c.grid, options);
  switch (e.format) {
    case OutputFormat::Json:
      e.json_doc(to_json(report));
      break;
    case OutputFormat::Csv:
      write_csv(e.out, report);
      break;
    case OutputFormat::Text:
      write_text(e.out, report);
      break;
  }
  return kExitOk;
}

int cmd_profile(const CliConfig& c, const Emitter& e) {
  KernelSpec spec;
  spec.a_low = c.a_low;
  spec.a_high = c.a_high;
  spec.crossover = c.crossover ? *c.crossover : choose_crossover(c.a_low, c.a_high, c.grid);
  const ErrorProfile profile = error_profile(spec, c.grid, c.precision);
  switch (e.format) {
    case OutputFormat::Json:
      e.json_doc(to_json(profile));
      break;
    case OutputFormat::Csv:
      write_csv(e.out, profile);
      break;
    case OutputFormat::Text:
      write_text(e.out, profile);
      break;
  }
  return profile.certified() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

void CliConfig::validate() const {
  const auto need_x = [&] {
    if (!x) throw UsageError("--x is required");
  };
  const auto need_a = [&] {
    if (a.empty()) throw UsageError("--a is required");
  };
  if (!(tolerance > 0.0)) throw UsageError("--tolerance must be positive");
  if (max_iterations < 1) throw UsageError("--max-iterations must be >= 1");
  switch (command) {
    case Command::Eval:
      if (bound.empty()) throw UsageError("--bound is required");
      need_x();
      if (a.size() > 1) throw UsageError("--a accepts a single value for eval");
      break;
    case Command::Classify:
    case Command::FindMin:
      need_a();
      if (a.size() > 1) throw UsageError("--a accepts a single value here");
      break;
    case Command::Enclose:
      need_a();
      need_x();
      break;
    case Command::Verify:
      if (suite.empty()) throw UsageError("--suite must name 'all' or a bound");
      break;
    case Command::Dominance:
      if (bound.empty()) throw UsageError("--bound is required");
      if (against.empty()) throw UsageError("--against is required");
      if (a.size() > 1) throw UsageError("--a accepts a single value for dominance");
      break;
    case Command::Profile:
      break;
  }
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
    std::ofstream file;
    if (config.output_path) {
      file.open(*config.output_path);
      if (!file) throw UsageError("cannot open --output " + *config.output_path);
    }
    const Emitter emitter{effective_format(config), config.output_path ? file : out};
    switch (config.command) {
      case Command::Eval:
        return cmd_eval(config, emitter);
      case Command::Classify:
        return cmd_classify(config, emitter);
      case Command::Enclose:
        return cmd_enclose(config, emitter);
      case Command::FindMin:
        return cmd_find_min(config, emitter);
      case Command::Verify:
        return cmd_verify(config, emitter);
      case Command::Dominance:
        return cmd_dominance(config, emitter);
      case Command::Profile:
        return cmd_profile(config, emitter);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << e.name() << ": " << e.what() << '\n';
  }
  return kExitUsage;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig config;
  CLI::App app{"Certified bounds and verification harness for arctan"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string spacing = "log";
  std::string output;
  int digits = config.precision.decimal_digits;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("--output", output, "write the report to this file");
    sub->add_option("--precision", digits, "oracle digits (env ARCTAN_BOUNDS_DIGITS)");
  };
  const auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--grid-min", config.grid.x_min, "smallest grid abscissa");
    sub->add_option("--grid-max", config.grid.x_max, "largest grid abscissa");
    sub->add_option("--grid-points", config.grid.points, "number of grid points");
    sub->add_option("--spacing", spacing, "log or linear")->check(CLI::IsMember({"log", "linear"}));
  };

  auto* eval = app.add_subcommand("eval", "evaluate one bound at x");
  eval->add_option("--bound", config.bound, "bound name")->required();
  eval->add_option("--a", config.a, "family parameter");
  eval->add_option("--x", config.x, "argument")->required();

  auto* classify = app.add_subcommand("classify", "monotonicity regime of f_a");
  classify->add_option("--a", config.a, "family parameter")->required();

  auto* enclose = app.add_subcommand("enclose", "family enclosure (best over several --a)");
  enclose->add_option("--a", config.a, "family parameter(s)")->required();
  enclose->add_option("--x", config.x, "argument")->required();

  auto* find_min = app.add_subcommand("find-min", "interior minimum of f_a");
  find_min->add_option("--a", config.a, "family parameter")->required();
  find_min->add_option("--tolerance", config.tolerance, "residual bound on g_a");
  find_min->add_option("--max-iterations", config.max_iterations, "bisection budget");

  auto* verify = app.add_subcommand("verify", "sweep bounds against the oracle");
  verify->add_option("--suite", config.suite, "'all' or a bound name");
  verify->add_option("--a", config.a, "parameter(s) for a single family bound");
  add_grid(verify);

  auto* dominance = app.add_subcommand("dominance", "compare two bounds on the same side");
  dominance->add_option("--bound", config.bound, "bound A")->required();
  dominance->add_option("--a", config.a, "parameter of bound A");
  dominance->add_option("--against", config.against, "bound B")->required();
  dominance->add_option("--a-against", config.a_against, "parameter of bound B");
  dominance->add_option("--tie", config.tie_relative, "relative tie band");
  add_grid(dominance);

  auto* profile = app.add_subcommand("profile", "certified vs actual error of the kernel");
  profile->add_option("--a-low", config.a_low, "enclosure parameter below the crossover");
  profile->add_option("--a-high", config.a_high, "enclosure parameter above the crossover");
  profile->add_option("--crossover", config.crossover, "switch abscissa (default: tuned)");
  add_grid(profile);

  for (auto* sub : {eval, classify, enclose, find_min, verify, dominance, profile}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (eval->parsed()) config.command = Command::Eval;
  if (classify->parsed()) config.command = Command::Classify;
  if (enclose->parsed()) config.command = Command::Enclose;
  if (find_min->parsed()) config.command = Command::FindMin;
  if (verify->parsed()) config.command = Command::Verify;
  if (dominance->parsed()) config.command = Command::Dominance;
  if (profile->parsed()) config.command = Command::Profile;

  config.format = format == "json" ? OutputFormat::Json
                                   : (format == "csv" ? OutputFormat::Csv : OutputFormat::Text);
  config.grid.spacing = spacing == "log" ? Spacing::Log : Spacing::Linear;
  config.precision.decimal_digits = digits;
  if (!output.empty()) config.output_path = output;
  return run(config, out, err);
}

}  // namespace arctan_bounds::cli
