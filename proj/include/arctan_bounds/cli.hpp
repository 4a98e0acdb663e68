#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "arctan_bounds/bound_catalog.hpp"
#include "arctan_bounds/reference_oracle.hpp"

namespace arctan_bounds::cli {

enum class Command { Eval, Classify, Enclose, FindMin, Verify, Dominance, Profile };
enum class OutputFormat { Text, Csv, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

struct CliConfig {
  Command command = Command::Classify;
  std::vector<double> a;  // several values only for enclose
  std::optional<double> x;
  std::string bound;
  std::string against;
  std::optional<double> a_against;
  std::string suite = "all";
  GridSpec grid;
  double tolerance = 1e-12;
  int max_iterations = 200;
  double tie_relative = 1e-15;
  Precision precision = default_precision();
  double a_low = 0.5;
  double a_high = kTwoOverPi;
  std::optional<double> crossover;
  OutputFormat format = OutputFormat::Text;
  std::optional<std::string> output_path;

  /// Throws UsageError naming the offending flag.
  void validate() const;
};

/// Executes a parsed configuration. Returns 0 on success, 1 when a
/// verification fails, 2 on usage or numerical errors.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace arctan_bounds::cli
