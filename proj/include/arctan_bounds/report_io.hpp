#pragma once

#include <iosfwd>

#include "json.hpp"

#include "arctan_bounds/approx_kernel.hpp"
#include "arctan_bounds/bound_catalog.hpp"
#include "arctan_bounds/family_analysis.hpp"
#include "arctan_bounds/reference_oracle.hpp"

namespace arctan_bounds {

nlohmann::json to_json(const GridSpec& grid);
GridSpec grid_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Enclosure& e);
nlohmann::json to_json(const MinimumResult& m);

/// Verdict plus violations; per-point data goes to CSV.
nlohmann::json to_json(const SweepReport& report);
SweepReport sweep_report_from_json(const nlohmann::json& j);
/// Columns: x,bound,oracle,margin
void write_csv(std::ostream& out, const SweepReport& report);

nlohmann::json to_json(const SuiteReport& suite);
/// One row per grid point and bound: bound,a,x,bound_value,oracle,margin
void write_csv(std::ostream& out, const SuiteReport& suite);
void write_text(std::ostream& out, const SuiteReport& suite);

nlohmann::json to_json(const DominanceReport& report);
/// Columns: x,tighter
void write_csv(std::ostream& out, const DominanceReport& report);
void write_text(std::ostream& out, const DominanceReport& report);

nlohmann::json to_json(const ErrorProfile& profile);
/// Columns: x,value,certified,actual,ratio
void write_csv(std::ostream& out, const ErrorProfile& profile);
void write_text(std::ostream& out, const ErrorProfile& profile);

}  // namespace arctan_bounds
