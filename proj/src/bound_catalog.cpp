#include "arctan_bounds/bound_catalog.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "arctan_bounds/bound_formulas.hpp"
#include "arctan_bounds/errors.hpp"

namespace arctan_bounds {

namespace {

struct BoundInfo {
  BoundId id;
  std::string_view name;
  Side side;
};

constexpr std::array<BoundInfo, kAllBounds.size()> kBoundTable = {{
    {BoundId::ShaferLower, "shafer-lower", Side::Lower},
    {BoundId::HalfAngleUpper, "half-angle-upper", Side::Upper},
    {BoundId::RationalLower, "rational-lower", Side::Lower},
    {BoundId::IdentityUpper, "identity-upper", Side::Upper},
    {BoundId::CubicLower, "cubic-lower", Side::Lower},
    {BoundId::LogLower, "log-lower", Side::Lower},
    {BoundId::LogUpper, "log-upper", Side::Upper},
    {BoundId::FamilyLower, "family-lower", Side::Lower},
    {BoundId::FamilyUpper, "family-upper", Side::Upper},
    {BoundId::ReversedLower, "reversed-lower", Side::Lower},
    {BoundId::ReversedUpper, "reversed-upper", Side::Upper},
    {BoundId::MinimumLower, "minimum-lower", Side::Lower},
    {BoundId::MinimumUpper, "minimum-upper", Side::Upper},
    {BoundId::TwoOverPiLowerErrata, "two-over-pi-lower-errata", Side::Lower},
    {BoundId::TwoOverPiLower, "two-over-pi-lower", Side::Lower},
    {BoundId::TwoOverPiUpper, "two-over-pi-upper", Side::Upper},
}};

const BoundInfo& info(BoundId id) noexcept {
  return kBoundTable[static_cast<std::size_t>(id)];
}

void check_x(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("bounds are stated for finite x > 0, got x = " + std::to_string(x));
  }
}

}  // namespace

ShaferParam::ShaferParam(double a) : a_(a) {
  if (!std::isfinite(a)) throw ParamError("parameter a must be finite");
}

std::string_view regime_name(Regime regime) noexcept {
  switch (regime) {
    case Regime::Increasing:
      return "Increasing";
    case Regime::Decreasing:
      return "Decreasing";
    case Regime::InteriorMinimum:
      return "InteriorMinimum";
    case Regime::Unclassified:
      return "Unclassified";
  }
  return "Unclassified";
}

Regime classify_regime(ShaferParam param) noexcept {
  const double a = param.value();
  if (a <= -1.0 || (a >= 0.0 && a <= 0.5)) return Regime::Increasing;
  if (a >= kTwoOverPi) return Regime::Decreasing;
  if (a > 0.5) return Regime::InteriorMinimum;
  return Regime::Unclassified;
}

std::string_view side_name(Side side) noexcept {
  return side == Side::Lower ? "lower" : "upper";
}

std::string_view bound_name(BoundId id) noexcept { return info(id).name; }

BoundId parse_bound(std::string_view name) {
  for (const auto& entry : kBoundTable) {
    if (entry.name == name) return entry.id;
  }
  throw UsageError("unknown bound '" + std::string(name) + "'");
}

Side bound_side(BoundId id) noexcept { return info(id).side; }

bool is_family_bound(BoundId id) noexcept {
  switch (id) {
    case BoundId::FamilyLower:
    case BoundId::FamilyUpper:
    case BoundId::ReversedLower:
    case BoundId::ReversedUpper:
    case BoundId::MinimumLower:
    case BoundId::MinimumUpper:
      return true;
    default:
      return false;
  }
}

bool is_known_errata(BoundId id) noexcept { return id == BoundId::TwoOverPiLowerErrata; }

void check_bound_params(BoundId id, std::optional<ShaferParam> param) {
  const std::string name(bound_name(id));
  if (!is_family_bound(id)) {
    if (param) throw ParamError(name + " takes no parameter a");
    return;
  }
  if (!param) throw ParamError(name + " requires a parameter a");
  const double a = param->value();
  bool ok = false;
  switch (id) {
    case BoundId::FamilyLower:
    case BoundId::FamilyUpper:
      ok = a >= 0.0 && a <= 0.5;
      break;
    case BoundId::ReversedLower:
    case BoundId::ReversedUpper:
      ok = a >= kTwoOverPi;
      break;
    case BoundId::MinimumLower:
    case BoundId::MinimumUpper:
      ok = a > 0.5 && a < kTwoOverPi;
      break;
    default:
      break;
  }
  if (!ok) {
    throw ParamError(name + " is not established for a = " + std::to_string(a));
  }
}

double eval_bound(BoundId id, std::optional<ShaferParam> a, double x) {
  check_x(x);
  check_bound_params(id, a);
  return formulas::evaluate(id, a ? a->value() : 0.0, x);
}

Enclosure enclosure(ShaferParam param, double x) {
  check_x(x);
  const double a = param.value();
  if (a >= 0.0 && a <= 0.5) {
    return Enclosure::from_bounds(formulas::evaluate(BoundId::FamilyLower, a, x),
                                  formulas::evaluate(BoundId::FamilyUpper, a, x));
  }
  if (a >= kTwoOverPi) {
    return Enclosure::from_bounds(formulas::evaluate(BoundId::ReversedLower, a, x),
                                  formulas::evaluate(BoundId::ReversedUpper, a, x));
  }
  throw ParamError("no two-sided family enclosure for a = " + std::to_string(a));
}

Enclosure best_enclosure(double x, std::span<const ShaferParam> params) {
  if (params.empty()) throw ParamError("best_enclosure needs at least one parameter");
  Enclosure best = enclosure(params.front(), x);
  for (const auto& param : params.subspan(1)) {
    const Enclosure e = enclosure(param, x);
    best = Enclosure::from_bounds(std::max(best.lower, e.lower), std::min(best.upper, e.upper));
  }
  return best;
}

}  // namespace arctan_bounds
