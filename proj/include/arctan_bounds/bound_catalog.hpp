#pragma once

#include <array>
#include <numbers>
#include <optional>
#include <span>
#include <string_view>

namespace arctan_bounds {

inline constexpr double kHalfPi = std::numbers::pi / 2.0;
/// Rounds above the true 2/pi, so every double a >= kTwoOverPi satisfies a >= 2/pi.
inline constexpr double kTwoOverPi = 2.0 / std::numbers::pi;
/// Crossover of max{pi/2, 1+a}.
inline constexpr double kHalfPiMinusOne = std::numbers::pi / 2.0 - 1.0;

/// The real parameter a of the family f_a(x) = (a + sqrt(1+x^2)) arctan(x) / x.
class ShaferParam {
 public:
  /// Throws ParamError for NaN or infinite values.
  explicit ShaferParam(double a);
  double value() const noexcept { return a_; }

 private:
  double a_;
};

enum class Regime { Increasing, Decreasing, InteriorMinimum, Unclassified };

std::string_view regime_name(Regime regime) noexcept;

/// Monotonicity of f_a on (0, inf). Unclassified covers -1 < a < 0.
Regime classify_regime(ShaferParam a) noexcept;

enum class Side { Lower, Upper };

std::string_view side_name(Side side) noexcept;

enum class BoundId {
  ShaferLower,        // 3x / (1 + 2 sqrt(1+x^2))
  HalfAngleUpper,     // 2x / (1 + sqrt(1+x^2))
  RationalLower,      // x / (1 + x^2)
  IdentityUpper,      // x
  CubicLower,         // x - x^3/3
  LogLower,           // ln(1+x^2) / (2x)
  LogUpper,           // (1+x) ln(1+x)
  FamilyLower,        // (1+a) x / (a + sqrt(1+x^2)),        0 <= a <= 1/2
  FamilyUpper,        // (pi/2) x / (a + sqrt(1+x^2)),       0 <= a <= 1/2
  ReversedLower,      // (pi/2) x / (a + sqrt(1+x^2)),       a >= 2/pi
  ReversedUpper,      // (1+a) x / (a + sqrt(1+x^2)),        a >= 2/pi
  MinimumLower,       // 4a(1-a^2) x / (a + sqrt(1+x^2)),    1/2 < a < 2/pi
  MinimumUpper,       // max{pi/2, 1+a} x / (a + sqrt(1+x^2)), 1/2 < a < 2/pi
  TwoOverPiLowerErrata,  // pi^2 x / (2 + 2 pi sqrt(1+x^2)); NOT a valid bound
  TwoOverPiLower,     // pi^2 x / (4 + 2 pi sqrt(1+x^2))
  TwoOverPiUpper,     // (pi+2) x / (2 + pi sqrt(1+x^2))
};

inline constexpr std::array kAllBounds = {
    BoundId::ShaferLower,    BoundId::HalfAngleUpper,       BoundId::RationalLower,
    BoundId::IdentityUpper,  BoundId::CubicLower,           BoundId::LogLower,
    BoundId::LogUpper,       BoundId::FamilyLower,          BoundId::FamilyUpper,
    BoundId::ReversedLower,  BoundId::ReversedUpper,        BoundId::MinimumLower,
    BoundId::MinimumUpper,   BoundId::TwoOverPiLowerErrata, BoundId::TwoOverPiLower,
    BoundId::TwoOverPiUpper,
};

/// Kebab-case identifier, e.g. "shafer-lower".
std::string_view bound_name(BoundId id) noexcept;
/// Inverse of bound_name; throws UsageError for unknown names.
BoundId parse_bound(std::string_view name);

Side bound_side(BoundId id) noexcept;
bool is_family_bound(BoundId id) noexcept;
/// Only TwoOverPiLowerErrata; it is kept to document that it fails.
bool is_known_errata(BoundId id) noexcept;

/// Validity predicate on (id, a). Throws ParamError when a is supplied for a
/// fixed bound, missing for a family bound, or outside the proven range.
void check_bound_params(BoundId id, std::optional<ShaferParam> a);

/// Closed-form value of the bound at x > 0 in double precision.
double eval_bound(BoundId id, std::optional<ShaferParam> a, double x);

struct Enclosure {
  double lower = 0.0;
  double upper = 0.0;
  double half_width = 0.0;

  static Enclosure from_bounds(double lower, double upper) {
    return {lower, upper, (upper - lower) / 2.0};
  }
  double midpoint() const noexcept { return lower + half_width; }
};

/// Two-sided family enclosure: lower < arctan x < upper.
/// Requires 0 <= a <= 1/2 or a >= 2/pi.
Enclosure enclosure(ShaferParam a, double x);

/// Pointwise tightest enclosure over several admissible parameters.
Enclosure best_enclosure(double x, std::span<const ShaferParam> params);

}  // namespace arctan_bounds
