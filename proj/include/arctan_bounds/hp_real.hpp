#pragma once

#include <compare>
#include <string>

#include <gmpxx.h>

namespace arctan_bounds {

/// Decimal fixed-point real: the represented value is raw * 10^-scale.
///
/// This is the arithmetic behind the reference oracle. Each operation
/// truncates toward zero at the result scale, so an expression of n
/// operations carries an absolute error of at most about n units of
/// 10^-scale; callers budget guard digits for that. Binary operations on
/// operands of different scale work at the larger of the two.
class HpReal {
 public:
  HpReal() = default;
  HpReal(mpz_class raw, int scale);

  /// Nearest fixed-point value to the (exactly representable) double.
  static HpReal from_double(double value, int scale);
  static HpReal from_int(long value, int scale);

  int scale() const noexcept { return scale_; }
  const mpz_class& raw() const noexcept { return raw_; }

  /// Changes the number of fractional digits; truncates when shrinking.
  HpReal rescaled(int scale) const;

  int sign() const noexcept { return sgn(raw_); }
  bool is_zero() const noexcept { return sign() == 0; }

  /// Correctly rounded conversion of the stored decimal value.
  double to_double() const;
  /// Scientific notation with `significant` digits (truncated).
  std::string to_string(int significant = 25) const;

  HpReal operator-() const { return HpReal(-raw_, scale_); }
  HpReal& operator+=(const HpReal& rhs);
  HpReal& operator-=(const HpReal& rhs);

  friend HpReal operator+(HpReal lhs, const HpReal& rhs) { return lhs += rhs; }
  friend HpReal operator-(HpReal lhs, const HpReal& rhs) { return lhs -= rhs; }
  friend HpReal operator*(const HpReal& lhs, const HpReal& rhs);
  friend HpReal operator/(const HpReal& lhs, const HpReal& rhs);

  HpReal times(long factor) const;
  HpReal divided_by(unsigned long divisor) const;

  friend std::strong_ordering operator<=>(const HpReal& lhs, const HpReal& rhs);
  friend bool operator==(const HpReal& lhs, const HpReal& rhs) {
    return (lhs <=> rhs) == std::strong_ordering::equal;
  }

 private:
  mpz_class raw_{0};
  int scale_ = 0;
};

/// 10^k; cached per thread.
const mpz_class& pow10(int k);

/// floor(sqrt(n)) by Newton iteration from a floating-point seed.
mpz_class isqrt(const mpz_class& n);

HpReal abs(const HpReal& x);
HpReal sqrt(const HpReal& x);
/// Natural logarithm via 2*atanh((m-1)/(m+1)) after reducing by powers of 2.
HpReal log(const HpReal& x);

/// pi from Machin's formula, to `scale` fractional digits.
HpReal pi_at_scale(int scale);
HpReal ln2_at_scale(int scale);

// Hooks used by the generic bound formulas.
inline HpReal lift(const HpReal& like, double value) {
  return HpReal::from_double(value, like.scale());
}
inline HpReal pi_like(const HpReal& like) { return pi_at_scale(like.scale()); }
inline HpReal unit_hypot(const HpReal& x) {
  return sqrt(HpReal::from_int(1, x.scale()) + x * x);
}
inline HpReal log1p_like(const HpReal& x) {
  return log(HpReal::from_int(1, x.scale()) + x);
}

}  // namespace arctan_bounds
