#include "arctan_bounds/hp_real.hpp"

#include <cmath>
#include <cstdlib>
#include <deque>
#include <map>

#include "arctan_bounds/errors.hpp"

namespace arctan_bounds {

namespace {

// atan(1/n) at `scale` digits for an integer n >= 2.
mpz_class atan_inverse(unsigned long n, int scale) {
  const unsigned long n2 = n * n;
  mpz_class power = pow10(scale) / n;
  mpz_class sum = power;
  for (unsigned long k = 1;; ++k) {
    power /= n2;
    mpz_class term = power / (2 * k + 1);
    if (term == 0) break;
    if (k % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

// atanh(1/n) at `scale` digits.
mpz_class atanh_inverse(unsigned long n, int scale) {
  const unsigned long n2 = n * n;
  mpz_class power = pow10(scale) / n;
  mpz_class sum = power;
  for (unsigned long k = 1;; ++k) {
    power /= n2;
    mpz_class term = power / (2 * k + 1);
    if (term == 0) break;
    sum += term;
  }
  return sum;
}

void check_scale(int scale) {
  if (scale < 0) throw PrecisionError("negative fixed-point scale");
}

}  // namespace

const mpz_class& pow10(int k) {
  check_scale(k);
  // deque: references stay valid as the table grows
  thread_local std::deque<mpz_class> table{mpz_class(1)};
  while (static_cast<int>(table.size()) <= k) {
    table.push_back(table.back() * 10);
  }
  return table[static_cast<std::size_t>(k)];
}

HpReal::HpReal(mpz_class raw, int scale) : raw_(std::move(raw)), scale_(scale) {
  check_scale(scale);
}

HpReal HpReal::from_double(double value, int scale) {
  if (!std::isfinite(value)) throw DomainError("non-finite value has no fixed-point form");
  check_scale(scale);
  if (value == 0.0) return HpReal(0, scale);
  int exponent = 0;
  const double fraction = std::frexp(std::fabs(value), &exponent);
  const auto mantissa = static_cast<unsigned long>(std::ldexp(fraction, 53));
  const long shift = static_cast<long>(exponent) - 53;

  mpz_class raw(mantissa);
  raw *= pow10(scale);
  if (shift >= 0) {
    mpz_mul_2exp(raw.get_mpz_t(), raw.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  } else {
    // round half up on the discarded bits
    const auto drop = static_cast<mp_bitcnt_t>(-shift);
    mpz_class half;
    mpz_setbit(half.get_mpz_t(), drop - 1);
    raw += half;
    mpz_fdiv_q_2exp(raw.get_mpz_t(), raw.get_mpz_t(), drop);
  }
  if (value < 0) raw = -raw;
  return HpReal(std::move(raw), scale);
}

HpReal HpReal::from_int(long value, int scale) {
  return HpReal(mpz_class(value) * pow10(scale), scale);
}

HpReal HpReal::rescaled(int scale) const {
  check_scale(scale);
  if (scale == scale_) return *this;
  if (scale > scale_) return HpReal(raw_ * pow10(scale - scale_), scale);
  mpz_class out;
  mpz_tdiv_q(out.get_mpz_t(), raw_.get_mpz_t(), pow10(scale_ - scale).get_mpz_t());
  return HpReal(std::move(out), scale);
}

double HpReal::to_double() const {
  if (raw_ == 0) return 0.0;
  const std::string text = raw_.get_str() + "e-" + std::to_string(scale_);
  return std::strtod(text.c_str(), nullptr);
}

std::string HpReal::to_string(int significant) const {
  if (raw_ == 0) return "0";
  mpz_class magnitude = raw_;
  if (magnitude < 0) magnitude = -magnitude;
  const std::string digits = magnitude.get_str();
  const long exponent = static_cast<long>(digits.size()) - 1 - scale_;
  std::string out = raw_ < 0 ? "-" : "";
  out += digits[0];
  const auto tail = std::min<std::size_t>(digits.size(), static_cast<std::size_t>(std::max(significant, 1)));
  if (tail > 1) {
    out += '.';
    out.append(digits, 1, tail - 1);
  }
  out += 'e';
  out += std::to_string(exponent);
  return out;
}

HpReal& HpReal::operator+=(const HpReal& rhs) {
  if (rhs.scale_ > scale_) *this = rescaled(rhs.scale_);
  if (rhs.scale_ == scale_) {
    raw_ += rhs.raw_;
  } else {
    raw_ += rhs.raw_ * pow10(scale_ - rhs.scale_);
  }
  return *this;
}

HpReal& HpReal::operator-=(const HpReal& rhs) {
  if (rhs.scale_ > scale_) *this = rescaled(rhs.scale_);
  if (rhs.scale_ == scale_) {
    raw_ -= rhs.raw_;
  } else {
    raw_ -= rhs.raw_ * pow10(scale_ - rhs.scale_);
  }
  return *this;
}

HpReal operator*(const HpReal& lhs, const HpReal& rhs) {
  const int scale = std::max(lhs.scale_, rhs.scale_);
  mpz_class product = lhs.raw_ * rhs.raw_;
  const int excess = lhs.scale_ + rhs.scale_ - scale;
  if (excess > 0) {
    mpz_tdiv_q(product.get_mpz_t(), product.get_mpz_t(), pow10(excess).get_mpz_t());
  }
  return HpReal(std::move(product), scale);
}

HpReal operator/(const HpReal& lhs, const HpReal& rhs) {
  if (rhs.raw_ == 0) throw DomainError("fixed-point division by zero");
  const int scale = std::max(lhs.scale_, rhs.scale_);
  mpz_class numerator = lhs.raw_ * pow10(scale + rhs.scale_ - lhs.scale_);
  mpz_class quotient;
  mpz_tdiv_q(quotient.get_mpz_t(), numerator.get_mpz_t(), rhs.raw_.get_mpz_t());
  return HpReal(std::move(quotient), scale);
}

HpReal HpReal::times(long factor) const { return HpReal(raw_ * factor, scale_); }

HpReal HpReal::divided_by(unsigned long divisor) const {
  if (divisor == 0) throw DomainError("fixed-point division by zero");
  mpz_class out;
  mpz_tdiv_q_ui(out.get_mpz_t(), raw_.get_mpz_t(), divisor);
  return HpReal(std::move(out), scale_);
}

std::strong_ordering operator<=>(const HpReal& lhs, const HpReal& rhs) {
  int c = 0;
  if (lhs.scale_ == rhs.scale_) {
    c = cmp(lhs.raw_, rhs.raw_);
  } else if (lhs.scale_ < rhs.scale_) {
    c = cmp(mpz_class(lhs.raw_ * pow10(rhs.scale_ - lhs.scale_)), rhs.raw_);
  } else {
    c = cmp(lhs.raw_, mpz_class(rhs.raw_ * pow10(lhs.scale_ - rhs.scale_)));
  }
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

mpz_class isqrt(const mpz_class& n) {
  if (n < 0) throw DomainError("square root of a negative number");
  if (n == 0) return 0;

  long exponent = 0;
  double mantissa = mpz_get_d_2exp(&exponent, n.get_mpz_t());
  if (exponent % 2 != 0) {
    mantissa *= 2.0;
    exponent -= 1;
  }
  // Seed strictly above the root so the Newton sequence decreases monotonically.
  const double seed = std::ceil(std::sqrt(mantissa) * (1.0 + 1e-12) * 0x1p52) + 2.0;
  mpz_class x(seed);
  const long shift = exponent / 2 - 52;
  if (shift >= 0) {
    mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  } else {
    mpz_cdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
    x += 1;
  }
  for (;;) {
    mpz_class y = (x + n / x) >> 1;
    if (y >= x) break;
    x = std::move(y);
  }
  return x;
}

HpReal abs(const HpReal& x) { return x.sign() < 0 ? -x : x; }

HpReal sqrt(const HpReal& x) {
  if (x.sign() < 0) throw DomainError("square root of a negative number");
  return HpReal(isqrt(x.raw() * pow10(x.scale())), x.scale());
}

HpReal log(const HpReal& x) {
  if (x.sign() <= 0) throw DomainError("logarithm of a non-positive number");
  const int scale = x.scale();
  const int working = scale + 10;
  HpReal y = x.rescaled(working);

  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, y.raw().get_mpz_t());
  const double log2_estimate =
      std::log2(mantissa) + static_cast<double>(exponent) - working * std::log2(10.0);
  const long k = std::lround(log2_estimate);

  mpz_class reduced = y.raw();
  if (k > 0) {
    mpz_tdiv_q_2exp(reduced.get_mpz_t(), reduced.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  } else if (k < 0) {
    mpz_mul_2exp(reduced.get_mpz_t(), reduced.get_mpz_t(), static_cast<mp_bitcnt_t>(-k));
  }
  const HpReal m(std::move(reduced), working);
  const HpReal one = HpReal::from_int(1, working);
  const HpReal t = (m - one) / (m + one);

  // atanh series; |t| <= 0.18 so the tail after a vanishing term is below one unit.
  const HpReal t2 = t * t;
  HpReal power = t;
  HpReal sum = t;
  for (unsigned long n = 1;; ++n) {
    power = power * t2;
    HpReal term = power.divided_by(2 * n + 1);
    if (term.is_zero()) break;
    sum += term;
  }
  HpReal result = sum.times(2) + ln2_at_scale(working).times(k);
  return result.rescaled(scale);
}

HpReal pi_at_scale(int scale) {
  check_scale(scale);
  thread_local std::map<int, HpReal> cache;
  if (auto it = cache.find(scale); it != cache.end()) return it->second;
  const int working = scale + 5;
  mpz_class pi = 16 * atan_inverse(5, working) - 4 * atan_inverse(239, working);
  HpReal value = HpReal(std::move(pi), working).rescaled(scale);
  cache.emplace(scale, value);
  return value;
}

HpReal ln2_at_scale(int scale) {
  check_scale(scale);
  thread_local std::map<int, HpReal> cache;
  if (auto it = cache.find(scale); it != cache.end()) return it->second;
  const int working = scale + 5;
  mpz_class ln2 = 2 * atanh_inverse(3, working);
  HpReal value = HpReal(std::move(ln2), working).rescaled(scale);
  cache.emplace(scale, value);
  return value;
}

}  // namespace arctan_bounds
