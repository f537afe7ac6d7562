#include "nsd/rational.hpp"

#include <limits>
#include <numeric>

#include "nsd/error.hpp"

namespace nsd {

namespace {

wide_int gcd128(wide_int a, wide_int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    wide_int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(wide_int v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) fail(ErrorCode::MalformedSpec, "rational with zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(wide_int num, wide_int den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  wide_int g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  if (!fits64(num) || !fits64(den)) fail(ErrorCode::Overflow, "rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

std::int64_t Rational::floor() const noexcept {
  std::int64_t q = num_ / den_;
  if ((num_ % den_ != 0) && (num_ < 0)) --q;
  return q;
}

std::int64_t Rational::ceil() const noexcept {
  std::int64_t q = num_ / den_;
  if ((num_ % den_ != 0) && (num_ > 0)) ++q;
  return q;
}

Rational Rational::abs() const { return num_ < 0 ? -*this : *this; }

Rational Rational::operator-() const {
  return from_wide(-static_cast<wide_int>(num_), den_);
}

Rational& Rational::operator+=(const Rational& rhs) {
  wide_int n = static_cast<wide_int>(num_) * rhs.den_ + static_cast<wide_int>(rhs.num_) * den_;
  wide_int d = static_cast<wide_int>(den_) * rhs.den_;
  return *this = from_wide(n, d);
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  wide_int n = static_cast<wide_int>(num_) * rhs.num_;
  wide_int d = static_cast<wide_int>(den_) * rhs.den_;
  return *this = from_wide(n, d);
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) fail(ErrorCode::MalformedSpec, "division by zero");
  wide_int n = static_cast<wide_int>(num_) * rhs.den_;
  wide_int d = static_cast<wide_int>(den_) * rhs.num_;
  return *this = from_wide(n, d);
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  wide_int l = static_cast<wide_int>(lhs.num_) * rhs.den_;
  wide_int r = static_cast<wide_int>(rhs.num_) * lhs.den_;
  return l <=> r;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) fail(ErrorCode::Overflow, "integer overflow in addition");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) fail(ErrorCode::Overflow, "integer overflow in product");
  return out;
}

std::uint64_t lcm_period(std::uint64_t a, std::uint64_t b) {
  std::uint64_t l = std::lcm(a, b);
  if (l > (1ULL << 20)) fail(ErrorCode::Overflow, "period lcm exceeds supported size");
  return l;
}

}  // namespace nsd
