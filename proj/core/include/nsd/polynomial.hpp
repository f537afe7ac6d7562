#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "nsd/rational.hpp"

namespace nsd {

/// Univariate polynomial in the index variable n with rational coefficients.
/// Coefficients are stored lowest degree first with no trailing zeros, so
/// structural equality is polynomial equality.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> coeffs);
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(Rational c) { return Polynomial{c}; }
  static Polynomial identity() { return Polynomial{Rational{0}, Rational{1}}; }

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  Rational leading() const { return coeffs_.empty() ? Rational{0} : coeffs_.back(); }
  int leading_sign() const { return leading().sign(); }

  Rational operator()(std::int64_t n) const;

  /// Smallest bound b >= 0 such that sign(p(n)) == leading_sign() for every
  /// integer n >= b (Cauchy root bound).
  std::uint64_t sign_stable_from() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace nsd
