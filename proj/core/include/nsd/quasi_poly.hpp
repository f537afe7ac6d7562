#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nsd/index_set.hpp"
#include "nsd/polynomial.hpp"

namespace nsd {

/// An eventually quasi-polynomial integer sequence.
///
/// value(n) = prefix[n] for n < threshold, otherwise tail[n mod period](n).
/// Every tail polynomial is integer-valued on its residue class from the
/// threshold on. Instances are canonical (minimal period, then minimal
/// threshold), so structural equality is pointwise equality.
class QuasiPoly {
 public:
  QuasiPoly();  // the zero sequence

  /// Throws Error{NonIntegralTail} if some tail polynomial takes a
  /// non-integer value on its residue class past the prefix.
  static QuasiPoly make(std::vector<std::int64_t> prefix, std::vector<Polynomial> tail);

  static QuasiPoly constant(std::int64_t value);
  /// n -> a*n + b
  static QuasiPoly affine(Rational a, Rational b);
  static QuasiPoly identity() { return affine(1, 0); }
  /// n -> floor(n / divisor)
  static QuasiPoly floor_div(std::uint64_t divisor);
  /// n -> n mod divisor
  static QuasiPoly mod(std::uint64_t divisor);

  std::int64_t at(std::uint64_t n) const;

  std::uint64_t threshold() const noexcept { return prefix_.size(); }
  std::uint64_t period() const noexcept { return tail_.size(); }
  const std::vector<std::int64_t>& prefix() const noexcept { return prefix_; }
  const std::vector<Polynomial>& tail() const noexcept { return tail_; }
  const Polynomial& tail_for(std::uint64_t n) const { return tail_[n % tail_.size()]; }

  /// Eventual value when the tail is a single constant.
  std::optional<std::int64_t> eventual_constant() const;
  /// True when every tail polynomial is constant (the sequence is bounded).
  bool eventually_periodic() const;
  int max_degree() const;

  QuasiPoly operator-() const;
  friend QuasiPoly operator+(const QuasiPoly& a, const QuasiPoly& b);
  friend QuasiPoly operator-(const QuasiPoly& a, const QuasiPoly& b);
  friend QuasiPoly operator*(const QuasiPoly& a, const QuasiPoly& b);
  friend bool operator==(const QuasiPoly&, const QuasiPoly&) = default;

  std::string to_string() const;

 private:
  QuasiPoly(std::vector<std::int64_t> prefix, std::vector<Polynomial> tail);
  void canonicalize();

  std::vector<std::int64_t> prefix_;
  std::vector<Polynomial> tail_;
};

enum class Relation { Le, Lt, Eq, Ne, Ge, Gt };

std::string_view to_string(Relation rel) noexcept;
std::optional<Relation> parse_relation(std::string_view text) noexcept;

/// The exact set {n : x(n) rel y(n)}; ultimately periodic because each
/// per-class difference polynomial changes sign only finitely often.
IndexSet compare(Relation rel, const QuasiPoly& x, const QuasiPoly& y);

/// n -> cond(n) ? a(n) : b(n)
QuasiPoly select(const IndexSet& cond, const QuasiPoly& a, const QuasiPoly& b);

QuasiPoly min(const QuasiPoly& a, const QuasiPoly& b);
QuasiPoly max(const QuasiPoly& a, const QuasiPoly& b);
/// Truncated subtraction max(a - b, 0).
QuasiPoly monus(const QuasiPoly& a, const QuasiPoly& b);
/// |a - b|
QuasiPoly abs_diff(const QuasiPoly& a, const QuasiPoly& b);

/// Builds a sequence from an explicit function on [0, threshold) together with
/// a known tail. Used by adapters that compute a finite prefix pointwise.
QuasiPoly with_prefix(const QuasiPoly& tail, std::uint64_t threshold,
                      const std::vector<std::int64_t>& values);
IndexSet with_prefix(const IndexSet& tail, std::uint64_t threshold, const std::vector<bool>& values);

}  // namespace nsd
