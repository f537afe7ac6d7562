#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nsd/index_set.hpp"
#include "nsd/quasi_poly.hpp"

namespace nsd {

/// A hypernatural number represented by an eventually quasi-polynomial
/// sequence of naturals. Lengths, counts and distances of internal objects
/// all live here.
class HyperNat {
 public:
  HyperNat() = default;  // zero

  /// Throws Error{NegativeTail} or Error{NonIntegralTail}.
  static HyperNat make(std::vector<std::int64_t> prefix, std::vector<Polynomial> tail);
  static HyperNat from(QuasiPoly seq);
  static HyperNat constant(std::uint64_t value);
  static HyperNat identity();

  const QuasiPoly& seq() const noexcept { return seq_; }
  std::uint64_t at(std::uint64_t n) const { return static_cast<std::uint64_t>(seq_.at(n)); }

  friend bool operator==(const HyperNat&, const HyperNat&) = default;
  std::string to_string() const { return seq_.to_string(); }

 private:
  explicit HyperNat(QuasiPoly seq) : seq_(std::move(seq)) {}
  QuasiPoly seq_;
};

enum class ArithOp { Add, Mul, Monus };

std::string_view to_string(ArithOp op) noexcept;

HyperNat hypernat_arith(ArithOp op, const HyperNat& x, const HyperNat& y);
HyperNat operator+(const HyperNat& x, const HyperNat& y);
HyperNat operator*(const HyperNat& x, const HyperNat& y);

IndexSet hypernat_compare(Relation rel, const HyperNat& x, const HyperNat& y);

/// Least standard k with {n : x(n) <= k} in the ultrafilter, if x is limited.
/// Decided from the tail polynomial on the oracle's residue class.
std::optional<std::uint64_t> hypernat_limit(const HyperNat& x, const FilterOracle& oracle);

}  // namespace nsd
