#include "nsd/hypernat.hpp"

#include "nsd/error.hpp"

namespace nsd {

namespace {

void require_nonnegative(const QuasiPoly& seq) {
  for (std::uint64_t n = 0; n < seq.threshold(); ++n)
    if (seq.prefix()[n] < 0)
      fail(ErrorCode::NegativeTail, "hypernatural prefix is negative at n=" + std::to_string(n));
  const std::uint64_t period = seq.period();
  for (std::uint64_t r = 0; r < period; ++r) {
    const Polynomial& poly = seq.tail()[r];
    if (poly.leading_sign() < 0)
      fail(ErrorCode::NegativeTail, "tail polynomial " + poly.to_string() + " is eventually negative");
    // below the root bound, check the class members one by one
    const std::uint64_t stable = poly.sign_stable_from();
    std::uint64_t n = seq.threshold() + (r + period - seq.threshold() % period) % period;
    for (; n < stable; n += period)
      if (poly(static_cast<std::int64_t>(n)).sign() < 0)
        fail(ErrorCode::NegativeTail, "tail polynomial " + poly.to_string() + " is negative at n=" +
                                          std::to_string(n));
  }
}

}  // namespace

HyperNat HyperNat::make(std::vector<std::int64_t> prefix, std::vector<Polynomial> tail) {
  return from(QuasiPoly::make(std::move(prefix), std::move(tail)));
}

HyperNat HyperNat::from(QuasiPoly seq) {
  require_nonnegative(seq);
  return HyperNat(std::move(seq));
}

HyperNat HyperNat::constant(std::uint64_t value) {
  return HyperNat(QuasiPoly::constant(static_cast<std::int64_t>(value)));
}

HyperNat HyperNat::identity() { return HyperNat(QuasiPoly::identity()); }

std::string_view to_string(ArithOp op) noexcept {
  switch (op) {
    case ArithOp::Add: return "add";
    case ArithOp::Mul: return "mul";
    case ArithOp::Monus: return "monus";
  }
  return "add";
}

HyperNat hypernat_arith(ArithOp op, const HyperNat& x, const HyperNat& y) {
  switch (op) {
    case ArithOp::Add: return HyperNat::from(x.seq() + y.seq());
    case ArithOp::Mul: return HyperNat::from(x.seq() * y.seq());
    case ArithOp::Monus: return HyperNat::from(monus(x.seq(), y.seq()));
  }
  return x;
}

HyperNat operator+(const HyperNat& x, const HyperNat& y) { return hypernat_arith(ArithOp::Add, x, y); }
HyperNat operator*(const HyperNat& x, const HyperNat& y) { return hypernat_arith(ArithOp::Mul, x, y); }

IndexSet hypernat_compare(Relation rel, const HyperNat& x, const HyperNat& y) {
  return compare(rel, x.seq(), y.seq());
}

std::optional<std::uint64_t> hypernat_limit(const HyperNat& x, const FilterOracle& oracle) {
  const Polynomial& tail = x.seq().tail_for(oracle.tower);
  if (!tail.is_constant()) return std::nullopt;  // nonnegative and nonconstant: unbounded
  return static_cast<std::uint64_t>(tail.leading().num());
}

}  // namespace nsd
