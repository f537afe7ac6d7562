#include "nsd/quasi_poly.hpp"

#include <algorithm>
#include <sstream>

#include "nsd/error.hpp"

namespace nsd {

namespace {

struct Shape {
  std::vector<std::int64_t> prefix;
  std::vector<Polynomial> tail;
};

// Re-expresses x with a longer prefix and a multiple of its period.
Shape lift(const QuasiPoly& x, std::uint64_t threshold, std::uint64_t period) {
  Shape s;
  s.prefix.reserve(threshold);
  for (std::uint64_t n = 0; n < threshold; ++n) s.prefix.push_back(x.at(n));
  s.tail.reserve(period);
  for (std::uint64_t r = 0; r < period; ++r) s.tail.push_back(x.tail()[r % x.period()]);
  return s;
}

bool holds(Relation rel, std::int64_t lhs, std::int64_t rhs) {
  switch (rel) {
    case Relation::Le: return lhs <= rhs;
    case Relation::Lt: return lhs < rhs;
    case Relation::Eq: return lhs == rhs;
    case Relation::Ne: return lhs != rhs;
    case Relation::Ge: return lhs >= rhs;
    case Relation::Gt: return lhs > rhs;
  }
  return false;
}

std::int64_t to_int(const Rational& r) {
  if (!r.is_integer()) fail(ErrorCode::NonIntegralTail, "tail polynomial is not integer-valued");
  return r.num();
}

}  // namespace

QuasiPoly::QuasiPoly() : tail_{Polynomial{}} {}

QuasiPoly::QuasiPoly(std::vector<std::int64_t> prefix, std::vector<Polynomial> tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
  canonicalize();
}

QuasiPoly QuasiPoly::make(std::vector<std::int64_t> prefix, std::vector<Polynomial> tail) {
  if (tail.empty()) fail(ErrorCode::MalformedSpec, "quasi-polynomial needs at least one tail polynomial");
  const std::uint64_t threshold = prefix.size();
  const std::uint64_t period = tail.size();
  for (std::uint64_t r = 0; r < period; ++r) {
    const Polynomial& poly = tail[r];
    // first member of the class r (mod period) at or past the threshold
    std::uint64_t first = threshold + (r + period - threshold % period) % period;
    // integer values at deg+1 consecutive members imply integer values on
    // the whole progression (forward differences are integral)
    const int checks = std::max(poly.degree(), 0) + 1;
    for (int k = 0; k < checks; ++k) {
      const auto n = static_cast<std::int64_t>(first + static_cast<std::uint64_t>(k) * period);
      if (!poly(n).is_integer())
        fail(ErrorCode::NonIntegralTail, "tail polynomial " + poly.to_string() + " is not integral at n=" +
                                             std::to_string(n));
    }
  }
  return QuasiPoly(std::move(prefix), std::move(tail));
}

QuasiPoly QuasiPoly::constant(std::int64_t value) { return QuasiPoly({}, {Polynomial{value}}); }

QuasiPoly QuasiPoly::affine(Rational a, Rational b) { return make({}, {Polynomial{b, a}}); }

QuasiPoly QuasiPoly::floor_div(std::uint64_t divisor) {
  if (divisor == 0) fail(ErrorCode::MalformedSpec, "floor_div by zero");
  std::vector<Polynomial> tail;
  const Rational inv{1, static_cast<std::int64_t>(divisor)};
  for (std::uint64_t r = 0; r < divisor; ++r)
    tail.push_back(Polynomial{-Rational{static_cast<std::int64_t>(r)} * inv, inv});
  return QuasiPoly({}, std::move(tail));
}

QuasiPoly QuasiPoly::mod(std::uint64_t divisor) {
  if (divisor == 0) fail(ErrorCode::MalformedSpec, "mod by zero");
  std::vector<Polynomial> tail;
  for (std::uint64_t r = 0; r < divisor; ++r) tail.push_back(Polynomial{static_cast<std::int64_t>(r)});
  return QuasiPoly({}, std::move(tail));
}

void QuasiPoly::canonicalize() {
  const std::uint64_t p = tail_.size();
  for (std::uint64_t d = 1; d < p; ++d) {
    if (p % d != 0) continue;
    bool ok = true;
    for (std::uint64_t r = d; r < p && ok; ++r) ok = tail_[r] == tail_[r % d];
    if (ok) {
      tail_.resize(d);
      break;
    }
  }
  while (!prefix_.empty()) {
    const std::uint64_t n = prefix_.size() - 1;
    const Rational v = tail_[n % tail_.size()](static_cast<std::int64_t>(n));
    if (!v.is_integer() || v.num() != prefix_.back()) break;
    prefix_.pop_back();
  }
}

std::int64_t QuasiPoly::at(std::uint64_t n) const {
  if (n < prefix_.size()) return prefix_[n];
  return to_int(tail_[n % tail_.size()](static_cast<std::int64_t>(n)));
}

std::optional<std::int64_t> QuasiPoly::eventual_constant() const {
  if (tail_.size() != 1 || !tail_[0].is_constant()) return std::nullopt;
  return to_int(tail_[0].leading());
}

bool QuasiPoly::eventually_periodic() const {
  return std::all_of(tail_.begin(), tail_.end(), [](const Polynomial& p) { return p.is_constant(); });
}

int QuasiPoly::max_degree() const {
  int d = -1;
  for (const auto& p : tail_) d = std::max(d, p.degree());
  return d;
}

QuasiPoly QuasiPoly::operator-() const {
  std::vector<std::int64_t> prefix;
  for (auto v : prefix_) prefix.push_back(checked_mul(v, -1));
  std::vector<Polynomial> tail;
  for (const auto& p : tail_) tail.push_back(-p);
  return QuasiPoly(std::move(prefix), std::move(tail));
}

template <typename ValueOp, typename PolyOp>
static QuasiPoly combine(const QuasiPoly& a, const QuasiPoly& b, ValueOp vop, PolyOp pop) {
  const std::uint64_t threshold = std::max(a.threshold(), b.threshold());
  const std::uint64_t period = lcm_period(a.period(), b.period());
  Shape sa = lift(a, threshold, period);
  Shape sb = lift(b, threshold, period);
  std::vector<std::int64_t> prefix(threshold);
  for (std::uint64_t n = 0; n < threshold; ++n) prefix[n] = vop(sa.prefix[n], sb.prefix[n]);
  std::vector<Polynomial> tail(period);
  for (std::uint64_t r = 0; r < period; ++r) tail[r] = pop(sa.tail[r], sb.tail[r]);
  return QuasiPoly::make(std::move(prefix), std::move(tail));
}

QuasiPoly operator+(const QuasiPoly& a, const QuasiPoly& b) {
  return combine(
      a, b, [](std::int64_t x, std::int64_t y) { return checked_add(x, y); },
      [](const Polynomial& x, const Polynomial& y) { return x + y; });
}

QuasiPoly operator-(const QuasiPoly& a, const QuasiPoly& b) { return a + (-b); }

QuasiPoly operator*(const QuasiPoly& a, const QuasiPoly& b) {
  return combine(
      a, b, [](std::int64_t x, std::int64_t y) { return checked_mul(x, y); },
      [](const Polynomial& x, const Polynomial& y) { return x * y; });
}

std::string QuasiPoly::to_string() const {
  std::ostringstream os;
  if (!prefix_.empty()) {
    os << "[";
    for (std::size_t i = 0; i < prefix_.size(); ++i) os << (i ? "," : "") << prefix_[i];
    os << "] then ";
  }
  if (tail_.size() == 1) {
    os << tail_[0].to_string();
  } else {
    os << "n mod " << tail_.size() << " {";
    for (std::size_t r = 0; r < tail_.size(); ++r) os << (r ? "; " : "") << r << ": " << tail_[r].to_string();
    os << "}";
  }
  return os.str();
}

std::string_view to_string(Relation rel) noexcept {
  switch (rel) {
    case Relation::Le: return "<=";
    case Relation::Lt: return "<";
    case Relation::Eq: return "=";
    case Relation::Ne: return "!=";
    case Relation::Ge: return ">=";
    case Relation::Gt: return ">";
  }
  return "=";
}

std::optional<Relation> parse_relation(std::string_view text) noexcept {
  if (text == "<=" || text == "le") return Relation::Le;
  if (text == "<" || text == "lt") return Relation::Lt;
  if (text == "=" || text == "==" || text == "eq") return Relation::Eq;
  if (text == "!=" || text == "ne") return Relation::Ne;
  if (text == ">=" || text == "ge") return Relation::Ge;
  if (text == ">" || text == "gt") return Relation::Gt;
  return std::nullopt;
}

IndexSet compare(Relation rel, const QuasiPoly& x, const QuasiPoly& y) {
  const QuasiPoly diff = x - y;
  std::uint64_t stable = diff.threshold();
  for (const auto& poly : diff.tail()) stable = std::max(stable, poly.sign_stable_from());
  std::vector<bool> prefix(stable);
  for (std::uint64_t n = 0; n < stable; ++n) prefix[n] = holds(rel, diff.at(n), 0);
  std::vector<bool> mask(diff.period());
  for (std::uint64_t r = 0; r < diff.period(); ++r) mask[r] = holds(rel, diff.tail()[r].leading_sign(), 0);
  return IndexSet::from_mask(std::move(prefix), std::move(mask));
}

QuasiPoly select(const IndexSet& cond, const QuasiPoly& a, const QuasiPoly& b) {
  const std::uint64_t threshold = std::max({cond.threshold(), a.threshold(), b.threshold()});
  const std::uint64_t period = lcm_period(cond.period(), lcm_period(a.period(), b.period()));
  std::vector<std::int64_t> prefix(threshold);
  for (std::uint64_t n = 0; n < threshold; ++n) prefix[n] = cond.contains(n) ? a.at(n) : b.at(n);
  std::vector<Polynomial> tail(period);
  for (std::uint64_t r = 0; r < period; ++r)
    tail[r] = cond.residue_mask()[r % cond.period()] ? a.tail()[r % a.period()] : b.tail()[r % b.period()];
  return QuasiPoly::make(std::move(prefix), std::move(tail));
}

QuasiPoly min(const QuasiPoly& a, const QuasiPoly& b) { return select(compare(Relation::Le, a, b), a, b); }

QuasiPoly max(const QuasiPoly& a, const QuasiPoly& b) { return select(compare(Relation::Ge, a, b), a, b); }

QuasiPoly monus(const QuasiPoly& a, const QuasiPoly& b) {
  return select(compare(Relation::Ge, a, b), a - b, QuasiPoly{});
}

QuasiPoly abs_diff(const QuasiPoly& a, const QuasiPoly& b) { return monus(a, b) + monus(b, a); }

QuasiPoly with_prefix(const QuasiPoly& tail, std::uint64_t threshold, const std::vector<std::int64_t>& values) {
  if (values.size() != threshold) fail(ErrorCode::MalformedSpec, "prefix override has the wrong length");
  const std::uint64_t lifted = std::max(threshold, tail.threshold());
  Shape s = lift(tail, lifted, tail.period());
  std::copy(values.begin(), values.end(), s.prefix.begin());
  return QuasiPoly::make(std::move(s.prefix), std::move(s.tail));
}

IndexSet with_prefix(const IndexSet& tail, std::uint64_t threshold, const std::vector<bool>& values) {
  if (values.size() != threshold) fail(ErrorCode::MalformedSpec, "prefix override has the wrong length");
  const std::uint64_t lifted = std::max(threshold, tail.threshold());
  std::vector<bool> prefix(lifted);
  for (std::uint64_t n = 0; n < lifted; ++n) prefix[n] = n < threshold ? values[n] : tail.contains(n);
  return IndexSet::from_mask(std::move(prefix), tail.residue_mask());
}

}  // namespace nsd
