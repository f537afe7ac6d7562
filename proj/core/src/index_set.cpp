#include "nsd/index_set.hpp"

#include <algorithm>
#include <sstream>

#include "nsd/error.hpp"
#include "nsd/rational.hpp"

namespace nsd {

namespace {

// Membership of n when both the prefix and the periodic rule are known to be
// of the given shape; used while lifting two sets to a common shape.
bool member(const std::vector<bool>& prefix, const std::vector<bool>& mask, std::uint64_t n) {
  if (n < prefix.size()) return prefix[n];
  return mask[n % mask.size()];
}

template <typename Op>
IndexSet combine(const IndexSet& a, const IndexSet& b, Op op) {
  const std::uint64_t threshold = std::max(a.threshold(), b.threshold());
  const std::uint64_t period = lcm_period(a.period(), b.period());
  std::vector<bool> prefix(threshold);
  for (std::uint64_t n = 0; n < threshold; ++n) prefix[n] = op(a.contains(n), b.contains(n));
  std::vector<bool> mask(period);
  for (std::uint64_t r = 0; r < period; ++r)
    mask[r] = op(a.residue_mask()[r % a.period()], b.residue_mask()[r % b.period()]);
  return IndexSet::from_mask(std::move(prefix), std::move(mask));
}

}  // namespace

IndexSet::IndexSet() : mask_{false} {}

IndexSet::IndexSet(std::vector<bool> prefix, std::vector<bool> mask)
    : prefix_(std::move(prefix)), mask_(std::move(mask)) {
  canonicalize();
}

IndexSet IndexSet::make(std::vector<bool> prefix, std::uint64_t period,
                        const std::vector<std::uint64_t>& residues) {
  if (period == 0) fail(ErrorCode::MalformedSpec, "index set period must be at least 1");
  std::vector<bool> mask(period, false);
  for (auto r : residues) {
    if (r >= period)
      fail(ErrorCode::BadResidue,
           "residue " + std::to_string(r) + " is not below period " + std::to_string(period));
    mask[r] = true;
  }
  return IndexSet(std::move(prefix), std::move(mask));
}

IndexSet IndexSet::from_mask(std::vector<bool> prefix, std::vector<bool> residue_mask) {
  if (residue_mask.empty()) fail(ErrorCode::MalformedSpec, "index set period must be at least 1");
  return IndexSet(std::move(prefix), std::move(residue_mask));
}

IndexSet IndexSet::all() { return IndexSet({}, {true}); }

IndexSet IndexSet::finite(const std::vector<std::uint64_t>& members) {
  std::vector<bool> prefix;
  for (auto m : members) {
    if (m >= prefix.size()) prefix.resize(m + 1, false);
    prefix[m] = true;
  }
  return IndexSet(std::move(prefix), {false});
}

IndexSet IndexSet::tail_from(std::uint64_t from) {
  return IndexSet(std::vector<bool>(from, false), {true});
}

IndexSet IndexSet::residue_class(std::uint64_t residue, std::uint64_t period) {
  return make({}, period, {residue});
}

void IndexSet::canonicalize() {
  // minimal eventual period: the least divisor d of p with mask[r] == mask[r mod d]
  const std::uint64_t p = mask_.size();
  for (std::uint64_t d = 1; d < p; ++d) {
    if (p % d != 0) continue;
    bool ok = true;
    for (std::uint64_t r = d; r < p && ok; ++r) ok = mask_[r] == mask_[r % d];
    if (ok) {
      mask_.resize(d);
      break;
    }
  }
  // absorb prefix bits that already agree with the periodic rule
  while (!prefix_.empty()) {
    const std::uint64_t n = prefix_.size() - 1;
    if (prefix_[n] != mask_[n % mask_.size()]) break;
    prefix_.pop_back();
  }
}

bool IndexSet::contains(std::uint64_t n) const { return member(prefix_, mask_, n); }

std::vector<std::uint64_t> IndexSet::residues() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 0; r < mask_.size(); ++r)
    if (mask_[r]) out.push_back(r);
  return out;
}

bool IndexSet::is_empty() const {
  // canonical: an empty set has no prefix and an all-false mask
  return prefix_.empty() && is_finite();
}

bool IndexSet::is_finite() const {
  return std::none_of(mask_.begin(), mask_.end(), [](bool b) { return b; });
}

bool IndexSet::is_cofinite() const {
  return std::all_of(mask_.begin(), mask_.end(), [](bool b) { return b; });
}

bool IndexSet::is_subset_of(const IndexSet& other) const { return (*this - other).is_empty(); }

IndexSet IndexSet::complement() const {
  std::vector<bool> prefix(prefix_.size());
  for (std::size_t i = 0; i < prefix_.size(); ++i) prefix[i] = !prefix_[i];
  std::vector<bool> mask(mask_.size());
  for (std::size_t i = 0; i < mask_.size(); ++i) mask[i] = !mask_[i];
  return IndexSet(std::move(prefix), std::move(mask));
}

IndexSet operator|(const IndexSet& a, const IndexSet& b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}

IndexSet operator&(const IndexSet& a, const IndexSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && y; });
}

IndexSet operator-(const IndexSet& a, const IndexSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && !y; });
}

IndexSet operator^(const IndexSet& a, const IndexSet& b) {
  return combine(a, b, [](bool x, bool y) { return x != y; });
}

std::string IndexSet::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::uint64_t n = 0; n < prefix_.size(); ++n) {
    if (!prefix_[n]) continue;
    os << (first ? "{" : ",") << n;
    first = false;
  }
  const auto rs = residues();
  if (rs.empty()) return first ? "{}" : os.str() + "}";
  if (!first) os << "} + ";
  std::vector<std::string> rule;
  if (!prefix_.empty()) rule.push_back("n>=" + std::to_string(prefix_.size()));
  if (mask_.size() > 1) {
    std::string r = "n mod " + std::to_string(mask_.size()) + " in {";
    for (std::size_t i = 0; i < rs.size(); ++i) r += (i ? "," : "") + std::to_string(rs[i]);
    rule.push_back(r + "}");
  }
  if (rule.empty()) return os.str() + "all n";
  os << "(" << rule[0] << (rule.size() > 1 ? ", " + rule[1] : "") << ")";
  return os.str();
}

std::string_view to_string(SetKind kind) noexcept {
  switch (kind) {
    case SetKind::Finite: return "finite";
    case SetKind::Cofinite: return "cofinite";
    case SetKind::Mixed: return "mixed";
  }
  return "mixed";
}

std::string_view to_string(SetOp op) noexcept {
  switch (op) {
    case SetOp::Union: return "union";
    case SetOp::Intersect: return "intersect";
    case SetOp::Complement: return "complement";
    case SetOp::Difference: return "difference";
  }
  return "union";
}

std::optional<SetOp> parse_set_op(std::string_view text) noexcept {
  if (text == "union") return SetOp::Union;
  if (text == "intersect") return SetOp::Intersect;
  if (text == "complement") return SetOp::Complement;
  if (text == "difference") return SetOp::Difference;
  return std::nullopt;
}

SetKind classify_index_set(const IndexSet& s) {
  if (s.is_finite()) return SetKind::Finite;
  if (s.is_cofinite()) return SetKind::Cofinite;
  return SetKind::Mixed;
}

IndexSet index_algebra(SetOp op, const IndexSet& lhs, const std::optional<IndexSet>& rhs) {
  if (op == SetOp::Complement) return lhs.complement();
  if (!rhs) fail(ErrorCode::MalformedSpec, std::string(to_string(op)) + " needs two operands");
  switch (op) {
    case SetOp::Union: return lhs | *rhs;
    case SetOp::Intersect: return lhs & *rhs;
    case SetOp::Difference: return lhs - *rhs;
    case SetOp::Complement: break;
  }
  return lhs.complement();
}

bool FilterOracle::decide(const IndexSet& s) const {
  return s.residue_mask()[tower % s.period()];
}

bool ultrafilter_decide(const IndexSet& s, const FilterOracle& oracle) { return oracle.decide(s); }

}  // namespace nsd
