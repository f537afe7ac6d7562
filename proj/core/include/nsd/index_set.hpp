#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nsd {

/// An ultimately periodic subset of the naturals.
///
/// Membership of n below `threshold()` is read from an explicit prefix; from
/// the threshold on it is decided by `n mod period()` against a residue mask.
/// Every instance is kept canonical (minimal period, then minimal threshold),
/// so two sets are equal exactly when they are structurally equal.
class IndexSet {
 public:
  /// The empty set.
  IndexSet();

  /// Builds and canonicalizes. Throws Error{BadResidue} when a residue is not
  /// below `period` and Error{MalformedSpec} when `period` is zero.
  static IndexSet make(std::vector<bool> prefix, std::uint64_t period,
                       const std::vector<std::uint64_t>& residues);
  static IndexSet from_mask(std::vector<bool> prefix, std::vector<bool> residue_mask);

  static IndexSet none() { return {}; }
  static IndexSet all();
  static IndexSet finite(const std::vector<std::uint64_t>& members);
  /// {n : n >= from}
  static IndexSet tail_from(std::uint64_t from);
  /// {n : n mod period == residue}
  static IndexSet residue_class(std::uint64_t residue, std::uint64_t period);

  bool contains(std::uint64_t n) const;

  std::uint64_t threshold() const noexcept { return prefix_.size(); }
  std::uint64_t period() const noexcept { return mask_.size(); }
  const std::vector<bool>& prefix() const noexcept { return prefix_; }
  const std::vector<bool>& residue_mask() const noexcept { return mask_; }
  std::vector<std::uint64_t> residues() const;

  bool is_empty() const;
  bool is_finite() const;
  bool is_cofinite() const;
  bool is_subset_of(const IndexSet& other) const;

  IndexSet complement() const;
  friend IndexSet operator|(const IndexSet& a, const IndexSet& b);
  friend IndexSet operator&(const IndexSet& a, const IndexSet& b);
  friend IndexSet operator-(const IndexSet& a, const IndexSet& b);
  friend IndexSet operator^(const IndexSet& a, const IndexSet& b);
  friend bool operator==(const IndexSet&, const IndexSet&) = default;

  /// Human-readable canonical rendering, e.g. "{0,1,2} + (n>=3, n mod 2 in {0})".
  std::string to_string() const;

 private:
  IndexSet(std::vector<bool> prefix, std::vector<bool> mask);
  void canonicalize();

  std::vector<bool> prefix_;
  std::vector<bool> mask_;
};

enum class SetKind { Finite, Cofinite, Mixed };
enum class SetOp { Union, Intersect, Complement, Difference };

std::string_view to_string(SetKind kind) noexcept;
std::string_view to_string(SetOp op) noexcept;
std::optional<SetOp> parse_set_op(std::string_view text) noexcept;

SetKind classify_index_set(const IndexSet& s);

/// Exact Boolean operation. `rhs` is required for every op except Complement.
IndexSet index_algebra(SetOp op, const IndexSet& lhs, const std::optional<IndexSet>& rhs = std::nullopt);

/// Residue-tower decision rule for a fixed nonprincipal ultrafilter on the
/// ultimately periodic sets: S is large iff the tower constant's residue
/// modulo S's period lies in S's eventual residue set. This is the trace of
/// any ultrafilter that contains every tail of the progressions
/// {n : n = tower (mod m)}, m >= 1.
struct FilterOracle {
  std::uint64_t tower = 0;

  bool decide(const IndexSet& s) const;
};

bool ultrafilter_decide(const IndexSet& s, const FilterOracle& oracle);

}  // namespace nsd
