#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nsd/connectivity.hpp"
#include "nsd/digraph.hpp"
#include "nsd/hypernat.hpp"
#include "nsd/index_set.hpp"
#include "nsd/quasi_poly.hpp"

namespace nsd {

/// Parametric digraph sequences with closed-form adapters. Sizes clamp small
/// n (m = max(n,1) or max(n,2)) so every D_n has at least one arc.
///
///   dipath                      vertices 0..m, arc i: i -> i+1        (m = max(n,1))
///   dicycle                     vertices 0..m-1, arc i: i -> i+1 mod m (m = max(n,2))
///   complete_symmetric          vertices 0..m-1, every ordered pair   (m = max(n,2))
///   in_star                     sink 0, arc i: i+1 -> 0, i < m         (m = max(n,2))
///   disconnected_dicycles       two dicycles on 0..m-1 and m..2m-1    (m = max(n,2))
///   one_way_dipath_enlargement  vertices N, arc i: i -> i+1 (constant, infinite)
///   two_way_dipath_enlargement  vertices Z, arc i: i -> i+1 (constant, infinite)
enum class Builtin {
  Dipath,
  Dicycle,
  CompleteSymmetric,
  InStar,
  DisconnectedDicycles,
  OneWayDipathEnlargement,
  TwoWayDipathEnlargement,
};

std::string_view to_string(Builtin b) noexcept;
std::optional<Builtin> parse_builtin(std::string_view name) noexcept;
bool is_enlargement(Builtin b) noexcept;

/// A sequence <D_n> of standard digraphs.
///
/// Vertices are addressed by label and arcs by index, both as integer-valued
/// sequences (QuasiPoly). Every adapter returns an exact IndexSet or sequence
/// describing the per-index answer; values at indices where a selector is
/// invalid are unspecified unless noted.
class DigraphFamily {
 public:
  static DigraphFamily builtin(Builtin b);
  /// Finite prefix of digraphs followed by a fixed finite tail digraph.
  static DigraphFamily explicit_family(std::vector<Digraph> prefix, Digraph tail);
  /// Finite prefix followed by an infinite constant builtin. Throws
  /// Error{NonEventuallyConstantExplicit} if `tail` is not an enlargement.
  static DigraphFamily explicit_family(std::vector<Digraph> prefix, Builtin tail);

  std::optional<Builtin> builtin_kind() const noexcept { return explicit_ ? std::nullopt : kind_; }
  bool is_explicit() const noexcept { return explicit_; }
  const std::vector<Digraph>& explicit_prefix() const noexcept { return prefix_; }
  const std::optional<Digraph>& tail_digraph() const noexcept { return tail_digraph_; }
  /// The builtin that drives indices past the explicit prefix, if any.
  std::optional<Builtin> tail_builtin() const noexcept { return kind_; }
  std::string describe() const;

  // ---- per-index materialization -------------------------------------
  bool finite_at(std::uint64_t n) const;
  /// D_n itself. Throws Error{UnsupportedFamily} when D_n is infinite.
  Digraph digraph_at(std::uint64_t n) const;
  /// For an infinite D_n: the subdigraph on the labels lo..hi (hi > lo).
  Digraph window_at(std::uint64_t n, std::int64_t lo, std::int64_t hi) const;

  // ---- whole-family adapters ------------------------------------------
  IndexSet finite_set() const;
  IndexSet simple_set() const;
  /// {n : classify_digraph(D_n) == g}
  IndexSet grade_set(Grade g) const;
  bool locally_finite() const noexcept { return true; }
  /// Throws Error{NotHyperfinite} when infinitely many D_n are infinite.
  HyperNat vertex_count() const;
  HyperNat arc_count() const;

  // ---- selector adapters ----------------------------------------------
  IndexSet vertex_valid(const QuasiPoly& label) const;
  IndexSet arc_valid(const QuasiPoly& arc) const;
  /// Label of the vertex holding the given ditip of arc(n).
  QuasiPoly endpoint(const QuasiPoly& arc, Polarity p) const;
  /// {n : a dipath u_n ->* v_n exists} (u == v counts as reachable).
  IndexSet reach(const QuasiPoly& u, const QuasiPoly& v) const;
  /// Shortest dipath length, meaningful on reach(u, v).
  QuasiPoly dipath_length(const QuasiPoly& u, const QuasiPoly& v) const;
  IndexSet semireach(const QuasiPoly& u, const QuasiPoly& v) const;
  /// Semipath distance, meaningful on semireach(u, v).
  QuasiPoly distance(const QuasiPoly& u, const QuasiPoly& v) const;
  IndexSet vertex_adjacent(const QuasiPoly& u, const QuasiPoly& v) const;

  friend bool operator==(const DigraphFamily&, const DigraphFamily&) = default;

 private:
  DigraphFamily() = default;

  template <typename Point, typename Tail>
  IndexSet explicit_set(std::initializer_list<const QuasiPoly*> args, Point point, Tail tail) const;
  template <typename Point, typename Tail>
  QuasiPoly explicit_seq(std::initializer_list<const QuasiPoly*> args, Point point, Tail tail) const;
  const Digraph& explicit_at(std::uint64_t n) const;

  bool explicit_ = false;
  std::optional<Builtin> kind_;
  std::vector<Digraph> prefix_;
  std::optional<Digraph> tail_digraph_;
};

}  // namespace nsd
