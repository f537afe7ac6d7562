#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace nsd {

using ArcId = std::size_t;
using VertexId = std::size_t;

enum class Polarity : std::uint8_t { In, Out };

std::string_view to_string(Polarity p) noexcept;

/// A directed tip: the intip or the outtip of one arc.
struct Ditip {
  ArcId arc = 0;
  Polarity polarity = Polarity::In;

  friend auto operator<=>(const Ditip&, const Ditip&) = default;
};

struct Arc {
  ArcId id = 0;
  Ditip intip() const { return {id, Polarity::In}; }
  Ditip outtip() const { return {id, Polarity::Out}; }
};

/// A vertex is a nonempty cell of the partition of all ditips. `label` is the
/// user-facing name (the integer from arc-list input, or the cell index).
struct Vertex {
  VertexId id = 0;
  std::int64_t label = 0;
  std::vector<Ditip> ditips;  // sorted

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// A standard digraph: arcs as ordered ditip pairs plus a partition of the
/// ditips into vertices. Self-loops and parallel arcs are allowed.
///
/// Arcs are numbered by input order. In arc-list form, vertices are numbered
/// by first appearance of their label; in partition form, by cell order.
class Digraph {
 public:
  enum class Form { ArcList, Partition };

  /// Arc (u, v) puts its intip in the vertex labelled u and its outtip in the
  /// vertex labelled v. Throws Error{EmptyDigraph} for an empty list.
  static Digraph from_arcs(const std::vector<std::pair<std::int64_t, std::int64_t>>& arcs);

  /// Throws Error{PartitionError} unless the cells are nonempty, pairwise
  /// disjoint and cover every ditip of the `arc_count` arcs.
  static Digraph from_partition(std::size_t arc_count, const std::vector<std::vector<Ditip>>& cells);

  std::size_t arc_count() const noexcept { return arc_count_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const Vertex& vertex(VertexId v) const;
  Arc arc(ArcId a) const;
  Form form() const noexcept { return form_; }

  VertexId owner(Ditip tip) const;
  VertexId tail(ArcId a) const { return owner({a, Polarity::In}); }
  VertexId head(ArcId a) const { return owner({a, Polarity::Out}); }

  std::optional<VertexId> vertex_by_label(std::int64_t label) const;
  /// Arc-list rendering (tail label, head label) for each arc in order.
  std::vector<std::pair<std::int64_t, std::int64_t>> arc_labels() const;

  bool is_self_loop(ArcId a) const { return tail(a) == head(a); }
  /// No self-loops and no two arcs with the same (tail, head).
  bool is_simple() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  Digraph() = default;
  void check_arc(ArcId a) const;

  std::size_t arc_count_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<VertexId> owner_;  // indexed by 2*arc + polarity
  Form form_ = Form::ArcList;
};

/// Underlying graph: every arc becomes an unordered branch, every vertex a
/// node. Parallel branches are kept.
struct UGraph {
  std::vector<std::array<Ditip, 2>> branches;
  std::vector<std::vector<Ditip>> nodes;
  std::vector<std::array<VertexId, 2>> branch_ends;
};

UGraph underlying_graph(const Digraph& d);

enum class Incidence { None, Inward, Outward, Both };

std::string_view to_string(Incidence inc) noexcept;

/// Inward when v holds a's intip, outward when v holds a's outtip, both for a
/// self-loop at v. Throws Error{UnknownId}.
Incidence incidence(const Digraph& d, VertexId v, ArcId a);

/// Symmetric: some arc runs between u and v in either direction (a self-loop
/// when u == v).
bool vertex_adjacency(const Digraph& d, VertexId u, VertexId v);

/// Some vertex holds a ditip of a and a ditip of c. Throws Error{SameArc}
/// when a == c.
bool arc_adjacency(const Digraph& d, ArcId a, ArcId c);

/// Arc-induced subdigraph {A_s, V_s}; not necessarily a digraph on its own.
struct Subdigraph {
  std::vector<ArcId> arcs;          // sorted
  std::vector<VertexId> vertices;   // sorted

  friend bool operator==(const Subdigraph&, const Subdigraph&) = default;
};

Subdigraph induced_subdigraph(const Digraph& d, const std::vector<ArcId>& arcs);

/// Reduced digraph {A_s, V_r}: touched vertices shrink to the ditips of
/// selected arcs. Selected arcs are renumbered 0.. in increasing original id;
/// the source form is preserved, and so are labels in arc-list form
/// (partition form relabels by surviving cell order).
Digraph reduced_digraph(const Digraph& d, const std::vector<ArcId>& arcs);

}  // namespace nsd
