#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "nsd/digraph.hpp"

namespace nsd {

/// A dipath, semipath or closed variant: v0 a0 v1 ... a(k-1) vk with
/// distinct arcs and (apart from a closed loop's endpoints) distinct vertices.
struct Path {
  std::vector<VertexId> vertices;
  std::vector<ArcId> arcs;

  std::size_t length() const noexcept { return arcs.size(); }
  friend bool operator==(const Path&, const Path&) = default;
};

using Dipath = Path;
using Semipath = Path;
using Diloop = Path;
using Semiloop = Path;

/// Distance in arcs; nullopt means unreachable.
using Distance = std::optional<std::size_t>;

/// Shortest directed path u -> v with lexicographically smallest vertex
/// sequence. Throws Error{SameVertex} for u == v.
std::optional<Dipath> find_dipath(const Digraph& d, VertexId u, VertexId v);
std::optional<Semipath> find_semipath(const Digraph& d, VertexId u, VertexId v);
/// Shortest directed cycle through v; a self-loop gives length 1.
std::optional<Diloop> find_diloop(const Digraph& d, VertexId v);
/// Shortest closed semipath through v.
std::optional<Semiloop> find_semiloop(const Digraph& d, VertexId v);

/// Directed BFS distances from `source` to every vertex.
std::vector<Distance> directed_distances(const Digraph& d, VertexId source);
/// Semipath (underlying graph) BFS distances from `source`.
std::vector<Distance> semipath_distances(const Digraph& d, VertexId source);

/// Minimum semipath length; 0 for u == v.
Distance standard_distance(const Digraph& d, VertexId u, VertexId v);

enum class Grade { Strong, StrictlyUnilateral, StrictlyWeak, Disconnected };

std::string_view to_string(Grade g) noexcept;

/// Strongest applicable grade for a pair. Throws Error{SameVertex}.
Grade pair_connectedness(const Digraph& d, VertexId u, VertexId v);
Grade classify_digraph(const Digraph& d);

enum class ComponentKind { Strong, Unilateral, Weak };

std::string_view to_string(ComponentKind k) noexcept;
std::optional<ComponentKind> parse_component_kind(std::string_view text) noexcept;

/// Strong and weak components partition V; unilateral components are all
/// maximal pairwise-unilateral sets and may overlap. Each set is sorted and
/// the list is sorted lexicographically.
std::vector<std::vector<VertexId>> components(const Digraph& d, ComponentKind kind);

/// Tarjan strongly connected components, in reverse topological order of the
/// condensation.
std::vector<std::vector<VertexId>> strongly_connected_components(const Digraph& d);

/// d(u, v) <= k for every pair of vertices of the subdigraph induced by `arcs`.
bool is_finitely_dispersed(const Digraph& d, const std::vector<ArcId>& arcs, std::size_t k);

}  // namespace nsd
