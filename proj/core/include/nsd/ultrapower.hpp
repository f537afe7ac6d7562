#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "nsd/digraph.hpp"
#include "nsd/family.hpp"
#include "nsd/index_set.hpp"
#include "nsd/quasi_poly.hpp"

namespace nsd {

enum class Sort { Vertex, Arc, Ditip };

std::string_view to_string(Sort s) noexcept;
std::optional<Sort> parse_sort(std::string_view text) noexcept;

/// Polarity of a ditip selector per index; Alternating picks the intip on
/// even n and the outtip on odd n.
enum class PolarityRule { In, Out, Alternating };

std::string_view to_string(PolarityRule r) noexcept;
std::optional<PolarityRule> parse_polarity_rule(std::string_view text) noexcept;

/// {n : the rule yields polarity p at n}
IndexSet polarity_set(PolarityRule rule, Polarity p);

/// A definable choice n -> element of D_n. `values` holds the vertex label,
/// or the arc index for arc and ditip selectors.
struct Selector {
  Sort sort = Sort::Vertex;
  QuasiPoly values;
  PolarityRule polarity = PolarityRule::In;

  static Selector vertex(QuasiPoly label) { return {Sort::Vertex, std::move(label), PolarityRule::In}; }
  static Selector arc(QuasiPoly index) { return {Sort::Arc, std::move(index), PolarityRule::In}; }
  static Selector ditip(QuasiPoly arc, PolarityRule rule) { return {Sort::Ditip, std::move(arc), rule}; }

  /// True when `values` is a single constant with no prefix exceptions.
  bool is_constant() const;

  friend bool operator==(const Selector&, const Selector&) = default;
};

/// The class [x_n] of a selector that is valid for almost every n.
class InternalElement {
 public:
  const DigraphFamily& family() const noexcept { return *family_; }
  const std::shared_ptr<const DigraphFamily>& family_ptr() const noexcept { return family_; }
  const Selector& selector() const noexcept { return selector_; }
  Sort sort() const noexcept { return selector_.sort; }

 private:
  friend InternalElement make_internal_element(std::shared_ptr<const DigraphFamily>, Selector, Sort);
  InternalElement(std::shared_ptr<const DigraphFamily> f, Selector s)
      : family_(std::move(f)), selector_(std::move(s)) {}

  std::shared_ptr<const DigraphFamily> family_;
  Selector selector_;
};

/// {n : the selected element exists in D_n}
IndexSet validity_set(const DigraphFamily& f, const Selector& sel);

/// Throws Error{SortMismatch} when sel.sort != intended and
/// Error{InvalidSelector} when the validity set is not cofinite.
InternalElement make_internal_element(std::shared_ptr<const DigraphFamily> f, Selector sel, Sort intended);

/// Label of the vertex holding the selected ditip, per index.
QuasiPoly tip_owner(const InternalElement& p);

/// {n : x_n == y_n}. Throws Error{FamilyMismatch} or Error{SortMismatch}.
IndexSet equality_set(const InternalElement& x, const InternalElement& y);
bool ns_equal(const InternalElement& x, const InternalElement& y, const FilterOracle& oracle);

/// Intip iff {n : p_n is an intip} is large. Throws Error{SortMismatch}.
Polarity ditip_kind(const InternalElement& p, const FilterOracle& oracle);

/// {n : p_n and q_n lie in the same vertex of D_n}
IndexSet shorted_set(const InternalElement& p, const InternalElement& q);
/// Groups a ditip roster into nonstandard vertices; returns roster indices
/// per class, classes ordered by first member.
std::vector<std::vector<std::size_t>> ns_vertex_partition(const std::vector<InternalElement>& roster,
                                                          const FilterOracle& oracle);

struct IncidenceSets {
  IndexSet inward;   // u_n holds the intip of a_n
  IndexSet outward;  // u_n holds the outtip of a_n
};

IncidenceSets incidence_sets(const InternalElement& u, const InternalElement& a);
Incidence ns_incident(const InternalElement& u, const InternalElement& a, const FilterOracle& oracle);

enum class AdjacencyMode { Vertices, Arcs };

/// Vertex mode: some arc of D_n joins x_n and y_n. Arc mode: x_n != y_n and
/// the two arcs share a vertex.
IndexSet adjacency_set(const InternalElement& x, const InternalElement& y, AdjacencyMode mode);
bool ns_adjacent(const InternalElement& x, const InternalElement& y, AdjacencyMode mode,
                 const FilterOracle& oracle);

/// The standard element of the tail digraph equal to x almost everywhere.
struct StandardElement {
  Sort sort = Sort::Vertex;
  std::int64_t value = 0;  // vertex label or arc index
  Polarity polarity = Polarity::In;

  friend bool operator==(const StandardElement&, const StandardElement&) = default;
};

/// Throws Error{NotFiniteEnlargement} unless the family ends in a fixed
/// finite digraph.
StandardElement standardize(const InternalElement& x, const FilterOracle& oracle);

bool is_hyperfinite(const DigraphFamily& f, const FilterOracle& oracle);

/// Throws Error{FamilyMismatch} unless x and y come from equal families.
void require_same_family(const InternalElement& x, const InternalElement& y);

}  // namespace nsd
