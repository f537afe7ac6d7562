#include "nsd/ultrapower.hpp"

#include <string>

#include "nsd/error.hpp"

namespace nsd {

namespace {

IndexSet eq(const QuasiPoly& a, const QuasiPoly& b) { return compare(Relation::Eq, a, b); }

void require_sort(const InternalElement& x, Sort s, std::string_view what) {
  if (x.sort() != s)
    fail(ErrorCode::SortMismatch, std::string(what) + " needs a " + std::string(to_string(s)) + ", got a " +
                                      std::string(to_string(x.sort())));
}

}  // namespace

std::string_view to_string(Sort s) noexcept {
  switch (s) {
    case Sort::Vertex: return "vertex";
    case Sort::Arc: return "arc";
    case Sort::Ditip: return "ditip";
  }
  return "vertex";
}

std::optional<Sort> parse_sort(std::string_view text) noexcept {
  if (text == "vertex") return Sort::Vertex;
  if (text == "arc") return Sort::Arc;
  if (text == "ditip") return Sort::Ditip;
  return std::nullopt;
}

std::string_view to_string(PolarityRule r) noexcept {
  switch (r) {
    case PolarityRule::In: return "in";
    case PolarityRule::Out: return "out";
    case PolarityRule::Alternating: return "alternating";
  }
  return "in";
}

std::optional<PolarityRule> parse_polarity_rule(std::string_view text) noexcept {
  if (text == "in") return PolarityRule::In;
  if (text == "out") return PolarityRule::Out;
  if (text == "alternating") return PolarityRule::Alternating;
  return std::nullopt;
}

IndexSet polarity_set(PolarityRule rule, Polarity p) {
  switch (rule) {
    case PolarityRule::In: return p == Polarity::In ? IndexSet::all() : IndexSet::none();
    case PolarityRule::Out: return p == Polarity::Out ? IndexSet::all() : IndexSet::none();
    case PolarityRule::Alternating: return IndexSet::residue_class(p == Polarity::In ? 0 : 1, 2);
  }
  return IndexSet::none();
}

bool Selector::is_constant() const {
  return values.threshold() == 0 && values.eventual_constant().has_value();
}

IndexSet validity_set(const DigraphFamily& f, const Selector& sel) {
  return sel.sort == Sort::Vertex ? f.vertex_valid(sel.values) : f.arc_valid(sel.values);
}

InternalElement make_internal_element(std::shared_ptr<const DigraphFamily> f, Selector sel, Sort intended) {
  if (sel.sort != intended)
    fail(ErrorCode::SortMismatch, "selector is a " + std::string(to_string(sel.sort)) + ", expected a " +
                                      std::string(to_string(intended)));
  const IndexSet valid = validity_set(*f, sel);
  if (!valid.is_cofinite())
    fail(ErrorCode::InvalidSelector, "selector " + sel.values.to_string() + " is valid only on " +
                                         valid.to_string() + " for " + f->describe());
  return InternalElement(std::move(f), std::move(sel));
}

void require_same_family(const InternalElement& x, const InternalElement& y) {
  if (x.family_ptr() != y.family_ptr() && !(x.family() == y.family()))
    fail(ErrorCode::FamilyMismatch, "elements come from different families");
}

QuasiPoly tip_owner(const InternalElement& p) {
  require_sort(p, Sort::Ditip, "tip_owner");
  const auto& f = p.family();
  const auto& arc = p.selector().values;
  return select(polarity_set(p.selector().polarity, Polarity::In), f.endpoint(arc, Polarity::In),
                f.endpoint(arc, Polarity::Out));
}

IndexSet equality_set(const InternalElement& x, const InternalElement& y) {
  require_same_family(x, y);
  if (x.sort() != y.sort()) fail(ErrorCode::SortMismatch, "cannot compare elements of different sorts");
  IndexSet same = eq(x.selector().values, y.selector().values);
  if (x.sort() != Sort::Ditip) return same;
  const PolarityRule rx = x.selector().polarity, ry = y.selector().polarity;
  const IndexSet agree = (polarity_set(rx, Polarity::In) & polarity_set(ry, Polarity::In)) |
                         (polarity_set(rx, Polarity::Out) & polarity_set(ry, Polarity::Out));
  return same & agree;
}

bool ns_equal(const InternalElement& x, const InternalElement& y, const FilterOracle& oracle) {
  return oracle.decide(equality_set(x, y));
}

Polarity ditip_kind(const InternalElement& p, const FilterOracle& oracle) {
  require_sort(p, Sort::Ditip, "ditip_kind");
  return oracle.decide(polarity_set(p.selector().polarity, Polarity::In)) ? Polarity::In : Polarity::Out;
}

IndexSet shorted_set(const InternalElement& p, const InternalElement& q) {
  require_same_family(p, q);
  require_sort(p, Sort::Ditip, "shorting");
  require_sort(q, Sort::Ditip, "shorting");
  return eq(tip_owner(p), tip_owner(q));
}

std::vector<std::vector<std::size_t>> ns_vertex_partition(const std::vector<InternalElement>& roster,
                                                          const FilterOracle& oracle) {
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < roster.size(); ++i) {
    bool placed = false;
    for (auto& cls : classes) {
      if (oracle.decide(shorted_set(roster[cls.front()], roster[i]))) {
        cls.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) {
      if (!classes.empty()) require_same_family(roster.front(), roster[i]);
      require_sort(roster[i], Sort::Ditip, "shorting");
      classes.push_back({i});
    }
  }
  return classes;
}

IncidenceSets incidence_sets(const InternalElement& u, const InternalElement& a) {
  require_same_family(u, a);
  require_sort(u, Sort::Vertex, "incidence");
  require_sort(a, Sort::Arc, "incidence");
  const auto& f = u.family();
  const auto& label = u.selector().values;
  const auto& arc = a.selector().values;
  return {eq(label, f.endpoint(arc, Polarity::In)), eq(label, f.endpoint(arc, Polarity::Out))};
}

Incidence ns_incident(const InternalElement& u, const InternalElement& a, const FilterOracle& oracle) {
  const auto sets = incidence_sets(u, a);
  const bool in = oracle.decide(sets.inward), out = oracle.decide(sets.outward);
  if (in && out) return Incidence::Both;
  if (in) return Incidence::Inward;
  if (out) return Incidence::Outward;
  return Incidence::None;
}

IndexSet adjacency_set(const InternalElement& x, const InternalElement& y, AdjacencyMode mode) {
  require_same_family(x, y);
  const Sort want = mode == AdjacencyMode::Vertices ? Sort::Vertex : Sort::Arc;
  require_sort(x, want, "adjacency");
  require_sort(y, want, "adjacency");
  const auto& f = x.family();
  if (mode == AdjacencyMode::Vertices) return f.vertex_adjacent(x.selector().values, y.selector().values);
  const auto& a = x.selector().values;
  const auto& c = y.selector().values;
  const QuasiPoly ends_a[] = {f.endpoint(a, Polarity::In), f.endpoint(a, Polarity::Out)};
  const QuasiPoly ends_c[] = {f.endpoint(c, Polarity::In), f.endpoint(c, Polarity::Out)};
  IndexSet shared;
  for (const auto& s : ends_a)
    for (const auto& t : ends_c) shared = shared | eq(s, t);
  return shared & compare(Relation::Ne, a, c);
}

bool ns_adjacent(const InternalElement& x, const InternalElement& y, AdjacencyMode mode,
                 const FilterOracle& oracle) {
  return oracle.decide(adjacency_set(x, y, mode));
}

StandardElement standardize(const InternalElement& x, const FilterOracle& oracle) {
  const auto& f = x.family();
  if (!f.tail_digraph())
    fail(ErrorCode::NotFiniteEnlargement, f.describe() + " is not the enlargement of a finite digraph");
  // Validity on a fixed finite tail forces an eventually constant selector.
  const auto value = x.selector().values.eventual_constant();
  if (!value) fail(ErrorCode::InvalidSelector, "selector is not eventually constant");
  StandardElement s{x.sort(), *value, Polarity::In};
  if (x.sort() == Sort::Ditip) s.polarity = ditip_kind(x, oracle);
  return s;
}

bool is_hyperfinite(const DigraphFamily& f, const FilterOracle& oracle) {
  return oracle.decide(f.finite_set());
}

}  // namespace nsd
