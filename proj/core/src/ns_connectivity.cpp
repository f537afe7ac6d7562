#include "nsd/ns_connectivity.hpp"

#include <algorithm>
#include <functional>

#include "nsd/error.hpp"

namespace nsd {

namespace {

void require_vertex(const InternalElement& x) {
  if (x.sort() != Sort::Vertex) fail(ErrorCode::SortMismatch, "connectivity queries need internal vertices");
}

std::vector<std::vector<std::size_t>> classes_of(std::size_t n,
                                                 const std::function<bool(std::size_t, std::size_t)>& related) {
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < n; ++i) {
    auto it = std::find_if(classes.begin(), classes.end(), [&](const auto& c) { return related(c.front(), i); });
    if (it != classes.end()) it->push_back(i);
    else classes.push_back({i});
  }
  return classes;
}

void maximal_cliques(const std::vector<std::vector<bool>>& adj, std::vector<std::size_t>& r,
                     std::vector<std::size_t> p, std::vector<std::size_t> x,
                     std::vector<std::vector<std::size_t>>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  while (!p.empty()) {
    const std::size_t v = p.front();
    std::vector<std::size_t> p2, x2;
    for (std::size_t w : p)
      if (adj[v][w]) p2.push_back(w);
    for (std::size_t w : x)
      if (adj[v][w]) x2.push_back(w);
    r.push_back(v);
    maximal_cliques(adj, r, p2, x2, out);
    r.pop_back();
    p.erase(p.begin());
    x.push_back(v);
  }
}

}  // namespace

Grade grade_from_sets(const IndexSet& strong, const IndexSet& unilateral, const IndexSet& weak,
                      const FilterOracle& oracle) {
  if (oracle.decide(strong)) return Grade::Strong;
  if (oracle.decide(unilateral)) return Grade::StrictlyUnilateral;
  if (oracle.decide(weak)) return Grade::StrictlyWeak;
  return Grade::Disconnected;
}

NsClassification ns_pair_connectedness(const InternalElement& u, const InternalElement& v,
                                       const FilterOracle& oracle) {
  require_vertex(u);
  require_vertex(v);
  if (ns_equal(u, v, oracle)) fail(ErrorCode::EqualVertices, "pair connectedness needs two distinct vertices");
  const auto& f = u.family();
  const auto& a = u.selector().values;
  const auto& b = v.selector().values;
  NsClassification c;
  c.forward = f.reach(a, b);
  c.backward = f.reach(b, a);
  c.strong = *c.forward & *c.backward;
  c.unilateral = *c.forward | *c.backward;
  c.weak = f.semireach(a, b);
  c.grade = grade_from_sets(c.strong, c.unilateral, c.weak, oracle);
  return c;
}

HyperNat ns_dipath_length(const InternalElement& u, const InternalElement& v, const FilterOracle& oracle) {
  require_vertex(u);
  require_vertex(v);
  require_same_family(u, v);
  const auto& f = u.family();
  const IndexSet reach = f.reach(u.selector().values, v.selector().values);
  if (!oracle.decide(reach))
    fail(ErrorCode::NotReachable, "no dipath for almost all n; reach set is " + reach.to_string());
  return HyperNat::from(select(reach, f.dipath_length(u.selector().values, v.selector().values),
                               QuasiPoly::constant(0)));
}

NsClassification ns_classify_family(const DigraphFamily& f, const FilterOracle& oracle) {
  NsClassification c;
  c.strong = f.grade_set(Grade::Strong);
  c.unilateral = c.strong | f.grade_set(Grade::StrictlyUnilateral);
  c.weak = c.unilateral | f.grade_set(Grade::StrictlyWeak);
  c.grade = grade_from_sets(c.strong, c.unilateral, c.weak, oracle);
  return c;
}

std::vector<std::vector<std::size_t>> ns_components(const std::vector<InternalElement>& roster,
                                                    ComponentKind kind, const FilterOracle& oracle) {
  const std::size_t n = roster.size();
  for (const auto& x : roster) {
    require_vertex(x);
    require_same_family(roster.front(), x);
  }
  // related[i][j]: i and j are connected at the requested grade (or equal).
  std::vector<std::vector<bool>> related(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    related[i][i] = true;
    for (std::size_t j = i + 1; j < n; ++j) {
      bool r = ns_equal(roster[i], roster[j], oracle);
      if (!r) {
        const Grade g = ns_pair_connectedness(roster[i], roster[j], oracle).grade;
        switch (kind) {
          case ComponentKind::Strong: r = g == Grade::Strong; break;
          case ComponentKind::Unilateral: r = g == Grade::Strong || g == Grade::StrictlyUnilateral; break;
          case ComponentKind::Weak: r = g != Grade::Disconnected; break;
        }
      }
      related[i][j] = related[j][i] = r;
    }
  }
  std::vector<std::vector<std::size_t>> out;
  if (kind == ComponentKind::Unilateral) {
    std::vector<std::size_t> r, p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    std::vector<std::vector<bool>> adj = related;
    for (std::size_t i = 0; i < n; ++i) adj[i][i] = false;
    maximal_cliques(adj, r, p, {}, out);
  } else {
    out = classes_of(n, [&](std::size_t a, std::size_t b) { return related[a][b]; });
  }
  for (auto& s : out) std::sort(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

BoundsReport check_bounds(const DigraphFamily& f, const FilterOracle& oracle) {
  if (!oracle.decide(f.finite_set())) fail(ErrorCode::NotHyperfinite, f.describe() + " is not hyperfinite");
  if (!oracle.decide(f.simple_set()))
    fail(ErrorCode::NotSimple, f.describe() + " has self-loops or parallel arcs for almost all n");

  BoundsReport r;
  r.p = f.vertex_count();
  r.q = f.arc_count();
  const QuasiPoly& p = r.p.seq();
  const QuasiPoly& q = r.q.seq();
  const QuasiPoly one = QuasiPoly::constant(1);
  const QuasiPoly p1 = monus(p, one);
  const QuasiPoly p2 = monus(p, QuasiPoly::constant(2));
  auto le = [](const QuasiPoly& a, const QuasiPoly& b) { return compare(Relation::Le, a, b); };

  if (f.builtin_kind() == Builtin::CompleteSymmetric) {
    r.category = "complete_symmetric";
    r.inequality = "q = p(p-1)";
    r.witness = compare(Relation::Eq, q, p * p1);
  } else {
    const Grade g = ns_classify_family(f, oracle).grade;
    r.category = std::string(to_string(g));
    switch (g) {
      case Grade::Disconnected:
        r.inequality = "0 <= q <= (p-1)(p-2)";
        r.witness = le(q, p1 * p2);
        break;
      case Grade::StrictlyWeak:
        r.inequality = "p-1 <= q <= (p-1)(p-2), p >= 3";
        r.p_at_least_three = compare(Relation::Ge, p, QuasiPoly::constant(3));
        r.witness = le(p1, q) & le(q, p1 * p2) & *r.p_at_least_three;
        break;
      case Grade::StrictlyUnilateral:
        r.inequality = "p-1 <= q <= (p-1)^2";
        r.witness = le(p1, q) & le(q, p1 * p1);
        break;
      case Grade::Strong:
        r.inequality = "p <= q <= p(p-1)";
        r.witness = le(p, q) & le(q, p * p1);
        break;
    }
  }
  r.holds = oracle.decide(r.witness);
  return r;
}

}  // namespace nsd
