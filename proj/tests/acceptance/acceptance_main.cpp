// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every check is exact; sample sizes and horizons are fixed below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nsd/cli.hpp"
#include "nsd/connectivity.hpp"
#include "nsd/error.hpp"
#include "nsd/galaxies.hpp"
#include "nsd/ns_connectivity.hpp"
#include "nsd/ultrapower.hpp"
#include "oracles.hpp"

namespace {

using namespace nsd;
using FamilyPtr = std::shared_ptr<const DigraphFamily>;

// Sample sizes and horizons.
constexpr int kFilterSets = 600;
constexpr int kAlgebraPairs = 600;
constexpr int kEquivalenceTriples = 250;
constexpr int kRandomDigraphs = 300;
constexpr int kMetricTriples = 500;
constexpr int kGalaxyRosters = 40;
constexpr std::uint64_t kPointwiseHorizon = 40;
constexpr std::int64_t kMaxOffset = 9;
const std::uint64_t kTowers[] = {0, 1, 2, 5, 11};

// Collects the first few violations of a criterion.
struct Check {
  int failures = 0;
  std::string first;
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ == 0) first = what;
  }
};

FamilyPtr builtin(Builtin b) { return std::make_shared<const DigraphFamily>(DigraphFamily::builtin(b)); }
FamilyPtr constant_family(const Digraph& d) {
  return std::make_shared<const DigraphFamily>(DigraphFamily::explicit_family({}, d));
}
InternalElement vert(const FamilyPtr& f, QuasiPoly q) {
  return make_internal_element(f, Selector::vertex(std::move(q)), Sort::Vertex);
}
InternalElement arc(const FamilyPtr& f, QuasiPoly q) {
  return make_internal_element(f, Selector::arc(std::move(q)), Sort::Arc);
}
InternalElement tip(const FamilyPtr& f, QuasiPoly q, PolarityRule r) {
  return make_internal_element(f, Selector::ditip(std::move(q), r), Sort::Ditip);
}
QuasiPoly k(std::int64_t c) { return QuasiPoly::constant(c); }
QuasiPoly lin(std::int64_t a, std::int64_t b) { return QuasiPoly::affine(a, b); }

// ---------------------------------------------------------------------------

Check filter_axioms() {
  Check c;
  std::mt19937 rng(101);
  for (std::uint64_t tower : kTowers) {
    const FilterOracle f{tower};
    for (int i = 0; i < kFilterSets; ++i) {
      const auto s = oracle::random_index_set(rng, 12, 16), t = oracle::random_index_set(rng, 12, 16);
      const auto tag = s.to_string() + " / " + t.to_string() + " tower " + std::to_string(tower);
      c.expect(f.decide(s) != f.decide(s.complement()), "dichotomy: " + tag);
      if (f.decide(s)) c.expect(f.decide(s | t), "upward closure: " + tag);
      if (f.decide(s) && f.decide(t)) c.expect(f.decide(s & t), "intersection: " + tag);
      if (s.is_finite()) c.expect(!f.decide(s), "finite accepted: " + tag);
      if (s.is_cofinite()) c.expect(f.decide(s), "cofinite rejected: " + tag);
    }
  }
  return c;
}

Check boolean_algebra() {
  Check c;
  std::mt19937 rng(102);
  for (int i = 0; i < kAlgebraPairs; ++i) {
    const auto a = oracle::random_index_set(rng, 12, 16), b = oracle::random_index_set(rng, 12, 16);
    const std::uint64_t limit = 4 * std::lcm(a.period(), b.period()) + a.threshold() + b.threshold();
    const struct {
      SetOp op;
      std::function<bool(bool, bool)> truth;
    } ops[] = {{SetOp::Union, [](bool x, bool y) { return x || y; }},
               {SetOp::Intersect, [](bool x, bool y) { return x && y; }},
               {SetOp::Difference, [](bool x, bool y) { return x && !y; }}};
    for (const auto& o : ops) {
      const auto r = index_algebra(o.op, a, b);
      c.expect(oracle::agrees(r, [&](std::uint64_t n) { return o.truth(a.contains(n), b.contains(n)); }, limit),
               std::string(to_string(o.op)) + " of " + a.to_string() + ", " + b.to_string());
    }
    c.expect(oracle::agrees(a ^ b, [&](std::uint64_t n) { return a.contains(n) != b.contains(n); }, limit),
             "symmetric difference of " + a.to_string() + ", " + b.to_string());
    const auto na = index_algebra(SetOp::Complement, a);
    c.expect(oracle::agrees(na, [&](std::uint64_t n) { return !a.contains(n); }, limit), "complement " + a.to_string());
  }
  return c;
}

Check equivalence_relations() {
  Check c;
  std::mt19937 rng(103);
  std::uniform_int_distribution<int> slope(0, 2), off(0, 3), len(0, 3), coin(0, 1), pol(0, 2);
  auto random_q = [&] {
    auto q = lin(slope(rng), off(rng));
    if (coin(rng)) q = q + QuasiPoly::mod(2);
    std::vector<std::int64_t> pre(len(rng));
    for (auto& v : pre) v = off(rng);
    return with_prefix(q, pre.size(), pre);
  };
  for (auto b : {Builtin::OneWayDipathEnlargement, Builtin::TwoWayDipathEnlargement}) {
    const auto f = builtin(b);
    for (std::uint64_t tower : {0u, 1u}) {
      const FilterOracle o{tower};
      for (int i = 0; i < kEquivalenceTriples; ++i) {
        const auto x = vert(f, random_q()), y = vert(f, random_q()), z = vert(f, random_q());
        c.expect(ns_equal(x, x, o), "ns_equal reflexive");
        c.expect(ns_equal(x, y, o) == ns_equal(y, x, o), "ns_equal symmetric");
        if (ns_equal(x, y, o) && ns_equal(y, z, o)) c.expect(ns_equal(x, z, o), "ns_equal transitive");
        const auto p = tip(f, random_q(), static_cast<PolarityRule>(pol(rng)));
        const auto q = tip(f, random_q(), static_cast<PolarityRule>(pol(rng)));
        const auto r = tip(f, random_q(), static_cast<PolarityRule>(pol(rng)));
        auto shorted = [&](const auto& u, const auto& v) { return o.decide(shorted_set(u, v)); };
        c.expect(shorted(p, p), "shorting reflexive");
        c.expect(shorted(p, q) == shorted(q, p), "shorting symmetric");
        if (shorted(p, q) && shorted(q, r)) c.expect(shorted(p, r), "shorting transitive");
      }
    }
  }
  return c;
}

// Every ultrapower operation on a constant family against the tail digraph.
void collapse_one(Check& c, const Digraph& d, const std::string& name) {
  const auto f = constant_family(d);
  const FilterOracle o{0};
  std::vector<InternalElement> vs, as;
  for (const auto& v : d.vertices()) vs.push_back(vert(f, k(v.label)));
  for (ArcId a = 0; a < d.arc_count(); ++a) as.push_back(arc(f, k(static_cast<std::int64_t>(a))));
  auto tag = [&](const std::string& op) { return name + ": " + op; };

  c.expect(is_hyperfinite(*f, o), tag("hyperfinite"));
  c.expect(ns_classify_family(*f, o).grade == classify_digraph(d), tag("classify"));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    c.expect(standardize(vs[i], o) == StandardElement{Sort::Vertex, d.vertex(i).label, Polarity::In}, tag("standardize"));
    for (std::size_t j = 0; j < vs.size(); ++j) {
      c.expect(ns_equal(vs[i], vs[j], o) == (i == j), tag("ns_equal"));
      c.expect(ns_adjacent(vs[i], vs[j], AdjacencyMode::Vertices, o) == vertex_adjacency(d, i, j), tag("adjacent"));
      if (i == j) continue;
      c.expect(ns_pair_connectedness(vs[i], vs[j], o).grade == pair_connectedness(d, i, j), tag("pair grade"));
      const auto p = find_dipath(d, i, j);
      if (p) c.expect(ns_dipath_length(vs[i], vs[j], o) == HyperNat::constant(p->length()), tag("dipath length"));
      if (classify_digraph(d) != Grade::Disconnected)
        c.expect(ns_distance(vs[i], vs[j], o) == HyperNat::constant(*standard_distance(d, i, j)), tag("distance"));
    }
    for (ArcId a = 0; a < d.arc_count(); ++a)
      c.expect(ns_incident(vs[i], as[a], o) == incidence(d, i, a), tag("incidence"));
  }
  for (ArcId a = 0; a < d.arc_count(); ++a) {
    c.expect(standardize(as[a], o) == StandardElement{Sort::Arc, static_cast<std::int64_t>(a), Polarity::In},
             tag("standardize arc"));
    for (ArcId b = 0; b < d.arc_count(); ++b)
      if (a != b) c.expect(ns_adjacent(as[a], as[b], AdjacencyMode::Arcs, o) == arc_adjacency(d, a, b), tag("arc adjacency"));
  }
  // Nonstandard vertices built from ditips are exactly the standard vertices.
  std::vector<InternalElement> tips;
  std::vector<VertexId> owners;
  for (ArcId a = 0; a < d.arc_count(); ++a)
    for (auto r : {PolarityRule::In, PolarityRule::Out}) {
      tips.push_back(tip(f, k(static_cast<std::int64_t>(a)), r));
      owners.push_back(d.owner({a, r == PolarityRule::In ? Polarity::In : Polarity::Out}));
    }
  const auto classes = ns_vertex_partition(tips, o);
  c.expect(classes.size() == d.vertex_count(), tag("vertex partition size"));
  for (const auto& cls : classes)
    for (auto m : cls) c.expect(owners[m] == owners[cls.front()], tag("vertex partition"));
  for (auto kind : {ComponentKind::Strong, ComponentKind::Unilateral, ComponentKind::Weak}) {
    std::vector<std::vector<std::size_t>> want;
    for (const auto& comp : components(d, kind)) want.emplace_back(comp.begin(), comp.end());
    c.expect(ns_components(vs, kind, o) == want, tag("components"));
  }
}

Check collapse() {
  Check c;
  collapse_one(c, Digraph::from_arcs({{0, 1}, {1, 2}, {2, 0}}), "C3");
  std::mt19937 rng(104);
  std::uniform_int_distribution<int> label(0, 3);
  std::vector<std::pair<std::int64_t, std::int64_t>> arcs;
  for (int i = 0; i < 5; ++i) arcs.emplace_back(label(rng), label(rng));
  collapse_one(c, Digraph::from_arcs(arcs), "random 5-arc");
  return c;
}

Check bound_table() {
  Check c;
  const FilterOracle o{0};
  const struct {
    Builtin b;
    std::string category;
    std::string inequality;
  } rows[] = {{Builtin::CompleteSymmetric, "complete_symmetric", "q = p(p-1)"},
              {Builtin::Dipath, "strictly_unilateral", "p-1 <= q <= (p-1)^2"},
              {Builtin::InStar, "strictly_weak", "p-1 <= q <= (p-1)(p-2), p >= 3"},
              {Builtin::DisconnectedDicycles, "disconnected", "0 <= q <= (p-1)(p-2)"},
              {Builtin::Dicycle, "strong", "p <= q <= p(p-1)"}};
  for (const auto& row : rows) {
    const auto f = DigraphFamily::builtin(row.b);
    const auto r = check_bounds(f, o);
    c.expect(r.category == row.category, row.category + " category was " + r.category);
    c.expect(r.inequality == row.inequality, row.category + " inequality was " + r.inequality);
    c.expect(r.holds && o.decide(r.witness), row.category + " not decided into the filter");
    if (row.b == Builtin::CompleteSymmetric) c.expect(r.witness == IndexSet::all(), "identity not on all of N");
    if (row.b == Builtin::InStar)
      c.expect(r.p_at_least_three && r.p_at_least_three->is_cofinite(), "p >= 3 not cofinite");
    if (row.b == Builtin::Dipath || row.b == Builtin::Dicycle)
      c.expect(ns_classify_family(f, o).grade == classify_digraph(f.digraph_at(5)), row.category + " classification");
    for (std::uint64_t n = 0; n <= kPointwiseHorizon; ++n) {
      const auto d = f.digraph_at(n);
      const std::int64_t p = d.vertex_count(), q = d.arc_count();
      c.expect(static_cast<std::int64_t>(r.p.at(n)) == p && static_cast<std::int64_t>(r.q.at(n)) == q,
               row.category + " p/q mismatch at " + std::to_string(n));
      bool truth = false;
      switch (row.b) {
        case Builtin::CompleteSymmetric: truth = q == p * (p - 1); break;
        case Builtin::Dipath: truth = p - 1 <= q && q <= (p - 1) * (p - 1); break;
        case Builtin::InStar: truth = p - 1 <= q && q <= (p - 1) * (p - 2) && p >= 3; break;
        case Builtin::DisconnectedDicycles: truth = 0 <= q && q <= (p - 1) * (p - 2); break;
        default: truth = p <= q && q <= p * (p - 1); break;
      }
      // The strictly weak witness covers the p >= 3 clause separately.
      const bool reported = r.witness.contains(n) && (!r.p_at_least_three || r.p_at_least_three->contains(n));
      c.expect(reported == truth, row.category + " witness disagrees at " + std::to_string(n));
    }
  }
  return c;
}

Check standard_vs_oracle() {
  Check c;
  std::mt19937 rng(106);
  for (int i = 0; i < kRandomDigraphs; ++i) {
    const auto d = oracle::random_digraph(rng, 5, 8);
    c.expect(classify_digraph(d) == oracle::classify(d), "classify on digraph " + std::to_string(i));
    c.expect(components(d, ComponentKind::Unilateral) == oracle::components(d, ComponentKind::Unilateral),
             "unilateral components on digraph " + std::to_string(i));
  }
  return c;
}

Check metric() {
  Check c;
  std::mt19937 rng(107);
  // Standard level: per-index distances in weakly connected builtin digraphs.
  const Builtin finite[] = {Builtin::Dipath, Builtin::Dicycle, Builtin::CompleteSymmetric, Builtin::InStar};
  std::uniform_int_distribution<std::uint64_t> index(0, kPointwiseHorizon);
  for (int i = 0; i < kMetricTriples; ++i) {
    const auto d = DigraphFamily::builtin(finite[i % 4]).digraph_at(index(rng));
    std::uniform_int_distribution<VertexId> pick(0, d.vertex_count() - 1);
    const VertexId u = pick(rng), v = pick(rng), w = pick(rng);
    const auto uv = standard_distance(d, u, v), vu = standard_distance(d, v, u);
    const auto uw = standard_distance(d, u, w), wv = standard_distance(d, w, v);
    c.expect(standard_distance(d, u, u) == 0u, "d(u,u) != 0");
    c.expect(uv == vu, "standard symmetry");
    c.expect(uv && uw && wv && *uv <= *uw + *wv, "standard triangle");
  }
  // Internal level: the inequality holds on every index.
  const auto f = builtin(Builtin::TwoWayDipathEnlargement);
  const FilterOracle o{0};
  std::uniform_int_distribution<int> slope(-2, 3), off(-5, 5), den(1, 3);
  auto random_vertex = [&] {
    return vert(f, rng() % 3 ? lin(slope(rng), off(rng)) : QuasiPoly::floor_div(den(rng)) + k(off(rng)));
  };
  for (int i = 0; i < kMetricTriples; ++i) {
    const auto u = random_vertex(), v = random_vertex(), w = random_vertex();
    c.expect(ns_distance(u, u, o) == HyperNat::constant(0), "internal d(u,u) != 0");
    c.expect(ns_distance(u, v, o) == ns_distance(v, u, o), "internal symmetry");
    const auto holds = hypernat_compare(Relation::Le, ns_distance(u, v, o), ns_distance(u, w, o) + ns_distance(w, v, o));
    c.expect(holds == IndexSet::all(), "internal triangle: " + holds.to_string());
  }
  return c;
}

Check galaxy_partition_check() {
  Check c;
  const auto f = builtin(Builtin::OneWayDipathEnlargement);
  const auto anchor = vert(f, k(0));
  const FilterOracle o{0};
  const auto ex = galaxy_partition({vert(f, k(0)), vert(f, k(5)), vert(f, lin(1, 0)), vert(f, lin(1, 2)), vert(f, lin(2, 0))},
                                   {}, anchor, o);
  const bool example = ex.galaxies.size() == 3 && ex.galaxies[0].vertices == std::vector<std::size_t>{0, 1} &&
                       ex.galaxies[1].vertices == std::vector<std::size_t>{2, 3} &&
                       ex.galaxies[2].vertices == std::vector<std::size_t>{4} && ex.galaxies[0].principal &&
                       !ex.galaxies[1].principal && !ex.galaxies[2].principal;
  c.expect(example, "three-galaxy example not reproduced");

  std::mt19937 rng(108);
  std::uniform_int_distribution<int> slope(0, 3), off(0, 6), den(2, 3);
  for (int i = 0; i < kGalaxyRosters; ++i) {
    std::vector<InternalElement> roster;
    for (int j = 0; j < 10; ++j)
      roster.push_back(vert(f, j % 4 == 0 ? QuasiPoly::floor_div(den(rng)) + k(off(rng)) : lin(slope(rng), off(rng))));
    const auto p = galaxy_partition(roster, {}, anchor, o);
    std::vector<int> hits(roster.size(), 0);
    for (const auto& g : p.galaxies) {
      c.expect(!g.vertices.empty(), "empty galaxy");
      for (auto v : g.vertices) ++hits[v];
    }
    c.expect(p.vertices.size() == roster.size(), "roster grew without arcs");
    for (int h : hits) c.expect(h == 1, "galaxies not disjoint and covering");
    for (std::size_t x = 0; x < roster.size(); ++x)
      for (std::size_t y = 0; y < roster.size(); ++y) {
        const auto gx = std::find_if(p.galaxies.begin(), p.galaxies.end(), [&](const Galaxy& g) {
          return std::count(g.vertices.begin(), g.vertices.end(), x) > 0;
        });
        const bool same = std::count(gx->vertices.begin(), gx->vertices.end(), y) > 0;
        c.expect(same == limitedly_distant(roster[x], roster[y], o), "galaxy membership vs limited distance");
      }
  }
  return c;
}

Check witness() {
  Check c;
  const FilterOracle o{0};
  for (auto b : {Builtin::OneWayDipathEnlargement, Builtin::TwoWayDipathEnlargement}) {
    const auto f = builtin(b);
    const auto anchor = vert(f, k(0));
    const auto w = nonprincipal_witness(f, anchor, o);
    c.expect(!limitedly_distant(anchor, w.vertex, o), std::string(to_string(b)) + " witness is principal");
  }
  return c;
}

Check galaxy_window() {
  Check c;
  for (auto b : {Builtin::OneWayDipathEnlargement, Builtin::TwoWayDipathEnlargement}) {
    const auto f = builtin(b);
    const auto anchor = vert(f, k(0));
    const auto chain = galaxy_chain(f, -3, 3);
    c.expect(chain.size() == 7, "chain size");
    for (std::uint64_t tower : {0u, 1u}) {
      const FilterOracle o{tower};
      std::vector<std::vector<Closeness>> rel(chain.size(), std::vector<Closeness>(chain.size(), Closeness::Tied));
      int strict_pairs = 0;
      for (std::size_t a = 0; a < chain.size(); ++a) {
        c.expect(!limitedly_distant(chain[a].vertex, anchor, o), "chain vertex in the principal galaxy");
        for (std::size_t x = 0; x < chain.size(); ++x)
          if (x != a) rel[a][x] = galaxy_order(chain[a].vertex, chain[x].vertex, anchor, o).result;
      }
      for (std::size_t a = 0; a < chain.size(); ++a)
        for (std::size_t x = a + 1; x < chain.size(); ++x) {
          strict_pairs += rel[a][x] == Closeness::ACloser;
          c.expect(rel[x][a] == Closeness::BCloser, "antisymmetry");
          for (std::size_t y = x + 1; y < chain.size(); ++y)
            if (rel[a][x] == Closeness::ACloser && rel[x][y] == Closeness::ACloser)
              c.expect(rel[a][y] == Closeness::ACloser, "transitivity");
        }
      c.expect(strict_pairs == 21, "only " + std::to_string(strict_pairs) + " of 21 pairs strictly ordered");
      for (std::size_t a = 0; a < chain.size(); ++a)
        for (std::size_t x = 0; x < chain.size(); ++x) {
          if (a == x) continue;
          for (std::int64_t s = 0; s <= kMaxOffset; s += 3) {
            const auto va = vert(f, chain[a].vertex.selector().values + k(s));
            const auto vx = vert(f, chain[x].vertex.selector().values + k(kMaxOffset - s));
            c.expect(galaxy_order(va, vx, anchor, o).result == rel[a][x], "representative dependence");
          }
        }
    }
  }
  return c;
}

Check adapters() {
  Check c;
  const Builtin all[] = {Builtin::Dipath,
                         Builtin::Dicycle,
                         Builtin::CompleteSymmetric,
                         Builtin::InStar,
                         Builtin::DisconnectedDicycles,
                         Builtin::OneWayDipathEnlargement,
                         Builtin::TwoWayDipathEnlargement};
  const std::vector<QuasiPoly> sels{k(0),  k(1),  k(3), lin(1, 0), lin(1, 1), QuasiPoly::floor_div(2),
                                    lin(2, 0), monus(lin(1, 0), k(1)), lin(-1, 0)};
  for (auto b : all) {
    const auto f = DigraphFamily::builtin(b);
    const auto name = std::string(to_string(b));
    std::vector<Digraph> ds;
    std::vector<oracle::Matrix> dir, und;
    for (std::uint64_t n = 0; n <= kPointwiseHorizon; ++n) {
      const std::int64_t r = 2 * static_cast<std::int64_t>(kPointwiseHorizon) + 4;
      ds.push_back(f.finite_at(n) ? f.digraph_at(n)
                                  : f.window_at(n, b == Builtin::OneWayDipathEnlargement ? 0 : -r, r));
      dir.push_back(oracle::floyd_warshall(ds.back(), true));
      und.push_back(oracle::floyd_warshall(ds.back(), false));
    }
    if (f.finite_set().is_cofinite()) {
      const auto p = f.vertex_count(), q = f.arc_count();
      for (std::uint64_t n = 0; n <= kPointwiseHorizon; ++n)
        c.expect(p.at(n) == ds[n].vertex_count() && q.at(n) == ds[n].arc_count(), name + " counts at " + std::to_string(n));
    }
    for (const auto& u : sels)
      for (const auto& v : sels) {
        const auto valid = f.vertex_valid(u) & f.vertex_valid(v);
        const auto reach = f.reach(u, v), semi = f.semireach(u, v);
        const auto len = f.dipath_length(u, v), dist = f.distance(u, v);
        for (std::uint64_t n = 0; n <= kPointwiseHorizon; ++n) {
          const auto iu = ds[n].vertex_by_label(u.at(n)), iv = ds[n].vertex_by_label(v.at(n));
          c.expect(valid.contains(n) == (iu && iv), name + " validity");
          if (!iu || !iv) continue;
          const long dd = dir[n][*iu][*iv], ud = und[n][*iu][*iv];
          const auto where = name + " " + u.to_string() + " -> " + v.to_string() + " at " + std::to_string(n);
          c.expect(reach.contains(n) == (dd < oracle::kInf), "reach " + where);
          if (dd < oracle::kInf) c.expect(len.at(n) == dd, "dipath length " + where);
          c.expect(semi.contains(n) == (ud < oracle::kInf), "semireach " + where);
          if (ud < oracle::kInf) c.expect(dist.at(n) == ud, "distance " + where);
        }
      }
  }
  return c;
}

Check determinism() {
  Check c;
  const std::string dir = NSD_TEST_DATA_DIR;
  const std::vector<std::vector<std::string>> cmds{
      {"analyze", dir + "/complete_symmetric.json", "bounds"},
      {"analyze", dir + "/dipath.json", "classify"},
      {"analyze", dir + "/c3_enlargement.json", "classify"},
      {"analyze", "one_way_dipath_enlargement", "classify", "const:0", "n"},
      {"analyze", "in_star", "components", "const:1", "const:2", "const:0", "--kind", "unilateral"},
      {"analyze", "two_way_dipath_enlargement", "distance", "n", "const:-4"},
      {"galaxy", dir + "/one_way.json", dir + "/roster.json", "--anchor", "const:0", "partition"},
      {"galaxy", dir + "/one_way.json", dir + "/roster.json", "order"},
      {"galaxy", dir + "/one_way.json", "--chain", "-2..2", "--anchor", "const:0"},
      {"galaxy", dir + "/one_way.json", "witness", "--anchor", "const:0"},
      {"filter", "decide", R"({"period":2,"residues":[0]})", "--tower", "1"},
      {"filter", "op", "intersect", dir + "/evens.json", dir + "/div3.json"},
      {"--output", "text", "filter", "classify", dir + "/div3.json"},
      {"validate", dir + "/c3_enlargement.json"},
      {"analyze", "one_way_dipath_enlargement", "bounds"}};
  for (const auto& cmd : cmds) {
    std::ostringstream o1, e1, o2, e2;
    const int r1 = cli::run(cmd, o1, e1), r2 = cli::run(cmd, o2, e2);
    std::string line;
    for (const auto& a : cmd) line += a + " ";
    c.expect(r1 == r2 && o1.str() == o2.str() && e1.str() == e2.str(), "differs: " + line);
    c.expect(!o1.str().empty() || !e1.str().empty(), "no output: " + line);
  }
  return c;
}

}  // namespace

int main() {
  const struct {
    int id;
    const char* name;
    Check (*run)();
  } criteria[] = {{1, "filter axioms", filter_axioms},
                  {2, "boolean algebra soundness", boolean_algebra},
                  {3, "equivalence relations", equivalence_relations},
                  {4, "constant-family collapse", collapse},
                  {5, "arc-count bound table", bound_table},
                  {6, "standard connectivity vs oracle", standard_vs_oracle},
                  {7, "metric properties", metric},
                  {8, "galaxy partition", galaxy_partition_check},
                  {9, "nonprincipal witness", witness},
                  {10, "galaxy chain window", galaxy_window},
                  {11, "builtin adapter soundness", adapters},
                  {12, "cli determinism", determinism}};
  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& cr : criteria) {
    Check c;
    try {
      c = cr.run();
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    if (c.failures == 0) {
      std::printf("PASS  %2d  %s\n", cr.id, cr.name);
    } else {
      ++failed;
      std::printf("FAIL  %2d  %s  (%d violations; first: %s)\n", cr.id, cr.name, c.failures, c.first.c_str());
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%zu criteria passed in %.1fs\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria),
              secs);
  return failed == 0 ? 0 : 1;
}
