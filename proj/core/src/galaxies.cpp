#include "nsd/galaxies.hpp"

#include <string>

#include "nsd/connectivity.hpp"
#include "nsd/error.hpp"

namespace nsd {

namespace {

void require_standard(const InternalElement& anchor) {
  if (anchor.sort() != Sort::Vertex || !anchor.selector().values.eventual_constant())
    fail(ErrorCode::AnchorNotStandard, "anchor must be a constant vertex selector, got " +
                                           anchor.selector().values.to_string());
}

}  // namespace

HyperNat ns_distance(const InternalElement& u, const InternalElement& v, const FilterOracle& oracle) {
  require_same_family(u, v);
  if (u.sort() != Sort::Vertex || v.sort() != Sort::Vertex)
    fail(ErrorCode::SortMismatch, "distance needs internal vertices");
  const auto& f = u.family();
  if (oracle.decide(f.grade_set(Grade::Disconnected)))
    fail(ErrorCode::NotWeaklyConnectedAE, f.describe() + " is disconnected for almost all n");
  const auto& a = u.selector().values;
  const auto& b = v.selector().values;
  return HyperNat::from(select(f.semireach(a, b), f.distance(a, b), QuasiPoly::constant(0)));
}

std::optional<std::uint64_t> distance_limit(const InternalElement& u, const InternalElement& v,
                                            const FilterOracle& oracle) {
  return hypernat_limit(ns_distance(u, v, oracle), oracle);
}

bool limitedly_distant(const InternalElement& u, const InternalElement& v, const FilterOracle& oracle) {
  return distance_limit(u, v, oracle).has_value();
}

GalaxyPartition galaxy_partition(const std::vector<InternalElement>& roster,
                                 const std::vector<InternalElement>& arc_roster, const InternalElement& anchor,
                                 const FilterOracle& oracle) {
  require_standard(anchor);
  GalaxyPartition out{roster, {}};
  auto place = [&](std::size_t idx) -> std::size_t {
    const auto& x = out.vertices[idx];
    for (auto& g : out.galaxies)
      if (limitedly_distant(out.vertices[g.vertices.front()], x, oracle)) {
        g.vertices.push_back(idx);
        return g.id;
      }
    Galaxy g;
    g.id = out.galaxies.size();
    g.vertices = {idx};
    g.principal = limitedly_distant(anchor, x, oracle);
    out.galaxies.push_back(std::move(g));
    return out.galaxies.back().id;
  };
  for (std::size_t i = 0; i < roster.size(); ++i) place(i);

  for (std::size_t k = 0; k < arc_roster.size(); ++k) {
    const auto& a = arc_roster[k];
    if (a.sort() != Sort::Arc) fail(ErrorCode::SortMismatch, "arc roster entries must be arcs");
    require_same_family(anchor, a);
    auto tail = make_internal_element(a.family_ptr(),
                                      Selector::vertex(a.family().endpoint(a.selector().values, Polarity::In)),
                                      Sort::Vertex);
    // Both ends of an arc are at distance <= 1, so the tail decides the galaxy.
    std::optional<std::size_t> home;
    for (const auto& g : out.galaxies)
      if (limitedly_distant(out.vertices[g.vertices.front()], tail, oracle)) {
        home = g.id;
        break;
      }
    if (!home) {
      out.vertices.push_back(std::move(tail));
      home = place(out.vertices.size() - 1);
    }
    out.galaxies[*home].arcs.push_back(k);
  }
  return out;
}

std::string_view to_string(Closeness c) noexcept {
  switch (c) {
    case Closeness::ACloser: return "a_closer";
    case Closeness::BCloser: return "b_closer";
    case Closeness::Tied: return "tied";
  }
  return "tied";
}

Closeness order_by_distances(const HyperNat& dv, const HyperNat& dw, const FilterOracle& oracle) {
  const QuasiPoly diff = dw.seq() - dv.seq();
  const Polynomial& tail = diff.tail_for(oracle.tower);
  if (tail.degree() < 1) return Closeness::Tied;
  return tail.leading_sign() > 0 ? Closeness::ACloser : Closeness::BCloser;
}

OrderDecision galaxy_order(const InternalElement& v, const InternalElement& w, const InternalElement& anchor,
                           const FilterOracle& oracle) {
  require_standard(anchor);
  OrderDecision d;
  d.dv = ns_distance(anchor, v, oracle);
  d.dw = ns_distance(anchor, w, oracle);
  if (hypernat_limit(d.dv, oracle) || hypernat_limit(d.dw, oracle))
    fail(ErrorCode::PrincipalGalaxy, "galaxies are ordered only away from the principal galaxy");
  d.difference = d.dw.seq() - d.dv.seq();
  d.result = order_by_distances(d.dv, d.dw, oracle);
  return d;
}

std::vector<ChainLink> galaxy_chain(std::shared_ptr<const DigraphFamily> f, int lo, int hi) {
  const auto kind = f->tail_builtin();
  if (!kind || !is_enlargement(*kind))
    fail(ErrorCode::UnsupportedFamily, "galaxy chains are built for dipath enlargements, not " + f->describe());
  if (hi < lo) fail(ErrorCode::MalformedSpec, "empty chain range");
  if (lo < -62) fail(ErrorCode::Overflow, "chain range too deep");
  std::vector<ChainLink> chain;
  for (int j = lo; j <= hi; ++j) {
    const QuasiPoly label = j >= 0 ? QuasiPoly::affine(j + 1, 0) : QuasiPoly::floor_div(std::uint64_t{1} << -j);
    chain.push_back({j, make_internal_element(f, Selector::vertex(label), Sort::Vertex)});
  }
  return chain;
}

NonprincipalWitness nonprincipal_witness(std::shared_ptr<const DigraphFamily> f, const InternalElement& anchor,
                                         const FilterOracle& oracle) {
  require_standard(anchor);
  if (!f->locally_finite()) fail(ErrorCode::NotLocallyFinite, f->describe() + " is not locally finite");
  if (oracle.decide(f->finite_set()))
    fail(ErrorCode::NotInfinite, f->describe() + " is finite for almost all n");
  auto v = make_internal_element(f, Selector::vertex(QuasiPoly::identity()), Sort::Vertex);
  HyperNat d = ns_distance(anchor, v, oracle);
  if (hypernat_limit(d, oracle))
    fail(ErrorCode::UnsupportedFamily, "no unlimited witness of the form [n] for " + f->describe());
  return {std::move(v), std::move(d)};
}

}  // namespace nsd
