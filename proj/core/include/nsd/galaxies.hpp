#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "nsd/hypernat.hpp"
#include "nsd/quasi_poly.hpp"
#include "nsd/ultrapower.hpp"

namespace nsd {

/// Internal semipath distance [d(u_n, v_n)]. Throws
/// Error{NotWeaklyConnectedAE} unless almost every D_n is weakly connected.
HyperNat ns_distance(const InternalElement& u, const InternalElement& v, const FilterOracle& oracle);

/// Least standard bound on ns_distance(u, v), if any.
std::optional<std::uint64_t> distance_limit(const InternalElement& u, const InternalElement& v,
                                            const FilterOracle& oracle);
bool limitedly_distant(const InternalElement& u, const InternalElement& v, const FilterOracle& oracle);

struct Galaxy {
  std::size_t id = 0;
  std::vector<std::size_t> vertices;  // indices into GalaxyPartition::vertices
  std::vector<std::size_t> arcs;      // indices into the arc roster
  bool principal = false;
};

/// Vertex roster plus any arc tails that fell outside every roster galaxy
/// (appended after the roster, in arc order).
struct GalaxyPartition {
  std::vector<InternalElement> vertices;
  std::vector<Galaxy> galaxies;
};

/// Limited-distance classes of `roster`, ordered by first member. Each arc
/// joins the galaxy of its tail vertex. Throws Error{AnchorNotStandard}
/// unless the anchor is an eventually constant vertex selector.
GalaxyPartition galaxy_partition(const std::vector<InternalElement>& roster,
                                 const std::vector<InternalElement>& arc_roster, const InternalElement& anchor,
                                 const FilterOracle& oracle);

enum class Closeness { ACloser, BCloser, Tied };

std::string_view to_string(Closeness c) noexcept;

/// Compares two distance sequences to a common anchor: A is closer when
/// dw - dv is unbounded above on the oracle's residue class.
Closeness order_by_distances(const HyperNat& dv, const HyperNat& dw, const FilterOracle& oracle);

struct OrderDecision {
  Closeness result = Closeness::Tied;
  HyperNat dv;           // distance of a's representative to the anchor
  HyperNat dw;           // distance of b's representative to the anchor
  QuasiPoly difference;  // dw - dv
};

/// Orders the galaxies of representatives v and w by closeness to the
/// principal galaxy. Throws Error{PrincipalGalaxy} if either is principal.
OrderDecision galaxy_order(const InternalElement& v, const InternalElement& w, const InternalElement& anchor,
                           const FilterOracle& oracle);

struct ChainLink {
  int j = 0;
  InternalElement vertex;
};

/// Representatives [floor(n / 2^-j)] for j < 0 and [n(j+1)] for j >= 0, in
/// increasing distance from the principal galaxy. Only dipath enlargements
/// are supported (Error{UnsupportedFamily}).
std::vector<ChainLink> galaxy_chain(std::shared_ptr<const DigraphFamily> f, int lo, int hi);

struct NonprincipalWitness {
  InternalElement vertex;
  HyperNat distance;  // to the anchor; unlimited
};

/// A vertex outside the principal galaxy of a locally finite infinite
/// family. Throws Error{NotLocallyFinite} or Error{NotInfinite}.
NonprincipalWitness nonprincipal_witness(std::shared_ptr<const DigraphFamily> f, const InternalElement& anchor,
                                         const FilterOracle& oracle);

}  // namespace nsd
