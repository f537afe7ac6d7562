#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nsd/connectivity.hpp"
#include "nsd/hypernat.hpp"
#include "nsd/index_set.hpp"
#include "nsd/ultrapower.hpp"

namespace nsd {

/// Grade of an internal pair or a whole family with the index sets behind it.
/// The grade is the first of strong / unilateral / weak whose set is large,
/// reported as Strong / StrictlyUnilateral / StrictlyWeak, else Disconnected.
struct NsClassification {
  Grade grade = Grade::Disconnected;
  IndexSet strong;
  IndexSet unilateral;
  IndexSet weak;
  std::optional<IndexSet> forward;   // reach(u -> v), pair queries only
  std::optional<IndexSet> backward;  // reach(v -> u), pair queries only
};

Grade grade_from_sets(const IndexSet& strong, const IndexSet& unilateral, const IndexSet& weak,
                      const FilterOracle& oracle);

/// Throws Error{EqualVertices} when u and v are the same internal vertex.
NsClassification ns_pair_connectedness(const InternalElement& u, const InternalElement& v,
                                       const FilterOracle& oracle);

/// Hyperfinite dipath length [d(u_n -> v_n)], 0 where no dipath exists.
/// Throws Error{NotReachable} unless reach(u -> v) is large.
HyperNat ns_dipath_length(const InternalElement& u, const InternalElement& v, const FilterOracle& oracle);

NsClassification ns_classify_family(const DigraphFamily& f, const FilterOracle& oracle);

/// Components over a finite roster of internal vertices, as roster indices.
/// Strong and weak results partition the roster; unilateral results are all
/// maximal pairwise-unilateral subsets.
std::vector<std::vector<std::size_t>> ns_components(const std::vector<InternalElement>& roster,
                                                    ComponentKind kind, const FilterOracle& oracle);

struct BoundsReport {
  HyperNat p;  // vertex count
  HyperNat q;  // arc count
  std::string category;
  std::string inequality;
  IndexSet witness;
  bool holds = false;
  std::optional<IndexSet> p_at_least_three;  // strictly weak families only
};

/// Arc-count bounds for a hyperfinite, almost-everywhere simple family.
/// Throws Error{NotHyperfinite} or Error{NotSimple}.
BoundsReport check_bounds(const DigraphFamily& f, const FilterOracle& oracle);

}  // namespace nsd
