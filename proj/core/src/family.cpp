#include "nsd/family.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "nsd/error.hpp"

namespace nsd {

namespace {

using Q = QuasiPoly;

constexpr std::array<std::pair<Builtin, std::string_view>, 7> kNames{{
    {Builtin::Dipath, "dipath"},
    {Builtin::Dicycle, "dicycle"},
    {Builtin::CompleteSymmetric, "complete_symmetric"},
    {Builtin::InStar, "in_star"},
    {Builtin::DisconnectedDicycles, "disconnected_dicycles"},
    {Builtin::OneWayDipathEnlargement, "one_way_dipath_enlargement"},
    {Builtin::TwoWayDipathEnlargement, "two_way_dipath_enlargement"},
}};

Q C(std::int64_t k) { return Q::constant(k); }
IndexSet le(const Q& a, const Q& b) { return compare(Relation::Le, a, b); }
IndexSet lt(const Q& a, const Q& b) { return compare(Relation::Lt, a, b); }
IndexSet eq(const Q& a, const Q& b) { return compare(Relation::Eq, a, b); }
IndexSet ge(const Q& a, const Q& b) { return compare(Relation::Ge, a, b); }

// Clamped size parameter m(n).
Q size_seq(Builtin b) {
  if (b == Builtin::Dipath) return Q::make({1}, {Polynomial::identity()});
  return Q::make({2, 2}, {Polynomial::identity()});
}

std::int64_t size_at(Builtin b, std::uint64_t n) {
  const auto m = static_cast<std::int64_t>(n);
  return b == Builtin::Dipath ? std::max<std::int64_t>(m, 1) : std::max<std::int64_t>(m, 2);
}

bool path_like(Builtin b) {
  return b == Builtin::Dipath || is_enlargement(b);
}

IndexSet b_vertex_valid(Builtin b, const Q& u) {
  switch (b) {
    case Builtin::Dipath:
    case Builtin::InStar: return le(C(0), u) & le(u, size_seq(b));
    case Builtin::Dicycle:
    case Builtin::CompleteSymmetric: return le(C(0), u) & lt(u, size_seq(b));
    case Builtin::DisconnectedDicycles: return le(C(0), u) & lt(u, C(2) * size_seq(b));
    case Builtin::OneWayDipathEnlargement: return le(C(0), u);
    case Builtin::TwoWayDipathEnlargement: return IndexSet::all();
  }
  return IndexSet::none();
}

IndexSet b_arc_valid(Builtin b, const Q& a) {
  const Q m = size_seq(b);
  switch (b) {
    case Builtin::Dipath:
    case Builtin::Dicycle:
    case Builtin::InStar: return le(C(0), a) & lt(a, m);
    case Builtin::CompleteSymmetric: return le(C(0), a) & lt(a, m * (m - C(1)));
    case Builtin::DisconnectedDicycles: return le(C(0), a) & lt(a, C(2) * m);
    case Builtin::OneWayDipathEnlargement: return le(C(0), a);
    case Builtin::TwoWayDipathEnlargement: return IndexSet::all();
  }
  return IndexSet::none();
}

// Arc k of the complete symmetric digraph on m vertices: tail k div (m-1),
// head the (k mod (m-1))-th other vertex.
std::pair<std::int64_t, std::int64_t> complete_arc(std::int64_t m, std::int64_t k) {
  if (k < 0 || k >= m * (m - 1)) return {0, 0};
  const std::int64_t t = k / (m - 1), w = k % (m - 1);
  return {t, w < t ? w : w + 1};
}

Q complete_endpoint(const Q& a, Polarity p) {
  if (!a.eventually_periodic())
    fail(ErrorCode::UnsupportedSelector, "complete_symmetric arc selectors must be eventually periodic");
  // Past `limit`, every class value k satisfies k < m - 1, so the arc is (0, k+1).
  std::int64_t kmax = 0;
  std::vector<Polynomial> tail;
  for (const auto& poly : a.tail()) {
    const std::int64_t k = poly(0).floor();
    kmax = std::max(kmax, k);
    tail.push_back(Polynomial::constant(p == Polarity::In ? 0 : k + 1));
  }
  const std::uint64_t limit = std::max<std::uint64_t>(a.threshold(), static_cast<std::uint64_t>(kmax) + 3);
  std::vector<std::int64_t> values(limit);
  for (std::uint64_t n = 0; n < limit; ++n) {
    const auto [t, h] = complete_arc(size_at(Builtin::CompleteSymmetric, n), a.at(n));
    values[n] = p == Polarity::In ? t : h;
  }
  return with_prefix(Q::make({}, tail), limit, values);
}

Q b_endpoint(Builtin b, const Q& a, Polarity p) {
  const Q m = size_seq(b);
  switch (b) {
    case Builtin::Dipath:
    case Builtin::OneWayDipathEnlargement:
    case Builtin::TwoWayDipathEnlargement: return p == Polarity::In ? a : a + C(1);
    case Builtin::Dicycle: return p == Polarity::In ? a : select(lt(a + C(1), m), a + C(1), C(0));
    case Builtin::InStar: return p == Polarity::In ? a + C(1) : C(0);
    case Builtin::DisconnectedDicycles:
      if (p == Polarity::In) return a;
      return select(lt(a, m), select(lt(a + C(1), m), a + C(1), C(0)),
                    select(lt(a + C(1), C(2) * m), a + C(1), m));
    case Builtin::CompleteSymmetric: return complete_endpoint(a, p);
  }
  return C(0);
}

// Both labels on the same dicycle of the disconnected pair.
IndexSet same_cycle(const Q& u, const Q& v, const Q& m) {
  return (lt(u, m) & lt(v, m)) | (ge(u, m) & ge(v, m));
}

// Directed length u -> v around a cycle of length m.
Q cyclic_length(const Q& u, const Q& v, const Q& m) {
  return select(ge(v, u), v - u, v - u + m);
}

IndexSet b_reach(Builtin b, const Q& u, const Q& v) {
  const IndexSet valid = b_vertex_valid(b, u) & b_vertex_valid(b, v);
  if (path_like(b)) return valid & le(u, v);
  switch (b) {
    case Builtin::InStar: return valid & (eq(u, v) | (eq(v, C(0)) & ge(u, C(1))));
    case Builtin::DisconnectedDicycles: return valid & same_cycle(u, v, size_seq(b));
    default: return valid;
  }
}

Q b_dipath_length(Builtin b, const Q& u, const Q& v) {
  if (path_like(b)) return v - u;
  switch (b) {
    case Builtin::Dicycle:
    case Builtin::DisconnectedDicycles: return cyclic_length(u, v, size_seq(b));
    default: return select(eq(u, v), C(0), C(1));
  }
}

IndexSet b_semireach(Builtin b, const Q& u, const Q& v) {
  const IndexSet valid = b_vertex_valid(b, u) & b_vertex_valid(b, v);
  if (b == Builtin::DisconnectedDicycles) return valid & same_cycle(u, v, size_seq(b));
  return valid;
}

Q b_distance(Builtin b, const Q& u, const Q& v) {
  if (path_like(b)) return abs_diff(u, v);
  switch (b) {
    case Builtin::Dicycle:
    case Builtin::DisconnectedDicycles: {
      const Q m = size_seq(b);
      return min(cyclic_length(u, v, m), cyclic_length(v, u, m));
    }
    case Builtin::CompleteSymmetric: return select(eq(u, v), C(0), C(1));
    case Builtin::InStar:
      return select(eq(u, v), C(0), select(eq(u, C(0)) | eq(v, C(0)), C(1), C(2)));
    default: return C(0);
  }
}

Grade b_grade(Builtin b) {
  switch (b) {
    case Builtin::Dicycle:
    case Builtin::CompleteSymmetric: return Grade::Strong;
    case Builtin::InStar: return Grade::StrictlyWeak;
    case Builtin::DisconnectedDicycles: return Grade::Disconnected;
    default: return Grade::StrictlyUnilateral;
  }
}

Q b_vertex_count(Builtin b) {
  const Q m = size_seq(b);
  switch (b) {
    case Builtin::Dipath:
    case Builtin::InStar: return m + C(1);
    case Builtin::DisconnectedDicycles: return C(2) * m;
    default: return m;
  }
}

Q b_arc_count(Builtin b) {
  const Q m = size_seq(b);
  switch (b) {
    case Builtin::CompleteSymmetric: return m * (m - C(1));
    case Builtin::DisconnectedDicycles: return C(2) * m;
    default: return m;
  }
}

Digraph b_materialize(Builtin b, std::uint64_t n) {
  const std::int64_t m = size_at(b, n);
  std::vector<std::pair<std::int64_t, std::int64_t>> arcs;
  switch (b) {
    case Builtin::Dipath:
      for (std::int64_t i = 0; i < m; ++i) arcs.emplace_back(i, i + 1);
      break;
    case Builtin::Dicycle:
      for (std::int64_t i = 0; i < m; ++i) arcs.emplace_back(i, (i + 1) % m);
      break;
    case Builtin::CompleteSymmetric:
      for (std::int64_t k = 0; k < m * (m - 1); ++k) arcs.push_back(complete_arc(m, k));
      break;
    case Builtin::InStar:
      for (std::int64_t i = 0; i < m; ++i) arcs.emplace_back(i + 1, 0);
      break;
    case Builtin::DisconnectedDicycles:
      for (std::int64_t i = 0; i < m; ++i) arcs.emplace_back(i, (i + 1) % m);
      for (std::int64_t i = 0; i < m; ++i) arcs.emplace_back(m + i, m + (i + 1) % m);
      break;
    default:
      fail(ErrorCode::UnsupportedFamily, std::string(to_string(b)) + " has infinite members");
  }
  return Digraph::from_arcs(arcs);
}

Digraph enlargement_window(Builtin b, std::int64_t lo, std::int64_t hi) {
  if (b == Builtin::OneWayDipathEnlargement) lo = std::max<std::int64_t>(lo, 0);
  if (hi <= lo) fail(ErrorCode::MalformedSpec, "window needs hi > lo inside the vertex set");
  std::vector<std::pair<std::int64_t, std::int64_t>> arcs;
  for (std::int64_t i = lo; i < hi; ++i) arcs.emplace_back(i, i + 1);
  return Digraph::from_arcs(arcs);
}

// ---- pointwise evaluation on a finite digraph addressed by labels ----

std::optional<VertexId> at_label(const Digraph& d, const Q& label, std::uint64_t n) {
  return d.vertex_by_label(label.at(n));
}

bool arc_in_range(const Digraph& d, std::int64_t a) {
  return a >= 0 && static_cast<std::uint64_t>(a) < d.arc_count();
}

Distance directed(const Digraph& d, VertexId u, VertexId v) {
  if (u == v) return 0;
  return directed_distances(d, u)[v];
}

Distance undirected(const Digraph& d, VertexId u, VertexId v) {
  if (u == v) return 0;
  return semipath_distances(d, u)[v];
}

}  // namespace

std::string_view to_string(Builtin b) noexcept {
  for (const auto& [k, name] : kNames)
    if (k == b) return name;
  return "unknown";
}

std::optional<Builtin> parse_builtin(std::string_view name) noexcept {
  for (const auto& [k, text] : kNames)
    if (text == name) return k;
  return std::nullopt;
}

bool is_enlargement(Builtin b) noexcept {
  return b == Builtin::OneWayDipathEnlargement || b == Builtin::TwoWayDipathEnlargement;
}

DigraphFamily DigraphFamily::builtin(Builtin b) {
  DigraphFamily f;
  f.kind_ = b;
  return f;
}

DigraphFamily DigraphFamily::explicit_family(std::vector<Digraph> prefix, Digraph tail) {
  DigraphFamily f;
  f.explicit_ = true;
  f.prefix_ = std::move(prefix);
  f.tail_digraph_ = std::move(tail);
  return f;
}

DigraphFamily DigraphFamily::explicit_family(std::vector<Digraph> prefix, Builtin tail) {
  if (!is_enlargement(tail))
    fail(ErrorCode::NonEventuallyConstantExplicit,
         "explicit families must end in a fixed digraph; " + std::string(to_string(tail)) + " varies with n");
  DigraphFamily f;
  f.explicit_ = true;
  f.prefix_ = std::move(prefix);
  f.kind_ = tail;
  return f;
}

std::string DigraphFamily::describe() const {
  if (!explicit_) return std::string(to_string(*kind_));
  std::string tail = tail_digraph_ ? "digraph(" + std::to_string(tail_digraph_->arc_count()) + " arcs)"
                                   : std::string(to_string(*kind_));
  return "explicit(prefix=" + std::to_string(prefix_.size()) + ", tail=" + tail + ")";
}

const Digraph& DigraphFamily::explicit_at(std::uint64_t n) const {
  return n < prefix_.size() ? prefix_[n] : *tail_digraph_;
}

template <typename Point, typename Tail>
IndexSet DigraphFamily::explicit_set(std::initializer_list<const QuasiPoly*> args, Point point, Tail tail) const {
  const std::uint64_t p = prefix_.size();
  if (!tail_digraph_) {
    std::vector<bool> values(p);
    for (std::uint64_t n = 0; n < p; ++n) values[n] = point(prefix_[n], n);
    return with_prefix(tail(*kind_), p, values);
  }
  std::uint64_t limit = p;
  bool constant = true;
  for (const QuasiPoly* q : args) {
    limit = std::max(limit, q->threshold());
    constant = constant && q->eventual_constant().has_value();
  }
  std::vector<bool> values(limit);
  for (std::uint64_t n = 0; n < limit; ++n) values[n] = point(explicit_at(n), n);
  const bool rest = constant && point(*tail_digraph_, limit);
  return with_prefix(rest ? IndexSet::all() : IndexSet::none(), limit, values);
}

template <typename Point, typename Tail>
QuasiPoly DigraphFamily::explicit_seq(std::initializer_list<const QuasiPoly*> args, Point point, Tail tail) const {
  const std::uint64_t p = prefix_.size();
  if (!tail_digraph_) {
    std::vector<std::int64_t> values(p);
    for (std::uint64_t n = 0; n < p; ++n) values[n] = point(prefix_[n], n);
    return with_prefix(tail(*kind_), p, values);
  }
  std::uint64_t limit = p;
  bool constant = true;
  for (const QuasiPoly* q : args) {
    limit = std::max(limit, q->threshold());
    constant = constant && q->eventual_constant().has_value();
  }
  std::vector<std::int64_t> values(limit);
  for (std::uint64_t n = 0; n < limit; ++n) values[n] = point(explicit_at(n), n);
  const std::int64_t rest = constant ? point(*tail_digraph_, limit) : 0;
  return with_prefix(QuasiPoly::constant(rest), limit, values);
}

bool DigraphFamily::finite_at(std::uint64_t n) const {
  if (!explicit_) return !is_enlargement(*kind_);
  return n < prefix_.size() || tail_digraph_.has_value();
}

Digraph DigraphFamily::digraph_at(std::uint64_t n) const {
  if (!explicit_) return b_materialize(*kind_, n);
  if (n < prefix_.size()) return prefix_[n];
  if (tail_digraph_) return *tail_digraph_;
  fail(ErrorCode::UnsupportedFamily, "D_" + std::to_string(n) + " is infinite");
}

Digraph DigraphFamily::window_at(std::uint64_t n, std::int64_t lo, std::int64_t hi) const {
  if (finite_at(n)) fail(ErrorCode::UnsupportedFamily, "D_" + std::to_string(n) + " is finite; use digraph_at");
  return enlargement_window(*kind_, lo, hi);
}

IndexSet DigraphFamily::finite_set() const {
  if (!explicit_) return is_enlargement(*kind_) ? IndexSet::none() : IndexSet::all();
  if (tail_digraph_) return IndexSet::all();
  return IndexSet::finite([&] {
    std::vector<std::uint64_t> idx;
    for (std::uint64_t n = 0; n < prefix_.size(); ++n) idx.push_back(n);
    return idx;
  }());
}

IndexSet DigraphFamily::simple_set() const {
  if (!explicit_) return IndexSet::all();
  return explicit_set({}, [](const Digraph& d, std::uint64_t) { return d.is_simple(); },
                      [](Builtin) { return IndexSet::all(); });
}

IndexSet DigraphFamily::grade_set(Grade g) const {
  auto from_builtin = [g](Builtin b) { return b_grade(b) == g ? IndexSet::all() : IndexSet::none(); };
  if (!explicit_) return from_builtin(*kind_);
  return explicit_set({}, [g](const Digraph& d, std::uint64_t) { return classify_digraph(d) == g; },
                      from_builtin);
}

HyperNat DigraphFamily::vertex_count() const {
  if (!finite_set().is_cofinite()) fail(ErrorCode::NotHyperfinite, describe() + " is not hyperfinite");
  if (!explicit_) return HyperNat::from(b_vertex_count(*kind_));
  return HyperNat::from(explicit_seq(
      {}, [](const Digraph& d, std::uint64_t) { return static_cast<std::int64_t>(d.vertex_count()); },
      [](Builtin) { return QuasiPoly{}; }));
}

HyperNat DigraphFamily::arc_count() const {
  if (!finite_set().is_cofinite()) fail(ErrorCode::NotHyperfinite, describe() + " is not hyperfinite");
  if (!explicit_) return HyperNat::from(b_arc_count(*kind_));
  return HyperNat::from(explicit_seq(
      {}, [](const Digraph& d, std::uint64_t) { return static_cast<std::int64_t>(d.arc_count()); },
      [](Builtin) { return QuasiPoly{}; }));
}

IndexSet DigraphFamily::vertex_valid(const QuasiPoly& label) const {
  if (!explicit_) return b_vertex_valid(*kind_, label);
  return explicit_set(
      {&label}, [&](const Digraph& d, std::uint64_t n) { return at_label(d, label, n).has_value(); },
      [&](Builtin b) { return b_vertex_valid(b, label); });
}

IndexSet DigraphFamily::arc_valid(const QuasiPoly& arc) const {
  if (!explicit_) return b_arc_valid(*kind_, arc);
  return explicit_set(
      {&arc}, [&](const Digraph& d, std::uint64_t n) { return arc_in_range(d, arc.at(n)); },
      [&](Builtin b) { return b_arc_valid(b, arc); });
}

QuasiPoly DigraphFamily::endpoint(const QuasiPoly& arc, Polarity p) const {
  if (!explicit_) return b_endpoint(*kind_, arc, p);
  return explicit_seq(
      {&arc},
      [&](const Digraph& d, std::uint64_t n) -> std::int64_t {
        const std::int64_t a = arc.at(n);
        if (!arc_in_range(d, a)) return 0;
        return d.vertex(d.owner({static_cast<ArcId>(a), p})).label;
      },
      [&](Builtin b) { return b_endpoint(b, arc, p); });
}

IndexSet DigraphFamily::reach(const QuasiPoly& u, const QuasiPoly& v) const {
  if (!explicit_) return b_reach(*kind_, u, v);
  return explicit_set(
      {&u, &v},
      [&](const Digraph& d, std::uint64_t n) {
        const auto iu = at_label(d, u, n), iv = at_label(d, v, n);
        return iu && iv && directed(d, *iu, *iv).has_value();
      },
      [&](Builtin b) { return b_reach(b, u, v); });
}

QuasiPoly DigraphFamily::dipath_length(const QuasiPoly& u, const QuasiPoly& v) const {
  if (!explicit_) return b_dipath_length(*kind_, u, v);
  return explicit_seq(
      {&u, &v},
      [&](const Digraph& d, std::uint64_t n) -> std::int64_t {
        const auto iu = at_label(d, u, n), iv = at_label(d, v, n);
        if (!iu || !iv) return 0;
        return static_cast<std::int64_t>(directed(d, *iu, *iv).value_or(0));
      },
      [&](Builtin b) { return b_dipath_length(b, u, v); });
}

IndexSet DigraphFamily::semireach(const QuasiPoly& u, const QuasiPoly& v) const {
  if (!explicit_) return b_semireach(*kind_, u, v);
  return explicit_set(
      {&u, &v},
      [&](const Digraph& d, std::uint64_t n) {
        const auto iu = at_label(d, u, n), iv = at_label(d, v, n);
        return iu && iv && undirected(d, *iu, *iv).has_value();
      },
      [&](Builtin b) { return b_semireach(b, u, v); });
}

QuasiPoly DigraphFamily::distance(const QuasiPoly& u, const QuasiPoly& v) const {
  if (!explicit_) return b_distance(*kind_, u, v);
  return explicit_seq(
      {&u, &v},
      [&](const Digraph& d, std::uint64_t n) -> std::int64_t {
        const auto iu = at_label(d, u, n), iv = at_label(d, v, n);
        if (!iu || !iv) return 0;
        return static_cast<std::int64_t>(undirected(d, *iu, *iv).value_or(0));
      },
      [&](Builtin b) { return b_distance(b, u, v); });
}

IndexSet DigraphFamily::vertex_adjacent(const QuasiPoly& u, const QuasiPoly& v) const {
  auto closed = [&](Builtin b) { return b_semireach(b, u, v) & eq(b_distance(b, u, v), C(1)); };
  if (!explicit_) return closed(*kind_);
  return explicit_set(
      {&u, &v},
      [&](const Digraph& d, std::uint64_t n) {
        const auto iu = at_label(d, u, n), iv = at_label(d, v, n);
        return iu && iv && vertex_adjacency(d, *iu, *iv);
      },
      closed);
}

}  // namespace nsd
