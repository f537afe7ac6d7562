#include "nsd/digraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "nsd/error.hpp"

namespace nsd {

namespace {

std::size_t slot(Ditip t) { return 2 * t.arc + (t.polarity == Polarity::Out ? 1 : 0); }

std::vector<ArcId> normalized_selection(const Digraph& d, const std::vector<ArcId>& arcs) {
  if (arcs.empty()) fail(ErrorCode::EmptySelection, "arc selection is empty");
  std::vector<ArcId> out(arcs);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (ArcId a : out)
    if (a >= d.arc_count()) fail(ErrorCode::UnknownId, "unknown arc a" + std::to_string(a));
  return out;
}

}  // namespace

std::string_view to_string(Polarity p) noexcept { return p == Polarity::In ? "in" : "out"; }

std::string_view to_string(Incidence inc) noexcept {
  switch (inc) {
    case Incidence::None: return "none";
    case Incidence::Inward: return "inward";
    case Incidence::Outward: return "outward";
    case Incidence::Both: return "both";
  }
  return "none";
}

Digraph Digraph::from_arcs(const std::vector<std::pair<std::int64_t, std::int64_t>>& arcs) {
  if (arcs.empty()) fail(ErrorCode::EmptyDigraph, "a digraph needs at least one arc");
  Digraph d;
  d.arc_count_ = arcs.size();
  d.form_ = Form::ArcList;
  d.owner_.assign(2 * arcs.size(), 0);
  std::map<std::int64_t, VertexId> by_label;
  auto place = [&](std::int64_t label, Ditip tip) {
    auto [it, fresh] = by_label.try_emplace(label, d.vertices_.size());
    if (fresh) d.vertices_.push_back(Vertex{it->second, label, {}});
    d.vertices_[it->second].ditips.push_back(tip);
    d.owner_[slot(tip)] = it->second;
  };
  for (ArcId a = 0; a < arcs.size(); ++a) {
    place(arcs[a].first, {a, Polarity::In});
    place(arcs[a].second, {a, Polarity::Out});
  }
  for (auto& v : d.vertices_) std::sort(v.ditips.begin(), v.ditips.end());
  return d;
}

Digraph Digraph::from_partition(std::size_t arc_count, const std::vector<std::vector<Ditip>>& cells) {
  if (arc_count == 0) fail(ErrorCode::EmptyDigraph, "a digraph needs at least one arc");
  Digraph d;
  d.arc_count_ = arc_count;
  d.form_ = Form::Partition;
  std::vector<bool> seen(2 * arc_count, false);
  d.owner_.assign(2 * arc_count, 0);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (cells[c].empty()) fail(ErrorCode::PartitionError, "cell " + std::to_string(c) + " is empty");
    Vertex v{c, static_cast<std::int64_t>(c), cells[c]};
    for (Ditip t : v.ditips) {
      if (t.arc >= arc_count)
        fail(ErrorCode::PartitionError, "cell " + std::to_string(c) + " names unknown arc a" + std::to_string(t.arc));
      if (seen[slot(t)])
        fail(ErrorCode::PartitionError, "ditip " + std::string(to_string(t.polarity)) + " of a" +
                                            std::to_string(t.arc) + " appears in two cells");
      seen[slot(t)] = true;
      d.owner_[slot(t)] = c;
    }
    std::sort(v.ditips.begin(), v.ditips.end());
    d.vertices_.push_back(std::move(v));
  }
  for (std::size_t s = 0; s < seen.size(); ++s)
    if (!seen[s])
      fail(ErrorCode::PartitionError, "ditip " + std::string(s % 2 ? "out" : "in") + " of a" +
                                          std::to_string(s / 2) + " is in no cell");
  return d;
}

void Digraph::check_arc(ArcId a) const {
  if (a >= arc_count_) fail(ErrorCode::UnknownId, "unknown arc a" + std::to_string(a));
}

const Vertex& Digraph::vertex(VertexId v) const {
  if (v >= vertices_.size()) fail(ErrorCode::UnknownId, "unknown vertex v" + std::to_string(v));
  return vertices_[v];
}

Arc Digraph::arc(ArcId a) const {
  check_arc(a);
  return Arc{a};
}

VertexId Digraph::owner(Ditip tip) const {
  check_arc(tip.arc);
  return owner_[slot(tip)];
}

std::optional<VertexId> Digraph::vertex_by_label(std::int64_t label) const {
  for (const auto& v : vertices_)
    if (v.label == label) return v.id;
  return std::nullopt;
}

std::vector<std::pair<std::int64_t, std::int64_t>> Digraph::arc_labels() const {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  out.reserve(arc_count_);
  for (ArcId a = 0; a < arc_count_; ++a) out.emplace_back(vertices_[tail(a)].label, vertices_[head(a)].label);
  return out;
}

bool Digraph::is_simple() const {
  std::set<std::pair<VertexId, VertexId>> seen;
  for (ArcId a = 0; a < arc_count_; ++a) {
    if (is_self_loop(a)) return false;
    if (!seen.emplace(tail(a), head(a)).second) return false;
  }
  return true;
}

UGraph underlying_graph(const Digraph& d) {
  UGraph g;
  for (ArcId a = 0; a < d.arc_count(); ++a) {
    g.branches.push_back({Ditip{a, Polarity::In}, Ditip{a, Polarity::Out}});
    g.branch_ends.push_back({d.tail(a), d.head(a)});
  }
  for (const auto& v : d.vertices()) g.nodes.push_back(v.ditips);
  return g;
}

Incidence incidence(const Digraph& d, VertexId v, ArcId a) {
  d.vertex(v);
  const bool in = d.tail(a) == v;
  const bool out = d.head(a) == v;
  if (in && out) return Incidence::Both;
  if (in) return Incidence::Inward;
  if (out) return Incidence::Outward;
  return Incidence::None;
}

bool vertex_adjacency(const Digraph& d, VertexId u, VertexId v) {
  d.vertex(u);
  d.vertex(v);
  for (ArcId a = 0; a < d.arc_count(); ++a) {
    const VertexId s = d.tail(a), t = d.head(a);
    if ((s == u && t == v) || (s == v && t == u)) return true;
  }
  return false;
}

bool arc_adjacency(const Digraph& d, ArcId a, ArcId c) {
  d.arc(a);
  d.arc(c);
  if (a == c) fail(ErrorCode::SameArc, "arc adjacency needs two distinct arcs");
  const VertexId ends_a[] = {d.tail(a), d.head(a)};
  const VertexId ends_c[] = {d.tail(c), d.head(c)};
  for (VertexId x : ends_a)
    for (VertexId y : ends_c)
      if (x == y) return true;
  return false;
}

Subdigraph induced_subdigraph(const Digraph& d, const std::vector<ArcId>& arcs) {
  Subdigraph s;
  s.arcs = normalized_selection(d, arcs);
  std::set<VertexId> touched;
  for (ArcId a : s.arcs) {
    touched.insert(d.tail(a));
    touched.insert(d.head(a));
  }
  s.vertices.assign(touched.begin(), touched.end());
  return s;
}

Digraph reduced_digraph(const Digraph& d, const std::vector<ArcId>& arcs) {
  const auto selected = normalized_selection(d, arcs);
  std::map<ArcId, ArcId> renumber;
  for (ArcId a : selected) renumber.emplace(a, renumber.size());

  if (d.form() == Digraph::Form::ArcList) {
    std::vector<std::pair<std::int64_t, std::int64_t>> list;
    const auto labels = d.arc_labels();
    for (ArcId a : selected) list.push_back(labels[a]);
    return Digraph::from_arcs(list);
  }
  std::vector<std::vector<Ditip>> cells;
  for (const auto& v : d.vertices()) {
    std::vector<Ditip> cell;
    for (Ditip t : v.ditips)
      if (auto it = renumber.find(t.arc); it != renumber.end()) cell.push_back({it->second, t.polarity});
    if (!cell.empty()) cells.push_back(std::move(cell));
  }
  return Digraph::from_partition(selected.size(), cells);
}

}  // namespace nsd
