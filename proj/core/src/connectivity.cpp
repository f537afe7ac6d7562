#include "nsd/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <set>
#include <string>

#include "nsd/error.hpp"

namespace nsd {

namespace {

struct Step {
  VertexId to;
  ArcId arc;
  friend auto operator<=>(const Step&, const Step&) = default;
};

// Neighbour lists sorted by (vertex, arc) so that greedy walks pick the
// lexicographically smallest continuation.
struct Adjacency {
  std::vector<std::vector<Step>> out, in, both;

  explicit Adjacency(const Digraph& d) : out(d.vertex_count()), in(d.vertex_count()), both(d.vertex_count()) {
    for (ArcId a = 0; a < d.arc_count(); ++a) {
      const VertexId s = d.tail(a), t = d.head(a);
      out[s].push_back({t, a});
      in[t].push_back({s, a});
      both[s].push_back({t, a});
      if (s != t) both[t].push_back({s, a});
    }
    for (auto* lists : {&out, &in, &both})
      for (auto& l : *lists) std::sort(l.begin(), l.end());
  }
};

std::vector<Distance> bfs(const std::vector<std::vector<Step>>& adj, VertexId source,
                          std::optional<ArcId> banned = std::nullopt) {
  std::vector<Distance> dist(adj.size());
  std::deque<VertexId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (const Step& s : adj[x]) {
      if (banned && s.arc == *banned) continue;
      if (dist[s.to]) continue;
      dist[s.to] = *dist[x] + 1;
      queue.push_back(s.to);
    }
  }
  return dist;
}

// Greedy walk from u toward the target along `forward`, using distances to the
// target computed on the reversed relation.
Path walk(const std::vector<std::vector<Step>>& forward, const std::vector<Distance>& to_target, VertexId u,
          std::optional<ArcId> banned = std::nullopt) {
  Path p;
  p.vertices.push_back(u);
  VertexId cur = u;
  while (*to_target[cur] > 0) {
    for (const Step& s : forward[cur]) {
      if (banned && s.arc == *banned) continue;
      if (to_target[s.to] && *to_target[s.to] + 1 == *to_target[cur]) {
        p.arcs.push_back(s.arc);
        p.vertices.push_back(s.to);
        cur = s.to;
        break;
      }
    }
  }
  return p;
}

void check_vertex(const Digraph& d, VertexId v) { d.vertex(v); }

void check_distinct(const Digraph& d, VertexId u, VertexId v) {
  check_vertex(d, u);
  check_vertex(d, v);
  if (u == v) fail(ErrorCode::SameVertex, "path endpoints must be distinct vertices");
}

std::vector<std::vector<bool>> scc_reachability(const Digraph& d, const std::vector<std::vector<VertexId>>& sccs,
                                                const std::vector<std::size_t>& comp_of) {
  const std::size_t k = sccs.size();
  std::vector<std::vector<bool>> reach(k, std::vector<bool>(k, false));
  Adjacency adj(d);
  for (std::size_t c = 0; c < k; ++c) {
    auto dist = bfs(adj.out, sccs[c].front());
    for (VertexId v = 0; v < d.vertex_count(); ++v)
      if (dist[v]) reach[c][comp_of[v]] = true;
  }
  return reach;
}

void sort_sets(std::vector<std::vector<VertexId>>& sets) {
  for (auto& s : sets) std::sort(s.begin(), s.end());
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

}  // namespace

std::string_view to_string(Grade g) noexcept {
  switch (g) {
    case Grade::Strong: return "strong";
    case Grade::StrictlyUnilateral: return "strictly_unilateral";
    case Grade::StrictlyWeak: return "strictly_weak";
    case Grade::Disconnected: return "disconnected";
  }
  return "disconnected";
}

std::string_view to_string(ComponentKind k) noexcept {
  switch (k) {
    case ComponentKind::Strong: return "strong";
    case ComponentKind::Unilateral: return "unilateral";
    case ComponentKind::Weak: return "weak";
  }
  return "weak";
}

std::optional<ComponentKind> parse_component_kind(std::string_view text) noexcept {
  if (text == "strong") return ComponentKind::Strong;
  if (text == "unilateral") return ComponentKind::Unilateral;
  if (text == "weak") return ComponentKind::Weak;
  return std::nullopt;
}

std::vector<Distance> directed_distances(const Digraph& d, VertexId source) {
  check_vertex(d, source);
  return bfs(Adjacency(d).out, source);
}

std::vector<Distance> semipath_distances(const Digraph& d, VertexId source) {
  check_vertex(d, source);
  return bfs(Adjacency(d).both, source);
}

std::optional<Dipath> find_dipath(const Digraph& d, VertexId u, VertexId v) {
  check_distinct(d, u, v);
  Adjacency adj(d);
  auto to_v = bfs(adj.in, v);
  if (!to_v[u]) return std::nullopt;
  return walk(adj.out, to_v, u);
}

std::optional<Semipath> find_semipath(const Digraph& d, VertexId u, VertexId v) {
  check_distinct(d, u, v);
  Adjacency adj(d);
  auto to_v = bfs(adj.both, v);
  if (!to_v[u]) return std::nullopt;
  return walk(adj.both, to_v, u);
}

std::optional<Diloop> find_diloop(const Digraph& d, VertexId v) {
  check_vertex(d, v);
  Adjacency adj(d);
  for (const Step& s : adj.out[v])
    if (s.to == v) return Diloop{{v, v}, {s.arc}};
  // close the loop through the best in-neighbour w: v ->* w -> v
  auto from_v = bfs(adj.out, v);
  std::optional<Diloop> best;
  for (const Step& back : adj.in[v]) {
    const VertexId w = back.to;
    if (!from_v[w]) continue;
    auto to_w = bfs(adj.in, w);
    Path p = walk(adj.out, to_w, v);
    p.arcs.push_back(back.arc);
    p.vertices.push_back(v);
    if (!best || p.length() < best->length() ||
        (p.length() == best->length() && p.vertices < best->vertices))
      best = std::move(p);
  }
  return best;
}

std::optional<Semiloop> find_semiloop(const Digraph& d, VertexId v) {
  check_vertex(d, v);
  Adjacency adj(d);
  for (const Step& s : adj.both[v])
    if (s.to == v) return Semiloop{{v, v}, {s.arc}};
  // leave v along branch e to w, then return to v without reusing e
  std::optional<Semiloop> best;
  for (const Step& first : adj.both[v]) {
    auto to_v = bfs(adj.both, v, first.arc);
    if (!to_v[first.to]) continue;
    Path rest = walk(adj.both, to_v, first.to, first.arc);
    Path p;
    p.vertices.push_back(v);
    p.vertices.insert(p.vertices.end(), rest.vertices.begin(), rest.vertices.end());
    p.arcs.push_back(first.arc);
    p.arcs.insert(p.arcs.end(), rest.arcs.begin(), rest.arcs.end());
    if (!best || p.length() < best->length() ||
        (p.length() == best->length() && p.vertices < best->vertices))
      best = std::move(p);
  }
  return best;
}

Distance standard_distance(const Digraph& d, VertexId u, VertexId v) {
  check_vertex(d, v);
  return semipath_distances(d, u)[v];
}

Grade pair_connectedness(const Digraph& d, VertexId u, VertexId v) {
  check_distinct(d, u, v);
  Adjacency adj(d);
  const bool forward = bfs(adj.out, u)[v].has_value();
  const bool backward = bfs(adj.out, v)[u].has_value();
  if (forward && backward) return Grade::Strong;
  if (forward || backward) return Grade::StrictlyUnilateral;
  if (bfs(adj.both, u)[v]) return Grade::StrictlyWeak;
  return Grade::Disconnected;
}

std::vector<std::vector<VertexId>> strongly_connected_components(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  Adjacency adj(d);
  constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, unvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<VertexId> stack;
  std::vector<std::vector<VertexId>> sccs;
  std::size_t counter = 0;

  std::function<void(VertexId)> dfs = [&](VertexId v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (const Step& s : adj.out[v]) {
      if (index[s.to] == unvisited) {
        dfs(s.to);
        low[v] = std::min(low[v], low[s.to]);
      } else if (on_stack[s.to]) {
        low[v] = std::min(low[v], index[s.to]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<VertexId> scc;
      VertexId w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        scc.push_back(w);
      } while (w != v);
      std::sort(scc.begin(), scc.end());
      sccs.push_back(std::move(scc));
    }
  };
  for (VertexId v = 0; v < n; ++v)
    if (index[v] == unvisited) dfs(v);
  return sccs;
}

Grade classify_digraph(const Digraph& d) {
  const auto sccs = strongly_connected_components(d);
  if (sccs.size() == 1) return Grade::Strong;
  std::vector<std::size_t> comp_of(d.vertex_count());
  for (std::size_t c = 0; c < sccs.size(); ++c)
    for (VertexId v : sccs[c]) comp_of[v] = c;
  const auto reach = scc_reachability(d, sccs, comp_of);
  bool unilateral = true;
  for (std::size_t a = 0; a < sccs.size() && unilateral; ++a)
    for (std::size_t b = a + 1; b < sccs.size() && unilateral; ++b) unilateral = reach[a][b] || reach[b][a];
  if (unilateral) return Grade::StrictlyUnilateral;
  auto dist = semipath_distances(d, 0);
  const bool weak = std::all_of(dist.begin(), dist.end(), [](const Distance& x) { return x.has_value(); });
  return weak ? Grade::StrictlyWeak : Grade::Disconnected;
}

std::vector<std::vector<VertexId>> components(const Digraph& d, ComponentKind kind) {
  std::vector<std::vector<VertexId>> out;
  if (kind == ComponentKind::Weak) {
    std::vector<bool> done(d.vertex_count(), false);
    for (VertexId v = 0; v < d.vertex_count(); ++v) {
      if (done[v]) continue;
      auto dist = semipath_distances(d, v);
      std::vector<VertexId> comp;
      for (VertexId w = 0; w < d.vertex_count(); ++w)
        if (dist[w]) {
          comp.push_back(w);
          done[w] = true;
        }
      out.push_back(std::move(comp));
    }
    sort_sets(out);
    return out;
  }

  const auto sccs = strongly_connected_components(d);
  if (kind == ComponentKind::Strong) {
    out = sccs;
    sort_sets(out);
    return out;
  }

  // Unilateral: maximal chains of the condensation's reachability order,
  // walked along covering edges from minimal to maximal components.
  const std::size_t k = sccs.size();
  std::vector<std::size_t> comp_of(d.vertex_count());
  for (std::size_t c = 0; c < k; ++c)
    for (VertexId v : sccs[c]) comp_of[v] = c;
  const auto reach = scc_reachability(d, sccs, comp_of);
  auto below = [&](std::size_t x, std::size_t y) { return x != y && reach[x][y]; };
  std::vector<std::vector<std::size_t>> covers(k);
  std::vector<bool> minimal(k, true);
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) {
      if (!below(x, y)) continue;
      minimal[y] = false;
      bool cover = true;
      for (std::size_t z = 0; z < k && cover; ++z) cover = !(below(x, z) && below(z, y));
      if (cover) covers[x].push_back(y);
    }
  std::vector<std::size_t> chain;
  std::function<void(std::size_t)> extend = [&](std::size_t c) {
    chain.push_back(c);
    if (covers[c].empty()) {
      std::vector<VertexId> set;
      for (std::size_t x : chain) set.insert(set.end(), sccs[x].begin(), sccs[x].end());
      out.push_back(std::move(set));
    }
    for (std::size_t next : covers[c]) extend(next);
    chain.pop_back();
  };
  for (std::size_t c = 0; c < k; ++c)
    if (minimal[c]) extend(c);
  sort_sets(out);
  return out;
}

bool is_finitely_dispersed(const Digraph& d, const std::vector<ArcId>& arcs, std::size_t k) {
  const Subdigraph s = induced_subdigraph(d, arcs);
  for (VertexId u : s.vertices) {
    auto dist = semipath_distances(d, u);
    for (VertexId v : s.vertices)
      if (!dist[v] || *dist[v] > k) return false;
  }
  return true;
}

}  // namespace nsd
