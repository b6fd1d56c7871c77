#include "g5/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace g5 {

const char* to_string(GraphErrorCode c) {
  switch (c) {
    case GraphErrorCode::NonSymmetricRotation: return "NonSymmetricRotation";
    case GraphErrorCode::GenusNonZero: return "GenusNonZero";
    case GraphErrorCode::RingNotCycle: return "RingNotCycle";
    case GraphErrorCode::ParallelEdgeOrLoop: return "ParallelEdgeOrLoop";
    case GraphErrorCode::InvalidInput: return "InvalidInput";
    case GraphErrorCode::NotContractible: return "NotContractible";
    case GraphErrorCode::RingInsideDisk: return "RingInsideDisk";
  }
  return "?";
}

namespace {

long long key(VertexId u, VertexId v) { return (static_cast<long long>(u) << 32) | static_cast<unsigned>(v); }

}  // namespace

DartId EmbeddedGraph::dart(VertexId u, VertexId v) const {
  auto it = dart_index_.find(key(u, v));
  return it == dart_index_.end() ? -1 : it->second;
}

std::vector<DartId> EmbeddedGraph::darts_out(VertexId v) const {
  std::vector<DartId> out;
  out.reserve(rot_[v].size());
  for (VertexId u : rot_[v]) out.push_back(dart(v, u));
  return out;
}

std::vector<int> EmbeddedGraph::faces_at(VertexId v) const {
  std::vector<int> out;
  if (rot_[v].empty()) {
    out.push_back(isolated_face_[v]);
    return out;
  }
  for (DartId d : darts_out(v)) out.push_back(corner_face(d));
  return out;
}

int EmbeddedGraph::isolated_face(VertexId v) const { return isolated_face_[v]; }

std::vector<VertexId> EmbeddedGraph::face_vertices(int f) const {
  std::vector<VertexId> out;
  for (const auto& w : faces_[f].walks)
    for (DartId d : w) out.push_back(darts_[d].origin);
  for (VertexId v : faces_[f].isolated) out.push_back(v);
  return out;
}

std::vector<std::vector<VertexId>> EmbeddedGraph::face_walk_vertices(int f) const {
  std::vector<std::vector<VertexId>> out;
  for (const auto& w : faces_[f].walks) {
    std::vector<VertexId> vs;
    for (DartId d : w) vs.push_back(darts_[d].origin);
    out.push_back(vs);
  }
  for (VertexId v : faces_[f].isolated) out.push_back({v});
  return out;
}

bool EmbeddedGraph::is_ring_edge(int e) const {
  auto [u, v] = edge_ends(e);
  int r = ring_of_[u];
  if (r < 0 || r != ring_of_[v] || rings_[r].is_vertex_ring()) return false;
  const auto& rv = rings_[r].vertices;
  int k = static_cast<int>(rv.size());
  for (int i = 0; i < k; ++i) {
    VertexId a = rv[i], b = rv[(i + 1) % k];
    if ((a == u && b == v) || (a == v && b == u)) return true;
  }
  return false;
}

bool EmbeddedGraph::is_vertex_ring_cuff(int f) const {
  for (std::size_t i = 0; i < rings_.size(); ++i)
    if (rings_[i].is_vertex_ring() && cuff_face_[i] == f) return true;
  return false;
}

std::vector<int> EmbeddedGraph::internal_faces() const {
  std::vector<int> out;
  for (int f = 0; f < num_faces(); ++f)
    if (faces_[f].ring < 0) out.push_back(f);
  return out;
}

std::vector<int> EmbeddedGraph::component_of() const {
  std::vector<int> comp(n(), -1);
  int c = 0;
  for (VertexId s = 0; s < n(); ++s) {
    if (comp[s] >= 0) continue;
    std::deque<VertexId> q{s};
    comp[s] = c;
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop_front();
      for (VertexId u : rot_[v])
        if (comp[u] < 0) {
          comp[u] = c;
          q.push_back(u);
        }
    }
    ++c;
  }
  return comp;
}

int EmbeddedGraph::ring_total_length() const {
  int t = 0;
  for (const auto& r : rings_) t += r.length();
  return t;
}

std::vector<VertexId> EmbeddedGraph::ring_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n(); ++v)
    if (ring_of_[v] >= 0) out.push_back(v);
  return out;
}

EmbeddedGraph build(const std::vector<std::vector<VertexId>>& rot, const std::vector<Ring>& rings) {
  EmbeddedGraph g;
  const int n = static_cast<int>(rot.size());
  g.rot_ = rot;
  for (VertexId v = 0; v < n; ++v) {
    std::set<VertexId> seen;
    for (VertexId u : rot[v]) {
      if (u < 0 || u >= n)
        throw GraphError(GraphErrorCode::InvalidInput, "neighbour out of range at vertex " + std::to_string(v));
      if (u == v) throw GraphError(GraphErrorCode::ParallelEdgeOrLoop, "loop at vertex " + std::to_string(v));
      if (!seen.insert(u).second)
        throw GraphError(GraphErrorCode::ParallelEdgeOrLoop,
                         "parallel edge " + std::to_string(v) + "-" + std::to_string(u));
    }
  }
  for (VertexId v = 0; v < n; ++v)
    for (VertexId u : rot[v])
      if (std::find(rot[u].begin(), rot[u].end(), v) == rot[u].end())
        throw GraphError(GraphErrorCode::NonSymmetricRotation,
                         std::to_string(v) + " lists " + std::to_string(u) + " but not conversely");

  // edges numbered in order of first appearance from their smaller endpoint
  for (VertexId v = 0; v < n; ++v)
    for (VertexId u : rot[v])
      if (v < u) {
        DartId d = static_cast<DartId>(g.darts_.size());
        g.darts_.push_back({v, d + 1, -1, -1});
        g.darts_.push_back({u, d, -1, -1});
        g.dart_index_[key(v, u)] = d;
        g.dart_index_[key(u, v)] = d + 1;
      }
  for (VertexId v = 0; v < n; ++v) {
    int k = static_cast<int>(rot[v].size());
    for (int i = 0; i < k; ++i) {
      DartId d = g.dart(v, rot[v][i]);
      g.darts_[d].next = g.dart(v, rot[v][(i + 1) % k]);
      g.darts_[d].prev = g.dart(v, rot[v][(i + k - 1) % k]);
    }
  }

  // trace orbits
  const int nd = g.num_darts();
  std::vector<int> orbit(nd, -1);
  std::vector<std::vector<DartId>> orbits;
  for (DartId s = 0; s < nd; ++s) {
    if (orbit[s] >= 0) continue;
    std::vector<DartId> w;
    DartId d = s;
    do {
      orbit[d] = static_cast<int>(orbits.size());
      w.push_back(d);
      d = g.face_next(d);
    } while (d != s);
    orbits.push_back(std::move(w));
  }

  // components and Euler check per component
  std::vector<int> comp = g.component_of();
  int ncomp = n == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  g.components_ = ncomp;
  std::vector<int> cv(ncomp, 0), ce(ncomp, 0), cf(ncomp, 0);
  for (VertexId v = 0; v < n; ++v) {
    cv[comp[v]]++;
    ce[comp[v]] += static_cast<int>(rot[v].size());
  }
  for (const auto& o : orbits) cf[comp[g.darts_[o[0]].origin]]++;
  for (int c = 0; c < ncomp; ++c) {
    int faces = ce[c] == 0 ? 1 : cf[c];
    if (cv[c] - ce[c] / 2 + faces != 2)
      throw GraphError(GraphErrorCode::GenusNonZero,
                       "component " + std::to_string(c) + " has Euler characteristic " +
                           std::to_string(cv[c] - ce[c] / 2 + faces));
  }

  // rings
  g.rings_ = rings;
  g.ring_of_.assign(n, -1);
  std::vector<int> ring_orbit(rings.size(), -1);
  for (std::size_t i = 0; i < rings.size(); ++i) {
    const Ring& r = rings[i];
    if (r.vertices.empty()) throw GraphError(GraphErrorCode::RingNotCycle, "empty ring");
    for (VertexId v : r.vertices) {
      if (v < 0 || v >= n) throw GraphError(GraphErrorCode::InvalidInput, "ring vertex out of range");
      if (g.ring_of_[v] >= 0)
        throw GraphError(GraphErrorCode::RingNotCycle, "rings share vertex " + std::to_string(v));
      g.ring_of_[v] = static_cast<int>(i);
    }
    if (r.is_vertex_ring()) {
      if (r.vertices.size() != 1) throw GraphError(GraphErrorCode::RingNotCycle, "vertex ring with several vertices");
      continue;
    }
    int k = static_cast<int>(r.vertices.size());
    if (k < 3) throw GraphError(GraphErrorCode::RingNotCycle, "facial ring shorter than 3");
    for (int j = 0; j < k; ++j)
      if (!g.adjacent(r.vertices[j], r.vertices[(j + 1) % k]))
        throw GraphError(GraphErrorCode::RingNotCycle, "ring vertices not consecutive neighbours");
    int o = orbit[g.dart(r.vertices[0], r.vertices[1])];
    const auto& w = orbits[o];
    bool ok = static_cast<int>(w.size()) == k;
    for (int j = 0; ok && j < k; ++j)
      ok = g.darts_[w[j]].origin == r.vertices[j];
    if (!ok) {
      // the orbit starting at r0->r1 need not start at index 0
      ok = static_cast<int>(w.size()) == k;
      if (ok) {
        int start = -1;
        for (int j = 0; j < k; ++j)
          if (g.darts_[w[j]].origin == r.vertices[0]) start = j;
        for (int j = 0; ok && j < k; ++j) ok = start >= 0 && g.darts_[w[(start + j) % k]].origin == r.vertices[j];
      }
    }
    if (!ok) throw GraphError(GraphErrorCode::RingNotCycle, "ring " + std::to_string(i) + " does not bound a face");
    for (std::size_t j = 0; j < i; ++j)
      if (ring_orbit[j] == o) throw GraphError(GraphErrorCode::RingNotCycle, "two rings on one face");
    ring_orbit[i] = o;
  }

  // group orbits into faces; extra components are drawn into the first non-ring face of component 0
  std::vector<char> is_ring_orbit(orbits.size(), 0);
  for (int o : ring_orbit)
    if (o >= 0) is_ring_orbit[o] = 1;
  std::vector<int> orbit_face(orbits.size(), -1);
  std::vector<std::vector<int>> groups;
  std::vector<std::vector<VertexId>> group_isolated;
  // orbits are already ordered by minimum dart id (discovered in increasing dart order)
  std::vector<int> first_free(ncomp, -1);
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    int c = comp[g.darts_[orbits[o][0]].origin];
    if (first_free[c] < 0 && !is_ring_orbit[o]) first_free[c] = static_cast<int>(o);
  }
  int host_comp = n > 0 ? comp[0] : -1;
  int host_orbit = host_comp >= 0 ? first_free[host_comp] : -1;
  if (host_orbit < 0) {
    for (std::size_t o = 0; o < orbits.size(); ++o)
      if (comp[g.darts_[orbits[o][0]].origin] == host_comp) {
        host_orbit = static_cast<int>(o);
        break;
      }
  }
  int host_group = -1;
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    int c = comp[g.darts_[orbits[o][0]].origin];
    bool merge = (static_cast<int>(o) == host_orbit) ||
                 (c != host_comp && static_cast<int>(o) == first_free[c] && host_orbit >= 0);
    if (merge && host_group >= 0) {
      orbit_face[o] = host_group;
      groups[host_group].push_back(static_cast<int>(o));
      continue;
    }
    orbit_face[o] = static_cast<int>(groups.size());
    groups.push_back({static_cast<int>(o)});
    group_isolated.emplace_back();
    if (merge) host_group = orbit_face[o];
  }
  g.isolated_face_.assign(n, -1);
  for (VertexId v = 0; v < n; ++v) {
    if (!rot[v].empty()) continue;
    if (host_group < 0) {
      host_group = static_cast<int>(groups.size());
      groups.emplace_back();
      group_isolated.emplace_back();
    }
    group_isolated[host_group].push_back(v);
  }

  // canonical order: by minimum dart id; dart-free faces last
  std::vector<int> order(groups.size());
  for (std::size_t i = 0; i < groups.size(); ++i) order[i] = static_cast<int>(i);
  auto min_dart = [&](int gi) {
    int best = nd;
    for (int o : groups[gi]) best = std::min(best, *std::min_element(orbits[o].begin(), orbits[o].end()));
    return best;
  };
  std::sort(order.begin(), order.end(), [&](int a, int b) { return min_dart(a) < min_dart(b); });
  std::vector<int> new_index(groups.size());
  for (std::size_t i = 0; i < order.size(); ++i) new_index[order[i]] = static_cast<int>(i);

  g.faces_.resize(groups.size());
  g.dart_face_.assign(nd, -1);
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    Face& f = g.faces_[new_index[gi]];
    for (int o : groups[gi]) {
      // start each walk at its minimum dart
      auto w = orbits[o];
      auto it = std::min_element(w.begin(), w.end());
      std::rotate(w.begin(), it, w.end());
      f.walks.push_back(w);
      for (DartId d : w) g.dart_face_[d] = new_index[gi];
    }
    f.isolated = group_isolated[gi];
    for (VertexId v : f.isolated) g.isolated_face_[v] = new_index[gi];
    int md = min_dart(static_cast<int>(gi));
    f.min_dart = md == nd ? -1 : md;
  }
  for (auto& f : g.faces_) {
    f.length = 0;
    for (const auto& w : f.walks) f.length += static_cast<int>(w.size());
    for (VertexId v : f.isolated)
      if (g.ring_of_[v] >= 0) f.length += g.rings_[g.ring_of_[v]].length();
  }
  g.cuff_face_.assign(rings.size(), -1);
  for (std::size_t i = 0; i < rings.size(); ++i) {
    if (ring_orbit[i] >= 0) {
      int f = g.dart_face_[orbits[ring_orbit[i]][0]];
      g.faces_[f].ring = static_cast<int>(i);
      g.cuff_face_[i] = f;
    } else {
      VertexId v = rings[i].vertices[0];
      if (rot[v].empty())
        g.cuff_face_[i] = g.isolated_face_[v];
      else
        g.cuff_face_[i] = g.corner_face(g.dart(v, rot[v][0]));
    }
  }
  return g;
}

std::optional<int> girth(const EmbeddedGraph& g) {
  int best = -1;
  for (VertexId s = 0; s < g.n(); ++s) {
    std::vector<int> dist(g.n(), -1), par(g.n(), -1);
    std::deque<VertexId> q{s};
    dist[s] = 0;
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop_front();
      for (VertexId u : g.neighbors(v)) {
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          par[u] = v;
          q.push_back(u);
        } else if (par[v] != u) {
          int len = dist[u] + dist[v] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

Cycle canonical_cycle(const Cycle& c) {
  if (c.empty()) return c;
  auto it = std::min_element(c.begin(), c.end());
  Cycle r(c.begin(), c.end());
  std::rotate(r.begin(), r.begin() + (it - c.begin()), r.end());
  if (r.size() > 2 && r[1] > r.back()) std::reverse(r.begin() + 1, r.end());
  return r;
}

std::vector<Cycle> cycles_up_to(const EmbeddedGraph& g, int k) {
  if (k > 9) throw GraphError(GraphErrorCode::InvalidInput, "cycles_up_to supports k <= 9");
  std::vector<Cycle> out;
  std::vector<VertexId> path;
  std::vector<char> on(g.n(), 0);
  std::function<void(VertexId)> dfs = [&](VertexId v) {
    VertexId s = path[0];
    for (VertexId u : g.neighbors(v)) {
      if (u == s && path.size() >= 3 && path[1] < path.back()) out.push_back(path);
      if (u > s && !on[u] && static_cast<int>(path.size()) < k) {
        on[u] = 1;
        path.push_back(u);
        dfs(u);
        path.pop_back();
        on[u] = 0;
      }
    }
  };
  for (VertexId s = 0; s < g.n(); ++s) {
    path = {s};
    on[s] = 1;
    dfs(s);
    on[s] = 0;
  }
  std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

bool is_cycle_in(const EmbeddedGraph& g, const Cycle& c) {
  if (c.size() < 3) return false;
  std::set<VertexId> s(c.begin(), c.end());
  if (s.size() != c.size()) return false;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!g.adjacent(c[i], c[(i + 1) % c.size()])) return false;
  return true;
}

std::vector<int> cycle_sides(const EmbeddedGraph& g, const Cycle& c) {
  if (!is_cycle_in(g, c)) throw GraphError(GraphErrorCode::InvalidInput, "not a cycle of the graph");
  std::set<int> cyc_edges;
  for (std::size_t i = 0; i < c.size(); ++i) cyc_edges.insert(g.edge_id(c[i], c[(i + 1) % c.size()]));
  std::vector<int> side(g.num_faces(), -1);
  auto flood = [&](int start, int label) {
    if (side[start] >= 0) return;
    std::deque<int> q{start};
    side[start] = label;
    while (!q.empty()) {
      int f = q.front();
      q.pop_front();
      for (const auto& w : g.faces()[f].walks)
        for (DartId d : w) {
          if (cyc_edges.count(d / 2)) continue;
          int h = g.face_of_dart(g.twin(d));
          if (side[h] < 0) {
            side[h] = label;
            q.push_back(h);
          }
        }
    }
  };
  flood(g.face_of_dart(g.dart(c[0], c[1])), 0);
  flood(g.face_of_dart(g.dart(c[1], c[0])), 1);
  for (int& s : side)
    if (s < 0) s = 0;
  return side;
}

namespace {

// cuff count per side and ring-vertex presence strictly inside each side
struct SideInfo {
  std::vector<int> cuffs[2];
  bool ring_vertex_inside[2] = {false, false};
};

SideInfo side_info(const EmbeddedGraph& g, const Cycle& c, const std::vector<int>& sides) {
  SideInfo info;
  for (std::size_t i = 0; i < g.rings().size(); ++i) {
    int f = g.cuff_face(static_cast<int>(i));
    info.cuffs[sides[f]].push_back(static_cast<int>(i));
  }
  std::set<VertexId> on(c.begin(), c.end());
  for (VertexId v = 0; v < g.n(); ++v) {
    if (on.count(v) || !g.is_ring_vertex(v)) continue;
    for (int f : g.faces_at(v)) info.ring_vertex_inside[sides[f]] = true;
  }
  return info;
}

}  // namespace

std::vector<int> ring_free_sides(const EmbeddedGraph& g, const Cycle& c, const std::vector<int>& sides) {
  SideInfo info = side_info(g, c, sides);
  std::vector<int> out;
  for (int s = 0; s < 2; ++s)
    if (info.cuffs[s].empty() && !info.ring_vertex_inside[s]) out.push_back(s);
  return out;
}

CycleTopology surrounds_cuff(const EmbeddedGraph& g, const Cycle& c) {
  auto sides = cycle_sides(g, c);
  SideInfo info = side_info(g, c, sides);
  if (info.cuffs[0].empty() || info.cuffs[1].empty()) return {CycleClass::Contractible, -1};
  for (int s = 0; s < 2; ++s)
    if (info.cuffs[s].size() == 1) return {CycleClass::SurroundsCuff, info.cuffs[s][0]};
  return {CycleClass::Separating, -1};
}

DiskSubgraph disk_subgraph(const EmbeddedGraph& g, const Cycle& c) {
  auto sides = cycle_sides(g, c);
  SideInfo info = side_info(g, c, sides);
  int disk = -1;
  std::vector<int> candidates;
  for (int s = 0; s < 2; ++s)
    if (info.cuffs[s].empty() && !info.ring_vertex_inside[s]) candidates.push_back(s);
  if (candidates.empty()) {
    bool both_cuffs = !info.cuffs[0].empty() && !info.cuffs[1].empty();
    throw GraphError(both_cuffs ? GraphErrorCode::NotContractible : GraphErrorCode::RingInsideDisk,
                     "cycle does not bound a ring-free disk");
  }
  if (candidates.size() == 1) {
    disk = candidates[0];
  } else {
    int count[2] = {0, 0};
    for (int s : sides) count[s]++;
    disk = count[0] < count[1] ? 0 : (count[1] < count[0] ? 1 : (sides[0] == 0 ? 1 : 0));
  }
  std::vector<char> keep_edge(g.m(), 0);
  std::vector<char> keep_v(g.n(), 0);
  std::vector<int> host_faces;
  for (int f = 0; f < g.num_faces(); ++f) {
    if (sides[f] != disk) continue;
    host_faces.push_back(f);
    for (const auto& w : g.faces()[f].walks)
      for (DartId d : w) {
        keep_edge[d / 2] = 1;
        keep_v[g.tail(d)] = 1;
      }
    for (VertexId v : g.faces()[f].isolated) keep_v[v] = 1;
  }
  for (VertexId v : c) keep_v[v] = 1;
  std::vector<int> idx(g.n(), -1);
  DiskSubgraph out;
  for (VertexId v = 0; v < g.n(); ++v)
    if (keep_v[v]) {
      idx[v] = static_cast<int>(out.to_host.size());
      out.to_host.push_back(v);
    }
  std::vector<std::vector<VertexId>> rot(out.to_host.size());
  for (std::size_t i = 0; i < out.to_host.size(); ++i) {
    VertexId v = out.to_host[i];
    for (VertexId u : g.neighbors(v))
      if (keep_edge[g.edge_id(v, u)]) rot[i].push_back(idx[u]);
  }
  Cycle ring;
  for (VertexId v : c) ring.push_back(idx[v]);
  try {
    out.graph = build(rot, {Ring{RingKind::Facial, ring}});
  } catch (const GraphError&) {
    std::reverse(ring.begin() + 1, ring.end());
    out.graph = build(rot, {Ring{RingKind::Facial, ring}});
  }
  out.host_faces = host_faces;
  return out;
}

Subgraph edge_subgraph(const EmbeddedGraph& g, const std::vector<char>& keep_edge,
                       const std::vector<char>& keep_vertex) {
  std::vector<char> keep_v(g.n(), 0);
  for (VertexId v = 0; v < g.n(); ++v) keep_v[v] = keep_vertex[v] || g.is_ring_vertex(v);
  for (int e = 0; e < g.m(); ++e)
    if (keep_edge[e]) {
      auto [a, b] = g.edge_ends(e);
      keep_v[a] = keep_v[b] = 1;
    }
  std::vector<int> idx(g.n(), -1);
  Subgraph out;
  for (VertexId v = 0; v < g.n(); ++v)
    if (keep_v[v]) {
      idx[v] = static_cast<int>(out.to_host.size());
      out.to_host.push_back(v);
    }
  std::vector<std::vector<VertexId>> rot(out.to_host.size());
  for (std::size_t i = 0; i < out.to_host.size(); ++i) {
    VertexId v = out.to_host[i];
    for (VertexId u : g.neighbors(v))
      if (keep_edge[g.edge_id(v, u)]) rot[i].push_back(idx[u]);
  }
  std::vector<Ring> rings;
  for (const Ring& r : g.rings()) {
    Ring nr = r;
    for (VertexId& v : nr.vertices) v = idx[v];
    rings.push_back(nr);
  }
  out.graph = build(rot, rings);
  out.edge_to_host.resize(out.graph.m());
  for (int e = 0; e < out.graph.m(); ++e) {
    auto [a, b] = out.graph.edge_ends(e);
    out.edge_to_host[e] = g.edge_id(out.to_host[a], out.to_host[b]);
  }
  return out;
}

std::vector<int> bfs_distances(const EmbeddedGraph& g, VertexId s) {
  std::vector<int> dist(g.n(), -1);
  std::deque<VertexId> q{s};
  dist[s] = 0;
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop_front();
    for (VertexId u : g.neighbors(v))
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        q.push_back(u);
      }
  }
  return dist;
}

}  // namespace g5
