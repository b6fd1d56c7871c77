#include "g5/invariants.hpp"

#include "g5/colorer.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace g5 {

const char* to_string(Inv i) {
  static const char* names[] = {"I0", "I1", "I2", "I3", "I4", "I5", "I6", "I7", "I8", "I9"};
  return names[static_cast<int>(i)];
}

const char* to_string(FaceClass c) {
  switch (c) {
    case FaceClass::Closed2Cell: return "Closed2Cell";
    case FaceClass::Open2CellOnly: return "Open2CellOnly";
    case FaceClass::Omnipresent: return "Omnipresent";
    case FaceClass::Other: return "Other";
  }
  return "?";
}

const char* to_string(ExcClass c) {
  static const char* names[] = {"E0", "E1", "E2", "E3", "E4", "E5", "None"};
  return names[static_cast<int>(c)];
}

const char* to_string(PlaneCase c) {
  switch (c) {
    case PlaneCase::A: return "A";
    case PlaneCase::B: return "B";
    case PlaneCase::C: return "C";
    case PlaneCase::NonCritical: return "NonCritical";
    case PlaneCase::NotApplicable: return "NotApplicable";
    case PlaneCase::Unmatched: return "Unmatched";
  }
  return "?";
}

namespace {

using Adj = std::vector<std::vector<int>>;

// Two internally disjoint a-b paths in the subgraph induced by `alive`, via unit-capacity
// vertex-split augmentation. Returns the cycle through a and b, empty if none.
Cycle cycle_through(const Adj& adj, const std::vector<char>& alive, int a, int b) {
  int n = static_cast<int>(adj.size());
  // node 2v = in, 2v+1 = out
  std::map<std::pair<int, int>, int> flow;
  auto cap = [&](int x, int y) -> int {
    int base = 0;
    if (x / 2 == y / 2) {
      if (x % 2 == 0 && y == x + 1) base = (x / 2 == a || x / 2 == b) ? 2 : 1;
    } else if (x % 2 == 1 && y % 2 == 0) {
      base = 1;
    }
    return base - flow[{x, y}] + flow[{y, x}];
  };
  int src = 2 * a + 1, dst = 2 * b;
  for (int round = 0; round < 2; ++round) {
    std::vector<int> par(2 * n, -1);
    std::deque<int> q{src};
    par[src] = src;
    while (!q.empty() && par[dst] < 0) {
      int x = q.front();
      q.pop_front();
      std::vector<int> nxt;
      if (x % 2 == 0) {
        nxt.push_back(x + 1);
        for (int u : adj[x / 2])
          if (alive[u]) nxt.push_back(2 * u + 1);  // reverse of out(u)->in(x)
      } else {
        nxt.push_back(x - 1);
        for (int u : adj[x / 2])
          if (alive[u]) nxt.push_back(2 * u);
      }
      for (int y : nxt) {
        if (par[y] >= 0 || cap(x, y) <= 0) continue;
        par[y] = x;
        q.push_back(y);
      }
    }
    if (par[dst] < 0) return {};
    for (int y = dst; y != src; y = par[y]) {
      int x = par[y];
      if (flow[{y, x}] > 0)
        flow[{y, x}]--;
      else
        flow[{x, y}]++;
    }
  }
  // decompose: follow out(v) -> in(u) edges with positive net flow
  auto walk = [&]() {
    std::vector<int> path{a};
    int v = a;
    while (v != b) {
      int next = -1;
      for (int u : adj[v]) {
        if (!alive[u]) continue;
        int f = flow[{2 * v + 1, 2 * u}] - flow[{2 * u, 2 * v + 1}];
        if (f > 0) {
          flow[{2 * v + 1, 2 * u}]--;
          next = u;
          break;
        }
      }
      if (next < 0) return std::vector<int>{};
      path.push_back(next);
      v = next;
    }
    return path;
  };
  auto p1 = walk();
  auto p2 = walk();
  if (p1.empty() || p2.empty()) return {};
  Cycle c(p1.begin(), p1.end() - 1);
  for (auto it = p2.rbegin(); it != p2.rend() - 1; ++it) c.push_back(*it);
  return c;
}

// A cycle through vertex a inside the alive subgraph, empty if a lies on none.
Cycle cycle_at(const Adj& adj, const std::vector<char>& alive, int a) {
  std::vector<int> nb;
  for (int u : adj[a])
    if (alive[u]) nb.push_back(u);
  for (std::size_t i = 0; i < nb.size(); ++i) {
    std::vector<int> par(adj.size(), -1);
    std::deque<int> q{nb[i]};
    par[nb[i]] = nb[i];
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int u : adj[x]) {
        if (!alive[u] || u == a || par[u] >= 0) continue;
        par[u] = x;
        q.push_back(u);
      }
    }
    for (std::size_t j = i + 1; j < nb.size(); ++j) {
      if (par[nb[j]] < 0) continue;
      Cycle c{a};
      std::vector<int> back;
      for (int x = nb[j]; x != nb[i]; x = par[x]) back.push_back(x);
      back.push_back(nb[i]);
      std::reverse(back.begin(), back.end());
      c.insert(c.end(), back.begin(), back.end());
      return c;
    }
  }
  return {};
}

// Block decomposition (edge sets) of the alive subgraph.
std::vector<std::vector<std::pair<int, int>>> blocks(const Adj& adj, const std::vector<char>& alive) {
  int n = static_cast<int>(adj.size());
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::pair<int, int>> stack;
  std::vector<std::vector<std::pair<int, int>>> out;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    for (int u : adj[v]) {
      if (!alive[u] || u == parent) continue;
      if (disc[u] < 0) {
        stack.push_back({v, u});
        dfs(u, v);
        low[v] = std::min(low[v], low[u]);
        if (low[u] >= disc[v]) {
          std::vector<std::pair<int, int>> blk;
          while (true) {
            auto e = stack.back();
            stack.pop_back();
            blk.push_back(e);
            if (e == std::make_pair(v, u)) break;
          }
          out.push_back(blk);
        }
      } else if (disc[u] < disc[v]) {
        stack.push_back({v, u});
        low[v] = std::min(low[v], disc[u]);
      }
    }
  };
  for (int v = 0; v < n; ++v)
    if (alive[v] && disc[v] < 0) dfs(v, -1);
  return out;
}

Adj adjacency(const EmbeddedGraph& g) {
  Adj adj(g.n());
  for (VertexId v = 0; v < g.n(); ++v) adj[v] = g.neighbors(v);
  return adj;
}

std::vector<char> internal_deg3(const EmbeddedGraph& g) {
  std::vector<char> alive(g.n(), 0);
  for (VertexId v = 0; v < g.n(); ++v) alive[v] = g.is_internal(v) && g.degree(v) == 3;
  return alive;
}

Verdict check_i0(const EmbeddedGraph& g) {
  for (VertexId v = 0; v < g.n(); ++v)
    if (g.is_internal(v) && g.degree(v) < 3) return Verdict::fail({v}, "internal vertex of degree < 3");
  return Verdict::ok();
}

Verdict check_i1(const EmbeddedGraph& g) {
  Adj adj = adjacency(g);
  auto alive = internal_deg3(g);
  for (const auto& blk : blocks(adj, alive)) {
    if (blk.size() < 2) continue;
    std::set<int> vs;
    std::map<int, int> deg;
    for (auto [a, b] : blk) {
      vs.insert(a);
      vs.insert(b);
      deg[a]++;
      deg[b]++;
    }
    std::vector<char> in_blk(g.n(), 0);
    for (int v : vs) in_blk[v] = 1;
    Cycle c = cycle_at(adj, in_blk, *vs.begin());
    if (blk.size() == vs.size()) {
      if (c.size() % 2 == 0) return Verdict::fail(c, "even cycle of internal degree-3 vertices");
      continue;
    }
    // not a cycle: find an ear on c and take the even cycle of the theta
    std::set<int> on(c.begin(), c.end());
    std::vector<int> pos(g.n(), -1);
    for (std::size_t i = 0; i < c.size(); ++i) pos[c[i]] = static_cast<int>(i);
    std::set<std::pair<int, int>> cyc_edges;
    for (std::size_t i = 0; i < c.size(); ++i) {
      int a = c[i], b = c[(i + 1) % c.size()];
      cyc_edges.insert({std::min(a, b), std::max(a, b)});
    }
    std::vector<int> ear;
    for (int x : c) {
      for (int y : adj[x]) {
        if (!in_blk[y] || cyc_edges.count({std::min(x, y), std::max(x, y)})) continue;
        if (on.count(y)) {
          ear = {x, y};
          break;
        }
        std::vector<int> par(g.n(), -1);
        std::deque<int> q{y};
        par[y] = y;
        int hit = -1, last = -1;
        while (!q.empty() && hit < 0) {
          int z = q.front();
          q.pop_front();
          for (int u : adj[z]) {
            if (!in_blk[u]) continue;
            if (on.count(u)) {
              if (u != x) {
                hit = u;
                last = z;
                break;
              }
              continue;
            }
            if (par[u] >= 0) continue;
            par[u] = z;
            q.push_back(u);
          }
        }
        if (hit >= 0) {
          std::vector<int> mid;
          for (int z = last; z != y; z = par[z]) mid.push_back(z);
          mid.push_back(y);
          std::reverse(mid.begin(), mid.end());
          ear = {x};
          ear.insert(ear.end(), mid.begin(), mid.end());
          ear.push_back(hit);
          break;
        }
      }
      if (!ear.empty()) break;
    }
    if (ear.empty()) continue;
    int k = static_cast<int>(c.size());
    int i = pos[ear.front()], j = pos[ear.back()];
    // arcs of c from i to j forward and backward
    std::vector<int> arc1, arc2;
    for (int t = i;; t = (t + 1) % k) {
      arc1.push_back(c[t]);
      if (t == j) break;
    }
    for (int t = i;; t = (t - 1 + k) % k) {
      arc2.push_back(c[t]);
      if (t == j) break;
    }
    int le = static_cast<int>(ear.size()) - 1;
    int l1 = static_cast<int>(arc1.size()) - 1, l2 = static_cast<int>(arc2.size()) - 1;
    if (k % 2 == 0) return Verdict::fail(c, "even cycle of internal degree-3 vertices");
    const auto& arc = ((le + l1) % 2 == 0) ? arc1 : arc2;
    (void)l2;
    Cycle even(arc.begin(), arc.end());
    for (int t = static_cast<int>(ear.size()) - 2; t >= 1; --t) even.push_back(ear[t]);
    return Verdict::fail(even, "even cycle of internal degree-3 vertices");
  }
  return Verdict::ok();
}

Verdict check_i2(const EmbeddedGraph& g) {
  Adj adj = adjacency(g);
  auto base = internal_deg3(g);
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edge_ends(e);
    auto alive = base;
    alive[u] = alive[v] = 0;
    auto blks = blocks(adj, alive);
    // vertex -> blocks with at least two edges
    std::vector<std::vector<int>> in_cyc_block(g.n());
    for (std::size_t b = 0; b < blks.size(); ++b) {
      if (blks[b].size() < 2) continue;
      for (auto [x, y] : blks[b]) {
        if (in_cyc_block[x].empty() || in_cyc_block[x].back() != static_cast<int>(b))
          in_cyc_block[x].push_back(static_cast<int>(b));
        if (in_cyc_block[y].empty() || in_cyc_block[y].back() != static_cast<int>(b))
          in_cyc_block[y].push_back(static_cast<int>(b));
      }
    }
    for (int a : adj[u]) {
      if (!alive[a] || in_cyc_block[a].empty()) continue;
      for (int b : adj[v]) {
        if (!alive[b] || in_cyc_block[b].empty()) continue;
        Cycle c;
        if (a == b) {
          c = cycle_at(adj, alive, a);
        } else {
          bool share = false;
          for (int x : in_cyc_block[a])
            for (int y : in_cyc_block[b]) share |= x == y;
          if (!share) continue;
          c = cycle_through(adj, alive, a, b);
        }
        if (c.empty()) continue;
        Verdict out = Verdict::fail(c, "cycle of internal degree-3 vertices with adjacent outside pair");
        out.witness.push_back(u);
        out.witness.push_back(v);
        out.note += " (last two witness entries are u, v)";
        return out;
      }
    }
  }
  return Verdict::ok();
}

Verdict check_i3(const EmbeddedGraph& g) {
  for (int f : g.internal_faces()) {
    if (classify_face(g, f) != FaceClass::Closed2Cell) return Verdict::fail({}, "face not closed 2-cell", f);
    if (g.faces()[f].length < 5) return Verdict::fail(g.face_vertices(f), "face shorter than 5", f);
  }
  return Verdict::ok();
}

Verdict check_i4(const EmbeddedGraph& g) {
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edge_ends(e);
    if (g.is_ring_vertex(u) && g.is_ring_vertex(v) && !g.is_ring_edge(e))
      return Verdict::fail({u, v}, "ring-to-ring edge outside the rings");
  }
  for (VertexId w = 0; w < g.n(); ++w) {
    const auto& nb = g.neighbors(w);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        VertexId a = nb[i], b = nb[j];
        if (!g.is_ring_vertex(a) || !g.is_ring_vertex(b)) continue;
        if (!g.is_ring_edge(g.edge_id(a, w)) || !g.is_ring_edge(g.edge_id(w, b)))
          return Verdict::fail({a, w, b}, "ring-to-ring path of length two outside the rings");
      }
  }
  return Verdict::ok();
}

Verdict check_i5(const EmbeddedGraph& g) {
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edge_ends(e);
    if (g.degree(u) == 2 && g.degree(v) == 2) return Verdict::fail({u, v}, "adjacent degree-2 vertices");
  }
  return Verdict::ok();
}

Verdict check_i6(const EmbeddedGraph& g) {
  bool applies = g.rings().size() == 1;
  for (int f : g.internal_faces()) applies |= classify_face(g, f) == FaceClass::Omnipresent;
  if (!applies) return Verdict::ok();
  if (auto cut = has_internal_2cut(g)) return Verdict::fail({cut->x, cut->y}, "internal 2-cut");
  return Verdict::ok();
}

Verdict check_i7(const EmbeddedGraph& g) {
  int k = static_cast<int>(g.rings().size());
  for (int r = 0; r < k; ++r) {
    std::vector<int> dist(g.n(), -1);
    std::deque<VertexId> q;
    for (VertexId v : g.rings()[r].vertices) {
      dist[v] = 0;
      q.push_back(v);
    }
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop_front();
      for (VertexId u : g.neighbors(v))
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          q.push_back(u);
        }
    }
    for (VertexId v = 0; v < g.n(); ++v) {
      int s = g.ring_of(v);
      if (s >= 0 && s != r && dist[v] >= 0 && dist[v] < 4)
        return Verdict::fail({g.rings()[r].vertices[0], v}, "rings at distance < 4");
    }
  }
  return Verdict::ok();
}

Verdict check_i8(const EmbeddedGraph& g) {
  for (const Cycle& c : cycles_up_to(g, 6)) {
    auto sides = cycle_sides(g, c);
    bool both = std::count(sides.begin(), sides.end(), 0) > 0 && std::count(sides.begin(), sides.end(), 1) > 0;
    if (!both) return Verdict::fail(c, "short non-separating cycle");
  }
  return Verdict::ok();
}

Verdict check_i9(const EmbeddedGraph& g) {
  for (const Cycle& c : cycles_up_to(g, 9)) {
    auto sides = cycle_sides(g, c);
    for (int s : ring_free_sides(g, c, sides)) {
      std::vector<int> fs;
      for (int f = 0; f < g.num_faces(); ++f)
        if (sides[f] == s) fs.push_back(f);
      if (fs.size() == 1) continue;
      int len = static_cast<int>(c.size());
      if (fs.size() == 2) {
        int a = g.faces()[fs[0]].length, b = g.faces()[fs[1]].length;
        if (std::min(a, b) == 5 && std::max(a, b) == len - 3) continue;
      }
      if (fs.size() == 3 && len == 9) {
        bool ok = true;
        for (int f : fs) ok &= g.faces()[f].length == 5;
        auto inside = vertices_inside(g, c, sides, s);
        ok &= inside.size() == 1 && g.degree(inside[0]) == 3;
        if (ok) continue;
      }
      return Verdict::fail(c, "short cycle bounds a disk of a forbidden shape");
    }
  }
  return Verdict::ok();
}

}  // namespace

std::vector<VertexId> vertices_inside(const EmbeddedGraph& g, const Cycle& c, const std::vector<int>& sides, int s) {
  std::set<VertexId> on(c.begin(), c.end());
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.n(); ++v) {
    if (on.count(v)) continue;
    auto fs = g.faces_at(v);
    if (!fs.empty() && sides[fs[0]] == s) out.push_back(v);
  }
  return out;
}

int edges_inside(const EmbeddedGraph& g, const Cycle& c, const std::vector<int>& sides, int s) {
  std::set<int> cyc;
  for (std::size_t i = 0; i < c.size(); ++i) cyc.insert(g.edge_id(c[i], c[(i + 1) % c.size()]));
  int count = 0;
  for (int e = 0; e < g.m(); ++e) {
    if (cyc.count(e)) continue;
    if (sides[g.face_of_dart(2 * e)] == s) ++count;
  }
  return count;
}

Verdict check_invariant(const EmbeddedGraph& g, Inv which) {
  switch (which) {
    case Inv::I0: return check_i0(g);
    case Inv::I1: return check_i1(g);
    case Inv::I2: return check_i2(g);
    case Inv::I3: return check_i3(g);
    case Inv::I4: return check_i4(g);
    case Inv::I5: return check_i5(g);
    case Inv::I6: return check_i6(g);
    case Inv::I7: return check_i7(g);
    case Inv::I8: return check_i8(g);
    case Inv::I9: return check_i9(g);
  }
  return Verdict::ok();
}

InvariantReport check_all(const EmbeddedGraph& g) {
  InvariantReport r;
  for (int i = 0; i < kNumInvariants; ++i) r[i] = check_invariant(g, static_cast<Inv>(i));
  return r;
}

bool is_allowable(const EmbeddedGraph& g, const Path& p) {
  if (p.size() < 2) return false;
  VertexId u = p.front(), v = p.back();
  int r = g.ring_of(u);
  if (r < 0 || r != g.ring_of(v) || u == v) return false;
  for (std::size_t i = 1; i + 1 < p.size(); ++i)
    if (g.is_ring_vertex(p[i])) return false;
  int len = static_cast<int>(p.size()) - 1;
  if (len < 3 || len > 4) return false;
  const Ring& ring = g.rings()[r];
  if (ring.is_vertex_ring()) return false;
  const auto& rv = ring.vertices;
  int k = static_cast<int>(rv.size());
  int iu = static_cast<int>(std::find(rv.begin(), rv.end(), u) - rv.begin());
  int iv = static_cast<int>(std::find(rv.begin(), rv.end(), v) - rv.begin());
  for (int dir : {1, -1}) {
    std::vector<VertexId> q;  // ring path from v back to u, exclusive of both ends
    for (int t = (iv + dir + k) % k; t != iu; t = (t + dir + k) % k) q.push_back(rv[t]);
    Cycle c(p.begin(), p.end());
    c.insert(c.end(), q.begin(), q.end());
    if (c.size() > 8 || !is_cycle_in(g, c)) continue;
    auto sides = cycle_sides(g, c);
    for (int s : ring_free_sides(g, c, sides)) {
      int nf = static_cast<int>(std::count(sides.begin(), sides.end(), s));
      if (len == 3) {
        if (c.size() == 5 && nf == 1) return true;
        continue;
      }
      int ne = edges_inside(g, c, sides, s);
      if (ne == 0) return true;
      if (ne > 1) continue;
      int qlen = static_cast<int>(q.size()) + 1;
      if (qlen % 2 != 0) continue;
      VertexId pm = p[2];
      VertexId qm = q[qlen / 2 - 1];
      if (g.adjacent(pm, qm) && vertices_inside(g, c, sides, s).empty()) return true;
    }
  }
  return false;
}

Verdict is_well_behaved(const EmbeddedGraph& g) {
  std::vector<VertexId> path;
  std::vector<char> on(g.n(), 0);
  std::optional<Path> bad;
  std::function<void(VertexId)> dfs = [&](VertexId x) {
    if (bad) return;
    for (VertexId y : g.neighbors(x)) {
      if (on[y]) continue;
      if (g.is_ring_vertex(y)) {
        if (y < path[0]) continue;
        if (path.size() == 1 && g.is_ring_edge(g.edge_id(x, y))) continue;
        path.push_back(y);
        if (!is_allowable(g, path)) bad = path;
        path.pop_back();
        if (bad) return;
      } else if (path.size() < 4) {
        on[y] = 1;
        path.push_back(y);
        dfs(y);
        path.pop_back();
        on[y] = 0;
      }
    }
  };
  for (VertexId s : g.ring_vertices()) {
    path = {s};
    on[s] = 1;
    dfs(s);
    on[s] = 0;
    if (bad) return Verdict::fail(*bad, "ring-to-ring path that is not allowable");
  }
  return Verdict::ok();
}

std::optional<TwoCut> has_internal_2cut(const EmbeddedGraph& g) {
  int n = g.n();
  for (VertexId x = 0; x < n; ++x)
    for (VertexId y = x + 1; y < n; ++y) {
      std::vector<int> comp(n, -1);
      comp[x] = comp[y] = -2;
      int c = 0;
      std::vector<std::vector<VertexId>> members;
      std::vector<char> has_ring;
      for (VertexId s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        members.emplace_back();
        has_ring.push_back(0);
        std::deque<VertexId> q{s};
        comp[s] = c;
        while (!q.empty()) {
          VertexId v = q.front();
          q.pop_front();
          members[c].push_back(v);
          if (g.is_ring_vertex(v)) has_ring[c] = 1;
          for (VertexId u : g.neighbors(v))
            if (comp[u] == -1) {
              comp[u] = c;
              q.push_back(u);
            }
        }
        ++c;
      }
      if (c < 2) continue;
      for (int k = 0; k < c; ++k) {
        if (has_ring[k]) continue;
        std::vector<VertexId> d = members[k];
        std::sort(d.begin(), d.end());
        return TwoCut{x, y, d};
      }
    }
  return std::nullopt;
}

FaceClass classify_face(const EmbeddedGraph& g, int f) {
  const Face& face = g.faces()[f];
  int nwalks = static_cast<int>(face.walks.size() + face.isolated.size());
  auto walks = g.face_walk_vertices(f);
  if (nwalks == 1) {
    const auto& w = walks[0];
    std::set<VertexId> s(w.begin(), w.end());
    if (!face.walks.empty() && s.size() == w.size() && w.size() >= 3) return FaceClass::Closed2Cell;
    return FaceClass::Open2CellOnly;
  }
  for (const auto& w : walks) {
    if (w.size() == 1 && g.is_vertex_ring(w[0]) && g.degree(w[0]) == 0) continue;
    std::set<VertexId> s(w.begin(), w.end());
    if (s.size() != w.size() || w.size() < 3) return FaceClass::Other;
    Cycle c(w.begin(), w.end());
    if (!is_cycle_in(g, c)) return FaceClass::Other;
    auto sides = cycle_sides(g, c);
    int other = 1 - sides[f];
    std::set<VertexId> inside(c.begin(), c.end());
    for (VertexId v : vertices_inside(g, c, sides, other)) inside.insert(v);
    int rings = 0;
    for (const Ring& r : g.rings()) {
      bool all = true;
      for (VertexId v : r.vertices) all &= inside.count(v) > 0;
      rings += all;
    }
    if (rings != 1) return FaceClass::Other;
  }
  return FaceClass::Omnipresent;
}

ExceptionalClass classify_exceptional(const EmbeddedGraph& g) {
  if (g.rings().size() != 1 || g.rings()[0].is_vertex_ring())
    throw InvariantError("MultipleRings: exactly one facial ring required");
  int l = g.rings()[0].length();
  std::vector<VertexId> inner;
  for (VertexId v = 0; v < g.n(); ++v)
    if (g.is_internal(v)) inner.push_back(v);
  std::vector<int> lens;
  for (int f : g.internal_faces()) lens.push_back(g.faces()[f].length);
  std::sort(lens.begin(), lens.end());
  auto sorted = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  auto all_deg3 = [&]() {
    for (VertexId v : inner)
      if (g.degree(v) != 3) return false;
    return true;
  };
  ExcClass cls = ExcClass::None;
  if (g.m() == l && inner.empty()) {
    cls = ExcClass::E0;
  } else if (l >= 8 && g.m() - l == 1) {
    cls = ExcClass::E1;
  } else if (inner.size() == 1 && all_deg3() && l >= 9 && lens == sorted({5, 5, l - 4})) {
    cls = ExcClass::E2;
  } else if (inner.size() == 1 && all_deg3() && l >= 11 && lens == sorted({5, 6, l - 5})) {
    cls = ExcClass::E3;
  } else if (inner.size() == 2 && all_deg3() && l >= 10 && g.adjacent(inner[0], inner[1]) &&
             lens == sorted({5, 5, 5, l - 5})) {
    cls = ExcClass::E4;
  } else if (inner.size() == 5 && all_deg3() && l >= 10 && lens == sorted({5, 5, 5, 5, 5, l - 5})) {
    bool facial = false;
    for (int f : g.internal_faces()) {
      auto vs = g.face_vertices(f);
      std::set<VertexId> s(vs.begin(), vs.end());
      if (vs.size() == 5 && s == std::set<VertexId>(inner.begin(), inner.end())) facial = true;
    }
    if (facial) cls = ExcClass::E5;
  }
  ExceptionalClass out;
  out.cls = cls;
  out.very_exceptional = cls == ExcClass::E0 || cls == ExcClass::E1 || cls == ExcClass::E2 || cls == ExcClass::E3;
  return out;
}

bool ring_is_induced(const EmbeddedGraph& g, int ring) {
  const Ring& r = g.rings()[ring];
  for (VertexId v : r.vertices)
    for (VertexId u : g.neighbors(v))
      if (g.ring_of(u) == ring && !g.is_ring_edge(g.edge_id(u, v))) return false;
  return true;
}

PlaneCase planechar_case(const EmbeddedGraph& g) {
  if (g.rings().size() != 1 || g.rings()[0].is_vertex_ring()) return PlaneCase::NotApplicable;
  int l = g.rings()[0].length();
  if (l > 12 || !ring_is_induced(g, 0)) return PlaneCase::NotApplicable;
  auto gi = girth(g);
  if (gi && *gi < 5) return PlaneCase::NotApplicable;
  if (is_R_critical(g).verdict != CritVerdict::RCritical) return PlaneCase::NonCritical;

  std::vector<VertexId> inner;
  for (VertexId v = 0; v < g.n(); ++v)
    if (g.is_internal(v)) inner.push_back(v);
  int nh = static_cast<int>(inner.size());
  int mh = 0;
  for (int e = 0; e < g.m(); ++e) {
    auto [a, b] = g.edge_ends(e);
    mh += g.is_internal(a) && g.is_internal(b);
  }
  bool connected = false;
  if (nh > 0) {
    std::set<VertexId> seen{inner[0]};
    std::deque<VertexId> q{inner[0]};
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop_front();
      for (VertexId u : g.neighbors(v))
        if (g.is_internal(u) && seen.insert(u).second) q.push_back(u);
    }
    connected = static_cast<int>(seen.size()) == nh;
  }
  if (l >= 9 && connected && mh == nh - 1 && nh <= l - 8) return PlaneCase::A;
  if (l >= 10 && connected && mh == nh && nh <= l - 5) {
    // the unique cycle: strip leaves
    std::map<VertexId, int> deg;
    for (VertexId v : inner)
      for (VertexId u : g.neighbors(v)) deg[v] += g.is_internal(u);
    std::set<VertexId> alive(inner.begin(), inner.end());
    bool changed = true;
    while (changed) {
      changed = false;
      for (VertexId v : std::vector<VertexId>(alive.begin(), alive.end()))
        if (deg[v] <= 1) {
          alive.erase(v);
          for (VertexId u : g.neighbors(v))
            if (alive.count(u)) deg[u]--;
          changed = true;
        }
    }
    if (alive.size() == 5) return PlaneCase::B;
  }
  if (l == 12) {
    const auto& rv = g.rings()[0].vertices;
    for (int off = 0; off < 2; ++off) {
      bool ok = true;
      for (int i = off; i < 12; i += 2) {
        VertexId v = rv[i];
        bool on5 = false;
        for (int f : g.faces_at(v)) on5 |= !g.is_ring_face(f) && g.faces()[f].length == 5;
        ok &= g.degree(v) == 2 && on5;
      }
      if (ok) return PlaneCase::C;
    }
  }
  return PlaneCase::Unmatched;
}

}  // namespace g5
