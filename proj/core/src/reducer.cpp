#include "g5/reducer.hpp"

#include "g5/colorer.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace g5 {

const char* to_string(ReduceErrorCode c) {
  switch (c) {
    case ReduceErrorCode::StrengthTooLow: return "StrengthTooLow";
    case ReduceErrorCode::MissingPrecoloring: return "MissingPrecoloring";
    case ReduceErrorCode::LoopCreated: return "LoopCreated";
    case ReduceErrorCode::Condition1Violated: return "Condition1Violated";
    case ReduceErrorCode::UnclassifiedFace: return "UnclassifiedFace";
    case ReduceErrorCode::LemmaViolated: return "LemmaViolated";
  }
  return "?";
}

const char* to_string(R4Mode m) {
  switch (m) {
    case R4Mode::NotR4: return "NotR4";
    case R4Mode::Identify: return "Identify";
    case R4Mode::PhiEqual: return "PhiEqual";
    case R4Mode::PhiDifferent: return "PhiDifferent";
  }
  return "?";
}

const Path* ReductionResult::replacement_path(VertexId u, VertexId v) const {
  for (const Path& p : paths_used) {
    if (p.front() == u && p.back() == v) return &p;
  }
  return nullptr;
}

bool ReductionResult::is_squashed(int e) const {
  return std::find(squashed.begin(), squashed.end(), e) != squashed.end();
}

namespace {

struct Entry {
  VertexId nb;
  int edge;  // host edge, or the id reserved for the new edge
};

std::string vlist(const std::vector<VertexId>& vs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
  return out.str();
}

struct Merge {
  Path path;
  int face = -1;  // host face the path is pushed into, when it runs through a kept vertex
};

int position_of_edge(const std::vector<Entry>& rot, int edge) {
  for (std::size_t i = 0; i < rot.size(); ++i)
    if (rot[i].edge == edge) return static_cast<int>(i);
  return -1;
}

// Index at which the merged rotation of u starts, for a curve leaving u along the path.
int cut_start(const EmbeddedGraph& g, const std::vector<Entry>& rot, VertexId u, VertexId next,
              const std::vector<char>& deleted, int face) {
  int e = g.edge_id(u, next);
  int i = position_of_edge(rot, e);
  if (i < 0) throw std::logic_error("replacement path edge missing from the working rotation");
  int k = static_cast<int>(rot.size());
  if (deleted[next]) return (i + 1) % k;
  if (g.corner_face(g.dart(u, next)) == face) return (i + 1) % k;
  if (g.corner_face(g.rot_prev(g.dart(u, next))) == face) return i;
  throw std::logic_error("replacement path does not run along its face");
}

}  // namespace

ReductionResult reduce(const EmbeddedGraph& g, const Appearance& a, const std::optional<Precoloring>& phi) {
  if (!a.weak) throw ReduceError(ReduceErrorCode::StrengthTooLow, "the configuration does not weakly appear");
  const Configuration& c = a.conf();
  ReductionResult res;
  res.appearance = a;
  std::vector<char> deleted(g.n(), 0);
  for (int v = 0; v < c.n(); ++v)
    if (c.in_dom(v)) deleted[a.imprint[v]] = 1;

  std::vector<std::pair<int, int>> ipairs;  // catalog pairs to identify
  bool add_a_edge = c.A.size() == 2;
  if (c.id == "R4") {
    VertexId x4 = a.at("x4"), x5 = a.at("x5");
    if (!(g.is_ring_vertex(x4) && g.is_ring_vertex(x5))) {
      res.r4_mode = R4Mode::Identify;
      ipairs.push_back({c.index("x4"), c.index("x5")});
    } else {
      if (!phi || !phi->count(x4) || !phi->count(x5))
        throw ReduceError(ReduceErrorCode::MissingPrecoloring, "R4 with x4 and x5 on rings needs phi");
      if (phi->at(x4) == phi->at(x5)) {
        res.r4_mode = R4Mode::PhiEqual;
      } else {
        res.r4_mode = R4Mode::PhiDifferent;
        add_a_edge = false;
        ipairs.push_back({c.index("v2"), c.index("x5")});
      }
    }
  } else {
    for (std::size_t i = 0; i < c.I.size(); ++i)
      for (std::size_t j = i + 1; j < c.I.size(); ++j) ipairs.push_back({c.I[i], c.I[j]});
  }

  auto catalog_face_at = [&](int middle) {
    int found = -1;
    for (std::size_t i = 0; i < c.faces.size(); ++i)
      if (std::find(c.faces[i].begin(), c.faces[i].end(), middle) != c.faces[i].end()) {
        if (found >= 0) throw std::logic_error("kept vertex of a replacement path lies on two faces of F");
        found = static_cast<int>(i);
      }
    if (found < 0) throw std::logic_error("kept vertex of a replacement path lies on no face of F");
    return a.face_map[found];
  };
  auto host_path = [&](int u, int v) {
    const std::vector<int>* p = c.path(u, v);
    if (!p) throw std::logic_error("no replacement path " + c.names[u] + "-" + c.names[v]);
    Merge m;
    for (int x : *p) m.path.push_back(a.imprint[x]);
    for (std::size_t i = 1; i + 1 < p->size(); ++i)
      if (!c.in_dom((*p)[i])) m.face = catalog_face_at((*p)[i]);
    return m;
  };

  std::vector<Merge> merges;
  for (auto [u, v] : ipairs) merges.push_back(host_path(u, v));
  // paths through kept vertices first, then the rest
  std::stable_sort(merges.begin(), merges.end(), [](const Merge& x, const Merge& y) { return x.face >= 0 && y.face < 0; });

  std::vector<std::vector<Entry>> rot(g.n());
  for (VertexId v = 0; v < g.n(); ++v)
    for (VertexId u : g.neighbors(v)) rot[v].push_back({u, g.edge_id(v, u)});

  const int new_edge_key = g.m();
  if (add_a_edge) {
    Merge m = host_path(c.A[0], c.A[1]);
    const Path& p = m.path;
    VertexId x = p.front(), y = p.back();
    if (x == y) throw ReduceError(ReduceErrorCode::LoopCreated, "the new edge would be a loop");
    for (std::size_t i = 1; i + 1 < p.size(); ++i)
      if (!deleted[p[i]] && m.face < 0) throw std::logic_error("new edge path through a kept vertex");
    int ix = position_of_edge(rot[x], g.edge_id(x, p[1]));
    int iy = position_of_edge(rot[y], g.edge_id(y, p[p.size() - 2]));
    if (!deleted[p[1]] || !deleted[p[p.size() - 2]]) throw std::logic_error("new edge must leave through deleted vertices");
    rot[x][ix] = {y, new_edge_key};
    rot[y][iy] = {x, new_edge_key};
    res.new_edge_ends = {x, y};
    res.paths_used.push_back(p);
  }

  std::vector<VertexId> parent(g.n());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<VertexId(VertexId)> find = [&](VertexId v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  for (const Merge& m : merges) {
    const Path& p = m.path;
    VertexId u = p.front(), v = p.back();
    VertexId U = find(u), V = find(v);
    res.paths_used.push_back(p);
    Path rev(p.rbegin(), p.rend());
    res.paths_used.push_back(rev);
    if (U == V) continue;
    int su = cut_start(g, rot[U], u, p[1], deleted, m.face);
    int sv = cut_start(g, rot[V], v, p[p.size() - 2], deleted, m.face);
    std::vector<Entry> merged;
    for (std::size_t i = 0; i < rot[U].size(); ++i) merged.push_back(rot[U][(su + i) % rot[U].size()]);
    for (std::size_t i = 0; i < rot[V].size(); ++i) merged.push_back(rot[V][(sv + i) % rot[V].size()]);
    // the ring vertex, if any, names the merged vertex
    VertexId keep = g.is_ring_vertex(V) && !g.is_ring_vertex(U) ? V : U;
    VertexId drop = keep == U ? V : U;
    rot[keep] = std::move(merged);
    rot[drop].clear();
    parent[drop] = keep;
  }

  std::vector<VertexId> group_rep(g.n());
  for (VertexId v = 0; v < g.n(); ++v) group_rep[v] = find(v);
  std::map<VertexId, std::vector<VertexId>> groups;
  for (VertexId v = 0; v < g.n(); ++v)
    if (!deleted[v]) groups[group_rep[v]].push_back(v);
  for (const auto& [r, members] : groups)
    if (members.size() > 1) {
      res.identified = members;
      int rings = 0;
      for (VertexId x : members) rings += g.is_ring_vertex(x) ? 1 : 0;
      if (rings > 1) throw ReduceError(ReduceErrorCode::LoopCreated, "two ring vertices identified");
    }

  // new ids in host order of representatives
  res.vertex_map.assign(g.n(), -1);
  std::vector<VertexId> rep_id(g.n(), -1);
  int nn = 0;
  for (VertexId v = 0; v < g.n(); ++v) {
    if (deleted[v]) continue;
    VertexId r = group_rep[v];
    if (rep_id[r] < 0) {
      rep_id[r] = nn++;
      res.preimage.push_back({});
    }
    res.vertex_map[v] = rep_id[r];
    res.preimage[rep_id[r]].push_back(v);
  }
  for (VertexId v = 0; v < g.n(); ++v)
    if (deleted[v]) res.deleted.push_back(v);
  if (!res.identified.empty()) res.new_vertex = res.vertex_map[res.identified.front()];

  // instances per unordered pair of new ids, to prune parallel bunches
  std::map<std::pair<int, int>, std::set<int>> bunch;
  std::vector<std::vector<Entry>> nrot(nn);
  for (VertexId r = 0; r < g.n(); ++r) {
    if (deleted[r] || group_rep[r] != r) continue;
    int a_id = rep_id[r];
    for (const Entry& e : rot[r]) {
      if (deleted[e.nb]) continue;
      int b_id = res.vertex_map[e.nb];
      if (b_id == a_id)
        throw ReduceError(ReduceErrorCode::LoopCreated, "edge " + std::to_string(e.edge) + " becomes a loop");
      nrot[a_id].push_back({b_id, e.edge});
      bunch[{std::min(a_id, b_id), std::max(a_id, b_id)}].insert(e.edge);
    }
  }
  std::set<int> dropped;
  for (const auto& [key, edges] : bunch)
    for (auto it = std::next(edges.begin()); it != edges.end(); ++it) dropped.insert(*it);
  for (int e : dropped)
    if (e != new_edge_key) res.pruned.push_back(e);
  std::vector<std::vector<VertexId>> final_rot(nn);
  for (int v = 0; v < nn; ++v)
    for (const Entry& e : nrot[v])
      if (!dropped.count(e.edge)) final_rot[v].push_back(e.nb);

  std::vector<Ring> rings;
  for (const Ring& r : g.rings()) {
    Ring nr = r;
    for (VertexId& x : nr.vertices) x = res.vertex_map[x];
    rings.push_back(nr);
  }
  res.graph = build(final_rot, rings);

  res.edge_origin.assign(res.graph.m(), -1);
  res.edge_sources.assign(res.graph.m(), {});
  for (int e = 0; e < res.graph.m(); ++e) {
    auto [x, y] = res.graph.edge_ends(e);
    const auto& inst = bunch.at({std::min(x, y), std::max(x, y)});
    int kept = *inst.begin();
    res.edge_origin[e] = kept == new_edge_key ? -1 : kept;
    if (kept == new_edge_key) res.new_edge = e;
    for (int h : inst)
      if (h != new_edge_key) res.edge_sources[e].push_back(h);
    if (res.new_vertex && (x == *res.new_vertex || y == *res.new_vertex)) {
      std::set<VertexId> touching;
      for (int h : res.edge_sources[e]) {
        auto [p, q] = g.edge_ends(h);
        for (VertexId t : {p, q})
          if (std::find(res.identified.begin(), res.identified.end(), t) != res.identified.end()) touching.insert(t);
      }
      if (touching.size() >= 2) res.squashed.push_back(e);
    }
  }
  if (res.graph.m() >= g.m()) throw std::logic_error("reduction did not lose an edge");
  return res;
}

std::vector<Cycle> lift_cycle(const EmbeddedGraph& g, const ReductionResult& res, const Cycle& c) {
  const EmbeddedGraph& gp = res.graph;
  int k = static_cast<int>(c.size());
  std::vector<std::vector<int>> options;
  for (int i = 0; i < k; ++i) {
    int e = gp.edge_id(c[i], c[(i + 1) % k]);
    if (e < 0) return {};
    if (res.is_new_edge(e)) return {};
    if (res.is_squashed(e))
      options.push_back(res.edge_sources[e]);
    else
      options.push_back({res.edge_origin[e]});
  }
  std::set<Cycle> out;
  std::vector<int> pick(k);
  std::function<void(int)> rec = [&](int i) {
    if (i == k) {
      std::map<VertexId, std::vector<VertexId>> adj;
      for (int h : pick) {
        auto [x, y] = g.edge_ends(h);
        adj[x].push_back(y);
        adj[y].push_back(x);
      }
      for (const auto& [v, nb] : adj)
        if (nb.size() != 2) return;
      if (static_cast<int>(adj.size()) != k) return;
      Cycle cyc{adj.begin()->first};
      VertexId prev = -1, cur = cyc[0];
      while (true) {
        VertexId nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        if (nxt == cyc[0]) break;
        cyc.push_back(nxt);
        prev = cur;
        cur = nxt;
      }
      if (static_cast<int>(cyc.size()) != k) return;
      out.insert(canonical_cycle(cyc));
      return;
    }
    for (int h : options[i]) {
      pick[i] = h;
      rec(i + 1);
    }
  };
  rec(0);
  return {out.begin(), out.end()};
}

namespace {

bool contractible(const EmbeddedGraph& g, const Cycle& c) {
  return surrounds_cuff(g, c).kind == CycleClass::Contractible;
}

std::vector<int> cycle_edges(const EmbeddedGraph& g, const Cycle& c) {
  std::vector<int> out;
  for (std::size_t i = 0; i < c.size(); ++i) out.push_back(g.edge_id(c[i], c[(i + 1) % c.size()]));
  return out;
}

VertexId host_of(const EmbeddedGraph& g, const ReductionResult& res, VertexId v) {
  for (VertexId x : res.preimage[v])
    if (g.is_ring_vertex(x)) return x;
  return res.preimage[v].front();
}

}  // namespace

ShortCycleReport verify_short_cycle_lemma(const EmbeddedGraph& g, const ReductionResult& res, bool assume_critical) {
  ShortCycleReport rep;
  for (Inv i : {Inv::I0, Inv::I3, Inv::I8, Inv::I9}) {
    Verdict v = check_invariant(g, i);
    if (!v.holds) {
      rep.applicable = false;
      rep.skipped_reason = std::string(to_string(i)) + " fails: " + v.note;
      return rep;
    }
  }
  if (!res.appearance.strong) {
    rep.applicable = false;
    rep.skipped_reason = "appearance is not strong";
    return rep;
  }
  if (!assume_critical) {
    if (g.ring_vertices().size() > 12 || !is_R_critical(g).is_critical()) {
      rep.applicable = false;
      rep.skipped_reason = "host not certified critical";
      return rep;
    }
  }
  const EmbeddedGraph& gp = res.graph;
  for (const Cycle& cp : cycles_up_to(gp, 4)) {
    ++rep.cycles_checked;
    if (!lift_cycle(g, res, cp).empty()) {
      ++rep.lifted;
      continue;
    }
    std::string tag = "cycle " + vlist(cp) + " of the reduction";
    if (contractible(gp, cp)) {
      rep.violations.push_back(tag + " is contractible and has no lift");
      continue;
    }
    std::vector<VertexId> ring_hosts;
    for (VertexId v : cp)
      if (gp.is_ring_vertex(v)) ring_hosts.push_back(host_of(g, res, v));

    // triangle side condition
    bool triangle_case = false;
    std::vector<VertexId> six_ring;
    if (cp.size() == 3 && ring_hosts.empty()) {
      for (const Ring& r : gp.rings()) {
        if (r.is_vertex_ring() || r.vertices.size() != 6) continue;
        std::vector<std::vector<VertexId>> nbs(3);
        for (int i = 0; i < 3; ++i)
          for (VertexId x : gp.neighbors(cp[i]))
            if (std::find(r.vertices.begin(), r.vertices.end(), x) != r.vertices.end()) nbs[i].push_back(x);
        for (VertexId a0 : nbs[0])
          for (VertexId a1 : nbs[1])
            for (VertexId a2 : nbs[2]) {
              if (a0 == a1 || a1 == a2 || a0 == a2) continue;
              if (gp.adjacent(a0, a1) || gp.adjacent(a1, a2) || gp.adjacent(a0, a2)) continue;
              triangle_case = true;
              six_ring.clear();
              for (VertexId x : r.vertices) six_ring.push_back(host_of(g, res, x));
            }
      }
    }

    bool found = false;
    int limit = std::min(9, static_cast<int>(cp.size()) + 3);
    for (const Cycle& cand : cycles_up_to(g, limit)) {
      if (contractible(g, cand)) continue;
      if (!touched_by(g, res.appearance, cycle_edges(g, cand))) continue;
      bool has_rings = true;
      for (VertexId r : ring_hosts)
        has_rings = has_rings && std::find(cand.begin(), cand.end(), r) != cand.end();
      if (!has_rings) continue;
      if (triangle_case) {
        std::set<VertexId> on_c(cand.begin(), cand.end()), on_r(six_ring.begin(), six_ring.end());
        std::vector<std::pair<VertexId, VertexId>> cr;
        for (VertexId x : cand) {
          if (on_r.count(x)) continue;
          for (VertexId y : g.neighbors(x))
            if (on_r.count(y) && !on_c.count(y)) cr.push_back({x, y});
        }
        bool side = false;
        for (std::size_t i = 0; i < cr.size() && !side; ++i)
          for (std::size_t j = i + 1; j < cr.size() && !side; ++j)
            side = cr[i].second != cr[j].second && !g.adjacent(cr[i].second, cr[j].second);
        if (!side) continue;
      }
      found = true;
      break;
    }
    if (found)
      ++rep.witnessed;
    else
      rep.violations.push_back(tag + " has no lift and no short noncontractible witness touching the configuration");
  }
  return rep;
}

Reduced whole(const ReductionResult& res) {
  Reduced r;
  r.graph = res.graph;
  r.to_gp.resize(res.graph.n());
  std::iota(r.to_gp.begin(), r.to_gp.end(), 0);
  r.edge_to_gp.resize(res.graph.m());
  std::iota(r.edge_to_gp.begin(), r.edge_to_gp.end(), 0);
  return r;
}

Reduced i0_core(const ReductionResult& res) {
  const EmbeddedGraph& gp = res.graph;
  std::vector<char> alive(gp.n(), 1);
  std::vector<int> deg(gp.n());
  for (VertexId v = 0; v < gp.n(); ++v) deg[v] = gp.degree(v);
  std::vector<VertexId> stack;
  for (VertexId v = 0; v < gp.n(); ++v)
    if (gp.is_internal(v) && deg[v] < 3) stack.push_back(v), alive[v] = 0;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId u : gp.neighbors(v))
      if (alive[u] && --deg[u] < 3 && gp.is_internal(u)) stack.push_back(u), alive[u] = 0;
  }
  std::vector<char> keep(gp.m(), 0);
  for (int e = 0; e < gp.m(); ++e) {
    auto [a, b] = gp.edge_ends(e);
    keep[e] = alive[a] && alive[b];
  }
  Subgraph s = edge_subgraph(gp, keep, alive);
  return {s.graph, s.to_host, s.edge_to_host};
}

namespace {

bool in_identified(const ReductionResult& res, VertexId x) {
  return std::find(res.identified.begin(), res.identified.end(), x) != res.identified.end();
}

// The end of host edge h lying over G' vertex p.
VertexId end_over(const EmbeddedGraph& g, const ReductionResult& res, int h, VertexId p) {
  auto [x, y] = g.edge_ends(h);
  if (res.vertex_map[x] == p) return x;
  if (res.vertex_map[y] == p) return y;
  return -1;
}

struct Regions {
  std::vector<int> of_face;  // host face -> region id
};

Regions flood_regions(const EmbeddedGraph& g, const std::vector<char>& in_j) {
  std::vector<int> parent(g.num_faces());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int e = 0; e < g.m(); ++e) {
    if (in_j[e]) continue;
    int a = find(g.face_of_dart(2 * e)), b = find(g.face_of_dart(2 * e + 1));
    parent[a] = b;
  }
  Regions r;
  r.of_face.resize(g.num_faces());
  for (int f = 0; f < g.num_faces(); ++f) r.of_face[f] = find(f);
  return r;
}

int region_of_vertex(const EmbeddedGraph& g, const Regions& reg, VertexId v) {
  if (g.degree(v) == 0) return reg.of_face[g.isolated_face(v)];
  return reg.of_face[g.face_of_dart(g.dart(v, g.neighbors(v)[0]))];
}

}  // namespace

ExpansionRecord build_expansion(const EmbeddedGraph& g, const ReductionResult& res, const Reduced& gpp, int face) {
  const EmbeddedGraph& h = gpp.graph;
  ExpansionRecord rec;
  rec.face = face;
  const Face& ff = h.faces()[face];
  auto gp_vertex = [&](VertexId v) { return gpp.to_gp[v]; };
  auto gp_edge = [&](DartId d) { return gpp.edge_to_gp[d / 2]; };
  auto is_new_vertex = [&](VertexId v) { return res.new_vertex && gp_vertex(v) == *res.new_vertex; };
  auto fail = [&](const std::string& why) {
    throw ReduceError(ReduceErrorCode::UnclassifiedFace, "face " + std::to_string(face) + ": " + why);
  };

  std::vector<char> in_j(g.m(), 0);
  std::set<VertexId> j_vertices;
  std::vector<std::vector<DartId>> host_walks;
  for (const auto& walk : ff.walks) {
    int m = static_cast<int>(walk.size());
    std::vector<VertexId> vs(m);
    for (int i = 0; i < m; ++i) vs[i] = h.tail(walk[i]);
    // host dart at a vertex that was not identified, standing in for a G' edge there
    auto slot = [&](VertexId x, int e) -> DartId {
      VertexId hx = res.preimage[x].front();
      if (res.is_new_edge(e)) {
        const Path* p = res.replacement_path(hx, hx == res.new_edge_ends.first ? res.new_edge_ends.second
                                                                               : res.new_edge_ends.first);
        if (!p) fail("new edge without a replacement path");
        return g.dart(hx, (*p)[1]);
      }
      auto [p, q] = g.edge_ends(res.edge_origin[e]);
      return g.dart(hx, p == hx ? q : p);
    };
    auto is_source = [&](int e, DartId d) {
      const auto& src = res.edge_sources[e];
      return std::find(src.begin(), src.end(), d / 2) != src.end();
    };
    // host edge of each walk edge, oriented along the walk; the new edge keeps its path
    std::vector<Path> pieces(m);
    for (int i = 0; i < m; ++i) {
      int e = gp_edge(walk[i]);
      VertexId a = gp_vertex(vs[i]), b = gp_vertex(vs[(i + 1) % m]);
      if (res.is_new_edge(e)) {
        const Path* p = res.replacement_path(res.new_edge_ends.first, res.new_edge_ends.second);
        if (!p) fail("new edge without a replacement path");
        Path q = *p;
        if (res.vertex_map[q.front()] != a) std::reverse(q.begin(), q.end());
        pieces[i] = q;
        rec.uses_replacement_path = true;
      } else if (res.is_squashed(e)) {
        // the source lying on the side of the face
        DartId d;
        if (is_new_vertex(vs[(i + 1) % m])) {
          d = slot(a, gp_edge(walk[(i - 1 + m) % m]));
          do d = g.rot_next(d); while (!is_source(e, d));
          pieces[i] = {g.tail(d), g.head(d)};
        } else {
          d = slot(b, gp_edge(walk[(i + 1) % m]));
          do d = g.rot_prev(d); while (!is_source(e, d));
          pieces[i] = {g.head(d), g.tail(d)};
        }
      } else {
        int hh = res.edge_origin[e];
        pieces[i] = {end_over(g, res, hh, a), end_over(g, res, hh, b)};
      }
    }
    for (int i = 0; i < m; ++i) {
      if (!is_new_vertex(vs[(i + 1) % m])) continue;
      VertexId u = pieces[i].back(), v = pieces[(i + 1) % m].front();
      if (u == v) continue;
      if (!in_identified(res, u) || !in_identified(res, v)) fail("new vertex entered away from the identified vertices");
      const Path* p = res.replacement_path(u, v);
      if (!p) fail("no replacement path between identified vertices");
      for (std::size_t t = 1; t < p->size(); ++t) pieces[i].push_back((*p)[t]);
      rec.uses_replacement_path = true;
    }
    std::vector<VertexId> hw;
    for (int i = 0; i < m; ++i) {
      const Path& p = pieces[i];
      const Path& q = pieces[(i + 1) % m];
      if (p.back() != q.front()) fail("rewritten boundary walk does not close up");
      for (std::size_t t = 0; t + 1 < p.size(); ++t) hw.push_back(p[t]);
    }
    std::vector<DartId> darts;
    for (std::size_t i = 0; i < hw.size(); ++i) {
      DartId d = g.dart(hw[i], hw[(i + 1) % hw.size()]);
      if (d < 0) fail("rewritten walk uses a non-edge");
      darts.push_back(d);
      in_j[d / 2] = 1;
      j_vertices.insert(hw[i]);
    }
    rec.walks.push_back(hw);
    host_walks.push_back(darts);
  }
  std::vector<VertexId> isolated_j;
  for (VertexId v : ff.isolated) {
    for (VertexId x : res.preimage[gp_vertex(v)]) {
      j_vertices.insert(x);
      isolated_j.push_back(x);
    }
  }
  for (int e = 0; e < g.m(); ++e)
    if (in_j[e]) rec.j_edges.push_back(e);
  rec.j_vertices.assign(j_vertices.begin(), j_vertices.end());

  // faces of J, as regions of host faces glued across edges outside J
  Regions reg = flood_regions(g, in_j);
  std::vector<char> j_vertex(g.n(), 0);
  for (VertexId v : rec.j_vertices) j_vertex[v] = 1;
  auto j_next = [&](DartId d) {
    // face-tracing successor of d in J
    DartId t = g.twin(d);
    DartId x = g.rot_next(t);
    while (!in_j[x / 2]) x = g.rot_next(x);
    return x;
  };
  std::set<int> s_regions;
  for (const auto& walk : host_walks)
    for (DartId d : walk) s_regions.insert(reg.of_face[g.face_of_dart(d)]);
  if (host_walks.empty())
    for (VertexId v : isolated_j) s_regions.insert(region_of_vertex(g, reg, v));

  // condition (1)
  for (VertexId v : isolated_j)
    if (!g.is_vertex_ring(v)) throw ReduceError(ReduceErrorCode::Condition1Violated, "isolated vertex of J is not a vertex ring");
  for (int r = 0; r < static_cast<int>(g.rings().size()); ++r) {
    int cf = g.cuff_face(r);
    if (cf < 0 || !s_regions.count(reg.of_face[cf])) continue;
    const Ring& ring = g.rings()[r];
    if (!ring.is_vertex_ring())
      throw ReduceError(ReduceErrorCode::Condition1Violated, "a ring face lies inside a face of S");
    if (!j_vertex[ring.vertices[0]])
      throw ReduceError(ReduceErrorCode::Condition1Violated, "a cuff meets S away from J");
  }
  for (int e : rec.j_edges) {
    bool seen = s_regions.count(reg.of_face[g.face_of_dart(2 * e)]) || s_regions.count(reg.of_face[g.face_of_dart(2 * e + 1)]);
    if (!seen) throw ReduceError(ReduceErrorCode::Condition1Violated, "edge of J outside the boundary of S");
  }

  // boundary orbits of J grouped by region
  std::map<int, std::vector<std::vector<DartId>>> orbits;
  std::set<DartId> seen;
  for (int e : rec.j_edges)
    for (DartId d : {2 * e, 2 * e + 1}) {
      if (seen.count(d)) continue;
      int r = reg.of_face[g.face_of_dart(d)];
      std::vector<DartId> orbit;
      DartId x = d;
      do {
        seen.insert(x);
        orbit.push_back(x);
        x = j_next(x);
      } while (x != d);
      if (s_regions.count(r)) orbits[r].push_back(orbit);
    }

  rec.j_face_count = static_cast<int>(s_regions.size());
  int total = 0;
  for (int r : s_regions) {
    int len = 0;
    for (const auto& o : orbits[r]) len += static_cast<int>(o.size());
    rec.s_lengths.push_back(len);
    total += len;
  }
  rec.elasticity = total - ff.length;

  // G-expansion: each face of S cut open along its boundary walks
  for (int r : s_regions) {
    ExpansionMember mem;
    for (int f = 0; f < g.num_faces(); ++f)
      if (reg.of_face[f] == r && !g.is_ring_face(f)) mem.host_faces.push_back(f);
    std::map<VertexId, int> inner_id;
    std::map<DartId, int> copy_of_in_dart;  // dart arriving at a walk position -> member vertex
    int count = 0;
    for (VertexId v = 0; v < g.n(); ++v) {
      bool inside = (!j_vertex[v] || std::find(isolated_j.begin(), isolated_j.end(), v) != isolated_j.end()) &&
                    region_of_vertex(g, reg, v) == r;
      if (!inside) continue;
      inner_id[v] = count++;
      mem.to_host.push_back(v);
    }
    std::vector<std::vector<int>> ring_seqs;
    for (const auto& o : orbits[r]) {
      std::vector<int> seq;
      for (std::size_t i = 0; i < o.size(); ++i) {
        DartId in = o[(i + o.size() - 1) % o.size()];
        copy_of_in_dart[in] = count;
        seq.push_back(count++);
        mem.to_host.push_back(g.head(in));
      }
      ring_seqs.push_back(seq);
    }
    std::vector<std::vector<VertexId>> mrot(count);
    // member vertex seen from host vertex x through host dart x->y (y's side)
    auto copy_at = [&](VertexId x, DartId out) -> int {
      auto it = inner_id.find(x);
      if (it != inner_id.end()) return it->second;
      // walk backwards in the rotation to the J dart opening this corner
      DartId d = out;
      while (!in_j[d / 2]) d = g.rot_prev(d);
      // corner after J dart d = x->a belongs to the position entered by a->x
      auto jt = copy_of_in_dart.find(g.twin(d));
      return jt == copy_of_in_dart.end() ? -1 : jt->second;
    };
    for (const auto& [v, id] : inner_id)
      for (VertexId u : g.neighbors(v)) {
        DartId back = g.dart(u, v);
        int cu = copy_at(u, back);
        if (cu < 0) fail("expansion lost an edge");
        mrot[id].push_back(cu);
      }
    for (const auto& o : orbits[r])
      for (std::size_t i = 0; i < o.size(); ++i) {
        DartId in = o[(i + o.size() - 1) % o.size()];
        DartId out = o[i];
        VertexId x = g.head(in);
        int me = copy_of_in_dart[in];
        int prev_copy = copy_of_in_dart[o[(i + o.size() - 2) % o.size()]];
        int next_copy = copy_of_in_dart[out];
        mrot[me].push_back(prev_copy);
        for (DartId d = g.rot_next(g.twin(in)); d != out; d = g.rot_next(d)) {
          VertexId y = g.head(d);
          int cy = copy_at(y, g.twin(d));
          if (cy < 0) fail("expansion lost a chord");
          mrot[me].push_back(cy);
        }
        mrot[me].push_back(next_copy);
        (void)x;
      }
    std::vector<Ring> mrings;
    for (const auto& seq : ring_seqs) {
      Ring ring;
      ring.kind = RingKind::Facial;
      ring.vertices.assign(seq.rbegin(), seq.rend());
      mrings.push_back(ring);
    }
    for (VertexId v : isolated_j)
      if (inner_id.count(v)) {
        Ring ring;
        ring.kind = g.rings()[g.ring_of(v)].kind;
        ring.vertices = {inner_id[v]};
        mrings.push_back(ring);
      }
    try {
      mem.graph = build(mrot, mrings);
      mem.built = true;
    } catch (const GraphError& e) {
      mem.note = e.what();
    }
    rec.members.push_back(std::move(mem));
  }
  return rec;
}

ElasticityReport elasticity_audit(const EmbeddedGraph& g, const ReductionResult& res, const Reduced& gpp) {
  ElasticityReport rep;
  for (int f : gpp.graph.internal_faces()) {
    ExpansionRecord rec = build_expansion(g, res, gpp, f);
    rep.elasticity.push_back({f, rec.elasticity});
    rep.total += rec.elasticity;
    if (rec.elasticity != 0) ++rep.nonzero;
    if (rec.elasticity < 0) rep.violations.push_back("negative elasticity at face " + std::to_string(f));
    if (rec.elasticity != 0 && !rec.uses_replacement_path)
      rep.violations.push_back("nonzero elasticity without a replacement path at face " + std::to_string(f));
    FaceClass fc = classify_face(gpp.graph, f);
    if (fc == FaceClass::Closed2Cell || fc == FaceClass::Omnipresent) {
      if (rec.elasticity > 5 || rec.elasticity == 4)
        rep.violations.push_back("face " + std::to_string(f) + " has elasticity " + std::to_string(rec.elasticity));
    }
  }
  if (rep.nonzero > 3) rep.violations.push_back("more than three faces with nonzero elasticity");
  if (rep.total > 10) rep.violations.push_back("elasticities sum to " + std::to_string(rep.total));
  return rep;
}

namespace {

// Whether the member, a disk with one ring, has a path v1v2v3v4 with ends on the ring, inner
// vertices off it, and at least two host vertices inside each side.
bool has_splitting_path(const EmbeddedGraph& m) {
  const auto& ring = m.rings()[0].vertices;
  int l = static_cast<int>(ring.size());
  std::vector<int> pos(m.n(), -1);
  for (int i = 0; i < l; ++i) pos[ring[i]] = i;
  for (VertexId v2 = 0; v2 < m.n(); ++v2) {
    if (pos[v2] >= 0) continue;
    for (VertexId v3 : m.neighbors(v2)) {
      if (pos[v3] >= 0 || v3 <= v2) continue;
      for (VertexId v1 : m.neighbors(v2)) {
        if (pos[v1] < 0) continue;
        for (VertexId v4 : m.neighbors(v3)) {
          if (pos[v4] < 0 || v4 == v1) continue;
          bool ok = true;
          for (int dir : {1, -1}) {
            Cycle cyc{v1, v2, v3, v4};
            for (int i = pos[v4] + dir; ((i % l) + l) % l != pos[v1]; i += dir) cyc.push_back(ring[((i % l) + l) % l]);
            auto sides = cycle_sides(m, cyc);
            int ring_side = -1;
            int rf = -1;
            for (int f = 0; f < m.num_faces(); ++f)
              if (m.is_ring_face(f)) rf = f;
            ring_side = sides[rf];
            auto inside = vertices_inside(m, cyc, sides, 1 - ring_side);
            if (inside.size() < 2) ok = false;
          }
          if (ok) return true;
        }
      }
    }
  }
  return false;
}

ExtQ sq(const WeightFunction& w, int l, const std::string& where) {
  if (l < 5) throw ReduceError(ReduceErrorCode::LemmaViolated, where + ": weight argument " + std::to_string(l) + " below 5");
  return ExtQ(w.s(l));
}

EmbeddedGraph component_with_ring(const EmbeddedGraph& g, int ring) {
  std::vector<int> comp = g.component_of();
  int target = comp[g.rings()[ring].vertices[0]];
  std::vector<VertexId> id(g.n(), -1);
  std::vector<VertexId> back;
  for (VertexId v = 0; v < g.n(); ++v)
    if (comp[v] == target) {
      id[v] = static_cast<int>(back.size());
      back.push_back(v);
    }
  std::vector<std::vector<VertexId>> rot(back.size());
  for (std::size_t i = 0; i < back.size(); ++i)
    for (VertexId u : g.neighbors(back[i])) rot[i].push_back(id[u]);
  Ring r = g.rings()[ring];
  for (VertexId& v : r.vertices) v = id[v];
  return build(rot, {r});
}

bool is_bare_ring(const EmbeddedGraph& g, int ring) {
  std::vector<int> comp = g.component_of();
  const Ring& r = g.rings()[ring];
  int target = comp[r.vertices[0]];
  int nv = 0, ne = 0;
  for (VertexId v = 0; v < g.n(); ++v)
    if (comp[v] == target) {
      ++nv;
      ne += g.degree(v);
    }
  ne /= 2;
  if (r.is_vertex_ring()) return nv == 1;
  return nv == static_cast<int>(r.vertices.size()) && ne == static_cast<int>(r.vertices.size());
}

}  // namespace

ContributionDetail omnipresent_contribution(const Reduced& gpp, int el, const WeightFunction& w) {
  const EmbeddedGraph& h = gpp.graph;
  int k = static_cast<int>(h.rings().size());
  std::vector<int> rich;
  std::set<int> comps_seen;
  std::vector<int> comp = h.component_of();
  for (int i = 0; i < k; ++i) {
    int c = comp[h.rings()[i].vertices[0]];
    if (!is_bare_ring(h, i) && comps_seen.insert(c).second) rich.push_back(i);
  }
  if (rich.size() >= 2) return {ExtQ(Q(1)), "two rings with more than the ring"};
  int first = rich.empty() ? 0 : rich[0];
  if (h.rings()[first].is_vertex_ring()) {
    return {ExtQ(Q(5 - el) + 5 * w.s(5)), "vertex-ring component"};
  }
  ExceptionalClass ec = classify_exceptional(component_with_ring(h, first));
  switch (ec.cls) {
    case ExcClass::E0:
    case ExcClass::E1:
    case ExcClass::E2:
    case ExcClass::E3: return {ExtQ::neg_inf(), std::string("omnipresent, component ") + to_string(ec.cls)};
    case ExcClass::E4:
    case ExcClass::E5: return {ExtQ(Q(5 - el) - 5 * w.s(5)), std::string("omnipresent, component ") + to_string(ec.cls)};
    case ExcClass::None: break;
  }
  return {ExtQ(Q(5 - el) + 5 * w.s(5)), "omnipresent, component not exceptional"};
}

ContributionDetail contribution(const EmbeddedGraph& g, const ReductionResult& res, const Reduced& gpp,
                                const ExpansionRecord& rec, const WeightFunction& w) {
  (void)g;
  (void)res;
  int el = rec.elasticity;
  FaceClass fc = classify_face(gpp.graph, rec.face);
  if (fc == FaceClass::Omnipresent) return omnipresent_contribution(gpp, el, w);
  if (fc != FaceClass::Closed2Cell)
    throw ReduceError(ReduceErrorCode::UnclassifiedFace, "face " + std::to_string(rec.face) + " is " + to_string(fc));
  std::string where = "face " + std::to_string(rec.face);
  auto member_class = [&](const ExpansionMember& m) {
    if (!m.built) throw ReduceError(ReduceErrorCode::UnclassifiedFace, where + ": expansion not a graph (" + m.note + ")");
    if (m.graph.rings().size() != 1 || m.graph.rings()[0].is_vertex_ring())
      throw ReduceError(ReduceErrorCode::UnclassifiedFace, where + ": expansion member is not a disk with one ring");
    return classify_exceptional(m.graph).cls;
  };
  int s_count = rec.j_face_count;
  if (s_count == 1) {
    const ExpansionMember& m = rec.members.at(0);
    ExcClass cls = member_class(m);
    switch (cls) {
      case ExcClass::E0:
        return {el != 0 ? ExtQ::neg_inf() : ExtQ(Q(0)), "E0"};
      case ExcClass::E1:
        if (el == 5) return {ExtQ::neg_inf(), "E1, el=5"};
        return {sq(w, 8 - el, where) - 2 * w.s(5), "E1"};
      case ExcClass::E2:
        if (el == 5) return {ExtQ::neg_inf(), "E2, el=5"};
        return {sq(w, 9 - el, where) - 3 * w.s(5), "E2"};
      case ExcClass::E3:
        return {sq(w, 11 - el, where) - (2 * w.s(6) + w.s(5)), "E3"};
      case ExcClass::E4:
      case ExcClass::E5:
        return {sq(w, 10 - el, where) - 6 * w.s(5), std::string(to_string(cls))};
      case ExcClass::None:
        break;
    }
    if (has_splitting_path(m.graph)) return {ExtQ(w.s(7)), "not exceptional, splitting path"};
    ExtQ v = sq(w, 11 - el, where);
    v += ExtQ(5 * w.s(5) - w.s(6));
    return {v, "not exceptional"};
  }
  if (s_count == 2) {
    bool two_cycles = true, has5 = false;
    for (const auto& m : rec.members) {
      if (member_class(m) != ExcClass::E0) two_cycles = false;
      if (m.graph.rings()[0].vertices.size() == 5) has5 = true;
    }
    if (two_cycles && has5) return {sq(w, 10 - el, where) - 6 * w.s(5), "two cycles, one a 5-cycle"};
  }
  return {sq(w, 12 - el, where) - 2 * w.s(6), "several faces"};
}

ExtQ total_contribution(const EmbeddedGraph& g, const ReductionResult& res, const Reduced& gpp,
                        const WeightFunction& w) {
  ExtQ total(Q(0));
  if (res.appearance.conf().id == "R3") total = total - w.s(6);
  for (int f : gpp.graph.internal_faces()) {
    ExpansionRecord rec = build_expansion(g, res, gpp, f);
    total += contribution(g, res, gpp, rec, w).value;
  }
  return total;
}

namespace {

bool has_new_stuff(const ReductionResult& res, const Reduced& gpp) {
  for (VertexId v : gpp.to_gp)
    if (res.new_vertex && v == *res.new_vertex) return true;
  for (int e : gpp.edge_to_gp)
    if (res.is_new_edge(e)) return true;
  return false;
}

bool is_one_ring_disk(const EmbeddedGraph& g) {
  return g.rings().size() == 1 && !g.rings()[0].is_vertex_ring();
}

}  // namespace

AuditReport winners_audit(const EmbeddedGraph& g, const ReductionResult& res, const Reduced& gpp,
                          const WeightFunction& w) {
  AuditReport rep;
  auto skip = [&](std::string why) {
    rep.applicable = false;
    rep.skipped_reason = std::move(why);
    return rep;
  };
  Verdict wb = is_well_behaved(g);
  if (!wb.holds) return skip("host not well-behaved");
  for (Inv i : {Inv::I0, Inv::I1, Inv::I2, Inv::I3, Inv::I4, Inv::I8})
    if (!check_invariant(g, i).holds) return skip(std::string("host fails ") + to_string(i));
  if (!res.appearance.strong) return skip("appearance is not strong");
  if (!check_invariant(gpp.graph, Inv::I6).holds) return skip("reduced graph fails I6");
  if (!has_new_stuff(res, gpp)) return skip("no new vertex or edge in G''");
  bool all_closed = true, has_omni = false;
  for (int f : gpp.graph.internal_faces()) {
    FaceClass fc = classify_face(gpp.graph, f);
    if (fc == FaceClass::Omnipresent)
      has_omni = true;
    else if (fc != FaceClass::Closed2Cell)
      return skip("a face of G'' is neither closed 2-cell nor omnipresent");
    all_closed = all_closed && fc == FaceClass::Closed2Cell;
  }
  ExtQ c = total_contribution(g, res, gpp, w);
  rep.notes.push_back("c(G'') = " + c.str());
  if (c < ExtQ(Q(0))) rep.violations.push_back("contribution " + c.str() + " is negative");
  if (all_closed) {
    bool six = false;
    for (int f : gpp.graph.internal_faces()) six = six || gpp.graph.faces()[f].length >= 6;
    if (!six) rep.violations.push_back("no face of length at least six");
    if (is_one_ring_disk(g) && c < ExtQ(10 * w.s(5)))
      rep.violations.push_back("contribution " + c.str() + " below 10 s(5)");
  }
  // components carrying a new vertex or edge are not (very) exceptional
  bool rednt_hyp = check_invariant(g, Inv::I0).holds && check_invariant(g, Inv::I4).holds &&
                   check_invariant(g, Inv::I8).holds && check_invariant(gpp.graph, Inv::I0).holds;
  if (rednt_hyp && all_closed && is_one_ring_disk(g) && !has_omni) {
    EmbeddedGraph hcomp = component_with_ring(gpp.graph, 0);
    ExceptionalClass ec = classify_exceptional(hcomp);
    const std::string& id = res.appearance.conf().id;
    bool strict = id == "R6" || id == "R6'" || id.rfind("R7", 0) == 0;
    if (ec.very_exceptional) rep.violations.push_back(std::string("new component is very exceptional: ") + to_string(ec.cls));
    if (strict && ec.cls != ExcClass::None)
      rep.violations.push_back(std::string("new component is exceptional: ") + to_string(ec.cls));
  }
  return rep;
}

AuditReport face_cover_audit(const EmbeddedGraph& g, const ReductionResult& res, const Reduced& gpp) {
  AuditReport rep;
  std::vector<int> cover(g.num_faces(), 0);
  for (int f : gpp.graph.internal_faces()) {
    ExpansionRecord rec = build_expansion(g, res, gpp, f);
    for (const auto& m : rec.members)
      for (int hf : m.host_faces) ++cover[hf];
  }
  int six_face = -1;
  if (res.appearance.conf().id == "R3") six_face = res.appearance.face_map.at(0);
  for (int f = 0; f < g.num_faces(); ++f) {
    if (g.is_ring_face(f)) continue;
    if (f == six_face) {
      if (cover[f] > 1) rep.violations.push_back("the 6-face of R3 is covered " + std::to_string(cover[f]) + " times");
      if (cover[f] == 1) rep.notes.push_back("the 6-face of R3 lies inside an expansion member");
      continue;
    }
    if (cover[f] != 1)
      rep.violations.push_back("host face " + std::to_string(f) + " covered " + std::to_string(cover[f]) + " times");
  }
  return rep;
}

}  // namespace g5
