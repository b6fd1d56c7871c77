#include "g5/catalog.hpp"

#include "g5/invariants.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

namespace g5 {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& catalog_sources();
}

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

std::string id_from_name(std::string name) {
  std::string out;
  for (char ch : name) out += ch == 'p' ? '\'' : ch;
  return out;
}

int pos_in(const std::vector<int>& v, int x) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == x) return static_cast<int>(i);
  return -1;
}

// Next real neighbour after slot i in a rotation with half-edge markers, stepping by dir.
int real_after(const std::vector<int>& rot, int i, int dir) {
  int k = static_cast<int>(rot.size());
  for (int s = 1; s <= k; ++s) {
    int x = rot[((i + dir * s) % k + k) % k];
    if (x != kHalfEdge) return x;
  }
  return kHalfEdge;
}

std::vector<int> bfs(const Configuration& c, int s) {
  std::vector<int> dist(c.n(), -1);
  std::deque<int> q{s};
  dist[s] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int w : c.neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push_back(w);
      }
  }
  return dist;
}

// All faces of the catalog drawing, half-edges ignored, as vertex cycles in tracing order.
std::vector<std::vector<int>> trace_faces(const Configuration& c) {
  std::set<std::pair<int, int>> seen;
  std::vector<std::vector<int>> out;
  for (int u = 0; u < c.n(); ++u)
    for (int v : c.rotation[u]) {
      if (v == kHalfEdge || seen.count({u, v})) continue;
      std::vector<int> walk;
      int a = u, b = v;
      while (!seen.count({a, b})) {
        seen.insert({a, b});
        walk.push_back(a);
        int nb = real_after(c.rotation[b], pos_in(c.rotation[b], a), 1);
        a = b;
        b = nb;
      }
      out.push_back(walk);
    }
  return out;
}

bool same_cycle(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  int k = static_cast<int>(a.size());
  for (int s = 0; s < k; ++s) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) ok = a[i] == b[(i + s) % k];
    if (ok) return true;
  }
  return false;
}

}  // namespace

int Configuration::index(const std::string& name) const {
  for (int i = 0; i < n(); ++i)
    if (names[i] == name) return i;
  return -1;
}

bool Configuration::adjacent(int u, int v) const { return pos_in(rotation[u], v) >= 0; }

std::vector<int> Configuration::neighbors(int v) const {
  std::vector<int> out;
  for (int x : rotation[v])
    if (x != kHalfEdge) out.push_back(x);
  return out;
}

const std::vector<int>* Configuration::path(int u, int v) const {
  auto it = paths.find({u, v});
  if (it != paths.end()) return &it->second;
  return nullptr;
}

Configuration parse_configuration(const std::string& id, const std::string& text) {
  Configuration c;
  c.id = id;
  std::istringstream in(text);
  std::string line, section;
  std::vector<std::string> rot_lines, face_lines, dmap_lines, half_lines, path_lines;
  std::vector<std::string> iset, aset;
  bool have_vertices = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '#') {
      c.anchors.push_back(line.substr(line.find_first_not_of("# ")));
      continue;
    }
    auto t = tokens(line);
    if (t.empty()) continue;
    if (t[0] == "VERTICES") {
      c.names.assign(t.begin() + 1, t.end());
      have_vertices = true;
      section.clear();
    } else if (t[0] == "ISET") {
      iset.assign(t.begin() + 1, t.end());
      section.clear();
    } else if (t[0] == "ASET") {
      aset.assign(t.begin() + 1, t.end());
      section.clear();
    } else if (t[0] == "ROTATION" || t[0] == "HALFEDGES" || t[0] == "FACES_F" || t[0] == "DMAP" ||
               t[0] == "REPLACEMENT_PATHS") {
      section = t[0];
    } else if (section == "ROTATION") {
      rot_lines.push_back(line);
    } else if (section == "HALFEDGES") {
      half_lines.push_back(line);
    } else if (section == "FACES_F") {
      face_lines.push_back(line);
    } else if (section == "DMAP") {
      dmap_lines.push_back(line);
    } else if (section == "REPLACEMENT_PATHS") {
      path_lines.push_back(line);
    } else {
      throw CatalogInvalid("format", id + ": stray line '" + line + "'");
    }
  }
  if (!have_vertices) throw CatalogInvalid("format", id + ": missing VERTICES");
  auto idx = [&](const std::string& name) {
    int i = c.index(name);
    if (i < 0) throw CatalogInvalid("format", id + ": unknown vertex " + name);
    return i;
  };
  int n = c.n();
  c.rotation.assign(n, {});
  c.half_edges.assign(n, 0);
  c.d.assign(n, 0);
  std::vector<char> has_rot(n, 0);
  for (const auto& l : rot_lines) {
    auto t = tokens(l);
    std::string head = t[0];
    if (head.back() != ':') throw CatalogInvalid("format", id + ": rotation line '" + l + "'");
    int v = idx(head.substr(0, head.size() - 1));
    has_rot[v] = 1;
    for (std::size_t i = 1; i < t.size(); ++i) c.rotation[v].push_back(t[i] == "*" ? kHalfEdge : idx(t[i]));
  }
  for (int v = 0; v < n; ++v)
    if (!has_rot[v]) throw CatalogInvalid("format", id + ": no rotation for " + c.names[v]);
  for (const auto& l : half_lines) {
    auto t = tokens(l);
    c.half_edges[idx(t.at(0))] = std::stoi(t.at(1));
  }
  for (const auto& l : dmap_lines) {
    auto t = tokens(l);
    c.d[idx(t.at(0))] = std::stoi(t.at(1));
  }
  for (const auto& s : iset) c.I.push_back(idx(s));
  for (const auto& s : aset) c.A.push_back(idx(s));
  for (const auto& l : path_lines) {
    auto colon = l.find(':');
    if (colon == std::string::npos) throw CatalogInvalid("format", id + ": path line '" + l + "'");
    auto ends = tokens(l.substr(0, colon));
    auto body = tokens(l.substr(colon + 1));
    if (ends.size() != 2) throw CatalogInvalid("format", id + ": path line '" + l + "'");
    std::vector<int> p;
    for (const auto& s : body) p.push_back(idx(s));
    int u = idx(ends[0]), v = idx(ends[1]);
    c.paths[{u, v}] = p;
    c.paths[{v, u}] = std::vector<int>(p.rbegin(), p.rend());
  }
  // F faces are stored in tracing order of the drawing
  auto traced = trace_faces(c);
  for (const auto& l : face_lines) {
    std::vector<int> f;
    for (const auto& s : tokens(l)) f.push_back(idx(s));
    std::vector<int> rev(f.rbegin(), f.rend());
    bool found = false;
    for (const auto& t : traced) {
      if (same_cycle(t, f)) {
        c.faces.push_back(t);
        found = true;
        break;
      }
      if (same_cycle(t, rev)) {
        c.faces.push_back(t);
        found = true;
        break;
      }
    }
    if (!found) throw CatalogInvalid("F-is-face", id + ": '" + l + "' is not a face of the drawing");
  }
  if (c.id == "R7" || c.id == "R7''") {
    for (int u = 0; u < n; ++u) {
      if (c.in_dom(u)) continue;
      auto dist = bfs(c, u);
      for (int v = u + 1; v < n; ++v)
        if (!c.in_dom(v) && dist[v] >= 5) c.identifiable.push_back({u, v});
    }
  }
  return c;
}

namespace {

// Rotation system to map onto: either a host graph or a configuration drawing.
struct Target {
  std::vector<std::vector<int>> rot;
  bool adjacent(int a, int b) const { return pos_in(rot[a], b) >= 0; }
};

Target host_target(const EmbeddedGraph& g) { return Target{g.rotation()}; }

struct Propagation {
  std::vector<int> map;
  std::optional<std::pair<int, int>> identified;
};

// Extends the seed p0->p1 |-> t0->t1 through F faces and the full rotations at dom(d).
std::optional<Propagation> propagate(const Configuration& c, const Target& t, bool mirrored, int p0, int p1,
                                     int t0, int t1, bool allow_identification, bool target_is_pattern) {
  int n = c.n();
  Propagation pr;
  pr.map.assign(n, -1);
  std::map<int, std::vector<int>> preimage;
  bool changed = true;
  auto assign = [&](int p, int x) {
    if (x < 0 || x >= static_cast<int>(t.rot.size())) return false;
    if (pr.map[p] >= 0) return pr.map[p] == x;
    auto it = preimage.find(x);
    if (it != preimage.end() && !it->second.empty()) {
      if (!allow_identification || pr.identified || it->second.size() != 1) return false;
      int q = it->second[0];
      std::pair<int, int> key{std::min(p, q), std::max(p, q)};
      if (std::find(c.identifiable.begin(), c.identifiable.end(), key) == c.identifiable.end()) return false;
      pr.identified = key;
    }
    pr.map[p] = x;
    preimage[x].push_back(p);
    changed = true;
    return true;
  };
  if (!assign(p0, t0) || !assign(p1, t1)) return std::nullopt;
  int dir = mirrored ? -1 : 1;
  while (changed) {
    changed = false;
    for (const auto& f : c.faces) {
      int k = static_cast<int>(f.size());
      for (int i = 0; i < k; ++i) {
        int a = pr.map[f[i]], b = pr.map[f[(i + 1) % k]];
        if (a < 0 || b < 0) continue;
        if (!t.adjacent(a, b)) return std::nullopt;
        for (int j = 2; j < k; ++j) {
          int nb = real_after(t.rot[b], pos_in(t.rot[b], a), dir);
          if (nb == kHalfEdge || !assign(f[(i + j) % k], nb)) return std::nullopt;
          a = b;
          b = nb;
        }
        break;
      }
    }
    for (int v = 0; v < n; ++v) {
      if (!c.in_dom(v) || pr.map[v] < 0) continue;
      const auto& pr_rot = c.rotation[v];
      const auto& tr = t.rot[pr.map[v]];
      int k = static_cast<int>(pr_rot.size());
      if (static_cast<int>(tr.size()) != k) return std::nullopt;
      int iu = -1, ju = -1;
      for (int i = 0; i < k && iu < 0; ++i) {
        int u = pr_rot[i];
        if (u == kHalfEdge || pr.map[u] < 0) continue;
        int j = pos_in(tr, pr.map[u]);
        if (j < 0) return std::nullopt;
        iu = i;
        ju = j;
      }
      if (iu < 0) continue;
      for (int i = 0; i < k; ++i) {
        int j = ((ju + dir * (i - iu)) % k + k) % k;
        int p = pr_rot[i], x = tr[j];
        if (p == kHalfEdge) {
          if (target_is_pattern && x != kHalfEdge) return std::nullopt;
          continue;
        }
        if (x == kHalfEdge || !assign(p, x)) return std::nullopt;
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (pr.map[v] < 0) return std::nullopt;
  return pr;
}

// Cyclic order of the real neighbours at v agrees with the target's (reversed when mirrored).
bool rotation_consistent(const Configuration& c, const Target& t, const std::vector<int>& map, int v, bool mirrored) {
  auto nb = c.neighbors(v);
  if (nb.size() < 3) return true;
  const auto& tr = t.rot[map[v]];
  std::vector<int> pos;
  for (int u : nb) {
    int j = pos_in(tr, map[u]);
    if (j < 0) return false;
    pos.push_back(j);
  }
  if (mirrored) std::reverse(pos.begin(), pos.end());
  int k = static_cast<int>(pos.size()), descents = 0;
  for (int i = 0; i < k; ++i)
    if (pos[(i + 1) % k] < pos[i]) ++descents;
  return descents == 1;
}

std::vector<std::vector<int>> compute_automorphisms(const Configuration& c) {
  Target self;
  self.rot = c.rotation;
  std::vector<std::vector<int>> out;
  std::set<std::vector<int>> seen;
  const auto& f0 = c.faces.at(0);
  auto set_of = [](std::vector<int> s) {
    std::sort(s.begin(), s.end());
    return s;
  };
  for (int fi = 0; fi < static_cast<int>(c.faces.size()); ++fi) {
    const auto& f = c.faces[fi];
    int k = static_cast<int>(f.size());
    if (k != static_cast<int>(f0.size())) continue;
    for (int mirrored = 0; mirrored < 2; ++mirrored)
      for (int i = 0; i < k; ++i) {
        int a = f[i], b = mirrored ? f[(i - 1 + k) % k] : f[(i + 1) % k];
        auto pr = propagate(c, self, mirrored, f0[0], f0[1], a, b, false, true);
        if (!pr) continue;
        const auto& s = pr->map;
        if (set_of(s) != set_of([&] {
              std::vector<int> all(c.n());
              for (int v = 0; v < c.n(); ++v) all[v] = v;
              return all;
            }()))
          continue;
        bool ok = true;
        for (int v = 0; v < c.n() && ok; ++v) {
          ok = c.d[v] == c.d[s[v]] && c.half_edges[v] == c.half_edges[s[v]];
          for (int u : c.neighbors(v)) ok = ok && c.adjacent(s[v], s[u]);
          ok = ok && rotation_consistent(c, self, s, v, mirrored);
        }
        auto image = [&](const std::vector<int>& xs) {
          std::vector<int> r;
          for (int x : xs) r.push_back(s[x]);
          return set_of(r);
        };
        ok = ok && image(c.I) == set_of(c.I) && image(c.A) == set_of(c.A);
        for (const auto& g : c.faces) {
          std::vector<int> img;
          for (int x : g) img.push_back(s[x]);
          if (mirrored) std::reverse(img.begin(), img.end());
          bool hit = false;
          for (const auto& h : c.faces) hit = hit || same_cycle(h, img);
          ok = ok && hit;
        }
        if (ok && seen.insert(s).second) out.push_back(s);
      }
  }
  return out;
}

struct Constraint {
  const char* config;
  const char* id;
  const char* anchor;
  std::function<bool(const Configuration&)> check;
};

bool has_edge(const Configuration& c, const char* a, const char* b) {
  int u = c.index(a), v = c.index(b);
  return u >= 0 && v >= 0 && c.adjacent(u, v);
}

bool has_cycle(const Configuration& c, std::initializer_list<const char*> names) {
  std::vector<const char*> v(names);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!has_edge(c, v[i], v[(i + 1) % v.size()])) return false;
  return true;
}

bool set_is(const Configuration& c, const std::vector<int>& s, std::initializer_list<const char*> names) {
  std::set<int> want;
  for (auto nm : names) want.insert(c.index(nm));
  return std::set<int>(s.begin(), s.end()) == want;
}

bool path_is(const Configuration& c, const char* a, const char* b, std::initializer_list<const char*> names) {
  auto* p = c.path(c.index(a), c.index(b));
  if (!p) return false;
  std::vector<int> want;
  for (auto nm : names) want.push_back(c.index(nm));
  return *p == want;
}

bool has_face(const Configuration& c, std::initializer_list<const char*> names) {
  std::vector<int> f;
  for (auto nm : names) f.push_back(c.index(nm));
  std::vector<int> rev(f.rbegin(), f.rend());
  for (const auto& g : c.faces)
    if (same_cycle(g, f) || same_cycle(g, rev)) return true;
  return false;
}

int dval(const Configuration& c, const char* v) {
  int i = c.index(v);
  return i < 0 ? -1 : c.d[i];
}

const std::vector<Constraint>& textual_constraints() {
  static const std::vector<Constraint> list = {
      {"R1", "R1-cycle", "lists of two available colors on the cycle v1...vk, k=5",
       [](const Configuration& c) {
         return has_face(c, {"v1", "v2", "v3", "v4", "v5"}) && dval(c, "v1") == 3 && dval(c, "v5") == 3;
       }},
      {"R1", "R1-A", "the lists of v1 and v3 are not the same",
       [](const Configuration& c) { return set_is(c, c.A, {"x1", "x3"}) && c.I.empty(); }},
      {"R2", "R2-cycle", "k=7 for R2",
       [](const Configuration& c) {
         return has_face(c, {"v1", "v2", "v3", "v4", "v5", "v6", "v7"}) && set_is(c, c.A, {"x1", "x3"});
       }},
      {"R3", "R3-I", "v1, v3 and v5 inherit the color of the new vertex",
       [](const Configuration& c) { return set_is(c, c.I, {"v1", "v3", "v5"}) && c.A.empty(); }},
      {"R3", "R3-face", "f is the 6-face of F",
       [](const Configuration& c) {
         return c.faces.size() == 1 && has_face(c, {"v1", "v2", "v3", "v4", "v5", "v6"});
       }},
      {"R3", "R3-order", "color the vertices x2 and v2 in order",
       [](const Configuration& c) { return dval(c, "x2") == 3 && dval(c, "v2") == 3 && has_edge(c, "v2", "x2"); }},
      {"R3", "R3-shift", "vertex v4 or v6 of R3",
       [](const Configuration& c) {
         return path_is(c, "v3", "v5", {"v3", "v4", "v5"}) && path_is(c, "v1", "v5", {"v1", "v6", "v5"}) &&
                dval(c, "v4") == 0 && dval(c, "v6") == 0;
       }},
      {"R4", "R4-v2", "v2 is internal and has degree at least 4",
       [](const Configuration& c) { return dval(c, "v2") == 0; }},
      {"R4", "R4-path", "identifying v2 and x5 along the replacement path v2v1v5x5",
       [](const Configuration& c) { return path_is(c, "v2", "x5", {"v2", "v1", "v5", "x5"}); }},
      {"R4", "R4-faces", "the faces f and h form an imprint of R4",
       [](const Configuration& c) {
         return has_face(c, {"v1", "v2", "v3", "v4", "v5"}) && has_face(c, {"v5", "v4", "x4", "z", "x5"});
       }},
      {"R4", "R4-A", "we do not add the edge between x1, x3",
       [](const Configuration& c) { return set_is(c, c.A, {"x1", "x3"}); }},
      {"R4", "R4-order", "color the vertices in the order v3, v4, v5 and v1",
       [](const Configuration& c) {
         for (auto v : {"v1", "v3", "v4", "v5"})
           if (dval(c, v) != 3) return false;
         return true;
       }},
      {"R5", "R5-sets", "phi(v2)!=phi(x8) and phi(v4)=phi(x6)",
       [](const Configuration& c) { return set_is(c, c.A, {"v2", "x8"}) && set_is(c, c.I, {"v4", "x6"}); }},
      {"R5", "R5-cycle", "contains 8-cycle v1..v8",
       [](const Configuration& c) { return has_cycle(c, {"v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8"}); }},
      {"R5", "R5-paths", "new vertex identifying v4 and x6; new edge over v2v1v8x8",
       [](const Configuration& c) {
         return path_is(c, "v2", "x8", {"v2", "v1", "v8", "x8"}) && path_is(c, "v4", "x6", {"v4", "v5", "v6", "x6"});
       }},
      {"R5", "R5-cycles", "v2v3v7v6x6 and v4v3v7v8x8",
       [](const Configuration& c) { return has_edge(c, "v3", "v7") && has_face(c, {"v3", "v4", "v5", "v6", "v7"}); }},
      {"R6", "R6-A", "the reduction ensures that phi(x1)!=phi(x5)",
       [](const Configuration& c) {
         return set_is(c, c.A, {"x1", "x5"}) && dval(c, "v1") == 4 && dval(c, "v5") == 4 && !has_edge(c, "v3", "v7");
       }},
      {"R6'", "R6'-chord", "If v3 and v7 are adjacent",
       [](const Configuration& c) { return set_is(c, c.A, {"x1", "x5"}) && has_edge(c, "v3", "v7"); }},
      {"R7", "R7-vertices", "vertices v1..v12 and z with z adjacent to x6 and x7",
       [](const Configuration& c) {
         for (int i = 1; i <= 12; ++i)
           if (!c.has("v" + std::to_string(i))) return false;
         return has_edge(c, "z", "x6") && has_edge(c, "z", "x7");
       }},
      {"R7", "R7-sets", "phi(x1)!=phi(x3); the second relation phi(x7)=c2",
       [](const Configuration& c) { return set_is(c, c.A, {"x1", "x3"}) && set_is(c, c.I, {"x6", "x7"}); }},
      {"R7", "R7-cycle", "x3v3v12v6v7 is a 5-cycle when x3=x7",
       [](const Configuration& c) { return has_edge(c, "v3", "v12") && has_edge(c, "v12", "v6") && has_edge(c, "v6", "v7"); }},
      {"R7", "R7-K", "K=v1v11v8v7x7",
       [](const Configuration& c) { return has_edge(c, "v1", "v11") && has_edge(c, "v11", "v8") && has_edge(c, "v7", "x7"); }},
      {"R7", "R7-shift", "vertex z of R7",
       [](const Configuration& c) { return path_is(c, "x6", "x7", {"x6", "z", "x7"}) && dval(c, "z") == 0; }},
      {"R7", "R7-identify", "identifying two vertices at distance at least five",
       [](const Configuration& c) { return !c.identifiable.empty(); }},
      {"R7'", "R7'-cycles", "the 6-cycle v2v1v10v9v8v7 and the 5-cycle v1v11v8v9v10",
       [](const Configuration& c) {
         return has_cycle(c, {"v2", "v1", "v10", "v9", "v8", "v7"}) && has_cycle(c, {"v1", "v11", "v8", "v9", "v10"});
       }},
      {"R7'", "R7'-A", "phi(x1)!=phi(x9)", [](const Configuration& c) { return set_is(c, c.A, {"x1", "x9"}); }},
      {"R7'", "R7'-kept", "If phi(v3)=phi(v6)",
       [](const Configuration& c) { return dval(c, "v3") == 0 && dval(c, "v6") == 0 && dval(c, "v12") == 3; }},
      {"R7''", "R7''-chord", "extends to v10 and v4 by the adjacent-pair claim",
       [](const Configuration& c) {
         return has_edge(c, "v4", "v10") && has_edge(c, "v4", "v5") && has_edge(c, "v10", "v9") &&
                dval(c, "v4") == 3 && dval(c, "v10") == 3;
       }},
      {"R7''", "R7''-kept", "phi(v5), phi(v6), phi(v8), phi(v9) are given",
       [](const Configuration& c) {
         for (auto v : {"v5", "v6", "v8", "v9"})
           if (dval(c, v) != 0) return false;
         return set_is(c, c.A, {"x1", "x3"});
       }},
      {"R7''", "R7''-identify", "only possible when gamma is R7 or R7''",
       [](const Configuration& c) { return !c.identifiable.empty(); }},
      {"R7'''", "R7'''-cycle", "the 6-cycle v10v1v2v3v4v5",
       [](const Configuration& c) {
         return has_cycle(c, {"v10", "v1", "v2", "v3", "v4", "v5"}) && set_is(c, c.A, {"x1", "x3"});
       }},
      {"R7'''", "R7'''-v9", "if phi(v8)=2, then note that phi(v9)!=2",
       [](const Configuration& c) { return has_edge(c, "v8", "v9") && dval(c, "v8") == 0 && dval(c, "v9") == 0; }},
      {"R7''''", "R7''''-A", "phi(x3)!=phi(v6)",
       [](const Configuration& c) {
         return set_is(c, c.A, {"x3", "v6"}) && path_is(c, "x3", "v6", {"x3", "v3", "v12", "v6"});
       }},
      {"R7''''", "R7''''-cycle", "the 5-cycle v1v2v3v4v5",
       [](const Configuration& c) { return has_cycle(c, {"v1", "v2", "v3", "v4", "v5"}) && !has_edge(c, "v8", "v10"); }},
  };
  return list;
}

}  // namespace

void validate_configuration(const Configuration& c) {
  auto fail = [&](const char* cid, const std::string& what) { throw CatalogInvalid(cid, c.id + ": " + what); };
  int n = c.n();
  for (int v = 0; v < n; ++v) {
    std::set<int> seen;
    int halves = 0;
    for (int u : c.rotation[v]) {
      if (u == kHalfEdge) {
        ++halves;
        continue;
      }
      if (u == v || !seen.insert(u).second) fail("simple", "loop or repeated neighbour at " + c.names[v]);
      if (!c.adjacent(u, v)) fail("symmetric", c.names[v] + "-" + c.names[u] + " listed once");
    }
    if (halves != c.half_edges[v]) fail("half-edges", "half-edge count at " + c.names[v]);
    if (halves > 0 && !c.in_dom(v)) fail("half-edges", "half-edge outside dom(d) at " + c.names[v]);
    if (c.in_dom(v)) {
      if (c.d[v] < 3) fail("d-range", c.names[v]);
      if (c.d[v] != static_cast<int>(c.rotation[v].size()))
        fail("d-count", "d(" + c.names[v] + ") differs from edges plus half-edges");
    }
  }
  auto dist0 = bfs(c, 0);
  for (int v = 0; v < n; ++v)
    if (dist0[v] < 0) fail("connected", "drawing is disconnected");
  int edges = 0;
  for (int v = 0; v < n; ++v) edges += static_cast<int>(c.neighbors(v).size());
  edges /= 2;
  if (n - edges + static_cast<int>(trace_faces(c).size()) != 2) fail("planar", "Euler characteristic is not 2");
  if (c.A.size() != 0 && c.A.size() != 2) fail("A-size", "|A| must be 0 or 2");
  if (c.faces.empty()) fail("F-nonempty", "no finite face in F");
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < c.A.size(); ++i)
    for (std::size_t j = i + 1; j < c.A.size(); ++j) pairs.push_back({c.A[i], c.A[j]});
  for (std::size_t i = 0; i < c.I.size(); ++i)
    for (std::size_t j = i + 1; j < c.I.size(); ++j) pairs.push_back({c.I[i], c.I[j]});
  for (auto [u, v] : pairs) {
    auto* p = c.path(u, v);
    if (!p) fail("replacement-listed", "no replacement path " + c.names[u] + "-" + c.names[v]);
    auto du = bfs(c, u);
    if (static_cast<int>(p->size()) != du[v] + 1) fail("replacement-shortest", c.names[u] + "-" + c.names[v]);
    // uniqueness: count shortest paths
    std::vector<long long> cnt(n, 0);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return du[a] < du[b]; });
    cnt[u] = 1;
    for (int x : order)
      for (int y : c.neighbors(x))
        if (du[y] == du[x] + 1) cnt[y] += cnt[x];
    if (cnt[v] != 1) fail("replacement-unique", c.names[u] + "-" + c.names[v]);
  }
  for (const auto& [key, p] : c.paths) {
    if (p.front() != key.first || p.back() != key.second) fail("path-ends", "listed path ends");
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (!c.adjacent(p[i], p[i + 1])) fail("path-edges", "listed path uses a non-edge");
  }
  bool may_identify = c.id == "R7" || c.id == "R7''";
  if (!may_identify && !c.identifiable.empty()) fail("identify-only-R7", "identifiable pairs outside R7/R7''");
  for (const auto& k : textual_constraints())
    if (c.id == k.config && !k.check(c)) fail(k.id, std::string("\"") + k.anchor + "\"");
}

std::vector<Configuration> load_catalog() {
  static const std::vector<std::string> expected = {"R1",  "R2",   "R3",    "R4",     "R5",   "R6",
                                                    "R6'", "R7",   "R7'",   "R7''",   "R7'''", "R7''''"};
  std::map<std::string, Configuration> by_id;
  for (const auto& [name, body] : detail::catalog_sources()) {
    std::string id = id_from_name(std::string(name));
    auto c = parse_configuration(id, std::string(body));
    validate_configuration(c);
    c.automorphisms = compute_automorphisms(c);
    if (c.automorphisms.empty()) throw CatalogInvalid("automorphisms", id + ": identity not recovered");
    by_id[id] = std::move(c);
  }
  std::vector<Configuration> out;
  for (const auto& id : expected) {
    auto it = by_id.find(id);
    if (it == by_id.end()) throw CatalogInvalid("twelve-types", "missing " + id);
    out.push_back(it->second);
  }
  if (by_id.size() != expected.size()) throw CatalogInvalid("twelve-types", "unexpected extra configuration");
  return out;
}

const std::vector<Configuration>& catalog() {
  static const std::vector<Configuration> cat = load_catalog();
  return cat;
}

const Configuration& configuration(const std::string& id) {
  for (const auto& c : catalog())
    if (c.id == id) return c;
  throw std::out_of_range("no configuration " + id);
}

const char* to_string(Strength s) {
  switch (s) {
    case Strength::Faint: return "Faint";
    case Strength::Weak: return "Weak";
    case Strength::Appears: return "Appears";
    case Strength::Strong: return "Strong";
  }
  return "?";
}

std::optional<Strength> parse_strength(const std::string& s) {
  for (auto x : {Strength::Faint, Strength::Weak, Strength::Appears, Strength::Strong})
    if (s == to_string(x)) return x;
  return std::nullopt;
}

const Configuration& Appearance::conf() const { return catalog().at(config); }

VertexId Appearance::at(const std::string& name) const {
  int i = conf().index(name);
  return i < 0 ? -1 : imprint[i];
}

Strength Appearance::strength() const {
  if (strong) return Strength::Strong;
  if (appears) return Strength::Appears;
  if (weak) return Strength::Weak;
  return Strength::Faint;
}

bool Appearance::meets(Strength s) const {
  switch (s) {
    case Strength::Faint: return true;
    case Strength::Weak: return weak;
    case Strength::Appears: return appears;
    case Strength::Strong: return strong;
  }
  return false;
}

namespace {

// Host face bounded exactly by the image of F face i, or -1.
int host_face_of(const EmbeddedGraph& g, const std::vector<VertexId>& img) {
  int k = static_cast<int>(img.size());
  for (int dir = 0; dir < 2; ++dir) {
    std::vector<VertexId> seq = img;
    if (dir) std::reverse(seq.begin(), seq.end());
    DartId d = g.dart(seq[0], seq[1]);
    if (d < 0) return -1;
    int f = g.face_of_dart(d);
    const Face& face = g.faces()[f];
    if (face.walks.size() != 1 || face.length != k || !face.isolated.empty()) continue;
    DartId cur = d;
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      ok = g.tail(cur) == seq[i] && g.head(cur) == seq[(i + 1) % k];
      cur = g.face_next(cur);
    }
    if (ok) return f;
  }
  return -1;
}

std::vector<VertexId> image(const Appearance& a, const std::vector<int>& vs) {
  std::vector<VertexId> out;
  for (int v : vs) out.push_back(a.imprint[v]);
  return out;
}

bool is_image_face(const Appearance& a, int f) {
  return std::find(a.face_map.begin(), a.face_map.end(), f) != a.face_map.end();
}

bool all_neighbors_internal(const EmbeddedGraph& g, VertexId v) {
  if (!g.is_internal(v)) return false;
  for (VertexId u : g.neighbors(v))
    if (!g.is_internal(u)) return false;
  return true;
}

bool is_facial_ring_cycle(const EmbeddedGraph& g, const Cycle& cyc) {
  for (const Ring& r : g.rings()) {
    if (r.is_vertex_ring() || r.vertices.size() != cyc.size()) continue;
    if (canonical_cycle(r.vertices) == canonical_cycle(cyc)) return true;
  }
  return false;
}

}  // namespace

CheckResult check_faint(const EmbeddedGraph& g, const Appearance& a) {
  const Configuration& c = a.conf();
  auto fail = [](std::string why) { return CheckResult{false, std::move(why)}; };
  if (static_cast<int>(a.imprint.size()) != c.n()) return fail("imprint size");
  for (VertexId x : a.imprint)
    if (x < 0 || x >= g.n()) return fail("imprint out of range");
  // injective up to one allowed pair at distance >= 5
  std::map<VertexId, std::vector<int>> pre;
  for (int v = 0; v < c.n(); ++v) pre[a.imprint[v]].push_back(v);
  int merged = 0;
  for (const auto& [x, vs] : pre) {
    if (vs.size() == 1) continue;
    if (vs.size() > 2) return fail("imprint merges three vertices");
    std::pair<int, int> key{std::min(vs[0], vs[1]), std::max(vs[0], vs[1])};
    if (std::find(c.identifiable.begin(), c.identifiable.end(), key) == c.identifiable.end())
      return fail("imprint merges " + c.names[vs[0]] + " and " + c.names[vs[1]]);
    ++merged;
  }
  if (merged > 1) return fail("more than one identified pair");
  for (int v = 0; v < c.n(); ++v)
    for (int u : c.neighbors(v))
      if (!g.adjacent(a.imprint[u], a.imprint[v])) return fail("edge " + c.names[u] + c.names[v] + " missing");
  // the induced drawing agrees with the catalog drawing
  for (int v = 0; v < c.n(); ++v) {
    if (pre[a.imprint[v]].size() > 1) continue;
    auto nb = c.neighbors(v);
    if (nb.size() < 3) continue;
    const auto& hr = g.neighbors(a.imprint[v]);
    std::vector<int> pos;
    for (int u : nb) pos.push_back(pos_in(hr, a.imprint[u]));
    if (a.mirrored) std::reverse(pos.begin(), pos.end());
    int descents = 0;
    for (std::size_t i = 0; i < pos.size(); ++i)
      if (pos[(i + 1) % pos.size()] < pos[i]) ++descents;
    if (descents != 1) return fail("rotation at " + c.names[v] + " differs");
  }
  if (a.face_map.size() != c.faces.size()) return fail("face map size");
  for (std::size_t i = 0; i < c.faces.size(); ++i) {
    int f = host_face_of(g, image(a, c.faces[i]));
    if (f < 0 || f != a.face_map[i]) return fail("F face " + std::to_string(i) + " is not a host face");
    if (g.is_ring_face(f)) return fail("F face is a ring face");
    if (g.is_vertex_ring_cuff(f)) return fail("F face is the cuff face of a vertex ring");
  }
  for (int v = 0; v < c.n(); ++v) {
    if (!c.in_dom(v)) continue;
    if (g.is_ring_vertex(a.imprint[v])) return fail(c.names[v] + " lies on a ring");
    if (g.degree(a.imprint[v]) != c.d[v]) return fail("degree of " + c.names[v]);
  }
  int in_ring = 0;
  for (int v : c.I) in_ring += g.is_ring_vertex(a.imprint[v]) ? 1 : 0;
  if (in_ring > 1) return fail("two vertices of I on rings");
  return {};
}

CheckResult check_weak(const EmbeddedGraph& g, const Appearance& a) {
  const Configuration& c = a.conf();
  auto fail = [](std::string why) { return CheckResult{false, std::move(why)}; };
  for (const Cycle& cyc : cycles_up_to(g, 4)) {
    if (is_facial_ring_cycle(g, cyc)) continue;
    int k = static_cast<int>(cyc.size());
    for (int i = 0; i < k; ++i) {
      int e = g.edge_id(cyc[i], cyc[(i + 1) % k]);
      for (int f : g.edge_faces(e))
        if (is_image_face(a, f)) return fail("a cycle of length at most four touches the configuration");
    }
  }
  if (c.id == "R7" && a.at("x3") == a.at("x7") && a.at("x1") == a.at("x6")) return fail("x3=x7 and x1=x6");
  for (int u = 0; u < c.n(); ++u)
    for (int v = u + 1; v < c.n(); ++v)
      if (c.in_dom(u) && c.in_dom(v) && g.adjacent(a.imprint[u], a.imprint[v]) && !c.adjacent(u, v))
        return fail(c.names[u] + " and " + c.names[v] + " adjacent in the host only");
  if (c.id == "R4" && g.is_ring_vertex(a.at("x4")) && g.is_ring_vertex(a.at("x5")) && g.is_ring_vertex(a.at("v2")))
    return fail("x4, x5 and v2 all on rings");
  return {};
}

CheckResult check_appears(const EmbeddedGraph& g, const Appearance& a) {
  const Configuration& c = a.conf();
  auto fail = [](std::string why) { return CheckResult{false, std::move(why)}; };
  for (int v : c.I)
    if (g.is_vertex_ring(a.imprint[v])) return fail("a vertex ring belongs to I");
  if (c.id == "R3") {
    bool ok = false;
    for (int v : c.I) ok = ok || g.is_ring_vertex(a.imprint[v]) || all_neighbors_internal(g, a.imprint[v]);
    if (!ok) return fail("R3: no ring vertex in I and no interior vertex of I");
  }
  if (c.id == "R4") {
    VertexId v2 = a.at("v2");
    if (!g.is_internal(v2) || g.degree(v2) < 4) return fail("R4: v2 not internal of degree at least four");
    if (g.is_vertex_ring(a.at("x4")) || g.is_vertex_ring(a.at("x5"))) return fail("R4: x4 or x5 is a vertex ring");
  }
  if (c.id == "R5") {
    if (!g.is_internal(a.at("v4"))) return fail("R5: v4 not internal");
    VertexId v6 = a.at("v6"), v7 = a.at("v7"), v8 = a.at("v8");
    for (auto [p, q] : {std::pair{v6, v8}, std::pair{v8, v6}}) {
      DartId d = g.dart(p, v7);
      if (g.face_next(d) != g.dart(v7, q)) continue;
      int f = g.face_of_dart(d);
      if (is_image_face(a, f)) continue;
      if (g.faces()[f].length < 7) return fail("R5: face along v6v7v8 shorter than seven");
    }
  }
  if (c.id == "R6" || c.id == "R6'") {
    VertexId x = a.imprint[c.A[0]], y = a.imprint[c.A[1]];
    if (!g.is_internal(x) || !g.is_internal(y)) return fail("R6: A vertex on a ring");
    if (!all_neighbors_internal(g, x) && !all_neighbors_internal(g, y)) return fail("R6: both A vertices see rings");
  }
  if (c.r7_family()) {
    for (int v : c.A)
      if (!all_neighbors_internal(g, a.imprint[v])) return fail(c.id + ": A vertex or neighbour on a ring");
    for (int v : c.I)
      if (!all_neighbors_internal(g, a.imprint[v])) return fail(c.id + ": I vertex or neighbour on a ring");
  }
  if (c.id == "R7" && !all_neighbors_internal(g, a.at("x8"))) return fail("R7: x8 or a neighbour on a ring");
  return {};
}

CheckResult check_strong(const EmbeddedGraph& g, const Appearance& a) {
  const Configuration& c = a.conf();
  auto fail = [](std::string why) { return CheckResult{false, std::move(why)}; };
  if (c.A.size() == 2) {
    VertexId x = a.imprint[c.A[0]], y = a.imprint[c.A[1]];
    if (x != y && !g.is_internal(x) && !g.is_internal(y)) return fail("both A vertices on rings");
  }
  for (int u : c.I)
    for (int v : c.I) {
      if (u == v || a.imprint[u] == a.imprint[v]) continue;
      if (!g.is_ring_vertex(a.imprint[u])) continue;
      for (VertexId w : g.neighbors(a.imprint[v])) {
        if (!g.is_ring_vertex(w)) continue;
        bool ok = false;
        for (int wc = 0; wc < c.n() && !ok; ++wc)
          ok = a.imprint[wc] == w && c.adjacent(u, wc) && c.adjacent(wc, v);
        if (!ok) return fail("I vertex " + c.names[v] + " has a ring neighbour outside the drawing");
      }
    }
  if (c.id == "R7") {
    VertexId v2 = a.at("v2"), z = a.at("z");
    if (v2 == z || g.adjacent(v2, z)) return fail("R7: v2 and z coincide or are adjacent");
    std::set<VertexId> allowed = {a.at("v1"), a.at("v3"), a.at("x6"), a.at("x7")};
    for (VertexId w : g.neighbors(v2))
      if (g.adjacent(w, z) && !allowed.count(w)) return fail("R7: v2 and z share a neighbour");
  }
  return {};
}

std::vector<Appearance> find_appearances(const EmbeddedGraph& g, const Configuration& c, int config_index,
                                         Strength min_strength) {
  Target t = host_target(g);
  std::vector<Appearance> out;
  std::set<std::vector<int>> seen;
  const auto& f0 = c.faces.at(0);
  bool may_identify = !c.identifiable.empty();
  for (DartId d = 0; d < g.num_darts(); ++d) {
    VertexId t0 = g.tail(d), t1 = g.head(d);
    for (int mirrored = 0; mirrored < 2; ++mirrored) {
      auto pr = propagate(c, t, mirrored, f0[0], f0[1], t0, t1, may_identify, false);
      if (!pr) continue;
      // canonical representative up to catalog automorphisms
      std::vector<int> key = pr->map;
      for (const auto& s : c.automorphisms) {
        std::vector<int> alt(c.n());
        for (int v = 0; v < c.n(); ++v) alt[v] = pr->map[s[v]];
        key = std::min(key, alt);
      }
      if (!seen.insert(key).second) continue;
      Appearance a;
      a.config = config_index;
      a.imprint = pr->map;
      a.mirrored = mirrored;
      a.identified = pr->identified;
      bool faces_ok = true;
      for (const auto& f : c.faces) {
        int hf = host_face_of(g, image(a, f));
        if (hf < 0) faces_ok = false;
        a.face_map.push_back(hf);
      }
      if (!faces_ok) continue;
      if (!check_faint(g, a).ok) continue;
      a.weak = check_weak(g, a).ok;
      a.appears = check_appears(g, a).ok;
      a.strong = a.weak && a.appears && check_strong(g, a).ok;
      if (a.meets(min_strength)) out.push_back(std::move(a));
    }
  }
  return out;
}

std::vector<Appearance> find_appearances(const EmbeddedGraph& g, Strength min_strength) {
  std::vector<Appearance> out;
  const auto& cat = catalog();
  for (int i = 0; i < static_cast<int>(cat.size()); ++i) {
    auto part = find_appearances(g, cat[i], i, min_strength);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

bool touched_by(const EmbeddedGraph& g, const Appearance& a, const std::vector<int>& edges) {
  for (int e : edges)
    for (int f : g.edge_faces(e))
      if (is_image_face(a, f)) return true;
  return false;
}

std::optional<ExceptionalWheel> exceptional_wheel(const EmbeddedGraph& g) {
  if (g.rings().size() != 1 || g.rings()[0].is_vertex_ring() || g.num_components() != 1) return std::nullopt;
  const auto& ring = g.rings()[0].vertices;
  int l = static_cast<int>(ring.size());
  if (l != 10 && l != 14) return std::nullopt;
  int s = l / 2;
  std::vector<VertexId> inner;
  for (VertexId v = 0; v < g.n(); ++v)
    if (g.is_internal(v)) inner.push_back(v);
  if (static_cast<int>(inner.size()) != s) return std::nullopt;
  for (VertexId v : inner) {
    if (g.degree(v) != 3) return std::nullopt;
    int ring_nb = 0;
    for (VertexId u : g.neighbors(v)) ring_nb += g.is_ring_vertex(u) ? 1 : 0;
    if (ring_nb != 1) return std::nullopt;
  }
  // the internal vertices form a single s-cycle
  Cycle cyc{inner[0]};
  VertexId prev = -1, cur = inner[0];
  while (true) {
    VertexId next = -1;
    for (VertexId u : g.neighbors(cur))
      if (g.is_internal(u) && u != prev) {
        next = u;
        break;
      }
    if (next < 0) return std::nullopt;
    if (next == inner[0]) break;
    if (std::find(cyc.begin(), cyc.end(), next) != cyc.end()) return std::nullopt;
    cyc.push_back(next);
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(cyc.size()) != s) return std::nullopt;
  return ExceptionalWheel{s, ring, cyc};
}

StrengthenResult strengthen(const EmbeddedGraph& g, const Appearance& a) {
  if (a.strong) return {a, std::nullopt};
  auto strong = find_appearances(g, Strength::Strong);
  if (!strong.empty()) {
    // prefer the same configuration, then the catalog order
    std::stable_sort(strong.begin(), strong.end(), [&](const Appearance& x, const Appearance& y) {
      return (x.config != a.config) < (y.config != a.config);
    });
    return {strong.front(), std::nullopt};
  }
  for (Inv i : {Inv::I0, Inv::I2, Inv::I8}) {
    Verdict v = check_invariant(g, i);
    if (!v.holds) throw PreconditionError(to_string(i), v.note);
  }
  Verdict wb = is_well_behaved(g);
  if (!wb.holds) throw PreconditionError("well-behaved", wb.note);
  if (!a.appears) throw PreconditionError("appears", "the configuration does not appear");
  if (a.conf().r7_family() && a.conf().id != "R7") throw PreconditionError("appears", "variant of R7 given");
  for (const Cycle& cyc : cycles_up_to(g, 4)) {
    std::vector<int> es;
    for (std::size_t i = 0; i < cyc.size(); ++i) es.push_back(g.edge_id(cyc[i], cyc[(i + 1) % cyc.size()]));
    if (touched_by(g, a, es)) throw PreconditionError("short-cycle", "a cycle of length at most four touches it");
  }
  auto wheel = exceptional_wheel(g);
  if (!wheel) throw std::logic_error("strengthening failed: neither a strong appearance nor the wheel outcome");
  return {std::nullopt, wheel};
}

std::string describe(const Appearance& a) {
  const Configuration& c = a.conf();
  std::ostringstream out;
  out << c.id << " [" << to_string(a.strength()) << "]";
  for (int v = 0; v < c.n(); ++v) out << ' ' << c.names[v] << '=' << a.imprint[v];
  if (a.mirrored) out << " mirrored";
  return out.str();
}

}  // namespace g5
