#include "g5/harness.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "g5/colorer.hpp"

namespace g5 {

namespace {

struct Spoke {
  VertexId base;  // configuration vertex (or half-edge leaf) the spoke leaves from
  VertexId foot;  // vertex joined to the ring
  int length;     // edges from base to the ring
};

}  // namespace

CanonicalHost canonical_host(const Configuration& c, int min_ring) {
  // the configuration with half-edges turned into leaves
  std::vector<std::vector<VertexId>> rot(c.n());
  std::set<VertexId> half_leaves;
  for (int v = 0; v < c.n(); ++v)
    for (int u : c.rotation[v]) {
      if (u == kHalfEdge) {
        VertexId leaf = static_cast<VertexId>(rot.size());
        rot.push_back({v});
        rot[v].push_back(leaf);
        half_leaves.insert(leaf);
      } else {
        rot[v].push_back(u);
      }
    }
  EmbeddedGraph h = build(rot, {});
  std::set<std::vector<VertexId>> f_sets;
  for (const auto& f : c.faces) {
    std::vector<VertexId> s(f.begin(), f.end());
    std::sort(s.begin(), s.end());
    f_sets.insert(s);
  }
  int outer = -1, best = -1;
  for (int f = 0; f < h.num_faces(); ++f) {
    std::vector<VertexId> s = h.face_vertices(f);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (f_sets.count(s)) continue;
    int leaves = 0;
    for (VertexId v : s) leaves += h.degree(v) == 1 ? 1 : 0;
    if (leaves > best) {
      best = leaves;
      outer = f;
    }
  }
  if (outer < 0 || h.faces()[outer].walks.size() != 1) throw std::logic_error(c.id + ": no outer face");

  std::set<int> special(c.A.begin(), c.A.end());
  special.insert(c.I.begin(), c.I.end());
  auto wanted_degree = [&](VertexId v) {
    if (half_leaves.count(v)) return 2;
    if (c.in_dom(v)) return 0;
    if (c.id == "R4" && c.names[v] == "v2") return 4;
    return 3;
  };

  // spokes in the order the outer walk meets them
  std::vector<Spoke> spokes;
  std::vector<int> seg;  // walk edges between consecutive spokes
  std::set<VertexId> served;
  const auto& walk = h.faces()[outer].walks[0];
  int since = 0;
  int first_since = -1;
  for (DartId d : walk) {
    ++since;
    VertexId u = h.tail(d), v = h.head(d);
    if (served.count(v)) continue;
    int need = wanted_degree(v) - h.degree(v);
    if (need <= 0) continue;
    served.insert(v);
    // spokes go into the corner after u at v
    auto at = std::find(rot[v].begin(), rot[v].end(), u) - rot[v].begin();
    for (int s = 0; s < need; ++s) {
      Spoke sp;
      sp.base = v;
      if (half_leaves.count(v)) {
        sp.foot = v;
        sp.length = 1;
      } else {
        VertexId m = static_cast<VertexId>(rot.size());
        rot.push_back({v});
        rot[v].insert(rot[v].begin() + at + 1 + s, m);
        sp.foot = m;
        sp.length = 2;
      }
      if (spokes.empty())
        first_since = since;
      else
        seg.push_back(s == 0 ? since : 0);
      spokes.push_back(sp);
      since = 0;
    }
  }
  int k = static_cast<int>(spokes.size());
  if (k < 2) throw std::logic_error(c.id + ": too few spokes");
  seg.push_back(since + first_since);

  // ring steps between consecutive spokes so that every new face has length at least five
  std::vector<int> step(k);
  int len = 0;
  for (int j = 0; j < k; ++j) {
    int face = seg[j] + spokes[j].length + spokes[(j + 1) % k].length;
    step[j] = std::max(spokes[j].base == spokes[(j + 1) % k].base ? 1 : 0, 5 - face);
    len += step[j];
  }
  for (int j = 0; len < std::max(5, min_ring); j = (j + 1) % k) {
    ++step[j];
    ++len;
  }
  VertexId base_id = static_cast<VertexId>(rot.size());
  std::vector<VertexId> ring(len);
  for (int i = 0; i < len; ++i) ring[i] = base_id + i;
  rot.resize(base_id + len);
  std::vector<std::vector<VertexId>> feet(len);
  int start = 0;
  while (step[(start + k - 1) % k] == 0) ++start;
  int pos = 0;
  for (int i = 0; i < k; ++i) {
    int j = (start + i) % k;
    feet[pos].push_back(spokes[j].foot);
    rot[spokes[j].foot].push_back(ring[pos]);
    pos = (pos + step[j]) % len;
  }

  std::string last;
  for (int order = 0; order < 4; ++order) {
    auto r = rot;
    for (int i = 0; i < len; ++i) {
      VertexId nx = ring[(i + 1) % len], pv = ring[(i + len - 1) % len];
      std::vector<VertexId> f = feet[i];
      if (order & 2) std::reverse(f.begin(), f.end());
      std::vector<VertexId> seq;
      seq.push_back(order & 1 ? nx : pv);
      seq.insert(seq.end(), f.begin(), f.end());
      seq.push_back(order & 1 ? pv : nx);
      r[ring[i]] = seq;
    }
    for (int dir = 0; dir < 2; ++dir) {
      std::vector<VertexId> rv = ring;
      if (dir) std::reverse(rv.begin(), rv.end());
      try {
        EmbeddedGraph g = build(r, {Ring{RingKind::Facial, rv}});
        if (g.faces()[g.cuff_face(0)].length != len) continue;
        CanonicalHost out;
        out.graph = std::move(g);
        for (int v = 0; v < c.n(); ++v) out.of_catalog.push_back(v);
        return out;
      } catch (const GraphError& e) {
        last = e.what();
      }
    }
  }
  throw std::logic_error(c.id + ": could not close the host: " + last);
}

}  // namespace g5

namespace g5 {

namespace {

std::vector<int> code_from(const EmbeddedGraph& g, DartId root, bool mirror) {
  std::vector<int> label(g.n(), 0), start(g.n(), -1);
  std::vector<VertexId> order;
  int next = 1;
  VertexId r = g.tail(root);
  label[r] = next++;
  start[r] = root;
  order.push_back(r);
  std::vector<int> code;
  code.reserve(2 * g.m() + g.n() + 16);
  for (std::size_t i = 0; i < order.size(); ++i) {
    VertexId x = order[i];
    DartId e = start[x];
    for (int k = 0; k < g.degree(x); ++k) {
      VertexId w = g.head(e);
      if (!label[w]) {
        label[w] = next++;
        start[w] = g.twin(e);
        order.push_back(w);
      }
      code.push_back(label[w]);
      e = mirror ? g.rot_prev(e) : g.rot_next(e);
    }
    code.push_back(0);
  }
  for (const auto& ring : g.rings()) {
    std::vector<int> seq;
    for (VertexId v : ring.vertices) seq.push_back(label[v]);
    std::vector<int> best;
    for (int dir = 0; dir < 2; ++dir) {
      for (std::size_t i = 0; i < seq.size(); ++i) {
        std::vector<int> rotd(seq.begin() + i, seq.end());
        rotd.insert(rotd.end(), seq.begin(), seq.begin() + i);
        if (best.empty() || rotd < best) best = rotd;
      }
      std::reverse(seq.begin(), seq.end());
    }
    code.insert(code.end(), best.begin(), best.end());
    code.push_back(0);
  }
  return code;
}

}  // namespace

std::vector<int> canonical_code(const EmbeddedGraph& g) {
  std::vector<int> best;
  int rf = g.rings().empty() ? -1 : g.cuff_face(0);
  for (DartId d = 0; d < g.num_darts(); ++d) {
    bool fwd = rf < 0 || g.face_of_dart(d) == rf;
    bool bwd = rf < 0 || g.face_of_dart(g.twin(d)) == rf;
    if (fwd) {
      auto c = code_from(g, d, false);
      if (best.empty() || c < best) best = std::move(c);
    }
    if (bwd) {
      auto c = code_from(g, d, true);
      if (best.empty() || c < best) best = std::move(c);
    }
  }
  return best;
}

std::vector<EmbeddedGraph> enumerate_corpus(const CorpusSpec& spec) {
  const int l = spec.ring_length;
  if (l < 3 || spec.max_n > 16 || spec.max_n < l) {
    if (spec.max_n > 16) throw std::invalid_argument("corpus limited to 16 vertices");
    return {};
  }
  std::vector<std::vector<VertexId>> rot(l);
  for (int i = 0; i < l; ++i) rot[i] = {(i + l - 1) % l, (i + 1) % l};
  std::vector<VertexId> ring(l);
  for (int i = 0; i < l; ++i) ring[i] = i;
  EmbeddedGraph base;
  try {
    base = build(rot, {Ring{RingKind::Facial, ring}});
  } catch (const GraphError&) {
    for (auto& r : rot) std::swap(r[0], r[1]);
    base = build(rot, {Ring{RingKind::Facial, ring}});
  }
  if (spec.girth > l) return {};

  std::map<std::vector<int>, EmbeddedGraph> all;
  std::map<std::vector<int>, EmbeddedGraph> level;
  level.emplace(canonical_code(base), base);
  while (!level.empty()) {
    std::map<std::vector<int>, EmbeddedGraph> next_level;
    for (const auto& [code, g] : level) {
      all.emplace(code, g);
      const int room = spec.max_n - g.n();
      for (int f : g.internal_faces()) {
        const auto& walk = g.faces()[f].walks[0];
        const int L = static_cast<int>(walk.size());
        for (int i = 0; i < L; ++i)
          for (int j = i + 1; j < L; ++j) {
            VertexId x = g.tail(walk[i]), y = g.tail(walk[j]);
            for (int k = 1; k <= room + 1; ++k) {
              if (k == 1 && g.adjacent(x, y)) continue;
              if ((j - i) + k < spec.girth || (L - (j - i)) + k < spec.girth) continue;
              auto r = g.rotation();
              VertexId px = g.tail(walk[(i + L - 1) % L]), py = g.tail(walk[(j + L - 1) % L]);
              std::vector<VertexId> path{x};
              for (int t = 1; t < k; ++t) path.push_back(static_cast<VertexId>(r.size() + t - 1));
              path.push_back(y);
              r.resize(r.size() + k - 1);
              for (int t = 1; t < k; ++t) r[path[t]] = {path[t - 1], path[t + 1]};
              auto ins = [&](VertexId v, VertexId after, VertexId w) {
                auto it = std::find(r[v].begin(), r[v].end(), after);
                r[v].insert(it + 1, w);
              };
              ins(x, px, path[1]);
              ins(y, py, path[k - 1]);
              EmbeddedGraph h = build(r, {Ring{RingKind::Facial, ring}});
              auto gi = girth(h);
              if (gi && *gi < spec.girth) continue;
              auto c = canonical_code(h);
              if (all.count(c) || next_level.count(c)) continue;
              next_level.emplace(std::move(c), std::move(h));
            }
          }
      }
    }
    level = std::move(next_level);
  }

  std::vector<std::pair<std::tuple<int, int, std::vector<int>>, EmbeddedGraph>> out;
  for (auto& [code, g] : all) {
    if (spec.critical_only) {
      bool low = false;
      for (VertexId v = 0; v < g.n(); ++v) low = low || (g.is_internal(v) && g.degree(v) < 3);
      if (low || !is_R_critical(g).is_critical()) continue;
    }
    out.push_back({{g.n(), g.m(), code}, std::move(g)});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<EmbeddedGraph> res;
  for (auto& p : out) res.push_back(std::move(p.second));
  return res;
}

}  // namespace g5
