#include "g5/colorer.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace g5 {

const char* to_string(ColorErrorCode c) {
  switch (c) {
    case ColorErrorCode::ImproperPrecoloring: return "ImproperPrecoloring";
    case ColorErrorCode::AllListsEqual: return "AllListsEqual";
    case ColorErrorCode::InvalidInput: return "InvalidInput";
    case ColorErrorCode::TooLarge: return "TooLarge";
    case ColorErrorCode::PrecoloringExtends: return "PrecoloringExtends";
    case ColorErrorCode::LiftCaseExhausted: return "LiftCaseExhausted";
  }
  return "?";
}

namespace {

constexpr std::uint8_t kAll = 7;

bool search(const AdjList& adj, std::vector<std::uint8_t>& dom, Coloring& col, int v) {
  int n = static_cast<int>(adj.size());
  if (v == n) return true;
  for (int c = 1; c <= 3; ++c) {
    std::uint8_t bit = static_cast<std::uint8_t>(1u << (c - 1));
    if (!(dom[v] & bit)) continue;
    std::vector<std::pair<int, std::uint8_t>> undo;
    bool ok = true;
    for (int u : adj[v]) {
      if (u < v) continue;
      if (dom[u] & bit) {
        undo.push_back({u, dom[u]});
        dom[u] = static_cast<std::uint8_t>(dom[u] & ~bit);
        if (!dom[u]) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      col[v] = c;
      if (search(adj, dom, col, v + 1)) return true;
      col[v] = 0;
    }
    for (auto it = undo.rbegin(); it != undo.rend(); ++it) dom[it->first] = it->second;
  }
  return false;
}

}  // namespace

std::optional<Coloring> solve_domains(const AdjList& adj, std::vector<std::uint8_t> domains) {
  int n = static_cast<int>(adj.size());
  // fixed vertices prune their earlier neighbours up front
  for (int v = 0; v < n; ++v) {
    if (!domains[v]) return std::nullopt;
    if (__builtin_popcount(domains[v]) == 1)
      for (int u : adj[v])
        if (u < v) {
          domains[u] = static_cast<std::uint8_t>(domains[u] & ~domains[v]);
          if (!domains[u]) return std::nullopt;
        }
  }
  Coloring col(n, 0);
  if (!search(adj, domains, col, 0)) return std::nullopt;
  return col;
}

AdjList adjacency_of(const EmbeddedGraph& g) {
  AdjList adj(g.n());
  for (VertexId v = 0; v < g.n(); ++v) adj[v] = g.neighbors(v);
  return adj;
}

std::vector<std::uint8_t> extension_domains(const EmbeddedGraph& g, const Precoloring& phi) {
  std::vector<std::uint8_t> dom(g.n(), kAll);
  for (auto [v, c] : phi) {
    if (v < 0 || v >= g.n() || c < 1 || c > 3)
      throw ColorError(ColorErrorCode::InvalidInput, "precolouring entry out of range");
    std::uint8_t bit = static_cast<std::uint8_t>(1u << (c - 1));
    int r = g.ring_of(v);
    if (r >= 0 && g.rings()[r].kind == RingKind::WeakVertex)
      dom[v] = static_cast<std::uint8_t>(kAll & ~bit);
    else
      dom[v] = bit;
  }
  return dom;
}

namespace {

void check_precoloring(const EmbeddedGraph& g, const Precoloring& phi) {
  for (VertexId v : g.ring_vertices())
    if (!phi.count(v)) throw ColorError(ColorErrorCode::InvalidInput, "ring vertex " + std::to_string(v) + " uncoloured");
  auto weak = [&](VertexId v) {
    int r = g.ring_of(v);
    return r >= 0 && g.rings()[r].kind == RingKind::WeakVertex;
  };
  for (int e = 0; e < g.m(); ++e) {
    auto [a, b] = g.edge_ends(e);
    if (!g.is_ring_edge(e)) continue;
    auto ia = phi.find(a), ib = phi.find(b);
    if (ia != phi.end() && ib != phi.end() && !weak(a) && !weak(b) && ia->second == ib->second)
      throw ColorError(ColorErrorCode::ImproperPrecoloring,
                       "ring edge " + std::to_string(a) + "-" + std::to_string(b) + " monochromatic");
  }
}

}  // namespace

std::optional<Coloring> oracle_extend(const EmbeddedGraph& g, const Precoloring& phi) {
  check_precoloring(g, phi);
  return solve_domains(adjacency_of(g), extension_domains(g, phi));
}

bool is_proper(const EmbeddedGraph& g, const Coloring& c) {
  if (static_cast<int>(c.size()) != g.n()) return false;
  for (int e = 0; e < g.m(); ++e) {
    auto [a, b] = g.edge_ends(e);
    if (c[a] != 0 && c[a] == c[b]) return false;
  }
  return true;
}

bool extends(const EmbeddedGraph& g, const Precoloring& phi, const Coloring& c) {
  if (!is_proper(g, c)) return false;
  for (int x : c)
    if (x < 1 || x > 3) return false;
  auto dom = extension_domains(g, phi);
  for (VertexId v = 0; v < g.n(); ++v)
    if (!(dom[v] & (1u << (c[v] - 1)))) return false;
  return true;
}

std::optional<std::pair<int, int>> extend_adjacent_pair(int w1, int w2, int w3, int w4) {
  for (int a = 1; a <= 3; ++a) {
    if (a == w1 || a == w2) continue;
    for (int b = 1; b <= 3; ++b)
      if (b != a && b != w3 && b != w4) return std::make_pair(a, b);
  }
  return std::nullopt;
}

std::array<std::vector<int>, 3> color_path_lists(const std::vector<ColorList>& lists) {
  int k = static_cast<int>(lists.size());
  if (k < 2) throw ColorError(ColorErrorCode::InvalidInput, "path needs at least two vertices");
  auto norm = [](ColorList l) {
    std::sort(l.begin(), l.end());
    return l;
  };
  bool all_equal = true;
  for (int i = 1; i < k; ++i) all_equal &= norm(lists[i]) == norm(lists[0]);
  if (all_equal) throw ColorError(ColorErrorCode::AllListsEqual, "all lists coincide");
  std::vector<std::vector<int>> found;
  std::set<std::pair<int, int>> ends;
  std::vector<int> cur(k, 0);
  std::function<void(int)> rec = [&](int i) {
    if (found.size() == 3) return;
    if (i == k) {
      if (ends.insert({cur[0], cur[k - 1]}).second) found.push_back(cur);
      return;
    }
    for (int c : norm(lists[i])) {
      if (i > 0 && cur[i - 1] == c) continue;
      cur[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  if (found.size() < 3) throw ColorError(ColorErrorCode::LiftCaseExhausted, "path list colouring claim failed");
  return {found[0], found[1], found[2]};
}

std::vector<Precoloring> ring_precolorings(const EmbeddedGraph& g, bool all) {
  std::vector<VertexId> rv = g.ring_vertices();
  std::vector<Precoloring> out;
  std::vector<int> col(g.n(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int maxc) {
    if (i == rv.size()) {
      Precoloring p;
      for (VertexId v : rv) p[v] = col[v];
      out.push_back(std::move(p));
      return;
    }
    VertexId v = rv[i];
    int limit = all ? 3 : std::min(3, maxc + 1);
    for (int c = 1; c <= limit; ++c) {
      bool ok = true;
      for (VertexId u : g.neighbors(v))
        if (col[u] == c && g.is_ring_edge(g.edge_id(u, v))) ok = false;
      if (!ok) continue;
      col[v] = c;
      rec(i + 1, std::max(maxc, c));
      col[v] = 0;
    }
  };
  rec(0, 0);
  return out;
}

namespace {

AdjList without_edge(const AdjList& adj, int a, int b) {
  AdjList out = adj;
  out[a].erase(std::find(out[a].begin(), out[a].end(), b));
  out[b].erase(std::find(out[b].begin(), out[b].end(), a));
  return out;
}

std::vector<int> non_ring_edges(const EmbeddedGraph& g) {
  std::vector<int> out;
  for (int e = 0; e < g.m(); ++e)
    if (!g.is_ring_edge(e)) out.push_back(e);
  return out;
}

bool has_isolated_internal(const EmbeddedGraph& g) {
  for (VertexId v = 0; v < g.n(); ++v)
    if (g.is_internal(v) && g.degree(v) == 0) return true;
  return false;
}

}  // namespace

CriticalityCertificate is_R_critical(const EmbeddedGraph& g, int max_ring_length) {
  if (static_cast<int>(g.ring_vertices().size()) > max_ring_length)
    throw ColorError(ColorErrorCode::TooLarge, "ring too long for an exhaustive sweep");
  CriticalityCertificate cert;
  auto edges = non_ring_edges(g);
  bool equals_rings = edges.empty() && static_cast<int>(g.ring_vertices().size()) == g.n();
  if (equals_rings || has_isolated_internal(g)) return cert;
  AdjList adj = adjacency_of(g);
  std::set<int> open(edges.begin(), edges.end());
  for (const Precoloring& phi : ring_precolorings(g)) {
    if (open.empty()) break;
    auto dom = extension_domains(g, phi);
    if (solve_domains(adj, dom)) continue;
    for (auto it = open.begin(); it != open.end();) {
      auto [a, b] = g.edge_ends(*it);
      if (solve_domains(without_edge(adj, a, b), dom)) {
        cert.witness[*it] = phi;
        it = open.erase(it);
      } else {
        ++it;
      }
    }
  }
  if (!open.empty()) {
    cert.unwitnessed_edge = *open.begin();
    return cert;
  }
  cert.verdict = CritVerdict::RCritical;
  return cert;
}

CriticalityCertificate is_phi_critical(const EmbeddedGraph& g, const Precoloring& phi) {
  CriticalityCertificate cert;
  if (has_isolated_internal(g)) return cert;
  AdjList adj = adjacency_of(g);
  auto dom = extension_domains(g, phi);
  if (solve_domains(adj, dom)) return cert;
  for (int e : non_ring_edges(g)) {
    auto [a, b] = g.edge_ends(e);
    if (!solve_domains(without_edge(adj, a, b), dom)) {
      cert.unwitnessed_edge = e;
      return cert;
    }
    cert.witness[e] = phi;
  }
  cert.verdict = CritVerdict::PhiCritical;
  return cert;
}

Subgraph extract_critical(const EmbeddedGraph& g, const Precoloring& phi) {
  check_precoloring(g, phi);
  AdjList adj = adjacency_of(g);
  auto dom = extension_domains(g, phi);
  if (solve_domains(adj, dom)) throw ColorError(ColorErrorCode::PrecoloringExtends, "phi extends to the graph");
  std::vector<char> keep(g.m(), 1);
  auto edges = non_ring_edges(g);
  for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
    auto [a, b] = g.edge_ends(*it);
    AdjList trial = without_edge(adj, a, b);
    if (!solve_domains(trial, dom)) {
      adj = std::move(trial);
      keep[*it] = 0;
    }
  }
  std::vector<char> keep_v(g.n(), 0);
  Subgraph h = edge_subgraph(g, keep, keep_v);
  long long bound = 1715LL * static_cast<long long>(g.ring_vertices().size());
  if (h.graph.n() > bound) throw std::logic_error("critical subgraph exceeds 1715|V(C)|");
  return h;
}

}  // namespace g5
