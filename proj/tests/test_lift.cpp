#include "fixtures.hpp"

#include "g5/colorer.hpp"
#include "g5/harness.hpp"
#include "g5/reducer.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace g5;
using g5::test::fixture;

namespace {

// A random proper colouring of g inside the given domains, or nullopt.
std::optional<Coloring> random_coloring(const EmbeddedGraph& g, const Precoloring& phi, std::mt19937& rng) {
  AdjList adj = adjacency_of(g);
  auto dom = extension_domains(g, phi);
  Coloring c(g.n(), 0);
  std::vector<std::array<int, 3>> order(g.n());
  for (auto& o : order) {
    o = {1, 2, 3};
    std::shuffle(o.begin(), o.end(), rng);
  }
  int steps = 0;
  std::function<bool(int)> go = [&](int v) {
    if (++steps > 200000) return false;
    if (v == g.n()) return true;
    for (int k : order[v]) {
      if (!(dom[v] >> (k - 1) & 1)) continue;
      bool ok = true;
      for (int u : adj[v]) ok = ok && !(u < v && c[u] == k);
      if (!ok) continue;
      c[v] = k;
      if (go(v + 1)) return true;
    }
    c[v] = 0;
    return false;
  };
  if (!go(0)) return std::nullopt;
  return c;
}

Precoloring map_phi(const ReductionResult& r, const Precoloring& phi, bool& proper) {
  Precoloring out;
  proper = true;
  for (auto [v, c] : phi) {
    VertexId w = r.vertex_map[v];
    if (out.count(w) && out[w] != c) proper = false;
    out[w] = c;
  }
  for (auto [v, c] : out)
    for (VertexId u : r.graph.neighbors(v)) proper = proper && !(out.count(u) && out[u] == c);
  return out;
}

}  // namespace

TEST(Host, EveryConfigurationHasAStrongHost) {
  for (const auto& c : catalog()) {
    for (int ring : {5, 9}) {
      auto h = canonical_host(c, ring);
      EXPECT_EQ(h.graph.rings().size(), 1u);
      EXPECT_EQ(static_cast<int>(h.graph.rings()[0].vertices.size()), ring);
      EXPECT_TRUE(cycles_up_to(h.graph, 4).empty()) << c.id;
      int strong = 0;
      for (const auto& a : find_appearances(h.graph, Strength::Strong))
        strong += a.conf().id == c.id ? 1 : 0;
      EXPECT_GT(strong, 0) << c.id;
    }
  }
}

TEST(Lift, ExtendsRandomColoringsOfEveryReduction) {
  std::mt19937 rng(20261016);
  for (const auto& c : catalog()) {
    auto h = canonical_host(c, 6);
    const auto& g = h.graph;
    int lifted = 0;
    for (const auto& a : find_appearances(g, Strength::Strong)) {
      if (a.conf().id != c.id) continue;
      for (const auto& phi : ring_precolorings(g, true)) {
        auto r = reduce(g, a, phi);
        bool proper = true;
        Precoloring phi2 = map_phi(r, phi, proper);
        if (!proper) continue;
        for (int rep = 0; rep < 8; ++rep) {
          auto sub = random_coloring(r.graph, phi2, rng);
          if (!sub) break;
          Coloring col;
          ASSERT_NO_THROW(col = lift_coloring(g, r, *sub)) << describe(a);
          EXPECT_TRUE(extends(g, phi, col)) << describe(a);
          ++lifted;
        }
      }
    }
    EXPECT_GT(lifted, 0) << c.id;
  }
}

TEST(Lift, RejectsAnImproperReducedColoring) {
  auto h = canonical_host(catalog()[0]);
  const auto& g = h.graph;
  auto a = find_appearances(g, Strength::Strong).front();
  auto phi = ring_precolorings(g).front();
  auto r = reduce(g, a, phi);
  Coloring bad(r.graph.n(), 1);
  EXPECT_THROW(lift_coloring(g, r, bad), ColorError);
}

TEST(SolveDisk, BareFiveCycleReturnsThePrecoloring) {
  std::vector<std::vector<VertexId>> rot(5);
  for (int i = 0; i < 5; ++i) rot[i] = {(i + 4) % 5, (i + 1) % 5};
  auto g = build(rot, {Ring{RingKind::Facial, {0, 1, 2, 3, 4}}});
  Precoloring phi{{0, 1}, {1, 2}, {2, 1}, {3, 2}, {4, 3}};
  auto c = solve_disk(g, phi);
  ASSERT_TRUE(c.has_value());
  for (auto [v, k] : phi) EXPECT_EQ((*c)[v], k);
}

TEST(SolveDisk, AgreesWithTheOracleWhenReducing) {
  for (const auto& c : catalog()) {
    auto h = canonical_host(c, 7);
    const auto& g = h.graph;
    DiskSolveStats st;
    for (const auto& phi : ring_precolorings(g)) {
      auto mine = solve_disk(g, phi, 8, &st);
      auto ref = oracle_extend(g, phi);
      ASSERT_EQ(mine.has_value(), ref.has_value()) << c.id;
      if (mine) EXPECT_TRUE(extends(g, phi, *mine)) << c.id;
    }
    EXPECT_GT(st.reductions, 0) << c.id;
  }
}

TEST(SolveDisk, RejectsBadInput) {
  auto g = fixture("two_rings");
  EXPECT_THROW(solve_disk(g, {}), ColorError);
  auto h = canonical_host(catalog()[0]);
  Precoloring phi;
  for (VertexId v : h.graph.ring_vertices()) phi[v] = 1;
  EXPECT_THROW(solve_disk(h.graph, phi), ColorError);
}

TEST(SolveDisk, MonochromaticChordMeansNoExtension) {
  auto g = fixture("c8chord");
  Precoloring phi{{0, 1}, {1, 2}, {2, 3}, {3, 2}, {4, 1}, {5, 2}, {6, 3}, {7, 2}};
  EXPECT_FALSE(oracle_extend(g, phi).has_value());
  EXPECT_FALSE(solve_disk(g, phi).has_value());
  EXPECT_FALSE(solve_disk(g, phi, 0).has_value());
}
