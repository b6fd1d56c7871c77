#include "fixtures.hpp"

#include "g5/colorer.hpp"
#include "g5/harness.hpp"
#include "g5/invariants.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace g5;
using g5::test::fixture;

namespace {

EmbeddedGraph relabel(const EmbeddedGraph& g, const std::vector<VertexId>& p) {
  std::vector<std::vector<VertexId>> rot(g.n());
  for (VertexId v = 0; v < g.n(); ++v)
    for (VertexId u : g.neighbors(v)) rot[p[v]].push_back(p[u]);
  std::vector<Ring> rings;
  for (const Ring& r : g.rings()) {
    Ring q = r;
    for (VertexId& v : q.vertices) v = p[v];
    rings.push_back(q);
  }
  return build(rot, rings);
}

EmbeddedGraph mirror(const EmbeddedGraph& g) {
  std::vector<std::vector<VertexId>> rot = g.rotation();
  for (auto& r : rot) std::reverse(r.begin(), r.end());
  std::vector<Ring> rings = g.rings();
  for (Ring& r : rings) std::reverse(r.vertices.begin(), r.vertices.end());
  return build(rot, rings);
}

bool contains_code(const std::vector<EmbeddedGraph>& gs, const std::vector<int>& code) {
  return std::any_of(gs.begin(), gs.end(), [&](const EmbeddedGraph& h) { return canonical_code(h) == code; });
}

}  // namespace

TEST(CanonicalCode, InvariantUnderRelabellingAndMirroring) {
  std::mt19937 rng(7);
  for (const char* name : {"c8chord", "e2", "prism", "c9"}) {
    auto g = fixture(name);
    auto code = canonical_code(g);
    std::vector<VertexId> p(g.n());
    std::iota(p.begin(), p.end(), 0);
    for (int t = 0; t < 5; ++t) {
      std::shuffle(p.begin(), p.end(), rng);
      EXPECT_EQ(canonical_code(relabel(g, p)), code) << name;
    }
    EXPECT_EQ(canonical_code(mirror(g)), code) << name;
  }
}

TEST(CanonicalCode, SeparatesChordPositions) {
  auto a = fixture("c8chord");  // chord 0-4, two pentagons
  auto b = build({{1, 3, 7}, {0, 2}, {1, 3}, {2, 4, 0}, {3, 5}, {4, 6}, {5, 7}, {6, 0}},
                 {{RingKind::Facial, {0, 1, 2, 3, 4, 5, 6, 7}}});
  EXPECT_NE(canonical_code(a), canonical_code(b));
}

TEST(Enumerate, FiveRingUpToFiveVerticesIsTheBareCycle) {
  auto gs = enumerate_corpus({5, 5, 5, false});
  ASSERT_EQ(gs.size(), 1u);
  EXPECT_EQ(gs[0].n(), 5);
  EXPECT_EQ(gs[0].m(), 5);
}

TEST(Enumerate, EightRingUpToEightVertices) {
  auto gs = enumerate_corpus({8, 8, 5, false});
  ASSERT_EQ(gs.size(), 2u);
  EXPECT_EQ(gs[0].m(), 8);
  EXPECT_EQ(canonical_code(gs[1]), canonical_code(fixture("c8chord")));
}

TEST(Enumerate, NineRingUpToTenVerticesHasTheTripod) {
  auto gs = enumerate_corpus({9, 10, 5, false});
  EXPECT_TRUE(contains_code(gs, canonical_code(fixture("e2"))));
  for (const auto& g : gs) {
    EXPECT_GE(*girth(g), 5);
    EXPECT_EQ(g.rings().size(), 1u);
    EXPECT_EQ(g.faces()[g.cuff_face(0)].length, 9);
  }
}

TEST(Enumerate, NoDuplicatesAndDeterministicOrder) {
  auto a = enumerate_corpus({8, 11, 5, false});
  auto b = enumerate_corpus({8, 11, 5, false});
  ASSERT_EQ(a.size(), b.size());
  std::vector<std::vector<int>> codes;
  for (std::size_t i = 0; i < a.size(); ++i) {
    codes.push_back(canonical_code(a[i]));
    EXPECT_EQ(codes.back(), canonical_code(b[i]));
  }
  std::sort(codes.begin(), codes.end());
  EXPECT_EQ(std::adjacent_find(codes.begin(), codes.end()), codes.end());
}

TEST(Enumerate, GoldenCountsUpToTwelveVertices) {
  const std::vector<std::pair<int, std::size_t>> golden = {{5, 1821}, {6, 1074}, {7, 526}, {8, 302},
                                                           {9, 150},  {10, 65},  {11, 23}, {12, 9}};
  for (auto [l, count] : golden) EXPECT_EQ(enumerate_corpus({l, 12, 5, false}).size(), count) << "l=" << l;
}

TEST(Enumerate, CriticalFilter) {
  auto eight = enumerate_corpus({8, 12, 5, true});
  ASSERT_EQ(eight.size(), 1u);
  EXPECT_EQ(canonical_code(eight[0]), canonical_code(fixture("c8chord")));
  auto nine = enumerate_corpus({9, 12, 5, true});
  EXPECT_TRUE(contains_code(nine, canonical_code(fixture("e2"))));
  for (const auto& g : nine) EXPECT_TRUE(is_R_critical(g).is_critical());
}

TEST(Enumerate, RejectsLargeCorpora) { EXPECT_THROW(enumerate_corpus({5, 17, 5, false}), std::invalid_argument); }
