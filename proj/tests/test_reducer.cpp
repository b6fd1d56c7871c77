#include "fixtures.hpp"

#include "g5/reducer.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace g5;
using g5::test::fixture;

namespace {

Appearance first_of(const EmbeddedGraph& g, const std::string& id, Strength s, VertexId v1 = -1) {
  for (const auto& a : find_appearances(g, s))
    if (a.conf().id == id && (v1 < 0 || a.at("v1") == v1)) return a;
  throw std::runtime_error("no appearance of " + id);
}

Precoloring ring_colors(const EmbeddedGraph& g, std::map<VertexId, int> over = {}) {
  Precoloring phi;
  for (VertexId v : g.ring_vertices()) phi[v] = 1 + v % 2;
  for (auto [v, c] : over) phi[v] = c;
  return phi;
}

Q s(int l) { return default_weight_fn().s(l); }

}  // namespace

TEST(Reduce, StrongR1DeletesPentagonAndAddsEdge) {
  auto g = fixture("prism_subdivided");
  Appearance a = first_of(g, "R1", Strength::Strong, 10);
  ASSERT_EQ(a.at("x1"), 15);
  auto r = reduce(g, a);
  EXPECT_EQ(r.graph.n(), g.n() - 5);
  // five pentagon edges, four spokes and 15-10 go; x1x3 comes in
  EXPECT_EQ(r.graph.m(), g.m() - 10 + 1);
  for (VertexId v = 10; v <= 14; ++v) EXPECT_EQ(r.vertex_map[v], -1);
  ASSERT_TRUE(r.new_edge.has_value());
  auto [p, q] = r.graph.edge_ends(*r.new_edge);
  VertexId x1 = r.vertex_map[15], x3 = r.vertex_map[a.at("x3")];
  EXPECT_TRUE((p == x1 && q == x3) || (p == x3 && q == x1));
  EXPECT_FALSE(r.new_vertex.has_value());
  EXPECT_TRUE(r.squashed.empty());
  EXPECT_EQ(r.graph.rings().size(), 1u);
  EXPECT_EQ(r.graph.rings()[0].vertices.size(), 10u);
}

TEST(Reduce, FaintIsRejected) {
  auto g = fixture("prism");
  Appearance a = first_of(g, "R1", Strength::Faint);
  a.weak = false;
  try {
    reduce(g, a);
    FAIL();
  } catch (const ReduceError& e) {
    EXPECT_EQ(e.code(), ReduceErrorCode::StrengthTooLow);
  }
}

TEST(Reduce, R4NeedsPhiWhenBothOnRing) {
  auto g = fixture("prism");
  Appearance a = first_of(g, "R4", Strength::Weak);
  ASSERT_TRUE(g.is_ring_vertex(a.at("x4")) && g.is_ring_vertex(a.at("x5")));
  try {
    reduce(g, a);
    FAIL();
  } catch (const ReduceError& e) {
    EXPECT_EQ(e.code(), ReduceErrorCode::MissingPrecoloring);
  }
}

TEST(Reduce, R4PhiEqualAddsEdgeOnly) {
  auto g = fixture("prism");
  Appearance a = first_of(g, "R4", Strength::Weak);
  VertexId x4 = a.at("x4"), x5 = a.at("x5");
  auto r = reduce(g, a, ring_colors(g, {{x4, 2}, {x5, 2}}));
  EXPECT_EQ(r.r4_mode, R4Mode::PhiEqual);
  EXPECT_TRUE(r.new_edge.has_value());
  EXPECT_FALSE(r.new_vertex.has_value());
  EXPECT_EQ(r.graph.n(), g.n() - 4);
}

TEST(Reduce, R4PhiDifferentIdentifiesV2WithX5) {
  auto g = fixture("prism");
  Appearance a = first_of(g, "R4", Strength::Weak);
  VertexId x4 = a.at("x4"), x5 = a.at("x5"), v2 = a.at("v2");
  auto r = reduce(g, a, ring_colors(g, {{x4, 1}, {x5, 3}}));
  EXPECT_EQ(r.r4_mode, R4Mode::PhiDifferent);
  EXPECT_FALSE(r.new_edge.has_value());
  ASSERT_TRUE(r.new_vertex.has_value());
  EXPECT_EQ(r.vertex_map[v2], r.vertex_map[x5]);
  EXPECT_TRUE(r.graph.is_ring_vertex(*r.new_vertex));
  EXPECT_EQ(r.graph.n(), g.n() - 5);
}

TEST(Reduce, R3IdentifiesThreeAndSquashesTwo) {
  auto g = fixture("prism_subdivided");
  Appearance a = first_of(g, "R3", Strength::Strong, 15);
  auto r = reduce(g, a);
  ASSERT_TRUE(r.new_vertex.has_value());
  std::vector<VertexId> ids = r.identified;
  std::sort(ids.begin(), ids.end());
  EXPECT_EQ(ids, (std::vector<VertexId>{9, 14, 15}));
  EXPECT_EQ(r.squashed.size(), 2u);
  for (int e : r.squashed) EXPECT_EQ(r.edge_sources[e].size(), 2u);
  EXPECT_LT(r.graph.m(), g.m());
}

TEST(LiftCycle, SquashedEdgePicksTheClosingSource) {
  auto g = fixture("prism_subdivided");
  Appearance a = first_of(g, "R3", Strength::Strong, 15);
  ASSERT_EQ(a.at("v4"), 8);
  auto r = reduce(g, a);
  VertexId w = *r.new_vertex;
  Cycle c{w, r.vertex_map[8], r.vertex_map[7], r.vertex_map[6], r.vertex_map[13]};
  ASSERT_TRUE(is_cycle_in(r.graph, c));
  auto lifts = lift_cycle(g, r, c);
  ASSERT_EQ(lifts.size(), 1u);
  EXPECT_EQ(lifts[0], canonical_cycle({14, 8, 7, 6, 13}));
}

TEST(LiftCycle, NewEdgeHasNoLift) {
  auto g = fixture("prism_subdivided");
  Appearance a = first_of(g, "R1", Strength::Strong, 10);
  auto r = reduce(g, a);
  auto [p, q] = r.graph.edge_ends(*r.new_edge);
  bool saw = false;
  for (const Cycle& c : cycles_up_to(r.graph, 9)) {
    bool uses = false;
    for (std::size_t i = 0; i < c.size(); ++i) {
      VertexId x = c[i], y = c[(i + 1) % c.size()];
      uses = uses || (x == p && y == q) || (x == q && y == p);
    }
    if (uses) {
      saw = true;
      EXPECT_TRUE(lift_cycle(g, r, c).empty());
    } else {
      EXPECT_EQ(lift_cycle(g, r, c).size(), 1u);
    }
  }
  EXPECT_TRUE(saw);
}

TEST(Expansion, R3FaceAbsorbsReplacementPath) {
  auto g = fixture("prism_subdivided");
  Appearance a = first_of(g, "R3", Strength::Strong, 15);
  auto r = reduce(g, a);
  auto gpp = whole(r);
  int big = -1;
  for (int f : gpp.graph.internal_faces())
    if (gpp.graph.faces()[f].length == 8) big = f;
  ASSERT_GE(big, 0);
  auto rec = build_expansion(g, r, gpp, big);
  EXPECT_EQ(rec.elasticity, 2);
  EXPECT_TRUE(rec.uses_replacement_path);
  ASSERT_EQ(rec.walks.size(), 1u);
  EXPECT_EQ(rec.walks[0].size(), 10u);
  ASSERT_EQ(rec.members.size(), 1u);
  EXPECT_TRUE(rec.members[0].built);
  // the cut-open face keeps x2 inside
  EXPECT_EQ(rec.members[0].graph.n(), 11);
  EXPECT_TRUE(face_cover_audit(g, r, gpp).ok());
}

TEST(Expansion, ElasticityAuditOnFixtures) {
  for (const char* name : {"prism", "prism_subdivided"}) {
    auto g = fixture(name);
    for (const auto& a : find_appearances(g, Strength::Weak)) {
      auto r = reduce(g, a, ring_colors(g));
      auto gpp = whole(r);
      auto rep = elasticity_audit(g, r, gpp);
      EXPECT_TRUE(rep.ok()) << name << " " << describe(a) << ": " << (rep.violations.empty() ? "" : rep.violations[0]);
      EXPECT_LE(rep.total, 10);
      auto cover = face_cover_audit(g, r, gpp);
      EXPECT_TRUE(cover.ok()) << name << " " << describe(a) << ": " << (cover.violations.empty() ? "" : cover.violations[0]);
    }
  }
}

TEST(Contribution, StrongR1MatchesRuleArithmetic) {
  auto g = fixture("prism_subdivided");
  Appearance a = first_of(g, "R1", Strength::Strong, 10);
  auto r = reduce(g, a);
  auto gpp = whole(r);
  auto w = default_weight_fn();
  Q expected = 0;
  for (int f : gpp.graph.internal_faces()) {
    auto rec = build_expansion(g, r, gpp, f);
    auto c = contribution(g, r, gpp, rec, w);
    EXPECT_EQ(rec.elasticity, 3);
    if (gpp.graph.faces()[f].length == 6) {
      EXPECT_EQ(c.rule, "E1");
      EXPECT_EQ(c.value, ExtQ(s(5) - 2 * s(5)));
    } else {
      EXPECT_EQ(c.rule, "E4");
      EXPECT_EQ(c.value, ExtQ(s(7) - 6 * s(5)));
    }
    expected += c.value.value();
  }
  ExtQ total = total_contribution(g, r, gpp, w);
  EXPECT_EQ(total, ExtQ(expected));
  EXPECT_EQ(total, ExtQ(frac(512, 4113)));
  EXPECT_GE(total, ExtQ(10 * s(5)));
}

TEST(Contribution, R3PaysForTheSixFace) {
  auto g = fixture("prism_subdivided");
  Appearance a = first_of(g, "R3", Strength::Strong, 15);
  auto r = reduce(g, a);
  auto gpp = whole(r);
  // faces: the 8-face over a 10-cycle with one inner vertex (E2, el=2), two untouched pentagons
  EXPECT_EQ(total_contribution(g, r, gpp, default_weight_fn()), ExtQ(s(7) - 3 * s(5) - s(6)));
}

TEST(Contribution, OmnipresentOfTwoBareRings) {
  auto g = fixture("two_rings");
  Reduced gpp{g, {}, {}};
  // a bare 5-cycle is E0
  auto c = omnipresent_contribution(gpp, 0, default_weight_fn());
  EXPECT_TRUE(c.value.is_neg_inf());
}

TEST(Audits, SkipWhenHostNotWellBehaved) {
  auto g = fixture("prism_subdivided");
  Appearance a = first_of(g, "R1", Strength::Strong, 10);
  auto r = reduce(g, a);
  auto rep = winners_audit(g, r, whole(r), default_weight_fn());
  EXPECT_FALSE(rep.applicable);
  auto sc = verify_short_cycle_lemma(g, r);
  EXPECT_FALSE(sc.applicable);
}

TEST(FaceCover, R3SixFaceMissedOnTheSubdividedPrism) {
  auto g = fixture("prism_subdivided");
  Appearance a = first_of(g, "R3", Strength::Strong, 15);
  auto r = reduce(g, a);
  auto rep = face_cover_audit(g, r, whole(r));
  EXPECT_TRUE(rep.ok());
  EXPECT_TRUE(rep.notes.empty());
}

TEST(FaceCover, R3SixFaceMayLieInsideAMember) {
  // v1 on the ring, v4 of degree two: G'' collapses to the ring and its one face holds everything
  auto g = build({{4, 1, 5}, {0, 2}, {1, 3, 6}, {2, 4}, {3, 0, 7}, {0, 6, 9}, {5, 2, 7}, {6, 4, 8}, {7, 9}, {8, 5}},
                 {Ring{RingKind::Facial, {0, 1, 2, 3, 4}}});
  Appearance a = first_of(g, "R3", Strength::Strong, 0);
  auto r = reduce(g, a);
  auto gpp = i0_core(r);
  EXPECT_EQ(gpp.graph.n(), 5);
  auto rep = face_cover_audit(g, r, gpp);
  EXPECT_TRUE(rep.ok()) << (rep.violations.empty() ? "" : rep.violations[0]);
  EXPECT_EQ(rep.notes.size(), 1u);
}

TEST(Core, DropsLowDegreeInternalVertices) {
  auto g = fixture("prism_subdivided");
  Appearance a = first_of(g, "R1", Strength::Strong, 10);
  auto r = reduce(g, a);
  auto core = i0_core(r);
  for (VertexId v = 0; v < core.graph.n(); ++v)
    if (core.graph.is_internal(v)) EXPECT_GE(core.graph.degree(v), 3);
  EXPECT_EQ(core.graph.rings().size(), r.graph.rings().size());
}
