#include "fixtures.hpp"

#include "g5/discharging.hpp"

#include <gtest/gtest.h>

using namespace g5;
using g5::test::fixture;

namespace {

const Q kEps = frac(2, 4113);

Q sent_by(const ChargeLedger& L, int rule, Node from) {
  Q t = 0;
  for (const auto& x : L.log)
    if (x.rule == rule && x.from.kind == from.kind && x.from.id == from.id) t += x.amount;
  return t;
}

Q received(const ChargeLedger& L, int rule, Node to) {
  Q t = 0;
  for (const auto& x : L.log)
    if (x.rule == rule && x.to.kind == to.kind && x.to.id == to.id) t += x.amount;
  return t;
}

int internal_face_of_length(const EmbeddedGraph& g, int len) {
  for (int f : g.internal_faces())
    if (g.faces()[f].length == len) return f;
  return -1;
}

// a 9-ring with a vertex ring joined to ring vertices 0, 3 and 6
EmbeddedGraph vertex_ring_star() {
  std::vector<std::vector<VertexId>> rot(10);
  for (int i = 0; i < 9; ++i) rot[i] = {(i + 8) % 9, (i + 1) % 9};
  for (int i : {0, 3, 6}) rot[i].push_back(9);
  rot[9] = {0, 3, 6};
  return build(rot, {Ring{RingKind::Facial, {0, 1, 2, 3, 4, 5, 6, 7, 8}}, Ring{RingKind::Vertex, {9}}});
}

// Ring 0..l-1 around a pentagon l..l+4; spokes[i] lists the ring positions joined to the i-th
// pentagon vertex, increasing around the ring.
EmbeddedGraph pentagon_in_ring(int l, const std::vector<std::vector<int>>& spokes) {
  for (int pattern = 0; pattern < 8; ++pattern) {
    std::vector<std::vector<VertexId>> rot(l + 5);
    std::vector<VertexId> hub(l, -1);
    for (int i = 0; i < 5; ++i)
      for (int r : spokes[i]) hub[r] = l + i;
    for (int j = 0; j < l; ++j) {
      VertexId p = (j + l - 1) % l, nx = (j + 1) % l;
      rot[j] = {p, nx};
      if (hub[j] >= 0) rot[j].insert(pattern & 1 ? rot[j].begin() + 1 : rot[j].end(), hub[j]);
    }
    for (int i = 0; i < 5; ++i) {
      std::vector<VertexId> sp(spokes[i].begin(), spokes[i].end());
      if (pattern & 4) std::reverse(sp.begin(), sp.end());
      VertexId a = l + i, prev = l + (i + 4) % 5, next = l + (i + 1) % 5;
      rot[a] = pattern & 2 ? std::vector<VertexId>{prev, next} : std::vector<VertexId>{next, prev};
      rot[a].insert(rot[a].end(), sp.begin(), sp.end());
    }
    std::vector<VertexId> ring(l);
    for (int j = 0; j < l; ++j) ring[j] = j;
    try {
      auto g = build(rot, {Ring{RingKind::Facial, ring}});
      if (g.faces()[g.cuff_face(0)].length == l) return g;
    } catch (const GraphError&) {
    }
  }
  throw std::logic_error("no embedding");
}

}  // namespace

TEST(Capture, GirthFiveHostIsNull) { EXPECT_TRUE(capture_4cycles(fixture("prism")).empty()); }

TEST(Capture, SingleFourCycle) {
  // a 4-cycle 0123 sharing edge 01 with the pentagon 0 1 4 5 6
  std::vector<std::vector<VertexId>> rot{{6, 1, 3}, {0, 4, 2}, {1, 3}, {2, 0}, {1, 5}, {4, 6}, {5, 0}};
  auto g = build(rot, {});
  auto M = capture_4cycles(g);
  std::vector<int> expect{g.edge_id(0, 1), g.edge_id(1, 2), g.edge_id(2, 3), g.edge_id(3, 0)};
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(M, expect);
  EXPECT_TRUE(captures_4cycles(g, M));
  EXPECT_FALSE(captures_4cycles(g, {g.edge_id(0, 1)}));
}

TEST(Initial, FiveCycleInDisk) {
  auto g = fixture("c5");
  auto L = initial(g, {});
  int f = internal_face_of_length(g, 5);
  EXPECT_EQ(L.face[f], 1);
  for (VertexId v = 0; v < 5; ++v) EXPECT_EQ(L.vertex[v], frac(-1, 3));
  EXPECT_EQ(L.total(), frac(-2, 3));
  // 4g + 4|R| + 2n2/3 + 10|E(M)|/3 - 8 with g = 0, one ring, five degree-two ring vertices
  EXPECT_EQ(L.total(), 4 + Q(10) / 3 - 8);
}

TEST(Initial, InternalDegreeThreeAndVertexRing) {
  auto g = fixture("prism");
  auto L = initial(g, {});
  EXPECT_EQ(L.vertex[10], -1);
  EXPECT_EQ(L.vertex[0], 0);
  auto s = vertex_ring_star();
  EXPECT_EQ(initial(s, {}).vertex[9], 3);
}

TEST(Initial, MFacesGetFiveThirds) {
  std::vector<std::vector<VertexId>> rot{{6, 1, 3}, {0, 4, 2}, {1, 3}, {2, 0}, {1, 5}, {4, 6}, {5, 0}};
  auto g = build(rot, {});
  auto M = capture_4cycles(g);
  auto L = initial(g, M);
  for (int f = 0; f < g.num_faces(); ++f) EXPECT_EQ(L.face[f], g.faces()[f].length - 4 + frac(5, 3));
}

TEST(Danger, PrismFaces) {
  auto g = fixture("prism");
  auto d = classify_danger(g, {});
  int twos = 0;
  for (int f : g.internal_faces()) {
    ASSERT_TRUE(d[f].k_dangerous.has_value());
    if (*d[f].k_dangerous == 2) ++twos;
    else EXPECT_EQ(*d[f].k_dangerous, 5);
  }
  EXPECT_EQ(twos, 5);
}

TEST(Danger, MFaceIsNeverDangerous) {
  auto g = fixture("prism");
  int inner = -1;
  for (int f : g.internal_faces())
    if (g.face_vertices(f)[0] >= 10) inner = f;
  ASSERT_GE(inner, 0);
  std::vector<int> M;
  for (DartId e : g.faces()[inner].walks[0]) M.push_back(e / 2);
  auto d = classify_danger(g, M);
  for (int f : g.internal_faces()) EXPECT_FALSE(d[f].k_dangerous.has_value());
}

TEST(Danger, FourDangerousLinkAndOpposite) {
  // the pentagon's odd vertex has two spokes; the edge opposite it borders a hexagon
  auto g = pentagon_in_ring(14, {{0, 3}, {5}, {7}, {10}, {12}});
  auto d = classify_danger(g, {});
  int fours = 0;
  for (int f = 0; f < g.num_faces(); ++f) {
    if (d[f].k_dangerous != 4) continue;
    ++fours;
    EXPECT_TRUE(d[f].extremely_4dangerous);
    EXPECT_EQ(g.edge_id(16, 17), d[f].link_edge);
    EXPECT_EQ(g.faces()[d[f].linked_face].length, 6);
    ASSERT_GE(d[f].link_edge, 0);
    auto [u, v] = g.edge_ends(d[f].link_edge);
    EXPECT_TRUE(g.is_internal(u) && g.degree(u) == 3 && g.is_internal(v) && g.degree(v) == 3);
    auto ef = g.edge_faces(d[f].link_edge);
    EXPECT_TRUE(ef[0] == f || ef[1] == f);
    EXPECT_EQ(d[f].linked_face, ef[0] == f ? ef[1] : ef[0]);
    bool back = false;
    for (auto [h, e] : d[d[f].linked_face].linked_from) back = back || (h == f && e == d[f].link_edge);
    EXPECT_TRUE(back);
  }
  EXPECT_EQ(fours, 1);
  auto s = vertex_ring_star();
  auto ds = classify_danger(s, {});
  bool opposite = false;
  for (int f = 0; f < s.num_faces(); ++f)
    for (VertexId x : ds[f].opposite_of) opposite = opposite || x == 9;
  EXPECT_TRUE(opposite);
}

TEST(Primary, RuleOneOnChordedOctagon) {
  auto g = fixture("c8chord");
  auto L = primary(g, initial(g, {}));
  for (int f : g.internal_faces()) {
    EXPECT_EQ(sent_by(L, 1, Node::face(f)), 1);
    EXPECT_EQ(L.face[f], 0);
  }
}

TEST(Primary, FiveCycleOnlyRuleOneFires) {
  auto g = fixture("c5");
  auto I = initial(g, {});
  auto L = primary(g, I);
  EXPECT_EQ(L.total(), I.total());
  EXPECT_EQ(L.total(), frac(-2, 3));
  for (const auto& t : L.log) EXPECT_EQ(t.rule, 1);
  EXPECT_EQ(L.phase, Phase::Primary);
}

TEST(Primary, VertexRingSendsAtMostItsBudget) {
  auto g = vertex_ring_star();
  auto L = primary(g, initial(g, {}));
  // cuff 8/9, two more corners 1/3 each, three opposite faces 1/3 each: (6d+5)/9 with d = 3
  EXPECT_EQ(sent_by(L, 2, Node::vertex(9)), frac(23, 9));
  EXPECT_EQ(received(L, 2, Node::face(g.cuff_face(1))), frac(8, 9));
  EXPECT_EQ(L.vertex[9], 3 - frac(23, 9));
  EXPECT_GE(L.vertex[9], Q(3) / 9);
}

TEST(Primary, RuleThreeFromTheLinkedHexagon) {
  auto g = pentagon_in_ring(14, {{0, 3}, {5}, {7}, {10}, {12}});
  auto d = classify_danger(g, {});
  auto L = primary(g, initial(g, {}));
  int inner = -1;
  for (int f = 0; f < g.num_faces(); ++f)
    if (d[f].k_dangerous == 4) inner = f;
  ASSERT_GE(inner, 0);
  EXPECT_EQ(received(L, 3, Node::face(inner)), frac(1, 3));
  EXPECT_EQ(sent_by(L, 3, Node::face(d[inner].linked_face)), frac(1, 3));
  // 1 - 4/3 + 1/3
  EXPECT_EQ(L.face[inner], 0);
  for (const auto& t : L.log)
    if (t.rule == 3) EXPECT_EQ(t.edge, d[inner].link_edge);
  // an M edge on the pentagon removes the danger and the transfer
  auto L2 = primary(g, initial(g, {g.edge_id(15, 16)}));
  EXPECT_EQ(received(L2, 3, Node::face(inner)), 0);
}

TEST(SafeReach, RingVerticesAreSafe) {
  auto g = fixture("prism");
  auto P = primary(g, initial(g, {}));
  auto sr = safe_and_reachable(g, P);
  for (VertexId v : g.ring_vertices()) EXPECT_TRUE(sr.safe[v]);
  for (VertexId v = 10; v < 15; ++v) EXPECT_FALSE(sr.safe[v]);
  for (VertexId v = 0; v < g.n(); ++v)
    for (DartId d : g.darts_out(v))
      EXPECT_TRUE(std::binary_search(sr.reach3[v].begin(), sr.reach3[v].end(), g.corner_face(d)));
}

TEST(SafeReach, PositiveFaceMakesItsVerticesSafe) {
  auto g = fixture("prism");
  auto M = touching_subgraph(g);
  auto P = primary(g, initial(g, M));
  auto sr = safe_and_reachable(g, P);
  for (VertexId v = 10; v < 15; ++v) EXPECT_TRUE(sr.safe[v]);
}

TEST(Final, PrismRulesFiveAndSeven) {
  auto g = fixture("prism");
  auto P = primary(g, initial(g, {}));
  auto F = final_charges(g, P, kEps);
  EXPECT_EQ(F.phase, Phase::Final);
  for (VertexId v = 0; v < 10; v += 2) EXPECT_EQ(received(F, 5, Node::vertex(v)), 26 * kEps);
  // every side pentagon has zero primary charge and all five degree-3 ring vertices reach it
  // within three steps through the inner cycle
  for (int f : g.internal_faces()) {
    if (P.face[f] != 0) continue;
    EXPECT_EQ(received(F, 7, Node::face(f)), 5 * kEps);
    EXPECT_EQ(F.face[f], 5 * kEps);
  }
}

TEST(Final, PositiveFivefaceSendsToEachVertex) {
  auto g = fixture("prism");
  auto M = touching_subgraph(g);
  auto P = primary(g, initial(g, M));
  auto F = final_charges(g, P, kEps);
  for (int f : g.internal_faces()) {
    ASSERT_GT(P.face[f], 0);
    EXPECT_EQ(sent_by(F, 6, Node::face(f)), 5 * 46 * kEps);
  }
  EXPECT_THROW(final_charges(g, P, 0), std::invalid_argument);
}

TEST(Audit, FiveCycleBoundIsTight) {
  auto g = fixture("c5");
  auto a = audit_charges(g, {}, kEps, default_weight_fn());
  bool seen = false;
  for (const auto& l : a.lines)
    if (l.lemma == "initcharge") {
      seen = true;
      EXPECT_EQ(l.verdict, LemmaVerdict::Holds);
      EXPECT_EQ(l.margin, 0);
    }
  EXPECT_TRUE(seen);
  EXPECT_TRUE(a.skipped("lemma-primary"));
  EXPECT_TRUE(a.ok());
}

TEST(Audit, PrismWithTouchingSubgraph) {
  auto g = fixture("prism");
  auto a = audit_charges(g, touching_subgraph(g), kEps, default_weight_fn());
  EXPECT_TRUE(a.ok()) << a.text();
  for (const char* l : {"lemma-primary", "finalvertex", "final5face", "fincharges", "noconfigweight"})
    EXPECT_FALSE(a.skipped(l)) << l;
  // the untouched R1 of the bare prism keeps the lemma out of reach
  auto b = audit_charges(g, {}, kEps, default_weight_fn());
  EXPECT_TRUE(b.skipped("lemma-primary"));
}

TEST(Audit, ConservationAndDenominators) {
  for (const char* name : {"prism", "prism_subdivided", "c8chord", "annulus", "e2", "two_rings"}) {
    auto g = fixture(name);
    auto a = audit_charges(g, capture_4cycles(g), kEps, default_weight_fn());
    int n3 = 0;
    for (VertexId v = 0; v < g.n(); ++v) n3 += g.is_ring_vertex(v) && !g.is_vertex_ring(v) && g.degree(v) == 3;
    for (auto [rule, delta] : a.rule_deltas) EXPECT_EQ(delta, rule == 5 ? 26 * kEps * n3 : Q(0)) << name << " rule " << rule;
    auto rep = replay(a.init, a.fin.log);
    EXPECT_EQ(rep.vertex, a.fin.vertex);
    EXPECT_EQ(rep.face, a.fin.face);
    for (const Q& q : a.fin.vertex) EXPECT_EQ(12339 % static_cast<long long>(denominator(q)), 0) << name;
    for (const Q& q : a.fin.face) EXPECT_EQ(12339 % static_cast<long long>(denominator(q)), 0) << name;
  }
}

TEST(Audit, ViolationRaises) {
  LemmaLine l{"lemma-primary", "f3", LemmaVerdict::Violated, frac(-1, 9), ""};
  ChargeAudit a;
  a.lines.push_back(l);
  EXPECT_FALSE(a.ok());
  EXPECT_THROW(raise_if_violated(a), LemmaViolated);
}
