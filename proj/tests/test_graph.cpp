#include "fixtures.hpp"
#include "g5/graph.hpp"
#include "g5/io.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace g5;
using g5::test::fixture;

namespace {

std::vector<int> face_lengths(const EmbeddedGraph& g) {
  std::vector<int> out;
  for (const auto& f : g.faces()) out.push_back(f.length);
  std::sort(out.begin(), out.end());
  return out;
}

int length_sum(const EmbeddedGraph& g) {
  int s = 0;
  for (const auto& f : g.faces()) s += f.length;
  return s;
}

}  // namespace

TEST(Build, CycleInDisk) {
  auto g = fixture("c5");
  EXPECT_EQ(g.n(), 5);
  EXPECT_EQ(g.m(), 5);
  ASSERT_EQ(g.num_faces(), 2);
  EXPECT_EQ(face_lengths(g), (std::vector<int>{5, 5}));
  EXPECT_EQ(g.internal_faces().size(), 1u);
  EXPECT_EQ(g.ring_total_length(), 5);
}

TEST(Build, PrismFaces) {
  auto g = fixture("prism");
  ASSERT_EQ(g.num_faces(), 7);
  EXPECT_EQ(face_lengths(g), (std::vector<int>{5, 5, 5, 5, 5, 5, 10}));
  int ring_faces = 0;
  for (int f = 0; f < g.num_faces(); ++f) {
    if (g.is_ring_face(f)) {
      ++ring_faces;
      EXPECT_EQ(g.faces()[f].length, 10);
    }
  }
  EXPECT_EQ(ring_faces, 1);
  EXPECT_EQ(length_sum(g), 2 * g.m());
}

TEST(Build, OneSidedRotationRejected) {
  std::vector<std::vector<VertexId>> rot{{1, 2}, {2}, {0, 1}};
  try {
    build(rot, {});
    FAIL() << "expected error";
  } catch (const GraphError& e) {
    EXPECT_EQ(e.code(), GraphErrorCode::NonSymmetricRotation);
  }
}

TEST(Build, LoopRejected) {
  std::vector<std::vector<VertexId>> rot{{0, 1}, {0}};
  try {
    build(rot, {});
    FAIL() << "expected error";
  } catch (const GraphError& e) {
    EXPECT_EQ(e.code(), GraphErrorCode::ParallelEdgeOrLoop);
  }
}

TEST(Build, RingNotCycle) {
  std::vector<std::vector<VertexId>> rot{{1, 4}, {2, 0}, {3, 1}, {4, 2}, {0, 3}};
  Ring r{RingKind::Facial, {0, 2, 1, 3, 4}};
  try {
    build(rot, {r});
    FAIL() << "expected error";
  } catch (const GraphError& e) {
    EXPECT_EQ(e.code(), GraphErrorCode::RingNotCycle);
  }
}

TEST(Build, NonPlanarRotationRejected) {
  // K4 with one rotation flipped traces to a torus-like embedding
  std::vector<std::vector<VertexId>> rot{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
  try {
    build(rot, {});
    FAIL() << "expected error";
  } catch (const GraphError& e) {
    EXPECT_EQ(e.code(), GraphErrorCode::GenusNonZero);
  }
}

TEST(Build, SingleVertexRing) {
  std::vector<std::vector<VertexId>> rot{{}};
  auto g = build(rot, {Ring{RingKind::Vertex, {0}}});
  EXPECT_EQ(g.num_faces(), 1);
  EXPECT_EQ(g.faces()[0].length, 1);
  EXPECT_FALSE(girth(g).has_value());
}

TEST(Build, SerializeRoundTrip) {
  for (auto name : {"c5", "prism", "c8chord", "e2", "prism_subdivided"}) {
    auto g = fixture(name);
    std::string s = serialize(g);
    auto h = parse_graph(s).graph;
    EXPECT_EQ(serialize(h), s) << name;
    EXPECT_EQ(g.rotation(), h.rotation()) << name;
  }
}

TEST(Girth, Fixtures) {
  EXPECT_EQ(girth(fixture("c5")), 5);
  EXPECT_EQ(girth(fixture("prism")), 5);
  EXPECT_EQ(girth(fixture("e2")), 4 + 1);
}

TEST(Cycles, UpTo) {
  auto c5 = cycles_up_to(fixture("c5"), 5);
  ASSERT_EQ(c5.size(), 1u);
  EXPECT_EQ(c5[0], (Cycle{0, 1, 2, 3, 4}));
  EXPECT_TRUE(cycles_up_to(fixture("prism"), 4).empty());
  auto chord = cycles_up_to(fixture("c8chord"), 5);
  ASSERT_EQ(chord.size(), 2u);
  EXPECT_EQ(chord[0], (Cycle{0, 1, 2, 3, 4}));
  EXPECT_EQ(chord[1], (Cycle{0, 4, 5, 6, 7}));
  EXPECT_EQ(cycles_up_to(fixture("prism"), 5).size(), 6u);
}

TEST(Disk, ChordSide) {
  auto g = fixture("c8chord");
  auto d = disk_subgraph(g, {0, 1, 2, 3, 4});
  EXPECT_EQ(d.graph.n(), 5);
  EXPECT_EQ(d.graph.m(), 5);
  EXPECT_EQ(d.graph.num_faces(), 2);
  EXPECT_EQ(d.graph.rings().size(), 1u);
}

TEST(Disk, PrismInnerAndWhole) {
  auto g = fixture("prism");
  auto inner = disk_subgraph(g, {10, 11, 12, 13, 14});
  EXPECT_EQ(inner.graph.n(), 5);
  EXPECT_EQ(inner.graph.m(), 5);
  auto whole = disk_subgraph(g, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  EXPECT_EQ(whole.graph.n(), 15);
  EXPECT_EQ(whole.graph.m(), 20);
  EXPECT_EQ(face_lengths(whole.graph), face_lengths(g));
  const auto& dg = whole.graph;
  EXPECT_EQ(dg.n() - dg.m() + dg.num_faces(), 2);
}

TEST(Disk, FaceCycle) {
  auto g = fixture("prism");
  auto d = disk_subgraph(g, {0, 1, 2, 11, 10});
  EXPECT_EQ(d.graph.m(), 5);
  EXPECT_EQ(d.graph.num_faces(), 2);
}

TEST(Topology, Classes) {
  auto g = fixture("prism");
  EXPECT_EQ(surrounds_cuff(g, {0, 1, 2, 11, 10}).kind, CycleClass::Contractible);
  EXPECT_EQ(surrounds_cuff(g, {10, 11, 12, 13, 14}).kind, CycleClass::Contractible);
  auto h = fixture("c8chord");
  EXPECT_EQ(surrounds_cuff(h, {0, 1, 2, 3, 4}).kind, CycleClass::Contractible);
  EXPECT_EQ(surrounds_cuff(h, {0, 4, 5, 6, 7}).kind, CycleClass::Contractible);
}

TEST(Topology, Annulus) {
  auto g = fixture("annulus");
  int hole = g.isolated_face(10);
  ASSERT_GE(hole, 0);
  for (const Cycle& c : cycles_up_to(g, 5)) {
    auto t = surrounds_cuff(g, c);
    auto sides = cycle_sides(g, c);
    bool splits = sides[hole] != sides[g.cuff_face(0)];
    if (splits) {
      EXPECT_EQ(t.kind, CycleClass::SurroundsCuff);
      EXPECT_THROW(disk_subgraph(g, c), GraphError);
    } else {
      EXPECT_EQ(t.kind, CycleClass::Contractible);
    }
  }
}
