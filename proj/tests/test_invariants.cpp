#include "fixtures.hpp"
#include "g5/colorer.hpp"
#include "g5/invariants.hpp"

#include <gtest/gtest.h>

using namespace g5;
using g5::test::fixture;

TEST(Invariants, BareCycle) {
  auto g = fixture("c5");
  EXPECT_TRUE(check_invariant(g, Inv::I0).holds);
  auto i5 = check_invariant(g, Inv::I5);
  EXPECT_FALSE(i5.holds);
  EXPECT_EQ(i5.witness, (std::vector<VertexId>{0, 1}));
  EXPECT_TRUE(is_well_behaved(g).holds);
  EXPECT_FALSE(has_internal_2cut(g).has_value());
}

TEST(Invariants, Prism) {
  auto g = fixture("prism");
  auto r = check_all(g);
  for (Inv i : {Inv::I0, Inv::I1, Inv::I2, Inv::I3, Inv::I4, Inv::I6, Inv::I7, Inv::I8, Inv::I9})
    EXPECT_TRUE(r[static_cast<int>(i)].holds) << to_string(i);
  EXPECT_TRUE(is_well_behaved(g).holds);
  EXPECT_FALSE(has_internal_2cut(g).has_value());
}

TEST(Invariants, EvenCycleOfCubicVertices) {
  auto g = fixture("hexprism");
  auto i1 = check_invariant(g, Inv::I1);
  ASSERT_FALSE(i1.holds);
  EXPECT_EQ(i1.witness.size(), 6u);
  EXPECT_TRUE(check_invariant(fixture("prism"), Inv::I1).holds);
}

TEST(Invariants, ChordBreaksWellBehaved) {
  auto g = fixture("c8chord");
  auto wb = is_well_behaved(g);
  EXPECT_FALSE(wb.holds);
  EXPECT_EQ(wb.witness, (Path{0, 4}));
  EXPECT_FALSE(check_invariant(g, Inv::I4).holds);
}

TEST(Invariants, PendantPathGivesTwoCut) {
  auto g = fixture("prism_pendant");
  auto cut = has_internal_2cut(g);
  ASSERT_TRUE(cut.has_value());
  EXPECT_EQ(cut->x, 10);
  EXPECT_EQ(cut->y, 12);
  EXPECT_EQ(cut->detached, (std::vector<VertexId>{15, 16}));
  EXPECT_FALSE(check_invariant(g, Inv::I6).holds);
}

TEST(Allowable, Paths) {
  auto chord = fixture("c8chord");
  EXPECT_FALSE(is_allowable(chord, {0, 4}));
  auto g = fixture("prism");
  EXPECT_TRUE(is_allowable(g, {0, 10, 11, 2}));
  EXPECT_TRUE(is_allowable(g, {2, 11, 10, 14, 8}));
  auto sub = fixture("prism_subdivided");
  EXPECT_FALSE(is_allowable(sub, {2, 11, 10, 14, 8}));
  EXPECT_FALSE(is_well_behaved(sub).holds);
}

TEST(FaceClass, Kinds) {
  auto g = fixture("prism");
  int inner = -1;
  for (int f : g.internal_faces()) {
    auto vs = g.face_vertices(f);
    if (std::count_if(vs.begin(), vs.end(), [](VertexId v) { return v >= 10; }) == 5) inner = f;
  }
  ASSERT_GE(inner, 0);
  EXPECT_EQ(classify_face(g, inner), FaceClass::Closed2Cell);

  auto two = fixture("two_rings");
  auto faces = two.internal_faces();
  ASSERT_EQ(faces.size(), 1u);
  EXPECT_EQ(classify_face(two, faces[0]), FaceClass::Omnipresent);

  auto cut = fixture("c5_pendant");
  auto cf = cut.internal_faces();
  ASSERT_EQ(cf.size(), 1u);
  EXPECT_EQ(classify_face(cut, cf[0]), FaceClass::Open2CellOnly);
}

TEST(Exceptional, Classes) {
  EXPECT_EQ(classify_exceptional(fixture("c5")).cls, ExcClass::E0);
  auto e1 = classify_exceptional(fixture("c8chord"));
  EXPECT_EQ(e1.cls, ExcClass::E1);
  EXPECT_TRUE(e1.very_exceptional);
  EXPECT_EQ(classify_exceptional(fixture("e2")).cls, ExcClass::E2);
  auto prism = classify_exceptional(fixture("prism"));
  EXPECT_EQ(prism.cls, ExcClass::E5);
  EXPECT_FALSE(prism.very_exceptional);
  EXPECT_THROW(classify_exceptional(fixture("two_rings")), InvariantError);
}

TEST(PlaneChar, Cases) {
  EXPECT_EQ(planechar_case(fixture("e2")), PlaneCase::A);
  EXPECT_EQ(planechar_case(fixture("c8chord")), PlaneCase::NotApplicable);
  EXPECT_EQ(planechar_case(fixture("c9")), PlaneCase::NonCritical);
}
