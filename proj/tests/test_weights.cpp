#include "fixtures.hpp"
#include "g5/weights.hpp"

#include <gtest/gtest.h>

using namespace g5;
using g5::test::fixture;

TEST(Weights, DefaultConstants) {
  auto w = default_weight_fn();
  EXPECT_EQ(135 * w.s(5), w.s(7));
  EXPECT_EQ(w.s(9), 1);
  EXPECT_EQ(w.s(12), 4);
  try {
    make_weight_fn(frac(2, 4113), frac(5, 4113), frac(72, 4113), frac(540, 4113), frac(2184, 4113));
    FAIL();
  } catch (const WeightError& e) {
    EXPECT_EQ(e.condition(), "S1");
  }
  EXPECT_THROW(make_weight_fn(frac(2, 4113), frac(4, 4113), frac(72, 4113), frac(539, 4113), frac(2184, 4113)),
               WeightError);
}

TEST(Weights, GraphWeight) {
  auto w = default_weight_fn();
  EXPECT_EQ(graph_weight(fixture("c5"), w), frac(4, 4113));
  EXPECT_EQ(graph_weight(fixture("e2"), w), frac(12, 4113));
  EXPECT_EQ(graph_weight(fixture("e2"), w), w.s(5) + 2 * w.s(5));
  // the pendant face is not a cycle but still open 2-cell: length 7
  EXPECT_EQ(graph_weight(fixture("c5_pendant"), w), w.s(7));
  // two disjoint rings: the annulus is not open 2-cell and weighs its length
  EXPECT_EQ(graph_weight(fixture("two_rings"), w), 10);
}

TEST(Weights, DiskBounds) {
  auto w = default_weight_fn();
  auto e1 = check_diskgirth5(fixture("c8chord"), w);
  EXPECT_EQ(e1.clause, DiskBoundReport::Clause::First);
  EXPECT_TRUE(e1.holds);
  EXPECT_TRUE(e1.tight);
  EXPECT_EQ(e1.weight, 2 * w.s(5));
  auto e2 = check_diskgirth5(fixture("e2"), w);
  EXPECT_EQ(e2.clause, DiskBoundReport::Clause::Second);
  EXPECT_TRUE(e2.tight);
  EXPECT_THROW(check_diskgirth5(fixture("c9"), w), PreconditionFailed);
}
