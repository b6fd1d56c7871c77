#include "fixtures.hpp"

#include "g5/catalog.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace g5;
using g5::test::fixture;

namespace {

std::vector<Appearance> of(const std::vector<Appearance>& all, const std::string& id) {
  std::vector<Appearance> out;
  for (const auto& a : all)
    if (a.conf().id == id) out.push_back(a);
  return out;
}

}  // namespace

TEST(Catalog, LoadsTwelveConfigurations) {
  const auto& cat = catalog();
  ASSERT_EQ(cat.size(), 12u);
  std::set<std::string> ids;
  for (const auto& c : cat) {
    ids.insert(c.id);
    EXPECT_FALSE(c.automorphisms.empty()) << c.id;
    EXPECT_NO_THROW(validate_configuration(c)) << c.id;
  }
  EXPECT_EQ(ids.size(), 12u);
  EXPECT_TRUE(ids.count("R7''''"));
}

TEST(Catalog, R1Shape) {
  const auto& c = configuration("R1");
  EXPECT_EQ(c.faces.size(), 1u);
  EXPECT_EQ(c.faces[0].size(), 5u);
  for (int i = 1; i <= 5; ++i) EXPECT_EQ(c.d[c.index("v" + std::to_string(i))], 3);
  EXPECT_TRUE(c.I.empty());
  EXPECT_EQ(c.A.size(), 2u);
  // the reflection through v2
  EXPECT_EQ(c.automorphisms.size(), 2u);
}

TEST(Catalog, OnlyR7VariantsIdentify) {
  for (const auto& c : catalog())
    EXPECT_EQ(!c.identifiable.empty(), c.id == "R7" || c.id == "R7''") << c.id;
}

TEST(Catalog, ValidationCatchesBrokenPath) {
  Configuration c = configuration("R4");
  auto key = std::make_pair(c.index("v2"), c.index("x5"));
  c.paths[key] = {c.index("v2"), c.index("v3"), c.index("v4"), c.index("x4")};
  try {
    validate_configuration(c);
    FAIL() << "expected CatalogInvalid";
  } catch (const CatalogInvalid& e) {
    EXPECT_FALSE(e.constraint().empty());
  }
}

TEST(Catalog, ValidationCatchesWrongDegree) {
  Configuration c = configuration("R1");
  c.d[c.index("v1")] = 4;
  EXPECT_THROW(validate_configuration(c), CatalogInvalid);
}

TEST(Appearances, BareCycleHasNone) {
  EXPECT_TRUE(find_appearances(fixture("c5")).empty());
}

TEST(Appearances, PrismHasR1AppearsNotStrong) {
  auto g = fixture("prism");
  auto r1 = of(find_appearances(g), "R1");
  ASSERT_FALSE(r1.empty());
  bool appears = false;
  for (const auto& a : r1) {
    appears = appears || (a.appears && a.weak);
    EXPECT_FALSE(a.strong) << describe(a);
  }
  EXPECT_TRUE(appears);
  EXPECT_TRUE(find_appearances(g, Strength::Strong).empty());
}

TEST(Appearances, SubdividedPrismHasStrongR1) {
  auto g = fixture("prism_subdivided");
  auto r1 = of(find_appearances(g, Strength::Strong), "R1");
  ASSERT_FALSE(r1.empty());
  for (const auto& a : r1) {
    bool internal_a = g.is_internal(a.at("x1")) || g.is_internal(a.at("x3"));
    EXPECT_TRUE(internal_a);
  }
}

TEST(Appearances, IndependentRecheck) {
  for (const char* name : {"prism", "prism_subdivided", "hexprism", "prism_pendant"}) {
    auto g = fixture(name);
    for (const auto& a : find_appearances(g)) {
      EXPECT_TRUE(check_faint(g, a).ok) << describe(a);
      if (a.weak) EXPECT_TRUE(check_weak(g, a).ok) << describe(a);
      if (a.appears) EXPECT_TRUE(check_appears(g, a).ok) << describe(a);
      if (a.strong) {
        EXPECT_TRUE(a.weak && a.appears);
        EXPECT_TRUE(check_strong(g, a).ok) << describe(a);
      }
    }
  }
}

TEST(Appearances, NoTwoRelatedByAutomorphism) {
  auto g = fixture("prism");
  auto all = find_appearances(g);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i].config != all[j].config) continue;
      for (const auto& s : all[i].conf().automorphisms) {
        std::vector<int> alt(s.size());
        for (std::size_t v = 0; v < s.size(); ++v) alt[v] = all[i].imprint[s[v]];
        EXPECT_NE(alt, all[j].imprint);
      }
    }
  // five rotations of the inner pentagon
  EXPECT_EQ(of(all, "R1").size(), 5u);
}

TEST(Appearances, TamperedImprintRejected) {
  auto g = fixture("prism");
  auto a = of(find_appearances(g), "R1").at(0);
  std::swap(a.imprint[a.conf().index("v1")], a.imprint[a.conf().index("v2")]);
  EXPECT_FALSE(check_faint(g, a).ok);
}

TEST(TouchedBy, FaceEdgesTouch) {
  auto g = fixture("prism");
  auto a = of(find_appearances(g), "R1").at(0);
  int inner = g.edge_id(a.at("v1"), a.at("v2"));
  EXPECT_TRUE(touched_by(g, a, {inner}));
  // a spoke borders the F face only at its end, not along an edge
  int spoke = g.edge_id(a.at("v1"), a.at("x1"));
  EXPECT_FALSE(touched_by(g, a, {spoke}));
  EXPECT_FALSE(touched_by(g, a, {}));
  EXPECT_FALSE(touched_by(g, a, {g.edge_id(0, 1)}));
}

TEST(Strengthen, PrismGivesWheel) {
  auto g = fixture("prism");
  auto a = of(find_appearances(g, Strength::Appears), "R1").at(0);
  auto r = strengthen(g, a);
  ASSERT_TRUE(r.wheel.has_value());
  EXPECT_FALSE(r.strong.has_value());
  EXPECT_EQ(r.wheel->s, 5);
  EXPECT_EQ(r.wheel->ring.size(), 10u);
  EXPECT_EQ(r.wheel->cycle.size(), 5u);
}

TEST(Strengthen, StrongIsIdempotent) {
  auto g = fixture("prism_subdivided");
  auto s = of(find_appearances(g, Strength::Strong), "R1").at(0);
  auto r = strengthen(g, s);
  ASSERT_TRUE(r.strong.has_value());
  EXPECT_EQ(r.strong->imprint, s.imprint);
}

TEST(Strengthen, RelabelsToStrong) {
  auto g = fixture("prism_subdivided");
  for (const auto& a : of(find_appearances(g, Strength::Appears), "R1")) {
    auto r = strengthen(g, a);
    ASSERT_TRUE(r.strong.has_value());
    EXPECT_TRUE(r.strong->strong);
  }
}
