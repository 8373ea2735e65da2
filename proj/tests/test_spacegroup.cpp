#include <gtest/gtest.h>

#include "flatfiber/fibration.hpp"
#include "support.hpp"

using namespace flatfiber;

namespace {
const std::vector<std::pair<std::string, int>> kOrders{
    {"p1", 1}, {"p2", 2},  {"pm", 2},   {"pg", 2},   {"cm", 2},   {"pmm", 4},  {"pmg", 4},  {"pgg", 4}, {"cmm", 4},
    {"p4", 4}, {"p4m", 8}, {"p4g", 8},  {"p3", 3},   {"p3m1", 6}, {"p31m", 6}, {"p6", 6},   {"p6m", 12},
};
}

TEST(SpaceGroup, WallpaperPointGroupOrders) {
  for (auto& [name, o] : kOrders) {
    SpaceGroup G = builtin(name);
    EXPECT_EQ(G.order(), o) << name;
    EXPECT_TRUE(G.cocompact()) << name;
  }
}

TEST(SpaceGroup, WallpaperTypeOfBuiltins) {
  for (auto& [name, o] : kOrders) EXPECT_EQ(wallpaper_type(builtin(name)).hm, name);
}

// wallpaper type does not change under affine conjugation
TEST(SpaceGroup, WallpaperTypeConjugationInvariant) {
  std::mt19937 rng(11);
  for (auto& [name, o] : kOrders) {
    SpaceGroup G = builtin(name);
    for (int i = 0; i < 20; ++i) {
      AffineIso phi = testkit::random_affinity(rng, 2);
      EXPECT_EQ(wallpaper_type(conjugate(G, phi)).hm, name) << to_string(phi);
    }
  }
}

// the stored lattice is the HNF of any generating set of the same group
TEST(SpaceGroup, HnfCanonicalUnderRegeneration) {
  std::mt19937 rng(3);
  for (auto& c : testkit::builtin_cases()) {
    auto gens = c.G.generators;
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    for (int i = 0; i < 5; ++i) {
      std::vector<AffineIso> more = gens;
      more.push_back(gens[pick(rng)] * gens[pick(rng)]);
      std::shuffle(more.begin(), more.end(), rng);
      SpaceGroup H = build(c.G.n, more);
      EXPECT_EQ(H.lattice, c.G.lattice) << c.name;
      EXPECT_TRUE(same_group(H, c.G)) << c.name;
    }
  }
}

TEST(SpaceGroup, GramInvariance) {
  for (auto& c : testkit::builtin_cases())
    for (auto& B : c.G.point_group) EXPECT_EQ(transpose(B) * c.G.gram.G * B, c.G.gram.G) << c.name;
}

TEST(SpaceGroup, CenterAndBetti) {
  EXPECT_EQ(first_betti(builtin("p1")), 2);
  EXPECT_EQ(first_betti(builtin("p2")), 0);
  SpaceGroup pg = builtin("pg");
  EXPECT_EQ(first_betti(pg), 1);
  auto Z = center_generators(pg);
  ASSERT_EQ(Z.size(), 1u);
  EXPECT_EQ(Z[0], AffineIso::translation({1, 0}));
}

TEST(SpaceGroup, Membership) {
  SpaceGroup G = builtin("pg");
  AffineIso g({Rat(1, 2), 0}, Mat::from_rows({{1, 0}, {0, -1}}));
  EXPECT_TRUE(G.contains(g));
  EXPECT_TRUE(G.contains(g * g * AffineIso::translation({3, -2})));
  EXPECT_FALSE(G.contains(AffineIso::linear(g.A)));
}

TEST(SpaceGroup, NonCocompactRejected) {
  EXPECT_THROW(build(2, {AffineIso::translation({1, 0})}), GroupError);
  EXPECT_THROW(build(2, {AffineIso::linear(Mat::from_rows({{1, 1}, {0, 1}}))}, false), GroupError);
}

TEST(SpaceGroup, PointGroupBoundFromEnvironment) {
  setenv("FLATFIBER_POINTGROUP_BOUND", "2", 1);
  EXPECT_THROW(builtin("p4"), GroupError);
  unsetenv("FLATFIBER_POINTGROUP_BOUND");
  EXPECT_EQ(builtin("p4").order(), 4);
}
