#include <gtest/gtest.h>

#include "flatfiber/splitting.hpp"
#include "support.hpp"

using namespace flatfiber;

namespace {

NormalAnalysis builtin_analysis(const std::string& name) {
  GroupSpec s = builtin_spec(name);
  return analyze_normal(build(s.dim, s.generators()), normal_generators(s));
}

// Seifert cases in dimension 3: the builtin normal subgroups and their duals
// whenever these are lines
std::vector<NormalAnalysis> line_cases() {
  std::vector<NormalAnalysis> out;
  for (auto& c : testkit::builtin_cases()) {
    if (c.G.n != 3) continue;
    NormalAnalysis A = analyze_normal(c.G, c.normal);
    if (A.k() == 1) out.push_back(A);
    if (A.dual_exists && A.m() == 1) out.push_back(analyze_normal(c.G, standard_generators(A.K)));
  }
  return out;
}

}  // namespace

TEST(Splitting, ObstructionExcludesSplit) {
  for (auto& c : testkit::builtin_cases()) {
    NormalAnalysis A = analyze_normal(c.G, c.normal);
    SplitVerdict v = split_verdict(A);
    if (v.obstruction) EXPECT_EQ(v.splits_orthogonally, std::optional<bool>(false)) << c.name;
    if (v.witness) EXPECT_TRUE(verify_orthogonal_split(A, *v.witness)) << c.name;
  }
}

TEST(Splitting, WitnessReverifiedOnConjugates) {
  std::mt19937 rng(21);
  auto base = testkit::builtin_cases();
  for (int i = 0; i < 20; ++i) {
    auto c = testkit::random_case(rng, base);
    NormalAnalysis A = analyze_normal(c.G, c.normal);
    SplitVerdict v = split_verdict(A);
    if (v.witness) EXPECT_TRUE(verify_orthogonal_split(A, *v.witness)) << c.name;
  }
}

TEST(Splitting, LineCriterionAgreesWithOrthogonalSplit) {
  auto cases = line_cases();
  EXPECT_FALSE(cases.empty());
  for (auto& A : cases) {
    if (!A.complete) continue;
    SplitVerdict v = split_verdict(A);
    ASSERT_TRUE(v.line_criterion.has_value());
    ASSERT_TRUE(v.splits_orthogonally.has_value());
    EXPECT_EQ(*v.line_criterion, *v.splits_orthogonally) << to_string(A.V.basis.row(0));
  }
}

TEST(Splitting, It113NoSplitSingleConePoint) {
  NormalAnalysis A = builtin_analysis("it113");
  EXPECT_EQ(split_verdict(A).splits_orthogonally, std::optional<bool>(false));
  CommonFixedSet F = common_fixed_set(A);
  ASSERT_EQ(F.points.size(), 1u);
  EXPECT_FALSE(F.is_ordinary[0]);
}

TEST(Splitting, It7Obstruction) {
  NormalAnalysis A = builtin_analysis("it7");
  auto g = fixed_point_obstruction(A);
  ASSERT_TRUE(g.has_value());
  EXPECT_TRUE(A.parent.contains(*g));
}

TEST(Splitting, TorusSplitsTrivially) {
  SpaceGroup G = builtin("p1");
  NormalAnalysis A = analyze_normal(G, {AffineIso::translation({1, 0})});
  SplitVerdict v = split_verdict(A);
  EXPECT_EQ(v.splits_orthogonally, std::optional<bool>(true));
  EXPECT_EQ(v.center_split, std::optional<bool>(true));
}

TEST(Splitting, Pg) {
  SpaceGroup G = builtin("pg");
  NormalAnalysis A = analyze_normal(G, {AffineIso::translation({1, 0})});
  EXPECT_EQ(split_verdict(A).splits_orthogonally, std::optional<bool>(false));
  EXPECT_TRUE(fixed_point_obstruction(A).has_value());
  EXPECT_EQ(lift_coxeter_generators(A), (std::optional<std::pair<int, int>>{{1, 1}}));
  NormalAnalysis B = analyze_normal(G, {AffineIso::translation({0, 1})});
  EXPECT_EQ(split_verdict(B).splits_orthogonally, std::optional<bool>(true));
  EXPECT_EQ(lift_cyclic_generator(B), std::optional<int>(1));
}

TEST(Splitting, CoxeterLiftsForPmm) {
  SpaceGroup G = builtin("pmm");
  NormalAnalysis A = analyze_normal(G, {AffineIso::translation({1, 0})});
  EXPECT_TRUE(lift_coxeter_generators(A).has_value());
  EXPECT_THROW(lift_cyclic_generator(A), PreconditionError);
}
