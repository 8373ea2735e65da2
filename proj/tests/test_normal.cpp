#include <gtest/gtest.h>

#include "flatfiber/fibration.hpp"
#include "support.hpp"

using namespace flatfiber;

namespace {

std::vector<testkit::Case> cases_with_random(int n_random, unsigned seed) {
  auto base = testkit::builtin_cases();
  auto out = base;
  std::mt19937 rng(seed);
  for (int i = 0; i < n_random; ++i) out.push_back(testkit::random_case(rng, base));
  return out;
}

}  // namespace

TEST(Normal, CompletionIdempotent) {
  for (auto& c : cases_with_random(20, 5)) {
    NormalAnalysis A = analyze_normal(c.G, c.normal);
    SpaceGroup C2 = completion(c.G, A.completion);
    EXPECT_TRUE(same_group(C2, A.completion)) << c.name;
    EXPECT_TRUE(subgroup_of(A.N, A.completion)) << c.name;
  }
}

TEST(Normal, KernelMeetsCompletionTriviallyAndCommutes) {
  for (auto& c : cases_with_random(20, 6)) {
    NormalAnalysis A = analyze_normal(c.G, c.normal);
    for (auto& x : standard_generators(A.completion))
      for (auto& y : standard_generators(A.K)) EXPECT_EQ(x * y, y * x) << c.name;
    // a common element has linear part fixing V and Vperp, and a translation in both
    for (auto& B : A.K.point_group)
      if (B != Mat::identity(c.G.n)) EXPECT_FALSE(A.completion.has_linear(B)) << c.name;
    EXPECT_EQ(lattice_intersection(A.K.lattice, A.completion.lattice).rank(), 0) << c.name;
    // translations of K lie in Vperp, those of the completion in V
    for (auto& v : A.K.lattice.rows()) EXPECT_TRUE(A.Vperp.contains(v));
    for (auto& v : A.completion.lattice.rows()) EXPECT_TRUE(A.V.contains(v));
  }
}

// finite structure group exactly when the translations of NK have full rank
TEST(Normal, FinitenessCriterion) {
  for (auto& c : cases_with_random(20, 7)) {
    NormalAnalysis A = analyze_normal(c.G, c.normal);
    EXPECT_EQ(A.structure.finite, A.NK.lattice.rank() == c.G.n) << c.name;
    EXPECT_EQ(A.dual_exists, A.K.lattice.rank() == A.m()) << c.name;
  }
}

TEST(Normal, StructureGroupActsEffectively) {
  for (auto& c : cases_with_random(10, 8)) {
    NormalAnalysis A = analyze_normal(c.G, c.normal);
    if (!A.structure.finite || A.k() > 2 || A.m() > 2) continue;
    FibrationReport R = fibration_report(A);
    for (int i = 1; i < A.structure.order; ++i) {
      EXPECT_FALSE(A.NK.contains(A.structure.reps[i]));
      EXPECT_FALSE(R.actions[i].fiber.identity && R.actions[i].base.identity) << c.name << " element " << i;
    }
  }
}

TEST(Normal, NotNormalRejected) {
  SpaceGroup G = builtin("p2");
  AffineIso r = AffineIso::linear(Mat::from_rows({{-1, 0}, {0, -1}}));
  EXPECT_THROW(analyze_normal(G, {AffineIso::translation({1, 0}), r * AffineIso::translation({1, 0})}), PreconditionError);
  EXPECT_THROW(analyze_normal(G, {AffineIso::translation({Rat(1, 2), 0})}), PreconditionError);
}

TEST(Normal, P2LineSubgroup) {
  SpaceGroup G = builtin("p2");
  NormalAnalysis A = analyze_normal(G, {AffineIso::translation({1, 0})});
  EXPECT_TRUE(A.complete);
  EXPECT_TRUE(A.dual_exists);
  EXPECT_EQ(A.structure.order, 2);
  FibrationReport R = fibration_report(A);
  EXPECT_EQ(R.fiber.name(), "O");
  EXPECT_EQ(R.base.name(), "O");
  EXPECT_EQ(R.quotient_fiber.name(), "I");
  EXPECT_EQ(R.quotient_base.name(), "I");
}

// quotient of the fiber by the structure group, computed directly
TEST(Normal, QuotientFiberIdentity) {
  for (auto& c : cases_with_random(20, 9)) {
    NormalAnalysis A = analyze_normal(c.G, c.normal);
    if (!A.dual_exists || A.k() > 2 || A.m() > 2) continue;
    FibrationReport R = fibration_report(A);
    std::vector<AffineIso> gens;
    for (auto& g : standard_generators(A.completion)) gens.push_back(action_on_fiber(A, g));
    for (auto& r : A.structure.reps) gens.push_back(action_on_fiber(A, r));
    EXPECT_EQ(orbifold_type(build(A.k(), gens)), R.quotient_fiber) << c.name;
  }
}

TEST(Normal, FullAndTrivialSpans) {
  SpaceGroup G = builtin("pg");
  NormalAnalysis A = analyze_normal(G, {AffineIso::translation({1, 0}), AffineIso::translation({0, 2})});
  EXPECT_FALSE(A.complete);
  EXPECT_EQ(A.m(), 0);
  FibrationReport R = fibration_report(A);
  EXPECT_EQ(R.base.name(), "pt");
  EXPECT_EQ(R.fiber.name(), "××");
  NormalAnalysis B = analyze_normal(builtin("p2"), {AffineIso::identity(2)});
  EXPECT_EQ(B.k(), 0);
  EXPECT_EQ(fibration_report(B).quotient_base.name(), "2222");
}
