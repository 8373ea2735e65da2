#include <gtest/gtest.h>

#include "flatfiber/classify.hpp"
#include "support.hpp"

using namespace flatfiber;

namespace {

const FiberKind T = FiberKind::Torus, P = FiberKind::Pillow;

AffineIso named(FiberKind f, const std::string& s) { return *named_affinity(f, s); }

NormalAnalysis analyze_extension(FiberKind f, DeltaKind d, const std::vector<AffineIso>& affs) {
  Extension E = build_extension(fiber_model(f), d, affs);
  return analyze_normal(E.group, E.normal);
}

}  // namespace

TEST(Classify, Counts) {
  EXPECT_EQ(enumerate_pair_classes(T, DeltaKind::Cyclic).size(), 7u);
  EXPECT_EQ(enumerate_pair_classes(T, DeltaKind::Dihedral).size(), 34u);
  EXPECT_EQ(enumerate_pair_classes(P, DeltaKind::Cyclic).size(), 10u);
  EXPECT_EQ(enumerate_pair_classes(P, DeltaKind::Dihedral).size(), 40u);
}

TEST(Classify, LabelsAreBijective) {
  for (FiberKind f : {T, P})
    for (DeltaKind d : {DeltaKind::Cyclic, DeltaKind::Dihedral}) {
      std::set<std::string> seen;
      for (auto& pc : enumerate_pair_classes(f, d)) {
        EXPECT_NE(pc.label, "unlabeled");
        EXPECT_TRUE(seen.insert(pc.label).second) << pc.label;
      }
      EXPECT_EQ(seen.size(), printed_pair_labels(f, d).size());
    }
}

TEST(Classify, SingleAffinities) {
  const Rat h(1, 2);
  EXPECT_EQ(torus_order2_class(AffineIso::translation({h, 0})), "h-rot");
  EXPECT_EQ(torus_order2_class(AffineIso::linear(-gl2::I())), "2-rot");
  EXPECT_EQ(torus_order2_class(AffineIso({h, 0}, gl2::CA())), "h-grf");
  EXPECT_EQ(torus_order2_class(AffineIso::translation({0, h})), "h-rot");
  EXPECT_THROW(torus_order2_class(AffineIso::linear(gl2::mat(1, 1, 0, 1))), ClassError);
}

TEST(Classify, TorusPairExamples) {
  const Rat h(1, 2);
  EXPECT_EQ(torus_pair_class(AffineIso::translation({h, 0}), AffineIso::translation({0, h})), "{h-rot, v-rot.}");
  EXPECT_EQ(torus_pair_class(AffineIso::linear(gl2::C()), AffineIso::linear(gl2::CA())), "{h-ref., d-ref.}");
  EXPECT_EQ(torus_pair_class(AffineIso::linear(gl2::C()), AffineIso::linear(gl2::C() * gl2::B())), "{d-ref., m-aff.}");
  EXPECT_THROW(torus_pair_class(AffineIso::linear(gl2::C()), AffineIso::linear(gl2::mat(0, 1, 1, 0) * gl2::mat(1, 1, 0, 1))),
               ClassError);
}

TEST(Classify, EightPairsWithCommonEigenspace) {
  std::set<std::string> got;
  for (auto& pc : enumerate_pair_classes(T, DeltaKind::Dihedral))
    if (pc.e_dim > 0) got.insert(pc.label);
  std::set<std::string> want{"{2-rot., 2-rot.}", "{2-rot., v-ref.}", "{2-rot., h-grf.}", "{2-rot., d-ref.}",
                             "{v-ref., v-ref.}", "{v-ref., h-grf.}", "{h-grf., h-grf.}", "{d-ref., d-ref.}"};
  EXPECT_EQ(got, want);
}

TEST(Classify, ConjugationInvariance) {
  std::mt19937 rng(17);
  auto classes = enumerate_pair_classes(T, DeltaKind::Dihedral);
  std::uniform_int_distribution<std::size_t> pick(0, classes.size() - 1);
  for (int i = 0; i < 50; ++i) {
    auto& pc = classes[pick(rng)];
    AffineIso phi = testkit::random_affinity(rng, 2);
    AffineIso pi = inverse(phi);
    EXPECT_EQ(torus_pair_class(phi * pc.pair.first * pi, phi * pc.pair.second * pi), pc.label) << to_string(phi);
  }
}

TEST(Classify, CyclicFourRotation) {
  NormalAnalysis A = analyze_extension(T, DeltaKind::Cyclic, {named(T, "4-rot")});
  EXPECT_EQ(A.structure.label(), "C4");
  ClassifyingPair cp = classifying_pair(A);
  EXPECT_EQ(cp.kind, DeltaKind::Cyclic);
  EXPECT_EQ(cp.fiber.name(), "∘");
  EXPECT_EQ(cp.label, std::optional<std::string>("{4-rot., 4-rot.^-1}"));
}

TEST(Classify, DihedralReflections) {
  NormalAnalysis A = analyze_extension(T, DeltaKind::Dihedral, {named(T, "h-ref"), named(T, "d-ref")});
  EXPECT_EQ(A.structure.label(), "D4");
  ClassifyingPair cp = classifying_pair(A);
  EXPECT_EQ(cp.kind, DeltaKind::Dihedral);
  EXPECT_EQ(cp.label, std::optional<std::string>("{h-ref., d-ref.}"));
}

TEST(Classify, FullEigenspace) {
  NormalAnalysis A = analyze_extension(T, DeltaKind::Dihedral, {named(T, "2-rot"), named(T, "2-rot")});
  ClassifyingPair cp = classifying_pair(A);
  EXPECT_EQ(cp.e_dim(), 2);
  EXPECT_EQ(cp.label, std::optional<std::string>("{2-rot., 2-rot.}"));
}

TEST(Classify, TrivialExtension) {
  NormalAnalysis A = analyze_extension(P, DeltaKind::Cyclic, {named(P, "idt")});
  EXPECT_EQ(A.structure.order, 1);
  EXPECT_EQ(classifying_pair(A).label, std::optional<std::string>("{idt., idt.}"));
}

// every class survives build_extension followed by classifying_pair
TEST(Classify, RoundTrip) {
  for (FiberKind f : {T, P})
    for (DeltaKind d : {DeltaKind::Cyclic, DeltaKind::Dihedral})
      for (auto& pc : enumerate_pair_classes(f, d)) {
        std::vector<AffineIso> affs{pc.pair.first};
        if (d == DeltaKind::Dihedral) affs.push_back(pc.pair.second);
        NormalAnalysis A = analyze_extension(f, d, affs);
        ClassifyingPair cp = classifying_pair(A);
        EXPECT_EQ(cp.kind, d) << pc.label;
        EXPECT_EQ(cp.label, std::optional<std::string>(pc.label));
        if (f == T && d == DeltaKind::Dihedral) EXPECT_EQ(cp.e_dim(), pc.e_dim) << pc.label;
      }
}

TEST(Classify, ExtensionPreconditions) {
  EXPECT_THROW(build_extension(fiber_model(T), DeltaKind::Dihedral, {named(T, "4-rot"), named(T, "idt")}), PreconditionError);
  EXPECT_THROW(build_extension(fiber_model(P), DeltaKind::Cyclic, {AffineIso::translation({Rat(1, 3), 0})}), PreconditionError);
  EXPECT_THROW(build_extension(fiber_model(T), DeltaKind::Cyclic, {}), std::invalid_argument);
}

TEST(Classify, NamedAffinities) {
  EXPECT_EQ(named(T, "h-grf.′"), named(T, "v-rot") * named(T, "h-grf"));
  EXPECT_EQ(named(T, "4-rot.^-1"), inverse(named(T, "4-rot")));
  EXPECT_EQ(named(P, "d-rot.′"), named(P, "c-rot") * named(P, "d-rot"));
  EXPECT_FALSE(named_affinity(T, "x-ref").has_value());
}
