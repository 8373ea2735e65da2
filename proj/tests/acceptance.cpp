// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <iostream>

#include "flatfiber/tables.hpp"
#include "support.hpp"

using namespace flatfiber;
using namespace flatfiber::testkit;

namespace {

struct Check {
  std::vector<std::string> errors;
  void expect(bool ok, const std::string& what) {
    if (!ok) errors.push_back(what);
  }
};

using Body = void (*)(Check&);

std::string rows_failing(const std::vector<RowResult>& rs) {
  std::string s;
  for (auto& r : rs)
    if (r.status == "fail") {
      s += r.key;
      for (auto& m : r.mismatches) s += " (" + m + ")";
      s += "; ";
    }
  return s;
}

void table1(Check& c) {
  auto rs = verify_table(1);
  c.expect(rs.size() == 9, "expected 9 rows");
  for (auto& r : rs) c.expect(r.status == "pass", rows_failing({r}));
}

void example7(Check& c) {
  SpaceGroup G = builtin("p1");
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {2, 1}, {3, 2}, {5, 3}}) {
    std::string tag = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    NormalAnalysis A = analyze_normal(G, {AffineIso::translation({a, b})});
    int want = a * a + b * b;
    c.expect(A.complete, tag + " N not complete");
    c.expect(A.structure.finite && A.structure.order == want, tag + " order " + std::to_string(A.structure.order));
    c.expect(want == 1 ? A.structure.kind == StructureKind::Trivial : A.structure.kind == StructureKind::Cyclic,
             tag + " kind " + A.structure.label());
    SpaceGroup K = build(2, {AffineIso::translation({b, -a})}, false);
    c.expect(same_group(A.K, K), tag + " K differs");
  }
}

void example1(Check& c) {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 5}}) {
    std::string tag = std::to_string(a) + "/" + std::to_string(b);
    SpaceGroup G = build(2, {AffineIso::translation({1, 0}), AffineIso::translation({make_rat(a, b), 1})});
    NormalAnalysis A = analyze_normal(G, {AffineIso::translation({1, 0})});
    c.expect(A.dual_exists, tag + " no dual");
    c.expect(A.structure.order == b, tag + " order " + std::to_string(A.structure.order));
  }
}

NormalAnalysis builtin_analysis(const std::string& name) {
  GroupSpec s = builtin_spec(name);
  return analyze_normal(build(s.dim, s.generators()), normal_generators(s));
}

void certificates(Check& c) {
  NormalAnalysis a = builtin_analysis("it113");
  SplitVerdict va = split_verdict(a);
  c.expect(va.splits_orthogonally == std::optional<bool>(false), "it113 splits");
  CommonFixedSet F = common_fixed_set(a);
  c.expect(F.points.size() == 1 && !F.is_ordinary[0], "it113 fixed set is not a single cone point");

  NormalAnalysis b = builtin_analysis("it5");
  c.expect(b.structure.kind == StructureKind::Dihedral && b.structure.order == 4, "it5 structure " + b.structure.label());
  c.expect(split_verdict(b).splits_orthogonally == std::optional<bool>(false), "it5 splits");

  NormalAnalysis d = builtin_analysis("it7");
  auto g = fixed_point_obstruction(d);
  c.expect(g.has_value(), "it7 no obstruction");
}

void builtin_rows_check(Check& c) {
  for (auto& [name, tr] : builtin_rows()) {
    if (tr.first == 1) continue;
    for (auto& fx : fixtures(tr.first))
      if (fx.row == tr.second) {
        RowResult r = verify_row(fx);
        c.expect(r.status == "pass" && r.source == name, name + ": " + rows_failing({r}) + r.status);
      }
  }
}

// All 72 finite-order matrices with entries in [-3,3] against the conjugator
// search, then 300 conjugates U R U^-1 of the representatives whose class is
// known by construction.
void gl2z(Check& c) {
  auto all = finite_order_matrices(3);
  c.expect(all.size() == 72, "expected 72 matrices, found " + std::to_string(all.size()));
  for (auto& K : all) {
    auto want = brute_force_class(K);
    std::string tag = std::to_string(K[0]) + "," + std::to_string(K[1]) + ";" + std::to_string(K[2]) + "," + std::to_string(K[3]);
    if (!want) {
      c.errors.push_back(tag + " brute force found no conjugator");
      continue;
    }
    c.expect(gl2z_finite_order_class(from_i2(K)) == *want, tag);
  }
  std::mt19937 rng(5);
  const ConjClass classes[] = {ConjClass::I, ConjClass::MinusI, ConjClass::CA, ConjClass::C, ConjClass::B2, ConjClass::A, ConjClass::B};
  for (int i = 0; i < 300; ++i) {
    ConjClass cl = classes[i % 7];
    Mat U = random_unimodular(rng, 2);
    Mat K = U * gl2::representative(cl) * inverse(U);
    c.expect(gl2z_finite_order_class(K) == cl, "conjugate of " + class_name(cl));
  }
}

void counts(Check& c) {
  c.expect(enumerate_pair_classes(FiberKind::Torus, DeltaKind::Cyclic).size() == 7, "torus cyclic");
  c.expect(enumerate_pair_classes(FiberKind::Torus, DeltaKind::Dihedral).size() == 34, "torus dihedral");
  c.expect(enumerate_pair_classes(FiberKind::Pillow, DeltaKind::Cyclic).size() == 10, "pillow cyclic");
  c.expect(enumerate_pair_classes(FiberKind::Pillow, DeltaKind::Dihedral).size() == 40, "pillow dihedral");
}

void round_trip(Check& c) {
  const std::set<std::string> eight{"{2-rot., 2-rot.}", "{2-rot., v-ref.}", "{2-rot., h-grf.}", "{2-rot., d-ref.}",
                                    "{v-ref., v-ref.}", "{v-ref., h-grf.}", "{h-grf., h-grf.}", "{d-ref., d-ref.}"};
  int built = 0;
  std::set<int> its;
  for (int t : {17, 18})
    for (auto& fx : fixtures(t)) {
      RowResult r = verify_row(fx);
      if (r.source != "pair") continue;
      ++built;
      its.insert(fx.it);
      c.expect(r.status == "pass", rows_failing({r}));
      if (t == 18 && fx.quotient_base == "I") {
        Extension E = extension_for_row(fx);
        ClassifyingPair cp = classifying_pair(analyze_normal(E.group, E.normal));
        c.expect((cp.e_dim() > 0) == (cp.label && eight.count(*cp.label)), fx.key() + " E1∩E2 flag");
      }
    }
  c.expect(built >= 10, "fewer than 10 rows built");
  for (int it : {76, 91, 2, 43}) c.expect(its.count(it), "IT " + std::to_string(it) + " not covered");
  std::set<std::string> got;
  for (auto& pc : enumerate_pair_classes(FiberKind::Torus, DeltaKind::Dihedral)) {
    Extension E = build_extension(fiber_model(FiberKind::Torus), DeltaKind::Dihedral, {pc.pair.first, pc.pair.second});
    ClassifyingPair cp = classifying_pair(analyze_normal(E.group, E.normal));
    c.expect(cp.label == std::optional<std::string>(pc.label), pc.label + " round trip");
    if (cp.e_dim() > 0) got.insert(pc.label);
  }
  c.expect(got == eight, "E1∩E2 nonzero set differs");
}

void properties(Check& c) {
  auto base = builtin_cases();
  std::vector<Case> cases = base;
  std::mt19937 rng(2024);
  for (int i = 0; i < 100; ++i) cases.push_back(random_case(rng, base));
  for (auto& k : cases) {
    const SpaceGroup& G = k.G;
    // HNF canonicality
    auto gens = G.generators;
    gens.push_back(gens.back() * gens.front());
    std::shuffle(gens.begin(), gens.end(), rng);
    SpaceGroup H = build(G.n, gens);
    c.expect(H.lattice == G.lattice && same_group(H, G), k.name + " HNF");
    // Gram invariance
    for (auto& B : G.point_group) c.expect(transpose(B) * G.gram.G * B == G.gram.G, k.name + " Gram");
    NormalAnalysis A = analyze_normal(G, k.normal);
    // completion idempotence
    c.expect(same_group(completion(G, A.completion), A.completion), k.name + " completion");
    // N-bar and K meet trivially and commute
    for (auto& B : A.K.point_group)
      c.expect(B == Mat::identity(G.n) || !A.completion.has_linear(B), k.name + " N∩K linear");
    c.expect(lattice_intersection(A.K.lattice, A.completion.lattice).rank() == 0, k.name + " N∩K translations");
    for (auto& x : standard_generators(A.completion))
      for (auto& y : standard_generators(A.K)) c.expect(x * y == y * x, k.name + " commute");
    // finiteness criterion
    c.expect(A.structure.finite == (A.K.lattice.rank() == A.m()), k.name + " finiteness");
    c.expect(A.structure.finite == (A.NK.lattice.rank() == G.n), k.name + " NK rank");
    if (!A.dual_exists) continue;
    // quotient of the fiber by the structure group
    FibrationReport R = fibration_report(A);
    std::vector<AffineIso> fg;
    for (auto& g : standard_generators(A.completion)) fg.push_back(action_on_fiber(A, g));
    for (auto& r : A.structure.reps) fg.push_back(action_on_fiber(A, r));
    c.expect(orbifold_type(build(A.k(), fg)) == R.quotient_fiber, k.name + " quotient fiber");
    // witness re-verification
    SplitVerdict v = split_verdict(A);
    if (v.witness) c.expect(verify_orthogonal_split(A, *v.witness), k.name + " witness");
  }
}

void betti(Check& c) {
  c.expect(first_betti(builtin("p1")) == 2, "p1");
  c.expect(first_betti(builtin("p2")) == 0, "p2");
  SpaceGroup pg = builtin("pg");
  auto Z = center_generators(pg);
  c.expect(first_betti(pg) == 1 && Z.size() == 1 && Z[0] == AffineIso::translation({1, 0}), "pg center");
  for (auto& name : builtin_names()) {
    SpaceGroup G = builtin(name);
    bool trivial = center_generators(G).empty();
    c.expect(trivial == (first_betti(G) == 0), name);
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Body>> criteria{
      {"Table 1 rows", table1},
      {"torus lines: cyclic structure of order a^2+b^2", example7},
      {"sheared torus: structure order b", example1},
      {"non-splitting certificates", certificates},
      {"3D builtin table rows", builtin_rows_check},
      {"GL(2,Z) classes vs brute force", gl2z},
      {"pair class counts 7/34/10/40", counts},
      {"extension round trip", round_trip},
      {"property suites", properties},
      {"Betti number and center", betti},
  };
  int failed = 0, k = 0;
  auto t0 = std::chrono::steady_clock::now();
  for (auto& [name, body] : criteria) {
    ++k;
    Check c;
    try {
      body(c);
    } catch (const std::exception& e) {
      c.errors.push_back(std::string("exception: ") + e.what());
    }
    std::cout << (c.errors.empty() ? "PASS" : "FAIL") << "  " << k << "  " << name << "\n";
    for (std::size_t i = 0; i < c.errors.size() && i < 10; ++i) std::cout << "      " << c.errors[i] << "\n";
    if (!c.errors.empty()) ++failed;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed in " << secs << " s\n";
  return failed ? 1 : 0;
}
