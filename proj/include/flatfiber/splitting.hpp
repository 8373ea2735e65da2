// Splitting of 1 -> N -> G -> G/N -> 1: orthogonal splittings, the
// fixed-point obstruction, and lifts of structure-group generators.
#pragma once

#include "flatfiber/fibration.hpp"

namespace flatfiber {

struct OrthogonalSplit {
  Vec v0;
  std::vector<AffineIso> sigma;
};

struct SplitVerdict {
  std::optional<bool> splits_orthogonally;
  std::optional<OrthogonalSplit> witness;
  std::optional<AffineIso> obstruction;
  std::optional<bool> line_criterion;
  std::optional<bool> center_split;
};

namespace detail {

inline SpaceGroup fiber_group(const NormalAnalysis& A) { return restricted_group(A, standard_generators(A.completion), true); }

inline bool ordinary(const SpaceGroup& F, const Vec& x) {
  Mat I = Mat::identity(F.n);
  for (std::size_t i = 1; i < F.point_group.size(); ++i) {
    const Mat& D = F.point_group[i];
    if (lattice_member(F.lattice, (I - D) * x - F.vector_system.at(D))) return false;
  }
  return true;
}

// points x with A x - c in Z^r, listed modulo Z^k; positive-dimensional
// pieces are sampled at a few generic offsets
inline std::vector<Vec> solutions_mod_lattice(const Mat& A, const Vec& c, int k) {
  auto x0 = solve_affine_mod_lattice(A, c, standard_lattice(A.r));
  if (!x0) return {};
  std::vector<Vec> ker = kernel_basis(A);
  // complement of ker: coordinate vectors at the pivot columns of rref(A)
  auto pv = rref(A).pivots;
  std::vector<Vec> steps;
  if (!pv.empty()) {
    Mat P(k, int(pv.size()));
    for (std::size_t j = 0; j < pv.size(); ++j) P(pv[j], int(j)) = 1;
    Mat AP = A * P;
    Lattice img = lattice_in_subspace(standard_lattice(A.r), [&] {
      std::vector<Vec> cols;
      for (int j = 0; j < AP.c; ++j) cols.push_back(AP.col(j));
      return cols;
    }());
    for (auto& w : img.rows()) steps.push_back(P * *solve_affine(AP, w));
  }
  const Lattice Zk = standard_lattice(k);
  std::vector<Vec> pts{reduce_mod(Zk, *x0)};
  for (auto& s : steps) {
    Int m = lcm_den(s);
    std::vector<Vec> next;
    for (auto& p : pts)
      for (Int a = 0; a < m; ++a) next.push_back(reduce_mod(Zk, p + Rat(a) * s));
    pts = next;
  }
  if (!ker.empty()) {
    static const Rat offs[] = {Rat(1, 7), Rat(3, 11), Rat(5, 13)};
    std::vector<Vec> next;
    for (auto& p : pts) {
      Vec q = p;
      for (std::size_t j = 0; j < ker.size(); ++j) q = q + offs[j % 3] * ker[j];
      next.push_back(reduce_mod(Zk, q));
    }
    pts = next;
  }
  std::sort(pts.begin(), pts.end(), vec_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace detail

struct CommonFixedSet {
  std::vector<Vec> points;  // V-coordinates, one per N-orbit found
  std::vector<bool> is_ordinary;
};

// Points of V/N fixed by every structure-group element (found through a
// generating set), in lattice coordinates of the completion.
inline CommonFixedSet common_fixed_set(const NormalAnalysis& A) {
  if (!A.structure.finite) throw PreconditionError("structure group infinite");
  if (A.k() > 2) throw PreconditionError("fiber dimension > 2 unsupported");
  if (A.k() == 0) return {{Vec{}}, {true}};
  SpaceGroup F = detail::fiber_group(A);
  int k = A.k();
  std::vector<AffineIso> acts;
  for (int i : A.structure.generating_set()) acts.push_back(action_on_fiber(A, A.structure.reps[i]));
  std::vector<Vec> found;
  if (acts.empty()) {
    found.push_back(Vec(k, Rat(1, 7)));
    for (int i = 1; i < k; ++i) found[0][i] = Rat(3, 11);
  }
  // choose one lift D in the point group of the fiber group per generator
  std::size_t P = F.point_group.size();
  std::vector<std::size_t> idx(acts.size(), 0);
  while (!acts.empty()) {
    Mat Ah(0, k);
    Vec ch;
    for (std::size_t i = 0; i < acts.size(); ++i) {
      const Mat& D = F.point_group[idx[i]];
      Ah = vstack(Ah, Mat::identity(k) - D * acts[i].A);
      Vec c = D * acts[i].t + F.vector_system.at(D);
      ch.insert(ch.end(), c.begin(), c.end());
    }
    for (auto& x : detail::solutions_mod_lattice(Ah, ch, k)) found.push_back(x);
    std::size_t j = 0;
    while (j < idx.size() && ++idx[j] == P) idx[j++] = 0;
    if (j == idx.size()) break;
  }
  // one point per orbit of the fiber group
  CommonFixedSet out;
  for (auto& x : found) {
    bool dup = false;
    for (auto& y : out.points)
      for (auto& D : F.point_group)
        if (lattice_member(F.lattice, D * x + F.vector_system.at(D) - y)) dup = true;
    if (dup) continue;
    out.points.push_back(x);
    out.is_ordinary.push_back(detail::ordinary(F, x));
  }
  return out;
}

// A point v0 of V (ambient coordinates) whose N-orbit is fixed by the
// structure group and has trivial stabilizer in N.
inline std::optional<Vec> fixed_ordinary_point(const NormalAnalysis& A) {
  if (!A.complete) throw PreconditionError("N not complete");
  auto S = common_fixed_set(A);
  for (std::size_t i = 0; i < S.points.size(); ++i)
    if (S.is_ordinary[i]) return A.dec.from_v(S.points[i]);
  return std::nullopt;
}

// Checks that sigma stabilizes V-perp + v0, meets N trivially and that N sigma = G.
inline bool verify_orthogonal_split(const NormalAnalysis& A, const OrthogonalSplit& s) {
  const SpaceGroup& G = A.parent;
  for (auto& g : s.sigma) {
    if (!G.contains(g)) return false;
    if (A.dec.v_coords(apply(g, s.v0)) != A.dec.v_coords(s.v0)) return false;
  }
  SpaceGroup Sig = build(G.n, s.sigma.empty() ? std::vector<AffineIso>{AffineIso::identity(G.n)} : s.sigma, false);
  if (Sig.lattice.rank() != A.m()) return false;
  for (auto& v : Sig.lattice.rows())
    if (!A.Vperp.contains(v)) return false;
  const SpaceGroup& N = A.completion;
  Lattice both = lattice_sum(N.lattice, Sig.lattice);
  for (std::size_t i = 1; i < Sig.point_group.size(); ++i) {
    const Mat& B = Sig.point_group[i];
    if (N.has_linear(B) && lattice_member(both, Sig.vector_system.at(B) - N.vector_system.at(B))) return false;
  }
  return same_group(join(N, Sig), G);
}

inline std::optional<OrthogonalSplit> orthogonal_split(const NormalAnalysis& A) {
  auto v0 = fixed_ordinary_point(A);
  if (!v0) return std::nullopt;
  const SpaceGroup& G = A.parent;
  OrthogonalSplit s;
  s.v0 = *v0;
  for (auto& v : lattice_in_subspace(G.lattice, A.Vperp.vectors()).rows()) s.sigma.push_back(AffineIso::translation(v));
  std::vector<Vec> Lrows = G.lattice.rows();
  Mat M(A.k(), int(Lrows.size()));
  for (std::size_t j = 0; j < Lrows.size(); ++j) {
    Vec c = A.dec.v_coords(Lrows[j]);
    for (int i = 0; i < A.k(); ++i) M(i, int(j)) = c[i];
  }
  for (std::size_t i = 1; i < G.point_group.size(); ++i) {
    const Mat& B = G.point_group[i];
    Vec u = *v0 - B * *v0 - G.vector_system.at(B);
    auto z = solve_integer(M, A.dec.v_coords(u));
    if (!z) continue;
    Vec l = zero_vec(G.n);
    for (std::size_t j = 0; j < Lrows.size(); ++j) l = l + Rat((*z)[j]) * Lrows[j];
    s.sigma.push_back({G.vector_system.at(B) + l, B});
  }
  if (!verify_orthogonal_split(A, s)) throw std::logic_error("orthogonal split failed re-verification");
  return s;
}

// An element of finite order modulo N whose NK-coset moves every point of V/N.
inline std::optional<AffineIso> fixed_point_obstruction(const NormalAnalysis& A) {
  if (!A.structure.finite) throw PreconditionError("structure group infinite");
  if (A.k() > 2) throw PreconditionError("fiber dimension > 2 unsupported");
  SpaceGroup F = detail::fiber_group(A);
  const SpaceGroup& K = A.K;
  int m = A.m();
  Lattice Zm = standard_lattice(m);
  for (int i = 1; i < A.structure.order; ++i) {
    const AffineIso& r = A.structure.reps[i];
    if (map_invariant(F, action_on_fiber(A, r)).fixdim >= 0) continue;
    for (auto& D : K.point_group) {
      AffineIso g0 = K.rep(D) * r;
      AffineIso w = action_on_base(A, g0);
      auto x = solve_affine_mod_lattice(Mat::identity(m) - w.A, w.t, Zm);
      if (!x) continue;
      Vec l = (Mat::identity(m) - w.A) * *x - w.t;
      AffineIso g = AffineIso::translation(A.dec.from_w(l)) * g0;
      int o = matrix_order(w.A);
      if (!A.completion.contains(power(g, o))) throw std::logic_error("obstruction witness failed re-verification");
      return g;
    }
  }
  return std::nullopt;
}

inline std::optional<bool> line_fiber_splits(const NormalAnalysis& A) {
  if (A.parent.n != 3 || A.k() != 1 || !A.complete || !A.dual_exists)
    throw PreconditionError("applicability: catalogued 3D Seifert fibrations only");
  int o = A.structure.order;
  if (o == 1) return true;
  if (o != 2) return false;
  char fib = one_orb_type(restricted_group(A, standard_generators(A.completion), true));
  char qf = one_orb_type(restricted_group(A, A.parent.generators, true));
  return fib == 'I' || qf == 'I';
}

inline bool center_split(const SpaceGroup& G) {
  auto Z = center_generators(G);
  if (Z.empty()) throw PreconditionError("center trivial");
  return analyze_normal(G, Z).structure.order == 1;
}

// Structure-group element rotating the circle V-perp/K by 1/m of a turn.
inline std::optional<int> lift_cyclic_generator(const NormalAnalysis& A) {
  if (A.m() != 1 || !A.structure.finite) throw PreconditionError("needs dim N = n-1 and a finite structure group");
  SpaceGroup Q = restricted_group(A, A.parent.generators, false);
  if (one_orb_type(Q) != 'O') throw PreconditionError("G/N is not infinite cyclic");
  int m = A.structure.order;
  if (m == 1) return 0;
  SpaceGroup B = restricted_group(A, standard_generators(A.K), false);
  for (int i = 1; i < m; ++i) {
    auto mi = map_invariant(B, action_on_base(A, A.structure.reps[i]));
    if (mi.circle && mi.orientation && (mi.turn == Rat(1, m) || mi.turn == Rat(m - 1, m))) return i;
  }
  return std::nullopt;
}

// Pair of structure-group elements lifting to Coxeter generators of G/N.
inline std::optional<std::pair<int, int>> lift_coxeter_generators(const NormalAnalysis& A) {
  if (A.m() != 1 || !A.structure.finite) throw PreconditionError("needs dim N = n-1 and a finite structure group");
  SpaceGroup Q = restricted_group(A, A.parent.generators, false);
  if (one_orb_type(Q) != 'I') throw PreconditionError("G/N is not infinite dihedral");
  int o = A.structure.order;
  if (o == 1) return std::pair{0, 0};
  SpaceGroup B = restricted_group(A, standard_generators(A.K), false);
  char kt = one_orb_type(B);
  auto base = [&](int i) { return map_invariant(B, action_on_base(A, A.structure.reps[i])); };
  if (kt == 'I') {
    if (o == 2 && !base(1).identity) return std::pair{0, 1};
    return std::nullopt;
  }
  int m = o / 2;
  for (int i = 1; i < o; ++i)
    for (int j = i; j < o; ++j) {
      auto a = base(i), b = base(j);
      if (a.orientation || b.orientation) continue;
      auto p = base(A.structure.table[i][j]);
      if (p.orientation && (p.turn == Rat(1, m) || p.turn == Rat(m - 1, m) || (m == 1 && p.identity)))
        if (int(A.structure.generated({i, j}).size()) == o) return std::pair{i, j};
    }
  return std::nullopt;
}

inline SplitVerdict split_verdict(const NormalAnalysis& A) {
  SplitVerdict v;
  if (A.structure.finite && A.complete && A.k() <= 2) {
    v.witness = orthogonal_split(A);
    v.splits_orthogonally = v.witness.has_value();
    v.obstruction = fixed_point_obstruction(A);
    if (v.obstruction && v.witness) throw std::logic_error("obstruction and orthogonal split both found");
  }
  if (A.parent.n == 3 && A.k() == 1 && A.complete && A.dual_exists) v.line_criterion = line_fiber_splits(A);
  if (center_span(A.parent).dim() > 0) v.center_split = center_split(A.parent);
  return v;
}

}  // namespace flatfiber
