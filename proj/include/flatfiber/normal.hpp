// Normal subgroups N of a space group: span, completion, kernel K of the
// action on Span(N), orthogonal dual and the structure group G/NK.
#pragma once

#include "flatfiber/spacegroup.hpp"

namespace flatfiber {

struct PreconditionError : GroupError {
  using GroupError::GroupError;
};

enum class StructureKind { Trivial, Cyclic, Dihedral, Other };

struct StructureGroup {
  bool finite = false;
  int order = 0;
  std::vector<AffineIso> reps;           // identity first
  std::vector<std::vector<int>> table;  // table[i][j] = index of reps[i]*reps[j]
  StructureKind kind = StructureKind::Other;
  int kind_n = 0;  // n of Cn / Dn

  int element_order(int i) const {
    int k = 1, x = i;
    while (x != 0) {
      x = table[x][i];
      ++k;
    }
    return k;
  }
  int inverse_of(int i) const {
    for (int j = 0; j < order; ++j)
      if (table[i][j] == 0) return j;
    return -1;
  }
  // closure of a set of elements under multiplication
  std::vector<int> generated(const std::vector<int>& gens) const {
    std::vector<bool> in(order, false);
    std::vector<int> out{0};
    in[0] = true;
    for (std::size_t h = 0; h < out.size(); ++h)
      for (int g : gens) {
        int y = table[out[h]][g];
        if (!in[y]) {
          in[y] = true;
          out.push_back(y);
        }
      }
    return out;
  }
  // a smallest generating set, chosen by index order
  std::vector<int> generating_set() const {
    if (order <= 1) return {};
    for (int i = 1; i < order; ++i)
      if (int(generated({i}).size()) == order) return {i};
    for (int i = 1; i < order; ++i)
      for (int j = i + 1; j < order; ++j)
        if (int(generated({i, j}).size()) == order) return {i, j};
    std::vector<int> all;
    for (int i = 1; i < order; ++i) all.push_back(i);
    return all;
  }
  std::string label() const {
    if (!finite) return "infinite";
    switch (kind) {
      case StructureKind::Trivial: return "C1";
      case StructureKind::Cyclic: return "C" + std::to_string(kind_n);
      case StructureKind::Dihedral: return "D" + std::to_string(kind_n);
      default: return "other" + std::to_string(order);
    }
  }
};

inline std::string kind_name(StructureKind k) {
  switch (k) {
    case StructureKind::Trivial: return "trivial";
    case StructureKind::Cyclic: return "cyclic";
    case StructureKind::Dihedral: return "dihedral";
    default: return "other";
  }
}

inline void classify_kind(StructureGroup& S) {
  int n = S.order;
  if (n == 1) {
    S.kind = StructureKind::Trivial;
    S.kind_n = 1;
    return;
  }
  for (int i = 0; i < n; ++i)
    if (S.element_order(i) == n) {
      S.kind = StructureKind::Cyclic;
      S.kind_n = n;
      return;
    }
  if (n % 2 == 0) {
    int h = n / 2;
    for (int r = 0; r < n; ++r) {
      if (S.element_order(r) != h) continue;
      auto R = S.generated({r});
      std::vector<bool> inR(n, false);
      for (int x : R) inR[x] = true;
      int rinv = S.inverse_of(r);
      for (int s = 0; s < n; ++s) {
        if (inR[s] || S.element_order(s) != 2) continue;
        if (S.table[S.table[s][r]][s] == rinv) {
          S.kind = StructureKind::Dihedral;
          S.kind_n = h;
          return;
        }
      }
    }
  }
  S.kind = StructureKind::Other;
  S.kind_n = n;
}

// { a+A in G : a in V, W subset Fix(A) } for complementary invariant V, W.
inline SpaceGroup complete_subgroup(const SpaceGroup& G, const Subspace& V, const Subspace& W) {
  std::vector<AffineIso> gens;
  for (auto& v : lattice_in_subspace(G.lattice, V.vectors()).rows()) gens.push_back(AffineIso::translation(v));
  Mat Vcols = V.dim() ? transpose(V.basis) : Mat(G.n, 0);
  for (std::size_t i = 1; i < G.point_group.size(); ++i) {
    const Mat& B = G.point_group[i];
    bool fixes = true;
    for (auto& w : W.vectors())
      if (B * w != w) fixes = false;
    if (!fixes) continue;
    std::optional<Vec> x;
    if (V.dim() == 0) {
      if (lattice_member(G.lattice, G.vector_system.at(B))) x = Vec{};
    } else {
      x = solve_affine_mod_lattice(Vcols, G.vector_system.at(B), G.lattice);
    }
    if (!x) continue;
    Vec a = V.dim() ? Vcols * *x : zero_vec(G.n);
    gens.push_back({a, B});
  }
  return build(G.n, gens, false);
}

inline SpaceGroup verify_normal(const SpaceGroup& G, const std::vector<AffineIso>& ngens) {
  for (auto& g : ngens)
    if (!G.contains(g)) throw PreconditionError("not a subgroup of the group: " + to_string(g));
  SpaceGroup N = build(G.n, ngens, false);
  for (auto& g : G.generators) {
    AffineIso gi = inverse(g);
    for (auto& h : standard_generators(N)) {
      for (auto& c : {g * h * gi, gi * h * g})
        if (!N.contains(c)) throw PreconditionError("not normal: conjugate " + to_string(c) + " not in N");
    }
  }
  return N;
}

inline Subspace span_of(const SpaceGroup& N) { return Subspace::span(N.n, N.lattice.rows()); }

inline SpaceGroup completion(const SpaceGroup& G, const SpaceGroup& N) {
  Subspace V = span_of(N);
  return complete_subgroup(G, V, orthogonal_complement(V, G.gram));
}

inline bool is_complete(const SpaceGroup& G, const SpaceGroup& N) { return same_group(N, completion(G, N)); }

inline SpaceGroup kernel_of_action(const SpaceGroup& G, const Subspace& V) {
  for (auto& B : G.point_group)
    if (!V.invariant_under(B)) throw PreconditionError("V not invariant under the point group");
  return complete_subgroup(G, orthogonal_complement(V, G.gram), V);
}

inline SpaceGroup join(const SpaceGroup& A, const SpaceGroup& B) {
  auto gens = standard_generators(A);
  auto more = standard_generators(B);
  gens.insert(gens.end(), more.begin(), more.end());
  return build(A.n, gens, false);
}

inline StructureGroup structure_group(const SpaceGroup& G, const SpaceGroup& NK, bool finite) {
  StructureGroup S;
  S.finite = finite;
  if (!finite) return S;
  auto find = [&](const AffineIso& x) -> int {
    for (std::size_t i = 0; i < S.reps.size(); ++i)
      if (NK.contains(inverse(S.reps[i]) * x)) return int(i);
    return -1;
  };
  S.reps.push_back(AffineIso::identity(G.n));
  for (std::size_t h = 0; h < S.reps.size(); ++h)
    for (auto& g : G.generators) {
      AffineIso x = g * S.reps[h];
      if (find(x) < 0) S.reps.push_back(NK.canonical(x));
    }
  S.order = int(S.reps.size());
  S.table.assign(S.order, std::vector<int>(S.order, 0));
  for (int i = 0; i < S.order; ++i)
    for (int j = 0; j < S.order; ++j) S.table[i][j] = find(S.reps[i] * S.reps[j]);
  classify_kind(S);
  return S;
}

struct NormalAnalysis {
  SpaceGroup parent;
  SpaceGroup N;  // the given subgroup
  Subspace V, Vperp;
  bool complete = false;
  SpaceGroup completion;
  SpaceGroup K;
  bool dual_exists = false;
  SpaceGroup NK;
  StructureGroup structure;
  Decomposition dec;  // V basis = lattice basis of the completion, W basis = K lattice basis when dual exists

  const SpaceGroup& Nc() const { return completion; }
  int k() const { return V.dim(); }
  int m() const { return Vperp.dim(); }
};

inline NormalAnalysis analyze_normal(const SpaceGroup& G, const std::vector<AffineIso>& ngens) {
  NormalAnalysis A;
  A.parent = G;
  A.N = verify_normal(G, ngens);
  A.V = span_of(A.N);
  A.Vperp = orthogonal_complement(A.V, G.gram);
  A.completion = complete_subgroup(G, A.V, A.Vperp);
  A.complete = same_group(A.N, A.completion);
  A.K = kernel_of_action(G, A.V);
  A.dual_exists = A.K.lattice.rank() == A.Vperp.dim();
  A.NK = join(A.completion, A.K);
  A.structure = structure_group(G, A.NK, A.dual_exists);
  std::vector<Vec> vb = A.completion.lattice.rows();
  std::vector<Vec> wb = A.dual_exists ? A.K.lattice.rows() : A.Vperp.vectors();
  A.dec = Decomposition(G.n, vb, wb);
  return A;
}

inline std::optional<SpaceGroup> orthogonal_dual(const NormalAnalysis& A) {
  if (!A.dual_exists) return std::nullopt;
  return A.K;
}

inline AffineIso action_on_fiber(const NormalAnalysis& A, const AffineIso& g) { return restrict(g, A.dec).first; }
inline AffineIso action_on_base(const NormalAnalysis& A, const AffineIso& g) { return restrict(g, A.dec).second; }

// Restriction of a group's generators to V (fiber side) or W (base side).
inline SpaceGroup restricted_group(const NormalAnalysis& A, const std::vector<AffineIso>& gens, bool fiber_side) {
  std::vector<AffineIso> out;
  for (auto& g : gens) {
    auto [v, w] = restrict(g, A.dec);
    out.push_back(fiber_side ? v : w);
  }
  int d = fiber_side ? A.k() : A.m();
  return build(d, out, true);
}

}  // namespace flatfiber
