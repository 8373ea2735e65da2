// Finite descriptions of space groups and of their (not necessarily cocompact) subgroups.
#pragma once

#include <cstdlib>
#include <deque>
#include <map>

#include "flatfiber/isometry.hpp"

namespace flatfiber {

struct GroupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::size_t pointgroup_bound() {
  if (const char* s = std::getenv("FLATFIBER_POINTGROUP_BOUND")) {
    long v = std::atol(s);
    if (v > 0) return std::size_t(v);
  }
  return 10000;
}

struct SpaceGroup {
  int n = 0;
  std::vector<AffineIso> generators;
  std::vector<Mat> point_group;  // identity first, BFS order
  std::map<Mat, Vec> vector_system;
  Lattice lattice;
  GramForm gram;

  int order() const { return int(point_group.size()); }
  bool has_linear(const Mat& B) const { return vector_system.count(B) > 0; }
  AffineIso rep(const Mat& B) const { return {vector_system.at(B), B}; }
  bool contains(const AffineIso& g) const {
    if (g.dim() != n) return false;
    auto it = vector_system.find(g.A);
    if (it == vector_system.end()) return false;
    return lattice_member(lattice, g.t - it->second);
  }
  bool cocompact() const { return lattice.rank() == n; }
  // canonical form of g within the group (lattice-reduced translation)
  AffineIso canonical(const AffineIso& g) const { return {reduce_mod(lattice, g.t), g.A}; }
};

// Point group by BFS over generator words, translations from Schreier generators.
inline SpaceGroup build(int n, const std::vector<AffineIso>& gens, bool require_cocompact = true) {
  for (auto& g : gens) {
    if (g.dim() != n) throw GroupError("generator dimension mismatch");
    if (!try_inverse(g.A)) throw GroupError("linear part not invertible");
  }
  SpaceGroup G;
  G.n = n;
  G.generators = gens;
  std::map<Mat, AffineIso> reps;
  std::vector<Mat> order;
  Mat I = Mat::identity(n);
  reps.emplace(I, AffineIso::identity(n));
  order.push_back(I);
  std::vector<Vec> trans;
  std::size_t bound = pointgroup_bound();
  for (std::size_t head = 0; head < order.size(); ++head) {
    AffineIso rp = reps.at(order[head]);
    for (auto& g : gens) {
      AffineIso x = g * rp;
      auto it = reps.find(x.A);
      if (it == reps.end()) {
        reps.emplace(x.A, x);
        order.push_back(x.A);
        if (order.size() > bound) throw GroupError("point group not finite");
      } else {
        AffineIso s = inverse(it->second) * x;
        if (!is_zero(s.t)) trans.push_back(s.t);
      }
    }
  }
  G.lattice = hnf(n, trans);
  if (require_cocompact && G.lattice.rank() < n) throw GroupError("not cocompact");
  G.point_group = order;
  for (auto& B : order) G.vector_system[B] = reduce_mod(G.lattice, reps.at(B).t);
  for (auto& B : order)
    for (auto& v : G.lattice.rows())
      if (!lattice_member(G.lattice, B * v)) throw GroupError("lattice not invariant under point group");
  G.gram = invariant_gram(order);
  return G;
}

inline SpaceGroup build(const std::vector<AffineIso>& gens, bool require_cocompact = true) {
  if (gens.empty()) throw GroupError("no generators");
  return build(gens[0].dim(), gens, require_cocompact);
}

// The translations of the lattice basis followed by one representative per
// non-identity point-group element.
inline std::vector<AffineIso> standard_generators(const SpaceGroup& G) {
  std::vector<AffineIso> out;
  for (auto& v : G.lattice.rows()) out.push_back(AffineIso::translation(v));
  for (std::size_t i = 1; i < G.point_group.size(); ++i) out.push_back(G.rep(G.point_group[i]));
  return out;
}

inline bool same_group(const SpaceGroup& A, const SpaceGroup& B) {
  if (A.n != B.n || A.lattice != B.lattice || A.order() != B.order()) return false;
  for (auto& g : standard_generators(A))
    if (!B.contains(g)) return false;
  return true;
}

inline bool subgroup_of(const SpaceGroup& H, const SpaceGroup& G) {
  for (auto& g : standard_generators(H))
    if (!G.contains(g)) return false;
  return true;
}

inline Subspace center_span(const SpaceGroup& G) {
  Mat stacked(0, G.n);
  for (auto& B : G.point_group) stacked = vstack(stacked, B - Mat::identity(G.n));
  if (stacked.r == 0) return Subspace::whole(G.n);
  return Subspace::span(G.n, kernel_basis(stacked));
}

inline std::vector<AffineIso> center_generators(const SpaceGroup& G) {
  Lattice Z = lattice_in_subspace(G.lattice, center_span(G).vectors());
  std::vector<AffineIso> out;
  for (auto& v : Z.rows()) out.push_back(AffineIso::translation(v));
  return out;
}

inline int first_betti(const SpaceGroup& G) { return center_span(G).dim(); }
inline int isom_rank(const SpaceGroup& G) { return first_betti(G); }

inline bool orientation_preserving(const SpaceGroup& G) {
  for (auto& B : G.point_group)
    if (det(B) < 0) return false;
  return true;
}

// Conjugate a group by the affine map phi: g -> phi g phi^-1.
inline SpaceGroup conjugate(const SpaceGroup& G, const AffineIso& phi, bool require_cocompact = true) {
  AffineIso pi = inverse(phi);
  std::vector<AffineIso> gens;
  for (auto& g : G.generators) gens.push_back(phi * g * pi);
  return build(G.n, gens, require_cocompact);
}

}  // namespace flatfiber
