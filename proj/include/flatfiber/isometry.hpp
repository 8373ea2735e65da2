// Affine maps a + A, invariant Gram forms, subspaces and block restriction.
#pragma once

#include <set>

#include "flatfiber/exact.hpp"

namespace flatfiber {

struct AffineIso {
  Vec t;  // a
  Mat A;  // A

  AffineIso() = default;
  AffineIso(Vec trans, Mat lin) : t(std::move(trans)), A(std::move(lin)) {
    if (A.r != A.c || A.r != int(t.size())) throw std::invalid_argument("dimension mismatch");
  }
  int dim() const { return A.r; }

  static AffineIso identity(int n) { return {zero_vec(n), Mat::identity(n)}; }
  static AffineIso translation(Vec v) {
    int n = int(v.size());
    return {std::move(v), Mat::identity(n)};
  }
  static AffineIso linear(Mat m) {
    int n = m.r;
    return {zero_vec(n), std::move(m)};
  }
  bool is_identity() const { return is_zero(t) && A == Mat::identity(dim()); }
  bool is_translation() const { return A == Mat::identity(dim()); }

  friend bool operator==(const AffineIso& x, const AffineIso& y) { return x.A == y.A && x.t == y.t; }
  friend bool operator!=(const AffineIso& x, const AffineIso& y) { return !(x == y); }
  friend bool operator<(const AffineIso& x, const AffineIso& y) {
    if (x.A != y.A) return x.A < y.A;
    return vec_less(x.t, y.t);
  }
};

inline std::string to_string(const AffineIso& g) { return to_string(g.t) + "+" + to_string(g.A); }

// (a+A)(b+B) = (a+Ab) + AB
inline AffineIso compose(const AffineIso& g, const AffineIso& h) {
  if (g.dim() != h.dim()) throw std::invalid_argument("dimension mismatch");
  return {g.t + g.A * h.t, g.A * h.A};
}

inline AffineIso operator*(const AffineIso& g, const AffineIso& h) { return compose(g, h); }

inline AffineIso inverse(const AffineIso& g) {
  auto Ai = try_inverse(g.A);
  if (!Ai) throw std::invalid_argument("linear part not invertible");
  return {-(*Ai * g.t), *Ai};
}

inline Vec apply(const AffineIso& g, const Vec& x) { return g.t + g.A * x; }

inline AffineIso power(const AffineIso& g, long k) {
  AffineIso base = k < 0 ? inverse(g) : g;
  AffineIso r = AffineIso::identity(g.dim());
  for (long i = 0; i < (k < 0 ? -k : k); ++i) r = r * base;
  return r;
}

// order of a matrix of finite order, 0 if none up to `bound`
inline int matrix_order(const Mat& A, int bound = 24) {
  Mat I = Mat::identity(A.r);
  Mat P = A;
  for (int k = 1; k <= bound; ++k) {
    if (P == I) return k;
    P = P * A;
  }
  return 0;
}

struct GramForm {
  Mat G;
  Rat inner(const Vec& x, const Vec& y) const { return dot(x, G * y); }
};

inline bool positive_definite(const Mat& G) {
  for (int k = 1; k <= G.r; ++k) {
    Mat S(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) S(i, j) = G(i, j);
    if (det(S) <= 0) return false;
  }
  return true;
}

inline GramForm invariant_gram(const std::vector<Mat>& pg) {
  if (pg.empty()) throw std::invalid_argument("empty point group");
  int n = pg[0].r;
  std::set<Mat> s(pg.begin(), pg.end());
  for (auto& x : pg)
    for (auto& y : pg)
      if (!s.count(x * y)) throw std::invalid_argument("point group list not closed");
  Mat G(n, n);
  for (auto& B : s) G = G + transpose(B) * B;
  if (G != transpose(G) || !positive_definite(G)) throw std::logic_error("gram form not positive definite");
  return {G};
}

struct Subspace {
  int n = 0;
  Mat basis;  // RREF rows

  static Subspace span(int n, const std::vector<Vec>& vs) {
    if (vs.empty()) return {n, Mat(0, n)};
    auto [e, piv] = rref(rows_to_mat(vs, n));
    Mat b(int(piv.size()), n);
    for (int i = 0; i < b.r; ++i)
      for (int j = 0; j < n; ++j) b(i, j) = e(i, j);
    return {n, b};
  }
  static Subspace whole(int n) { return {n, Mat::identity(n)}; }
  int dim() const { return basis.r; }
  std::vector<Vec> vectors() const {
    std::vector<Vec> out;
    for (int i = 0; i < basis.r; ++i) out.push_back(basis.row(i));
    return out;
  }
  bool contains(const Vec& v) const {
    if (dim() == 0) return is_zero(v);
    return rank(vstack(basis, rows_to_mat({v}, n))) == dim();
  }
  bool invariant_under(const Mat& A) const {
    for (int i = 0; i < basis.r; ++i)
      if (!contains(A * basis.row(i))) return false;
    return true;
  }
  friend bool operator==(const Subspace& x, const Subspace& y) { return x.n == y.n && x.basis == y.basis; }
  friend bool operator!=(const Subspace& x, const Subspace& y) { return !(x == y); }
};

inline Subspace orthogonal_complement(const Subspace& V, const GramForm& G) {
  if (V.dim() == 0) return Subspace::whole(V.n);
  return Subspace::span(V.n, kernel_basis(V.basis * G.G));
}

// Fix(A) as a subspace
inline Subspace fixed_space(const Mat& A) { return Subspace::span(A.r, kernel_basis(A - Mat::identity(A.r))); }

// Coordinates adapted to E^n = V + W: columns of P are the V basis followed by
// the W basis. Restriction of a V-preserving map returns its two blocks.
struct Decomposition {
  int n = 0, k = 0;
  std::vector<Vec> vbasis, wbasis;
  Mat P, Pinv;

  Decomposition() = default;
  Decomposition(int dim, std::vector<Vec> vb, std::vector<Vec> wb) : n(dim), k(int(vb.size())), vbasis(std::move(vb)), wbasis(std::move(wb)) {
    std::vector<Vec> cols = vbasis;
    cols.insert(cols.end(), wbasis.begin(), wbasis.end());
    if (int(cols.size()) != n) throw std::invalid_argument("bases do not span");
    P = cols_to_mat(cols, n);
    auto inv = try_inverse(P);
    if (!inv) throw std::invalid_argument("bases not independent");
    Pinv = *inv;
  }
  int m() const { return n - k; }
  Vec v_coords(const Vec& x) const {
    Vec y = Pinv * x;
    return Vec(y.begin(), y.begin() + k);
  }
  Vec w_coords(const Vec& x) const {
    Vec y = Pinv * x;
    return Vec(y.begin() + k, y.end());
  }
  Vec from_v(const Vec& c) const {
    Vec x = zero_vec(n);
    for (int i = 0; i < k; ++i) x = x + c[i] * vbasis[i];
    return x;
  }
  Vec from_w(const Vec& c) const {
    Vec x = zero_vec(n);
    for (int i = 0; i < m(); ++i) x = x + c[i] * wbasis[i];
    return x;
  }
};

inline std::pair<AffineIso, AffineIso> restrict(const AffineIso& g, const Decomposition& D) {
  Mat M = D.Pinv * g.A * D.P;
  int k = D.k, m = D.m();
  for (int i = 0; i < D.n; ++i)
    for (int j = 0; j < D.n; ++j)
      if ((i < k) != (j < k) && M(i, j) != 0) throw std::invalid_argument("subspace not invariant under linear part");
  Vec s = D.Pinv * g.t;
  Mat Mv(k, k), Mw(m, m);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) Mv(i, j) = M(i, j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) Mw(i, j) = M(k + i, k + j);
  return {AffineIso(Vec(s.begin(), s.begin() + k), Mv), AffineIso(Vec(s.begin() + k, s.end()), Mw)};
}

inline Decomposition orthogonal_decomposition(const Subspace& V, const GramForm& G) {
  return Decomposition(V.n, V.vectors(), orthogonal_complement(V, G).vectors());
}

}  // namespace flatfiber
