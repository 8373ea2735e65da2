// Exact rational linear algebra and integer lattice normal forms.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace flatfiber {

using Int = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<Rat>;

inline Rat make_rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

template <class T>
struct Matrix {
  int r = 0;
  int c = 0;
  std::vector<T> a;

  Matrix() = default;
  Matrix(int rows, int cols) : r(rows), c(cols), a(std::size_t(rows) * cols, T(0)) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, int cols = -1) {
    int nc = cols >= 0 ? cols : (rows.empty() ? 0 : int(rows[0].size()));
    Matrix m(int(rows.size()), nc);
    for (int i = 0; i < m.r; ++i) {
      if (int(rows[i].size()) != nc) throw std::invalid_argument("ragged rows");
      for (int j = 0; j < nc; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  T& operator()(int i, int j) { return a[std::size_t(i) * c + j]; }
  const T& operator()(int i, int j) const { return a[std::size_t(i) * c + j]; }

  std::vector<T> row(int i) const { return std::vector<T>(a.begin() + std::size_t(i) * c, a.begin() + std::size_t(i + 1) * c); }
  std::vector<T> col(int j) const {
    std::vector<T> v(r);
    for (int i = 0; i < r; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void set_row(int i, const std::vector<T>& v) {
    for (int j = 0; j < c; ++j) (*this)(i, j) = v[j];
  }
  void swap_rows(int i, int k) {
    if (i == k) return;
    for (int j = 0; j < c; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }
  void swap_cols(int j, int k) {
    if (j == k) return;
    for (int i = 0; i < r; ++i) std::swap((*this)(i, j), (*this)(i, k));
  }
  bool is_zero() const {
    for (auto& x : a)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) { return x.r == y.r && x.c == y.c && x.a == y.a; }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }
  friend bool operator<(const Matrix& x, const Matrix& y) {
    if (x.r != y.r) return x.r < y.r;
    if (x.c != y.c) return x.c < y.c;
    for (std::size_t i = 0; i < x.a.size(); ++i) {
      int s = cmp(x.a[i], y.a[i]);
      if (s != 0) return s < 0;
    }
    return false;
  }
};

using Mat = Matrix<Rat>;
using IMat = Matrix<Int>;

inline bool vec_less(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  for (std::size_t i = 0; i < x.size(); ++i) {
    int s = cmp(x[i], y[i]);
    if (s != 0) return s < 0;
  }
  return false;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

inline std::string to_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

template <class T>
std::string to_string(const Matrix<T>& m) {
  std::string s = "[";
  for (int i = 0; i < m.r; ++i) {
    s += i ? ";" : "";
    for (int j = 0; j < m.c; ++j) s += (j ? "," : "") + m(i, j).get_str();
  }
  return s + "]";
}

// ---- basic arithmetic ----

inline Vec zero_vec(int n) { return Vec(n, Rat(0)); }

inline bool is_zero(const Vec& v) {
  for (auto& x : v)
    if (x != 0) return false;
  return true;
}

inline Vec operator+(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("dimension mismatch");
  Vec z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
  return z;
}

inline Vec operator-(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("dimension mismatch");
  Vec z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] - y[i];
  return z;
}

inline Vec operator-(const Vec& x) {
  Vec z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = -x[i];
  return z;
}

inline Vec operator*(const Rat& s, const Vec& x) {
  Vec z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = s * x[i];
  return z;
}

inline Rat dot(const Vec& x, const Vec& y) {
  Rat s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& x, const Matrix<T>& y) {
  if (x.c != y.r) throw std::invalid_argument("dimension mismatch");
  Matrix<T> z(x.r, y.c);
  for (int i = 0; i < x.r; ++i)
    for (int k = 0; k < x.c; ++k) {
      if (x(i, k) == 0) continue;
      for (int j = 0; j < y.c; ++j) z(i, j) += x(i, k) * y(k, j);
    }
  return z;
}

inline Vec operator*(const Mat& m, const Vec& v) {
  if (m.c != int(v.size())) throw std::invalid_argument("dimension mismatch");
  Vec z(m.r, Rat(0));
  for (int i = 0; i < m.r; ++i)
    for (int j = 0; j < m.c; ++j) z[i] += m(i, j) * v[j];
  return z;
}

template <class T>
Matrix<T> operator+(const Matrix<T>& x, const Matrix<T>& y) {
  if (x.r != y.r || x.c != y.c) throw std::invalid_argument("dimension mismatch");
  Matrix<T> z = x;
  for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
  return z;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& x, const Matrix<T>& y) {
  if (x.r != y.r || x.c != y.c) throw std::invalid_argument("dimension mismatch");
  Matrix<T> z = x;
  for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
  return z;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& x) {
  Matrix<T> z = x;
  for (auto& e : z.a) e = -e;
  return z;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& m) {
  Matrix<T> t(m.c, m.r);
  for (int i = 0; i < m.r; ++i)
    for (int j = 0; j < m.c; ++j) t(j, i) = m(i, j);
  return t;
}

inline Mat vstack(const Mat& x, const Mat& y) {
  if (x.r == 0) return y;
  if (y.r == 0) return x;
  if (x.c != y.c) throw std::invalid_argument("dimension mismatch");
  Mat z(x.r + y.r, x.c);
  std::copy(x.a.begin(), x.a.end(), z.a.begin());
  std::copy(y.a.begin(), y.a.end(), z.a.begin() + x.a.size());
  return z;
}

inline Mat hstack(const Mat& x, const Mat& y) {
  if (x.r != y.r) throw std::invalid_argument("dimension mismatch");
  Mat z(x.r, x.c + y.c);
  for (int i = 0; i < x.r; ++i) {
    for (int j = 0; j < x.c; ++j) z(i, j) = x(i, j);
    for (int j = 0; j < y.c; ++j) z(i, x.c + j) = y(i, j);
  }
  return z;
}

inline Mat rows_to_mat(const std::vector<Vec>& rows, int cols) {
  Mat m(int(rows.size()), cols);
  for (int i = 0; i < m.r; ++i) {
    if (int(rows[i].size()) != cols) throw std::invalid_argument("dimension mismatch");
    m.set_row(i, rows[i]);
  }
  return m;
}

inline Mat cols_to_mat(const std::vector<Vec>& cols, int rows) { return transpose(rows_to_mat(cols, rows)); }

inline Mat to_rat(const IMat& m) {
  Mat q(m.r, m.c);
  for (std::size_t i = 0; i < m.a.size(); ++i) q.a[i] = m.a[i];
  return q;
}

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

inline bool is_integral(const Mat& m) {
  for (auto& x : m.a)
    if (!is_integral(x)) return false;
  return true;
}

inline IMat to_int(const Mat& m) {
  IMat z(m.r, m.c);
  for (std::size_t i = 0; i < m.a.size(); ++i) {
    if (!is_integral(m.a[i])) throw std::invalid_argument("non-integral entry");
    z.a[i] = m.a[i].get_num();
  }
  return z;
}

inline Int lcm_den(const Vec& v) {
  Int d = 1;
  for (auto& x : v) d = lcm(d, Int(x.get_den()));
  return d;
}

inline Int lcm_den(const Mat& m) { return lcm_den(m.a); }

// floor(a / b) for b != 0
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int floor_rat(const Rat& q) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

// fractional part in [0,1)
inline Rat frac(const Rat& q) { return q - Rat(floor_rat(q)); }

// ---- rational elimination ----

struct RrefResult {
  Mat m;
  std::vector<int> pivots;
};

inline RrefResult rref(Mat m) {
  std::vector<int> piv;
  int row = 0;
  for (int col = 0; col < m.c && row < m.r; ++col) {
    int p = -1;
    for (int i = row; i < m.r; ++i)
      if (m(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    m.swap_rows(row, p);
    Rat inv = 1 / m(row, col);
    for (int j = 0; j < m.c; ++j) m(row, j) *= inv;
    for (int i = 0; i < m.r; ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rat f = m(i, col);
      for (int j = col; j < m.c; ++j) m(i, j) -= f * m(row, j);
    }
    piv.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(piv)};
}

inline int rank(const Mat& m) { return int(rref(m).pivots.size()); }

inline std::vector<Vec> kernel_basis(const Mat& m) {
  auto [e, piv] = rref(m);
  std::vector<bool> is_piv(m.c, false);
  for (int p : piv) is_piv[p] = true;
  std::vector<Vec> out;
  for (int f = 0; f < m.c; ++f) {
    if (is_piv[f]) continue;
    Vec v = zero_vec(m.c);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -e(int(i), f);
    out.push_back(std::move(v));
  }
  return out;
}

inline Rat det(Mat m) {
  if (m.r != m.c) throw std::invalid_argument("det of non-square matrix");
  Rat d = 1;
  for (int col = 0; col < m.c; ++col) {
    int p = -1;
    for (int i = col; i < m.r; ++i)
      if (m(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != col) {
      m.swap_rows(p, col);
      d = -d;
    }
    d *= m(col, col);
    for (int i = col + 1; i < m.r; ++i) {
      if (m(i, col) == 0) continue;
      Rat f = m(i, col) / m(col, col);
      for (int j = col; j < m.c; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return d;
}

inline std::optional<Mat> try_inverse(const Mat& m) {
  if (m.r != m.c) return std::nullopt;
  if (m.r == 0) return Mat(0, 0);
  auto [e, piv] = rref(hstack(m, Mat::identity(m.r)));
  if (int(piv.size()) < m.r || piv[m.r - 1] != m.r - 1) return std::nullopt;
  Mat inv(m.r, m.r);
  for (int i = 0; i < m.r; ++i)
    for (int j = 0; j < m.r; ++j) inv(i, j) = e(i, m.r + j);
  return inv;
}

inline Mat inverse(const Mat& m) {
  auto inv = try_inverse(m);
  if (!inv) throw std::invalid_argument("matrix not invertible");
  return *inv;
}

// Some x with A x = b, if any (free variables set to zero).
inline std::optional<Vec> solve_affine(const Mat& A, const Vec& b) {
  if (int(b.size()) != A.r) throw std::invalid_argument("dimension mismatch");
  Mat aug(A.r, A.c + 1);
  for (int i = 0; i < A.r; ++i) {
    for (int j = 0; j < A.c; ++j) aug(i, j) = A(i, j);
    aug(i, A.c) = b[i];
  }
  auto [e, piv] = rref(aug);
  if (!piv.empty() && piv.back() == A.c) return std::nullopt;
  Vec x = zero_vec(A.c);
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = e(int(i), A.c);
  return x;
}

// ---- integer normal forms ----

// Row-style Hermite normal form: upper echelon, positive pivots, entries above
// each pivot reduced into [0, pivot). Zero rows are dropped. If `track` is
// given it receives U with U * input = output (rows beyond the rank span the
// left kernel).
inline IMat hnf_rows(IMat m, IMat* track = nullptr) {
  IMat U = IMat::identity(m.r);
  auto addrow = [&](int dst, int src, const Int& f) {  // row dst -= f * row src
    if (f == 0) return;
    for (int j = 0; j < m.c; ++j) m(dst, j) -= f * m(src, j);
    for (int j = 0; j < U.c; ++j) U(dst, j) -= f * U(src, j);
  };
  auto swaprow = [&](int i, int k) {
    m.swap_rows(i, k);
    U.swap_rows(i, k);
  };
  int row = 0;
  for (int col = 0; col < m.c && row < m.r; ++col) {
    while (true) {
      int best = -1;
      for (int i = row; i < m.r; ++i)
        if (m(i, col) != 0 && (best < 0 || abs(m(i, col)) < abs(m(best, col)))) best = i;
      if (best < 0) break;
      swaprow(row, best);
      bool done = true;
      for (int i = row + 1; i < m.r; ++i) {
        if (m(i, col) == 0) continue;
        addrow(i, row, floor_div(m(i, col), m(row, col)));
        if (m(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (m(row, col) == 0) continue;
    if (m(row, col) < 0) {
      for (int j = 0; j < m.c; ++j) m(row, j) = -m(row, j);
      for (int j = 0; j < U.c; ++j) U(row, j) = -U(row, j);
    }
    for (int i = 0; i < row; ++i) addrow(i, row, floor_div(m(i, col), m(row, col)));
    ++row;
  }
  if (track) *track = U;
  IMat out(row, m.c);
  for (int i = 0; i < row; ++i)
    for (int j = 0; j < m.c; ++j) out(i, j) = m(i, j);
  return out;
}

// Integer row vectors z with z * m = 0, as an HNF basis.
inline IMat integer_left_kernel(const IMat& m) {
  IMat U;
  IMat h = hnf_rows(m, &U);
  IMat k(m.r - h.r, m.r);
  for (int i = h.r; i < m.r; ++i)
    for (int j = 0; j < m.r; ++j) k(i - h.r, j) = U(i, j);
  return hnf_rows(k);
}

struct SnfResult {
  IMat D, U, V;  // D = U * m * V
};

inline SnfResult snf(const IMat& m0) {
  IMat D = m0;
  IMat U = IMat::identity(D.r);
  IMat V = IMat::identity(D.c);
  auto rowop = [&](int dst, int src, const Int& f) {
    if (f == 0) return;
    for (int j = 0; j < D.c; ++j) D(dst, j) -= f * D(src, j);
    for (int j = 0; j < U.c; ++j) U(dst, j) -= f * U(src, j);
  };
  auto colop = [&](int dst, int src, const Int& f) {
    if (f == 0) return;
    for (int i = 0; i < D.r; ++i) D(i, dst) -= f * D(i, src);
    for (int i = 0; i < V.r; ++i) V(i, dst) -= f * V(i, src);
  };
  int n = std::min(D.r, D.c);
  for (int t = 0; t < n; ++t) {
    int bi = -1, bj = -1;
    for (int i = t; i < D.r; ++i)
      for (int j = t; j < D.c; ++j)
        if (D(i, j) != 0 && (bi < 0 || abs(D(i, j)) < abs(D(bi, bj)))) bi = i, bj = j;
    if (bi < 0) break;
    D.swap_rows(t, bi);
    U.swap_rows(t, bi);
    D.swap_cols(t, bj);
    V.swap_cols(t, bj);
    while (true) {
      bool clean = true;
      for (int i = t + 1; i < D.r; ++i) {
        if (D(i, t) == 0) continue;
        rowop(i, t, floor_div(D(i, t), D(t, t)));
        if (D(i, t) != 0) {
          clean = false;
          D.swap_rows(t, i);
          U.swap_rows(t, i);
        }
      }
      for (int j = t + 1; j < D.c; ++j) {
        if (D(t, j) == 0) continue;
        colop(j, t, floor_div(D(t, j), D(t, t)));
        if (D(t, j) != 0) {
          clean = false;
          D.swap_cols(t, j);
          V.swap_cols(t, j);
        }
      }
      if (!clean) continue;
      int bad = -1;
      for (int i = t + 1; i < D.r && bad < 0; ++i)
        for (int j = t + 1; j < D.c; ++j)
          if (D(i, j) % D(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      rowop(t, bad, Int(-1));
    }
    if (D(t, t) < 0) {
      for (int j = 0; j < D.c; ++j) D(t, j) = -D(t, j);
      for (int j = 0; j < U.c; ++j) U(t, j) = -U(t, j);
    }
  }
  return {D, U, V};
}

// Integer z with M z = r, M rational.
inline std::optional<std::vector<Int>> solve_integer(const Mat& M, const Vec& r) {
  if (int(r.size()) != M.r) throw std::invalid_argument("dimension mismatch");
  Int den = lcm(lcm_den(M), lcm_den(r));
  Mat Ms = M;
  for (auto& x : Ms.a) x *= den;
  Vec rs = r;
  for (auto& x : rs) x *= den;
  auto [D, U, V] = snf(to_int(Ms));
  std::vector<Int> ri(rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) ri[i] = rs[i].get_num();
  std::vector<Int> s(D.r, Int(0));
  for (int i = 0; i < D.r; ++i)
    for (int j = 0; j < D.r; ++j) s[i] += U(i, j) * ri[j];
  std::vector<Int> y(D.c, Int(0));
  for (int i = 0; i < D.r; ++i) {
    Int d = i < D.c ? D(i, i) : Int(0);
    if (d == 0) {
      if (s[i] != 0) return std::nullopt;
      continue;
    }
    if (s[i] % d != 0) return std::nullopt;
    y[i] = s[i] / d;
  }
  std::vector<Int> z(D.c, Int(0));
  for (int i = 0; i < D.c; ++i)
    for (int j = 0; j < D.c; ++j) z[i] += V(i, j) * y[j];
  return z;
}

// ---- lattices ----

// (1/den) * rowspace_Z(basis), basis in integer HNF.
struct Lattice {
  int n = 0;
  Int den = 1;
  IMat basis;

  int rank() const { return basis.r; }
  Vec row(int i) const {
    Vec v(n);
    for (int j = 0; j < n; ++j) v[j] = make_rat(basis(i, j), den);
    return v;
  }
  std::vector<Vec> rows() const {
    std::vector<Vec> out;
    for (int i = 0; i < rank(); ++i) out.push_back(row(i));
    return out;
  }
  Mat basis_mat() const { return rows_to_mat(rows(), n); }
  int pivot(int i) const {
    for (int j = 0; j < n; ++j)
      if (basis(i, j) != 0) return j;
    return -1;
  }
  friend bool operator==(const Lattice& x, const Lattice& y) { return x.n == y.n && x.den == y.den && x.basis == y.basis; }
  friend bool operator!=(const Lattice& x, const Lattice& y) { return !(x == y); }
};

inline Lattice canonical_lattice(int n, IMat rows, Int den) {
  IMat h = hnf_rows(rows);
  Int g = den;
  for (auto& x : h.a) g = gcd(g, x);
  if (g > 1) {
    for (auto& x : h.a) x /= g;
    den /= g;
  }
  if (h.r == 0) {
    den = 1;
    h = IMat(0, n);
  }
  return Lattice{n, den, h};
}

inline Lattice hnf(int n, const std::vector<Vec>& gens) {
  Int den = 1;
  for (auto& g : gens) {
    if (int(g.size()) != n) throw std::invalid_argument("dimension mismatch");
    den = lcm(den, lcm_den(g));
  }
  IMat m(int(gens.size()), n);
  for (int i = 0; i < m.r; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Rat(gens[i][j] * den).get_num();
  return canonical_lattice(n, m, den);
}

inline Lattice standard_lattice(int n) { return Lattice{n, 1, IMat::identity(n)}; }

// Canonical representative of v + L obtained by pivot reduction.
inline Vec reduce_mod(const Lattice& L, Vec v) {
  for (int i = 0; i < L.rank(); ++i) {
    int p = L.pivot(i);
    Rat piv = make_rat(L.basis(i, p), L.den);
    Int q = floor_rat(v[p] / piv);
    if (q == 0) continue;
    for (int j = p; j < L.n; ++j) v[j] -= Rat(q) * make_rat(L.basis(i, j), L.den);
  }
  return v;
}

inline bool lattice_member(const Lattice& L, const Vec& v) { return is_zero(reduce_mod(L, v)); }

inline Lattice lattice_sum(const Lattice& A, const Lattice& B) {
  auto g = A.rows();
  auto h = B.rows();
  g.insert(g.end(), h.begin(), h.end());
  return hnf(A.n, g);
}

inline Lattice lattice_intersection(const Lattice& A, const Lattice& B) {
  if (A.n != B.n) throw std::invalid_argument("dimension mismatch");
  if (A.rank() == 0 || B.rank() == 0) return hnf(A.n, {});
  Int D = lcm(A.den, B.den);
  IMat m(A.rank() + B.rank(), A.n);
  for (int i = 0; i < A.rank(); ++i)
    for (int j = 0; j < A.n; ++j) m(i, j) = A.basis(i, j) * (D / A.den);
  for (int i = 0; i < B.rank(); ++i)
    for (int j = 0; j < A.n; ++j) m(A.rank() + i, j) = -B.basis(i, j) * (D / B.den);
  IMat k = integer_left_kernel(m);
  IMat rows(k.r, A.n);
  for (int t = 0; t < k.r; ++t)
    for (int i = 0; i < A.rank(); ++i)
      for (int j = 0; j < A.n; ++j) rows(t, j) += k(t, i) * m(i, j);
  return canonical_lattice(A.n, rows, D);
}

// Lattice points of L lying in the subspace spanned by `span_rows`.
inline Lattice lattice_in_subspace(const Lattice& L, const std::vector<Vec>& span_rows) {
  if (L.rank() == 0) return L;
  std::vector<Vec> ann = kernel_basis(span_rows.empty() ? Mat(0, L.n) : rows_to_mat(span_rows, L.n));
  if (ann.empty()) return L;
  Mat B = L.basis_mat();
  Mat Y = rows_to_mat(ann, L.n);
  Mat M = B * transpose(Y);  // rank x |ann|
  Int den = lcm_den(M);
  for (auto& x : M.a) x *= den;
  IMat k = integer_left_kernel(to_int(M));
  std::vector<Vec> gens;
  for (int t = 0; t < k.r; ++t) {
    Vec v = zero_vec(L.n);
    for (int i = 0; i < L.rank(); ++i) v = v + Rat(k(t, i)) * B.row(i);
    gens.push_back(v);
  }
  return hnf(L.n, gens);
}

// [L : Lsub] for Lsub a sublattice of L; nullopt means infinite.
inline std::optional<Int> lattice_index(const Lattice& L, const Lattice& Lsub) {
  for (auto& v : Lsub.rows())
    if (!lattice_member(L, v)) throw std::invalid_argument("lattice_index: not a sublattice");
  if (Lsub.rank() != L.rank()) return std::nullopt;
  if (L.rank() == 0) return Int(1);
  Mat B = L.basis_mat();
  Mat C(L.rank(), L.rank());
  Mat Bt = transpose(B);
  for (int i = 0; i < Lsub.rank(); ++i) {
    auto x = solve_affine(Bt, Lsub.row(i));
    for (int j = 0; j < L.rank(); ++j) C(i, j) = (*x)[j];
  }
  Rat d = abs(det(C));
  return d.get_num();
}

// Some x with A x - b in L.
inline std::optional<Vec> solve_affine_mod_lattice(const Mat& A, const Vec& b, const Lattice& L) {
  if (int(b.size()) != A.r || L.n != A.r) throw std::invalid_argument("dimension mismatch");
  if (L.rank() == 0) return solve_affine(A, b);
  std::vector<Vec> Yrows = kernel_basis(transpose(A));
  Mat Bt = transpose(L.basis_mat());  // m x r
  Vec shift = zero_vec(A.r);
  if (!Yrows.empty()) {
    Mat Y = rows_to_mat(Yrows, A.r);
    auto z = solve_integer(Y * Bt, -(Y * b));
    if (!z) return std::nullopt;
    Vec zq(z->size());
    for (std::size_t i = 0; i < z->size(); ++i) zq[i] = (*z)[i];
    shift = Bt * zq;
  }
  return solve_affine(A, b + shift);
}

}  // namespace flatfiber
