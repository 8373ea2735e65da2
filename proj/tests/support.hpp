// Shared helpers for the unit and acceptance tests.
#pragma once

#include <array>
#include <random>

#include "flatfiber/catalog.hpp"
#include "flatfiber/fibration.hpp"

namespace flatfiber::testkit {

struct Case {
  std::string name;
  SpaceGroup G;
  std::vector<AffineIso> normal;
};

inline Mat random_unimodular(std::mt19937& rng, int n) {
  Mat U = Mat::identity(n);
  std::uniform_int_distribution<int> pick(0, n - 1), coef(-2, 2);
  for (int s = 0; s < 5; ++s) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    Rat f(coef(rng));
    for (int k = 0; k < n; ++k) U(i, k) += f * U(j, k);
  }
  if (pick(rng) == 0) {
    for (int k = 0; k < n; ++k) U(0, k) = -U(0, k);
  }
  return U;
}

// x -> t + U x with U unimodular and t having small denominators
inline AffineIso random_affinity(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> num(0, 5), den(1, 4);
  Vec t(n);
  for (auto& x : t) x = make_rat(num(rng), den(rng));
  return {t, random_unimodular(rng, n)};
}

inline std::vector<AffineIso> conjugate_all(const std::vector<AffineIso>& gs, const AffineIso& phi) {
  AffineIso pi = inverse(phi);
  std::vector<AffineIso> out;
  for (auto& g : gs) out.push_back(phi * g * pi);
  return out;
}

inline std::vector<Case> builtin_cases() {
  std::vector<Case> out;
  for (auto& s : builtin_specs()) {
    if (!s.has_normal()) continue;
    out.push_back({s.name, build(s.dim, s.generators()), normal_generators(s)});
  }
  return out;
}

inline Case random_case(std::mt19937& rng, const std::vector<Case>& base) {
  std::uniform_int_distribution<std::size_t> pick(0, base.size() - 1);
  const Case& c = base[pick(rng)];
  AffineIso phi = random_affinity(rng, c.G.n);
  return {c.name + "^phi", build(c.G.n, conjugate_all(c.G.generators, phi)), conjugate_all(c.normal, phi)};
}

// ---- GL(2,Z) brute force ----

using I2 = std::array<long, 4>;  // a b; c d

inline I2 mul2(const I2& x, const I2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

inline long det2(const I2& x) { return x[0] * x[3] - x[1] * x[2]; }

inline int order2(const I2& x) {
  I2 p = x;
  for (int k = 1; k <= 12; ++k) {
    if (p == I2{1, 0, 0, 1}) return k;
    p = mul2(p, x);
  }
  return 0;
}

// every finite-order matrix with entries in [-b, b]
inline std::vector<I2> finite_order_matrices(long b) {
  std::vector<I2> out;
  for (long a = -b; a <= b; ++a)
    for (long c = -b; c <= b; ++c)
      for (long d = -b; d <= b; ++d)
        for (long e = -b; e <= b; ++e) {
          I2 x{a, c, d, e};
          long t = det2(x);
          if ((t == 1 || t == -1) && order2(x)) out.push_back(x);
        }
  return out;
}

inline I2 to_i2(const Mat& m) {
  return {m(0, 0).get_num().get_si(), m(0, 1).get_num().get_si(), m(1, 0).get_num().get_si(), m(1, 1).get_num().get_si()};
}

inline Mat from_i2(const I2& x) { return Mat::from_rows({{Rat(x[0]), Rat(x[1])}, {Rat(x[2]), Rat(x[3])}}); }

// class found by searching conjugators P (entries in [-b, b]) with P K = R P
inline std::optional<ConjClass> brute_force_class(const I2& K, long b = 5) {
  static std::vector<I2> conj;
  static long built = -1;
  if (built != b) {
    conj.clear();
    for (long p = -b; p <= b; ++p)
      for (long q = -b; q <= b; ++q)
        for (long r = -b; r <= b; ++r)
          for (long s = -b; s <= b; ++s) {
            I2 x{p, q, r, s};
            long t = det2(x);
            if (t == 1 || t == -1) conj.push_back(x);
          }
    built = b;
  }
  for (ConjClass c : {ConjClass::I, ConjClass::MinusI, ConjClass::CA, ConjClass::C, ConjClass::B2, ConjClass::A, ConjClass::B}) {
    I2 R = to_i2(gl2::representative(c));
    for (auto& P : conj)
      if (mul2(P, K) == mul2(R, P)) return c;
  }
  return std::nullopt;
}

}  // namespace flatfiber::testkit

// readable failure output for the unit tests
inline void PrintTo(const flatfiber::Vec& v, std::ostream* os) { *os << flatfiber::to_string(v); }
inline void PrintTo(const flatfiber::Rat& q, std::ostream* os) { *os << q.get_str(); }
namespace flatfiber {
inline void PrintTo(const Mat& m, std::ostream* os) {
  for (int i = 0; i < m.r; ++i) *os << (i ? "; " : "") << to_string(m.row(i));
}
inline void PrintTo(const AffineIso& g, std::ostream* os) { *os << to_string(g); }
inline void PrintTo(const Lattice& L, std::ostream* os) { *os << "lattice/" << L.den.get_str() << " rank " << L.rank(); }
inline void PrintTo(const Subspace& s, std::ostream* os) { PrintTo(s.basis, os); }
inline void PrintTo(const OrbType& t, std::ostream* os) { *os << t.name(); }
}  // namespace flatfiber
