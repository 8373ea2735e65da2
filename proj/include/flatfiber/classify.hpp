// Affinities of the torus and of the pillow, conjugacy of pairs of them,
// classifying pairs of co-Seifert fibrations and the inverse construction.
#pragma once

#include <array>
#include <set>

#include "flatfiber/splitting.hpp"

namespace flatfiber {

enum class FiberKind { Torus, Pillow };
enum class DeltaKind { Cyclic, Dihedral };

inline std::string fiber_kind_name(FiberKind f) { return f == FiberKind::Torus ? "torus" : "pillow"; }
inline std::string delta_kind_name(DeltaKind d) { return d == DeltaKind::Cyclic ? "cyclic" : "dihedral"; }

// M = p1 or p2 in standard position
inline SpaceGroup fiber_model(FiberKind f) {
  std::vector<AffineIso> g{AffineIso::translation({1, 0}), AffineIso::translation({0, 1})};
  if (f == FiberKind::Pillow) g.push_back(AffineIso::linear(-Mat::identity(2)));
  return build(2, g);
}

// ---- named affinities ----

namespace detail {

inline AffineIso aff(Rat x, Rat y, const Mat& K) { return AffineIso({x, y}, K); }

inline std::string strip_label(std::string s) {
  auto trim_all = [](std::string x) {
    while (!x.empty() && (x.back() == '.' || x.back() == ' ')) x.pop_back();
    while (!x.empty() && x.front() == ' ') x.erase(x.begin());
    return x;
  };
  return trim_all(std::move(s));
}

inline std::optional<AffineIso> base_affinity(FiberKind f, const std::string& n) {
  const Rat h(1, 2);
  Mat I = gl2::I(), A = gl2::A(), B = gl2::B(), C = gl2::C(), CA = gl2::CA(), AC = gl2::AC();
  if (n == "idt") return aff(0, 0, I);
  if (f == FiberKind::Torus) {
    if (n == "h-rot") return aff(h, 0, I);
    if (n == "v-rot") return aff(0, h, I);
    if (n == "2-sym") return aff(h, h, I);
    if (n == "2-rot") return aff(0, 0, -I);
    if (n == "h-ref") return aff(0, 0, AC);
    if (n == "v-ref") return aff(0, 0, CA);
    if (n == "h-grf") return aff(h, 0, CA);
    if (n == "v-grf") return aff(0, h, AC);
    if (n == "d-ref") return aff(0, 0, C);
    if (n == "e-ref") return aff(0, 0, -C);
    if (n == "4-rot") return aff(0, 0, A);
    if (n == "4-sym") return aff(0, h, C);
    if (n == "3-aff") return aff(0, 0, B * B);
    if (n == "6-aff") return aff(0, 0, B);
    if (n == "m-aff") return aff(0, 0, C * B);
    if (n == "n-aff") return aff(0, 0, C * B * B);
    return std::nullopt;
  }
  if (n == "c-rot") return aff(h, h, I);
  if (n == "m-rot") return aff(h, 0, I);
  if (n == "c-ref") return aff(0, 0, AC);
  if (n == "m-ref") return aff(h, 0, AC);
  if (n == "2-sym") return aff(h, h, AC);
  if (n == "d-ref" || n == "def") return aff(0, 0, C);
  if (n == "d-rot") return aff(0, 0, A);
  if (n == "4-rot") return aff(h, 0, A);
  if (n == "4-sym") return aff(h, 0, C);
  if (n == "3-aff") return aff(0, 0, B);
  if (n == "2-aff") return aff(0, 0, C * B);
  return std::nullopt;
}

}  // namespace detail

// Names as printed in the tables. Suffixes: "^-1" inverse; on the torus "'"
// is left multiplication by h-rot, "′" by v-rot and "″" or "''" by 2-sym; on
// the pillow any prime is left multiplication by c-rot.
inline std::optional<AffineIso> named_affinity(FiberKind f, std::string label) {
  std::string s = detail::strip_label(label);
  bool inv = false;
  if (s.size() > 3 && s.substr(s.size() - 3) == "^-1") {
    inv = true;
    s = detail::strip_label(s.substr(0, s.size() - 3));
  }
  std::vector<std::string> mods;
  for (;;) {
    if (s.size() >= 3 && s.substr(s.size() - 3) == "″") mods.push_back("''"), s.resize(s.size() - 3);
    else if (s.size() >= 3 && s.substr(s.size() - 3) == "′") mods.push_back("`"), s.resize(s.size() - 3);
    else if (s.size() >= 2 && s.substr(s.size() - 2) == "''") mods.push_back("''"), s.resize(s.size() - 2);
    else if (!s.empty() && s.back() == '\'') mods.push_back("'"), s.pop_back();
    else if (!s.empty() && s.back() == '`') mods.push_back("`"), s.pop_back();
    else break;
    s = detail::strip_label(s);
  }
  auto g = detail::base_affinity(f, s);
  if (!g) return std::nullopt;
  for (auto& m : mods) {
    std::string left;
    if (f == FiberKind::Pillow) left = "c-rot";
    else left = m == "'" ? "h-rot" : m == "`" ? "v-rot" : "2-sym";
    g = *detail::base_affinity(f, left) * *g;
  }
  if (inv) g = inverse(*g);
  return g;
}

// "{a, b}" -> {"a", "b"}
inline std::vector<std::string> split_pair_label(const std::string& label) {
  std::string s = label;
  for (char ch : {'{', '}', '\\'}) s.erase(std::remove(s.begin(), s.end(), ch), s.end());
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    part = detail::strip_label(part);
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

// ---- elements of Aff(M) ----

namespace detail {

using I4 = std::array<long, 4>;  // a b ; c d

inline I4 to_i4(const Mat& m) {
  return {long(m(0, 0).get_num().get_si()), long(m(0, 1).get_num().get_si()), long(m(1, 0).get_num().get_si()),
          long(m(1, 1).get_num().get_si())};
}
inline Mat from_i4(const I4& x) { return Mat::from_rows({{Rat(x[0]), Rat(x[1])}, {Rat(x[2]), Rat(x[3])}}); }
inline I4 mul(const I4& x, const I4& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}
inline I4 neg(const I4& x) { return {-x[0], -x[1], -x[2], -x[3]}; }

inline const std::vector<I4>& small_gl2z(int bound) {
  static std::map<int, std::vector<I4>> cache;
  auto& v = cache[bound];
  if (v.empty()) {
    for (long a = -bound; a <= bound; ++a)
      for (long b = -bound; b <= bound; ++b)
        for (long c = -bound; c <= bound; ++c)
          for (long d = -bound; d <= bound; ++d)
            if (a * d - b * c == 1 || a * d - b * c == -1) v.push_back({a, b, c, d});
    std::stable_sort(v.begin(), v.end(), [](const I4& x, const I4& y) {
      auto w = [](const I4& z) { return std::abs(z[0]) + std::abs(z[1]) + std::abs(z[2]) + std::abs(z[3]); };
      return w(x) < w(y);
    });
  }
  return v;
}

inline bool integral_diff(const Vec& x, const Vec& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!is_integral(x[i] - y[i])) return false;
  return true;
}

}  // namespace detail

inline bool normalizes_model(FiberKind f, const AffineIso& g) {
  if (g.dim() != 2 || !is_integral(g.A) || abs(det(g.A)) != 1) return false;
  if (f == FiberKind::Pillow)
    for (auto& x : g.t)
      if (!is_integral(2 * x)) return false;
  return true;
}

// equality in Aff(M) = N(M)/M
inline bool same_affinity(FiberKind f, const AffineIso& x, const AffineIso& y) {
  if (x.A != y.A && !(f == FiberKind::Pillow && x.A == -y.A)) return false;
  return detail::integral_diff(x.t, y.t);
}

inline int affinity_order(FiberKind f, const AffineIso& g, int bound = 12) {
  AffineIso p = g;
  AffineIso id = AffineIso::identity(2);
  for (int k = 1; k <= bound; ++k) {
    if (same_affinity(f, p, id)) return k;
    p = p * g;
  }
  return 0;
}

// order of the linear part in GL(2,Z), or in PGL(2,Z) for the pillow
inline int outer_order(FiberKind f, const Mat& K) {
  Mat p = K;
  for (int k = 1; k <= 12; ++k) {
    if (p == gl2::I() || (f == FiberKind::Pillow && p == -gl2::I())) return k;
    p = p * K;
  }
  return 0;
}

inline bool has_fixed_point(FiberKind f, const AffineIso& g) {
  Lattice Z2 = standard_lattice(2);
  if (solve_affine_mod_lattice(gl2::I() - g.A, g.t, Z2)) return true;
  return f == FiberKind::Pillow && solve_affine_mod_lattice(gl2::I() + g.A, g.t, Z2).has_value();
}

// -1 eigenspace of the linear parts, intersected
inline Subspace minus_one_intersection(const std::vector<AffineIso>& gs) {
  Mat stacked(0, 2);
  for (auto& g : gs) stacked = vstack(stacked, g.A + gl2::I());
  return Subspace::span(2, kernel_basis(stacked));
}

namespace detail {

// Conjugate a tuple by P^-1 where P reduces the invariant form of the
// group generated by the linear parts; entries become small.
inline std::vector<AffineIso> reduce_tuple(const std::vector<AffineIso>& xs) {
  std::vector<Mat> gens;
  for (auto& x : xs) gens.push_back(x.A);
  std::set<Mat> grp{gl2::I()};
  std::vector<Mat> todo{gl2::I()};
  while (!todo.empty()) {
    Mat m = todo.back();
    todo.pop_back();
    for (auto& g : gens) {
      Mat y = g * m;
      if (grp.insert(y).second) todo.push_back(y);
      if (grp.size() > 48) throw ClassError("linear parts generate an infinite group");
    }
  }
  Mat Q(2, 2);
  for (auto& h : grp) Q = Q + transpose(h) * h;
  Mat P = gl2::I();
  for (int it = 0; it < 200; ++it) {
    Mat R = transpose(P) * Q * P;
    Rat a = R(0, 0), b = R(0, 1), c = R(1, 1);
    if (a > c) {
      P = P * gl2::C();
      continue;
    }
    if (abs(2 * b) > a) {
      Int m = floor_rat(b / a + Rat(1, 2));
      P = P * Mat::from_rows({{1, Rat(-m)}, {0, 1}});
      continue;
    }
    break;
  }
  AffineIso phi = AffineIso::linear(inverse(P));
  std::vector<AffineIso> out;
  for (auto& x : xs) out.push_back(phi * x * inverse(phi));
  return out;
}

// Is there g in Aff(M) with g x_i g^-1 = y_i for all i?  With collapse, the
// last y may additionally be moved by a translation in the common -1
// eigenspace of the linear parts (torus only).
inline bool conjugate_tuples(FiberKind f, const std::vector<AffineIso>& x, const std::vector<AffineIso>& y, bool collapse) {
  std::size_t r = x.size();
  std::vector<I4> xa, ya;
  for (std::size_t i = 0; i < r; ++i) {
    xa.push_back(to_i4(x[i].A));
    ya.push_back(to_i4(y[i].A));
  }
  Subspace E = minus_one_intersection(y);
  std::vector<Vec> Eb = (collapse && f == FiberKind::Torus) ? E.vectors() : std::vector<Vec>{};
  const Rat h(1, 2);
  for (const I4& G : small_gl2z(2)) {
    // G X = Y G, or -Y G on the pillow
    std::vector<int> sign(r, 1);
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i) {
      I4 l = mul(G, xa[i]), rr = mul(ya[i], G);
      if (l == rr) continue;
      if (f == FiberKind::Pillow && l == neg(rr)) {
        sign[i] = -1;
        continue;
      }
      ok = false;
    }
    if (!ok) continue;
    Mat Gm = from_i4(G);
    if (f == FiberKind::Pillow) {
      for (int cx = 0; cx < 2; ++cx)
        for (int cy = 0; cy < 2; ++cy) {
          AffineIso g({Rat(cx) * h, Rat(cy) * h}, Gm);
          AffineIso gi = inverse(g);
          bool all = true;
          for (std::size_t i = 0; i < r && all; ++i) all = same_affinity(f, g * x[i] * gi, y[i]);
          if (all) return true;
        }
      continue;
    }
    // torus: real c and s with (I - Y_i) c (+ E s on the last) = y_i.t - G x_i.t mod Z^2
    int ns = int(Eb.size());
    Mat M(2 * int(r), 2 + ns);
    Vec rhs;
    for (std::size_t i = 0; i < r; ++i) {
      Mat IY = gl2::I() - y[i].A;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) M(2 * int(i) + a, b) = IY(a, b);
      if (i + 1 == r)
        for (int j = 0; j < ns; ++j)
          for (int a = 0; a < 2; ++a) M(2 * int(i) + a, 2 + j) = Eb[j][a];
      Vec d = y[i].t - Gm * x[i].t;
      rhs.insert(rhs.end(), d.begin(), d.end());
    }
    if (solve_affine_mod_lattice(M, rhs, standard_lattice(2 * int(r)))) return true;
  }
  return false;
}

inline bool tuples_equivalent(FiberKind f, const std::vector<AffineIso>& x, const std::vector<AffineIso>& y, bool collapse) {
  return conjugate_tuples(f, reduce_tuple(x), reduce_tuple(y), collapse) ||
         conjugate_tuples(f, x, y, collapse);
}

}  // namespace detail

// Unordered pairs up to simultaneous conjugation in Aff(M); on the torus the
// second member may also move by the common -1 eigenspace.
inline bool pairs_equivalent(FiberKind f, const std::pair<AffineIso, AffineIso>& p, const std::pair<AffineIso, AffineIso>& q) {
  for (int sw = 0; sw < 2; ++sw) {
    std::vector<AffineIso> y = sw ? std::vector<AffineIso>{q.second, q.first} : std::vector<AffineIso>{q.first, q.second};
    for (int sx = 0; sx < 2; ++sx) {
      std::vector<AffineIso> x = sx ? std::vector<AffineIso>{p.second, p.first} : std::vector<AffineIso>{p.first, p.second};
      if (detail::tuples_equivalent(f, x, y, true)) return true;
    }
  }
  return false;
}

// elements up to conjugation and inversion (the cyclic case); on the
// torus only the linear part matters
inline bool cyclic_equivalent(FiberKind f, const AffineIso& g, const AffineIso& h) {
  if (f == FiberKind::Torus) {
    AffineIso a = AffineIso::linear(g.A), b = AffineIso::linear(h.A);
    return detail::tuples_equivalent(f, {a}, {b}, false) || detail::tuples_equivalent(f, {a}, {inverse(b)}, false);
  }
  return detail::tuples_equivalent(f, {g}, {h}, false) || detail::tuples_equivalent(f, {g}, {inverse(h)}, false);
}

// ---- the printed class lists ----

struct PairClass {
  FiberKind fiber;
  DeltaKind kind;
  std::string label;
  std::pair<AffineIso, AffineIso> pair;
  int e_dim = 0;  // dim of the common -1 eigenspace (dihedral, torus)
};

inline const std::vector<std::string>& printed_pair_labels(FiberKind f, DeltaKind d) {
  static const std::vector<std::string> tc{"{idt., idt.}", "{2-rot., 2-rot.}", "{h-ref., h-ref.}", "{d-ref., d-ref.}",
                                           "{3-aff., 3-aff.^-1}", "{4-rot., 4-rot.^-1}", "{6-aff., 6-aff.^-1}"};
  static const std::vector<std::string> td{
      "{idt., idt.}",       "{idt., h-rot}",      "{idt., 2-rot.}",     "{idt., v-ref.}",    "{idt., h-grf.}",
      "{idt., d-ref.}",     "{h-rot., h-rot}",    "{2-rot., 2-rot.}",   "{v-ref., v-ref.}",  "{h-grf., h-grf.}",
      "{d-ref., d-ref.}",   "{h-rot, v-rot.}",    "{h-rot., 2-rot.}",   "{h-rot., v-ref.}",  "{v-rot., v-ref.}",
      "{2-sym., v-ref.}",   "{h-rot., h-grf.}",   "{v-rot., h-grf.}",   "{2-sym., h-grf.′}", "{v-rot., d-ref.}",
      "{2-sym., d-ref.}",   "{2-rot., v-ref.}",   "{2-rot., h-grf.}",   "{2-rot., d-ref.}",  "{v-ref., h-ref.}",
      "{v-ref., h-grf.}",   "{h-ref.', h-grf.}",  "{h-ref., d-ref.}",   "{h-grf.′, v-grf.'}", "{h-grf., d-ref.}",
      "{d-ref., e-ref.}",   "{d-ref., n-aff.}",   "{m-aff., e-ref.}",   "{d-ref., m-aff.}"};
  static const std::vector<std::string> pc{"{idt., idt.}",     "{m-rot., m-rot.}", "{c-ref., c-ref.}",    "{m-ref., m-ref.}",
                                           "{2-sym., 2-sym.}", "{d-ref., d-ref.}", "{d-rot., d-rot.}",    "{3-aff., 3-aff.^-1}",
                                           "{4-rot., 4-rot.^-1}", "{4-sym., 4-sym.^-1}"};
  static const std::vector<std::string> pd{
      "{idt., idt.}",      "{idt., m-rot}",      "{idt., c-ref.}",     "{idt., m-ref.}",     "{idt., 2-sym.}",
      "{idt., d-ref.}",    "{idt., d-rot.}",     "{m-rot., m-rot}",    "{c-ref., c-ref.}",   "{m-ref., m-ref.}",
      "{2-sym., 2-sym.}",  "{d-ref., d-ref.}",   "{d-rot., d-rot.}",   "{c-rot, m-rot.}",    "{c-rot., c-ref.}",
      "{c-rot., m-ref.}",  "{c-rot., 2-sym.}",   "{c-rot., d-ref.}",   "{c-rot., d-rot.}",   "{m-rot., c-ref.}",
      "{m-rot., m-ref.}",  "{m-rot.′, m-ref.}",  "{m-rot.′, 2-sym.}",  "{m-rot., d-ref.}",   "{m-rot., d-rot.}",
      "{c-ref., m-ref.}",  "{c-ref., 2-sym.}",   "{c-ref., d-ref.}",   "{c-ref., d-rot.}",   "{m-ref., m-ref.′}",
      "{m-ref, 2-sym.}",   "{m-ref, d-ref.}",    "{m-ref., d-rot.}",   "{2-sym., d-ref.}",   "{2-sym, d-rot.′}",
      "{d-ref., d-ref.′}", "{d-ref., d-rot.}",   "{d-ref., d-rot.′}",  "{d-rot., d-rot.′}",  "{d-ref., 2-aff.}"};
  if (f == FiberKind::Torus) return d == DeltaKind::Cyclic ? tc : td;
  return d == DeltaKind::Cyclic ? pc : pd;
}

inline std::pair<AffineIso, AffineIso> pair_from_label(FiberKind f, const std::string& label) {
  auto parts = split_pair_label(label);
  if (parts.size() != 2) throw std::invalid_argument("pair label needs two entries: " + label);
  auto a = named_affinity(f, parts[0]), b = named_affinity(f, parts[1]);
  if (!a || !b) throw std::invalid_argument("unknown affinity in " + label);
  return {*a, *b};
}

namespace detail {

inline std::string trace_key(FiberKind f, const Mat& K) {
  Rat tr = K(0, 0) + K(1, 1);
  if (f == FiberKind::Pillow) tr = abs(tr);
  return tr.get_str();
}

// cheap conjugation invariant used to bucket candidates
inline std::string pair_signature(FiberKind f, DeltaKind d, const std::pair<AffineIso, AffineIso>& p) {
  auto elt = [&](const AffineIso& g) {
    return std::to_string(affinity_order(f, g)) + ":" + det(g.A).get_str() + ":" + trace_key(f, g.A) +
           ":" + std::to_string(has_fixed_point(f, g));
  };
  if (d == DeltaKind::Cyclic) return elt(p.first);
  std::string a = elt(p.first), b = elt(p.second);
  if (b < a) std::swap(a, b);
  AffineIso prod = p.first * p.second;
  int Ed = f == FiberKind::Torus ? minus_one_intersection({p.first, p.second}).dim() : 0;
  return a + "|" + b + "|" + std::to_string(outer_order(f, prod.A)) + ":" + trace_key(f, prod.A) + "|" +
         std::to_string(Ed);
}

inline bool class_equivalent(FiberKind f, DeltaKind d, const std::pair<AffineIso, AffineIso>& p, const std::pair<AffineIso, AffineIso>& q) {
  if (pair_signature(f, d, p) != pair_signature(f, d, q)) return false;
  if (d == DeltaKind::Cyclic) return cyclic_equivalent(f, p.first, q.first);
  return pairs_equivalent(f, p, q);
}

// finite-order linear parts with entries in [-1,1]
inline std::vector<Mat> small_linear_parts(FiberKind f, bool involutions_only) {
  std::vector<Mat> out;
  for (const I4& x : small_gl2z(1)) {
    Mat K = from_i4(x);
    int o = outer_order(f, K);
    if (o == 0) continue;
    if (involutions_only && o > 2) continue;
    if (f == FiberKind::Pillow) {
      // one of each +-K
      bool seen = false;
      for (auto& y : out) seen = seen || y == -K;
      if (seen) continue;
    }
    out.push_back(K);
  }
  return out;
}

inline std::vector<AffineIso> candidate_affinities(FiberKind f, bool involutions_only) {
  const Rat h(1, 2);
  std::vector<AffineIso> out;
  for (auto& K : small_linear_parts(f, involutions_only))
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) {
        AffineIso g({Rat(x) * h, Rat(y) * h}, K);
        int o = affinity_order(f, g);
        if (o == 0 || (involutions_only && o > 2)) continue;
        out.push_back(g);
      }
  return out;
}

}  // namespace detail

// Label among the printed list, or nullopt.
inline std::optional<std::string> pair_class_label(FiberKind f, DeltaKind d, const std::pair<AffineIso, AffineIso>& p) {
  for (auto& lab : printed_pair_labels(f, d))
    if (detail::class_equivalent(f, d, p, pair_from_label(f, lab))) return lab;
  return std::nullopt;
}

// Classes found by clustering all candidate normal forms (half-integral
// translations, linear parts with entries in [-1,1]); each cluster is then
// matched to a printed label.
inline std::vector<PairClass> enumerate_pair_classes(FiberKind f, DeltaKind d) {
  std::vector<std::pair<AffineIso, AffineIso>> cands;
  if (d == DeltaKind::Cyclic) {
    for (auto& g : detail::candidate_affinities(f, false)) {
      if (f == FiberKind::Torus && !is_zero(g.t)) continue;
      cands.push_back({g, inverse(g)});
    }
  } else {
    auto el = detail::candidate_affinities(f, true);
    for (std::size_t i = 0; i < el.size(); ++i)
      for (std::size_t j = i; j < el.size(); ++j)
        if (outer_order(f, el[i].A * el[j].A) != 0) cands.push_back({el[i], el[j]});
  }
  std::map<std::string, std::vector<std::size_t>> reps;  // signature -> class indices
  std::vector<PairClass> out;
  for (auto& p : cands) {
    std::string sig = detail::pair_signature(f, d, p);
    bool found = false;
    for (std::size_t c : reps[sig])
      if (detail::class_equivalent(f, d, p, out[c].pair)) {
        found = true;
        break;
      }
    if (found) continue;
    PairClass pc{f, d, "", p, 0};
    if (d == DeltaKind::Dihedral && f == FiberKind::Torus) pc.e_dim = minus_one_intersection({p.first, p.second}).dim();
    reps[sig].push_back(out.size());
    out.push_back(pc);
  }
  for (auto& pc : out) pc.label = pair_class_label(f, d, pc.pair).value_or("unlabeled");
  return out;
}

// Class of a single finite-order affinity of the torus (conjugation only).
inline std::string torus_order2_class(const AffineIso& g) {
  static const std::vector<std::string> names{"idt",   "h-rot", "2-rot", "v-ref", "h-grf", "d-ref",
                                              "3-aff", "4-rot", "6-aff"};
  if (!normalizes_model(FiberKind::Torus, g)) throw ClassError("not an affinity of the torus");
  if (affinity_order(FiberKind::Torus, g) == 0 && outer_order(FiberKind::Torus, g.A) == 0) throw ClassError("infinite order");
  for (auto& n : names) {
    auto r = *named_affinity(FiberKind::Torus, n);
    if (outer_order(FiberKind::Torus, g.A) > 2) {
      // order > 2: the translation part is conjugated away
      if (detail::tuples_equivalent(FiberKind::Torus, {AffineIso::linear(g.A)}, {r}, false) ||
          detail::tuples_equivalent(FiberKind::Torus, {AffineIso::linear(g.A)}, {inverse(r)}, false))
        return n;
      continue;
    }
    if (detail::tuples_equivalent(FiberKind::Torus, {g}, {r}, false)) return n;
  }
  throw ClassError("affinity of order > 2 with nontrivial translation class");
}

inline std::string torus_pair_class(const AffineIso& k, const AffineIso& l) {
  if (outer_order(FiberKind::Torus, k.A * l.A) == 0) throw ClassError("infinite-order product");
  auto lab = pair_class_label(FiberKind::Torus, DeltaKind::Dihedral, {k, l});
  if (!lab) throw ClassError("pair not of order <= 2");
  return *lab;
}

inline std::string pillow_pair_class(const AffineIso& k, const AffineIso& l) {
  if (outer_order(FiberKind::Pillow, k.A * l.A) == 0) throw ClassError("infinite-order product");
  auto lab = pair_class_label(FiberKind::Pillow, DeltaKind::Dihedral, {k, l});
  if (!lab) throw ClassError("pair not of order <= 2");
  return *lab;
}

// ---- extensions ----

struct Extension {
  SpaceGroup group;
  std::vector<AffineIso> normal;  // M placed in the first n-1 coordinates
};

inline AffineIso extend(const AffineIso& g, const Rat& w, const Rat& s) {
  int k = g.dim();
  Vec t = g.t;
  t.push_back(w);
  Mat A(k + 1, k + 1);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) A(i, j) = g.A(i, j);
  A(k, k) = s;
  return {t, A};
}

// The group generated by M and a lift of the given fiber affinities: one
// affinity combined with a unit translation (cyclic) or two combined with the
// reflections of the line in 0 and 1/2 (dihedral).
inline Extension build_extension(const SpaceGroup& M, DeltaKind kind, const std::vector<AffineIso>& affs) {
  if (kind == DeltaKind::Cyclic && affs.size() != 1) throw std::invalid_argument("cyclic extension needs one affinity");
  if (kind == DeltaKind::Dihedral && affs.size() != 2) throw std::invalid_argument("dihedral extension needs two affinities");
  for (auto& g : affs) {
    AffineIso gi = inverse(g);
    for (auto& m : standard_generators(M))
      if (!M.contains(g * m * gi) || !M.contains(gi * m * g)) throw PreconditionError("affinity does not normalize the fiber group");
    if (kind == DeltaKind::Dihedral && !M.contains(g * g)) throw PreconditionError("affinity does not have order <= 2");
  }
  Extension E;
  for (auto& m : standard_generators(M)) E.normal.push_back(extend(m, 0, 1));
  std::vector<AffineIso> gens = E.normal;
  if (kind == DeltaKind::Cyclic) {
    gens.push_back(extend(affs[0], 1, 1));
  } else {
    gens.push_back(extend(affs[0], 0, -1));
    gens.push_back(extend(affs[1], Rat(1, 2), -1));
  }
  E.group = build(M.n + 1, gens);
  return E;
}

// ---- classifying pairs ----

struct ClassifyingPair {
  DeltaKind kind = DeltaKind::Cyclic;
  OrbType fiber;
  std::vector<AffineIso> pair;  // fiber affinities in standard coordinates of the fiber group
  Subspace e_intersection;      // common -1 eigenspace inside Span(Z(M))
  std::optional<std::string> label;
  int e_dim() const { return e_intersection.dim(); }
};

namespace detail {

// element of G whose V-perp part is exactly the affine map x -> s x + w on the line
inline std::optional<AffineIso> element_with_base(const NormalAnalysis& A, const Rat& s, const Rat& w) {
  const SpaceGroup& G = A.parent;
  std::vector<Vec> L = G.lattice.rows();
  Mat row(1, int(L.size()));
  for (std::size_t j = 0; j < L.size(); ++j) row(0, int(j)) = A.dec.w_coords(L[j])[0];
  for (auto& B : G.point_group) {
    AffineIso r = G.rep(B);
    auto wr = action_on_base(A, r);
    if (wr.A(0, 0) != s) continue;
    auto z = solve_integer(row, {w - wr.t[0]});
    if (!z) continue;
    Vec l = zero_vec(G.n);
    for (std::size_t j = 0; j < L.size(); ++j) l = l + Rat((*z)[j]) * L[j];
    return AffineIso::translation(l) * r;
  }
  return std::nullopt;
}

}  // namespace detail

inline ClassifyingPair classifying_pair(const NormalAnalysis& A) {
  if (A.m() != 1 || !A.complete) throw PreconditionError("needs a complete normal subgroup of codimension 1");
  if (A.k() != 2) throw PreconditionError("fiber dimension must be 2");
  ClassifyingPair cp;
  SpaceGroup F = detail::fiber_group(A);
  cp.fiber = orbifold_type(F);
  // put the fiber group in standard position: lattice Z^2 already, move a
  // rotation centre of -I to the origin
  AffineIso alpha = AffineIso::identity(2);
  Mat mI = -gl2::I();
  if (F.has_linear(mI)) alpha = AffineIso::translation(Rat(-1, 2) * F.vector_system.at(mI));
  AffineIso ainv = inverse(alpha);
  SpaceGroup Q = restricted_group(A, A.parent.generators, false);
  Rat lambda = Q.lattice.row(0)[0];
  auto fiber_of = [&](const AffineIso& g) { return alpha * action_on_fiber(A, g) * ainv; };
  if (one_orb_type(Q) == 'O') {
    cp.kind = DeltaKind::Cyclic;
    auto d = detail::element_with_base(A, 1, lambda);
    if (!d) throw std::logic_error("no generator of G/N found");
    AffineIso g = fiber_of(*d);
    cp.pair = {g, inverse(g)};
  } else {
    cp.kind = DeltaKind::Dihedral;
    Rat s = Q.vector_system.at(-Mat::identity(1))[0];
    auto g1 = detail::element_with_base(A, -1, s), g2 = detail::element_with_base(A, -1, s + lambda);
    if (!g1 || !g2) throw std::logic_error("no Coxeter generators of G/N found");
    cp.pair = {fiber_of(*g1), fiber_of(*g2)};
  }
  Subspace Z = center_span(F);
  if (cp.kind == DeltaKind::Dihedral) {
    Mat stacked(0, 2);
    for (auto& g : cp.pair) stacked = vstack(stacked, g.A + gl2::I());
    for (auto& v : Subspace::span(2, kernel_basis(transpose(rows_to_mat(Z.vectors(), 2)))).vectors()) {
      Mat r(1, 2);
      r(0, 0) = v[0];
      r(0, 1) = v[1];
      stacked = vstack(stacked, r);
    }
    if (Z.dim() == 0) stacked = vstack(stacked, gl2::I());
    cp.e_intersection = Subspace::span(2, kernel_basis(stacked));
  } else {
    cp.e_intersection = Subspace::span(2, {});
  }
  std::optional<FiberKind> fk;
  if (cp.fiber.it == 1) fk = FiberKind::Torus;
  if (cp.fiber.it == 2) fk = FiberKind::Pillow;
  if (fk) cp.label = pair_class_label(*fk, cp.kind, {cp.pair[0], cp.pair[1]});
  return cp;
}

// Topological description of E^n/G over the base: a mapping torus of the fiber
// affinity (cyclic) or two twisted I-bundles glued along their boundary
// (dihedral).
inline std::string descriptor(const ClassifyingPair& cp) {
  std::string f = cp.fiber.name();
  if (cp.kind == DeltaKind::Cyclic) return "mapping torus of E^2/" + f + " by " + to_string(cp.pair[0]);
  return "union of two twisted I-bundles over E^2/" + f + " with involutions " + to_string(cp.pair[0]) + " and " + to_string(cp.pair[1]);
}

}  // namespace flatfiber
