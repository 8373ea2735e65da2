// Orbifold types of fibers, bases and quotients, and invariants of the
// structure group action.
#pragma once

#include "flatfiber/gl2z.hpp"
#include "flatfiber/normal.hpp"

namespace flatfiber {

struct WallpaperType {
  int it = 0;
  std::string conway;
  std::string hm;
};

inline const std::vector<WallpaperType>& wallpaper_table() {
  static const std::vector<WallpaperType> t{
      {1, "∘", "p1"},      {2, "2222", "p2"},    {3, "∗∗", "pm"},     {4, "××", "pg"},     {5, "∗×", "cm"},    {6, "∗2222", "pmm"},
      {7, "22∗", "pmg"},   {8, "22×", "pgg"},    {9, "2∗22", "cmm"},  {10, "442", "p4"},   {11, "∗442", "p4m"}, {12, "4∗2", "p4g"},
      {13, "333", "p3"},   {14, "∗333", "p3m1"}, {15, "3∗3", "p31m"}, {16, "632", "p6"},   {17, "∗632", "p6m"},
  };
  return t;
}

inline WallpaperType wallpaper_by_it(int it) { return wallpaper_table().at(it - 1); }

// Accepts Conway names (UTF-8 or with ASCII '*', 'o', 'x') and HM names.
inline std::optional<WallpaperType> wallpaper_by_name(std::string s) {
  auto rep = [](std::string x, const std::string& from, const std::string& to) {
    for (std::size_t p; (p = x.find(from)) != std::string::npos;) x.replace(p, from.size(), to);
    return x;
  };
  std::string u = rep(rep(rep(s, "*", "∗"), "x", "×"), "o", "∘");
  for (auto& w : wallpaper_table())
    if (w.conway == s || w.conway == u || w.hm == s) return w;
  return std::nullopt;
}

// Orbifold type of E^d / H for d <= 2.
struct OrbType {
  int dim = 0;
  char one = 0;  // 'O' or 'I' when dim == 1
  int it = 0;    // wallpaper number when dim == 2
  std::string name() const {
    if (dim == 0) return "pt";
    if (dim == 1) return std::string(1, one);
    return wallpaper_by_it(it).conway;
  }
  friend bool operator==(const OrbType& a, const OrbType& b) { return a.dim == b.dim && a.one == b.one && a.it == b.it; }
};

inline char one_orb_type(const SpaceGroup& H) {
  if (H.n != 1 || H.lattice.rank() != 1) throw GroupError("non-cocompact line action");
  for (auto& B : H.point_group)
    if (B(0, 0) == -1) return 'I';
  return 'O';
}

inline bool has_mirror(const SpaceGroup& H, const Mat& B) {
  return solve_affine_mod_lattice(Mat::identity(H.n) - B, H.vector_system.at(B), H.lattice).has_value();
}

inline SpaceGroup to_lattice_coordinates(const SpaceGroup& H) {
  Mat P = cols_to_mat(H.lattice.rows(), H.n);
  return conjugate(H, AffineIso::linear(inverse(P)));
}

namespace detail {
// every center of the rotation R lies on a mirror of H (lattice Z^2)
inline bool rotation_centers_on_mirrors(const SpaceGroup& H, const Mat& R) {
  Mat IR = gl2::I() - R;
  Lattice Z2 = standard_lattice(2);
  auto x0 = solve_affine_mod_lattice(IR, H.vector_system.at(R), Z2);
  if (!x0) return false;
  Mat IRinv = inverse(IR);
  std::vector<Vec> centers;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      Vec x = reduce_mod(Z2, *x0 + IRinv * Vec{a, b});
      bool seen = false;
      for (auto& c : centers) seen = seen || c == x;
      if (!seen) centers.push_back(x);
    }
  for (auto& x : centers) {
    bool on = false;
    for (auto& B : H.point_group) {
      if (det(B) != -1) continue;
      if (lattice_member(Z2, (gl2::I() - B) * x - H.vector_system.at(B))) on = true;
    }
    if (!on) return false;
  }
  return true;
}
}  // namespace detail

inline WallpaperType wallpaper_type(const SpaceGroup& H0) {
  if (H0.n != 2 || !H0.cocompact()) throw GroupError("non-cocompact input");
  SpaceGroup H = to_lattice_coordinates(H0);
  std::vector<Mat> refl;
  bool all_plus = true;
  for (auto& B : H.point_group)
    if (det(B) == -1) {
      refl.push_back(B);
      all_plus = false;
    }
  auto ca_class = [](const Mat& R) { return reflection_index(R) == 1; };
  int o = H.order();
  switch (o) {
    case 1: return wallpaper_by_it(1);
    case 2:
      if (all_plus) return wallpaper_by_it(2);
      if (!ca_class(refl[0])) return wallpaper_by_it(5);
      return wallpaper_by_it(has_mirror(H, refl[0]) ? 3 : 4);
    case 3: return wallpaper_by_it(13);
    case 4: {
      if (all_plus) return wallpaper_by_it(10);
      if (!ca_class(refl[0])) return wallpaper_by_it(9);
      int mirrors = int(has_mirror(H, refl[0])) + int(has_mirror(H, refl[1]));
      return wallpaper_by_it(mirrors == 2 ? 6 : mirrors == 1 ? 7 : 8);
    }
    case 6: {
      if (all_plus) return wallpaper_by_it(16);
      Mat R;
      for (auto& B : H.point_group)
        if (matrix_order(B) == 3) R = B;
      return wallpaper_by_it(detail::rotation_centers_on_mirrors(H, R) ? 14 : 15);
    }
    case 8:
      for (auto& B : refl)
        if (ca_class(B)) return wallpaper_by_it(has_mirror(H, B) ? 11 : 12);
      break;
    case 12: return wallpaper_by_it(17);
  }
  throw GroupError("unrecognized plane group");
}

inline OrbType orbifold_type(const SpaceGroup& H) {
  OrbType t;
  t.dim = H.n;
  if (H.n == 1) t.one = one_orb_type(H);
  if (H.n == 2) t.it = wallpaper_type(H).it;
  if (H.n > 2) throw PreconditionError("orbifold types only for dimension <= 2");
  return t;
}

// Invariants of the map induced by g on E^d / H.
struct MapInvariant {
  bool identity = false;
  int fixdim = -1;  // largest dimension of a fixed component, -1 if none
  bool orientation = true;
  bool circle = false;  // H is infinite cyclic on a line
  Rat turn = 0;         // rotation amount when circle and orientation preserving
  std::set<int> lift_fixdims;  // fixed dimensions of the lifts that have fixed points

  std::string label() const {
    if (identity) return "idt";
    if (circle) return orientation ? "rot " + turn.get_str() : "ref";
    if (fixdim < 0) return orientation ? "free+" : "free-";
    return std::string(orientation ? "fix+" : "fix-") + std::to_string(fixdim);
  }
  // coarse form used when comparing against table labels
  std::string coarse() const {
    if (identity) return "idt";
    if (circle && orientation) {
      Rat q = turn;
      return "rot" + q.get_den().get_str();
    }
    if (fixdim < 0) return "free";
    return "fix" + std::to_string(fixdim);
  }
};

// Does the invariant fit a coarse label (idt, free, fix<d>, rot<k>)?  A
// fix<d> label needs some lift with a fixed set of dimension d.
inline bool fits_coarse(const MapInvariant& mi, const std::string& want) {
  if (want == "idt" || mi.identity) return mi.coarse() == want;
  if (want.rfind("fix", 0) == 0 && !mi.circle) return mi.lift_fixdims.count(std::stoi(want.substr(3))) > 0;
  return mi.coarse() == want;
}

inline MapInvariant map_invariant(const SpaceGroup& H, const AffineIso& g) {
  MapInvariant mi;
  int d = H.n;
  mi.identity = H.contains(g);
  mi.orientation = det(g.A) > 0;
  Mat I = Mat::identity(d);
  for (auto& D : H.point_group) {
    Mat M = D * g.A;
    Vec c = H.vector_system.at(D) + D * g.t;
    if (!solve_affine_mod_lattice(I - M, c, H.lattice)) continue;
    int fd = d - rank(I - M);
    mi.lift_fixdims.insert(fd);
    if (fd > mi.fixdim) {
      mi.fixdim = fd;
      mi.orientation = det(M) > 0;
    }
  }
  if (d == 1 && one_orb_type(H) == 'O') {
    mi.circle = true;
    mi.orientation = g.A(0, 0) == 1;
    if (mi.orientation) mi.turn = frac(g.t[0] / H.lattice.row(0)[0]);
  }
  if (d == 1 && one_orb_type(H) == 'I' && !mi.identity) mi.orientation = false;
  if (mi.identity) {
    mi.fixdim = d;
    mi.orientation = true;
  }
  return mi;
}

// base action on a circle given by a K-lattice generator
inline MapInvariant classify_circle_action(const AffineIso& g, const Rat& lambda) {
  SpaceGroup H = build(1, {AffineIso::translation({lambda})});
  return map_invariant(H, g);
}

struct ActionInvariant {
  int index = 0;  // structure-group element
  int order = 1;
  MapInvariant fiber, base;
};

struct FibrationReport {
  OrbType fiber, base, quotient_fiber, quotient_base;
  StructureGroup structure;
  std::vector<int> generators;          // structure-group generating set
  std::vector<ActionInvariant> actions;  // one per structure-group element, identity first
  SpaceGroup fiber_group, base_group, quotient_fiber_group, quotient_base_group;
};

inline ActionInvariant action_invariant(const NormalAnalysis& A, const FibrationReport& R, int i) {
  ActionInvariant ai;
  ai.index = i;
  ai.order = A.structure.element_order(i);
  auto [v, w] = restrict(A.structure.reps[i], A.dec);
  if (A.k() > 2 || A.m() > 2) throw PreconditionError("fiber dimension > 2 unsupported");
  ai.fiber = A.k() ? map_invariant(R.fiber_group, v) : MapInvariant{true, 0, true, false, 0};
  ai.base = A.m() ? map_invariant(R.base_group, w) : MapInvariant{true, 0, true, false, 0};
  return ai;
}

inline ActionInvariant fiber_action_invariant(const NormalAnalysis& A, const FibrationReport& R, int i) { return action_invariant(A, R, i); }

inline FibrationReport fibration_report(const NormalAnalysis& A) {
  if (!A.dual_exists) throw PreconditionError("orthogonal dual does not exist");
  if (A.k() > 2 || A.m() > 2) throw PreconditionError("fiber dimension > 2 unsupported");
  FibrationReport R;
  R.fiber_group = restricted_group(A, standard_generators(A.completion), true);
  R.base_group = restricted_group(A, standard_generators(A.K), false);
  R.quotient_fiber_group = restricted_group(A, A.parent.generators, true);
  R.quotient_base_group = restricted_group(A, A.parent.generators, false);
  R.fiber = orbifold_type(R.fiber_group);
  R.base = orbifold_type(R.base_group);
  R.quotient_fiber = orbifold_type(R.quotient_fiber_group);
  R.quotient_base = orbifold_type(R.quotient_base_group);
  R.structure = A.structure;
  R.generators = A.structure.generating_set();
  for (int i = 0; i < A.structure.order; ++i) R.actions.push_back(action_invariant(A, R, i));
  return R;
}

}  // namespace flatfiber
