// Finite-order elements of GL(2,Z) up to conjugacy.
#pragma once

#include "flatfiber/isometry.hpp"

namespace flatfiber {

enum class ConjClass { I, MinusI, CA, C, B2, A, B };

inline std::string class_name(ConjClass c) {
  switch (c) {
    case ConjClass::I: return "I";
    case ConjClass::MinusI: return "-I";
    case ConjClass::CA: return "CA";
    case ConjClass::C: return "C";
    case ConjClass::B2: return "B^2";
    case ConjClass::A: return "A";
    case ConjClass::B: return "B";
  }
  return "?";
}

inline int class_order(ConjClass c) {
  switch (c) {
    case ConjClass::I: return 1;
    case ConjClass::B2: return 3;
    case ConjClass::A: return 4;
    case ConjClass::B: return 6;
    default: return 2;
  }
}

inline int class_det(ConjClass c) { return (c == ConjClass::CA || c == ConjClass::C) ? -1 : 1; }

namespace gl2 {
inline Mat mat(int a, int b, int c, int d) { return Mat::from_rows({{a, b}, {c, d}}); }
inline Mat I() { return Mat::identity(2); }
inline Mat A() { return mat(0, -1, 1, 0); }
inline Mat B() { return mat(0, -1, 1, 1); }
inline Mat C() { return mat(0, 1, 1, 0); }
inline Mat CA() { return C() * A(); }  // diag(1,-1)
inline Mat AC() { return A() * C(); }  // diag(-1,1)

inline Mat representative(ConjClass c) {
  switch (c) {
    case ConjClass::I: return I();
    case ConjClass::MinusI: return -I();
    case ConjClass::CA: return CA();
    case ConjClass::C: return C();
    case ConjClass::B2: return B() * B();
    case ConjClass::A: return A();
    case ConjClass::B: return B();
  }
  return I();
}
}  // namespace gl2

struct ClassError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// index of L+ (+) L- in Z^2 for an integral reflection R
inline Int reflection_index(const Mat& R) {
  Lattice Z2 = standard_lattice(2);
  Lattice Lp = lattice_in_subspace(Z2, kernel_basis(R - gl2::I()));
  Lattice Lm = lattice_in_subspace(Z2, kernel_basis(R + gl2::I()));
  if (Lp.rank() != 1 || Lm.rank() != 1) throw ClassError("not a reflection");
  Mat m = rows_to_mat({Lp.row(0), Lm.row(0)}, 2);
  return Rat(abs(det(m))).get_num();
}

inline ConjClass gl2z_finite_order_class(const Mat& K) {
  if (K.r != 2 || K.c != 2 || !is_integral(K)) throw ClassError("not an integral 2x2 matrix");
  Rat d = det(K);
  if (d != 1 && d != -1) throw ClassError("not unimodular");
  int o = matrix_order(K, 6);
  switch (o) {
    case 1: return ConjClass::I;
    case 2:
      if (d == 1) return ConjClass::MinusI;
      return reflection_index(K) == 1 ? ConjClass::CA : ConjClass::C;
    case 3: return ConjClass::B2;
    case 4: return ConjClass::A;
    case 6: return ConjClass::B;
    default: throw ClassError("infinite order");
  }
}

}  // namespace flatfiber
