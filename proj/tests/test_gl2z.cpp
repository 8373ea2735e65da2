#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace flatfiber;
using namespace flatfiber::testkit;

namespace {

std::size_t closure_size(const std::vector<I2>& gens) {
  std::set<I2> seen{{1, 0, 0, 1}};
  std::vector<I2> todo{{1, 0, 0, 1}};
  while (!todo.empty()) {
    I2 x = todo.back();
    todo.pop_back();
    for (auto& g : gens) {
      I2 y = mul2(g, x);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen.size();
}

}  // namespace

TEST(Gl2z, Representatives) {
  for (ConjClass c : {ConjClass::I, ConjClass::MinusI, ConjClass::CA, ConjClass::C, ConjClass::B2, ConjClass::A, ConjClass::B}) {
    Mat R = gl2::representative(c);
    EXPECT_EQ(gl2z_finite_order_class(R), c);
    EXPECT_EQ(matrix_order(R), class_order(c));
    EXPECT_EQ(det(R), class_det(c));
  }
}

TEST(Gl2z, AgreesWithBruteForce) {
  auto all = finite_order_matrices(3);
  EXPECT_EQ(all.size(), 72u);
  for (auto& K : all) {
    auto want = brute_force_class(K);
    ASSERT_TRUE(want.has_value());
    EXPECT_EQ(gl2z_finite_order_class(from_i2(K)), *want) << K[0] << " " << K[1] << " " << K[2] << " " << K[3];
  }
}

TEST(Gl2z, FiniteSubgroupsOfAmalgam) {
  I2 A = to_i2(gl2::A()), B = to_i2(gl2::B()), C = to_i2(gl2::C()), mI{-1, 0, 0, -1};
  EXPECT_EQ(closure_size({A, C}), 8u);
  EXPECT_EQ(closure_size({B, C}), 12u);
  EXPECT_EQ(closure_size({mI, C}), 4u);
}

TEST(Gl2z, Errors) {
  EXPECT_THROW(gl2z_finite_order_class(gl2::mat(2, 0, 0, 1)), ClassError);
  EXPECT_THROW(gl2z_finite_order_class(gl2::mat(1, 1, 0, 1)), ClassError);
  EXPECT_THROW(gl2z_finite_order_class(Mat::from_rows({{Rat(1, 2), 0}, {0, 2}})), ClassError);
}
