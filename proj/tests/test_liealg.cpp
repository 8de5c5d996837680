#include <gtest/gtest.h>

#include "symact/expm.hpp"
#include "symact/liealg.hpp"

namespace symact {
namespace {

TEST(Tolerance, RejectsInvalidOrdering) {
  EXPECT_THROW(Tolerance(1e-10, 1e-8), std::invalid_argument);
  EXPECT_THROW(Tolerance(2.0, 1e-10), std::invalid_argument);
  EXPECT_NO_THROW(Tolerance(1e-8, 1e-10));
}

TEST(Rng, DeterministicAndSplitIndependent) {
  Rng a(42), b(42), c(43);
  EXPECT_DOUBLE_EQ(a.gauss(), b.gauss());
  EXPECT_NE(a.gauss(), c.gauss());
  Rng s1 = Rng(42).split(1), s2 = Rng(42).split(2);
  EXPECT_NE(s1.gauss(), s2.gauss());
}

TEST(Flatten, RoundTrip) {
  Rng rng(7);
  const Mat m = rng.gauss_matrix(5);
  EXPECT_NEAR((unflatten(flatten(m), 5, 5) - m).norm(), 0.0, 1e-15);
}

TEST(Rank, DetectsNearDependence) {
  Mat a(4, 3);
  a.setZero();
  a(0, 0) = 1;
  a(1, 1) = 1;
  a.col(2) = a.col(0) + a.col(1);
  a(3, 2) = 1e-12;  // below tolerance
  EXPECT_EQ(rank_of(a), 2);
  EXPECT_EQ(nullspace(a).cols(), 1);
  EXPECT_EQ(orthonormal_cols(a).cols(), 2);
}

TEST(MatrixExp, InverseAndOrthogonality) {
  Rng rng(3);
  for (int t = 0; t < 5; ++t) {
    const Mat raw = rng.gauss_matrix(9);
    const Mat z = 0.5 * (raw - raw.transpose());
    const Mat e = matrix_exp(z);
    EXPECT_LT((e * matrix_exp(Mat(-z)) - Mat::Identity(9, 9)).norm(), 1e-10);
    EXPECT_LT((e * e.transpose() - Mat::Identity(9, 9)).norm(), 1e-10);
  }
}

TEST(MatrixExp, MatchesSeriesOnSmallInput) {
  Mat z(2, 2);
  z << 0, 1e-3, -1e-3, 0;
  const Mat e = matrix_exp(z);
  EXPECT_NEAR(e(0, 0), std::cos(1e-3), 1e-14);
  EXPECT_NEAR(e(0, 1), std::sin(1e-3), 1e-14);
}

class So4Algebra : public ::testing::Test {
 protected:
  So4Algebra() : g(4, basis4(), Tolerance{}) {}
  static std::vector<Mat> basis4() {
    std::vector<Mat> b;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        Mat m = Mat::Zero(4, 4);
        m(i, j) = 1;
        m(j, i) = -1;
        b.push_back(m);
      }
    return b;
  }
  MatrixLieAlgebra g;
};

TEST_F(So4Algebra, ClosureAndInnerProduct) {
  EXPECT_EQ(g.dim(), 6);
  EXPECT_LT(g.closure_residual(), 1e-12);
  // mu is positive definite on the algebra
  Rng rng(1);
  for (int t = 0; t < 5; ++t) {
    Mat x = Mat::Zero(4, 4);
    for (const auto& b : g.basis()) x += rng.gauss() * b;
    if (x.norm() > 1e-8) EXPECT_GT(g.mu(x, x), 0.0);
  }
}

TEST_F(So4Algebra, MuIsAdInvariant) {
  Rng rng(2);
  auto sample = [&] {
    Mat x = Mat::Zero(4, 4);
    for (const auto& b : g.basis()) x += rng.gauss() * b;
    return x;
  };
  for (int t = 0; t < 5; ++t) {
    const Mat x = sample(), y = sample(), z = sample();
    EXPECT_NEAR(g.mu(bracket(x, y), z) + g.mu(y, bracket(x, z)), 0.0, 1e-10);
  }
}

TEST_F(So4Algebra, SubspaceOperations) {
  // so(3) block in so(4)
  std::vector<Mat> fam;
  for (const auto& b : g.basis())
    if (b.row(3).norm() == 0.0) fam.push_back(b);
  AlgebraSubspace s(&g, fam);
  EXPECT_EQ(s.dim(), 3);
  EXPECT_TRUE(s.is_subalgebra());
  AlgebraSubspace c = orthocomplement(s);
  EXPECT_EQ(c.dim(), 3);
  EXPECT_FALSE(c.is_subalgebra());  // the complement of so(3) in so(4) is not closed
  EXPECT_EQ(intersect(s, c).dim(), 0);
  EXPECT_TRUE(AlgebraSubspace::full(&g).contains_subspace(s));
  EXPECT_EQ(AlgebraSubspace::zero(&g).dim(), 0);
}

TEST_F(So4Algebra, CentralizerOfGenericElementIsCartan) {
  Rng rng(5);
  AlgebraSubspace full = AlgebraSubspace::full(&g);
  Mat x = Mat::Zero(4, 4);
  for (const auto& b : g.basis()) x += rng.gauss() * b;
  AlgebraSubspace cent = centralizer_in(full, x);
  EXPECT_EQ(cent.dim(), 2);  // rank of so(4)
  EXPECT_TRUE(is_abelian(cent));
}

TEST_F(So4Algebra, KernelInLinearMap) {
  AlgebraSubspace full = AlgebraSubspace::full(&g);
  // elements killing e0
  Vec e0 = Vec::Zero(4);
  e0(0) = 1;
  AlgebraSubspace stab = kernel_in(full, [&](const Mat& m) { return Vec(m * e0); });
  EXPECT_EQ(stab.dim(), 3);
  EXPECT_TRUE(stab.is_subalgebra());
}

TEST_F(So4Algebra, ContainmentCheckRejectsOutsideElements) {
  Mat sym = Mat::Zero(4, 4);
  sym(0, 0) = 1;
  EXPECT_THROW(AlgebraSubspace(&g, {sym}), std::invalid_argument);
  EXPECT_NO_THROW(AlgebraSubspace(&g, {sym}, false));
}

}  // namespace
}  // namespace symact
