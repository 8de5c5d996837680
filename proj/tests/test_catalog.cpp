#include <gtest/gtest.h>

#include "symact/catalog.hpp"

namespace symact {
namespace {

TEST(Octonions, AlgebraIdentities) {
  const auto& o = octonions();
  Rng rng(11);
  for (int t = 0; t < 10; ++t) {
    const Vec x = rng.gauss_vector(8), y = rng.gauss_vector(8);
    // norm multiplicativity |xy| = |x||y|
    EXPECT_NEAR(o.multiply(x, y).norm(), x.norm() * y.norm(), 1e-10);
    // alternativity x(xy) = (xx)y
    EXPECT_NEAR((o.multiply(x, o.multiply(x, y)) - o.multiply(o.multiply(x, x), y)).norm(), 0.0,
                1e-10);
  }
  // unit element
  Vec e0 = Vec::Zero(8);
  e0(0) = 1;
  const Vec x = rng.gauss_vector(8);
  EXPECT_NEAR((o.multiply(e0, x) - x).norm(), 0.0, 1e-12);
  // non-associativity is real: (e1 e2) e3 != e1 (e2 e3); the units must not
  // all lie in one quaternion subalgebra, so avoid the structure triples
  Vec e1 = Vec::Zero(8), e2 = Vec::Zero(8), e3 = Vec::Zero(8);
  e1(1) = e2(2) = e3(3) = 1;
  EXPECT_GT((o.multiply(o.multiply(e1, e2), e3) - o.multiply(e1, o.multiply(e2, e3))).norm(), 1.0);
}

TEST(ClassicalBases, DimensionsAndClosure) {
  struct Case {
    std::string family;
    int n, dim, ambient;
  };
  for (const auto& c : std::vector<Case>{{"so", 5, 10, 5},
                                         {"so", 8, 28, 8},
                                         {"su", 3, 8, 6},
                                         {"u", 3, 9, 6},
                                         {"sp", 2, 10, 8}}) {
    auto g = build_classical(c.family, c.n);
    EXPECT_EQ(g->dim(), c.dim) << c.family << c.n;
    EXPECT_EQ(g->dim(), classical_dim(c.family, c.n));
    EXPECT_EQ(g->ambient_size(), c.ambient);
    EXPECT_LT(g->closure_residual(), 1e-10) << c.family << c.n;
    for (const auto& b : g->basis())
      EXPECT_NEAR((b + b.transpose()).norm(), 0.0, 1e-12) << "not skew";
  }
  EXPECT_THROW(build_classical("e8", 8), std::invalid_argument);
}

TEST(ExceptionalBases, G2Spin7Spin9) {
  EXPECT_EQ(numerical_rank(g2_basis()), 14);
  EXPECT_EQ(numerical_rank(spin7_basis()), 21);
  EXPECT_EQ(numerical_rank(spin9_basis()), 36);
}

TEST(Spin9, PinRelationsAndVectorPairing) {
  const auto ps = spin9_pins();
  ASSERT_EQ(ps.size(), 9u);
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j) {
      const Mat anti = ps[i] * ps[j] + ps[j] * ps[i];
      const Mat want = i == j ? Mat(2.0 * Mat::Identity(16, 16)) : Mat(Mat::Zero(16, 16));
      EXPECT_NEAR((anti - want).norm(), 0.0, 1e-12) << i << "," << j;
      EXPECT_NEAR((ps[i] - ps[i].transpose()).norm(), 0.0, 1e-12);
    }
  // [sigma_ij, P_k] = delta_jk P_i - delta_ik P_j matches the so(9) partner
  const auto spin = spin9_basis();
  const auto vec = spin9_vector_partners();
  ASSERT_EQ(spin.size(), vec.size());
  for (std::size_t a = 0; a < spin.size(); ++a)
    for (int k = 0; k < 9; ++k) {
      Mat want = Mat::Zero(16, 16);
      for (int i = 0; i < 9; ++i) want += vec[a](i, k) * ps[static_cast<std::size_t>(i)];
      EXPECT_NEAR((bracket(spin[a], ps[static_cast<std::size_t>(k)]) - want).norm(), 0.0, 1e-10);
    }
}

TEST(Triality, BracketHomomorphismAndUniqueness) {
  Rng rng(21);
  const auto so8 = so_basis(8);
  auto sample = [&] {
    Mat x = Mat::Zero(8, 8);
    for (const auto& b : so8) x += rng.gauss() * b;
    return x;
  };
  const Mat x = sample(), y = sample();
  auto [bx, cx] = triality_images(x);
  auto [by, cy] = triality_images(y);
  auto [bb, cb] = triality_images(bracket(x, y));
  EXPECT_NEAR((bb - bracket(bx, by)).norm(), 0.0, 1e-9);
  EXPECT_NEAR((cb - bracket(cx, cy)).norm(), 0.0, 1e-9);
  // linearity (uniqueness of the solution): images of x+y = sum of images
  auto [bs, cs] = triality_images(Mat(x + y));
  EXPECT_NEAR((bs - bx - by).norm(), 0.0, 1e-9);
  EXPECT_NEAR((cs - cx - cy).norm(), 0.0, 1e-9);
  // a symmetric matrix is not in so(8) and has no triality images
  Mat sym = Mat::Zero(8, 8);
  sym(0, 0) = 1;
  EXPECT_THROW(triality_images(sym), std::runtime_error);
}

TEST(Involutions, FixedSetDimensions) {
  struct Case {
    std::string family;
    int a, b;
    std::string algebra_family;
    int n, fixed_dim;
  };
  const std::vector<Case> cases = {
      {"AI", 4, 0, "su", 4, 6},     // so(4)
      {"AII", 2, 0, "su", 4, 10},   // sp(2)
      {"AIII", 3, 1, "su", 4, 9},   // s(u(3) x u(1))
      {"BDI", 1, 7, "so", 8, 21},   // so(7)
      {"DIII", 4, 0, "so", 8, 16},  // u(4)
      {"CI", 2, 0, "sp", 2, 4},     // u(2)
      {"CII", 1, 1, "sp", 2, 6},    // sp(1) x sp(1)
  };
  for (const auto& c : cases) {
    auto g = build_classical(c.algebra_family, c.n);
    const Involution inv = build_involution(c.family, c.a, c.b);
    AlgebraSubspace fix = fixed_subspace(g.get(), inv);
    EXPECT_EQ(fix.dim(), c.fixed_dim) << inv.name;
    EXPECT_TRUE(fix.is_subalgebra()) << inv.name;
    EXPECT_EQ(fix.dim() + minus_subspace(g.get(), inv).dim(), g->dim()) << inv.name;
  }
  EXPECT_THROW(build_involution("XX", 1), std::invalid_argument);
}

TEST(Involutions, ComplexConjugationIsOuterAutomorphism) {
  auto su3 = build_classical("su", 3);
  const Involution conj = complex_conjugation(3);
  Rng rng(9);
  Mat x = Mat::Zero(6, 6), y = Mat::Zero(6, 6);
  for (const auto& b : su3->basis()) {
    x += rng.gauss() * b;
    y += rng.gauss() * b;
    EXPECT_TRUE(su3->contains(conj.apply(b)));
  }
  EXPECT_NEAR((conj.apply(bracket(x, y)) - bracket(conj.apply(x), conj.apply(y))).norm(), 0.0,
              1e-10);
  // fixed set is so(3), not a symmetric-pair subalgebra of full rank
  EXPECT_EQ(fixed_subspace(su3.get(), conj).dim(), 3);
}

TEST(Embeddings, CatalogEntriesAreClosedSubalgebras) {
  struct Expected {
    std::string name;
    int dim;
  };
  const std::vector<Expected> expect = {
      {"u4_in_so8", 16},     {"su4_in_so8", 15},     {"sp2sp1_in_so8", 13},
      {"sp2u1_in_so8", 11},  {"sp2_in_so8", 10},     {"so3xso5_in_so8", 13},
      {"g2_in_so7", 14},     {"spin7_in_so8", 21},   {"spin9_in_so16", 36},
      {"su3_in_g2", 8},      {"so4_in_g2", 6},
  };
  const auto names = embedding_catalog_names();
  ASSERT_EQ(names.size(), expect.size());
  for (const auto& e : expect) {
    const EmbeddingSpec spec = build_embedding(e.name);
    EXPECT_EQ(spec.image.dim(), e.dim) << e.name;
    EXPECT_TRUE(spec.image.is_subalgebra()) << e.name;
    EXPECT_TRUE(std::find(names.begin(), names.end(), e.name) != names.end());
  }
  EXPECT_THROW(embedding_family("f4_in_so26"), std::invalid_argument);
}

TEST(Embeddings, MarqueeIntersections) {
  auto so8 = build_classical("so", 8);
  AlgebraSubspace spin7(so8.get(), spin7_basis());
  AlgebraSubspace so7(so8.get(), so_block_basis(8, 0, 7));
  EXPECT_EQ(intersect(spin7, so7).dim(), 14);  // a g2

  auto so7amb = build_classical("so", 7);
  AlgebraSubspace g2(so7amb.get(), g2_basis());
  AlgebraSubspace so6(so7amb.get(), so_block_basis(7, 0, 6));
  EXPECT_EQ(intersect(g2, so6).dim(), 8);  // an su(3)

  auto so16 = build_classical("so", 16);
  AlgebraSubspace spin9(so16.get(), spin9_basis());
  AlgebraSubspace so15(so16.get(), so_block_basis(16, 0, 15));
  EXPECT_EQ(intersect(spin9, so15).dim(), 21);  // a spin(7)
}

}  // namespace
}  // namespace symact
