#include <gtest/gtest.h>

#include "symact/analyze.hpp"

namespace symact {
namespace {

ActionModel sphere_isotropy_action() {
  auto so5 = build_classical("so", 5);
  return build_hermann(so5, build_involution("BDI", 1, 4), build_involution("BDI", 1, 4),
                       "so4-on-s4");
}

TEST(MakeAction, RejectsNonSubalgebraGenerators) {
  auto so5 = build_classical("so", 5);
  SpacePtr space = make_space({SpaceFactor::type1(so5, build_involution("BDI", 1, 4))});
  // two generators whose bracket escapes their span
  std::vector<Mat> gens = {space->embed(0, 0, so_basis(5)[0]), space->embed(0, 0, so_basis(5)[1])};
  EXPECT_THROW(make_action(space, gens, "bad"), std::invalid_argument);
  EXPECT_NO_THROW(make_action(space, {space->embed(0, 0, so_basis(5)[0])}, "ok"));
}

TEST(RestrictAction, ChecksContainment) {
  ActionModel a = sphere_isotropy_action();
  // restrict so(4) to an so(3) sub-block
  std::vector<Mat> sub;
  for (const auto& b : so_block_basis(5, 1, 3)) sub.push_back(a.space->embed(0, 0, b));
  ActionModel r = restrict_action(a, sub, "so3-on-s4");
  EXPECT_EQ(r.dim_h(), 3);
  // an escape: p-directions are not in h
  std::vector<Mat> out = {a.space->embed(0, 0, so_basis(5)[0])};
  EXPECT_THROW(restrict_action(a, out, "escape"), std::invalid_argument);
}

TEST(ProjectionAndIntersection, SpinNinePartialIsotropies) {
  ActionModel a = build_spin9_sphere_action();
  EXPECT_EQ(a.dim_h(), 36);
  // stabilizer of the base point of S^8 is a spin(8)
  AlgebraSubspace iso0 = partial_isotropy(a, {0}, a.space->base_point());
  EXPECT_EQ(iso0.dim(), 28);
  // stabilizer of a point of S^15 is a spin(7)
  AlgebraSubspace iso1 = partial_isotropy(a, {1}, a.space->base_point());
  EXPECT_EQ(iso1.dim(), 21);
  // projections act on single-sphere spaces with the full algebra dimension
  ActionModel p0 = projection_action(a, {0});
  EXPECT_EQ(p0.space->num_factors(), 1);
  EXPECT_EQ(p0.space->dim(), 8);
  EXPECT_EQ(p0.dim_h(), 36);
  ActionModel i1 = intersection_action(a, {0}, a.space->base_point());
  EXPECT_EQ(i1.space->dim(), 15);
  EXPECT_EQ(i1.dim_h(), 28);
}

TEST(ExpandFactor, PreservesGeometryAndAddsIsotropy) {
  ActionModel a = sphere_isotropy_action();
  ActionModel e = expand_factor(a, 0);
  EXPECT_EQ(e.space->factors()[0].kind, SpaceFactor::Kind::TypeII);
  EXPECT_EQ(e.dim_h(), a.dim_h() + 6);  // so(4) appended on the right slot
  EXPECT_EQ(e.space->dim(), 10);
  Rng rng(31);
  EXPECT_EQ(cohomogeneity(e, rng.split(1)), cohomogeneity(a, rng.split(2)));
  EXPECT_THROW(expand_factor(e, 0), std::invalid_argument);  // already TypeII
}

TEST(ReduceFactor, InvertsExpansionAndValidates) {
  ActionModel a = sphere_isotropy_action();
  const Involution theta = build_involution("BDI", 1, 4);
  ActionModel e = expand_factor(a, 0);
  ActionModel r = reduce_factor(e, 0, theta);
  EXPECT_EQ(r.dim_h(), a.dim_h());
  EXPECT_EQ(r.space->dim(), a.space->dim());
  EXPECT_TRUE(r.h.same_span(a.h));
  // reducing with an involution whose fixed set is not inside h must fail
  ActionModel sigma = build_sigma_action(
      build_classical("so", 5), 1, [](const Mat& x) { return x; }, "sigma-so5");
  EXPECT_THROW(reduce_factor(sigma, 0, theta), std::invalid_argument);
  EXPECT_THROW(reduce_factor(a, 0, theta), std::invalid_argument);  // TypeI already
}

TEST(ExpandGroupFactor, DoublesTypeIIFactor) {
  ActionModel sigma = build_sigma_action(
      build_classical("su", 2), 1, [](const Mat& x) { return x; }, "sigma-su2");
  ActionModel e = expand_group_factor(sigma, 0);
  EXPECT_EQ(e.space->num_factors(), 2);
  EXPECT_EQ(e.dim_h(), sigma.dim_h() + 3);  // diagonal of the seam appended
  Rng rng(32);
  EXPECT_EQ(cohomogeneity(e, rng.split(1)), cohomogeneity(sigma, rng.split(2)));
  EXPECT_THROW(expand_group_factor(sphere_isotropy_action(), 0), std::invalid_argument);
}

TEST(FlipFactor, SwapsSlotsWithoutChangingGeometry) {
  ActionModel chain = build_chain_action(build_classical("su", 2), 1, build_involution("AI", 2),
                                         build_involution("AI", 2), "chain-su2");
  ActionModel f = flip_factor(chain, 0);
  EXPECT_EQ(f.dim_h(), chain.dim_h());
  Rng rng(33);
  EXPECT_EQ(cohomogeneity(f, rng.split(1)), cohomogeneity(chain, rng.split(2)));
  // after the flip, the left-end fixed algebra sits in the right slot
  EXPECT_NO_THROW(reduce_factor(f, 0, build_involution("AI", 2)));
}

TEST(GroupLift, ExpandsAllTypeIFactors) {
  ActionModel a = build_spin7_pair_action();
  ActionModel lift = group_lift(a);
  for (const auto& f : lift.space->factors()) EXPECT_EQ(f.kind, SpaceFactor::Kind::TypeII);
  EXPECT_EQ(lift.space->dim(), 2 * 28);
  EXPECT_EQ(lift.dim_h(), 21 + 21 + 21);  // diagonal spin(7) plus two added so(7)
}

TEST(Builders, DimensionsComeOutRight) {
  auto su3 = build_classical("su", 3);
  ActionModel hermann = build_hermann(su3, build_involution("AI", 3),
                                      build_involution("AIII", 2, 1), "so3-on-cp2");
  EXPECT_EQ(hermann.space->dim(), 4);
  EXPECT_EQ(hermann.dim_h(), 3);

  ActionModel sigma = build_sigma_action(
      su3, 2, [](const Mat& x) { return x; }, "sigma-su3-n2");
  EXPECT_EQ(sigma.space->dim(), 16);
  EXPECT_EQ(sigma.dim_h(), 16);
  EXPECT_TRUE(sigma.h.is_subalgebra());

  ActionModel chain = build_chain_action(su3, 3, build_involution("AI", 3),
                                         build_involution("AIII", 2, 1), "chain-su3-n3");
  EXPECT_EQ(chain.space->dim(), 24);
  EXPECT_EQ(chain.dim_h(), 3 + 8 + 8 + 4);
  EXPECT_TRUE(chain.h.is_subalgebra());
}

TEST(Builders, SigmaTwistChangesTheAlgebraNotItsSize) {
  auto su3 = build_classical("su", 3);
  const Involution conj = complex_conjugation(3);
  ActionModel twisted = build_sigma_action(
      su3, 1, [conj](const Mat& x) { return conj.apply(x); }, "sigma-su3-conj");
  ActionModel plain = build_sigma_action(
      su3, 1, [](const Mat& x) { return x; }, "sigma-su3-id");
  EXPECT_EQ(twisted.dim_h(), plain.dim_h());
  EXPECT_FALSE(twisted.h.same_span(plain.h));
}

}  // namespace
}  // namespace symact
