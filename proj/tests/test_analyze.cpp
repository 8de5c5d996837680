#include <gtest/gtest.h>

#include "symact/analyze.hpp"

namespace symact {
namespace {

ActionModel so2_on_s4() {
  auto so5 = build_classical("so", 5);
  SpacePtr space = make_space({SpaceFactor::type1(so5, build_involution("BDI", 1, 4))});
  std::vector<Mat> gens = {space->embed(0, 0, so_block_basis(5, 1, 2)[0])};
  AlgebraSubspace h(&space->ambient(), gens);
  return {space, std::move(h), "so2-on-s4"};
}

TEST(Cohomogeneity, KnownValues) {
  Rng rng(41);
  auto so5 = build_classical("so", 5);
  // isotropy action on the sphere: cohomogeneity 1
  ActionModel iso = build_hermann(so5, build_involution("BDI", 1, 4),
                                  build_involution("BDI", 1, 4), "so4-on-s4");
  EXPECT_EQ(cohomogeneity(iso, rng.split(1)), 1);
  // the full isometry algebra is transitive
  SpacePtr space = make_space({SpaceFactor::type1(so5, build_involution("BDI", 1, 4))});
  ActionModel full{space, AlgebraSubspace::full(&space->ambient()), "so5-on-s4"};
  EXPECT_EQ(cohomogeneity(full, rng.split(2)), 0);
  EXPECT_TRUE(is_transitive_on(full, 0, rng.split(3)));
  EXPECT_FALSE(is_transitive_on(iso, 0, rng.split(4)));
  // a circle on S^4 leaves three transverse directions
  EXPECT_EQ(cohomogeneity(so2_on_s4(), rng.split(5)), 3);
  // conjugation action: cohomogeneity = rank
  ActionModel conj = build_sigma_action(
      build_classical("su", 3), 1, [](const Mat& x) { return x; }, "sigma-su3");
  EXPECT_EQ(cohomogeneity(conj, rng.split(6)), 2);
}

TEST(Hyperpolarity, PositiveAndNegativeVerdicts) {
  Rng rng(43);
  auto so5 = build_classical("so", 5);
  ActionModel iso = build_hermann(so5, build_involution("BDI", 1, 4),
                                  build_involution("BDI", 1, 4), "so4-on-s4");
  HyperpolarReport hp = is_hyperpolar(iso, rng.split(1));
  EXPECT_TRUE(hp.hyperpolar);
  EXPECT_FALSE(hp.inconclusive);
  EXPECT_EQ(hp.cohomogeneity, 1);
  EXPECT_LT(hp.residual, 1e-8);
  // the 3-dimensional normal space of a circle action on S^4 cannot be flat
  // (maximal flats of the sphere are 1-dimensional)
  HyperpolarReport bad = is_hyperpolar(so2_on_s4(), rng.split(2));
  EXPECT_FALSE(bad.hyperpolar);
  EXPECT_FALSE(bad.inconclusive);
  EXPECT_GT(bad.residual, 1e-3);
  // transitive actions are trivially hyperpolar
  auto su2 = build_classical("su", 2);
  SpacePtr space = make_space({SpaceFactor::type2(su2)});
  std::vector<Mat> gens;
  for (const auto& b : su2->basis()) gens.push_back(space->embed(0, 0, b));
  for (const auto& b : su2->basis()) gens.push_back(space->embed(0, 1, b));
  ActionModel two_sided{space, AlgebraSubspace(&space->ambient(), gens), "su2xsu2-on-su2"};
  HyperpolarReport trans = is_hyperpolar(two_sided, rng.split(3));
  EXPECT_TRUE(trans.hyperpolar);
  EXPECT_EQ(trans.cohomogeneity, 0);
}

TEST(DimBound, NecessaryConditionForHyperpolarity) {
  Rng rng(44);
  auto so5 = build_classical("so", 5);
  ActionModel iso = build_hermann(so5, build_involution("BDI", 1, 4),
                                  build_involution("BDI", 1, 4), "so4-on-s4");
  EXPECT_TRUE(dim_bound_holds(iso, rng.split(1)));
  EXPECT_FALSE(dim_bound_holds(so2_on_s4(), rng.split(2)));
}

TEST(VerifyDecomposition, PositiveNegativeAndSwapInvariance) {
  Rng rng(45);
  auto so8 = build_classical("so", 8);
  const auto spin7 = spin7_basis();
  const auto so7 = so_block_basis(8, 0, 7);
  EXPECT_TRUE(verify_decomposition(*so8, spin7, so7, rng.split(1)));
  EXPECT_TRUE(verify_decomposition(*so8, so7, spin7, rng.split(2)));  // swap symmetry
  // so(7) x so(7) is not a decomposition of so(8)
  EXPECT_FALSE(verify_decomposition(*so8, so7, so7, rng.split(3)));
  auto su3 = build_classical("su", 3);
  EXPECT_FALSE(verify_decomposition(*su3, detail::su_block_realified(3, 2),
                                    detail::su_block_realified(3, 2), rng.split(4)));
}

TEST(NonSplit, ProductActionFailsTransitivityConditions) {
  Rng rng(46);
  auto so5 = build_classical("so", 5);
  std::vector<SpaceFactor> factors;
  factors.push_back(SpaceFactor::type1(so5, build_involution("BDI", 1, 4)));
  factors.push_back(SpaceFactor::type1(so5, build_involution("BDI", 1, 4)));
  SpacePtr space = make_space(std::move(factors));
  std::vector<Mat> gens;
  for (const auto& b : so_block_basis(5, 1, 4)) gens.push_back(space->embed(0, 0, b));
  for (const auto& b : so_block_basis(5, 1, 4)) gens.push_back(space->embed(1, 0, b));
  ActionModel prod{space, AlgebraSubspace(&space->ambient(), gens), "so4xso4-product"};
  NonSplitReport rep = check_nonsplit_conditions(prod, {0}, rng.split(1));
  EXPECT_FALSE(rep.proj_first_transitive);
  EXPECT_FALSE(rep.proj_second_transitive);
  EXPECT_FALSE(rep.all_hold());
  EXPECT_THROW(check_nonsplit_conditions(prod, {0, 1}, rng.split(2)), std::invalid_argument);
}

TEST(NonSplit, SpinSevenPairSatisfiesAllFour) {
  Rng rng(47);
  NonSplitReport rep = check_nonsplit_conditions(build_spin7_pair_action(), {0}, rng);
  EXPECT_TRUE(rep.all_hold());
  EXPECT_EQ(rep.d, 1);
  EXPECT_EQ(rep.d_inter_on_first, 1);
  EXPECT_EQ(rep.d_inter_on_second, 1);
  EXPECT_TRUE(rep.cohomogeneities_agree);
}

TEST(Reports, AllPassAndSeedStable) {
  Report t1 = verify_table1(Rng(42));
  EXPECT_TRUE(t1.all_pass());
  EXPECT_EQ(t1.cases.size(), 21u);
  Report s7a = verify_section7_exclusions(Rng(42));
  Report s7b = verify_section7_exclusions(Rng(1234));
  EXPECT_TRUE(s7a.all_pass());
  ASSERT_EQ(s7a.cases.size(), s7b.cases.size());
  for (std::size_t i = 0; i < s7a.cases.size(); ++i) {
    EXPECT_EQ(s7a.cases[i].pass, s7b.cases[i].pass) << s7a.cases[i].id;
    EXPECT_EQ(s7a.cases[i].external, s7b.cases[i].external);
  }
  Report s9 = verify_section9_examples(Rng(42));
  EXPECT_TRUE(s9.all_pass());
  EXPECT_EQ(s9.cases.size(), 5u);
}

TEST(AnalyzeAction, FullReportForTheChainExample) {
  AnalysisReport rep = analyze_action(build_u3_chain_action(), Rng(42));
  EXPECT_EQ(rep.dim_space, 36);
  EXPECT_EQ(rep.dim_algebra, 38);
  EXPECT_EQ(rep.cohomogeneity, 1);
  EXPECT_TRUE(rep.hyperpolar);
  EXPECT_TRUE(rep.dim_bound);
  ASSERT_EQ(rep.factor_transitive.size(), 2u);
  EXPECT_TRUE(rep.factor_transitive[0]);
  EXPECT_TRUE(rep.factor_transitive[1]);
  // deterministic under a fixed seed
  AnalysisReport rep2 = analyze_action(build_u3_chain_action(), Rng(42));
  EXPECT_EQ(rep.cohomogeneity, rep2.cohomogeneity);
  EXPECT_EQ(rep.residual, rep2.residual);
}

}  // namespace
}  // namespace symact
