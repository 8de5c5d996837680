#pragma once

#include <string>
#include <vector>

#include "symact/actions.hpp"

namespace symact {

/// Spin(8) acting on S^7 x S^7 x S^7 through the vector, even and odd
/// half-spin representations (identified with so(8) triples (A, B, C)
/// solving the triality relation A(xy) = B(x)y + xC(y)).
/// With `grassmannian` set, the third factor is the Grassmannian of
/// 2-planes in R^8 instead of the sphere.
inline ActionModel build_triality_action(bool grassmannian = false, Tolerance tol = {}) {
  auto so8 = build_classical("so", 8, tol);
  std::vector<SpaceFactor> factors;
  factors.push_back(SpaceFactor::type1(so8, build_involution("BDI", 1, 7)));
  factors.push_back(SpaceFactor::type1(so8, build_involution("BDI", 1, 7)));
  factors.push_back(SpaceFactor::type1(
      so8, grassmannian ? build_involution("BDI", 2, 6) : build_involution("BDI", 1, 7)));
  SpacePtr space = make_space(std::move(factors), tol);
  std::vector<Mat> gens;
  for (const auto& a : so8->basis()) {
    auto [b, c] = triality_images(a, tol);
    gens.push_back(space->embed(0, 0, a) + space->embed(1, 0, b) + space->embed(2, 0, c));
  }
  AlgebraSubspace h(&space->ambient(), gens);
  return {std::move(space), std::move(h),
          grassmannian ? "triality-grassmannian" : "triality-spheres"};
}

/// Diagonal Spin(7) acting on S^7 x S^7 through two copies of its
/// 8-dimensional spin representation.
inline ActionModel build_spin7_pair_action(Tolerance tol = {}) {
  auto so8 = build_classical("so", 8, tol);
  std::vector<SpaceFactor> factors;
  factors.push_back(SpaceFactor::type1(so8, build_involution("BDI", 1, 7)));
  factors.push_back(SpaceFactor::type1(so8, build_involution("BDI", 1, 7)));
  SpacePtr space = make_space(std::move(factors), tol);
  std::vector<Mat> gens;
  for (const auto& s : spin7_basis())
    gens.push_back(space->embed(0, 0, s) + space->embed(1, 0, s));
  AlgebraSubspace h(&space->ambient(), gens);
  return {std::move(space), std::move(h), "spin7-pair"};
}

/// The chain U(3) x SO(6) x G2 acting on SO(6) x SO(7): U(3) on the left of
/// the first factor, G2 on the right of the second, and the SO(6) link
/// acting simultaneously on the right of the first and (through the vector
/// embedding) on the left of the second.
inline ActionModel build_u3_chain_action(Tolerance tol = {}) {
  auto so6 = build_classical("so", 6, tol);
  auto so7 = build_classical("so", 7, tol);
  std::vector<SpaceFactor> factors;
  factors.push_back(SpaceFactor::type2(so6));
  factors.push_back(SpaceFactor::type2(so7));
  SpacePtr space = make_space(std::move(factors), tol);
  std::vector<Mat> gens;
  for (const auto& b : u_realified_basis(3)) gens.push_back(space->embed(0, 0, b));
  for (const auto& b : so6->basis()) {
    Mat emb = Mat::Zero(7, 7);
    emb.topLeftCorner(6, 6) = b;
    gens.push_back(space->embed(0, 1, b) + space->embed(1, 0, emb));
  }
  for (const auto& b : g2_basis()) gens.push_back(space->embed(1, 1, b));
  AlgebraSubspace h(&space->ambient(), gens);
  return {std::move(space), std::move(h), "u3-so6-g2-chain"};
}

/// Spin(9) acting on S^8 x S^15 through the vector representation on the
/// first factor and the 16-dimensional spin representation on the second.
inline ActionModel build_spin9_sphere_action(Tolerance tol = {}) {
  auto so9 = build_classical("so", 9, tol);
  auto so16 = build_classical("so", 16, tol);
  std::vector<SpaceFactor> factors;
  factors.push_back(SpaceFactor::type1(so9, build_involution("BDI", 1, 8)));
  factors.push_back(SpaceFactor::type1(so16, build_involution("BDI", 1, 15)));
  SpacePtr space = make_space(std::move(factors), tol);
  const auto spin = spin9_basis();
  const auto vec = spin9_vector_partners();
  std::vector<Mat> gens;
  for (std::size_t i = 0; i < spin.size(); ++i)
    gens.push_back(space->embed(0, 0, vec[i]) + space->embed(1, 0, spin[i]));
  AlgebraSubspace h(&space->ambient(), gens);
  return {std::move(space), std::move(h), "spin9-spheres"};
}

}  // namespace symact
