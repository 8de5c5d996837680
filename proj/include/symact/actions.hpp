#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "symact/spaces.hpp"

namespace symact {

/// An isometric action: a subalgebra of the ambient isometry algebra of a
/// product space, acting through the per-factor orbit maps.
struct ActionModel {
  SpacePtr space;
  AlgebraSubspace h;
  std::string name;

  int dim_m() const { return space->dim(); }
  int dim_h() const { return h.dim(); }
};

inline ActionModel make_action(SpacePtr space, const std::vector<Mat>& generators,
                               std::string name) {
  AlgebraSubspace h(&space->ambient(), generators);
  if (!h.is_subalgebra())
    throw std::invalid_argument("make_action: generators do not span a subalgebra");
  return {std::move(space), std::move(h), std::move(name)};
}

inline ActionModel restrict_action(const ActionModel& a, const std::vector<Mat>& generators,
                                   std::string name) {
  AlgebraSubspace hp(&a.space->ambient(), generators);
  if (!a.h.contains_subspace(hp))
    throw std::invalid_argument("restrict_action: generators escape the acting algebra");
  if (!hp.is_subalgebra())
    throw std::invalid_argument("restrict_action: generators do not span a subalgebra");
  return {a.space, std::move(hp), std::move(name)};
}

namespace detail {

inline std::vector<int> complement_factors(int n, const std::vector<int>& which) {
  std::set<int> in(which.begin(), which.end());
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (!in.count(i)) out.push_back(i);
  return out;
}

}  // namespace detail

/// Image of the acting algebra in the isometry algebra of the sub-product
/// spanned by the listed factors.
inline ActionModel projection_action(const ActionModel& a, const std::vector<int>& which) {
  std::vector<SpaceFactor> factors;
  for (int i : which) factors.push_back(a.space->factors()[static_cast<std::size_t>(i)]);
  SpacePtr sub = make_space(std::move(factors), a.space->tol());
  std::vector<Mat> gens;
  for (const auto& b : a.h.basis()) {
    Mat big = Mat::Zero(sub->ambient_size(), sub->ambient_size());
    for (std::size_t j = 0; j < which.size(); ++j) {
      const auto& f = a.space->factors()[static_cast<std::size_t>(which[j])];
      for (int w = 0; w < f.blocks(); ++w)
        big += sub->embed(static_cast<int>(j), w, a.space->extract(which[j], w, b));
    }
    gens.push_back(std::move(big));
  }
  AlgebraSubspace h(&sub->ambient(), gens);
  return {std::move(sub), std::move(h), a.name + "|proj"};
}

/// Stabilizer subalgebra of a point of the sub-product spanned by the
/// listed factors (as a subalgebra of the original ambient).
inline AlgebraSubspace partial_isotropy(const ActionModel& a, const std::vector<int>& which,
                                        const PointSample& pt) {
  return kernel_in(a.h, [&](const Mat& x) { return a.space->orbit_image(x, pt, which); });
}

/// Action induced on the complementary factors by the partial isotropy at a
/// point of the listed factors.
inline ActionModel intersection_action(const ActionModel& a, const std::vector<int>& which,
                                       const PointSample& pt) {
  AlgebraSubspace iso = partial_isotropy(a, which, pt);
  ActionModel full{a.space, std::move(iso), a.name + "|iso"};
  return projection_action(full, detail::complement_factors(a.space->num_factors(), which));
}

/// Replace the TypeI factor (G_i, K_i) by the group factor G_i and enlarge
/// the acting algebra by the right K_i-translations; the new action has the
/// same orbit geometry transverse to the added fiber.
inline ActionModel expand_factor(const ActionModel& a, int i) {
  const auto& f = a.space->factors()[static_cast<std::size_t>(i)];
  if (f.kind != SpaceFactor::Kind::TypeI)
    throw std::invalid_argument("expand_factor: factor is not TypeI");
  std::vector<SpaceFactor> factors;
  for (int j = 0; j < a.space->num_factors(); ++j) {
    if (j == i)
      factors.push_back(SpaceFactor::type2(f.g));
    else
      factors.push_back(a.space->factors()[static_cast<std::size_t>(j)]);
  }
  SpacePtr sub = make_space(std::move(factors), a.space->tol());
  auto transfer = [&](const Mat& b) {
    Mat big = Mat::Zero(sub->ambient_size(), sub->ambient_size());
    for (int j = 0; j < a.space->num_factors(); ++j) {
      const int blocks = j == i ? 1 : a.space->factors()[static_cast<std::size_t>(j)].blocks();
      for (int w = 0; w < blocks; ++w)
        big += sub->embed(j, w, a.space->extract(j, w, b));
    }
    return big;
  };
  std::vector<Mat> gens;
  for (const auto& b : a.h.basis()) gens.push_back(transfer(b));
  for (const auto& kb : f.k_basis) gens.push_back(sub->embed(i, 1, kb));
  AlgebraSubspace h(&sub->ambient(), gens);
  return {std::move(sub), std::move(h), a.name + "|exp" + std::to_string(i)};
}

/// Replace the TypeII factor L_i by two TypeII copies, with the acting
/// algebra carried across and the diagonal of the two new right/left slots
/// appended.
inline ActionModel expand_group_factor(const ActionModel& a, int i) {
  const auto& f = a.space->factors()[static_cast<std::size_t>(i)];
  if (f.kind != SpaceFactor::Kind::TypeII)
    throw std::invalid_argument("expand_group_factor: factor is not TypeII");
  std::vector<SpaceFactor> factors;
  for (int j = 0; j < a.space->num_factors(); ++j) {
    factors.push_back(a.space->factors()[static_cast<std::size_t>(j)]);
    if (j == i) factors.push_back(SpaceFactor::type2(f.g));
  }
  SpacePtr sub = make_space(std::move(factors), a.space->tol());
  auto new_index = [&](int j) { return j <= i ? j : j + 1; };
  std::vector<Mat> gens;
  for (const auto& b : a.h.basis()) {
    Mat big = Mat::Zero(sub->ambient_size(), sub->ambient_size());
    for (int j = 0; j < a.space->num_factors(); ++j) {
      if (j == i) {
        big += sub->embed(i, 0, a.space->extract(i, 0, b));
        big += sub->embed(i + 1, 1, a.space->extract(i, 1, b));
      } else {
        const auto& fj = a.space->factors()[static_cast<std::size_t>(j)];
        for (int w = 0; w < fj.blocks(); ++w)
          big += sub->embed(new_index(j), w, a.space->extract(j, w, b));
      }
    }
    gens.push_back(std::move(big));
  }
  for (const auto& b : f.g->basis())
    gens.push_back(sub->embed(i, 1, b) + sub->embed(i + 1, 0, b));
  AlgebraSubspace h(&sub->ambient(), gens);
  return {std::move(sub), std::move(h), a.name + "|gexp" + std::to_string(i)};
}

/// Conjugate the action by the inversion isometry of the TypeII factor L_i,
/// which swaps the left and right translation slots. Orbit geometry is
/// unchanged.
inline ActionModel flip_factor(const ActionModel& a, int i) {
  const auto& f = a.space->factors()[static_cast<std::size_t>(i)];
  if (f.kind != SpaceFactor::Kind::TypeII)
    throw std::invalid_argument("flip_factor: factor is not TypeII");
  std::vector<Mat> gens;
  for (const auto& b : a.h.basis()) {
    Mat big = b;
    const Mat x1 = a.space->extract(i, 0, b);
    const Mat x2 = a.space->extract(i, 1, b);
    big -= a.space->embed(i, 0, x1) + a.space->embed(i, 1, x2);
    big += a.space->embed(i, 0, x2) + a.space->embed(i, 1, x1);
    gens.push_back(std::move(big));
  }
  AlgebraSubspace h(&a.space->ambient(), gens);
  return {a.space, std::move(h), a.name + "|flip" + std::to_string(i)};
}

/// Inverse of expand_factor: contract the TypeII factor L_i back to the
/// symmetric quotient named by the involution. Requires the fixed algebra
/// of the involution, acting from the right slot, to sit inside h.
inline ActionModel reduce_factor(const ActionModel& a, int i, const Involution& theta) {
  const auto& f = a.space->factors()[static_cast<std::size_t>(i)];
  if (f.kind != SpaceFactor::Kind::TypeII)
    throw std::invalid_argument("reduce_factor: factor is not TypeII");
  AlgebraSubspace k = fixed_subspace(f.g.get(), theta);
  for (const auto& kb : k.basis()) {
    Mat big = Mat::Zero(a.space->ambient_size(), a.space->ambient_size());
    big += a.space->embed(i, 1, kb);
    if (!a.h.contains(big))
      throw std::invalid_argument("reduce_factor: right isotropy factor is not inside h");
  }
  AlgebraSubspace hp = kernel_in(
      a.h, [&](const Mat& x) { return flatten(a.space->extract(i, 1, x)); });
  if (hp.dim() + k.dim() != a.h.dim())
    throw std::runtime_error("reduce_factor: acting algebra does not split off the isotropy factor");
  std::vector<SpaceFactor> factors;
  for (int j = 0; j < a.space->num_factors(); ++j) {
    if (j == i)
      factors.push_back(SpaceFactor::type1(f.g, theta));
    else
      factors.push_back(a.space->factors()[static_cast<std::size_t>(j)]);
  }
  SpacePtr sub = make_space(std::move(factors), a.space->tol());
  std::vector<Mat> gens;
  for (const auto& b : hp.basis()) {
    Mat big = Mat::Zero(sub->ambient_size(), sub->ambient_size());
    for (int j = 0; j < a.space->num_factors(); ++j) {
      const int blocks = j == i ? 1 : a.space->factors()[static_cast<std::size_t>(j)].blocks();
      for (int w = 0; w < blocks; ++w)
        big += sub->embed(j, w, a.space->extract(j, w, b));
    }
    gens.push_back(std::move(big));
  }
  AlgebraSubspace h(&sub->ambient(), gens);
  return {std::move(sub), std::move(h), a.name + "|red" + std::to_string(i)};
}

/// Expand every TypeI factor, lifting the action to the product of groups.
inline ActionModel group_lift(const ActionModel& a) {
  ActionModel cur = a;
  for (int i = 0; i < cur.space->num_factors(); ++i)
    if (cur.space->factors()[static_cast<std::size_t>(i)].kind == SpaceFactor::Kind::TypeI)
      cur = expand_factor(cur, i);
  return cur;
}

/// H = Fix(tau) acting on the symmetric quotient of (L, sigma).
inline ActionModel build_hermann(std::shared_ptr<MatrixLieAlgebra> l, const Involution& tau,
                                 const Involution& sigma, std::string name) {
  AlgebraSubspace hfix = fixed_subspace(l.get(), tau);
  std::vector<Mat> hb = hfix.basis();
  SpacePtr space = make_space({SpaceFactor::type1(std::move(l), sigma)});
  std::vector<Mat> gens;
  for (const auto& b : hb) gens.push_back(space->embed(0, 0, b));
  AlgebraSubspace h(&space->ambient(), gens);
  return {std::move(space), std::move(h), std::move(name)};
}

/// The twisted-diagonal action of L on L^n: factor j carries (X_j, X_{j+1})
/// and the last right slot carries twist(X_1).
inline ActionModel build_sigma_action(std::shared_ptr<MatrixLieAlgebra> l, int n,
                                      const std::function<Mat(const Mat&)>& twist,
                                      std::string name) {
  std::vector<SpaceFactor> factors;
  for (int j = 0; j < n; ++j) factors.push_back(SpaceFactor::type2(l));
  SpacePtr space = make_space(std::move(factors));
  // Parameters (X_1, ..., X_n) in l^n; slot pattern (X_1, X_2), ...,
  // (X_n, twist(X_1)).
  std::vector<Mat> gens;
  for (int j = 0; j < n; ++j) {
    for (const auto& b : l->basis()) {
      Mat big = space->embed(j, 0, b);
      if (j >= 1)
        big += space->embed(j - 1, 1, b);
      else
        big += space->embed(n - 1, 1, twist(b));
      gens.push_back(std::move(big));
    }
  }
  AlgebraSubspace h(&space->ambient(), gens);
  return {std::move(space), std::move(h), std::move(name)};
}

/// H x L^(n-1) x K acting on L^n by the chain pattern (h g_1, g_1^-1 ...),
/// infinitesimally: factor 1 left = Fix(tau_h), factor j right = factor
/// j+1 left = l, factor n right = Fix(tau_k).
inline ActionModel build_chain_action(std::shared_ptr<MatrixLieAlgebra> l, int n,
                                      const Involution& tau_h, const Involution& tau_k,
                                      std::string name) {
  AlgebraSubspace hfix = fixed_subspace(l.get(), tau_h);
  AlgebraSubspace kfix = fixed_subspace(l.get(), tau_k);
  std::vector<SpaceFactor> factors;
  for (int j = 0; j < n; ++j) factors.push_back(SpaceFactor::type2(l));
  SpacePtr space = make_space(std::move(factors));
  std::vector<Mat> gens;
  for (const auto& b : hfix.basis()) gens.push_back(space->embed(0, 0, b));
  for (int j = 0; j + 1 < n; ++j)
    for (const auto& b : l->basis())
      gens.push_back(space->embed(j, 1, b) + space->embed(j + 1, 0, b));
  for (const auto& b : kfix.basis()) gens.push_back(space->embed(n - 1, 1, b));
  AlgebraSubspace h(&space->ambient(), gens);
  return {std::move(space), std::move(h), std::move(name)};
}

}  // namespace symact
