#pragma once

#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "symact/catalog.hpp"
#include "symact/liealg.hpp"

namespace symact {

/// Eigenspace split g = k + p of an involutive automorphism.
inline std::pair<AlgebraSubspace, AlgebraSubspace> cartan_decomposition(
    const MatrixLieAlgebra* g, const Involution& theta) {
  for (const auto& b : g->basis()) {
    const Mat tb = theta.apply(b);
    if (!g->contains(tb))
      throw std::invalid_argument("cartan_decomposition: involution does not preserve algebra");
    if ((theta.apply(tb) - b).norm() > g->tol().rel_eps * std::max(1.0, b.norm()))
      throw std::invalid_argument("cartan_decomposition: map is not involutive");
  }
  auto k = fixed_subspace(g, theta);
  auto p = minus_subspace(g, theta);
  if (k.dim() + p.dim() != g->dim())
    throw std::runtime_error("cartan_decomposition: eigenspace dimensions do not add up");
  return {std::move(k), std::move(p)};
}

/// One irreducible (or semisimple TypeI) factor of a product space.
/// TypeI holds a pair (g, theta); TypeII a compact algebra l whose isometry
/// algebra is l + l acting by (X1, X2) . x = X1 x - x X2.
struct SpaceFactor {
  enum class Kind { TypeI, TypeII };

  Kind kind;
  std::shared_ptr<MatrixLieAlgebra> g;  // TypeI: g; TypeII: l
  std::optional<Involution> theta;      // TypeI only
  std::vector<Mat> k_basis;             // TypeI: orthonormal basis of k
  std::vector<Mat> p_basis;             // orthonormal p-model basis (TypeI: p, TypeII: l)

  static SpaceFactor type1(std::shared_ptr<MatrixLieAlgebra> g, Involution theta) {
    auto [k, p] = cartan_decomposition(g.get(), theta);
    SpaceFactor f;
    f.kind = Kind::TypeI;
    f.g = std::move(g);
    f.theta = std::move(theta);
    f.k_basis = k.basis();
    f.p_basis = p.basis();
    return f;
  }

  static SpaceFactor type2(std::shared_ptr<MatrixLieAlgebra> l) {
    SpaceFactor f;
    f.kind = Kind::TypeII;
    AlgebraSubspace full = AlgebraSubspace::full(l.get());
    f.p_basis = full.basis();
    f.g = std::move(l);
    return f;
  }

  int size() const { return g->ambient_size(); }
  int blocks() const { return kind == Kind::TypeII ? 2 : 1; }
  int dim_p() const { return static_cast<int>(p_basis.size()); }
  int isometry_dim() const { return kind == Kind::TypeII ? 2 * g->dim() : g->dim(); }
};

/// Group elements per factor defining a point of the product space
/// (the coset g_i K_i for TypeI, the element g_i for TypeII).
struct PointSample {
  std::vector<Mat> elements;
  std::uint64_t seed = 0;
};

/// Ordered product of symmetric-space factors with the block-diagonal
/// ambient isometry algebra.
class ProductSpace {
 public:
  explicit ProductSpace(std::vector<SpaceFactor> factors, Tolerance tol = {})
      : factors_(std::move(factors)), tol_(tol) {
    if (factors_.empty()) throw std::invalid_argument("ProductSpace: no factors");
    block_offset_.reserve(factors_.size());
    int off = 0;
    for (const auto& f : factors_) {
      block_offset_.push_back(off);
      off += f.blocks() * f.size();
    }
    ambient_size_ = off;
    p_offset_.reserve(factors_.size());
    int poff = 0;
    for (const auto& f : factors_) {
      p_offset_.push_back(poff);
      poff += f.dim_p();
    }
    dim_ = poff;
    std::vector<Mat> basis;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      const auto& f = factors_[i];
      for (const auto& b : f.g->basis()) basis.push_back(embed(static_cast<int>(i), 0, b));
      if (f.kind == SpaceFactor::Kind::TypeII)
        for (const auto& b : f.g->basis()) basis.push_back(embed(static_cast<int>(i), 1, b));
    }
    ambient_ = std::make_unique<MatrixLieAlgebra>(ambient_size_, std::move(basis), tol_);
  }

  const std::vector<SpaceFactor>& factors() const { return factors_; }
  int num_factors() const { return static_cast<int>(factors_.size()); }
  int ambient_size() const { return ambient_size_; }
  int dim() const { return dim_; }
  const MatrixLieAlgebra& ambient() const { return *ambient_; }
  const Tolerance& tol() const { return tol_; }

  /// Embed a factor-sized matrix into the big ambient, in the left (0) or
  /// right (1) block of factor i.
  Mat embed(int i, int which, const Mat& small) const {
    const auto& f = factors_[static_cast<std::size_t>(i)];
    if (which == 1 && f.kind != SpaceFactor::Kind::TypeII)
      throw std::invalid_argument("ProductSpace::embed: TypeI factor has one block");
    Mat m = Mat::Zero(ambient_size_, ambient_size_);
    const int off = block_offset_[static_cast<std::size_t>(i)] + which * f.size();
    m.block(off, off, f.size(), f.size()) = small;
    return m;
  }

  Mat extract(int i, int which, const Mat& big) const {
    const auto& f = factors_[static_cast<std::size_t>(i)];
    const int off = block_offset_[static_cast<std::size_t>(i)] + which * f.size();
    return big.block(off, off, f.size(), f.size());
  }

  int p_offset(int i) const { return p_offset_[static_cast<std::size_t>(i)]; }

  PointSample base_point() const {
    PointSample p;
    for (const auto& f : factors_) p.elements.push_back(Mat::Identity(f.size(), f.size()));
    return p;
  }

  PointSample sample_point(Rng& rng) const {
    PointSample p;
    p.seed = rng.seed();
    for (const auto& f : factors_) {
      Mat z = Mat::Zero(f.size(), f.size());
      for (const auto& b : f.g->basis()) z += rng.gauss() * b;
      p.elements.push_back(matrix_exp(z));
    }
    return p;
  }

  /// p-model coordinates of the orbit-map image of one ambient element at
  /// the given point, restricted to the listed factors.
  Vec orbit_image(const Mat& big, const PointSample& pt, const std::vector<int>& which_factors) const {
    int rows = 0;
    for (int i : which_factors) rows += factors_[static_cast<std::size_t>(i)].dim_p();
    Vec out(rows);
    int row = 0;
    for (int i : which_factors) {
      const auto& f = factors_[static_cast<std::size_t>(i)];
      const Mat& g = pt.elements[static_cast<std::size_t>(i)];
      Mat y;
      if (f.kind == SpaceFactor::Kind::TypeI) {
        const Mat x = extract(i, 0, big);
        y = g.transpose() * x * g;  // Ad(g^-1), g orthogonal
      } else {
        const Mat x1 = extract(i, 0, big);
        const Mat x2 = extract(i, 1, big);
        y = x1 - g * x2 * g.transpose();
      }
      for (const auto& pb : f.p_basis) out(row++) = (pb.array() * y.array()).sum();
    }
    return out;
  }

  std::vector<int> all_factor_indices() const {
    std::vector<int> idx(factors_.size());
    std::iota(idx.begin(), idx.end(), 0);
    return idx;
  }

  /// Columns are orbit-map images of the subspace basis; its rank is the
  /// orbit dimension at the point.
  Mat orbit_matrix(const AlgebraSubspace& h, const PointSample& pt,
                   const std::vector<int>& which_factors) const {
    int rows = 0;
    for (int i : which_factors) rows += factors_[static_cast<std::size_t>(i)].dim_p();
    Mat m(rows, h.dim());
    for (int j = 0; j < h.dim(); ++j) m.col(j) = orbit_image(h.basis()[static_cast<std::size_t>(j)], pt, which_factors);
    return m;
  }

  Mat orbit_matrix(const AlgebraSubspace& h, const PointSample& pt) const {
    return orbit_matrix(h, pt, all_factor_indices());
  }

  /// Reconstruct the per-factor matrix of a p-model coordinate vector.
  Mat p_component(const Vec& coords, int i, const std::vector<int>& which_factors) const {
    int row = 0;
    for (int j : which_factors) {
      const auto& f = factors_[static_cast<std::size_t>(j)];
      if (j == i) {
        Mat m = Mat::Zero(f.size(), f.size());
        for (const auto& pb : f.p_basis) m += coords(row++) * pb;
        return m;
      }
      row += f.dim_p();
    }
    throw std::invalid_argument("p_component: factor not in subset");
  }

 private:
  std::vector<SpaceFactor> factors_;
  Tolerance tol_;
  std::vector<int> block_offset_;
  std::vector<int> p_offset_;
  int ambient_size_ = 0;
  int dim_ = 0;
  std::unique_ptr<MatrixLieAlgebra> ambient_;
};

using SpacePtr = std::shared_ptr<const ProductSpace>;

inline SpacePtr make_space(std::vector<SpaceFactor> factors, Tolerance tol = {}) {
  return std::make_shared<const ProductSpace>(std::move(factors), tol);
}

/// Sum over factors of the generic centralizer dimension in the p-model;
/// minimum over `samples` seeded draws.
inline int space_rank(const ProductSpace& s, Rng rng, int samples = 5) {
  int total = 0;
  for (const auto& f : s.factors()) {
    int best = f.dim_p();
    for (int t = 0; t < samples; ++t) {
      Mat x = Mat::Zero(f.size(), f.size());
      for (const auto& pb : f.p_basis) x += rng.gauss() * pb;
      Mat cols(static_cast<Eigen::Index>(x.size()), f.dim_p());
      for (int j = 0; j < f.dim_p(); ++j)
        cols.col(j) = flatten(bracket(x, f.p_basis[static_cast<std::size_t>(j)]));
      best = std::min(best, static_cast<int>(nullspace(cols, s.tol()).cols()));
    }
    total += best;
  }
  return total;
}

}  // namespace symact
