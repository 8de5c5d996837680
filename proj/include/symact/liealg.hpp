#pragma once

#include <algorithm>
#include <functional>
#include <utility>
#include <vector>

#include "symact/core.hpp"
#include "symact/expm.hpp"

namespace symact {

inline Mat bracket(const Mat& x, const Mat& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw std::invalid_argument("bracket: size mismatch");
  return x * y - y * x;
}

/// Columns of m stacked as flattened vectors.
inline Mat stack_flat(const std::vector<Mat>& family) {
  if (family.empty()) throw std::invalid_argument("stack_flat: empty family");
  const auto sz = family.front().size();
  Mat a(sz, static_cast<Eigen::Index>(family.size()));
  for (std::size_t j = 0; j < family.size(); ++j) {
    if (family[j].size() != sz) throw std::invalid_argument("stack_flat: nonuniform sizes");
    a.col(static_cast<Eigen::Index>(j)) = flatten(family[j]);
  }
  return a;
}

inline int rank_of(const Mat& a, const Tolerance& tol = {}) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(a);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  const double cut = std::max(tol.rel_eps * sv(0), tol.abs_eps);
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++r;
  return r;
}

inline int numerical_rank(const std::vector<Mat>& family, const Tolerance& tol = {}) {
  return rank_of(stack_flat(family), tol);
}

/// Orthonormal basis of the column span (left singular vectors above the cut).
inline Mat orthonormal_cols(const Mat& a, const Tolerance& tol = {}) {
  if (a.cols() == 0) return Mat(a.rows(), 0);
  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double cut = sv.size() ? std::max(tol.rel_eps * sv(0), tol.abs_eps) : 0.0;
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++r;
  return svd.matrixU().leftCols(r);
}

/// Orthonormal basis of {x : a x = 0}.
inline Mat nullspace(const Mat& a, const Tolerance& tol = {}) {
  if (a.cols() == 0) return Mat(0, 0);
  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cut = sv.size() ? std::max(tol.rel_eps * sv(0), tol.abs_eps) : 0.0;
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++r;
  return svd.matrixV().rightCols(a.cols() - r);
}

/// Dense real matrix Lie algebra given by a basis. The invariant form is
/// mu(X,Y) = -trace(XY); on the skew-symmetric algebras of the catalog this
/// is the Frobenius pairing, hence positive definite on the span.
class MatrixLieAlgebra {
 public:
  MatrixLieAlgebra(int ambient_size, std::vector<Mat> basis, Tolerance tol = {})
      : n_(ambient_size), basis_(std::move(basis)), tol_(tol) {
    if (basis_.empty()) throw std::invalid_argument("MatrixLieAlgebra: empty basis");
    for (const auto& b : basis_) {
      if (b.rows() != n_ || b.cols() != n_)
        throw std::invalid_argument("MatrixLieAlgebra: basis size mismatch");
      if (!b.allFinite()) throw std::invalid_argument("MatrixLieAlgebra: non-finite entry");
    }
    span_ = orthonormal_cols(stack_flat(basis_), tol_);
    if (span_.cols() != static_cast<Eigen::Index>(basis_.size()))
      throw std::invalid_argument("MatrixLieAlgebra: basis not linearly independent");
  }

  int ambient_size() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Mat>& basis() const { return basis_; }
  const Mat& span() const { return span_; }
  const Tolerance& tol() const { return tol_; }

  double mu(const Mat& x, const Mat& y) const { return -(x * y).trace(); }

  Vec coords(const Mat& x) const { return span_.transpose() * flatten(x); }

  Mat from_coords(const Vec& c) const { return unflatten(span_ * c, n_, n_); }

  Mat project(const Mat& x) const { return from_coords(coords(x)); }

  bool contains(const Mat& x, double scale = 1.0) const {
    const Vec f = flatten(x);
    const double res = (f - span_ * (span_.transpose() * f)).norm();
    return res <= tol_.rel_eps * std::max(scale, f.norm()) + tol_.abs_eps;
  }

  /// Max relative residual of brackets of basis pairs outside the span.
  double closure_residual() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      for (std::size_t j = i + 1; j < basis_.size(); ++j) {
        const Mat br = bracket(basis_[i], basis_[j]);
        const double nb = br.norm();
        if (nb < tol_.abs_eps) continue;
        const Vec f = flatten(br);
        worst = std::max(worst, (f - span_ * (span_.transpose() * f)).norm() / nb);
      }
    return worst;
  }

 private:
  int n_;
  std::vector<Mat> basis_;
  Tolerance tol_;
  Mat span_;  // n^2 x dim, orthonormal
};

/// A subspace of a MatrixLieAlgebra, stored with an orthonormalized basis.
class AlgebraSubspace {
 public:
  AlgebraSubspace(const MatrixLieAlgebra* parent, const std::vector<Mat>& family,
                  bool check_containment = true)
      : parent_(parent) {
    if (!parent) throw std::invalid_argument("AlgebraSubspace: null parent");
    if (family.empty()) {
      span_.resize(static_cast<Eigen::Index>(parent->ambient_size()) * parent->ambient_size(), 0);
    } else {
      if (check_containment)
        for (const auto& m : family)
          if (!parent->contains(m))
            throw std::invalid_argument("AlgebraSubspace: element outside parent span");
      span_ = orthonormal_cols(stack_flat(family), parent->tol());
    }
    rebuild_basis();
  }

  static AlgebraSubspace zero(const MatrixLieAlgebra* parent) {
    return AlgebraSubspace(parent, {}, false);
  }

  static AlgebraSubspace full(const MatrixLieAlgebra* parent) {
    return AlgebraSubspace(parent, parent->basis(), false);
  }

  const MatrixLieAlgebra* parent() const { return parent_; }
  int dim() const { return static_cast<int>(span_.cols()); }
  const Mat& span() const { return span_; }
  const std::vector<Mat>& basis() const { return basis_; }

  bool contains(const Mat& x) const {
    const Vec f = flatten(x);
    const double res = (f - span_ * (span_.transpose() * f)).norm();
    return res <= parent_->tol().rel_eps * std::max(1.0, f.norm()) + parent_->tol().abs_eps;
  }

  bool contains_subspace(const AlgebraSubspace& other) const {
    for (const auto& b : other.basis_)
      if (!contains(b)) return false;
    return true;
  }

  bool same_span(const AlgebraSubspace& other) const {
    return dim() == other.dim() && contains_subspace(other);
  }

  /// Max norm of the projection of basis brackets outside the span;
  /// zero for a subalgebra.
  double subalgebra_residual() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      for (std::size_t j = i + 1; j < basis_.size(); ++j) {
        const Vec f = flatten(bracket(basis_[i], basis_[j]));
        worst = std::max(worst, (f - span_ * (span_.transpose() * f)).norm());
      }
    return worst;
  }

  bool is_subalgebra() const { return subalgebra_residual() < parent_->tol().rel_eps; }

 private:
  void rebuild_basis() {
    basis_.clear();
    const int n = parent_->ambient_size();
    for (int j = 0; j < span_.cols(); ++j) basis_.push_back(unflatten(span_.col(j), n, n));
  }

  const MatrixLieAlgebra* parent_;
  Mat span_;  // n^2 x dim, orthonormal
  std::vector<Mat> basis_;
};

/// mu-orthocomplement of s inside the parent span.
inline AlgebraSubspace orthocomplement(const AlgebraSubspace& s) {
  const auto* par = s.parent();
  const Tolerance& tol = par->tol();
  if (s.dim() == 0) return AlgebraSubspace::full(par);
  // coeffs c with s^T (parent_span c) = 0
  const Mat m = s.span().transpose() * par->span();  // k x D
  const Mat ns = nullspace(m, tol);                  // D x (D-k)
  std::vector<Mat> fam;
  const int n = par->ambient_size();
  for (int j = 0; j < ns.cols(); ++j)
    fam.push_back(unflatten(par->span() * ns.col(j), n, n));
  if (fam.empty()) return AlgebraSubspace::zero(par);
  return AlgebraSubspace(par, fam, false);
}

inline AlgebraSubspace intersect(const AlgebraSubspace& s, const AlgebraSubspace& t) {
  if (s.parent() != t.parent())
    throw std::invalid_argument("intersect: mismatched parents");
  const auto* par = s.parent();
  if (s.dim() == 0 || t.dim() == 0) return AlgebraSubspace::zero(par);
  Mat stacked(s.span().rows(), s.dim() + t.dim());
  stacked << s.span(), -t.span();
  const Mat ns = nullspace(stacked, par->tol());
  std::vector<Mat> fam;
  const int n = par->ambient_size();
  for (int j = 0; j < ns.cols(); ++j)
    fam.push_back(unflatten(s.span() * ns.col(j).head(s.dim()), n, n));
  if (fam.empty()) return AlgebraSubspace::zero(par);
  return AlgebraSubspace(par, fam, false);
}

/// Kernel of a linear map defined on the subspace s.
inline AlgebraSubspace kernel_in(const AlgebraSubspace& s,
                                 const std::function<Vec(const Mat&)>& lmap) {
  const auto* par = s.parent();
  if (s.dim() == 0) return AlgebraSubspace::zero(par);
  std::vector<Vec> cols;
  cols.reserve(s.basis().size());
  for (const auto& b : s.basis()) cols.push_back(lmap(b));
  Mat a(cols.front().size(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) a.col(static_cast<Eigen::Index>(j)) = cols[j];
  const Mat ns = nullspace(a, par->tol());
  std::vector<Mat> fam;
  const int n = par->ambient_size();
  for (int j = 0; j < ns.cols(); ++j)
    fam.push_back(unflatten(s.span() * ns.col(j), n, n));
  if (fam.empty()) return AlgebraSubspace::zero(par);
  return AlgebraSubspace(par, fam, false);
}

inline AlgebraSubspace centralizer_in(const AlgebraSubspace& s, const Mat& x) {
  if (!s.parent()->contains(x))
    throw std::invalid_argument("centralizer_in: element outside parent span");
  return kernel_in(s, [&x](const Mat& y) { return flatten(bracket(x, y)); });
}

inline double flatness_residual(const AlgebraSubspace& s) {
  double worst = 0.0;
  for (std::size_t i = 0; i < s.basis().size(); ++i)
    for (std::size_t j = i + 1; j < s.basis().size(); ++j)
      worst = std::max(worst, bracket(s.basis()[i], s.basis()[j]).norm());
  return worst;
}

inline bool is_abelian(const AlgebraSubspace& s) {
  return flatness_residual(s) < s.parent()->tol().rel_eps;
}

}  // namespace symact
