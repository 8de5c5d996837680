#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "symact/liealg.hpp"
#include "symact/octonion.hpp"

namespace symact {

// ---------------------------------------------------------------------------
// Classical compact algebras. Complex and quaternionic entries are realified,
// so every catalog algebra consists of real skew-symmetric matrices.
// ---------------------------------------------------------------------------

namespace detail {

inline CMat cunit(int n, int i, int j, std::complex<double> v) {
  CMat m = CMat::Zero(n, n);
  m(i, j) = v;
  return m;
}

inline std::vector<CMat> u_complex_basis(int n) {
  const std::complex<double> I(0, 1);
  std::vector<CMat> b;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      b.push_back(cunit(n, i, j, 1) - cunit(n, j, i, 1));
      b.push_back(cunit(n, i, j, I) + cunit(n, j, i, I));
    }
  for (int k = 0; k < n; ++k) b.push_back(cunit(n, k, k, I));
  return b;
}

inline std::vector<CMat> su_complex_basis(int n) {
  const std::complex<double> I(0, 1);
  std::vector<CMat> b;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      b.push_back(cunit(n, i, j, 1) - cunit(n, j, i, 1));
      b.push_back(cunit(n, i, j, I) + cunit(n, j, i, I));
    }
  for (int k = 0; k + 1 < n; ++k)
    b.push_back(cunit(n, k, k, I) - cunit(n, k + 1, k + 1, I));
  return b;
}

/// sp(n) in its complex 2n x 2n form [[A, B], [-conj(B), conj(A)]],
/// A skew-Hermitian, B symmetric.
inline std::vector<CMat> sp_complex_basis(int n) {
  std::vector<CMat> b;
  for (const auto& a : u_complex_basis(n)) {
    CMat m = CMat::Zero(2 * n, 2 * n);
    m.topLeftCorner(n, n) = a;
    m.bottomRightCorner(n, n) = a.conjugate();
    b.push_back(m);
  }
  const std::complex<double> I(0, 1);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int s = 0; s < 2; ++s) {
        CMat sym = CMat::Zero(n, n);
        const std::complex<double> v = s == 0 ? std::complex<double>(1) : I;
        sym(i, j) += v;
        sym(j, i) += v;
        CMat m = CMat::Zero(2 * n, 2 * n);
        m.topRightCorner(n, n) = sym;
        m.bottomLeftCorner(n, n) = -sym.conjugate();
        b.push_back(m);
      }
  return b;
}

inline std::vector<Mat> realify_all(const std::vector<CMat>& fam) {
  std::vector<Mat> r;
  r.reserve(fam.size());
  for (const auto& m : fam) r.push_back(realify(m));
  return r;
}

// Quaternion multiplication matrices on coordinates (1, i, j, k).
inline Mat quat_left(double a, double b, double c, double d) {
  Mat m(4, 4);
  m << a, -b, -c, -d, b, a, -d, c, c, d, a, -b, d, -c, b, a;
  return m;
}

inline Mat quat_right(double a, double b, double c, double d) {
  Mat m(4, 4);
  m << a, -b, -c, -d, b, a, d, -c, c, -d, a, b, d, c, -b, a;
  return m;
}

/// Place `block` into an N x N zero matrix at (r, c).
inline Mat place(int N, int r, int c, const Mat& block) {
  Mat m = Mat::Zero(N, N);
  m.block(r, c, block.rows(), block.cols()) = block;
  return m;
}

}  // namespace detail

inline std::vector<Mat> so_basis(int n) {
  std::vector<Mat> b;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Mat m = Mat::Zero(n, n);
      m(i, j) = 1;
      m(j, i) = -1;
      b.push_back(m);
    }
  return b;
}

/// so(k) block embedded in so(N) on coordinates [offset, offset + k).
inline std::vector<Mat> so_block_basis(int N, int offset, int k) {
  std::vector<Mat> b;
  for (const auto& m : so_basis(k)) b.push_back(detail::place(N, offset, offset, m));
  return b;
}

inline std::vector<Mat> u_realified_basis(int n) {
  return detail::realify_all(detail::u_complex_basis(n));
}

inline std::vector<Mat> su_realified_basis(int n) {
  return detail::realify_all(detail::su_complex_basis(n));
}

inline std::vector<Mat> sp_realified_basis(int n) {
  return detail::realify_all(detail::sp_complex_basis(n));
}

/// s(u(p) x u(q)) inside realified su(p+q).
inline std::vector<Mat> s_u_u_realified_basis(int p, int q) {
  const int n = p + q;
  const std::complex<double> I(0, 1);
  std::vector<CMat> b;
  auto block = [&](int off, int k) {
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        b.push_back(detail::cunit(n, off + i, off + j, 1) - detail::cunit(n, off + j, off + i, 1));
        b.push_back(detail::cunit(n, off + i, off + j, I) + detail::cunit(n, off + j, off + i, I));
      }
    for (int k2 = 0; k2 + 1 < k; ++k2)
      b.push_back(detail::cunit(n, off + k2, off + k2, I) - detail::cunit(n, off + k2 + 1, off + k2 + 1, I));
  };
  block(0, p);
  block(p, q);
  // traceless mix of the two block centers
  CMat m = CMat::Zero(n, n);
  for (int i = 0; i < p; ++i) m(i, i) = I * double(q);
  for (int i = p; i < n; ++i) m(i, i) = -I * double(p);
  b.push_back(m);
  return detail::realify_all(b);
}

/// sp(n) acting on H^n = R^{4n} by quaternionic matrices (left action).
inline std::vector<Mat> sp_quaternionic_basis(int n) {
  const int N = 4 * n;
  std::vector<Mat> b;
  const double q1[4] = {1, 0, 0, 0};
  const double qi[4] = {0, 1, 0, 0};
  const double qj[4] = {0, 0, 1, 0};
  const double qk[4] = {0, 0, 0, 1};
  auto L = [](const double q[4]) { return detail::quat_left(q[0], q[1], q[2], q[3]); };
  for (int i = 0; i < n; ++i)
    for (const double* q : {qi, qj, qk}) b.push_back(detail::place(N, 4 * i, 4 * i, L(q)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (const double* q : {q1, qi, qj, qk}) {
        Mat m = Mat::Zero(N, N);
        const Mat lq = L(q);
        m.block(4 * i, 4 * j, 4, 4) = lq;
        // conjugate-negate for skew-Hermitian quaternionic matrix
        m.block(4 * j, 4 * i, 4, 4) = -lq.transpose();
        b.push_back(m);
      }
  return b;
}

/// Right scalar multiplication by Im H on H^n, commuting with sp(n).
inline std::vector<Mat> sp1_right_basis(int n) {
  const int N = 4 * n;
  std::vector<Mat> b;
  for (int u = 1; u <= 3; ++u) {
    double q[4] = {0, 0, 0, 0};
    q[u] = 1;
    Mat m = Mat::Zero(N, N);
    for (int i = 0; i < n; ++i)
      m.block(4 * i, 4 * i, 4, 4) = detail::quat_right(q[0], q[1], q[2], q[3]);
    b.push_back(m);
  }
  return b;
}

inline int classical_dim(const std::string& family, int n) {
  if (family == "so") return n * (n - 1) / 2;
  if (family == "su") return n * n - 1;
  if (family == "sp") return n * (2 * n + 1);
  if (family == "u") return n * n;
  throw std::invalid_argument("classical_dim: unknown family " + family);
}

inline std::shared_ptr<MatrixLieAlgebra> build_classical(const std::string& family, int n,
                                                         const Tolerance& tol = {}) {
  if (n < 1 || (family == "so" && n < 2))
    throw std::invalid_argument("build_classical: size too small");
  std::vector<Mat> b;
  int ambient = 0;
  if (family == "so") {
    b = so_basis(n);
    ambient = n;
  } else if (family == "su") {
    b = su_realified_basis(n);
    ambient = 2 * n;
  } else if (family == "u") {
    b = u_realified_basis(n);
    ambient = 2 * n;
  } else if (family == "sp") {
    b = sp_realified_basis(n);
    ambient = 4 * n;
  } else {
    throw std::invalid_argument("build_classical: unknown family " + family);
  }
  return std::make_shared<MatrixLieAlgebra>(ambient, std::move(b), tol);
}

// ---------------------------------------------------------------------------
// Octonion-derived constructions: g2, spin(7), spin(9), triality.
// ---------------------------------------------------------------------------

/// Derivations of the octonions, as 7x7 matrices on Im O = span(e1..e7):
/// kernel of D -> D(e_i e_j) - D(e_i) e_j - e_i D(e_j).
inline std::vector<Mat> g2_basis() {
  const auto& oct = octonions();
  const auto so7 = so_basis(7);
  auto extend = [](const Mat& d7) {
    Mat d8 = Mat::Zero(8, 8);
    d8.block(1, 1, 7, 7) = d7;
    return d8;
  };
  const int pairs = 21;
  Mat sys(8 * pairs, static_cast<int>(so7.size()));
  for (std::size_t a = 0; a < so7.size(); ++a) {
    const Mat d8 = extend(so7[a]);
    int row = 0;
    for (int i = 1; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j) {
        Vec ei = Vec::Zero(8), ej = Vec::Zero(8);
        ei(i) = 1;
        ej(j) = 1;
        const Vec res = d8 * oct.multiply(ei, ej) - oct.multiply(d8 * ei, ej) -
                        oct.multiply(ei, d8 * ej);
        sys.block(8 * row, static_cast<int>(a), 8, 1) = res;
        ++row;
      }
  }
  const Mat ker = nullspace(sys);
  std::vector<Mat> b;
  for (int c = 0; c < ker.cols(); ++c) {
    Mat d7 = Mat::Zero(7, 7);
    for (std::size_t a = 0; a < so7.size(); ++a) d7 += ker(static_cast<int>(a), c) * so7[a];
    b.push_back(d7);
  }
  return b;
}

/// spin(7) in so(8): span of lambda_u lambda_v for orthogonal imaginary
/// octonion units, lambda the left multiplication on R^8 = O.
inline std::vector<Mat> spin7_basis() {
  const auto& oct = octonions();
  std::vector<Mat> fam;
  for (int i = 1; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      fam.push_back(oct.left_mult_unit(i) * oct.left_mult_unit(j));
  return fam;
}

/// Nine anticommuting symmetric involutions on R^16 = O + O;
/// P_i P_j + P_j P_i = 2 delta_ij, the Clifford generators behind spin(9).
inline std::vector<Mat> spin9_pins() {
  const auto& oct = octonions();
  std::vector<Mat> ps;
  for (int i = 0; i < 8; ++i) {
    Mat p = Mat::Zero(16, 16);
    const Mat li = oct.left_mult_unit(i);
    Vec ei = Vec::Zero(8);
    ei(i) = 1;
    const Mat lconj = oct.left_mult(oct.conjugate(ei));
    p.topRightCorner(8, 8) = li;
    p.bottomLeftCorner(8, 8) = lconj;
    ps.push_back(p);
  }
  Mat p8 = Mat::Identity(16, 16);
  p8.bottomRightCorner(8, 8) *= -1.0;
  ps.push_back(p8);
  return ps;
}

/// spin(9) in so(16): span of P_i P_j / 2 for i < j.
inline std::vector<Mat> spin9_basis() {
  const auto ps = spin9_pins();
  std::vector<Mat> b;
  for (int i = 0; i < 9; ++i)
    for (int j = i + 1; j < 9; ++j) b.push_back(0.5 * ps[i] * ps[j]);
  return b;
}

/// The so(9) vector-representation partner of spin9_basis()[idx(i,j)]:
/// [P_iP_j/2, P_k] = delta_jk P_i - delta_ik P_j, i.e. E_ij - E_ji on R^9.
inline std::vector<Mat> spin9_vector_partners() {
  std::vector<Mat> b;
  for (int i = 0; i < 9; ++i)
    for (int j = i + 1; j < 9; ++j) {
      Mat m = Mat::Zero(9, 9);
      m(i, j) = 1;
      m(j, i) = -1;
      b.push_back(m);
    }
  return b;
}

/// Solves A(x y) = B(x) y + x C(y) for (B, C) in so(8) x so(8).
/// The solution exists and is unique for A in so(8); a large residual
/// signals a non-so(8) input.
class TrialitySolver {
 public:
  TrialitySolver() : so8_(so_basis(8)) {
    const auto& oct = octonions();
    // 8*8*8 equations, 28+28 unknowns
    Mat sys(512, 56);
    for (int a = 0; a < 56; ++a) {
      const Mat& b = so8_[a % 28];
      int row = 0;
      for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
          Vec ei = Vec::Zero(8), ej = Vec::Zero(8);
          ei(i) = 1;
          ej(j) = 1;
          const Vec term = a < 28 ? oct.multiply(b * ei, ej) : oct.multiply(ei, b * ej);
          sys.block(row, a, 8, 1) = term;
          row += 8;
        }
    }
    qr_.compute(sys);
    sys_ = sys;
  }

  std::pair<Mat, Mat> images(const Mat& a, const Tolerance& tol = {}) const {
    const auto& oct = octonions();
    Vec rhs(512);
    int row = 0;
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        Vec ei = Vec::Zero(8), ej = Vec::Zero(8);
        ei(i) = 1;
        ej(j) = 1;
        rhs.segment(row, 8) = a * oct.multiply(ei, ej);
        row += 8;
      }
    const Vec x = qr_.solve(rhs);
    const double res = (sys_ * x - rhs).norm();
    if (res > tol.rel_eps * std::max(1.0, rhs.norm()))
      throw std::runtime_error("triality_images: inconsistent system (input not in so(8))");
    Mat b = Mat::Zero(8, 8), c = Mat::Zero(8, 8);
    for (int k = 0; k < 28; ++k) {
      b += x(k) * so8_[k];
      c += x(28 + k) * so8_[k];
    }
    return {b, c};
  }

 private:
  std::vector<Mat> so8_;
  Mat sys_;
  Eigen::ColPivHouseholderQR<Mat> qr_;
};

inline std::pair<Mat, Mat> triality_images(const Mat& a, const Tolerance& tol = {}) {
  static const TrialitySolver solver;
  return solver.images(a, tol);
}

// ---------------------------------------------------------------------------
// Cartan involutions for the seven classical symmetric-pair families.
// ---------------------------------------------------------------------------

/// A linear involutive bracket-automorphism on an ambient matrix space.
struct Involution {
  std::string name;
  std::function<Mat(const Mat&)> apply;
};

/// family in {AI, AII, AIII, BDI, DIII, CI, CII}. Parameters:
///   AI n    : su(n) realified (2n x 2n), fixed set so(n)
///   AII n   : su(2n) realified (4n x 4n), fixed set sp(n)
///   AIII p q: su(p+q) realified, fixed set s(u(p) x u(q))
///   BDI p q : so(p+q), fixed set so(p) x so(q)
///   DIII n  : so(2n), fixed set u(n)
///   CI n    : sp(n) realified (4n x 4n), fixed set u(n)
///   CII p q : sp(p+q) realified, fixed set sp(p) x sp(q)
inline Involution build_involution(const std::string& family, int a, int b = 0) {
  if (family == "AI") {
    const int n = a;
    Mat s = Mat::Identity(2 * n, 2 * n);
    s.bottomRightCorner(n, n) *= -1.0;
    return {"AI(" + std::to_string(n) + ")", [s](const Mat& x) { return Mat(s * x * s); }};
  }
  if (family == "AII") {
    const int n = a;
    CMat j = CMat::Zero(2 * n, 2 * n);
    j.topRightCorner(n, n) = CMat::Identity(n, n);
    j.bottomLeftCorner(n, n) = -CMat::Identity(n, n);
    const Mat jr = realify(j);
    Mat s = Mat::Identity(4 * n, 4 * n);
    s.bottomRightCorner(2 * n, 2 * n) *= -1.0;
    return {"AII(" + std::to_string(n) + ")",
            [jr, s](const Mat& x) { return Mat(jr * s * x * s * jr.transpose()); }};
  }
  if (family == "AIII") {
    const int p = a, q = b, n = p + q;
    Vec d(2 * n);
    for (int i = 0; i < n; ++i) d(i) = d(n + i) = i < p ? 1.0 : -1.0;
    const Mat dm = d.asDiagonal();
    return {"AIII(" + std::to_string(p) + "," + std::to_string(q) + ")",
            [dm](const Mat& x) { return Mat(dm * x * dm); }};
  }
  if (family == "BDI") {
    const int p = a, q = b, n = p + q;
    Vec d(n);
    for (int i = 0; i < n; ++i) d(i) = i < p ? 1.0 : -1.0;
    const Mat dm = d.asDiagonal();
    return {"BDI(" + std::to_string(p) + "," + std::to_string(q) + ")",
            [dm](const Mat& x) { return Mat(dm * x * dm); }};
  }
  if (family == "DIII") {
    const int n = a;
    Mat j = Mat::Zero(2 * n, 2 * n);
    j.topRightCorner(n, n) = Mat::Identity(n, n);
    j.bottomLeftCorner(n, n) = -Mat::Identity(n, n);
    return {"DIII(" + std::to_string(n) + ")",
            [j](const Mat& x) { return Mat(j * x * j.transpose()); }};
  }
  if (family == "CI") {
    const int n = a;
    CMat d = CMat::Zero(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
      d(i, i) = std::complex<double>(0, 1);
      d(n + i, n + i) = std::complex<double>(0, -1);
    }
    const Mat dr = realify(d);
    return {"CI(" + std::to_string(n) + ")",
            [dr](const Mat& x) { return Mat(dr * x * dr.transpose()); }};
  }
  if (family == "CII") {
    const int p = a, q = b, n = p + q;
    Vec d(4 * n);
    for (int h = 0; h < 4; ++h)
      for (int i = 0; i < n; ++i) d(h * n + i) = (i % n) < p ? 1.0 : -1.0;
    const Mat dm = d.asDiagonal();
    return {"CII(" + std::to_string(p) + "," + std::to_string(q) + ")",
            [dm](const Mat& x) { return Mat(dm * x * dm); }};
  }
  throw std::invalid_argument("build_involution: unknown family " + family);
}

/// Outer automorphism X -> conj(X) of realified su(n).
inline Involution complex_conjugation(int n) {
  Mat s = Mat::Identity(2 * n, 2 * n);
  s.bottomRightCorner(n, n) *= -1.0;
  return {"conj", [s](const Mat& x) { return Mat(s * x * s); }};
}

inline AlgebraSubspace fixed_subspace(const MatrixLieAlgebra* algebra, const Involution& inv) {
  std::vector<Mat> fam;
  for (const auto& bmat : algebra->basis()) {
    const Mat f = 0.5 * (bmat + inv.apply(bmat));
    if (f.norm() > algebra->tol().abs_eps) fam.push_back(f);
  }
  if (fam.empty()) return AlgebraSubspace::zero(algebra);
  return AlgebraSubspace(algebra, fam, false);
}

inline AlgebraSubspace minus_subspace(const MatrixLieAlgebra* algebra, const Involution& inv) {
  std::vector<Mat> fam;
  for (const auto& bmat : algebra->basis()) {
    const Mat f = 0.5 * (bmat - inv.apply(bmat));
    if (f.norm() > algebra->tol().abs_eps) fam.push_back(f);
  }
  if (fam.empty()) return AlgebraSubspace::zero(algebra);
  return AlgebraSubspace(algebra, fam, false);
}

// ---------------------------------------------------------------------------
// Named embeddings (Table 1 and section 9 material).
// ---------------------------------------------------------------------------

struct EmbeddingSpec {
  std::string name;
  std::shared_ptr<MatrixLieAlgebra> ambient;
  AlgebraSubspace image;
};

namespace detail {

inline AlgebraSubspace subspace_of(const MatrixLieAlgebra* par, const std::vector<Mat>& fam) {
  return AlgebraSubspace(par, fam, false);
}

/// g2 as a subspace of a 7x7 ambient (so(7) or the g2 algebra itself).
inline std::vector<Mat> g2_cached() {
  static const std::vector<Mat> b = g2_basis();
  return b;
}

inline std::vector<Mat> kernel_family(const std::vector<Mat>& fam,
                                      const std::function<Vec(const Mat&)>& lmap) {
  Mat sys(lmap(fam.front()).size(), static_cast<Eigen::Index>(fam.size()));
  for (std::size_t a = 0; a < fam.size(); ++a) sys.col(static_cast<Eigen::Index>(a)) = lmap(fam[a]);
  const Mat ker = nullspace(sys);
  std::vector<Mat> out;
  for (int c = 0; c < ker.cols(); ++c) {
    Mat m = Mat::Zero(fam.front().rows(), fam.front().cols());
    for (std::size_t a = 0; a < fam.size(); ++a) m += ker(static_cast<Eigen::Index>(a), c) * fam[a];
    out.push_back(m);
  }
  return out;
}

}  // namespace detail

/// Basis families for the named special embeddings, expressed as matrices of
/// the ambient size. Separate from EmbeddingSpec so callers can share one
/// ambient algebra across several embeddings.
inline std::vector<Mat> embedding_family(const std::string& name) {
  auto starts = [&](const std::string& p) { return name.rfind(p, 0) == 0; };
  if (name == "g2_in_so7") return detail::g2_cached();
  if (name == "spin7_in_so8") return spin7_basis();
  if (name == "spin9_in_so16") return spin9_basis();
  if (name == "su3_in_g2") {
    // isotropy of the G2-action on S^6: derivations annihilating e1
    auto lmap = [](const Mat& d) {
      Vec e1 = Vec::Zero(7);
      e1(0) = 1.0;
      return Vec(d * e1);
    };
    return detail::kernel_family(detail::g2_cached(), lmap);
  }
  if (name == "so4_in_g2") {
    // derivations preserving the quaternion subalgebra span(e0,e1,e2,e4):
    // components of D(e_a), a in {1,2,4}, outside span(e1,e2,e4)
    auto lmap = [](const Mat& d) {
      Vec out(12);
      int idx = 0;
      for (int unit : {0, 1, 3}) {  // columns of e1, e2, e4 in Im O coordinates
        const Vec img = d.col(unit);
        for (int r : {2, 4, 5, 6}) out(idx++) = img(r);  // e3, e5, e6, e7 rows
      }
      return out;
    };
    return detail::kernel_family(detail::g2_cached(), lmap);
  }
  // parametrized families: uN_in_so2N, suN_in_so2N, spN_in_so4N, spNsp1_in_so4N,
  // spNu1_in_so4N
  int n = 0;
  if (std::sscanf(name.c_str(), "u%d_in_so%*d", &n) == 1 && starts("u"))
    return u_realified_basis(n);
  if (std::sscanf(name.c_str(), "su%d_in_so%*d", &n) == 1 && starts("su"))
    return su_realified_basis(n);
  if (std::sscanf(name.c_str(), "sp%dsp1_in_so%*d", &n) == 1 && name.find("sp1_in") != std::string::npos) {
    auto fam = sp_quaternionic_basis(n);
    for (auto& m : sp1_right_basis(n)) fam.push_back(m);
    return fam;
  }
  if (std::sscanf(name.c_str(), "sp%du1_in_so%*d", &n) == 1 && name.find("u1_in") != std::string::npos) {
    auto fam = sp_quaternionic_basis(n);
    fam.push_back(sp1_right_basis(n)[0]);
    return fam;
  }
  if (std::sscanf(name.c_str(), "sp%d_in_so%*d", &n) == 1 && starts("sp"))
    return sp_quaternionic_basis(n);
  int k = 0, m = 0;
  if (std::sscanf(name.c_str(), "so%dxso%d_in_so%*d", &k, &m) == 2) {
    auto fam = so_block_basis(k + m, 0, k);
    for (auto& mm : so_block_basis(k + m, k, m)) fam.push_back(mm);
    return fam;
  }
  throw std::invalid_argument("embedding_family: unknown name " + name);
}

inline int embedding_ambient_size(const std::string& name) {
  const auto fam = embedding_family(name);
  return static_cast<int>(fam.front().rows());
}

inline EmbeddingSpec build_embedding(const std::string& name, const Tolerance& tol = {}) {
  const auto fam = embedding_family(name);
  const int n = static_cast<int>(fam.front().rows());
  std::shared_ptr<MatrixLieAlgebra> ambient;
  if (name == "su3_in_g2" || name == "so4_in_g2")
    ambient = std::make_shared<MatrixLieAlgebra>(7, detail::g2_cached(), tol);
  else
    ambient = std::make_shared<MatrixLieAlgebra>(n, so_basis(n), tol);
  AlgebraSubspace image(ambient.get(), fam, false);
  return {name, ambient, std::move(image)};
}

/// The stable public identifiers of the special-embedding catalog.
inline std::vector<std::string> embedding_catalog_names() {
  return {"u4_in_so8",      "su4_in_so8",    "sp2sp1_in_so8", "sp2u1_in_so8",
          "sp2_in_so8",     "so3xso5_in_so8", "g2_in_so7",     "spin7_in_so8",
          "spin9_in_so16",  "su3_in_g2",     "so4_in_g2"};
}

}  // namespace symact
