#pragma once

#include <cmath>

#include "symact/core.hpp"

namespace symact {

namespace detail {

// (13,13)-Pade numerator/denominator split exp(A) ~ (V+U)(V-U)^{-1}.
inline void pade13(const Mat& a, Mat& u, Mat& v) {
  static const double b[] = {64764752532480000., 32382376266240000., 7771770303897600.,
                             1187353796428800.,  129060195264000.,   10559470521600.,
                             670442572800.,      33522128640.,       1323241920.,
                             40840800.,          960960.,            16380.,
                             182.,               1.};
  const int n = static_cast<int>(a.rows());
  const Mat id = Mat::Identity(n, n);
  const Mat a2 = a * a;
  const Mat a4 = a2 * a2;
  const Mat a6 = a4 * a2;
  u = a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 +
           b[3] * a2 + b[1] * id);
  v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 +
      b[2] * a2 + b[0] * id;
}

}  // namespace detail

/// Matrix exponential, scaling-and-squaring with the order-13 Pade
/// approximant; squaring count from the infinity norm.
inline Mat matrix_exp(const Mat& x) {
  if (!x.allFinite()) throw std::invalid_argument("matrix_exp: non-finite input");
  const double theta13 = 5.371920351148152;
  const double nrm = x.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  Mat a = x;
  if (nrm > theta13) {
    squarings = static_cast<int>(std::ceil(std::log2(nrm / theta13)));
    a /= std::exp2(static_cast<double>(squarings));
  }
  Mat u, v;
  detail::pade13(a, u, v);
  Mat r = (v - u).partialPivLu().solve(v + u);
  for (int i = 0; i < squarings; ++i) r = r * r;
  return r;
}

}  // namespace symact
