#pragma once

#include <array>

#include "symact/core.hpp"

namespace symact {

/// Octonion structure constants in the standard basis e0..e7, e0 the unit.
/// Sign convention fixed once for the whole library: the Fano triples are
/// (1,2,4),(2,3,5),(3,4,6),(4,5,7),(5,6,1),(6,7,2),(7,1,3), each read
/// cyclically as e_a e_b = e_c.
class OctonionAlgebra {
 public:
  OctonionAlgebra() {
    for (auto& plane : c_)
      for (auto& row : plane) row.fill(0.0);
    // e0 two-sided unit
    for (int i = 0; i < 8; ++i) {
      c_[0][i][i] = 1.0;
      c_[i][0][i] = 1.0;
    }
    for (int i = 1; i < 8; ++i) c_[i][i][0] = -1.0;
    static const int triples[7][3] = {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7},
                                      {5, 6, 1}, {6, 7, 2}, {7, 1, 3}};
    for (const auto& t : triples) {
      const int a = t[0], b = t[1], c = t[2];
      set(a, b, c, 1.0);
      set(b, c, a, 1.0);
      set(c, a, b, 1.0);
    }
  }

  /// Structure constant of e_i e_j in the e_k coordinate.
  double c(int i, int j, int k) const { return c_[i][j][k]; }

  Vec multiply(const Vec& x, const Vec& y) const {
    Vec z = Vec::Zero(8);
    for (int i = 0; i < 8; ++i) {
      if (x(i) == 0.0) continue;
      for (int j = 0; j < 8; ++j) {
        if (y(j) == 0.0) continue;
        for (int k = 0; k < 8; ++k) z(k) += x(i) * y(j) * c_[i][j][k];
      }
    }
    return z;
  }

  Vec conjugate(const Vec& x) const {
    Vec y = -x;
    y(0) = x(0);
    return y;
  }

  /// 8x8 matrix of left multiplication y -> x y.
  Mat left_mult(const Vec& x) const {
    Mat m = Mat::Zero(8, 8);
    for (int j = 0; j < 8; ++j) {
      Vec e = Vec::Zero(8);
      e(j) = 1.0;
      m.col(j) = multiply(x, e);
    }
    return m;
  }

  Mat left_mult_unit(int i) const {
    Vec e = Vec::Zero(8);
    e(i) = 1.0;
    return left_mult(e);
  }

 private:
  void set(int a, int b, int c, double v) {
    c_[a][b][c] = v;
    c_[b][a][c] = -v;
  }

  std::array<std::array<std::array<double, 8>, 8>, 8> c_;
};

inline const OctonionAlgebra& octonions() {
  static const OctonionAlgebra o;
  return o;
}

}  // namespace symact
