#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace symact {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using CMat = Eigen::MatrixXcd;

/// Rank / zero-test cutoffs used by every subspace decision in the library.
struct Tolerance {
  double rel_eps = 1e-8;   // relative singular-value cutoff
  double abs_eps = 1e-10;  // absolute zero test

  Tolerance() = default;
  Tolerance(double rel, double abs) : rel_eps(rel), abs_eps(abs) {
    if (!(0.0 < abs_eps && abs_eps <= rel_eps && rel_eps < 1.0))
      throw std::invalid_argument("Tolerance: need 0 < abs_eps <= rel_eps < 1");
  }
};

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d4a08685ebca6bULL;
  return x ^ (x >> 31);
}
}  // namespace detail

/// Splittable, explicitly seeded generator. Reports record the root seed;
/// split() derives an independent child stream so parallel analyses never
/// share generator state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), eng_(detail::splitmix64(seed)) {}

  std::uint64_t seed() const { return seed_; }

  Rng split(std::uint64_t stream) const {
    return Rng(detail::splitmix64(seed_ ^ detail::splitmix64(stream + 0x51ed2701)));
  }

  double gauss() { return normal_(eng_); }

  /// n x n matrix with independent standard normal entries.
  Mat gauss_matrix(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = gauss();
    return m;
  }

  Vec gauss_vector(int n) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v(i) = gauss();
    return v;
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 eng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

inline Vec flatten(const Mat& m) {
  return Eigen::Map<const Vec>(m.data(), m.size());
}

inline Mat unflatten(const Vec& v, int rows, int cols) {
  return Eigen::Map<const Mat>(v.data(), rows, cols);
}

/// Realify a complex matrix as [[X, -Y], [Y, X]].
inline Mat realify(const CMat& a) {
  const int n = static_cast<int>(a.rows());
  const int m = static_cast<int>(a.cols());
  Mat r(2 * n, 2 * m);
  r.topLeftCorner(n, m) = a.real();
  r.topRightCorner(n, m) = -a.imag();
  r.bottomLeftCorner(n, m) = a.imag();
  r.bottomRightCorner(n, m) = a.real();
  return r;
}

}  // namespace symact
