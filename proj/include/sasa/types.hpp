#pragma once

#include <complex>
#include <Eigen/Dense>

namespace sasa {

using cplx = std::complex<double>;
using Mat3 = Eigen::Matrix3cd;
using Vec3 = Eigen::Vector3cd;
using MatX = Eigen::MatrixXcd;
using VecX = Eigen::VectorXcd;

inline constexpr cplx I{0.0, 1.0};
inline constexpr double PI = 3.14159265358979323846;

/// diag(1, 1, -1), the grading that splits the 3x3 algebra into
/// oscillatory off-blocks and neutral diagonal blocks.
inline const Mat3& lambda_mat() {
  static const Mat3 m = (Mat3() << 1, 0, 0, 0, 1, 0, 0, 0, -1).finished();
  return m;
}

/// Permutation that swaps the first two rows/columns; the conjugation
/// partner of complex conjugation in the k -> -conj(k) symmetry.
inline const Mat3& swap12_mat() {
  static const Mat3 m = (Mat3() << 0, 1, 0, 1, 0, 0, 0, 0, 1).finished();
  return m;
}

/// A * conj(M) * A with A = swap12_mat().
inline Mat3 swap_conj(const Mat3& m) {
  return swap12_mat() * m.conjugate() * swap12_mat();
}

/// e^{c ad_Lambda} M, i.e. e^{c Lambda} M e^{-c Lambda}.  Entry (i,j) is
/// scaled by exp(c (lambda_i - lambda_j)); only the third row/column move.
inline Mat3 conj_exp_lambda(cplx c, const Mat3& m) {
  Mat3 r = m;
  const cplx ep = std::exp(2.0 * c), em = std::exp(-2.0 * c);
  r(0, 2) *= ep;
  r(1, 2) *= ep;
  r(2, 0) *= em;
  r(2, 1) *= em;
  return r;
}

inline double max_abs(const Mat3& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace sasa
