#pragma once

#include <cmath>
#include <functional>
#include <random>

#include <Eigen/Dense>

#include "rmo/geometry/ambient.hpp"

namespace rmo::linalg {

/// Hermitian part (A + A^H) / 2.
inline Matrix herm(const Matrix& a) { return 0.5 * (a + a.adjoint()); }

/// Applies a scalar function to the eigenvalues of a Hermitian matrix.
inline Matrix hermitian_function(const Matrix& a, const std::function<double(double)>& fn) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm(a));
  RealVector lam = es.eigenvalues().unaryExpr(fn);
  return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().adjoint();
}

inline Matrix sqrtm_hpd(const Matrix& a) {
  return hermitian_function(a, [](double l) { return std::sqrt(l); });
}

inline Matrix inv_sqrtm_hpd(const Matrix& a) {
  return hermitian_function(a, [](double l) { return 1.0 / std::sqrt(l); });
}

inline Matrix logm_hpd(const Matrix& a) {
  return hermitian_function(a, [](double l) { return std::log(l); });
}

inline double min_eigenvalue(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm(a), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

/// Thin QR factor with real positive diagonal of R. Returns false when a
/// diagonal entry of R is numerically zero (rank-deficient input).
inline bool thin_q_positive(const Matrix& a, Matrix& q) {
  const Eigen::Index n = a.rows();
  const Eigen::Index p = a.cols();
  Eigen::HouseholderQR<Matrix> qr(a);
  q = qr.householderQ() * Matrix::Identity(n, p);
  const Matrix& r = qr.matrixQR();
  const double scale = std::max(a.norm(), 1e-300);
  for (Eigen::Index i = 0; i < p; ++i) {
    const Complex rii = r(i, i);
    const double mag = std::abs(rii);
    if (!(mag > 1e-13 * scale)) return false;
    q.col(i) *= rii / mag;
  }
  return true;
}

/// Standard complex Gaussian entries, E|z|^2 = 1.
template <class Rng>
Matrix complex_gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> nd(0.0, std::sqrt(0.5));
  Matrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = nd(rng);
      const double im = nd(rng);
      m(i, j) = Complex(re, im);
    }
  }
  return m;
}

/// Random Hermitian matrix (G + G^H) / 2 with complex Gaussian G.
template <class Rng>
Matrix random_hermitian(Eigen::Index n, Rng& rng) {
  return herm(complex_gaussian(n, n, rng));
}

}  // namespace rmo::linalg
