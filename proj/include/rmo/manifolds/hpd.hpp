#pragma once

#include <cmath>
#include <limits>

#include "rmo/geometry/linalg.hpp"

namespace rmo::manifolds {

/// Hermitian positive definite matrices with the affine-invariant metric
/// <U, V>_X = Re trace(X^-1 U X^-1 V). The tangent space at every point is the
/// set of Hermitian matrices.
struct Hpd {
  [[nodiscard]] static double inner(const Matrix& x, const Matrix& u, const Matrix& v) {
    Eigen::LLT<Matrix> llt(x);
    const Matrix xu = llt.solve(u);
    const Matrix xv = llt.solve(v);
    return (xu.array() * xv.transpose().array()).real().sum();
  }

  [[nodiscard]] static Matrix project(const Matrix& /*x*/, const Matrix& a) { return linalg::herm(a); }

  [[nodiscard]] static Matrix egrad_to_rgrad(const Matrix& x, const Matrix& g) {
    return linalg::herm(x * linalg::herm(g) * x);
  }

  /// Second-order retraction X + V + V X^-1 V / 2.
  [[nodiscard]] static Matrix retract(const Matrix& x, const Matrix& v) {
    Eigen::LLT<Matrix> llt(x);
    Matrix y = linalg::herm(x + v + 0.5 * v * llt.solve(v));
    if (!y.allFinite() || !is_positive_definite(y)) {
      throw StepTooLongError("hpd retraction: result is not positive definite");
    }
    return y;
  }

  [[nodiscard]] static Matrix ehess_to_rhess(const Matrix& x, const Matrix& egrad,
                                             const Matrix& ehess, const Matrix& u) {
    const Matrix sg = linalg::herm(egrad);
    return linalg::herm(x * linalg::herm(ehess) * x) + linalg::herm(u * sg * x);
  }

  [[nodiscard]] static bool is_positive_definite(const Matrix& x) {
    Eigen::LLT<Matrix> llt(x);
    return llt.info() == Eigen::Success && linalg::min_eigenvalue(x) > 0.0;
  }

  /// Relative Hermitian defect; infinite if not positive definite.
  [[nodiscard]] static double feasibility_error(const Matrix& x) {
    if (!x.allFinite() || !is_positive_definite(x)) return std::numeric_limits<double>::infinity();
    return (x - x.adjoint()).norm() / x.norm();
  }

  [[nodiscard]] static double tangency_error(const Matrix& /*x*/, const Matrix& v) {
    const double nv = v.norm();
    if (nv == 0.0) return 0.0;
    return (v - v.adjoint()).norm() / nv;
  }

  template <class Rng>
  static Matrix random_point(Eigen::Index n, Rng& rng) {
    const Matrix a = linalg::complex_gaussian(n, n, rng);
    return linalg::herm(a.adjoint() * a) + 1e-3 * Matrix::Identity(n, n);
  }
};

/// Affine-invariant distance ||logm(A^-1/2 B A^-1/2)||_F, computed from the
/// generalized eigenvalues of (B, A).
inline double hpd_distance(const Matrix& a, const Matrix& b) {
  Eigen::LLT<Matrix> llt(a);
  if (llt.info() != Eigen::Success) throw InvalidArgumentError("hpd_distance: A is not positive definite");
  const Matrix li = llt.matrixL().solve(Matrix::Identity(a.rows(), a.cols()));
  Eigen::SelfAdjointEigenSolver<Matrix> es(linalg::herm(li * b * li.adjoint()), Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double lam = es.eigenvalues()(i);
    if (!(lam > 0.0)) throw InvalidArgumentError("hpd_distance: B is not positive definite");
    s += std::log(lam) * std::log(lam);
  }
  return std::sqrt(s);
}

}  // namespace rmo::manifolds
