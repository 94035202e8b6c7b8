#pragma once

#include "rmo/geometry/linalg.hpp"

namespace rmo::manifolds {

/// Complex Stiefel manifold {X in C^{n x p} : X^H X = I} with the embedded
/// metric and the QR retraction.
struct Stiefel {
  [[nodiscard]] static Matrix project(const Matrix& x, const Matrix& a) {
    return a - x * linalg::herm(x.adjoint() * a);
  }

  [[nodiscard]] static Matrix retract(const Matrix& x, const Matrix& v) {
    Matrix q;
    if (!linalg::thin_q_positive(x + v, q)) {
      throw DegenerateStepError("stiefel retraction: x + v is rank deficient");
    }
    return q;
  }

  [[nodiscard]] static Matrix ehess_to_rhess(const Matrix& x, const Matrix& egrad,
                                             const Matrix& ehess, const Matrix& u) {
    return project(x, ehess - u * linalg::herm(x.adjoint() * egrad));
  }

  [[nodiscard]] static double feasibility_error(const Matrix& x) {
    return (x.adjoint() * x - Matrix::Identity(x.cols(), x.cols())).norm();
  }

  [[nodiscard]] static double tangency_error(const Matrix& x, const Matrix& v) {
    const double nv = v.norm();
    if (nv == 0.0) return 0.0;
    const Matrix s = x.adjoint() * v;
    return (s + s.adjoint()).norm() / nv;
  }

  template <class Rng>
  static Matrix random_point(Eigen::Index n, Eigen::Index p, Rng& rng) {
    Matrix q;
    while (!linalg::thin_q_positive(linalg::complex_gaussian(n, p, rng), q)) {
    }
    return q;
  }
};

}  // namespace rmo::manifolds
