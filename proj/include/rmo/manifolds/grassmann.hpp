#pragma once

#include <algorithm>
#include <cmath>

#include "rmo/manifolds/stiefel.hpp"

namespace rmo::manifolds {

/// Grassmann manifold of p-dimensional subspaces of C^n. A point is any
/// orthonormal basis of the subspace; tangents live in the horizontal space
/// X^H V = 0.
struct Grassmann {
  [[nodiscard]] static Matrix project(const Matrix& x, const Matrix& a) {
    return a - x * (x.adjoint() * a);
  }

  [[nodiscard]] static Matrix retract(const Matrix& x, const Matrix& v) {
    Matrix q;
    if (!linalg::thin_q_positive(x + v, q)) {
      throw DegenerateStepError("grassmann retraction: x + v is rank deficient");
    }
    return q;
  }

  [[nodiscard]] static Matrix ehess_to_rhess(const Matrix& x, const Matrix& egrad,
                                             const Matrix& ehess, const Matrix& u) {
    return project(x, ehess - u * (x.adjoint() * egrad));
  }

  [[nodiscard]] static double feasibility_error(const Matrix& x) {
    return Stiefel::feasibility_error(x);
  }

  [[nodiscard]] static double tangency_error(const Matrix& x, const Matrix& v) {
    const double nv = v.norm();
    if (nv == 0.0) return 0.0;
    return (x.adjoint() * v).norm() / nv;
  }

  template <class Rng>
  static Matrix random_point(Eigen::Index n, Eigen::Index p, Rng& rng) {
    return Stiefel::random_point(n, p, rng);
  }
};

/// A subspace given by one orthonormal basis representative.
struct GrassmannRep {
  Matrix basis;
};

/// Geodesic distance sqrt(sum theta_i^2), theta_i the principal angles.
inline double grassmann_dist(const GrassmannRep& a, const GrassmannRep& b) {
  if (a.basis.rows() != b.basis.rows() || a.basis.cols() != b.basis.cols()) {
    throw ShapeMismatchError("grassmann_dist: representatives have different n or p");
  }
  Eigen::JacobiSVD<Matrix> svd(a.basis.adjoint() * b.basis);
  double s = 0.0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    const double c = std::clamp(svd.singularValues()(i), 0.0, 1.0);
    const double theta = std::acos(c);
    s += theta * theta;
  }
  return std::sqrt(s);
}

}  // namespace rmo::manifolds
