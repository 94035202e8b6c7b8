#pragma once

#include <algorithm>

#include "rmo/manifolds/sphere.hpp"

namespace rmo::manifolds {

/// Oblique manifold: n x p matrices with unit-norm columns, i.e. a product of
/// unit spheres handled column by column.
struct Oblique {
  Sphere column{1.0};

  [[nodiscard]] Matrix project(const Matrix& x, const Matrix& a) const {
    Matrix out(a.rows(), a.cols());
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.col(j) = column.project(x.col(j), a.col(j));
    return out;
  }

  [[nodiscard]] Matrix retract(const Matrix& x, const Matrix& v) const {
    Matrix out(x.rows(), x.cols());
    for (Eigen::Index j = 0; j < x.cols(); ++j) out.col(j) = column.retract(x.col(j), v.col(j));
    return out;
  }

  [[nodiscard]] Matrix ehess_to_rhess(const Matrix& x, const Matrix& egrad, const Matrix& ehess,
                                      const Matrix& u) const {
    Matrix out(x.rows(), x.cols());
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      out.col(j) = column.ehess_to_rhess(x.col(j), egrad.col(j), ehess.col(j), u.col(j));
    }
    return out;
  }

  [[nodiscard]] double feasibility_error(const Matrix& x) const {
    double e = 0.0;
    for (Eigen::Index j = 0; j < x.cols(); ++j) e = std::max(e, column.feasibility_error(x.col(j)));
    return e;
  }

  [[nodiscard]] double tangency_error(const Matrix& x, const Matrix& v) const {
    double e = 0.0;
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      e = std::max(e, column.tangency_error(x.col(j), v.col(j)));
    }
    return e;
  }

  template <class Rng>
  Matrix random_point(Eigen::Index n, Eigen::Index p, Rng& rng) const {
    Matrix g = linalg::complex_gaussian(n, p, rng);
    for (Eigen::Index j = 0; j < p; ++j) g.col(j).normalize();
    return g;
  }
};

}  // namespace rmo::manifolds
