#pragma once

#include <cmath>

#include "rmo/geometry/linalg.hpp"

namespace rmo::manifolds {

/// Complex sphere {x in C^n : ||x|| = r}. Also used column-by-column for the
/// oblique manifold with r = 1.
struct Sphere {
  double radius = 1.0;

  [[nodiscard]] Matrix project(const Matrix& x, const Matrix& a) const {
    const double c = x.cwiseProduct(a.conjugate()).real().sum() / (radius * radius);
    return a - c * x;
  }

  [[nodiscard]] Matrix retract(const Matrix& x, const Matrix& v) const {
    Matrix y = x + v;
    const double n = y.norm();
    if (!(n > 1e-300) || !std::isfinite(n)) throw DegenerateStepError("sphere retraction: x + v = 0");
    return (radius / n) * y;
  }

  [[nodiscard]] Matrix ehess_to_rhess(const Matrix& x, const Matrix& egrad, const Matrix& ehess,
                                      const Matrix& u) const {
    const double c = x.cwiseProduct(egrad.conjugate()).real().sum() / (radius * radius);
    return project(x, ehess) - c * u;
  }

  [[nodiscard]] double feasibility_error(const Matrix& x) const {
    return std::abs(x.norm() - radius) / radius;
  }

  [[nodiscard]] double tangency_error(const Matrix& x, const Matrix& v) const {
    const double nv = v.norm();
    if (nv == 0.0) return 0.0;
    return std::abs(x.cwiseProduct(v.conjugate()).real().sum()) / (radius * nv);
  }

  template <class Rng>
  Matrix random_point(Eigen::Index n, Eigen::Index cols, Rng& rng) const {
    Matrix g = linalg::complex_gaussian(n, cols, rng);
    return (radius / g.norm()) * g;
  }
};

}  // namespace rmo::manifolds
