#pragma once

#include <cmath>

#include "rmo/geometry/linalg.hpp"

namespace rmo::manifolds {

/// Complex circle manifold: vectors with unit-modulus entries (constant
/// modulus constraint).
struct Circle {
  [[nodiscard]] static Matrix project(const Matrix& x, const Matrix& a) {
    const Eigen::ArrayXXd radial = (a.array() * x.array().conjugate()).real();
    return (a.array() - radial.cast<Complex>() * x.array()).matrix();
  }

  [[nodiscard]] static Matrix retract(const Matrix& x, const Matrix& v) {
    Matrix y = x + v;
    for (Eigen::Index i = 0; i < y.size(); ++i) {
      const double m = std::abs(y(i));
      if (!(m > 1e-300) || !std::isfinite(m)) {
        throw DegenerateStepError("circle retraction: step annihilates an entry");
      }
      y(i) /= m;
    }
    return y;
  }

  [[nodiscard]] static Matrix ehess_to_rhess(const Matrix& x, const Matrix& egrad,
                                             const Matrix& ehess, const Matrix& u) {
    const Eigen::ArrayXXd radial = (egrad.array() * x.array().conjugate()).real();
    const Matrix corrected = (ehess.array() - radial.cast<Complex>() * u.array()).matrix();
    return project(x, corrected);
  }

  [[nodiscard]] static double feasibility_error(const Matrix& x) {
    return (x.array().abs() - 1.0).abs().maxCoeff();
  }

  [[nodiscard]] static double tangency_error(const Matrix& x, const Matrix& v) {
    const double nv = v.cwiseAbs().maxCoeff();
    if (nv == 0.0) return 0.0;
    return (v.array() * x.array().conjugate()).real().abs().maxCoeff() / nv;
  }

  template <class Rng>
  static Matrix random_point(Eigen::Index n, Rng& rng) {
    Matrix g = linalg::complex_gaussian(n, 1, rng);
    for (Eigen::Index i = 0; i < n; ++i) g(i) /= std::abs(g(i));
    return g;
  }
};

}  // namespace rmo::manifolds
