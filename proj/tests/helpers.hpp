#pragma once

#include <initializer_list>

#include "rmo/geometry/manifold.hpp"

namespace rmo::test {

inline const Complex J{0.0, 1.0};

inline Matrix col(std::initializer_list<Complex> v) {
  Matrix m(static_cast<Eigen::Index>(v.size()), 1);
  Eigen::Index i = 0;
  for (const auto& c : v) m(i++) = c;
  return m;
}

inline Matrix diag(std::initializer_list<double> v) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(v.size()), static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double d : v) m(i, i) = d, ++i;
  return m;
}

inline Tangent tan_at(const Point& x, Matrix v) { return Tangent{Ambient(std::move(v)), x}; }

}  // namespace rmo::test
