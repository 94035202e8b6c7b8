#pragma once

#include <functional>
#include <string>

#include "rmo/geometry/ambient.hpp"
#include "rmo/geometry/point.hpp"

namespace rmo {

/// A smooth cost over ambient coordinates.
///
/// `euclidean_grad` follows the Wirtinger convention g = 2 df/d(conj x), so
/// the directional derivative along an ambient direction v is Re(g^H v).
/// `euclidean_hess_vec`, when set, returns the directional derivative of the
/// Euclidean gradient along v (same convention).
struct CostFunction {
  std::function<double(const Point&)> value;
  std::function<Ambient(const Point&)> euclidean_grad;
  std::function<Ambient(const Point&, const Ambient&)> euclidean_hess_vec;

  /// Set when euclidean_grad is itself a finite-difference approximation;
  /// gradient checks then apply the looser order threshold.
  bool fd_gradient = false;
  std::string name;

  [[nodiscard]] bool has_hessian() const { return static_cast<bool>(euclidean_hess_vec); }
};

}  // namespace rmo
