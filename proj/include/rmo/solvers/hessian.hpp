#pragma once

#include <cmath>
#include <limits>

#include "rmo/geometry/cost.hpp"
#include "rmo/geometry/manifold.hpp"

namespace rmo {

/// Riemannian gradient of `cost` at x.
inline Tangent riemannian_gradient(const CostFunction& cost, const Manifold& m, const Point& x) {
  return m.egrad_to_rgrad(x, cost.euclidean_grad(x));
}

/// Finite-difference Riemannian Hessian-vector product
///   ||v|| * (T_{y->x} grad f(y) - grad f(x)) / h,  y = R(x, h v/||v||),
/// with h = sqrt(eps) * (1 + ||x||). `grad_x` is the Riemannian gradient at x.
inline Tangent hessian_vec_fd(const CostFunction& cost, const Manifold& m, const Point& x,
                              const Tangent& grad_x, const Tangent& v) {
  const double nv = m.norm(x, v);
  if (!(nv > 0.0)) throw InvalidArgumentError("hessian_vec_fd: v must be nonzero");
  double h = std::sqrt(std::numeric_limits<double>::epsilon()) * (1.0 + frobenius_norm(x.coords()));
  for (int attempt = 0;; ++attempt) {
    try {
      const Point y = m.retract(x, (h / nv) * v);
      const Tangent gy = riemannian_gradient(cost, m, y);
      Tangent back = m.transport(y, x, gy);
      back -= grad_x;
      back *= nv / h;
      return back;
    } catch (const StepTooLongError&) {
      if (attempt >= 20) throw;
      h *= 0.5;
    }
  }
}

inline Tangent hessian_vec_fd(const CostFunction& cost, const Manifold& m, const Point& x,
                              const Tangent& v) {
  return hessian_vec_fd(cost, m, x, riemannian_gradient(cost, m, x), v);
}

/// Hessian-vector operator at a fixed point: analytic when the cost supplies
/// a Euclidean Hessian, finite differences otherwise.
class HessianOperator {
 public:
  HessianOperator(const CostFunction& cost, const Manifold& m, Point x, Ambient egrad, Tangent rgrad)
      : cost_(cost), m_(m), x_(std::move(x)), egrad_(std::move(egrad)), rgrad_(std::move(rgrad)) {}

  [[nodiscard]] Tangent apply(const Tangent& v) const {
    ++applications_;
    if (cost_.has_hessian()) {
      return m_.ehess_to_rhess(x_, egrad_, cost_.euclidean_hess_vec(x_, v.coords), v);
    }
    return hessian_vec_fd(cost_, m_, x_, rgrad_, v);
  }

  [[nodiscard]] int applications() const { return applications_; }

 private:
  const CostFunction& cost_;
  const Manifold& m_;
  Point x_;
  Ambient egrad_;
  Tangent rgrad_;
  mutable int applications_ = 0;
};

}  // namespace rmo
