#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "rmo/geometry/ambient.hpp"
#include "rmo/geometry/handle.hpp"
#include "rmo/geometry/point.hpp"
#include "rmo/manifolds/circle.hpp"
#include "rmo/manifolds/grassmann.hpp"
#include "rmo/manifolds/hpd.hpp"
#include "rmo/manifolds/oblique.hpp"
#include "rmo/manifolds/sphere.hpp"
#include "rmo/manifolds/stiefel.hpp"

namespace rmo {

/// Relative tolerance for the point and tangent invariants.
inline constexpr double kFeasibilityTol = 1e-10;

/// The geometric toolbox of one manifold: metric, tangent projection,
/// Riemannian gradient, retraction and vector transport. Product manifolds
/// dispatch block by block; all operations are pure.
class Manifold {
 public:
  explicit Manifold(ManifoldHandle handle) : handle_(std::move(handle)) {}

  [[nodiscard]] const ManifoldHandle& handle() const { return handle_; }
  [[nodiscard]] int dimension() const { return handle_.dimension(); }

  [[nodiscard]] double inner(const Point& x, const Tangent& u, const Tangent& v) const {
    require_base(x, u, "inner");
    require_base(x, v, "inner");
    check_shape(u.coords, "inner");
    check_shape(v.coords, "inner");
    double s = 0.0;
    for (std::size_t i = 0; i < handle_.block_count(); ++i) {
      if (handle_.factor(i).kind() == ManifoldKind::HPD) {
        s += manifolds::Hpd::inner(x.block(i), u.block(i), v.block(i));
      } else {
        s += (u.block(i).array().conjugate() * v.block(i).array()).real().sum();
      }
    }
    return s;
  }

  [[nodiscard]] double norm(const Point& x, const Tangent& u) const {
    return std::sqrt(std::max(0.0, inner(x, u, u)));
  }

  /// Orthogonal projection of ambient coordinates onto the tangent space at x.
  [[nodiscard]] Tangent project(const Point& x, const Ambient& a) const {
    check_shape(a, "project");
    require_feasible(x, "project");
    return Tangent{map_blocks([&](const ManifoldHandle& f, std::size_t i) {
                     return project_block(f, x.block(i), a[i]);
                   }),
                   x};
  }

  /// Riemannian gradient from a Wirtinger Euclidean gradient g = 2 df/d(conj x).
  [[nodiscard]] Tangent egrad_to_rgrad(const Point& x, const Ambient& g) const {
    check_shape(g, "egrad_to_rgrad");
    return Tangent{map_blocks([&](const ManifoldHandle& f, std::size_t i) -> Matrix {
                     if (f.kind() == ManifoldKind::HPD) {
                       return manifolds::Hpd::egrad_to_rgrad(x.block(i), g[i]);
                     }
                     return project_block(f, x.block(i), g[i]);
                   }),
                   x};
  }

  /// Riemannian Hessian along u from the Euclidean gradient and the Euclidean
  /// Hessian applied to u.
  [[nodiscard]] Tangent ehess_to_rhess(const Point& x, const Ambient& egrad, const Ambient& ehess,
                                       const Tangent& u) const {
    require_base(x, u, "ehess_to_rhess");
    return Tangent{map_blocks([&](const ManifoldHandle& f, std::size_t i) -> Matrix {
                     const Matrix& xb = x.block(i);
                     switch (f.kind()) {
                       case ManifoldKind::ComplexCircle:
                         return manifolds::Circle::ehess_to_rhess(xb, egrad[i], ehess[i], u.block(i));
                       case ManifoldKind::ComplexSphere:
                         return manifolds::Sphere{*f.radius()}.ehess_to_rhess(xb, egrad[i], ehess[i],
                                                                              u.block(i));
                       case ManifoldKind::Oblique:
                         return manifolds::Oblique{}.ehess_to_rhess(xb, egrad[i], ehess[i], u.block(i));
                       case ManifoldKind::Stiefel:
                         return manifolds::Stiefel::ehess_to_rhess(xb, egrad[i], ehess[i], u.block(i));
                       case ManifoldKind::Grassmann:
                         return manifolds::Grassmann::ehess_to_rhess(xb, egrad[i], ehess[i],
                                                                     u.block(i));
                       case ManifoldKind::HPD:
                         return manifolds::Hpd::ehess_to_rhess(xb, egrad[i], ehess[i], u.block(i));
                       case ManifoldKind::Product: break;
                     }
                     throw InvalidArgumentError("ehess_to_rhess: nested product");
                   }),
                   x};
  }

  /// Maps a tangent step to a feasible point. Throws DegenerateStepError or
  /// StepTooLongError when the step cannot be retracted.
  [[nodiscard]] Point retract(const Point& x, const Tangent& v) const {
    require_base(x, v, "retract");
    check_shape(v.coords, "retract");
    Point y(map_blocks([&](const ManifoldHandle& f, std::size_t i) -> Matrix {
      const Matrix& xb = x.block(i);
      const Matrix& vb = v.block(i);
      switch (f.kind()) {
        case ManifoldKind::ComplexCircle: return manifolds::Circle::retract(xb, vb);
        case ManifoldKind::ComplexSphere: return manifolds::Sphere{*f.radius()}.retract(xb, vb);
        case ManifoldKind::Oblique: return manifolds::Oblique{}.retract(xb, vb);
        case ManifoldKind::Stiefel: return manifolds::Stiefel::retract(xb, vb);
        case ManifoldKind::Grassmann: return manifolds::Grassmann::retract(xb, vb);
        case ManifoldKind::HPD: return manifolds::Hpd::retract(xb, vb);
        case ManifoldKind::Product: break;
      }
      throw InvalidArgumentError("retract: nested product");
    }));
    assert(feasibility_error(y) <= kFeasibilityTol);
    return y;
  }

  /// Projection transport for embedded kinds; identity for HPD.
  [[nodiscard]] Tangent transport(const Point& x, const Point& y, const Tangent& v) const {
    require_base(x, v, "transport");
    check_shape(y.coords(), "transport");
    require_feasible(y, "transport");
    return Tangent{map_blocks([&](const ManifoldHandle& f, std::size_t i) -> Matrix {
                     if (f.kind() == ManifoldKind::HPD) return v.block(i);
                     return project_block(f, y.block(i), v.block(i));
                   }),
                   y};
  }

  [[nodiscard]] Tangent zero_tangent(const Point& x) const { return Tangent{x.coords().zeros_like(), x}; }

  /// Tangent with the given ambient coordinates, checked for shape only.
  [[nodiscard]] Tangent tangent(const Point& x, Ambient coords) const {
    check_shape(coords, "tangent");
    return Tangent{std::move(coords), x};
  }

  template <class Rng>
  [[nodiscard]] Point random_point(Rng& rng) const {
    return Point(map_blocks([&](const ManifoldHandle& f, std::size_t) -> Matrix {
      const Eigen::Index n = f.rows();
      const Eigen::Index p = f.cols();
      switch (f.kind()) {
        case ManifoldKind::ComplexCircle: return manifolds::Circle::random_point(n, rng);
        case ManifoldKind::ComplexSphere: return manifolds::Sphere{*f.radius()}.random_point(n, 1, rng);
        case ManifoldKind::Oblique: return manifolds::Oblique{}.random_point(n, p, rng);
        case ManifoldKind::Stiefel: return manifolds::Stiefel::random_point(n, p, rng);
        case ManifoldKind::Grassmann: return manifolds::Grassmann::random_point(n, p, rng);
        case ManifoldKind::HPD: return manifolds::Hpd::random_point(n, rng);
        case ManifoldKind::Product: break;
      }
      throw InvalidArgumentError("random_point: nested product");
    }));
  }

  /// Projected complex-Gaussian draw, normalized to unit Riemannian norm.
  template <class Rng>
  [[nodiscard]] Tangent random_tangent(const Point& x, Rng& rng) const {
    std::vector<Matrix> blocks;
    for (std::size_t i = 0; i < handle_.block_count(); ++i) {
      blocks.push_back(linalg::complex_gaussian(x.block(i).rows(), x.block(i).cols(), rng));
    }
    Tangent t = project(x, Ambient(std::move(blocks)));
    const double n = norm(x, t);
    if (n > 0.0) t *= 1.0 / n;
    return t;
  }

  /// Worst relative violation of the defining constraint over all blocks.
  [[nodiscard]] double feasibility_error(const Point& x) const {
    if (x.size() != handle_.block_count()) return std::numeric_limits<double>::infinity();
    double e = 0.0;
    for (std::size_t i = 0; i < handle_.block_count(); ++i) {
      const ManifoldHandle& f = handle_.factor(i);
      const Matrix& xb = x.block(i);
      if (xb.rows() != f.rows() || xb.cols() != f.cols()) return std::numeric_limits<double>::infinity();
      double ei = 0.0;
      switch (f.kind()) {
        case ManifoldKind::ComplexCircle: ei = manifolds::Circle::feasibility_error(xb); break;
        case ManifoldKind::ComplexSphere: ei = manifolds::Sphere{*f.radius()}.feasibility_error(xb); break;
        case ManifoldKind::Oblique: ei = manifolds::Oblique{}.feasibility_error(xb); break;
        case ManifoldKind::Stiefel: ei = manifolds::Stiefel::feasibility_error(xb); break;
        case ManifoldKind::Grassmann: ei = manifolds::Grassmann::feasibility_error(xb); break;
        case ManifoldKind::HPD: ei = manifolds::Hpd::feasibility_error(xb); break;
        case ManifoldKind::Product: ei = std::numeric_limits<double>::infinity(); break;
      }
      if (!(ei <= e)) e = ei;  // NaN-propagating max
    }
    return e;
  }

  [[nodiscard]] bool is_feasible(const Point& x, double tol = kFeasibilityTol) const {
    return feasibility_error(x) <= tol;
  }

  /// Throws InfeasiblePointError when x violates the constraint.
  void require_feasible(const Point& x, const char* where) const {
    const double e = feasibility_error(x);
    if (!(e <= kFeasibilityTol)) {
      throw InfeasiblePointError(std::string(where) + ": point is infeasible (error " +
                                 std::to_string(e) + ")");
    }
  }

  /// Worst relative violation of the tangent-space condition at the base.
  [[nodiscard]] double tangency_error(const Tangent& v) const {
    double e = 0.0;
    for (std::size_t i = 0; i < handle_.block_count(); ++i) {
      const ManifoldHandle& f = handle_.factor(i);
      const Matrix& xb = v.base.block(i);
      const Matrix& vb = v.block(i);
      double ei = 0.0;
      switch (f.kind()) {
        case ManifoldKind::ComplexCircle: ei = manifolds::Circle::tangency_error(xb, vb); break;
        case ManifoldKind::ComplexSphere: ei = manifolds::Sphere{*f.radius()}.tangency_error(xb, vb); break;
        case ManifoldKind::Oblique: ei = manifolds::Oblique{}.tangency_error(xb, vb); break;
        case ManifoldKind::Stiefel: ei = manifolds::Stiefel::tangency_error(xb, vb); break;
        case ManifoldKind::Grassmann: ei = manifolds::Grassmann::tangency_error(xb, vb); break;
        case ManifoldKind::HPD: ei = manifolds::Hpd::tangency_error(xb, vb); break;
        case ManifoldKind::Product: break;
      }
      e = std::max(e, ei);
    }
    return e;
  }

 private:
  template <class Fn>
  Ambient map_blocks(Fn&& fn) const {
    std::vector<Matrix> out;
    out.reserve(handle_.block_count());
    for (std::size_t i = 0; i < handle_.block_count(); ++i) out.push_back(fn(handle_.factor(i), i));
    return Ambient(std::move(out));
  }

  static Matrix project_block(const ManifoldHandle& f, const Matrix& x, const Matrix& a) {
    switch (f.kind()) {
      case ManifoldKind::ComplexCircle: return manifolds::Circle::project(x, a);
      case ManifoldKind::ComplexSphere: return manifolds::Sphere{*f.radius()}.project(x, a);
      case ManifoldKind::Oblique: return manifolds::Oblique{}.project(x, a);
      case ManifoldKind::Stiefel: return manifolds::Stiefel::project(x, a);
      case ManifoldKind::Grassmann: return manifolds::Grassmann::project(x, a);
      case ManifoldKind::HPD: return manifolds::Hpd::project(x, a);
      case ManifoldKind::Product: break;
    }
    throw InvalidArgumentError("project: nested product");
  }

  void check_shape(const Ambient& a, const char* where) const {
    if (a.size() != handle_.block_count()) {
      throw ShapeMismatchError(std::string(where) + ": expected " +
                               std::to_string(handle_.block_count()) + " blocks, got " +
                               std::to_string(a.size()));
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      const ManifoldHandle& f = handle_.factor(i);
      if (a[i].rows() != f.rows() || a[i].cols() != f.cols()) {
        throw ShapeMismatchError(std::string(where) + ": block " + std::to_string(i) +
                                 " has the wrong shape");
      }
    }
  }

  static void require_base(const Point& x, const Tangent& v, const char* where) {
    if (!v.base.same_as(x)) {
      throw BaseMismatchError(std::string(where) + ": tangent is not based at the given point");
    }
  }

  ManifoldHandle handle_;
};

}  // namespace rmo
