#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "rmo/solvers/hessian.hpp"
#include "rmo/solvers/report.hpp"
#include "rmo/solvers/tcg.hpp"

namespace rmo {

/// Riemannian trust region with a truncated-CG inner solver.
inline SolverReport solve_rtr(const CostFunction& cost, const Manifold& m, const Point& x0,
                              const SolverConfig& cfg) {
  cfg.validate();
  m.require_feasible(x0, "solve_rtr");
  detail::RunRecorder rec(m, cfg);
  const int inner_max = m.dimension();
  const double min_radius = 1e-12 * cfg.tr_radius0;

  Point x = x0;
  double f = cost.value(x);
  Ambient eg = cost.euclidean_grad(x);
  Tangent g = m.egrad_to_rgrad(x, eg);
  double gnorm = m.norm(x, g);
  rec.count_cost();
  rec.count_grad();
  rec.record(x, f, gnorm);

  double radius = cfg.tr_radius0;
  int iter = 0;
  while (true) {
    if (gnorm < cfg.grad_tol) return rec.finish(x, f, iter, Termination::GradTol);
    if (iter >= cfg.max_iters) return rec.finish(x, f, iter, Termination::MaxIters);
    if (radius < min_radius) return rec.finish(x, f, iter, Termination::StepTooSmall);
    ++iter;

    const HessianOperator hess(cost, m, x, eg, g);
    const TcgResult sub =
        truncated_cg(m, x, g, [&](const Tangent& v) { return hess.apply(v); }, radius, inner_max);
    if (!cost.has_hessian()) rec.count_grad(hess.applications());

    const double predicted = -sub.model_value;
    double rho = -std::numeric_limits<double>::infinity();
    double actual = 0.0;
    Point x_try;
    double f_try = f;
    if (predicted > 0.0) {
      try {
        x_try = m.retract(x, sub.step);
        f_try = cost.value(x_try);
        rec.count_cost();
        actual = f - f_try;
        // Guards the ratio against cancellation once both reductions reach
        // rounding level.
        const double reg = std::max(1.0, std::abs(f)) * std::numeric_limits<double>::epsilon() * 1e3;
        rho = (actual + reg) / (predicted + reg);
        if (!std::isfinite(f_try)) rho = -std::numeric_limits<double>::infinity();
      } catch (const StepTooLongError&) {
      } catch (const DegenerateStepError&) {
      }
    }

    const bool accepted = rho > cfg.tr_accept_rho && f_try <= f;
    IterationEvent ev{.tr_radius = radius,
                      .tr_rho = rho,
                      .actual_reduction = actual,
                      .predicted_reduction = predicted,
                      .inner_iterations = sub.iterations,
                      .hit_boundary = sub.hit_boundary,
                      .accepted = accepted};

    if (rho < cfg.tr_accept_rho) {
      radius *= cfg.tr_shrink;
    } else if (rho > 0.75 && sub.hit_boundary) {
      radius = std::min(cfg.tr_expand * radius, cfg.tr_radius_max);
    }

    if (accepted) {
      x = std::move(x_try);
      f = f_try;
      eg = cost.euclidean_grad(x);
      g = m.egrad_to_rgrad(x, eg);
      gnorm = m.norm(x, g);
      rec.count_grad();
      ev.step = m.norm(sub.step.base, sub.step);
    }
    rec.event(ev);
    rec.record(x, f, gnorm);
  }
}

}  // namespace rmo
