#pragma once

#include <algorithm>
#include <cmath>

#include "rmo/solvers/hessian.hpp"
#include "rmo/solvers/linesearch.hpp"
#include "rmo/solvers/report.hpp"

namespace rmo {

/// Riemannian gradient descent: x <- R(x, -t grad f(x)) with Armijo t.
/// After the first iteration the trial step is 2.02 (f_prev - f) / ||g||^2,
/// the quadratic-interpolation guess from the last decrease, capped at
/// initial_step.
inline SolverReport solve_rgd(const CostFunction& cost, const Manifold& m, const Point& x0,
                              const SolverConfig& cfg) {
  cfg.validate();
  m.require_feasible(x0, "solve_rgd");
  detail::RunRecorder rec(m, cfg);

  Point x = x0;
  double f = cost.value(x);
  Tangent g = riemannian_gradient(cost, m, x);
  double gnorm = m.norm(x, g);
  rec.count_cost();
  rec.count_grad();
  rec.record(x, f, gnorm);

  SolverConfig ls_cfg = cfg;
  double f_prev = f;
  int iter = 0;
  while (true) {
    if (gnorm < cfg.grad_tol) return rec.finish(x, f, iter, Termination::GradTol);
    if (iter >= cfg.max_iters) return rec.finish(x, f, iter, Termination::MaxIters);

    const Tangent d = -g;
    if (iter > 0) {
      const double guess = 2.02 * (f_prev - f) / (gnorm * gnorm);
      ls_cfg.initial_step = (std::isfinite(guess) && guess > 0.0) ? std::min(cfg.initial_step, guess) : cfg.initial_step;
    }
    LineSearchResult ls;
    try {
      ls = armijo_linesearch(cost, m, x, d, f, -gnorm * gnorm, ls_cfg);
    } catch (const StepTooSmallError&) {
      rec.count_cost(cfg.max_backtracks + 1);
      return rec.finish(x, f, iter, Termination::StepTooSmall);
    }
    rec.count_cost(ls.backtracks + 1);
    ++iter;
    x = std::move(ls.x_new);
    f_prev = f;
    f = ls.f_new;
    g = riemannian_gradient(cost, m, x);
    gnorm = m.norm(x, g);
    rec.count_grad();
    rec.event({.step = ls.step, .backtracks = ls.backtracks});
    rec.record(x, f, gnorm);
  }
}

}  // namespace rmo
