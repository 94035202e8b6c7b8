#pragma once

#include <algorithm>

#include "rmo/solvers/hessian.hpp"
#include "rmo/solvers/linesearch.hpp"
#include "rmo/solvers/report.hpp"

namespace rmo {

/// Riemannian conjugate gradient with the Polak-Ribiere+ rule. The previous
/// gradient and direction are carried to the new point by vector transport.
inline SolverReport solve_rcg(const CostFunction& cost, const Manifold& m, const Point& x0,
                              const SolverConfig& cfg) {
  cfg.validate();
  m.require_feasible(x0, "solve_rcg");
  detail::RunRecorder rec(m, cfg);
  const int restart = cfg.cg_restart > 0 ? cfg.cg_restart : m.handle().ambient_real_size();

  Point x = x0;
  double f = cost.value(x);
  Tangent g = riemannian_gradient(cost, m, x);
  double gg = m.inner(x, g, g);
  rec.count_cost();
  rec.count_grad();
  rec.record(x, f, std::sqrt(gg));

  Tangent d = -g;
  int iter = 0;
  while (true) {
    if (std::sqrt(gg) < cfg.grad_tol) return rec.finish(x, f, iter, Termination::GradTol);
    if (iter >= cfg.max_iters) return rec.finish(x, f, iter, Termination::MaxIters);

    double slope = m.inner(x, g, d);
    if (!(slope < 0.0)) {
      d = -g;
      slope = -gg;
    }
    LineSearchResult ls;
    try {
      ls = armijo_linesearch(cost, m, x, d, f, slope, cfg);
    } catch (const StepTooSmallError&) {
      rec.count_cost(cfg.max_backtracks + 1);
      return rec.finish(x, f, iter, Termination::StepTooSmall);
    }
    rec.count_cost(ls.backtracks + 1);
    ++iter;

    Point x_new = std::move(ls.x_new);
    const Tangent g_new = riemannian_gradient(cost, m, x_new);
    rec.count_grad();
    const double gg_new = m.inner(x_new, g_new, g_new);

    const Tangent tg = m.transport(x, x_new, g);
    const Tangent td = m.transport(x, x_new, d);
    double beta = std::max(0.0, (gg_new - m.inner(x_new, g_new, tg)) / gg);
    if (iter % restart == 0) beta = 0.0;

    d = beta * td;
    d -= g_new;
    x = std::move(x_new);
    f = ls.f_new;
    g = g_new;
    gg = gg_new;
    rec.event({.step = ls.step, .backtracks = ls.backtracks});
    rec.record(x, f, std::sqrt(gg));
  }
}

}  // namespace rmo
