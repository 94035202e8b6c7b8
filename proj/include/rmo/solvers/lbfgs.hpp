#pragma once

#include <deque>
#include <vector>

#include "rmo/solvers/hessian.hpp"
#include "rmo/solvers/linesearch.hpp"
#include "rmo/solvers/report.hpp"

namespace rmo {

/// Riemannian limited-memory BFGS. Curvature pairs are transported to the
/// current tangent space every iteration; pairs with
/// <s, y> <= 1e-10 ||s|| ||y|| are skipped.
inline SolverReport solve_lbfgs(const CostFunction& cost, const Manifold& m, const Point& x0,
                                const SolverConfig& cfg) {
  cfg.validate();
  m.require_feasible(x0, "solve_lbfgs");
  detail::RunRecorder rec(m, cfg);

  struct Pair {
    Tangent s;
    Tangent y;
    double sy;
  };
  std::deque<Pair> history;

  Point x = x0;
  double f = cost.value(x);
  Tangent g = riemannian_gradient(cost, m, x);
  double gnorm = m.norm(x, g);
  rec.count_cost();
  rec.count_grad();
  rec.record(x, f, gnorm);

  auto two_loop = [&](const Tangent& grad) {
    Tangent q = grad;
    std::vector<double> a(history.size());
    for (std::size_t k = history.size(); k-- > 0;) {
      a[k] = m.inner(x, history[k].s, q) / history[k].sy;
      q.axpy(-a[k], history[k].y);
    }
    if (!history.empty()) {
      const Pair& last = history.back();
      q *= last.sy / m.inner(x, last.y, last.y);
    }
    for (std::size_t k = 0; k < history.size(); ++k) {
      const double b = m.inner(x, history[k].y, q) / history[k].sy;
      q.axpy(a[k] - b, history[k].s);
    }
    return -q;
  };

  int iter = 0;
  while (true) {
    if (gnorm < cfg.grad_tol) return rec.finish(x, f, iter, Termination::GradTol);
    if (iter >= cfg.max_iters) return rec.finish(x, f, iter, Termination::MaxIters);

    Tangent d = two_loop(g);
    double slope = m.inner(x, g, d);
    if (!(slope < 0.0)) {
      d = -g;
      slope = -gnorm * gnorm;
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

    if (cfg.lbfgs_memory > 0) {
      Tangent s = m.transport(x, x_new, ls.step * d);
      Tangent y = g_new - m.transport(x, x_new, g);
      for (auto& p : history) {
        p.s = m.transport(x, x_new, p.s);
        p.y = m.transport(x, x_new, p.y);
        p.sy = m.inner(x_new, p.s, p.y);
      }
      // Transport can destroy positivity of older pairs.
      std::erase_if(history, [&](const Pair& p) {
        return !(p.sy > 1e-10 * m.norm(x_new, p.s) * m.norm(x_new, p.y));
      });
      const double sy = m.inner(x_new, s, y);
      if (sy > 1e-10 * m.norm(x_new, s) * m.norm(x_new, y)) {
        history.push_back({std::move(s), std::move(y), sy});
        while (static_cast<int>(history.size()) > cfg.lbfgs_memory) history.pop_front();
      }
    }

    x = std::move(x_new);
    f = ls.f_new;
    g = g_new;
    gnorm = m.norm(x, g);
    rec.event({.step = ls.step, .backtracks = ls.backtracks});
    rec.record(x, f, gnorm);
  }
}

}  // namespace rmo
