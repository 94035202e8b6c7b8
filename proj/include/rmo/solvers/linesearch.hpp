#pragma once

#include "rmo/geometry/cost.hpp"
#include "rmo/geometry/manifold.hpp"
#include "rmo/solvers/config.hpp"

namespace rmo {

struct LineSearchResult {
  double step = 0.0;
  Point x_new;
  double f_new = 0.0;
  int backtracks = 0;
};

/// Backtracking Armijo search along d: tries initial_step * shrink^k and
/// returns the first step with f(R(x, t d)) <= f0 + c t slope. Trial points
/// the retraction cannot produce count as failed trials.
inline LineSearchResult armijo_linesearch(const CostFunction& cost, const Manifold& m, const Point& x,
                                          const Tangent& d, double f0, double slope,
                                          const SolverConfig& cfg) {
  if (!(slope < 0.0)) {
    throw NotDescentDirectionError("armijo_linesearch: slope " + std::to_string(slope) +
                                   " is not negative");
  }
  double t = cfg.initial_step;
  for (int k = 0; k <= cfg.max_backtracks; ++k) {
    try {
      Point trial = m.retract(x, t * d);
      const double f = cost.value(trial);
      if (f <= f0 + cfg.armijo_c * t * slope) return {t, std::move(trial), f, k};
    } catch (const DegenerateStepError&) {
    } catch (const StepTooLongError&) {
    }
    t *= cfg.armijo_shrink;
  }
  throw StepTooSmallError("armijo_linesearch: no sufficient decrease after " +
                          std::to_string(cfg.max_backtracks) + " backtracks");
}

}  // namespace rmo
