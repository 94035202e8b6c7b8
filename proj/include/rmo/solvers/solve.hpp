#pragma once

#include "rmo/solvers/lbfgs.hpp"
#include "rmo/solvers/rcg.hpp"
#include "rmo/solvers/rgd.hpp"
#include "rmo/solvers/rtr.hpp"

namespace rmo {

inline SolverReport solve(SolverKind kind, const CostFunction& cost, const Manifold& m, const Point& x0,
                          const SolverConfig& cfg) {
  switch (kind) {
    case SolverKind::RGD: return solve_rgd(cost, m, x0, cfg);
    case SolverKind::RCG: return solve_rcg(cost, m, x0, cfg);
    case SolverKind::RTR: return solve_rtr(cost, m, x0, cfg);
    case SolverKind::LBFGS: return solve_lbfgs(cost, m, x0, cfg);
  }
  throw InvalidArgumentError("solve: unknown solver");
}

}  // namespace rmo
