// Smallest eigenvalue of a random Hermitian matrix as a minimization on the
// unit sphere, solved with each of the four solvers.
#include <iostream>
#include <random>

#include "rmo/oracles/oracle_costs.hpp"
#include "rmo/solvers/solve.hpp"

int main() {
  std::mt19937_64 rng(42);
  const rmo::Matrix a = rmo::linalg::random_hermitian(10, rng);
  const auto problem = rmo::oracles::rayleigh(a);
  const rmo::Manifold sphere(problem.handle);
  const rmo::Point x0 = sphere.random_point(rng);

  std::cout << "lambda_min = " << problem.optimum_value << "\n";
  for (auto kind : {rmo::SolverKind::RGD, rmo::SolverKind::RCG, rmo::SolverKind::RTR, rmo::SolverKind::LBFGS}) {
    const rmo::SolverReport r = rmo::solve(kind, problem.cost, sphere, x0, rmo::SolverConfig{});
    std::cout << rmo::to_string(kind) << ": f = " << r.final_cost << "  gap = " << r.final_cost - problem.optimum_value
              << "  iterations = " << r.iterations << "  (" << rmo::to_string(r.termination) << ")\n";
  }
}
