#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "rmo/geometry/manifold.hpp"
#include "rmo/solvers/config.hpp"

namespace rmo {

enum class Termination { GradTol, MaxIters, StepTooSmall };

inline std::string to_string(Termination t) {
  switch (t) {
    case Termination::GradTol: return "GradTol";
    case Termination::MaxIters: return "MaxIters";
    case Termination::StepTooSmall: return "StepTooSmall";
  }
  return "?";
}

struct IterationEvent {
  double step = 0.0;
  int backtracks = 0;
  double tr_radius = 0.0;
  double tr_rho = 0.0;
  double actual_reduction = 0.0;
  double predicted_reduction = 0.0;
  int inner_iterations = 0;
  bool hit_boundary = false;
  bool accepted = true;
};

struct SolverReport {
  Point final_point;
  double final_cost = 0.0;
  /// Entry 0 is the starting point; one entry per iteration afterwards. For
  /// trust region, rejected iterations repeat the current cost.
  std::vector<double> cost_trace;
  std::vector<double> gradnorm_trace;
  std::vector<Point> iterate_trace;
  std::vector<IterationEvent> events;
  int iterations = 0;
  double wall_time = 0.0;
  Termination termination = Termination::MaxIters;
  /// Iterates whose feasibility error exceeded kFeasibilityTol.
  int feasibility_violations = 0;
  double max_feasibility_error = 0.0;
  int cost_evaluations = 0;
  int gradient_evaluations = 0;
};

namespace detail {

/// Shared bookkeeping for one solver run.
class RunRecorder {
 public:
  RunRecorder(const Manifold& m, const SolverConfig& cfg)
      : manifold_(m), cfg_(cfg), start_(std::chrono::steady_clock::now()) {}

  void record(const Point& x, double f, double gnorm) {
    report_.cost_trace.push_back(f);
    report_.gradnorm_trace.push_back(gnorm);
    if (cfg_.record_iterates) report_.iterate_trace.push_back(x);
    const double e = manifold_.feasibility_error(x);
    if (!(e <= report_.max_feasibility_error)) report_.max_feasibility_error = e;
    if (!(e <= kFeasibilityTol)) ++report_.feasibility_violations;
  }

  void event(const IterationEvent& e) { report_.events.push_back(e); }
  void count_cost(int n = 1) { report_.cost_evaluations += n; }
  void count_grad(int n = 1) { report_.gradient_evaluations += n; }

  SolverReport finish(const Point& x, double f, int iterations, Termination t) {
    report_.final_point = x;
    report_.final_cost = f;
    report_.iterations = iterations;
    report_.termination = t;
    report_.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  const Manifold& manifold_;
  const SolverConfig& cfg_;
  std::chrono::steady_clock::time_point start_;
  SolverReport report_;
};

}  // namespace detail
}  // namespace rmo
