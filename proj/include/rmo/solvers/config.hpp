#pragma once

#include <cstdint>
#include <string>

#include "rmo/errors.hpp"

namespace rmo {

enum class SolverKind { RGD, RCG, RTR, LBFGS };

inline std::string to_string(SolverKind k) {
  switch (k) {
    case SolverKind::RGD: return "rgd";
    case SolverKind::RCG: return "rcg";
    case SolverKind::RTR: return "rtr";
    case SolverKind::LBFGS: return "lbfgs";
  }
  return "?";
}

inline SolverKind parse_solver(const std::string& s) {
  if (s == "rgd") return SolverKind::RGD;
  if (s == "rcg") return SolverKind::RCG;
  if (s == "rtr") return SolverKind::RTR;
  if (s == "lbfgs") return SolverKind::LBFGS;
  throw InvalidArgumentError("unknown solver '" + s + "' (expected rgd|rcg|rtr|lbfgs)");
}

struct SolverConfig {
  double grad_tol = 1e-6;
  int max_iters = 500;
  double armijo_c = 1e-4;
  double armijo_shrink = 0.5;
  double initial_step = 1.0;
  int max_backtracks = 50;
  /// 0 selects the ambient real dimension of the problem.
  int cg_restart = 0;
  double tr_radius0 = 1.0;
  double tr_radius_max = 100.0;
  double tr_accept_rho = 0.1;
  double tr_expand = 2.0;
  double tr_shrink = 0.25;
  int lbfgs_memory = 8;
  std::uint64_t seed = 0;
  bool record_iterates = false;

  void validate() const {
    auto fail = [](const char* field, const char* why) {
      throw InvalidArgumentError(std::string("solver config: ") + field + " " + why);
    };
    if (!(grad_tol > 0)) fail("grad_tol", "must be positive");
    if (max_iters < 0) fail("max_iters", "must be nonnegative");
    if (!(armijo_c > 0 && armijo_c < 1)) fail("armijo_c", "must lie in (0, 1)");
    if (!(armijo_shrink > 0 && armijo_shrink < 1)) fail("armijo_shrink", "must lie in (0, 1)");
    if (!(initial_step > 0)) fail("initial_step", "must be positive");
    if (max_backtracks < 0) fail("max_backtracks", "must be nonnegative");
    if (cg_restart < 0) fail("cg_restart", "must be nonnegative");
    if (!(tr_radius0 > 0)) fail("tr_radius0", "must be positive");
    if (!(tr_radius_max >= tr_radius0)) fail("tr_radius_max", "must be at least tr_radius0");
    if (!(tr_accept_rho > 0 && tr_accept_rho < 0.25)) fail("tr_accept_rho", "must lie in (0, 0.25)");
    if (!(tr_expand > 1)) fail("tr_expand", "must exceed 1");
    if (!(tr_shrink > 0 && tr_shrink < 1)) fail("tr_shrink", "must lie in (0, 1)");
    if (lbfgs_memory < 0) fail("lbfgs_memory", "must be nonnegative");
  }
};

}  // namespace rmo
