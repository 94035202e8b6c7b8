#pragma once

#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rmo/geometry/cost.hpp"
#include "rmo/geometry/manifold.hpp"
#include "rmo/solvers/hessian.hpp"
#include "rmo/verify/slope.hpp"

namespace rmo::verify {

inline constexpr double kOrderThreshold = 1.9;
inline constexpr double kFdGradientOrderThreshold = 1.5;

struct CheckResult {
  std::string name;
  /// Median fitted slope over the trials that were not at the noise floor.
  double order = std::nan("");
  bool pass = false;
  /// Every sample sat at the noise floor; pass is vacuous.
  bool vacuous = false;
  double threshold = kOrderThreshold;
  std::vector<double> trial_orders;

  [[nodiscard]] std::string line() const {
    std::ostringstream os;
    os << (pass ? "PASS " : "FAIL ") << name << "  order=";
    if (vacuous) {
      os << "n/a (noise floor)";
    } else {
      os.precision(3);
      os << std::fixed << order;
    }
    os.precision(2);
    os << "  threshold=" << std::fixed << threshold;
    return os.str();
  }
};

inline double noise_floor_for(double scale) {
  return std::max(1e-14, 1e3 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(scale)));
}

/// Taylor-remainder test |f(R(x, t v)) - f(x) - t <grad f(x), v>| = O(t^2)
/// along random unit tangents.
template <class Rng>
CheckResult check_gradient(const CostFunction& cost, const Manifold& m, const Point& x, int trials,
                           Rng& rng) {
  if (trials < 1) throw InvalidArgumentError("check_gradient: trials must be at least 1");
  m.require_feasible(x, "check_gradient");
  CheckResult out;
  out.name = "gradient " + (cost.name.empty() ? std::string("cost") : cost.name) + " on " +
             m.handle().describe();
  out.threshold = cost.fd_gradient ? kFdGradientOrderThreshold : kOrderThreshold;
  const double f0 = cost.value(x);
  const Tangent g = riemannian_gradient(cost, m, x);
  const double floor = noise_floor_for(f0);
  for (int k = 0; k < trials; ++k) {
    const Tangent v = m.random_tangent(x, rng);
    const double slope = m.inner(x, g, v);
    SlopeSamples s;
    for (double t : default_steps()) {
      double e = std::numeric_limits<double>::quiet_NaN();
      try {
        e = std::abs(cost.value(m.retract(x, t * v)) - f0 - t * slope);
      } catch (const Error&) {
      }
      s.t.push_back(t);
      s.e.push_back(e);
    }
    if (auto fit = fit_middle_slope(s, floor)) out.trial_orders.push_back(*fit);
  }
  if (out.trial_orders.empty()) {
    out.vacuous = true;
    out.pass = true;
    return out;
  }
  out.order = median(out.trial_orders);
  out.pass = out.order >= out.threshold;
  return out;
}

/// Second-order agreement ||R(x, t v) - x - t v|| = O(t^2) at random points.
template <class Rng>
CheckResult check_retraction(const ManifoldHandle& handle, int trials, Rng& rng) {
  if (trials < 1) throw InvalidArgumentError("check_retraction: trials must be at least 1");
  const Manifold m(handle);
  CheckResult out;
  out.name = "retraction " + handle.describe();
  for (int k = 0; k < trials; ++k) {
    const Point x = m.random_point(rng);
    const Tangent v = m.random_tangent(x, rng);
    SlopeSamples s;
    for (double t : default_steps()) {
      double e = std::numeric_limits<double>::quiet_NaN();
      try {
        const Tangent tv = t * v;
        e = frobenius_norm(m.retract(x, tv).coords() - x.coords() - tv.coords);
      } catch (const Error&) {
      }
      s.t.push_back(t);
      s.e.push_back(e);
    }
    if (auto fit = fit_middle_slope(s, noise_floor_for(frobenius_norm(x.coords())))) {
      out.trial_orders.push_back(*fit);
    }
  }
  if (out.trial_orders.empty()) {
    out.vacuous = true;
    out.pass = true;
    return out;
  }
  out.order = median(out.trial_orders);
  out.pass = out.order >= out.threshold;
  return out;
}

}  // namespace rmo::verify
