#pragma once

#include <algorithm>
#include <cmath>

#include "rmo/geometry/manifold.hpp"

namespace rmo {

struct TcgResult {
  Tangent step;
  /// H applied to step, kept so the caller can evaluate the model.
  Tangent hess_step;
  bool hit_boundary = false;
  int iterations = 0;
  /// m(step) = <g, s> + <s, H s> / 2; never positive.
  double model_value = 0.0;
};

/// Steihaug-Toint truncated conjugate gradient for
///   min m(s) = <g, s> + <s, H s> / 2  subject to ||s|| <= radius
/// in the tangent space at x. Stops on negative curvature or boundary
/// crossing (returning the boundary point), when the residual drops below
/// ||g|| * min(0.5, sqrt(||g||)), or after max_iterations steps.
template <class HessFn>
TcgResult truncated_cg(const Manifold& m, const Point& x, const Tangent& g, HessFn&& hess,
                       double radius, int max_iterations) {
  TcgResult out{m.zero_tangent(x), m.zero_tangent(x), false, 0, 0.0};
  const double gnorm = m.norm(x, g);
  if (gnorm == 0.0) return out;
  const double target = gnorm * std::min(0.5, std::sqrt(gnorm));

  Tangent& s = out.step;
  Tangent& hs = out.hess_step;
  Tangent r = g;             // residual = gradient of the model at s
  Tangent delta = -g;        // search direction
  double rr = gnorm * gnorm;
  double ss = 0.0;           // <s, s>
  double sd = 0.0;           // <s, delta>
  double dd = rr;            // <delta, delta>

  auto model = [&] { return m.inner(x, g, s) + 0.5 * m.inner(x, s, hs); };
  double m_current = 0.0;

  for (int j = 0; j < std::max(1, max_iterations); ++j) {
    const Tangent hd = hess(delta);
    const double dhd = m.inner(x, delta, hd);
    const double alpha = rr / dhd;
    const double ss_new = ss + 2.0 * alpha * sd + alpha * alpha * dd;
    out.iterations = j + 1;

    if (!(dhd > 0.0) || ss_new >= radius * radius) {
      // Positive root of ||s + tau delta|| = radius.
      const double disc = sd * sd + dd * (radius * radius - ss);
      const double tau = (-sd + std::sqrt(std::max(0.0, disc))) / dd;
      const Tangent s_prev = s;
      const Tangent hs_prev = hs;
      s.axpy(tau, delta);
      hs.axpy(tau, hd);
      out.hit_boundary = true;
      out.model_value = model();
      if (!(out.model_value <= m_current)) {
        s = s_prev;
        hs = hs_prev;
        out.hit_boundary = false;
        out.model_value = m_current;
      }
      return out;
    }

    const Tangent s_prev = s;
    const Tangent hs_prev = hs;
    s.axpy(alpha, delta);
    hs.axpy(alpha, hd);
    const double m_new = model();
    if (!(m_new < m_current)) {
      // Inexact curvature broke monotone model decrease; keep the last iterate.
      s = s_prev;
      hs = hs_prev;
      break;
    }
    m_current = m_new;
    ss = m.inner(x, s, s);
    r.axpy(alpha, hd);
    const double rr_new = m.inner(x, r, r);
    if (std::sqrt(rr_new) <= target) break;

    const double beta = rr_new / rr;
    rr = rr_new;
    delta *= beta;
    delta -= r;
    sd = m.inner(x, s, delta);
    dd = m.inner(x, delta, delta);
  }
  out.model_value = model();
  return out;
}

}  // namespace rmo
