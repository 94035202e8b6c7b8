#pragma once

#include <cmath>
#include <numbers>

#include "rmo/fas/channel.hpp"
#include "rmo/geometry/cost.hpp"
#include "rmo/geometry/manifold.hpp"

namespace rmo::fas {

/// log2(1 + |h_b^H w|^2 / (|h_b^H z|^2 + s2)) - log2(1 + |h_e^H w|^2 / (|h_e^H z|^2 + s2)).
/// An empty z means no artificial noise. Not clamped.
inline double secrecy_rate(const Vector& w, const Vector& z, const Vector& h_bob, const Vector& h_eve,
                           double noise_power) {
  if (!(noise_power > 0)) throw InvalidArgumentError("secrecy_rate: noise power must be positive");
  if (w.size() != h_bob.size() || w.size() != h_eve.size() || (z.size() != 0 && z.size() != w.size())) {
    throw ShapeMismatchError("secrecy_rate: vector lengths differ");
  }
  auto rate = [&](const Vector& h) {
    const double a = std::norm(h.dot(w));
    const double c = z.size() ? std::norm(h.dot(z)) : 0.0;
    return std::log2(1.0 + a / (c + noise_power));
  };
  return rate(h_bob) - rate(h_eve);
}

inline double secrecy_rate(const Vector& w, const Vector& z, const ChannelRealization& ch, double noise_power) {
  return secrecy_rate(w, z, ch.h_bob, ch.h_eve, noise_power);
}

/// Negative secrecy rate on the product of two complex spheres, the signal
/// beamformer w with ||w||^2 = alpha P and the artificial-noise vector z with
/// ||z||^2 = (1 - alpha) P. With alpha = 1 there is no z and the manifold is
/// a single sphere.
struct SecrecyProblem {
  ManifoldHandle handle = ManifoldHandle::complex_sphere(1);
  CostFunction cost;
  double signal_radius = 0.0;
  double noise_radius = 0.0;

  [[nodiscard]] bool has_noise() const { return handle.block_count() == 2; }
  [[nodiscard]] Vector signal(const Point& x) const { return x.block(0); }
  [[nodiscard]] Vector noise(const Point& x) const {
    return has_noise() ? Vector(x.block(1)) : Vector(0);
  }
};

namespace detail {

inline void validate_power(double noise_power, double alpha, double total_power) {
  if (!(noise_power > 0)) throw InvalidArgumentError("secrecy cost: noise power must be positive");
  if (!(alpha > 0 && alpha <= 1)) throw InvalidArgumentError("secrecy cost: alpha must lie in (0, 1]");
  if (!(total_power > 0)) throw InvalidArgumentError("secrecy cost: total power must be positive");
}

/// Value and Wirtinger gradient of -R(w, z); `scale_w`, `scale_z` map chart
/// coordinates to (w, z) = (scale_w x0, scale_z x1).
inline CostFunction secrecy_cost_function(const Vector& hb, const Vector& he, double s2, bool has_noise,
                                          double scale_w, double scale_z, std::string name) {
  CostFunction c;
  c.name = std::move(name);
  c.value = [=](const Point& x) {
    const Vector w = scale_w * x.block(0);
    const Vector z = has_noise ? Vector(scale_z * x.block(1)) : Vector(0);
    return -secrecy_rate(w, z, hb, he, s2);
  };
  c.euclidean_grad = [=](const Point& x) {
    const Vector w = scale_w * x.block(0);
    const Complex bw = hb.dot(w);
    const Complex ew = he.dot(w);
    const double ab = std::norm(bw);
    const double ae = std::norm(ew);
    Complex bz = 0.0, ez = 0.0;
    if (has_noise) {
      const Vector z = scale_z * x.block(1);
      bz = hb.dot(z);
      ez = he.dot(z);
    }
    const double cb = std::norm(bz);
    const double ce = std::norm(ez);
    const double k = -2.0 / std::numbers::ln2;
    const Vector gw = k * (hb * (bw / (s2 + cb + ab)) - he * (ew / (s2 + ce + ae)));
    std::vector<Matrix> blocks{Matrix(scale_w * gw)};
    if (has_noise) {
      const Vector gz = k * (-hb * (ab * bz / ((s2 + cb) * (s2 + cb + ab))) +
                             he * (ae * ez / ((s2 + ce) * (s2 + ce + ae))));
      blocks.emplace_back(scale_z * gz);
    }
    return Ambient(std::move(blocks));
  };
  return c;
}

}  // namespace detail

inline SecrecyProblem secrecy_cost(const ChannelRealization& ch, double noise_power, double alpha,
                                   double total_power) {
  detail::validate_power(noise_power, alpha, total_power);
  const int n = static_cast<int>(ch.h_bob.size());
  SecrecyProblem p;
  p.signal_radius = std::sqrt(alpha * total_power);
  p.noise_radius = std::sqrt((1.0 - alpha) * total_power);
  const bool noise = alpha < 1.0 && p.noise_radius > 0.0;
  if (noise) {
    p.handle = ManifoldHandle::product({ManifoldHandle::complex_sphere(n, p.signal_radius),
                                        ManifoldHandle::complex_sphere(n, p.noise_radius)});
  } else {
    p.handle = ManifoldHandle::complex_sphere(n, p.signal_radius);
    p.noise_radius = 0.0;
  }
  p.cost = detail::secrecy_cost_function(ch.h_bob, ch.h_eve, noise_power, noise, 1.0, 1.0, "secrecy");
  return p;
}

/// Constant-modulus restriction: every antenna radiates the same power, so
/// (w, z) = (r_w / sqrt(n) x, r_z / sqrt(n) y) with x, y on complex circles.
inline SecrecyProblem secrecy_cost_phases(const ChannelRealization& ch, double noise_power, double alpha,
                                          double total_power) {
  detail::validate_power(noise_power, alpha, total_power);
  const int n = static_cast<int>(ch.h_bob.size());
  SecrecyProblem p;
  p.signal_radius = std::sqrt(alpha * total_power);
  p.noise_radius = std::sqrt((1.0 - alpha) * total_power);
  const bool noise = alpha < 1.0 && p.noise_radius > 0.0;
  const double sn = 1.0 / std::sqrt(static_cast<double>(n));
  if (noise) {
    p.handle = ManifoldHandle::product({ManifoldHandle::complex_circle(n), ManifoldHandle::complex_circle(n)});
  } else {
    p.handle = ManifoldHandle::complex_circle(n);
    p.noise_radius = 0.0;
  }
  p.cost = detail::secrecy_cost_function(ch.h_bob, ch.h_eve, noise_power, noise, p.signal_radius * sn,
                                         p.noise_radius * sn, "secrecy_phases");
  return p;
}

/// Maximum-ratio transmission toward Bob plus artificial noise in the
/// orthogonal complement of h_b built from the draw `u`.
inline Point mrt_init(const SecrecyProblem& prob, const ChannelRealization& ch, const Vector& u) {
  const double hn = ch.h_bob.norm();
  if (!(hn > 0)) throw InvalidArgumentError("mrt_init: h_bob is zero");
  Matrix w = (prob.signal_radius / hn) * ch.h_bob;
  if (!prob.has_noise()) return Point(std::move(w));
  if (u.size() != ch.h_bob.size()) throw ShapeMismatchError("mrt_init: random draw has the wrong length");
  Vector z = u - ch.h_bob * (ch.h_bob.dot(u) / (hn * hn));
  // With one antenna the complement is empty; fall back to the raw draw.
  if (!(z.norm() > 1e-12 * std::max(1.0, u.norm()))) z = u;
  z *= prob.noise_radius / z.norm();
  return Point(Ambient{std::move(w), Matrix(z)});
}

template <class Rng>
Point mrt_init(const SecrecyProblem& prob, const ChannelRealization& ch, Rng& rng) {
  return mrt_init(prob, ch, Vector(linalg::complex_gaussian(ch.h_bob.size(), 1, rng)));
}

}  // namespace rmo::fas
