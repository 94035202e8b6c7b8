#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <thread>
#include <vector>

#include "rmo/geometry/cost.hpp"
#include "rmo/geometry/manifold.hpp"

namespace rmo::verify {

struct GridOptions {
  /// The cost is invariant under a global phase of each factor; one phase
  /// axis per factor is dropped (fixed to zero).
  bool phase_invariant = false;
  /// Restrict ComplexSphere factors to real vectors.
  bool real_chart = false;
  /// Worker threads; 0 uses the hardware concurrency.
  unsigned threads = 0;
};

struct GridResult {
  double best_value = std::numeric_limits<double>::infinity();
  Point best_point;
  std::uint64_t evaluations = 0;
  int axes = 0;
  /// Largest angular spacing of any axis (radians).
  double spacing = 0.0;
};

inline constexpr int kGridMaxAxes = 4;
inline constexpr int kGridMaxResolution = 400;
inline constexpr std::uint64_t kGridMaxEvaluations = 100'000'000;

namespace detail {

struct Axis {
  double span;
  bool periodic;  // periodic: res points on [0, span); else res + 1 points on [0, span]
};

/// Angle-chart of one factor; maps angles to ambient coordinates.
struct FactorChart {
  ManifoldKind kind;
  int n;
  double radius;
  bool real;
  bool drop_phase;
  std::vector<Axis> axes;

  [[nodiscard]] Matrix point(const double* ang) const {
    Matrix x(n, 1);
    if (kind == ManifoldKind::ComplexCircle) {
      for (int i = 0; i < n; ++i) {
        const double th = (drop_phase && i == 0) ? 0.0 : ang[drop_phase ? i - 1 : i];
        x(i) = std::polar(1.0, th);
      }
      return x;
    }
    if (real) {
      // Real hyperspherical coordinates in R^n.
      double s = radius;
      for (int i = 0; i < n - 1; ++i) {
        x(i) = s * std::cos(ang[i]);
        s *= std::sin(ang[i]);
      }
      x(n - 1) = s;
      return x;
    }
    // Magnitudes from n - 1 angles in [0, pi/2], then phases.
    double s = radius;
    std::vector<double> mag(n);
    for (int i = 0; i < n - 1; ++i) {
      mag[i] = s * std::cos(ang[i]);
      s *= std::sin(ang[i]);
    }
    mag[n - 1] = s;
    const double* ph = ang + (n - 1);
    for (int i = 0; i < n; ++i) {
      const double th = (drop_phase && i == 0) ? 0.0 : ph[drop_phase ? i - 1 : i];
      x(i) = std::polar(mag[i], th);
    }
    return x;
  }
};

inline FactorChart make_chart(const ManifoldHandle& f, const GridOptions& opt) {
  constexpr double pi = std::numbers::pi;
  FactorChart c{f.kind(), f.rows(), f.radius().value_or(1.0), opt.real_chart, opt.phase_invariant, {}};
  if (f.kind() == ManifoldKind::ComplexCircle) {
    for (int i = opt.phase_invariant ? 1 : 0; i < f.rows(); ++i) c.axes.push_back({2 * pi, true});
    return c;
  }
  if (f.kind() == ManifoldKind::ComplexSphere) {
    const int n = f.rows();
    if (opt.real_chart) {
      c.drop_phase = false;
      for (int i = 0; i < n - 2; ++i) c.axes.push_back({pi, false});
      if (n >= 2) c.axes.push_back({2 * pi, true});
      return c;
    }
    for (int i = 0; i < n - 1; ++i) c.axes.push_back({pi / 2, false});
    for (int i = opt.phase_invariant ? 1 : 0; i < n; ++i) c.axes.push_back({2 * pi, true});
    return c;
  }
  throw InvalidArgumentError("grid_oracle: only circle, sphere and products of them have a chart");
}

}  // namespace detail

/// Exhaustive minimization over a uniform angle grid of a low-dimensional
/// manifold (complex circle, complex sphere, or products of them).
inline GridResult grid_oracle(const CostFunction& cost, const ManifoldHandle& handle, int resolution,
                              const GridOptions& opt = {}) {
  if (resolution < 1 || resolution > kGridMaxResolution) {
    throw InvalidArgumentError("grid_oracle: resolution must lie in [1, 400]");
  }
  std::vector<detail::FactorChart> charts;
  std::vector<detail::Axis> axes;
  for (std::size_t i = 0; i < handle.block_count(); ++i) {
    charts.push_back(detail::make_chart(handle.factor(i), opt));
    axes.insert(axes.end(), charts.back().axes.begin(), charts.back().axes.end());
  }
  if (static_cast<int>(axes.size()) > kGridMaxAxes) {
    throw InvalidArgumentError("grid_oracle: chart has " + std::to_string(axes.size()) +
                               " axes; at most 4 are supported");
  }

  std::vector<int> counts;
  std::uint64_t total = 1;
  GridResult out;
  out.axes = static_cast<int>(axes.size());
  for (const auto& a : axes) {
    counts.push_back(a.periodic ? resolution : resolution + 1);
    total *= static_cast<std::uint64_t>(counts.back());
    out.spacing = std::max(out.spacing, a.span / resolution);
  }
  if (total > kGridMaxEvaluations) throw BudgetExceededError("grid_oracle: grid exceeds 1e8 points");

  auto point_at = [&](std::uint64_t idx) {
    std::vector<double> ang(axes.size());
    for (std::size_t a = axes.size(); a-- > 0;) {
      const auto k = static_cast<int>(idx % counts[a]);
      idx /= counts[a];
      ang[a] = axes[a].span * k / resolution;
    }
    std::vector<Matrix> blocks;
    const double* p = ang.data();
    for (const auto& c : charts) {
      blocks.push_back(c.point(p));
      p += c.axes.size();
    }
    return Point(Ambient(std::move(blocks)));
  };

  unsigned workers = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));
  std::vector<double> best(workers, std::numeric_limits<double>::infinity());
  std::vector<std::uint64_t> arg(workers, 0);
  auto scan = [&](unsigned w) {
    const std::uint64_t lo = total * w / workers;
    const std::uint64_t hi = total * (w + 1) / workers;
    for (std::uint64_t i = lo; i < hi; ++i) {
      const double f = cost.value(point_at(i));
      if (f < best[w]) {
        best[w] = f;
        arg[w] = i;
      }
    }
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, w);
    for (auto& t : pool) t.join();
  }
  // Slices are index-ordered, so the first strict minimum wins ties.
  std::uint64_t best_idx = 0;
  for (unsigned w = 0; w < workers; ++w) {
    if (best[w] < out.best_value) {
      out.best_value = best[w];
      best_idx = arg[w];
    }
  }
  out.best_point = point_at(best_idx);
  out.evaluations = total;
  return out;
}

}  // namespace rmo::verify
