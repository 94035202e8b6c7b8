#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rmo/fas/sweep.hpp"
#include "rmo/oracles/oracle_costs.hpp"
#include "rmo/solvers/solve.hpp"
#include "rmo/verify/checks.hpp"

namespace rmo::bench {

/// The geometry battery's manifolds: one of every kind plus a product.
inline std::vector<ManifoldHandle> geometry_handles() {
  return {ManifoldHandle::complex_circle(5),
          ManifoldHandle::complex_sphere(5, 1.5),
          ManifoldHandle::oblique(4, 3),
          ManifoldHandle::stiefel(5, 2),
          ManifoldHandle::grassmann(5, 2),
          ManifoldHandle::hpd(3),
          ManifoldHandle::product({ManifoldHandle::complex_sphere(4), ManifoldHandle::stiefel(4, 2),
                                   ManifoldHandle::hpd(2)})};
}

struct GeometryStats {
  std::string manifold;
  int triples = 0;
  /// Worst feasibility error of retract(x, t v) over the triples.
  double max_feasibility = 0.0;
  /// Worst ||P(P(a)) - P(a)|| / max(1, ||a||) over random ambient a.
  double max_idempotence = 0.0;
  verify::CheckResult retraction;
};

inline Ambient random_ambient(const Ambient& like, std::mt19937_64& rng) {
  Ambient a = like.zeros_like();
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = linalg::complex_gaussian(a[i].rows(), a[i].cols(), rng);
  return a;
}

/// Random triples (x, v, t) with unit tangent v and t log-uniform in [1e-4, 10].
inline GeometryStats geometry_stats(const ManifoldHandle& h, int triples, int slope_trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Manifold m(h);
  GeometryStats s;
  s.manifold = h.describe();
  s.triples = triples;
  std::uniform_real_distribution<double> logt(-4.0, 1.0);
  for (int k = 0; k < triples; ++k) {
    const Point x = m.random_point(rng);
    const Tangent v = m.random_tangent(x, rng);
    const double t = std::pow(10.0, logt(rng));
    const Point y = m.retract(x, t * v);
    s.max_feasibility = std::max(s.max_feasibility, m.feasibility_error(y));
    const Ambient a = random_ambient(x.coords(), rng);
    const Tangent p = m.project(x, a);
    const Tangent pp = m.project(x, p.coords);
    s.max_idempotence =
        std::max(s.max_idempotence, frobenius_norm(pp.coords - p.coords) / std::max(1.0, frobenius_norm(a)));
  }
  s.retraction = verify::check_retraction(h, slope_trials, rng);
  return s;
}

/// A shipped cost together with the manifold it lives on.
struct ShippedCost {
  CostFunction cost;
  ManifoldHandle handle;
};

/// Every cost the library ships: the oracle battery, the finite-difference
/// hpd_mean variant and the secrecy costs on one default-scenario channel.
inline std::vector<ShippedCost> shipped_costs(std::uint64_t seed, bool include_fd = true) {
  std::vector<ShippedCost> out;
  for (auto& p : oracles::oracle_battery(seed)) out.push_back({p.cost, p.handle});
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  if (include_fd) {
    auto random_hpd = [&rng] {
      const Matrix g = linalg::complex_gaussian(3, 3, rng);
      return Matrix(linalg::herm(g * g.adjoint()) + 0.5 * Matrix::Identity(3, 3));
    };
    const Matrix ya = random_hpd();
    const Matrix yb = random_hpd();
    auto p = oracles::hpd_mean(ya, yb, true);
    out.push_back({p.cost, p.handle});
  }
  const fas::SecrecyScenario sc = fas::SecrecyScenario{}.at_snr(10.0);
  const auto ch = fas::sample_channels(sc, {0, 1, 2, 3}, rng);
  auto sp = fas::secrecy_cost(ch, sc.noise_power, sc.alpha, sc.total_power);
  out.push_back({sp.cost, sp.handle});
  auto pp = fas::secrecy_cost_phases(ch, sc.noise_power, sc.alpha, sc.total_power);
  out.push_back({pp.cost, pp.handle});
  return out;
}

/// check_gradient at `points` random points of each shipped cost.
inline std::vector<verify::CheckResult> gradient_battery(std::uint64_t seed, int points = 5, int trials = 3,
                                                         bool include_fd = true) {
  std::vector<verify::CheckResult> out;
  std::mt19937_64 rng(seed + 17);
  for (const auto& c : shipped_costs(seed, include_fd)) {
    const Manifold m(c.handle);
    for (int k = 0; k < points; ++k) {
      const Point x = m.random_point(rng);
      auto r = verify::check_gradient(c.cost, m, x, trials, rng);
      r.name += " point " + std::to_string(k + 1);
      out.push_back(std::move(r));
    }
  }
  return out;
}

inline constexpr double kOracleTolerance = 1e-6;
inline constexpr double kHpdOracleTolerance = 1e-4;
/// Iteration cap of the oracle grid; the configured cap is raised to it.
inline constexpr int kOracleMaxIters = 5000;

struct OracleRow {
  std::string oracle;
  std::string solver;
  double optimum = 0.0;
  /// Worst final cost over the starts.
  double worst_value = 0.0;
  /// Largest |f_final - f_opt| over the starts.
  double gap = 0.0;
  double tolerance = kOracleTolerance;
  double median_iters = 0.0;
  int starts = 0;
  bool pass = false;
};

/// Every solver on every oracle problem from `starts` random starts that
/// are shared across solvers.
inline std::vector<OracleRow> oracle_grid(std::uint64_t seed, const std::vector<SolverKind>& solvers,
                                          SolverConfig cfg, int starts = 5) {
  cfg.max_iters = std::max(cfg.max_iters, kOracleMaxIters);
  const auto battery = oracles::oracle_battery(seed);
  std::vector<OracleRow> out;
  for (std::size_t pi = 0; pi < battery.size(); ++pi) {
    const auto& p = battery[pi];
    const Manifold m(p.handle);
    std::vector<Point> x0;
    {
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(pi), 0x0c1eu};
      std::mt19937_64 rng(seq);
      for (int s = 0; s < starts; ++s) x0.push_back(m.random_point(rng));
    }
    for (SolverKind kind : solvers) {
      OracleRow row;
      row.oracle = p.name;
      row.solver = to_string(kind);
      row.optimum = p.optimum_value;
      row.tolerance = p.name == "hpd_mean" ? kHpdOracleTolerance : kOracleTolerance;
      row.starts = starts;
      row.worst_value = -std::numeric_limits<double>::infinity();
      std::vector<double> iters;
      for (const auto& start : x0) {
        const SolverReport r = solve(kind, p.cost, m, start, cfg);
        row.worst_value = std::max(row.worst_value, r.final_cost);
        row.gap = std::max(row.gap, std::abs(r.final_cost - p.optimum_value));
        iters.push_back(r.iterations);
      }
      row.median_iters = verify::median(iters);
      row.pass = row.gap <= row.tolerance;
      out.push_back(std::move(row));
    }
  }
  return out;
}

/// One line of the emitted ASR and runtime tables.
struct SweepRow {
  double snr_db = 0.0;
  std::string solver;
  double asr_bits = 0.0;
  double asr_stderr = 0.0;
  double mean_iters = 0.0;
  /// Absent when timing is not recorded.
  std::optional<double> mean_time_s;
  int trials = 0;
  std::uint64_t seed = 0;

  bool operator==(const SweepRow&) const = default;
};

inline SweepRow to_row(const fas::SweepPoint& p, bool timing) {
  SweepRow r;
  r.snr_db = p.snr_db;
  r.solver = to_string(p.solver);
  r.asr_bits = p.asr;
  r.asr_stderr = p.asr_stderr;
  r.mean_iters = p.mean_iters;
  if (timing) r.mean_time_s = p.mean_time;
  r.trials = p.trials;
  r.seed = p.seed;
  return r;
}

struct SweepViolations {
  int feasibility = 0;
  int descent = 0;
};

inline SweepViolations count_violations(const std::vector<fas::SweepPoint>& points) {
  SweepViolations v;
  for (const auto& p : points) {
    for (const auto& t : p.trial_results) {
      v.feasibility += t.feasibility_violations;
      v.descent += t.descent_violations;
    }
  }
  return v;
}

}  // namespace rmo::bench
