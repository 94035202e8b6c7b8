#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "rmo/fas/channel.hpp"
#include "rmo/fas/secrecy.hpp"
#include "rmo/solvers/solve.hpp"

namespace rmo::fas {

/// Full case-study configuration.
struct SecrecyScenario {
  PortGrid grid = PortGrid::uniform(8, 4);
  double total_power = 1.0;  // watts
  /// Fraction of the power budget given to the confidential signal.
  double alpha = 0.8;
  double noise_power = 0.1;  // watts
  int paths = 4;
  std::vector<double> snr_grid_db = {0, 5, 10, 15, 20};
  int trials = 100;
  std::uint64_t seed = 1;
  SolverKind solver = SolverKind::RTR;
  SolverConfig solver_cfg;

  void validate() const {
    grid.validate();
    if (!(total_power > 0)) throw InvalidArgumentError("scenario: total_power must be positive");
    if (!(noise_power > 0)) throw InvalidArgumentError("scenario: noise_power must be positive");
    if (!(alpha > 0 && alpha <= 1)) throw InvalidArgumentError("scenario: alpha must lie in (0, 1]");
    if (paths < 1) throw InvalidArgumentError("scenario: paths must be at least 1");
    if (trials < 1) throw InvalidArgumentError("scenario: trials must be at least 1");
    solver_cfg.validate();
  }

  [[nodiscard]] double noise_for_snr(double snr_db) const {
    return total_power / std::pow(10.0, snr_db / 10.0);
  }

  [[nodiscard]] SecrecyScenario at_snr(double snr_db) const {
    SecrecyScenario s = *this;
    s.noise_power = noise_for_snr(snr_db);
    return s;
  }
};

/// Everything random in one trial, drawn once and shared by every port
/// subset: Bob's and Eve's paths plus the draw seeding the noise init.
struct TrialDraw {
  PathSet bob;
  PathSet eve;
  Vector init;  // length n_ports

  template <class Rng>
  static TrialDraw sample(const SecrecyScenario& s, Rng& rng) {
    TrialDraw d;
    d.bob = PathSet::sample(s.paths, rng);
    d.eve = PathSet::sample(s.paths, rng);
    d.init = linalg::complex_gaussian(s.grid.n_ports, 1, rng);
    return d;
  }

  [[nodiscard]] Vector init_for(const std::vector<int>& ports) const {
    Vector u(static_cast<Eigen::Index>(ports.size()));
    for (std::size_t i = 0; i < ports.size(); ++i) u(static_cast<Eigen::Index>(i)) = init(ports[i]);
    return u;
  }
};

template <class Rng>
ChannelRealization sample_channels(const SecrecyScenario& s, const std::vector<int>& active_ports, Rng& rng) {
  if (static_cast<int>(active_ports.size()) != s.grid.n_active) {
    throw InvalidArgumentError("sample_channels: expected n_active ports");
  }
  const PathSet bob = PathSet::sample(s.paths, rng);
  const PathSet eve = PathSet::sample(s.paths, rng);
  return realize(s.grid, active_ports, bob, eve);
}

struct BeamformingResult {
  /// max(0, R) at the solver output.
  double rate = 0.0;
  double unclamped_rate = 0.0;
  double initial_rate = 0.0;
  Vector w;
  Vector z;
  SolverReport report;
};

/// Runs the scenario's solver on the secrecy cost from the MRT start.
inline BeamformingResult optimize_beamforming(const SecrecyScenario& s, const ChannelRealization& ch,
                                              const Vector& init_draw) {
  const SecrecyProblem prob = secrecy_cost(ch, s.noise_power, s.alpha, s.total_power);
  const Manifold m(prob.handle);
  const Point x0 = mrt_init(prob, ch, init_draw);
  BeamformingResult out;
  out.initial_rate = -prob.cost.value(x0);
  out.report = solve(s.solver, prob.cost, m, x0, s.solver_cfg);
  out.w = prob.signal(out.report.final_point);
  out.z = prob.noise(out.report.final_point);
  out.unclamped_rate = -out.report.final_cost;
  out.rate = std::max(0.0, out.unclamped_rate);
  return out;
}

/// Lexicographic k-subsets of {0, ..., n-1}.
inline std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

inline constexpr double kExhaustiveBudget = 1e4;

struct SubsetRow {
  std::vector<int> ports;
  double rate = 0.0;
  double unclamped_rate = 0.0;
  double initial_rate = 0.0;
  int iterations = 0;
  double wall_time = 0.0;
  Termination termination = Termination::GradTol;
  int feasibility_violations = 0;
};

struct PortSelection {
  std::vector<int> best_subset;
  double best_rate = 0.0;
  std::vector<SubsetRow> table;
  /// Budget exceeded; the subset came from greedy growth.
  bool greedy = false;
  /// Solver report of the winning subset.
  BeamformingResult best;
};

enum class PortSearch { Exhaustive, ExhaustiveOrGreedy };

inline SubsetRow evaluate_subset(const SecrecyScenario& s, const TrialDraw& draw, const std::vector<int>& ports,
                                 BeamformingResult* keep = nullptr) {
  const ChannelRealization ch = realize(s.grid, ports, draw.bob, draw.eve);
  BeamformingResult r = optimize_beamforming(s, ch, draw.init_for(ports));
  SubsetRow row{ports,
                r.rate,
                r.unclamped_rate,
                r.initial_rate,
                r.report.iterations,
                r.report.wall_time,
                r.report.termination,
                r.report.feasibility_violations};
  if (keep) *keep = std::move(r);
  return row;
}

/// Picks the active-port subset with the highest optimized secrecy rate.
/// All subsets share the trial's path realization. Ties go to the
/// lexicographically first subset.
inline PortSelection select_ports(const SecrecyScenario& s, const TrialDraw& draw,
                                  PortSearch search = PortSearch::Exhaustive) {
  const int n = s.grid.n_ports;
  const int k = s.grid.n_active;
  PortSelection out;
  if (binomial(n, k) > kExhaustiveBudget) {
    if (search == PortSearch::Exhaustive) {
      throw BudgetExceededError("select_ports: C(" + std::to_string(n) + ", " + std::to_string(k) +
                                ") subsets exceed the exhaustive budget of 10000; greedy fallback available");
    }
    out.greedy = true;
    std::vector<int> chosen;
    while (static_cast<int>(chosen.size()) < k) {
      SecrecyScenario partial = s;
      partial.grid.n_active = static_cast<int>(chosen.size()) + 1;
      int best_port = -1;
      double best_rate = -std::numeric_limits<double>::infinity();
      for (int p = 0; p < n; ++p) {
        if (std::find(chosen.begin(), chosen.end(), p) != chosen.end()) continue;
        std::vector<int> cand = chosen;
        cand.insert(std::upper_bound(cand.begin(), cand.end(), p), p);
        SubsetRow row = evaluate_subset(partial, draw, cand);
        if (row.unclamped_rate > best_rate) {
          best_rate = row.unclamped_rate;
          best_port = p;
        }
        out.table.push_back(std::move(row));
      }
      chosen.insert(std::upper_bound(chosen.begin(), chosen.end(), best_port), best_port);
    }
    out.table.push_back(evaluate_subset(s, draw, chosen, &out.best));
    out.best_subset = chosen;
    out.best_rate = out.best.rate;
    return out;
  }

  double best_unclamped = -std::numeric_limits<double>::infinity();
  for (const auto& ports : combinations(n, k)) {
    BeamformingResult r;
    SubsetRow row = evaluate_subset(s, draw, ports, &r);
    if (row.unclamped_rate > best_unclamped) {
      best_unclamped = row.unclamped_rate;
      out.best_subset = ports;
      out.best_rate = row.rate;
      out.best = std::move(r);
    }
    out.table.push_back(std::move(row));
  }
  return out;
}

}  // namespace rmo::fas
