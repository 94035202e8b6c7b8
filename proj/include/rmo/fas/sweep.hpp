#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <random>
#include <thread>
#include <vector>

#include "rmo/fas/beamforming.hpp"

namespace rmo::fas {

struct TrialResult {
  /// Clamped secrecy rate of the selected subset.
  double secrecy_rate = 0.0;
  double unclamped_rate = 0.0;
  double initial_rate = 0.0;
  std::vector<int> selected_ports;
  /// Solver iterations summed over every subset evaluated in the trial.
  int iterations = 0;
  /// Solver wall time summed over every subset evaluated in the trial.
  double wall_time = 0.0;
  SolverReport solver_report;
  int feasibility_violations = 0;
  /// Subsets whose final rate fell below their MRT starting rate.
  int descent_violations = 0;
};

struct SweepPoint {
  double snr_db = 0.0;
  SolverKind solver = SolverKind::RTR;
  double asr = 0.0;
  double asr_stderr = 0.0;
  double mean_iters = 0.0;
  double iters_stderr = 0.0;
  double mean_time = 0.0;
  double time_stderr = 0.0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<TrialResult> trial_results;
};

struct SweepOptions {
  /// Worker threads; 0 uses the hardware concurrency.
  unsigned threads = 0;
  PortSearch search = PortSearch::Exhaustive;
};

/// RNG stream of one (snr, trial) cell; independent of solver and thread layout.
inline std::mt19937_64 trial_stream(std::uint64_t seed, std::size_t snr_index, std::size_t trial_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(snr_index), static_cast<std::uint32_t>(trial_index)};
  return std::mt19937_64(seq);
}

inline TrialResult run_trial(const SecrecyScenario& s, std::size_t snr_index, std::size_t trial_index,
                             PortSearch search = PortSearch::Exhaustive) {
  auto rng = trial_stream(s.seed, snr_index, trial_index);
  const TrialDraw draw = TrialDraw::sample(s, rng);
  PortSelection sel = select_ports(s, draw, search);
  TrialResult t;
  t.secrecy_rate = sel.best_rate;
  t.unclamped_rate = sel.best.unclamped_rate;
  t.initial_rate = sel.best.initial_rate;
  t.selected_ports = sel.best_subset;
  for (const auto& row : sel.table) {
    t.iterations += row.iterations;
    t.wall_time += row.wall_time;
    t.feasibility_violations += row.feasibility_violations;
    if (row.unclamped_rate < row.initial_rate) ++t.descent_violations;
  }
  t.solver_report = std::move(sel.best.report);
  return t;
}

namespace detail {

inline void mean_stderr(const std::vector<double>& v, double& mean, double& se) {
  const double n = static_cast<double>(v.size());
  double s = 0.0;
  for (double x : v) s += x;
  mean = s / n;
  if (v.size() < 2) {
    se = 0.0;
    return;
  }
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  se = std::sqrt(ss / (n - 1.0) / n);
}

}  // namespace detail

/// Average secrecy rate, iterations and solver time per SNR point for the
/// scenario's solver. Trials run in parallel; results do not depend on the
/// thread count.
inline std::vector<SweepPoint> monte_carlo_sweep(const SecrecyScenario& s, const SweepOptions& opt = {}) {
  s.validate();
  const std::size_t n_snr = s.snr_grid_db.size();
  const auto n_trials = static_cast<std::size_t>(s.trials);
  std::vector<SweepPoint> out(n_snr);
  std::vector<SecrecyScenario> at;
  for (std::size_t i = 0; i < n_snr; ++i) {
    at.push_back(s.at_snr(s.snr_grid_db[i]));
    out[i].snr_db = s.snr_grid_db[i];
    out[i].solver = s.solver;
    out[i].trials = s.trials;
    out[i].seed = s.seed;
    out[i].trial_results.resize(n_trials);
  }

  const std::size_t jobs = n_snr * n_trials;
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t j = next.fetch_add(1);
      if (j >= jobs) return;
      const std::size_t si = j / n_trials;
      const std::size_t ti = j % n_trials;
      try {
        out[si].trial_results[ti] = run_trial(at[si], si, ti, opt.search);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = jobs;
      }
    }
  };
  unsigned workers = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(jobs, 1)));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  for (auto& p : out) {
    std::vector<double> rates, iters, times;
    for (const auto& t : p.trial_results) {
      rates.push_back(t.secrecy_rate);
      iters.push_back(t.iterations);
      times.push_back(t.wall_time);
    }
    detail::mean_stderr(rates, p.asr, p.asr_stderr);
    detail::mean_stderr(iters, p.mean_iters, p.iters_stderr);
    detail::mean_stderr(times, p.mean_time, p.time_stderr);
  }
  return out;
}

}  // namespace rmo::fas
