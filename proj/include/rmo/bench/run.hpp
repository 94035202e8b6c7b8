#pragma once

#include <iostream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rmo/bench/config.hpp"
#include "rmo/bench/experiments.hpp"
#include "rmo/bench/report.hpp"
#include "rmo/verify/grid_oracle.hpp"

namespace rmo::bench {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitCheckFailed = 3;

namespace detail {

inline std::string pass_line(bool pass, const std::string& what) { return (pass ? "PASS " : "FAIL ") + what; }

inline int run_verify(const ExperimentConfig& cfg, std::ostream& out) {
  std::ostringstream report;
  bool ok = true;
  auto emit = [&](bool pass, const std::string& line) {
    ok = ok && pass;
    report << line << '\n';
    out << line << '\n';
  };

  std::uint64_t salt = 0;
  for (const auto& h : geometry_handles()) {
    const GeometryStats s = geometry_stats(h, 1000, 20, cfg.seed + salt++);
    emit(s.max_feasibility <= kFeasibilityTol,
         pass_line(s.max_feasibility <= kFeasibilityTol,
                   "feasibility " + s.manifold + "  max_error=" + format_double(s.max_feasibility)));
    emit(s.max_idempotence <= 1e-12,
         pass_line(s.max_idempotence <= 1e-12,
                   "idempotence " + s.manifold + "  max_error=" + format_double(s.max_idempotence)));
    emit(s.retraction.pass, s.retraction.line());
  }

  for (const auto& r : gradient_battery(cfg.seed)) emit(r.pass, r.line());

  {
    std::mt19937_64 rng(cfg.seed + 99);
    const Vector v = linalg::complex_gaussian(2, 1, rng);
    const auto p = oracles::phase_align(v);
    verify::GridOptions opt;
    opt.phase_invariant = true;
    opt.threads = cfg.threads;
    const auto g = verify::grid_oracle(p.cost, p.handle, 360, opt);
    const double err = std::abs(g.best_value - p.optimum_value);
    emit(err <= 1e-3, pass_line(err <= 1e-3, "grid_oracle phase_align n=2  error=" + format_double(err)));

    const fas::SecrecyScenario sc = fas::SecrecyScenario{}.at_snr(10.0);
    fas::SecrecyScenario two = sc;
    two.grid = fas::PortGrid::uniform(2, 2, sc.grid.wavelength);
    const auto ch = fas::sample_channels(two, {0, 1}, rng);
    const auto sp = fas::secrecy_cost_phases(ch, two.noise_power, two.alpha, two.total_power);
    const auto coarse = verify::grid_oracle(sp.cost, sp.handle, 90, opt);
    const auto fine = verify::grid_oracle(sp.cost, sp.handle, 180, opt);
    // Lipschitz bound of the chart map times the coarse spacing.
    double lip = 0.0;
    {
      const Manifold m(sp.handle);
      const Tangent gr = riemannian_gradient(sp.cost, m, coarse.best_point);
      lip = std::max(1.0, m.norm(coarse.best_point, gr));
    }
    const double bound = lip * coarse.spacing * std::sqrt(static_cast<double>(coarse.axes));
    const bool mono = fine.best_value <= coarse.best_value + bound;
    emit(mono, pass_line(mono, "grid_oracle refinement secrecy_phases n=2  coarse=" +
                                   format_double(coarse.best_value) + " fine=" + format_double(fine.best_value)));
  }

  write_file(cfg.output_dir, "verify_report.txt", report.str());
  out << (ok ? "verify: all checks passed" : "verify: some checks failed") << '\n';
  return ok ? kExitOk : kExitCheckFailed;
}

inline int run_oracles(const ExperimentConfig& cfg, std::ostream& out) {
  const auto rows = oracle_grid(cfg.seed, cfg.solvers, cfg.solver_config);
  bool ok = true;
  for (const auto& r : rows) {
    ok = ok && r.pass;
    out << pass_line(r.pass, r.oracle + " " + r.solver + "  gap=" + format_double(r.gap) +
                                 "  tolerance=" + format_double(r.tolerance))
        << '\n';
  }
  if (cfg.format == Format::Csv) {
    write_file(cfg.output_dir, "oracles.csv", oracle_csv(rows));
  } else {
    write_file(cfg.output_dir, "oracles.json", json_text(oracle_json(rows)));
  }
  return ok ? kExitOk : kExitCheckFailed;
}

inline int run_sweep(const ExperimentConfig& cfg, std::ostream& out) {
  std::vector<std::vector<fas::SweepPoint>> per_solver;
  SweepViolations total;
  for (SolverKind kind : cfg.solvers) {
    fas::SweepOptions opt;
    opt.threads = cfg.threads;
    per_solver.push_back(fas::monte_carlo_sweep(cfg.scenario(kind), opt));
    const auto v = count_violations(per_solver.back());
    total.feasibility += v.feasibility;
    total.descent += v.descent;
  }
  std::vector<SweepRow> rows;
  const std::size_t n_snr = per_solver.front().size();
  for (std::size_t i = 0; i < n_snr; ++i) {
    for (const auto& pts : per_solver) rows.push_back(to_row(pts[i], cfg.timing));
  }
  for (const auto& f : emit_sweep_report(rows, cfg.output_dir, cfg.format)) {
    out << "wrote " << (std::filesystem::path(cfg.output_dir) / f).string() << '\n';
  }
  out << summary_text(rows);
  const bool ok = total.feasibility == 0 && total.descent == 0;
  out << pass_line(total.feasibility == 0, "power feasibility  violations=" + std::to_string(total.feasibility))
      << '\n'
      << pass_line(total.descent == 0, "final rate >= MRT rate  violations=" + std::to_string(total.descent))
      << '\n';
  return ok ? kExitOk : kExitCheckFailed;
}

inline int run_ports(const ExperimentConfig& cfg, std::ostream& out) {
  const fas::SecrecyScenario s = cfg.scenario(cfg.solvers.front());
  auto rng = fas::trial_stream(s.seed, 0, 0);
  const fas::TrialDraw draw = fas::TrialDraw::sample(s, rng);
  const fas::PortSelection sel = fas::select_ports(s, draw);
  if (cfg.format == Format::Csv) {
    write_file(cfg.output_dir, "ports.csv", ports_csv(sel));
  } else {
    write_file(cfg.output_dir, "ports.json", json_text(ports_json(sel)));
  }
  out << sel.table.size() << " subsets evaluated at " << format_double(cfg.snr_min) << " dB with "
      << to_string(s.solver) << "; best ports " << ports_key(sel.best_subset) << " secrecy rate "
      << format_double(sel.best_rate) << " bits/s/Hz\n";
  return kExitOk;
}

}  // namespace detail

/// Runs one validated experiment. Configuration and budget errors map to
/// exit status 2, failed checks to 3.
inline int run(const ExperimentConfig& cfg, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  try {
    cfg.validate();
    switch (cfg.mode) {
      case Mode::Verify: return detail::run_verify(cfg, out);
      case Mode::Oracles: return detail::run_oracles(cfg, out);
      case Mode::Sweep: return detail::run_sweep(cfg, out);
      case Mode::Ports: return detail::run_ports(cfg, out);
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const BudgetExceededError& e) {
    err << e.what() << '\n';
    return kExitConfig;
  } catch (const InvalidArgumentError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}

}  // namespace rmo::bench
