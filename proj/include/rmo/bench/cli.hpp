#pragma once

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rmo/bench/config.hpp"
#include "rmo/bench/report.hpp"
#include "rmo/bench/run.hpp"

namespace rmo::bench {

struct CliArgs {
  std::optional<std::string> config_path;
  CliOverrides overrides;
};

namespace detail {

template <class T>
void add_opt(CLI::App& app, const std::string& flag, std::optional<T>& target, const std::string& help) {
  app.add_option_function<T>(flag, [&target](const T& v) { target = v; }, help);
}

inline std::string join_solvers(const std::vector<SolverKind>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s;
}

}  // namespace detail

/// Declares every flag with its built-in default in the help text.
inline void declare_flags(CLI::App& app, CliArgs& args) {
  const ExperimentConfig d;
  auto& o = args.overrides;
  app.add_option_function<std::string>(
      "--config", [&args](const std::string& p) { args.config_path = p; },
      "JSON experiment file; its fields override the defaults, flags override it");
  detail::add_opt(app, "--mode", o.mode, "verify|oracles|sweep|ports (default " + to_string(d.mode) + ")");
  app.add_option_function<std::vector<std::string>>(
         "--solver", [&o](const std::vector<std::string>& v) { o.solvers = v; },
         "Comma-separated list of rgd|rcg|rtr|lbfgs (default " + detail::join_solvers(d.solvers) + ")")
      ->delimiter(',');
  detail::add_opt(app, "--snr-min", o.snr_min, "Lowest SNR in dB (default " + format_double(d.snr_min) + ")");
  detail::add_opt(app, "--snr-max", o.snr_max, "Highest SNR in dB (default " + format_double(d.snr_max) + ")");
  detail::add_opt(app, "--snr-step", o.snr_step, "SNR step in dB (default " + format_double(d.snr_step) + ")");
  detail::add_opt(app, "--trials", o.trials, "Monte Carlo trials per SNR point (default " +
                                                  std::to_string(d.trials) + ")");
  detail::add_opt(app, "--seed", o.seed, "Master seed (default " + std::to_string(d.seed) + ")");
  detail::add_opt(app, "--ports", o.ports, "Candidate FA ports (default " + std::to_string(d.ports) + ")");
  detail::add_opt(app, "--active", o.active, "Active FAs (default " + std::to_string(d.active) + ")");
  detail::add_opt(app, "--alpha", o.alpha,
                  "Power fraction of the confidential signal (default " + format_double(d.alpha) + ")");
  detail::add_opt(app, "--out", o.out, "Output directory (default " + d.output_dir + ")");
  detail::add_opt(app, "--format", o.format, "csv|json (default " + to_string(d.format) + ")");
  detail::add_opt(app, "--threads", o.threads, "Worker threads, 0 for all cores (default 0)");
  app.add_flag_function(
      "--no-timing", [&o](std::int64_t) { o.timing = false; },
      "Leave solver wall time out of every artifact so all outputs are reproducible");
}

/// Defaults, then the config file, then the flags.
inline ExperimentConfig resolve(const CliArgs& args) {
  ExperimentConfig cfg;
  if (args.config_path) apply_config_file(cfg, *args.config_path);
  apply_overrides(cfg, args.overrides);
  return cfg;
}

inline int main_entry(int argc, const char* const* argv, std::ostream& out = std::cout,
                      std::ostream& err = std::cerr) {
  CLI::App app{"Riemannian manifold optimization bench: verification, oracle grid and FAS secrecy sweeps"};
  CliArgs args;
  declare_flags(app, args);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  ExperimentConfig cfg;
  try {
    cfg = resolve(args);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  return run(cfg, out, err);
}

}  // namespace rmo::bench
