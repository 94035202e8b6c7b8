#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "rmo/fas/beamforming.hpp"

namespace rmo::bench {

/// Invalid experiment configuration; the message names the offending field.
class ConfigError : public Error {
 public:
  using Error::Error;
};

enum class Mode { Verify, Oracles, Sweep, Ports };

inline std::string to_string(Mode m) {
  switch (m) {
    case Mode::Verify: return "verify";
    case Mode::Oracles: return "oracles";
    case Mode::Sweep: return "sweep";
    case Mode::Ports: return "ports";
  }
  return "?";
}

inline Mode parse_mode(const std::string& s) {
  if (s == "verify") return Mode::Verify;
  if (s == "oracles") return Mode::Oracles;
  if (s == "sweep") return Mode::Sweep;
  if (s == "ports") return Mode::Ports;
  throw ConfigError("mode: unknown value '" + s + "' (expected verify|oracles|sweep|ports)");
}

enum class Format { Csv, Json };

inline Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw ConfigError("format: unknown value '" + s + "' (expected csv|json)");
}

inline std::string to_string(Format f) { return f == Format::Csv ? "csv" : "json"; }

/// One experiment. Defaults here are the built-in layer; a config file and
/// then CLI flags override them field by field.
struct ExperimentConfig {
  Mode mode = Mode::Verify;
  std::vector<SolverKind> solvers = {SolverKind::RGD, SolverKind::RTR};
  std::string output_dir = "results";
  Format format = Format::Csv;
  /// Record solver wall time in the runtime table and summary.
  bool timing = true;
  unsigned threads = 0;

  int ports = 8;
  int active = 4;
  double alpha = 0.8;
  double total_power = 1.0;
  int paths = 4;
  double wavelength = 0.1;
  double spacing = 0.5;  // wavelengths
  double snr_min = 0.0;
  double snr_max = 20.0;
  double snr_step = 5.0;
  int trials = 100;
  std::uint64_t seed = 1;

  SolverConfig solver_config;

  [[nodiscard]] std::vector<double> snr_grid() const {
    std::vector<double> g;
    const int n = static_cast<int>(std::floor((snr_max - snr_min) / snr_step + 1e-9)) + 1;
    for (int i = 0; i < n; ++i) g.push_back(snr_min + i * snr_step);
    return g;
  }

  void validate() const {
    if (solvers.empty()) throw ConfigError("solvers: at least one solver must be selected");
    if (output_dir.empty()) throw ConfigError("output_dir: must not be empty");
    if (ports < 1) throw ConfigError("ports: must be positive");
    if (active < 1 || active > ports) throw ConfigError("active: must lie in [1, ports]");
    if (!(alpha > 0 && alpha <= 1)) throw ConfigError("alpha: must lie in (0, 1]");
    if (!(total_power > 0)) throw ConfigError("total_power: must be positive");
    if (paths < 1) throw ConfigError("paths: must be at least 1");
    if (!(wavelength > 0)) throw ConfigError("wavelength: must be positive");
    if (!(spacing > 0)) throw ConfigError("spacing: must be positive");
    if (!(snr_step > 0)) throw ConfigError("snr_step: must be positive");
    if (!(snr_max >= snr_min)) throw ConfigError("snr_max: must be at least snr_min");
    if (trials < 1) throw ConfigError("trials: must be at least 1");
    try {
      solver_config.validate();
    } catch (const InvalidArgumentError& e) {
      throw ConfigError(e.what());
    }
  }

  [[nodiscard]] fas::SecrecyScenario scenario(SolverKind solver) const {
    fas::SecrecyScenario s;
    s.grid = fas::PortGrid::uniform(ports, active, wavelength, spacing);
    s.total_power = total_power;
    s.alpha = alpha;
    s.paths = paths;
    s.snr_grid_db = snr_grid();
    s.noise_power = s.noise_for_snr(snr_min);
    s.trials = trials;
    s.seed = seed;
    s.solver = solver;
    s.solver_cfg = solver_config;
    s.solver_cfg.seed = seed;
    return s;
  }
};

namespace detail {

template <class T>
T get_field(const nlohmann::json& j, const std::string& path) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError(path + ": has the wrong type");
  }
}

inline void check_keys(const nlohmann::json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + ": must be an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key())) {
      throw ConfigError((where.empty() ? "" : where + ".") + it.key() + ": unknown field");
    }
  }
}

}  // namespace detail

/// Overlays the fields present in a JSON document.
inline void apply_json(ExperimentConfig& c, const nlohmann::json& j) {
  using detail::get_field;
  detail::check_keys(j, {"mode", "solvers", "output_dir", "format", "timing", "threads", "scenario", "solver_config"},
                     "");
  if (j.contains("mode")) c.mode = parse_mode(get_field<std::string>(j["mode"], "mode"));
  if (j.contains("solvers")) {
    c.solvers.clear();
    for (const auto& s : get_field<std::vector<std::string>>(j["solvers"], "solvers")) {
      try {
        c.solvers.push_back(parse_solver(s));
      } catch (const InvalidArgumentError& e) {
        throw ConfigError(std::string("solvers: ") + e.what());
      }
    }
  }
  if (j.contains("output_dir")) c.output_dir = get_field<std::string>(j["output_dir"], "output_dir");
  if (j.contains("format")) c.format = parse_format(get_field<std::string>(j["format"], "format"));
  if (j.contains("timing")) c.timing = get_field<bool>(j["timing"], "timing");
  if (j.contains("threads")) c.threads = get_field<unsigned>(j["threads"], "threads");

  if (j.contains("scenario")) {
    const auto& s = j["scenario"];
    detail::check_keys(s,
                       {"ports", "active", "alpha", "total_power", "paths", "wavelength", "spacing", "snr_min",
                        "snr_max", "snr_step", "trials", "seed"},
                       "scenario");
    auto set = [&](const char* key, auto& field) {
      if (s.contains(key)) field = get_field<std::decay_t<decltype(field)>>(s[key], std::string("scenario.") + key);
    };
    set("ports", c.ports);
    set("active", c.active);
    set("alpha", c.alpha);
    set("total_power", c.total_power);
    set("paths", c.paths);
    set("wavelength", c.wavelength);
    set("spacing", c.spacing);
    set("snr_min", c.snr_min);
    set("snr_max", c.snr_max);
    set("snr_step", c.snr_step);
    set("trials", c.trials);
    set("seed", c.seed);
  }
  if (j.contains("solver_config")) {
    const auto& s = j["solver_config"];
    detail::check_keys(s,
                       {"grad_tol", "max_iters", "armijo_c", "armijo_shrink", "initial_step", "cg_restart",
                        "tr_radius0", "tr_radius_max", "tr_accept_rho", "tr_expand", "tr_shrink", "lbfgs_memory"},
                       "solver_config");
    SolverConfig& sc = c.solver_config;
    auto set = [&](const char* key, auto& field) {
      if (s.contains(key)) {
        field = get_field<std::decay_t<decltype(field)>>(s[key], std::string("solver_config.") + key);
      }
    };
    set("grad_tol", sc.grad_tol);
    set("max_iters", sc.max_iters);
    set("armijo_c", sc.armijo_c);
    set("armijo_shrink", sc.armijo_shrink);
    set("initial_step", sc.initial_step);
    set("cg_restart", sc.cg_restart);
    set("tr_radius0", sc.tr_radius0);
    set("tr_radius_max", sc.tr_radius_max);
    set("tr_accept_rho", sc.tr_accept_rho);
    set("tr_expand", sc.tr_expand);
    set("tr_shrink", sc.tr_shrink);
    set("lbfgs_memory", sc.lbfgs_memory);
  }
}

inline void apply_config_file(ExperimentConfig& c, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config: '" + path + "' is not valid JSON: " + e.what());
  }
  apply_json(c, j);
}

/// Flags given on the command line; unset fields leave the config untouched.
struct CliOverrides {
  std::optional<std::string> mode;
  std::optional<std::vector<std::string>> solvers;
  std::optional<double> snr_min, snr_max, snr_step;
  std::optional<int> trials;
  std::optional<std::uint64_t> seed;
  std::optional<int> ports, active;
  std::optional<double> alpha;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<bool> timing;
  std::optional<unsigned> threads;
};

inline void apply_overrides(ExperimentConfig& c, const CliOverrides& o) {
  if (o.mode) c.mode = parse_mode(*o.mode);
  if (o.solvers) {
    c.solvers.clear();
    for (const auto& s : *o.solvers) {
      try {
        c.solvers.push_back(parse_solver(s));
      } catch (const InvalidArgumentError& e) {
        throw ConfigError(std::string("--solver: ") + e.what());
      }
    }
  }
  if (o.snr_min) c.snr_min = *o.snr_min;
  if (o.snr_max) c.snr_max = *o.snr_max;
  if (o.snr_step) c.snr_step = *o.snr_step;
  if (o.trials) c.trials = *o.trials;
  if (o.seed) c.seed = *o.seed;
  if (o.ports) c.ports = *o.ports;
  if (o.active) c.active = *o.active;
  if (o.alpha) c.alpha = *o.alpha;
  if (o.out) c.output_dir = *o.out;
  if (o.format) c.format = parse_format(*o.format);
  if (o.timing) c.timing = *o.timing;
  if (o.threads) c.threads = *o.threads;
}

}  // namespace rmo::bench
