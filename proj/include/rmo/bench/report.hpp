#pragma once

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rmo/bench/config.hpp"
#include "rmo/bench/experiments.hpp"

namespace rmo::bench {

inline constexpr const char* kSweepHeader = "snr_db,solver,asr_bits,asr_stderr,mean_iters,mean_time_s,trials,seed";

/// Shortest representation that parses back to the same double.
inline std::string format_double(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

inline double parse_double(const std::string& s, const std::string& field) {
  double v = 0.0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size()) throw Error("parse: bad number in " + field);
  return v;
}

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << kSweepHeader << '\n';
  for (const auto& r : rows) {
    os << format_double(r.snr_db) << ',' << r.solver << ',' << format_double(r.asr_bits) << ','
       << format_double(r.asr_stderr) << ',' << format_double(r.mean_iters) << ','
       << (r.mean_time_s ? format_double(*r.mean_time_s) : "") << ',' << r.trials << ',' << r.seed << '\n';
  }
  return os.str();
}

inline std::vector<SweepRow> parse_sweep_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kSweepHeader) throw Error("parse: unexpected CSV header");
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    if (line.back() == ',') f.emplace_back();
    if (f.size() != 8) throw Error("parse: CSV row has " + std::to_string(f.size()) + " fields");
    SweepRow r;
    r.snr_db = parse_double(f[0], "snr_db");
    r.solver = f[1];
    r.asr_bits = parse_double(f[2], "asr_bits");
    r.asr_stderr = parse_double(f[3], "asr_stderr");
    r.mean_iters = parse_double(f[4], "mean_iters");
    if (!f[5].empty()) r.mean_time_s = parse_double(f[5], "mean_time_s");
    r.trials = std::stoi(f[6]);
    r.seed = std::stoull(f[7]);
    rows.push_back(std::move(r));
  }
  return rows;
}

inline nlohmann::json sweep_json(const std::vector<SweepRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j;
    j["snr_db"] = r.snr_db;
    j["solver"] = r.solver;
    j["asr_bits"] = r.asr_bits;
    j["asr_stderr"] = r.asr_stderr;
    j["mean_iters"] = r.mean_iters;
    j["mean_time_s"] = r.mean_time_s ? nlohmann::json(*r.mean_time_s) : nlohmann::json(nullptr);
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    arr.push_back(std::move(j));
  }
  return nlohmann::json{{"rows", std::move(arr)}};
}

inline std::vector<SweepRow> parse_sweep_json(const nlohmann::json& doc) {
  std::vector<SweepRow> rows;
  for (const auto& j : doc.at("rows")) {
    SweepRow r;
    r.snr_db = j.at("snr_db").get<double>();
    r.solver = j.at("solver").get<std::string>();
    r.asr_bits = j.at("asr_bits").get<double>();
    r.asr_stderr = j.at("asr_stderr").get<double>();
    r.mean_iters = j.at("mean_iters").get<double>();
    if (!j.at("mean_time_s").is_null()) r.mean_time_s = j.at("mean_time_s").get<double>();
    r.trials = j.at("trials").get<int>();
    r.seed = j.at("seed").get<std::uint64_t>();
    rows.push_back(std::move(r));
  }
  return rows;
}

struct SolverSummary {
  std::string solver;
  double mean_asr = 0.0;
  std::optional<double> mean_time_s;
  double mean_iters = 0.0;
};

/// Per-solver arithmetic means over the SNR range, in first-seen order.
inline std::vector<SolverSummary> summarize(const std::vector<SweepRow>& rows) {
  std::vector<SolverSummary> out;
  std::vector<int> counts;
  for (const auto& r : rows) {
    auto it = std::find_if(out.begin(), out.end(), [&](const SolverSummary& s) { return s.solver == r.solver; });
    if (it == out.end()) {
      out.push_back({r.solver, 0.0, std::nullopt, 0.0});
      counts.push_back(0);
      it = out.end() - 1;
    }
    const auto k = static_cast<std::size_t>(it - out.begin());
    it->mean_asr += r.asr_bits;
    it->mean_iters += r.mean_iters;
    if (r.mean_time_s) it->mean_time_s = it->mean_time_s.value_or(0.0) + *r.mean_time_s;
    ++counts[k];
  }
  for (std::size_t k = 0; k < out.size(); ++k) {
    const double n = counts[k];
    out[k].mean_asr /= n;
    out[k].mean_iters /= n;
    if (out[k].mean_time_s) *out[k].mean_time_s /= n;
  }
  return out;
}

inline std::string summary_text(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  double lo = rows.empty() ? 0.0 : rows.front().snr_db, hi = lo;
  for (const auto& r : rows) {
    lo = std::min(lo, r.snr_db);
    hi = std::max(hi, r.snr_db);
  }
  os << "Averages over the SNR range " << format_double(lo) << " to " << format_double(hi) << " dB\n";
  os << "solver  asr_bits  mean_time_s  mean_iters\n";
  for (const auto& s : summarize(rows)) {
    os << s.solver << "  " << format_double(s.mean_asr) << "  "
       << (s.mean_time_s ? format_double(*s.mean_time_s) : "-") << "  " << format_double(s.mean_iters) << '\n';
  }
  return os.str();
}

inline std::string oracle_csv(const std::vector<OracleRow>& rows) {
  std::ostringstream os;
  os << "oracle,solver,optimum,worst_value,gap,tolerance,median_iters,starts,pass\n";
  for (const auto& r : rows) {
    os << r.oracle << ',' << r.solver << ',' << format_double(r.optimum) << ',' << format_double(r.worst_value)
       << ',' << format_double(r.gap) << ',' << format_double(r.tolerance) << ','
       << format_double(r.median_iters) << ',' << r.starts << ',' << (r.pass ? "true" : "false") << '\n';
  }
  return os.str();
}

inline nlohmann::json oracle_json(const std::vector<OracleRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    arr.push_back({{"oracle", r.oracle},
                   {"solver", r.solver},
                   {"optimum", r.optimum},
                   {"worst_value", r.worst_value},
                   {"gap", r.gap},
                   {"tolerance", r.tolerance},
                   {"median_iters", r.median_iters},
                   {"starts", r.starts},
                   {"pass", r.pass}});
  }
  return nlohmann::json{{"rows", std::move(arr)}};
}

inline std::string ports_key(const std::vector<int>& ports) {
  std::string s;
  for (std::size_t i = 0; i < ports.size(); ++i) s += (i ? "-" : "") + std::to_string(ports[i]);
  return s;
}

inline std::string ports_csv(const fas::PortSelection& sel) {
  std::ostringstream os;
  os << "ports,secrecy_rate,unclamped_rate,initial_rate,iterations,termination,selected\n";
  for (const auto& r : sel.table) {
    os << ports_key(r.ports) << ',' << format_double(r.rate) << ',' << format_double(r.unclamped_rate) << ','
       << format_double(r.initial_rate) << ',' << r.iterations << ',' << to_string(r.termination) << ','
       << (r.ports == sel.best_subset ? "true" : "false") << '\n';
  }
  return os.str();
}

inline nlohmann::json ports_json(const fas::PortSelection& sel) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : sel.table) {
    arr.push_back({{"ports", ports_key(r.ports)},
                   {"secrecy_rate", r.rate},
                   {"unclamped_rate", r.unclamped_rate},
                   {"initial_rate", r.initial_rate},
                   {"iterations", r.iterations},
                   {"termination", to_string(r.termination)},
                   {"selected", r.ports == sel.best_subset}});
  }
  return nlohmann::json{{"rows", std::move(arr)}, {"greedy", sel.greedy}};
}

/// Writes `content` to dir/name, creating the directory.
inline void write_file(const std::string& dir, const std::string& name, const std::string& content) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ConfigError("output_dir: cannot create '" + dir + "': " + ec.message());
  const auto path = std::filesystem::path(dir) / name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("output_dir: cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw Error("write failed: " + path.string());
}

inline std::string json_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

/// Emits the ASR table (never timed, so reproducible byte for byte), the
/// runtime table and the plain-text summary.
inline std::vector<std::string> emit_sweep_report(const std::vector<SweepRow>& rows, const std::string& dir,
                                                  Format format) {
  if (rows.empty()) throw InvalidArgumentError("emit_report: no results");
  std::vector<SweepRow> asr = rows;
  for (auto& r : asr) r.mean_time_s.reset();
  std::vector<std::string> files;
  const std::string ext = format == Format::Csv ? ".csv" : ".json";
  auto emit = [&](const std::string& stem, const std::vector<SweepRow>& v) {
    write_file(dir, stem + ext, format == Format::Csv ? sweep_csv(v) : json_text(sweep_json(v)));
    files.push_back(stem + ext);
  };
  emit("asr_vs_snr", asr);
  emit("runtime_vs_snr", rows);
  write_file(dir, "summary.txt", summary_text(rows));
  files.emplace_back("summary.txt");
  return files;
}

}  // namespace rmo::bench
