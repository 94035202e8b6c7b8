#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

namespace rmo::verify {

/// Error samples e(t) of a Taylor-remainder test.
struct SlopeSamples {
  std::vector<double> t;
  std::vector<double> e;
};

/// Least-squares slope of log e against log t over the middle three samples
/// that sit above the noise floor. Empty when fewer than two samples survive.
inline std::optional<double> fit_middle_slope(const SlopeSamples& s, double noise_floor) {
  std::vector<std::size_t> valid;
  for (std::size_t i = 0; i < s.t.size(); ++i) {
    if (std::isfinite(s.e[i]) && s.e[i] >= noise_floor) valid.push_back(i);
  }
  if (valid.size() < 2) return std::nullopt;
  std::size_t lo = 0;
  std::size_t count = valid.size();
  if (count > 3) {
    lo = (count - 3) / 2;
    count = 3;
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = lo; k < lo + count; ++k) {
    const double lx = std::log10(s.t[valid[k]]);
    const double ly = std::log10(s.e[valid[k]]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double n = static_cast<double>(count);
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  if (n == 0) return std::nan("");
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

/// t = 10^-k, k = 1..7.
inline std::vector<double> default_steps() {
  std::vector<double> t;
  for (int k = 1; k <= 7; ++k) t.push_back(std::pow(10.0, -k));
  return t;
}

}  // namespace rmo::verify
