#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "rmo/geometry/linalg.hpp"

namespace rmo::fas {

struct Position {
  double x = 0.0;  // meters
  double y = 0.0;  // meters
};

/// Candidate fluid-antenna ports on a uniform 2-D grid.
struct PortGrid {
  int n_ports = 8;
  int n_active = 4;
  double wavelength = 0.1;  // meters
  double spacing = 0.05;    // meters
  std::vector<Position> positions;
  /// Movement region (width, height) in wavelengths.
  double region_width = 0.0;
  double region_height = 0.0;

  /// n_ports on a cols x rows grid (two rows when n_ports is even and at
  /// least 4, otherwise one), centered in cells of size `spacing`.
  static PortGrid uniform(int n_ports, int n_active, double wavelength = 0.1,
                          double spacing_wavelengths = 0.5) {
    if (n_ports < 1) throw InvalidArgumentError("port grid: n_ports must be positive");
    if (n_active < 1 || n_active > n_ports) {
      throw InvalidArgumentError("port grid: n_active must lie in [1, n_ports]");
    }
    if (!(wavelength > 0)) throw InvalidArgumentError("port grid: wavelength must be positive");
    PortGrid g;
    g.n_ports = n_ports;
    g.n_active = n_active;
    g.wavelength = wavelength;
    g.spacing = spacing_wavelengths * wavelength;
    const int rows = (n_ports % 2 == 0 && n_ports >= 4) ? 2 : 1;
    const int cols = n_ports / rows;
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) g.positions.push_back({(c + 0.5) * g.spacing, (r + 0.5) * g.spacing});
    }
    g.region_width = cols * spacing_wavelengths;
    g.region_height = rows * spacing_wavelengths;
    return g;
  }

  void validate() const {
    if (n_active < 1 || n_active > n_ports) throw InvalidArgumentError("port grid: n_active must lie in [1, n_ports]");
    if (static_cast<int>(positions.size()) != n_ports) {
      throw InvalidArgumentError("port grid: positions do not match n_ports");
    }
    std::set<std::pair<double, double>> seen;
    for (const auto& p : positions) {
      if (!seen.insert({p.x, p.y}).second) throw InvalidArgumentError("port grid: duplicate position");
      const double w = region_width * wavelength + 1e-12;
      const double h = region_height * wavelength + 1e-12;
      if (p.x < 0 || p.y < 0 || p.x > w || p.y > h) {
        throw InvalidArgumentError("port grid: position outside the movement region");
      }
    }
  }

  [[nodiscard]] std::vector<Position> subset(const std::vector<int>& ports) const {
    std::vector<Position> out;
    out.reserve(ports.size());
    for (int p : ports) out.push_back(positions.at(static_cast<std::size_t>(p)));
    return out;
  }
};

/// Planar-array response exp(j 2pi/lambda (x sin(theta) cos(phi) + y sin(theta) sin(phi))).
inline Vector steering_vector(const std::vector<Position>& positions, double theta, double phi,
                              double wavelength) {
  if (!(wavelength > 0)) throw InvalidArgumentError("steering_vector: wavelength must be positive");
  if (positions.empty()) throw InvalidArgumentError("steering_vector: no positions");
  const double k = 2.0 * std::numbers::pi / wavelength;
  const double ux = std::sin(theta) * std::cos(phi);
  const double uy = std::sin(theta) * std::sin(phi);
  Vector a(static_cast<Eigen::Index>(positions.size()));
  for (std::size_t i = 0; i < positions.size(); ++i) {
    a(static_cast<Eigen::Index>(i)) = std::polar(1.0, k * (positions[i].x * ux + positions[i].y * uy));
  }
  return a;
}

/// Geometric multipath: complex gains with variance 1/L, elevation uniform on
/// [0, pi/2], azimuth uniform on [0, 2pi).
struct PathSet {
  Vector gains;
  RealVector theta;
  RealVector phi;

  [[nodiscard]] int size() const { return static_cast<int>(gains.size()); }

  template <class Rng>
  static PathSet sample(int paths, Rng& rng) {
    if (paths < 1) throw InvalidArgumentError("paths must be at least 1");
    PathSet p;
    p.gains = linalg::complex_gaussian(paths, 1, rng) / std::sqrt(static_cast<double>(paths));
    std::uniform_real_distribution<double> elev(0.0, std::numbers::pi / 2);
    std::uniform_real_distribution<double> azim(0.0, 2 * std::numbers::pi);
    p.theta.resize(paths);
    p.phi.resize(paths);
    for (int l = 0; l < paths; ++l) p.theta(l) = elev(rng);
    for (int l = 0; l < paths; ++l) p.phi(l) = azim(rng);
    return p;
  }

  /// sum_l g_l a(theta_l, phi_l) at the given antenna positions.
  [[nodiscard]] Vector channel(const std::vector<Position>& positions, double wavelength) const {
    Vector h = Vector::Zero(static_cast<Eigen::Index>(positions.size()));
    for (int l = 0; l < size(); ++l) h += gains(l) * steering_vector(positions, theta(l), phi(l), wavelength);
    return h;
  }
};

struct ChannelRealization {
  Vector h_bob;
  Vector h_eve;
  PathSet bob_paths;
  PathSet eve_paths;
};

/// Channels of both receivers at the given ports from one path realization.
inline ChannelRealization realize(const PortGrid& grid, const std::vector<int>& ports, const PathSet& bob,
                                  const PathSet& eve) {
  const auto pos = grid.subset(ports);
  return {bob.channel(pos, grid.wavelength), eve.channel(pos, grid.wavelength), bob, eve};
}

}  // namespace rmo::fas
