#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "rmo/geometry/cost.hpp"
#include "rmo/geometry/linalg.hpp"
#include "rmo/geometry/manifold.hpp"

namespace rmo::oracles {

/// A benchmark cost with a known global minimum.
struct OracleProblem {
  std::string name;
  ManifoldHandle handle;
  CostFunction cost;
  double optimum_value = 0.0;
  /// A point attaining optimum_value.
  Point certificate;
  std::string certificate_description;
  /// Optimizer is not unique beyond the trivial symmetry of the cost.
  bool non_unique = false;
};

namespace detail {

inline void require_hermitian(const Matrix& a, const char* where) {
  if (a.rows() != a.cols()) throw InvalidArgumentError(std::string(where) + ": matrix is not square");
  const double scale = std::max(1.0, a.norm());
  if ((a - a.adjoint()).norm() > 1e-12 * scale) {
    throw InvalidArgumentError(std::string(where) + ": matrix is not Hermitian");
  }
}

/// Top-k trace cost -Re tr(X^H A X) shared by Brockett and subspace fitting.
inline CostFunction trace_cost(const Matrix& a, std::string name) {
  CostFunction c;
  c.name = std::move(name);
  c.value = [a](const Point& x) { return -(x.block().adjoint() * a * x.block()).trace().real(); };
  c.euclidean_grad = [a](const Point& x) { return Ambient(Matrix(-2.0 * a * x.block())); };
  c.euclidean_hess_vec = [a](const Point&, const Ambient& v) { return Ambient(Matrix(-2.0 * a * v[0])); };
  return c;
}

}  // namespace detail

/// f(x) = Re(x^H A x) on the unit sphere; minimum lambda_min(A).
inline OracleProblem rayleigh(const Matrix& a) {
  detail::require_hermitian(a, "rayleigh");
  const Matrix ah = linalg::herm(a);
  OracleProblem p{"rayleigh", ManifoldHandle::complex_sphere(static_cast<int>(a.rows()), 1.0), {}, 0.0,
                  {}, "eigenvector of the smallest eigenvalue"};
  p.cost.name = "rayleigh";
  p.cost.value = [ah](const Point& x) { return (x.block().adjoint() * ah * x.block())(0, 0).real(); };
  p.cost.euclidean_grad = [ah](const Point& x) { return Ambient(Matrix(2.0 * ah * x.block())); };
  p.cost.euclidean_hess_vec = [ah](const Point&, const Ambient& v) { return Ambient(Matrix(2.0 * ah * v[0])); };
  Eigen::SelfAdjointEigenSolver<Matrix> es(ah);
  p.optimum_value = es.eigenvalues()(0);
  p.certificate = Point(Matrix(es.eigenvectors().col(0)));
  p.non_unique = a.rows() > 1 && std::abs(es.eigenvalues()(1) - es.eigenvalues()(0)) < 1e-12;
  return p;
}

/// f(X) = -Re tr(X^H A X) on Stiefel(n, k); minimum -(sum of k largest eigenvalues).
inline OracleProblem brockett(const Matrix& a, int k) {
  detail::require_hermitian(a, "brockett");
  const int n = static_cast<int>(a.rows());
  if (k > n) throw InvalidArgumentError("brockett: k must not exceed n");
  const Matrix ah = linalg::herm(a);
  OracleProblem p{"brockett", ManifoldHandle::stiefel(n, k), detail::trace_cost(ah, "brockett"), 0.0, {},
                  "eigenvectors of the k largest eigenvalues"};
  Eigen::SelfAdjointEigenSolver<Matrix> es(ah);
  p.optimum_value = -es.eigenvalues().tail(k).sum();
  p.certificate = Point(Matrix(es.eigenvectors().rightCols(k)));
  return p;
}

/// f(x) = -|v^H x|^2 on the complex circle; minimum -(sum |v_i|)^2 at
/// x_i = exp(j arg v_i) up to a global phase.
inline OracleProblem phase_align(const Vector& v) {
  const int n = static_cast<int>(v.size());
  if (n == 0) throw InvalidArgumentError("phase_align: v must be nonempty");
  OracleProblem p{"phase_align", ManifoldHandle::complex_circle(n), {}, 0.0, {},
                  "x_i = exp(j arg v_i), any global phase"};
  const Matrix vm = v;
  p.cost.name = "phase_align";
  p.cost.value = [vm](const Point& x) { return -std::norm((vm.adjoint() * x.block())(0, 0)); };
  p.cost.euclidean_grad = [vm](const Point& x) {
    return Ambient(Matrix(-2.0 * vm * (vm.adjoint() * x.block())));
  };
  p.cost.euclidean_hess_vec = [vm](const Point&, const Ambient& u) {
    return Ambient(Matrix(-2.0 * vm * (vm.adjoint() * u[0])));
  };
  Matrix cert(n, 1);
  double l1 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double mag = std::abs(v(i));
    l1 += mag;
    if (mag == 0.0) {
      cert(i) = 1.0;
      p.non_unique = true;
    } else {
      cert(i) = v(i) / mag;
    }
  }
  p.optimum_value = -l1 * l1;
  p.certificate = Point(std::move(cert));
  return p;
}

/// f(X) = -Re tr(X^H M X) on Grassmann(n, p); minimum -(sum of p largest
/// eigenvalues), attained at the dominant eigenspace.
inline OracleProblem subspace_fit(const Matrix& mtx, int p_dim) {
  detail::require_hermitian(mtx, "subspace_fit");
  const int n = static_cast<int>(mtx.rows());
  if (p_dim > n) throw InvalidArgumentError("subspace_fit: p must not exceed n");
  const Matrix mh = linalg::herm(mtx);
  OracleProblem p{"subspace_fit", ManifoldHandle::grassmann(n, p_dim),
                  detail::trace_cost(mh, "subspace_fit"), 0.0, {}, "dominant p-dimensional eigenspace"};
  Eigen::SelfAdjointEigenSolver<Matrix> es(mh);
  p.optimum_value = -es.eigenvalues().tail(p_dim).sum();
  p.certificate = Point(Matrix(es.eigenvectors().rightCols(p_dim)));
  return p;
}

/// Geodesic midpoint Y1^1/2 (Y1^-1/2 Y2 Y1^-1/2)^1/2 Y1^1/2.
inline Matrix hpd_midpoint(const Matrix& y1, const Matrix& y2) {
  const Matrix s = linalg::sqrtm_hpd(y1);
  const Matrix si = linalg::inv_sqrtm_hpd(y1);
  return linalg::herm(s * linalg::sqrtm_hpd(linalg::herm(si * y2 * si)) * s);
}

/// Euclidean gradient of X -> sum_i d^2(X, Y_i) by central differences over
/// the real basis of Hermitian matrices.
inline Matrix hpd_fd_gradient(const std::function<double(const Matrix&)>& f, const Matrix& x) {
  const Eigen::Index n = x.rows();
  const double h = 1e-5 * std::max(1.0, x.norm());
  auto diff = [&](const Matrix& b) { return (f(x + h * b) - f(x - h * b)) / (2.0 * h); };
  Matrix g = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Matrix b = Matrix::Zero(n, n);
    b(i, i) = 1.0;
    g(i, i) = diff(b);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      Matrix re = Matrix::Zero(n, n);
      re(i, j) = re(j, i) = 1.0;
      Matrix im = Matrix::Zero(n, n);
      im(i, j) = Complex(0, 1);
      im(j, i) = Complex(0, -1);
      // Re tr(G B) equals 2 Re G_ij for re, and 2 Im G_ij for im.
      const Complex gij(0.5 * diff(re), 0.5 * diff(im));
      g(i, j) = gij;
      g(j, i) = std::conj(gij);
    }
  }
  return g;
}

/// f(X) = d^2(X, Y1) + d^2(X, Y2) under the affine-invariant distance; the
/// minimizer is the geodesic midpoint with value d^2(Y1, Y2) / 2. With
/// `fd_gradient` the Euclidean gradient comes from finite differences of the
/// distance; otherwise from -2 X^-1/2 logm(X^-1/2 Y X^-1/2) X^-1/2 per term.
inline OracleProblem hpd_mean(const Matrix& y1, const Matrix& y2, bool fd_gradient = false) {
  for (const Matrix* y : {&y1, &y2}) {
    detail::require_hermitian(*y, "hpd_mean");
    if (!manifolds::Hpd::is_positive_definite(*y)) {
      throw InvalidArgumentError("hpd_mean: input is not positive definite");
    }
  }
  if (y1.rows() != y2.rows()) throw InvalidArgumentError("hpd_mean: size mismatch");
  const Matrix a = linalg::herm(y1);
  const Matrix b = linalg::herm(y2);
  OracleProblem p{"hpd_mean", ManifoldHandle::hpd(static_cast<int>(a.rows())), {}, 0.0, {},
                  "geodesic midpoint of Y1 and Y2"};
  auto value = [a, b](const Matrix& x) {
    const double da = manifolds::hpd_distance(x, a);
    const double db = manifolds::hpd_distance(x, b);
    return da * da + db * db;
  };
  p.cost.name = fd_gradient ? "hpd_mean_fd" : "hpd_mean";
  p.cost.fd_gradient = fd_gradient;
  p.cost.value = [value](const Point& x) { return value(x.block()); };
  if (fd_gradient) {
    p.cost.euclidean_grad = [value](const Point& x) { return Ambient(hpd_fd_gradient(value, x.block())); };
  } else {
    p.cost.euclidean_grad = [a, b](const Point& x) {
      const Matrix si = linalg::inv_sqrtm_hpd(x.block());
      Matrix g = Matrix::Zero(a.rows(), a.cols());
      for (const Matrix* y : {&a, &b}) {
        g -= 2.0 * si * linalg::logm_hpd(linalg::herm(si * (*y) * si)) * si;
      }
      return Ambient(linalg::herm(g));
    };
  }
  const double d = manifolds::hpd_distance(a, b);
  p.optimum_value = 0.5 * d * d;
  p.certificate = Point(hpd_midpoint(a, b));
  return p;
}

/// The five-problem battery used by the solver regression grid, drawn
/// deterministically from `seed`.
inline std::vector<OracleProblem> oracle_battery(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<OracleProblem> out;
  out.push_back(rayleigh(linalg::random_hermitian(8, rng)));
  out.push_back(brockett(linalg::random_hermitian(8, rng), 3));
  out.push_back(phase_align(linalg::complex_gaussian(12, 1, rng)));
  {
    const Matrix g = linalg::complex_gaussian(8, 8, rng);
    out.push_back(subspace_fit(linalg::herm(g * g.adjoint()) / 8.0, 2));
  }
  auto random_hpd = [&rng] {
    const Matrix g = linalg::complex_gaussian(3, 3, rng);
    return Matrix(linalg::herm(g * g.adjoint()) + 0.5 * Matrix::Identity(3, 3));
  };
  const Matrix ya = random_hpd();
  const Matrix yb = random_hpd();
  out.push_back(hpd_mean(ya, yb));
  return out;
}

}  // namespace rmo::oracles
