#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "rmo/bench/experiments.hpp"
#include "rmo/oracles/oracle_costs.hpp"
#include "rmo/solvers/hessian.hpp"
#include "rmo/verify/checks.hpp"

using namespace rmo;

namespace {

std::vector<ManifoldHandle> all_kinds() { return bench::geometry_handles(); }

}  // namespace

class EveryKind : public ::testing::TestWithParam<int> {
 protected:
  ManifoldHandle handle() const { return all_kinds()[static_cast<std::size_t>(GetParam())]; }
};

TEST_P(EveryKind, FeasibilityClosureOverThousandTriples) {
  const Manifold m(handle());
  std::mt19937_64 rng(100 + GetParam());
  std::uniform_real_distribution<double> step(0.0, 1.0);
  for (int k = 0; k < 1000; ++k) {
    const Point x = m.random_point(rng);
    const Tangent v = m.random_tangent(x, rng);
    ASSERT_LE(m.feasibility_error(m.retract(x, step(rng) * v)), kFeasibilityTol) << handle().describe();
  }
}

TEST_P(EveryKind, ProjectionIdempotent) {
  const Manifold m(handle());
  std::mt19937_64 rng(200 + GetParam());
  for (int k = 0; k < 200; ++k) {
    const Point x = m.random_point(rng);
    const Tangent p = m.project(x, bench::random_ambient(x.coords(), rng));
    EXPECT_LE(frobenius_norm(m.project(x, p.coords).coords - p.coords), 1e-12);
  }
}

TEST_P(EveryKind, RetractionSecondOrder) {
  std::mt19937_64 rng(300 + GetParam());
  const auto r = verify::check_retraction(handle(), 10, rng);
  EXPECT_FALSE(r.vacuous);
  EXPECT_GE(r.order, 1.9) << r.line();
}

TEST_P(EveryKind, TransportLinear) {
  const Manifold m(handle());
  std::mt19937_64 rng(400 + GetParam());
  for (int k = 0; k < 50; ++k) {
    const Point x = m.random_point(rng);
    const Point y = m.random_point(rng);
    const Tangent u = m.random_tangent(x, rng);
    const Tangent v = m.random_tangent(x, rng);
    const double a = 1.7, b = -0.3;
    const Tangent lhs = m.transport(x, y, a * u + b * v);
    const Tangent rhs = a * m.transport(x, y, u) + b * m.transport(x, y, v);
    EXPECT_LE(frobenius_norm(lhs.coords - rhs.coords), 1e-12);
    EXPECT_LE(m.tangency_error(lhs), kFeasibilityTol);
  }
}

TEST_P(EveryKind, MetricPositive) {
  const Manifold m(handle());
  std::mt19937_64 rng(500 + GetParam());
  for (int k = 0; k < 50; ++k) {
    const Point x = m.random_point(rng);
    const Tangent v = m.project(x, bench::random_ambient(x.coords(), rng));
    EXPECT_GT(m.inner(x, v, v), 0.0);
  }
}

INSTANTIATE_TEST_SUITE_P(Manifolds, EveryKind, ::testing::Range(0, 7));

TEST(GrassmannInvariance, CostDistanceAndGradientNorm) {
  std::mt19937_64 rng(600);
  const Matrix g = linalg::complex_gaussian(6, 6, rng);
  const auto prob = oracles::subspace_fit(linalg::herm(g * g.adjoint()), 2);
  const Manifold m(prob.handle);
  for (int k = 0; k < 20; ++k) {
    const Point x = m.random_point(rng);
    Matrix u;
    linalg::thin_q_positive(linalg::complex_gaussian(2, 2, rng), u);
    const Point xr(Matrix(x.block() * u));
    EXPECT_NEAR(prob.cost.value(x), prob.cost.value(xr), 1e-10);
    const double n1 = m.norm(x, riemannian_gradient(prob.cost, m, x));
    const double n2 = m.norm(xr, riemannian_gradient(prob.cost, m, xr));
    EXPECT_NEAR(n1, n2, 1e-10);
    const Point y = m.random_point(rng);
    EXPECT_NEAR(manifolds::grassmann_dist({x.block()}, {y.block()}),
                manifolds::grassmann_dist({xr.block()}, {y.block()}), 1e-10);
  }
}

TEST(GradientCompatibility, SlopeOnEveryKind) {
  // f(x) = Re tr(C^H x) + |tr(D^H x)|^2 per block, a smooth non-quadratic probe.
  std::mt19937_64 rng(700);
  for (const auto& h : all_kinds()) {
    const Manifold m(h);
    const Point x0 = m.random_point(rng);
    const Ambient c = bench::random_ambient(x0.coords(), rng);
    const Ambient d = bench::random_ambient(x0.coords(), rng);
    CostFunction f;
    f.name = "probe";
    f.value = [=](const Point& x) {
      double s = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        s += (c[i].adjoint() * x.block(i)).trace().real() + std::norm((d[i].adjoint() * x.block(i)).trace());
      }
      return s;
    };
    f.euclidean_grad = [=](const Point& x) {
      Ambient g = x.coords().zeros_like();
      for (std::size_t i = 0; i < x.size(); ++i) {
        const Complex t = (d[i].adjoint() * x.block(i)).trace();
        g[i] = c[i] + 2.0 * t * d[i];
      }
      return g;
    };
    const auto r = verify::check_gradient(f, m, x0, 5, rng);
    EXPECT_GE(r.order, 1.9) << r.line();
  }
}
