#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "helpers.hpp"

using namespace rmo;
using namespace rmo::test;
using rmo::manifolds::grassmann_dist;
using rmo::manifolds::GrassmannRep;

namespace {

double dist(const Matrix& a, const Matrix& b) { return (a - b).norm(); }

Matrix random_unitary(int p, std::mt19937_64& rng) {
  Matrix q;
  linalg::thin_q_positive(linalg::complex_gaussian(p, p, rng), q);
  return q;
}

}  // namespace

TEST(Project, CircleRemovesRadialPart) {
  const Manifold m(ManifoldHandle::complex_circle(1));
  const Point x(col({1}));
  EXPECT_LT(dist(m.project(x, Ambient(col({1.0 + J}))).block(), col({J})), 1e-15);
}

TEST(Project, StiefelHorizontalUnchanged) {
  const Manifold m(ManifoldHandle::stiefel(3, 2));
  Matrix x = Matrix::Zero(3, 2);
  x(0, 0) = 1;
  x(1, 1) = 1;
  Matrix a = Matrix::Zero(3, 2);
  a(2, 0) = 1;
  a(2, 1) = 1;
  EXPECT_LT(dist(m.project(Point(x), Ambient(a)).block(), a), 1e-15);
}

TEST(Project, SphereRadiusTwo) {
  const Manifold m(ManifoldHandle::complex_sphere(2, 2.0));
  const Point x(col({2, 0}));
  const Tangent p = m.project(x, Ambient(col({3, 4})));
  EXPECT_LT(dist(p.block(), col({0, 4})), 1e-15);
  EXPECT_LT(dist(m.project(x, p.coords).block(), p.block()), 1e-15);
}

TEST(Project, GrassmannAndHpdFormulas) {
  std::mt19937_64 rng(1);
  const Manifold g(ManifoldHandle::grassmann(4, 2));
  const Point x = g.random_point(rng);
  const Matrix a = linalg::complex_gaussian(4, 2, rng);
  const Matrix pg = g.project(x, Ambient(a)).block();
  EXPECT_LT(dist(pg, a - x.block() * (x.block().adjoint() * a)), 1e-14);
  EXPECT_LT((x.block().adjoint() * pg).norm(), 1e-14);

  const Manifold h(ManifoldHandle::hpd(3));
  const Point y = h.random_point(rng);
  const Matrix b = linalg::complex_gaussian(3, 3, rng);
  EXPECT_LT(dist(h.project(y, Ambient(b)).block(), linalg::herm(b)), 1e-15);
}

TEST(Project, TangencyInvariantHolds) {
  std::mt19937_64 rng(2);
  for (const auto& hd : {ManifoldHandle::complex_circle(4), ManifoldHandle::complex_sphere(4, 3.0),
                         ManifoldHandle::oblique(3, 4), ManifoldHandle::stiefel(5, 3),
                         ManifoldHandle::grassmann(5, 2), ManifoldHandle::hpd(3)}) {
    const Manifold m(hd);
    for (int k = 0; k < 20; ++k) {
      const Point x = m.random_point(rng);
      const Tangent v = m.project(x, Ambient(linalg::complex_gaussian(x.block().rows(), x.block().cols(), rng)));
      EXPECT_LE(m.tangency_error(v), kFeasibilityTol) << hd.describe();
    }
  }
}

TEST(Retract, CircleQuarterTurn) {
  const Manifold m(ManifoldHandle::complex_circle(1));
  const Point x(col({1}));
  const Point y = m.retract(x, tan_at(x, col({J})));
  EXPECT_LT(std::abs(y.block()(0) - std::polar(1.0, std::numbers::pi / 4)), 1e-15);
}

TEST(Retract, SphereDiagonal) {
  const Manifold m(ManifoldHandle::complex_sphere(2));
  const Point x(col({1, 0}));
  const Point y = m.retract(x, tan_at(x, col({0, 1})));
  EXPECT_LT(dist(y.block(), col({1 / std::sqrt(2.0), 1 / std::sqrt(2.0)})), 1e-15);
}

TEST(Retract, HpdCommutingCase) {
  const Manifold m(ManifoldHandle::hpd(2));
  const Point x(Matrix(Matrix::Identity(2, 2)));
  const Point y = m.retract(x, tan_at(x, Matrix::Identity(2, 2)));
  EXPECT_LT(dist(y.block(), 2.5 * Matrix::Identity(2, 2)), 1e-15);
}

TEST(Retract, ZeroStepIsIdentity) {
  std::mt19937_64 rng(4);
  for (const auto& hd : {ManifoldHandle::complex_circle(3), ManifoldHandle::complex_sphere(3, 2.0),
                         ManifoldHandle::oblique(3, 2), ManifoldHandle::hpd(3)}) {
    const Manifold m(hd);
    const Point x = m.random_point(rng);
    EXPECT_LE(frobenius_norm(m.retract(x, m.zero_tangent(x)).coords() - x.coords()), 1e-15) << hd.describe();
  }
  // QR refactorization of an orthonormal x reproduces it to rounding.
  for (const auto& hd : {ManifoldHandle::stiefel(4, 2), ManifoldHandle::grassmann(4, 2)}) {
    const Manifold m(hd);
    const Point x = m.random_point(rng);
    EXPECT_LT(frobenius_norm(m.retract(x, m.zero_tangent(x)).coords() - x.coords()), 1e-14);
  }
}

TEST(Retract, CircleDegenerateStep) {
  const Manifold m(ManifoldHandle::complex_circle(2));
  const Point x(col({1, 1}));
  EXPECT_THROW((void)m.retract(x, tan_at(x, col({-1, 0}))), DegenerateStepError);
}

TEST(Retract, StiefelRankDeficient) {
  const Manifold m(ManifoldHandle::stiefel(2, 2));
  const Point x(Matrix(Matrix::Identity(2, 2)));
  Matrix v = Matrix::Zero(2, 2);
  v(1, 1) = -1.0;
  EXPECT_THROW((void)m.retract(x, tan_at(x, v)), DegenerateStepError);
}

TEST(Retract, StiefelPositiveDiagonalConvention) {
  std::mt19937_64 rng(6);
  const Manifold m(ManifoldHandle::stiefel(5, 3));
  const Point x = m.random_point(rng);
  const Tangent v = m.random_tangent(x, rng);
  const Matrix y = m.retract(x, v).block();
  const Matrix r = y.adjoint() * (x.block() + v.block());
  for (int i = 0; i < 3; ++i) {
    EXPECT_GT(r(i, i).real(), 0.0);
    EXPECT_NEAR(r(i, i).imag(), 0.0, 1e-12);
  }
}

TEST(Retract, HpdStepTooLongSignalled) {
  // The quadratic term overflows.
  const Matrix v = diag({-1e200, 1.0});
  EXPECT_THROW((void)manifolds::Hpd::retract(Matrix::Identity(2, 2), v), StepTooLongError);
}

TEST(Transport, ZeroMapsToZero) {
  std::mt19937_64 rng(7);
  for (const auto& hd : {ManifoldHandle::complex_sphere(3), ManifoldHandle::stiefel(4, 2), ManifoldHandle::hpd(2)}) {
    const Manifold m(hd);
    const Point x = m.random_point(rng);
    const Point y = m.random_point(rng);
    const Tangent t = m.transport(x, y, m.zero_tangent(x));
    EXPECT_EQ(frobenius_norm(t.coords), 0.0);
    EXPECT_TRUE(t.base.same_as(y));
  }
}

TEST(Transport, SphereSamePointUnchanged) {
  std::mt19937_64 rng(8);
  const Manifold m(ManifoldHandle::complex_sphere(4));
  const Point x = m.random_point(rng);
  const Tangent v = m.random_tangent(x, rng);
  EXPECT_LT(frobenius_norm(m.transport(x, x, v).coords - v.coords), 1e-15);
}

TEST(Transport, CircleHandExample) {
  const Manifold m(ManifoldHandle::complex_circle(2));
  const Point x(col({1, 1}));
  const Point y(col({J, 1}));
  const Tangent t = m.transport(x, y, tan_at(x, col({J, 0})));
  EXPECT_LT(t.block().norm(), 1e-15);
}

TEST(Transport, InfeasibleTargetRejected) {
  const Manifold m(ManifoldHandle::complex_sphere(2));
  const Point x(col({1, 0}));
  const Point y(col({1, 1}));
  EXPECT_THROW((void)m.transport(x, y, tan_at(x, col({0, 1}))), InfeasiblePointError);
}

TEST(Transport, HpdIsIdentity) {
  std::mt19937_64 rng(10);
  const Manifold m(ManifoldHandle::hpd(3));
  const Point x = m.random_point(rng);
  const Point y = m.random_point(rng);
  const Tangent v = m.random_tangent(x, rng);
  EXPECT_TRUE(m.transport(x, y, v).coords == v.coords);
}

TEST(RandomPoint, Constructions) {
  std::mt19937_64 rng(12);
  const Manifold s(ManifoldHandle::complex_sphere(5, 3.0));
  for (int k = 0; k < 50; ++k) EXPECT_NEAR(s.random_point(rng).block().norm(), 3.0, 1e-10);
  const Manifold st(ManifoldHandle::stiefel(6, 3));
  for (int k = 0; k < 50; ++k) {
    const Matrix q = st.random_point(rng).block();
    EXPECT_LT((q.adjoint() * q - Matrix::Identity(3, 3)).norm(), 1e-10);
  }
  const Manifold h(ManifoldHandle::hpd(4));
  for (int k = 0; k < 50; ++k) EXPECT_GT(linalg::min_eigenvalue(h.random_point(rng).block()), 0.0);
  const Manifold c(ManifoldHandle::complex_circle(6));
  for (int k = 0; k < 50; ++k) {
    EXPECT_LT((c.random_point(rng).block().cwiseAbs().array() - 1.0).abs().maxCoeff(), 1e-14);
  }
}

TEST(RandomTangent, UnitNormAndTangent) {
  std::mt19937_64 rng(14);
  for (const auto& hd : {ManifoldHandle::oblique(4, 2), ManifoldHandle::grassmann(5, 3), ManifoldHandle::hpd(3)}) {
    const Manifold m(hd);
    const Point x = m.random_point(rng);
    const Tangent v = m.random_tangent(x, rng);
    EXPECT_NEAR(m.norm(x, v), 1.0, 1e-12);
    EXPECT_LE(m.tangency_error(v), kFeasibilityTol);
  }
}

TEST(GrassmannDist, Examples) {
  const GrassmannRep e1{col({1, 0})};
  const GrassmannRep e2{col({0, 1})};
  const GrassmannRep d{col({1 / std::sqrt(2.0), 1 / std::sqrt(2.0)})};
  EXPECT_NEAR(grassmann_dist(e1, e1), 0.0, 1e-7);
  EXPECT_NEAR(grassmann_dist(e1, e2), std::numbers::pi / 2, 1e-12);
  EXPECT_NEAR(grassmann_dist(e1, d), std::numbers::pi / 4, 1e-12);
}

TEST(GrassmannDist, SymmetricAndRotationInvariant) {
  std::mt19937_64 rng(16);
  const Manifold m(ManifoldHandle::grassmann(6, 2));
  for (int k = 0; k < 20; ++k) {
    const GrassmannRep a{m.random_point(rng).block()};
    const GrassmannRep b{m.random_point(rng).block()};
    const GrassmannRep ar{a.basis * random_unitary(2, rng)};
    EXPECT_NEAR(grassmann_dist(a, b), grassmann_dist(b, a), 1e-12);
    EXPECT_NEAR(grassmann_dist(a, b), grassmann_dist(ar, b), 1e-10);
    EXPECT_LT(grassmann_dist(a, ar), 1e-6);
  }
}

TEST(GrassmannDist, ShapeMismatch) {
  EXPECT_THROW((void)grassmann_dist(GrassmannRep{col({1, 0})}, GrassmannRep{col({1, 0, 0})}), ShapeMismatchError);
}

TEST(HpdDistance, CommutingCase) {
  const Matrix i = Matrix::Identity(3, 3);
  EXPECT_NEAR(manifolds::hpd_distance(i, 4.0 * i), std::sqrt(3.0) * std::log(4.0), 1e-12);
  EXPECT_NEAR(manifolds::hpd_distance(2.0 * i, 2.0 * i), 0.0, 1e-12);
}
