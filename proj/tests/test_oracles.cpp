#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "rmo/oracles/oracle_costs.hpp"
#include "rmo/solvers/hessian.hpp"

using namespace rmo;
using namespace rmo::test;

TEST(Rayleigh, DiagonalExample) {
  const auto p = oracles::rayleigh(diag({3, 1, 2}));
  EXPECT_DOUBLE_EQ(p.optimum_value, 1.0);
  EXPECT_NEAR(std::abs(p.certificate.block()(1)), 1.0, 1e-15);
  EXPECT_FALSE(p.non_unique);
  EXPECT_EQ(p.handle.kind(), ManifoldKind::ComplexSphere);
}

TEST(Rayleigh, RepeatedEigenvalueFlagged) {
  EXPECT_TRUE(oracles::rayleigh(diag({1, 1, 2})).non_unique);
}

TEST(Rayleigh, NonHermitianRejected) {
  Matrix a = diag({1, 2});
  a(0, 1) = 1.0;
  EXPECT_THROW(oracles::rayleigh(a), InvalidArgumentError);
  EXPECT_THROW(oracles::rayleigh(Matrix(2, 3)), InvalidArgumentError);
}

TEST(Brockett, TopEigenvalues) {
  const auto p = oracles::brockett(diag({1, 2, 3}), 2);
  EXPECT_NEAR(p.optimum_value, -5.0, 1e-14);
  EXPECT_EQ(p.handle.kind(), ManifoldKind::Stiefel);
  EXPECT_THROW(oracles::brockett(diag({1, 2}), 3), InvalidArgumentError);
}

TEST(PhaseAlign, OptimumIsSquaredL1Norm) {
  Vector v(3);
  v << 1.0, J, -1.0;
  const auto p = oracles::phase_align(v);
  EXPECT_NEAR(p.optimum_value, -9.0, 1e-14);
  EXPECT_NEAR(p.cost.value(p.certificate), -9.0, 1e-12);
  const Point rotated(Matrix(std::polar(1.0, 0.7) * p.certificate.block()));
  EXPECT_NEAR(p.cost.value(rotated), -9.0, 1e-12);
}

TEST(PhaseAlign, ZeroEntryMakesOptimumNonUnique) {
  Vector v(2);
  v << 2.0, 0.0;
  const auto p = oracles::phase_align(v);
  EXPECT_TRUE(p.non_unique);
  EXPECT_NEAR(p.optimum_value, -4.0, 1e-14);
  EXPECT_THROW(oracles::phase_align(Vector(0)), InvalidArgumentError);
}

TEST(SubspaceFit, DominantSubspace) {
  const auto p = oracles::subspace_fit(diag({1, 2, 3, 4}), 2);
  EXPECT_NEAR(p.optimum_value, -7.0, 1e-14);
  EXPECT_EQ(p.handle.kind(), ManifoldKind::Grassmann);
  EXPECT_THROW(oracles::subspace_fit(diag({1, 2}), 3), InvalidArgumentError);
}

TEST(HpdMean, ScaledIdentities) {
  const auto p = oracles::hpd_mean(Matrix::Identity(2, 2), 4.0 * Matrix::Identity(2, 2));
  const double l4 = std::log(4.0);
  EXPECT_NEAR(p.optimum_value, l4 * l4, 1e-12);
  EXPECT_LT((p.certificate.block() - 2.0 * Matrix::Identity(2, 2)).norm(), 1e-12);
  EXPECT_NEAR(p.cost.value(p.certificate), l4 * l4, 1e-12);
}

TEST(HpdMean, MidpointOfCommutingDiagonals) {
  const auto p = oracles::hpd_mean(diag({1, 9}), diag({4, 1}));
  EXPECT_LT((p.certificate.block() - diag({2, 3})).norm(), 1e-12);
}

TEST(HpdMean, RejectsIndefiniteAndMismatched) {
  EXPECT_THROW(oracles::hpd_mean(diag({1, -1}), diag({1, 1})), InvalidArgumentError);
  EXPECT_THROW(oracles::hpd_mean(diag({1, 1}), diag({1, 1, 1})), InvalidArgumentError);
}

TEST(HpdMean, FiniteDifferenceGradientAgrees) {
  std::mt19937_64 rng(5);
  const Manifold m(ManifoldHandle::hpd(3));
  const Matrix a = m.random_point(rng).block();
  const Matrix b = m.random_point(rng).block();
  const auto exact = oracles::hpd_mean(a, b);
  const auto fd = oracles::hpd_mean(a, b, true);
  EXPECT_EQ(fd.cost.name, "hpd_mean_fd");
  EXPECT_TRUE(fd.cost.fd_gradient);
  for (int k = 0; k < 5; ++k) {
    const Point x = m.random_point(rng);
    const Matrix ge = exact.cost.euclidean_grad(x)[0];
    const Matrix gf = fd.cost.euclidean_grad(x)[0];
    EXPECT_LE((ge - gf).norm(), 1e-5 * std::max(1.0, ge.norm()));
  }
}

TEST(Battery, CertificatesAreConsistent) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    for (const auto& p : oracles::oracle_battery(seed)) {
      const Manifold m(p.handle);
      ASSERT_TRUE(m.is_feasible(p.certificate)) << p.name;
      const double scale = std::max(1.0, std::abs(p.optimum_value));
      EXPECT_NEAR(p.cost.value(p.certificate), p.optimum_value, 1e-10 * scale) << p.name;
      const double gn = m.norm(p.certificate, riemannian_gradient(p.cost, m, p.certificate));
      EXPECT_LE(gn, 1e-7 * scale) << p.name;
      EXPECT_FALSE(p.certificate_description.empty());
    }
  }
}

TEST(Battery, CertificateBeatsRandomPoints) {
  std::mt19937_64 rng(9);
  for (const auto& p : oracles::oracle_battery(4)) {
    const Manifold m(p.handle);
    for (int k = 0; k < 200; ++k) {
      EXPECT_GE(p.cost.value(m.random_point(rng)), p.optimum_value - 1e-10) << p.name;
    }
  }
}

TEST(Battery, FiveDistinctGeometries) {
  const auto b = oracles::oracle_battery(1);
  ASSERT_EQ(b.size(), 5u);
  EXPECT_EQ(b[0].name, "rayleigh");
  EXPECT_EQ(b[4].name, "hpd_mean");
}
