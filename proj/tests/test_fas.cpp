#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "helpers.hpp"
#include "rmo/fas/sweep.hpp"
#include "rmo/verify/checks.hpp"

using namespace rmo;
using namespace rmo::test;
using namespace rmo::fas;

namespace {

Vector vec(std::initializer_list<Complex> v) { return col(v); }

SecrecyScenario small_scenario() {
  SecrecyScenario s;
  s.grid = PortGrid::uniform(4, 2);
  s.snr_grid_db = {0, 10};
  s.trials = 3;
  s.seed = 5;
  s.solver_cfg.max_iters = 2000;
  return s;
}

}  // namespace

TEST(Steering, OriginIsAllOnes) {
  const auto a = steering_vector({{0, 0}}, 0.4, 1.3, 0.1);
  EXPECT_NEAR(std::abs(a(0) - 1.0), 0.0, 1e-15);
}

TEST(Steering, HalfWavelengthBroadside) {
  const auto a = steering_vector({{0, 0}, {0.05, 0}}, std::numbers::pi / 2, 0.0, 0.1);
  EXPECT_NEAR(std::abs(a(1) + 1.0), 0.0, 1e-12);
  const auto b = steering_vector({{0, 0}, {0.05, 0}}, 0.0, 0.0, 0.1);
  EXPECT_NEAR(std::abs(b(1) - 1.0), 0.0, 1e-12);
}

TEST(Steering, RejectsBadInput) {
  EXPECT_THROW(steering_vector({}, 0, 0, 0.1), InvalidArgumentError);
  EXPECT_THROW(steering_vector({{0, 0}}, 0, 0, 0.0), InvalidArgumentError);
}

TEST(Channel, SinglePathUnitGainNorm) {
  std::mt19937_64 rng(1);
  PathSet p = PathSet::sample(1, rng);
  p.gains(0) = 1.0;
  const auto grid = PortGrid::uniform(8, 4);
  const Vector h = p.channel(grid.subset({0, 2, 5, 7}), grid.wavelength);
  EXPECT_NEAR(h.squaredNorm(), 4.0, 1e-12);
}

TEST(Channel, PerPortPowerIsUnitOnAverage) {
  std::mt19937_64 rng(2);
  const auto grid = PortGrid::uniform(8, 8);
  RealVector acc = RealVector::Zero(8);
  const int draws = 10000;
  for (int k = 0; k < draws; ++k) {
    const Vector h = PathSet::sample(4, rng).channel(grid.positions, grid.wavelength);
    acc += h.cwiseAbs2();
  }
  acc /= draws;
  for (int i = 0; i < 8; ++i) EXPECT_NEAR(acc(i), 1.0, 0.05);
}

TEST(PortGrid, LayoutAndValidation) {
  const auto g = PortGrid::uniform(8, 4);
  EXPECT_EQ(g.positions.size(), 8u);
  EXPECT_NO_THROW(g.validate());
  EXPECT_NEAR(g.region_width, 2.0, 1e-15);
  EXPECT_NEAR(g.region_height, 1.0, 1e-15);
  EXPECT_EQ(PortGrid::uniform(3, 1).region_height, 0.5);
  EXPECT_THROW(PortGrid::uniform(4, 5), InvalidArgumentError);
  EXPECT_THROW(PortGrid::uniform(0, 0), InvalidArgumentError);
  auto dup = g;
  dup.positions[1] = dup.positions[0];
  EXPECT_THROW(dup.validate(), InvalidArgumentError);
  auto out = g;
  out.positions[0].x = 10.0;
  EXPECT_THROW(out.validate(), InvalidArgumentError);
}

TEST(SecrecyRate, IdenticalChannelsGiveZero) {
  const Vector h = vec({1, J});
  EXPECT_NEAR(secrecy_rate(vec({0.5, 0.5}), Vector(0), h, h, 0.1), 0.0, 1e-15);
}

TEST(SecrecyRate, OrthogonalChannelsAndNoise) {
  const Vector hb = vec({1, 0}), he = vec({0, 1});
  EXPECT_NEAR(secrecy_rate(vec({1, 0}), Vector(0), hb, he, 1.0), 1.0, 1e-15);
  EXPECT_NEAR(secrecy_rate(vec({1, 0}), vec({0, 1}), hb, he, 1.0), 1.0, 1e-15);
  // Noise aimed at Eve while she sees the signal: log2(1 + 1/1) - log2(1 + 1/(1 + 1)).
  EXPECT_NEAR(secrecy_rate(vec({1, 1}), vec({0, 1}), hb, he, 1.0), 1.0 - std::log2(1.5), 1e-15);
}

TEST(SecrecyRate, CanBeNegative) {
  EXPECT_LT(secrecy_rate(vec({0, 1}), Vector(0), vec({1, 0}), vec({0, 1}), 1.0), 0.0);
}

TEST(SecrecyRate, RejectsBadInput) {
  EXPECT_THROW(secrecy_rate(vec({1}), Vector(0), vec({1}), vec({1}), 0.0), InvalidArgumentError);
  EXPECT_THROW(secrecy_rate(vec({1, 0}), Vector(0), vec({1}), vec({1}), 1.0), ShapeMismatchError);
  EXPECT_THROW(secrecy_rate(vec({1}), vec({1, 0}), vec({1}), vec({1}), 1.0), ShapeMismatchError);
}

TEST(SecrecyCost, ManifoldFollowsPowerSplit) {
  std::mt19937_64 rng(3);
  ChannelRealization ch{Vector(linalg::complex_gaussian(4, 1, rng)), Vector(linalg::complex_gaussian(4, 1, rng)), {}, {}};
  const auto split = secrecy_cost(ch, 0.1, 0.8, 2.0);
  ASSERT_EQ(split.handle.block_count(), 2u);
  EXPECT_NEAR(*split.handle.factor(0).radius(), std::sqrt(1.6), 1e-15);
  EXPECT_NEAR(*split.handle.factor(1).radius(), std::sqrt(0.4), 1e-15);
  const auto full = secrecy_cost(ch, 0.1, 1.0, 2.0);
  EXPECT_FALSE(full.has_noise());
  EXPECT_EQ(full.handle.kind(), ManifoldKind::ComplexSphere);
  EXPECT_THROW(secrecy_cost(ch, 0.1, 0.0, 1.0), InvalidArgumentError);
  EXPECT_THROW(secrecy_cost(ch, 0.1, 1.2, 1.0), InvalidArgumentError);
  EXPECT_THROW(secrecy_cost(ch, -1.0, 0.5, 1.0), InvalidArgumentError);
}

TEST(SecrecyCost, GlobalPhaseInvariant) {
  std::mt19937_64 rng(4);
  ChannelRealization ch{Vector(linalg::complex_gaussian(3, 1, rng)), Vector(linalg::complex_gaussian(3, 1, rng)), {}, {}};
  const auto p = secrecy_cost(ch, 0.3, 0.7, 1.0);
  const Manifold m(p.handle);
  for (int k = 0; k < 20; ++k) {
    const Point x = m.random_point(rng);
    const Complex ph = std::polar(1.0, 2.1), qh = std::polar(1.0, -0.4);
    const Point y(Ambient{Matrix(ph * x.block(0)), Matrix(qh * x.block(1))});
    EXPECT_NEAR(p.cost.value(x), p.cost.value(y), 1e-12);
    EXPECT_NEAR(-p.cost.value(x), secrecy_rate(p.signal(x), p.noise(x), ch, 0.3), 1e-15);
  }
}

TEST(SecrecyCost, GradientsCertify) {
  std::mt19937_64 rng(6);
  ChannelRealization ch{Vector(linalg::complex_gaussian(4, 1, rng)), Vector(linalg::complex_gaussian(4, 1, rng)), {}, {}};
  for (double alpha : {0.6, 1.0}) {
    for (const auto& p : {secrecy_cost(ch, 0.2, alpha, 1.0), secrecy_cost_phases(ch, 0.2, alpha, 1.0)}) {
      const Manifold m(p.handle);
      const auto r = verify::check_gradient(p.cost, m, m.random_point(rng), 5, rng);
      EXPECT_TRUE(r.pass) << r.line();
    }
  }
}

TEST(SecrecyCostPhases, ConstantModulusMapping) {
  std::mt19937_64 rng(7);
  ChannelRealization ch{Vector(linalg::complex_gaussian(2, 1, rng)), Vector(linalg::complex_gaussian(2, 1, rng)), {}, {}};
  const auto p = secrecy_cost_phases(ch, 0.5, 0.8, 1.0);
  const auto q = secrecy_cost(ch, 0.5, 0.8, 1.0);
  const Point x(Ambient{col({1, J}), col({-1, 1})});
  const double sw = std::sqrt(0.8 / 2), sz = std::sqrt(0.2 / 2);
  const Point y(Ambient{Matrix(sw * x.block(0)), Matrix(sz * x.block(1))});
  EXPECT_NEAR(p.cost.value(x), q.cost.value(y), 1e-14);
}

TEST(Mrt, AlignedSignalOrthogonalNoise) {
  std::mt19937_64 rng(8);
  ChannelRealization ch{Vector(linalg::complex_gaussian(4, 1, rng)), Vector(linalg::complex_gaussian(4, 1, rng)), {}, {}};
  const auto p = secrecy_cost(ch, 0.1, 0.75, 2.0);
  const Point x0 = mrt_init(p, ch, rng);
  const Manifold m(p.handle);
  EXPECT_TRUE(m.is_feasible(x0));
  const Vector w = p.signal(x0), z = p.noise(x0);
  EXPECT_NEAR(w.squaredNorm(), 1.5, 1e-12);
  EXPECT_NEAR(z.squaredNorm(), 0.5, 1e-12);
  EXPECT_NEAR(std::abs(ch.h_bob.dot(z)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(ch.h_bob.dot(w)), ch.h_bob.norm() * w.norm(), 1e-12);
}

TEST(Mrt, SingleAntennaFallsBackToDraw) {
  ChannelRealization ch{vec({1.0}), vec({0.5}), {}, {}};
  const auto p = secrecy_cost(ch, 0.1, 0.5, 1.0);
  const Point x0 = mrt_init(p, ch, vec({J}));
  EXPECT_TRUE(Manifold(p.handle).is_feasible(x0));
  EXPECT_THROW(mrt_init(p, ChannelRealization{vec({0.0}), vec({1.0}), {}, {}}, vec({1.0})), InvalidArgumentError);
}

TEST(Beamforming, FullPowerOrthogonalChannels) {
  SecrecyScenario s;
  s.alpha = 1.0;
  s.noise_power = 0.5;
  ChannelRealization ch{vec({1, 0}), vec({0, 1}), {}, {}};
  const auto r = optimize_beamforming(s, ch, vec({1, 1}));
  EXPECT_NEAR(r.unclamped_rate, std::log2(1.0 + 1.0 / 0.5), 1e-8);
  EXPECT_EQ(r.z.size(), 0);
  EXPECT_NEAR(r.w.squaredNorm(), 1.0, 1e-10);
}

TEST(Beamforming, NeverBelowMrtStart) {
  std::mt19937_64 rng(9);
  SecrecyScenario s = SecrecyScenario{}.at_snr(10);
  for (int k = 0; k < 10; ++k) {
    const auto draw = TrialDraw::sample(s, rng);
    const std::vector<int> ports{0, 1, 4, 5};
    const auto ch = realize(s.grid, ports, draw.bob, draw.eve);
    const auto r = optimize_beamforming(s, ch, draw.init_for(ports));
    EXPECT_GE(r.unclamped_rate, r.initial_rate - 1e-12);
    EXPECT_GE(r.rate, 0.0);
    EXPECT_NEAR(r.w.squaredNorm() + r.z.squaredNorm(), s.total_power, 1e-10);
    EXPECT_NEAR(r.w.squaredNorm(), s.alpha * s.total_power, 1e-10);
  }
}

TEST(Combinatorics, SubsetsAndBinomial) {
  const auto c = combinations(4, 2);
  ASSERT_EQ(c.size(), 6u);
  EXPECT_EQ(c.front(), (std::vector<int>{0, 1}));
  EXPECT_EQ(c.back(), (std::vector<int>{2, 3}));
  EXPECT_EQ(binomial(8, 4), 70.0);
  EXPECT_EQ(binomial(30, 10), 30045015.0);
}

TEST(PortSelection, ExhaustiveTableHasEverySubset) {
  std::mt19937_64 rng(10);
  const SecrecyScenario s = SecrecyScenario{}.at_snr(10);
  const auto draw = TrialDraw::sample(s, rng);
  const auto sel = select_ports(s, draw);
  ASSERT_EQ(sel.table.size(), 70u);
  EXPECT_FALSE(sel.greedy);
  for (const auto& row : sel.table) EXPECT_GE(sel.best.unclamped_rate, row.unclamped_rate);
  EXPECT_EQ(sel.best_subset.size(), 4u);
  EXPECT_EQ(sel.best_rate, std::max(0.0, sel.best.unclamped_rate));
}

TEST(PortSelection, AllPortsActiveHasOneRow) {
  std::mt19937_64 rng(11);
  SecrecyScenario s = SecrecyScenario{}.at_snr(10);
  s.grid = PortGrid::uniform(4, 4);
  const auto sel = select_ports(s, TrialDraw::sample(s, rng));
  ASSERT_EQ(sel.table.size(), 1u);
  EXPECT_EQ(sel.best_subset, (std::vector<int>{0, 1, 2, 3}));
}

TEST(PortSelection, BudgetExceededUnlessGreedyAllowed) {
  std::mt19937_64 rng(12);
  SecrecyScenario s = SecrecyScenario{}.at_snr(10);
  s.grid = PortGrid::uniform(20, 10);
  const auto draw = TrialDraw::sample(s, rng);
  EXPECT_THROW(select_ports(s, draw), BudgetExceededError);
  s.solver_cfg.max_iters = 200;
  const auto sel = select_ports(s, draw, PortSearch::ExhaustiveOrGreedy);
  EXPECT_TRUE(sel.greedy);
  EXPECT_EQ(sel.best_subset.size(), 10u);
  EXPECT_TRUE(std::is_sorted(sel.best_subset.begin(), sel.best_subset.end()));
}

TEST(Scenario, SnrToNoisePower) {
  SecrecyScenario s;
  s.total_power = 2.0;
  EXPECT_NEAR(s.noise_for_snr(10), 0.2, 1e-15);
  EXPECT_NEAR(s.at_snr(0).noise_power, 2.0, 1e-15);
  s.trials = 0;
  EXPECT_THROW(s.validate(), InvalidArgumentError);
}

TEST(Sweep, DeterministicAcrossThreadCounts) {
  const SecrecyScenario s = small_scenario();
  SweepOptions one, two;
  one.threads = 1;
  two.threads = 2;
  const auto a = monte_carlo_sweep(s, one);
  const auto b = monte_carlo_sweep(s, two);
  ASSERT_EQ(a.size(), 2u);
  ASSERT_EQ(b.size(), 2u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].snr_db, s.snr_grid_db[i]);
    EXPECT_EQ(a[i].asr, b[i].asr);
    EXPECT_EQ(a[i].asr_stderr, b[i].asr_stderr);
    EXPECT_EQ(a[i].mean_iters, b[i].mean_iters);
    EXPECT_EQ(a[i].trials, 3);
    ASSERT_EQ(a[i].trial_results.size(), 3u);
    for (std::size_t t = 0; t < 3; ++t) {
      EXPECT_EQ(a[i].trial_results[t].selected_ports, b[i].trial_results[t].selected_ports);
    }
  }
}

TEST(Sweep, SameDrawsAcrossSolvers) {
  SecrecyScenario s = small_scenario();
  s.solver = SolverKind::RGD;
  const auto g = monte_carlo_sweep(s);
  s.solver = SolverKind::RTR;
  const auto r = monte_carlo_sweep(s);
  double it_g = 0, it_r = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t t = 0; t < g[i].trial_results.size(); ++t) {
      EXPECT_EQ(g[i].trial_results[t].initial_rate, r[i].trial_results[t].initial_rate);
      EXPECT_EQ(g[i].trial_results[t].feasibility_violations, 0);
      EXPECT_EQ(r[i].trial_results[t].descent_violations, 0);
    }
    it_g += g[i].mean_iters;
    it_r += r[i].mean_iters;
  }
  EXPECT_LE(it_r, it_g);
}

TEST(Sweep, TrialStreamDependsOnEveryIndex) {
  auto a = trial_stream(1, 0, 0), b = trial_stream(1, 0, 1), c = trial_stream(1, 1, 0), d = trial_stream(2, 0, 0);
  const auto va = a();
  EXPECT_NE(va, b());
  EXPECT_NE(va, c());
  EXPECT_NE(va, d());
  auto e = trial_stream(1, 0, 0);
  EXPECT_EQ(va, e());
}
