#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "covnum/errors.hpp"
#include "covnum/metric_space.hpp"
#include "support.hpp"

using namespace covnum;
using namespace covnum::testing;

namespace {

FiniteMetricSpace line(std::vector<double> xs) {
  const std::size_t n = xs.size();
  std::vector<std::vector<double>> d(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i][j] = std::fabs(xs[i] - xs[j]);
  return FiniteMetricSpace(ids_for(n), d);
}

FiniteMetricSpace line5() { return line({0, 1, 2, 3, 4}); }

}  // namespace

TEST(FiniteMetricSpace, RejectsTriangleViolation) {
  std::vector<std::vector<double>> d = {{0, 1, 5}, {1, 0, 1}, {5, 1, 0}};
  EXPECT_THROW(FiniteMetricSpace(ids_for(3), d), ValidationError);
}

TEST(FiniteMetricSpace, RejectsAsymmetryAndDiagonal) {
  EXPECT_THROW(FiniteMetricSpace(ids_for(2), {{0, 1}, {2, 0}}), ValidationError);
  EXPECT_THROW(FiniteMetricSpace(ids_for(2), {{1, 1}, {1, 0}}), ValidationError);
  EXPECT_THROW(FiniteMetricSpace({"a", "a"}, {{0, 1}, {1, 0}}), ValidationError);
}

TEST(CoveringNumber, LineExample) {
  const auto s = line5();
  const auto all = s.all_points();
  const auto r = covering_number_exact(s, all, all, 1.5);
  EXPECT_EQ(r.count, 2u);
  EXPECT_EQ(r.certificate.centers, (PointSet{1, 3}));
  EXPECT_TRUE(validate_cover(s, all, all, r.certificate).valid);
}

TEST(CoveringNumber, EmptyAndSingleton) {
  const auto s = line5();
  const auto all = s.all_points();
  EXPECT_EQ(covering_number_exact(s, {}, all, 0.7).count, 0u);
  EXPECT_EQ(covering_number_exact(s, {3}, all, 0.1).count, 1u);
  EXPECT_EQ(covering_number_greedy(s, {}, all, 0.7).count, 0u);
  EXPECT_EQ(covering_number_greedy(s, {3}, all, 0.1).count, 1u);
}

TEST(CoveringNumber, OpenBallsOfRadiusZeroAreEmpty) {
  const auto s = line5();
  EXPECT_THROW(covering_number_exact(s, {0}, s.all_points(), 0.0, BallKind::kOpen), ValidationError);
}

TEST(CoveringNumber, OpenVersusClosed) {
  const auto s = line5();
  const auto all = s.all_points();
  // Closed unit balls reach both neighbours; open ones only the center.
  EXPECT_EQ(covering_number_exact(s, all, all, 1.0, BallKind::kClosed).count, 2u);
  EXPECT_EQ(covering_number_exact(s, all, all, 1.0, BallKind::kOpen).count, 5u);
}

TEST(CoveringNumber, GreedyIsValidUpperBound) {
  const auto s = line5();
  const auto all = s.all_points();
  const auto g = covering_number_greedy(s, all, all, 1.5);
  EXPECT_TRUE(g.count == 2 || g.count == 3);
  EXPECT_TRUE(validate_cover(s, all, all, g.certificate).valid);
}

TEST(CoveringNumber, MatchesBruteForceOnRandomSpaces) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 4 + rng() % 13;
    const auto s = random_planar_space(n, rng);
    const auto e = random_subset(n, rng);
    const double r = std::uniform_real_distribution<double>(0.5, 4.0)(rng);
    const auto kind = t % 2 ? BallKind::kOpen : BallKind::kClosed;
    const auto all = s.all_points();
    const auto exact = covering_number_exact(s, e, all, r, kind);
    EXPECT_EQ(exact.count, brute_cover(s, e, all, r, kind)) << "trial " << t;
    EXPECT_TRUE(validate_cover(s, e, all, exact.certificate).valid);
    const auto greedy = covering_number_greedy(s, e, all, r, kind);
    EXPECT_GE(greedy.count, exact.count);
    EXPECT_TRUE(validate_cover(s, e, all, greedy.certificate).valid);
  }
}

TEST(CoveringNumber, ValidatorRejectsTamperedCertificates) {
  const auto s = line5();
  const auto all = s.all_points();
  auto cert = covering_number_exact(s, all, all, 1.5).certificate;
  auto shrunk = cert;
  shrunk.radius = 0.5;
  EXPECT_FALSE(validate_cover(s, all, all, shrunk).valid);
  auto outside = cert;
  EXPECT_FALSE(validate_cover(s, all, PointSet{0, 1, 2, 4}, outside).valid);
  auto dropped = cert;
  dropped.assignment.pop_back();
  EXPECT_FALSE(validate_cover(s, all, all, dropped).valid);
}

TEST(PackingNumber, LineExample) {
  const auto s = line5();
  const auto p = packing_number_exact(s, s.all_points(), 0.6);
  EXPECT_EQ(p.count, 3u);
  EXPECT_EQ(p.certificate.centers, (PointSet{0, 2, 4}));
  EXPECT_TRUE(validate_packing(s, s.all_points(), p.certificate).valid);
}

TEST(PackingNumber, LargeRadiusAndEmpty) {
  const auto s = line5();
  EXPECT_EQ(packing_number_exact(s, s.all_points(), s.diameter() / 2).count, 1u);
  EXPECT_EQ(packing_number_exact(s, {}, 1.0).count, 0u);
}

TEST(PackingNumber, ValidatorRejectsClosePair) {
  const auto s = line5();
  PackingCertificate c{0.6, {0, 1}};
  EXPECT_FALSE(validate_packing(s, s.all_points(), c).valid);
}

TEST(PackingNumber, MatchesBruteForce) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 3 + rng() % 12;
    const auto s = random_planar_space(n, rng);
    const auto e = random_subset(n, rng, 0.8);
    const double r = std::uniform_real_distribution<double>(0.3, 3.0)(rng);
    const auto p = packing_number_exact(s, e, r);
    EXPECT_EQ(p.count, brute_packing(s, e, r)) << "trial " << t;
    EXPECT_TRUE(validate_packing(s, e, p.certificate).valid);
  }
}

TEST(MetricProperties, SubsetMonotonicity) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 5 + rng() % 10;
    const auto s = random_planar_space(n, rng);
    const auto f = random_subset(n, rng, 0.8);
    PointSet e;
    for (PointIndex p : f)
      if (rng() % 2) e.push_back(p);
    const double r = std::uniform_real_distribution<double>(0.5, 3.0)(rng);
    const auto all = s.all_points();
    EXPECT_LE(covering_number_exact(s, e, all, r).count, covering_number_exact(s, f, all, r).count);
  }
}

TEST(MetricProperties, RestrictedCentersSandwich) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 5 + rng() % 10;
    const auto s = random_planar_space(n, rng);
    const auto e = random_subset(n, rng, 0.5);
    PointSet y = e;
    for (PointIndex p = 0; p < n; ++p)
      if (rng() % 2) y.push_back(p);
    std::sort(y.begin(), y.end());
    y.erase(std::unique(y.begin(), y.end()), y.end());
    const double r = std::uniform_real_distribution<double>(0.5, 3.0)(rng);
    const auto all = s.all_points();
    const auto in_x = covering_number_exact(s, e, all, r).count;
    const auto in_y = covering_number_exact(s, e, y, r).count;
    const auto in_x_half = covering_number_exact(s, e, all, r / 2).count;
    EXPECT_LE(in_x, in_y);
    EXPECT_LE(in_y, in_x_half);
  }
}

TEST(MetricProperties, RadiusMonotonicity) {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 5 + rng() % 10;
    const auto s = random_planar_space(n, rng);
    const auto all = s.all_points();
    std::size_t prev = n + 1;
    for (double r = 0.25; r < 8; r *= 1.5) {
      const auto c = covering_number_exact(s, all, all, r).count;
      EXPECT_LE(c, prev);
      prev = c;
    }
  }
}

TEST(MetricProperties, PackingSandwich) {
  std::mt19937_64 rng(16);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 4 + rng() % 12;
    const auto s = random_planar_space(n, rng);
    const auto e = random_subset(n, rng, 0.8);
    const double r = std::uniform_real_distribution<double>(0.3, 3.0)(rng);
    const auto all = s.all_points();
    const auto pack = packing_number_exact(s, e, r).count;
    EXPECT_LE(covering_number_exact(s, e, all, 2 * r).count, pack);
    EXPECT_LE(pack, covering_number_exact(s, e, all, r).count);
  }
}

TEST(ChainInequality, SinglePoint) {
  const FiniteMetricSpace s({"a"}, {{0.0}});
  const auto c = verify_chain_inequality(s, 0, 1, 1, 1);
  EXPECT_EQ(c.lhs, 1u);
  EXPECT_EQ(c.rhs, 1u);
  EXPECT_TRUE(c.holds);
}

TEST(ChainInequality, LineExample) {
  const auto s = line5();
  const auto c = verify_chain_inequality(s, 2, 1, 1, 1);
  // B(2, 2) is the whole line: 2 unit balls. B(2, 1) = {1,2,3}: 1 ball.
  // Every B(y, 2) on the line needs at most 2.
  EXPECT_EQ(c.lhs, 2u);
  EXPECT_EQ(c.inner_ball, 1u);
  EXPECT_EQ(c.sup_factor, 2u);
  EXPECT_TRUE(c.holds);
}

TEST(ChainInequality, CanFailOffGraphMetrics) {
  const auto s = line({0.0, 1.9});
  const auto c = verify_chain_inequality(s, 0, 1.0, 1.0, 0.5);
  EXPECT_EQ(c.lhs, 2u);
  EXPECT_EQ(c.rhs, 1u);
  EXPECT_FALSE(c.holds);
}

TEST(ChainInequality, HoldsOnGraphMetrics) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 4 + rng() % 12;
    const auto s = random_graph_space(n, rng);
    const PointIndex x = rng() % n;
    const double r = 1 + rng() % 3, p = 1 + rng() % 3, q = 1 + rng() % 2;
    EXPECT_TRUE(verify_chain_inequality(s, x, r, p, q).holds) << "trial " << t;
  }
}

TEST(BiLipschitz, TransferBookkeeping) {
  EXPECT_EQ(bilipschitz_transfer(7, 1.0).bound, 7u);
  EXPECT_EQ(bilipschitz_transfer(9, 2.0).bound, 9u);
  EXPECT_THROW(bilipschitz_transfer(9, 0.5), ValidationError);
}

TEST(BiLipschitz, TransferHoldsOnExplicitMaps) {
  std::mt19937_64 rng(18);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  for (int t = 0; t < 25; ++t) {
    const std::size_t n = 4 + rng() % 10;
    const double sy = std::uniform_real_distribution<double>(0.4, 1.0)(rng);
    std::vector<std::pair<double, double>> pts(n);
    for (auto& p : pts) p = {u(rng), u(rng)};
    std::vector<std::vector<double>> dx(n, std::vector<double>(n)), dy = dx;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const double ex = pts[i].first - pts[j].first, ey = pts[i].second - pts[j].second;
        dx[i][j] = std::hypot(ex, ey);
        dy[i][j] = std::hypot(ex, sy * ey);
      }
    const FiniteMetricSpace x(ids_for(n), dx), y(ids_for(n), dy);
    const double l = bilipschitz_distortion(x, y);
    EXPECT_LE(l, 1.0 / sy + 1e-9);
    const double r = std::uniform_real_distribution<double>(0.5, 4.0)(rng);
    const auto eta_y = covering_number_exact(y, y.all_points(), y.all_points(), r / l).count;
    const auto bound = bilipschitz_transfer(eta_y, l).bound;
    EXPECT_LE(covering_number_exact(x, x.all_points(), x.all_points(), r).count, bound);
  }
}

TEST(DiameterBound, Examples) {
  EXPECT_LE(diameter_lower_bound(1, 2), 0.0);
  // eta = d2^(g(D+1)) gives g(D+1) - 1.
  EXPECT_NEAR(diameter_lower_bound(static_cast<std::uint64_t>(std::pow(3, 12)), 3), 11.0, 1e-12);
  EXPECT_THROW(diameter_lower_bound(5, 1), ValidationError);
}

TEST(DiameterBound, BelowTrueDiameterOnGraphMetrics) {
  std::mt19937_64 rng(19);
  int checked = 0;
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 4 + rng() % 14;
    const auto s = random_graph_space(n, rng, 1, 0.05);
    const auto all = s.all_points();
    const auto eta = covering_number_exact(s, all, all, 1.0).count;
    std::size_t sup = 0;
    for (PointIndex y = 0; y < n; ++y) {
      const auto ball = s.ball(y, 2.0);
      sup = std::max(sup, covering_number_exact(s, ball, all, 1.0).count);
    }
    if (sup < 2) continue;
    ++checked;
    EXPECT_LE(diameter_lower_bound(eta, sup), s.diameter() + 1e-12);
  }
  EXPECT_GT(checked, 20);
}
