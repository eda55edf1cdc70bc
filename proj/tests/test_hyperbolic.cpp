#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "covnum/disk_net.hpp"
#include "covnum/errors.hpp"
#include "covnum/hyperbolic.hpp"

using namespace covnum;

namespace {

constexpr double kPi = std::numbers::pi;

Complex random_disk_point(std::mt19937_64& rng, double max_radius = 0.95) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(max_radius * std::sqrt(u(rng)), 2 * kPi * u(rng));
}

// Composite Simpson rule for the length of [0, x] under 2 / (1 - t^2).
double radial_length(double x, int panels = 20000) {
  auto f = [](double t) { return 2.0 / (1.0 - t * t); };
  const double h = x / panels;
  double s = f(0) + f(x);
  for (int i = 1; i < panels; ++i) s += f(i * h) * (i % 2 ? 4 : 2);
  return s * h / 3;
}

HypTriangle random_triangle(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.05, 3.0);
  while (true) {
    const double a = u(rng), b = u(rng), c = u(rng);
    if (a < b + c && b < a + c && c < a + b && std::min({b + c - a, a + c - b, a + b - c}) > 1e-3) {
      return HypTriangle::from_sides(a, b, c);
    }
  }
}

}  // namespace

TEST(HypDistance, Basics) {
  const Complex z(0.3, -0.2);
  EXPECT_EQ(hyp_distance(z, z), 0.0);
  EXPECT_NEAR(hyp_distance(Complex(0, 0), Complex(0.5, 0)), std::log(3.0), 1e-14);
  EXPECT_NEAR(hyp_distance(Complex(0, 0), Complex(0.5, 0)), radial_length(0.5), 1e-12);
  EXPECT_NEAR(hyp_distance(Complex(0, 0), Complex(0, -0.8)), radial_length(0.8), 1e-10);
  EXPECT_THROW(DiskPoint(1.0, 0.0), ValidationError);
}

TEST(HypDistance, MatchesArccoshFormula) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 1000; ++t) {
    const Complex z = random_disk_point(rng), w = random_disk_point(rng);
    const double f = std::acosh(1 + 2 * std::norm(z - w) / ((1 - std::norm(z)) * (1 - std::norm(w))));
    EXPECT_NEAR(hyp_distance(z, w), f, 1e-9 * std::max(1.0, f));
  }
}

TEST(HypDistance, MetricAxiomsAndIsometries) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 1000; ++t) {
    const Complex x = random_disk_point(rng), y = random_disk_point(rng), z = random_disk_point(rng);
    EXPECT_DOUBLE_EQ(hyp_distance(x, y), hyp_distance(y, x));
    EXPECT_LE(hyp_distance(x, z), hyp_distance(x, y) + hyp_distance(y, z) + 1e-12);
    const Complex p = random_disk_point(rng, 0.7);
    EXPECT_NEAR(hyp_distance(mobius_from_origin(p, x), mobius_from_origin(p, y)), hyp_distance(x, y), 1e-9);
  }
  EXPECT_NEAR(std::abs(mobius_from_origin(Complex(0.3, 0.4), 0.0) - Complex(0.3, 0.4)), 0.0, 1e-15);
}

TEST(HypDistance, RadiusConversions) {
  for (double rho : {0.0, 0.1, 1.0, 3.0, 7.0}) {
    const double e = euclidean_radius(rho);
    EXPECT_NEAR(hyperbolic_radius(e), rho, 1e-9);
    EXPECT_NEAR(hyp_distance(Complex(0, 0), Complex(e, 0)), rho, 1e-9);
  }
  EXPECT_DOUBLE_EQ(hyp_density(0.0), 2.0);
}

TEST(LawOfCosines, Pythagoras) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.05, 2.5);
  for (int t = 0; t < 500; ++t) {
    const double a = u(rng), b = u(rng);
    const double c = std::acosh(std::cosh(a) * std::cosh(b));
    EXPECT_NEAR(angles_from_sides(a, b, c).gamma, kPi / 2, 1e-9);
    // Right angle prescribed: cosh c = cosh a cosh b.
    const double alpha = std::uniform_real_distribution<double>(0.05, 0.7)(rng);
    const double beta = std::uniform_real_distribution<double>(0.05, kPi / 2 - alpha - 0.05)(rng);
    const auto s = sides_from_angles(alpha, beta, kPi / 2);
    const double lhs = std::cosh(s.c), rhs = std::cosh(s.a) * std::cosh(s.b);
    EXPECT_NEAR(lhs / rhs, 1.0, 1e-12);
  }
}

TEST(LawOfCosines, Equilateral) {
  const auto ang = angles_from_sides(1, 1, 1);
  EXPECT_DOUBLE_EQ(ang.alpha, ang.beta);
  EXPECT_DOUBLE_EQ(ang.beta, ang.gamma);
  // cos alpha = cosh 1 / (cosh 1 + 1) for the unit equilateral triangle.
  EXPECT_NEAR(std::cos(ang.alpha), std::cosh(1.0) / (std::cosh(1.0) + 1.0), 1e-14);
  const auto s = sides_from_angles(ang.alpha, ang.beta, ang.gamma);
  EXPECT_NEAR(s.a, 1.0, 1e-12);
  EXPECT_NEAR(s.b, 1.0, 1e-12);
  EXPECT_NEAR(s.c, 1.0, 1e-12);
}

TEST(LawOfCosines, EuclideanLimit) {
  const auto ang = angles_from_sides(1e-4, 1e-4, 1e-4);
  EXPECT_NEAR(ang.alpha, kPi / 3, 1e-6);
  EXPECT_NEAR(ang.gamma, kPi / 3, 1e-6);
  const auto s = sides_from_angles(kPi / 3 - 1e-7, kPi / 3 - 1e-7, kPi / 3 - 1e-7);
  EXPECT_LT(s.a, 2e-3);
}

TEST(LawOfCosines, SidesShrinkTowardEuclideanAngleSum) {
  double prev = 1e300;
  for (double e : {0.3, 0.1, 0.03, 0.01, 0.003, 0.001}) {
    const auto s = sides_from_angles(kPi / 3 - e, kPi / 3 - e, kPi / 3 - e);
    EXPECT_LT(s.a, prev);
    prev = s.a;
  }
}

TEST(LawOfCosines, Errors) {
  EXPECT_THROW(angles_from_sides(1, 1, 2), ValidationError);
  EXPECT_THROW(angles_from_sides(1, 1, 3), ValidationError);
  EXPECT_THROW(angles_from_sides(0, 1, 1), ValidationError);
  EXPECT_THROW(sides_from_angles(1, 1, 1.2), ValidationError);
  EXPECT_THROW(sides_from_angles(kPi / 3, kPi / 3, kPi / 3), ValidationError);
}

TEST(LawOfCosines, RoundTripRandom) {
  std::mt19937_64 rng(24);
  double worst = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto tri = random_triangle(rng);
    EXPECT_LT(tri.angles.alpha + tri.angles.beta + tri.angles.gamma, kPi);
    EXPECT_NEAR(tri.area(), kPi - tri.angles.alpha - tri.angles.beta - tri.angles.gamma, 1e-15);
    const auto s = sides_from_angles(tri.angles.alpha, tri.angles.beta, tri.angles.gamma);
    worst = std::max({worst, std::abs(s.a - tri.sides.a), std::abs(s.b - tri.sides.b),
                      std::abs(s.c - tri.sides.c)});
  }
  EXPECT_LT(worst, 1e-9);
}

TEST(LawOfCosines, AgreesWithDiskRealization) {
  // Place A = 0, B on the real axis, C at angle alpha; the side a is then
  // the disk distance between B and C.
  std::mt19937_64 rng(25);
  for (int t = 0; t < 200; ++t) {
    const auto tri = random_triangle(rng);
    const Complex b(euclidean_radius(tri.sides.c), 0);
    const Complex c = std::polar(euclidean_radius(tri.sides.b), tri.angles.alpha);
    EXPECT_NEAR(hyp_distance(b, c), tri.sides.a, 1e-8);
  }
}

TEST(MinAngle, PositiveAndMonotoneUnderRefinement) {
  for (double eps : {0.1, 0.5, 1.0, 2.0}) {
    const auto r = min_angle_bound(eps, 32, 3, 4);
    EXPECT_GT(r.theta, 0.0);
    for (std::size_t i = 1; i < r.round_minima.size(); ++i) {
      EXPECT_LE(r.round_minima[i], r.round_minima[i - 1]);
    }
    EXPECT_DOUBLE_EQ(r.theta, r.round_minima.back());
    const auto t = HypTriangle::from_sides(r.minimizer.a, r.minimizer.b, r.minimizer.c);
    EXPECT_DOUBLE_EQ(t.min_angle(), r.theta);
    for (double s : {r.minimizer.a, r.minimizer.b, r.minimizer.c}) {
      EXPECT_GE(s, eps / 2 - 1e-15);
      EXPECT_LE(s, eps + 1e-15);
    }
  }
}

TEST(MinAngle, MinimizerHeadsToDegenerateCorner) {
  // The infimum over the closed side cube is 0, approached at (eps/2, eps/2, eps).
  const double eps = 1.0;
  const auto r = min_angle_bound(eps, 64, 5, 8);
  double s[3] = {r.minimizer.a, r.minimizer.b, r.minimizer.c};
  std::sort(s, s + 3);
  EXPECT_NEAR(s[0], eps / 2, 1e-3);
  EXPECT_NEAR(s[1], eps / 2, 1e-3);
  EXPECT_NEAR(s[2], eps, 1e-3);
  EXPECT_GT(r.skipped_degenerate, 0);
  EXPECT_LT(r.theta, r.round_minima.front());
}

TEST(DiskNet, SinglePointWhenDeltaCoversRegion) {
  const DiskNet net(0.5, 0.7);
  EXPECT_EQ(net.size(), 1u);
  EXPECT_TRUE(net.validate(2000, 1).valid);
}

TEST(DiskNet, ValidOnFreshSamples) {
  const DiskNet net(2.0, 0.1);
  const auto v = net.validate(100000, 7);
  EXPECT_TRUE(v.valid);
  EXPECT_LE(v.worst_gap, 0.1);
  EXPECT_EQ(v.samples, 100000u);
}

TEST(DiskNet, NearestMatchesFullScan) {
  const DiskNet net(1.5, 0.2);
  std::mt19937_64 rng(26);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 2000; ++t) {
    const Complex z = sample_hyperbolic_ball(1.5, u(rng), u(rng));
    EXPECT_LE(hyp_distance(0.0, z), 1.5 + 1e-12);
    double best = 1e300;
    for (const Complex& p : net.points()) best = std::min(best, hyp_distance(z, p));
    const auto [idx, d] = net.nearest(z);
    EXPECT_LE(d, 0.2);
    EXPECT_NEAR(d, hyp_distance(z, net.points()[idx]), 1e-15);
    EXPECT_LE(best, d + 1e-15);
    EXPECT_LE(best, 0.2);
  }
}

TEST(DiskNet, GrowsAsDeltaShrinks) {
  std::size_t prev = 0;
  for (double delta : {1.0, 0.5, 0.25, 0.1, 0.05}) {
    const DiskNet net(2.0, delta);
    EXPECT_GT(net.size(), prev);
    prev = net.size();
  }
}
