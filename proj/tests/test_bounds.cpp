#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "covnum/bounds.hpp"
#include "covnum/errors.hpp"

using namespace covnum;

TEST(MainBounds, UnitConstantGivesOne) {
  for (int g : {2, 3, 10, 1000}) {
    const auto b = main_theorem_bounds(g, 1.0 / g, 2.0);
    ASSERT_TRUE(b.lower.value_log10.has_value());
    EXPECT_NEAR(*b.lower.value_log10, 0.0, 1e-12);
    EXPECT_NEAR(*b.upper.value_log10, 2.0 * g * std::log10(2.0 * g), 1e-9 * g);
  }
  EXPECT_THROW(main_theorem_bounds(1, 1, 1), ValidationError);
  EXPECT_THROW(main_theorem_bounds(2, 0, 1), ValidationError);
}

TEST(MainBounds, RatioIsPowerOfConstants) {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> u(0.01, 50.0);
  for (int t = 0; t < 200; ++t) {
    const int g = 2 + static_cast<int>(rng() % 5000);
    const double c1 = u(rng), c2 = u(rng);
    const auto b = main_theorem_bounds(g, c1, c2);
    EXPECT_NEAR(*b.upper.value_log10 - *b.lower.value_log10, 2.0 * g * std::log10(c2 / c1),
                1e-10 * std::max(1.0, std::abs(2.0 * g * std::log10(c2 / c1))));
  }
}

TEST(MainBounds, ExactWhenIntegral) {
  const auto b = main_theorem_bounds(10, 1.0, 2.0);
  EXPECT_EQ(*b.lower.exact, BigInt("100000000000000000000"));
  EXPECT_NEAR(*b.lower.value_log10, 20.0, 1e-12);
  EXPECT_TRUE(exact_matches_log(b.lower));
  EXPECT_TRUE(exact_matches_log(b.upper));
  EXPECT_EQ(*b.upper.exact, boost::multiprecision::pow(BigInt(20), 20));
}

TEST(Composition, Examples) {
  const auto a = lower_bound_composition(3.0, 1.0, 4);
  EXPECT_DOUBLE_EQ(a.c_l, 3.0);
  EXPECT_NEAR(a.lhs_log10, 8 * std::log10(12.0), 1e-12);
  const auto b = lower_bound_composition(5.0, 25.0, 7);
  EXPECT_NEAR(b.c_l, 1.0, 1e-15);
  EXPECT_NEAR(*b.report.value_log10, 14 * std::log10(7.0), 1e-12);
  EXPECT_THROW(lower_bound_composition(0.0, 1.0, 2), ValidationError);
}

TEST(Composition, IdentityHoldsInLogSpace) {
  std::mt19937_64 rng(72);
  std::uniform_real_distribution<double> u(0.001, 1000.0);
  for (int t = 0; t < 500; ++t) {
    const int g = 1 + static_cast<int>(rng() % 100000);
    const auto r = lower_bound_composition(u(rng), u(rng), g);
    EXPECT_LE(r.residual, 1e-9 * std::max(1.0, std::abs(r.lhs_log10)));
  }
}

TEST(Diameter, Examples) {
  for (int g : {1, 2, 5, 100}) EXPECT_NEAR(*diameter_chain(g, 1.0 / g, 3.0).value, -1.0, 1e-12);
  // c1 = 1, d2 = e: 2 log g - 1.
  EXPECT_NEAR(*diameter_chain(10, 1.0, std::exp(1.0)).value, 2 * std::log(10.0) - 1, 1e-12);
  EXPECT_THROW(diameter_chain(2, 1.0, 1.0), ValidationError);
}

TEST(Diameter, MonotoneInGenus) {
  double prev = -1e300;
  for (int g = 1; g <= 2000; g += 7) {
    const double v = *diameter_chain(g, 0.3, 5.0).value;
    EXPECT_GT(v, prev);
    prev = v;
  }
}

TEST(TeichBall, Examples) {
  const auto b = teich_ball_bounds(3, 2.0, 3.0);
  EXPECT_EQ(*b.lower.exact, 8);
  EXPECT_EQ(*b.upper.exact, 27);
  EXPECT_TRUE(b.ordered);
  EXPECT_FALSE(teich_ball_bounds(3, 4.0, 3.0).ordered);
  const auto zero = teich_ball_bounds(5, 0.0, 2.0);
  EXPECT_FALSE(zero.lower.value_log10.has_value());
  EXPECT_EQ(*zero.lower.value, 0.0);
  EXPECT_EQ(*zero.lower.exact, 0);
  EXPECT_TRUE(exact_matches_log(zero.lower));
  EXPECT_THROW(teich_ball_bounds(2, -1.0, 2.0), ValidationError);
  EXPECT_THROW(teich_ball_bounds(2, 1.0, 1.0), ValidationError);
}

TEST(PackingBudget, Examples) {
  const auto a = packing_budget(2.0, 1.0, 1, 0.1);
  EXPECT_EQ(*a.exact, 1);
  EXPECT_NEAR(*a.value_log10, 0.0, 1e-15);
  const auto b = packing_budget(10.0, 9.0, 5, 0.1);
  EXPECT_EQ(*b.exact, 100000 - 59049);
  EXPECT_TRUE(exact_matches_log(b, 1e-12));
  EXPECT_THROW(packing_budget(2.0, 0.0, 1, 0.1), ValidationError);
  EXPECT_THROW(packing_budget(2.0, 2.0, 1, 0.1), ValidationError);
}

TEST(PackingBudget, NearlyEqualBasesKeepPrecision) {
  // D^g - Q^g with Q/D close to 1: 1 - (Q/D)^g ~ g (1 - Q/D).
  const auto r = packing_budget(1.0 + 1e-12, 1.0, 3, 0.1);
  EXPECT_NEAR(*r.value_log10, std::log10(3e-12), 1e-3);
  const auto big = packing_budget(7.0, 6.0, 4000, 0.1);
  EXPECT_TRUE(exact_matches_log(big, 1e-12));
}

TEST(LabelingReport, ExactAndLog) {
  const auto r = labeling_bound_report(5, 10, 3);
  EXPECT_EQ(*r.exact, BigInt("3656158440062976"));
  EXPECT_NEAR(*r.value, 3656158440062976.0, 1.0);
  EXPECT_TRUE(exact_matches_log(r, 1e-12));
  const auto huge = labeling_bound_report(100, 100000, 10);
  EXPECT_FALSE(huge.exact.has_value());
  EXPECT_NEAR(*huge.value_log10, 900000 * std::log10(101.0), 1e-6);
  EXPECT_FALSE(huge.value.has_value());
}

TEST(ExactVersusLog, RandomIntegerInputs) {
  std::mt19937_64 rng(73);
  for (int t = 0; t < 300; ++t) {
    const int g = 2 + static_cast<int>(rng() % 400);
    const double c = 1 + static_cast<double>(rng() % 20);
    const auto b = main_theorem_bounds(g, c / g, (c + 1) / g);
    EXPECT_TRUE(exact_matches_log(b.lower));
    EXPECT_TRUE(exact_matches_log(b.upper));
    const auto tb = teich_ball_bounds(g, c, c + 1.5);
    EXPECT_TRUE(exact_matches_log(tb.lower));
    const auto lb = labeling_bound_report(rng() % 30 + 1, rng() % 50 + 1, rng() % 20 + 1);
    EXPECT_TRUE(exact_matches_log(lb, 1e-12));
  }
}

TEST(BigLog10, PowersOfTen) {
  for (int k : {0, 1, 15, 16, 17, 100, 1000}) {
    EXPECT_NEAR(big_log10(boost::multiprecision::pow(BigInt(10), k)), k, 1e-12 * std::max(1, k));
  }
  EXPECT_THROW(big_log10(BigInt(0)), ValidationError);
}
