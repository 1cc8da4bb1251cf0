#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cvspec/bounds.hpp"
#include "cvspec/catalog.hpp"
#include "cvspec/oracle.hpp"

using namespace cvspec;

namespace {
constexpr double kFourPiSq = 4.0 * std::numbers::pi * std::numbers::pi;
}

TEST(TorusSpectrum, UnitCutoff) {
  const auto spec = torus_joint_spectrum(2, {1});
  ASSERT_EQ(spec.size(), 3u);
  EXPECT_EQ(spec.pairs()[0], (JointEigenpair{0, 0, 1}));
  EXPECT_DOUBLE_EQ(spec.pairs()[1].lambda, kFourPiSq);
  EXPECT_DOUBLE_EQ(spec.pairs()[1].a, 0.0);
  EXPECT_EQ(spec.pairs()[1].mult, 2);
  EXPECT_DOUBLE_EQ(spec.pairs()[2].a, kFourPiSq);
  EXPECT_EQ(spec.pairs()[2].mult, 2);
}

TEST(TorusSpectrum, Lambda1) {
  const auto spec = torus_joint_spectrum(2, {64});
  EXPECT_NEAR(lambda1_of_t(spec, 4.0), kFourPiSq / 16.0, 1e-12);
  for (double t : {0.1, 0.5, 1.0}) EXPECT_NEAR(lambda1_of_t(spec, t), kFourPiSq, 1e-12);
}

TEST(TorusSpectrum, LatticeCounts) {
  // r_3(1) = 6, r_3(2) = 12, r_3(3) = 8.
  const auto spec = torus_joint_spectrum(3, {3});
  int total = 0;
  for (const auto& p : spec.pairs()) total += *p.mult;
  EXPECT_EQ(total, 1 + 6 + 12 + 8);
  EXPECT_THROW(torus_joint_spectrum(1, {4}), std::invalid_argument);
  EXPECT_THROW(torus_joint_spectrum(2, {0}), std::invalid_argument);
}

TEST(ProductSpectrum, CircleTimesCircle) {
  const auto circle = circle_spectrum(40);
  const auto spec = product_joint_spectrum(circle, circle, 1600.0);
  for (double t : {1.5, 2.0, 10.0}) EXPECT_NEAR(lambda1_of_t(spec, t), 1.0 / (t * t), 1e-14);
  EXPECT_DOUBLE_EQ(lambda1_of_t(spec, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(lambda1_of_t(spec, 0.5), 1.0);
}

TEST(ProductSpectrum, Errors) {
  const std::vector<double> unsorted{0, 4, 1};
  const std::vector<double> ok{0, 1, 1, 4, 4};
  EXPECT_THROW(product_joint_spectrum(unsorted, ok, 4.0), std::invalid_argument);
  EXPECT_THROW(product_joint_spectrum(ok, std::vector<double>{1, 2}, 2.0), std::invalid_argument);
  EXPECT_THROW(product_joint_spectrum(ok, ok, 9.0), std::invalid_argument);
}

TEST(HopfSpectrum, Pairs) {
  const auto spec = hopf_joint_spectrum(1, 2);
  // (0,0), (3,2) from k=1, m=±1; (8,4) from m=±2; (8,8) from m=0.
  ASSERT_EQ(spec.size(), 4u);
  EXPECT_EQ(spec.pairs()[1].lambda, 3.0);
  EXPECT_EQ(spec.pairs()[1].a, 2.0);
  EXPECT_EQ(spec.pairs()[3].lambda, 8.0);
  EXPECT_EQ(spec.pairs()[3].a, 8.0);
  EXPECT_EQ(spec.cutoff(), 8.0);
}

TEST(HopfSpectrum, TannoMinimum) {
  EXPECT_DOUBLE_EQ(lambda1_of_t(hopf_joint_spectrum(2, 30), 1.0), 5.0);
  for (int n = 1; n <= 3; ++n) {
    const auto spec = hopf_joint_spectrum(n, 30);
    for (double t = 0.1; t <= 10.0; t *= 1.07) {
      EXPECT_NEAR(lambda1_of_t(spec, t), std::min(2.0 * n + 1 / (t * t), 4.0 * (n + 1)), 1e-12);
    }
  }
}

TEST(HopfSpectrum, SanityAgainstFloor) {
  for (int n = 1; n <= 3; ++n) {
    const double floor = horizontal_floor(make_entry("hopf", n).geometry);
    for (const auto& p : hopf_joint_spectrum(n, 20).pairs()) {
      EXPECT_GE(p.a, 0.0);
      EXPECT_LE(p.a, p.lambda);
      if (!p.is_constant()) EXPECT_GT(p.a, floor);
    }
  }
}

TEST(FdOracle, DiscreteClosedForm) {
  const double expected = 512.0 * (1.0 - std::cos(std::numbers::pi / 8.0));
  EXPECT_NEAR(expected, 38.97, 5e-3);
  EXPECT_NEAR(fd_lambda1({16, 1.0}), expected, 1e-8 * expected);
  EXPECT_NEAR(fd_lambda1({16, 2.0}), expected / 4.0, 1e-8 * expected);
}

TEST(FdOracle, SecondOrderConvergence) {
  for (double t : {1.0, 2.0}) {
    const double target = kFourPiSq * std::min(1.0, 1.0 / (t * t));
    const double e16 = std::abs(fd_lambda1({16, t}) - target);
    const double e32 = std::abs(fd_lambda1({32, t}) - target);
    const double e64 = std::abs(fd_lambda1({64, t}) - target);
    EXPECT_NEAR(std::log2(e16 / e32), 2.0, 0.1);
    EXPECT_NEAR(std::log2(e32 / e64), 2.0, 0.1);
  }
}

TEST(FdOracle, Deterministic) {
  EXPECT_EQ(fd_solve(16, 1.0, 0.3).lambda1, fd_solve(16, 1.0, 0.3).lambda1);
}

TEST(FdOracle, Errors) {
  EXPECT_THROW(fd_solve(15, 1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(fd_solve(2, 1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(fd_solve(16, 0.0, 1.0), std::invalid_argument);
  EXPECT_THROW(fd_lambda1({16, 0.0}), std::invalid_argument);
  FdOptions tight;
  tight.max_outer = 1;
  tight.rel_residual = 1e-300;
  EXPECT_THROW(fd_solve(16, 1.0, 1.0, tight), ConvergenceError);
}
