#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cvspec/model.hpp"
#include "cvspec/oracle.hpp"
#include "cvspec/rational.hpp"

using namespace cvspec;

namespace {

constexpr double kPi = std::numbers::pi;

SubmersionGeometry hopf3() {
  return SubmersionGeometry::validated(
      {.name = "S3", .n = 3, .p = 2, .c_tilde = 2.0, .c = 0.0, .beta1 = 8.0,
       .a_norm_sq = 2.0, .s_base = 8.0, .s_fiber = 0.0, .vol_m = 2 * kPi * kPi,
       .einstein = true});
}

}  // namespace

TEST(Geometry, ValidatedAcceptsHopf) {
  const auto g = hopf3();
  EXPECT_TRUE(g.satisfies_main_hypotheses());
  EXPECT_EQ(g.fiber_dim(), 1);
  EXPECT_DOUBLE_EQ(*g.base_scalar(), 8.0);
}

TEST(Geometry, CodimensionOneForcesFlatFiber) {
  const auto g = SubmersionGeometry::validated({.n = 3, .p = 2, .c_tilde = 2.0, .c = 0.7});
  EXPECT_EQ(g.c, 0.0);
}

TEST(Geometry, RejectsStructuralViolations) {
  EXPECT_THROW(SubmersionGeometry::validated({.n = 1, .p = 0}), std::invalid_argument);
  EXPECT_THROW(SubmersionGeometry::validated({.n = 4, .p = 4}), std::invalid_argument);
  EXPECT_THROW(SubmersionGeometry::validated({.n = 4, .p = 0}), std::invalid_argument);
  EXPECT_THROW(SubmersionGeometry::validated({.n = 5, .p = 2, .c_tilde = 1.0, .c = -1.0}),
               std::invalid_argument);
}

TEST(Geometry, RejectsInconsistentEinsteinData) {
  auto g = hopf3();
  g.s_base = 9.0;
  EXPECT_THROW(SubmersionGeometry::validated(g), std::invalid_argument);
}

TEST(Geometry, MainHypotheses) {
  EXPECT_FALSE(SubmersionGeometry::validated({.n = 2, .p = 1}).satisfies_main_hypotheses());
  EXPECT_FALSE(SubmersionGeometry::validated({.n = 6, .p = 4, .c_tilde = 2.0, .c = 2.0})
                   .satisfies_main_hypotheses());
  EXPECT_THROW(require_main_hypotheses(SubmersionGeometry::validated({.n = 2, .p = 1})),
               std::invalid_argument);
  EXPECT_NO_THROW(require_main_hypotheses(hopf3()));
}

TEST(Geometry, BaseScalarFallsBackToEinsteinIdentity) {
  auto g = hopf3();
  g.s_base.reset();
  EXPECT_DOUBLE_EQ(*g.base_scalar(), 8.0);
  g.a_norm_sq.reset();
  EXPECT_FALSE(g.base_scalar().has_value());
}

TEST(VariationEigenvalue, Examples) {
  EXPECT_DOUBLE_EQ(variation_eigenvalue({3, 2}, 1.0), 3.0);
  EXPECT_DOUBLE_EQ(variation_eigenvalue({3, 2}, 2.0), 2.25);
  EXPECT_DOUBLE_EQ(variation_eigenvalue({8, 8}, 5.0), 8.0);
}

TEST(VariationEigenvalue, Errors) {
  EXPECT_THROW(variation_eigenvalue({3, 2}, 0.0), std::invalid_argument);
  EXPECT_THROW(variation_eigenvalue({3, 2}, -1.0), std::invalid_argument);
  EXPECT_THROW(variation_eigenvalue({2, 3}, 1.0), std::invalid_argument);
}

TEST(JointSpectrum, SortsAndMergesDuplicates) {
  const JointSpectrum s({{8, 8, 1}, {3, 2, 2}, {3, 2, 2}, {0, 0, 1}, {8, 4, std::nullopt}}, 8);
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(s.pairs()[0], (JointEigenpair{0, 0, 1}));
  EXPECT_EQ(s.pairs()[1], (JointEigenpair{3, 2, 4}));
  EXPECT_EQ(s.pairs()[2].a, 4.0);
  EXPECT_EQ(s.pairs()[3].a, 8.0);
}

TEST(JointSpectrum, UnknownMultiplicityStaysUnknown) {
  const JointSpectrum s({{3, 2, 1}, {3, 2, std::nullopt}}, 3);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_FALSE(s.pairs()[0].mult.has_value());
}

TEST(Lambda1OfT, HopfS3) {
  const auto spec = hopf_joint_spectrum(1, 20);
  EXPECT_DOUBLE_EQ(lambda1_of_t(spec, 1.0), 3.0);
  EXPECT_NEAR(lambda1_of_t(spec, 10.0), 2.01, 1e-14);
  EXPECT_DOUBLE_EQ(lambda1_of_t(spec, 0.2), 8.0);
}

TEST(Lambda1OfT, CrossoverOfHopfBranches) {
  // 2n + t^-2 meets 4(n+1) at t^-2 = 2n + 4.
  for (int n = 1; n <= 3; ++n) {
    const auto spec = hopf_joint_spectrum(n, 30);
    const double tc = 1.0 / std::sqrt(2.0 * n + 4.0);
    EXPECT_NEAR(lambda1_of_t(spec, tc), 4.0 * (n + 1), 1e-12);
    EXPECT_EQ(lambda1_achievers(spec, tc).size(), 2u);
    EXPECT_EQ(lambda1_achievers(spec, 1.1 * tc).size(), 1u);
  }
}

TEST(Lambda1OfT, Errors) {
  EXPECT_THROW(lambda1_of_t(JointSpectrum({}, 10), 1.0), std::invalid_argument);
  EXPECT_THROW(lambda1_of_t(JointSpectrum({{0, 0}}, 10), 1.0), std::invalid_argument);
  const JointSpectrum small({{0, 0}, {3, 2}, {8, 4}, {8, 8}}, 8);
  EXPECT_DOUBLE_EQ(lambda1_of_t(small, 1.0), 3.0);
  EXPECT_THROW(lambda1_of_t(small, 10.0), InsufficientCutoff);
  EXPECT_THROW(lambda1_of_t(small, 0.0), std::invalid_argument);
}

TEST(Volume, PowerLaw) {
  EXPECT_DOUBLE_EQ(volume_of_t(1.0, 3, 2, 4.0), 4.0);
  EXPECT_DOUBLE_EQ(volume_of_t(2 * kPi * kPi, 3, 2, 1.0), 2 * kPi * kPi);
  EXPECT_DOUBLE_EQ(volume_of_t(1.0, 7, 4, 2.0), 8.0);
  EXPECT_THROW(volume_of_t(0.0, 3, 2, 1.0), std::invalid_argument);
  EXPECT_THROW(volume_of_t(1.0, 3, 2, -1.0), std::invalid_argument);
}

TEST(ScaleInvariant, Examples) {
  const double t = 4.0;
  const double lam = 4 * kPi * kPi / (t * t);
  EXPECT_NEAR(scale_invariant_lambda1(lam, volume_of_t(1.0, 2, 1, t), 2), kPi * kPi, 1e-12);
  EXPECT_DOUBLE_EQ(scale_invariant_lambda1(3.0, 1.0, 3), 3.0);
  const double vol = volume_of_t(2 * kPi * kPi, 3, 2, 10.0);
  EXPECT_NEAR(scale_invariant_lambda1(2.01, vol, 3),
              2.01 * std::pow(2 * kPi * kPi * 10.0, 2.0 / 3.0), 1e-12);
  EXPECT_THROW(scale_invariant_lambda1(0.0, 1.0, 3), std::invalid_argument);
  EXPECT_THROW(scale_invariant_lambda1(1.0, -1.0, 3), std::invalid_argument);
}

TEST(MinBranch, Basic) {
  const std::vector<AffineBranch> b{{2, 1}, {8, 0}};
  EXPECT_DOUBLE_EQ(min_branch(b, 1.0), 3.0);
  EXPECT_DOUBLE_EQ(min_branch(b, 0.1), 8.0);
  EXPECT_THROW(min_branch({}, 1.0), std::invalid_argument);
}

TEST(Rational, Arithmetic) {
  const Rational a(37, 7);
  EXPECT_EQ(a + Rational(4), Rational(65, 7));
  EXPECT_EQ(Rational(6, -4).str(), "-3/2");
  EXPECT_EQ((Rational(1, 3) * Rational(3)).str(), "1");
  EXPECT_TRUE(Rational(1, 3) < Rational(1, 2));
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_EQ(Rational::from_integral(4.0), Rational(4));
  EXPECT_FALSE(Rational::from_integral(0.5).has_value());
}
