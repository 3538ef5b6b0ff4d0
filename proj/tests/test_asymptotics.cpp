#include <cmath>

#include <gtest/gtest.h>

#include "hypgeom/asymptotics.hpp"

using namespace hypgeom;

TEST(Phi, ExactWhenBEqualsC) {
  auto pr = phi_probe(ParamTriple(0.5, 1.0, 1.0), {10.0});
  EXPECT_NEAR(pr.values[0], 1.0 / 11.0, 1e-14);
  EXPECT_LE(phi_identity_residual(ParamTriple(0.5, 1.0, 1.0), {1.0, 1e3, 1e6}), 1e-12);
}

TEST(Phi, PowerRate) {
  auto pr = phi_probe(ParamTriple(0.5, 0.9, 1.2));
  EXPECT_TRUE(pr.converged);
  EXPECT_LE(pr.values.back(), 1e-2);
  EXPECT_EQ(pr.rate, Rate::x_pow_a_minus_b);
  ASSERT_TRUE(pr.fitted_slope.has_value());
  EXPECT_NEAR(*pr.fitted_slope, -0.4, 0.2 * 0.4);
  for (std::size_t i = 1; i < pr.values.size(); ++i) EXPECT_LT(pr.values[i], pr.values[i - 1]);
}

TEST(Phi, LogRateHalving) {
  auto pr = phi_probe(ParamTriple(0.7, 0.7, 1.5));
  EXPECT_EQ(pr.rate, Rate::inv_log_x);
  double ratio = pr.values.back() / pr.values[2];  // x = 1e6 over x = 1e3
  EXPECT_NEAR(ratio, 0.5, 0.25 * 0.5);
}

TEST(Psi, PowerRateAndGrowth) {
  auto [psi, xpsi] = psi_probe(ParamTriple(0.5, 0.9, 1.2));
  EXPECT_LE(psi.values.back(), 1e-1);
  EXPECT_GE(xpsi.values.back(), 1e2);
  for (std::size_t i = 1; i < xpsi.values.size(); ++i) EXPECT_GT(xpsi.values[i], xpsi.values[i - 1]);
  EXPECT_THROW(psi_probe(ParamTriple(0.5, 1.2, 1.2)), HypothesisError);
}

TEST(Psi, LogRateCase) {
  auto [psi, xpsi] = psi_probe(ParamTriple(0.5, 1.5, 2.0));
  EXPECT_EQ(psi.rate, Rate::inv_log_x);
  EXPECT_NEAR(psi.values.back() / psi.values[2], 0.5, 0.25 * 0.5);
}

TEST(XW, LimitCOverB) {
  ParamTriple p(0.5, 0.9, 1.2);
  auto pr = xw_probe(p);
  EXPECT_NEAR(pr.values.back(), 1.2 / 0.9, 2e-2 * 1.2 / 0.9);
}

TEST(Preschwarz, LimitMinusA) {
  auto pr = preschwarz_limit_probe(ParamTriple(0.5, 0.8, 1.0));
  EXPECT_NEAR(pr.claimed_limit, -0.5, 0.0);
  EXPECT_NEAR(pr.values.back(), -0.5, 1e-2 * 1.5);
}

TEST(Preschwarz, LogarithmClosedForm) {
  // f = -log(1-z): x f''/f' = x/(1-x)
  auto pr = preschwarz_limit_probe(ParamTriple(1, 1, 2), {10.0, 1e3});
  EXPECT_NEAR(pr.values[0], -10.0 / 11.0, 1e-12);
  EXPECT_NEAR(pr.values[1], -1e3 / 1001.0, 1e-12);
}

TEST(Preschwarz, EqualParametersClosedForm) {
  // f = z (1-z)^(-t): x f''/f' at -x equals -x t (2 + (t-1)x ... ) from direct differentiation
  double t = 0.6;
  auto pr = preschwarz_limit_probe(ParamTriple(t, t, t), {1e2, 1e6});
  for (std::size_t i = 0; i < pr.xs.size(); ++i) {
    double z = -pr.xs[i];
    double f1 = std::pow(1 - z, -t - 1) * (1 + (t - 1) * z);
    double f2 = t * std::pow(1 - z, -t - 2) * (2 + (t - 1) * z);
    EXPECT_NEAR(pr.values[i], z * f2 / f1, 1e-10);
  }
  EXPECT_NEAR(pr.values.back(), -t, 1e-2 * (1 + t));
}

TEST(HGRatio, BranchLimits) {
  EXPECT_DOUBLE_EQ(hg_ratio_limit(ParamTriple(0.5, 0.9, 3.0)), 2.0);
  EXPECT_DOUBLE_EQ(hg_ratio_limit(ParamTriple(0.5, 0.9, 1.2)), 1.2 / 0.9);
  EXPECT_NEAR(hg_ratio_limit(ParamTriple(0.5, 0.9, 2.4)), 8.0 / 3.0, 1e-15);
  auto pr = hg_ratio_limit_probe(ParamTriple(0.5, 0.9, 3.0));
  EXPECT_TRUE(pr.converged);
  EXPECT_NEAR(pr.values.back(), 2.0, 2e-2 * 2.0);
}

TEST(Connection, IdentityResiduals) {
  ParamTriple p(0.5, 0.9, 1.0);
  EXPECT_LE(connection_identity_check(p, {Complex(0.5, 0.0)}).max_residual, 1e-10);
  EXPECT_LE(connection_identity_check(p, {Complex(0.3, 0.4)}).max_residual, 1e-9);
  EXPECT_LE(connection_identity_check(p).max_residual, 1e-8);
}

TEST(Connection, IntegerExcessUnsupported) {
  EXPECT_THROW(connection_identity_check(ParamTriple(0.5, 1.5, 1.0)), UnsupportedParams);
  EXPECT_THROW(connection_identity_check(ParamTriple(0.5, 0.9, 1.0), {Complex(-1.0, 0.0)}), DomainError);
}
