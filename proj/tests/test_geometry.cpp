#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "hypgeom/geometry.hpp"

using namespace hypgeom;

TEST(Sector, PositiveAxisIsInside) {
  for (double d : {0.1, 0.5, 0.9}) {
    auto s = SectorSpec::make(SectorKind::S, d);
    EXPECT_TRUE(sector_contains(s, 3.0).inside);
    EXPECT_FALSE(sector_contains(s, -3.0).inside);
  }
}

TEST(Sector, OriginInFattenedSector) {
  auto s = SectorSpec::make(SectorKind::S_eps, 0.4, 0.5);
  auto m = sector_contains(s, 0.0);
  EXPECT_TRUE(m.inside);
  EXPECT_EQ(m.distance, 0.0);
}

TEST(Sector, DistanceMatchesBruteForce) {
  double d = 0.4, phi = std::numbers::pi * d / 2;
  for (Complex z : {Complex(-10.0, 0.0), Complex(-2.0, 3.0), Complex(1.0, 5.0), Complex(0.5, -4.0)}) {
    double best = std::abs(z);
    for (int i = 0; i <= 200000; ++i) {
      double r = 20.0 * i / 200000.0;
      for (double sgn : {1.0, -1.0}) {
        best = std::min(best, std::abs(z - std::polar(r, sgn * phi)));
      }
    }
    EXPECT_NEAR(sector_distance(z, phi), best, 1e-3) << z;
  }
  auto s = SectorSpec::make(SectorKind::S_eps, d, 5.0);
  EXPECT_FALSE(sector_contains(s, -10.0).inside);
}

TEST(Sector, DoubleSector) {
  auto s = SectorSpec::make(SectorKind::S_star, 0.4);
  EXPECT_TRUE(sector_contains(s, -2.0).inside);
  EXPECT_FALSE(sector_contains(s, Complex(0.0, 1.0)).inside);
  EXPECT_THROW(SectorSpec::make(SectorKind::S, 1.0), DomainError);
}

TEST(Constants, EpsilonAndB) {
  EXPECT_NEAR(epsilon_of(ParamTriple(0.5, 0.9, 1.0)), 1.9958313718063567053, 1e-12);
  EXPECT_DOUBLE_EQ(epsilon_of(ParamTriple(0.4, 1.0, 1.0)), std::pow(2.0, 0.6));
  auto k = asymptotic_constants(ParamTriple(0.9, 1.2, 2.0));
  EXPECT_NEAR(k.B, -9.6482263023210357294, 1e-11);
  EXPECT_NEAR(k.A, 9.695971616706296241, 1e-11);
  EXPECT_THROW(epsilon_of(ParamTriple(0.5, 1.5, 1.0)), DomainError);
}

TEST(DiskSamples, DeterministicAndInside) {
  auto u = disk_samples(1000, 3, 100), v = disk_samples(1000, 3, 100), w = disk_samples(1000, 4, 100);
  ASSERT_EQ(u.size(), 1000u);
  EXPECT_EQ(u, v);
  EXPECT_NE(u, w);
  int ring = 0;
  for (Complex z : u) {
    EXPECT_LT(std::abs(z), 1.0);
    if (std::fabs(std::abs(z) - (1.0 - 1e-4)) < 1e-12) ++ring;
  }
  EXPECT_EQ(ring, 100);
}

TEST(Theorem1, SectorContainment) {
  auto r = check_theorem1(ParamTriple(0.5, 0.9, 1.0), 2000, 1);
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.violations_f.empty());
  EXPECT_TRUE(r.violations_g.empty());
  EXPECT_TRUE(r.main_term_in_sector);
  EXPECT_LE(r.max_remainder, r.eps + 1e-8);
}

TEST(Kappa, ClosedFormExamples) {
  EXPECT_NEAR(kappa_closed_form(ParamTriple(0.9, 1.2, 2.0)), 0.25, 1e-12);
  EXPECT_NEAR(kappa_closed_form(ParamTriple(0.5, 1.2, 1.69)), -40.195, 1e-9);
  EXPECT_THROW(kappa_closed_form(ParamTriple(0.5, 0.9, 1.2)), HypothesisError);
}

TEST(Kappa, NumericMatchesClosedForm) {
  KappaOptions opt;
  opt.n_theta = 1024;
  auto r = kappa_numeric(ParamTriple(0.9, 1.2, 2.0), opt);
  ASSERT_TRUE(r.kappa_closed.has_value());
  EXPECT_NEAR(r.kappa_numeric, 0.25, 1e-3);
  EXPECT_TRUE(r.consistent);
}

TEST(Kappa, LogarithmHasKappaOneHalf) {
  KappaOptions opt;
  opt.n_theta = 1024;
  auto r = kappa_numeric(ParamTriple(1, 1, 2), opt);
  EXPECT_NEAR(r.kappa_numeric, 0.5, 1e-3);
  EXPECT_FALSE(r.kappa_closed.has_value());
}

TEST(Kappa, EqualParametersSmoke) {
  KappaOptions opt;
  opt.n_theta = 512;
  auto r = kappa_numeric(ParamTriple(0.4, 0.4, 0.4), opt);
  EXPECT_LE(r.kappa_numeric, 1.0);
}

TEST(BoundaryCurve, Decomposition) {
  ParamTriple p(0.9, 1.2, 2.0);
  auto s = boundary_curve(p, 256);
  EXPECT_LE(s.decomposition_residual, 1e-10);
  EXPECT_LE(s.max_abs_gamma2, std::fabs(s.B) + 1e-6);
  // theta = pi gives f(-1), real
  EXPECT_NEAR(s.theta.back(), std::numbers::pi, 1e-15);
  EXPECT_NEAR(s.gamma.back().imag(), 0.0, 1e-12);
  EXPECT_NEAR(s.gamma.back().real(), -hyp2f1(p, -1.0).real(), 1e-12);
  // gamma2 -> B at the corner
  EXPECT_NEAR(s.gamma2.front().real(), s.B, 1e-4);
}

TEST(BoundaryCurve, AsymptoticLine) {
  ParamTriple p(0.9, 1.2, 2.0);
  auto s = boundary_curve(p, 256, 1e-7);
  double t = std::tan(std::numbers::pi * p.delta() / 2);
  Complex g = s.gamma.front();
  EXPECT_NEAR(g.imag() / (g.real() - s.B), t, 1e-3);
  EXPECT_NEAR(g.imag() - t * g.real(), -s.B * t, 1e-3);
}

TEST(SectorTheorem, ApexSector) {
  auto r = check_sector_theorem(ParamTriple(0.9, 1.2, 2.0), 2000, 1);
  EXPECT_TRUE(r.apex_negative);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_LT(r.residual_small, r.residual_ref);
  EXPECT_TRUE(r.pass);
  EXPECT_GT(r.min_boundary_distance, 0.0);
}

TEST(Sigma, SignsAndRatioIdentity) {
  auto up = sigma_series(ParamTriple(0.5, 1.2, 1.0), 200);
  EXPECT_EQ(up.expected_sign, 1);
  EXPECT_TRUE(up.signs_match);
  EXPECT_TRUE(up.ratio_identity);
  auto down = sigma_series(ParamTriple(0.5, 0.9, 1.0), 200);
  EXPECT_EQ(down.expected_sign, -1);
  EXPECT_TRUE(down.signs_match);
  EXPECT_TRUE(down.q_monotone);
  // partial sums trend to B < 0
  EXPECT_LT(down.partial_errors.back(), down.partial_errors.front());
}
