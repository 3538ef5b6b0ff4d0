#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "hypgeom/gamma.hpp"

using namespace hypgeom;

TEST(Gamma, SmallValues) {
  EXPECT_DOUBLE_EQ(gamma_real(1.0), 1.0);
  EXPECT_NEAR(gamma_real(0.5), std::sqrt(std::numbers::pi), 1e-15);
  EXPECT_NEAR(gamma_real(5.0), 24.0, 1e-12);
}

TEST(Gamma, ReflectionBelowZero) {
  // mpmath, 40 digits
  EXPECT_NEAR(gamma_real(-0.1), -10.686287021193193549, 1e-13);
  EXPECT_NEAR(gamma_real(-1.5), 4.0 * std::sqrt(std::numbers::pi) / 3.0, 1e-14);
}

TEST(Gamma, AgreesWithStdTgamma) {
  for (double x = -7.95; x < 40.0; x += 0.37) {
    double ref = std::tgamma(x);
    EXPECT_NEAR(gamma_real(x), ref, 1e-13 * std::fabs(ref)) << "x = " << x;
  }
}

TEST(Gamma, PolesAndOverflow) {
  EXPECT_THROW(gamma_real(0.0), PoleError);
  EXPECT_THROW(gamma_real(-3.0), PoleError);
  EXPECT_THROW(gamma_real(180.0), OverflowError);
  EXPECT_EQ(rgamma(-2.0), 0.0);
  EXPECT_NEAR(rgamma(3.0), 0.5, 1e-15);
}
