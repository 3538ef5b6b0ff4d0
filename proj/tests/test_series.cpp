#include <cmath>

#include <gtest/gtest.h>

#include "hypgeom/series.hpp"

using namespace hypgeom;

TEST(TaylorCoeffs, LeadingEntryIsOne) {
  auto s = taylor_2f1<Rational>(ParamTriple(0.5, 0.9, 1.2), 10);
  EXPECT_EQ(s[0], Rational(1));
  EXPECT_EQ(s.depth(), 10);
}

TEST(TaylorCoeffs, LogarithmSeriesExact) {
  auto s = taylor_2f1<Rational>(ParamTriple(1, 1, 2), 30);
  for (int n = 0; n <= 30; ++n) EXPECT_EQ(s[n], Rational(1, n + 1));
}

TEST(TaylorCoeffs, BinomialWhenAEqualsC) {
  // (b)_n / n! for b = 0.7
  auto s = taylor_2f1<double>(ParamTriple(1.3, 0.7, 1.3), 20);
  double ref = 1.0;
  for (int n = 0; n <= 20; ++n) {
    EXPECT_NEAR(s[n], ref, 1e-15 * ref);
    ref *= (0.7 + n) / (n + 1);
  }
}

TEST(TaylorCoeffs, FloatMatchesExact) {
  ParamTriple p(0.37, 1.21, 2.03);
  auto e = taylor_2f1<Rational>(p, 40);
  auto f = taylor_2f1<double>(p, 40);
  for (int n = 0; n <= 40; ++n) {
    EXPECT_LE(std::fabs(f[n] - e[n].get_d()), f.error[n] + 1e-300) << n;
  }
}

TEST(TaylorCoeffs, PoleInDenominator) {
  EXPECT_THROW(taylor_coeffs<double>(0.5, 0.5, -2.0, 5), PoleError);
}

TEST(SeriesArithmetic, DivideInvertsMultiply) {
  ParamTriple p(0.5, 0.9, 1.9), q(1.5, 0.9, 1.9);
  auto x = taylor_2f1<Rational>(p, 25), y = taylor_2f1<Rational>(q, 25);
  auto back = series_divide(series_multiply(x, y), y);
  for (int n = 0; n <= 25; ++n) EXPECT_EQ(back[n], x[n]);
}

TEST(SeriesArithmetic, DivisionByZeroLeadingTerm) {
  CoeffSeries<Rational> num, den;
  num.resize(3);
  den.resize(3);
  num.entries = {1, 1, 1};
  den.entries = {0, 1, 1};
  EXPECT_THROW(series_divide(num, den), DivisionBreakdown);
}

TEST(PreschwarzianSeries, FirstCoefficientIsAlpha) {
  ParamTriple p(0.5, 0.9, 1.9);
  auto s = preschwarzian_series<Rational>(p, 10, true);
  EXPECT_EQ(s[0], Rational(1));
  EXPECT_EQ(s[1], p.exact().alpha());
}

TEST(PreschwarzianSeries, ThirdCoefficientIdentity) {
  // c_3 = 6 a_4 - 9 a_2 a_3 + 4 a_2^3 for f = z + a_2 z^2 + ..., half profile
  ParamTriple p(1, 1, 2);
  auto t = taylor_2f1<Rational>(p, 6);
  Rational a2 = t[1], a3 = t[2], a4 = t[3];
  auto s = preschwarzian_series<Rational>(p, 6, true);
  EXPECT_EQ(s[3], 6 * a4 - 9 * a2 * a3 + 4 * a2 * a2 * a2);
}

TEST(PreschwarzianSeries, LogarithmClosedForm) {
  // f = -log(1-z): 1 + z f''/f' = 1/(1-z), all coefficients 1
  auto s = preschwarzian_series<double>(ParamTriple(1, 1, 2), 30, false);
  for (int n = 0; n <= 30; ++n) EXPECT_NEAR(s[n], 1.0, 1e-12);
  auto e = preschwarzian_series<Rational>(ParamTriple(1, 1, 2), 30, false);
  for (int n = 0; n <= 30; ++n) EXPECT_EQ(e[n], Rational(1));
}

TEST(DeltaTable, ConstantSequence) {
  CoeffSeries<Rational> s;
  s.resize(12);
  for (auto& v : s.entries) v = 1;
  auto t = delta_table(s, 10);
  for (int k = 1; k <= 10; ++k) {
    for (const auto& v : t.rows[k]) EXPECT_EQ(v, Rational(0));
  }
  EXPECT_TRUE(t.witnesses.empty());
}

TEST(DeltaTable, GeometricSequence) {
  Rational q(2, 3);
  CoeffSeries<Rational> s;
  s.resize(16);
  Rational v = 1;
  for (auto& e : s.entries) e = v, v *= q;
  auto t = delta_table(s, 8);
  for (int k = 0; k <= 8; ++k) {
    Rational scale = 1;
    for (int i = 0; i < k; ++i) scale *= (1 - q);
    Rational tn = 1;
    for (std::size_t n = 0; n < t.rows[k].size(); ++n) {
      EXPECT_EQ(t.rows[k][n], tn * scale);
      tn *= q;
    }
  }
  EXPECT_TRUE(t.clean());
}

TEST(DeltaTable, WitnessForLargeAlpha) {
  auto s = preschwarzian_series<Rational>(ParamTriple(1.5, 1.5, 1.5), 10, true);
  auto t = delta_table(s, 10);
  ASSERT_FALSE(t.witnesses.empty());
  EXPECT_EQ(t.witnesses.front().k, 1);
  EXPECT_EQ(t.witnesses.front().n, 0);
  EXPECT_EQ(t.witnesses.front().exact, "-1/2");
}

TEST(DeltaTable, FloatModeSeparatesIndeterminate) {
  CoeffSeries<double> s;
  s.resize(3);
  s.entries = {1.0, 1.0 + 5e-10, 0.5};
  s.error = {0.0, 1e-9, 0.0};
  s.majorant = {1.0, 1.0, 0.5};
  auto t = delta_table(s, 1);
  EXPECT_TRUE(t.witnesses.empty());
  ASSERT_EQ(t.indeterminate.size(), 1u);
  EXPECT_EQ(t.indeterminate[0].n, 0);
}

TEST(DeltaTable, RejectsTooDeep) {
  auto s = taylor_2f1<double>(ParamTriple(1, 1, 2), 5);
  EXPECT_THROW(delta_table(s, 6), DomainError);
}

TEST(NecessaryConditions, LogarithmBoundary) {
  auto n = necessary_conditions(ParamTriple(1, 1, 2));
  EXPECT_EQ(n.alpha_exact, "1/2");
  EXPECT_EQ(n.beta_exact, "2/3");
  EXPECT_TRUE(n.all());
  EXPECT_DOUBLE_EQ(n.beta_slack, 0.0);
}

TEST(NecessaryConditions, AlphaTooLarge) {
  auto n = necessary_conditions(ParamTriple(1.5, 1.5, 1.5));
  EXPECT_FALSE(n.alpha_range);
  EXPECT_FALSE(n.all());
}

TEST(NecessaryConditions, SmallA) { EXPECT_TRUE(necessary_conditions(ParamTriple(0.01, 0.5, 2)).all()); }

TEST(RatioSeries, GOverFIsTotallyMonotone) {
  auto s = ratio_series<Rational>(1.5, 0.9, 1.9, 0.5, 0.9, 1.9, 25);
  EXPECT_EQ(s[0], Rational(1));
  EXPECT_TRUE(delta_table(s, 25).witnesses.empty());
}
