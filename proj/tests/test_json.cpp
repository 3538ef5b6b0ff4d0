#include <gtest/gtest.h>

#include "hypgeom/hypgeom.hpp"
#include "hypgeom/suite.hpp"

using namespace hypgeom;

namespace {
template <class T>
void expect_round_trip(const T& value) {
  json first = value;
  T back = first.get<T>();
  json second = back;
  EXPECT_EQ(first.dump(), second.dump());
}
}  // namespace

TEST(Json, ComplexAsPair) {
  json j = Complex(1.5, -2.0);
  EXPECT_EQ(j.dump(), "[1.5,-2.0]");
  EXPECT_EQ(j.get<Complex>(), Complex(1.5, -2.0));
}

TEST(Json, ParamTriple) {
  json j = ParamTriple(0.5, 0.8, 1.9);
  EXPECT_EQ(j.get<ParamTriple>(), ParamTriple(0.5, 0.8, 1.9));
  EXPECT_NEAR(j["delta"].get<double>(), -0.6, 1e-15);
}

TEST(Json, CertReportRoundTrip) {
  CertOptions opt;
  opt.grid.n_radius = opt.grid.n_angle = 12;
  opt.grid.n_real = 40;
  expect_round_trip(certify_universal_convexity(ParamTriple(0.5, 0.8, 1.9), opt));
  expect_round_trip(certify_universal_convexity(ParamTriple(1.5, 1.5, 1.5), opt));
}

TEST(Json, GeometryReportsRoundTrip) {
  ParamTriple p(0.9, 1.2, 2.0);
  KappaOptions k;
  k.n_theta = 256;
  expect_round_trip(kappa_numeric(p, k));
  expect_round_trip(boundary_curve(p, 32));
  expect_round_trip(check_theorem1(ParamTriple(0.5, 0.9, 1.0), 200, 2));
  expect_round_trip(check_sector_theorem(p, 200, 2));
  expect_round_trip(sigma_series(ParamTriple(0.5, 1.2, 1.0), 40));
}

TEST(Json, ProbesRoundTrip) {
  ParamTriple p(0.5, 0.9, 1.2);
  expect_round_trip(phi_probe(p));
  expect_round_trip(psi_probe(p).second);
  expect_round_trip(hg_ratio_limit_probe(ParamTriple(0.5, 0.9, 2.4)));
  expect_round_trip(connection_identity_check(p));
}

TEST(Json, ExactSeriesKeepsRationals) {
  auto s = taylor_2f1<Rational>(ParamTriple(1, 1, 2), 4);
  json j = s;
  EXPECT_EQ(j["entries"][3], "1/4");
  EXPECT_EQ(j["mode"], "exact");
  auto back = j.get<CoeffSeries<Rational>>();
  EXPECT_EQ(back[4], Rational(1, 5));
}

TEST(Json, QuickSuiteIsDeterministic) {
  SuiteOptions opt;
  opt.quick = true;
  opt.seed = 99;
  std::string a = suite_json(run_suite(opt, {}, 4), false).dump();
  std::string b = suite_json(run_suite(opt, {}, 4), false).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.find("seconds"), std::string::npos);
}
