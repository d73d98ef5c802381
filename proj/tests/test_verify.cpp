#include <gtest/gtest.h>

#include <cmath>

#include "polymod/verify.hpp"

using namespace polymod;

namespace {
Rational q(long a, long b = 1) { return make_rational(a, b); }
WeightVector mixed6() { return WeightVector({q(1, 7), q(1, 8), q(1, 6), q(1, 9), q(1, 5), q(1, 10)}); }
}  // namespace

TEST(Slope, PowerLaws) {
  std::vector<double> x{0.1, 0.05, 0.025};
  std::vector<double> y;
  for (double t : x) y.push_back(3 * t * t * t);
  EXPECT_NEAR(loglog_slope(x, y), 3.0, 1e-12);
  EXPECT_NEAR(loglog_slope({1, 2}, {5, 5}), 0.0, 1e-15);
}

TEST(Engine, StreamsAreDistinctAndRepeatable) {
  auto a = make_engine(42, 1), b = make_engine(42, 1), c = make_engine(42, 2), d = make_engine(43, 1);
  auto x = a();
  EXPECT_EQ(x, b());
  EXPECT_NE(x, c());
  EXPECT_NE(x, d());
}

TEST(Suites, SixPointPasses) {
  VerifyConfig cfg;
  cfg.samples = 100;
  auto report = run_verification(mixed6(), caterpillar(6), cfg);
  ASSERT_EQ(report.suites.size(), 3u);
  for (const auto& s : report.suites) {
    EXPECT_FALSE(s.skipped) << s.name;
    EXPECT_TRUE(s.passed) << format_suite(s);
    EXPECT_GT(s.checks, 0u);
  }
  EXPECT_EQ(report.suites[0].checks, 300u);  // three pairs per polygon
  EXPECT_TRUE(report.passed());
}

TEST(Suites, DeterministicForSeed) {
  VerifyConfig cfg;
  cfg.samples = 50;
  auto a = run_verification(mixed6(), caterpillar(6), cfg);
  auto b = run_verification(mixed6(), caterpillar(6), cfg);
  for (std::size_t i = 0; i < a.suites.size(); ++i) EXPECT_EQ(a.suites[i].measured, b.suites[i].measured);
  cfg.seed = 7;
  auto c = run_verification(mixed6(), caterpillar(6), cfg);
  EXPECT_NE(a.suites[2].measured, c.suites[2].measured);
}

TEST(Suites, ZeroToleranceFails) {
  VerifyConfig cfg;
  cfg.samples = 20;
  cfg.tol_goldman = 0;
  auto report = run_verification(mixed6(), caterpillar(6), cfg);
  EXPECT_FALSE(report.passed());
  EXPECT_NE(format_suite(report.suites[2]).find("FAIL"), std::string::npos);
}

TEST(Suites, LargeWeightsSkipIdentification) {
  VerifyConfig cfg;
  cfg.samples = 50;
  auto alpha = WeightVector(std::vector<Rational>(5, q(1, 5)));
  auto report = run_verification(alpha, caterpillar(5), cfg);
  EXPECT_TRUE(report.suites[2].skipped);
  EXPECT_TRUE(report.passed());
  EXPECT_NE(format_suite(report.suites[2]).find("SKIP"), std::string::npos);
}

TEST(Suites, FourGonHasNoCommutingPairs) {
  VerifyConfig cfg;
  cfg.samples = 10;
  auto r = commutation_suite(WeightVector(std::vector<Rational>(4, q(1, 5))), caterpillar(4), cfg);
  EXPECT_EQ(r.checks, 0u);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.note, "tree has a single diagonal");
}
