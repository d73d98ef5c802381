#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "polymod/su2.hpp"

using namespace polymod;

namespace {

constexpr double kPi = 3.14159265358979323846;

void expect_quat(const SU2& g, double w, double x, double y, double z, double tol = 1e-12) {
  EXPECT_NEAR(g.w(), w, tol);
  EXPECT_NEAR(g.vec().x, x, tol);
  EXPECT_NEAR(g.vec().y, y, tol);
  EXPECT_NEAR(g.vec().z, z, tol);
}

void expect_vec(const Vec3& v, double x, double y, double z, double tol = 1e-12) {
  EXPECT_NEAR(v.x, x, tol);
  EXPECT_NEAR(v.y, y, tol);
  EXPECT_NEAR(v.z, z, tol);
}

// 3×3 matrix of v ↦ adjoint(g, v), columns are images of the basis.
double adjoint_det(const SU2& g) {
  Vec3 a = adjoint(g, {1, 0, 0}), b = adjoint(g, {0, 1, 0}), c = adjoint(g, {0, 0, 1});
  return dot(a, cross(b, c));
}

}  // namespace

TEST(Exp, Identity) { expect_quat(exp_su2({0, 0, 0}), 1, 0, 0, 0); }

TEST(Exp, QuarterPeriod) {
  SU2 g = exp_su2({0.25, 0, 0});
  expect_quat(g, 0, 1, 0, 0);
  EXPECT_NEAR(g.trace(), 0.0, 1e-12);
}

TEST(Exp, TraceIsTwiceCosine) {
  EXPECT_NEAR(exp_su2({0.1, 0, 0}).trace(), 1.618034, 1e-6);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  for (int i = 0; i < 100; ++i) {
    Vec3 v{u(rng), u(rng), u(rng)};
    EXPECT_NEAR(exp_su2(v).trace(), 2 * std::cos(2 * kPi * norm(v)), 1e-12);
  }
}

TEST(Exp, HalfPeriodIsMinusIdentity) { EXPECT_NEAR(exp_su2({0, 0.5, 0}).trace(), -2.0, 1e-12); }

TEST(Exp, HomomorphismAlongAxis) {
  Vec3 axis_dir = normalized(Vec3{1, 2, -2});
  for (double a : {0.05, 0.13, 0.3})
    for (double b : {0.02, 0.11, 0.4}) {
      SU2 lhs = exp_su2((a + b) * axis_dir);
      SU2 rhs = exp_su2(a * axis_dir) * exp_su2(b * axis_dir);
      EXPECT_NEAR(distance(lhs, rhs), 0.0, 1e-12);
    }
}

TEST(Log, Examples) {
  expect_vec(log_su2(SU2::identity()), 0, 0, 0);
  expect_vec(log_su2(SU2(0, 1, 0, 0)), 0.25, 0, 0);
  expect_vec(log_su2(exp_su2({0.1, 0.2, 0.05})), 0.1, 0.2, 0.05);
}

TEST(Log, RoundTripAwayFromMinusIdentity) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 1000; ++i) {
    SU2 g = random_su2(rng);
    if (g.trace() <= -2 + 1e-6) continue;
    EXPECT_LT(distance(exp_su2(log_su2(g)), g), 1e-12);
    EXPECT_LE(norm(log_su2(g)), 0.5 + 1e-15);
    EXPECT_NEAR(norm(log_su2(g)), angle(g), 1e-12);
  }
}

TEST(Log, MinusIdentityIsDegenerate) {
  try {
    log_su2(SU2(-1, 0, 0, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateAxis);
  }
}

TEST(Angle, Examples) {
  EXPECT_EQ(angle(SU2::identity()), 0.0);
  const double c = std::cos(2 * kPi * 0.45), s = std::sin(2 * kPi * 0.45);
  EXPECT_NEAR(angle(SU2(c, s, 0, 0)), 0.45, 1e-12);
  for (double a : {0.0, 0.01, 0.2, 0.37, 0.5}) EXPECT_NEAR(angle(exp_su2(a * normalized(Vec3{1, 1, 1}))), a, 1e-12);
}

TEST(Angle, InverseAndConjugationInvariant) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    SU2 g = random_su2(rng), h = random_su2(rng);
    EXPECT_NEAR(angle(g.inverse()), angle(g), 1e-12);
    EXPECT_NEAR(angle(conjugate(g, h)), angle(g), 1e-12);
  }
}

TEST(SampleClass, ExactAngle) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    EXPECT_NEAR(angle(sample_class(0.1, rng)), 0.1, 1e-12);
    EXPECT_NEAR(angle(sample_class(0.3, rng)), 0.3, 1e-12);
    expect_quat(sample_class(0.0, rng), 1, 0, 0, 0, 0.0);
  }
}

TEST(SampleClass, AxisIsIsotropic) {
  // Mean axis of a uniform sphere sample is 0; mean trace at α = 1/4 is 0.
  std::mt19937_64 rng(5);
  Vec3 mean{};
  double trace = 0;
  const int count = 10000;
  for (int i = 0; i < count; ++i) {
    SU2 g = sample_class(0.25, rng);
    mean += axis(g);
    trace += g.trace();
  }
  EXPECT_LT(norm((1.0 / count) * mean), 0.05);
  EXPECT_NEAR(trace / count, 0.0, 0.05);
}

TEST(SampleClass, RejectsOutOfAlcove) {
  std::mt19937_64 rng(6);
  EXPECT_THROW(sample_class(0.6, rng), Error);
  EXPECT_THROW(sample_class(-0.1, rng), Error);
}

TEST(Adjoint, Examples) {
  std::mt19937_64 rng(7);
  SU2 g = random_su2(rng);
  EXPECT_LT(distance(conjugate(g, SU2::identity()), g), 1e-15);
  expect_vec(adjoint(exp_su2({0.25, 0, 0}), {0, 1, 0}), 0, -1, 0);
}

TEST(Adjoint, OrientationPreservingIsometry) {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> nd;
  for (int i = 0; i < 200; ++i) {
    SU2 h = random_su2(rng);
    Vec3 v{nd(rng), nd(rng), nd(rng)};
    EXPECT_NEAR(norm(adjoint(h, v)), norm(v), 1e-12);
    EXPECT_NEAR(adjoint_det(h), 1.0, 1e-12);
  }
}

TEST(Adjoint, RotatesByTwiceTheAngle) {
  // Ad_{exp(a n)} rotates by 4πa about n.
  Vec3 n = normalized(Vec3{0.3, -0.4, 1.2});
  Vec3 v{0.7, 0.1, -0.2};
  for (double a : {0.03, 0.17, 0.31}) {
    Vec3 expected = rotate(v, n, 4 * kPi * a);
    Vec3 got = adjoint(exp_su2(a * n), v);
    EXPECT_LT(distance(got, expected), 1e-12);
  }
}

TEST(SU2, StaysUnitAfterManyProducts) {
  std::mt19937_64 rng(9);
  SU2 g;
  for (int i = 0; i < 10000; ++i) g *= random_su2(rng);
  EXPECT_NEAR(g.w() * g.w() + dot(g.vec(), g.vec()), 1.0, 1e-12);
}
