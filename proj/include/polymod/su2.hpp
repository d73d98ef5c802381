#pragma once

// SU(2) as unit quaternions and su(2) as R^3, in alcove units: a Lie
// algebra vector v exponentiates to the class with alcove value |v|, so
// exp(v) = (cos 2π|v|, sin 2π|v| · v/|v|).

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "polymod/error.hpp"

namespace polymod {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Vec3 {
  double x = 0, y = 0, z = 0;

  constexpr Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  constexpr Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
  constexpr Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }
  friend constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
  friend constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
  friend constexpr Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
  friend constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }
  friend constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

/// Lie algebra element; |v| is measured in alcove units.
using Su2Vec = Vec3;

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

/// Unit vector, or an error if |v| is below tol.
inline Vec3 normalized(const Vec3& v, double tol = 1e-300) {
  double r = norm(v);
  if (r <= tol) throw Error(ErrorKind::DegenerateAxis, "cannot normalize a zero vector");
  return (1.0 / r) * v;
}

/// Rodrigues rotation of v by `angle` radians about unit axis k.
inline Vec3 rotate(const Vec3& v, const Vec3& k, double angle) {
  double c = std::cos(angle), s = std::sin(angle);
  return c * v + s * cross(k, v) + (dot(k, v) * (1.0 - c)) * k;
}

/// Some unit vector orthogonal to unit vector a.
inline Vec3 any_orthogonal(const Vec3& a) {
  Vec3 trial = std::abs(a.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  return normalized(trial - dot(trial, a) * a);
}

/// Unit quaternion w + x i + y j + z k.
class SU2 {
 public:
  constexpr SU2() = default;
  SU2(double w, double x, double y, double z) : w_(w), v_{x, y, z} { renormalize(); }
  SU2(double w, const Vec3& v) : w_(w), v_(v) { renormalize(); }

  static constexpr SU2 identity() { return SU2(); }

  double w() const { return w_; }
  const Vec3& vec() const { return v_; }
  double trace() const { return 2.0 * w_; }

  SU2 inverse() const { return SU2(w_, -v_); }

  friend SU2 operator*(const SU2& a, const SU2& b) {
    return SU2(a.w_ * b.w_ - dot(a.v_, b.v_), a.w_ * b.v_ + b.w_ * a.v_ + cross(a.v_, b.v_));
  }
  SU2& operator*=(const SU2& b) { return *this = *this * b; }

  /// Euclidean distance in R^4.
  friend double distance(const SU2& a, const SU2& b) {
    double dw = a.w_ - b.w_;
    Vec3 dv = a.v_ - b.v_;
    return std::sqrt(dw * dw + dot(dv, dv));
  }

 private:
  void renormalize() {
    double r = std::sqrt(w_ * w_ + dot(v_, v_));
    if (r == 0.0) throw Error(ErrorKind::InvalidArgument, "zero quaternion");
    w_ /= r;
    v_ *= 1.0 / r;
  }

  double w_ = 1.0;
  Vec3 v_{};
};

inline SU2 exp_su2(const Su2Vec& v) {
  double r = norm(v);
  if (r == 0.0) return SU2::identity();
  double theta = kTwoPi * r;
  return SU2(std::cos(theta), (std::sin(theta) / r) * v);
}

/// Alcove value in [0, 1/2]: arccos(tr/2) / 2π.
inline double angle(const SU2& g) {
  // atan2 keeps full precision near the identity, where acos of w loses it.
  return std::atan2(norm(g.vec()), g.w()) / kTwoPi;
}

/// Inverse of exp_su2 on the branch |v| ∈ [0, 1/2].
inline Su2Vec log_su2(const SU2& g) {
  if (g.trace() <= -2.0 + 1e-9)
    throw Error(ErrorKind::DegenerateAxis, "log undefined near -identity");
  double s = norm(g.vec());
  if (s == 0.0) return {};
  return (angle(g) / s) * g.vec();
}

/// Unit rotation axis; throws for ±identity.
inline Vec3 axis(const SU2& g, double tol = 1e-14) {
  double s = norm(g.vec());
  if (s <= tol) throw Error(ErrorKind::DegenerateAxis, "central element has no axis");
  return (1.0 / s) * g.vec();
}

/// h g h⁻¹.
inline SU2 conjugate(const SU2& g, const SU2& h) { return h * g * h.inverse(); }

/// Ad_g v: rotation of v by 4π·angle(g) about axis(g).
inline Su2Vec adjoint(const SU2& g, const Su2Vec& v) {
  // q v q^{-1} for pure quaternion v.
  const Vec3& u = g.vec();
  double w = g.w();
  Vec3 t = 2.0 * cross(u, v);
  return v + w * t + cross(u, t);
}

/// Uniform point on the unit sphere.
template <class Rng>
Vec3 random_unit_vector(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  for (;;) {
    Vec3 v{normal(rng), normal(rng), normal(rng)};
    double r = norm(v);
    if (r > 1e-12) return (1.0 / r) * v;
  }
}

/// Element of the conjugacy class C_alpha with uniformly distributed axis.
template <class Rng>
SU2 sample_class(double alpha, Rng& rng) {
  if (alpha < 0.0 || alpha > 0.5)
    throw Error(ErrorKind::InvalidArgument, "alcove value outside [0, 1/2]");
  if (alpha == 0.0) return SU2::identity();
  return exp_su2(alpha * random_unit_vector(rng));
}

/// Haar-random element.
template <class Rng>
SU2 random_su2(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  for (;;) {
    double w = normal(rng);
    Vec3 v{normal(rng), normal(rng), normal(rng)};
    if (w * w + dot(v, v) > 1e-12) return SU2(w, v);
  }
}

}  // namespace polymod
