#pragma once

// Polygon spaces: closed n-gons in R³ with side lengths α_i, bending
// Hamiltonians and flows, and action-angle coordinates for a triangulation.

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "polymod/error.hpp"
#include "polymod/polytopes.hpp"
#include "polymod/su2.hpp"
#include "polymod/trees.hpp"
#include "polymod/weights.hpp"

namespace polymod {

inline constexpr double kDegenerateTol = 1e-9;

struct Polygon {
  std::vector<Vec3> x;

  int size() const { return static_cast<int>(x.size()); }
};

/// Σ_{j ∈ e} x_j.
inline Vec3 partial_sum(const Polygon& p, const Interval& e) {
  Vec3 s;
  for (int j = e.first; j <= e.last; ++j) s += p.x[static_cast<std::size_t>(j - 1)];
  return s;
}

inline Vec3 closure_defect(const Polygon& p) {
  Vec3 s;
  for (const auto& v : p.x) s += v;
  return s;
}

/// Max of the side-length and closure violations.
inline double polygon_defect(const Polygon& p, const WeightVector& alpha) {
  double worst = norm(closure_defect(p));
  for (int i = 0; i < p.size(); ++i)
    worst = std::max(worst, std::abs(norm(p.x[static_cast<std::size_t>(i)]) - alpha.value(i)));
  return worst;
}

/// φ_d(x) = |x_i + … + x_{i+k}|.
inline double bending_hamiltonian(const Polygon& p, const Diagonal& d) {
  if (d.n() != p.size()) throw Error(ErrorKind::InvalidArgument, "diagonal built for another n");
  return norm(partial_sum(p, d.interval()));
}

/// Rotates the sides in d by angle t (radians) about their sum; unit
/// angular speed, period 2π.
inline Polygon bend(const Polygon& p, const Diagonal& d, double t) {
  Vec3 s = partial_sum(p, d.interval());
  double len = norm(s);
  if (len <= kDegenerateTol) throw Error(ErrorKind::DegenerateDiagonal, "diagonal " + d.str() + " has zero length");
  Vec3 k = (1.0 / len) * s;
  Polygon out = p;
  for (int j = d.first(); j <= d.last(); ++j) {
    auto& v = out.x[static_cast<std::size_t>(j - 1)];
    v = rotate(v, k, t);
  }
  return out;
}

/// Pairwise dot products x_i · x_j; a complete invariant modulo rotations.
inline std::vector<double> gram_matrix(const Polygon& p) {
  std::vector<double> g;
  g.reserve(p.x.size() * p.x.size());
  for (const auto& a : p.x)
    for (const auto& b : p.x) g.push_back(dot(a, b));
  return g;
}

inline double gram_distance(const Polygon& a, const Polygon& b) {
  auto ga = gram_matrix(a), gb = gram_matrix(b);
  double worst = 0;
  for (std::size_t i = 0; i < ga.size(); ++i) worst = std::max(worst, std::abs(ga[i] - gb[i]));
  return worst;
}

/// Euclidean distance between vertex lists, (Σ |a_i − b_i|²)^{1/2}.
inline double polygon_distance(const Polygon& a, const Polygon& b) {
  double sq = 0;
  for (std::size_t i = 0; i < a.x.size(); ++i) sq += dot(a.x[i] - b.x[i], a.x[i] - b.x[i]);
  return std::sqrt(sq);
}

/// Bending action-angle coordinates: one (length, angle) per diagonal, in
/// tree.diagonals() order. The angle of a diagonal is the dihedral angle at
/// it between the triangle above (towards leaf n) and the triangle below.
struct ActionAngle {
  TrivalentTree tree;
  std::vector<double> lengths;
  std::vector<double> angles;
};

namespace detail {

struct TriangleFrame {
  Vec3 axis, e1, e2;
};

inline TriangleFrame frame_about(const Vec3& s, const Vec3& reference) {
  Vec3 k = normalized(s);
  Vec3 perp = reference - dot(reference, k) * k;
  if (norm(perp) <= 1e-12)
    throw Error(ErrorKind::DegenerateTriangle, "reference direction is parallel to the diagonal");
  Vec3 e1 = normalized(perp);
  return {k, e1, cross(k, e1)};
}

// Smallest triangle-inequality slack at each node, given edge lengths.
inline double min_triangle_slack(double a, double b, double c) {
  return std::min({b + c - a, a + c - b, a + b - c});
}

}  // namespace detail

/// Rebuilds a polygon from action-angle data: x_n points along −z, the
/// triangle adjacent to leaf n lies in the xz half-plane x > 0.
inline Polygon reconstruct(const ActionAngle& aa, const WeightVector& alpha) {
  const TrivalentTree& tree = aa.tree;
  const int n = tree.n();
  if (alpha.size() != n) throw Error(ErrorKind::InvalidArgument, "weight count does not match the tree");
  const auto m = static_cast<std::size_t>(n - 3);
  if (aa.lengths.size() != m || aa.angles.size() != m)
    throw Error(ErrorKind::InvalidArgument, "need one length and one angle per diagonal");

  auto length_of = [&](const Interval& e) {
    int k = tree.diagonal_index(e);
    return k < 0 ? alpha.value(tree.leaf_of(e) - 1) : aa.lengths[static_cast<std::size_t>(k)];
  };

  double worst = std::numeric_limits<double>::infinity();
  for (const Node& node : tree.nodes())
    worst = std::min(worst, detail::min_triangle_slack(length_of(node.parent), length_of(node.left),
                                                       length_of(node.right)));
  if (worst < -kDegenerateTol) throw Error(ErrorKind::OutsidePolytope, "lengths violate a triangle inequality");
  if (worst <= kDegenerateTol) throw Error(ErrorKind::DegenerateTriangle, "a triangle inequality is tight");

  std::map<Interval, Vec3> sum;
  std::map<Interval, Interval> above;
  sum[tree.root_edge()] = Vec3{0, 0, alpha.value(n - 1)};

  for (const Node& node : tree.nodes()) {
    const Vec3 s = sum.at(node.parent);
    Vec3 reference{1, 0, 0};
    double theta = 0;
    if (node.parent != tree.root_edge()) {
      reference = sum.at(above.at(node.parent));
      theta = aa.angles[static_cast<std::size_t>(tree.diagonal_index(node.parent))];
    }
    auto f = detail::frame_about(s, reference);
    double big = norm(s), l1 = length_of(node.left), l2 = length_of(node.right);
    double along = (big * big + l1 * l1 - l2 * l2) / (2 * big);
    double radial = std::sqrt(std::max(0.0, l1 * l1 - along * along));
    Vec3 c1 = along * f.axis + radial * (std::cos(theta) * f.e1 + std::sin(theta) * f.e2);
    sum[node.left] = c1;
    sum[node.right] = s - c1;
    above[node.left] = node.parent;
    above[node.right] = node.parent;
  }

  Polygon p;
  p.x.resize(static_cast<std::size_t>(n));
  for (int j = 1; j < n; ++j) p.x[static_cast<std::size_t>(j - 1)] = sum.at(Interval{j, j});
  p.x.back() = -sum.at(tree.root_edge());
  return p;
}

/// Inverse of reconstruct, up to a global rotation.
inline ActionAngle measure(const Polygon& p, const TrivalentTree& tree) {
  if (p.size() != tree.n()) throw Error(ErrorKind::InvalidArgument, "polygon size does not match the tree");
  ActionAngle aa{tree, {}, {}};
  aa.lengths.assign(tree.diagonals().size(), 0.0);
  aa.angles.assign(tree.diagonals().size(), 0.0);
  std::map<Interval, Interval> above;
  for (const Node& node : tree.nodes()) {
    above[node.left] = node.parent;
    above[node.right] = node.parent;
  }
  for (const Node& node : tree.nodes()) {
    if (node.parent == tree.root_edge()) continue;
    auto k = static_cast<std::size_t>(tree.diagonal_index(node.parent));
    Vec3 s = partial_sum(p, node.parent);
    aa.lengths[k] = norm(s);
    if (aa.lengths[k] <= kDegenerateTol) throw Error(ErrorKind::DegenerateTriangle, "zero-length diagonal");
    auto f = detail::frame_about(s, partial_sum(p, above.at(node.parent)));
    Vec3 c1 = partial_sum(p, node.left);
    aa.angles[k] = std::atan2(dot(c1, f.e2), dot(c1, f.e1));
  }
  return aa;
}

/// Liouville-uniform polygons: uniform lengths in Δ_Γ(α), uniform angles.
class PolygonSampler {
 public:
  PolygonSampler(WeightVector alpha, TrivalentTree tree) : alpha_(std::move(alpha)), tree_(std::move(tree)) {
    HPolytope delta = build_delta(tree_, alpha_);
    if (delta.dim() > 0) {
      if (!delta.has_interior()) throw Error(ErrorKind::EmptyPolytope, "Δ_Γ(α) has empty interior");
      lengths_.emplace(std::move(delta), kDegenerateTol);
    }
  }

  template <class Rng>
  ActionAngle action_angle(Rng& rng) const {
    ActionAngle aa{tree_, {}, {}};
    if (lengths_) aa.lengths = (*lengths_)(rng);
    std::uniform_real_distribution<double> angle_dist(0.0, kTwoPi);
    for (std::size_t k = 0; k < aa.lengths.size(); ++k) aa.angles.push_back(angle_dist(rng));
    return aa;
  }

  template <class Rng>
  Polygon operator()(Rng& rng) const {
    return reconstruct(action_angle(rng), alpha_);
  }

  const WeightVector& alpha() const { return alpha_; }
  const TrivalentTree& tree() const { return tree_; }

 private:
  WeightVector alpha_;
  TrivalentTree tree_;
  std::optional<UniformSampler> lengths_;
};

template <class Rng>
Polygon sample_polygon(const WeightVector& alpha, const TrivalentTree& tree, Rng& rng) {
  return PolygonSampler(alpha, tree)(rng);
}

/// Flow-commutation defect |φ_g^s φ_f^s p − φ_f^s φ_g^s p| at step s.
inline double poisson_bracket_fd(const Polygon& p, const Diagonal& f, const Diagonal& g, double s) {
  Polygon fg = bend(bend(p, f, s), g, s);
  Polygon gf = bend(bend(p, g, s), f, s);
  return polygon_distance(fg, gf);
}

}  // namespace polymod
