#pragma once

// Representation spaces {g ∈ C_α : g_1 ⋯ g_n = 1}/SU(2): Goldman functions,
// pair-of-pants solutions glued along a tree, and the small-weight
// comparison with bending Hamiltonians.

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "polymod/error.hpp"
#include "polymod/polygons.hpp"
#include "polymod/polytopes.hpp"
#include "polymod/su2.hpp"
#include "polymod/trees.hpp"
#include "polymod/weights.hpp"

namespace polymod {

struct HolonomyTuple {
  std::vector<SU2> g;
  WeightVector alpha;
};

/// Alcove coordinates u_e, one per diagonal in tree.diagonals() order.
struct GoldmanVector {
  TrivalentTree tree;
  std::vector<double> u;
};

/// g_first ⋯ g_last.
inline SU2 partial_product(const std::vector<SU2>& g, const Interval& e) {
  SU2 h;
  for (int j = e.first; j <= e.last; ++j) h *= g[static_cast<std::size_t>(j - 1)];
  return h;
}

inline SU2 total_product(const std::vector<SU2>& g) {
  SU2 h;
  for (const auto& x : g) h *= x;
  return h;
}

/// Largest class or closure violation of a tuple.
inline double holonomy_defect(const HolonomyTuple& t) {
  double worst = distance(total_product(t.g), SU2::identity());
  for (std::size_t i = 0; i < t.g.size(); ++i)
    worst = std::max(worst, std::abs(angle(t.g[i]) - t.alpha.value(static_cast<int>(i))));
  return worst;
}

/// θ_C for the curve around the leaves of e, in alcove units.
inline double goldman(const std::vector<SU2>& g, const Interval& e) { return angle(partial_product(g, e)); }

inline double goldman(const HolonomyTuple& t, const Diagonal& d) {
  if (d.n() != static_cast<int>(t.g.size())) throw Error(ErrorKind::InvalidArgument, "diagonal built for another n");
  return goldman(t.g, d.interval());
}

/// Goldman value of the complementary word g_{j+1} ⋯ g_n g_1 ⋯ g_{i-1}.
inline double goldman_complement(const HolonomyTuple& t, const Diagonal& d) {
  SU2 h;
  const int n = d.n();
  for (int step = 1; step <= n - d.interval().size(); ++step) {
    int j = (d.last() + step - 1) % n + 1;
    h *= t.g[static_cast<std::size_t>(j - 1)];
  }
  return angle(h);
}

inline GoldmanVector goldman_vector(const HolonomyTuple& t, const TrivalentTree& tree) {
  GoldmanVector v{tree, {}};
  for (const auto& d : tree.diagonals()) v.u.push_back(goldman(t, d));
  return v;
}

/// Name of the first violated pants inequality, if any, allowing `tol`.
inline std::optional<std::string> pants_violation(double a, double b, double c, double tol) {
  if (std::abs(a - b) > c + tol) return "|a - b| <= c";
  if (c > a + b + tol) return "c <= a + b";
  if (a + b + c > 1.0 + tol) return "c <= 1 - (a + b)";
  return std::nullopt;
}

/// Smallest slack of |a − b| ≤ c ≤ min(a + b, 1 − (a + b)).
inline double pants_slack(double a, double b, double c) {
  return std::min({c - std::abs(a - b), a + b - c, 1.0 - a - b - c});
}

namespace detail {

// A ∈ C_a with angle(A⁻¹ H) = b. The axis of A makes a fixed angle with the
// axis of H; `twist` picks its azimuth, measured from `reference`.
inline SU2 pants_first(double a, double b, const SU2& h, const Vec3& reference, double twist) {
  Vec3 hk = norm(h.vec()) > 1e-14 ? axis(h) : Vec3{0, 0, 1};
  Vec3 perp = reference - dot(reference, hk) * hk;
  Vec3 e1 = norm(perp) > 1e-12 ? normalized(perp) : any_orthogonal(hk);
  Vec3 e2 = cross(hk, e1);
  double c = angle(h);
  double den = std::sin(kTwoPi * a) * std::sin(kTwoPi * c);
  double kappa = 0.0;
  if (std::abs(den) > 1e-12)
    kappa = std::clamp((std::cos(kTwoPi * b) - std::cos(kTwoPi * a) * std::cos(kTwoPi * c)) / den, -1.0, 1.0);
  double r = std::sqrt(std::max(0.0, 1.0 - kappa * kappa));
  Vec3 dir = kappa * hk + r * (std::cos(twist) * e1 + std::sin(twist) * e2);
  return exp_su2(a * dir);
}

}  // namespace detail

struct PantsSolution {
  SU2 g1, g2, g3;
};

/// g1 ∈ C_a, g2 ∈ C_b, g3 ∈ C_c with g1 g2 g3 = 1. The twist rotates
/// (g1, g2) about the axis of g1 g2 = g3⁻¹, which is fixed along +z.
inline PantsSolution solve_pants(double a, double b, double c, double twist = 0.0) {
  for (double v : {a, b, c})
    if (v < 0.0 || v > 0.5) throw Error(ErrorKind::InvalidArgument, "alcove values must lie in [0, 1/2]");
  if (auto bad = pants_violation(a, b, c, 1e-12)) throw Error(ErrorKind::NotRealizable, "violates " + *bad);
  SU2 h = exp_su2(Vec3{0, 0, c});
  SU2 g1 = detail::pants_first(a, b, h, Vec3{1, 0, 0}, twist);
  return {g1, g1.inverse() * h, h.inverse()};
}

/// Glues pants solutions down the tree from leaf n. g_n is exp(−α_n z);
/// the twist of a diagonal rotates everything below it about the axis of
/// its partial product.
inline HolonomyTuple reconstruct_holonomy(const TrivalentTree& tree, const WeightVector& alpha,
                                          const GoldmanVector& u, const std::vector<double>& twists) {
  const int n = tree.n();
  if (alpha.size() != n) throw Error(ErrorKind::InvalidArgument, "weight count does not match the tree");
  if (u.u.size() != tree.diagonals().size() || twists.size() != tree.diagonals().size())
    throw Error(ErrorKind::InvalidArgument, "need one Goldman value and one twist per diagonal");

  auto value_of = [&](const Interval& e) {
    int k = tree.diagonal_index(e);
    return k < 0 ? alpha.value(tree.leaf_of(e) - 1) : u.u[static_cast<std::size_t>(k)];
  };
  for (const Node& node : tree.nodes()) {
    double c = value_of(node.parent), a = value_of(node.left), b = value_of(node.right);
    if (pants_slack(a, b, c) <= kDegenerateTol) {
      auto label = [](const Interval& e) { return std::to_string(e.first) + "-" + std::to_string(e.last); };
      throw Error(ErrorKind::NotRealizable, "pants (" + label(node.parent) + ", " + label(node.left) + ", " +
                                                label(node.right) + ") has no slack");
    }
  }

  std::map<Interval, SU2> product;
  std::map<Interval, Interval> above;
  product[tree.root_edge()] = exp_su2(Vec3{0, 0, alpha.value(n - 1)});
  for (const Node& node : tree.nodes()) {
    const SU2 h = product.at(node.parent);
    Vec3 reference{1, 0, 0};
    double twist = 0.0;
    if (node.parent != tree.root_edge()) {
      reference = product.at(above.at(node.parent)).vec();
      twist = twists[static_cast<std::size_t>(tree.diagonal_index(node.parent))];
    }
    SU2 first = detail::pants_first(value_of(node.left), value_of(node.right), h, reference, twist);
    product[node.left] = first;
    product[node.right] = first.inverse() * h;
    above[node.left] = node.parent;
    above[node.right] = node.parent;
  }

  HolonomyTuple t{{}, alpha};
  for (int j = 1; j < n; ++j) t.g.push_back(product.at(Interval{j, j}));
  t.g.push_back(product.at(tree.root_edge()).inverse());
  return t;
}

struct HolonomySample {
  HolonomyTuple tuple;
  GoldmanVector u;
  std::vector<double> twists;
};

/// Uniform Goldman values in the Goldman polytope, uniform twists.
class HolonomySampler {
 public:
  HolonomySampler(WeightVector alpha, TrivalentTree tree) : alpha_(std::move(alpha)), tree_(std::move(tree)) {
    HPolytope p = build_goldman(tree_, alpha_);
    if (p.dim() > 0) {
      if (!p.has_interior()) throw Error(ErrorKind::EmptyPolytope, "Goldman polytope has empty interior");
      values_.emplace(std::move(p), kDegenerateTol);
    }
  }

  template <class Rng>
  HolonomySample operator()(Rng& rng) const {
    GoldmanVector u{tree_, {}};
    if (values_) u.u = (*values_)(rng);
    std::uniform_real_distribution<double> twist_dist(0.0, kTwoPi);
    std::vector<double> twists;
    for (std::size_t k = 0; k < u.u.size(); ++k) twists.push_back(twist_dist(rng));
    HolonomyTuple t = reconstruct_holonomy(tree_, alpha_, u, twists);
    return {std::move(t), std::move(u), std::move(twists)};
  }

 private:
  WeightVector alpha_;
  TrivalentTree tree_;
  std::optional<UniformSampler> values_;
};

template <class Rng>
HolonomySample sample_holonomy_with_coordinates(const WeightVector& alpha, const TrivalentTree& tree, Rng& rng) {
  return HolonomySampler(alpha, tree)(rng);
}

template <class Rng>
HolonomyTuple sample_holonomy(const WeightVector& alpha, const TrivalentTree& tree, Rng& rng) {
  return sample_holonomy_with_coordinates(alpha, tree, rng).tuple;
}

/// (exp(t x_1), …, exp(t x_n)); the product is 1 + O(t²), not exactly 1.
inline std::vector<SU2> exponentiate(const Polygon& p, double t) {
  std::vector<SU2> g;
  for (const auto& x : p.x) g.push_back(exp_su2(t * x));
  return g;
}

/// max_e |(1/t) θ_e(exp(t x)) − φ_e(x)| over the diagonals of the tree.
inline double compare_goldman_bending(const Polygon& p, const TrivalentTree& tree, double t) {
  if (p.size() != tree.n()) throw Error(ErrorKind::InvalidArgument, "polygon size does not match the tree");
  double perimeter = 0;
  for (const auto& x : p.x) perimeter += norm(x);
  if (!(t > 0.0 && t <= 1.0) || t * perimeter >= 1.0)
    throw Error(ErrorKind::InvalidArgument, "need 0 < t <= 1 and t |alpha| < 1");
  auto g = exponentiate(p, t);
  double worst = 0;
  for (const auto& d : tree.diagonals())
    worst = std::max(worst, std::abs(goldman(g, d.interval()) / t - bending_hamiltonian(p, d)));
  return worst;
}

}  // namespace polymod
