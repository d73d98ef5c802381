#pragma once

// Moment polytopes in H-representation, exact over the rationals.
//
// Coordinates are indexed by the diagonals of a tree (in tree.diagonals()
// order). Each pair of pants with incident edge values (a, b, c) contributes
// the triangle inequalities |a - b| ≤ c ≤ a + b; the Goldman polytope also
// carries the quantum bound a + b + c ≤ 1 and the alcove box 0 ≤ u ≤ 1/2.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "polymod/error.hpp"
#include "polymod/lp.hpp"
#include "polymod/rational.hpp"
#include "polymod/trees.hpp"
#include "polymod/weights.hpp"

namespace polymod {

using RationalPoint = std::vector<Rational>;

/// Rows a·x ≤ b.
class HPolytope {
 public:
  HPolytope() = default;
  explicit HPolytope(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return rows_.size(); }
  const std::vector<RationalPoint>& rows() const { return rows_; }
  const std::vector<Rational>& rhs() const { return rhs_; }

  /// Adds a row unless an identical one is already present.
  void add(RationalPoint row, Rational rhs) {
    if (row.size() != dim_) throw Error(ErrorKind::InvalidArgument, "row dimension mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (rows_[i] == row && rhs_[i] == rhs) return;
    rows_.push_back(std::move(row));
    rhs_.push_back(std::move(rhs));
    rows_f_.emplace_back();
    for (const auto& a : rows_.back()) rows_f_.back().push_back(to_double(a));
    rhs_f_.push_back(to_double(rhs_.back()));
  }

  Rational slack(std::size_t i, const RationalPoint& x) const {
    Rational s = rhs_[i];
    for (std::size_t j = 0; j < dim_; ++j) s -= rows_[i][j] * x[j];
    return s;
  }

  bool contains(const RationalPoint& x) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (slack(i, x) < 0) return false;
    return true;
  }

  /// Smallest slack over all rows (negative when outside).
  double min_slack(const std::vector<double>& x) const {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < rows_f_.size(); ++i) {
      double s = rhs_f_[i];
      for (std::size_t j = 0; j < dim_; ++j) s -= rows_f_[i][j] * x[j];
      best = std::min(best, s);
    }
    return best;
  }

  bool contains(const std::vector<double>& x, double tol = 0.0) const { return min_slack(x) >= -tol; }

  LinearSystem system() const { return {rows_, rhs_, dim_}; }

  bool empty() const { return !lp_feasible(system()); }

  /// True when some point satisfies every row strictly.
  bool has_interior() const {
    // maximise t subject to a·x + t ≤ b, t ≤ 1.
    LinearSystem sys;
    sys.dim = dim_ + 1;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      auto row = rows_[i];
      row.push_back(1);
      sys.rows.push_back(std::move(row));
      sys.rhs.push_back(rhs_[i]);
    }
    RationalPoint cap(dim_ + 1, Rational(0));
    cap.back() = 1;
    sys.rows.push_back(cap);
    sys.rhs.push_back(1);
    auto res = lp_maximize(sys, cap);
    return res.status == LpStatus::Optimal && res.value > 0;
  }

  /// Exact per-coordinate [min, max]; throws EmptyPolytope.
  std::vector<std::pair<Rational, Rational>> bounding_box() const {
    std::vector<std::pair<Rational, Rational>> box;
    auto sys = system();
    for (std::size_t j = 0; j < dim_; ++j) {
      RationalPoint e(dim_, Rational(0));
      e[j] = 1;
      auto hi = lp_maximize(sys, e);
      if (hi.status == LpStatus::Infeasible) throw Error(ErrorKind::EmptyPolytope, "polytope is empty");
      if (hi.status == LpStatus::Unbounded) throw Error(ErrorKind::InvalidArgument, "polytope is unbounded");
      e[j] = -1;
      auto lo = lp_maximize(sys, e);
      if (lo.status != LpStatus::Optimal) throw Error(ErrorKind::InvalidArgument, "polytope is unbounded");
      box.emplace_back(-lo.value, hi.value);
    }
    return box;
  }

  /// {t·x : x ∈ P} for t > 0.
  HPolytope scaled(const Rational& t) const {
    HPolytope out(dim_);
    for (std::size_t i = 0; i < rows_.size(); ++i) out.add(rows_[i], rhs_[i] * t);
    return out;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<RationalPoint> rows_;
  std::vector<Rational> rhs_;
  std::vector<std::vector<double>> rows_f_;
  std::vector<double> rhs_f_;
};

namespace detail {

// Affine form coeffs·x + constant for one tree edge.
struct EdgeForm {
  RationalPoint coeffs;
  Rational constant = 0;
};

inline EdgeForm edge_form(const TrivalentTree& tree, const WeightVector& alpha, const Interval& e) {
  EdgeForm f{RationalPoint(static_cast<std::size_t>(tree.n() - 3), Rational(0)), 0};
  int k = tree.diagonal_index(e);
  if (k < 0)
    f.constant = alpha[tree.leaf_of(e) - 1];
  else
    f.coeffs[static_cast<std::size_t>(k)] = 1;
  return f;
}

// Adds Σ signs[i]·forms[i] ≤ bound; all-constant rows are dropped when
// satisfied and kept (as an infeasible 0 ≤ negative row) otherwise.
inline void add_combination(HPolytope& p, const std::array<const EdgeForm*, 3>& forms,
                            const std::array<int, 3>& signs, const Rational& bound) {
  RationalPoint row(p.dim(), Rational(0));
  Rational rhs = bound;
  bool constant = true;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < p.dim(); ++j) {
      row[j] += signs[i] * forms[i]->coeffs[j];
      if (forms[i]->coeffs[j] != 0) constant = false;
    }
    rhs -= signs[i] * forms[i]->constant;
  }
  if (constant && rhs >= 0) return;
  p.add(std::move(row), std::move(rhs));
}

inline HPolytope build_tree_polytope(const TrivalentTree& tree, const WeightVector& alpha, bool quantum) {
  if (alpha.size() != tree.n()) throw Error(ErrorKind::InvalidArgument, "weight count does not match the tree");
  HPolytope p(static_cast<std::size_t>(tree.n() - 3));
  for (const Node& node : tree.nodes()) {
    EdgeForm a = edge_form(tree, alpha, node.parent);
    EdgeForm b = edge_form(tree, alpha, node.left);
    EdgeForm c = edge_form(tree, alpha, node.right);
    std::array<const EdgeForm*, 3> f{&a, &b, &c};
    add_combination(p, f, {1, -1, -1}, 0);
    add_combination(p, f, {-1, 1, -1}, 0);
    add_combination(p, f, {-1, -1, 1}, 0);
    if (quantum) add_combination(p, f, {1, 1, 1}, 1);
  }
  if (quantum) {
    for (std::size_t j = 0; j < p.dim(); ++j) {
      RationalPoint e(p.dim(), Rational(0));
      e[j] = -1;
      p.add(e, 0);
      e[j] = 1;
      p.add(e, Rational(1, 2));
    }
  }
  return p;
}

}  // namespace detail

/// Δ_Γ(α): Euclidean triangle inequalities at every pair of pants.
inline HPolytope build_delta(const TrivalentTree& tree, const WeightVector& alpha) {
  return detail::build_tree_polytope(tree, alpha, false);
}

/// Goldman polytope in alcove units: triangle inequalities plus
/// a + b + c ≤ 1 per pants and 0 ≤ u ≤ 1/2.
inline HPolytope build_goldman(const TrivalentTree& tree, const WeightVector& alpha) {
  return detail::build_tree_polytope(tree, alpha, true);
}

namespace detail {

// Solves the square system M x = b exactly; false if singular.
inline bool solve_exact(std::vector<RationalPoint> m, RationalPoint b, RationalPoint& x) {
  const std::size_t d = b.size();
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (piv < d && m[piv][col] == 0) ++piv;
    if (piv == d) return false;
    std::swap(m[piv], m[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < d; ++c) m[r][c] -= f * m[col][c];
      b[r] -= f * b[col];
    }
  }
  x.resize(d);
  for (std::size_t i = 0; i < d; ++i) x[i] = b[i] / m[i][i];
  return true;
}

}  // namespace detail

/// Exact vertex set by intersecting every dim-subset of rows (dim ≤ 4).
inline std::vector<RationalPoint> vertices(const HPolytope& p) {
  const std::size_t d = p.dim();
  if (d > 4) throw Error(ErrorKind::DimTooLarge, "vertex enumeration is limited to dimension 4");
  std::set<RationalPoint> found;
  if (d == 0) {
    if (p.contains(RationalPoint{})) found.insert(RationalPoint{});
    return {found.begin(), found.end()};
  }
  const std::size_t m = p.size();
  if (m < d) return {};
  std::vector<std::size_t> idx(d);
  for (std::size_t i = 0; i < d; ++i) idx[i] = i;
  for (;;) {
    std::vector<RationalPoint> mat;
    RationalPoint b;
    for (auto i : idx) {
      mat.push_back(p.rows()[i]);
      b.push_back(p.rhs()[i]);
    }
    RationalPoint x;
    if (detail::solve_exact(std::move(mat), std::move(b), x) && p.contains(x)) found.insert(std::move(x));

    // next combination
    std::size_t k = d;
    while (k > 0 && idx[k - 1] == m - d + k - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  return {found.begin(), found.end()};
}

namespace detail {

// Exact counter-clockwise ordering of 2-d points around a centre.
inline void sort_angular(std::vector<std::pair<Rational, Rational>>& pts) {
  Rational cx = 0, cy = 0;
  for (const auto& [x, y] : pts) {
    cx += x;
    cy += y;
  }
  cx /= static_cast<int>(pts.size());
  cy /= static_cast<int>(pts.size());
  auto half = [&](const std::pair<Rational, Rational>& q) {
    Rational dx = q.first - cx, dy = q.second - cy;
    return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
  };
  std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    Rational cr = (a.first - cx) * (b.second - cy) - (a.second - cy) * (b.first - cx);
    return cr > 0;
  });
}

inline Rational polygon_area(std::vector<std::pair<Rational, Rational>> pts) {
  if (pts.size() < 3) return 0;
  sort_angular(pts);
  Rational twice = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& a = pts[i];
    const auto& b = pts[(i + 1) % pts.size()];
    twice += a.first * b.second - a.second * b.first;
  }
  return abs(twice) / 2;
}

inline Rational det3(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

inline Rational polytope_volume_3d(const HPolytope& p, const std::vector<RationalPoint>& verts) {
  if (verts.size() < 4) return 0;
  RationalPoint centre(3, Rational(0));
  for (const auto& v : verts)
    for (std::size_t j = 0; j < 3; ++j) centre[j] += v[j];
  for (auto& c : centre) c /= static_cast<int>(verts.size());

  std::set<std::vector<std::size_t>> facets;
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::vector<std::size_t> tight;
    for (std::size_t v = 0; v < verts.size(); ++v)
      if (p.slack(i, verts[v]) == 0) tight.push_back(v);
    if (tight.size() >= 3) facets.insert(tight);
  }
  // Facets found by several rows, or lower-dimensional tight sets lying in
  // a facet, must be counted once; keep only maximal sets.
  std::vector<std::vector<std::size_t>> maximal;
  for (const auto& f : facets) {
    bool contained = false;
    for (const auto& g : facets)
      if (g != f && std::includes(g.begin(), g.end(), f.begin(), f.end())) contained = true;
    if (!contained) maximal.push_back(f);
  }

  Rational vol = 0;
  for (const auto& f : maximal) {
    // Project onto the coordinate plane where the facet is not degenerate.
    const RationalPoint& o = verts[f[0]];
    RationalPoint u(3), w(3);
    for (std::size_t j = 0; j < 3; ++j) u[j] = verts[f[1]][j] - o[j];
    Rational best = 0;
    std::size_t drop = 0;
    for (std::size_t k = 2; k < f.size(); ++k) {
      for (std::size_t j = 0; j < 3; ++j) w[j] = verts[f[k]][j] - o[j];
      RationalPoint normal{u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0]};
      for (std::size_t j = 0; j < 3; ++j)
        if (abs(normal[j]) > best) {
          best = abs(normal[j]);
          drop = j;
        }
    }
    if (best == 0) continue;
    std::size_t ax = drop == 0 ? 1 : 0;
    std::size_t ay = drop == 2 ? 1 : 2;
    std::vector<std::pair<Rational, Rational>> proj;
    std::map<std::pair<Rational, Rational>, std::size_t> back;
    for (auto v : f) {
      proj.emplace_back(verts[v][ax], verts[v][ay]);
      back[proj.back()] = v;
    }
    sort_angular(proj);
    const RationalPoint& a0 = verts[back[proj[0]]];
    for (std::size_t k = 1; k + 1 < proj.size(); ++k) {
      const RationalPoint& a1 = verts[back[proj[k]]];
      const RationalPoint& a2 = verts[back[proj[k + 1]]];
      RationalPoint e0(3), e1(3), e2(3);
      for (std::size_t j = 0; j < 3; ++j) {
        e0[j] = a0[j] - centre[j];
        e1[j] = a1[j] - centre[j];
        e2[j] = a2[j] - centre[j];
      }
      vol += abs(det3(e0, e1, e2));
    }
  }
  return vol / 6;
}

}  // namespace detail

/// Exact volume for dim ≤ 3 (dim 0: 1 if nonempty).
inline Rational exact_volume(const HPolytope& p) {
  if (p.dim() > 3) throw Error(ErrorKind::DimTooLarge, "exact volume is limited to dimension 3");
  auto verts = vertices(p);
  if (verts.empty()) return 0;
  switch (p.dim()) {
    case 0: return 1;
    case 1: {
      Rational lo = verts.front()[0], hi = verts.front()[0];
      for (const auto& v : verts) {
        lo = std::min(lo, v[0]);
        hi = std::max(hi, v[0]);
      }
      return hi - lo;
    }
    case 2: {
      std::vector<std::pair<Rational, Rational>> pts;
      for (const auto& v : verts) pts.emplace_back(v[0], v[1]);
      return detail::polygon_area(std::move(pts));
    }
    default: return detail::polytope_volume_3d(p, verts);
  }
}

struct VolumeEstimate {
  double value = 0;
  double std_error = 0;
};

/// Hit-or-miss Monte Carlo in the exact bounding box.
template <class Rng>
VolumeEstimate mc_volume(const HPolytope& p, std::size_t samples, Rng& rng) {
  if (p.empty()) return {0, 0};
  auto box = p.bounding_box();
  double box_vol = 1;
  std::vector<std::uniform_real_distribution<double>> dists;
  for (const auto& [lo, hi] : box) {
    box_vol *= to_double(hi - lo);
    dists.emplace_back(to_double(lo), to_double(hi));
  }
  if (box_vol == 0 || samples == 0) return {0, 0};
  std::vector<double> x(p.dim());
  std::size_t hits = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    for (std::size_t j = 0; j < x.size(); ++j) x[j] = dists[j](rng);
    if (p.contains(x)) ++hits;
  }
  double frac = static_cast<double>(hits) / static_cast<double>(samples);
  return {box_vol * frac, box_vol * std::sqrt(frac * (1 - frac) / static_cast<double>(samples))};
}

enum class VolumeMethod { MonteCarlo, Exact };

template <class Rng>
VolumeEstimate volume(const HPolytope& p, VolumeMethod method, std::size_t samples, Rng& rng) {
  if (method == VolumeMethod::Exact) return {to_double(exact_volume(p)), 0};
  return mc_volume(p, samples, rng);
}

/// Rejection sampler for a fixed polytope: uniform points whose every
/// slack exceeds `margin`, drawn from the exact bounding box computed once.
class UniformSampler {
 public:
  explicit UniformSampler(HPolytope p, double margin = 0.0, std::size_t max_tries = 1'000'000)
      : poly_(std::move(p)), margin_(margin), max_tries_(max_tries) {
    for (const auto& [lo, hi] : poly_.bounding_box()) box_.emplace_back(to_double(lo), to_double(hi));
  }

  const HPolytope& polytope() const { return poly_; }

  template <class Rng>
  std::vector<double> operator()(Rng& rng) const {
    std::vector<double> x(poly_.dim());
    for (std::size_t t = 0; t < max_tries_; ++t) {
      for (std::size_t j = 0; j < x.size(); ++j)
        x[j] = std::uniform_real_distribution<double>(box_[j].first, box_[j].second)(rng);
      if (poly_.min_slack(x) > margin_) return x;
    }
    throw Error(ErrorKind::EmptyPolytope, "no interior point found after rejection sampling");
  }

 private:
  HPolytope poly_;
  double margin_;
  std::size_t max_tries_;
  std::vector<std::pair<double, double>> box_;
};

template <class Rng>
std::vector<double> sample_uniform(const HPolytope& p, Rng& rng, double margin = 0.0,
                                   std::size_t max_tries = 1'000'000) {
  return UniformSampler(p, margin, max_tries)(rng);
}

/// Number of m ∈ Z^dim with m / scale ∈ P.
inline std::uint64_t count_lattice_points(const HPolytope& p, const Rational& scale) {
  if (p.empty()) return 0;
  HPolytope q = p.scaled(scale);
  auto box = q.bounding_box();
  std::vector<Integer> lo, hi;
  for (const auto& [a, b] : box) {
    Integer l = floor(a);
    if (Rational(l) < a) ++l;
    lo.push_back(l);
    hi.push_back(floor(b));
    if (hi.back() < lo.back()) return 0;
  }
  std::uint64_t count = 0;
  RationalPoint x(q.dim());
  std::vector<Integer> cur = lo;
  if (q.dim() == 0) return q.contains(x) ? 1 : 0;
  for (;;) {
    for (std::size_t j = 0; j < x.size(); ++j) x[j] = Rational(cur[j]);
    if (q.contains(x)) ++count;
    std::size_t j = 0;
    while (j < cur.size() && cur[j] == hi[j]) {
      cur[j] = lo[j];
      ++j;
    }
    if (j == cur.size()) break;
    ++cur[j];
  }
  return count;
}

/// Level-L quantum Clebsch–Gordan rule for labels (a, b, c).
constexpr bool fusion_admissible(int a, int b, int c, int level) {
  int lo = a > b ? a - b : b - a;
  int hi = std::min(a + b, 2 * level - (a + b));
  return lo <= c && c <= hi && (a + b + c) % 2 == 0;
}

struct FusionInstance {
  TrivalentTree tree;
  std::vector<int> labels;  // λ_1 … λ_n
  int level = 1;
};

/// Admissible integer labellings of the internal edges, by dynamic
/// programming from the leaves up to the root leaf n.
inline std::uint64_t fusion_count(const FusionInstance& f) {
  const TrivalentTree& tree = f.tree;
  const int n = tree.n();
  const int L = f.level;
  if (L < 1) throw Error(ErrorKind::InvalidArgument, "level must be positive");
  if (static_cast<int>(f.labels.size()) != n) throw Error(ErrorKind::InvalidArgument, "need one label per leaf");
  for (int lam : f.labels)
    if (lam < 0 || lam > L) throw Error(ErrorKind::InvalidArgument, "labels must lie in [0, L]");

  // ways[e][c]: labellings of the subtree hanging below edge e with label c on e.
  std::map<Interval, std::vector<std::uint64_t>> ways;
  auto below = [&](const Interval& e) -> const std::vector<std::uint64_t>& {
    auto it = ways.find(e);
    if (it != ways.end()) return it->second;
    std::vector<std::uint64_t> leaf(static_cast<std::size_t>(L + 1), 0);
    leaf[static_cast<std::size_t>(f.labels[static_cast<std::size_t>(e.first - 1)])] = 1;
    return ways.emplace(e, std::move(leaf)).first->second;
  };

  const auto& nodes = tree.nodes();
  for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) {
    const auto& left = below(it->left);
    const auto& right = below(it->right);
    std::vector<std::uint64_t> up(static_cast<std::size_t>(L + 1), 0);
    for (int a = 0; a <= L; ++a) {
      if (!left[static_cast<std::size_t>(a)]) continue;
      for (int b = 0; b <= L; ++b) {
        if (!right[static_cast<std::size_t>(b)]) continue;
        for (int c = 0; c <= L; ++c)
          if (fusion_admissible(a, b, c, L))
            up[static_cast<std::size_t>(c)] += left[static_cast<std::size_t>(a)] * right[static_cast<std::size_t>(b)];
      }
    }
    ways[it->parent] = std::move(up);
  }
  return ways.at(tree.root_edge())[static_cast<std::size_t>(f.labels.back())];
}

}  // namespace polymod
