#pragma once

// Walls and chambers in the space of stability parameters, wall-crossing
// descriptions of the moduli space starting from P^{n-3}, and GIT
// (semi)stability of point configurations on P^1. Exact arithmetic only.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polymod/error.hpp"
#include "polymod/rational.hpp"
#include "polymod/weights.hpp"

namespace polymod {

/// H_{I,k}: Σ_{j∉I} α_j − Σ_{i∈I} α_i = k with k ≥ 0. For k = 0 the
/// representative with 1 ∈ I is kept.
struct Wall {
  std::vector<int> I;  // 1-based, sorted
  int k = 0;

  friend bool operator==(const Wall&, const Wall&) = default;
  friend auto operator<=>(const Wall& a, const Wall& b) {
    if (auto c = a.k <=> b.k; c != 0) return c;
    return a.I <=> b.I;
  }
};

using SubsetMask = std::uint32_t;

inline std::vector<int> mask_to_indices(SubsetMask mask, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (mask & (SubsetMask{1} << i)) out.push_back(i + 1);
  return out;
}

inline std::string format_subset(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

namespace detail {

inline Rational fractional_part(const Rational& q) { return q - Rational(floor(q)); }

inline std::vector<std::pair<SubsetMask, Rational>> subset_sums(const std::vector<Rational>& a, int offset,
                                                                int count) {
  std::vector<std::pair<SubsetMask, Rational>> out{{0, Rational(0)}};
  for (int i = 0; i < count; ++i) {
    std::size_t m = out.size();
    for (std::size_t j = 0; j < m; ++j)
      out.emplace_back(out[j].first | (SubsetMask{1} << (offset + i)),
                       out[j].second + a[static_cast<std::size_t>(offset + i)]);
  }
  return out;
}

}  // namespace detail

/// All walls through α: sign vectors ε with Σ ε_i α_i ∈ Z. Subset sums of
/// the two halves of α are matched on the fractional part of 2Σ.
inline std::vector<Wall> walls_hit(const WeightVector& alpha) {
  const int n = alpha.size();
  if (n > 30) throw Error(ErrorKind::LimitExceeded, "walls_hit supports n <= 30");
  const auto& a = alpha.exact();
  const Rational& total = alpha.total();
  const int h = n / 2;
  auto left = detail::subset_sums(a, 0, h);
  auto right = detail::subset_sums(a, h, n - h);

  std::map<Rational, std::vector<std::size_t>> by_frac;
  for (std::size_t i = 0; i < left.size(); ++i)
    by_frac[detail::fractional_part(2 * left[i].second)].push_back(i);

  std::vector<Wall> walls;
  for (const auto& [rmask, rsum] : right) {
    auto it = by_frac.find(detail::fractional_part(total - 2 * rsum));
    if (it == by_frac.end()) continue;
    for (std::size_t li : it->second) {
      Rational k = total - 2 * (left[li].second + rsum);
      if (k < 0) continue;
      SubsetMask I = left[li].first | rmask;
      if (k == 0 && !(I & 1)) continue;  // keep the representative containing 1
      walls.push_back({mask_to_indices(I, n), k.convert_to<int>()});
    }
  }
  std::sort(walls.begin(), walls.end());
  return walls;
}

/// Walls with k = 0, the only ones that separate chambers of normalized
/// weights w = 2α/|α|.
inline std::vector<Wall> normalized_walls(const WeightVector& alpha) {
  auto all = walls_hit(alpha);
  std::erase_if(all, [](const Wall& w) { return w.k != 0; });
  return all;
}

/// Signs of Σ_{i∈S} w_i − 1 for every S ∋ n with 1 ≤ |S| ≤ n − 1.
struct ChamberSignature {
  int n = 0;
  std::vector<std::pair<SubsetMask, int>> signs;  // ordered by mask

  friend bool operator==(const ChamberSignature&, const ChamberSignature&) = default;

  int sign_of(SubsetMask s) const {
    for (const auto& [m, v] : signs)
      if (m == s) return v;
    throw Error(ErrorKind::InvalidArgument, "subset is not indexed by the signature");
  }
};

/// Signature allowing zero entries (parameters on walls).
inline ChamberSignature chamber_signs(const std::vector<Rational>& weights) {
  const int n = static_cast<int>(weights.size());
  if (n > 24) throw Error(ErrorKind::LimitExceeded, "chamber signatures support n <= 24");
  Rational total = 0;
  for (const auto& w : weights) total += w;
  const Rational half = total / 2;
  const SubsetMask top = SubsetMask{1} << (n - 1);
  ChamberSignature sig{n, {}};
  for (SubsetMask rest = 0; rest < top; ++rest) {
    SubsetMask s = rest | top;
    int size = std::popcount(s);
    if (size >= n) continue;
    Rational sum = 0;
    for (int i = 0; i < n; ++i)
      if (s & (SubsetMask{1} << i)) sum += weights[static_cast<std::size_t>(i)];
    // sign(Σ_S w − 1) = sign(Σ_S α − |α|/2); scale-free.
    sig.signs.emplace_back(s, sign(sum - half));
  }
  return sig;
}

/// Complete chamber invariant; throws OnWall listing the walls.
inline ChamberSignature chamber_signature(const WeightVector& alpha) {
  ChamberSignature sig = chamber_signs(alpha.exact());
  for (const auto& [m, v] : sig.signs)
    if (v == 0) {
      std::string list;
      for (const auto& w : normalized_walls(alpha)) list += " " + format_subset(w.I);
      throw Error(ErrorKind::OnWall, "parameter lies on walls" + list);
    }
  return sig;
}

/// Hypotheses under which the moduli space is P^{n-3}:
/// 2α_n < |α| < 1 and |α| − 2α_i − 2α_n < 0 for i < n.
inline bool in_distinguished_chamber(const WeightVector& alpha) {
  const int n = alpha.size();
  const Rational& total = alpha.total();
  const Rational& last = alpha[n - 1];
  if (!(2 * last < total && total < 1)) return false;
  for (int i = 0; i < n - 1; ++i)
    if (!(total - 2 * alpha[i] - 2 * last < 0)) return false;
  return true;
}

enum class StepKind { BlowUpPoint, Flip };

/// Crossing the wall for the subset I (which contains the largest-weight
/// index) replaces a P^{|I|-2} by a P^{n-|I|-2}.
struct BirationalStep {
  StepKind kind = StepKind::BlowUpPoint;
  std::vector<int> I;  // original 1-based indices, sorted
  int removed_dim = 0;
  int inserted_dim = 0;
  /// The removed locus is a divisor (the inverse of a point blow-up).
  bool contracts_divisor = false;

  friend bool operator==(const BirationalStep&, const BirationalStep&) = default;
};

struct ModuliDescription {
  int n = 0;
  int start_dim = 0;  // the starting P^{n-3}
  std::vector<BirationalStep> steps;
  /// Coefficients of P in q = t²: poincare[k] = b_{2k}.
  std::vector<long long> poincare;

  friend bool operator==(const ModuliDescription&, const ModuliDescription&) = default;
};

namespace detail {

// 1 + q + … + q^{m-1}, added with `sign` into poly.
inline void add_block(std::vector<long long>& poly, int m, int sign) {
  for (int k = 0; k < m; ++k) poly[static_cast<std::size_t>(k)] += sign;
}

// Ascending by weight, ties by index; 0-based positions.
inline std::vector<int> ascending_order(const std::vector<Rational>& w) {
  std::vector<int> order(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return w[static_cast<std::size_t>(a)] < w[static_cast<std::size_t>(b)]; });
  return order;
}

inline BirationalStep make_step(int n, std::vector<int> I) {
  std::sort(I.begin(), I.end());
  const int r = static_cast<int>(I.size()) - 1;
  BirationalStep s;
  s.kind = r == 1 ? StepKind::BlowUpPoint : StepKind::Flip;
  s.I = std::move(I);
  s.removed_dim = r - 1;
  s.inserted_dim = n - r - 3;
  s.contracts_divisor = r >= 2 && s.removed_dim == n - 4;
  return s;
}

inline void apply_step(std::vector<long long>& poly, const BirationalStep& s) {
  add_block(poly, s.inserted_dim + 1, +1);
  add_block(poly, s.removed_dim + 1, -1);
}

// Order of emission: increasing r, then lexicographic in sorted positions.
inline void sort_steps(std::vector<BirationalStep>& steps, const std::vector<int>& order) {
  std::vector<int> rank(order.size());
  for (std::size_t p = 0; p < order.size(); ++p) rank[static_cast<std::size_t>(order[p])] = static_cast<int>(p);
  auto key = [&](const BirationalStep& s) {
    std::vector<int> k;
    for (int i : s.I) k.push_back(rank[static_cast<std::size_t>(i - 1)]);
    std::sort(k.begin(), k.end());
    return k;
  };
  std::stable_sort(steps.begin(), steps.end(), [&](const BirationalStep& a, const BirationalStep& b) {
    if (a.I.size() != b.I.size()) return a.I.size() < b.I.size();
    return key(a) < key(b);
  });
}

}  // namespace detail

/// Wall-crossing from P^{n-3} on the parabolic side: with α sorted
/// ascending and m the largest index, cross H_{I∪{m}} for every r-subset I
/// of the other indices with |α| − 2Σ_I α − 2α_m > 0, in increasing r.
inline ModuliDescription wall_path(const WeightVector& alpha) {
  const int n = alpha.size();
  if (alpha.total() >= 1)
    throw Error(ErrorKind::NotSmallWeight, "wall_path needs |alpha| < 1 (got " + to_string(alpha.total()) + ")");
  chamber_signature(alpha);  // throws OnWall

  const auto order = detail::ascending_order(alpha.exact());
  const int top = order.back();
  ModuliDescription desc{n, n - 3, {}, std::vector<long long>(static_cast<std::size_t>(n - 2), 0)};
  detail::add_block(desc.poincare, n - 2, +1);

  const int others = n - 1;
  for (int r = 1; r <= n - 3; ++r) {
    // r-combinations of sorted positions 0 … n-2, lexicographic.
    std::vector<int> pick(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) pick[static_cast<std::size_t>(i)] = i;
    for (;;) {
      Rational lhs = alpha.total() - 2 * alpha[top];
      std::vector<int> I{top + 1};
      for (int p : pick) {
        int idx = order[static_cast<std::size_t>(p)];
        lhs -= 2 * alpha[idx];
        I.push_back(idx + 1);
      }
      if (lhs > 0) {
        desc.steps.push_back(detail::make_step(n, I));
        detail::apply_step(desc.poincare, desc.steps.back());
      }
      int k = r;
      while (k > 0 && pick[static_cast<std::size_t>(k - 1)] == others - r + k - 1) --k;
      if (k == 0) break;
      ++pick[static_cast<std::size_t>(k - 1)];
      for (int j = k; j < r; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return desc;
}

/// Wall-crossing for ordered points on P^1 with normalized weights w
/// (|w| = 2). Starting from the chamber where w_i + w_m > 1 for all i (m
/// the largest), every S ∋ m whose sign has turned negative is a crossed
/// wall. Valid for any generic w, regardless of |α|.
inline ModuliDescription wall_path_normalized(const std::vector<Rational>& w) {
  const int n = static_cast<int>(w.size());
  Rational total = 0;
  for (const auto& x : w) total += x;
  if (total != 2) throw Error(ErrorKind::InvalidArgument, "normalized weights must sum to 2");

  const auto order = detail::ascending_order(w);
  const int top = order.back();
  // Signatures are indexed by subsets containing the last slot, so move the
  // largest weight there.
  std::vector<Rational> permuted = w;
  std::swap(permuted[static_cast<std::size_t>(top)], permuted.back());
  auto to_original = [&](int slot) {
    if (slot == n - 1) return top;
    if (slot == top) return n - 1;
    return slot;
  };
  ChamberSignature sig = chamber_signs(permuted);
  ModuliDescription desc{n, n - 3, {}, std::vector<long long>(static_cast<std::size_t>(n - 2), 0)};
  for (const auto& [mask, s] : sig.signs) {
    if (s == 0) throw Error(ErrorKind::OnWall, "weights lie on a wall");
    if (std::popcount(mask) == 1 && s > 0)
      throw Error(ErrorKind::InvalidArgument, "largest weight exceeds 1: the moduli space is empty");
  }
  for (const auto& [mask, s] : sig.signs) {
    if (std::popcount(mask) < 2 || s > 0) continue;
    std::vector<int> I;
    for (int slot : mask_to_indices(mask, n)) I.push_back(to_original(slot - 1) + 1);
    desc.steps.push_back(detail::make_step(n, I));
  }
  detail::sort_steps(desc.steps, order);
  detail::add_block(desc.poincare, n - 2, +1);
  for (const auto& s : desc.steps) detail::apply_step(desc.poincare, s);
  return desc;
}

/// Runs both routes on α (|α| < 1) and w = 2α/|α| and compares them.
inline bool compare_descriptions(const WeightVector& alpha) {
  return wall_path(alpha) == wall_path_normalized(alpha.normalized());
}

/// Point on P^1: affine coordinate, or ∞.
struct ProjectivePoint {
  bool infinite = false;
  Rational x = 0;

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    return a.infinite == b.infinite && (a.infinite || a.x == b.x);
  }
};

inline ProjectivePoint parse_point(std::string_view text) {
  auto t = detail::trim(text);
  if (t == "inf" || t == "∞") return {true, 0};
  return {false, parse_rational(t)};
}

enum class Stability { Stable, StrictlySemistable, Unstable };

constexpr std::string_view to_string(Stability s) {
  switch (s) {
    case Stability::Stable: return "stable";
    case Stability::StrictlySemistable: return "strictly-semistable";
    case Stability::Unstable: return "unstable";
  }
  return "unknown";
}

/// Compares the largest weight concentrated at one point with 1.
inline Stability is_semistable(const std::vector<ProjectivePoint>& points, const std::vector<Rational>& w) {
  if (points.size() != w.size()) throw Error(ErrorKind::InvalidArgument, "need one weight per point");
  Rational total = 0;
  for (const auto& x : w) total += x;
  if (total != 2) throw Error(ErrorKind::InvalidArgument, "weights must satisfy |w| = 2");
  Rational worst = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    Rational mass = 0;
    for (std::size_t j = 0; j < points.size(); ++j)
      if (points[j] == points[i]) mass += w[j];
    worst = std::max(worst, mass);
  }
  if (worst < 1) return Stability::Stable;
  if (worst == 1) return Stability::StrictlySemistable;
  return Stability::Unstable;
}

}  // namespace polymod
