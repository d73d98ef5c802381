#pragma once

// Triangulations of the reference n-gon and their dual trivalent trees.
//
// Polygon vertices are v_0 … v_{n-1}; edge e_i runs from v_{i-1} to v_i
// (e_n closes v_{n-1} → v_0). A diagonal from v_{p} to v_{q} (p < q) covers
// the leaves p+1 … q, so every tree edge is stored as the interval of leaves
// on the side away from leaf n. Leaf n itself is the interval [1, n-1].

#include <algorithm>
#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polymod/error.hpp"

namespace polymod {

/// Leaf interval [first, last], 1-based, never containing leaf n except as
/// the root edge [1, n-1] which stands for leaf n.
struct Interval {
  int first = 1;
  int last = 1;

  int size() const { return last - first + 1; }
  bool contains(int leaf) const { return first <= leaf && leaf <= last; }
  bool contains(const Interval& o) const { return first <= o.first && o.last <= last; }
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// Internal edge of a triangulation: a cyclic leaf interval of length
/// 2 … n-2, stored as the representative that avoids leaf n.
class Diagonal {
 public:
  Diagonal() = default;

  /// Cyclic interval start … end (1-based, wrapping mod n); either of the
  /// two complementary intervals names the same diagonal.
  static Diagonal from_cyclic(int n, int start, int end) {
    if (n < 4) throw Error(ErrorKind::InvalidArgument, "no diagonals for n < 4");
    if (start < 1 || start > n || end < 1 || end > n)
      throw Error(ErrorKind::InvalidArgument, "leaf index out of range");
    int length = ((end - start) % n + n) % n + 1;
    if (length < 2 || length > n - 2)
      throw Error(ErrorKind::InvalidArgument,
                  "diagonal " + std::to_string(start) + "-" + std::to_string(end) +
                      " must cover 2 .. n-2 leaves");
    bool has_root = start > end || end == n;
    Diagonal d;
    d.n_ = n;
    if (!has_root) {
      d.iv_ = {start, end};
    } else {
      int s = end % n + 1;
      int e = (start + n - 2) % n + 1;
      d.iv_ = {s, e};
    }
    return d;
  }

  int n() const { return n_; }
  const Interval& interval() const { return iv_; }
  int first() const { return iv_.first; }
  int last() const { return iv_.last; }

  /// Leaves of the complementary interval (contains leaf n).
  std::vector<int> complement_leaves() const {
    std::vector<int> out;
    for (int j = 1; j <= n_; ++j)
      if (!iv_.contains(j)) out.push_back(j);
    return out;
  }

  std::string str() const { return std::to_string(iv_.first) + "-" + std::to_string(iv_.last); }

  friend bool operator==(const Diagonal& a, const Diagonal& b) { return a.n_ == b.n_ && a.iv_ == b.iv_; }
  friend auto operator<=>(const Diagonal& a, const Diagonal& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.iv_ <=> b.iv_;
  }

 private:
  int n_ = 0;
  Interval iv_{};
};

/// True when the two chords meet in the interior of the reference polygon.
inline bool crosses(const Diagonal& a, const Diagonal& b) {
  const Interval& x = a.interval();
  const Interval& y = b.interval();
  bool disjoint = x.last < y.first || y.last < x.first;
  return !disjoint && !x.contains(y) && !y.contains(x);
}

/// A pair of pants: the edge towards leaf n and the two edges away from it.
/// Leaves sets satisfy parent = left ∪ right.
struct Node {
  Interval parent;
  Interval left;
  Interval right;
};

class TrivalentTree {
 public:
  TrivalentTree(int n, std::vector<Diagonal> diagonals) : n_(n), diagonals_(std::move(diagonals)) {
    if (n < 3) throw Error(ErrorKind::InvalidArgument, "trees need n >= 3 leaves");
    if (static_cast<int>(diagonals_.size()) != n - 3)
      throw Error(ErrorKind::InvalidArgument, "a triangulation of an n-gon has exactly n-3 diagonals");
    std::sort(diagonals_.begin(), diagonals_.end());
    for (std::size_t i = 0; i < diagonals_.size(); ++i) {
      if (diagonals_[i].n() != n) throw Error(ErrorKind::InvalidArgument, "diagonal built for another n");
      if (i > 0 && diagonals_[i] == diagonals_[i - 1])
        throw Error(ErrorKind::InvalidArgument, "repeated diagonal " + diagonals_[i].str());
      for (std::size_t j = 0; j < i; ++j)
        if (crosses(diagonals_[i], diagonals_[j]))
          throw Error(ErrorKind::InvalidArgument,
                      "diagonals " + diagonals_[j].str() + " and " + diagonals_[i].str() + " cross");
    }
    build_nodes();
  }

  int n() const { return n_; }
  const std::vector<Diagonal>& diagonals() const { return diagonals_; }

  /// Pants ordered so that every node comes after the node above it; the
  /// first node is the one adjacent to leaf n.
  const std::vector<Node>& nodes() const { return nodes_; }

  Interval root_edge() const { return {1, n_ - 1}; }
  bool is_leaf_edge(const Interval& e) const { return e.first == e.last || e == root_edge(); }
  int leaf_of(const Interval& e) const { return e == root_edge() ? n_ : e.first; }

  /// Position of an internal edge in diagonals(), or -1 for leaf edges.
  int diagonal_index(const Interval& e) const {
    if (is_leaf_edge(e)) return -1;
    for (std::size_t i = 0; i < diagonals_.size(); ++i)
      if (diagonals_[i].interval() == e) return static_cast<int>(i);
    throw Error(ErrorKind::InvalidArgument, "edge is not part of this tree");
  }

  std::string str() const {
    std::string out;
    for (const auto& d : diagonals_) {
      if (!out.empty()) out += ',';
      out += d.str();
    }
    return out;
  }

  friend bool operator==(const TrivalentTree& a, const TrivalentTree& b) {
    return a.n_ == b.n_ && a.diagonals_ == b.diagonals_;
  }

 private:
  void build_nodes() {
    // Chords as vertex pairs (p, q): polygon sides plus diagonals.
    std::set<std::pair<int, int>> chords;
    for (int i = 1; i < n_; ++i) chords.insert({i - 1, i});
    chords.insert({0, n_ - 1});
    for (const auto& d : diagonals_) chords.insert({d.first() - 1, d.last()});

    std::vector<std::pair<int, int>> stack{{0, n_ - 1}};
    while (!stack.empty()) {
      auto [p, r] = stack.back();
      stack.pop_back();
      int apex = -1;
      for (int q = p + 1; q < r; ++q)
        if (chords.count({p, q}) && chords.count({q, r})) {
          apex = q;
          break;
        }
      if (apex < 0) throw Error(ErrorKind::InvalidArgument, "diagonals do not triangulate the polygon");
      nodes_.push_back({{p + 1, r}, {p + 1, apex}, {apex + 1, r}});
      // Push right first so the left subtree is emitted first.
      if (r - apex >= 2) stack.push_back({apex, r});
      if (apex - p >= 2) stack.push_back({p, apex});
    }
  }

  int n_;
  std::vector<Diagonal> diagonals_;
  std::vector<Node> nodes_;
};

/// Diagonals [1..2], [1..3], …, [1..n-2].
inline TrivalentTree caterpillar(int n) {
  std::vector<Diagonal> ds;
  for (int k = 2; k <= n - 2; ++k) ds.push_back(Diagonal::from_cyclic(n, 1, k));
  return TrivalentTree(n, std::move(ds));
}

namespace detail {

using ChordSet = std::vector<std::pair<int, int>>;

inline std::vector<ChordSet> triangulate_range(int p, int r) {
  if (r - p < 2) return {ChordSet{}};
  std::vector<ChordSet> out;
  for (int q = p + 1; q < r; ++q) {
    auto lhs = triangulate_range(p, q);
    auto rhs = triangulate_range(q, r);
    for (const auto& a : lhs)
      for (const auto& b : rhs) {
        ChordSet c = a;
        c.insert(c.end(), b.begin(), b.end());
        if (q - p >= 2) c.push_back({p, q});
        if (r - q >= 2) c.push_back({q, r});
        out.push_back(std::move(c));
      }
  }
  return out;
}

}  // namespace detail

/// All Catalan(n-2) triangulations of the n-gon.
inline std::vector<TrivalentTree> enumerate_trees(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "n must be at least 3");
  if (n > 10) throw Error(ErrorKind::LimitExceeded, "tree enumeration is limited to n <= 10");
  std::vector<TrivalentTree> out;
  for (const auto& chords : detail::triangulate_range(0, n - 1)) {
    std::vector<Diagonal> ds;
    for (auto [p, q] : chords) ds.push_back(Diagonal::from_cyclic(n, p + 1, q));
    out.emplace_back(n, std::move(ds));
  }
  return out;
}

/// Per-node triples of incident edges.
inline const std::vector<Node>& node_incidences(const TrivalentTree& tree) { return tree.nodes(); }

/// Parses "a-b,c-d,…" (cyclic intervals, 1-based). Empty text is the
/// unique tree for n = 3.
inline TrivalentTree parse_tree(int n, std::string_view text) {
  std::vector<Diagonal> ds;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string item(text.substr(pos, comma - pos));
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    auto dash = item.find('-');
    if (dash == std::string::npos) throw Error(ErrorKind::ParseError, "expected 'a-b' in '" + item + "'");
    int a = 0, b = 0;
    try {
      std::size_t used_a = 0, used_b = 0;
      a = std::stoi(item.substr(0, dash), &used_a);
      b = std::stoi(item.substr(dash + 1), &used_b);
      if (used_a != dash || used_b != item.size() - dash - 1) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad diagonal '" + item + "'");
    }
    try {
      ds.push_back(Diagonal::from_cyclic(n, a, b));
    } catch (const Error& e) {
      throw Error(ErrorKind::ParseError, e.what());
    }
    pos = comma + 1;
  }
  try {
    return TrivalentTree(n, std::move(ds));
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

}  // namespace polymod
