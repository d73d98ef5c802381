#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "polymod/chambers.hpp"

using namespace polymod;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

WeightVector weights(std::initializer_list<std::pair<long, long>> v) {
  std::vector<Rational> out;
  for (auto [a, b] : v) out.push_back(q(a, b));
  return WeightVector(out);
}

WeightVector repeated(long a, long b, int n) { return WeightVector(std::vector<Rational>(n, q(a, b))); }

// Oracle: every sign vector ε with Σ ε_i α_i ∈ Z, mapped to (I, k) by
// putting the − signs in I and keeping k ≥ 0 (and 1 ∈ I when k = 0).
std::set<std::pair<std::vector<int>, int>> brute_force_walls(const WeightVector& alpha) {
  const int n = alpha.size();
  std::set<std::pair<std::vector<int>, int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Rational s = 0;
    std::vector<int> I;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        s -= alpha[i];
        I.push_back(i + 1);
      } else {
        s += alpha[i];
      }
    }
    if (!is_integer(s) || s < 0) continue;
    if (s == 0 && (I.empty() || I.front() != 1)) continue;
    out.insert({I, s.convert_to<int>()});
  }
  return out;
}

std::set<std::pair<std::vector<int>, int>> as_set(const std::vector<Wall>& walls) {
  std::set<std::pair<std::vector<int>, int>> out;
  for (const auto& w : walls) out.insert({w.I, w.k});
  return out;
}

// Oracle: Hausmann–Knutson generating function for the polygon space,
//   P(q) (1 − q) = Σ_{K short, K ∋ m} (q^{|K|-1} − q^{n-|K|-1}),
// m the longest side, q = t². Division by 1 − q is a prefix sum.
std::vector<long long> short_set_betti(const WeightVector& alpha) {
  const int n = alpha.size();
  int m = 0;
  for (int i = 1; i < n; ++i)
    if (alpha[i] > alpha[m]) m = i;
  std::vector<long long> numer(static_cast<std::size_t>(n), 0);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!(mask & (1u << m))) continue;
    Rational s = 0;
    int size = 0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s += alpha[i], ++size;
    if (2 * s >= alpha.total()) continue;
    numer[static_cast<std::size_t>(size - 1)] += 1;
    numer[static_cast<std::size_t>(n - size - 1)] -= 1;
  }
  std::vector<long long> b;
  long long run = 0;
  for (int k = 0; k <= n - 3; ++k) b.push_back(run += numer[static_cast<std::size_t>(k)]);
  EXPECT_EQ(run + numer[static_cast<std::size_t>(n - 2)], 0) << "numerator not divisible by 1 - q";
  return b;
}

// Random generic rational α with |α| < 1 and nonempty moduli space
// (largest weight below the sum of the others).
WeightVector random_generic(std::mt19937_64& rng, int n) {
  for (;;) {
    std::uniform_int_distribution<long> den_dist(40, 400);
    long den = den_dist(rng);
    std::uniform_int_distribution<long> num_dist(1, den / 2 - 1);
    std::vector<Rational> v;
    Rational total = 0;
    for (int i = 0; i < n; ++i) {
      v.push_back(q(num_dist(rng), den));
      total += v.back();
    }
    if (total >= 1) {
      // Shrink into |α| < 1, staying inside (0, 1/2).
      Rational scale = q(9, 10) / total;
      for (auto& x : v) x *= scale;
    }
    WeightVector alpha(v);
    Rational largest = *std::max_element(v.begin(), v.end());
    if (2 * largest < alpha.total() && normalized_walls(alpha).empty()) return alpha;
  }
}

}  // namespace

TEST(Walls, QuarterWeightsHitBalancedPairs) {
  auto walls = walls_hit(repeated(1, 4, 4));
  EXPECT_NE(std::find(walls.begin(), walls.end(), Wall{{1, 2}, 0}), walls.end());
  EXPECT_NE(std::find(walls.begin(), walls.end(), Wall{{1, 3}, 0}), walls.end());
  EXPECT_NE(std::find(walls.begin(), walls.end(), Wall{{1, 4}, 0}), walls.end());
}

TEST(Walls, TenthsAreGeneric) {
  EXPECT_TRUE(walls_hit(repeated(1, 10, 5)).empty());
  EXPECT_TRUE(brute_force_walls(repeated(1, 10, 5)).empty());
}

TEST(Walls, UnitTotalGivesEmptySetWall) {
  auto walls = walls_hit(repeated(1, 5, 5));
  ASSERT_FALSE(walls.empty());
  EXPECT_EQ(walls.front(), (Wall{{}, 1}));
  EXPECT_TRUE(normalized_walls(repeated(1, 5, 5)).empty());
}

TEST(Walls, MatchBruteForceOnRandomSmallDenominators) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    int n = std::uniform_int_distribution<int>(3, 10)(rng);
    long den = std::uniform_int_distribution<long>(3, 12)(rng);
    std::vector<Rational> v;
    for (int i = 0; i < n; ++i) {
      long num = std::uniform_int_distribution<long>(1, (den - 1) / 2)(rng);
      if (2 * num >= den) num = 1;
      v.push_back(q(num, den));
    }
    WeightVector alpha(v);
    EXPECT_EQ(as_set(walls_hit(alpha)), brute_force_walls(alpha)) << alpha.str();
  }
}

TEST(Signature, EquilateralSignsBySize) {
  auto sig = chamber_signature(repeated(1, 5, 5));
  for (const auto& [mask, s] : sig.signs) {
    int size = std::popcount(mask);
    if (size <= 2)
      EXPECT_EQ(s, -1);
    else
      EXPECT_EQ(s, 1);
  }
  EXPECT_EQ(sig.signs.size(), 15u);  // S ∋ 5, 1 ≤ |S| ≤ 4
}

TEST(Signature, DistinguishedChamberPositiveBeyondSingletons) {
  auto alpha = weights({{3, 50}, {3, 50}, {3, 50}, {3, 50}, {1, 5}});
  auto sig = chamber_signature(alpha);
  for (const auto& [mask, s] : sig.signs) EXPECT_EQ(s, std::popcount(mask) == 1 ? -1 : 1);
  EXPECT_TRUE(in_distinguished_chamber(alpha));
}

TEST(Signature, OnWallThrows) {
  try {
    chamber_signature(repeated(1, 4, 4));
    FAIL() << "expected OnWall";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OnWall);
    EXPECT_NE(std::string(e.what()).find("{1,2}"), std::string::npos);
  }
}

TEST(Signature, ConstantAlongWallFreeSegments) {
  // Along γ(s) = α + s(β − α), each functional Σ_S γ − |γ|/2 is affine in s;
  // an exact root in [0, 1] means the segment meets that wall.
  std::mt19937_64 rng(5);
  int equal = 0, different = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int n = std::uniform_int_distribution<int>(4, 7)(rng);
    auto a = random_generic(rng, n);
    auto b = random_generic(rng, n);
    bool crosses = false;
    const unsigned top = 1u << (n - 1);
    for (unsigned rest = 0; rest < top && !crosses; ++rest) {
      unsigned s = rest | top;
      if (std::popcount(s) >= n) continue;
      Rational fa = -a.total() / 2, fb = -b.total() / 2;
      for (int i = 0; i < n; ++i)
        if (s & (1u << i)) fa += a[i], fb += b[i];
      if (fa == fb) continue;
      Rational root = fa / (fa - fb);
      crosses = root >= 0 && root <= 1;
    }
    bool same = chamber_signature(a) == chamber_signature(b);
    EXPECT_EQ(same, !crosses);
    (same ? equal : different) += 1;
  }
  EXPECT_GT(equal, 0);
  EXPECT_GT(different, 0);
}

TEST(WallPath, EquilateralFiveIsFourPointBlowUps) {
  auto d = wall_path_normalized(repeated(1, 5, 5).normalized());
  ASSERT_EQ(d.steps.size(), 4u);
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(d.steps[static_cast<std::size_t>(i)].kind, StepKind::BlowUpPoint);
    EXPECT_EQ(d.steps[static_cast<std::size_t>(i)].I, (std::vector<int>{i + 1, 5}));
  }
  EXPECT_EQ(d.poincare, (std::vector<long long>{1, 5, 1}));
}

TEST(WallPath, EquilateralNeedsSmallWeightOnParabolicSide) {
  try {
    wall_path(repeated(1, 5, 5));
    FAIL() << "expected NotSmallWeight";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSmallWeight);
  }
}

TEST(WallPath, ScaledEquilateralAgrees) {
  // Same chamber as 1/5×5 with |α| = 9/10 < 1.
  auto d = wall_path(repeated(9, 50, 5));
  EXPECT_EQ(d.steps.size(), 4u);
  EXPECT_EQ(d.poincare, (std::vector<long long>{1, 5, 1}));
  EXPECT_TRUE(compare_descriptions(repeated(9, 50, 5)));
}

TEST(WallPath, DistinguishedChamberIsProjectivePlane) {
  auto alpha = weights({{3, 50}, {3, 50}, {3, 50}, {3, 50}, {1, 5}});
  auto d = wall_path(alpha);
  EXPECT_TRUE(d.steps.empty());
  EXPECT_EQ(d.poincare, (std::vector<long long>{1, 1, 1}));
  EXPECT_TRUE(compare_descriptions(alpha));
}

TEST(WallPath, OnWallRejected) {
  try {
    wall_path(repeated(1, 5, 4));  // 1/5 + 1/5 = |α|/2
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OnWall);
  }
}

TEST(WallPath, SixPointsWithOneHeavyWeight) {
  // (1/8 ×5, 3/8) sits on walls such as 1/8 + 3/8 = 1/2; nudge it off.
  auto alpha = weights({{1, 8}, {1, 8}, {1, 8}, {1, 8}, {1, 8}, {3, 8}}).scaled(q(9, 10));
  ASSERT_FALSE(normalized_walls(alpha).empty());
  std::vector<Rational> v(alpha.exact());
  v[0] += q(1, 1000);
  v[1] += q(2, 1000);
  WeightVector nudged(v);
  ASSERT_TRUE(normalized_walls(nudged).empty());
  auto d = wall_path(nudged);
  // Each crossed subset is long in the start chamber and short at α.
  for (const auto& s : d.steps) {
    Rational sum = 0;
    for (int i : s.I) sum += nudged[i - 1];
    EXPECT_LT(2 * sum, nudged.total());
  }
  EXPECT_FALSE(d.steps.empty());
  EXPECT_EQ(d.poincare, short_set_betti(nudged));
}

TEST(WallPath, PoincareMatchesShortSetCountsOnRandomChambers) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    int n = std::uniform_int_distribution<int>(4, 9)(rng);
    auto alpha = random_generic(rng, n);
    auto d = wall_path(alpha);
    EXPECT_EQ(d.poincare, short_set_betti(alpha)) << alpha.str();
    // Palindromic of degree n - 3, nonnegative, P(1) > 0.
    auto p = d.poincare;
    EXPECT_EQ(p.size(), static_cast<std::size_t>(n - 2));
    EXPECT_TRUE(std::equal(p.begin(), p.end(), p.rbegin()));
    for (auto c : p) EXPECT_GE(c, 0);
    EXPECT_EQ(p.front(), 1);
  }
}

TEST(WallPath, EulerCharacteristicChangesByStepDelta) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    int n = std::uniform_int_distribution<int>(5, 8)(rng);
    auto alpha = random_generic(rng, n);
    auto d = wall_path(alpha);
    long long euler = n - 2;
    for (const auto& s : d.steps) euler += (s.inserted_dim + 1) - (s.removed_dim + 1);
    long long sum = 0;
    for (auto c : d.poincare) sum += c;
    EXPECT_EQ(sum, euler);
  }
}

TEST(WallPath, StepKindsAndDimensions) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int n = std::uniform_int_distribution<int>(4, 8)(rng);
    auto alpha = random_generic(rng, n);
    for (const auto& s : wall_path(alpha).steps) {
      const int r = static_cast<int>(s.I.size()) - 1;
      EXPECT_EQ(s.kind == StepKind::BlowUpPoint, r == 1);
      EXPECT_LE(static_cast<int>(s.I.size()), n - 2);
      EXPECT_EQ(s.removed_dim, r - 1);
      EXPECT_EQ(s.inserted_dim, n - r - 3);
      EXPECT_GE(s.inserted_dim, 0);
    }
  }
}

TEST(WallPath, CyclicRelabelingsKeepPoincare) {
  std::vector<Rational> base(5, q(9, 50));
  base[0] = q(7, 50);
  base[2] = q(11, 50);
  auto ref = wall_path(WeightVector(base)).poincare;
  for (int shift = 1; shift < 5; ++shift) {
    std::vector<Rational> v(5);
    for (int i = 0; i < 5; ++i) v[static_cast<std::size_t>((i + shift) % 5)] = base[static_cast<std::size_t>(i)];
    EXPECT_EQ(wall_path(WeightVector(v)).poincare, ref);
  }
}

TEST(WallPath, ReportsOriginalIndices) {
  // Largest weight at position 2.
  auto alpha = weights({{1, 10}, {1, 4}, {3, 25}, {2, 25}, {7, 50}});
  ASSERT_TRUE(normalized_walls(alpha).empty());
  ASSERT_FALSE(wall_path(alpha).steps.empty());
  for (const auto& s : wall_path(alpha).steps) EXPECT_TRUE(std::count(s.I.begin(), s.I.end(), 2));
}

TEST(CompareDescriptions, RandomGenericWeights) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    int n = std::uniform_int_distribution<int>(4, 8)(rng);
    EXPECT_TRUE(compare_descriptions(random_generic(rng, n)));
  }
}

TEST(Semistability, Examples) {
  std::vector<Rational> half(4, q(1, 2));
  EXPECT_EQ(is_semistable({{false, 0}, {false, 0}, {false, 1}, {true, 0}}, half), Stability::StrictlySemistable);
  EXPECT_EQ(is_semistable({{false, 0}, {false, 1}, {false, 2}, {true, 0}}, half), Stability::Stable);
  std::vector<Rational> w(5, q(2, 5));
  std::vector<ProjectivePoint> pts{parse_point("0"), parse_point("0"), parse_point("0"), parse_point("1"),
                                   parse_point("inf")};
  EXPECT_EQ(is_semistable(pts, w), Stability::Unstable);
  EXPECT_EQ(to_string(Stability::Unstable), "unstable");
}

TEST(Semistability, CoincidenceAtInfinityAndRationalPoints) {
  std::vector<Rational> w(5, q(2, 5));
  std::vector<ProjectivePoint> pts{parse_point("inf"), parse_point("inf"), parse_point("1/2"), parse_point("2/4"),
                                   parse_point("3")};
  EXPECT_EQ(is_semistable(pts, w), Stability::Stable);  // two points carry 4/5
  pts[4] = parse_point("1/2");
  EXPECT_EQ(is_semistable(pts, w), Stability::Unstable);
}

TEST(Semistability, RequiresUnitHalfTotal) {
  std::vector<Rational> w(3, q(1, 2));
  EXPECT_THROW(is_semistable({{false, 0}, {false, 1}, {true, 0}}, w), Error);
}
