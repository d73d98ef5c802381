#pragma once

// Exact linear programming over the rationals: a dense two-phase simplex
// with Bland's rule. Problem sizes here are tiny (≤ 8 variables, a few dozen
// rows), so clarity wins over speed.

#include <cstddef>
#include <vector>

#include "polymod/rational.hpp"

namespace polymod {

/// Inequality system A x ≤ b with free variables.
struct LinearSystem {
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  std::size_t dim = 0;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value = 0;
  std::vector<Rational> point;
};

namespace detail {

// Standard form: maximise c·y subject to M y = b, y ≥ 0, b ≥ 0.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> m, std::vector<Rational> b)
      : m_(std::move(m)), b_(std::move(b)), rows_(m_.size()), cols_(m_.empty() ? 0 : m_[0].size()) {}

  bool phase_one() {
    // Artificial columns cols_ … cols_ + rows_ - 1.
    for (std::size_t i = 0; i < rows_; ++i) {
      m_[i].resize(cols_ + rows_, Rational(0));
      m_[i][cols_ + i] = 1;
    }
    basis_.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) basis_[i] = cols_ + i;
    std::vector<Rational> cost(cols_ + rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i) cost[cols_ + i] = -1;
    run(cost, cols_ + rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      if (basis_[i] >= cols_ && b_[i] != 0) return false;
    // Zero-valued artificials left in the basis are pivoted out when possible;
    // rows where that fails are redundant and harmless.
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < cols_) continue;
      for (std::size_t j = 0; j < cols_; ++j)
        if (m_[i][j] != 0) {
          pivot(i, j);
          break;
        }
    }
    for (auto& row : m_) row.resize(cols_);
    return true;
  }

  // Returns false when unbounded.
  bool phase_two(const std::vector<Rational>& cost) { return run(cost, cols_); }

  std::vector<Rational> solution() const {
    std::vector<Rational> y(cols_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
      if (basis_[i] < cols_) y[basis_[i]] = b_[i];
    return y;
  }

 private:
  void pivot(std::size_t r, std::size_t c) {
    auto& prow = m_[r];
    Rational p = prow[c];
    for (auto& v : prow) v /= p;
    b_[r] /= p;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      auto& row = m_[i];
      Rational f = row[c];
      if (f == 0) continue;
      for (std::size_t j = 0; j < row.size(); ++j)
        if (prow[j] != 0) row[j] -= f * prow[j];
      b_[i] -= f * b_[r];
    }
    basis_[r] = c;
  }

  Rational basic_cost(const std::vector<Rational>& cost, std::size_t i) const {
    return basis_[i] < cost.size() ? cost[basis_[i]] : Rational(0);
  }

  bool run(const std::vector<Rational>& cost, std::size_t ncols) {
    for (;;) {
      std::size_t enter = ncols;
      for (std::size_t j = 0; j < ncols && enter == ncols; ++j) {
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < rows_; ++i)
          if (m_[i][j] != 0) reduced -= basic_cost(cost, i) * m_[i][j];
        if (reduced > 0) enter = j;
      }
      if (enter == ncols) return true;

      std::size_t leave = rows_;
      Rational best;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (m_[i][enter] <= 0) continue;
        Rational ratio = b_[i] / m_[i][enter];
        if (leave == rows_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows_) return false;
      pivot(leave, enter);
    }
  }

  std::vector<std::vector<Rational>> m_;
  std::vector<Rational> b_;
  std::vector<std::size_t> basis_;
  std::size_t rows_;
  std::size_t cols_;
};

}  // namespace detail

/// Maximise objective·x subject to sys (x free). An empty objective makes
/// this a pure feasibility query.
inline LpResult lp_maximize(const LinearSystem& sys, const std::vector<Rational>& objective) {
  const std::size_t d = sys.dim;
  const std::size_t m = sys.rows.size();
  LpResult result;

  if (m == 0) {
    bool zero = true;
    for (const auto& c : objective) zero = zero && c == 0;
    result.status = zero ? LpStatus::Optimal : LpStatus::Unbounded;
    result.point.assign(d, Rational(0));
    return result;
  }

  // x = x⁺ − x⁻ and one slack per row: [A, −A, I] (x⁺, x⁻, s) = b.
  const std::size_t cols = 2 * d + m;
  std::vector<std::vector<Rational>> mat(m, std::vector<Rational>(cols, Rational(0)));
  std::vector<Rational> b(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      mat[i][j] = sys.rows[i][j];
      mat[i][d + j] = -sys.rows[i][j];
    }
    mat[i][2 * d + i] = 1;
    b[i] = sys.rhs[i];
    if (b[i] < 0) {
      for (auto& v : mat[i]) v = -v;
      b[i] = -b[i];
    }
  }

  detail::Tableau tab(std::move(mat), std::move(b));
  if (!tab.phase_one()) return result;

  std::vector<Rational> cost(cols, Rational(0));
  for (std::size_t j = 0; j < d && j < objective.size(); ++j) {
    cost[j] = objective[j];
    cost[d + j] = -objective[j];
  }
  if (!tab.phase_two(cost)) {
    result.status = LpStatus::Unbounded;
    return result;
  }
  auto y = tab.solution();
  result.status = LpStatus::Optimal;
  result.point.resize(d);
  for (std::size_t j = 0; j < d; ++j) result.point[j] = y[j] - y[d + j];
  for (std::size_t j = 0; j < d && j < objective.size(); ++j) result.value += objective[j] * result.point[j];
  return result;
}

inline bool lp_feasible(const LinearSystem& sys) { return lp_maximize(sys, {}).status != LpStatus::Infeasible; }

}  // namespace polymod
