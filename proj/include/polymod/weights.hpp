#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "polymod/error.hpp"
#include "polymod/rational.hpp"

namespace polymod {

/// Stability parameter α ∈ (0, 1/2)^n held as exact rationals.
class WeightVector {
 public:
  explicit WeightVector(std::vector<Rational> alpha) : alpha_(std::move(alpha)) {
    if (alpha_.size() < 3) throw Error(ErrorKind::InvalidArgument, "need at least 3 weights");
    const Rational half(1, 2);
    for (std::size_t i = 0; i < alpha_.size(); ++i) {
      if (alpha_[i] <= 0 || alpha_[i] >= half)
        throw Error(ErrorKind::InvalidArgument,
                    "weight " + std::to_string(i + 1) + " = " + to_string(alpha_[i]) + " is not in (0, 1/2)");
      total_ += alpha_[i];
      values_.push_back(to_double(alpha_[i]));
    }
  }

  static WeightVector parse(std::string_view text) { return WeightVector(parse_rational_list(text)); }

  int size() const { return static_cast<int>(alpha_.size()); }
  const std::vector<Rational>& exact() const { return alpha_; }
  const Rational& operator[](int i) const { return alpha_[static_cast<std::size_t>(i)]; }
  /// 0-based floating-point copy.
  const std::vector<double>& values() const { return values_; }
  double value(int i) const { return values_[static_cast<std::size_t>(i)]; }

  /// |α| = Σ α_i.
  const Rational& total() const { return total_; }

  /// w = 2α/|α|, so that Σ w_i = 2.
  std::vector<Rational> normalized() const {
    std::vector<Rational> w;
    w.reserve(alpha_.size());
    for (const auto& a : alpha_) w.push_back(2 * a / total_);
    return w;
  }

  WeightVector scaled(const Rational& t) const {
    std::vector<Rational> out;
    for (const auto& a : alpha_) out.push_back(a * t);
    return WeightVector(std::move(out));
  }

  std::string str() const {
    std::string out;
    for (const auto& a : alpha_) {
      if (!out.empty()) out += ',';
      out += to_string(a);
    }
    return out;
  }

 private:
  std::vector<Rational> alpha_;
  std::vector<double> values_;
  Rational total_ = 0;
};

}  // namespace polymod
