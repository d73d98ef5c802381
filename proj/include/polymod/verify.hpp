#pragma once

// Numerical property suites: flow commutation, polytope image of the
// Goldman system, and the small-weight Goldman/bending comparison.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "polymod/holonomy.hpp"
#include "polymod/polygons.hpp"
#include "polymod/polytopes.hpp"
#include "polymod/random.hpp"
#include "polymod/trees.hpp"
#include "polymod/weights.hpp"

namespace polymod {

/// Least-squares slope of log y against log x.
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double m = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx, sy += ly, sxx += lx * lx, sxy += lx * ly;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

struct VerifyConfig {
  std::uint64_t seed = 42;
  std::size_t samples = 1000;
  double commute_step = 1e-2;
  double tol_commute = 1e-5;
  double tol_image = 1e-9;
  double tol_goldman = 0.02;
  double min_slope = 0.8;
  double slope_fraction = 0.9;
  std::vector<double> sweep = {0.1, 0.05, 0.025};
};

struct SuiteResult {
  std::string name;
  bool skipped = false;
  bool passed = false;
  double measured = 0;
  double tolerance = 0;
  std::size_t checks = 0;
  std::string note;
};

struct VerifyReport {
  std::vector<SuiteResult> suites;

  bool passed() const {
    for (const auto& s : suites)
      if (!s.skipped && !s.passed) return false;
    return true;
  }
};

/// Max distance between the two orders of bending flows over pairs of
/// distinct diagonals of the tree.
inline SuiteResult commutation_suite(const WeightVector& alpha, const TrivalentTree& tree, const VerifyConfig& cfg) {
  SuiteResult r{"commutation", false, false, 0, cfg.tol_commute, 0, ""};
  auto rng = make_engine(cfg.seed, 1);
  const auto& ds = tree.diagonals();
  PolygonSampler sampler(alpha, tree);
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    Polygon p = sampler(rng);
    for (std::size_t i = 0; i < ds.size(); ++i)
      for (std::size_t j = i + 1; j < ds.size(); ++j) {
        r.measured = std::max(r.measured, poisson_bracket_fd(p, ds[i], ds[j], cfg.commute_step));
        ++r.checks;
      }
  }
  if (r.checks == 0) r.note = "tree has a single diagonal";
  r.passed = r.measured <= r.tolerance;
  return r;
}

/// Goldman vectors of sampled holonomy tuples must lie in Δ_Γ(α); measured
/// is the worst triangle-inequality violation. Tuples must also close.
inline SuiteResult image_suite(const WeightVector& alpha, const TrivalentTree& tree, const VerifyConfig& cfg) {
  SuiteResult r{"image", false, false, 0, cfg.tol_image, 0, ""};
  HPolytope delta = build_delta(tree, alpha);
  auto rng = make_engine(cfg.seed, 2);
  HolonomySampler sampler(alpha, tree);
  double worst_tuple = 0;
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    HolonomyTuple t = sampler(rng).tuple;
    GoldmanVector u = goldman_vector(t, tree);
    r.measured = std::max(r.measured, -delta.min_slack(u.u));
    worst_tuple = std::max(worst_tuple, holonomy_defect(t));
    ++r.checks;
  }
  if (worst_tuple > 1e-9) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "tuple defect %.3e", worst_tuple);
    r.note = buf;
  }
  r.passed = r.measured <= r.tolerance && worst_tuple <= 1e-9;
  return r;
}

/// (1/t) θ(exp(t x)) against φ(x) over the configured t sweep.
inline SuiteResult goldman_bending_suite(const WeightVector& alpha, const TrivalentTree& tree,
                                         const VerifyConfig& cfg) {
  SuiteResult r{"goldman-bending", false, false, 0, cfg.tol_goldman, 0, ""};
  auto rng = make_engine(cfg.seed, 3);
  std::size_t steep = 0;
  PolygonSampler sampler(alpha, tree);
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    Polygon p = sampler(rng);
    std::vector<double> defects;
    for (double t : cfg.sweep) defects.push_back(compare_goldman_bending(p, tree, t));
    r.measured = std::max(r.measured, defects.back());
    bool exact = true;
    for (double d : defects) exact = exact && d < 1e-15;
    if (exact || loglog_slope(cfg.sweep, defects) >= cfg.min_slope) ++steep;
    ++r.checks;
  }
  double frac = r.checks ? static_cast<double>(steep) / static_cast<double>(r.checks) : 1.0;
  char buf[96];
  std::snprintf(buf, sizeof buf, "slope >= %.2f for %.1f%% of polygons", cfg.min_slope, 100 * frac);
  r.note = buf;
  r.passed = r.measured <= r.tolerance && frac >= cfg.slope_fraction;
  return r;
}

/// All suites; the Goldman/bending identification needs |α| < 1.
inline VerifyReport run_verification(const WeightVector& alpha, const TrivalentTree& tree, const VerifyConfig& cfg) {
  VerifyReport report;
  report.suites.push_back(commutation_suite(alpha, tree, cfg));
  report.suites.push_back(image_suite(alpha, tree, cfg));
  if (alpha.total() < 1)
    report.suites.push_back(goldman_bending_suite(alpha, tree, cfg));
  else
    report.suites.push_back({"goldman-bending", true, false, 0, 0, 0, "skipped: identification needs |alpha| < 1"});
  return report;
}

inline std::string format_suite(const SuiteResult& s) {
  char buf[256];
  if (s.skipped) {
    std::snprintf(buf, sizeof buf, "%-16s SKIP  %s", s.name.c_str(), s.note.c_str());
  } else {
    std::snprintf(buf, sizeof buf, "%-16s %s  measured %.3e  tolerance %.3e  checks %zu%s%s", s.name.c_str(),
                  s.passed ? "PASS" : "FAIL", s.measured, s.tolerance, s.checks, s.note.empty() ? "" : "  ",
                  s.note.c_str());
  }
  return buf;
}

}  // namespace polymod
