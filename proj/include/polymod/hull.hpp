#pragma once

// Volumes of convex hulls of floating-point samples in dimension ≤ 3, used
// to check that sampled moment-map images fill their polytope.

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <utility>
#include <vector>

#include "polymod/error.hpp"

namespace polymod {

using PointCloud = std::vector<std::vector<double>>;

namespace detail {

inline double hull_area_2d(PointCloud pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return 0.0;
  auto turn = [](const std::vector<double>& o, const std::vector<double>& a, const std::vector<double>& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  // Andrew's monotone chain.
  std::vector<std::vector<double>> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && turn(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && turn(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  double area = 0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& a = hull[i];
    const auto& b = hull[(i + 1) % hull.size()];
    area += a[0] * b[1] - a[1] * b[0];
  }
  return std::abs(area) / 2;
}

using P3 = std::array<double, 3>;

inline P3 sub(const P3& a, const P3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline P3 cross3(const P3& a, const P3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline double dot3(const P3& a, const P3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline double orient(const P3& a, const P3& b, const P3& c, const P3& d) {
  return dot3(cross3(sub(b, a), sub(c, a)), sub(d, a));
}

// Incremental hull; faces are index triples oriented outward.
inline double hull_volume_3d(const PointCloud& cloud) {
  std::vector<P3> pts;
  for (const auto& p : cloud) pts.push_back({p[0], p[1], p[2]});
  if (pts.size() < 4) return 0.0;

  double scale = 0;
  for (const auto& p : pts)
    for (double v : p) scale = std::max(scale, std::abs(v));
  const double eps = 1e-12 * std::max(scale, 1.0) * std::max(scale, 1.0) * std::max(scale, 1.0);

  // Initial tetrahedron: extreme point, farthest point, farthest from the
  // line, farthest from the plane.
  std::size_t i0 = 0, i1 = 0, i2 = 0, i3 = 0;
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i] < pts[i0]) i0 = i;
  double best = -1;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto d = sub(pts[i], pts[i0]);
    if (dot3(d, d) > best) best = dot3(d, d), i1 = i;
  }
  best = -1;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto c = cross3(sub(pts[i1], pts[i0]), sub(pts[i], pts[i0]));
    if (dot3(c, c) > best) best = dot3(c, c), i2 = i;
  }
  best = -1;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    double v = std::abs(orient(pts[i0], pts[i1], pts[i2], pts[i]));
    if (v > best) best = v, i3 = i;
  }
  if (best <= eps) return 0.0;

  std::vector<std::array<std::size_t, 3>> faces;
  auto add_face = [&](std::size_t a, std::size_t b, std::size_t c, const P3& inside) {
    if (orient(pts[a], pts[b], pts[c], inside) > 0) std::swap(b, c);
    faces.push_back({a, b, c});
  };
  P3 centre{};
  for (std::size_t i : {i0, i1, i2, i3})
    for (int k = 0; k < 3; ++k) centre[static_cast<std::size_t>(k)] += pts[i][static_cast<std::size_t>(k)] / 4;
  add_face(i0, i1, i2, centre);
  add_face(i0, i1, i3, centre);
  add_face(i0, i2, i3, centre);
  add_face(i1, i2, i3, centre);

  for (std::size_t p = 0; p < pts.size(); ++p) {
    if (p == i0 || p == i1 || p == i2 || p == i3) continue;
    std::vector<char> visible(faces.size(), 0);
    bool any = false;
    for (std::size_t f = 0; f < faces.size(); ++f)
      if (orient(pts[faces[f][0]], pts[faces[f][1]], pts[faces[f][2]], pts[p]) > eps) visible[f] = 1, any = true;
    if (!any) continue;

    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t f = 0; f < faces.size(); ++f)
      if (visible[f])
        for (int e = 0; e < 3; ++e)
          edges.emplace(faces[f][static_cast<std::size_t>(e)], faces[f][static_cast<std::size_t>((e + 1) % 3)]);

    std::vector<std::array<std::size_t, 3>> kept;
    for (std::size_t f = 0; f < faces.size(); ++f)
      if (!visible[f]) kept.push_back(faces[f]);
    for (const auto& [a, b] : edges)
      if (!edges.count({b, a})) kept.push_back({a, b, p});  // horizon edge keeps its orientation
    faces = std::move(kept);
  }

  double vol = 0;
  for (const auto& f : faces) vol += orient(centre, pts[f[0]], pts[f[1]], pts[f[2]]);
  return std::abs(vol) / 6;
}

}  // namespace detail

/// Volume of the convex hull of points in R^d, d ≤ 3 (d = 0 counts as 1).
inline double hull_volume(const PointCloud& pts) {
  if (pts.empty()) return 0.0;
  const std::size_t d = pts.front().size();
  for (const auto& p : pts)
    if (p.size() != d) throw Error(ErrorKind::InvalidArgument, "points of mixed dimension");
  switch (d) {
    case 0: return 1.0;
    case 1: {
      auto [lo, hi] = std::minmax_element(pts.begin(), pts.end());
      return (*hi)[0] - (*lo)[0];
    }
    case 2: return detail::hull_area_2d(pts);
    case 3: return detail::hull_volume_3d(pts);
    default: throw Error(ErrorKind::DimTooLarge, "hull volume supports dimension <= 3");
  }
}

}  // namespace polymod
