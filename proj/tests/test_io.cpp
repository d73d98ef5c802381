#include <gtest/gtest.h>

#include <sstream>

#include "polymod/io.hpp"
#include "polymod/random.hpp"

using namespace polymod;

namespace {
Rational q(long a, long b = 1) { return make_rational(a, b); }
WeightVector repeated(long a, long b, int n) { return WeightVector(std::vector<Rational>(n, q(a, b))); }
}  // namespace

TEST(Format, Doubles) {
  EXPECT_EQ(format_double(-0.0), "0");
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(std::stod(format_double(0.1)), 0.1);
}

TEST(Json, PolytopeRoundTrip) {
  auto p = build_delta(caterpillar(5), repeated(1, 5, 5));
  Json j = to_json(p, true);
  EXPECT_EQ(j["dim"], 2);
  EXPECT_EQ(j["vertices"].size(), 5u);
  auto back = polytope_from_json(Json::parse(j.dump()));
  EXPECT_EQ(back.rows(), p.rows());
  EXPECT_EQ(back.rhs(), p.rhs());
  Json bad = j;
  bad["inequalities"][0].erase(0);
  EXPECT_THROW(polytope_from_json(bad), Error);
}

TEST(Json, ActionAngleRoundTrip) {
  ActionAngle aa{parse_tree(6, "1-2,3-4,1-4"), {0.1, 0.2, 0.3}, {1.0, -2.0, 0.25}};
  auto back = action_angle_from_json(Json::parse(to_json(aa).dump()), 6);
  EXPECT_EQ(back.tree, aa.tree);
  EXPECT_EQ(back.lengths, aa.lengths);
  EXPECT_EQ(back.angles, aa.angles);
}

TEST(Json, HolonomyRoundTrip) {
  auto rng = make_engine(1);
  auto alpha = repeated(1, 5, 5);
  auto t = sample_holonomy(alpha, caterpillar(5), rng);
  auto back = holonomy_from_json(Json::parse(to_json(t).dump()));
  ASSERT_EQ(back.g.size(), t.g.size());
  for (std::size_t i = 0; i < t.g.size(); ++i) EXPECT_LT(distance(back.g[i], t.g[i]), 1e-15);
  EXPECT_EQ(back.alpha.exact(), alpha.exact());
  Json bad = to_json(t);
  bad["g"][0] = Json::array({1.0, 0.0});
  EXPECT_THROW(holonomy_from_json(bad), Error);
}

TEST(Json, GoldmanAndChambers) {
  GoldmanVector u{caterpillar(5), {0.1, 0.2}};
  auto back = goldman_from_json(Json::parse(to_json(u).dump()), 5);
  EXPECT_EQ(back.u, u.u);
  EXPECT_EQ(to_json(Wall{{1, 2}, 0}).dump(), R"({"I":[1,2],"k":0})");
  auto d = wall_path(WeightVector({q(3, 50), q(3, 50), q(3, 50), q(3, 50), q(1, 5)}));
  EXPECT_EQ(to_json(d).dump(), R"({"n":5,"start_dim":2,"steps":[],"poincare":[1,1,1]})");
}

TEST(Csv, PolygonRows) {
  auto rng = make_engine(2);
  auto tree = caterpillar(5);
  EXPECT_EQ(polygon_csv_header(tree), "x1,y1,z1,x2,y2,z2,x3,y3,z3,x4,y4,z4,x5,y5,z5,phi_1-2,phi_1-3");
  Polygon p = sample_polygon(repeated(1, 5, 5), tree, rng);
  std::string row = polygon_csv_row(p, tree);
  EXPECT_EQ(std::count(row.begin(), row.end(), ','), 16);
  std::stringstream ss(row);
  std::string cell;
  std::vector<double> cells;
  while (std::getline(ss, cell, ',')) cells.push_back(std::stod(cell));
  EXPECT_EQ(cells[0], p.x[0].x);
  EXPECT_EQ(cells[16], bending_hamiltonian(p, tree.diagonals()[1]));
}

TEST(Csv, Sweep) { EXPECT_EQ(sweep_csv({{0.1, 0.5}, {0.05, 0.25}}), "t,defect\n0.10000000000000001,0.5\n0.050000000000000003,0.25\n"); }
