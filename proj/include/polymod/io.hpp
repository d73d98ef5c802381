#pragma once

// JSON and CSV encodings. Rationals are written as "p/q" strings so that
// exact data survives a round trip; floats use %.17g.

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "polymod/chambers.hpp"
#include "polymod/holonomy.hpp"
#include "polymod/polygons.hpp"
#include "polymod/polytopes.hpp"

namespace polymod {

using Json = nlohmann::ordered_json;

inline std::string format_double(double x) {
  if (x == 0) x = 0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline Json rational_list(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

inline std::vector<Rational> parse_rational_json(const Json& j) {
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(parse_rational(x.get<std::string>()));
  return out;
}

// ---- chambers

inline Json to_json(const Wall& w) { return Json{{"I", w.I}, {"k", w.k}}; }

inline Json to_json(const ChamberSignature& sig) {
  Json out = Json::array();
  for (const auto& [mask, s] : sig.signs)
    out.push_back(Json{{"S", mask_to_indices(mask, sig.n)}, {"sign", s > 0 ? "+" : s < 0 ? "-" : "0"}});
  return out;
}

inline Json to_json(const BirationalStep& s) {
  return Json{{"kind", s.kind == StepKind::BlowUpPoint ? "BlowUpPoint" : "Flip"},
              {"I", s.I},
              {"removed_dim", s.removed_dim},
              {"inserted_dim", s.inserted_dim},
              {"contracts_divisor", s.contracts_divisor}};
}

inline Json to_json(const ModuliDescription& d) {
  Json steps = Json::array();
  for (const auto& s : d.steps) steps.push_back(to_json(s));
  return Json{{"n", d.n}, {"start_dim", d.start_dim}, {"steps", steps}, {"poincare", d.poincare}};
}

// ---- polytopes

inline Json to_json(const HPolytope& p, bool with_vertices) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    Json row = rational_list(p.rows()[i]);
    row.push_back(to_string(p.rhs()[i]));
    rows.push_back(std::move(row));
  }
  Json out{{"dim", p.dim()}, {"inequalities", rows}};
  if (with_vertices) {
    Json vs = Json::array();
    for (const auto& v : vertices(p)) vs.push_back(rational_list(v));
    out["vertices"] = vs;
  }
  return out;
}

inline HPolytope polytope_from_json(const Json& j) {
  HPolytope p(j.at("dim").get<std::size_t>());
  for (const auto& row : j.at("inequalities")) {
    auto values = parse_rational_json(row);
    if (values.size() != p.dim() + 1) throw Error(ErrorKind::ParseError, "inequality has the wrong length");
    Rational rhs = values.back();
    values.pop_back();
    p.add(std::move(values), rhs);
  }
  return p;
}

// ---- polygons and holonomy

inline Json to_json(const ActionAngle& aa) {
  return Json{{"tree", aa.tree.str()}, {"lengths", aa.lengths}, {"angles", aa.angles}};
}

inline ActionAngle action_angle_from_json(const Json& j, int n) {
  return {parse_tree(n, j.at("tree").get<std::string>()), j.at("lengths").get<std::vector<double>>(),
          j.at("angles").get<std::vector<double>>()};
}

inline Json to_json(const HolonomyTuple& t) {
  Json g = Json::array();
  for (const auto& q : t.g) g.push_back({q.w(), q.vec().x, q.vec().y, q.vec().z});
  return Json{{"alpha", rational_list(t.alpha.exact())}, {"g", g}};
}

inline HolonomyTuple holonomy_from_json(const Json& j) {
  HolonomyTuple t{{}, WeightVector(parse_rational_json(j.at("alpha")))};
  for (const auto& q : j.at("g")) {
    auto c = q.get<std::vector<double>>();
    if (c.size() != 4) throw Error(ErrorKind::ParseError, "quaternions have four components");
    t.g.emplace_back(c[0], c[1], c[2], c[3]);
  }
  return t;
}

inline Json to_json(const GoldmanVector& u) { return Json{{"tree", u.tree.str()}, {"u", u.u}}; }

inline GoldmanVector goldman_from_json(const Json& j, int n) {
  return {parse_tree(n, j.at("tree").get<std::string>()), j.at("u").get<std::vector<double>>()};
}

// ---- CSV

/// Header for polygon rows: x1,y1,z1,…, then one column per diagonal.
inline std::string polygon_csv_header(const TrivalentTree& tree) {
  std::string out;
  for (int i = 1; i <= tree.n(); ++i) {
    for (const char* c : {"x", "y", "z"}) out += std::string(out.empty() ? "" : ",") + c + std::to_string(i);
  }
  for (const auto& d : tree.diagonals()) out += ",phi_" + d.str();
  return out;
}

inline std::string polygon_csv_row(const Polygon& p, const TrivalentTree& tree) {
  std::string out;
  for (const auto& v : p.x)
    for (double c : {v.x, v.y, v.z}) out += (out.empty() ? "" : ",") + format_double(c);
  for (const auto& d : tree.diagonals()) out += "," + format_double(bending_hamiltonian(p, d));
  return out;
}

inline std::string sweep_csv(const std::vector<std::pair<double, double>>& rows) {
  std::string out = "t,defect\n";
  for (const auto& [t, d] : rows) out += format_double(t) + "," + format_double(d) + "\n";
  return out;
}

}  // namespace polymod
