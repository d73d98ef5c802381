// Command-line front end. Exit codes: 0 ok, 1 verification failure,
// 2 parameter on a wall, 3 usage or domain error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "polymod/chambers.hpp"
#include "polymod/holonomy.hpp"
#include "polymod/io.hpp"
#include "polymod/polygons.hpp"
#include "polymod/polytopes.hpp"
#include "polymod/random.hpp"
#include "polymod/trees.hpp"
#include "polymod/verify.hpp"

using namespace polymod;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitOnWall = 2;
constexpr int kExitUsage = 3;

struct Globals {
  std::uint64_t seed = 42;
  std::string format;  // empty: subcommand default
  std::string out;
};

struct Output {
  std::string text;
  int code = kExitOk;
};

TrivalentTree tree_or_default(int n, const std::string& spec) {
  if (spec.empty()) return caterpillar(n);
  return parse_tree(n, spec);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---- chambers

Output cmd_chambers(const std::string& alpha_text, const std::string& format) {
  WeightVector alpha = WeightVector::parse(alpha_text);
  Json walls = Json::array();
  auto all_walls = walls_hit(alpha);
  for (const auto& w : all_walls) walls.push_back(to_json(w));

  Json out{{"alpha", rational_list(alpha.exact())}, {"total", to_string(alpha.total())}, {"walls", walls}};
  bool on_wall = false;
  for (const auto& w : all_walls) on_wall = on_wall || w.k == 0;
  if (on_wall) {
    out["error"] = "OnWall";
    std::cerr << "error: parameter lies on a wall\n";
    if (format == "text") {
      std::string text = "on wall:";
      for (const auto& w : all_walls)
        if (w.k == 0) text += " " + format_subset(w.I);
      return {text + "\n", kExitOnWall};
    }
    return {dump(out), kExitOnWall};
  }

  out["signature"] = to_json(chamber_signature(alpha));
  ModuliDescription desc;
  if (alpha.total() < 1) {
    desc = wall_path(alpha);
    out["route"] = "parabolic";
    out["routes_agree"] = desc == wall_path_normalized(alpha.normalized());
  } else {
    // |α| ≥ 1: the GIT side depends only on w = 2α/|α|.
    desc = wall_path_normalized(alpha.normalized());
    out["route"] = "git";
  }
  Json d = to_json(desc);
  out["start_dim"] = d["start_dim"];
  out["steps"] = d["steps"];
  out["poincare"] = d["poincare"];
  out["distinguished_chamber"] = in_distinguished_chamber(alpha);

  if (format == "text") {
    std::ostringstream os;
    os << "start: P^" << desc.start_dim << "\n";
    for (const auto& s : desc.steps)
      os << (s.kind == StepKind::BlowUpPoint ? "blow-up " : "flip    ") << format_subset(s.I) << "  P^"
         << s.removed_dim << " -> P^" << s.inserted_dim << (s.contracts_divisor ? "  (contracts divisor)" : "")
         << "\n";
    os << "poincare:";
    for (auto c : desc.poincare) os << " " << c;
    os << "\n";
    return {os.str(), kExitOk};
  }
  return {dump(out), kExitOk};
}

// ---- sample

Output cmd_sample(const std::string& alpha_text, const std::string& tree_text, std::size_t count,
                  const std::string& kind, std::uint64_t seed, const std::string& format) {
  WeightVector alpha = WeightVector::parse(alpha_text);
  TrivalentTree tree = tree_or_default(alpha.size(), tree_text);
  auto rng = make_engine(seed, 0);
  std::string text;
  if (kind == "polygon") {
    PolygonSampler sampler(alpha, tree);
    if (format == "json") {
      Json rows = Json::array();
      for (std::size_t i = 0; i < count; ++i) {
        Polygon p = sampler(rng);
        rows.push_back(to_json(measure(p, tree)));
      }
      return {dump(Json{{"alpha", rational_list(alpha.exact())}, {"samples", rows}}), kExitOk};
    }
    text = polygon_csv_header(tree) + "\n";
    for (std::size_t i = 0; i < count; ++i) text += polygon_csv_row(sampler(rng), tree) + "\n";
    return {text, kExitOk};
  }
  HolonomySampler sampler(alpha, tree);
  if (format == "json") {
    Json rows = Json::array();
    for (std::size_t i = 0; i < count; ++i) {
      auto s = sampler(rng);
      rows.push_back(Json{{"tuple", to_json(s.tuple)}, {"goldman", to_json(s.u)}, {"twists", s.twists}});
    }
    return {dump(Json{{"samples", rows}}), kExitOk};
  }
  for (int i = 1; i <= alpha.size(); ++i)
    for (const char* c : {"w", "x", "y", "z"}) text += std::string(text.empty() ? "" : ",") + c + std::to_string(i);
  for (const auto& d : tree.diagonals()) text += ",u_" + d.str();
  text += "\n";
  for (std::size_t i = 0; i < count; ++i) {
    auto s = sampler(rng);
    std::string row;
    for (const auto& g : s.tuple.g)
      for (double c : {g.w(), g.vec().x, g.vec().y, g.vec().z}) row += (row.empty() ? "" : ",") + format_double(c);
    for (double u : goldman_vector(s.tuple, tree).u) row += "," + format_double(u);
    text += row + "\n";
  }
  return {text, kExitOk};
}

// ---- polytope

struct PolytopeArgs {
  std::string alpha, tree;
  bool goldman = false;
  bool with_vertices = false;
  std::string volume;  // "", "exact", "mc"
  std::size_t mc_samples = 100000;
  std::optional<int> level;
  std::string labels;
};

Output cmd_polytope(const PolytopeArgs& a, std::uint64_t seed) {
  WeightVector alpha = WeightVector::parse(a.alpha);
  TrivalentTree tree = tree_or_default(alpha.size(), a.tree);
  HPolytope p = a.goldman ? build_goldman(tree, alpha) : build_delta(tree, alpha);
  Json out{{"tree", tree.str()}, {"kind", a.goldman ? "goldman" : "delta"}};
  Json body = to_json(p, a.with_vertices);
  for (auto it = body.begin(); it != body.end(); ++it) out[it.key()] = it.value();

  if (!a.volume.empty()) {
    if (a.volume == "exact") {
      Rational v = exact_volume(p);
      out["volume"] = Json{{"method", "exact"}, {"value", to_string(v)}, {"approx", to_double(v)}};
    } else {
      auto rng = make_engine(seed, 0);
      auto v = mc_volume(p, a.mc_samples, rng);
      out["volume"] = Json{{"method", "mc"}, {"value", v.value}, {"std_error", v.std_error}};
    }
  }

  if (a.level) {
    const int L = *a.level;
    if (L < 1) throw Error(ErrorKind::InvalidArgument, "--count-level must be positive");
    // Lattice points of the Goldman polytope at spacing 1/(2L), as labels m = 2L·u.
    HPolytope g = build_goldman(tree, alpha);
    Json count{{"level", L}, {"lattice_points", count_lattice_points(g, Rational(2 * L))}};
    std::vector<int> labels;
    if (!a.labels.empty()) {
      for (const auto& q : parse_rational_list(a.labels)) {
        if (!is_integer(q)) throw Error(ErrorKind::ParseError, "labels must be integers");
        labels.push_back(q.convert_to<int>());
      }
    } else {
      bool integral = true;
      for (const auto& x : alpha.exact()) {
        Rational m = 2 * L * x;
        integral = integral && is_integer(m);
        if (integral) labels.push_back(m.convert_to<int>());
      }
      if (!integral) labels.clear();
    }
    if (!labels.empty()) {
      count["labels"] = labels;
      count["fusion_count"] = fusion_count({tree, labels, L});
    } else {
      count["fusion_count"] = nullptr;
      count["note"] = "2L*alpha is not integral; pass --labels for a fusion count";
    }
    out["count"] = count;
  }
  return {dump(out), kExitOk};
}

// ---- stability

Output cmd_stability(const std::string& w_text, const std::string& points_text, const std::string& format) {
  auto w = parse_rational_list(w_text);
  std::vector<ProjectivePoint> points;
  std::size_t pos = 0;
  while (pos <= points_text.size()) {
    std::size_t comma = points_text.find(',', pos);
    if (comma == std::string::npos) comma = points_text.size();
    points.push_back(parse_point(std::string_view(points_text).substr(pos, comma - pos)));
    pos = comma + 1;
  }
  auto result = is_semistable(points, w);
  if (format == "json") return {dump(Json{{"w", rational_list(w)}, {"result", std::string(to_string(result))}}), 0};
  return {std::string(to_string(result)) + "\n", kExitOk};
}

// ---- verify

Output cmd_verify(const std::string& alpha_text, const std::string& tree_text, const VerifyConfig& cfg,
                  const std::string& format) {
  WeightVector alpha = WeightVector::parse(alpha_text);
  TrivalentTree tree = tree_or_default(alpha.size(), tree_text);
  VerifyReport report = run_verification(alpha, tree, cfg);
  int code = report.passed() ? kExitOk : kExitVerifyFailed;
  if (format == "json") {
    Json suites = Json::array();
    for (const auto& s : report.suites)
      suites.push_back(Json{{"name", s.name},
                            {"status", s.skipped ? "skip" : s.passed ? "pass" : "fail"},
                            {"measured", s.measured},
                            {"tolerance", s.tolerance},
                            {"checks", s.checks},
                            {"note", s.note}});
    return {dump(Json{{"alpha", rational_list(alpha.exact())}, {"tree", tree.str()}, {"seed", cfg.seed},
                      {"suites", suites}, {"passed", report.passed()}}),
            code};
  }
  std::string text;
  for (const auto& s : report.suites) {
    if (s.skipped) std::cerr << "notice: " << s.name << " suite skipped because |alpha| >= 1\n";
    text += format_suite(s) + "\n";
  }
  text += report.passed() ? "verify: PASS\n" : "verify: FAIL\n";
  return {text, code};
}

// ---- trees

Output cmd_trees(int n, const std::string& format) {
  auto trees = enumerate_trees(n);
  if (format == "json") {
    Json list = Json::array();
    for (const auto& t : trees) {
      Json nodes = Json::array();
      for (const auto& node : t.nodes()) {
        auto label = [](const Interval& e) { return std::to_string(e.first) + "-" + std::to_string(e.last); };
        nodes.push_back({label(node.parent), label(node.left), label(node.right)});
      }
      list.push_back(Json{{"diagonals", t.str()}, {"nodes", nodes}});
    }
    return {dump(Json{{"n", n}, {"count", trees.size()}, {"trees", list}}), kExitOk};
  }
  std::string text;
  for (const auto& t : trees) text += t.str() + "\n";
  return {text, kExitOk};
}

int exit_code_for(ErrorKind kind) { return kind == ErrorKind::OnWall ? kExitOnWall : kExitUsage; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wall-crossing, moment polytopes and integrable systems on polygon and SU(2) holonomy spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Seed for every stochastic computation")->capture_default_str();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", g.out, "Write output to this file instead of stdout");

  std::string alpha, tree, kind = "polygon", w, points;
  std::size_t count = 1000;
  int trees_n = 5;
  PolytopeArgs poly;
  VerifyConfig vcfg;
  std::optional<double> tol_all;

  auto* chambers = app.add_subcommand("chambers", "Walls, chamber signature and wall-crossing description");
  chambers->add_option("--alpha", alpha, "Weights, e.g. 1/5,1/5 or 1/5x5")->required();

  auto* sample = app.add_subcommand("sample", "Liouville-uniform samples of polygons or holonomy tuples");
  sample->add_option("--alpha", alpha, "Weights")->required();
  sample->add_option("--tree", tree, "Triangulation, e.g. 1-2,1-3 (default: caterpillar)");
  sample->add_option("-n,--n", count, "Number of samples")->capture_default_str();
  sample->add_option("--kind", kind, "polygon or holonomy")->check(CLI::IsMember({"polygon", "holonomy"}));

  auto* polytope = app.add_subcommand("polytope", "Moment polytope of a triangulation");
  polytope->add_option("--alpha", poly.alpha, "Weights")->required();
  polytope->add_option("--tree", poly.tree, "Triangulation (default: caterpillar)");
  polytope->add_flag("--goldman", poly.goldman, "Goldman polytope with the quantum bound");
  polytope->add_flag("--vertices", poly.with_vertices, "Include exact vertices");
  polytope->add_option("--volume", poly.volume, "exact or mc")->check(CLI::IsMember({"exact", "mc"}));
  polytope->add_option("--mc-samples", poly.mc_samples, "Monte Carlo sample count")->capture_default_str();
  polytope->add_option("--count-level", poly.level, "Count lattice points and fusion labellings at level L");
  polytope->add_option("--labels", poly.labels, "Leaf labels for the fusion count (default 2L*alpha)");

  auto* stability = app.add_subcommand("stability", "GIT stability of points on the projective line");
  stability->add_option("--w", w, "Normalized weights with sum 2")->required();
  stability->add_option("--points", points, "Affine coordinates or inf")->required();

  auto* verify = app.add_subcommand("verify", "Run the numerical property suites");
  verify->add_option("--alpha", alpha, "Weights")->required();
  verify->add_option("--tree", tree, "Triangulation (default: caterpillar)");
  verify->add_option("--samples", vcfg.samples, "Samples per suite")->capture_default_str();
  verify->add_option("--tol", tol_all, "Override every tolerance");
  verify->add_option("--tol-commute", vcfg.tol_commute)->capture_default_str();
  verify->add_option("--tol-image", vcfg.tol_image)->capture_default_str();
  verify->add_option("--tol-goldman", vcfg.tol_goldman)->capture_default_str();

  auto* trees = app.add_subcommand("trees", "List all triangulations of the n-gon");
  trees->add_option("-n,--n", trees_n, "Number of leaves")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto format_or = [&](const char* fallback) { return g.format.empty() ? std::string(fallback) : g.format; };
  Output result;
  try {
    if (*chambers) {
      result = cmd_chambers(alpha, format_or("json"));
    } else if (*sample) {
      result = cmd_sample(alpha, tree, count, kind, g.seed, format_or("csv"));
    } else if (*polytope) {
      result = cmd_polytope(poly, g.seed);
    } else if (*stability) {
      result = cmd_stability(w, points, format_or("text"));
    } else if (*verify) {
      vcfg.seed = g.seed;
      if (tol_all) vcfg.tol_commute = vcfg.tol_image = vcfg.tol_goldman = *tol_all;
      result = cmd_verify(alpha, tree, vcfg, format_or("text"));
    } else if (*trees) {
      result = cmd_trees(trees_n, format_or("text"));
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (g.out.empty()) {
    std::cout << result.text;
  } else {
    std::ofstream f(g.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << g.out << "\n";
      return kExitUsage;
    }
    f << result.text;
  }
  return result.code;
}
