#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

#include "fano/classification.hpp"
#include "fano/io.hpp"
#include "fano/quiver.hpp"

using namespace fano;
using io::Json;

namespace {

struct Globals {
  std::string format = "json";
  unsigned jobs = 1;
  std::size_t max_nodes = 10000;
  long max_boundary = 0;
  unsigned hilbert_degree = 12;
  bool raw = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string input_text(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return io::read_file(arg);
  return arg;
}

void require_format(const Globals& g, std::initializer_list<const char*> ok) {
  for (const char* f : ok)
    if (g.format == f) return;
  std::string list;
  for (const char* f : ok) list += (list.empty() ? "" : ", ") + std::string(f);
  throw UsageError("format '" + g.format + "' is not available here (use " + list + ")");
}

FanoPolygon shown(const FanoPolygon& p, const Globals& g) { return g.raw ? p : canonical(p); }

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

IntVec2 parse_vec(const std::string& s) {
  auto pts = io::parse_points(s.find('[') == std::string::npos ? s : s);
  if (pts.size() != 1) throw Error(ErrorCode::ParseError, "expected a single vector x,y");
  return pts[0];
}

int cmd_analyze(const Globals& g, const std::string& in) {
  require_format(g, {"json", "text"});
  FanoPolygon p = shown(io::parse_polygon(input_text(in)), g);
  auto sc = singularity_content(p);
  Rat deg = degree(p);
  Rat vol = normalized_dual_volume(p);
  if (deg != vol)
    throw Error(ErrorCode::Mismatch, "degree " + to_string(deg) + " differs from dual volume " + to_string(vol));
  auto hw = hilbert_window(p, g.hilbert_degree);
  auto div = t_sublattice_invariant(p);
  auto mv = minimality_verdicts(p);
  if (mv.boundary != mv.interior || mv.boundary != mv.volume || mv.boundary != mv.heights)
    throw Error(ErrorCode::Mismatch, "minimality criteria disagree");
  std::optional<Quiver> q;
  if (sc.n > 0) q = quiver_of(p);
  auto c = counts(p);

  if (g.format == "text") {
    std::cout << "vertices: " << io::compact(p) << "\n";
    for (const auto& e : edge_data(p)) {
      auto s = classify_cone(e.from, e.to);
      std::cout << "edge " << e.index << ": " << to_string(e.from) << " -> " << to_string(e.to) << "  w=" << to_string(e.w)
                << "  height " << e.r << "  width " << e.k << "  " << s.text() << " " << s.rkc_text() << "\n";
    }
    std::cout << "boundary points: " << c.boundary << "\ninterior points: " << c.interior << "\nvolume: " << c.volume
              << "\ncontent: (" << sc.n << ", {" << io::basket_text(sc.basket) << "})\ndegree: " << to_string(deg)
              << "\nhilbert:";
    for (const auto& x : hw.c) std::cout << " " << to_string(x);
    std::cout << "\ndivisors: " << io::divisors_text(div) << "\nminimal: " << (mv.boundary ? "true" : "false") << "\n";
    if (q) {
      std::cout << "quiver:\n";
      for (const auto& row : q->B) {
        std::cout << " ";
        for (const auto& x : row) std::cout << " " << x;
        std::cout << "\n";
      }
    } else {
      std::cout << "quiver: none\n";
    }
    return 0;
  }
  Json j;
  j["vertices"] = io::points_json(p.vertices());
  j["edges"] = io::edges_json(p);
  j["counts"] = Json{{"boundary", io::int_json(c.boundary)}, {"interior", io::int_json(c.interior)},
                     {"volume", io::int_json(c.volume)}};
  j["content"] = io::content_json(sc);
  j["degree"] = to_string(deg);
  j["hilbert"] = io::hilbert_json(hw);
  j["divisors"] = io::divisors_json(div);
  j["minimal"] = mv.boundary;
  j["quiver"] = q ? io::quiver_json(*q) : Json(nullptr);
  print_json(j);
  return 0;
}

int cmd_mutate(const Globals& g, const std::string& in, const std::string& wtext, long edge, bool flip) {
  require_format(g, {"json", "text"});
  FanoPolygon p = io::parse_polygon(input_text(in));
  std::size_t e;
  if (!wtext.empty()) {
    IntVec2 w = parse_vec(wtext);
    auto found = edge_with_normal(p, w);
    if (!found) throw Error(ErrorCode::NoMutation, "no edge has inner normal " + to_string(w));
    e = *found;
  } else if (edge >= 0) {
    if (static_cast<std::size_t>(edge) >= p.size())
      throw Error(ErrorCode::BadInput, "edge " + std::to_string(edge) + " out of range");
    e = static_cast<std::size_t>(edge);
  } else {
    throw UsageError("give --w or --edge");
  }
  auto spec = mutation_spec(p, e, flip);
  FanoPolygon out = mutate_raw(p, spec);
  if (canonical(out) != canonical(mutate_by_slices(p, spec)))
    throw Error(ErrorCode::Mismatch, "dual and slice constructions disagree");
  out = shown(out, g);
  if (g.format == "text") {
    std::cout << io::compact(out) << "\n";
    return 0;
  }
  print_json(Json{{"vertices", io::points_json(out.vertices())},
                  {"w", io::points_json({spec.w})[0]},
                  {"factor", io::points_json({spec.vE})[0]}});
  return 0;
}

OrbitBudget orbit_budget(const Globals& g, long depth) {
  OrbitBudget b;
  b.max_nodes = g.max_nodes;
  b.max_boundary = g.max_boundary;
  if (depth >= 0) b.max_depth = static_cast<std::size_t>(depth);
  return b;
}

int cmd_orbit(const Globals& g, const std::string& in, long depth) {
  require_format(g, {"json", "dot", "text"});
  FanoPolygon p = io::parse_polygon(input_text(in));
  MutationGraph gr = orbit(p, orbit_budget(g, depth));
  if (g.format == "dot") std::cout << io::graph_dot(gr);
  else if (g.format == "text") {
    for (const auto& n : gr.nodes) std::cout << io::compact(n) << "\n";
    std::cout << gr.nodes.size() << " nodes, " << gr.edges.size() << " edges" << (gr.truncated ? ", truncated" : "")
              << "\n";
  } else
    print_json(io::graph_json(gr));
  return 0;
}

int cmd_minimize(const Globals& g, const std::string& in) {
  require_format(g, {"json", "text"});
  FanoPolygon p = io::parse_polygon(input_text(in));
  FanoPolygon m = minimize(p);
  if (!is_minimal(m)) throw Error(ErrorCode::Mismatch, "minimize returned a non-minimal polygon");
  if (g.format == "text") std::cout << io::compact(m) << "\n";
  else print_json(io::polygon_json(m));
  return 0;
}

int cmd_quiver(const Globals& g, const std::string& in) {
  require_format(g, {"json", "dot", "text"});
  FanoPolygon p = shown(io::parse_polygon(input_text(in)), g);
  Quiver q = quiver_of(p);
  if (g.format == "dot") std::cout << io::quiver_dot(q);
  else if (g.format == "text") {
    for (const auto& row : q.B) {
      for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? " " : "") << row[i];
      std::cout << "\n";
    }
  } else
    print_json(io::quiver_json(q));
  return 0;
}

int cmd_classify(const Globals& g, const std::string& in, long slack) {
  require_format(g, {"json", "csv", "text"});
  auto polys = io::parse_polygon_list(input_text(in));
  ClassBudget b;
  b.max_nodes = g.max_nodes;
  b.jobs = g.jobs;
  if (slack >= 0) b.max_boundary_slack = slack;
  ClassReport r = partition_into_classes(polys, b);
  if (g.format == "csv") std::cout << io::polygons_csv(r.polygons, &r.class_of);
  else if (g.format == "text") {
    std::cout << r.polygons.size() << " polygons, " << r.components.size() << " classes, " << r.unresolved.size()
              << " unresolved pairs" << (r.truncated ? ", some orbits truncated" : "") << "\n";
    for (std::size_t k = 0; k < r.components.size(); ++k) {
      std::cout << "class " << k << ":";
      for (auto i : r.components[k]) std::cout << " " << i;
      std::cout << "\n";
    }
  } else
    print_json(io::class_report_json(r));
  return 0;
}

int cmd_enumerate(const Globals& g, const std::string& target, long r, long box) {
  require_format(g, {"json", "csv", "text"});
  EnumerationOptions opt;
  opt.jobs = g.jobs;
  opt.box = box;
  std::vector<FanoPolygon> polys;
  if (target == "reflexive") polys = enumerate_fano_max_index(1, opt);
  else if (target == "minimal-empty") polys = enumerate_minimal_empty(opt);
  else if (target == "minimal-third") polys = enumerate_minimal_third(opt);
  else if (target == "max-index") {
    if (r < 1) throw UsageError("max-index needs --r >= 1");
    polys = enumerate_fano_max_index(r, opt);
  } else
    throw Error(ErrorCode::Unsupported, "unknown target '" + target + "'");
  if (g.format == "csv") std::cout << io::polygons_csv(polys);
  else if (g.format == "text") {
    for (const auto& p : polys) std::cout << io::compact(p) << "\n";
  } else {
    Json arr = Json::array();
    for (const auto& p : polys) arr.push_back(io::polygon_json(p));
    print_json(Json{{"target", target}, {"count", polys.size()}, {"polygons", arr}});
  }
  return 0;
}

int cmd_verify_table(const Globals& g, const std::string& id) {
  require_format(g, {"json", "text"});
  if (id == "triples") {
    auto got = candidate_triples({});
    bool ok = got == golden_triples();
    Json arr = Json::array();
    for (const auto& t : got) arr.push_back(Json::array({t.j, t.r, t.b}));
    if (g.format == "text") {
      for (const auto& t : got) std::cout << "(" << t.j << "," << t.r << "," << t.b << ")\n";
      std::cout << (ok ? "ok" : "MISMATCH") << "\n";
    } else
      print_json(Json{{"table", id}, {"ok", ok}, {"triples", arr}});
    return ok ? 0 : 3;
  }
  TableReport rep = verify_table(id);
  if (g.format == "text") {
    for (const auto& row : rep.rows) {
      std::cout << row.name << ": " << (row.ok ? "ok" : "FAIL");
      for (const auto& p : row.problems) std::cout << "; " << p;
      std::cout << "\n";
    }
    for (const auto& p : rep.problems) std::cout << "table: " << p << "\n";
    std::cout << (rep.ok() ? "ok" : "FAIL") << "\n";
  } else
    print_json(io::table_report_json(rep));
  return rep.ok() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fano polygon mutations, invariants and classification"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "dot", "csv", "text"}));
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--max-nodes", g.max_nodes, "orbit node budget")->check(CLI::PositiveNumber);
  app.add_option("--max-boundary", g.max_boundary, "skip orbit polygons with more boundary points")
      ->check(CLI::PositiveNumber);
  app.add_option("--hilbert-degree", g.hilbert_degree, "last Hilbert coefficient to report")->check(CLI::PositiveNumber);
  app.add_flag("--raw", g.raw, "keep input coordinates instead of the canonical form");

  std::string poly, wtext, target, table;
  long edge = -1, depth = -1, r = 0, box = 0, slack = -1;
  bool flip = false;
  const char* poly_help = "polygon: JSON, compact x,y;x,y, a file path, or - for stdin";

  auto* analyze = app.add_subcommand("analyze", "invariants of a polygon");
  analyze->add_option("polygon", poly, poly_help)->required();
  auto* mutate_cmd = app.add_subcommand("mutate", "mutate a polygon");
  mutate_cmd->add_option("polygon", poly, poly_help)->required();
  mutate_cmd->add_option("--w", wtext, "inner normal of the edge, as x,y");
  mutate_cmd->add_option("--edge", edge, "edge index in canonical order");
  mutate_cmd->add_flag("--flip", flip, "use the opposite factor");
  auto* orbit_cmd = app.add_subcommand("orbit", "mutation graph");
  orbit_cmd->add_option("polygon", poly, poly_help)->required();
  orbit_cmd->add_option("--depth", depth, "breadth-first depth limit")->check(CLI::NonNegativeNumber);
  auto* minimize_cmd = app.add_subcommand("minimize", "mutate down to a minimal polygon");
  minimize_cmd->add_option("polygon", poly, poly_help)->required();
  auto* quiver_cmd = app.add_subcommand("quiver", "exchange matrix of the T-cone quiver");
  quiver_cmd->add_option("polygon", poly, poly_help)->required();
  auto* classify = app.add_subcommand("classify", "partition polygons into mutation classes");
  classify->add_option("polygons", poly, "file of polygons (JSON array or one per line), or -")->required();
  classify->add_option("--boundary-slack", slack, "extra boundary points allowed in orbit searches")
      ->check(CLI::NonNegativeNumber);
  auto* enumerate = app.add_subcommand("enumerate", "enumerate polygons");
  enumerate->add_option("target", target, "reflexive, minimal-empty, minimal-third or max-index")->required();
  enumerate->add_option("--r", r, "maximum local index for max-index");
  enumerate->add_option("--box", box, "search box half-width, 0 for the default")->check(CLI::NonNegativeNumber);
  auto* verify = app.add_subcommand("verify-table", "check a built-in table");
  verify->add_option("table", table, "table1, table2, table4 or triples")
      ->required()
      ->check(CLI::IsMember({"table1", "table2", "table4", "triples"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*analyze) return cmd_analyze(g, poly);
    if (*mutate_cmd) return cmd_mutate(g, poly, wtext, edge, flip);
    if (*orbit_cmd) return cmd_orbit(g, poly, depth);
    if (*minimize_cmd) return cmd_minimize(g, poly);
    if (*quiver_cmd) return cmd_quiver(g, poly);
    if (*classify) return cmd_classify(g, poly, slack);
    if (*enumerate) return cmd_enumerate(g, target, r, box);
    if (*verify) return cmd_verify_table(g, table);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::InconsistentHilbert || e.code() == ErrorCode::Mismatch ? 3 : 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
