#include "fano/io.hpp"

#include <fstream>
#include <sstream>

namespace fano::io {

namespace {

Int parse_int_token(const std::string& s, std::size_t pos) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) throw Error(ErrorCode::ParseError, "expected an integer at position " + std::to_string(pos));
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9')
      throw Error(ErrorCode::ParseError, "unexpected '" + std::string(1, s[k]) + "' at position " + std::to_string(pos + k));
  return Int(s[0] == '+' ? s.substr(1) : s);
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<IntVec2> points_from_json(const Json& j) {
  const Json* arr = &j;
  if (j.is_object()) {
    if (!j.contains("vertices")) throw Error(ErrorCode::ParseError, "object has no \"vertices\" field");
    arr = &j.at("vertices");
  }
  if (!arr->is_array()) throw Error(ErrorCode::ParseError, "vertices must be an array");
  std::vector<IntVec2> v;
  for (std::size_t i = 0; i < arr->size(); ++i) {
    const Json& p = (*arr)[i];
    if (!p.is_array() || p.size() != 2)
      throw Error(ErrorCode::ParseError, "vertex " + std::to_string(i) + " is not a pair [x,y]");
    try {
      v.emplace_back(json_int(p[0]), json_int(p[1]));
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, "vertex " + std::to_string(i) + ": " + e.what());
    }
  }
  return v;
}

std::vector<IntVec2> parse_compact(const std::string& text) {
  std::vector<IntVec2> v;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t semi = text.find(';', pos);
    if (semi == std::string::npos) semi = text.size();
    std::string item = text.substr(pos, semi - pos);
    if (!trim(item).empty()) {
      std::size_t comma = item.find(',');
      if (comma == std::string::npos)
        throw Error(ErrorCode::ParseError, "expected x,y at position " + std::to_string(pos));
      std::string xs = item.substr(0, comma), ys = item.substr(comma + 1);
      std::size_t xoff = pos + xs.find_first_not_of(" \t");
      std::size_t yoff = pos + comma + 1 + ys.find_first_not_of(" \t");
      v.emplace_back(parse_int_token(trim(xs), xoff), parse_int_token(trim(ys), yoff));
    }
    pos = semi + 1;
  }
  return v;
}

}  // namespace

Int json_int(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Int(std::to_string(j.get<std::uint64_t>()));
    return Int(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) return parse_int_token(j.get<std::string>(), 0);
  throw Error(ErrorCode::ParseError, "expected an integer, got " + j.dump());
}

Json int_json(const Int& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

std::vector<IntVec2> parse_points(const std::string& raw) {
  std::string text = trim(raw);
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty polygon");
  if (text[0] == '[' || text[0] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw Error(ErrorCode::ParseError, "malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    return points_from_json(j);
  }
  return parse_compact(text);
}

FanoPolygon parse_polygon(const std::string& text) { return make_polygon(parse_points(text)); }

std::vector<FanoPolygon> parse_polygon_list(const std::string& raw) {
  std::string text = trim(raw);
  std::vector<FanoPolygon> out;
  if (text.empty()) return out;
  if (text[0] == '[' || text[0] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw Error(ErrorCode::ParseError, "malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    const Json* arr = &j;
    if (j.is_object() && j.contains("polygons")) arr = &j.at("polygons");
    else if (j.is_object() || (j.is_array() && !j.empty() && j[0].is_array() && !j[0].empty() && !j[0][0].is_array()))
      return {make_polygon(points_from_json(j))};
    for (std::size_t i = 0; i < arr->size(); ++i) {
      try {
        out.push_back(make_polygon(points_from_json((*arr)[i])));
      } catch (const Error& e) {
        throw Error(e.code(), "polygon " + std::to_string(i) + ": " + e.what());
      }
    }
    return out;
  }
  std::istringstream in(text);
  std::string line;
  for (std::size_t ln = 1; std::getline(in, line); ++ln) {
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    try {
      out.push_back(parse_polygon(line));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(ln) + ": " + e.what());
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::BadInput, "cannot open '" + path + "'");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

Json points_json(const std::vector<IntVec2>& v) {
  Json a = Json::array();
  for (const auto& p : v) a.push_back(Json::array({int_json(p.x), int_json(p.y)}));
  return a;
}

Json polygon_json(const FanoPolygon& p) { return Json{{"vertices", points_json(p.vertices())}}; }

std::string compact(const FanoPolygon& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ';';
    s += p[i].x.get_str() + "," + p[i].y.get_str();
  }
  return s;
}

Json content_json(const SingularityContent& sc) {
  Json b = Json::array();
  for (const auto& s : sc.basket) b.push_back(s.text());
  return Json{{"n", int_json(sc.n)}, {"basket", b}};
}

Json edges_json(const FanoPolygon& p) {
  Json a = Json::array();
  for (const auto& e : edge_data(p)) {
    auto s = classify_cone(e.from, e.to);
    a.push_back(Json{{"from", points_json({e.from})[0]},
                     {"to", points_json({e.to})[0]},
                     {"w", points_json({e.w})[0]},
                     {"height", int_json(e.r)},
                     {"width", int_json(e.k)},
                     {"singularity", s.text()},
                     {"rkc", s.rkc_text()}});
  }
  return a;
}

Json hilbert_json(const SeriesWindow& w) {
  Json a = Json::array();
  for (const auto& c : w.c) {
    if (c.get_den() == 1) a.push_back(int_json(c.get_num()));
    else a.push_back(to_string(c));
  }
  return a;
}

Json divisors_json(const SublatticeInvariant& d) { return Json::array({int_json(d.d1), int_json(d.d2)}); }

Json quiver_json(const Quiver& q) {
  Json b = Json::array();
  for (const auto& row : q.B) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(int_json(x));
    b.push_back(r);
  }
  return Json{{"n", q.n}, {"B", b}};
}

Json graph_json(const MutationGraph& g) {
  Json nodes = Json::array(), edges = Json::array();
  for (const auto& p : g.nodes) nodes.push_back(polygon_json(p));
  for (const auto& e : g.edges) edges.push_back(Json{{"a", e.a}, {"b", e.b}, {"w", points_json({e.w})[0]}});
  return Json{{"nodes", nodes}, {"edges", edges}, {"truncated", g.truncated}};
}

Json class_report_json(const ClassReport& r) {
  Json polys = Json::array();
  for (std::size_t i = 0; i < r.polygons.size(); ++i) {
    const auto& f = r.fingerprints[i];
    polys.push_back(Json{{"vertices", points_json(r.polygons[i].vertices())},
                         {"content", content_json(f.content)},
                         {"degree", to_string(f.degree)},
                         {"hilbert", hilbert_json(SeriesWindow{f.hilbert})},
                         {"divisors", divisors_json(f.divisors)},
                         {"quiver_parity", f.parity < 0 ? Json(nullptr) : Json(f.parity == 1 ? "even" : "mixed")},
                         {"class", r.class_of[i]}});
  }
  Json comps = Json::array();
  for (const auto& c : r.components) comps.push_back(c);
  Json distinct = Json::array();
  for (const auto& d : r.distinct) distinct.push_back(Json{{"a", d.a}, {"b", d.b}, {"by", d.by}});
  Json unresolved = Json::array();
  for (const auto& [a, b] : r.unresolved) unresolved.push_back(Json::array({a, b}));
  return Json{{"polygons", polys},   {"classes", r.components.size()}, {"components", comps},
              {"distinct", distinct}, {"unresolved", unresolved},       {"truncated", r.truncated}};
}

Json table_report_json(const TableReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) rows.push_back(Json{{"name", row.name}, {"ok", row.ok}, {"problems", row.problems}});
  return Json{{"table", r.id}, {"ok", r.ok()}, {"rows", rows}, {"problems", r.problems}};
}

std::string quiver_dot(const Quiver& q) {
  std::ostringstream s;
  s << "digraph quiver {\n";
  for (std::size_t i = 0; i < q.n; ++i) {
    s << "  v" << i << " [label=\"" << i;
    if (i < q.labels.size()) s << " (edge " << q.labels[i] << ")";
    s << "\"];\n";
  }
  for (std::size_t i = 0; i < q.n; ++i)
    for (std::size_t j = 0; j < q.n; ++j)
      if (q.B[i][j] > 0) s << "  v" << i << " -> v" << j << " [label=\"" << q.B[i][j].get_str() << "\"];\n";
  s << "}\n";
  return s.str();
}

std::string graph_dot(const MutationGraph& g) {
  std::ostringstream s;
  s << "graph mutations {\n";
  if (g.truncated) s << "  // truncated\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    s << "  n" << i << " [label=\"";
    for (std::size_t k = 0; k < g.nodes[i].size(); ++k) s << (k ? " " : "") << to_string(g.nodes[i][k]);
    s << "\"];\n";
  }
  for (const auto& e : g.edges) s << "  n" << e.a << " -- n" << e.b << " [label=\"" << to_string(e.w) << "\"];\n";
  s << "}\n";
  return s.str();
}

std::string basket_text(const std::vector<CyclicQuotientSingularity>& b) {
  std::string s;
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? " " : "") + b[i].text();
  return s;
}

std::string divisors_text(const SublatticeInvariant& d) { return "(" + d.d1.get_str() + "," + d.d2.get_str() + ")"; }

std::string polygons_csv(const std::vector<FanoPolygon>& polys, const std::vector<std::size_t>* class_of) {
  std::ostringstream s;
  s << "vertices,n,basket,degree,divisors,class\n";
  for (std::size_t i = 0; i < polys.size(); ++i) {
    auto sc = singularity_content(polys[i]);
    s << '"' << compact(polys[i]) << "\"," << sc.n.get_str() << ",\"" << basket_text(sorted_basket(sc.basket)) << "\","
      << to_string(degree_from_content(sc)) << ",\"" << divisors_text(t_sublattice_invariant(polys[i])) << "\",";
    if (class_of) s << (*class_of)[i];
    s << "\n";
  }
  return s.str();
}

}  // namespace fano::io
