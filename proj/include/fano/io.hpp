#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fano/classification.hpp"
#include "fano/quiver.hpp"

namespace fano::io {

using Json = nlohmann::ordered_json;

// JSON {"vertices": [[x,y],...]}, a bare [[x,y],...], or the compact "x,y;x,y;..."
std::vector<IntVec2> parse_points(const std::string& text);
FanoPolygon parse_polygon(const std::string& text);
// a JSON array of polygons, {"polygons": [...]}, or one polygon per non-empty line
std::vector<FanoPolygon> parse_polygon_list(const std::string& text);
std::string read_file(const std::string& path);

Json int_json(const Int& v);  // a number when it fits in 64 bits, a string otherwise
Int json_int(const Json& j);
Json points_json(const std::vector<IntVec2>& v);
Json polygon_json(const FanoPolygon& p);
std::string compact(const FanoPolygon& p);  // "x,y;x,y;..."

Json content_json(const SingularityContent& sc);
Json edges_json(const FanoPolygon& p);
Json hilbert_json(const SeriesWindow& w);
Json divisors_json(const SublatticeInvariant& d);
Json quiver_json(const Quiver& q);
Json graph_json(const MutationGraph& g);
Json class_report_json(const ClassReport& r);
Json table_report_json(const TableReport& r);

std::string quiver_dot(const Quiver& q);
std::string graph_dot(const MutationGraph& g);

std::string basket_text(const std::vector<CyclicQuotientSingularity>& b);
std::string divisors_text(const SublatticeInvariant& d);
// one row per polygon: vertices, n, basket, degree, divisors, class id
std::string polygons_csv(const std::vector<FanoPolygon>& polys, const std::vector<std::size_t>* class_of = nullptr);

}  // namespace fano::io
