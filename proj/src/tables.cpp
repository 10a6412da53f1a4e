#include <algorithm>
#include <map>

#include "fano/classification.hpp"
#include "fano/quiver.hpp"

namespace fano {

namespace {

std::vector<IntVec2> pts(std::initializer_list<std::pair<long, long>> l) {
  std::vector<IntVec2> v;
  for (auto [x, y] : l) v.emplace_back(Int(x), Int(y));
  return v;
}

TableRow tri(const char* name, std::initializer_list<std::pair<long, long>> v, long a, long b, long c, long n) {
  return {name, pts(v), n, 0, Rat(12 - n), std::array<long, 3>{a, b, c}};
}

TableRow gon(const char* name, std::initializer_list<std::pair<long, long>> v, long n) {
  return {name, pts(v), n, 0, Rat(12 - n), std::nullopt};
}

TableRow third(const char* name, std::initializer_list<std::pair<long, long>> v, long n, long m) {
  return {name, pts(v), n, m, Rat(12 - n) - make_rat(Int(5 * m), 3), std::nullopt};
}

}  // namespace

const std::vector<TableRow>& golden_table(const std::string& id) {
  static const std::vector<TableRow> t1{
      tri("R_P", {{1, 0}, {0, 1}, {-1, -1}}, 1, 1, 1, 3),
      tri("R_L", {{1, 1}, {-2, 1}, {1, -2}}, 1, 1, 1, 9),
      tri("T_H", {{1, 3}, {-2, 3}, {1, -6}}, 1, 1, 1, 11),
      tri("R_O", {{1, 1}, {-1, 1}, {0, -1}}, 1, 1, 2, 4),
      tri("R_M", {{1, 1}, {-1, 1}, {1, -3}}, 1, 1, 2, 8),
      tri("T_E", {{1, 2}, {-1, 2}, {1, -6}}, 1, 1, 2, 10),
      tri("T_A", {{3, 2}, {-1, 2}, {-1, -2}}, 1, 1, 2, 10),
      tri("T_G", {{1, 4}, {-3, 4}, {1, -4}}, 1, 1, 2, 11),
      tri("R_N", {{1, 1}, {-1, 1}, {1, -2}}, 1, 2, 3, 6),
      tri("T_D", {{1, 2}, {-1, 2}, {1, -4}}, 1, 2, 3, 9),
      tri("T_I", {{1, 3}, {-2, 3}, {1, -3}}, 1, 2, 3, 10),
      tri("T_B", {{5, 3}, {-1, 3}, {-1, -3}}, 1, 2, 3, 11),
      tri("T_C", {{1, 2}, {-1, 2}, {1, -3}}, 1, 4, 5, 7),
      tri("T_F", {{2, 5}, {-3, 5}, {2, -5}}, 1, 4, 5, 11),
  };
  static const std::vector<TableRow> t2{
      gon("P_J", {{1, 2}, {-1, 2}, {-1, -2}, {1, -2}}, 10),
      gon("P_G", {{1, 2}, {-1, 2}, {-1, -1}, {1, -3}}, 10),
      gon("P_H", {{1, 2}, {-1, 2}, {-1, 0}, {1, -4}}, 10),
      gon("P_I", {{1, 2}, {-1, 2}, {-1, 1}, {1, -5}}, 10),
      gon("P_B", {{1, 2}, {-1, 2}, {-1, 0}, {1, -2}}, 9),
      gon("P_E", {{1, 2}, {-1, 2}, {-1, 1}, {1, -3}}, 9),
      gon("R_E", {{1, 1}, {-1, 1}, {-1, 0}, {1, -2}}, 8),
      gon("R_F", {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}, 8),
      gon("P_F", {{1, 2}, {-1, 2}, {0, -1}, {1, -3}}, 8),
      gon("P_D", {{1, 2}, {-1, 2}, {-1, 1}, {0, -1}, {1, -2}}, 8),
      gon("R_G", {{1, 1}, {-1, 1}, {0, -1}, {1, -2}}, 7),
      gon("P_A", {{1, 2}, {-1, 2}, {-1, 1}, {1, -2}}, 7),
      gon("P_C", {{1, 2}, {-1, 2}, {0, -1}, {1, -2}}, 7),
      gon("R_B", {{1, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}, 7),
      gon("R_H", {{1, 1}, {-1, 1}, {-1, 0}, {1, -1}}, 6),
      gon("R_C", {{1, 0}, {1, 1}, {-1, 1}, {-1, 0}, {0, -1}}, 6),
      gon("R_A", {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}, 6),
      gon("R_I", {{1, 0}, {1, 1}, {-1, 1}, {0, -1}}, 5),
      gon("R_D", {{1, 0}, {1, 1}, {0, 1}, {-1, -1}, {0, -1}}, 5),
      gon("R_J", {{1, 0}, {0, 1}, {-1, -1}, {0, -1}}, 4),
      gon("R_K", {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, 4),
  };
  static const std::vector<TableRow> t4{
      third("1", {{7, 5}, {-3, 5}, {-3, -5}}, 10, 1),
      third("2", {{3, 2}, {-3, 2}, {-3, -2}, {3, -2}}, 8, 2),
      third("3", {{3, 1}, {3, 2}, {-1, 2}, {-2, 1}, {-2, -3}, {-1, -3}}, 6, 3),
      third("4", {{3, 2}, {-1, 2}, {-2, 1}, {-2, -3}}, 9, 1),
      third("5", {{2, 1}, {1, 2}, {-1, 2}, {-2, 1}, {-2, -1}, {-1, -2}, {1, -2}, {2, -1}}, 4, 4),
      third("6", {{3, 2}, {-1, 2}, {-2, 1}, {-2, -1}, {-1, -2}}, 7, 2),
      third("7", {{2, 1}, {1, 2}, {-1, 2}, {-2, 1}, {-2, -1}, {-1, -2}, {1, -1}}, 2, 5),
      third("8", {{2, 1}, {1, 2}, {-1, 2}, {-2, 1}, {-2, -1}, {-1, -2}}, 5, 3),
      third("9", {{1, 1}, {-1, 2}, {-2, 1}, {-1, -1}, {1, -2}, {2, -1}}, 0, 6),
      third("10", {{1, 1}, {-1, 2}, {-1, -2}, {1, -2}}, 8, 1),
      third("11", {{1, 1}, {-1, 2}, {-2, 1}, {-1, -1}, {2, -1}}, 3, 4),
      third("12", {{3, 1}, {-3, 1}, {0, -1}}, 6, 2),
      third("13", {{1, 1}, {-1, 2}, {-1, -1}, {2, -1}}, 6, 2),
      third("14", {{1, 1}, {-1, 2}, {-2, 1}, {-1, -1}, {1, -1}}, 4, 3),
      third("15", {{1, 1}, {-1, 2}, {-1, -1}, {1, -1}}, 7, 1),
      third("16", {{1, 1}, {-1, 2}, {-1, 0}, {0, -1}, {2, -1}}, 5, 2),
      third("17", {{1, 0}, {1, 1}, {-1, 2}, {-2, 1}, {-1, -1}, {0, -1}}, 3, 3),
      third("18", {{1, 0}, {0, 1}, {-1, 1}, {-1, -3}}, 6, 1),
      third("19", {{1, 1}, {-1, 2}, {-1, 1}, {0, -1}, {2, -1}}, 4, 2),
      third("20", {{1, 1}, {-1, 2}, {-2, 1}, {-1, -1}, {0, -1}}, 2, 3),
      third("21", {{1, 1}, {-1, 2}, {-1, -2}}, 5, 1),
      third("22", {{1, 1}, {-1, 2}, {-1, -1}, {0, -1}}, 5, 1),
      third("23", {{1, 1}, {-1, 2}, {0, -1}, {2, -1}}, 3, 2),
      third("24", {{0, 1}, {-1, 2}, {-2, 1}, {-1, 0}, {1, -1}}, 4, 1),
      third("25", {{0, 1}, {-1, 2}, {-2, 1}, {1, -1}}, 3, 1),
      third("26", {{-1, 2}, {-2, 1}, {1, -1}}, 2, 1),
  };
  if (id == "table1") return t1;
  if (id == "table2") return t2;
  if (id == "table4") return t4;
  throw Error(ErrorCode::BadInput, "unknown table '" + id + "'");
}

const std::vector<CandidateTriple>& golden_triples() {
  static const std::vector<CandidateTriple> t{{5, 2, 1}, {5, 5, 2}, {6, 2, 1}, {6, 3, 1}, {7, 2, 1}, {7, 3, 1},
                                              {8, 2, 1}, {8, 3, 1}, {8, 4, 1}, {9, 2, 1}, {9, 3, 1}, {9, 4, 1}};
  return t;
}

bool TableReport::ok() const {
  if (!problems.empty()) return false;
  return std::all_of(rows.begin(), rows.end(), [](const RowCheck& r) { return r.ok; });
}

TableReport verify_table(const std::string& id) {
  const auto& table = golden_table(id);
  const auto third = CyclicQuotientSingularity::from_Rq(3, 1);
  TableReport rep;
  rep.id = id;
  std::vector<FanoPolygon> polys;
  for (const auto& row : table) {
    RowCheck rc{row.name, true, {}};
    auto bad = [&](std::string s) {
      rc.ok = false;
      rc.problems.push_back(std::move(s));
    };
    try {
      FanoPolygon p = make_polygon(row.vertices);
      polys.push_back(p);
      auto sc = singularity_content(p);
      if (sc.n != row.n) bad("n is " + sc.n.get_str() + ", expected " + std::to_string(row.n));
      long m = 0;
      for (const auto& s : sc.basket) {
        if (s == third) ++m;
        else bad("basket contains " + s.text());
      }
      if (m != row.m) bad("basket has " + std::to_string(m) + " points 1/3(1,1), expected " + std::to_string(row.m));
      Rat d = degree(p);
      if (d != row.degree) bad("degree is " + to_string(d) + ", expected " + to_string(row.degree));
      if (d != normalized_dual_volume(p)) bad("degree differs from the dual volume");
      if (id != "table4" && !is_minimal(p)) bad("not minimal");
      if (row.weights) {
        auto tw = triangle_weights(p);
        std::array<Int, 3> got{tw.l0, tw.l1, tw.l2};
        std::sort(got.begin(), got.end());
        for (int i = 0; i < 3; ++i)
          if (got[i] != (*row.weights)[i]) {
            bad("weights are (" + got[0].get_str() + "," + got[1].get_str() + "," + got[2].get_str() + ")");
            break;
          }
      }
    } catch (const Error& e) {
      bad(std::string(error_name(e.code())) + ": " + e.what());
    }
    rep.rows.push_back(std::move(rc));
  }
  if (id == "table4" && polys.size() == table.size()) {
    ClassReport cr = partition_into_classes(polys);
    if (cr.components.size() != polys.size())
      rep.problems.push_back("rows fall into " + std::to_string(cr.components.size()) + " classes");
    if (!cr.unresolved.empty())
      rep.problems.push_back(std::to_string(cr.unresolved.size()) + " pairs are not certified distinct");
  }
  return rep;
}

}  // namespace fano
