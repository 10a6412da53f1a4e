#include <doctest.h>

#include "oracles.hpp"

using namespace fano;
using oracle::poly;

TEST_CASE("make_polygon keeps hull vertices in CCW order") {
  auto p = poly({{1, 0}, {0, 1}, {-1, -1}});
  CHECK(p.size() == 3);
  auto q = poly({{1, 0}, {0, 1}, {1, 1}, {-1, -1}});
  CHECK(q.size() == 4);
  for (std::size_t i = 0; i < q.size(); ++i) CHECK(cross(q.vertex(i), q.vertex(i + 1)) > 0);
}

TEST_CASE("make_polygon rejects bad input") {
  auto code = [](std::vector<IntVec2> v) {
    try {
      make_polygon(v);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Mismatch;
  };
  CHECK(code({{2, 0}, {0, 1}, {-1, -1}}) == ErrorCode::NotFano);
  CHECK(code({{1, 0}, {0, 1}, {1, 1}}) == ErrorCode::NotFano);
  CHECK(code({{1, 0}, {-1, 0}}) == ErrorCode::Degenerate);
  CHECK(code({{1, 0}, {-1, 0}, {3, 0}}) == ErrorCode::Degenerate);
  CHECK(code({}) != ErrorCode::Mismatch);
}

TEST_CASE("hull agrees with a brute-force oracle") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> c(-6, 6);
  int tested = 0;
  while (tested < 300) {
    std::vector<IntVec2> pts;
    std::vector<std::pair<long, long>> raw;
    for (int k = 0; k < 7; ++k) {
      long x = c(rng), y = c(rng);
      if (std::gcd(x, y) != 1) continue;
      pts.emplace_back(x, y);
      raw.emplace_back(x, y);
    }
    FanoPolygon p;
    try {
      p = make_polygon(pts);
    } catch (const Error&) {
      continue;
    }
    auto want = oracle::hull_vertices(raw);
    REQUIRE(want.size() == p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      CHECK(p[i].x == want[i].first);
      CHECK(p[i].y == want[i].second);
    }
    ++tested;
  }
}

TEST_CASE("edge data") {
  auto p = poly({{1, 0}, {0, 1}, {-1, -3}});
  bool seen = false;
  for (const auto& e : edge_data(p))
    if (e.from == IntVec2(-1, -3) && e.to == IntVec2(1, 0)) {
      seen = true;
      CHECK(e.w == IntVec2(-3, 2));
      CHECK(e.r == 3);
      CHECK(e.k == 1);
    }
  CHECK(seen);
}

TEST_CASE("counts and Pick") {
  auto c = counts(poly({{1, 0}, {0, 1}, {-1, -1}}));
  CHECK(c.boundary == 3);
  CHECK(c.interior == 1);
  CHECK(c.volume == 3);
  c = counts(poly({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}));
  CHECK((c.boundary == 4 && c.interior == 1 && c.volume == 4));
  c = counts(poly({{1, 0}, {0, 1}, {-1, -3}}));
  CHECK((c.boundary == 3 && c.interior == 2 && c.volume == 5));

  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    auto p = oracle::random_fano(rng, 7);
    auto k = counts(p);
    CHECK(k.volume == k.boundary + 2 * k.interior - 2);
    // interior and boundary by scanning a box
    long in = 0, bd = 0;
    for (long x = -7; x <= 7; ++x)
      for (long y = -7; y <= 7; ++y) {
        IntVec2 v(x, y);
        if (contains_interior(p, v)) ++in;
        else if (contains(p, v)) ++bd;
      }
    CHECK(k.interior == in);
    CHECK(k.boundary == bd);
  }
}

TEST_CASE("dual polygon") {
  auto d = dual_polygon(poly({{1, 0}, {0, 1}, {-1, -1}}));
  std::set<std::pair<Rat, Rat>> got;
  for (const auto& v : d.vertices()) got.insert({v.x, v.y});
  CHECK(got == std::set<std::pair<Rat, Rat>>{{2, -1}, {-1, 2}, {-1, -1}});
  d = dual_polygon(poly({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}));
  CHECK(d.size() == 4);
  for (const auto& v : d.vertices()) CHECK((abs(v.x) == 1 && abs(v.y) == 1));

  CHECK(normalized_dual_volume(poly({{1, 0}, {0, 1}, {-1, -1}})) == 9);
  CHECK(normalized_dual_volume(poly({{1, 0}, {0, 1}, {-1, -3}})) == Rat(25, 3));
}

TEST_CASE("double dual returns the polygon") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    auto p = oracle::random_fano(rng);
    CHECK(lattice_dual(dual_polygon(p)) == p);
  }
}

TEST_CASE("ehrhart counts against a box scan") {
  auto p2 = poly({{1, 0}, {0, 1}, {-1, -1}});
  auto p113 = poly({{1, 0}, {0, 1}, {-1, -3}});
  CHECK(ehrhart_count(dual_polygon(p2), 0) == 1);
  CHECK(ehrhart_count(dual_polygon(p2), 1) == 10);
  CHECK(ehrhart_count(dual_polygon(p113), 1) == 9);
  std::mt19937_64 rng(8);
  for (int t = 0; t < 60; ++t) {
    auto p = oracle::random_fano(rng, 4);
    auto d = dual_polygon(p);
    for (long i = 0; i <= 5; ++i) CHECK(ehrhart_count(d, i) == oracle::dual_dilate_count(p, i));
  }
}

TEST_CASE("canonical form is a complete invariant under GL2") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 300; ++t) {
    auto p = oracle::random_fano(rng);
    auto g = oracle::random_unimodular(rng);
    auto q = transform(p, g);
    CHECK(canonical(p) == canonical(q));
    auto cf = canonical_form(q);
    CHECK(cf.map.det() * cf.map.det() == 1);
    auto image = transform(q, cf.map).vertices();
    auto target = cf.polygon.vertices();
    std::sort(image.begin(), image.end());
    std::sort(target.begin(), target.end());
    CHECK(image == target);
    CHECK(cf.polygon[0] == IntVec2(1, 0));
    CHECK(canonical(cf.polygon) == cf.polygon);
  }
  // distinct classes stay distinct
  CHECK(canonical(poly({{1, 0}, {0, 1}, {-1, -1}, {0, -1}})) != canonical(poly({{1, 0}, {0, 1}, {-1, 0}, {0, -1}})));
}

TEST_CASE("edge heights and widths are GL2 invariant") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 100; ++t) {
    auto p = oracle::random_fano(rng);
    auto q = transform(p, oracle::random_unimodular(rng));
    std::multiset<std::pair<long, long>> a, b;
    for (const auto& e : edge_data(p)) a.insert({e.r.get_si(), e.k.get_si()});
    for (const auto& e : edge_data(q)) b.insert({e.r.get_si(), e.k.get_si()});
    CHECK(a == b);
  }
}

TEST_CASE("large coordinates stay exact") {
  Int big("1000000000000000000000");
  auto p = make_polygon({{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-1), Int(big)}, {Int(-1), Int(-big - 1)}});
  auto k = counts(p);
  CHECK(k.volume == k.boundary + 2 * k.interior - 2);
  CHECK(canonical(transform(p, {1, 1, 0, 1})) == canonical(p));
}
