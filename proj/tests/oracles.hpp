#pragma once
// Reference implementations and input generators for the tests. The oracles work on
// machine integers and do not call the library routines they are compared against.

#include <algorithm>
#include <complex>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "fano/classification.hpp"
#include "fano/quiver.hpp"

namespace oracle {

using fano::Int;
using fano::IntVec2;
using fano::Rat;

inline long L(const Int& v) { return v.get_si(); }

// vertices of conv(pts) by brute force: a point is a vertex when some line through it has
// every other point strictly on one side; returned CCW from the lexicographic minimum
inline std::vector<std::pair<long, long>> hull_vertices(const std::vector<std::pair<long, long>>& raw) {
  std::set<std::pair<long, long>> uniq(raw.begin(), raw.end());
  std::vector<std::pair<long, long>> pts(uniq.begin(), uniq.end());
  std::vector<std::pair<long, long>> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool extreme = false;
    // test the normals of the segments to every other point, rotated slightly both ways
    for (std::size_t j = 0; j < pts.size() && !extreme; ++j) {
      if (j == i) continue;
      long dx = pts[j].first - pts[i].first, dy = pts[j].second - pts[i].second;
      for (int s : {-1, 1}) {
        // candidate direction: perpendicular to (dx,dy) perturbed toward s*(dx,dy)
        long nx = -dy * 1000 + s * dx, ny = dx * 1000 + s * dy;
        bool ok = true;
        for (std::size_t k = 0; k < pts.size() && ok; ++k)
          if (k != i && nx * (pts[k].first - pts[i].first) + ny * (pts[k].second - pts[i].second) <= 0) ok = false;
        if (ok) extreme = true;
      }
    }
    if (extreme || pts.size() == 1) out.push_back(pts[i]);
  }
  std::pair<double, double> c{0, 0};
  for (auto& p : out) c.first += p.first, c.second += p.second;
  c.first /= out.size();
  c.second /= out.size();
  auto start = *std::min_element(out.begin(), out.end());
  auto ang = [&](const std::pair<long, long>& p) {
    double a = std::atan2(p.second - c.second, p.first - c.first);
    double a0 = std::atan2(start.second - c.second, start.first - c.first);
    double d = a - a0;
    while (d < 0) d += 2 * M_PI;
    return p == start ? -1.0 : d;
  };
  std::sort(out.begin(), out.end(), [&](auto& a, auto& b) { return ang(a) < ang(b); });
  return out;
}

// lattice points of the i-th dilate of the dual, scanning a box
// {u : <u, v> >= -i for every vertex v}
inline long dual_dilate_count(const fano::FanoPolygon& p, long i) {
  const auto& v = p.vertices();
  // the dual is bounded by the intersections of adjacent constraint lines
  double bound = 0;
  for (std::size_t a = 0; a < v.size(); ++a) {
    const auto& x = v[a];
    const auto& y = v[(a + 1) % v.size()];
    double det = double(L(x.x)) * L(y.y) - double(L(x.y)) * L(y.x);
    double ux = (-double(i) * L(y.y) + double(i) * L(x.y)) / det;
    double uy = (-double(i) * L(x.x) + double(i) * L(y.x)) / det;
    bound = std::max({bound, std::abs(ux), std::abs(uy)});
  }
  long B = long(bound) + 2;
  long count = 0;
  for (long a = -B; a <= B; ++a)
    for (long b = -B; b <= B; ++b) {
      bool in = true;
      for (const auto& x : v)
        if (a * L(x.x) + b * L(x.y) < -i) {
          in = false;
          break;
        }
      if (in) ++count;
    }
  return count;
}

// delta_j by floating-point summation over roots of unity
inline double delta_float(long R, long q, long j) {
  std::complex<long double> s = 0;
  for (long t = 1; t < R; ++t) {
    std::complex<long double> e = std::polar(1.0L, 2 * M_PIl * t / R);
    s += std::pow(e, j) / ((1.0L - e) * (1.0L - std::pow(e, q)));
  }
  return double(s.real() / R);
}

// 1/R(1,q) of the cone over rho0-rho1, found by searching for an integral change of
// basis sending rho0 to (0,1) and rho1 to (R,-q); q is reduced to min(q, q^-1 mod R)
inline std::pair<long, long> cone_type(std::pair<long, long> r0, std::pair<long, long> r1) {
  long R = std::abs(r0.first * r1.second - r0.second * r1.first);
  if (R == 1) return {1, 0};
  // integral A with A r0 = (0,1), A r1 = (R,-q): A = T * inv([r0 r1]), T = [[0,R],[1,-q]]
  // inv([r0 r1]) = adj / det; A integral iff T * adj divisible by det
  long det = r0.first * r1.second - r0.second * r1.first;
  long adj[2][2] = {{r1.second, -r1.first}, {-r0.second, r0.first}};
  long found = -1;
  for (long q = 1; q < R && found < 0; ++q) {
    if (std::gcd(q, R) != 1) continue;
    long T[2][2] = {{0, R}, {1, -q}};
    bool ok = true;
    for (int a = 0; a < 2 && ok; ++a)
      for (int b = 0; b < 2 && ok; ++b) {
        long s = T[a][0] * adj[0][b] + T[a][1] * adj[1][b];
        if (s % det != 0) ok = false;
      }
    if (ok) found = q;
  }
  long q = found;
  long inv = 1;
  while ((inv * q) % R != 1) ++inv;
  return {R, std::min(q, inv)};
}

// quiver mutation by explicit arrow surgery on a multigraph
inline std::vector<std::vector<long>> mutate_arrows(std::vector<std::vector<long>> B, std::size_t k) {
  const std::size_t n = B.size();
  // arrows[i][j] = number of arrows i -> j
  std::vector<std::vector<long>> arrows(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (B[i][j] > 0) arrows[i][j] = B[i][j];
  auto next = arrows;
  // composite arrows through k
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != k && j != k && i != j) next[i][j] += arrows[i][k] * arrows[k][j];
  // reverse arrows at k
  for (std::size_t i = 0; i < n; ++i) {
    next[i][k] = arrows[k][i];
    next[k][i] = arrows[i][k];
  }
  // cancel 2-cycles
  std::vector<std::vector<long>> out(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = next[i][j] - next[j][i];
  return out;
}

inline std::vector<std::vector<Int>> to_int(const std::vector<std::vector<long>>& b) {
  std::vector<std::vector<Int>> out;
  for (const auto& r : b) {
    out.emplace_back();
    for (long x : r) out.back().emplace_back(x);
  }
  return out;
}

inline std::vector<std::vector<long>> to_long(const std::vector<std::vector<Int>>& b) {
  std::vector<std::vector<long>> out;
  for (const auto& r : b) {
    out.emplace_back();
    for (const auto& x : r) out.back().push_back(x.get_si());
  }
  return out;
}

inline std::vector<std::vector<long>> random_skew(std::mt19937_64& rng, std::size_t n, long maxv) {
  std::uniform_int_distribution<long> d(-maxv, maxv);
  std::vector<std::vector<long>> b(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      b[i][j] = d(rng);
      b[j][i] = -b[i][j];
    }
  return b;
}

inline fano::UnimodularMap random_unimodular(std::mt19937_64& rng, int steps = 6) {
  std::uniform_int_distribution<int> pick(0, 3), amt(-3, 3);
  fano::UnimodularMap g;
  for (int s = 0; s < steps; ++s) {
    fano::UnimodularMap e;
    switch (pick(rng)) {
      case 0: e.b = amt(rng); break;
      case 1: e.c = amt(rng); break;
      case 2: e = {0, 1, 1, 0}; break;
      default: e = {-1, 0, 0, 1}; break;
    }
    g = e * g;
  }
  return g;
}

// random Fano polygon: hull of a few primitive points in a box, retried until the
// origin is strictly interior
inline fano::FanoPolygon random_fano(std::mt19937_64& rng, long box = 5, int npts = 6) {
  std::uniform_int_distribution<long> c(-box, box);
  std::uniform_int_distribution<int> cnt(3, npts);
  for (;;) {
    std::vector<IntVec2> pts;
    int k = cnt(rng);
    while (static_cast<int>(pts.size()) < k) {
      long x = c(rng), y = c(rng);
      if (std::gcd(x, y) == 1) pts.emplace_back(x, y);
    }
    try {
      return fano::make_polygon(pts);
    } catch (const fano::Error&) {
    }
  }
}

// random polygon from a random walk of mutations starting at a table polygon
inline fano::FanoPolygon random_mutant(std::mt19937_64& rng, const fano::FanoPolygon& start, int steps,
                                       long max_boundary = 60) {
  fano::FanoPolygon p = start;
  for (int s = 0; s < steps; ++s) {
    std::vector<std::pair<std::size_t, bool>> moves;
    for (const auto& e : fano::edge_data(p))
      if (e.k >= e.r) moves.emplace_back(e.index, false), moves.emplace_back(e.index, true);
    if (moves.empty()) break;
    auto [edge, flip] = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
    auto q = fano::mutate_raw(p, edge, flip);
    if (fano::counts(q).boundary > max_boundary) continue;
    p = q;
  }
  return p;
}

inline std::vector<fano::FanoPolygon> table_polygons() {
  std::vector<fano::FanoPolygon> out;
  for (const char* id : {"table1", "table2", "table4"})
    for (const auto& row : fano::golden_table(id)) out.push_back(fano::make_polygon(row.vertices));
  return out;
}

inline fano::FanoPolygon row(const std::string& table, const std::string& name) {
  for (const auto& r : fano::golden_table(table))
    if (r.name == name) return fano::make_polygon(r.vertices);
  throw std::runtime_error("no row " + name);
}

// a row of table 1 or 2 by name
inline fano::FanoPolygon named(const std::string& name) {
  for (const char* id : {"table1", "table2"})
    for (const auto& r : fano::golden_table(id))
      if (r.name == name) return fano::make_polygon(r.vertices);
  throw std::runtime_error("no row " + name);
}

inline fano::FanoPolygon poly(std::initializer_list<std::pair<long, long>> l) {
  std::vector<IntVec2> v;
  for (auto [x, y] : l) v.emplace_back(x, y);
  return fano::make_polygon(v);
}

}  // namespace oracle
