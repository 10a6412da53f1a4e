#pragma once

#include <optional>
#include <vector>

#include "fano/arith.hpp"

namespace fano {

// Acts on column vectors of N: (x,y) -> (a x + b y, c x + d y).
struct UnimodularMap {
  Int a{1}, b{0}, c{0}, d{1};

  static UnimodularMap identity() { return {}; }
  Int det() const { return a * d - b * c; }
  IntVec2 apply(const IntVec2& v) const { return {Int(a * v.x + b * v.y), Int(c * v.x + d * v.y)}; }
  RatVec2 apply(const RatVec2& v) const { return {Rat(a * v.x + b * v.y), Rat(c * v.x + d * v.y)}; }
  // induced action on M, so that pair(apply_dual(u), apply(v)) = pair(u, v)
  IntVec2 apply_dual(const IntVec2& u) const;
  RatVec2 apply_dual(const RatVec2& u) const;
  UnimodularMap inverse() const;
  // (this * o)(v) = this(o(v))
  UnimodularMap operator*(const UnimodularMap& o) const;
  friend bool operator==(const UnimodularMap& x, const UnimodularMap& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

class FanoPolygon {
 public:
  FanoPolygon() = default;

  const std::vector<IntVec2>& vertices() const { return v_; }
  std::size_t size() const { return v_.size(); }
  const IntVec2& operator[](std::size_t i) const { return v_[i]; }
  const IntVec2& vertex(std::size_t i) const { return v_[i % v_.size()]; }

  friend bool operator==(const FanoPolygon& p, const FanoPolygon& q) { return p.v_ == q.v_; }
  friend bool operator!=(const FanoPolygon& p, const FanoPolygon& q) { return !(p == q); }
  // lexicographic on the vertex sequence; used as the canonical key order
  friend bool operator<(const FanoPolygon& p, const FanoPolygon& q);

  // Trusts the caller: CCW, strictly convex, primitive, origin interior.
  static FanoPolygon from_ccw_unchecked(std::vector<IntVec2> v);

 private:
  std::vector<IntVec2> v_;
};

struct FanoPolygonHash {
  std::size_t operator()(const FanoPolygon& p) const;
};

class RationalPolygon {
 public:
  RationalPolygon() = default;
  const std::vector<RatVec2>& vertices() const { return v_; }
  std::size_t size() const { return v_.size(); }
  const RatVec2& operator[](std::size_t i) const { return v_[i]; }

  friend bool operator==(const RationalPolygon& p, const RationalPolygon& q) { return p.v_ == q.v_; }
  friend bool operator!=(const RationalPolygon& p, const RationalPolygon& q) { return !(p == q); }

  // Vertices rotated so the lexicographically smallest comes first.
  static RationalPolygon from_ccw_unchecked(std::vector<RatVec2> v);

 private:
  std::vector<RatVec2> v_;
};

struct EdgeData {
  std::size_t index = 0;
  IntVec2 from, to;
  IntVec2 w;  // primitive inner normal in M
  Int r;      // height
  Int k;      // width
};

struct Counts {
  Int boundary;
  Int interior;
  Int volume;  // twice the Euclidean area
};

// Strictly convex hull in CCW order, starting at the lexicographically smallest point.
std::vector<IntVec2> convex_hull(std::vector<IntVec2> pts);
std::vector<RatVec2> convex_hull(std::vector<RatVec2> pts);

FanoPolygon make_polygon(const std::vector<IntVec2>& points);
RationalPolygon make_rational_polygon(const std::vector<RatVec2>& points);

// g(P), re-oriented CCW and restarted at the smallest vertex.
FanoPolygon transform(const FanoPolygon& p, const UnimodularMap& g);
RationalPolygon transform_dual(const RationalPolygon& d, const UnimodularMap& g);

struct Canonical {
  FanoPolygon polygon;
  UnimodularMap map;  // map.apply(P) = polygon as vertex sets
};
Canonical canonical_form(const FanoPolygon& p);
FanoPolygon canonical(const FanoPolygon& p);

std::vector<EdgeData> edge_data(const FanoPolygon& p);
Counts counts(const FanoPolygon& p);

bool contains(const FanoPolygon& p, const IntVec2& v);           // closed polygon
bool contains_interior(const FanoPolygon& p, const IntVec2& v);  // open polygon
bool contains(const RationalPolygon& d, const RatVec2& u);

RationalPolygon dual_polygon(const FanoPolygon& p);
RationalPolygon dual(const RationalPolygon& d);
// (D*) as a lattice polygon; throws NotFano when a vertex is not integral or primitive
FanoPolygon lattice_dual(const RationalPolygon& d);
Rat normalized_volume(const RationalPolygon& d);
Rat normalized_dual_volume(const FanoPolygon& p);

Int ehrhart_count(const RationalPolygon& d, unsigned long i);

}  // namespace fano
