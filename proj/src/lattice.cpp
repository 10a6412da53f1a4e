#include "fano/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace fano {

const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotFano: return "NotFano";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::DegenerateCone: return "DegenerateCone";
    case ErrorCode::BadInput: return "BadInput";
    case ErrorCode::NoMutation: return "NoMutation";
    case ErrorCode::NoTCones: return "NoTCones";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotTriangle: return "NotTriangle";
    case ErrorCode::NonResidualEntry: return "NonResidualEntry";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::InconsistentHilbert: return "InconsistentHilbert";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Mismatch: return "Mismatch";
  }
  return "Error";
}

std::string to_string(const Int& v) { return v.get_str(); }
std::string to_string(const Rat& q) { return q.get_str(); }
std::string to_string(const IntVec2& v) { return "(" + v.x.get_str() + "," + v.y.get_str() + ")"; }
std::string to_string(const RatVec2& v) { return "(" + v.x.get_str() + "," + v.y.get_str() + ")"; }

IntVec2 UnimodularMap::apply_dual(const IntVec2& u) const {
  // u o g^{-1}; g^{-1} = det * [[d,-b],[-c,a]]
  Int e = det();
  return {Int(e * (u.x * d - u.y * c)), Int(e * (-u.x * b + u.y * a))};
}

RatVec2 UnimodularMap::apply_dual(const RatVec2& u) const {
  Int e = det();
  return {Rat(e * (u.x * d - u.y * c)), Rat(e * (-u.x * b + u.y * a))};
}

UnimodularMap UnimodularMap::inverse() const {
  Int e = det();
  return {Int(e * d), Int(-e * b), Int(-e * c), Int(e * a)};
}

UnimodularMap UnimodularMap::operator*(const UnimodularMap& o) const {
  return {Int(a * o.a + b * o.c), Int(a * o.b + b * o.d), Int(c * o.a + d * o.c), Int(c * o.b + d * o.d)};
}

bool operator<(const FanoPolygon& p, const FanoPolygon& q) {
  return std::lexicographical_compare(p.v_.begin(), p.v_.end(), q.v_.begin(), q.v_.end());
}

FanoPolygon FanoPolygon::from_ccw_unchecked(std::vector<IntVec2> v) {
  FanoPolygon p;
  p.v_ = std::move(v);
  return p;
}

std::size_t FanoPolygonHash::operator()(const FanoPolygon& p) const {
  std::size_t h = p.size();
  for (const auto& v : p.vertices()) {
    h = h * 1000003u ^ hash_int(v.x);
    h = h * 1000003u ^ hash_int(v.y);
  }
  return h;
}

RationalPolygon RationalPolygon::from_ccw_unchecked(std::vector<RatVec2> v) {
  auto it = std::min_element(v.begin(), v.end());
  std::rotate(v.begin(), it, v.end());
  RationalPolygon d;
  d.v_ = std::move(v);
  return d;
}

namespace {

template <class V>
std::vector<V> hull_impl(std::vector<V> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<V> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && sgn(cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2])) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && sgn(cross(h[k - 1] - h[k - 2], pts[i - 1] - h[k - 2])) <= 0) --k;
    h[k++] = pts[i - 1];
  }
  h.resize(k - 1);
  return h;
}

template <class V>
bool origin_strictly_inside(const std::vector<V>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(cross(v[i], v[(i + 1) % v.size()])) <= 0) return false;
  return true;
}

}  // namespace

std::vector<IntVec2> convex_hull(std::vector<IntVec2> pts) { return hull_impl(std::move(pts)); }
std::vector<RatVec2> convex_hull(std::vector<RatVec2> pts) { return hull_impl(std::move(pts)); }

FanoPolygon make_polygon(const std::vector<IntVec2>& points) {
  auto h = convex_hull(points);
  if (h.size() < 3) throw Error(ErrorCode::Degenerate, "hull is not two-dimensional");
  for (const auto& v : h)
    if (!is_primitive(v)) throw Error(ErrorCode::NotFano, "vertex " + to_string(v) + " is not primitive");
  if (!origin_strictly_inside(h)) throw Error(ErrorCode::NotFano, "origin is not strictly interior");
  return FanoPolygon::from_ccw_unchecked(std::move(h));
}

RationalPolygon make_rational_polygon(const std::vector<RatVec2>& points) {
  auto h = convex_hull(points);
  if (h.size() < 3) throw Error(ErrorCode::Degenerate, "hull is not two-dimensional");
  if (!origin_strictly_inside(h)) throw Error(ErrorCode::NotFano, "origin is not strictly interior");
  return RationalPolygon::from_ccw_unchecked(std::move(h));
}

FanoPolygon transform(const FanoPolygon& p, const UnimodularMap& g) {
  std::vector<IntVec2> v;
  v.reserve(p.size());
  for (const auto& x : p.vertices()) v.push_back(g.apply(x));
  if (g.det() < 0) std::reverse(v.begin(), v.end());
  auto it = std::min_element(v.begin(), v.end());
  std::rotate(v.begin(), it, v.end());
  return FanoPolygon::from_ccw_unchecked(std::move(v));
}

RationalPolygon transform_dual(const RationalPolygon& d, const UnimodularMap& g) {
  std::vector<RatVec2> v;
  for (const auto& x : d.vertices()) v.push_back(g.apply_dual(x));
  if (g.det() < 0) std::reverse(v.begin(), v.end());
  return RationalPolygon::from_ccw_unchecked(std::move(v));
}

namespace {

// Row-style Hermite reduction of the 2 x n matrix with columns cols.
// Returns U with U*cols in normal form; first column is primitive so it becomes (1,0).
UnimodularMap hermite(const std::vector<IntVec2>& cols) {
  const IntVec2& v0 = cols[0];
  Int g, s, t;
  ext_gcd(v0.x, v0.y, g, s, t);
  // rows (s,t) and (-y,x): sends v0 to (1,0)
  UnimodularMap u{s, t, Int(-v0.y), Int(v0.x)};
  for (std::size_t j = 1; j < cols.size(); ++j) {
    IntVec2 c = u.apply(cols[j]);
    if (c.y == 0) continue;
    if (c.y < 0) {
      u = UnimodularMap{1, 0, 0, -1} * u;
      c.y = -c.y;
    }
    Int q = floor_q(make_rat(c.x, c.y));
    u = UnimodularMap{1, Int(-q), 0, 1} * u;
    break;
  }
  return u;
}

}  // namespace

Canonical canonical_form(const FanoPolygon& p) {
  const std::size_t n = p.size();
  std::optional<Canonical> best;
  std::vector<IntVec2> cols(n), img(n);
  for (int orient = 0; orient < 2; ++orient) {
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t j = 0; j < n; ++j)
        cols[j] = orient == 0 ? p.vertex(s + j) : p.vertex(s + n - j);
      UnimodularMap u = hermite(cols);
      for (std::size_t j = 0; j < n; ++j) img[j] = u.apply(cols[j]);
      if (!best || std::lexicographical_compare(img.begin(), img.end(), best->polygon.vertices().begin(),
                                                best->polygon.vertices().end())) {
        best = Canonical{FanoPolygon::from_ccw_unchecked(img), u};
      }
    }
  }
  return *best;
}

FanoPolygon canonical(const FanoPolygon& p) { return canonical_form(p).polygon; }

std::vector<EdgeData> edge_data(const FanoPolygon& p) {
  std::vector<EdgeData> out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    EdgeData e;
    e.index = i;
    e.from = p.vertex(i);
    e.to = p.vertex(i + 1);
    IntVec2 d = e.to - e.from;
    e.k = gcd(d);
    e.w = IntVec2(Int(-d.y / e.k), Int(d.x / e.k));
    e.r = -pair(e.w, e.from);
    out.push_back(std::move(e));
  }
  return out;
}

Counts counts(const FanoPolygon& p) {
  Counts c;
  c.boundary = 0;
  c.volume = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    c.boundary += gcd(p.vertex(i + 1) - p.vertex(i));
    c.volume += cross(p.vertex(i), p.vertex(i + 1));
  }
  c.interior = (c.volume - c.boundary + 2) / 2;
  return c;
}

bool contains(const FanoPolygon& p, const IntVec2& v) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (cross(p.vertex(i + 1) - p.vertex(i), v - p.vertex(i)) < 0) return false;
  return true;
}

bool contains_interior(const FanoPolygon& p, const IntVec2& v) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (cross(p.vertex(i + 1) - p.vertex(i), v - p.vertex(i)) <= 0) return false;
  return true;
}

bool contains(const RationalPolygon& d, const RatVec2& u) {
  const auto& v = d.vertices();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (cross(v[(i + 1) % v.size()] - v[i], u - v[i]) < 0) return false;
  return true;
}

RationalPolygon dual_polygon(const FanoPolygon& p) {
  std::vector<RatVec2> u;
  for (const auto& e : edge_data(p)) u.push_back({make_rat(e.w.x, e.r), make_rat(e.w.y, e.r)});
  return RationalPolygon::from_ccw_unchecked(std::move(u));
}

RationalPolygon dual(const RationalPolygon& d) {
  const auto& v = d.vertices();
  std::vector<RatVec2> u;
  for (std::size_t i = 0; i < v.size(); ++i) {
    RatVec2 e = v[(i + 1) % v.size()] - v[i];
    RatVec2 nrm{Rat(-e.y), e.x};
    Rat h = -pair(nrm, v[i]);
    u.push_back({Rat(nrm.x / h), Rat(nrm.y / h)});
  }
  return RationalPolygon::from_ccw_unchecked(std::move(u));
}

FanoPolygon lattice_dual(const RationalPolygon& d) {
  RationalPolygon e = dual(d);
  std::vector<IntVec2> v;
  for (const auto& x : e.vertices()) {
    if (x.x.get_den() != 1 || x.y.get_den() != 1)
      throw Error(ErrorCode::NotFano, "dual vertex " + to_string(x) + " is not integral");
    IntVec2 iv(x.x.get_num(), x.y.get_num());
    if (!is_primitive(iv)) throw Error(ErrorCode::NotFano, "dual vertex " + to_string(iv) + " is not primitive");
    v.push_back(iv);
  }
  auto it = std::min_element(v.begin(), v.end());
  std::rotate(v.begin(), it, v.end());
  return FanoPolygon::from_ccw_unchecked(std::move(v));
}

Rat normalized_volume(const RationalPolygon& d) {
  Rat s = 0;
  const auto& v = d.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) s += cross(v[i], v[(i + 1) % v.size()]);
  return s;
}

Rat normalized_dual_volume(const FanoPolygon& p) { return normalized_volume(dual_polygon(p)); }

Int ehrhart_count(const RationalPolygon& d, unsigned long i) {
  if (i == 0) return 1;
  const auto& v = d.vertices();
  const std::size_t n = v.size();
  // integer half-planes a.x >= c for i*D
  std::vector<IntVec2> a(n);
  std::vector<Int> c(n);
  Rat scale(static_cast<long>(i));
  for (std::size_t j = 0; j < n; ++j) {
    RatVec2 e = v[(j + 1) % n] - v[j];
    Int den = lcm(e.x.get_den(), e.y.get_den());
    IntVec2 nrm(Int(-e.y * den), Int(e.x * den));
    Int g = gcd(nrm);
    nrm = IntVec2(Int(nrm.x / g), Int(nrm.y / g));
    a[j] = nrm;
    c[j] = ceil_q(scale * pair(RatVec2(nrm), v[j]));
  }
  Rat xmin = v[0].x, xmax = v[0].x, ymin = v[0].y, ymax = v[0].y;
  for (const auto& p : v) {
    if (p.x < xmin) xmin = p.x;
    if (p.x > xmax) xmax = p.x;
    if (p.y < ymin) ymin = p.y;
    if (p.y > ymax) ymax = p.y;
  }
  Int x0 = ceil_q(scale * xmin), x1 = floor_q(scale * xmax);
  Int y0 = ceil_q(scale * ymin), y1 = floor_q(scale * ymax);
  Int count = 0;
  Int lhs;
  for (Int x = x0; x <= x1; ++x) {
    for (Int y = y0; y <= y1; ++y) {
      bool in = true;
      for (std::size_t j = 0; j < n && in; ++j) {
        lhs = a[j].x * x + a[j].y * y;
        if (lhs < c[j]) in = false;
      }
      if (in) ++count;
    }
  }
  return count;
}

}  // namespace fano
