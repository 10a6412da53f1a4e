#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "fano/classification.hpp"

namespace fano {

namespace {

// The bounded search runs on machine integers: every coordinate stays inside
// a small box, and each hit is rebuilt and checked with exact arithmetic.
using i64 = std::int64_t;

struct P {
  i64 x, y;
};
P operator+(P a, P b) { return {a.x + b.x, a.y + b.y}; }
P operator-(P a, P b) { return {a.x - b.x, a.y - b.y}; }
P operator*(i64 s, P a) { return {s * a.x, s * a.y}; }
bool operator==(P a, P b) { return a.x == b.x && a.y == b.y; }
i64 cr(P a, P b) { return a.x * b.y - a.y * b.x; }
i64 dot(P a, P b) { return a.x * b.x + a.y * b.y; }
i64 g64(i64 a, i64 b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

void ext64(i64 a, i64 b, i64& s, i64& t) {
  // s a + t b = gcd(a, b) > 0
  i64 r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    i64 q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  if (r0 < 0) {
    s0 = -s0;
    t0 = -t0;
  }
  s = s0;
  t = t0;
}

// Convex CCW chains A = c_0, c_1, ..., c_s, Z with every new edge at height
// <= m; the edges Z -> ... -> A are fixed and given as half-planes.
struct ChainProblem {
  P A, Z;
  P din;   // direction of the fixed edge arriving at A
  P dout;  // direction of the fixed edge leaving Z
  i64 m;
  i64 xmin, xmax, ymin, ymax;
  std::vector<std::pair<P, P>> fixed;  // new vertices lie strictly left of p -> q
};

class ChainSearch {
 public:
  ChainSearch(const ChainProblem& pb, std::function<void(const std::vector<P>&)> emit)
      : pb_(pb), emit_(std::move(emit)) {}

  void run() {
    std::vector<P> path;
    dfs(pb_.A, pb_.din, path);
  }

 private:
  int half(P p) const {
    i64 c = cr(pb_.A, p);
    return (c > 0 || (c == 0 && dot(pb_.A, p) > 0)) ? 0 : 1;
  }
  // angle around the origin measured CCW from A
  bool before(P p, P q) const {
    int hp = half(p), hq = half(q);
    if (hp != hq) return hp < hq;
    return cr(p, q) > 0;
  }
  bool in_box(P v) const { return v.x >= pb_.xmin && v.x <= pb_.xmax && v.y >= pb_.ymin && v.y <= pb_.ymax; }

  void dfs(P c, P dprev, std::vector<P>& path) {
    P e = pb_.Z - c;
    i64 cz = cr(c, pb_.Z);
    if (cr(dprev, e) > 0 && cz > 0 && cz <= pb_.m * g64(e.x, e.y) && cr(e, pb_.dout) > 0) emit_(path);

    i64 s, t;
    ext64(c.x, c.y, s, t);
    P d1{-t, s};  // cross(c, d1) = 1
    const i64 W = std::max(pb_.xmax - pb_.xmin, pb_.ymax - pb_.ymin);
    const i64 cn = std::max(std::abs(c.x), std::abs(c.y));
    const i64 dn = std::max(std::abs(d1.x), std::abs(d1.y));
    for (i64 h = 1; h <= pb_.m; ++h) {
      i64 lam_max = (W + h * dn) / cn + 1;
      for (i64 lam = -lam_max; lam <= lam_max; ++lam) {
        if (g64(h, lam) != 1) continue;
        P d = h * d1 + lam * c;
        if (cr(dprev, d) <= 0) continue;
        for (i64 st = 1;; ++st) {
          P v = c + st * d;
          if (!in_box(v)) break;
          if (v == pb_.Z) break;
          if (cr(d, pb_.Z - v) <= 0) break;  // Z no longer strictly left of the new edge
          if (g64(v.x, v.y) != 1) continue;
          if (!before(c, v) || !before(v, pb_.Z)) continue;
          bool ok = true;
          for (const auto& [p, q] : pb_.fixed)
            if (cr(q - p, v - p) <= 0) {
              ok = false;
              break;
            }
          if (!ok) continue;
          if (!path.empty() && cr(path.front() - pb_.A, v - pb_.A) <= 0) continue;
          path.push_back(v);
          dfs(v, d, path);
          path.pop_back();
        }
      }
    }
  }

  const ChainProblem& pb_;
  std::function<void(const std::vector<P>&)> emit_;
};

FanoPolygon to_polygon(const std::vector<P>& pts) {
  std::vector<IntVec2> v;
  for (const auto& p : pts) v.emplace_back(Int(static_cast<long>(p.x)), Int(static_cast<long>(p.y)));
  return canonical(make_polygon(v));
}

template <class Task>
void run_parallel(std::size_t n, unsigned jobs, Task task) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < std::min<std::size_t>(jobs, n); ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) task(i);
    });
  for (auto& th : pool) th.join();
}

std::vector<FanoPolygon> sorted_unique(std::set<FanoPolygon>&& s) { return {s.begin(), s.end()}; }

// polygons with vertices A, chain..., (b, r - jb - l), (b, r)
void vertical_edge_search(long j, long r, long b, long l, const std::function<void(const FanoPolygon&)>& out) {
  ChainProblem pb;
  pb.A = {b - r, r};
  pb.Z = {b, r - j * b - l};
  P top{b, r};
  pb.din = {-1, 0};
  pb.dout = {0, 1};
  pb.m = r;
  pb.xmin = b - r;
  pb.xmax = b;
  pb.ymin = r - j * b - l;
  pb.ymax = r;
  pb.fixed = {{pb.Z, top}, {top, pb.A}};
  ChainSearch cs(pb, [&](const std::vector<P>& chain) {
    std::vector<P> pts{pb.A};
    pts.insert(pts.end(), chain.begin(), chain.end());
    pts.push_back(pb.Z);
    pts.push_back(top);
    if (g64(pb.Z.x, pb.Z.y) != 1 || g64(pb.A.x, pb.A.y) != 1) return;
    out(to_polygon(pts));
  });
  if (g64(pb.Z.x, pb.Z.y) == 1 && g64(pb.A.x, pb.A.y) == 1 && cr(pb.Z, top) > 0) cs.run();
}

bool primitive_all(std::initializer_list<P> ps) {
  for (auto p : ps)
    if (g64(p.x, p.y) != 1) return false;
  return true;
}

}  // namespace

BasketBounds basket_bounds(const Basket& b) {
  BasketBounds bb{Int(1), Int(1), Rat(0)};
  if (b.empty()) return bb;
  bb.m_B = 0;
  Rat mn = 0;
  for (const auto& s : b) {
    if (!s.is_residual()) throw Error(ErrorCode::NonResidualEntry, s.text() + " is not residual");
    if (s.r() > bb.m_B) bb.m_B = s.r();
    Rat a = degree_contribution(s);
    bb.d_B = lcm(bb.d_B, Int(a.get_den()));
    if (a < mn) mn = a;
  }
  bb.s_B = -mn;
  return bb;
}

Int max_local_index(const FanoPolygon& p) {
  Int m = 0;
  for (const auto& e : edge_data(p))
    if (e.r > m) m = e.r;
  return m;
}

namespace {

// largest r_E allowed by the combined bound for the vertical-edge case
long vertical_r_limit(const BasketBounds& bb, long extra_s, long constant) {
  double s = bb.s_B.get_d(), d = bb.d_B.get_d();
  double sd = s * d;
  return static_cast<long>(std::floor((sd + std::sqrt(sd * sd + 4 * d * (extra_s * s + constant))) / 2)) + 1;
}

}  // namespace

std::vector<CandidateTriple> candidate_triples(const Basket& basket) {
  BasketBounds bb = basket_bounds(basket);
  const bool empty = basket.empty();
  const long mB = bb.m_B.get_si();
  const long rmax = vertical_r_limit(bb, 1, 31);
  std::vector<CandidateTriple> out;
  for (long r = std::max(2L, mB + 1); r <= rmax; ++r) {
    // j < 11 + (r+1) s_B; three T-cone edges force j <= 9 when the basket is empty
    Rat jcap = Rat(11) + Rat(r + 1) * bb.s_B;
    for (long j = 5;; ++j) {
      if (empty ? j > 9 : Rat(j) >= jcap) break;
      // r^2 <= j^2 d_B / (j-4)
      if (Rat(r * r) * (j - 4) > Rat(j * j) * bb.d_B) continue;
      for (long b = 1; 2 * b <= r; ++b) {
        if (2 * r > j * b || std::gcd(b, r) != 1) continue;
        out.push_back({j, r, b});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const CandidateTriple& x, const CandidateTriple& y) {
    return std::tie(x.j, x.r, x.b) < std::tie(y.j, y.r, y.b);
  });
  return out;
}

long default_enumeration_box(long r) { return 6 * r * r + 6; }

std::vector<FanoPolygon> enumerate_fano_max_index(long r, const EnumerationOptions& opt) {
  if (r < 1) throw Error(ErrorCode::BadInput, "index must be positive");
  if (r > 4) throw Error(ErrorCode::Unsupported, "maximum local index above 4 is beyond the search budget");
  const long X = opt.box > 0 ? opt.box : default_enumeration_box(r);
  // one task per normalized top edge E = [(xL, m), (xR, m)]
  struct Top {
    long m, xl, xr;
  };
  std::vector<Top> tops;
  for (long m = 1; m <= r; ++m)
    for (long xl = -(m - 1); xl <= 0; ++xl) {
      if (std::gcd(xl, m) != 1) continue;
      for (long xr = xl + 1; xr <= X; ++xr)
        if (std::gcd(xr, m) == 1) tops.push_back({m, xl, xr});
    }
  std::vector<std::set<FanoPolygon>> found(tops.size());
  run_parallel(tops.size(), opt.jobs, [&](std::size_t i) {
    const Top& tp = tops[i];
    ChainProblem pb;
    pb.A = {tp.xl, tp.m};
    pb.Z = {tp.xr, tp.m};
    pb.din = {-1, 0};
    pb.dout = {-1, 0};
    pb.m = tp.m;
    pb.xmin = -X;
    pb.xmax = X;
    pb.ymin = -X;
    pb.ymax = tp.m - 1;
    pb.fixed = {{pb.Z, pb.A}};
    ChainSearch cs(pb, [&](const std::vector<P>& chain) {
      if (chain.empty()) return;
      std::vector<P> pts{pb.Z, pb.A};
      pts.insert(pts.end(), chain.begin(), chain.end());
      found[i].insert(to_polygon(pts));
    });
    cs.run();
  });
  std::set<FanoPolygon> all;
  for (auto& s : found) all.insert(s.begin(), s.end());
  return sorted_unique(std::move(all));
}

std::vector<FanoPolygon> minimal_above_basket_index(const BasketBounds& bb, bool empty_basket,
                                                    const std::function<bool(const FanoPolygon&)>& accept) {
  const long mB = bb.m_B.get_si();
  std::set<FanoPolygon> out;
  auto offer = [&](const FanoPolygon& p) {
    if (max_local_index(p) > mB && is_minimal(p) && accept(p)) out.insert(p);
  };
  auto offer_pts = [&](std::initializer_list<P> pts) {
    if (!primitive_all(pts)) return;
    std::vector<P> v(pts);
    try {
      offer(to_polygon(v));
    } catch (const Error&) {
    }
  };
  // two-step top edge: a triangle; r_E <= max(m_B + 2, 2 m_B)
  const long rk2 = std::max(mB + 2, 2 * mB);
  for (long r = mB + 1; r <= rk2; ++r)
    for (long a = 1; a < r; ++a)
      if (std::gcd(a, r) == 1) offer_pts({{-a, r}, {-a + 2 * r, r}, {-a, -r}});
  // parallel bottom edge: a rectangle
  for (long r = mB + 1; r <= 2 * mB + 2; ++r)
    for (long a = 1; a < r; ++a)
      if (std::gcd(a, r) == 1) offer_pts({{-a, r}, {-a + r, r}, {-a, -r}, {-a + r, -r}});
  // vertical edge through the lowest vertex, l = 0
  auto triples = candidate_triples({});
  if (!empty_basket) {
    // recompute with the actual bounds
    triples.clear();
    const long rmax = vertical_r_limit(bb, 1, 31);
    for (long r = mB + 1; r <= rmax; ++r)
      for (long j = 5; Rat(j) < Rat(11) + Rat(r + 1) * bb.s_B; ++j) {
        if (Rat(r * r) * (j - 4) > Rat(j * j) * bb.d_B) continue;
        for (long b = 1; 2 * b <= r; ++b)
          if (2 * r <= j * b && std::gcd(b, r) == 1) triples.push_back({j, r, b});
      }
  }
  if (mB < 2) triples.push_back({4, 2, 1});
  for (const auto& t : triples) vertical_edge_search(t.j, t.r, t.b, 0, offer);
  // vertical edge through the lowest vertex, 0 < l < b
  if (!empty_basket) {
    const long rmax = std::max(vertical_r_limit(bb, 2, 36), 10 * bb.d_B.get_si());
    for (long r = mB + 1; r <= rmax; ++r)
      for (long b = 1; 2 * b < r; ++b) {
        if (std::gcd(b, r) != 1) continue;
        for (long l = 1; l < b; ++l)
          for (long j = 4; Rat(j) < Rat(11) + Rat(r + 2) * bb.s_B; ++j) {
            if (j == 4 && l == 1) continue;
            if (2 * r > j * b + l) continue;
            if (Rat((j - 4) * r * r + 2 * l * r) >= Rat(j * (j + 1)) * bb.d_B) continue;
            vertical_edge_search(j, r, b, l, offer);
          }
      }
  }
  return sorted_unique(std::move(out));
}

std::vector<FanoPolygon> enumerate_minimal_with_basket(const Basket& basket, const EnumerationOptions& opt) {
  BasketBounds bb = basket_bounds(basket);
  if (bb.m_B > 3) throw Error(ErrorCode::Unsupported, "baskets with index above 3 are beyond the search budget");
  auto accept = [&](const FanoPolygon& p) {
    auto sc = singularity_content(p);
    return same_basket_multiset(sc.basket, basket);
  };
  std::set<FanoPolygon> out;
  for (const auto& p : enumerate_fano_max_index(bb.m_B.get_si(), opt))
    if (is_minimal(p) && accept(p)) out.insert(p);
  for (const auto& p : minimal_above_basket_index(bb, basket.empty(), accept)) out.insert(p);
  return sorted_unique(std::move(out));
}

std::vector<FanoPolygon> enumerate_minimal_empty(const EnumerationOptions& opt) {
  return enumerate_minimal_with_basket({}, opt);
}

std::vector<FanoPolygon> enumerate_minimal_third(const EnumerationOptions& opt) {
  const auto third = CyclicQuotientSingularity::from_Rq(3, 1);
  Basket one{third};
  BasketBounds bb = basket_bounds(one);
  auto accept = [&](const FanoPolygon& p) {
    auto sc = singularity_content(p);
    if (sc.basket.empty()) return false;
    for (const auto& s : sc.basket)
      if (s != third) return false;
    return true;
  };
  std::set<FanoPolygon> out;
  for (const auto& p : enumerate_fano_max_index(3, opt))
    if (is_minimal(p) && accept(p)) out.insert(p);
  for (const auto& p : minimal_above_basket_index(bb, false, accept)) out.insert(p);
  return sorted_unique(std::move(out));
}

}  // namespace fano
