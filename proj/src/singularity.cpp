#include "fano/singularity.hpp"

#include <algorithm>
#include <regex>

namespace fano {

CyclicQuotientSingularity CyclicQuotientSingularity::from_Rq(const Int& R, const Int& q) {
  if (R < 1) throw Error(ErrorCode::BadInput, "R must be positive");
  CyclicQuotientSingularity s;
  s.R_ = R;
  if (R == 1) {
    s.q_ = 0;
    return s;
  }
  Int qq = mod(q, R);
  if (gcd(qq, R) != 1) throw Error(ErrorCode::BadInput, "1/" + R.get_str() + "(1," + q.get_str() + ") is not isolated");
  Int qi = mod_inverse(qq, R);
  s.q_ = qq < qi ? qq : qi;
  return s;
}

CyclicQuotientSingularity CyclicQuotientSingularity::from_weights(const Int& R, const Int& a, const Int& b) {
  if (R == 1) return from_Rq(R, 0);
  if (gcd(mod(a, R), R) != 1) throw Error(ErrorCode::BadInput, "weight a is not a unit mod R");
  return from_Rq(R, Int(b * mod_inverse(mod(a, R), R)));
}

CyclicQuotientSingularity CyclicQuotientSingularity::from_rkc(const Int& r, const Int& k, const Int& c) {
  if (r < 1 || k < 1) throw Error(ErrorCode::BadInput, "r and k must be positive");
  if (gcd(r, c) != 1) throw Error(ErrorCode::BadInput, "gcd(r,c) must be 1");
  return from_Rq(Int(k * r), Int(k * c - 1));
}

CyclicQuotientSingularity CyclicQuotientSingularity::parse(const std::string& text) {
  static const std::regex re(R"(\s*1\s*/\s*(\d+)\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw Error(ErrorCode::ParseError, "expected 1/R(a,b), got '" + text + "'");
  return from_weights(Int(m[1].str()), Int(m[2].str()), Int(m[3].str()));
}

Int CyclicQuotientSingularity::k() const { return gcd(R_, Int(q_ + 1)); }
Int CyclicQuotientSingularity::r() const { return R_ / k(); }
Int CyclicQuotientSingularity::c() const {
  if (R_ == 1) return 1;
  return (q_ + 1) / k();
}

bool CyclicQuotientSingularity::is_T() const { return k() % r() == 0; }
bool CyclicQuotientSingularity::is_primitive_T() const { return k() == r(); }
bool CyclicQuotientSingularity::is_residual() const { return k() < r(); }

std::string CyclicQuotientSingularity::text() const { return "1/" + R_.get_str() + "(1," + q_.get_str() + ")"; }
std::string CyclicQuotientSingularity::rkc_text() const {
  return "(" + r().get_str() + "," + k().get_str() + "," + c().get_str() + ")";
}

bool operator<(const CyclicQuotientSingularity& a, const CyclicQuotientSingularity& b) {
  int x = cmp(a.R_, b.R_);
  return x < 0 || (x == 0 && a.q_ < b.q_);
}

std::vector<CyclicQuotientSingularity> sorted_basket(std::vector<CyclicQuotientSingularity> b) {
  std::sort(b.begin(), b.end());
  return b;
}

bool same_basket_multiset(const std::vector<CyclicQuotientSingularity>& a,
                          const std::vector<CyclicQuotientSingularity>& b) {
  return sorted_basket(a) == sorted_basket(b);
}

bool same_basket_cyclic(const std::vector<CyclicQuotientSingularity>& a,
                        const std::vector<CyclicQuotientSingularity>& b) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  if (n == 0) return true;
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t s = 0; s < n; ++s) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        std::size_t j = dir == 0 ? (s + i) % n : (s + n - i) % n;
        ok = a[i] == b[j];
      }
      if (ok) return true;
    }
  }
  return false;
}

bool same_content(const SingularityContent& a, const SingularityContent& b) {
  return a.n == b.n && same_basket_multiset(a.basket, b.basket);
}

CyclicQuotientSingularity classify_cone(const IntVec2& rho0, const IntVec2& rho1) {
  if (!is_primitive(rho0) || !is_primitive(rho1))
    throw Error(ErrorCode::DegenerateCone, "cone generators must be primitive");
  if (cross(rho0, rho1) == 0) throw Error(ErrorCode::DegenerateCone, "cone generators are parallel");
  // send rho0 to e2, then read rho1 = (R, -q)
  Int g, s, t;
  ext_gcd(rho0.x, rho0.y, g, s, t);
  Int X = -rho0.y * rho1.x + rho0.x * rho1.y;
  Int Y = s * rho1.x + t * rho1.y;
  Int R = abs(X);
  return CyclicQuotientSingularity::from_Rq(R, Int(-Y));
}

ConeContent cone_content(const CyclicQuotientSingularity& s) {
  ConeContent cc;
  Int r = s.r(), k = s.k(), c = s.c();
  cc.n = k / r;
  Int k0 = k % r;
  if (k0 != 0) cc.residue = CyclicQuotientSingularity::from_Rq(Int(k0 * r), Int(k0 * c - 1));
  return cc;
}

SingularityContent singularity_content(const FanoPolygon& p) {
  SingularityContent sc;
  sc.n = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    ConeContent cc = cone_content(classify_cone(p.vertex(i), p.vertex(i + 1)));
    sc.n += cc.n;
    if (cc.residue) sc.basket.push_back(*cc.residue);
  }
  return sc;
}

HJExpansion hj_expand(const Int& p, const Int& q) {
  if (!(q > 0 && q < p) || gcd(p, q) != 1) throw Error(ErrorCode::BadInput, "hj_expand needs 0 < q < p coprime");
  HJExpansion h;
  h.p = p;
  h.q = q;
  Int a = p, b = q;
  while (b > 0) {
    Int c;
    mpz_cdiv_q(c.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    h.b.push_back(c);
    Int nb = c * b - a;
    a = b;
    b = nb;
  }
  const std::size_t s = h.b.size();
  // 1-based sequences stored 0-based
  h.alpha.assign(s, 0);
  h.beta.assign(s, 0);
  Int prev = 0, cur = 1;
  for (std::size_t i = 0; i < s; ++i) {
    h.alpha[i] = cur;
    Int nxt = h.b[i] * cur - prev;
    prev = cur;
    cur = nxt;
  }
  Int after = 0;
  cur = 1;
  for (std::size_t i = s; i-- > 0;) {
    h.beta[i] = cur;
    Int nxt = h.b[i] * cur - after;
    after = cur;
    cur = nxt;
  }
  for (std::size_t i = 0; i < s; ++i) h.d.push_back(Rat(-1) + make_rat(Int(h.alpha[i] + h.beta[i]), p));
  return h;
}

Rat degree_contribution(const CyclicQuotientSingularity& s) {
  if (s.R() == 1) return 0;
  HJExpansion h = hj_expand(s.R(), s.q());
  Rat a = Rat(static_cast<long>(h.b.size() + 1));
  for (std::size_t i = 0; i < h.b.size(); ++i) {
    a -= h.d[i] * h.d[i] * h.b[i];
    if (i + 1 < h.b.size()) a += 2 * h.d[i] * h.d[i + 1];
  }
  return a;
}

Rat dedekind_delta(const Int& R, const Int& q, const Int& j) {
  // for e != 1 with e^R = 1: 1/(1-e) = -(1/R) sum_m m e^m; the character sum then collapses
  Int s = 0;
  for (Int n = 1; n < R; ++n) s += n * mod(Int(-j - q * n), R);
  return make_rat(s, Int(R * R)) - make_rat(Int((R - 1) * (R - 1)), Int(4 * R));
}

std::vector<Rat> rr_numerator(const CyclicQuotientSingularity& s) {
  const Int& R = s.R();
  std::vector<Rat> num;
  if (R == 1) return num;
  Int a = s.q() + 1;
  Rat d0 = dedekind_delta(R, s.q(), 0);
  for (Int i = 1; i < R; ++i) num.push_back(dedekind_delta(R, s.q(), Int(a * i)) - d0);
  return num;
}

SeriesWindow rr_contribution(const CyclicQuotientSingularity& s, unsigned D) {
  SeriesWindow w;
  w.c.assign(D + 1, Rat(0));
  auto num = rr_numerator(s);
  if (num.empty()) return w;
  const unsigned long R = s.R().get_ui();
  for (unsigned i = 0; i <= D; ++i) {
    unsigned long m = i % R;
    if (m < num.size()) w.c[i] = num[m];
  }
  return w;
}

Rat degree_from_content(const SingularityContent& sc) {
  Rat d = Rat(12) - sc.n;
  for (const auto& s : sc.basket) d -= degree_contribution(s);
  return d;
}

Rat degree(const FanoPolygon& p) { return degree_from_content(singularity_content(p)); }

SeriesWindow hilbert_series(const SingularityContent& sc, unsigned D) {
  Rat deg = degree_from_content(sc);
  SeriesWindow w;
  for (unsigned i = 0; i <= D; ++i) w.c.push_back(Rat(static_cast<long>(i) * (i + 1) / 2) * deg + 1);
  for (const auto& s : sc.basket) {
    auto q = rr_contribution(s, D);
    for (unsigned i = 0; i <= D; ++i) w.c[i] += q.c[i];
  }
  return w;
}

SeriesWindow hilbert_window(const FanoPolygon& p, unsigned D) {
  SeriesWindow w = hilbert_series(singularity_content(p), D);
  RationalPolygon d = dual_polygon(p);
  for (unsigned i = 0; i <= D; ++i) {
    Int e = ehrhart_count(d, i);
    if (w.c[i] != Rat(e))
      throw Error(ErrorCode::InconsistentHilbert, "coefficient " + std::to_string(i) + " is " + w.c[i].get_str() +
                                                      " but the dual contains " + e.get_str() + " points");
  }
  return w;
}

Int residual_point_count(const FanoPolygon& p) {
  Rat total = 0;
  for (const auto& s : singularity_content(p).basket) {
    Int k0 = s.k(), r = s.r();
    total += make_rat(Int(k0 * (r - 1)), 2) + k0 - 1;
  }
  if (total.get_den() != 1) throw Error(ErrorCode::Mismatch, "non-integral residual point count");
  return total.get_num();
}

TriangleWeights triangle_weights(const FanoPolygon& p) {
  if (p.size() != 3) throw Error(ErrorCode::NotTriangle, "polygon has " + std::to_string(p.size()) + " vertices");
  Int l0 = cross(p[1], p[2]), l1 = cross(p[2], p[0]), l2 = cross(p[0], p[1]);
  Int g = gcd(gcd(l0, l1), l2);
  return {Int(l0 / g), Int(l1 / g), Int(l2 / g), g};
}

}  // namespace fano
