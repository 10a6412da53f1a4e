#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fano/lattice.hpp"

namespace fano {

// The cyclic quotient singularity 1/R(1,q), stored with q replaced by
// min(q, q^{-1} mod R) so that both orientations of a cone give the same value.
class CyclicQuotientSingularity {
 public:
  // 1/R(1,q); requires gcd(R,q) = 1 (q = 0 only for R = 1)
  static CyclicQuotientSingularity from_Rq(const Int& R, const Int& q);
  // 1/R(a,b) with a, b units mod R
  static CyclicQuotientSingularity from_weights(const Int& R, const Int& a, const Int& b);
  // 1/(kr)(1, kc-1)
  static CyclicQuotientSingularity from_rkc(const Int& r, const Int& k, const Int& c);
  // "1/R(a,b)"
  static CyclicQuotientSingularity parse(const std::string& s);

  const Int& R() const { return R_; }
  const Int& q() const { return q_; }
  Int k() const;  // gcd(R, q+1)
  Int r() const;  // R / k
  Int c() const;  // (q+1)/k, in [1, r]

  bool is_T() const;
  bool is_primitive_T() const;
  bool is_residual() const;

  std::string text() const;      // "1/R(1,q)"
  std::string rkc_text() const;  // "(r,k,c)"

  friend bool operator==(const CyclicQuotientSingularity& a, const CyclicQuotientSingularity& b) {
    return a.R_ == b.R_ && a.q_ == b.q_;
  }
  friend bool operator!=(const CyclicQuotientSingularity& a, const CyclicQuotientSingularity& b) { return !(a == b); }
  friend bool operator<(const CyclicQuotientSingularity& a, const CyclicQuotientSingularity& b);

 private:
  Int R_{1}, q_{0};
};

struct ConeContent {
  Int n;
  std::optional<CyclicQuotientSingularity> residue;
};

struct SingularityContent {
  Int n;
  std::vector<CyclicQuotientSingularity> basket;  // cyclic edge order
};

// basket comparisons
bool same_basket_multiset(const std::vector<CyclicQuotientSingularity>& a,
                          const std::vector<CyclicQuotientSingularity>& b);
bool same_basket_cyclic(const std::vector<CyclicQuotientSingularity>& a,
                        const std::vector<CyclicQuotientSingularity>& b);
std::vector<CyclicQuotientSingularity> sorted_basket(std::vector<CyclicQuotientSingularity> b);
bool same_content(const SingularityContent& a, const SingularityContent& b);

struct HJExpansion {
  Int p, q;
  std::vector<Int> b;
  std::vector<Int> alpha, beta;
  std::vector<Rat> d;
};

struct SeriesWindow {
  std::vector<Rat> c;  // c[0..D]
};

CyclicQuotientSingularity classify_cone(const IntVec2& rho0, const IntVec2& rho1);
ConeContent cone_content(const CyclicQuotientSingularity& s);
SingularityContent singularity_content(const FanoPolygon& p);

HJExpansion hj_expand(const Int& p, const Int& q);
Rat degree_contribution(const CyclicQuotientSingularity& s);

// delta_j = (1/R) sum over nontrivial R-th roots e of e^j / ((1-e)(1-e^q)), exactly
Rat dedekind_delta(const Int& R, const Int& q, const Int& j);
// numerator coefficients of Q_sigma (R-1 terms, t^0..t^{R-2})
std::vector<Rat> rr_numerator(const CyclicQuotientSingularity& s);
SeriesWindow rr_contribution(const CyclicQuotientSingularity& s, unsigned D);

Rat degree_from_content(const SingularityContent& sc);
Rat degree(const FanoPolygon& p);
// the formula alone, no lattice-point check
SeriesWindow hilbert_series(const SingularityContent& sc, unsigned D);
// formula checked coefficient-wise against lattice-point counts of the dual
SeriesWindow hilbert_window(const FanoPolygon& p, unsigned D);

Int residual_point_count(const FanoPolygon& p);

struct TriangleWeights {
  Int l0, l1, l2;  // in vertex order
  Int multiplicity;
};
TriangleWeights triangle_weights(const FanoPolygon& p);

}  // namespace fano
