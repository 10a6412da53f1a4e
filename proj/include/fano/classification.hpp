#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fano/mutation.hpp"
#include "fano/singularity.hpp"

namespace fano {

using Basket = std::vector<CyclicQuotientSingularity>;

struct BasketBounds {
  Int m_B;  // max Gorenstein index
  Int d_B;  // lcm of denominators of A_sigma
  Rat s_B;  // -min({0} u {A_sigma})
};
BasketBounds basket_bounds(const Basket& b);

struct CandidateTriple {
  long j, r, b;
  friend bool operator==(const CandidateTriple&, const CandidateTriple&) = default;
};
// vertical-edge parameters with l = 0 and j >= 5
std::vector<CandidateTriple> candidate_triples(const Basket& b);

// largest edge height
Int max_local_index(const FanoPolygon& p);

struct EnumerationOptions {
  // half-width of the search box in normalized position; 0 picks the default for r
  long box = 0;
  unsigned jobs = 1;
};
long default_enumeration_box(long r);

// every Fano polygon whose edges all have height <= r, canonical and sorted
std::vector<FanoPolygon> enumerate_fano_max_index(long r, const EnumerationOptions& opt = {});

std::vector<FanoPolygon> enumerate_minimal_empty(const EnumerationOptions& opt = {});
std::vector<FanoPolygon> enumerate_minimal_with_basket(const Basket& b, const EnumerationOptions& opt = {});
// baskets of the form {m x 1/3(1,1)}, m >= 1
std::vector<FanoPolygon> enumerate_minimal_third(const EnumerationOptions& opt = {});

// Minimal polygons with m_P > m_B for the bounds of a basket, filtered by `accept`.
std::vector<FanoPolygon> minimal_above_basket_index(const BasketBounds& bb, bool empty_basket,
                                                    const std::function<bool(const FanoPolygon&)>& accept);

struct Fingerprint {
  SingularityContent content;  // basket sorted
  Rat degree;
  std::vector<Rat> hilbert;  // coefficients 0..8
  SublatticeInvariant divisors;
  int parity;  // 1 all arrows even, 0 otherwise, -1 no quiver
  friend bool operator==(const Fingerprint& a, const Fingerprint& b);
  friend bool operator!=(const Fingerprint& a, const Fingerprint& b) { return !(a == b); }
};
Fingerprint fingerprint(const FanoPolygon& p);

struct ClassBudget {
  std::size_t max_nodes = 10000;
  Int max_boundary_slack = 10;  // orbit polygons may exceed the largest input boundary by this much
  std::size_t quiver_cap = 500;
  unsigned jobs = 1;
};

struct ClassReport {
  std::vector<FanoPolygon> polygons;  // canonical, input order
  std::vector<Fingerprint> fingerprints;
  std::vector<std::size_t> class_of;               // component id per input
  std::vector<std::vector<std::size_t>> components;  // inputs per component
  // component pairs certified distinct, and the invariant that separates them
  struct Separation {
    std::size_t a, b;
    std::string by;
  };
  std::vector<Separation> distinct;
  std::vector<std::pair<std::size_t, std::size_t>> unresolved;  // component pairs
  bool truncated = false;
};
ClassReport partition_into_classes(const std::vector<FanoPolygon>& polys, const ClassBudget& budget = {});

// golden tables
struct TableRow {
  std::string name;
  std::vector<IntVec2> vertices;
  long n;
  long m;  // number of 1/3(1,1) points; 0 for tables 1 and 2
  Rat degree;
  std::optional<std::array<long, 3>> weights;
};
const std::vector<TableRow>& golden_table(const std::string& id);  // table1, table2, table4
const std::vector<CandidateTriple>& golden_triples();

struct RowCheck {
  std::string name;
  bool ok;
  std::vector<std::string> problems;
};
struct TableReport {
  std::string id;
  std::vector<RowCheck> rows;
  std::vector<std::string> problems;  // table-level
  bool ok() const;
};
TableReport verify_table(const std::string& id);

}  // namespace fano
