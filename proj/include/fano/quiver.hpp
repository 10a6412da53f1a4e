#pragma once

#include <cstddef>
#include <vector>

#include "fano/lattice.hpp"

namespace fano {

struct Quiver {
  std::size_t n = 0;
  std::vector<std::vector<Int>> B;  // B[i][j] = w_i ^ w_j
  std::vector<std::size_t> labels;  // owning edge index per vertex

  static Quiver from_matrix(std::vector<std::vector<Int>> b);
  friend bool operator==(const Quiver& a, const Quiver& b) { return a.B == b.B; }
};

Quiver quiver_of(const FanoPolygon& p);
Quiver mutate_quiver(const Quiver& q, std::size_t v);
bool all_even(const Quiver& q);
bool quivers_isomorphic(const Quiver& a, const Quiver& b);
bool quiver_commutes_check(const FanoPolygon& p, std::size_t v);

struct QuiverOrbit {
  std::vector<Quiver> members;  // one per isomorphism class
  bool complete = true;
};
// exchange orbit up to isomorphism, capped at max_members
QuiverOrbit quiver_orbit(const Quiver& q, std::size_t max_members = 500);
bool orbit_contains(const QuiverOrbit& o, const Quiver& q);

}  // namespace fano
