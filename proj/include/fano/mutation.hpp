#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fano/lattice.hpp"

namespace fano {

struct MutationSpec {
  IntVec2 w;   // inner normal of the edge at height h_min
  IntVec2 vE;  // factor F = conv{0, vE}
  Int h_min, h_max;
};

struct Neighbor {
  FanoPolygon polygon;         // canonical
  std::vector<IntVec2> labels;  // every w realizing it
};

struct GraphEdge {
  std::size_t a, b;
  IntVec2 w;
};

struct MutationGraph {
  std::vector<FanoPolygon> nodes;  // canonical, sorted
  std::vector<GraphEdge> edges;
  bool truncated = false;
};

struct OrbitBudget {
  std::size_t max_nodes = 10000;
  Int max_boundary = 0;  // 0 means unbounded
  std::optional<std::size_t> max_depth;
};

struct SublatticeInvariant {
  Int d1, d2;
  friend bool operator==(const SublatticeInvariant& a, const SublatticeInvariant& b) {
    return a.d1 == b.d1 && a.d2 == b.d2;
  }
  friend bool operator!=(const SublatticeInvariant& a, const SublatticeInvariant& b) { return !(a == b); }
};

bool mutation_exists(const FanoPolygon& p, std::size_t edge);
// flip selects -vE instead of the edge direction
MutationSpec mutation_spec(const FanoPolygon& p, std::size_t edge, bool flip = false);
std::optional<std::size_t> edge_with_normal(const FanoPolygon& p, const IntVec2& w);

// result in the coordinates of p
FanoPolygon mutate_raw(const FanoPolygon& p, std::size_t edge, bool flip = false);
FanoPolygon mutate_raw(const FanoPolygon& p, const MutationSpec& m);
FanoPolygon mutate(const FanoPolygon& p, std::size_t edge, bool flip = false);
RationalPolygon mutate_dual(const RationalPolygon& d, const IntVec2& w, const IntVec2& vE);
// slice construction in N, used to cross-check the dual route
FanoPolygon mutate_by_slices(const FanoPolygon& p, const MutationSpec& m);

std::vector<Neighbor> neighbors(const FanoPolygon& p);
MutationGraph orbit(const FanoPolygon& p, const OrbitBudget& budget);

bool is_minimal(const FanoPolygon& p);
// the four equivalent criteria, each as "no admissible mutation lowers it":
// boundary points, interior points, volume, sum of heights of primitive T-cones
struct MinimalityVerdicts {
  bool boundary, interior, volume, heights;
};
MinimalityVerdicts minimality_verdicts(const FanoPolygon& p);
FanoPolygon minimize(const FanoPolygon& p);

SublatticeInvariant t_sublattice_invariant(const FanoPolygon& p);
// elementary divisors of the lattice spanned by the given vectors of Z^2
SublatticeInvariant elementary_divisors(const std::vector<IntVec2>& gens);

}  // namespace fano
