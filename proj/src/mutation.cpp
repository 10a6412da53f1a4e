#include "fano/mutation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

namespace fano {

bool mutation_exists(const FanoPolygon& p, std::size_t edge) {
  auto e = edge_data(p).at(edge);
  return e.k >= e.r;
}

MutationSpec mutation_spec(const FanoPolygon& p, std::size_t edge, bool flip) {
  auto es = edge_data(p);
  const EdgeData& e = es.at(edge);
  if (e.k < e.r) throw Error(ErrorCode::NoMutation, "edge " + std::to_string(edge) + " has width < height");
  MutationSpec m;
  m.w = e.w;
  IntVec2 d = e.to - e.from;
  m.vE = IntVec2(Int(d.x / e.k), Int(d.y / e.k));
  if (flip) m.vE = -m.vE;
  m.h_min = -e.r;
  m.h_max = pair(e.w, p[0]);
  for (const auto& v : p.vertices()) {
    Int h = pair(e.w, v);
    if (h > m.h_max) m.h_max = h;
  }
  return m;
}

std::optional<std::size_t> edge_with_normal(const FanoPolygon& p, const IntVec2& w) {
  for (const auto& e : edge_data(p))
    if (e.w == w) return e.index;
  return std::nullopt;
}

RationalPolygon mutate_dual(const RationalPolygon& d, const IntVec2& w, const IntVec2& vE) {
  const auto& u = d.vertices();
  const std::size_t n = u.size();
  RatVec2 wq(w), vq(vE);
  std::vector<RatVec2> pts;
  auto phi = [&](const RatVec2& x) {
    Rat s = pair(x, vq);
    if (s >= 0) return x;
    return x - s * wq;
  };
  for (std::size_t i = 0; i < n; ++i) {
    const RatVec2& a = u[i];
    const RatVec2& b = u[(i + 1) % n];
    pts.push_back(phi(a));
    Rat sa = pair(a, vq), sb = pair(b, vq);
    if ((sa < 0 && sb > 0) || (sa > 0 && sb < 0)) {
      Rat t = sa / (sa - sb);
      pts.push_back(phi(a + t * (b - a)));
    }
  }
  return make_rational_polygon(pts);
}

FanoPolygon mutate_raw(const FanoPolygon& p, const MutationSpec& m) {
  return lattice_dual(mutate_dual(dual_polygon(p), m.w, m.vE));
}

FanoPolygon mutate_raw(const FanoPolygon& p, std::size_t edge, bool flip) {
  return mutate_raw(p, mutation_spec(p, edge, flip));
}

FanoPolygon mutate(const FanoPolygon& p, std::size_t edge, bool flip) { return canonical(mutate_raw(p, edge, flip)); }

namespace {

// x-range of the horizontal slice y = c of a polygon given by rational vertices
std::optional<std::pair<Rat, Rat>> slice(const std::vector<RatVec2>& v, const Rat& c) {
  std::optional<std::pair<Rat, Rat>> out;
  auto add = [&](const Rat& x) {
    if (!out) out = std::make_pair(x, x);
    else {
      if (x < out->first) out->first = x;
      if (x > out->second) out->second = x;
    }
  };
  for (std::size_t i = 0; i < v.size(); ++i) {
    const RatVec2& a = v[i];
    const RatVec2& b = v[(i + 1) % v.size()];
    if (a.y == c) add(a.x);
    if ((a.y < c && b.y > c) || (a.y > c && b.y < c)) add(a.x + (c - a.y) * (b.x - a.x) / (b.y - a.y));
  }
  return out;
}

}  // namespace

FanoPolygon mutate_by_slices(const FanoPolygon& p, const MutationSpec& m) {
  // coordinates x' = u(v), y' = -w(v) with u(vE) = 1
  Int g, s, t;
  ext_gcd(m.vE.x, m.vE.y, g, s, t);
  UnimodularMap to{s, t, Int(-m.w.x), Int(-m.w.y)};
  UnimodularMap back = to.inverse();
  std::vector<RatVec2> q;
  for (const auto& v : p.vertices()) q.emplace_back(to.apply(v));
  std::vector<IntVec2> pts;
  for (Int h = m.h_min; h <= m.h_max; ++h) {
    Int y = -h;
    auto sl = slice(q, Rat(y));
    if (!sl) continue;
    Int a = ceil_q(sl->first), b = floor_q(sl->second);
    if (a > b) continue;
    if (h < 0) {
      Int bb = b + h;
      if (a > bb) continue;
      pts.emplace_back(a, y);
      pts.emplace_back(bb, y);
    } else {
      pts.emplace_back(a, y);
      pts.emplace_back(Int(b + h), y);
    }
  }
  for (auto& x : pts) x = back.apply(x);
  return make_polygon(pts);
}

std::vector<Neighbor> neighbors(const FanoPolygon& p) {
  std::vector<Neighbor> out;
  for (const auto& e : edge_data(p)) {
    if (e.k < e.r) continue;
    FanoPolygon c = mutate(p, e.index);
    auto it = std::find_if(out.begin(), out.end(), [&](const Neighbor& nb) { return nb.polygon == c; });
    if (it == out.end()) out.push_back({c, {e.w}});
    else it->labels.push_back(e.w);
  }
  return out;
}

MutationGraph orbit(const FanoPolygon& p, const OrbitBudget& budget) {
  MutationGraph gr;
  std::vector<FanoPolygon> nodes;
  std::vector<std::size_t> depth;
  std::unordered_map<FanoPolygon, std::size_t, FanoPolygonHash> index;
  std::map<std::pair<std::size_t, std::size_t>, IntVec2> edges;
  FanoPolygon start = canonical(p);
  nodes.push_back(start);
  depth.push_back(0);
  index.emplace(start, 0);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    auto nbs = neighbors(nodes[cur]);
    if (budget.max_depth && depth[cur] >= *budget.max_depth) {
      for (const auto& nb : nbs)
        if (!index.count(nb.polygon)) gr.truncated = true;
      continue;
    }
    for (const auto& nb : nbs) {
      auto it = index.find(nb.polygon);
      std::size_t id;
      if (it == index.end()) {
        if (budget.max_boundary > 0 && counts(nb.polygon).boundary > budget.max_boundary) {
          gr.truncated = true;
          continue;
        }
        if (nodes.size() >= budget.max_nodes) {
          gr.truncated = true;
          continue;
        }
        id = nodes.size();
        nodes.push_back(nb.polygon);
        depth.push_back(depth[cur] + 1);
        index.emplace(nb.polygon, id);
        queue.push_back(id);
      } else {
        id = it->second;
      }
      auto key = std::minmax(cur, id);
      edges.emplace(std::make_pair(key.first, key.second), nb.labels.front());
    }
  }
  std::vector<std::size_t> order(nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return nodes[a] < nodes[b]; });
  std::vector<std::size_t> rank(nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[order[i]] = i;
    gr.nodes.push_back(nodes[order[i]]);
  }
  for (const auto& [k, w] : edges) {
    std::size_t a = rank[k.first], b = rank[k.second];
    gr.edges.push_back({std::min(a, b), std::max(a, b), w});
  }
  std::sort(gr.edges.begin(), gr.edges.end(), [](const GraphEdge& x, const GraphEdge& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
  return gr;
}

bool is_minimal(const FanoPolygon& p) {
  for (const auto& e : edge_data(p)) {
    if (e.k < e.r) continue;
    Int hmax = pair(e.w, p[0]);
    for (const auto& v : p.vertices()) {
      Int h = pair(e.w, v);
      if (h > hmax) hmax = h;
    }
    if (hmax < e.r) return false;
  }
  return true;
}

namespace {

Int tcone_height_sum(const FanoPolygon& p) {
  Int s = 0;
  for (const auto& e : edge_data(p)) s += (e.k / e.r) * e.r;
  return s;
}

}  // namespace

MinimalityVerdicts minimality_verdicts(const FanoPolygon& p) {
  MinimalityVerdicts v{true, true, true, true};
  Counts c = counts(p);
  Int hs = tcone_height_sum(p);
  for (const auto& e : edge_data(p)) {
    if (e.k < e.r) continue;
    FanoPolygon q = mutate_raw(p, e.index);
    Counts d = counts(q);
    if (d.boundary < c.boundary) v.boundary = false;
    if (d.interior < c.interior) v.interior = false;
    if (d.volume < c.volume) v.volume = false;
    if (tcone_height_sum(q) < hs) v.heights = false;
  }
  return v;
}

FanoPolygon minimize(const FanoPolygon& p) {
  FanoPolygon cur = canonical(p);
  Int b = counts(cur).boundary;
  for (;;) {
    std::optional<FanoPolygon> best;
    Int bb = b;
    for (const auto& nb : neighbors(cur)) {
      Int nbb = counts(nb.polygon).boundary;
      if (nbb < bb || (best && nbb == bb && nb.polygon < *best)) {
        best = nb.polygon;
        bb = nbb;
      }
    }
    if (!best) return cur;
    cur = *best;
    b = bb;
  }
}

SublatticeInvariant elementary_divisors(const std::vector<IntVec2>& gens) {
  Int d1 = 0, d2 = 0;
  for (const auto& g : gens) d1 = gcd(gcd(d1, g.x), g.y);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) d2 = gcd(d2, cross(gens[i], gens[j]));
  if (d2 != 0) d2 /= d1;
  return {d1, d2};
}

SublatticeInvariant t_sublattice_invariant(const FanoPolygon& p) {
  std::vector<IntVec2> gens;
  for (const auto& e : edge_data(p))
    if (e.k >= e.r) gens.push_back(e.w);
  return elementary_divisors(gens);
}

}  // namespace fano
