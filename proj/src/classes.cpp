#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

#include "fano/classification.hpp"
#include "fano/quiver.hpp"

namespace fano {

bool operator==(const Fingerprint& a, const Fingerprint& b) {
  return a.content.n == b.content.n && a.content.basket == b.content.basket && a.degree == b.degree &&
         a.hilbert == b.hilbert && a.divisors == b.divisors && a.parity == b.parity;
}

Fingerprint fingerprint(const FanoPolygon& p) {
  Fingerprint f;
  f.content = singularity_content(p);
  f.content.basket = sorted_basket(f.content.basket);
  f.degree = degree_from_content(f.content);
  f.hilbert = hilbert_window(p, 8).c;
  f.divisors = t_sublattice_invariant(p);
  f.parity = f.content.n == 0 ? -1 : (all_even(quiver_of(p)) ? 1 : 0);
  return f;
}

namespace {

std::string separating_field(const Fingerprint& a, const Fingerprint& b) {
  if (a.content.n != b.content.n || a.content.basket != b.content.basket) return "singularity content";
  if (a.degree != b.degree) return "degree";
  if (a.hilbert != b.hilbert) return "hilbert window";
  if (a.divisors != b.divisors) return "sublattice divisors";
  if (a.parity != b.parity) return "quiver parity";
  return "";
}

struct UnionFind {
  std::vector<std::size_t> p;
  explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  std::size_t find(std::size_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) p[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

ClassReport partition_into_classes(const std::vector<FanoPolygon>& polys, const ClassBudget& budget) {
  if (polys.empty()) throw Error(ErrorCode::BadInput, "no polygons to partition");
  ClassReport rep;
  const std::size_t n = polys.size();
  for (const auto& p : polys) rep.polygons.push_back(canonical(p));
  for (const auto& p : rep.polygons) rep.fingerprints.push_back(fingerprint(p));

  UnionFind uf(n);
  Int maxb = 0;
  for (const auto& p : rep.polygons) maxb = std::max(maxb, counts(p).boundary);
  OrbitBudget ob;
  ob.max_nodes = budget.max_nodes;
  ob.max_boundary = maxb + budget.max_boundary_slack;

  std::vector<bool> grouped(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (grouped[i]) continue;
    std::vector<std::size_t> group{i};
    for (std::size_t j = i + 1; j < n; ++j)
      if (!grouped[j] && rep.fingerprints[j] == rep.fingerprints[i]) group.push_back(j);
    for (auto g : group) grouped[g] = true;
    for (std::size_t a = 0; a < group.size(); ++a)
      for (std::size_t b = a + 1; b < group.size(); ++b)
        if (rep.polygons[group[a]] == rep.polygons[group[b]]) uf.unite(group[a], group[b]);

    auto settled = [&] {
      for (auto g : group)
        if (uf.find(g) != uf.find(group.front())) return false;
      return true;
    };
    const unsigned jobs = std::max(1u, budget.jobs);
    for (std::size_t start = 0; start < group.size() && !settled(); start += jobs) {
      std::vector<std::size_t> batch;
      for (std::size_t t = start; t < std::min(group.size(), start + jobs); ++t) batch.push_back(group[t]);
      std::vector<MutationGraph> graphs(batch.size());
      if (batch.size() == 1) {
        graphs[0] = orbit(rep.polygons[batch[0]], ob);
      } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < batch.size(); ++t)
          pool.emplace_back([&, t] { graphs[t] = orbit(rep.polygons[batch[t]], ob); });
        for (auto& th : pool) th.join();
      }
      for (std::size_t t = 0; t < batch.size(); ++t) {
        if (graphs[t].truncated) rep.truncated = true;
        for (auto g : group)
          if (std::binary_search(graphs[t].nodes.begin(), graphs[t].nodes.end(), rep.polygons[g]))
            uf.unite(batch[t], g);
      }
    }
  }

  std::map<std::size_t, std::size_t> comp_of_root;
  rep.class_of.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto root = uf.find(i);
    auto it = comp_of_root.find(root);
    if (it == comp_of_root.end()) {
      it = comp_of_root.emplace(root, rep.components.size()).first;
      rep.components.emplace_back();
    }
    rep.class_of[i] = it->second;
    rep.components[it->second].push_back(i);
  }

  const std::size_t c = rep.components.size();
  std::vector<std::optional<QuiverOrbit>> qorbits(c);
  auto quiver_orbit_of = [&](std::size_t k) -> const QuiverOrbit& {
    if (!qorbits[k]) qorbits[k] = quiver_orbit(quiver_of(rep.polygons[rep.components[k].front()]), budget.quiver_cap);
    return *qorbits[k];
  };
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = a + 1; b < c; ++b) {
      const auto& fa = rep.fingerprints[rep.components[a].front()];
      const auto& fb = rep.fingerprints[rep.components[b].front()];
      std::string by = separating_field(fa, fb);
      if (by.empty() && fa.parity >= 0) {
        Quiver qa = quiver_of(rep.polygons[rep.components[a].front()]);
        Quiver qb = quiver_of(rep.polygons[rep.components[b].front()]);
        const auto& oa = quiver_orbit_of(a);
        const auto& obq = quiver_orbit_of(b);
        if ((oa.complete && !orbit_contains(oa, qb)) || (obq.complete && !orbit_contains(obq, qa))) by = "quiver orbit";
      }
      if (by.empty()) rep.unresolved.emplace_back(a, b);
      else rep.distinct.push_back({a, b, by});
    }
  return rep;
}

}  // namespace fano
