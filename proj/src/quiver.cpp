#include "fano/quiver.hpp"

#include <algorithm>
#include <deque>

#include "fano/mutation.hpp"

namespace fano {

Quiver Quiver::from_matrix(std::vector<std::vector<Int>> b) {
  Quiver q;
  q.n = b.size();
  for (std::size_t i = 0; i < q.n; ++i) {
    if (b[i].size() != q.n) throw Error(ErrorCode::BadInput, "matrix is not square");
    for (std::size_t j = 0; j < q.n; ++j)
      if (b[i][j] != -b[j][i]) throw Error(ErrorCode::BadInput, "matrix is not skew-symmetric");
  }
  q.B = std::move(b);
  q.labels.assign(q.n, 0);
  return q;
}

Quiver quiver_of(const FanoPolygon& p) {
  std::vector<IntVec2> ws;
  Quiver q;
  for (const auto& e : edge_data(p)) {
    Int n = e.k / e.r;
    for (Int i = 0; i < n; ++i) {
      ws.push_back(e.w);
      q.labels.push_back(e.index);
    }
  }
  if (ws.empty()) throw Error(ErrorCode::NoTCones, "polygon has no primitive T-cones");
  q.n = ws.size();
  q.B.assign(q.n, std::vector<Int>(q.n, Int(0)));
  for (std::size_t i = 0; i < q.n; ++i)
    for (std::size_t j = 0; j < q.n; ++j) q.B[i][j] = cross(ws[i], ws[j]);
  return q;
}

Quiver mutate_quiver(const Quiver& q, std::size_t v) {
  if (v >= q.n) throw Error(ErrorCode::BadInput, "vertex out of range");
  Quiver out = q;
  for (std::size_t i = 0; i < q.n; ++i) {
    for (std::size_t j = 0; j < q.n; ++j) {
      if (i == v || j == v) {
        out.B[i][j] = -q.B[i][j];
      } else {
        const Int& a = q.B[i][v];
        const Int& b = q.B[v][j];
        out.B[i][j] = q.B[i][j] + (abs(a) * b + a * abs(b)) / 2;
      }
    }
  }
  return out;
}

bool all_even(const Quiver& q) {
  for (const auto& row : q.B)
    for (const auto& x : row)
      if (mpz_odd_p(x.get_mpz_t())) return false;
  return true;
}

namespace {

std::vector<std::vector<Int>> row_signatures(const Quiver& q) {
  std::vector<std::vector<Int>> sig(q.n);
  for (std::size_t i = 0; i < q.n; ++i) {
    sig[i] = q.B[i];
    std::sort(sig[i].begin(), sig[i].end());
  }
  return sig;
}

bool extend(const Quiver& a, const Quiver& b, const std::vector<std::vector<Int>>& sa,
            const std::vector<std::vector<Int>>& sb, std::vector<std::size_t>& map, std::vector<bool>& used,
            std::size_t i) {
  if (i == a.n) return true;
  for (std::size_t c = 0; c < b.n; ++c) {
    if (used[c] || sa[i] != sb[c]) continue;
    bool ok = true;
    for (std::size_t j = 0; j < i && ok; ++j) ok = a.B[i][j] == b.B[c][map[j]];
    if (!ok) continue;
    used[c] = true;
    map[i] = c;
    if (extend(a, b, sa, sb, map, used, i + 1)) return true;
    used[c] = false;
  }
  return false;
}

}  // namespace

bool quivers_isomorphic(const Quiver& a, const Quiver& b) {
  if (a.n != b.n) throw Error(ErrorCode::SizeMismatch, "quivers have different vertex counts");
  auto sa = row_signatures(a), sb = row_signatures(b);
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  std::vector<std::size_t> map(a.n);
  std::vector<bool> used(b.n, false);
  return extend(a, b, sa, sb, map, used, 0);
}

bool quiver_commutes_check(const FanoPolygon& p, std::size_t v) {
  Quiver q = quiver_of(p);
  if (v >= q.n) throw Error(ErrorCode::BadInput, "vertex out of range");
  FanoPolygon m = mutate_raw(p, q.labels[v]);
  return quivers_isomorphic(quiver_of(m), mutate_quiver(q, v));
}

bool orbit_contains(const QuiverOrbit& o, const Quiver& q) {
  for (const auto& m : o.members)
    if (m.n == q.n && quivers_isomorphic(m, q)) return true;
  return false;
}

QuiverOrbit quiver_orbit(const Quiver& q, std::size_t max_members) {
  QuiverOrbit o;
  o.members.push_back(q);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    for (std::size_t v = 0; v < q.n; ++v) {
      Quiver m = mutate_quiver(o.members[cur], v);
      if (orbit_contains(o, m)) continue;
      if (o.members.size() >= max_members) {
        o.complete = false;
        return o;
      }
      o.members.push_back(std::move(m));
      queue.push_back(o.members.size() - 1);
    }
  }
  return o;
}

}  // namespace fano
