#pragma once

// Exhaustive ground truth for tiny instances. Nothing here shares code with
// the constructions it is used to check.

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "updraw/errors.hpp"
#include "updraw/geometry.hpp"
#include "updraw/graph.hpp"
#include "updraw/subdivisions.hpp"

namespace updraw::oracle {

struct OracleBudget {
  int max_n = 10;
  long long max_states = 50'000'000;
};

/// Returned by exact_upward_track_number when no layout with at most max_t
/// tracks exists.
inline constexpr int NotFound = -1;

namespace detail {

inline void require_size(const Dag &g, const OracleBudget &budget) {
  if (g.n() > budget.max_n)
    throw BudgetExceeded("n=" + std::to_string(g.n()) + " exceeds max_n=" +
                         std::to_string(budget.max_n));
}

struct StateCounter {
  long long used = 0;
  long long cap;
  void tick() {
    if (++used > cap) throw BudgetExceeded("search exceeded " + std::to_string(cap) + " states");
  }
};

} // namespace detail

/// Largest set of pairwise strictly nested arcs under `order`, by a quadratic
/// longest-chain dynamic program.
inline int max_rainbow_size(const Dag &g, const VertexOrder &order) {
  std::vector<std::pair<int, int>> spans;
  for (const Arc &a : g.arcs()) {
    int l = order.pos[a.tail], r = order.pos[a.head];
    if (l > r) std::swap(l, r);
    spans.push_back({l, r});
  }
  std::sort(spans.begin(), spans.end(),
            [](auto &x, auto &y) { return x.second - x.first < y.second - y.first; });
  std::vector<int> chain(spans.size(), 1);
  int best = 0;
  for (std::size_t i = 0; i < spans.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (spans[i].first < spans[j].first && spans[j].second < spans[i].second)
        chain[i] = std::max(chain[i], chain[j] + 1);
    best = std::max(best, chain[i]);
  }
  return best;
}

/// Minimum over topological orders of the largest rainbow.
inline int exact_upward_queue_number(const Dag &g, OracleBudget budget = {}) {
  detail::require_size(g, budget);
  if (g.m() == 0) return 0;
  const int n = g.n();
  detail::StateCounter states{0, budget.max_states};
  std::vector<int> pos(n, -1), indeg(n, 0), depth(g.m(), 0);
  for (const Arc &a : g.arcs()) ++indeg[a.head];
  std::vector<int> done; // completed arc ids
  int best = g.m() + 1;

  auto search = [&](auto &&self, int placed, int current) -> void {
    if (current >= best) return;
    if (placed == n) {
      best = current;
      return;
    }
    for (int v = 0; v < n && best > 1; ++v) {
      if (pos[v] >= 0 || indeg[v] != 0) continue;
      states.tick();
      pos[v] = placed;
      const std::size_t mark = done.size();
      int next = current;
      for (int w : g.in(v)) {
        // The new arc is the outermost of any chain of completed arcs whose
        // tail lies strictly to its right.
        int ai = -1;
        for (int k = 0; k < g.m(); ++k)
          if (g.arc(k).tail == w && g.arc(k).head == v) ai = k;
        int d = 1;
        for (int b : done)
          if (pos[g.arc(b).tail] > pos[w] && pos[g.arc(b).head] < placed)
            d = std::max(d, depth[b] + 1);
        depth[ai] = d;
        next = std::max(next, d);
      }
      for (int w : g.in(v))
        for (int k = 0; k < g.m(); ++k)
          if (g.arc(k).tail == w && g.arc(k).head == v) done.push_back(k);
      for (int w : g.out(v)) --indeg[w];
      self(self, placed + 1, next);
      for (int w : g.out(v)) ++indeg[w];
      done.resize(mark);
      pos[v] = -1;
    }
  };
  search(search, 0, 0);
  return best;
}

/// Smallest t <= max_t such that g has an upward t-track layout, or NotFound.
/// Vertices are placed in a topological order of g and appended to a track,
/// which reaches every upward layout; tracks are labelled by first use and
/// partial layouts already refuted are memoized.
inline int exact_upward_track_number(const Dag &g, int max_t, OracleBudget budget = {8, 50'000'000}) {
  detail::require_size(g, budget);
  const int n = g.n();
  if (n == 0) return 0;
  detail::StateCounter states{0, budget.max_states};

  for (int t = 1; t <= max_t; ++t) {
    std::vector<int> track(n, -1), rank(n, -1), indeg(n, 0);
    std::vector<std::vector<int>> members(t);
    for (const Arc &a : g.arcs()) ++indeg[a.head];
    std::unordered_set<std::string> refuted;

    auto key = [&]() {
      std::string k;
      for (int i = 0; i < t; ++i) {
        for (int v : members[i]) k.push_back(static_cast<char>(v + 1));
        k.push_back('|');
      }
      return k;
    };
    // Arc between placed u and new v (in track tv, appended last) is valid iff
    // tracks differ and no placed arc joining the same two tracks has its end
    // in u's track ranked after u.
    auto admissible = [&](int v, int tv) {
      for (int u : g.in(v)) {
        if (track[u] == tv) return false;
        for (const Arc &a : g.arcs()) {
          const int p = a.tail, q = a.head;
          if (track[p] < 0 || track[q] < 0) continue;
          if (track[p] == track[u] && track[q] == tv && rank[p] > rank[u]) return false;
          if (track[q] == track[u] && track[p] == tv && rank[q] > rank[u]) return false;
        }
      }
      // Arcs from v into placed vertices cannot exist in a topological placement.
      return true;
    };

    auto search = [&](auto &&self, int placed, int used) -> bool {
      if (placed == n) return true;
      std::string k = key();
      if (refuted.count(k)) return false;
      for (int v = 0; v < n; ++v) {
        if (track[v] >= 0 || indeg[v] != 0) continue;
        for (int tv = 0; tv < std::min(used + 1, t); ++tv) {
          states.tick();
          if (!admissible(v, tv)) continue;
          // Arcs from v to the same placed vertices are checked when their
          // heads arrive, so only in-arcs matter here.
          track[v] = tv;
          rank[v] = static_cast<int>(members[tv].size());
          members[tv].push_back(v);
          for (int w : g.out(v)) --indeg[w];
          const bool ok = self(self, placed + 1, std::max(used, tv + 1));
          for (int w : g.out(v)) ++indeg[w];
          members[tv].pop_back();
          track[v] = rank[v] = -1;
          if (ok) return true;
        }
      }
      refuted.insert(std::move(k));
      return false;
    };
    if (search(search, 0, 0)) return t;
  }
  return NotFound;
}

/// Minimum bandwidth over topological orders, by branch and bound starting
/// from the deterministic order.
inline BandwidthCertificate exact_directed_bandwidth(const Dag &g, OracleBudget budget = {12, 50'000'000}) {
  detail::require_size(g, budget);
  const int n = g.n();
  BandwidthCertificate best = bandwidth_of(g, topological_order(g));
  const int lower = g.m() > 0 ? 1 : 0;
  if (best.b == lower) return best;
  detail::StateCounter states{0, budget.max_states};
  std::vector<int> pos(n, -1), seq, indeg(n, 0), pending(n, 0);
  for (const Arc &a : g.arcs()) {
    ++indeg[a.head];
    ++pending[a.tail];
  }
  std::unordered_set<std::string> seen;

  auto search = [&](auto &&self, int placed, int current) -> void {
    if (current >= best.b) return;
    if (placed == n) {
      best = bandwidth_of(g, VertexOrder::from_sequence(seq));
      return;
    }
    // Every placed tail with an unplaced head stretches by at least this much.
    std::string k(static_cast<std::size_t>(n), '\0');
    for (int v = 0; v < n; ++v) {
      if (pos[v] < 0) continue;
      k[v] = 1;
      if (pending[v] > 0) {
        if (placed - pos[v] >= best.b) return;
        k[v] = static_cast<char>(2 + placed - pos[v]);
      }
    }
    if (!seen.insert(k + static_cast<char>(current)).second) return;
    for (int v = 0; v < n && best.b > lower; ++v) {
      if (pos[v] >= 0 || indeg[v] != 0) continue;
      states.tick();
      int next = current;
      for (int w : g.in(v)) next = std::max(next, placed - pos[w]);
      if (next >= best.b) continue;
      pos[v] = placed;
      seq.push_back(v);
      for (int w : g.in(v)) --pending[w];
      for (int w : g.out(v)) --indeg[w];
      self(self, placed + 1, next);
      for (int w : g.out(v)) ++indeg[w];
      for (int w : g.in(v)) ++pending[w];
      seq.pop_back();
      pos[v] = -1;
    }
  };
  search(search, 0, 0);
  return best;
}

/// Independent segment predicate by exact rational parameters. Same contract
/// as segments_intersect_improperly; coordinates must satisfy |c| <= 2^28.
inline bool segments_intersect_parametric(const GridPoint &a, const GridPoint &b,
                                          const GridPoint &c, const GridPoint &d) {
  using I = __int128;
  constexpr std::int64_t limit = std::int64_t{1} << 28;
  for (const GridPoint *p : {&a, &b, &c, &d})
    if (std::max({p->x, -p->x, p->y, -p->y, p->z, -p->z}) > limit)
      throw InvalidParams("coordinate outside the parametric oracle range");
  if (a == b || c == d) throw DegenerateSegment("segment endpoints coincide");
  struct V {
    I x, y, z;
  };
  auto sub = [](const GridPoint &p, const GridPoint &q) { return V{I(p.x) - q.x, I(p.y) - q.y, I(p.z) - q.z}; };
  auto crs = [](V p, V q) { return V{p.y * q.z - p.z * q.y, p.z * q.x - p.x * q.z, p.x * q.y - p.y * q.x}; };
  auto dt = [](V p, V q) { return p.x * q.x + p.y * q.y + p.z * q.z; };
  auto zero = [](V p) { return p.x == 0 && p.y == 0 && p.z == 0; };

  const V u = sub(b, a), v = sub(d, c), w = sub(c, a);
  const V nrm = crs(u, v);
  if (zero(nrm)) {
    if (!zero(crs(w, u))) return false; // distinct parallel lines
    // Collinear: parameters of c and d along ab, as fractions over u.u.
    const I den = dt(u, u);
    I s1 = dt(w, u), s2 = dt(sub(d, a), u);
    if (s1 > s2) std::swap(s1, s2);
    const I lo = std::max<I>(s1, 0), hi = std::min<I>(s2, den);
    if (lo > hi) return false;
    if (lo < hi) return true;
    // Single common point: an endpoint of ab at parameter 0 or 1, and of cd.
    return false;
  }
  if (dt(w, nrm) != 0) return false; // skew
  const I den = dt(nrm, nrm);
  const I s = dt(crs(w, v), nrm), t = dt(crs(w, u), nrm);
  if (s < 0 || s > den || t < 0 || t > den) return false;
  const bool s_end = s == 0 || s == den, t_end = t == 0 || t == den;
  return !(s_end && t_end);
}

} // namespace updraw::oracle
