#pragma once

// Random instance generators shared by the unit tests and the acceptance run.

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "updraw/graph.hpp"
#include "updraw/layouts.hpp"

namespace fixture {

using namespace updraw;

struct Instance {
  Dag g;
  TrackLayout tl;
};

// Random upward layout on t tracks: ranks follow one random global order and
// candidate arcs are kept only if they stay between tracks and cross nothing
// kept so far.
inline Instance random_upward_instance(int n, int t, int tries, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto seq = updraw::detail::random_permutation(n, rng);
  std::map<int, std::vector<int>> tracks;
  std::vector<int> pos(n);
  for (int k = 0; k < n; ++k) {
    pos[seq[k]] = k;
    tracks[static_cast<int>(updraw::detail::uniform_below(rng, t))].push_back(seq[k]);
  }
  TrackLayout tl = TrackLayout::from_tracks(n, tracks, true);
  std::vector<Arc> kept;
  std::map<std::pair<int, int>, std::vector<Arc>> by_tracks;
  for (int i = 0; i < tries && n > 1; ++i) {
    int v = static_cast<int>(updraw::detail::uniform_below(rng, n));
    int w = static_cast<int>(updraw::detail::uniform_below(rng, n));
    if (tl.track[v] == tl.track[w]) continue;
    if (pos[v] > pos[w]) std::swap(v, w);
    const auto key = std::minmax(tl.track[v], tl.track[w]);
    bool ok = true;
    for (const Arc &a : by_tracks[key]) {
      if (a.tail == v && a.head == w) ok = false;
      for (int flip = 0; flip < 2 && ok; ++flip) {
        const int x = flip ? a.head : a.tail, y = flip ? a.tail : a.head;
        if (tl.track[x] == tl.track[v] && tl.track[y] == tl.track[w] &&
            (tl.rank[v] - tl.rank[x]) * (tl.rank[w] - tl.rank[y]) < 0)
          ok = false;
      }
      if (!ok) break;
    }
    if (!ok) continue;
    kept.push_back({v, w});
    by_tracks[key].push_back({v, w});
  }
  return {Dag(n, kept), tl};
}

inline VertexOrder random_topological_order(const Dag &g, std::mt19937_64 &rng) {
  std::vector<int> indeg(g.n(), 0), seq;
  for (const Arc &a : g.arcs()) ++indeg[a.head];
  std::vector<int> ready;
  for (int v = 0; v < g.n(); ++v)
    if (!indeg[v]) ready.push_back(v);
  while (!ready.empty()) {
    const auto k = updraw::detail::uniform_below(rng, ready.size());
    const int v = ready[k];
    ready.erase(ready.begin() + static_cast<long>(k));
    seq.push_back(v);
    for (int w : g.out(v))
      if (!--indeg[w]) ready.push_back(w);
  }
  return VertexOrder::from_sequence(seq);
}

} // namespace fixture
