#pragma once

// Coordinate assignments for upward 3D grid drawings and the track layouts
// that feed them: moment curve, colour-class placements, track-based
// drawings for general, 3-, 4- and 5-track layouts, tree and caterpillar
// layouts, and the track layout of K_n with every edge subdivided.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <tuple>
#include <utility>
#include <vector>

#include "updraw/colourings.hpp"
#include "updraw/errors.hpp"
#include "updraw/geometry.hpp"
#include "updraw/graph.hpp"
#include "updraw/layouts.hpp"

namespace updraw {

inline bool is_prime(std::int64_t v) {
  if (v < 2) return false;
  for (std::int64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

/// A prime p with low < p <= high, the smallest such.
struct PrimeChoice {
  std::int64_t p = 0;
  std::int64_t low = 0, high = 0;
};

inline PrimeChoice smallest_prime_in(std::int64_t low, std::int64_t high) {
  for (std::int64_t q = std::max<std::int64_t>(low + 1, 2); q <= high; ++q)
    if (is_prime(q)) return {q, low, high};
  throw InvalidParams("no prime in (" + std::to_string(low) + ", " + std::to_string(high) + "]");
}

namespace detail {

inline std::int64_t mod_pow(std::int64_t base, int exp, std::int64_t p) {
  __int128 r = 1, b = ((base % p) + p) % p;
  for (int k = 0; k < exp; ++k) r = (r * b) % p;
  return static_cast<std::int64_t>(r);
}

inline void require_valid_upward(const Dag &g, const TrackLayout &tl) {
  TrackLayout checked = tl;
  checked.upward = true;
  auto report = verify_track_layout(g, checked);
  if (!report.ok()) throw InvalidLayout("not a valid upward track layout: " + report.summary());
}

// Distinct track ids in ascending order, mapped to 0, 1, 2, ...
inline std::map<int, int> dense_track_index(const TrackLayout &tl) {
  std::map<int, int> index;
  for (int t : tl.track) index.emplace(t, 0);
  int next = 0;
  for (auto &[id, k] : index) k = next++;
  return index;
}

// Column slot per track id: the id itself when every id lies in [0, k),
// otherwise the dense index.
inline std::map<int, int> slot_index(const TrackLayout &tl, int k) {
  auto index = dense_track_index(tl);
  if (static_cast<int>(index.size()) > k) throw InvalidLayout("more than " + std::to_string(k) + " tracks");
  if (!index.empty() && index.begin()->first >= 0 && index.rbegin()->first < k)
    for (auto &[id, slot] : index) slot = id;
  return index;
}

} // namespace detail

/// Vertex in position i (1-based) of the deterministic topological order goes
/// to (i^3 mod p, i^2 mod p, i), p the smallest prime in (n, 2n].
inline Drawing3D moment_curve_drawing(const Dag &g) {
  Drawing3D d;
  d.points.resize(g.n());
  if (g.n() == 0) return d;
  const auto p = smallest_prime_in(g.n(), 2LL * g.n()).p;
  const auto order = topological_order(g);
  for (int k = 0; k < g.n(); ++k) {
    const std::int64_t i = k + 1;
    d.points[order.at[k]] = {detail::mod_pow(i, 3, p), detail::mod_pow(i, 2, p), i};
  }
  return d;
}

/// Crossing-free (not upward) placement from a proper colouring: the k-th
/// vertex (ascending id) of class i goes to (i, t, i*t) with
/// t = (i^2 mod p) + k*p, p the smallest prime >= 2c-1.
inline Drawing3D pach_placement(const Dag &g, const Colouring &col) {
  if (!is_proper_colouring(g, col.colour)) throw InvalidParams("colouring is not proper");
  const int c = std::max(col.c, detail::count_colours(col.colour));
  const auto p = smallest_prime_in(2LL * c - 2, 4LL * c + 2).p;
  Drawing3D d;
  d.points.resize(g.n());
  std::map<int, std::int64_t> used;
  for (int v = 0; v < g.n(); ++v) {
    const std::int64_t i = col.colour[v];
    const std::int64_t t = detail::mod_pow(i, 2, p) + used[i]++ * p;
    d.points[v] = {i, t, i * t};
  }
  return d;
}

/// Upward drawing from a proper c-colouring: x = colour i, y = i*z, and z
/// walks the topological order, each z the next value above its predecessor
/// congruent to i^2 mod p, with p the smallest prime in [2c-1, 4c).
inline Drawing3D coloured_upward_drawing(const Dag &g, const Colouring &col) {
  if (!is_proper_colouring(g, col.colour)) throw InvalidParams("colouring is not proper");
  const int c = std::max(col.c, detail::count_colours(col.colour));
  const auto p = smallest_prime_in(2LL * c - 2, 4LL * c - 1).p;
  Drawing3D d;
  d.points.resize(g.n());
  std::int64_t z = 0;
  bool first = true;
  for (int v : topological_order(g).at) {
    const std::int64_t i = col.colour[v];
    const std::int64_t target = detail::mod_pow(i, 2, p);
    if (first) {
      z = target;
      first = false;
    } else {
      z += 1 + (((target - (z + 1)) % p) + p) % p;
    }
    d.points[v] = {i, i * z, z};
  }
  return d;
}

/// Places the longest-path colouring with pach_placement and swaps x and z,
/// so z(v) = (longest path ending at v) - 1 and the height is exactly the
/// number of vertices on a longest directed path.
inline Drawing3D long_path_drawing(const Dag &g) {
  Drawing3D d = pach_placement(g, longest_path_colouring(g));
  for (auto &pt : d.points) std::swap(pt.x, pt.z);
  return d;
}

/// Track i (1-based after sorting track ids) vertex v goes to
/// (i, i^2 mod p, p*d_v + i^3 mod p), p the smallest prime > t and d_v the
/// longest-path depth of v in G+.
inline Drawing3D track_drawing_general(const Dag &g, const TrackLayout &tl) {
  detail::require_valid_upward(g, tl);
  auto index = detail::dense_track_index(tl);
  const std::int64_t t = static_cast<std::int64_t>(index.size());
  Drawing3D d;
  d.points.resize(g.n());
  if (g.n() == 0) return d;
  const auto p = smallest_prime_in(t, 2 * t + 2).p;
  const auto depth = plus_depths(g, tl);
  for (int v = 0; v < g.n(); ++v) {
    const std::int64_t i = index.at(tl.track[v]) + 1;
    d.points[v] = {i, detail::mod_pow(i, 2, p), p * depth[v] + detail::mod_pow(i, 3, p)};
  }
  return d;
}

/// Upward 2 x 2 x n drawing from an upward layout on at most 3 tracks: the
/// i-th vertex of G+'s topological order goes to (0,0,i), (1,0,i) or (0,1,i)
/// for tracks 0, 1, 2 (other ids are renumbered in ascending order).
inline Drawing3D track_drawing_3(const Dag &g, const TrackLayout &tl) {
  detail::require_valid_upward(g, tl);
  const auto index = detail::slot_index(tl, 3);
  static constexpr std::int64_t xs[3] = {0, 1, 0}, ys[3] = {0, 0, 1};
  Drawing3D d;
  d.points.resize(g.n());
  const auto order = *plus_topological_order(g, tl);
  for (int k = 0; k < g.n(); ++k) {
    const int v = order.at[k];
    const int slot = index.at(tl.track[v]);
    d.points[v] = {xs[slot], ys[slot], k + 1};
  }
  return d;
}

/// Upward 2 x 2 x 2n drawing from an upward layout on at most 4 tracks. The
/// fourth track sits at odd heights on the diagonal column (1,1), the others
/// at even heights, which keeps the one crossing pair of columns apart.
inline Drawing3D track_drawing_4(const Dag &g, const TrackLayout &tl) {
  detail::require_valid_upward(g, tl);
  const auto index = detail::slot_index(tl, 4);
  static constexpr std::int64_t xs[4] = {0, 1, 0, 1}, ys[4] = {0, 0, 1, 1};
  Drawing3D d;
  d.points.resize(g.n());
  const auto order = *plus_topological_order(g, tl);
  for (int k = 0; k < g.n(); ++k) {
    const int v = order.at[k];
    const int slot = index.at(tl.track[v]);
    const std::int64_t i = k + 1;
    d.points[v] = {xs[slot], ys[slot], slot == 3 ? 2 * i - 1 : 2 * i};
  }
  return d;
}

/// Which of the five column positions each track id occupies: slot[k] is the
/// track id placed in position k+1, or std::nullopt for an empty position.
using FiveTrackSlots = std::array<std::optional<int>, 5>;

/// Default slot assignment: the two smallest tracks (empty positions count as
/// size 0; ties by track id) take positions 3 and 5, the others positions
/// 1, 2, 4 in ascending id order.
inline FiveTrackSlots default_five_track_slots(const TrackLayout &tl) {
  auto tracks = tl.tracks();
  if (tracks.size() > 5) throw InvalidLayout("more than 5 tracks");
  struct Entry {
    std::size_t size;
    bool real;
    int id;
  };
  std::vector<Entry> entries;
  for (const auto &[id, members] : tracks) entries.push_back({members.size(), true, id});
  while (entries.size() < 5) entries.push_back({0, false, 0});
  std::stable_sort(entries.begin(), entries.end(), [](const Entry &a, const Entry &b) {
    if (a.size != b.size) return a.size < b.size;
    if (a.real != b.real) return !a.real;
    return a.id < b.id;
  });
  auto as_slot = [](const Entry &e) { return e.real ? std::optional<int>(e.id) : std::nullopt; };
  FiveTrackSlots slots;
  slots[2] = as_slot(entries[0]);
  slots[4] = as_slot(entries[1]);
  std::vector<Entry> rest(entries.begin() + 2, entries.end());
  std::stable_sort(rest.begin(), rest.end(), [](const Entry &a, const Entry &b) {
    if (a.real != b.real) return a.real;
    return a.id < b.id;
  });
  slots[0] = as_slot(rest[0]);
  slots[1] = as_slot(rest[1]);
  slots[3] = as_slot(rest[2]);
  return slots;
}

/// Upward 4 x 4 x ceil(7n/5) drawing from an upward layout on at most 5
/// tracks. Heights follow G+'s topological order, skipping one value where
/// needed so position-3 vertices get odd z and position-5 vertices even z.
inline Drawing3D track_drawing_5(const Dag &g, const TrackLayout &tl, const FiveTrackSlots &slots) {
  detail::require_valid_upward(g, tl);
  static constexpr std::int64_t xs[5] = {1, 2, 2, 3, 4}, ys[5] = {1, 3, 4, 2, 2};
  std::map<int, int> slot_of;
  for (int k = 0; k < 5; ++k)
    if (slots[k] && !slot_of.emplace(*slots[k], k).second)
      throw InvalidLayout("track assigned to two positions");
  for (int t : tl.track)
    if (!slot_of.count(t)) throw InvalidLayout("track " + std::to_string(t) + " has no position");
  Drawing3D d;
  d.points.resize(g.n());
  const auto order = *plus_topological_order(g, tl);
  std::int64_t z = 0;
  for (int v : order.at) {
    const int slot = slot_of.at(tl.track[v]);
    ++z;
    if ((slot == 2 && z % 2 == 0) || (slot == 4 && z % 2 == 1)) ++z;
    d.points[v] = {xs[slot], ys[slot], z};
  }
  return d;
}

inline Drawing3D track_drawing_5(const Dag &g, const TrackLayout &tl) {
  return track_drawing_5(g, tl, default_five_track_slots(tl));
}

// ---------------------------------------------------------------------------
// Trees and caterpillars

inline bool is_tree(const Dag &g) {
  if (g.n() < 1 || g.m() != g.n() - 1) return false;
  std::vector<char> seen(g.n(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.adjacent(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == g.n();
}

/// Rooted at vertex 0, vertex v goes to track 2b(v) - a(v), where a and b
/// count the arcs on the path from v to the root directed toward and away
/// from it. Tracks are ordered by distance from the root, then by the
/// position of the parent. Arcs toward the root get span 1, away span 2.
inline TrackLayout tree_span2_layout(const Dag &g) {
  if (!is_tree(g)) throw NotATree("underlying graph is not a tree");
  const int n = g.n();
  std::vector<int> parent(n, -1), a(n, 0), b(n, 0), dist(n, -1);
  std::vector<int> bfs{0};
  dist[0] = 0;
  for (std::size_t k = 0; k < bfs.size(); ++k) {
    const int v = bfs[k];
    for (int w : g.adjacent(v)) {
      if (dist[w] != -1) continue;
      dist[w] = dist[v] + 1;
      parent[w] = v;
      // w -> v points toward the root.
      a[w] = a[v] + (g.has_arc(w, v) ? 1 : 0);
      b[w] = b[v] + (g.has_arc(v, w) ? 1 : 0);
      bfs.push_back(w);
    }
  }
  std::vector<int> track(n), rank(n, -1);
  for (int v = 0; v < n; ++v) track[v] = 2 * b[v] - a[v];
  std::map<int, int> fill;
  for (std::size_t s = 0; s < bfs.size();) {
    std::size_t e = s;
    while (e < bfs.size() && dist[bfs[e]] == dist[bfs[s]]) ++e;
    std::vector<int> level(bfs.begin() + s, bfs.begin() + e);
    auto key = [&](int v) {
      const int p = parent[v];
      return std::make_tuple(track[v], p < 0 ? 0 : track[p], p < 0 ? 0 : rank[p], v);
    };
    std::sort(level.begin(), level.end(), [&](int x, int y) { return key(x) < key(y); });
    for (int v : level) rank[v] = fill[track[v]]++;
    s = e;
  }
  TrackLayout tl;
  tl.track = std::move(track);
  tl.rank = std::move(rank);
  tl.upward = true;
  return tl;
}

namespace detail {

// Spine of a caterpillar: the path of non-leaf vertices extended by one leaf
// at each end, so every vertex is on the spine or adjacent to it.
inline std::vector<int> caterpillar_spine(const Dag &g) {
  const int n = g.n();
  if (n == 1) return {0};
  if (n == 2) return {0, 1};
  std::vector<char> inner(n, 0);
  for (int v = 0; v < n; ++v) inner[v] = g.degree(v) >= 2;
  auto inner_neighbours = [&](int v) {
    std::vector<int> r;
    for (int w : g.adjacent(v))
      if (inner[w]) r.push_back(w);
    return r;
  };
  auto leaf_neighbours = [&](int v) {
    std::vector<int> r;
    for (int w : g.adjacent(v))
      if (!inner[w]) r.push_back(w);
    return r;
  };
  int start = -1;
  for (int v = 0; v < n; ++v) {
    if (!inner[v]) continue;
    const auto k = inner_neighbours(v).size();
    if (k > 2) throw NotACaterpillar("vertex " + std::to_string(v) + " branches off the spine");
    if (k <= 1 && start == -1) start = v;
  }
  std::vector<int> path{start};
  for (int prev = -1, cur = start;;) {
    int next = -1;
    for (int w : inner_neighbours(cur))
      if (w != prev) next = w;
    if (next == -1) break;
    path.push_back(next);
    prev = cur;
    cur = next;
  }
  const auto front_leaves = leaf_neighbours(path.front());
  const auto back_leaves = leaf_neighbours(path.back());
  const int head = front_leaves.front();
  const int tail = path.size() == 1 ? front_leaves.at(1) : back_leaves.front();
  path.insert(path.begin(), head);
  path.push_back(tail);
  return path;
}

} // namespace detail

/// Walks the spine from track 0, moving one track up along forward spine
/// arcs and one down along backward ones; each leaf goes one track below its
/// spine vertex if it points into it, one above otherwise. Every arc ends up
/// with track(head) = track(tail) + 1.
inline TrackLayout caterpillar_span1_layout(const Dag &g) {
  if (!is_tree(g)) throw NotACaterpillar("underlying graph is not a tree");
  const auto spine = detail::caterpillar_spine(g);
  std::vector<char> on_spine(g.n(), 0);
  for (int v : spine) on_spine[v] = 1;
  std::map<int, std::vector<int>> tracks;
  std::vector<int> track(g.n(), 0);
  for (std::size_t j = 0; j < spine.size(); ++j) {
    const int v = spine[j];
    if (j > 0) {
      const int u = spine[j - 1];
      track[v] = g.has_arc(u, v) ? track[u] + 1 : track[u] - 1;
    }
    tracks[track[v]].push_back(v);
    for (int w : g.adjacent(v)) {
      if (on_spine[w]) continue;
      track[w] = g.has_arc(w, v) ? track[v] - 1 : track[v] + 1;
      tracks[track[w]].push_back(w);
    }
  }
  return TrackLayout::from_tracks(g.n(), tracks, true);
}

// ---------------------------------------------------------------------------
// K_n with every edge subdivided

struct KnPrimeLayout {
  Dag graph;
  TrackLayout layout;
  int p = 0;
};

/// Track layout of K_n' (vertex numbering as in knprime()) with at most
/// p^2 + 1 + p(p-1) tracks, p = ceil(n^(1/3)). Original vertex q is the
/// (q mod p)-th vertex of original track q / p; division vertices of edges
/// inside one class S_k share a track, and those of edges between S_k and
/// S_l (k < l) split over two tracks A_kl and B_kl.
inline KnPrimeLayout knprime_track_layout(int n) {
  if (n < 1) throw InvalidParams("n must be at least 1");
  int p = 1;
  while (static_cast<long long>(p) * p * p < n) ++p;
  KnPrimeLayout out{knprime(n), {}, p};

  std::map<int, std::vector<int>> originals;
  for (int q = 0; q < n; ++q) originals[q / p].push_back(q);

  std::vector<std::pair<int, int>> same;       // (k, vertex)
  std::map<std::pair<int, int>, std::vector<std::tuple<int, int, int>>> a_tracks, b_tracks;
  int div = n;
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w, ++div) {
      int iu = u / p, ku = u % p, iw = w / p, kw = w % p;
      if (ku == kw) {
        same.push_back({ku, div});
        continue;
      }
      if (ku > kw) {
        std::swap(iu, iw);
        std::swap(ku, kw);
      }
      // Now the edge is v_{iu,ku} v_{iw,kw} with ku < kw.
      if (iu <= iw) a_tracks[{ku, kw}].push_back({iu, iw, div});
      else b_tracks[{ku, kw}].push_back({iu, iw, div});
    }

  std::map<int, std::vector<int>> tracks;
  int next = 0;
  for (auto &[i, members] : originals) tracks[next++] = members;
  if (!same.empty()) {
    std::stable_sort(same.begin(), same.end(),
                     [](auto &x, auto &y) { return x.first < y.first; });
    auto &t = tracks[next++];
    for (auto &[k, v] : same) t.push_back(v);
  }
  for (auto &[kl, items] : a_tracks) {
    // Non-increasing i, ties by decreasing j.
    std::sort(items.begin(), items.end(), [](auto &x, auto &y) {
      return std::tie(std::get<0>(y), std::get<1>(y)) < std::tie(std::get<0>(x), std::get<1>(x));
    });
    auto &t = tracks[next++];
    for (auto &item : items) t.push_back(std::get<2>(item));
  }
  for (auto &[kl, items] : b_tracks) {
    // Non-decreasing j, ties by increasing i.
    std::sort(items.begin(), items.end(), [](auto &x, auto &y) {
      return std::tie(std::get<1>(x), std::get<0>(x)) < std::tie(std::get<1>(y), std::get<0>(y));
    });
    auto &t = tracks[next++];
    for (auto &item : items) t.push_back(std::get<2>(item));
  }
  out.layout = TrackLayout::from_tracks(out.graph.n(), tracks, false);
  return out;
}

} // namespace updraw
