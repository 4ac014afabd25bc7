#pragma once

// Track layouts, queue layouts, their verifiers, and the conversions between
// layouts and drawings: wrapping, track-to-queue, 1-queue-to-track and the
// column decomposition of a drawing.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "updraw/errors.hpp"
#include "updraw/geometry.hpp"
#include "updraw/graph.hpp"
#include "updraw/report.hpp"

namespace updraw {

/// Vertex v sits in track `track[v]` (any integer) at position `rank[v]`
/// (0-based) within it.
struct TrackLayout {
  std::vector<int> track;
  std::vector<int> rank;
  bool upward = false;

  int size() const { return static_cast<int>(track.size()); }

  /// Builds a layout from explicit track contents, each listed in order.
  static TrackLayout from_tracks(int n, const std::map<int, std::vector<int>> &tracks,
                                 bool upward = false) {
    TrackLayout tl;
    tl.track.assign(n, 0);
    tl.rank.assign(n, -1);
    tl.upward = upward;
    for (const auto &[id, members] : tracks)
      for (int r = 0; r < static_cast<int>(members.size()); ++r) {
        const int v = members[r];
        if (v < 0 || v >= n || tl.rank[v] != -1)
          throw InvalidLayout("vertex listed twice or out of range");
        tl.track[v] = id;
        tl.rank[v] = r;
      }
    for (int v = 0; v < n; ++v)
      if (tl.rank[v] == -1) throw MissingAssignment("vertex " + std::to_string(v));
    return tl;
  }

  /// Track contents keyed by track id, each sorted by rank.
  std::map<int, std::vector<int>> tracks() const {
    std::map<int, std::vector<int>> t;
    for (int v = 0; v < size(); ++v) t[track[v]].push_back(v);
    for (auto &[id, members] : t)
      std::sort(members.begin(), members.end(),
                [&](int a, int b) { return rank[a] != rank[b] ? rank[a] < rank[b] : a < b; });
    return t;
  }

  int track_count() const { return static_cast<int>(std::set<int>(track.begin(), track.end()).size()); }

  friend bool operator==(const TrackLayout &, const TrackLayout &) = default;
};

/// A vertex ordering plus a queue index per arc (indexed like Dag::arcs()).
struct QueueLayout {
  VertexOrder order;
  std::vector<int> queue;
  bool upward = false;

  int queue_count() const {
    return queue.empty() ? 0 : *std::max_element(queue.begin(), queue.end()) + 1;
  }
};

/// A track layout whose arcs carry colours; only monochromatic X-crossings
/// are forbidden.
struct EdgeColouredTrackLayout {
  TrackLayout layout;
  std::vector<int> arc_colour;
};

inline int span(const TrackLayout &tl, const Arc &a) {
  return std::abs(tl.track[a.head] - tl.track[a.tail]);
}

namespace detail {

inline void require_complete(const Dag &g, const TrackLayout &tl) {
  if (tl.size() != g.n() || static_cast<int>(tl.rank.size()) != g.n())
    throw MissingAssignment("track layout covers " + std::to_string(tl.size()) +
                            " of " + std::to_string(g.n()) + " vertices");
}

/// G plus an arc from each vertex to its successor in its track.
inline std::vector<std::vector<int>> plus_graph(const Dag &g, const TrackLayout &tl) {
  auto out = out_lists(g);
  for (const auto &[id, members] : tl.tracks())
    for (std::size_t k = 0; k + 1 < members.size(); ++k)
      out[members[k]].push_back(members[k + 1]);
  return out;
}

// Some directed cycle of `out`, if any, as a vertex sequence.
inline std::optional<std::vector<int>> find_cycle(const std::vector<std::vector<int>> &out) {
  const int n = static_cast<int>(out.size());
  std::vector<int> state(n, 0), parent(n, -1);
  for (int s = 0; s < n; ++s) {
    if (state[s]) continue;
    std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
    state[s] = 1;
    while (!stack.empty()) {
      auto &[v, next] = stack.back();
      if (next < out[v].size()) {
        int w = out[v][next++];
        if (state[w] == 0) {
          state[w] = 1;
          parent[w] = v;
          stack.push_back({w, 0});
        } else if (state[w] == 1) {
          std::vector<int> cycle{w};
          for (int x = v; x != w; x = parent[x]) cycle.push_back(x);
          std::reverse(cycle.begin() + 1, cycle.end());
          return cycle;
        }
      } else {
        state[v] = 2;
        stack.pop_back();
      }
    }
  }
  return std::nullopt;
}

// Reports every X-crossing among arcs sharing a key. `key(i)` returns
// std::nullopt for arcs that should be ignored.
template <class KeyFn>
void report_x_crossings(const Dag &g, const TrackLayout &tl, KeyFn key, VerifyReport &report) {
  struct Item {
    int lo_rank, hi_rank, arc;
  };
  std::map<std::tuple<int, int, int>, std::vector<Item>> groups;
  for (int i = 0; i < g.m(); ++i) {
    auto k = key(i);
    if (!k) continue;
    const Arc &a = g.arc(i);
    int v = a.tail, w = a.head;
    if (tl.track[v] > tl.track[w]) std::swap(v, w);
    groups[{*k, tl.track[v], tl.track[w]}].push_back({tl.rank[v], tl.rank[w], i});
  }
  for (auto &[k, items] : groups) {
    std::sort(items.begin(), items.end(), [](const Item &a, const Item &b) {
      return std::tie(a.lo_rank, a.hi_rank, a.arc) < std::tie(b.lo_rank, b.hi_rank, b.arc);
    });
    bool crossing = false;
    int best_hi = -1;
    for (std::size_t s = 0; s < items.size() && !crossing;) {
      std::size_t e = s;
      while (e < items.size() && items[e].lo_rank == items[s].lo_rank) ++e;
      for (std::size_t q = s; q < e; ++q)
        if (items[q].hi_rank < best_hi) crossing = true;
      for (std::size_t q = s; q < e; ++q) best_hi = std::max(best_hi, items[q].hi_rank);
      s = e;
    }
    if (!crossing) continue;
    for (std::size_t p = 0; p < items.size(); ++p)
      for (std::size_t q = p + 1; q < items.size(); ++q)
        if (items[p].lo_rank < items[q].lo_rank && items[p].hi_rank > items[q].hi_rank)
          report.add(ViolationKind::x_crossing,
                     {std::min(items[p].arc, items[q].arc), std::max(items[p].arc, items[q].arc)});
  }
}

inline void check_tracks_common(const Dag &g, const TrackLayout &tl, VerifyReport &report) {
  for (const auto &[id, members] : tl.tracks())
    for (int r = 0; r < static_cast<int>(members.size()); ++r)
      if (tl.rank[members[r]] != r) {
        report.add(ViolationKind::bad_rank, {id, members[r]},
                   "track " + std::to_string(id) + " ranks are not 0..size-1");
        break;
      }
  for (int i = 0; i < g.m(); ++i) {
    const Arc &a = g.arc(i);
    if (tl.track[a.tail] == tl.track[a.head]) report.add(ViolationKind::intra_track_arc, {i});
  }
  if (tl.upward) {
    if (auto cycle = find_cycle(plus_graph(g, tl))) {
      std::vector<long long> w(cycle->begin(), cycle->end());
      report.add(ViolationKind::plus_graph_cycle, std::move(w));
    }
  }
}

} // namespace detail

/// Topological order of G+ (smallest id first), or std::nullopt if G+ has a
/// directed cycle.
inline std::optional<VertexOrder> plus_topological_order(const Dag &g, const TrackLayout &tl) {
  detail::require_complete(g, tl);
  auto seq = detail::smallest_first_topological(detail::plus_graph(g, tl));
  if (!seq) return std::nullopt;
  VertexOrder o = VertexOrder::from_sequence(std::move(*seq));
  o.topological = true;
  return o;
}

/// Longest-path depth of every vertex in G+ (>= 1). Requires G+ acyclic.
inline std::vector<int> plus_depths(const Dag &g, const TrackLayout &tl) {
  auto order = plus_topological_order(g, tl);
  if (!order) throw InvalidLayout("G+ has a directed cycle");
  return detail::longest_path_depths(detail::plus_graph(g, tl), order->at);
}

/// Reports rank gaps, intra-track arcs, every X-crossing pair and, for an
/// upward layout, a directed cycle of G+.
inline VerifyReport verify_track_layout(const Dag &g, const TrackLayout &tl) {
  detail::require_complete(g, tl);
  VerifyReport report;
  detail::check_tracks_common(g, tl, report);
  detail::report_x_crossings(g, tl, [](int) { return std::optional<int>(0); }, report);
  report.finalize();
  return report;
}

/// As verify_track_layout, but X-crossings count only between arcs of equal
/// colour.
inline VerifyReport verify_edge_coloured_track_layout(const Dag &g,
                                                      const EdgeColouredTrackLayout &etl) {
  detail::require_complete(g, etl.layout);
  if (static_cast<int>(etl.arc_colour.size()) != g.m())
    throw MissingAssignment("arc colours missing");
  VerifyReport report;
  detail::check_tracks_common(g, etl.layout, report);
  detail::report_x_crossings(
      g, etl.layout, [&](int i) { return std::optional<int>(etl.arc_colour[i]); }, report);
  report.finalize();
  return report;
}

/// Reports every nested pair of arcs within one queue and, for an upward
/// layout, every arc that points backwards in the order.
inline VerifyReport verify_queue_layout(const Dag &g, const QueueLayout &ql) {
  if (ql.order.size() != g.n() || static_cast<int>(ql.queue.size()) != g.m())
    throw MissingAssignment("queue layout does not cover the graph");
  VerifyReport report;
  const auto &pos = ql.order.pos;
  if (ql.upward)
    for (int i = 0; i < g.m(); ++i)
      if (pos[g.arc(i).tail] > pos[g.arc(i).head])
        report.add(ViolationKind::non_topological, {i});

  struct Item {
    int l, r, arc;
  };
  std::map<int, std::vector<Item>> queues;
  for (int i = 0; i < g.m(); ++i) {
    int l = pos[g.arc(i).tail], r = pos[g.arc(i).head];
    if (l > r) std::swap(l, r);
    queues[ql.queue[i]].push_back({l, r, i});
  }
  for (auto &[q, items] : queues) {
    std::sort(items.begin(), items.end(), [](const Item &a, const Item &b) {
      return std::tie(a.l, a.r, a.arc) < std::tie(b.l, b.r, b.arc);
    });
    // Nesting exists iff some arc ends before the furthest-reaching arc that
    // starts strictly to its left.
    bool nested = false;
    int reach = -1;
    for (std::size_t s = 0; s < items.size() && !nested;) {
      std::size_t e = s;
      while (e < items.size() && items[e].l == items[s].l) ++e;
      for (std::size_t k = s; k < e; ++k)
        if (items[k].r < reach) nested = true;
      for (std::size_t k = s; k < e; ++k) reach = std::max(reach, items[k].r);
      s = e;
    }
    if (!nested) continue;
    for (std::size_t p = 0; p < items.size(); ++p)
      for (std::size_t k = 0; k < items.size(); ++k)
        if (items[p].l < items[k].l && items[k].r < items[p].r)
          report.add(ViolationKind::nesting, {items[p].arc, items[k].arc});
  }
  report.finalize();
  return report;
}

/// The order (..., V_-1, V_0, V_1, ...): tracks by id, then by rank.
inline VertexOrder concatenated_order(const TrackLayout &tl) {
  std::vector<int> seq;
  seq.reserve(tl.size());
  for (const auto &[id, members] : tl.tracks()) seq.insert(seq.end(), members.begin(), members.end());
  return VertexOrder::from_sequence(std::move(seq));
}

struct WrapResult {
  QueueLayout queues;
  TrackLayout tracks;
};

/// Folds a layout whose arcs all satisfy track(v) < track(w) <= track(v)+s
/// into an upward queue layout (one queue per distinct span, order
/// ..., V_-1, V_0, V_1, ...) and an upward track layout on tracks
/// 0..2s (old track i goes to i mod (2s+1), ordered by old track then rank).
inline WrapResult wrap(const Dag &g, const TrackLayout &tl, int s) {
  detail::require_complete(g, tl);
  if (s < 1) throw SpanViolation("s must be positive");
  std::set<int> spans;
  for (const Arc &a : g.arcs()) {
    const int d = tl.track[a.head] - tl.track[a.tail];
    if (d <= 0 || d > s)
      throw SpanViolation("arc " + std::to_string(a.tail) + "->" + std::to_string(a.head) +
                          " has signed span " + std::to_string(d));
    spans.insert(d);
  }
  std::map<int, int> queue_of_span;
  for (int d : spans) queue_of_span.emplace(d, static_cast<int>(queue_of_span.size()));

  WrapResult out;
  out.queues.order = concatenated_order(tl);
  out.queues.order.topological = out.queues.order.is_topological_for(g);
  out.queues.upward = true;
  out.queues.queue.reserve(g.m());
  for (const Arc &a : g.arcs())
    out.queues.queue.push_back(queue_of_span.at(tl.track[a.head] - tl.track[a.tail]));

  const int period = 2 * s + 1;
  std::map<int, std::vector<int>> folded;
  for (int v : out.queues.order.at) {
    const int t = ((tl.track[v] % period) + period) % period;
    folded[t].push_back(v);
  }
  out.tracks = TrackLayout::from_tracks(g.n(), folded, true);
  return out;
}

/// Orders G+ topologically (track orders preserved) and puts the arcs of each
/// colour between each pair of tracks in their own queue.
inline QueueLayout track_to_queue(const Dag &g, const EdgeColouredTrackLayout &etl) {
  EdgeColouredTrackLayout checked = etl;
  checked.layout.upward = true;
  auto report = verify_edge_coloured_track_layout(g, checked);
  if (!report.ok()) throw InvalidLayout("edge-coloured track layout: " + report.summary());
  auto order = plus_topological_order(g, etl.layout);
  QueueLayout ql;
  ql.order = *order;
  ql.upward = true;
  std::map<std::tuple<int, int, int>, int> ids;
  std::vector<std::tuple<int, int, int>> keys;
  for (int i = 0; i < g.m(); ++i) {
    const Arc &a = g.arc(i);
    int ta = etl.layout.track[a.tail], tb = etl.layout.track[a.head];
    keys.emplace_back(etl.arc_colour[i], std::min(ta, tb), std::max(ta, tb));
    ids.emplace(keys.back(), 0);
  }
  int next = 0;
  for (auto &[k, id] : ids) id = next++;
  for (const auto &k : keys) ql.queue.push_back(ids.at(k));
  return ql;
}

/// Conditions characterising upward 1-queue layouts: every arc v->w goes
/// from V_i to V_j with i < j <= i+2, and when j = i+2, w is first in V_j and
/// no arc x->y has x after v in V_i and y in V_{i+1}.
inline bool satisfies_one_queue_track_conditions(const Dag &g, const TrackLayout &tl) {
  detail::require_complete(g, tl);
  for (const Arc &a : g.arcs()) {
    const int i = tl.track[a.tail], j = tl.track[a.head];
    if (j <= i || j > i + 2) return false;
    if (j == i + 2) {
      if (tl.rank[a.head] != 0) return false;
      for (const Arc &b : g.arcs())
        if (tl.track[b.tail] == i && tl.rank[b.tail] > tl.rank[a.tail] &&
            tl.track[b.head] == i + 1)
          return false;
    }
  }
  return true;
}

/// Splits the order of an upward 1-queue layout into consecutive blocks
/// V_0, V_1, ... so that every arc has span 1 or 2 and the 1-queue track
/// conditions hold. Concatenating the blocks gives back the input order.
inline TrackLayout one_queue_to_span2_tracks(const Dag &g, const QueueLayout &ql) {
  auto report = verify_queue_layout(g, ql);
  if (!report.ok()) throw NotOneQueue("queue layout invalid: " + report.summary());
  if (ql.queue_count() > 1) throw NotOneQueue("layout uses more than one queue");
  if (!ql.order.is_topological_for(g)) throw NotOneQueue("order is not topological");

  const int n = g.n();
  const auto &at = ql.order.at;
  const auto &pos = ql.order.pos;
  std::map<int, std::vector<int>> blocks;
  int start = 0, block = 0;
  int prev_lo = -1, prev_hi = -1;
  while (start < n) {
    int end = start;
    for (int k = prev_lo; k >= 0 && k <= prev_hi; ++k)
      for (int w : g.out(at[k])) end = std::max(end, pos[w]);
    for (int k = start + 1; k <= end; ++k) {
      bool inner = false;
      for (int u : g.in(at[k]))
        if (pos[u] >= start && pos[u] < k) inner = true;
      if (inner) {
        end = k - 1;
        break;
      }
    }
    blocks[block++].assign(at.begin() + start, at.begin() + end + 1);
    prev_lo = start;
    prev_hi = end;
    start = end + 1;
  }
  TrackLayout tl = TrackLayout::from_tracks(n, blocks, true);
  if (!satisfies_one_queue_track_conditions(g, tl))
    throw InvalidLayout("block decomposition violated the 1-queue conditions");
  return tl;
}

/// Columns of a straight-line drawing, ordered by z, form an improper track
/// layout; each column is split in two by alternating along runs of arcs
/// between consecutive column vertices, giving at most 2XY proper tracks.
inline TrackLayout drawing_to_track_layout(const Dag &g, const Drawing3D &d, bool upward) {
  if (!d.bends.empty()) throw InvalidDrawing("drawing has bends");
  auto report = verify_drawing(g, d, upward);
  if (!report.ok()) throw InvalidDrawing(report.summary());

  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<int>> columns;
  for (int v = 0; v < g.n(); ++v) columns[{d.points[v].x, d.points[v].y}].push_back(v);
  std::map<int, std::vector<int>> tracks;
  int next = 0;
  for (auto &[xy, members] : columns) {
    std::sort(members.begin(), members.end(),
              [&](int a, int b) { return d.points[a].z < d.points[b].z; });
    std::vector<int> halves[2];
    int side = 0;
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (k > 0 && g.adjacent(members[k - 1], members[k])) side ^= 1;
      halves[side].push_back(members[k]);
    }
    for (auto &h : halves)
      if (!h.empty()) tracks[next++] = std::move(h);
  }
  return TrackLayout::from_tracks(g.n(), tracks, upward);
}

} // namespace updraw
