#pragma once

// Subdivisions with small upward queue and track layouts, driven by the
// bandwidth of a topological order, plus upward polyline drawings.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "updraw/constructions.hpp"
#include "updraw/errors.hpp"
#include "updraw/geometry.hpp"
#include "updraw/graph.hpp"
#include "updraw/layouts.hpp"

namespace updraw {

/// Where a vertex of a subdivision came from: an original vertex, or the
/// `step`-th interior vertex (1-based) of the path replacing original arc
/// `arc`.
struct VertexOrigin {
  int original = -1;
  int arc = -1;
  int step = 0;
  bool is_original() const { return original >= 0; }
};

/// Original vertices keep their ids; division vertices follow them.
/// `paths[i]` is the directed path replacing original arc i.
struct Subdivision {
  Dag graph;
  std::vector<VertexOrigin> origin;
  std::vector<int> per_arc_counts;
  std::vector<std::vector<int>> paths;
  int original_n = 0;
};

namespace detail {

struct SubdivisionBuilder {
  int n;
  int next;
  std::vector<Arc> arcs;
  std::vector<VertexOrigin> origin;
  std::vector<std::vector<int>> paths;

  SubdivisionBuilder(int original_n, int original_m)
      : n(original_n), next(original_n), paths(original_m) {
    for (int v = 0; v < n; ++v) origin.push_back({v, -1, 0});
  }

  int add_division(int arc, int step) {
    origin.push_back({-1, arc, step});
    return next++;
  }

  void set_path(int arc, std::vector<int> path) {
    for (std::size_t k = 0; k + 1 < path.size(); ++k) arcs.push_back({path[k], path[k + 1]});
    paths[arc] = std::move(path);
  }

  Subdivision finish() {
    Subdivision s;
    s.graph = Dag(next, arcs);
    s.origin = std::move(origin);
    s.paths = std::move(paths);
    s.original_n = n;
    for (const auto &p : s.paths) s.per_arc_counts.push_back(static_cast<int>(p.size()) - 2);
    return s;
  }
};

} // namespace detail

/// Replaces every subdivision path by a single arc between its ends.
/// Throws InvalidParams if a path is not a directed path of the subdivision.
inline Dag contract(const Subdivision &s) {
  std::vector<Arc> arcs;
  for (const auto &path : s.paths) {
    if (path.size() < 2) throw InvalidParams("empty subdivision path");
    for (std::size_t k = 0; k + 1 < path.size(); ++k)
      if (!s.graph.has_arc(path[k], path[k + 1]))
        throw InvalidParams("subdivision path is not directed");
    for (std::size_t k = 1; k + 1 < path.size(); ++k)
      if (s.origin[path[k]].is_original()) throw InvalidParams("path passes an original vertex");
    arcs.push_back({path.front(), path.back()});
  }
  return Dag(s.original_n, arcs);
}

/// A topological order and its bandwidth, the largest position gap of an arc.
struct BandwidthCertificate {
  VertexOrder order;
  int b = 0;
};

inline BandwidthCertificate bandwidth_of(const Dag &g, const VertexOrder &order) {
  if (!order.is_topological_for(g)) throw NotTopological("order is not topological");
  BandwidthCertificate cert{order, 0};
  cert.order.topological = true;
  for (const Arc &a : g.arcs()) cert.b = std::max(cert.b, order.pos[a.head] - order.pos[a.tail]);
  return cert;
}

// ---------------------------------------------------------------------------
// Upward 2-queue subdivision

struct TwoQueueSubdivision {
  Subdivision sub;
  TrackLayout levels; // track l holds v_l (first) and the division vertices x(i,j,l)
  QueueLayout queues;
};

/// Division vertices of an arc with position gap `gap` in the 2-queue
/// subdivision.
constexpr int two_queue_division_count(int gap) {
  if (gap <= 1) return 0;
  return gap % 2 == 0 ? (gap - 2) / 2 : (gap - 1) / 2;
}

/// Replaces an arc v_i v_j (positions 1-based) with j - i >= 2 by a path
/// through levels i+2, i+4, ..., j-2 when j - i is even and i+1, i+3, ...,
/// j-2 when odd. Level l holds v_l first, then its division vertices ordered
/// by the rank of their unique lower neighbour. In the order V_1, ..., V_n,
/// arcs of span two into division vertices form one queue and all other arcs
/// the second.
inline TwoQueueSubdivision two_queue_subdivision(const Dag &g, const BandwidthCertificate &cert) {
  if (!cert.order.is_topological_for(g)) throw NotTopological("certificate order");
  const int n = g.n();
  auto level_of_pos = [](int p) { return p + 1; };

  std::vector<int> arc_ids(g.m());
  for (int i = 0; i < g.m(); ++i) arc_ids[i] = i;
  std::sort(arc_ids.begin(), arc_ids.end(), [&](int x, int y) {
    return std::make_pair(cert.order.pos[g.arc(x).tail], cert.order.pos[g.arc(x).head]) <
           std::make_pair(cert.order.pos[g.arc(y).tail], cert.order.pos[g.arc(y).head]);
  });

  detail::SubdivisionBuilder build(n, g.m());
  std::vector<int> level(n);
  for (int v = 0; v < n; ++v) level[v] = level_of_pos(cert.order.pos[v]);
  // Per division vertex: its lower neighbour and the (head, tail) levels of
  // its arc, used for ordering within a level.
  std::map<int, std::tuple<int, int, int>> lower_info;
  for (int ai : arc_ids) {
    const Arc &a = g.arc(ai);
    const int i = level[a.tail], j = level[a.head];
    std::vector<int> path{a.tail};
    if (j - i >= 2) {
      int l = (j - i) % 2 == 0 ? i + 2 : i + 1;
      int step = 1;
      for (; l <= j - 2; l += 2) {
        const int x = build.add_division(ai, step++);
        level.push_back(l);
        lower_info[x] = {path.back(), j, i};
        path.push_back(x);
      }
    }
    path.push_back(a.head);
    build.set_path(ai, std::move(path));
  }
  TwoQueueSubdivision out;
  out.sub = build.finish();
  const Dag &s = out.sub.graph;

  std::vector<std::vector<int>> members(n + 2);
  for (int v = 0; v < n; ++v) members[level[v]].push_back(v);
  std::vector<int> rank(s.n(), -1);
  std::vector<std::vector<int>> by_level(n + 2);
  for (auto &[x, info] : lower_info) by_level[level[x]].push_back(x);
  std::map<int, std::vector<int>> tracks;
  for (int l = 1; l <= n; ++l) {
    auto &divs = by_level[l];
    std::sort(divs.begin(), divs.end(), [&](int x, int y) {
      auto [lx, jx, ix] = lower_info.at(x);
      auto [ly, jy, iy] = lower_info.at(y);
      return std::make_tuple(rank[lx], jx, ix, x) < std::make_tuple(rank[ly], jy, iy, y);
    });
    auto &t = tracks[l];
    t = members[l];
    t.insert(t.end(), divs.begin(), divs.end());
    for (int r = 0; r < static_cast<int>(t.size()); ++r) rank[t[r]] = r;
  }
  out.levels = TrackLayout::from_tracks(s.n(), tracks, true);

  out.queues.order = concatenated_order(out.levels);
  out.queues.order.topological = true;
  out.queues.upward = true;
  for (const Arc &a : s.arcs()) {
    const bool into_division = !out.sub.origin[a.head].is_original();
    const int sp = out.levels.track[a.head] - out.levels.track[a.tail];
    out.queues.queue.push_back(into_division && sp == 2 ? 1 : 0);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Upward 4-track subdivision

struct FourTrackSubdivision {
  Subdivision sub;
  TrackLayout layout; // tracks 0, 1, 2 wrap the levels; track 3 is Y
};

/// Replaces each arc v_i v_j (positions 0-based) with j >= i+2 by the path
/// v_i, x(i,j,i+1), ..., x(i,j,j-1), y(i,j), v_j. Level l holds v_l then the
/// x(i,j,l) by non-increasing i, ties increasing j; levels wrap into tracks
/// l mod 3. Track 3 holds the y(i,j) by non-decreasing j, ties decreasing i.
inline FourTrackSubdivision four_track_subdivision(const Dag &g, const BandwidthCertificate &cert) {
  if (!cert.order.is_topological_for(g)) throw NotTopological("certificate order");
  const int n = g.n();
  const auto &pos = cert.order.pos;
  std::vector<int> arc_ids(g.m());
  for (int i = 0; i < g.m(); ++i) arc_ids[i] = i;
  std::sort(arc_ids.begin(), arc_ids.end(), [&](int x, int y) {
    return std::make_pair(pos[g.arc(x).tail], pos[g.arc(x).head]) <
           std::make_pair(pos[g.arc(y).tail], pos[g.arc(y).head]);
  });

  detail::SubdivisionBuilder build(n, g.m());
  std::vector<std::vector<std::tuple<int, int, int>>> level_divs(n); // (i, j, id)
  std::vector<std::tuple<int, int, int>> ys;
  for (int ai : arc_ids) {
    const Arc &a = g.arc(ai);
    const int i = pos[a.tail], j = pos[a.head];
    std::vector<int> path{a.tail};
    if (j >= i + 2) {
      int step = 1;
      for (int l = i + 1; l <= j - 1; ++l) {
        const int x = build.add_division(ai, step++);
        level_divs[l].push_back({i, j, x});
        path.push_back(x);
      }
      const int y = build.add_division(ai, step);
      ys.push_back({i, j, y});
      path.push_back(y);
    }
    path.push_back(a.head);
    build.set_path(ai, std::move(path));
  }
  FourTrackSubdivision out;
  out.sub = build.finish();

  std::map<int, std::vector<int>> tracks;
  for (int l = 0; l < n; ++l) {
    auto &divs = level_divs[l];
    std::sort(divs.begin(), divs.end(), [](auto &x, auto &y) {
      if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) > std::get<0>(y);
      return std::get<1>(x) < std::get<1>(y);
    });
    auto &t = tracks[l % 3];
    t.push_back(cert.order.at[l]);
    for (auto &d : divs) t.push_back(std::get<2>(d));
  }
  std::sort(ys.begin(), ys.end(), [](auto &x, auto &y) {
    if (std::get<1>(x) != std::get<1>(y)) return std::get<1>(x) < std::get<1>(y);
    return std::get<0>(x) > std::get<0>(y);
  });
  if (!ys.empty()) {
    auto &t = tracks[3];
    for (auto &y : ys) t.push_back(std::get<2>(y));
  }
  out.layout = TrackLayout::from_tracks(out.sub.graph.n(), tracks, true);
  return out;
}

/// Upward polyline drawing of g in a 2 x 2 x 2(n + bm) box: the 4-track
/// subdivision drawn on four columns, division vertices becoming bends.
inline Drawing3D four_track_bend_drawing(const Dag &g, const BandwidthCertificate &cert) {
  const auto sub = four_track_subdivision(g, cert);
  const Drawing3D flat = track_drawing_4(sub.sub.graph, sub.layout);
  Drawing3D d;
  d.points.assign(flat.points.begin(), flat.points.begin() + g.n());
  for (int i = 0; i < g.m(); ++i) {
    const auto &path = sub.sub.paths[i];
    if (path.size() <= 2) continue;
    auto &chain = d.bends[{g.arc(i).tail, g.arc(i).head}];
    for (std::size_t k = 1; k + 1 < path.size(); ++k) chain.push_back(flat.points[path[k]]);
  }
  return d;
}

// ---------------------------------------------------------------------------
// Upward planar subdivision

struct Point2 {
  std::int64_t x = 0, y = 0;
  friend auto operator<=>(const Point2 &, const Point2 &) = default;
};

/// Straight-line planar drawing with one point per vertex.
struct Drawing2D {
  std::vector<Point2> points;
};

struct UpwardPlanarSubdivision {
  Subdivision sub;
  TrackLayout levels; // span one: track = index of the vertex y-level
  QueueLayout one_queue;
  TrackLayout three_tracks;
};

/// Subdivides every arc where it crosses the horizontal line through some
/// vertex. Tracks are the distinct vertex y-levels, ordered by x.
inline UpwardPlanarSubdivision upward_planar_subdivision(const Dag &g, const Drawing2D &upd) {
  using Rational = boost::multiprecision::cpp_rational;
  if (static_cast<int>(upd.points.size()) != g.n())
    throw NotUpwardPlanar("drawing does not place every vertex");
  for (const Arc &a : g.arcs())
    if (upd.points[a.tail].y >= upd.points[a.head].y)
      throw NotUpwardPlanar("arc " + std::to_string(a.tail) + "->" + std::to_string(a.head) +
                            " is not y-monotone");
  Drawing3D flat;
  for (const auto &p : upd.points) flat.points.push_back({p.x, p.y, 0});
  if (auto report = verify_drawing(g, flat, false); !report.ok())
    throw NotUpwardPlanar(report.summary());

  std::vector<std::int64_t> ys;
  for (const auto &p : upd.points) ys.push_back(p.y);
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  auto level_of = [&](std::int64_t y) {
    return static_cast<int>(std::lower_bound(ys.begin(), ys.end(), y) - ys.begin());
  };

  detail::SubdivisionBuilder build(g.n(), g.m());
  std::vector<std::pair<int, Rational>> place; // (level, x) per vertex
  for (int v = 0; v < g.n(); ++v) place.push_back({level_of(upd.points[v].y), Rational(upd.points[v].x)});
  for (int ai = 0; ai < g.m(); ++ai) {
    const Arc &a = g.arc(ai);
    const Point2 &p = upd.points[a.tail], &q = upd.points[a.head];
    std::vector<int> path{a.tail};
    int step = 1;
    for (int l = level_of(p.y) + 1; l < level_of(q.y); ++l) {
      const int x = build.add_division(ai, step++);
      const Rational t(Rational(ys[l] - p.y) / Rational(q.y - p.y));
      place.push_back({l, Rational(p.x) + t * Rational(q.x - p.x)});
      path.push_back(x);
    }
    path.push_back(a.head);
    build.set_path(ai, std::move(path));
  }
  UpwardPlanarSubdivision out;
  out.sub = build.finish();
  std::map<int, std::vector<int>> tracks;
  for (int v = 0; v < out.sub.graph.n(); ++v) tracks[place[v].first].push_back(v);
  for (auto &[l, members] : tracks)
    std::sort(members.begin(), members.end(), [&](int u, int w) {
      return place[u].second != place[w].second ? place[u].second < place[w].second : u < w;
    });
  out.levels = TrackLayout::from_tracks(out.sub.graph.n(), tracks, true);
  auto wrapped = wrap(out.sub.graph, out.levels, 1);
  out.one_queue = std::move(wrapped.queues);
  out.three_tracks = std::move(wrapped.tracks);
  return out;
}

// ---------------------------------------------------------------------------
// Queue layouts of a fixed order and 2-bend drawings

/// Puts each arc in the queue equal to the length of the longest chain of
/// arcs nested strictly inside it, so the queue count is the largest rainbow
/// of the order.
inline QueueLayout rainbow_queue_layout(const Dag &g, const VertexOrder &order) {
  if (!order.is_topological_for(g)) throw NotTopological("order is not topological");
  const int n = g.n();
  QueueLayout ql;
  ql.order = order;
  ql.order.topological = true;
  ql.upward = true;
  ql.queue.assign(g.m(), 0);

  std::vector<int> ids(g.m());
  for (int i = 0; i < g.m(); ++i) ids[i] = i;
  auto left = [&](int i) { return order.pos[g.arc(i).tail]; };
  auto right = [&](int i) { return order.pos[g.arc(i).head]; };
  std::sort(ids.begin(), ids.end(), [&](int x, int y) { return left(x) > left(y); });

  // Fenwick tree over right endpoints holding max(queue + 1).
  std::vector<int> tree(n + 1, 0);
  auto update = [&](int at, int value) {
    for (++at; at <= n; at += at & -at) tree[at] = std::max(tree[at], value);
  };
  auto prefix_max = [&](int below) {
    int best = 0;
    for (int at = below; at > 0; at -= at & -at) best = std::max(best, tree[at]);
    return best;
  };
  for (std::size_t s = 0; s < ids.size();) {
    std::size_t e = s;
    while (e < ids.size() && left(ids[e]) == left(ids[s])) ++e;
    for (std::size_t k = s; k < e; ++k) ql.queue[ids[k]] = prefix_max(right(ids[k]));
    for (std::size_t k = s; k < e; ++k) update(right(ids[k]), ql.queue[ids[k]] + 1);
    s = e;
  }
  return ql;
}

/// Vertex in position i (1-based) at (0,0,2i); consecutive arcs straight,
/// and an arc v_i v_j with j >= i+2 in queue l bends at (2l, 1, i+j) and
/// (2l+1, 1, i+j+1).
inline Drawing3D two_bend_drawing(const Dag &g, const QueueLayout &ql) {
  auto report = verify_queue_layout(g, QueueLayout{ql.order, ql.queue, true});
  if (!report.ok()) throw InvalidLayout("queue layout: " + report.summary());
  Drawing3D d;
  d.points.resize(g.n());
  for (int v = 0; v < g.n(); ++v) d.points[v] = {0, 0, 2LL * (ql.order.pos[v] + 1)};
  for (int a = 0; a < g.m(); ++a) {
    const std::int64_t i = ql.order.pos[g.arc(a).tail] + 1, j = ql.order.pos[g.arc(a).head] + 1;
    if (j < i + 2) continue;
    const std::int64_t l = ql.queue[a];
    d.bends[{g.arc(a).tail, g.arc(a).head}] = {{2 * l, 1, i + j}, {2 * l + 1, 1, i + j + 1}};
  }
  return d;
}

} // namespace updraw
