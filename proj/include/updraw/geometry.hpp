#pragma once

// Exact integer geometry for 3D grid drawings: the drawing model, bounding
// boxes, the segment intersection predicate and the drawing verifier.
//
// No floating point is used. Predicates pick the narrowest integer type that
// cannot overflow for the coordinates at hand: 64-bit below 2^19, 128-bit
// below 2^40, and an arbitrary-precision integer otherwise.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "updraw/errors.hpp"
#include "updraw/graph.hpp"
#include "updraw/report.hpp"

namespace updraw {

struct GridPoint {
  std::int64_t x = 0, y = 0, z = 0;
  friend auto operator<=>(const GridPoint &, const GridPoint &) = default;
};

inline GridPoint operator+(GridPoint a, GridPoint b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}

/// A drawing of a dag: one point per vertex (indexed by vertex id) and an
/// optional chain of bend points per arc, listed in tail-to-head order.
struct Drawing3D {
  std::vector<GridPoint> points;
  std::map<std::pair<int, int>, std::vector<GridPoint>> bends;

  std::vector<GridPoint> polyline(const Arc &a) const {
    std::vector<GridPoint> line{points.at(a.tail)};
    if (auto it = bends.find({a.tail, a.head}); it != bends.end())
      line.insert(line.end(), it->second.begin(), it->second.end());
    line.push_back(points.at(a.head));
    return line;
  }

  Drawing3D translated(GridPoint by) const {
    Drawing3D d = *this;
    for (auto &p : d.points) p = p + by;
    for (auto &[arc, chain] : d.bends)
      for (auto &p : chain) p = p + by;
    return d;
  }

  friend bool operator==(const Drawing3D &, const Drawing3D &) = default;
};

/// Side lengths counted in gridpoints, so a single point is 1x1x1.
struct BoundingBox {
  std::int64_t X = 0, Y = 0, Z = 0;
  GridPoint min, max;
  std::int64_t volume() const { return X * Y * Z; }
  friend bool operator==(const BoundingBox &, const BoundingBox &) = default;
};

inline BoundingBox bounding_box(const Drawing3D &d) {
  std::optional<GridPoint> lo, hi;
  auto take = [&](const GridPoint &p) {
    if (!lo) {
      lo = hi = p;
      return;
    }
    lo = GridPoint{std::min(lo->x, p.x), std::min(lo->y, p.y), std::min(lo->z, p.z)};
    hi = GridPoint{std::max(hi->x, p.x), std::max(hi->y, p.y), std::max(hi->z, p.z)};
  };
  for (const auto &p : d.points) take(p);
  for (const auto &[arc, chain] : d.bends)
    for (const auto &p : chain) take(p);
  if (!lo) throw EmptyDrawing("drawing has no points");
  BoundingBox b;
  b.min = *lo;
  b.max = *hi;
  b.X = hi->x - lo->x + 1;
  b.Y = hi->y - lo->y + 1;
  b.Z = hi->z - lo->z + 1;
  return b;
}

namespace detail {

using BigInt = boost::multiprecision::cpp_int;

template <class T> struct V3 {
  T x, y, z;
};

template <class T> V3<T> diff(const GridPoint &a, const GridPoint &b) {
  return {T(a.x) - T(b.x), T(a.y) - T(b.y), T(a.z) - T(b.z)};
}

template <class T> V3<T> cross(const V3<T> &a, const V3<T> &b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

template <class T> T dot(const V3<T> &a, const V3<T> &b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

template <class T> int sign(const T &v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

template <class T> bool is_zero(const V3<T> &v) {
  return v.x == 0 && v.y == 0 && v.z == 0;
}

// Pick one coordinate of a point as a scalar of type T.
template <class T> T coord(const GridPoint &p, int axis) {
  return axis == 0 ? T(p.x) : (axis == 1 ? T(p.y) : T(p.z));
}

template <class T>
bool improper_intersection(const GridPoint &a, const GridPoint &b,
                           const GridPoint &c, const GridPoint &d) {
  const V3<T> u = diff<T>(b, a);
  const V3<T> ac = diff<T>(c, a);
  const V3<T> ad = diff<T>(d, a);
  V3<T> normal = cross(u, ac);
  if (is_zero(normal)) normal = cross(u, ad);

  if (is_zero(normal)) {
    // All four points are collinear: compare parameter intervals along an
    // axis on which the line is not constant.
    const int axis = u.x != 0 ? 0 : (u.y != 0 ? 1 : 2);
    T a1 = coord<T>(a, axis), b1 = coord<T>(b, axis);
    T c1 = coord<T>(c, axis), d1 = coord<T>(d, axis);
    T lo = std::max(std::min(a1, b1), std::min(c1, d1));
    T hi = std::min(std::max(a1, b1), std::max(c1, d1));
    // A single common point is an endpoint of both segments, i.e. shared.
    return hi > lo;
  }

  if (dot(normal, ad) != 0) return false; // not coplanar

  // Project onto the coordinate plane orthogonal to a non-zero normal
  // component; the projection is injective on the common plane.
  const int drop = normal.x != 0 ? 0 : (normal.y != 0 ? 1 : 2);
  auto px = [&](const GridPoint &p) { return coord<T>(p, drop == 0 ? 1 : 0); };
  auto py = [&](const GridPoint &p) { return coord<T>(p, drop == 2 ? 1 : 2); };
  auto orient = [&](const GridPoint &p, const GridPoint &q, const GridPoint &r) {
    return sign<T>((px(q) - px(p)) * (py(r) - py(p)) -
                   (py(q) - py(p)) * (px(r) - px(p)));
  };
  const int o1 = orient(a, b, c), o2 = orient(a, b, d);
  const int o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 * o2 > 0 || o3 * o4 > 0) return false;
  // The lines are distinct, so the segments meet in exactly one point; it is
  // exempt only when it is an endpoint common to both segments.
  const bool shared = a == c || a == d || b == c || b == d;
  return !shared;
}

template <class T>
bool on_closed_segment(const GridPoint &p, const GridPoint &a, const GridPoint &b) {
  if (p.x < std::min(a.x, b.x) || p.x > std::max(a.x, b.x) ||
      p.y < std::min(a.y, b.y) || p.y > std::max(a.y, b.y) ||
      p.z < std::min(a.z, b.z) || p.z > std::max(a.z, b.z))
    return false;
  return is_zero(cross(diff<T>(b, a), diff<T>(p, a)));
}

inline std::uint64_t magnitude(std::int64_t v) {
  return v < 0 ? std::uint64_t(0) - static_cast<std::uint64_t>(v)
               : static_cast<std::uint64_t>(v);
}

inline std::uint64_t max_magnitude(std::initializer_list<GridPoint> pts) {
  std::uint64_t m = 0;
  for (const auto &p : pts)
    m = std::max({m, magnitude(p.x), magnitude(p.y), magnitude(p.z)});
  return m;
}

constexpr std::uint64_t kInt64Safe = std::uint64_t{1} << 19;
constexpr std::uint64_t kInt128Safe = std::uint64_t{1} << 40;

struct BBox {
  std::int64_t lo[3], hi[3];
  static BBox of(const GridPoint &a, const GridPoint &b) {
    return {{std::min(a.x, b.x), std::min(a.y, b.y), std::min(a.z, b.z)},
            {std::max(a.x, b.x), std::max(a.y, b.y), std::max(a.z, b.z)}};
  }
  bool overlaps(const BBox &o) const {
    for (int k = 0; k < 3; ++k)
      if (hi[k] < o.lo[k] || o.hi[k] < lo[k]) return false;
    return true;
  }
};

} // namespace detail

/// True iff the closed segments ab and cd share a point other than an
/// endpoint common to both: proper crossings, collinear overlaps and an
/// endpoint touching the other segment's interior all count.
inline bool segments_intersect_improperly(const GridPoint &a, const GridPoint &b,
                                          const GridPoint &c, const GridPoint &d) {
  if (a == b || c == d) throw DegenerateSegment("segment endpoints coincide");
  if (!detail::BBox::of(a, b).overlaps(detail::BBox::of(c, d))) return false;
  const auto mag = detail::max_magnitude({a, b, c, d});
  if (mag < detail::kInt64Safe)
    return detail::improper_intersection<std::int64_t>(a, b, c, d);
  if (mag < detail::kInt128Safe)
    return detail::improper_intersection<__int128>(a, b, c, d);
  return detail::improper_intersection<detail::BigInt>(a, b, c, d);
}

inline bool point_on_segment(const GridPoint &p, const GridPoint &a, const GridPoint &b) {
  const auto mag = detail::max_magnitude({p, a, b});
  if (mag < detail::kInt64Safe) return detail::on_closed_segment<std::int64_t>(p, a, b);
  if (mag < detail::kInt128Safe) return detail::on_closed_segment<__int128>(p, a, b);
  return detail::on_closed_segment<detail::BigInt>(p, a, b);
}

/// Certifies a drawing of g. Reports coincident points (vertex or bend
/// points shared by two owners), vertices lying on segments they are not an
/// endpoint of, improperly intersecting segment pairs, and, when
/// `require_upward` is set, arcs whose polyline z is not strictly increasing.
inline VerifyReport verify_drawing(const Dag &g, const Drawing3D &d, bool require_upward) {
  if (static_cast<int>(d.points.size()) != g.n())
    throw MissingVertexPoint("drawing has " + std::to_string(d.points.size()) +
                             " points for " + std::to_string(g.n()) + " vertices");
  VerifyReport report;

  // Owners: vertex v is encoded as v, bend k of arc i as -(1 + i*2^20 + k).
  std::map<GridPoint, std::vector<long long>> owners;
  for (int v = 0; v < g.n(); ++v) owners[d.points[v]].push_back(v);

  struct Seg {
    GridPoint a, b;
    int arc, index;
    detail::BBox box;
  };
  std::vector<Seg> segs;
  for (int i = 0; i < g.m(); ++i) {
    const Arc &arc = g.arc(i);
    auto line = d.polyline(arc);
    for (std::size_t k = 1; k + 1 < line.size(); ++k)
      owners[line[k]].push_back(-(1 + (static_cast<long long>(i) << 20) +
                                  static_cast<long long>(k - 1)));
    bool upward = true;
    for (std::size_t k = 0; k + 1 < line.size(); ++k) {
      if (line[k].z >= line[k + 1].z) upward = false;
      if (line[k] == line[k + 1]) continue; // reported as coincident points
      segs.push_back({line[k], line[k + 1], i, static_cast<int>(k),
                      detail::BBox::of(line[k], line[k + 1])});
    }
    if (require_upward && !upward)
      report.add(ViolationKind::non_upward, {i},
                 "arc " + std::to_string(arc.tail) + "->" + std::to_string(arc.head));
  }
  for (const auto &[p, who] : owners)
    if (who.size() > 1) report.add(ViolationKind::coincident_points, who);

  // Sweep along x so only segments with overlapping x-extent are compared.
  std::vector<int> by_x(segs.size());
  for (std::size_t i = 0; i < segs.size(); ++i) by_x[i] = static_cast<int>(i);
  std::sort(by_x.begin(), by_x.end(), [&](int p, int q) {
    return segs[p].box.lo[0] != segs[q].box.lo[0] ? segs[p].box.lo[0] < segs[q].box.lo[0]
                                                  : p < q;
  });
  for (std::size_t s = 0; s < by_x.size(); ++s) {
    const Seg &p = segs[by_x[s]];
    for (std::size_t t = s + 1; t < by_x.size(); ++t) {
      const Seg &q = segs[by_x[t]];
      if (q.box.lo[0] > p.box.hi[0]) break;
      if (!p.box.overlaps(q.box)) continue;
      if (segments_intersect_improperly(p.a, p.b, q.a, q.b)) {
        const Seg &first = by_x[s] < by_x[t] ? p : q;
        const Seg &second = by_x[s] < by_x[t] ? q : p;
        report.add(ViolationKind::crossing,
                   {first.arc, first.index, second.arc, second.index});
      }
    }
  }

  std::vector<int> vx(g.n());
  for (int v = 0; v < g.n(); ++v) vx[v] = v;
  std::sort(vx.begin(), vx.end(), [&](int a, int b) {
    return d.points[a].x != d.points[b].x ? d.points[a].x < d.points[b].x : a < b;
  });
  for (const Seg &s : segs) {
    auto first = std::lower_bound(vx.begin(), vx.end(), s.box.lo[0],
                                  [&](int v, std::int64_t x) { return d.points[v].x < x; });
    for (auto it = first; it != vx.end() && d.points[*it].x <= s.box.hi[0]; ++it) {
      const GridPoint &p = d.points[*it];
      if (p == s.a || p == s.b) continue;
      if (point_on_segment(p, s.a, s.b))
        report.add(ViolationKind::vertex_on_edge, {*it, s.arc, s.index});
    }
  }
  report.finalize();
  return report;
}

} // namespace updraw
