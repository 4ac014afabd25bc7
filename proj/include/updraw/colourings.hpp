#pragma once

// Vertex colourings consumed by the drawing constructions, and independent
// checkers for each colouring property.

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "updraw/errors.hpp"
#include "updraw/graph.hpp"
#include "updraw/layouts.hpp"

namespace updraw {

enum class ColouringKind { proper, harmonious, strong_star };

struct Colouring {
  std::vector<int> colour; // per vertex, 0..c-1
  ColouringKind kind = ColouringKind::proper;
  int c = 0;
};

// ---------------------------------------------------------------------------
// Checkers. These look only at the graph and the colour vector.

inline bool is_proper_colouring(const Dag &g, const std::vector<int> &colour) {
  if (static_cast<int>(colour.size()) != g.n()) return false;
  return std::none_of(g.arcs().begin(), g.arcs().end(),
                      [&](const Arc &a) { return colour[a.tail] == colour[a.head]; });
}

/// Proper, and each pair of colour classes spans at most one edge.
inline bool is_harmonious_colouring(const Dag &g, const std::vector<int> &colour) {
  if (!is_proper_colouring(g, colour)) return false;
  std::set<std::pair<int, int>> pairs;
  for (const Arc &a : g.arcs()) {
    auto p = std::minmax(colour[a.tail], colour[a.head]);
    if (!pairs.insert(p).second) return false;
  }
  return true;
}

/// Proper, and for each pair of colour classes all edges between them share
/// a common endpoint.
inline bool is_strong_star_colouring(const Dag &g, const std::vector<int> &colour) {
  if (!is_proper_colouring(g, colour)) return false;
  std::map<std::pair<int, int>, std::vector<Arc>> between;
  for (const Arc &a : g.arcs())
    between[std::minmax(colour[a.tail], colour[a.head])].push_back(a);
  for (const auto &[pair, arcs] : between) {
    const Arc &first = arcs.front();
    bool centred_at_tail = true, centred_at_head = true;
    for (const Arc &a : arcs) {
      if (a.tail != first.tail && a.head != first.tail) centred_at_tail = false;
      if (a.tail != first.head && a.head != first.head) centred_at_head = false;
    }
    if (!centred_at_tail && !centred_at_head) return false;
  }
  return true;
}

namespace detail {

inline int count_colours(const std::vector<int> &colour) {
  return colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
}

// Greedy harmonious colouring of the subgraph induced by `keep`, visiting
// vertices by non-increasing degree (in that subgraph), smallest id on ties.
// A colour is admissible when it differs from every coloured vertex within
// distance two and creates no colour pair already used by an edge. Vertices
// outside `keep` get -1.
inline std::vector<int> greedy_harmonious(const Dag &g, const std::vector<char> &keep,
                                          int first_colour) {
  const int n = g.n();
  auto inside = [&](int v) { return keep[v] != 0; };
  std::vector<int> deg(n, 0), order;
  for (int v = 0; v < n; ++v) {
    if (!inside(v)) continue;
    order.push_back(v);
    for (int w : g.adjacent(v)) deg[v] += inside(w);
  }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] > deg[b]; });

  std::vector<int> colour(n, -1);
  std::set<std::pair<int, int>> used_pairs;
  int palette = 0;
  for (int v : order) {
    std::set<int> blocked;
    std::vector<int> nbr_colours;
    for (int w : g.adjacent(v)) {
      if (!inside(w)) continue;
      if (colour[w] >= 0) {
        blocked.insert(colour[w]);
        nbr_colours.push_back(colour[w]);
      }
      for (int x : g.adjacent(w))
        if (x != v && inside(x) && colour[x] >= 0) blocked.insert(colour[x]);
    }
    int chosen = palette;
    for (int c = 0; c < palette; ++c) {
      if (blocked.count(c)) continue;
      bool clash = std::any_of(nbr_colours.begin(), nbr_colours.end(), [&](int cw) {
        return used_pairs.count(std::minmax(c, cw)) > 0;
      });
      if (!clash) {
        chosen = c;
        break;
      }
    }
    if (chosen == palette) ++palette;
    colour[v] = chosen;
    for (int cw : nbr_colours) used_pairs.insert(std::minmax(chosen, cw));
  }
  for (int v = 0; v < n; ++v)
    if (colour[v] >= 0) colour[v] += first_colour;
  return colour;
}

} // namespace detail

/// Colours the reversed degeneracy elimination order with the smallest free
/// colour, so at most degeneracy+1 colours are used.
inline Colouring greedy_colouring(const Dag &g) {
  auto elim = degeneracy(g).elimination.at;
  std::vector<int> colour(g.n(), -1);
  for (auto it = elim.rbegin(); it != elim.rend(); ++it) {
    std::vector<char> taken(g.degree(*it) + 1, 0);
    for (int w : g.adjacent(*it))
      if (colour[w] >= 0 && colour[w] < static_cast<int>(taken.size())) taken[colour[w]] = 1;
    int c = 0;
    while (taken[c]) ++c;
    colour[*it] = c;
  }
  Colouring col{std::move(colour), ColouringKind::proper, 0};
  col.c = detail::count_colours(col.colour);
  return col;
}

/// colour(v) = (vertices on the longest directed path ending at v) - 1, so
/// colours strictly increase along every arc.
inline Colouring longest_path_colouring(const Dag &g) {
  auto labels = depth_labels(g);
  Colouring col;
  col.colour.reserve(g.n());
  for (int d : labels.depth) col.colour.push_back(d - 1);
  col.c = labels.longest;
  return col;
}

inline Colouring harmonious_colouring(const Dag &g) {
  Colouring col;
  col.colour = detail::greedy_harmonious(g, std::vector<char>(g.n(), 1), 0);
  col.kind = ColouringKind::harmonious;
  col.c = detail::count_colours(col.colour);
  return col;
}

enum class StrongStarVariant { sqrt_dm, m_two_thirds };

/// Vertices of high degree each get a colour of their own; the rest is
/// coloured harmoniously with fresh colours. With d the degeneracy and m the
/// arc count, "high" means deg^2 * d >= 2m (sqrt_dm) or deg^3 >= m
/// (m_two_thirds).
inline Colouring strong_star_colouring(const Dag &g, StrongStarVariant variant) {
  const long long m = g.m();
  const long long d = degeneracy(g).d;
  std::vector<int> colour(g.n(), -1);
  std::vector<char> rest(g.n(), 1);
  int next = 0;
  if (m > 0) {
    for (int v = 0; v < g.n(); ++v) {
      const long long deg = g.degree(v);
      const bool high = variant == StrongStarVariant::sqrt_dm ? deg * deg * d >= 2 * m
                                                              : deg * deg * deg >= m;
      if (high) {
        colour[v] = next++;
        rest[v] = 0;
      }
    }
  }
  auto others = detail::greedy_harmonious(g, rest, next);
  for (int v = 0; v < g.n(); ++v)
    if (rest[v]) colour[v] = others[v];
  Colouring col{std::move(colour), ColouringKind::strong_star, 0};
  col.c = detail::count_colours(col.colour);
  return col;
}

/// Reference colour count 5*sqrt(2dm) for the sqrt_dm variant and
/// (4+2*sqrt(2)) m^(2/3) for the other. Reported, never enforced.
inline double strong_star_reference_bound(const Dag &g, StrongStarVariant variant) {
  const double m = g.m();
  const double d = degeneracy(g).d;
  return variant == StrongStarVariant::sqrt_dm ? 5.0 * std::sqrt(2.0 * d * m)
                                               : (4.0 + 2.0 * std::sqrt(2.0)) * std::cbrt(m * m);
}

/// One track per colour, each ordered by the deterministic topological order
/// of g. Strong star colourings give an upward track layout.
inline TrackLayout colouring_to_upward_tracks(const Dag &g, const Colouring &col) {
  if (!is_strong_star_colouring(g, col.colour))
    throw NotStrongStar("colouring is not a strong star colouring");
  std::map<int, std::vector<int>> tracks;
  for (int v : topological_order(g).at) tracks[col.colour[v]].push_back(v);
  return TrackLayout::from_tracks(g.n(), tracks, true);
}

} // namespace updraw
