#pragma once

// Directed acyclic graphs, vertex orderings, degeneracy and the graph
// families used throughout the library.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "updraw/errors.hpp"

namespace updraw {

struct Arc {
  int tail = 0;
  int head = 0;
  friend auto operator<=>(const Arc &, const Arc &) = default;
};

/// A simple directed acyclic graph on the dense vertex ids 0..n-1.
///
/// Construction deduplicates repeated arcs (keeping first occurrences in
/// input order), rejects out-of-range ids, and throws CycleDetected for
/// self-loops or any directed cycle. Instances are immutable afterwards.
class Dag {
public:
  Dag() = default;

  Dag(int n, const std::vector<Arc> &arcs) : n_(n) {
    if (n < 0) throw InvalidParams("negative vertex count");
    std::set<std::pair<int, int>> seen;
    for (const Arc &a : arcs) {
      if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
        throw InvalidParams("arc (" + std::to_string(a.tail) + "," +
                            std::to_string(a.head) + ") out of range");
      if (a.tail == a.head)
        throw CycleDetected("self-loop at vertex " + std::to_string(a.tail));
      if (seen.insert({a.tail, a.head}).second) arcs_.push_back(a);
    }
    out_.assign(n, {});
    in_.assign(n, {});
    adj_.assign(n, {});
    for (int i = 0; i < static_cast<int>(arcs_.size()); ++i) {
      const Arc &a = arcs_[i];
      out_[a.tail].push_back(a.head);
      in_[a.head].push_back(a.tail);
      adj_[a.tail].push_back(a.head);
      adj_[a.head].push_back(a.tail);
    }
    for (auto &l : adj_) {
      std::sort(l.begin(), l.end());
      l.erase(std::unique(l.begin(), l.end()), l.end());
    }
    if (!acyclic())
      throw CycleDetected("arc set contains a directed cycle");
  }

  int n() const { return n_; }
  int m() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc> &arcs() const { return arcs_; }
  const Arc &arc(int i) const { return arcs_[i]; }
  const std::vector<int> &out(int v) const { return out_[v]; }
  const std::vector<int> &in(int v) const { return in_[v]; }
  /// Neighbours in the underlying undirected graph, sorted, no repeats.
  const std::vector<int> &adjacent(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  bool has_arc(int tail, int head) const {
    const auto &o = out_[tail];
    return std::find(o.begin(), o.end(), head) != o.end();
  }
  bool adjacent(int v, int w) const {
    return std::binary_search(adj_[v].begin(), adj_[v].end(), w);
  }

  const std::string &name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  friend bool operator==(const Dag &a, const Dag &b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

private:
  bool acyclic() const {
    std::vector<int> indeg(n_);
    for (const Arc &a : arcs_) ++indeg[a.head];
    std::vector<int> stack;
    for (int v = 0; v < n_; ++v)
      if (indeg[v] == 0) stack.push_back(v);
    int seen = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++seen;
      for (int w : out_[v])
        if (--indeg[w] == 0) stack.push_back(w);
    }
    return seen == n_;
  }

  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_, in_, adj_;
  std::string name_;
};

/// A bijection between vertices and positions. Positions are 0-based here;
/// `at[k]` is the vertex in position k and `pos[v]` is the position of v.
struct VertexOrder {
  std::vector<int> at;
  std::vector<int> pos;
  bool topological = false;

  int size() const { return static_cast<int>(at.size()); }

  static VertexOrder from_sequence(std::vector<int> seq) {
    VertexOrder o;
    const int n = static_cast<int>(seq.size());
    o.pos.assign(n, -1);
    for (int k = 0; k < n; ++k) {
      int v = seq[k];
      if (v < 0 || v >= n || o.pos[v] != -1)
        throw InvalidParams("vertex sequence is not a permutation");
      o.pos[v] = k;
    }
    o.at = std::move(seq);
    return o;
  }

  bool is_topological_for(const Dag &g) const {
    if (size() != g.n()) return false;
    return std::all_of(g.arcs().begin(), g.arcs().end(),
                       [&](const Arc &a) { return pos[a.tail] < pos[a.head]; });
  }
};

namespace detail {

// Kahn's algorithm with a min-heap; returns std::nullopt on a cycle.
inline std::optional<std::vector<int>>
smallest_first_topological(const std::vector<std::vector<int>> &out) {
  const int n = static_cast<int>(out.size());
  std::vector<int> indeg(n);
  for (const auto &l : out)
    for (int w : l) ++indeg[w];
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push(v);
  std::vector<int> seq;
  seq.reserve(n);
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    seq.push_back(v);
    for (int w : out[v])
      if (--indeg[w] == 0) ready.push(w);
  }
  if (static_cast<int>(seq.size()) != n) return std::nullopt;
  return seq;
}

// Number of vertices on the longest directed path ending at each vertex.
inline std::vector<int>
longest_path_depths(const std::vector<std::vector<int>> &out,
                    const std::vector<int> &topo) {
  std::vector<int> depth(out.size(), 1);
  for (int v : topo)
    for (int w : out[v]) depth[w] = std::max(depth[w], depth[v] + 1);
  return depth;
}

inline std::vector<std::vector<int>> out_lists(const Dag &g) {
  std::vector<std::vector<int>> out(g.n());
  for (int v = 0; v < g.n(); ++v) out[v] = g.out(v);
  return out;
}

} // namespace detail

/// Deterministic topological order: among available vertices the smallest id
/// is taken first.
inline VertexOrder topological_order(const Dag &g) {
  auto seq = detail::smallest_first_topological(detail::out_lists(g));
  if (!seq) throw CycleDetected("no topological order exists");
  VertexOrder o = VertexOrder::from_sequence(std::move(*seq));
  o.topological = true;
  return o;
}

struct DepthLabels {
  std::vector<int> depth; // >= 1
  int longest = 0;        // vertices on a longest directed path
};

inline DepthLabels depth_labels(const Dag &g) {
  DepthLabels d;
  d.depth = detail::longest_path_depths(detail::out_lists(g),
                                        topological_order(g).at);
  d.longest = d.depth.empty() ? 0 : *std::max_element(d.depth.begin(), d.depth.end());
  return d;
}

struct Degeneracy {
  int d = 0;
  VertexOrder elimination; // removal sequence; not topological
};

/// Exact degeneracy of the underlying undirected graph by repeatedly removing
/// a minimum-degree vertex (smallest id on ties).
inline Degeneracy degeneracy(const Dag &g) {
  const int n = g.n();
  std::vector<int> deg(n);
  std::set<std::pair<int, int>> queue;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.insert({deg[v], v});
  }
  std::vector<char> removed(n, 0);
  std::vector<int> seq;
  seq.reserve(n);
  int d = 0;
  while (!queue.empty()) {
    auto [dv, v] = *queue.begin();
    queue.erase(queue.begin());
    d = std::max(d, dv);
    removed[v] = 1;
    seq.push_back(v);
    for (int w : g.adjacent(v)) {
      if (removed[w]) continue;
      queue.erase({deg[w], w});
      queue.insert({--deg[w], w});
    }
  }
  return {d, VertexOrder::from_sequence(std::move(seq))};
}

// ---------------------------------------------------------------------------
// Generators

namespace detail {

// Portable uniform integer in [0, bound) by rejection; std distributions are
// not reproducible across standard libraries.
inline std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do x = rng(); while (x >= limit);
  return x % bound;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64 &rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i)
    std::swap(p[i], p[uniform_below(rng, static_cast<std::uint64_t>(i) + 1)]);
  return p;
}

// Orient each undirected edge with a fair coin. Trees are always acyclic.
inline std::vector<Arc> orient_randomly(const std::vector<std::pair<int, int>> &edges,
                                        std::mt19937_64 &rng) {
  std::vector<Arc> arcs;
  arcs.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (rng() & 1U) arcs.push_back({a, b});
    else arcs.push_back({b, a});
  }
  return arcs;
}

} // namespace detail

inline Dag complete_dag(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) arcs.push_back({i, j});
  return Dag(n, arcs);
}

inline Dag directed_path(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i + 1 < n; ++i) arcs.push_back({i, i + 1});
  return Dag(n, arcs);
}

inline Dag antichain(int n) { return Dag(n, {}); }

/// The outerplanar dag on 2n vertices u_1..u_2n (ids 0..2n-1) with the
/// Hamiltonian path plus the n pairwise nested chords u_i -> u_{2n-i+1}.
inline Dag nested_example(int n) {
  if (n < 1) throw InvalidParams("nested example needs n >= 1");
  std::vector<Arc> arcs;
  for (int i = 0; i + 1 < 2 * n; ++i) arcs.push_back({i, i + 1});
  for (int i = 1; i <= n; ++i) arcs.push_back({i - 1, 2 * n - i});
  return Dag(2 * n, arcs);
}

/// K_n with every edge subdivided once. Original vertices are 0..n-1; the
/// division vertex of edge {a,b}, a<b, is n + (index of {a,b} in
/// lexicographic order) and carries the arcs a -> d -> b.
inline Dag knprime(int n) {
  if (n < 0) throw InvalidParams("negative n");
  std::vector<Arc> arcs;
  int next = n;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      arcs.push_back({a, next});
      arcs.push_back({next, b});
      ++next;
    }
  return Dag(next, arcs);
}

inline Dag star(int leaves) {
  std::vector<Arc> arcs;
  for (int i = 1; i <= leaves; ++i) arcs.push_back({0, i});
  return Dag(leaves + 1, arcs);
}

/// Complete bipartite graph with parts {0..a-1} and {a..a+b-1}, all arcs
/// directed from the first part to the second.
inline Dag complete_bipartite(int a, int b) {
  std::vector<Arc> arcs;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) arcs.push_back({i, a + j});
  return Dag(a + b, arcs);
}

/// Acyclic orientation of K_{a,b} induced by a random linear order.
inline Dag random_bipartite_orientation(int a, int b, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto rank = detail::random_permutation(a + b, rng);
  std::vector<Arc> arcs;
  for (int i = 0; i < a; ++i)
    for (int j = a; j < a + b; ++j)
      arcs.push_back(rank[i] < rank[j] ? Arc{i, j} : Arc{j, i});
  return Dag(a + b, arcs);
}

/// Uniform random labelled tree (Prüfer sequence) with random arc directions.
inline Dag random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw InvalidParams("tree needs n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  if (n == 2) edges.push_back({0, 1});
  if (n > 2) {
    std::vector<int> code(n - 2);
    for (int &c : code) c = static_cast<int>(detail::uniform_below(rng, n));
    std::vector<int> count(n, 1);
    for (int c : code) ++count[c];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
      if (count[v] == 1) leaves.insert(v);
    for (int c : code) {
      int leaf = *leaves.begin();
      leaves.erase(leaves.begin());
      edges.push_back({leaf, c});
      if (--count[c] == 1) leaves.insert(c);
    }
    int u = *leaves.begin();
    int w = *std::next(leaves.begin());
    edges.push_back({u, w});
  }
  return Dag(n, detail::orient_randomly(edges, rng));
}

/// Random caterpillar: a spine of random length with the remaining vertices
/// hung as leaves on random spine vertices, relabelled and oriented randomly.
inline Dag random_caterpillar(int n, std::uint64_t seed) {
  if (n < 1) throw InvalidParams("caterpillar needs n >= 1");
  std::mt19937_64 rng(seed);
  auto label = detail::random_permutation(n, rng);
  const int spine = 1 + static_cast<int>(detail::uniform_below(rng, n));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < spine; ++i) edges.push_back({label[i], label[i + 1]});
  for (int i = spine; i < n; ++i)
    edges.push_back({label[detail::uniform_below(rng, spine)], label[i]});
  return Dag(n, detail::orient_randomly(edges, rng));
}

/// Random dag with exactly m arcs, consistent with a random hidden order.
inline Dag random_dag(int n, long long m, std::uint64_t seed) {
  const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  if (n < 0 || m < 0 || m > pairs)
    throw InvalidParams("m must lie in [0, n(n-1)/2]");
  std::mt19937_64 rng(seed);
  auto label = detail::random_permutation(n, rng);
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(m));
  if (2 * m > pairs) {
    std::vector<std::pair<int, int>> all;
    all.reserve(static_cast<std::size_t>(pairs));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) all.push_back({i, j});
    for (long long k = 0; k < m; ++k) {
      auto r = k + static_cast<long long>(detail::uniform_below(
                       rng, static_cast<std::uint64_t>(pairs - k)));
      std::swap(all[k], all[r]);
      arcs.push_back({label[all[k].first], label[all[k].second]});
    }
  } else {
    std::unordered_set<long long> chosen;
    while (static_cast<long long>(arcs.size()) < m) {
      int i = static_cast<int>(detail::uniform_below(rng, n));
      int j = static_cast<int>(detail::uniform_below(rng, n));
      if (i == j) continue;
      if (i > j) std::swap(i, j);
      if (chosen.insert(static_cast<long long>(i) * n + j).second)
        arcs.push_back({label[i], label[j]});
    }
  }
  return Dag(n, arcs);
}

/// The 2-claw r,u,v,w,x,y,z (ids 0..6) oriented r->u, r->v, r->w, x->u,
/// y->v, z->w.
inline Dag two_claw() {
  return Dag(7, {{0, 1}, {0, 2}, {0, 3}, {4, 1}, {5, 2}, {6, 3}});
}

enum class Family {
  complete,
  path,
  antichain,
  nested,
  knprime,
  star,
  bipartite,
  random_bipartite,
  random_tree,
  random_caterpillar,
  random_dag,
  two_claw,
};

struct GenParams {
  int n = 0;
  long long m = 0;      // random_dag only
  int n2 = -1;          // second part size for bipartite families; defaults to n
  std::uint64_t seed = 0;
};

inline std::optional<Family> parse_family(std::string_view s) {
  static const std::pair<std::string_view, Family> names[] = {
      {"complete", Family::complete},
      {"path", Family::path},
      {"antichain", Family::antichain},
      {"nested", Family::nested},
      {"knprime", Family::knprime},
      {"star", Family::star},
      {"bipartite", Family::bipartite},
      {"random-bipartite", Family::random_bipartite},
      {"tree", Family::random_tree},
      {"caterpillar", Family::random_caterpillar},
      {"random", Family::random_dag},
      {"two-claw", Family::two_claw},
  };
  for (auto [name, f] : names)
    if (name == s) return f;
  return std::nullopt;
}

inline Dag generate(Family family, const GenParams &p) {
  if (p.n < 0) throw InvalidParams("negative n");
  const int n2 = p.n2 < 0 ? p.n : p.n2;
  switch (family) {
  case Family::complete: return complete_dag(p.n);
  case Family::path: return directed_path(p.n);
  case Family::antichain: return antichain(p.n);
  case Family::nested: return nested_example(p.n);
  case Family::knprime: return knprime(p.n);
  case Family::star: return star(p.n);
  case Family::bipartite: return complete_bipartite(p.n, n2);
  case Family::random_bipartite: return random_bipartite_orientation(p.n, n2, p.seed);
  case Family::random_tree: return random_tree(p.n, p.seed);
  case Family::random_caterpillar: return random_caterpillar(p.n, p.seed);
  case Family::random_dag: return random_dag(p.n, p.m, p.seed);
  case Family::two_claw: return two_claw();
  }
  throw InvalidParams("unknown family");
}

} // namespace updraw
