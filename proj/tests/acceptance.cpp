// Runs the twelve acceptance criteria and prints one PASS/FAIL line each.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "updraw/updraw.hpp"

using namespace updraw;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
public:
  void require(bool ok, const std::string &what) {
    if (ok) return;
    if (failures_++ < 3) messages_ << (messages_.tellp() > 0 ? "; " : "") << what;
  }
  void note(const std::string &text) { notes_ << (notes_.tellp() > 0 ? ", " : "") << text; }
  Outcome result() const {
    if (failures_ == 0) return {true, notes_.str()};
    return {false, std::to_string(failures_) + " failure(s): " + messages_.str()};
  }

private:
  int failures_ = 0;
  std::ostringstream messages_, notes_;
};

bool box_within(const BoundingBox &b, std::int64_t X, std::int64_t Y, std::int64_t Z) {
  return b.X <= X && b.Y <= Y && b.Z <= Z;
}

std::string tag(const std::string &what, std::uint64_t seed) { return what + " seed " + std::to_string(seed); }

Outcome ac1_moment_curve() {
  Check c;
  for (int n : {5, 10, 25, 50, 100, 150}) {
    const Dag g = complete_dag(n);
    const auto d = moment_curve_drawing(g);
    c.require(verify_drawing(g, d, true).ok(), "n=" + std::to_string(n) + " not clean");
    const auto b = bounding_box(d);
    c.require(box_within(b, 2 * n, 2 * n, n), "n=" + std::to_string(n) + " box too large");
    c.require(b.volume() <= 4LL * n * n * n, "n=" + std::to_string(n) + " volume too large");
  }
  return c.result();
}

Outcome ac2_coloured() {
  Check c;
  int done = 0;
  int max_c = 0;
  for (std::uint64_t seed = 0; done < 500; ++seed) {
    const int n = 5 + static_cast<int>(seed % 56);
    const long long m = std::min<long long>(n * (n - 1) / 2, static_cast<long long>(n) * (1 + seed % 3));
    const Dag g = random_dag(n, m, seed);
    const auto col = greedy_colouring(g);
    if (col.c > 6) continue;
    ++done;
    max_c = std::max(max_c, col.c);
    const auto d = coloured_upward_drawing(g, col);
    const std::int64_t k = col.c;
    c.require(verify_drawing(g, d, true).ok(), tag("not clean", seed));
    c.require(box_within(bounding_box(d), k, 4 * k * k * n, 4 * k * n), tag("box", seed));
  }
  c.note("500 dags, c up to " + std::to_string(max_c));
  return c.result();
}

Outcome ac3_long_path() {
  Check c;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 2 + static_cast<int>(seed % 80);
    const Dag g = random_dag(n, std::min<long long>(n * (n - 1) / 2, 2LL * n), seed);
    const auto d = long_path_drawing(g);
    const int l = depth_labels(g).longest;
    const auto Z = bounding_box(d).Z;
    c.require(Z <= l && Z >= l, tag("height " + std::to_string(Z) + " vs " + std::to_string(l), seed));
    c.require(verify_drawing(g, d, true).ok(), tag("not clean", seed));
  }
  return c.result();
}

Outcome ac4_trees() {
  Check c;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 1 + static_cast<int>((seed * 7919) % 2000);
    const Dag t = random_tree(n, seed);
    const auto tl = tree_span2_layout(t);
    for (const Arc &a : t.arcs()) {
      const int s = span(tl, a);
      c.require(s == 1 || s == 2, tag("span " + std::to_string(s), seed));
    }
    const auto five = wrap(t, tl, 2).tracks;
    c.require(five.track_count() <= 5, tag("more than 5 tracks", seed));
    const auto d = track_drawing_5(t, five);
    c.require(box_within(bounding_box(d), 4, 4, (7LL * n + 4) / 5), tag("box", seed));
    c.require(bounding_box(d).volume() <= 22.4 * n + 1e-9 || n < 5, tag("volume", seed));
    c.require(verify_drawing(t, d, true).ok(), tag("not clean", seed));
  }
  return c.result();
}

Outcome ac5_caterpillars() {
  Check c;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 1 + static_cast<int>((seed * 6151) % 2000);
    const Dag g = random_caterpillar(n, seed);
    const auto w = wrap(g, caterpillar_span1_layout(g), 1);
    c.require(w.tracks.track_count() <= 3, tag("more than 3 tracks", seed));
    c.require(verify_track_layout(g, w.tracks).ok(), tag("track layout invalid", seed));
    c.require(ref::distinct(w.queues.queue) <= 1, tag("more than 1 queue", seed));
    c.require(verify_queue_layout(g, w.queues).ok(), tag("queue layout invalid", seed));
    const auto d = track_drawing_3(g, w.tracks);
    c.require(box_within(bounding_box(d), 2, 2, n), tag("box", seed));
    c.require(verify_drawing(g, d, true).ok(), tag("not clean", seed));
  }
  return c.result();
}

Outcome ac6_four_track() {
  Check c;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 2 + static_cast<int>((seed * 389) % 499);
    const auto [g, tl] = fixture::random_upward_instance(n, 4, 3 * n, seed);
    c.require(verify_track_layout(g, tl).ok(), tag("generated layout invalid", seed));
    const auto d = track_drawing_4(g, tl);
    c.require(box_within(bounding_box(d), 2, 2, 2LL * n), tag("box", seed));
    c.require(verify_drawing(g, d, true).ok(), tag("not clean", seed));
  }
  return c.result();
}

Outcome ac7_subdivisions() {
  Check c;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 2 + static_cast<int>(seed % 39);
    const Dag g = random_dag(n, std::min<long long>(n * (n - 1) / 2, 2LL * n), seed);
    const auto cert = bandwidth_of(g, topological_order(g));
    const auto tq = two_queue_subdivision(g, cert);
    c.require(contract(tq.sub) == g, tag("2-queue contraction", seed));
    for (int a = 0; a < g.m(); ++a) {
      const int gap = cert.order.pos[g.arc(a).head] - cert.order.pos[g.arc(a).tail];
      const int expected = gap <= 1 ? 0 : (gap % 2 == 0 ? (gap - 2) / 2 : (gap - 1) / 2);
      c.require(tq.sub.per_arc_counts[a] == expected, tag("2-queue count", seed));
      c.require(tq.sub.per_arc_counts[a] <= (cert.b - 1) / 2, tag("2-queue bound", seed));
    }
    c.require(ref::distinct(tq.queues.queue) <= 2, tag("more than 2 queues", seed));
    c.require(verify_queue_layout(tq.sub.graph, tq.queues).ok(), tag("2-queue layout invalid", seed));

    const auto ft = four_track_subdivision(g, cert);
    c.require(contract(ft.sub) == g, tag("4-track contraction", seed));
    for (int a = 0; a < g.m(); ++a) c.require(ft.sub.per_arc_counts[a] <= cert.b, tag("4-track count", seed));
    c.require(ft.layout.track_count() <= 4, tag("more than 4 tracks", seed));
    c.require(verify_track_layout(ft.sub.graph, ft.layout).ok(), tag("4-track layout invalid", seed));
  }
  return c.result();
}

Outcome ac8_two_bend() {
  Check c;
  for (int n = 4; n <= 12; ++n) {
    const Dag g = complete_dag(n);
    const auto ql = rainbow_queue_layout(g, topological_order(g));
    const std::string at = "n=" + std::to_string(n);
    c.require(ref::distinct(ql.queue) <= n / 2, at + " queues");
    const auto d = two_bend_drawing(g, ql);
    const auto b = bounding_box(d);
    c.require(box_within(b, n, 2, 2LL * n), at + " box");
    c.require(b.volume() <= 4LL * n * n, at + " volume");
    c.require(verify_drawing(g, d, true).ok(), at + " not clean");
  }
  return c.result();
}

// ---------------------------------------------------------------------------
// AC9 helpers

// Smallest adjacency bitmask over all relabellings.
std::uint32_t canonical_form(const Dag &g) {
  const int n = g.n();
  std::vector<int> perm(n);
  for (int v = 0; v < n; ++v) perm[v] = v;
  std::uint32_t best = ~0u;
  do {
    std::uint32_t mask = 0;
    for (const Arc &a : g.arcs()) mask |= 1u << (perm[a.tail] * n + perm[a.head]);
    best = std::min(best, mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Dag> dag_catalogue(int max_n) {
  std::vector<Dag> out;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int v = 0; v < n; ++v)
      for (int w = v + 1; w < n; ++w) slots.push_back({v, w});
    std::set<std::uint32_t> seen;
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
      std::vector<Arc> arcs;
      for (std::size_t k = 0; k < slots.size(); ++k)
        if (mask >> k & 1) arcs.push_back({slots[k].first, slots[k].second});
      Dag g(n, arcs);
      if (seen.insert(canonical_form(g)).second) out.push_back(std::move(g));
    }
  }
  return out;
}

// Independent search for an upward layout on t tracks: every track map and
// every order within each track.
bool has_upward_layout_bruteforce(const Dag &g, int t) {
  const int n = g.n();
  std::vector<int> assign(n, 0);
  for (;;) {
    bool intra = false;
    for (const Arc &a : g.arcs()) intra |= assign[a.tail] == assign[a.head];
    if (!intra) {
      std::map<int, std::vector<int>> tracks;
      for (int v = 0; v < n; ++v) tracks[assign[v]].push_back(v);
      std::vector<std::vector<int> *> lists;
      for (auto &[id, members] : tracks) lists.push_back(&members);
      std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
        if (k == lists.size()) return ref::track_layout_valid(g, TrackLayout::from_tracks(n, tracks, true), true);
        do {
          if (rec(k + 1)) return true;
        } while (std::next_permutation(lists[k]->begin(), lists[k]->end()));
        return false;
      };
      if (rec(0)) return true;
    }
    int i = 0;
    while (i < n && ++assign[i] == t) assign[i++] = 0;
    if (i == n) return false;
  }
}

// Upward layout with every arc going from some track i to track i+1: track
// values are fixed by each component up to a shift, so try every map of
// vertices to levels 0..n-1 that satisfies the arcs and every order per level.
bool has_span_one_upward_layout(const Dag &g) {
  const int n = g.n();
  std::vector<int> level(n, -1);
  std::vector<int> bfs{0};
  level[0] = n;
  for (std::size_t k = 0; k < bfs.size(); ++k)
    for (int w : g.adjacent(bfs[k]))
      if (level[w] < 0) {
        level[w] = g.has_arc(bfs[k], w) ? level[bfs[k]] + 1 : level[bfs[k]] - 1;
        bfs.push_back(w);
      }
  if (static_cast<int>(bfs.size()) != n) return false;
  for (const Arc &a : g.arcs())
    if (level[a.head] != level[a.tail] + 1) return false;
  std::map<int, std::vector<int>> tracks;
  for (int v = 0; v < n; ++v) tracks[level[v]].push_back(v);
  std::vector<std::vector<int> *> lists;
  for (auto &[id, members] : tracks) lists.push_back(&members);
  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == lists.size()) return ref::track_layout_valid(g, TrackLayout::from_tracks(n, tracks, true), true);
    do {
      if (rec(k + 1)) return true;
    } while (std::next_permutation(lists[k]->begin(), lists[k]->end()));
    return false;
  };
  return rec(0);
}

Outcome ac9_oracles() {
  Check c;
  const auto start = std::chrono::steady_clock::now();

  const auto catalogue = dag_catalogue(5);
  for (const Dag &g : catalogue) {
    const std::string at = "dag n=" + std::to_string(g.n()) + " m=" + std::to_string(g.m());
    const int q = oracle::exact_upward_queue_number(g);
    const auto ql = rainbow_queue_layout(g, topological_order(g));
    c.require(q <= ref::distinct(ql.queue), at + " rainbow below queue optimum");
    if (g.m() > 0) {
      const auto tq = two_queue_subdivision(g, bandwidth_of(g, topological_order(g)));
      c.require(oracle::exact_upward_queue_number(tq.sub.graph, {16, 50'000'000}) <= ref::distinct(tq.queues.queue) ||
                    tq.sub.graph.n() > 16,
                at + " 2-queue subdivision below optimum");
    }
    const int t = oracle::exact_upward_track_number(g, g.n());
    c.require(t != oracle::NotFound, at + " no track layout found");
    const auto ss = colouring_to_upward_tracks(g, strong_star_colouring(g, StrongStarVariant::sqrt_dm));
    c.require(t <= ss.track_count(), at + " strong star below track optimum");
    if (is_tree(g)) {
      c.require(t <= wrap(g, tree_span2_layout(g), 2).tracks.track_count(), at + " tree layout below optimum");
      try {
        c.require(t <= wrap(g, caterpillar_span1_layout(g), 1).tracks.track_count(),
                  at + " caterpillar layout below optimum");
      } catch (const NotACaterpillar &) {
      }
    }
    const auto cert = oracle::exact_directed_bandwidth(g);
    c.require(cert.b <= bandwidth_of(g, topological_order(g)).b, at + " bandwidth above deterministic order");
  }
  c.note(std::to_string(catalogue.size()) + " dags up to isomorphism");

  for (int n : {2, 3})
    c.require(oracle::exact_upward_queue_number(nested_example(n)) == n, "uqn(G_" + std::to_string(n) + ") != n");

  // The converse lemma's orientation admits no span-one upward layout.
  const Dag claw = two_claw();
  c.require(!has_span_one_upward_layout(claw), "2-claw has a span-one upward layout");
  c.require(!has_span_one_upward_layout(claw) && has_span_one_upward_layout(random_caterpillar(7, 1)),
            "span-one search rejects a caterpillar");

  // Some 2-claw orientation should need at least four upward tracks.
  int worst = 0, worst_mask = -1;
  for (int mask = 0; mask < (1 << claw.m()); ++mask) {
    std::vector<Arc> arcs;
    for (int i = 0; i < claw.m(); ++i) {
      Arc a = claw.arc(i);
      if (mask >> i & 1) std::swap(a.tail, a.head);
      arcs.push_back(a);
    }
    const Dag g(claw.n(), arcs);
    const int t = oracle::exact_upward_track_number(g, 3);
    const int value = t == oracle::NotFound ? 4 : t;
    // Every orientation is rechecked without the oracle.
    c.require(has_upward_layout_bruteforce(g, 3) == (value <= 3), "oracle and brute force disagree on 2-claw");
    if (value > worst) {
      worst = value;
      worst_mask = mask;
    }
  }
  c.require(worst >= 4, "every 2-claw orientation has an upward 3-track layout (max utn " + std::to_string(worst) +
                            ", e.g. orientation mask " + std::to_string(worst_mask) +
                            "); the converse lemma only rules out span-one layouts");

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.require(secs < 60, "took " + std::to_string(secs) + " s");
  return c.result();
}

Outcome ac10_knprime() {
  Check c;
  for (int n : {8, 27, 64}) {
    const auto k = knprime_track_layout(n);
    const int p = static_cast<int>(std::lround(std::cbrt(n)));
    const std::string at = "n=" + std::to_string(n);
    c.require(k.p == p, at + " p");
    c.require(k.layout.track_count() <= p * p + 1 + p * (p - 1), at + " too many tracks");
    c.require(verify_track_layout(k.graph, k.layout).ok(), at + " X-crossing");
    c.note(at + ": " + std::to_string(k.layout.track_count()) + " tracks");
  }
  return c.result();
}

Outcome ac11_strong_star() {
  Check c;
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const int n = 2 + static_cast<int>(seed % 79);
    const long long m = std::min<long long>(n * (n - 1) / 2, static_cast<long long>(n) * (1 + seed % 4));
    const Dag g = random_dag(n, m, seed);
    for (auto variant : {StrongStarVariant::sqrt_dm, StrongStarVariant::m_two_thirds}) {
      const auto col = strong_star_colouring(g, variant);
      c.require(is_strong_star_colouring(g, col.colour), tag("not strong star", seed));
      for (int rep = 0; rep < 10; ++rep) {
        // Relabel the classes at random, which reorders the tracks.
        const auto perm = detail::random_permutation(std::max(col.c, 1), rng);
        Colouring shuffled = col;
        for (int &k : shuffled.colour) k = perm[k];
        const auto tl = colouring_to_upward_tracks(g, shuffled);
        c.require(verify_track_layout(g, tl).ok(), tag("upward tracks invalid", seed));
      }
    }
  }
  return c.result();
}

Outcome ac12_geometry() {
  Check c;
  std::mt19937_64 rng(12);
  auto coord = [&](int r) { return static_cast<std::int64_t>(detail::uniform_below(rng, 2 * r + 1)) - r; };
  long long hits = 0;
  for (int i = 0; i < 1'000'000; ++i) {
    // Small ranges and a shared plane make touching and overlapping pairs common.
    const int r = i % 4 == 0 ? 1000 : (i % 4 == 1 ? 3 : 20);
    GridPoint a{coord(r), coord(r), coord(r)}, b{coord(r), coord(r), coord(r)};
    GridPoint p{coord(r), coord(r), coord(r)}, q{coord(r), coord(r), coord(r)};
    if (i % 3 == 0) a.z = b.z = p.z = q.z = coord(r);
    if (i % 11 == 0) p = a;
    if (a == b || p == q) continue;
    const bool x = segments_intersect_improperly(a, b, p, q);
    hits += x;
    c.require(x == oracle::segments_intersect_parametric(a, b, p, q), "predicates disagree at pair " + std::to_string(i));
  }
  c.note(std::to_string(hits) + " intersecting pairs");
  for (int trial = 0; trial < 1000; ++trial) {
    const Dag g = random_dag(8, 10, static_cast<std::uint64_t>(trial));
    Drawing3D d;
    for (int v = 0; v < g.n(); ++v) d.points.push_back({coord(3), coord(3), coord(6)});
    const GridPoint shift{coord(1000), coord(1000), coord(1000)};
    const auto moved = d.translated(shift);
    const auto r1 = verify_drawing(g, d, trial % 2 == 0), r2 = verify_drawing(g, moved, trial % 2 == 0);
    c.require(r1.violations.size() == r2.violations.size(), "translation changed violations");
    const auto b1 = bounding_box(d), b2 = bounding_box(moved);
    c.require(b1.X == b2.X && b1.Y == b2.Y && b1.Z == b2.Z, "translation changed box");
  }
  return c.result();
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 moment-curve drawings", ac1_moment_curve},
      {"AC2 coloured upward drawings", ac2_coloured},
      {"AC3 long-path drawings", ac3_long_path},
      {"AC4 tree pipeline", ac4_trees},
      {"AC5 caterpillar pipeline", ac5_caterpillars},
      {"AC6 4-track drawings", ac6_four_track},
      {"AC7 subdivisions", ac7_subdivisions},
      {"AC8 2-bend drawings", ac8_two_bend},
      {"AC9 oracle cross-checks", ac9_oracles},
      {"AC10 K_n' track layout", ac10_knprime},
      {"AC11 strong star colourings", ac11_strong_star},
      {"AC12 geometry self-consistency", ac12_geometry},
  };
  int failed = 0;
  for (const auto &[name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << " (" << std::fixed;
    std::cout.precision(2);
    std::cout << secs << " s)";
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << std::endl;
    failed += !o.pass;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << '\n';
  return failed ? 1 : 0;
}
