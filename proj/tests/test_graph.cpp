#include <gtest/gtest.h>

#include "oracles.hpp"
#include "updraw/graph.hpp"

using namespace updraw;

TEST(Dag, RejectsCyclesAndSelfLoops) {
  EXPECT_THROW(Dag(2, {{0, 1}, {1, 0}}), CycleDetected);
  EXPECT_THROW(Dag(3, {{0, 1}, {1, 2}, {2, 0}}), CycleDetected);
  EXPECT_THROW(Dag(1, {{0, 0}}), CycleDetected);
  EXPECT_THROW(Dag(2, {{0, 2}}), InvalidParams);
}

TEST(Dag, DeduplicatesArcs) {
  Dag g(3, {{0, 1}, {0, 1}, {1, 2}});
  EXPECT_EQ(g.m(), 2);
  EXPECT_TRUE(g.has_arc(0, 1));
  EXPECT_FALSE(g.has_arc(1, 0));
  EXPECT_TRUE(g.adjacent(1, 0));
}

TEST(TopologicalOrder, SmallExamples) {
  EXPECT_EQ(topological_order(Dag(1, {})).at, std::vector<int>{0});
  EXPECT_EQ(topological_order(directed_path(3)).at, (std::vector<int>{0, 1, 2}));
  Dag g(4, {{3, 0}, {2, 1}});
  EXPECT_EQ(topological_order(g).at, (std::vector<int>{2, 1, 3, 0}));
}

TEST(TopologicalOrder, IsTopologicalOnRandomDags) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Dag g = random_dag(30, 80, seed);
    const auto o = topological_order(g);
    for (const Arc &a : g.arcs()) EXPECT_LT(o.pos[a.tail], o.pos[a.head]);
    EXPECT_TRUE(o.topological);
  }
}

TEST(NestedExample, UniqueTopologicalOrder) {
  for (int n = 1; n <= 4; ++n) {
    const Dag g = nested_example(n);
    EXPECT_EQ(g.n(), 2 * n);
    EXPECT_EQ(ref::count_topological_orders(g), 1);
    std::vector<int> identity(2 * n);
    for (int i = 0; i < 2 * n; ++i) identity[i] = i;
    EXPECT_EQ(topological_order(g).at, identity);
  }
  const Dag g2 = nested_example(2);
  EXPECT_EQ(g2.m(), 4);
  for (auto [v, w] : {std::pair{0, 1}, {1, 2}, {2, 3}, {0, 3}}) EXPECT_TRUE(g2.has_arc(v, w));
}

TEST(DepthLabels, Examples) {
  EXPECT_EQ(depth_labels(antichain(4)).depth, (std::vector<int>{1, 1, 1, 1}));
  EXPECT_EQ(depth_labels(directed_path(3)).depth, (std::vector<int>{1, 2, 3}));
  const auto d = depth_labels(complete_dag(4));
  EXPECT_EQ(d.depth, (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(d.longest, 4);
}

TEST(DepthLabels, MatchesRecursiveOracle) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Dag g = random_dag(25, 60, seed);
    const auto d = depth_labels(g);
    EXPECT_EQ(d.depth, ref::depths(g));
    for (const Arc &a : g.arcs()) EXPECT_LT(d.depth[a.tail], d.depth[a.head]);
    EXPECT_EQ(*std::min_element(d.depth.begin(), d.depth.end()), 1);
  }
}

TEST(Degeneracy, Examples) {
  EXPECT_EQ(degeneracy(random_tree(5, 3)).d, 1);
  EXPECT_EQ(degeneracy(complete_dag(4)).d, 3);
  EXPECT_EQ(degeneracy(knprime(5)).d, 2);
  for (int n = 2; n <= 12; ++n) EXPECT_EQ(degeneracy(complete_dag(n)).d, n - 1);
  for (int n = 3; n <= 8; ++n) EXPECT_EQ(degeneracy(knprime(n)).d, 2);
  for (std::uint64_t s = 0; s < 20; ++s) EXPECT_EQ(degeneracy(random_tree(40, s)).d, 1);
}

TEST(Degeneracy, MatchesSubsetOracle) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Dag g = random_dag(10, static_cast<long long>(seed % 30), seed);
    EXPECT_EQ(degeneracy(g).d, ref::degeneracy_bruteforce(g)) << "seed " << seed;
  }
}

TEST(Generators, Counts) {
  const Dag c3 = complete_dag(3);
  EXPECT_EQ(c3.m(), 3);
  EXPECT_TRUE(c3.has_arc(0, 1) && c3.has_arc(0, 2) && c3.has_arc(1, 2));
  const Dag k4 = knprime(4);
  EXPECT_EQ(k4.n(), 10);
  EXPECT_EQ(k4.m(), 12);
  EXPECT_EQ(star(5).m(), 5);
  EXPECT_EQ(complete_bipartite(3, 4).m(), 12);
  EXPECT_EQ(random_bipartite_orientation(5, 5, 7).m(), 25);
  EXPECT_EQ(random_dag(20, 57, 1).m(), 57);
  EXPECT_EQ(random_dag(8, 28, 1).m(), 28);
  EXPECT_THROW(random_dag(5, 11, 0), InvalidParams);
  EXPECT_EQ(two_claw().n(), 7);
}

TEST(Generators, TreesAreTrees) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    for (int n : {1, 2, 3, 10, 57}) {
      const Dag t = random_tree(n, seed);
      EXPECT_EQ(t.m(), n - 1);
      // Connected: union-find over edges.
      std::vector<int> parent(n);
      for (int v = 0; v < n; ++v) parent[v] = v;
      std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
      for (const Arc &a : t.arcs()) parent[find(a.tail)] = find(a.head);
      for (int v = 0; v < n; ++v) EXPECT_EQ(find(v), find(0));
    }
  }
}

TEST(Generators, CaterpillarsHavePathSpine) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Dag c = random_caterpillar(30, seed);
    EXPECT_EQ(c.m(), 29);
    // Removing leaves leaves a graph of max degree <= 2 and no cycle.
    std::vector<int> inner_deg(30, 0);
    for (const Arc &a : c.arcs())
      if (c.degree(a.tail) > 1 && c.degree(a.head) > 1) {
        ++inner_deg[a.tail];
        ++inner_deg[a.head];
      }
    for (int d : inner_deg) EXPECT_LE(d, 2);
  }
}

TEST(Generators, Deterministic) {
  EXPECT_EQ(random_dag(30, 100, 42), random_dag(30, 100, 42));
  EXPECT_EQ(random_tree(30, 9), random_tree(30, 9));
  EXPECT_FALSE(random_tree(30, 9) == random_tree(30, 10));
}

TEST(Generators, ParseFamily) {
  EXPECT_EQ(parse_family("nested"), Family::nested);
  EXPECT_EQ(parse_family("random"), Family::random_dag);
  EXPECT_FALSE(parse_family("nope").has_value());
  GenParams p;
  p.n = 3;
  EXPECT_EQ(generate(Family::nested, p).n(), 6);
  p.n = 4;
  EXPECT_EQ(generate(Family::knprime, p).n(), 10);
  p.m = 100;
  EXPECT_THROW(generate(Family::random_dag, p), InvalidParams);
}

TEST(VertexOrder, FromSequence) {
  auto o = VertexOrder::from_sequence({2, 0, 1});
  EXPECT_EQ(o.pos, (std::vector<int>{1, 2, 0}));
  EXPECT_THROW(VertexOrder::from_sequence({0, 0, 1}), InvalidParams);
  EXPECT_FALSE(o.is_topological_for(directed_path(3)));
}
