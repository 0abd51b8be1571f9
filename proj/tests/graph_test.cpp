#include <gtest/gtest.h>

#include <random>

#include "mmfvs/graph.hpp"
#include "support/fixtures.hpp"
#include "support/graph_enum.hpp"
#include "support/oracles.hpp"

using namespace mmfvs;
using namespace mmfvs::testing;

TEST(VertexSetTest, SortsAndDeduplicates) {
  VertexSet s{5, 1, 3, 1};
  EXPECT_EQ(s.items(), (std::vector<Vertex>{1, 3, 5}));
  s.insert(2);
  s.erase(5);
  EXPECT_EQ(s.items(), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(5));
}

TEST(VertexSetTest, SetAlgebra) {
  VertexSet a{1, 2, 3}, b{3, 4};
  EXPECT_EQ(set_union(a, b), (VertexSet{1, 2, 3, 4}));
  EXPECT_EQ(set_difference(a, b), (VertexSet{1, 2}));
  EXPECT_EQ(set_intersection(a, b), (VertexSet{3}));
  EXPECT_FALSE(disjoint(a, b));
  EXPECT_TRUE(is_subset(VertexSet{1, 3}, a));
}

TEST(GraphTest, RejectsLoopsDuplicatesAndUnknownVertices) {
  Graph g(3);
  g.add_edge(0, 1);
  EXPECT_THROW(g.add_edge(1, 0), GraphError);
  EXPECT_THROW(g.add_edge(2, 2), GraphError);
  EXPECT_THROW(g.add_edge(0, 7), GraphError);
  EXPECT_THROW(g.degree(9), GraphError);
}

TEST(GraphTest, AdjacencyIsSymmetric) {
  Graph g = apex_pair6();
  for (auto e : g.edges()) {
    EXPECT_TRUE(g.adjacent(e.u, e.v));
    EXPECT_TRUE(g.adjacent(e.v, e.u));
  }
  std::size_t deg_sum = 0;
  for (Vertex v : g.vertex_list()) deg_sum += g.degree(v);
  EXPECT_EQ(deg_sum, 2 * g.size());
}

TEST(GraphTest, IdsAreNotReusedAfterRemoval) {
  Graph g(3, {{0, 1}, {1, 2}});
  g.remove_vertex(2);
  EXPECT_FALSE(g.contains(2));
  EXPECT_EQ(g.add_vertex(), 3u);
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.size(), 1u);
}

TEST(DegreeTest, Examples) {
  EXPECT_EQ(degree(apex_pair6(), X), 5u);
  Graph lone(1);
  EXPECT_EQ(degree(lone, 0), 0u);
  Graph k4 = complete_graph(4);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(degree(k4, v), 3u);
}

TEST(ContractTest, PathBecomesShorter) {
  auto c = contract(path_graph(3), 0, 1);
  EXPECT_EQ(c.merge.merged, 0u);
  EXPECT_EQ(c.merge.absorbed, 1u);
  EXPECT_EQ(c.graph.order(), 2u);
  EXPECT_EQ(c.graph.size(), 1u);
  EXPECT_TRUE(c.graph.adjacent(0, 2));
}

TEST(ContractTest, FiveCycleBecomesFourCycle) {
  auto c = contract(cycle_graph(5), 2, 3);
  EXPECT_EQ(c.graph.order(), 4u);
  EXPECT_EQ(c.graph.size(), 4u);
  for (Vertex v : c.graph.vertex_list()) EXPECT_EQ(c.graph.degree(v), 2u);
}

TEST(ContractTest, SixCycleWithPendant) {
  Graph g = cycle_graph(6);
  Vertex p = g.add_vertex();
  g.add_edge(1, p);
  auto c = contract(g, 0, 1);
  EXPECT_EQ(c.graph.size(), 6u);
  EXPECT_EQ(c.graph.order(), 6u);
  EXPECT_TRUE(c.graph.adjacent(0, p));
  Graph cyc = c.graph;
  cyc.remove_vertex(p);
  for (Vertex v : cyc.vertex_list()) EXPECT_EQ(cyc.degree(v), 2u);
}

TEST(ContractTest, RejectsNonEdgeAndSharedNeighbour) {
  EXPECT_THROW(contract(path_graph(3), 0, 2), GraphError);
  EXPECT_THROW(contract(complete_graph(3), 0, 1), GraphError);
}

TEST(ContractTest, DropsOneVertexAndOneEdge) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    Graph g = random_graph(rng, 8, 0.35);
    for (auto e : g.edges()) {
      bool shared = false;
      for (Vertex w : g.neighbors(e.u)) shared = shared || g.adjacent(w, e.v);
      if (shared) continue;
      auto c = contract(g, e.u, e.v);
      EXPECT_EQ(c.graph.order(), g.order() - 1);
      EXPECT_EQ(c.graph.size(), g.size() - 1);
    }
  }
}

TEST(InducedTest, Examples) {
  Graph h = induced(apex_pair6(), {A, B, C, D});
  EXPECT_EQ(h.order(), 4u);
  EXPECT_EQ(h.size(), 0u);
  EXPECT_EQ(induced(apex_pair6(), {}).order(), 0u);
  Graph k3 = induced(complete_graph(4), {0, 2, 3});
  EXPECT_EQ(k3.order(), 3u);
  EXPECT_EQ(k3.size(), 3u);
  EXPECT_THROW(induced(path_graph(2), {5}), GraphError);
}

TEST(ForestTest, Examples) {
  EXPECT_TRUE(is_forest(star(4)));
  EXPECT_TRUE(is_forest(path_graph(5)));
  EXPECT_FALSE(is_forest(cycle_graph(3)));
  EXPECT_TRUE(is_forest(remove(apex_pair6(), {A, B, C, D})));
}

TEST(ComponentsTest, Examples) {
  EXPECT_EQ(components(Graph(3)).size(), 3u);
  EXPECT_EQ(components(apex_pair6()).size(), 1u);
  auto parts = components(two_triangles());
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], (VertexSet{0, 1, 2}));
  EXPECT_EQ(parts[1], (VertexSet{3, 4, 5}));
}

TEST(ComponentsTest, SizesSumAndForestEdgeCount) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    Graph g = random_graph(rng, 9, 0.2);
    auto parts = components(g);
    std::size_t total = 0;
    for (const auto& p : parts) total += p.size();
    EXPECT_EQ(total, g.order());
    EXPECT_EQ(is_forest(g), g.size() == g.order() - parts.size());
  }
}

TEST(CycleThroughTest, Examples) {
  auto c4 = cycle_through(cycle_graph(4), 2);
  ASSERT_TRUE(c4);
  EXPECT_EQ(c4->size(), 4u);
  EXPECT_EQ(c4->front(), 2u);
  EXPECT_FALSE(cycle_through(star(3), 0));
  auto tri = cycle_through(induced(apex_pair6(), {X, Y, A}), A);
  ASSERT_TRUE(tri);
  EXPECT_EQ(VertexSet(tri->begin(), tri->end()), (VertexSet{X, Y, A}));
}

TEST(CycleThroughTest, AgreesWithPathSearch) {
  for (int n = 1; n <= 6; ++n)
    for_each_labelled_graph(n, [&](const Graph& g) {
      for (Vertex v : g.vertex_list()) {
        auto c = cycle_through(g, v);
        ASSERT_EQ(c.has_value(), on_some_cycle(g, v));
        if (c) {
          EXPECT_TRUE(is_simple_cycle(g, *c));
          EXPECT_EQ(c->front(), v);
        }
      }
    });
}
