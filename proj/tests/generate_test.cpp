#include <gtest/gtest.h>

#include "mmfvs/generate.hpp"
#include "mmfvs/oracle.hpp"
#include "mmfvs/verify.hpp"
#include "support/fixtures.hpp"

using namespace mmfvs;
using namespace mmfvs::testing;

TEST(GenerateTest, ApexPairSix) {
  Graph g = generate("apex-pair", {{"n", 6}});
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(g.size(), 9u);
  EXPECT_TRUE(g.adjacent(X, Y));
  for (Vertex v : {A, B, C, D}) {
    EXPECT_EQ(g.degree(v), 2u);
    EXPECT_TRUE(g.adjacent(v, X));
    EXPECT_TRUE(g.adjacent(v, Y));
  }
}

TEST(GenerateTest, ApexPairFamilyValues) {
  for (std::size_t n = 6; n <= 10; ++n) {
    Graph g = apex_pair(n);
    EXPECT_EQ(fvs_min_brute(g), 1);
    EXPECT_EQ(min_vertex_cover(g).size(), 2u);
    EXPECT_EQ(opt_mmfvs_brute(g).opt_value, static_cast<int>(n) - 2);
  }
}

TEST(GenerateTest, CycleAndComplete) {
  Graph c5 = generate("cycle", {{"n", 5}});
  EXPECT_EQ(c5.size(), 5u);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(c5.degree(v), 2u);
  EXPECT_EQ(generate("complete", {{"n", 6}}).size(), 15u);
}

TEST(GenerateTest, DisjointCycles) {
  Graph g = generate("disjoint-cycles", {{"count", 3}, {"length", 4}});
  EXPECT_EQ(g.order(), 12u);
  EXPECT_EQ(components(g).size(), 3u);
  EXPECT_EQ(fvs_min_brute(g), 3);
}

TEST(GenerateTest, GnpIsDeterministic) {
  Params p{{"n", 10}, {"p", 0.3}};
  EXPECT_EQ(generate("gnp", p, 7), generate("gnp", p, 7));
  EXPECT_NE(generate("gnp", p, 7).edges(), generate("gnp", p, 8).edges());
  EXPECT_EQ(generate("gnp", {{"n", 8}, {"p", 0}}, 1).size(), 0u);
  EXPECT_EQ(generate("gnp", {{"n", 8}, {"p", 1}}, 1).size(), 28u);
}

TEST(GenerateTest, ReductionOutput) {
  Graph g = generate("reduction-output", {{"n", 4}, {"p", 0.5}, {"k", 2}}, 3);
  EXPECT_EQ(g.order(), 4u + 1 + 7 + 1);
  EXPECT_EQ(g, ppt_mmvc_to_mmfvs(gnp(4, 0.5, 3), 2).graph);
}

TEST(GenerateTest, BadInput) {
  EXPECT_THROW(generate("hypercube", {{"n", 3}}), std::invalid_argument);
  EXPECT_THROW(generate("gnp", {{"n", 5}}), std::invalid_argument);
  EXPECT_THROW(generate("cycle", {{"n", 2}}), std::invalid_argument);
  EXPECT_THROW(generate("cycle", {{"n", 4.5}}), std::invalid_argument);
  EXPECT_THROW(generate("gnp", {{"n", 5}, {"p", 1.5}}), std::invalid_argument);
}

TEST(GenerateTest, ApexPairAlias) { EXPECT_EQ(generate("fig1", {{"n", 7}}), apex_pair(7)); }
