#include <gtest/gtest.h>

#include <random>

#include "mmfvs/k_solver.hpp"
#include "mmfvs/oracle.hpp"
#include "support/fixtures.hpp"
#include "support/graph_enum.hpp"

using namespace mmfvs;
using namespace mmfvs::testing;

TEST(SolveKTest, ApexPair) {
  auto yes = solve_k(apex_pair6(), 4);
  ASSERT_TRUE(yes.yes());
  EXPECT_EQ(yes.solution->size(), 4u);
  EXPECT_FALSE(solve_k(apex_pair6(), 5).yes());
}

TEST(SolveKTest, Forest) {
  EXPECT_FALSE(solve_k(star(5), 1).yes());
  auto zero = solve_k(star(5), 0);
  ASSERT_TRUE(zero.yes());
  EXPECT_TRUE(zero.solution->empty());
  EXPECT_THROW(solve_k(star(5), -1), std::invalid_argument);
}

TEST(SolveKTest, LargeGreedyAnswersWithoutSearch) {
  auto rep = solve_k(disjoint_cycles(4, 3), 4);
  ASSERT_TRUE(rep.yes());
  EXPECT_TRUE(rep.guesses.empty());
  EXPECT_EQ(*rep.solution, rep.greedy_fvs);
}

TEST(SolveKTest, AgreesWithOracleAndIsMonotone) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : connected_graphs_up_to_iso(n)) {
      int opt = opt_mmfvs_brute(g).opt_value;
      bool prev = true;
      for (int k = 0; k <= n; ++k) {
        auto rep = solve_k(g, k);
        ASSERT_EQ(rep.yes(), opt >= k) << "n=" << n << " k=" << k;
        if (rep.yes()) {
          EXPECT_GE(static_cast<int>(rep.solution->size()), k);
          EXPECT_TRUE(is_minimal_fvs(g, *rep.solution));
        }
        EXPECT_TRUE(prev || !rep.yes());
        prev = rep.yes();
      }
    }
}

TEST(SolveKTest, ThreadCountDoesNotChangeResult) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 40; ++t) {
    Graph g = random_graph(rng, 11, 0.3);
    int k = static_cast<int>(rng() % 7);
    SolveOptions par;
    par.threads = 4;
    auto a = solve_k(g, k);
    auto b = solve_k(g, k, par);
    ASSERT_EQ(a.yes(), b.yes());
    if (a.yes()) {
      EXPECT_EQ(*a.solution, *b.solution);
    }
  }
}

TEST(OptExactTest, Examples) {
  EXPECT_EQ(opt_exact(apex_pair6()).value, 4);
  EXPECT_EQ(opt_exact(cycle_graph(6)).value, 1);
  EXPECT_EQ(opt_exact(path_graph(4)).value, 0);
}

TEST(OptExactTest, MatchesOracleOnRandomGraphs) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 60; ++t) {
    Graph g = random_graph(rng, 6 + t % 7, 0.15 + 0.1 * (t % 5));
    auto r = opt_exact(g);
    EXPECT_EQ(r.value, opt_mmfvs_brute(g).opt_value);
    EXPECT_TRUE(is_minimal_fvs(g, r.witness));
    EXPECT_EQ(static_cast<int>(r.witness.size()), r.value);
  }
}
