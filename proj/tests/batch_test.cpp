#include <gtest/gtest.h>

#include "mmfvs/batch.hpp"
#include "mmfvs/generate.hpp"
#include "support/fixtures.hpp"
#include "support/graph_enum.hpp"

using namespace mmfvs;
using namespace mmfvs::testing;

namespace {

std::vector<NamedInstance> small_connected(int max_n) {
  std::vector<NamedInstance> out;
  for (int n = 1; n <= max_n; ++n) {
    int i = 0;
    for (auto& g : connected_graphs_up_to_iso(n))
      out.push_back({"n" + std::to_string(n) + "_" + std::to_string(i++), std::move(g)});
  }
  return out;
}

}  // namespace

TEST(BatchTest, AlgorithmNames) {
  for (auto name : {"bruteforce", "k-solver", "vc-solver", "approx", "ppt-check"})
    EXPECT_EQ(to_string(parse_algorithm(name)), std::string(name));
  EXPECT_THROW(parse_algorithm("magic"), std::invalid_argument);
}

TEST(BatchTest, KSolverAgreesWithBruteForce) {
  auto corpus = small_connected(6);
  for (int k = 0; k <= 4; ++k) {
    BatchParams p;
    p.k = k;
    p.workers = 3;
    auto fast = run_batch(corpus, Algorithm::k_solver, p);
    auto slow = run_batch(corpus, Algorithm::bruteforce, p);
    ASSERT_EQ(fast.size(), corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      EXPECT_EQ(fast[i].instance, corpus[i].name);
      EXPECT_EQ(fast[i].outcome, slow[i].outcome) << corpus[i].name << " k=" << k;
      if (fast[i].outcome == "yes") {
        EXPECT_EQ(fast[i].verification, "verified");
      }
    }
  }
}

TEST(BatchTest, ApexPairFamilyUnderVcSolver) {
  std::vector<NamedInstance> corpus;
  for (std::size_t n = 6; n <= 12; ++n) corpus.push_back({"apex_pair_" + std::to_string(n), apex_pair(n)});
  auto recs = run_batch(corpus, Algorithm::vc_solver, {});
  for (std::size_t i = 0; i < recs.size(); ++i) {
    EXPECT_EQ(recs[i].outcome, "solved");
    EXPECT_EQ(*recs[i].solution_size, corpus[i].graph.order() - 2);
    EXPECT_EQ(recs[i].verification, "verified");
  }
}

TEST(BatchTest, ApproxRatiosOnGnpCorpus) {
  std::vector<NamedInstance> corpus;
  for (std::uint64_t seed = 0; seed < 30; ++seed)
    corpus.push_back({"gnp_" + std::to_string(seed), gnp(6 + seed % 5, 0.35, seed)});
  BatchParams p;
  p.epsilon = 0.5;
  for (const auto& r : run_batch(corpus, Algorithm::approx, p)) {
    ASSERT_EQ(r.outcome, "solved") << r.error;
    EXPECT_GE(r.stats["ratio"].get<double>(), 0.5);
    EXPECT_EQ(r.stats["guess_rejected_at_verify"].get<int>(), 0);
  }
}

TEST(BatchTest, PptCheckCoversAllThresholds) {
  auto recs = run_batch({{"p3", path_graph(3)}}, Algorithm::ppt_check, {});
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].outcome, "equivalent");
  EXPECT_EQ(recs[0].stats["checks"].size(), 4u);
}

TEST(BatchTest, FailuresAreRecordedAndBatchContinues) {
  BatchParams p;
  p.oracle_cap = 5;
  auto recs = run_batch({{"big", cycle_graph(8)}, {"small", cycle_graph(4)}}, Algorithm::bruteforce, p);
  EXPECT_EQ(recs[0].outcome, "error");
  EXPECT_FALSE(recs[0].error.empty());
  EXPECT_EQ(recs[1].outcome, "solved");
}

TEST(BatchTest, TimeoutIsRecorded) {
  BatchParams p;
  p.k = 5;
  p.timeout = std::chrono::duration<double>(0);
  // greedy fvs has one vertex, so the extension search runs
  auto recs = run_batch({{"c", cycle_graph(30)}}, Algorithm::k_solver, p);
  EXPECT_EQ(recs[0].outcome, "timeout");
}

TEST(BatchTest, ReportsAreByteIdentical) {
  auto corpus = small_connected(5);
  BatchParams p;
  auto a = run_batch(corpus, Algorithm::vc_solver, p);
  p.workers = 4;
  auto b = run_batch(corpus, Algorithm::vc_solver, p);
  auto report = to_jsonl(a);
  EXPECT_EQ(report, to_jsonl(b));
  EXPECT_EQ(summary_table(a), summary_table(b));
  EXPECT_EQ(std::count(report.begin(), report.end(), '\n'), static_cast<long>(corpus.size()));
}

TEST(BatchTest, TimingIsOptIn) {
  BatchParams p;
  EXPECT_FALSE(run_batch({{"c", cycle_graph(4)}}, Algorithm::vc_solver, p)[0].wall_ms);
  p.timing = true;
  EXPECT_TRUE(run_batch({{"c", cycle_graph(4)}}, Algorithm::vc_solver, p)[0].wall_ms);
}
