#pragma once

#include <atomic>
#include <chrono>
#include <vector>

#include "mmfvs/extension.hpp"
#include "mmfvs/parallel.hpp"

namespace mmfvs {

struct SolveOptions {
  Deadline deadline;
  unsigned threads = 1;
  std::size_t lift_leaf_cap = 4096;
};

struct GuessLog {
  VertexSet w1;
  int k = 0;
  int gamma = 0;
  std::uint64_t nodes = 0;
  bool yes = false;
};

struct KSolveReport : SolveReport {
  VertexSet greedy_fvs;
  std::vector<GuessLog> guesses;
};

namespace detail {

template <class F>
void for_each_subset_ascending(const std::vector<Vertex>& items, F&& f) {
  const int n = static_cast<int>(items.size());
  for (int size = 0; size <= n; ++size) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::vector<Vertex> pick;
      for (int i : idx) pick.push_back(items[i]);
      f(VertexSet(std::move(pick)));
      int i = size - 1;
      while (i >= 0 && idx[i] == n - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

}  // namespace detail

inline KSolveReport solve_k(const Graph& g, int k, const SolveOptions& opt = {}) {
  if (k < 0) throw std::invalid_argument("solve_k: k must be non-negative");
  auto t0 = std::chrono::steady_clock::now();
  KSolveReport rep;
  rep.greedy_fvs = greedy_minimal_fvs(g);
  const VertexSet& w = rep.greedy_fvs;
  auto finish = [&] {
    rep.wall_time = std::chrono::steady_clock::now() - t0;
    return rep;
  };
  if (static_cast<int>(w.size()) >= k) {
    rep.outcome = Outcome::yes;
    rep.solution = w;
    return finish();
  }

  std::vector<VertexSet> subsets;
  detail::for_each_subset_ascending(w.items(), [&](VertexSet s) { subsets.push_back(std::move(s)); });

  ExtensionOptions ext{opt.deadline, opt.lift_leaf_cap};
  std::vector<SolveReport> results(subsets.size());
  std::vector<char> ran(subsets.size(), 0);
  std::atomic<std::size_t> first_yes{subsets.size()};
  parallel_for(subsets.size(), opt.threads, [&](std::size_t i) {
    if (i > first_yes.load()) return;
    const VertexSet& w1 = subsets[i];
    int residual = k - static_cast<int>(w1.size());
    results[i] = solve_extension(g, w1, set_difference(w, w1), residual, ext);
    ran[i] = 1;
    if (results[i].yes()) {
      auto cur = first_yes.load();
      while (i < cur && !first_yes.compare_exchange_weak(cur, i)) {
      }
    }
  });

  std::size_t winner = first_yes.load();
  for (std::size_t i = 0; i < subsets.size() && i <= winner; ++i) {
    if (!ran[i]) continue;
    GuessLog log;
    log.w1 = subsets[i];
    log.k = k - static_cast<int>(subsets[i].size());
    log.gamma = results[i].root_measure - log.k;
    log.nodes = results[i].nodes_explored;
    log.yes = results[i].yes();
    rep.guesses.push_back(std::move(log));
    accumulate(rep, results[i]);
  }
  if (winner < subsets.size()) {
    rep.outcome = Outcome::yes;
    rep.solution = results[winner].solution;
  }
  return finish();
}

struct OptResult {
  int value = 0;
  VertexSet witness;
  std::uint64_t nodes_explored = 0;
};

// Upward search: each yes moves k past the witness it returned.
inline OptResult opt_exact(const Graph& g, const SolveOptions& opt = {}) {
  OptResult res;
  res.witness = greedy_minimal_fvs(g);
  res.value = static_cast<int>(res.witness.size());
  while (true) {
    auto rep = solve_k(g, res.value + 1, opt);
    res.nodes_explored += rep.nodes_explored;
    if (!rep.yes()) break;
    res.witness = *rep.solution;
    res.value = static_cast<int>(res.witness.size());
  }
  return res;
}

}  // namespace mmfvs
