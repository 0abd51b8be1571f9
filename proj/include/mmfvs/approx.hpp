#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mmfvs/k_solver.hpp"
#include "mmfvs/verify.hpp"

namespace mmfvs {

struct GreedyState {
  std::shared_ptr<const Graph> original;
  // original minus c_in, minus everything already in the solution or deleted
  Graph g;
  VertexSet c_in;
  VertexSet c_out;
  VertexSet remaining_i;
  VertexSet solution_accum;
  VertexSet deleted;
  std::vector<Vertex> moved_to_cout;
  std::vector<std::size_t> moved_conflict_sizes;
  std::uint64_t move_invariant_violations = 0;
  // some c_in vertex has no cycle left outside the solution; later rounds cannot restore one
  bool c_in_lost = false;
};

namespace detail {

inline bool c_in_keeps_cycles(const Graph& g0, const VertexSet& c_in, std::initializer_list<const VertexSet*> gone) {
  std::vector<char> removed(g0.id_bound(), 0);
  for (Vertex v : c_in) removed[v] = 1;
  for (const auto* s : gone)
    for (Vertex v : *s) removed[v] = 1;
  auto rem = remainder_forest(g0, removed);
  for (Vertex c : c_in)
    if (!closes_cycle(g0, c, removed, rem.sets)) return false;
  return true;
}

// component representative (minimum id) for every vertex of g[c_out]
inline std::vector<Vertex> component_labels(const Graph& g, const VertexSet& c_out) {
  std::vector<Vertex> label(g.id_bound(), static_cast<Vertex>(-1));
  for (const auto& comp : components(induced(g, c_out)))
    for (Vertex v : comp) label[v] = comp.front();
  return label;
}

inline VertexSet adjacent_labels(const Graph& g, const std::vector<Vertex>& label, Vertex u) {
  std::vector<Vertex> out;
  for (Vertex w : g.neighbors(u))
    if (label[w] != static_cast<Vertex>(-1)) out.push_back(label[w]);
  return VertexSet(std::move(out));
}

}  // namespace detail

// Q(u): components of g[c_out] adjacent to u, each named by its smallest vertex.
inline VertexSet neighborhood_components(const Graph& g, const VertexSet& c_out, Vertex u) {
  if (c_out.contains(u)) throw std::invalid_argument("neighborhood_components: u lies in c_out");
  for (Vertex v : c_out)
    if (!g.contains(v)) throw GraphError("neighborhood_components: unknown vertex " + std::to_string(v));
  return detail::adjacent_labels(g, detail::component_labels(g, c_out), u);
}

// S_u: other vertices of `independent` sharing at least two components of Q(u).
inline VertexSet conflict_set(const Graph& g, const VertexSet& c_out, const VertexSet& independent, Vertex u) {
  if (!independent.contains(u)) throw std::invalid_argument("conflict_set: u not in the independent set");
  auto label = detail::component_labels(g, c_out);
  auto qu = detail::adjacent_labels(g, label, u);
  VertexSet out;
  for (Vertex x : independent) {
    if (x == u || !g.contains(x)) continue;
    if (set_intersection(qu, detail::adjacent_labels(g, label, x)).size() >= 2) out.insert(x);
  }
  return out;
}

// Degree rule, then the two independent-set rules, to a fixpoint.
inline void greedy_reduce(GreedyState& st) {
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<Vertex> stack;
    for (Vertex v : st.g.vertex_list())
      if (st.g.degree(v) <= 1) stack.push_back(v);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      if (!st.g.contains(v) || st.g.degree(v) > 1) continue;
      std::vector<Vertex> nb(st.g.neighbors(v).begin(), st.g.neighbors(v).end());
      st.g.remove_vertex(v);
      st.c_out.erase(v);
      st.remaining_i.erase(v);
      st.deleted.insert(v);
      changed = true;
      for (Vertex w : nb)
        if (st.g.degree(w) <= 1) stack.push_back(w);
    }
    auto label = detail::component_labels(st.g, st.c_out);
    std::vector<Vertex> drop, take;
    for (Vertex u : st.remaining_i) {
      std::size_t touching = 0;
      std::vector<Vertex> seen;
      bool closes = false;
      for (Vertex w : st.g.neighbors(u)) {
        if (label[w] == static_cast<Vertex>(-1)) continue;
        ++touching;
        if (std::find(seen.begin(), seen.end(), label[w]) != seen.end()) closes = true;
        seen.push_back(label[w]);
      }
      if (touching <= 1) drop.push_back(u);
      else if (closes) take.push_back(u);
    }
    for (Vertex u : drop) {
      st.g.remove_vertex(u);
      st.remaining_i.erase(u);
      st.deleted.insert(u);
    }
    for (Vertex u : take) {
      st.g.remove_vertex(u);
      st.remaining_i.erase(u);
      st.solution_accum.insert(u);
    }
    changed = changed || !drop.empty() || !take.empty();
  }
}

inline GreedyState make_greedy_state(const Graph& g, const VertexSet& cover, const VertexSet& c_in) {
  GreedyState st;
  st.original = std::make_shared<const Graph>(g);
  st.g = remove(g, c_in);
  st.c_in = c_in;
  st.c_out = set_difference(cover, c_in);
  st.remaining_i = set_difference(g.vertices(), cover);
  greedy_reduce(st);
  st.c_in_lost = !detail::c_in_keeps_cycles(*st.original, st.c_in, {&st.solution_accum});
  return st;
}

inline GreedyState greedy_round(GreedyState st) {
  if (st.remaining_i.empty()) throw std::invalid_argument("greedy_round: no independent-set vertex left");
  Vertex u = st.remaining_i.front();
  VertexSet su = conflict_set(st.g, st.c_out, st.remaining_i, u);

  if (detail::c_in_keeps_cycles(*st.original, st.c_in, {&st.solution_accum, &su})) {
    if (neighborhood_components(st.g, st.c_out, u).size() < 2) ++st.move_invariant_violations;
    for (Vertex x : su) {
      st.g.remove_vertex(x);
      st.remaining_i.erase(x);
      st.solution_accum.insert(x);
    }
    st.remaining_i.erase(u);
    st.c_out.insert(u);
    st.moved_to_cout.push_back(u);
    st.moved_conflict_sizes.push_back(su.size());
  } else {
    st.g.remove_vertex(u);
    st.remaining_i.erase(u);
    st.solution_accum.insert(u);
  }
  greedy_reduce(st);
  st.c_in_lost = !detail::c_in_keeps_cycles(*st.original, st.c_in, {&st.solution_accum});
  return st;
}

struct GreedyRun {
  VertexSet solution;
  bool verified = false;
  std::size_t moved = 0;
  std::vector<std::size_t> conflict_sizes;
  std::uint64_t move_invariant_violations = 0;
  bool abandoned = false;
};

// nullopt when the guess is inconsistent from the start
inline std::optional<GreedyRun> greedy_for_guess(const Graph& g, const VertexSet& cover, const VertexSet& c_in) {
  VertexSet c_out = set_difference(cover, c_in);
  if (!is_forest(induced(g, c_out)) || !partial_minimality_ok(g, c_in, {})) return std::nullopt;
  GreedyState st = make_greedy_state(g, cover, c_in);
  while (!st.remaining_i.empty() && !st.c_in_lost) st = greedy_round(std::move(st));
  GreedyRun run;
  run.abandoned = st.c_in_lost;
  run.solution = set_union(st.c_in, st.solution_accum);
  run.verified = !run.abandoned && minimal_fvs_holds(g, run.solution);
  run.moved = st.moved_to_cout.size();
  run.conflict_sizes = std::move(st.moved_conflict_sizes);
  run.move_invariant_violations = st.move_invariant_violations;
  return run;
}

enum class ApproxMode { exact, greedy };

inline const char* to_string(ApproxMode m) { return m == ApproxMode::exact ? "exact" : "greedy"; }

struct ApproxStats {
  std::uint64_t guesses = 0;
  std::uint64_t guesses_inconsistent = 0;
  std::uint64_t guesses_abandoned = 0;
  std::uint64_t guess_rejected_at_verify = 0;
  std::size_t max_moved = 0;
  std::uint64_t moved_over_vc = 0;
  std::uint64_t move_invariant_violations = 0;
  bool fallback_used = false;
  // |S_u| -> number of moves
  std::map<std::size_t, std::uint64_t> conflict_histogram;
};

struct ApproxResult {
  VertexSet solution;
  ApproxMode mode = ApproxMode::exact;
  int vc = 0;
  int threshold = 0;
  VertexSet winning_c_in;
  ApproxStats stats;
  std::chrono::nanoseconds wall_time{0};
};

// Best verified greedy solution over all guesses C_in of a minimum vertex cover.
inline ApproxResult greedy_approx(const Graph& g, const SolveOptions& opt = {}) {
  ApproxResult res;
  res.mode = ApproxMode::greedy;
  VertexSet cover = min_vertex_cover(g);
  res.vc = static_cast<int>(cover.size());
  if (cover.size() > 30) throw std::length_error("greedy_approx: vertex cover too large to enumerate");
  const std::size_t guesses = std::size_t{1} << cover.size();
  std::vector<std::optional<GreedyRun>> runs(guesses);
  std::vector<VertexSet> c_ins(guesses);
  parallel_for(guesses, opt.threads, [&](std::size_t mask) {
    opt.deadline.check();
    for (std::size_t i = 0; i < cover.size(); ++i)
      if (mask >> i & 1) c_ins[mask].insert(cover.items()[i]);
    runs[mask] = greedy_for_guess(g, cover, c_ins[mask]);
  });
  bool have = false;
  for (std::size_t mask = 0; mask < guesses; ++mask) {
    ++res.stats.guesses;
    const auto& run = runs[mask];
    if (!run) {
      ++res.stats.guesses_inconsistent;
      continue;
    }
    res.stats.max_moved = std::max(res.stats.max_moved, run->moved);
    if (run->moved > cover.size()) ++res.stats.moved_over_vc;
    res.stats.move_invariant_violations += run->move_invariant_violations;
    for (auto s : run->conflict_sizes) ++res.stats.conflict_histogram[s];
    if (run->abandoned) {
      ++res.stats.guesses_abandoned;
      continue;
    }
    if (!run->verified) {
      ++res.stats.guess_rejected_at_verify;
      continue;
    }
    bool better = !have || run->solution.size() > res.solution.size() ||
                  (run->solution.size() == res.solution.size() && c_ins[mask] < res.winning_c_in);
    if (better) {
      have = true;
      res.solution = run->solution;
      res.winning_c_in = c_ins[mask];
    }
  }
  if (!have) {
    res.stats.fallback_used = true;
    res.solution = greedy_minimal_fvs(g);
  }
  return res;
}

inline int approx_threshold(int vc, double epsilon) {
  return std::max(1, static_cast<int>(std::ceil(vc / epsilon - 1e-9)));
}

inline ApproxResult approx_solve(const Graph& g, double epsilon, const SolveOptions& opt = {}) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("approx_solve: epsilon must lie in (0, 1)");
  auto t0 = std::chrono::steady_clock::now();
  int vc = static_cast<int>(min_vertex_cover(g).size());
  int threshold = approx_threshold(vc, epsilon);
  ApproxResult res;
  if (!solve_k(g, threshold, opt).yes()) {
    res.mode = ApproxMode::exact;
    res.solution = opt_exact(g, opt).witness;
  } else {
    res = greedy_approx(g, opt);
  }
  res.vc = vc;
  res.threshold = threshold;
  if (!minimal_fvs_holds(g, res.solution)) throw std::logic_error("approx_solve: result failed verification");
  res.wall_time = std::chrono::steady_clock::now() - t0;
  return res;
}

}  // namespace mmfvs
