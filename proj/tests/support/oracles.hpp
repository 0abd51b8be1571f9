#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mmfvs/graph.hpp"
#include "mmfvs/verify.hpp"

namespace mmfvs::testing {

// Largest |S \ w1| over minimal fvs S with w1 in S and S disjoint from w2; -1 if none.
inline int constrained_best(const Graph& g, const VertexSet& w1, const VertexSet& w2) {
  std::vector<Vertex> free;
  for (Vertex v : g.vertex_list())
    if (!w1.contains(v) && !w2.contains(v)) free.push_back(v);
  int best = -1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
    int extra = __builtin_popcountll(mask);
    if (extra <= best) continue;
    VertexSet s = w1;
    for (std::size_t i = 0; i < free.size(); ++i)
      if (mask >> i & 1) s.insert(free[i]);
    if (is_minimal_by_subsets(g, s)) best = extra;
  }
  return best;
}

inline std::size_t brute_vertex_cover(const Graph& g) {
  auto vs = g.vertex_list();
  auto edges = g.edges();
  std::size_t best = vs.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vs.size()); ++mask) {
    std::size_t size = __builtin_popcountll(mask);
    if (size >= best) continue;
    VertexSet c;
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (mask >> i & 1) c.insert(vs[i]);
    bool ok = true;
    for (auto e : edges)
      if (!c.contains(e.u) && !c.contains(e.v)) ok = false;
    if (ok) best = size;
  }
  return best;
}

// Does any simple cycle pass through v? Plain DFS over simple paths.
inline bool on_some_cycle(const Graph& g, Vertex v) {
  std::vector<char> used(g.id_bound(), 0);
  std::function<bool(Vertex, std::size_t)> dfs = [&](Vertex x, std::size_t len) {
    for (Vertex y : g.neighbors(x)) {
      if (y == v && len >= 3) return true;
      if (used[y]) continue;
      used[y] = 1;
      if (dfs(y, len + 1)) return true;
      used[y] = 0;
    }
    return false;
  };
  used[v] = 1;
  return dfs(v, 1);
}

}  // namespace mmfvs::testing
