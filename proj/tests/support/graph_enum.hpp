#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <unordered_set>
#include <vector>

#include "mmfvs/graph.hpp"

namespace mmfvs::testing {

// Graphs on n <= 8 vertices as adjacency rows.
using Rows = std::vector<std::uint8_t>;

inline Graph to_graph(const Rows& rows) {
  Graph g(rows.size());
  for (Vertex u = 0; u < rows.size(); ++u)
    for (Vertex v = u + 1; v < rows.size(); ++v)
      if (rows[u] >> v & 1) g.add_edge(u, v);
  return g;
}

inline bool connected(const Rows& rows) {
  if (rows.empty()) return true;
  unsigned seen = 1, frontier = 1;
  while (frontier) {
    unsigned next = 0;
    for (unsigned f = frontier; f; f &= f - 1) next |= rows[__builtin_ctz(f)];
    next &= ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == (1u << rows.size()) - 1;
}

namespace detail {

// Colour refinement; the result orders vertices into cells by an
// isomorphism-invariant colour.
inline std::vector<int> refine(const Rows& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<int> colour(n);
  for (int v = 0; v < n; ++v) colour[v] = __builtin_popcount(rows[v]);
  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(colour[v]);
      std::vector<int> nb;
      for (int w = 0; w < n; ++w)
        if (rows[v] >> w & 1) nb.push_back(colour[w]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v)
      next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    if (next == colour) break;
    colour = next;
  }
  return colour;
}

}  // namespace detail

// Canonical code: minimum upper-triangle bit string over all orderings that
// respect the refined colour classes.
inline std::uint64_t canonical_code(const Rows& rows) {
  const int n = static_cast<int>(rows.size());
  auto colour = detail::refine(rows);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return colour[a] < colour[b] || (colour[a] == colour[b] && a < b); });
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && colour[order[j]] == colour[order[i]]) ++j;
    cells.push_back({i, j});
    i = j;
  }
  std::uint64_t best = UINT64_MAX;
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == cells.size()) {
      std::uint64_t code = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) code = code << 1 | (rows[order[i]] >> order[j] & 1);
      best = std::min(best, code);
      return;
    }
    auto [lo, hi] = cells[c];
    std::sort(order.begin() + lo, order.begin() + hi);
    do {
      rec(c + 1);
    } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
  };
  rec(0);
  return best;
}

// One representative per isomorphism class of graphs on n vertices (n <= 8).
inline std::vector<Rows> nonisomorphic_graphs(int n) {
  std::vector<Rows> level{Rows{}};
  for (int m = 1; m <= n; ++m) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<Rows> next;
    for (const auto& base : level)
      for (unsigned nb = 0; nb < (1u << (m - 1)); ++nb) {
        Rows rows = base;
        rows.push_back(static_cast<std::uint8_t>(nb));
        for (int v = 0; v < m - 1; ++v)
          if (nb >> v & 1) rows[v] |= static_cast<std::uint8_t>(1u << (m - 1));
        if (seen.insert(canonical_code(rows)).second) next.push_back(std::move(rows));
      }
    level = std::move(next);
  }
  return level;
}

inline std::vector<Graph> connected_graphs_up_to_iso(int n) {
  std::vector<Graph> out;
  for (const auto& rows : nonisomorphic_graphs(n))
    if (connected(rows)) out.push_back(to_graph(rows));
  return out;
}

// Every labelled graph on n vertices (n <= 7).
template <class F>
void for_each_labelled_graph(int n, F&& f) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
    f(g);
  }
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace mmfvs::testing
