#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mmfvs/graph.hpp"

namespace mmfvs {

class OracleCapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct OracleResult {
  int opt_value = 0;
  VertexSet witness;
  std::uint64_t enumerated = 0;
};

inline constexpr std::size_t default_oracle_cap = 20;

namespace detail {

// Dense relabelling of g onto 0..n-1 with adjacency bitmasks.
class DenseGraph {
 public:
  DenseGraph(const Graph& g, std::size_t cap) : ids_(g.vertex_list()) {
    if (cap > 63) cap = 63;
    if (ids_.size() > cap)
      throw OracleCapExceeded("oracle refuses graph with " + std::to_string(ids_.size()) +
                              " vertices (cap " + std::to_string(cap) + ")");
    std::vector<int> index(g.id_bound(), -1);
    for (std::size_t i = 0; i < ids_.size(); ++i) index[ids_[i]] = static_cast<int>(i);
    adj_.assign(ids_.size(), 0);
    for (auto e : g.edges()) {
      int a = index[e.u], b = index[e.v];
      adj_[a] |= std::uint64_t{1} << b;
      adj_[b] |= std::uint64_t{1} << a;
      edges_.push_back({a, b});
    }
  }

  int n() const { return static_cast<int>(ids_.size()); }

  bool forest_without(std::uint64_t s, std::vector<int>& parent) const {
    for (int i = 0; i < n(); ++i) parent[i] = i;
    for (auto [a, b] : edges_) {
      if ((s >> a & 1) || (s >> b & 1)) continue;
      int ra = root(parent, a), rb = root(parent, b);
      if (ra == rb) return false;
      parent[ra] = rb;
    }
    return true;
  }

  bool minimal_fvs(std::uint64_t s) const {
    std::vector<int> parent(n());
    if (!forest_without(s, parent)) return false;
    for (std::uint64_t rest = s; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      std::uint64_t nb = adj_[v] & ~s;
      std::uint64_t seen_roots = 0;
      bool found = false;
      for (; nb; nb &= nb - 1) {
        int r = root(parent, std::countr_zero(nb));
        if (seen_roots >> r & 1) {
          found = true;
          break;
        }
        seen_roots |= std::uint64_t{1} << r;
      }
      if (!found) return false;
    }
    return true;
  }

  bool vertex_cover(std::uint64_t c) const {
    for (auto [a, b] : edges_)
      if (!(c >> a & 1) && !(c >> b & 1)) return false;
    return true;
  }

  bool minimal_vertex_cover(std::uint64_t c) const {
    if (!vertex_cover(c)) return false;
    for (std::uint64_t rest = c; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      if ((adj_[v] & ~c) == 0) return false;
    }
    return true;
  }

  VertexSet to_set(std::uint64_t s) const {
    std::vector<Vertex> out;
    for (; s; s &= s - 1) out.push_back(ids_[std::countr_zero(s)]);
    return VertexSet(std::move(out));
  }

 private:
  static int root(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  std::vector<Vertex> ids_;
  std::vector<std::uint64_t> adj_;
  std::vector<std::pair<int, int>> edges_;
};

// Visit all size-k subsets of {0..n-1} in lexicographic order; stop when f returns true.
template <class F>
bool for_each_subset_of_size(int n, int k, F&& f) {
  if (k > n) return false;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (int i : idx) mask |= std::uint64_t{1} << i;
    if (f(mask)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

inline OracleResult opt_mmfvs_brute(const Graph& g, std::size_t cap = default_oracle_cap) {
  detail::DenseGraph d(g, cap);
  OracleResult res;
  for (int k = d.n(); k >= 0; --k) {
    std::uint64_t hit = 0;
    bool found = detail::for_each_subset_of_size(d.n(), k, [&](std::uint64_t s) {
      ++res.enumerated;
      if (!d.minimal_fvs(s)) return false;
      hit = s;
      return true;
    });
    if (found) {
      res.opt_value = k;
      res.witness = d.to_set(hit);
      return res;
    }
  }
  return res;
}

inline OracleResult opt_mmvc_brute(const Graph& g, std::size_t cap = default_oracle_cap) {
  detail::DenseGraph d(g, cap);
  OracleResult res;
  for (int k = d.n(); k >= 0; --k) {
    std::uint64_t hit = 0;
    bool found = detail::for_each_subset_of_size(d.n(), k, [&](std::uint64_t s) {
      ++res.enumerated;
      if (!d.minimal_vertex_cover(s)) return false;
      hit = s;
      return true;
    });
    if (found) {
      res.opt_value = k;
      res.witness = d.to_set(hit);
      return res;
    }
  }
  return res;
}

inline int fvs_min_brute(const Graph& g, std::size_t cap = default_oracle_cap) {
  detail::DenseGraph d(g, cap);
  std::vector<int> parent(d.n());
  for (int k = 0; k <= d.n(); ++k) {
    bool found = detail::for_each_subset_of_size(d.n(), k,
                                                 [&](std::uint64_t s) { return d.forest_without(s, parent); });
    if (found) return k;
  }
  return d.n();
}

}  // namespace mmfvs
