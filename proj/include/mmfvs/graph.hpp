#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mmfvs {

using Vertex = std::uint32_t;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  Vertex u;
  Vertex v;
  auto operator<=>(const Edge&) const = default;
};

// Sorted, duplicate-free vertex list.
class VertexSet {
 public:
  using const_iterator = std::vector<Vertex>::const_iterator;

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> init) : items_(init) { normalize(); }
  explicit VertexSet(std::vector<Vertex> items) : items_(std::move(items)) { normalize(); }

  template <class It>
  VertexSet(It first, It last) : items_(first, last) {
    normalize();
  }

  bool contains(Vertex v) const { return std::binary_search(items_.begin(), items_.end(), v); }

  bool insert(Vertex v) {
    auto it = std::lower_bound(items_.begin(), items_.end(), v);
    if (it != items_.end() && *it == v) return false;
    items_.insert(it, v);
    return true;
  }

  bool erase(Vertex v) {
    auto it = std::lower_bound(items_.begin(), items_.end(), v);
    if (it == items_.end() || *it != v) return false;
    items_.erase(it);
    return true;
  }

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const_iterator begin() const { return items_.begin(); }
  const_iterator end() const { return items_.end(); }
  Vertex front() const { return items_.front(); }
  Vertex back() const { return items_.back(); }
  const std::vector<Vertex>& items() const { return items_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.items_ <=> b.items_; }

 private:
  void normalize() {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }

  std::vector<Vertex> items_;
};

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

inline bool disjoint(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

inline bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n = 0) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // false if already joined
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
};

}  // namespace detail

// Result of merging an edge: `merged` keeps the smaller id, `absorbed` disappears.
struct Merge {
  Vertex merged;
  Vertex absorbed;
};

class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t n) : adj_(n), alive_(n, 1), order_(n) {}

  Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  Vertex add_vertex() {
    adj_.emplace_back();
    alive_.push_back(1);
    ++order_;
    return static_cast<Vertex>(adj_.size() - 1);
  }

  void add_edge(Vertex u, Vertex v) {
    require(u);
    require(v);
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    auto& nu = adj_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v)
      throw GraphError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    nu.insert(it, v);
    auto& nv = adj_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++size_;
  }

  bool contains(Vertex v) const { return v < alive_.size() && alive_[v]; }

  bool adjacent(Vertex u, Vertex v) const {
    if (!contains(u) || !contains(v)) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  std::size_t order() const { return order_; }
  std::size_t size() const { return size_; }
  // one past the largest id ever allocated
  std::size_t id_bound() const { return adj_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const {
    require(v);
    return adj_[v];
  }

  std::size_t degree(Vertex v) const {
    require(v);
    return adj_[v].size();
  }

  std::vector<Vertex> vertex_list() const {
    std::vector<Vertex> out;
    out.reserve(order_);
    for (Vertex v = 0; v < alive_.size(); ++v)
      if (alive_[v]) out.push_back(v);
    return out;
  }

  VertexSet vertices() const { return VertexSet(vertex_list()); }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(size_);
    for (Vertex u = 0; u < adj_.size(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.push_back({u, v});
    return out;
  }

  void remove_vertex(Vertex v) {
    require(v);
    for (Vertex w : adj_[v]) {
      auto& nw = adj_[w];
      nw.erase(std::lower_bound(nw.begin(), nw.end(), v));
    }
    size_ -= adj_[v].size();
    adj_[v].clear();
    adj_[v].shrink_to_fit();
    alive_[v] = 0;
    --order_;
  }

  void remove_vertices(const VertexSet& s) {
    for (Vertex v : s) remove_vertex(v);
  }

  Merge contract_edge(Vertex u, Vertex v) {
    if (!adjacent(u, v))
      throw GraphError("contract on non-edge " + std::to_string(u) + "-" + std::to_string(v));
    if (u > v) std::swap(u, v);
    const auto& nu = adj_[u];
    const auto& nv = adj_[v];
    std::vector<Vertex> common;
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
    if (!common.empty())
      throw GraphError("contract with overlapping neighbourhoods " + std::to_string(u) + "-" +
                       std::to_string(v));
    std::vector<Vertex> moved;
    for (Vertex w : nv)
      if (w != u) moved.push_back(w);
    remove_vertex(v);
    for (Vertex w : moved) add_edge(u, w);
    return {u, v};
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_list() == b.vertex_list() && a.edges() == b.edges();
  }

 private:
  void require(Vertex v) const {
    if (!contains(v)) throw GraphError("unknown vertex " + std::to_string(v));
  }

  std::vector<std::vector<Vertex>> adj_;
  std::vector<char> alive_;
  std::size_t order_ = 0;
  std::size_t size_ = 0;
};

inline std::size_t degree(const Graph& g, Vertex v) { return g.degree(v); }

struct Contraction {
  Graph graph;
  Merge merge;
};

inline Contraction contract(const Graph& g, Vertex u, Vertex v) {
  Contraction out{g, {}};
  out.merge = out.graph.contract_edge(u, v);
  return out;
}

inline Graph induced(const Graph& g, const VertexSet& s) {
  for (Vertex v : s)
    if (!g.contains(v)) throw GraphError("induced: unknown vertex " + std::to_string(v));
  Graph h = g;
  for (Vertex v : g.vertex_list())
    if (!s.contains(v)) h.remove_vertex(v);
  return h;
}

inline Graph remove(const Graph& g, const VertexSet& s) {
  Graph h = g;
  for (Vertex v : s)
    if (h.contains(v)) h.remove_vertex(v);
  return h;
}

inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<char> seen(g.id_bound(), 0);
  for (Vertex s : g.vertex_list()) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : g.neighbors(comp[i]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    out.emplace_back(std::move(comp));
  }
  return out;
}

inline bool is_forest(const Graph& g) {
  detail::DisjointSets ds(g.id_bound());
  for (auto e : g.edges())
    if (!ds.unite(e.u, e.v)) return false;
  return true;
}

// Some simple cycle through v as a vertex sequence starting at v, or nullopt.
inline std::optional<std::vector<Vertex>> cycle_through(const Graph& g, Vertex v) {
  auto nv = g.neighbors(v);
  const std::size_t bound = g.id_bound();
  std::vector<std::uint32_t> label(bound, UINT32_MAX);
  std::vector<Vertex> parent(bound, v);
  label[v] = 0;
  for (std::size_t i = 0; i < nv.size(); ++i) {
    Vertex a = nv[i];
    if (label[a] != UINT32_MAX) continue;
    // BFS from a in g - v; stop at the first other neighbour of v
    std::vector<Vertex> queue{a};
    label[a] = static_cast<std::uint32_t>(i + 1);
    parent[a] = a;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      Vertex x = queue[q];
      for (Vertex y : g.neighbors(x)) {
        if (y == v || label[y] != UINT32_MAX) continue;
        label[y] = label[a];
        parent[y] = x;
        queue.push_back(y);
      }
    }
    for (std::size_t j = i + 1; j < nv.size(); ++j) {
      Vertex b = nv[j];
      if (label[b] != label[a]) continue;
      std::vector<Vertex> cycle{v};
      std::vector<Vertex> path;
      for (Vertex x = b; x != a; x = parent[x]) path.push_back(x);
      path.push_back(a);
      cycle.insert(cycle.end(), path.rbegin(), path.rend());
      return cycle;
    }
  }
  return std::nullopt;
}

// True iff seq is a simple cycle of g (length >= 3, consecutive and closing edges present).
inline bool is_simple_cycle(const Graph& g, const std::vector<Vertex>& seq) {
  if (seq.size() < 3) return false;
  VertexSet distinct(seq);
  if (distinct.size() != seq.size()) return false;
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (!g.adjacent(seq[i], seq[(i + 1) % seq.size()])) return false;
  return true;
}

}  // namespace mmfvs
