#pragma once

#include <map>
#include <optional>
#include <vector>

#include "mmfvs/graph.hpp"

namespace mmfvs {

// v -> a cycle through v inside (V \ S) + v
struct Certificate {
  std::map<Vertex, std::vector<Vertex>> cycles;
};

namespace detail {

inline void require_subset(const Graph& g, const VertexSet& s, const char* what) {
  for (Vertex v : s)
    if (!g.contains(v)) throw GraphError(std::string(what) + ": unknown vertex " + std::to_string(v));
}

inline std::vector<char> mask_of(const Graph& g, const VertexSet& s) {
  std::vector<char> m(g.id_bound(), 0);
  for (Vertex v : s) m[v] = 1;
  return m;
}

// Union-find over g minus the masked vertices; `acyclic` tells whether that graph is a forest.
struct Remainder {
  DisjointSets sets;
  bool acyclic = true;
};

inline Remainder remainder_forest(const Graph& g, const std::vector<char>& removed) {
  Remainder r{DisjointSets(g.id_bound()), true};
  for (Vertex u : g.vertex_list()) {
    if (removed[u]) continue;
    for (Vertex v : g.neighbors(u))
      if (u < v && !removed[v] && !r.sets.unite(u, v)) r.acyclic = false;
  }
  return r;
}

// With `sets` built over g minus `removed`: does w close a cycle with the remainder?
inline bool closes_cycle(const Graph& g, Vertex w, const std::vector<char>& removed, DisjointSets& sets) {
  std::vector<std::uint32_t> roots;
  for (Vertex x : g.neighbors(w)) {
    if (removed[x]) continue;
    std::uint32_t r = sets.find(x);
    if (std::find(roots.begin(), roots.end(), r) != roots.end()) return true;
    roots.push_back(r);
  }
  return false;
}

}  // namespace detail

inline bool is_fvs(const Graph& g, const VertexSet& s) {
  detail::require_subset(g, s, "is_fvs");
  return detail::remainder_forest(g, detail::mask_of(g, s)).acyclic;
}

// Fast check without certificates.
inline bool minimal_fvs_holds(const Graph& g, const VertexSet& s) {
  detail::require_subset(g, s, "minimal_fvs_holds");
  auto removed = detail::mask_of(g, s);
  auto rem = detail::remainder_forest(g, removed);
  if (!rem.acyclic) return false;
  for (Vertex v : s)
    if (!detail::closes_cycle(g, v, removed, rem.sets)) return false;
  return true;
}

inline std::optional<Certificate> is_minimal_fvs(const Graph& g, const VertexSet& s) {
  if (!minimal_fvs_holds(g, s)) return std::nullopt;
  Certificate cert;
  if (s.empty()) return cert;
  Graph rest = remove(g, s);
  for (Vertex v : s) {
    Graph h = rest;
    Vertex id = h.add_vertex();
    for (Vertex w : g.neighbors(v))
      if (!s.contains(w)) h.add_edge(id, w);
    auto cyc = cycle_through(h, id);
    if (!cyc) return std::nullopt;
    (*cyc)[0] = v;
    cert.cycles.emplace(v, std::move(*cyc));
  }
  return cert;
}

// Definitional minimality: fvs, and no single deletion keeps it an fvs.
inline bool is_minimal_by_subsets(const Graph& g, const VertexSet& s) {
  if (!is_fvs(g, s)) return false;
  for (Vertex v : s) {
    VertexSet t = s;
    t.erase(v);
    if (is_fvs(g, t)) return false;
  }
  return true;
}

inline VertexSet greedy_minimal_fvs(const Graph& g) {
  auto list = g.vertex_list();
  std::vector<char> in(g.id_bound(), 0);
  for (Vertex v : list) in[v] = 1;
  for (auto it = list.rbegin(); it != list.rend(); ++it) {
    in[*it] = 0;
    if (!detail::remainder_forest(g, in).acyclic) in[*it] = 1;
  }
  std::vector<Vertex> out;
  for (Vertex v : list)
    if (in[v]) out.push_back(v);
  return VertexSet(std::move(out));
}

// True iff every w in in_set has a cycle through it in g[(V \ in_set) + w].
inline bool partial_minimality_ok(const Graph& g, const VertexSet& in_set, const VertexSet& out_set) {
  if (!disjoint(in_set, out_set)) throw GraphError("partial_minimality_ok: in and out sets overlap");
  detail::require_subset(g, in_set, "partial_minimality_ok");
  if (in_set.empty()) return true;
  auto removed = detail::mask_of(g, in_set);
  auto rem = detail::remainder_forest(g, removed);
  for (Vertex w : in_set)
    if (!detail::closes_cycle(g, w, removed, rem.sets)) return false;
  return true;
}

namespace detail {

inline std::size_t greedy_matching_size(const Graph& g) {
  std::vector<char> used(g.id_bound(), 0);
  std::size_t m = 0;
  for (auto e : g.edges())
    if (!used[e.u] && !used[e.v]) {
      used[e.u] = used[e.v] = 1;
      ++m;
    }
  return m;
}

inline void cover_branch(Graph g, std::vector<Vertex>& current, std::vector<Vertex>& best) {
  if (g.size() == 0) {
    if (current.size() < best.size()) best = current;
    return;
  }
  if (current.size() + greedy_matching_size(g) >= best.size()) return;
  // edge at a vertex of maximum degree, ties by id
  Vertex u = 0;
  std::size_t du = 0;
  for (Vertex v : g.vertex_list())
    if (g.degree(v) > du) {
      u = v;
      du = g.degree(v);
    }
  Vertex w = g.neighbors(u).front();
  if (du == 1) {
    // isolated edge: either endpoint will do
    current.push_back(std::min(u, w));
    g.remove_vertex(u);
    cover_branch(std::move(g), current, best);
    current.pop_back();
    return;
  }
  {
    Graph h = g;
    h.remove_vertex(u);
    current.push_back(u);
    cover_branch(std::move(h), current, best);
    current.pop_back();
  }
  g.remove_vertex(w);
  current.push_back(w);
  cover_branch(std::move(g), current, best);
  current.pop_back();
}

}  // namespace detail

inline VertexSet min_vertex_cover(const Graph& g) {
  std::vector<Vertex> best;
  for (Vertex v : g.vertex_list())
    if (g.degree(v) > 0) best.push_back(v);
  std::vector<Vertex> current;
  detail::cover_branch(g, current, best);
  return VertexSet(std::move(best));
}

}  // namespace mmfvs
