#pragma once

#include "mmfvs/generate.hpp"
#include "mmfvs/graph.hpp"

namespace mmfvs::testing {

// Apex pair on six vertices: x, y adjacent; a..d each adjacent to x and y.
inline constexpr Vertex X = 0, Y = 1, A = 2, B = 3, C = 4, D = 5;

inline Graph apex_pair6() { return apex_pair(6); }

inline Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph two_triangles() { return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}); }

inline Graph star(std::size_t leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

}  // namespace mmfvs::testing
