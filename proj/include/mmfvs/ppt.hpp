#pragma once

#include <vector>

#include "mmfvs/graph.hpp"
#include "mmfvs/oracle.hpp"

namespace mmfvs {

// Max Min Vertex Cover instance (g, k) as a Max Min FVS instance (graph, k_prime).
struct PptInstance {
  Graph graph;
  int k_prime = 0;
  Vertex apex = 0;
  VertexSet x_set;
  Vertex y = 0;
  std::size_t base_n = 0;
};

// Gadget ids start at g.id_bound(): apex, then the x-set, then y.
inline PptInstance ppt_mmvc_to_mmfvs(const Graph& g, int k) {
  PptInstance out;
  out.base_n = g.order();
  out.graph = g;
  out.apex = out.graph.add_vertex();
  for (Vertex v : g.vertex_list()) out.graph.add_edge(out.apex, v);
  for (std::size_t i = 0; i < out.base_n + 3; ++i) {
    Vertex xi = out.graph.add_vertex();
    out.graph.add_edge(out.apex, xi);
    out.x_set.insert(xi);
  }
  out.y = out.graph.add_vertex();
  for (Vertex xi : out.x_set) out.graph.add_edge(out.y, xi);
  out.k_prime = k + static_cast<int>(out.base_n) + 2;
  return out;
}

struct PptCheck {
  bool equivalent = false;
  bool vc_side = false;
  bool fvs_side = false;
  int mmvc_opt = 0;
  int mmfvs_opt = 0;
  int k_prime = 0;
};

inline PptCheck ppt_check(const Graph& g, int k, std::size_t cap = default_oracle_cap) {
  auto inst = ppt_mmvc_to_mmfvs(g, k);
  PptCheck c;
  c.mmvc_opt = opt_mmvc_brute(g, cap).opt_value;
  c.mmfvs_opt = opt_mmfvs_brute(inst.graph, cap).opt_value;
  c.k_prime = inst.k_prime;
  c.vc_side = c.mmvc_opt >= k;
  c.fvs_side = c.mmfvs_opt >= c.k_prime;
  c.equivalent = c.vc_side == c.fvs_side;
  return c;
}

inline bool check_ppt_equivalence(const Graph& g, int k, std::size_t cap = default_oracle_cap) {
  return ppt_check(g, k, cap).equivalent;
}

}  // namespace mmfvs
