#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "mmfvs/graph.hpp"
#include "mmfvs/ppt.hpp"

namespace mmfvs {

using Params = std::map<std::string, double>;

namespace detail {

inline double param(const Params& p, const std::string& key, std::optional<double> fallback = std::nullopt) {
  auto it = p.find(key);
  if (it != p.end()) return it->second;
  if (fallback) return *fallback;
  throw std::invalid_argument("missing parameter '" + key + "'");
}

inline std::size_t count_param(const Params& p, const std::string& key, std::optional<double> fallback = std::nullopt) {
  double x = param(p, key, fallback);
  if (x < 0 || x != std::floor(x)) throw std::invalid_argument("parameter '" + key + "' must be a non-negative integer");
  return static_cast<std::size_t>(x);
}

// Uniform in [0, 1) from the top 53 bits; same stream on every platform.
inline double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace detail

inline Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  if (p < 0 || p > 1) throw std::invalid_argument("gnp: p must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (detail::unit(rng) < p) g.add_edge(u, v);
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle: need at least 3 vertices");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return g;
}

inline Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

// x = 0 and y = 1 adjacent; every other vertex adjacent to both.
inline Graph apex_pair(std::size_t n) {
  if (n < 3) throw std::invalid_argument("apex_pair: need at least 3 vertices");
  Graph g(n);
  g.add_edge(0, 1);
  for (Vertex v = 2; v < n; ++v) {
    g.add_edge(0, v);
    g.add_edge(1, v);
  }
  return g;
}

inline Graph disjoint_cycles(std::size_t count, std::size_t length) {
  if (length < 3) throw std::invalid_argument("disjoint-cycles: length must be at least 3");
  Graph g(count * length);
  for (std::size_t c = 0; c < count; ++c)
    for (std::size_t i = 0; i < length; ++i)
      g.add_edge(static_cast<Vertex>(c * length + i), static_cast<Vertex>(c * length + (i + 1) % length));
  return g;
}

inline const std::vector<std::string>& generator_families() {
  static const std::vector<std::string> names{"gnp", "cycle", "complete", "apex-pair", "disjoint-cycles", "reduction-output"};
  return names;
}

// Deterministic in (family, params, seed). Parameters:
//   gnp: n, p   cycle: n   complete: n   apex-pair (alias fig1): n   disjoint-cycles: count, length
//   reduction-output: n, p, k (transforms gnp(n, p, seed))
inline Graph generate(const std::string& family, const Params& params, std::uint64_t seed = 0) {
  using detail::count_param;
  if (family == "gnp") return gnp(count_param(params, "n"), detail::param(params, "p"), seed);
  if (family == "cycle") return cycle_graph(count_param(params, "n"));
  if (family == "complete") return complete_graph(count_param(params, "n"));
  if (family == "apex-pair" || family == "fig1") return apex_pair(count_param(params, "n"));
  if (family == "disjoint-cycles") return disjoint_cycles(count_param(params, "count"), count_param(params, "length"));
  if (family == "reduction-output") {
    Graph base = gnp(count_param(params, "n"), detail::param(params, "p", 0.5), seed);
    return ppt_mmvc_to_mmfvs(base, static_cast<int>(count_param(params, "k", 0))).graph;
  }
  throw std::invalid_argument("unknown family '" + family + "'");
}

}  // namespace mmfvs
