#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mmfvs/graph.hpp"

namespace mmfvs {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct Instance {
  Graph graph;
  std::string tag = "mmfvs";
  std::vector<std::string> comments;
};

namespace detail {

inline bool blank(std::string_view s) { return s.find_first_not_of(" \t\r") == std::string_view::npos; }

// Reads exactly `count` non-negative integers and nothing else.
inline bool read_ints(std::istringstream& in, std::size_t count, std::vector<long long>& out) {
  out.assign(count, 0);
  for (auto& x : out)
    if (!(in >> x) || x < 0) return false;
  std::string rest;
  return !(in >> rest);
}

}  // namespace detail

// "p <tag> n m" header, "e u v" edges (1-indexed), "c ..." comments.
inline Instance parse_instance(std::string_view text) {
  Instance inst;
  bool header = false;
  std::size_t declared_m = 0, edges = 0, lineno = 0, header_line = 0;
  std::istringstream all{std::string(text)};
  std::vector<long long> nums;
  for (std::string line; std::getline(all, line);) {
    ++lineno;
    if (detail::blank(line)) continue;
    std::istringstream in(line);
    std::string kind;
    in >> kind;
    if (kind == "c") {
      auto pos = line.find('c');
      std::string body = line.substr(pos + 1);
      if (!body.empty() && body.front() == ' ') body.erase(0, 1);
      if (!body.empty() && body.back() == '\r') body.pop_back();
      inst.comments.push_back(body);
    } else if (kind == "p") {
      if (header) throw ParseError(lineno, "second header");
      if (!(in >> inst.tag) || !detail::read_ints(in, 2, nums)) throw ParseError(lineno, "bad header, expected 'p <tag> n m'");
      if (nums[0] > 0xFFFFFFFELL) throw ParseError(lineno, "vertex count too large");
      inst.graph = Graph(static_cast<std::size_t>(nums[0]));
      declared_m = static_cast<std::size_t>(nums[1]);
      header = true;
      header_line = lineno;
    } else if (kind == "e") {
      if (!header) throw ParseError(lineno, "edge before header");
      if (!detail::read_ints(in, 2, nums)) throw ParseError(lineno, "bad edge line, expected 'e u v'");
      const auto n = static_cast<long long>(inst.graph.order());
      for (auto x : nums)
        if (x < 1 || x > n) throw ParseError(lineno, "endpoint " + std::to_string(x) + " outside [1, " + std::to_string(n) + "]");
      auto u = static_cast<Vertex>(nums[0] - 1), v = static_cast<Vertex>(nums[1] - 1);
      if (u == v) throw ParseError(lineno, "self-loop at " + std::to_string(nums[0]));
      if (inst.graph.adjacent(u, v))
        throw ParseError(lineno, "duplicate edge " + std::to_string(nums[0]) + " " + std::to_string(nums[1]));
      inst.graph.add_edge(u, v);
      ++edges;
    } else {
      throw ParseError(lineno, "unknown line type '" + kind + "'");
    }
  }
  if (!header) throw ParseError(lineno, "missing header");
  if (edges != declared_m)
    throw ParseError(header_line, "header declares " + std::to_string(declared_m) + " edges, found " + std::to_string(edges));
  return inst;
}

inline Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

// Position of each live vertex in ascending id order; removed ids map to -1.
inline std::vector<long long> compact_ids(const Graph& g) {
  std::vector<long long> pos(g.id_bound(), -1);
  long long next = 0;
  for (Vertex v : g.vertex_list()) pos[v] = next++;
  return pos;
}

// Live vertices are renumbered 1..n in ascending id order.
inline std::string write_instance(const Graph& g, const std::string& tag = "mmfvs",
                                  const std::vector<std::string>& comments = {}) {
  std::ostringstream out;
  for (const auto& c : comments) out << "c " << c << '\n';
  out << "p " << tag << ' ' << g.order() << ' ' << g.size() << '\n';
  auto pos = compact_ids(g);
  for (auto e : g.edges()) out << "e " << pos[e.u] + 1 << ' ' << pos[e.v] + 1 << '\n';
  return out.str();
}

// One 1-indexed vertex id per line; blank lines and "c" comments ignored.
inline VertexSet parse_solution(std::string_view text, std::size_t n) {
  std::vector<Vertex> ids;
  std::istringstream all{std::string(text)};
  std::size_t lineno = 0;
  std::vector<long long> nums;
  for (std::string line; std::getline(all, line);) {
    ++lineno;
    if (detail::blank(line)) continue;
    if (line[line.find_first_not_of(" \t")] == 'c') continue;
    std::istringstream in(line);
    if (!detail::read_ints(in, 1, nums)) throw ParseError(lineno, "expected a vertex id");
    if (nums[0] < 1 || nums[0] > static_cast<long long>(n))
      throw ParseError(lineno, "vertex " + std::to_string(nums[0]) + " outside [1, " + std::to_string(n) + "]");
    auto v = static_cast<Vertex>(nums[0] - 1);
    if (std::find(ids.begin(), ids.end(), v) != ids.end()) throw ParseError(lineno, "vertex listed twice");
    ids.push_back(v);
  }
  return VertexSet(std::move(ids));
}

inline std::string write_solution(const Graph& g, const VertexSet& s) {
  auto pos = compact_ids(g);
  std::ostringstream out;
  for (Vertex v : s) {
    if (!g.contains(v)) throw GraphError("write_solution: unknown vertex " + std::to_string(v));
    out << pos[v] + 1 << '\n';
  }
  return out.str();
}

}  // namespace mmfvs
