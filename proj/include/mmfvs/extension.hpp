#pragma once

#include <chrono>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mmfvs/deadline.hpp"
#include "mmfvs/graph.hpp"
#include "mmfvs/verify.hpp"

namespace mmfvs {

enum class Outcome { no, yes };

inline const char* to_string(Outcome o) { return o == Outcome::yes ? "yes" : "no"; }

struct ReductionCounts {
  std::uint64_t prune_pendants = 0;
  std::uint64_t force_w2_cycles = 0;
  std::uint64_t merge_degree_two = 0;
};

struct SolveReport {
  Outcome outcome = Outcome::no;
  std::optional<VertexSet> solution;
  std::uint64_t nodes_explored = 0;
  ReductionCounts reductions;
  std::uint32_t max_depth = 0;
  std::chrono::nanoseconds wall_time{0};

  int root_measure = 0;
  std::uint64_t leaf_two_w2 = 0;
  std::uint64_t degree_two_parent = 0;
  std::uint64_t parent_off_w2 = 0;
  std::uint64_t parent_on_w2 = 0;
  std::uint64_t parent_inside_branch = 0;
  std::uint64_t pruned_minimality = 0;
  std::uint64_t pruned_w2_cycle = 0;
  std::uint64_t completions_tried = 0;
  std::uint64_t completions_failed = 0;
  std::uint64_t lift_cap_hits = 0;
  // nodes entered with k <= 0 after a failed completion higher up
  std::uint64_t continuation_nodes = 0;
  // degree-two parent nodes whose other neighbour is not in w2; never observed so far
  std::uint64_t degree_two_parent_shared_in_h = 0;

  bool yes() const { return outcome == Outcome::yes; }
};

inline void accumulate(SolveReport& into, const SolveReport& from) {
  into.nodes_explored += from.nodes_explored;
  into.reductions.prune_pendants += from.reductions.prune_pendants;
  into.reductions.force_w2_cycles += from.reductions.force_w2_cycles;
  into.reductions.merge_degree_two += from.reductions.merge_degree_two;
  into.max_depth = std::max(into.max_depth, from.max_depth);
  into.leaf_two_w2 += from.leaf_two_w2;
  into.degree_two_parent += from.degree_two_parent;
  into.parent_off_w2 += from.parent_off_w2;
  into.parent_on_w2 += from.parent_on_w2;
  into.parent_inside_branch += from.parent_inside_branch;
  into.pruned_minimality += from.pruned_minimality;
  into.pruned_w2_cycle += from.pruned_w2_cycle;
  into.completions_tried += from.completions_tried;
  into.completions_failed += from.completions_failed;
  into.lift_cap_hits += from.lift_cap_hits;
  into.continuation_nodes += from.continuation_nodes;
  into.degree_two_parent_shared_in_h += from.degree_two_parent_shared_in_h;
}

// Everything needed to turn a state of the reduced search back into a vertex
// set of the input graph.
struct LiftLog {
  std::shared_ptr<const Graph> original;
  VertexSet original_w1;
  VertexSet original_w2;
  int original_k = 0;
  // One slot per vertex committed inside; exactly one member of each slot is
  // in the lifted solution.
  std::vector<std::vector<Vertex>> inside;
  // Original vertices dropped as pendant material; never in the solution.
  std::vector<Vertex> outside;
  // Working vertex -> original vertices folded into it by contractions.
  std::map<Vertex, std::vector<Vertex>> merged;
  std::vector<Merge> merges;
};

// The working graph g is the input graph minus every vertex committed inside,
// so all degree conditions below read as "in G - W1".
struct ExtensionInstance {
  Graph g;
  VertexSet w1;
  VertexSet w2;
  int k = 0;
  LiftLog lift;
};

struct ExtensionOptions {
  Deadline deadline;
  std::size_t lift_leaf_cap = 4096;
};

inline ExtensionInstance make_extension_instance(const Graph& g, const VertexSet& w1, const VertexSet& w2, int k) {
  for (const auto* s : {&w1, &w2})
    for (Vertex v : *s)
      if (!g.contains(v)) throw std::invalid_argument("extension instance: unknown vertex " + std::to_string(v));
  if (!disjoint(w1, w2)) throw std::invalid_argument("extension instance: w1 and w2 overlap");
  if (!is_fvs(g, set_union(w1, w2)))
    throw std::invalid_argument("extension instance: w1 + w2 is not a feedback vertex set");
  ExtensionInstance inst;
  inst.lift.original = std::make_shared<const Graph>(g);
  inst.lift.original_w1 = w1;
  inst.lift.original_w2 = w2;
  inst.lift.original_k = k;
  for (Vertex v : w1) inst.lift.inside.push_back({v});
  inst.g = remove(g, w1);
  inst.w1 = w1;
  inst.w2 = w2;
  inst.k = k;
  return inst;
}

namespace detail {

// components of g[w2], and whether g[w2] is acyclic
inline std::pair<int, bool> w2_structure(const ExtensionInstance& inst) {
  DisjointSets ds(inst.g.id_bound());
  int comps = static_cast<int>(inst.w2.size());
  bool acyclic = true;
  for (Vertex u : inst.w2)
    for (Vertex v : inst.g.neighbors(u)) {
      if (v <= u || !inst.w2.contains(v)) continue;
      if (ds.unite(u, v)) --comps; else acyclic = false;
    }
  return {comps, acyclic};
}

}  // namespace detail

inline int gamma(const ExtensionInstance& inst) { return detail::w2_structure(inst).first; }
inline int measure(const ExtensionInstance& inst) { return inst.k + gamma(inst); }

inline std::vector<Vertex> bag(const ExtensionInstance& inst, Vertex v) {
  auto it = inst.lift.merged.find(v);
  if (it == inst.lift.merged.end()) return {v};
  return it->second;
}

inline void commit_inside(ExtensionInstance& inst, Vertex v, const std::vector<Vertex>& twin = {}) {
  auto slot = bag(inst, v);
  slot.insert(slot.end(), twin.begin(), twin.end());
  std::sort(slot.begin(), slot.end());
  inst.lift.inside.push_back(std::move(slot));
  inst.lift.merged.erase(v);
  inst.g.remove_vertex(v);
  inst.w1.insert(v);
  inst.k -= 1;
}

inline std::size_t apply_prune_pendants(ExtensionInstance& inst) {
  std::size_t fired = 0;
  std::vector<Vertex> stack;
  for (Vertex v : inst.g.vertex_list())
    if (inst.g.degree(v) <= 1) stack.push_back(v);
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    if (!inst.g.contains(v) || inst.g.degree(v) > 1) continue;
    std::vector<Vertex> nb(inst.g.neighbors(v).begin(), inst.g.neighbors(v).end());
    auto members = bag(inst, v);
    inst.lift.outside.insert(inst.lift.outside.end(), members.begin(), members.end());
    inst.lift.merged.erase(v);
    inst.g.remove_vertex(v);
    inst.w2.erase(v);
    ++fired;
    for (Vertex w : nb)
      if (inst.g.degree(w) <= 1) stack.push_back(w);
  }
  return fired;
}

inline std::size_t apply_force_w2_cycles(ExtensionInstance& inst) {
  detail::DisjointSets ds(inst.g.id_bound());
  for (Vertex u : inst.w2)
    for (Vertex v : inst.g.neighbors(u))
      if (u < v && inst.w2.contains(v)) ds.unite(u, v);
  std::vector<Vertex> forced;
  for (Vertex v : inst.g.vertex_list()) {
    if (inst.w2.contains(v)) continue;
    std::vector<std::uint32_t> roots;
    for (Vertex w : inst.g.neighbors(v)) {
      if (!inst.w2.contains(w)) continue;
      auto r = ds.find(w);
      if (std::find(roots.begin(), roots.end(), r) != roots.end()) {
        forced.push_back(v);
        break;
      }
      roots.push_back(r);
    }
  }
  for (Vertex v : forced) commit_inside(inst, v);
  return forced.size();
}

inline std::size_t apply_merge_degree_two(ExtensionInstance& inst) {
  std::size_t fired = 0;
  auto eligible = [&](Vertex x) { return !inst.w2.contains(x) && inst.g.degree(x) == 2; };
  for (bool again = true; again;) {
    again = false;
    for (Vertex u : inst.g.vertex_list()) {
      if (!inst.g.contains(u) || !eligible(u)) continue;
      auto nu = inst.g.neighbors(u);
      for (Vertex v : std::vector<Vertex>(nu.begin(), nu.end())) {
        if (!eligible(v)) continue;
        auto a = inst.g.neighbors(u);
        auto b = inst.g.neighbors(v);
        std::vector<Vertex> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        if (!common.empty()) continue;
        auto bu = bag(inst, u);
        auto bv = bag(inst, v);
        Merge m = inst.g.contract_edge(u, v);
        bu.insert(bu.end(), bv.begin(), bv.end());
        std::sort(bu.begin(), bu.end());
        inst.lift.merged.erase(m.absorbed);
        inst.lift.merged[m.merged] = std::move(bu);
        inst.lift.merges.push_back(m);
        ++fired;
        again = true;
        break;
      }
    }
  }
  return fired;
}

inline ExtensionInstance reduce_prune_pendants(ExtensionInstance inst) {
  apply_prune_pendants(inst);
  return inst;
}

inline ExtensionInstance reduce_force_w2_cycles(ExtensionInstance inst) {
  apply_force_w2_cycles(inst);
  return inst;
}

inline ExtensionInstance reduce_merge_degree_two(ExtensionInstance inst) {
  apply_merge_degree_two(inst);
  return inst;
}

inline void reduce_exhaustively(ExtensionInstance& inst, ReductionCounts& counts) {
  while (true) {
    auto a = apply_prune_pendants(inst);
    auto b = apply_force_w2_cycles(inst);
    auto c = apply_merge_degree_two(inst);
    counts.prune_pendants += a;
    counts.force_w2_cycles += b;
    counts.merge_degree_two += c;
    if (a + b + c == 0) return;
  }
}

namespace detail {

// Necessary condition for the committed slots to extend to a minimal fvs of
// the original graph: single-member slots are fixed in the solution and need a
// private cycle; a multi-member slot needs some member on a cycle avoiding the
// fixed vertices.
inline bool slots_admissible(const Graph& g0, const std::vector<std::vector<Vertex>>& slots) {
  std::vector<char> removed(g0.id_bound(), 0);
  for (const auto& s : slots)
    if (s.size() == 1) removed[s[0]] = 1;
  auto rem = remainder_forest(g0, removed);
  for (const auto& s : slots) {
    if (s.size() == 1) {
      if (!closes_cycle(g0, s[0], removed, rem.sets)) return false;
      continue;
    }
    bool any = false;
    for (Vertex p : s) {
      removed[p] = 1;
      auto without = remainder_forest(g0, removed);
      any = closes_cycle(g0, p, removed, without.sets);
      removed[p] = 0;
      if (any) break;
    }
    if (!any) return false;
  }
  return true;
}

class SlotLifter {
 public:
  SlotLifter(const Graph& g0, std::vector<std::vector<Vertex>> slots, std::size_t cap)
      : g0_(g0), slots_(std::move(slots)), budget_(cap) {
    for (std::size_t i = 0; i < slots_.size(); ++i)
      if (slots_[i].size() > 1) open_.push_back(i);
  }

  std::optional<VertexSet> run() { return choose(0); }
  bool exhausted() const { return exhausted_; }

 private:
  std::optional<VertexSet> choose(std::size_t i) {
    if (i == open_.size()) {
      std::vector<Vertex> s;
      for (const auto& slot : slots_) s.push_back(slot[0]);
      VertexSet set(std::move(s));
      if (set.size() == slots_.size() && minimal_fvs_holds(g0_, set)) return set;
      return std::nullopt;
    }
    auto options = slots_[open_[i]];
    for (Vertex p : options) {
      if (budget_ == 0) {
        exhausted_ = true;
        break;
      }
      --budget_;
      slots_[open_[i]] = {p};
      if (slots_admissible(g0_, slots_))
        if (auto r = choose(i + 1)) return r;
    }
    slots_[open_[i]] = options;
    return std::nullopt;
  }

  const Graph& g0_;
  std::vector<std::vector<Vertex>> slots_;
  std::vector<std::size_t> open_;
  std::size_t budget_;
  bool exhausted_ = false;
};

class ExtensionSearch {
 public:
  ExtensionSearch(const ExtensionOptions& opt, SolveReport& rep) : opt_(opt), rep_(rep) {}

  std::optional<VertexSet> visit(ExtensionInstance inst, std::uint32_t depth) {
    opt_.deadline.check();
    ++rep_.nodes_explored;
    if (inst.k <= 0 && depth > 0) ++rep_.continuation_nodes;
    rep_.max_depth = std::max(rep_.max_depth, depth);
    if (!w2_structure(inst).second) {
      ++rep_.pruned_w2_cycle;
      return std::nullopt;
    }
    reduce_exhaustively(inst, rep_.reductions);
    const Graph& g0 = *inst.lift.original;
    if (!slots_admissible(g0, inst.lift.inside)) {
      ++rep_.pruned_minimality;
      return std::nullopt;
    }
    if (inst.k <= 0)
      if (auto w = complete(inst)) return w;

    auto leaf = deepest_leaf(inst);
    if (!leaf) return std::nullopt;
    auto [v, parent] = *leaf;
    const Graph& g = inst.g;
    int in_w2 = 0;
    for (Vertex w : g.neighbors(v)) in_w2 += inst.w2.contains(w);

    if (in_w2 >= 2) {
      ++rep_.leaf_two_w2;
      return branch(inst, depth, v, std::nullopt, {v});
    }
    if (in_w2 != 1 || parent == none)
      throw std::logic_error("extension search: reduced instance has a leaf of degree below two");
    Vertex p = parent;
    if (g.degree(p) == 2) {
      ++rep_.degree_two_parent;
      for (Vertex w : g.neighbors(p))
        if (w != v && !inst.w2.contains(w)) ++rep_.degree_two_parent_shared_in_h;
      ExtensionInstance child = inst;
      commit_inside(child, v, bag(inst, p));
      child.w2.insert(p);
      return visit(std::move(child), depth + 1);
    }
    bool p_touches_w2 = false;
    for (Vertex w : g.neighbors(p)) p_touches_w2 |= inst.w2.contains(w);
    if (!p_touches_w2) {
      ++rep_.parent_off_w2;
      Vertex sibling = none;
      for (Vertex w : g.neighbors(p))
        if (w != v && w != parent_of_[p]) {
          sibling = w;
          break;
        }
      if (sibling == none) throw std::logic_error("extension search: branching vertex without sibling");
      if (auto r = branch(inst, depth, v, sibling, {v, sibling, p})) return r;
      // Swapping p for some of its children can break a private cycle of an
      // inside vertex adjacent to those children, so p itself must be tried.
      if (!inside_touches_children(inst, p)) return std::nullopt;
      ++rep_.parent_inside_branch;
      ExtensionInstance child = inst;
      commit_inside(child, p);
      return visit(std::move(child), depth + 1);
    }
    ++rep_.parent_on_w2;
    return branch(inst, depth, v, p, {v, p});
  }

 private:
  static constexpr Vertex none = static_cast<Vertex>(-1);

  // One or two "inside" children followed by one "outside" child.
  std::optional<VertexSet> branch(const ExtensionInstance& inst, std::uint32_t depth, Vertex first,
                                  std::optional<Vertex> second, std::initializer_list<Vertex> outside) {
    for (auto in : {std::optional<Vertex>(first), second}) {
      if (!in) continue;
      ExtensionInstance child = inst;
      commit_inside(child, *in);
      if (auto r = visit(std::move(child), depth + 1)) return r;
    }
    ExtensionInstance child = inst;
    for (Vertex x : outside) child.w2.insert(x);
    return visit(std::move(child), depth + 1);
  }

  bool inside_touches_children(const ExtensionInstance& inst, Vertex p) const {
    const Graph& g0 = *inst.lift.original;
    std::vector<char> inside(g0.id_bound(), 0);
    for (const auto& slot : inst.lift.inside)
      for (Vertex x : slot) inside[x] = 1;
    for (Vertex c : inst.g.neighbors(p)) {
      if (c == parent_of_[p]) continue;
      for (Vertex m : bag(inst, c))
        for (Vertex y : g0.neighbors(m))
          if (inside[y]) return true;
    }
    return false;
  }

  std::optional<std::pair<Vertex, Vertex>> deepest_leaf(const ExtensionInstance& inst) {
    const Graph& g = inst.g;
    const std::size_t bound = g.id_bound();
    parent_of_.assign(bound, none);
    std::vector<std::uint32_t> depth(bound, 0);
    std::vector<char> seen(bound, 0), has_child(bound, 0);
    std::optional<std::pair<Vertex, Vertex>> best;
    std::uint32_t best_depth = 0;
    std::vector<Vertex> order;
    for (Vertex r : g.vertex_list()) {
      if (inst.w2.contains(r) || seen[r]) continue;
      order.assign(1, r);
      seen[r] = 1;
      for (std::size_t i = 0; i < order.size(); ++i) {
        Vertex x = order[i];
        for (Vertex y : g.neighbors(x)) {
          if (inst.w2.contains(y) || seen[y]) continue;
          seen[y] = 1;
          parent_of_[y] = x;
          depth[y] = depth[x] + 1;
          has_child[x] = 1;
          order.push_back(y);
        }
      }
      for (Vertex x : order) {
        if (has_child[x]) continue;
        if (!best || depth[x] > best_depth || (depth[x] == best_depth && x < best->first)) {
          best = std::make_pair(x, parent_of_[x]);
          best_depth = depth[x];
        }
      }
    }
    return best;
  }

  // k <= 0: add a greedy minimal completion from the remaining forest part and
  // try to realise the whole thing on the original graph.
  std::optional<VertexSet> complete(const ExtensionInstance& inst) {
    ++rep_.completions_tried;
    const Graph& g = inst.g;
    std::vector<char> in(g.id_bound(), 0);
    std::vector<Vertex> picked;
    {
      std::vector<char> none_removed(g.id_bound(), 0);
      for (Vertex v : g.vertex_list()) {
        if (inst.w2.contains(v)) continue;
        none_removed[v] = 1;
        auto rem = remainder_forest(g, none_removed);
        if (closes_cycle(g, v, none_removed, rem.sets)) {
          in[v] = 1;
          picked.push_back(v);
        }
        none_removed[v] = 0;
      }
    }
    for (auto it = picked.rbegin(); it != picked.rend(); ++it) {
      in[*it] = 0;
      if (!remainder_forest(g, in).acyclic) in[*it] = 1;
    }
    auto slots = inst.lift.inside;
    for (Vertex v : picked)
      if (in[v]) slots.push_back(bag(inst, v));
    SlotLifter lifter(*inst.lift.original, std::move(slots), opt_.lift_leaf_cap);
    auto w = lifter.run();
    if (lifter.exhausted()) ++rep_.lift_cap_hits;
    if (!w) ++rep_.completions_failed;
    return w;
  }

  const ExtensionOptions& opt_;
  SolveReport& rep_;
  std::vector<Vertex> parent_of_;
};

}  // namespace detail

inline SolveReport solve_extension(ExtensionInstance inst, const ExtensionOptions& opt = {}) {
  auto t0 = std::chrono::steady_clock::now();
  SolveReport rep;
  rep.root_measure = measure(inst);
  auto lift = inst.lift;
  detail::ExtensionSearch search(opt, rep);
  auto w = search.visit(std::move(inst), 0);
  if (w) {
    const Graph& g0 = *lift.original;
    bool ok = minimal_fvs_holds(g0, *w) && is_subset(lift.original_w1, *w) && disjoint(*w, lift.original_w2) &&
              static_cast<long>(w->size()) - static_cast<long>(lift.original_w1.size()) >= lift.original_k;
    if (!ok) throw std::logic_error("extension search produced an invalid witness");
    rep.outcome = Outcome::yes;
    rep.solution = std::move(w);
  }
  rep.wall_time = std::chrono::steady_clock::now() - t0;
  return rep;
}

inline SolveReport solve_extension(const Graph& g, const VertexSet& w1, const VertexSet& w2, int k,
                                   const ExtensionOptions& opt = {}) {
  return solve_extension(make_extension_instance(g, w1, w2, k), opt);
}

}  // namespace mmfvs
