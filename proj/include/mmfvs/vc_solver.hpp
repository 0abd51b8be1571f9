#pragma once

#include <bit>
#include <chrono>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "mmfvs/deadline.hpp"
#include "mmfvs/graph.hpp"
#include "mmfvs/parallel.hpp"
#include "mmfvs/verify.hpp"

namespace mmfvs {

struct VcStats {
  std::uint64_t c_in_guesses = 0;
  std::uint64_t rejected_c_out_cycle = 0;
  std::uint64_t rejected_c_in_minimality = 0;
  std::uint64_t find_z_absent = 0;
  std::uint64_t guess_rejected_at_verify = 0;
  std::uint64_t part_partitions = 0;
  std::uint64_t sub_partitions = 0;
  std::uint64_t cross_structures = 0;
  std::uint64_t feasible_options = 0;
  std::uint64_t selections_tried = 0;
  std::uint64_t selection_cap_hits = 0;
  // largest per-C_in count of part partitions + sub-partitions + cross structures
  std::uint64_t max_structures_per_guess = 0;
  int max_q = 0;
  std::uint64_t optimum_beyond_vc = 0;

  void add(const VcStats& o) {
    c_in_guesses += o.c_in_guesses;
    rejected_c_out_cycle += o.rejected_c_out_cycle;
    rejected_c_in_minimality += o.rejected_c_in_minimality;
    find_z_absent += o.find_z_absent;
    guess_rejected_at_verify += o.guess_rejected_at_verify;
    part_partitions += o.part_partitions;
    sub_partitions += o.sub_partitions;
    cross_structures += o.cross_structures;
    feasible_options += o.feasible_options;
    selections_tried += o.selections_tried;
    selection_cap_hits += o.selection_cap_hits;
    max_structures_per_guess = std::max(max_structures_per_guess, o.max_structures_per_guess);
    max_q = std::max(max_q, o.max_q);
    optimum_beyond_vc += o.optimum_beyond_vc;
  }
};

// Components are indices into `components`; blocks and parts list component indices.
struct GuessState {
  VertexSet c_in;
  VertexSet c_out;
  std::vector<VertexSet> components;
  std::vector<std::vector<int>> comp_partition;
  std::vector<std::vector<std::vector<int>>> sub_partitions;
  // per part: (block, parent block) for every non-root block
  std::vector<std::vector<std::pair<int, int>>> cross_edges;
  std::vector<std::vector<Vertex>> z_assignment;
};

struct FindZResult {
  VertexSet z;
  VertexSet forced;
  VertexSet deleted;
  // surviving independent-set vertices outside Z; they join the solution
  VertexSet kept;
  GuessState guess;
};

struct VcOptions {
  Deadline deadline;
  unsigned threads = 1;
  std::size_t selection_cap = 1 << 16;
};

namespace detail {

// Restricted-growth strings of length n; f(rgs, blocks).
template <class F>
void for_each_set_partition(int n, F&& f) {
  if (n == 0) {
    f(std::vector<int>{}, 0);
    return;
  }
  std::vector<int> a(n, 0);
  while (true) {
    int blocks = *std::max_element(a.begin(), a.end()) + 1;
    f(a, blocks);
    int i = n - 1;
    for (; i >= 1; --i) {
      int prefix_max = *std::max_element(a.begin(), a.begin() + i);
      if (a[i] <= prefix_max) {
        ++a[i];
        std::fill(a.begin() + i + 1, a.end(), 0);
        break;
      }
    }
    if (i < 1) return;
  }
}

using Mask = std::uint64_t;

struct PartOption {
  std::vector<Mask> blocks;
  std::vector<int> parent;  // parent[0] = -1
  std::vector<std::vector<Vertex>> candidates;
};

class ZSearch {
 public:
  ZSearch(const Graph& g, const VertexSet& c_in, const VertexSet& c_out, VcStats& stats, const VcOptions& opt)
      : g_(g), c_in_(c_in), c_out_(c_out), stats_(stats), opt_(opt) {}

  std::optional<FindZResult> run() {
    for (Vertex v : c_in_)
      if (!g_.contains(v)) throw GraphError("find_Z: unknown vertex " + std::to_string(v));
    for (Vertex v : c_out_)
      if (!g_.contains(v) || c_in_.contains(v)) throw GraphError("find_Z: bad c_out vertex " + std::to_string(v));
    if (!is_forest(induced(g_, c_out_))) return std::nullopt;
    for (Vertex v : g_.vertex_list())
      if (!c_in_.contains(v) && !c_out_.contains(v)) i_.insert(v);
    for (auto e : g_.edges())
      if (i_.contains(e.u) && i_.contains(e.v))
        throw std::invalid_argument("find_Z: c_in + c_out is not a vertex cover");

    reduce();
    comps_ = components(induced(w_, set_intersection(c_out_, w_.vertices())));
    if (comps_.size() > 63) throw std::length_error("find_Z: too many components in c_out");
    std::vector<int> comp_of(g_.id_bound(), -1);
    for (std::size_t c = 0; c < comps_.size(); ++c)
      for (Vertex v : comps_[c]) comp_of[v] = static_cast<int>(c);
    for (Vertex x : i_) {
      if (!w_.contains(x)) continue;
      Mask sig = 0;
      for (Vertex y : w_.neighbors(x)) sig |= Mask{1} << comp_of[y];
      live_.push_back(x);
      sig_.push_back(sig);
    }

    const int t = static_cast<int>(comps_.size());
    std::uint64_t structures = 0;
    for_each_set_partition(t, [&](const std::vector<int>& rgs, int q) {
      opt_.deadline.check();
      ++stats_.part_partitions;
      ++structures;
      std::vector<Mask> parts(q, 0);
      for (int c = 0; c < t; ++c) parts[rgs[c]] |= Mask{1} << c;
      for (Mask s : sig_) {
        bool ok = false;
        for (Mask p : parts) ok |= std::popcount(s & p) >= 2;
        if (!ok) return;
      }
      std::vector<const std::vector<PartOption>*> options;
      for (Mask p : parts) {
        const auto& o = part_options(p, structures);
        if (o.empty()) return;
        options.push_back(&o);
      }
      std::vector<int> min_s(q + 1, 0);
      for (int i = q - 1; i >= 0; --i)
        min_s[i] = min_s[i + 1] + static_cast<int>(options[i]->front().blocks.size());
      std::vector<const PartOption*> chosen(q);
      choose_parts(parts, options, min_s, chosen, 0, 0);
    });
    stats_.max_structures_per_guess = std::max(stats_.max_structures_per_guess, structures);
    if (best_) stats_.max_q = std::max(stats_.max_q, static_cast<int>(best_->guess.comp_partition.size()));
    return best_;
  }

 private:
  void reduce() {
    w_ = remove(g_, c_in_);
    for (bool changed = true; changed;) {
      changed = false;
      std::vector<Vertex> stack;
      for (Vertex v : w_.vertex_list())
        if (w_.degree(v) <= 1) stack.push_back(v);
      while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        if (!w_.contains(v) || w_.degree(v) > 1) continue;
        std::vector<Vertex> nb(w_.neighbors(v).begin(), w_.neighbors(v).end());
        w_.remove_vertex(v);
        deleted_.insert(v);
        changed = true;
        for (Vertex u : nb)
          if (w_.degree(u) <= 1) stack.push_back(u);
      }
      DisjointSets ds(w_.id_bound());
      for (Vertex u : c_out_) {
        if (!w_.contains(u)) continue;
        for (Vertex v : w_.neighbors(u))
          if (u < v && c_out_.contains(v)) ds.unite(u, v);
      }
      std::vector<Vertex> closing;
      for (Vertex x : i_) {
        if (!w_.contains(x)) continue;
        std::vector<std::uint32_t> roots;
        for (Vertex y : w_.neighbors(x)) {
          auto r = ds.find(y);
          if (std::find(roots.begin(), roots.end(), r) != roots.end()) {
            closing.push_back(x);
            break;
          }
          roots.push_back(r);
        }
      }
      for (Vertex x : closing) {
        w_.remove_vertex(x);
        forced_.insert(x);
        changed = true;
      }
    }
  }

  const std::vector<PartOption>& part_options(Mask part, std::uint64_t& structures) {
    auto it = memo_.find(part);
    if (it != memo_.end()) {
      structures += memo_count_[part];
      return it->second;
    }
    std::vector<PartOption> out;
    std::uint64_t counted = 0;
    std::vector<int> members;
    for (Mask m = part; m; m &= m - 1) members.push_back(std::countr_zero(m));
    std::vector<std::size_t> inside;
    for (std::size_t i = 0; i < sig_.size(); ++i)
      if ((sig_[i] & ~part) == 0) inside.push_back(i);

    if (members.size() == 1) {
      // a lone component can stay a tree on its own
      out.push_back(PartOption{{}, {}, {}});
    }
    for_each_set_partition(static_cast<int>(members.size()), [&](const std::vector<int>& rgs, int s) {
      ++stats_.sub_partitions;
      ++counted;
      std::vector<Mask> blocks(s, 0);
      for (std::size_t i = 0; i < members.size(); ++i) blocks[rgs[i]] |= Mask{1} << members[i];
      auto block_of = [&](int comp) {
        for (int b = 0; b < s; ++b)
          if (blocks[b] >> comp & 1) return b;
        return -1;
      };
      // possible parents per block, read off the candidates' extra component
      std::vector<std::vector<int>> parent_choices(s);
      bool root_ok = false;
      for (std::size_t i : inside) {
        Mask sg = sig_[i];
        if (sg == blocks[0]) root_ok = true;
        for (int b = 1; b < s; ++b) {
          if ((sg & blocks[b]) != blocks[b]) continue;
          Mask extra = sg & ~blocks[b];
          if (std::popcount(extra) != 1) continue;
          int pb = block_of(std::countr_zero(extra));
          auto& pc = parent_choices[b];
          if (std::find(pc.begin(), pc.end(), pb) == pc.end()) pc.push_back(pb);
        }
      }
      if (!root_ok) return;
      for (int b = 1; b < s; ++b) {
        if (parent_choices[b].empty()) return;
        std::sort(parent_choices[b].begin(), parent_choices[b].end());
      }
      std::vector<int> pick(s, 0);
      while (true) {
        ++stats_.cross_structures;
        ++counted;
        std::vector<int> parent(s, -1);
        for (int b = 1; b < s; ++b) parent[b] = parent_choices[b][pick[b]];
        if (reaches_root(parent)) {
          PartOption o{blocks, parent, std::vector<std::vector<Vertex>>(s)};
          for (std::size_t i : inside) {
            Mask sg = sig_[i];
            for (int b = 0; b < s; ++b) {
              if ((sg & blocks[b]) != blocks[b]) continue;
              Mask extra = sg & ~blocks[b];
              bool fits = b == 0 ? extra == 0 : (std::popcount(extra) == 1 && (extra & blocks[parent[b]]) != 0);
              if (fits) o.candidates[b].push_back(live_[i]);
            }
          }
          ++stats_.feasible_options;
          out.push_back(std::move(o));
        }
        int b = s - 1;
        for (; b >= 1; --b) {
          if (++pick[b] < static_cast<int>(parent_choices[b].size())) break;
          pick[b] = 0;
        }
        if (b < 1) break;
      }
    });
    std::stable_sort(out.begin(), out.end(),
                     [](const PartOption& a, const PartOption& b) { return a.blocks.size() < b.blocks.size(); });
    structures += counted;
    memo_count_[part] = counted;
    return memo_.emplace(part, std::move(out)).first->second;
  }

  static bool reaches_root(const std::vector<int>& parent) {
    const int s = static_cast<int>(parent.size());
    for (int b = 1; b < s; ++b) {
      int x = b;
      for (int steps = 0; x != 0; ++steps) {
        if (steps > s) return false;
        x = parent[x];
      }
    }
    return true;
  }

  void choose_parts(const std::vector<Mask>& parts, const std::vector<const std::vector<PartOption>*>& options,
                    const std::vector<int>& min_s, std::vector<const PartOption*>& chosen, std::size_t i, int used) {
    if (used + min_s[i] >= best_size_) return;
    if (i == parts.size()) {
      select(parts, chosen, used);
      return;
    }
    for (const auto& o : *options[i]) {
      int s = static_cast<int>(o.blocks.size());
      if (used + s + min_s[i + 1] >= best_size_) break;
      chosen[i] = &o;
      choose_parts(parts, options, min_s, chosen, i + 1, used + s);
    }
  }

  // Pick one candidate per block so that c_in keeps its private cycles.
  void select(const std::vector<Mask>& parts, const std::vector<const PartOption*>& chosen, int size) {
    std::vector<const std::vector<Vertex>*> lists;
    for (const auto* o : chosen)
      for (const auto& c : o->candidates) lists.push_back(&c);
    std::vector<Vertex> pick(lists.size());
    std::size_t budget = opt_.selection_cap;
    bool found = false;
    auto base_removed = solution_mask();
    for (Vertex x : live_) base_removed[x] = 1;
    for (const auto* l : lists)
      for (Vertex x : *l) base_removed[x] = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t b) {
      if (found) return;
      if (budget == 0) {
        ++stats_.selection_cap_hits;
        return;
      }
      --budget;
      ++stats_.selections_tried;
      // optimistic test: every undecided candidate still counts as outside the solution
      auto removed = base_removed;
      for (std::size_t j = 0; j < b; ++j)
        for (Vertex x : *lists[j])
          if (x != pick[j]) removed[x] = 1;
      if (!c_in_keeps_cycles(removed)) return;
      if (b == lists.size()) {
        found = true;
        return;
      }
      for (Vertex x : *lists[b]) {
        pick[b] = x;
        rec(b + 1);
        if (found) return;
      }
    };
    rec(0);
    if (!found) return;

    FindZResult res;
    res.z = VertexSet(pick);
    res.forced = forced_;
    res.deleted = deleted_;
    for (Vertex x : live_)
      if (!res.z.contains(x)) res.kept.insert(x);
    res.guess.c_in = c_in_;
    res.guess.c_out = c_out_;
    res.guess.components = comps_;
    std::size_t next = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      std::vector<int> part;
      for (Mask m = parts[i]; m; m &= m - 1) part.push_back(std::countr_zero(m));
      res.guess.comp_partition.push_back(part);
      std::vector<std::vector<int>> blocks;
      std::vector<std::pair<int, int>> cross;
      std::vector<Vertex> zs;
      const auto& o = *chosen[i];
      for (std::size_t b = 0; b < o.blocks.size(); ++b) {
        std::vector<int> blk;
        for (Mask m = o.blocks[b]; m; m &= m - 1) blk.push_back(std::countr_zero(m));
        blocks.push_back(blk);
        if (b > 0) cross.push_back({static_cast<int>(b), o.parent[b]});
        zs.push_back(pick[next++]);
      }
      res.guess.sub_partitions.push_back(blocks);
      res.guess.cross_edges.push_back(cross);
      res.guess.z_assignment.push_back(zs);
    }
    best_size_ = size;
    best_ = std::move(res);
  }

  std::vector<char> solution_mask() const {
    std::vector<char> m(g_.id_bound(), 0);
    for (Vertex v : c_in_) m[v] = 1;
    for (Vertex v : forced_) m[v] = 1;
    return m;
  }

  bool c_in_keeps_cycles(const std::vector<char>& removed) const {
    if (c_in_.empty()) return true;
    auto rem = remainder_forest(g_, removed);
    for (Vertex c : c_in_)
      if (!closes_cycle(g_, c, removed, rem.sets)) return false;
    return true;
  }

  const Graph& g_;
  const VertexSet& c_in_;
  const VertexSet& c_out_;
  VcStats& stats_;
  const VcOptions& opt_;
  VertexSet i_;
  Graph w_;
  VertexSet deleted_;
  VertexSet forced_;
  std::vector<VertexSet> comps_;
  std::vector<Vertex> live_;
  std::vector<Mask> sig_;
  std::map<Mask, std::vector<PartOption>> memo_;
  std::map<Mask, std::uint64_t> memo_count_;
  int best_size_ = std::numeric_limits<int>::max();
  std::optional<FindZResult> best_;
};

}  // namespace detail

inline std::optional<FindZResult> find_Z(const Graph& g, const VertexSet& c_in, const VertexSet& c_out,
                                         VcStats* stats = nullptr, const VcOptions& opt = {}) {
  VcStats local;
  detail::ZSearch search(g, c_in, c_out, stats ? *stats : local, opt);
  return search.run();
}

struct VcReport {
  VertexSet solution;
  VertexSet cover;
  VertexSet winning_c_in;
  std::optional<GuessState> winning_guess;
  VcStats stats;
  std::chrono::nanoseconds wall_time{0};
};

inline Graph strip_low_degree(const Graph& g) {
  Graph h = g;
  std::vector<Vertex> stack;
  for (Vertex v : h.vertex_list())
    if (h.degree(v) <= 1) stack.push_back(v);
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    if (!h.contains(v) || h.degree(v) > 1) continue;
    std::vector<Vertex> nb(h.neighbors(v).begin(), h.neighbors(v).end());
    h.remove_vertex(v);
    for (Vertex u : nb)
      if (h.degree(u) <= 1) stack.push_back(u);
  }
  return h;
}

inline VcReport solve_vc(const Graph& g, const VcOptions& opt = {}) {
  auto t0 = std::chrono::steady_clock::now();
  VcReport rep;
  Graph r = strip_low_degree(g);
  rep.cover = min_vertex_cover(r);
  const auto& cover = rep.cover.items();
  if (cover.size() > 30) throw std::length_error("solve_vc: vertex cover too large to enumerate");
  const std::size_t guesses = std::size_t{1} << cover.size();

  struct Outcome {
    std::optional<VertexSet> solution;
    std::optional<GuessState> guess;
    VcStats stats;
  };
  std::vector<Outcome> outcomes(guesses);
  parallel_for(guesses, opt.threads, [&](std::size_t mask) {
    auto& out = outcomes[mask];
    out.stats.c_in_guesses = 1;
    VertexSet c_in, c_out;
    for (std::size_t i = 0; i < cover.size(); ++i) (mask >> i & 1 ? c_in : c_out).insert(cover[i]);
    if (!is_forest(induced(r, c_out))) {
      ++out.stats.rejected_c_out_cycle;
      return;
    }
    if (!partial_minimality_ok(r, c_in, {})) {
      ++out.stats.rejected_c_in_minimality;
      return;
    }
    auto fz = find_Z(r, c_in, c_out, &out.stats, opt);
    if (!fz) {
      ++out.stats.find_z_absent;
      return;
    }
    VertexSet s = set_union(set_union(c_in, fz->forced), fz->kept);
    if (!minimal_fvs_holds(g, s)) {
      ++out.stats.guess_rejected_at_verify;
      return;
    }
    if (static_cast<int>(fz->guess.comp_partition.size()) > static_cast<int>(cover.size()))
      ++out.stats.optimum_beyond_vc;
    out.solution = std::move(s);
    out.guess = std::move(fz->guess);
  });

  bool have = false;
  for (auto& out : outcomes) {
    rep.stats.add(out.stats);
    if (!out.solution) continue;
    const auto& c_in = out.guess->c_in;
    bool better = !have || out.solution->size() > rep.solution.size() ||
                  (out.solution->size() == rep.solution.size() && c_in < rep.winning_c_in);
    if (better) {
      have = true;
      rep.solution = *out.solution;
      rep.winning_c_in = c_in;
      rep.winning_guess = out.guess;
    }
  }
  if (!have) throw std::logic_error("solve_vc: no guess produced a verified solution");
  rep.wall_time = std::chrono::steady_clock::now() - t0;
  return rep;
}

}  // namespace mmfvs
