#pragma once

#include <chrono>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mmfvs/approx.hpp"
#include "mmfvs/k_solver.hpp"
#include "mmfvs/oracle.hpp"
#include "mmfvs/ppt.hpp"
#include "mmfvs/vc_solver.hpp"
#include "mmfvs/verify.hpp"

namespace mmfvs {

enum class Algorithm { bruteforce, k_solver, vc_solver, approx, ppt_check };

inline const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::bruteforce: return "bruteforce";
    case Algorithm::k_solver: return "k-solver";
    case Algorithm::vc_solver: return "vc-solver";
    case Algorithm::approx: return "approx";
    case Algorithm::ppt_check: return "ppt-check";
  }
  return "?";
}

inline Algorithm parse_algorithm(const std::string& name) {
  for (auto a : {Algorithm::bruteforce, Algorithm::k_solver, Algorithm::vc_solver, Algorithm::approx, Algorithm::ppt_check})
    if (name == to_string(a)) return a;
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

struct NamedInstance {
  std::string name;
  Graph graph;
};

struct BatchParams {
  // decision mode when set; optimisation otherwise (k-solver, bruteforce)
  std::optional<int> k;
  double epsilon = 0.5;
  std::optional<std::chrono::duration<double>> timeout;
  // threads inside one solver call
  unsigned solver_threads = 1;
  // instances solved concurrently
  unsigned workers = 1;
  std::size_t oracle_cap = default_oracle_cap;
  bool timing = false;
};

struct RunRecord {
  std::string instance;
  std::string algorithm;
  std::optional<int> k;
  std::optional<double> epsilon;
  // yes, no, solved, equivalent, not-equivalent, timeout, error
  std::string outcome;
  std::optional<std::size_t> solution_size;
  // verified, failed, none
  std::string verification = "none";
  nlohmann::json stats = nlohmann::json::object();
  std::optional<double> wall_ms;
  std::string error;
  std::optional<VertexSet> solution;
};

inline nlohmann::json to_json(const RunRecord& r) {
  nlohmann::json j;
  j["instance"] = r.instance;
  j["algorithm"] = r.algorithm;
  if (r.k) j["k"] = *r.k;
  if (r.epsilon) j["epsilon"] = *r.epsilon;
  j["outcome"] = r.outcome;
  if (r.solution_size) j["solution_size"] = *r.solution_size;
  j["verification"] = r.verification;
  j["stats"] = r.stats;
  if (r.wall_ms) j["wall_ms"] = *r.wall_ms;
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

namespace detail {

inline nlohmann::json search_stats(const SolveReport& r) {
  return {{"nodes_explored", r.nodes_explored},
          {"max_depth", r.max_depth},
          {"prune_pendants", r.reductions.prune_pendants},
          {"force_w2_cycles", r.reductions.force_w2_cycles},
          {"merge_degree_two", r.reductions.merge_degree_two},
          {"completions_tried", r.completions_tried},
          {"completions_failed", r.completions_failed},
          {"continuation_nodes", r.continuation_nodes},
          {"parent_inside_branch", r.parent_inside_branch}};
}

inline nlohmann::json vc_stats(const VcStats& s) {
  return {{"c_in_guesses", s.c_in_guesses},
          {"rejected_c_out_cycle", s.rejected_c_out_cycle},
          {"rejected_c_in_minimality", s.rejected_c_in_minimality},
          {"find_z_absent", s.find_z_absent},
          {"guess_rejected_at_verify", s.guess_rejected_at_verify},
          {"selection_cap_hits", s.selection_cap_hits},
          {"max_q", s.max_q}};
}

inline nlohmann::json approx_stats(const ApproxResult& r) {
  nlohmann::json hist = nlohmann::json::object();
  for (auto [size, count] : r.stats.conflict_histogram) hist[std::to_string(size)] = count;
  return {{"mode", to_string(r.mode)},
          {"vc", r.vc},
          {"threshold", r.threshold},
          {"guesses", r.stats.guesses},
          {"guesses_inconsistent", r.stats.guesses_inconsistent},
          {"guesses_abandoned", r.stats.guesses_abandoned},
          {"guess_rejected_at_verify", r.stats.guess_rejected_at_verify},
          {"max_moved", r.stats.max_moved},
          {"moved_over_vc", r.stats.moved_over_vc},
          {"fallback_used", r.stats.fallback_used},
          {"conflict_histogram", hist}};
}

inline void run_one(const NamedInstance& inst, Algorithm algo, const BatchParams& p, RunRecord& rec) {
  const Graph& g = inst.graph;
  SolveOptions so;
  so.threads = p.solver_threads;
  if (p.timeout) so.deadline = Deadline::after(*p.timeout);
  switch (algo) {
    case Algorithm::bruteforce: {
      auto res = opt_mmfvs_brute(g, p.oracle_cap);
      rec.stats["opt"] = res.opt_value;
      if (p.k) {
        rec.outcome = res.opt_value >= *p.k ? "yes" : "no";
        if (res.opt_value >= *p.k) rec.solution = res.witness;
      } else {
        rec.outcome = "solved";
        rec.solution = res.witness;
      }
      break;
    }
    case Algorithm::k_solver: {
      if (p.k) {
        auto rep = solve_k(g, *p.k, so);
        rec.outcome = to_string(rep.outcome);
        rec.stats = search_stats(rep);
        rec.stats["guesses"] = rep.guesses.size();
        if (rep.yes()) rec.solution = *rep.solution;
      } else {
        auto res = opt_exact(g, so);
        rec.outcome = "solved";
        rec.stats["nodes_explored"] = res.nodes_explored;
        rec.solution = res.witness;
      }
      break;
    }
    case Algorithm::vc_solver: {
      VcOptions vo;
      vo.deadline = so.deadline;
      vo.threads = so.threads;
      auto rep = solve_vc(g, vo);
      rec.outcome = "solved";
      rec.stats = vc_stats(rep.stats);
      rec.stats["vc"] = rep.cover.size();
      rec.solution = rep.solution;
      break;
    }
    case Algorithm::approx: {
      rec.epsilon = p.epsilon;
      auto res = approx_solve(g, p.epsilon, so);
      rec.outcome = "solved";
      rec.stats = approx_stats(res);
      rec.solution = res.solution;
      if (g.order() <= p.oracle_cap) {
        int opt = opt_mmfvs_brute(g, p.oracle_cap).opt_value;
        rec.stats["opt"] = opt;
        rec.stats["ratio"] = opt == 0 ? 1.0 : static_cast<double>(res.solution.size()) / opt;
      }
      break;
    }
    case Algorithm::ppt_check: {
      std::vector<int> ks;
      if (p.k) ks.push_back(*p.k);
      else
        for (int k = 0; k <= static_cast<int>(g.order()); ++k) ks.push_back(k);
      bool all = true;
      nlohmann::json per_k = nlohmann::json::array();
      for (int k : ks) {
        so.deadline.check();
        auto c = ppt_check(g, k, p.oracle_cap);
        all = all && c.equivalent;
        per_k.push_back({{"k", k}, {"k_prime", c.k_prime}, {"mmvc_opt", c.mmvc_opt}, {"mmfvs_opt", c.mmfvs_opt}});
      }
      rec.stats["checks"] = per_k;
      rec.outcome = all ? "equivalent" : "not-equivalent";
      break;
    }
  }
  if (rec.solution) {
    rec.solution_size = rec.solution->size();
    if (is_minimal_fvs(g, *rec.solution)) {
      rec.verification = "verified";
    } else {
      rec.verification = "failed";
      rec.error = "solution failed minimal fvs verification";
      rec.outcome = "error";
    }
  }
}

}  // namespace detail

// Records come back in instance order whatever the worker count.
inline std::vector<RunRecord> run_batch(const std::vector<NamedInstance>& instances, Algorithm algo, const BatchParams& p) {
  std::vector<RunRecord> out(instances.size());
  parallel_for(instances.size(), p.workers, [&](std::size_t i) {
    RunRecord& rec = out[i];
    rec.instance = instances[i].name;
    rec.algorithm = to_string(algo);
    rec.k = p.k;
    auto t0 = std::chrono::steady_clock::now();
    try {
      detail::run_one(instances[i], algo, p, rec);
    } catch (const TimeoutError& e) {
      rec.outcome = "timeout";
      rec.error = e.what();
      rec.solution.reset();
    } catch (const std::exception& e) {
      rec.outcome = "error";
      rec.error = e.what();
      rec.solution.reset();
    }
    if (p.timing) rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  });
  return out;
}

inline std::string to_jsonl(const std::vector<RunRecord>& records) {
  std::string out;
  for (const auto& r : records) out += to_json(r).dump() + '\n';
  return out;
}

inline std::string summary_table(const std::vector<RunRecord>& records) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-28s %-11s %-15s %6s %-9s\n", "instance", "algorithm", "outcome", "size", "verified");
  out << line;
  std::map<std::string, std::size_t> by_outcome;
  for (const auto& r : records) {
    std::string size = r.solution_size ? std::to_string(*r.solution_size) : "-";
    std::snprintf(line, sizeof line, "%-28s %-11s %-15s %6s %-9s\n", r.instance.c_str(), r.algorithm.c_str(), r.outcome.c_str(),
                  size.c_str(), r.verification.c_str());
    out << line;
    ++by_outcome[r.outcome];
  }
  out << records.size() << " instances:";
  for (const auto& [outcome, count] : by_outcome) out << ' ' << outcome << '=' << count;
  out << '\n';
  return out.str();
}

}  // namespace mmfvs
