#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mmfvs/batch.hpp"
#include "mmfvs/generate.hpp"
#include "mmfvs/io.hpp"
#include "mmfvs/ppt.hpp"

namespace fs = std::filesystem;
using namespace mmfvs;

namespace {

constexpr int exit_yes = 0;
constexpr int exit_no = 1;
constexpr int exit_error = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

// "n=10,p=0.3"
Params parse_params(const std::string& text) {
  Params p;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("parameter '" + item + "' is not key=value");
    std::size_t used = 0;
    std::string value = item.substr(eq + 1);
    double x = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("parameter '" + item + "' has a non-numeric value");
    p[item.substr(0, eq)] = x;
  }
  return p;
}

struct SolveArgs {
  std::string instance;
  std::string algo = "k-solver";
  std::optional<int> k;
  double epsilon = 0.5;
  double timeout = 0;
  unsigned threads = 1;
  std::string output;
  bool timing = false;
};

BatchParams batch_params(std::optional<int> k, double epsilon, double timeout, unsigned threads, bool timing) {
  BatchParams p;
  p.k = k;
  p.epsilon = epsilon;
  if (timeout > 0) p.timeout = std::chrono::duration<double>(timeout);
  p.solver_threads = threads;
  p.timing = timing;
  return p;
}

int run_solve(const SolveArgs& a) {
  auto inst = read_instance_file(a.instance);
  auto algo = parse_algorithm(a.algo);
  if (algo == Algorithm::approx && !(a.epsilon > 0 && a.epsilon < 1)) throw std::invalid_argument("--epsilon must lie in (0, 1)");
  auto p = batch_params(a.k, a.epsilon, a.timeout, a.threads, a.timing);
  auto rec = run_batch({{fs::path(a.instance).filename().string(), inst.graph}}, algo, p).front();
  std::cout << to_json(rec).dump() << '\n';
  if (rec.solution && !a.output.empty()) emit(write_solution(inst.graph, *rec.solution), a.output);
  if (rec.outcome == "yes" || rec.outcome == "solved" || rec.outcome == "equivalent") return exit_yes;
  if (rec.outcome == "no" || rec.outcome == "not-equivalent") return exit_no;
  std::cerr << "error: " << rec.error << '\n';
  return exit_error;
}

int run_verify(const std::string& instance, const std::string& solution, bool show_cycles) {
  auto inst = read_instance_file(instance);
  const Graph& g = inst.graph;
  auto s = parse_solution(slurp(solution), g.order());
  auto cert = is_minimal_fvs(g, s);
  if (!cert) {
    std::cout << (is_fvs(g, s) ? "not minimal: some vertex has no private cycle\n" : "not a feedback vertex set\n");
    return exit_no;
  }
  std::cout << "minimal feedback vertex set of size " << s.size() << '\n';
  if (show_cycles) {
    for (const auto& [v, cycle] : cert->cycles) {
      std::cout << v + 1 << ':';
      for (Vertex w : cycle) std::cout << ' ' << w + 1;
      std::cout << '\n';
    }
  }
  return exit_yes;
}

int run_gen(const std::string& family, const std::string& params, std::uint64_t seed, const std::string& output) {
  Graph g = generate(family, parse_params(params), seed);
  std::vector<std::string> comments{"family " + family + " params " + params + " seed " + std::to_string(seed)};
  emit(write_instance(g, "mmfvs", comments), output);
  return exit_yes;
}

int run_reduce(const std::string& instance, int k, const std::string& output) {
  if (k < 0) throw std::invalid_argument("--k must be non-negative");
  auto inst = read_instance_file(instance);
  auto r = ppt_mmvc_to_mmfvs(inst.graph, k);
  // gadget ids are already dense above the input ids, so 1-indexed output is id + 1
  std::vector<std::string> comments{
      "n " + std::to_string(r.base_n) + " k " + std::to_string(k) + " k' " + std::to_string(r.k_prime),
      "apex " + std::to_string(r.apex + 1) + " x-set " + std::to_string(r.x_set.front() + 1) + ".." +
          std::to_string(r.x_set.back() + 1) + " y " + std::to_string(r.y + 1)};
  emit(write_instance(r.graph, "mmfvs", comments), output);
  return exit_yes;
}

struct BenchArgs {
  std::string corpus;
  std::string algo = "vc-solver";
  std::optional<int> k;
  double epsilon = 0.5;
  double timeout = 0;
  unsigned threads = 1;
  unsigned workers = 1;
  std::string report;
  bool timing = false;
};

int run_bench(const BenchArgs& a) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(a.corpus))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<NamedInstance> instances;
  std::vector<RunRecord> unreadable;
  for (const auto& f : files) {
    try {
      instances.push_back({f.filename().string(), read_instance_file(f.string()).graph});
    } catch (const std::exception& e) {
      RunRecord r;
      r.instance = f.filename().string();
      r.algorithm = a.algo;
      r.outcome = "error";
      r.error = e.what();
      unreadable.push_back(r);
    }
  }
  auto p = batch_params(a.k, a.epsilon, a.timeout, a.threads, a.timing);
  p.workers = a.workers;
  auto records = run_batch(instances, parse_algorithm(a.algo), p);
  records.insert(records.end(), unreadable.begin(), unreadable.end());
  if (!a.report.empty()) emit(to_jsonl(records), a.report);
  std::cout << summary_table(records);
  bool failed = std::any_of(records.begin(), records.end(), [](const RunRecord& r) { return r.outcome == "error"; });
  return failed ? exit_error : exit_yes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum minimal feedback vertex set solvers"};
  app.require_subcommand(1);

  const std::string algos = "bruteforce, k-solver, vc-solver, approx, ppt-check";

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "Solve one instance");
  solve->add_option("instance", sa.instance, "Instance file")->required()->check(CLI::ExistingFile);
  solve->add_option("--algo", sa.algo, algos)->capture_default_str();
  solve->add_option("--k", sa.k, "Decision threshold (k-solver, bruteforce, ppt-check)");
  solve->add_option("--epsilon", sa.epsilon, "Approximation parameter in (0, 1)")->capture_default_str();
  solve->add_option("--timeout", sa.timeout, "Seconds; 0 means none");
  solve->add_option("--threads", sa.threads, "Solver threads")->check(CLI::PositiveNumber);
  solve->add_option("-o,--output", sa.output, "Write the solution here");
  solve->add_flag("--timing", sa.timing, "Include wall time in the record");

  std::string v_instance, v_solution;
  bool v_cycles = false;
  auto* verify = app.add_subcommand("verify", "Check that a solution is a minimal feedback vertex set");
  verify->add_option("instance", v_instance, "Instance file")->required()->check(CLI::ExistingFile);
  verify->add_option("solution", v_solution, "Solution file")->required()->check(CLI::ExistingFile);
  verify->add_flag("--cycles", v_cycles, "Print a private cycle for every solution vertex");

  std::string g_family, g_params, g_output;
  std::uint64_t g_seed = 0;
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("--family", g_family, "gnp, cycle, complete, apex-pair, disjoint-cycles, reduction-output")->required();
  gen->add_option("--params", g_params, "Comma separated key=value, e.g. n=10,p=0.3");
  gen->add_option("--seed", g_seed, "RNG seed")->capture_default_str();
  gen->add_option("-o,--output", g_output, "Output file (default stdout)");

  std::string r_instance, r_output;
  int r_k = 0;
  auto* reduce = app.add_subcommand("reduce-ppt", "Transform a max min vertex cover instance into a max min fvs instance");
  reduce->add_option("instance", r_instance, "Instance file")->required()->check(CLI::ExistingFile);
  reduce->add_option("--k", r_k, "Vertex cover threshold")->required();
  reduce->add_option("-o,--output", r_output, "Output file (default stdout)");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Run an algorithm over every instance in a directory");
  bench->add_option("--corpus", ba.corpus, "Directory of instance files")->required()->check(CLI::ExistingDirectory);
  bench->add_option("--algo", ba.algo, algos)->capture_default_str();
  bench->add_option("--k", ba.k, "Decision threshold");
  bench->add_option("--epsilon", ba.epsilon, "Approximation parameter")->capture_default_str();
  bench->add_option("--timeout", ba.timeout, "Seconds per instance; 0 means none");
  bench->add_option("--threads", ba.threads, "Solver threads")->check(CLI::PositiveNumber);
  bench->add_option("--workers", ba.workers, "Instances in parallel")->check(CLI::PositiveNumber);
  bench->add_option("--report", ba.report, "JSON lines report file");
  bench->add_flag("--timing", ba.timing, "Include wall times in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_error;
  }

  try {
    if (*solve) return run_solve(sa);
    if (*verify) return run_verify(v_instance, v_solution, v_cycles);
    if (*gen) return run_gen(g_family, g_params, g_seed, g_output);
    if (*reduce) return run_reduce(r_instance, r_k, r_output);
    if (*bench) return run_bench(ba);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_error;
  }
  return exit_error;
}
