// Command-line front end: solve / oracle / decompose / generate / bench.
// Exit codes: 0 success, 1 infeasible, 2 usage or input error, 3 timeout.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mlsb/decomposition.hpp"
#include "mlsb/errors.hpp"
#include "mlsb/exact.hpp"
#include "mlsb/heuristics.hpp"
#include "mlsb/instance_tools.hpp"
#include "mlsb/solver_outcome.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTimeout = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mlsb::ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw mlsb::ParseError("cannot write '" + path + "'");
  out << content;
}

mlsb::LabelSet parse_label_list(const std::string& csv, int universe) {
  mlsb::LabelSet set(universe);
  std::istringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const int label = std::stoi(item);
    set.insert(label);
  }
  return set;
}

template <typename Seq>
std::string join_csv(const Seq& items) {
  std::ostringstream out;
  bool first = true;
  for (const auto& item : items) {
    if (!first) out << ',';
    first = false;
    out << item;
  }
  return out.str();
}

std::string join_pairs(const std::vector<mlsb::VertexPair>& pairs) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [u, v] : pairs) {
    if (!first) out << ',';
    first = false;
    out << u << '-' << v;
  }
  return out.str();
}

int outcome_exit_code(const mlsb::SolverOutcome& outcome) {
  if (outcome.termination == mlsb::Termination::TimeLimit) return kExitTimeout;
  return outcome.feasible ? kExitOk : kExitInfeasible;
}

struct SolveOptions {
  std::string input;
  std::string mode = "mlsb";
  bool exact = false;
  bool use_mvca = false;
  bool trace = false;
  bool omit_timing = false;
  double timeout = 0.0;
  bool has_timeout = false;
};

int run_solve(const SolveOptions& opt) {
  const auto g = mlsb::load_instance(read_file(opt.input));
  const auto mode = mlsb::parse_mode(opt.mode);

  if (opt.use_mvca) {
    const auto result = mlsb::mvca(g, mode);
    if (opt.trace) {
      int iter = 0;
      for (const auto& record : result.trace.iterations) {
        std::cout << "iter=" << ++iter << " chosen=" << record.chosen_label
                  << " score=" << record.chosen_score
                  << " blocks=" << record.blocks_after
                  << " comps=" << record.comps_after << '\n';
      }
    }
    std::cout << mlsb::render_report(result.outcome, !opt.omit_timing);
    return outcome_exit_code(result.outcome);
  }

  std::optional<double> limit;
  if (opt.has_timeout) limit = opt.timeout;
  const auto outcome = mlsb::exact_solve(g, mode, limit);
  std::cout << mlsb::render_report(outcome, !opt.omit_timing);
  return outcome_exit_code(outcome);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum labelling spanning subgraph solvers (bi-connected and connected modes)"};
  app.require_subcommand(1);

  SolveOptions solve_opt;
  auto* solve = app.add_subcommand("solve", "Run the exact solver or the MVCA greedy");
  solve->add_option("--input", solve_opt.input, "instance file")->required();
  solve->add_option("--mode", solve_opt.mode, "mlsb or mlst")->required();
  auto* exact_flag = solve->add_flag("--exact", solve_opt.exact, "branch-and-prune exact search");
  auto* mvca_flag = solve->add_flag("--mvca", solve_opt.use_mvca, "greedy constructive heuristic");
  exact_flag->excludes(mvca_flag);
  solve->add_flag("--trace", solve_opt.trace, "print one line per greedy iteration");
  solve->add_flag("--omit-timing", solve_opt.omit_timing,
                  "drop the time_ms report line (byte-stable output)");
  solve->add_option("--timeout", solve_opt.timeout, "time limit in seconds (exact only)");

  std::string oracle_input, oracle_mode = "mlsb";
  bool oracle_omit_timing = false;
  auto* oracle = app.add_subcommand("oracle", "Brute-force optimum by subset enumeration");
  oracle->add_option("--input", oracle_input, "instance file")->required();
  oracle->add_option("--mode", oracle_mode, "mlsb or mlst")->required();
  oracle->add_flag("--omit-timing", oracle_omit_timing,
                   "drop the time_ms report line (byte-stable output)");

  std::string dec_input, dec_labels;
  auto* dec = app.add_subcommand("decompose", "Components, blocks, bridges, cut vertices");
  dec->add_option("--input", dec_input, "instance file")->required();
  dec->add_option("--labels", dec_labels, "comma-separated label ids (default: all)");

  mlsb::GeneratorConfig gen_config;
  long long gen_seed = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("generate", "Seeded random instance generator");
  gen->add_option("--n", gen_config.n, "vertex count")->required();
  gen->add_option("--m", gen_config.m, "edge count")->required();
  gen->add_option("--q", gen_config.q, "label count")->required();
  gen->add_option("--seed", gen_seed, "generator seed")->required();
  gen->add_flag("--feasible", gen_config.guarantee_feasible,
                "embed a Hamiltonian cycle so the full universe is bi-connected");
  gen->add_option("--out", gen_out, "output instance file")->required();

  std::string bench_spec, bench_out, bench_mode = "mlsb";
  int bench_reps = 1;
  double bench_timeout = 0.0;
  auto* bench = app.add_subcommand("bench", "Exact-vs-MVCA sweep over generated instances");
  bench->add_option("--spec", bench_spec, "config file: one 'n m q seed feasible' line per config")
      ->required();
  bench->add_option("--out", bench_out, "output CSV file")->required();
  bench->add_option("--mode", bench_mode, "mlsb or mlst");
  bench->add_option("--reps", bench_reps, "instances per config (seed advances by 1)");
  bench->add_option("--timeout", bench_timeout, "per-solve time limit in seconds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) {
      if (solve_opt.exact == solve_opt.use_mvca) {
        std::cerr << "solve: pass exactly one of --exact / --mvca\n";
        return kExitUsage;
      }
      solve_opt.has_timeout = solve->count("--timeout") > 0;
      return run_solve(solve_opt);
    }
    if (oracle->parsed()) {
      const auto g = mlsb::load_instance(read_file(oracle_input));
      const auto outcome = mlsb::brute_force_optimum(g, mlsb::parse_mode(oracle_mode));
      std::cout << mlsb::render_report(outcome, !oracle_omit_timing);
      return outcome_exit_code(outcome);
    }
    if (dec->parsed()) {
      const auto g = mlsb::load_instance(read_file(dec_input));
      const auto labels = dec->count("--labels")
                              ? parse_label_list(dec_labels, g.q)
                              : mlsb::LabelSet::full(g.q);
      const auto d = mlsb::decompose(mlsb::induced_subgraph(g, labels));
      std::cout << "block_count=" << d.block_count() << '\n'
                << "bridges=" << join_pairs(d.bridges) << '\n'
                << "component_count=" << d.component_count << '\n'
                << "cut_vertices=" << join_csv(d.cut_vertices) << '\n';
      return kExitOk;
    }
    if (gen->parsed()) {
      gen_config.seed = static_cast<std::uint64_t>(gen_seed);
      write_file(gen_out, mlsb::save_instance(mlsb::generate(gen_config)));
      return kExitOk;
    }
    if (bench->parsed()) {
      const auto configs = mlsb::load_bench_spec(read_file(bench_spec));
      std::optional<double> limit;
      if (bench->count("--timeout") > 0) limit = bench_timeout;
      write_file(bench_out,
                 mlsb::bench_csv(configs, bench_reps, mlsb::parse_mode(bench_mode), limit));
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
