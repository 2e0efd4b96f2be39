#include "mlsb/instance_tools.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mlsb/errors.hpp"
#include "mlsb/exact.hpp"
#include "mlsb/heuristics.hpp"
#include "mlsb/rng.hpp"

namespace mlsb {

namespace {

template <typename T>
void shuffle_in_place(std::vector<T>& items, SplitMix64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[rng.below(i)]);
  }
}

}  // namespace

void validate_config(const GeneratorConfig& config) {
  if (config.n < 3) throw ValidationError("generator needs n >= 3");
  const long long max_edges =
      static_cast<long long>(config.n) * (config.n - 1) / 2;
  if (config.m < config.n || config.m > max_edges) {
    throw ValidationError("edge count must satisfy n <= m <= n(n-1)/2");
  }
  if (config.q < 1) throw ValidationError("generator needs q >= 1");
}

LabelledGraph generate(const GeneratorConfig& config) {
  validate_config(config);
  SplitMix64 rng(config.seed);
  const int n = config.n;

  std::vector<std::pair<int, int>> picked;
  picked.reserve(config.m);
  std::vector<char> used(static_cast<std::size_t>(n) * n, 0);
  auto mark = [&](int u, int v) { used[static_cast<std::size_t>(u) * n + v] = 1; };
  auto taken = [&](int u, int v) { return used[static_cast<std::size_t>(u) * n + v]; };

  if (config.guarantee_feasible) {
    std::vector<int> tour(n);
    std::iota(tour.begin(), tour.end(), 0);
    shuffle_in_place(tour, rng);
    for (int i = 0; i < n; ++i) {
      const int u = std::min(tour[i], tour[(i + 1) % n]);
      const int v = std::max(tour[i], tour[(i + 1) % n]);
      picked.emplace_back(u, v);
      mark(u, v);
    }
  }

  std::vector<std::pair<int, int>> pool;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!taken(u, v)) pool.emplace_back(u, v);
    }
  }
  shuffle_in_place(pool, rng);
  for (std::size_t i = 0; picked.size() < static_cast<std::size_t>(config.m); ++i) {
    picked.push_back(pool[i]);
  }

  std::vector<EdgeRecord> edges;
  edges.reserve(picked.size());
  for (const auto& [u, v] : picked) {
    edges.push_back({u, v, static_cast<int>(rng.below(config.q))});
  }
  return make_labelled_graph(n, config.q, std::move(edges));
}

std::vector<GeneratorConfig> load_bench_spec(const std::string& text) {
  std::vector<GeneratorConfig> configs;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    GeneratorConfig config;
    long long seed = 0;
    int feasible = 0;
    if (!(fields >> config.n >> config.m >> config.q >> seed >> feasible)) {
      throw ParseError("malformed bench line " + std::to_string(lineno) + ": '" +
                       line + "'");
    }
    std::string extra;
    if (fields >> extra) {
      throw ParseError("trailing fields on bench line " + std::to_string(lineno));
    }
    config.seed = static_cast<std::uint64_t>(seed);
    config.guarantee_feasible = feasible != 0;
    validate_config(config);
    configs.push_back(config);
  }
  return configs;
}

std::string bench_csv(const std::vector<GeneratorConfig>& configs, int repetitions,
                      Mode mode, std::optional<double> time_limit_s) {
  std::ostringstream out;
  out << "n,m,q,seed,mode,status,exact_size,mvca_size,gap,exact_nodes,"
         "exact_time_ms,mvca_time_ms\n";

  for (const auto& base : configs) {
    for (int rep = 0; rep < repetitions; ++rep) {
      GeneratorConfig config = base;
      config.seed = base.seed + static_cast<std::uint64_t>(rep);

      std::string status = "ok";
      long long exact_size = -1, mvca_size = -1, gap = -1;
      long long exact_nodes = -1, exact_ms = -1, mvca_ms = -1;
      try {
        const LabelledGraph g = generate(config);
        const SolverOutcome exact = exact_solve(g, mode, time_limit_s);
        const MvcaResult greedy = mvca(g, mode);
        exact_nodes = static_cast<long long>(exact.nodes_explored);
        exact_ms = exact.elapsed_ms;
        mvca_ms = greedy.outcome.elapsed_ms;
        if (exact.termination == Termination::TimeLimit) {
          status = "timeout";
          exact_size = exact.size;
          if (greedy.outcome.feasible) mvca_size = greedy.outcome.size;
        } else if (!exact.feasible) {
          status = "infeasible";
        } else {
          exact_size = exact.size;
          mvca_size = greedy.outcome.size;
          gap = mvca_size - exact_size;
        }
      } catch (const std::exception&) {
        status = "error";
      }

      out << config.n << ',' << config.m << ',' << config.q << ',' << config.seed
          << ',' << mode_name(mode) << ',' << status << ',' << exact_size << ','
          << mvca_size << ',' << gap << ',' << exact_nodes << ',' << exact_ms << ','
          << mvca_ms << '\n';
    }
  }
  return out.str();
}

}  // namespace mlsb
