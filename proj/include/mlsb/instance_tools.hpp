#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mlsb/labelled_graph.hpp"
#include "mlsb/solver_outcome.hpp"

namespace mlsb {

struct GeneratorConfig {
  int n = 0;
  int m = 0;
  int q = 0;
  std::uint64_t seed = 0;
  bool guarantee_feasible = false;
};

// Seeded, reproducible instance generation (SplitMix64). With
// guarantee_feasible, a random Hamiltonian cycle is embedded first so that
// G over the full universe is bi-connected for n >= 3; remaining edges are
// drawn without replacement from the unused vertex pairs. Labels are uniform
// in 0..q-1, assigned in edge order.
LabelledGraph generate(const GeneratorConfig& config);

void validate_config(const GeneratorConfig& config);

// One line per config: "n m q seed feasible" with feasible in {0,1}.
// '#' comments and blank lines are ignored.
std::vector<GeneratorConfig> load_bench_spec(const std::string& text);

// Runs exact and MVCA on `repetitions` instances per config (instance seed =
// config seed + repetition index) and renders one CSV row per instance.
// Per-row failures are flagged in the status column instead of aborting.
std::string bench_csv(const std::vector<GeneratorConfig>& configs, int repetitions,
                      Mode mode, std::optional<double> time_limit_s = {});

}  // namespace mlsb
