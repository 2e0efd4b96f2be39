#pragma once

#include <cstdint>
#include <string>

#include "mlsb/labelled_graph.hpp"

namespace mlsb {

// Biconnected solves the spanning bi-connected subgraph problem (mlsb),
// Connected the spanning tree / connectivity problem (mlst).
enum class Mode { Biconnected, Connected };

enum class Method { Exact, Mvca, Oracle };

enum class Termination { Completed, TimeLimit, SizeCap };

struct SolverOutcome {
  LabelSet labels;  // empty when infeasible
  int size = 0;
  bool feasible = false;
  std::uint64_t nodes_explored = 0;
  std::int64_t elapsed_ms = 0;
  Mode mode = Mode::Biconnected;
  Method method = Method::Exact;
  Termination termination = Termination::Completed;
};

// The mode's feasibility predicate on an induced subgraph. Both predicates
// are monotone under edge addition, which is what the solvers prune on.
bool satisfies_mode(Mode mode, const PlainGraph& g);

const char* mode_name(Mode mode);      // "mlsb" / "mlst"
const char* method_name(Method method);  // "exact" / "mvca" / "oracle"
Mode parse_mode(const std::string& name);

// Stable key=value report, one per line:
//   method=, mode=, feasible=, size=, labels=, nodes=, time_ms=
// `include_timing` drops the time_ms line so that repeated runs can be
// compared byte for byte.
std::string render_report(const SolverOutcome& outcome, bool include_timing = true);

}  // namespace mlsb
