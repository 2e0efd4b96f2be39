#include "mlsb/solver_outcome.hpp"

#include <sstream>
#include <stdexcept>

#include "mlsb/decomposition.hpp"

namespace mlsb {

bool satisfies_mode(Mode mode, const PlainGraph& g) {
  return mode == Mode::Biconnected ? is_biconnected(g) : is_connected(g);
}

const char* mode_name(Mode mode) {
  return mode == Mode::Biconnected ? "mlsb" : "mlst";
}

const char* method_name(Method method) {
  switch (method) {
    case Method::Exact: return "exact";
    case Method::Mvca: return "mvca";
    case Method::Oracle: return "oracle";
  }
  return "unknown";
}

Mode parse_mode(const std::string& name) {
  if (name == "mlsb") return Mode::Biconnected;
  if (name == "mlst") return Mode::Connected;
  throw std::invalid_argument("unknown mode '" + name + "' (expected mlsb or mlst)");
}

std::string render_report(const SolverOutcome& outcome, bool include_timing) {
  std::ostringstream out;
  out << "method=" << method_name(outcome.method) << '\n';
  out << "mode=" << mode_name(outcome.mode) << '\n';
  out << "feasible=" << (outcome.feasible ? "true" : "false") << '\n';
  out << "size=" << outcome.size << '\n';
  out << "labels=";
  bool first = true;
  for (int l : outcome.labels.to_vector()) {
    if (!first) out << ',';
    out << l;
    first = false;
  }
  out << '\n';
  out << "nodes=" << outcome.nodes_explored << '\n';
  if (include_timing) out << "time_ms=" << outcome.elapsed_ms << '\n';
  return out.str();
}

}  // namespace mlsb
