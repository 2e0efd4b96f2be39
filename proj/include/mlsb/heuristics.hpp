#pragma once

#include <vector>

#include "mlsb/labelled_graph.hpp"
#include "mlsb/solver_outcome.hpp"

namespace mlsb {

struct CandidateScore {
  int label = 0;
  int blocks = 0;
  int comps = 0;
  int score = 0;  // blocks + comps in Biconnected mode, comps in Connected
};

struct IterationRecord {
  std::vector<CandidateScore> candidates;  // every unused label, ascending
  int chosen_label = -1;
  int chosen_score = 0;
  int blocks_after = 0;
  int comps_after = 0;
};

struct GreedyTrace {
  std::vector<IterationRecord> iterations;
  int final_blocks = 0;
  int final_comps = 0;
};

struct MvcaResult {
  SolverOutcome outcome;
  GreedyTrace trace;
};

// Greedy constructive heuristic: starting from an empty label set, each
// iteration probes every unused label on the incremental tracker and commits
// the one with the smallest score (ties: fewer components, then smaller
// label id). Stops when the mode's target counts are reached. Infeasible
// instances (G over the full universe fails the predicate) are reported with
// feasible=false and an empty trace.
MvcaResult mvca(const LabelledGraph& g, Mode mode);

}  // namespace mlsb
