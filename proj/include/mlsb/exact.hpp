#pragma once

#include <optional>

#include "mlsb/labelled_graph.hpp"
#include "mlsb/solver_outcome.hpp"

namespace mlsb {

// Depth-first branch and prune over label-inclusion decisions in a fixed
// label order (descending edge frequency, ties by ascending id). A node
// whose included set already satisfies the mode records an incumbent and
// backtracks; branches are cut by the cardinality bound, by infeasibility of
// the included set plus all remaining candidates, and in Biconnected mode by
// the edge budget (a spanning bi-connected graph on n >= 3 needs >= n edges).
//
// On timeout the best incumbent found so far is returned with
// termination = TimeLimit; the incumbent is always feasible because the full
// universe is verified up front.
SolverOutcome exact_solve(const LabelledGraph& g, Mode mode,
                          std::optional<double> time_limit_s = {});

// Verification oracle: enumerates label subsets by increasing cardinality
// (lexicographic within one cardinality) and returns the first feasible one.
// Requires q <= 20. With `max_size`, cardinalities beyond the cap are not
// tried and the outcome carries termination = SizeCap.
SolverOutcome brute_force_optimum(const LabelledGraph& g, Mode mode,
                                  std::optional<int> max_size = {});

}  // namespace mlsb
