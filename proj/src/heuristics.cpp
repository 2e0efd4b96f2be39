#include "mlsb/heuristics.hpp"

#include <chrono>
#include <limits>

#include "mlsb/decomposition.hpp"
#include "mlsb/dynamic_blocks.hpp"

namespace mlsb {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
      .count();
}

bool target_reached(Mode mode, const BlockTracker& t) {
  if (mode == Mode::Biconnected) return t.block_count() == 1 && t.component_count() == 1;
  return t.component_count() == 1;
}

}  // namespace

MvcaResult mvca(const LabelledGraph& g, Mode mode) {
  const auto start = Clock::now();
  MvcaResult result;
  result.outcome.mode = mode;
  result.outcome.method = Method::Mvca;
  result.outcome.labels = LabelSet(g.q);
  result.trace.final_blocks = g.n;
  result.trace.final_comps = g.n;

  // A greedy run can only terminate if the full universe is feasible.
  if (!satisfies_mode(mode, induced_subgraph(g, LabelSet::full(g.q)))) {
    result.outcome.elapsed_ms = ms_since(start);
    return result;
  }

  BlockTracker tracker(g.n);
  LabelSet chosen(g.q);
  std::uint64_t evaluations = 0;

  while (!target_reached(mode, tracker)) {
    IterationRecord record;
    int best_label = -1;
    int best_score = std::numeric_limits<int>::max();
    int best_comps = std::numeric_limits<int>::max();

    for (int label = 0; label < g.q; ++label) {
      if (chosen.contains(label)) continue;
      const auto [blocks, comps] = evaluate_label(tracker, g, label);
      ++evaluations;
      const int score = mode == Mode::Biconnected ? blocks + comps : comps;
      record.candidates.push_back({label, blocks, comps, score});
      if (score < best_score || (score == best_score && comps < best_comps)) {
        best_label = label;
        best_score = score;
        best_comps = comps;
      }
    }

    add_label(tracker, g, best_label);
    chosen.insert(best_label);
    record.chosen_label = best_label;
    record.chosen_score = best_score;
    record.blocks_after = tracker.block_count();
    record.comps_after = tracker.component_count();
    result.trace.iterations.push_back(std::move(record));
  }

  result.trace.final_blocks = tracker.block_count();
  result.trace.final_comps = tracker.component_count();
  result.outcome.labels = chosen;
  result.outcome.size = chosen.size();
  result.outcome.feasible = true;
  result.outcome.nodes_explored = evaluations;
  result.outcome.elapsed_ms = ms_since(start);
  return result;
}

}  // namespace mlsb
