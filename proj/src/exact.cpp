#include "mlsb/exact.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <vector>

#include "mlsb/errors.hpp"

namespace mlsb {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
      .count();
}

struct Search {
  const LabelledGraph& g;
  Mode mode;
  std::vector<int> freq;        // edges per label
  std::vector<int> order;       // label ids, branching order
  std::vector<char> suffix_ok;  // suffix_ok[i]: G(order[i..]) feasible
  std::vector<int> suffix_edges;

  LabelSet best;
  int best_size = 0;
  std::uint64_t nodes = 0;

  Clock::time_point deadline;
  bool use_deadline = false;
  bool timed_out = false;

  bool feasible(const LabelSet& labels) const {
    return satisfies_mode(mode, induced_subgraph(g, labels));
  }

  LabelSet with_suffix(const LabelSet& included, int from) const {
    LabelSet s = included;
    for (int i = from; i < static_cast<int>(order.size()); ++i) s.insert(order[i]);
    return s;
  }

  void dfs(LabelSet& included, int next, int included_edges) {
    ++nodes;
    if (use_deadline && (nodes & 0x3f) == 0 && Clock::now() >= deadline) {
      timed_out = true;
    }
    if (timed_out) return;

    if (feasible(included)) {
      // no superset can be smaller
      if (included.size() < best_size) {
        best = included;
        best_size = included.size();
      }
      return;
    }

    for (int j = next; j < g.q; ++j) {
      if (included.size() + 1 >= best_size) return;
      const int avail_edges = included_edges + suffix_edges[j];
      if (mode == Mode::Biconnected && g.n >= 3 && avail_edges < g.n) return;
      // Monotonicity: the unions included+suffix(j) shrink as j grows, so
      // the first infeasible one cuts every later sibling too.
      if (!suffix_ok[j] && !feasible(with_suffix(included, j))) return;

      const int label = order[j];
      included.insert(label);
      dfs(included, j + 1, included_edges + freq[label]);
      included.erase(label);
      if (timed_out) return;
    }
  }
};

SolverOutcome infeasible_outcome(const LabelledGraph& g, Mode mode, Method method,
                                 std::uint64_t nodes, Clock::time_point start) {
  SolverOutcome out;
  out.labels = LabelSet(g.q);
  out.mode = mode;
  out.method = method;
  out.nodes_explored = nodes;
  out.elapsed_ms = ms_since(start);
  return out;
}

}  // namespace

SolverOutcome exact_solve(const LabelledGraph& g, Mode mode,
                          std::optional<double> time_limit_s) {
  const auto start = Clock::now();

  const LabelSet universe = LabelSet::full(g.q);
  if (!satisfies_mode(mode, induced_subgraph(g, universe))) {
    return infeasible_outcome(g, mode, Method::Exact, 0, start);
  }

  Search search{g, mode};
  if (time_limit_s) {
    search.use_deadline = true;
    search.deadline =
        start + std::chrono::duration_cast<Clock::duration>(
                    std::chrono::duration<double>(*time_limit_s));
  }

  search.freq = label_frequencies(g);
  search.order.resize(g.q);
  std::iota(search.order.begin(), search.order.end(), 0);
  std::sort(search.order.begin(), search.order.end(), [&](int a, int b) {
    if (search.freq[a] != search.freq[b]) return search.freq[a] > search.freq[b];
    return a < b;
  });

  search.suffix_ok.assign(g.q + 1, 0);
  search.suffix_edges.assign(g.q + 1, 0);
  for (int i = g.q - 1; i >= 0; --i) {
    search.suffix_edges[i] = search.suffix_edges[i + 1] + search.freq[search.order[i]];
  }
  {
    LabelSet suffix(g.q);
    search.suffix_ok[g.q] = satisfies_mode(mode, induced_subgraph(g, suffix));
    for (int i = g.q - 1; i >= 0; --i) {
      suffix.insert(search.order[i]);
      search.suffix_ok[i] = satisfies_mode(mode, induced_subgraph(g, suffix));
    }
  }

  search.best = universe;
  search.best_size = g.q;

  LabelSet included(g.q);
  search.dfs(included, 0, 0);

  SolverOutcome out;
  out.labels = search.best;
  out.size = search.best_size;
  out.feasible = true;
  out.nodes_explored = search.nodes;
  out.elapsed_ms = ms_since(start);
  out.mode = mode;
  out.method = Method::Exact;
  out.termination = search.timed_out ? Termination::TimeLimit : Termination::Completed;
  return out;
}

SolverOutcome brute_force_optimum(const LabelledGraph& g, Mode mode,
                                  std::optional<int> max_size) {
  const auto start = Clock::now();
  if (g.q > 20) throw ValidationError("brute force capped at q <= 20");

  std::uint64_t tested = 0;
  const LabelSet universe = LabelSet::full(g.q);
  ++tested;
  if (!satisfies_mode(mode, induced_subgraph(g, universe))) {
    return infeasible_outcome(g, mode, Method::Oracle, tested, start);
  }

  const int cap = max_size ? std::min(*max_size, g.q) : g.q;
  for (int k = 0; k <= cap; ++k) {
    // k-combinations in lexicographic order
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
      LabelSet candidate(g.q);
      for (int l : pick) candidate.insert(l);
      ++tested;
      if (satisfies_mode(mode, induced_subgraph(g, candidate))) {
        SolverOutcome out;
        out.labels = candidate;
        out.size = k;
        out.feasible = true;
        out.nodes_explored = tested;
        out.elapsed_ms = ms_since(start);
        out.mode = mode;
        out.method = Method::Oracle;
        return out;
      }
      // next combination
      int i = k - 1;
      while (i >= 0 && pick[i] == g.q - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }

  // only reachable with a cap: the universe itself is feasible
  SolverOutcome out = infeasible_outcome(g, mode, Method::Oracle, tested, start);
  out.termination = Termination::SizeCap;
  return out;
}

}  // namespace mlsb
