#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mlsb {

// One undirected labelled edge; normalized so that u < v.
struct EdgeRecord {
  int u = 0;
  int v = 0;
  int label = 0;

  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

// Subset of the label universe 0..q-1. Iteration is always in ascending
// label id.
class LabelSet {
 public:
  LabelSet() = default;
  explicit LabelSet(int universe);
  static LabelSet full(int universe);

  int universe() const { return universe_; }
  int size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(int label) const;
  void insert(int label);
  void erase(int label);
  bool is_subset_of(const LabelSet& other) const;
  std::vector<int> to_vector() const;

  friend bool operator==(const LabelSet&, const LabelSet&) = default;

 private:
  void check_label(int label) const;

  int universe_ = 0;
  int count_ = 0;
  std::vector<std::uint64_t> words_;
};

// The instance: vertices 0..n-1, labels 0..q-1, edge list in canonical
// (load/save stable) order.
struct LabelledGraph {
  int n = 0;
  int q = 0;
  std::vector<EdgeRecord> edges;

  int m() const { return static_cast<int>(edges.size()); }
};

// Unlabelled adjacency view consumed by the decomposition and the solvers.
// Immutable after construction; neighbour lists are sorted ascending.
class PlainGraph {
 public:
  PlainGraph() = default;
  static PlainGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  const std::vector<int>& neighbours(int v) const { return adj_[v]; }
  std::vector<std::pair<int, int>> edge_list() const;  // u < v, ascending

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
};

// Normalizes edge orientation, keeps edge order, enforces the instance
// invariants (no self-loops, no duplicate edges, ids in range).
LabelledGraph make_labelled_graph(int n, int q, std::vector<EdgeRecord> edges);

// Instance file format: header line "n m q", then m lines "u v label".
// Lines starting with '#' and blank lines are ignored.
LabelledGraph load_instance(const std::string& text);
std::string save_instance(const LabelledGraph& g);

// G(L): all n vertices, exactly the edges whose label lies in `labels`.
PlainGraph induced_subgraph(const LabelledGraph& g, const LabelSet& labels);

// Per-label edge counts; entries sum to m.
std::vector<int> label_frequencies(const LabelledGraph& g);

}  // namespace mlsb
