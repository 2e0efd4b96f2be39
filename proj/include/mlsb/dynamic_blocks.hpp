#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mlsb/labelled_graph.hpp"

namespace mlsb {

// Maintains component count and block count under edge insertion.
// A fresh tracker treats every vertex as its own block and component; the
// counts stay equal to what decompose() would report on the accumulated edge
// set. Copies are independent, so a label can be probed on a clone without
// touching the working state. No edge deletion.
class BlockTracker {
 public:
  enum class InsertCase { SameBlock, BridgeJoin, BlockMerge };

  explicit BlockTracker(int n);

  int vertex_count() const { return n_; }
  int component_count() const { return component_count_; }
  int block_count() const { return block_count_; }
  std::pair<int, int> counts() const { return {block_count_, component_count_}; }
  const std::vector<std::pair<int, int>>& journal() const { return journal_; }

  // Classifies and applies one insertion:
  //  - SameBlock: u and v already share a multi-vertex block; counts unchanged.
  //  - BridgeJoin: different components; component_count drops by one.
  //  - BlockMerge: same component, no common block; every block or bridge on
  //    the BFS shortest path, every singleton path vertex, and the new edge
  //    coalesce into one multi-vertex block.
  InsertCase add_edge(int u, int v);

 private:
  struct BlockRec {
    std::vector<int> vertices;
    std::vector<int> edges;  // journal indices
  };

  static constexpr int kBridge = -1;

  int find_root(int v);
  std::uint64_t edge_key(int u, int v) const {
    return static_cast<std::uint64_t>(u) * n_ + v;  // expects u < v
  }
  int common_block(int u, int v) const;  // -1 if none
  std::vector<int> bfs_path(int s, int t) const;
  void attach_to_block(int vertex, int block);

  int n_ = 0;
  int component_count_ = 0;
  int block_count_ = 0;

  std::vector<int> uf_parent_;
  std::vector<int> uf_size_;

  std::vector<std::vector<int>> adj_;            // sorted ascending
  std::vector<BlockRec> blocks_;                 // merged-away slots stay empty
  std::vector<int> edge_block_;                  // per edge: block id or kBridge
  std::vector<std::vector<int>> vertex_blocks_;  // multi-vertex block ids per vertex
  std::vector<char> singleton_;                  // vertex is its own block

  std::vector<std::pair<int, int>> journal_;  // normalized u < v, insertion order
  std::unordered_map<std::uint64_t, int> edge_index_;
};

// Counts after hypothetically adding every edge of `label` one by one in
// canonical edge order; `state` itself is left untouched.
// Returns (block_count, component_count).
std::pair<int, int> evaluate_label(const BlockTracker& state, const LabelledGraph& g,
                                   int label);

// Commits every edge of `label` to `state`.
void add_label(BlockTracker& state, const LabelledGraph& g, int label);

}  // namespace mlsb
