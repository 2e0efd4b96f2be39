#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mlsb/labelled_graph.hpp"

namespace mlsb {

using VertexPair = std::pair<int, int>;  // normalized u < v

// A maximal bi-connected subgraph with at least 3 vertices. Bridges are kept
// separate: blocks and bridges together partition the edge set.
struct Block {
  std::vector<int> vertices;      // ascending
  std::vector<VertexPair> edges;  // ascending
};

struct Decomposition {
  int component_count = 0;
  std::vector<int> component_id;  // per vertex, dense 0..count-1
  std::vector<Block> blocks;
  std::vector<int> singleton_block_vertices;  // vertices in no multi-vertex block
  std::vector<VertexPair> bridges;
  std::vector<int> cut_vertices;

  // Multi-vertex blocks plus one singleton block per uncovered vertex.
  // Equals 1 exactly when the graph is spanning bi-connected (n >= 3 or n = 1).
  int block_count() const {
    return static_cast<int>(blocks.size() + singleton_block_vertices.size());
  }
};

// Connected components via DFS restarts; ids assigned in order of first visit.
std::pair<int, std::vector<int>> components(const PlainGraph& g);

bool is_connected(const PlainGraph& g);

// Full single-pass analysis: components, blocks, bridges, cut vertices.
Decomposition decompose(const PlainGraph& g);

// n = 1: true (an isolated vertex counts as bi-connected).
// n = 2: false (a simple graph cannot offer two vertex-disjoint paths).
// n >= 3: connected, no cut vertex, and m >= n.
bool is_biconnected(const PlainGraph& g);

// Minimum-hop path from s to t, or nullopt when they sit in different
// components. Ties are broken by visiting neighbours in ascending id.
std::optional<std::vector<int>> bfs_shortest_path(const PlainGraph& g, int s, int t);

}  // namespace mlsb
