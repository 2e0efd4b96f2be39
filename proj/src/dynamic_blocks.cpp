#include "mlsb/dynamic_blocks.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "mlsb/errors.hpp"

namespace mlsb {

BlockTracker::BlockTracker(int n) : n_(n), component_count_(n), block_count_(n) {
  if (n < 1) throw ValidationError("tracker needs at least one vertex");
  uf_parent_.resize(n);
  for (int v = 0; v < n; ++v) uf_parent_[v] = v;
  uf_size_.assign(n, 1);
  adj_.assign(n, {});
  vertex_blocks_.assign(n, {});
  singleton_.assign(n, 1);
}

int BlockTracker::find_root(int v) {
  int root = v;
  while (uf_parent_[root] != root) root = uf_parent_[root];
  while (uf_parent_[v] != root) {
    const int next = uf_parent_[v];
    uf_parent_[v] = root;
    v = next;
  }
  return root;
}

int BlockTracker::common_block(int u, int v) const {
  const auto& bu = vertex_blocks_[u];
  const auto& bv = vertex_blocks_[v];
  const auto& small = bu.size() <= bv.size() ? bu : bv;
  const auto& large = bu.size() <= bv.size() ? bv : bu;
  for (int b : small) {
    if (std::find(large.begin(), large.end(), b) != large.end()) return b;
  }
  return -1;
}

std::vector<int> BlockTracker::bfs_path(int s, int t) const {
  std::vector<int> parent(n_, -1);
  std::deque<int> queue{s};
  parent[s] = s;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : adj_[v]) {
      if (parent[w] != -1) continue;
      parent[w] = v;
      if (w == t) {
        std::vector<int> path{t};
        for (int x = t; x != s; x = parent[x]) path.push_back(parent[x]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(w);
    }
  }
  throw std::logic_error("bfs_path called across components");
}

void BlockTracker::attach_to_block(int vertex, int block) {
  auto& list = vertex_blocks_[vertex];
  if (std::find(list.begin(), list.end(), block) == list.end()) {
    list.push_back(block);
    blocks_[block].vertices.push_back(vertex);
  }
}

BlockTracker::InsertCase BlockTracker::add_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) {
    throw ValidationError("edge endpoint out of range");
  }
  if (u == v) throw ValidationError("self-loop not allowed");
  const int a = std::min(u, v);
  const int b = std::max(u, v);
  const std::uint64_t key = edge_key(a, b);
  if (edge_index_.count(key)) throw ValidationError("duplicate edge");

  const int edge = static_cast<int>(journal_.size());
  InsertCase result;

  const int ru = find_root(u);
  const int rv = find_root(v);
  if (ru != rv) {
    const int big = uf_size_[ru] >= uf_size_[rv] ? ru : rv;
    const int small = big == ru ? rv : ru;
    uf_parent_[small] = big;
    uf_size_[big] += uf_size_[small];
    --component_count_;
    edge_block_.push_back(kBridge);
    result = InsertCase::BridgeJoin;
  } else if (const int shared = common_block(u, v); shared != -1) {
    edge_block_.push_back(shared);
    blocks_[shared].edges.push_back(edge);
    result = InsertCase::SameBlock;
  } else {
    // The path plus the new edge is the cycle that welds everything it
    // touches into one block. Computed before the edge goes into adj_.
    const std::vector<int> path = bfs_path(u, v);

    std::vector<int> absorb;
    std::vector<int> path_bridges;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      const int x = std::min(path[i], path[i + 1]);
      const int y = std::max(path[i], path[i + 1]);
      const int e = edge_index_.at(edge_key(x, y));
      const int owner = edge_block_[e];
      if (owner == kBridge) {
        path_bridges.push_back(e);
      } else {
        absorb.push_back(owner);
      }
    }
    std::sort(absorb.begin(), absorb.end());
    absorb.erase(std::unique(absorb.begin(), absorb.end()), absorb.end());

    int path_singletons = 0;
    for (int w : path) path_singletons += singleton_[w];
    const int units = static_cast<int>(absorb.size()) + path_singletons;

    int target;
    if (absorb.empty()) {
      target = static_cast<int>(blocks_.size());
      blocks_.emplace_back();
    } else {
      target = absorb.front();
      for (int cand : absorb) {
        if (blocks_[cand].edges.size() > blocks_[target].edges.size()) target = cand;
      }
    }

    for (int dead : absorb) {
      if (dead == target) continue;
      for (int e : blocks_[dead].edges) edge_block_[e] = target;
      auto& te = blocks_[target].edges;
      te.insert(te.end(), blocks_[dead].edges.begin(), blocks_[dead].edges.end());
      for (int w : blocks_[dead].vertices) {
        auto& list = vertex_blocks_[w];
        list.erase(std::remove(list.begin(), list.end(), dead), list.end());
        attach_to_block(w, target);
      }
      blocks_[dead] = {};
    }
    for (int e : path_bridges) {
      edge_block_[e] = target;
      blocks_[target].edges.push_back(e);
    }
    for (int w : path) {
      singleton_[w] = 0;
      attach_to_block(w, target);
    }
    edge_block_.push_back(target);
    blocks_[target].edges.push_back(edge);

    block_count_ -= units - 1;
    result = InsertCase::BlockMerge;
  }

  journal_.emplace_back(a, b);
  edge_index_.emplace(key, edge);
  auto& au = adj_[u];
  au.insert(std::upper_bound(au.begin(), au.end(), v), v);
  auto& av = adj_[v];
  av.insert(std::upper_bound(av.begin(), av.end(), u), u);
  return result;
}

std::pair<int, int> evaluate_label(const BlockTracker& state, const LabelledGraph& g,
                                   int label) {
  if (state.vertex_count() != g.n) {
    throw std::invalid_argument("tracker and instance disagree on vertex count");
  }
  if (label < 0 || label >= g.q) throw std::out_of_range("label id outside universe");
  BlockTracker probe = state;
  for (const auto& e : g.edges) {
    if (e.label == label) probe.add_edge(e.u, e.v);
  }
  return probe.counts();
}

void add_label(BlockTracker& state, const LabelledGraph& g, int label) {
  if (state.vertex_count() != g.n) {
    throw std::invalid_argument("tracker and instance disagree on vertex count");
  }
  if (label < 0 || label >= g.q) throw std::out_of_range("label id outside universe");
  for (const auto& e : g.edges) {
    if (e.label == label) state.add_edge(e.u, e.v);
  }
}

}  // namespace mlsb
