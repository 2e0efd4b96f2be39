#include "mlsb/decomposition.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace mlsb {

namespace {

struct DfsFrame {
  int v;
  int parent;
  std::size_t next = 0;
  bool skipped_parent = false;
};

}  // namespace

std::pair<int, std::vector<int>> components(const PlainGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> id(n, -1);
  int count = 0;
  std::vector<int> stack;
  for (int root = 0; root < n; ++root) {
    if (id[root] != -1) continue;
    const int c = count++;
    id[root] = c;
    stack.push_back(root);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbours(v)) {
        if (id[w] == -1) {
          id[w] = c;
          stack.push_back(w);
        }
      }
    }
  }
  return {count, std::move(id)};
}

bool is_connected(const PlainGraph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbours(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

Decomposition decompose(const PlainGraph& g) {
  const int n = g.vertex_count();
  Decomposition d;
  d.component_id.assign(n, -1);

  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<char> is_cut(n, 0);
  std::vector<char> in_multi_block(n, 0);
  std::vector<VertexPair> edge_stack;  // as pushed, directed
  std::vector<DfsFrame> frames;
  int timer = 0;

  // Pops the edges of one bi-connected component, ending at tree edge (pu,pv).
  // A single popped edge is a bridge; larger groups are multi-vertex blocks.
  auto pop_component = [&](int pu, int pv) {
    std::vector<VertexPair> group;
    for (;;) {
      const auto [a, b] = edge_stack.back();
      edge_stack.pop_back();
      group.emplace_back(std::min(a, b), std::max(a, b));
      if (a == pu && b == pv) break;
    }
    if (group.size() == 1) {
      d.bridges.push_back(group.front());
      return;
    }
    Block block;
    block.edges = std::move(group);
    std::sort(block.edges.begin(), block.edges.end());
    for (const auto& [a, b] : block.edges) {
      block.vertices.push_back(a);
      block.vertices.push_back(b);
    }
    std::sort(block.vertices.begin(), block.vertices.end());
    block.vertices.erase(std::unique(block.vertices.begin(), block.vertices.end()),
                         block.vertices.end());
    for (int v : block.vertices) in_multi_block[v] = 1;
    d.blocks.push_back(std::move(block));
  };

  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    const int comp = d.component_count++;
    disc[root] = low[root] = timer++;
    d.component_id[root] = comp;
    int root_children = 0;
    frames.push_back({root, -1});

    while (!frames.empty()) {
      DfsFrame& f = frames.back();
      const auto& nb = g.neighbours(f.v);
      if (f.next < nb.size()) {
        const int v = f.v;
        const int w = nb[f.next++];
        if (w == f.parent && !f.skipped_parent) {
          f.skipped_parent = true;
          continue;
        }
        if (disc[w] == -1) {
          edge_stack.push_back({v, w});
          disc[w] = low[w] = timer++;
          d.component_id[w] = comp;
          if (f.parent == -1) ++root_children;
          frames.push_back({w, v});  // invalidates f
        } else if (disc[w] < disc[v]) {
          // back edge; the downward view (disc[w] > disc[v]) was recorded
          // already when w was scanned
          edge_stack.push_back({v, w});
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        const int v = f.v;
        const int parent = f.parent;
        frames.pop_back();
        if (parent < 0) continue;
        DfsFrame& pf = frames.back();
        low[parent] = std::min(low[parent], low[v]);
        if (low[v] >= disc[parent]) {
          if (pf.parent != -1) is_cut[parent] = 1;
          pop_component(parent, v);
        }
      }
    }
    if (root_children > 1) is_cut[root] = 1;
  }

  for (int v = 0; v < n; ++v) {
    if (is_cut[v]) d.cut_vertices.push_back(v);
    if (!in_multi_block[v]) d.singleton_block_vertices.push_back(v);
  }
  std::sort(d.bridges.begin(), d.bridges.end());
  std::sort(d.blocks.begin(), d.blocks.end(),
            [](const Block& a, const Block& b) { return a.vertices < b.vertices; });
  return d;
}

bool is_biconnected(const PlainGraph& g) {
  const int n = g.vertex_count();
  if (n == 1) return true;
  if (n <= 2) return false;
  if (g.edge_count() < n) return false;

  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<DfsFrame> frames;
  int timer = 0;
  int root_children = 0;

  disc[0] = low[0] = timer++;
  frames.push_back({0, -1});
  while (!frames.empty()) {
    DfsFrame& f = frames.back();
    const auto& nb = g.neighbours(f.v);
    if (f.next < nb.size()) {
      const int v = f.v;
      const int w = nb[f.next++];
      if (w == f.parent && !f.skipped_parent) {
        f.skipped_parent = true;
        continue;
      }
      if (disc[w] == -1) {
        disc[w] = low[w] = timer++;
        if (f.parent == -1 && ++root_children > 1) return false;
        frames.push_back({w, v});
      } else if (disc[w] < disc[v]) {
        low[v] = std::min(low[v], disc[w]);
      }
    } else {
      const int v = f.v;
      const int parent = f.parent;
      frames.pop_back();
      if (parent < 0) continue;
      DfsFrame& pf = frames.back();
      low[parent] = std::min(low[parent], low[v]);
      if (pf.parent != -1 && low[v] >= disc[parent]) return false;
    }
  }
  return timer == n;
}

std::optional<std::vector<int>> bfs_shortest_path(const PlainGraph& g, int s, int t) {
  const int n = g.vertex_count();
  if (s < 0 || s >= n || t < 0 || t >= n) {
    throw std::invalid_argument("path endpoint out of range");
  }
  if (s == t) return std::vector<int>{s};

  std::vector<int> parent(n, -1);
  std::deque<int> queue{s};
  parent[s] = s;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbours(v)) {
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
  return std::nullopt;
}

}  // namespace mlsb
