#include "chordkern/blocks.hpp"

#include <algorithm>
#include <utility>

namespace chordkern {

BlockDecomposition biconnected_components(const Graph& g) {
  const int n = g.vertex_count();
  BlockDecomposition d;
  d.blocks_of.assign(static_cast<std::size_t>(n), {});
  d.components = connected_components(g);

  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<Edge> edge_stack;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> stack;
  int timer = 0;

  auto pop_block = [&](Vertex u, Vertex w) {
    VertexSet block;
    while (true) {
      Edge e = edge_stack.back();
      edge_stack.pop_back();
      block.push_back(e.u);
      block.push_back(e.v);
      if (e == Edge(u, w)) break;
    }
    std::sort(block.begin(), block.end());
    block.erase(std::unique(block.begin(), block.end()), block.end());
    d.blocks.push_back(std::move(block));
  };

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    if (g.degree(root) == 0) {
      disc[root] = timer++;
      d.blocks.push_back({root});
      continue;
    }
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        Vertex w = nb[f.next++];
        if (disc[w] == -1) {
          edge_stack.emplace_back(f.v, w);
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        const Vertex w = f.v;
        const Vertex u = f.parent;
        stack.pop_back();
        if (u == -1) continue;
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) pop_block(u, w);
      }
    }
  }

  std::sort(d.blocks.begin(), d.blocks.end());
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    for (Vertex v : d.blocks[i]) d.blocks_of[v].push_back(static_cast<int>(i));
  }
  for (Vertex v = 0; v < n; ++v) {
    if (d.blocks_of[v].size() > 1) d.cut_vertices.push_back(v);
  }
  return d;
}

BlockCutTree block_cut_tree(const Graph& g, const BlockDecomposition& d) {
  BlockCutTree t;
  t.block_count = static_cast<int>(d.blocks.size());
  t.cut_vertices = d.cut_vertices;
  t.adj.assign(d.blocks.size() + d.cut_vertices.size(), {});
  t.node_of.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t j = 0; j < d.cut_vertices.size(); ++j) {
    const int node = t.block_count + static_cast<int>(j);
    const Vertex c = d.cut_vertices[j];
    t.node_of[c] = node;
    for (int b : d.blocks_of[c]) {
      t.adj[node].push_back(b);
      t.adj[b].push_back(node);
    }
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (t.node_of[v] == -1) t.node_of[v] = d.blocks_of[v].front();
  }
  for (auto& list : t.adj) std::sort(list.begin(), list.end());
  return t;
}

bool all_blocks_cliques(const Graph& g, const BlockDecomposition& d) {
  for (const auto& b : d.blocks) {
    if (!is_clique(g, b)) return false;
  }
  return true;
}

}  // namespace chordkern
