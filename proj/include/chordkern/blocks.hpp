#pragma once

#include <vector>

#include "chordkern/graph.hpp"

namespace chordkern {

/// Biconnected components of a graph.
///
/// Every edge lies in exactly one block. An isolated vertex forms a singleton
/// block so that every vertex belongs to at least one block.
struct BlockDecomposition {
  /// Each block sorted; blocks ordered by (smallest member, then lexicographic).
  std::vector<VertexSet> blocks;
  /// Cut vertices, sorted.
  VertexSet cut_vertices;
  /// blocks_of[v]: indices of blocks containing v, sorted.
  std::vector<std::vector<int>> blocks_of;
  std::vector<VertexSet> components;

  bool is_cut_vertex(Vertex v) const { return blocks_of[v].size() > 1; }
};

BlockDecomposition biconnected_components(const Graph& g);

/// Block-cut forest: node i < block_count is block i, node block_count + j is
/// cut vertex cut_vertices[j].
struct BlockCutTree {
  int block_count = 0;
  VertexSet cut_vertices;
  std::vector<std::vector<int>> adj;
  /// Node representing v: its cut node if v is a cut vertex, else its unique block.
  std::vector<int> node_of;

  int node_count() const { return static_cast<int>(adj.size()); }
  bool is_block_node(int node) const { return node < block_count; }
};

BlockCutTree block_cut_tree(const Graph& g, const BlockDecomposition& d);

/// True when every block induces a clique.
bool all_blocks_cliques(const Graph& g, const BlockDecomposition& d);

}  // namespace chordkern
