#pragma once

#include <vector>

#include "chordkern/graph.hpp"

namespace chordkern {

/// Partition of V(G) into maximal true-twin classes, plus the quotient graph.
struct CriticalCliquePartition {
  /// Each class sorted; classes ordered by smallest member.
  std::vector<VertexSet> classes;
  std::vector<int> class_of;
  /// Vertex i is class i; KK' adjacent iff K and K' are completely joined.
  /// Labels carry class sizes.
  Graph quotient;

  int size() const { return static_cast<int>(classes.size()); }
  int class_size(int c) const { return static_cast<int>(classes[c].size()); }
};

CriticalCliquePartition critical_cliques(const Graph& g);

/// The quotient of `critical_cliques(g)`, labelled with class sizes.
Graph critical_clique_graph(const Graph& g);

/// Union of the given classes, sorted.
VertexSet expand_classes(const CriticalCliquePartition& p, std::span<const int> class_ids);

}  // namespace chordkern
