#pragma once

#include <cstdint>
#include <vector>

#include "chordkern/graph.hpp"
#include "chordkern/instance_gen.hpp"

namespace chordkern::testing {

/// One representative per isomorphism class on exactly n vertices (n <= 8).
const std::vector<Graph>& all_graphs(int n);

/// Canonical code of a graph on at most 8 vertices: the lexicographically
/// smallest upper-triangle bit string over degree-respecting relabelings.
std::uint64_t canonical_code(const Graph& g);

/// G(n, p) with p given as numerator over 1000.
Graph random_graph(int n, int p_per_mille, SplitMix64& rng);

bool is_connected(const Graph& g);

}  // namespace chordkern::testing
