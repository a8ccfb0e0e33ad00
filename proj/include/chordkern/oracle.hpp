#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "chordkern/graph.hpp"
#include "chordkern/kernel.hpp"

namespace chordkern {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Σ_{i≤k} C(p, i), saturating at UINT64_MAX.
std::uint64_t search_space(std::size_t pairs, int k);

/// Pairs the variant may touch: all pairs, non-edges or edges.
std::vector<Edge> candidate_pairs(const Graph& g, EditKind kind);

/// Minimum F with |F| <= k landing in the target class, searched by increasing
/// size and lexicographically within a size. nullopt when none exists.
/// Throws BudgetExceeded when the search space exceeds `budget`.
std::optional<EditSet> brute_force_optimum(const Instance& inst, std::uint64_t budget = kDefaultBudget);

/// Every optimum of size <= k (empty when none exists), same order and budget rule.
std::vector<EditSet> all_optimal_solutions(const Instance& inst, std::uint64_t budget = kDefaultBudget);

/// Turns every biconnected component into a clique.
EditSet block_completion_exact(const Graph& g);

/// |F| <= k and G △ F is in the variant's class. Throws ContractError when F
/// has the wrong kind or does not fit the graph.
bool verify_solution(const Instance& inst, const EditSet& f);

// ---------------------------------------------------------------------------
// Adjacency-bitmask graphs on at most 64 vertices, for fast enumeration.

struct MaskGraph {
  int n = 0;
  std::array<std::uint64_t, 64> rows{};

  static MaskGraph from(const Graph& g);
  bool adjacent(int u, int v) const { return (rows[u] >> v) & 1U; }
  void toggle(int u, int v) {
    rows[u] ^= std::uint64_t{1} << v;
    rows[v] ^= std::uint64_t{1} << u;
  }
};

bool mask_is_chordal(const MaskGraph& g);
bool mask_is_block(const MaskGraph& g);
bool mask_is_strictly_chordal(const MaskGraph& g);
bool mask_is_member(const MaskGraph& g, GraphClass c);

}  // namespace chordkern
