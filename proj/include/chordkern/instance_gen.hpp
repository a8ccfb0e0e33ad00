#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "chordkern/graph.hpp"
#include "chordkern/kernel.hpp"
#include "chordkern/recognition.hpp"

namespace chordkern {

/// SplitMix64 (Steele, Lea, Flood): state += 0x9E3779B97F4A7C15, then the
/// output mix with multipliers 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform-ish integer in [0, bound): next() % bound. bound must be > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Integer in [lo, hi].
  int between(int lo, int hi);

 private:
  std::uint64_t state_;
};

struct GenSpec {
  GraphClass cls = GraphClass::block;  // block or strictly_chordal
  int vertices = 10;
  int max_clique = 4;
  int twin_cap = 3;
  std::uint64_t seed = 0;
};

/// Random member of spec.cls with exactly spec.vertices vertices (vertex ids
/// shuffled). Throws ContractError for non-positive parameters or class chordal.
Graph generate_member(const GenSpec& spec);

struct PlantedInstance {
  Instance instance;
  EditSet planted;
};

/// Member of the variant's class with k random legal pairs perturbed so that
/// undoing them is a k-solution. Throws ContractError for k < 1 or a class
/// mismatch, GenerationError when too few pairs exist.
PlantedInstance plant(const GenSpec& spec, int k, ProblemVariant variant, std::uint64_t seed);

/// Hardness reductions from cluster deletion/editing. BG: add a universal
/// vertex. SC: add a (k+1)-clique joined to every vertex and k+1 pendants per
/// original vertex. Target must be BG/SC deletion or editing.
Instance reduce_from_cluster(const Graph& g, int k, ProblemVariant target);

/// Disjoint union of cliques (no induced P3).
bool is_cluster_graph(const Graph& g);

/// Minimum edits (deletion or edit kind) making g a cluster graph, if <= k.
/// Brute force; n must be at most 64.
std::optional<int> cluster_optimum(const Graph& g, int k, EditKind kind);

}  // namespace chordkern
