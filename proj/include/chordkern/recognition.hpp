#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chordkern/blocks.hpp"
#include "chordkern/critical_clique.hpp"
#include "chordkern/graph.hpp"

namespace chordkern {

enum class GraphClass { chordal, block, strictly_chordal };

enum class ObstructionKind { hole, diamond, dart, gem };

std::string to_string(GraphClass c);
std::string to_string(ObstructionKind k);

/// A forbidden induced subgraph with vertices in role order:
///   hole:    cycle order v0 v1 ... v(L-1), L >= 4;
///   diamond: hub hub tip tip   (tips nonadjacent);
///   dart:    hub hub tip tip pendant   (pendant adjacent to the first hub only);
///   gem:     apex p0 p1 p2 p3   (apex adjacent to all, p0-p1-p2-p3 an induced path).
struct Obstruction {
  ObstructionKind kind = ObstructionKind::hole;
  std::vector<Vertex> vertices;

  friend bool operator==(const Obstruction&, const Obstruction&) = default;
};

/// Perfect elimination order: each vertex's later neighbors form a clique.
struct ChordalWitness {
  std::vector<Vertex> elimination_order;
};

struct BlockWitness {
  BlockDecomposition decomposition;
};

/// The quotient graph is a block graph.
struct StrictlyChordalWitness {
  CriticalCliquePartition partition;
  BlockDecomposition quotient_blocks;
};

using Certificate = std::variant<Obstruction, ChordalWitness, BlockWitness, StrictlyChordalWitness>;

struct Verdict {
  bool member = false;
  Certificate certificate;

  const Obstruction& obstruction() const { return std::get<Obstruction>(certificate); }
};

Verdict recognize(const Graph& g, GraphClass c);

/// Membership only; same answers as recognize() without building certificates.
bool is_chordal(const Graph& g);
bool is_block_graph(const Graph& g);
bool is_strictly_chordal(const Graph& g);
bool is_member(const Graph& g, GraphClass c);

/// Maximum cardinality search order, reversed so that it is a perfect
/// elimination order whenever g is chordal.
std::vector<Vertex> mcs_elimination_order(const Graph& g);
bool is_perfect_elimination_order(const Graph& g, std::span<const Vertex> order);

std::optional<Obstruction> find_hole(const Graph& g);
/// Any induced diamond.
std::optional<Obstruction> find_diamond(const Graph& g);
/// Exhaustive dart/gem scan over diamonds and a fifth vertex.
std::optional<Obstruction> find_dart_or_gem(const Graph& g);

/// True when the listed vertices induce exactly the named pattern, in layout
/// order: hole in cycle order; diamond and dart list the two hubs first, the
/// dart's pendant last (attached to the first hub); gem lists the apex, then
/// the path.
bool matches_obstruction(const Graph& g, const Obstruction& o);

/// Validates a member certificate against g independently of how it was built.
bool validates(const Graph& g, GraphClass c, const Verdict& v);

// ---------------------------------------------------------------------------

inline constexpr int kCharacterizationCap = 12;

/// The four equivalent descriptions of strictly chordal graphs:
///   twin_reduction:      deleting true twins until none remain leaves a block graph;
///   quotient_block:      the critical clique graph is a block graph;
///   obstruction_free:    chordal and no induced dart or gem;
///   disjoint_separators: chordal and minimal separators pairwise disjoint.
struct Characterizations {
  bool twin_reduction = false;
  bool quotient_block = false;
  bool obstruction_free = false;
  bool disjoint_separators = false;

  bool agree() const {
    return twin_reduction == quotient_block && quotient_block == obstruction_free &&
           obstruction_free == disjoint_separators;
  }
};

/// Throws SizeLimitError when n exceeds `cap`.
Characterizations sc_characterizations(const Graph& g, int cap = kCharacterizationCap);

/// All minimal separators by subset enumeration; throws SizeLimitError when n exceeds `cap`.
std::vector<VertexSet> minimal_separators(const Graph& g, int cap = kCharacterizationCap);

}  // namespace chordkern
