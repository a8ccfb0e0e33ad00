#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "chordkern/graph.hpp"

namespace chordkern {

enum class BranchKind { bg, sc };

enum class BranchQuery { one_bg, two_bg_clean, one_sc, two_sc_clean };

struct Branch {
  BranchKind kind = BranchKind::bg;
  /// V(B), sorted.
  VertexSet vertices;
  /// Singletons for BG; critical cliques for SC. Ordered by smallest member.
  std::vector<VertexSet> attachment_points;
  /// V(B^R), sorted.
  VertexSet interior;
  bool clean = false;
  /// Shortest attachment-to-attachment distance in the critical clique graph of B (2-SC only).
  std::optional<int> length;
  std::optional<int> mincut_value;

  int attachment_count() const { return static_cast<int>(attachment_points.size()); }

  friend bool operator==(const Branch&, const Branch&) = default;
};

/// Extra filters used by the rule engine. Defaults report everything.
struct BranchScanOptions {
  /// 2-branches only: skip branches with fewer vertices.
  int min_vertices = 0;
  /// 2-SC only: skip branches shorter than this.
  int min_length = 0;
  /// Final per-branch filter, applied to fully populated branches.
  std::function<bool(const Branch&)> accept;
  /// Return only the branch with the smallest (attachment points, interior) signature.
  bool first_only = false;
};

/// Branches sorted by (attachment points, interior).
///
/// 1-branches are reported merged per attachment point: the interior is the
/// union of every component of G minus the attachment that can join the
/// branch. In a component that is entirely in the class, where merging would
/// leave no outside neighbor, each such component is reported separately.
std::vector<Branch> find_branches(const Graph& g, BranchQuery q, const BranchScanOptions& opt = {});

/// For each vertex v of h: union of the components of h - v that, together
/// with v, induce a block graph, provided some other component of h - v does
/// not. Empty otherwise. Sorted.
std::vector<VertexSet> maximal_one_branch_interiors(const Graph& h);

struct MinCut {
  /// Deletion-kind edge set of the original graph.
  EditSet cut;
  int value = 0;
};

/// Minimum set of edges of B separating the two attachment points inside B.
/// Throws ContractError unless `b` has exactly two attachment points.
MinCut branch_min_cut(const Graph& g, const Branch& b);

/// Unit-capacity max-flow between vertex sets `source` and `sink` inside G[within].
MinCut separating_cut(const Graph& g, const VertexSet& within, const VertexSet& source,
                      const VertexSet& sink);

struct SpanStats {
  /// Minimal connected induced subgraph containing A.
  VertexSet t_vertices;
  /// Vertices of degree >= 3 in G[T], sorted.
  VertexSet high_degree;
  /// Components of G[T] minus (A and high_degree).
  int component_count = 0;
};

/// Throws ContractError when g is not a connected block graph or A is empty or invalid.
SpanStats span_analysis(const Graph& g, std::span<const Vertex> a);

/// Re-validates a branch from scratch against g.
bool validates_branch(const Graph& g, const Branch& b);

}  // namespace chordkern
