#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chordkern {

using Vertex = int;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on dense ids 0..n-1.
///
/// Neighbor lists are kept sorted and an adjacency bit matrix answers
/// `adjacent()` in constant time. Optional string labels travel through
/// `induced()` so reductions can report where a vertex came from.
class Graph {
 public:
  Graph() = default;

  /// Throws ContractError on an out-of-range id, a self-loop or a repeated edge.
  Graph(int vertex_count, std::span<const Edge> edges, std::vector<std::string> labels = {});
  Graph(int vertex_count, std::initializer_list<Edge> edges)
      : Graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

  int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  bool adjacent(Vertex u, Vertex v) const {
    const auto bit = static_cast<std::size_t>(u) * stride_ + static_cast<std::size_t>(v);
    return (bits_[bit >> 6] >> (bit & 63)) & 1U;
  }

  /// All edges, sorted lexicographically with u < v.
  std::vector<Edge> edges() const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// The stored label, or the decimal id when the graph carries none.
  std::string label(Vertex v) const;
  Graph with_labels(std::vector<std::string> labels) const;

  /// Subgraph induced by `keep` (any order, no duplicates); vertex i of the
  /// result is keep[i]. Labels are carried over, defaulting to original ids.
  Graph induced(std::span<const Vertex> keep) const;
  /// G \ S, surviving vertices renumbered in increasing id order.
  Graph without(std::span<const Vertex> removed) const;

  /// Structural equality: same vertex count and edge set. Labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> bits_;
  std::size_t stride_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::string> labels_;
};

bool is_valid_vertex_set(const Graph& g, std::span<const Vertex> s);
bool is_clique(const Graph& g, std::span<const Vertex> s);

/// N(S) = N[S] \ S, sorted.
VertexSet open_neighborhood(const Graph& g, std::span<const Vertex> s);

/// Connected components, each sorted, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
/// Components of G[allowed]; `allowed` is a membership mask over V(G).
std::vector<VertexSet> connected_components(const Graph& g, const std::vector<char>& allowed);

/// Single-source BFS distances; -1 for unreachable.
std::vector<int> bfs_distances(const Graph& g, Vertex source, const std::vector<char>* allowed = nullptr);

// ---------------------------------------------------------------------------
// Edit sets

enum class EditKind { edit, completion, deletion };

/// A set of vertex pairs F applied as E △ F (or E + F, E - F for the
/// restricted kinds).
class EditSet {
 public:
  EditSet() = default;
  /// Sorts the pairs; throws ContractError on a repeated pair or a pair (u,u).
  EditSet(EditKind kind, std::vector<Edge> pairs);

  EditKind kind() const noexcept { return kind_; }
  const std::vector<Edge>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }

  /// Throws ContractError when the kind disagrees with `g` or an id is out of range.
  void check_against(const Graph& g) const;

  friend bool operator==(const EditSet&, const EditSet&) = default;

 private:
  EditKind kind_ = EditKind::edit;
  std::vector<Edge> pairs_;
};

/// H = (V, E △ F). Labels are preserved.
Graph apply_edits(const Graph& g, const EditSet& f);

// ---------------------------------------------------------------------------
// Join composition

struct JoinComposition {
  Graph graph;
  /// Vertex v of the second operand became second_offset + v.
  int second_offset = 0;
};

/// (G1, S1) ⊗ (G2, S2): disjoint union plus every edge of S1 × S2.
JoinComposition join_compose(const Graph& g1, std::span<const Vertex> s1, const Graph& g2,
                             std::span<const Vertex> s2);

// ---------------------------------------------------------------------------
// Edge-list text format

/// Parses "n m" followed by m lines "u v". Lines starting with '#' and blank
/// lines are skipped; CRLF is accepted. Throws ParseError naming the line.
Graph parse_graph(std::string_view text);
Graph parse_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

/// Writes the edge-list format; each comment line is prefixed with "# ".
void write_graph(std::ostream& out, const Graph& g, std::span<const std::string> comments = {});
std::string to_edge_list(const Graph& g, std::span<const std::string> comments = {});

}  // namespace chordkern
