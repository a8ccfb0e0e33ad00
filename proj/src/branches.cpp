#include "chordkern/branches.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "chordkern/blocks.hpp"
#include "chordkern/critical_clique.hpp"
#include "chordkern/errors.hpp"
#include "chordkern/recognition.hpp"

namespace chordkern {

namespace {

// Rooted block-cut forest with subtree aggregates, answering questions about
// the pieces hanging off a cut vertex in O(1).
class PieceIndex {
 public:
  PieceIndex(const Graph& h, const std::vector<int>& weight)
      : d_(biconnected_components(h)), t_(block_cut_tree(h, d_)) {
    const int nodes = t_.node_count();
    parent_.assign(static_cast<std::size_t>(nodes), -1);
    root_.assign(static_cast<std::size_t>(nodes), -1);
    tin_.assign(static_cast<std::size_t>(nodes), 0);
    tout_.assign(static_cast<std::size_t>(nodes), 0);
    sub_bad_.assign(static_cast<std::size_t>(nodes), 0);
    sub_weight_.assign(static_cast<std::size_t>(nodes), 0);
    for (int b = 0; b < t_.block_count; ++b) {
      if (!is_clique(h, d_.blocks[b])) sub_bad_[b] = 1;
    }
    for (Vertex x = 0; x < h.vertex_count(); ++x) sub_weight_[t_.node_of[x]] += weight[x];

    int timer = 0;
    std::vector<std::pair<int, std::size_t>> stack;
    std::vector<int> order;
    for (int r = 0; r < nodes; ++r) {
      if (root_[r] != -1) continue;
      root_[r] = r;
      tin_[r] = timer++;
      stack.push_back({r, 0});
      while (!stack.empty()) {
        auto& [node, next] = stack.back();
        if (next < t_.adj[node].size()) {
          const int child = t_.adj[node][next++];
          if (child == parent_[node]) continue;
          parent_[child] = node;
          root_[child] = r;
          tin_[child] = timer++;
          stack.push_back({child, 0});
        } else {
          tout_[node] = timer - 1;
          order.push_back(node);
          stack.pop_back();
        }
      }
    }
    for (int node : order) {
      if (parent_[node] != -1) {
        sub_bad_[parent_[node]] += sub_bad_[node];
        sub_weight_[parent_[node]] += sub_weight_[node];
      }
    }
  }

  const BlockDecomposition& decomposition() const { return d_; }
  const BlockCutTree& tree() const { return t_; }
  bool is_cut(Vertex v) const { return d_.is_cut_vertex(v); }
  /// Block nodes adjacent to the cut node of v; each names one piece of h - v.
  const std::vector<int>& pieces(Vertex v) const { return t_.adj[t_.node_of[v]]; }

  int piece_bad(Vertex v, int b) const {
    const int c = t_.node_of[v];
    return parent_[b] == c ? sub_bad_[b] : sub_bad_[root_[c]] - sub_bad_[c];
  }
  int piece_weight(Vertex v, int b) const {
    const int c = t_.node_of[v];
    return parent_[b] == c ? sub_weight_[b] : sub_weight_[root_[c]] - sub_weight_[c];
  }
  int component_bad(Vertex v) const { return sub_bad_[root_[t_.node_of[v]]]; }

  bool in_piece(Vertex x, Vertex v, int b) const {
    if (x == v) return false;
    const int c = t_.node_of[v];
    const int node = t_.node_of[x];
    if (parent_[b] == c) return in_subtree(node, b);
    return root_[node] == root_[c] && !in_subtree(node, c);
  }

  VertexSet piece_vertices(int n, Vertex v, int b) const {
    VertexSet out;
    for (Vertex x = 0; x < n; ++x) {
      if (in_piece(x, v, b)) out.push_back(x);
    }
    return out;
  }

 private:
  bool in_subtree(int node, int top) const {
    return root_[node] == root_[top] && tin_[top] <= tin_[node] && tin_[node] <= tout_[top];
  }

  BlockDecomposition d_;
  BlockCutTree t_;
  std::vector<int> parent_, root_, tin_, tout_, sub_bad_, sub_weight_;
};

// The graph the scan runs on: G itself for BG branches, the quotient for SC.
struct ScanBase {
  BranchKind kind;
  const Graph* g;
  Graph h;
  std::vector<VertexSet> members;  // members[x]: vertices of G represented by node x
  std::vector<int> weight;

  VertexSet expand(const VertexSet& nodes) const {
    VertexSet out;
    for (int x : nodes) out.insert(out.end(), members[x].begin(), members[x].end());
    std::sort(out.begin(), out.end());
    return out;
  }
};

ScanBase make_base(const Graph& g, BranchKind kind) {
  ScanBase s{kind, &g, {}, {}, {}};
  if (kind == BranchKind::bg) {
    s.h = g;
    for (Vertex v = 0; v < g.vertex_count(); ++v) s.members.push_back({v});
  } else {
    auto p = critical_cliques(g);
    s.h = p.quotient;
    s.members = p.classes;
  }
  for (const auto& m : s.members) s.weight.push_back(static_cast<int>(m.size()));
  return s;
}

bool signature_less(const Branch& a, const Branch& b) {
  if (a.attachment_points != b.attachment_points) return a.attachment_points < b.attachment_points;
  return a.interior < b.interior;
}

bool connected_subset(const Graph& h, const VertexSet& nodes) {
  if (nodes.empty()) return true;
  std::vector<char> allowed(static_cast<std::size_t>(h.vertex_count()), 0);
  for (int x : nodes) allowed[x] = 1;
  return connected_components(h, allowed).size() == 1;
}

Branch make_one_branch(const ScanBase& s, Vertex v, const VertexSet& interior_nodes) {
  Branch b;
  b.kind = s.kind;
  VertexSet all = interior_nodes;
  all.insert(std::lower_bound(all.begin(), all.end(), v), v);
  b.vertices = s.expand(all);
  b.attachment_points = {s.members[v]};
  b.interior = s.expand(interior_nodes);
  b.clean = connected_subset(s.h, interior_nodes);
  return b;
}

void finish(std::vector<Branch>& out, const BranchScanOptions& opt) {
  std::sort(out.begin(), out.end(), signature_less);
  if (opt.first_only && out.size() > 1) out.resize(1);
}

std::vector<Branch> scan_one(const ScanBase& s, const BranchScanOptions& opt) {
  const int n = s.h.vertex_count();
  PieceIndex index(s.h, s.weight);
  std::vector<Branch> out;
  for (Vertex v = 0; v < n; ++v) {
    if (!index.is_cut(v)) continue;
    std::vector<Branch> here;
    if (index.component_bad(v) == 0) {
      for (int b : index.pieces(v)) {
        Branch br = make_one_branch(s, v, index.piece_vertices(n, v, b));
        if (!opt.accept || opt.accept(br)) here.push_back(std::move(br));
      }
    } else {
      VertexSet interior;
      bool any_bad = false;
      for (int b : index.pieces(v)) {
        if (index.piece_bad(v, b) != 0) {
          any_bad = true;
          continue;
        }
        VertexSet piece = index.piece_vertices(n, v, b);
        interior.insert(interior.end(), piece.begin(), piece.end());
      }
      if (!any_bad || interior.empty()) continue;
      std::sort(interior.begin(), interior.end());
      Branch br = make_one_branch(s, v, interior);
      if (!opt.accept || opt.accept(br)) here.push_back(std::move(br));
    }
    out.insert(out.end(), here.begin(), here.end());
    if (opt.first_only && !out.empty()) break;
  }
  finish(out, opt);
  return out;
}

std::vector<Branch> scan_two(const ScanBase& s, const BranchScanOptions& opt) {
  const Graph& h = s.h;
  const int n = h.vertex_count();
  std::vector<Branch> out;
  for (Vertex p1 = 0; p1 < n; ++p1) {
    if (h.degree(p1) < 2) continue;
    const Vertex drop[] = {p1};
    const Graph h1 = h.without(drop);
    auto up = [p1](Vertex x) { return x < p1 ? x : x + 1; };
    auto down = [p1](Vertex x) { return x < p1 ? x : x - 1; };
    std::vector<int> w1;
    for (Vertex x = 0; x < n - 1; ++x) w1.push_back(s.weight[up(x)]);
    PieceIndex index(h1, w1);
    std::vector<Branch> here;
    for (Vertex q1 = 0; q1 < n - 1; ++q1) {
      const Vertex p2 = up(q1);
      if (p2 < p1 || !index.is_cut(q1)) continue;
      if (s.kind == BranchKind::bg && h.adjacent(p1, p2)) continue;
      for (int b : index.pieces(q1)) {
        if (index.piece_bad(q1, b) != 0) continue;
        const int total = index.piece_weight(q1, b) + s.weight[p1] + s.weight[p2];
        if (total < opt.min_vertices) continue;

        // S = N(p1) inside the piece plus p2.
        VertexSet sset;
        bool touches_piece = false;
        bool outside = false;
        for (Vertex y : h.neighbors(p1)) {
          if (y == p2) {
            sset.push_back(y);
          } else if (index.in_piece(down(y), q1, b)) {
            sset.push_back(y);
            touches_piece = true;
          } else {
            outside = true;
          }
        }
        if (!touches_piece || !outside) continue;
        // Joining p1 to S keeps the block property iff S is one vertex or a
        // maximal clique of the piece graph.
        if (sset.size() > 1) {
          if (!is_clique(h, sset)) continue;
          bool maximal = true;
          for (Vertex z : h.neighbors(sset.front())) {
            if (z == p1 || std::binary_search(sset.begin(), sset.end(), z)) continue;
            if (z != p2 && !index.in_piece(down(z), q1, b)) continue;
            bool all = true;
            for (Vertex y : sset) {
              if (!h.adjacent(z, y)) {
                all = false;
                break;
              }
            }
            if (all) {
              maximal = false;
              break;
            }
          }
          if (!maximal) continue;
        }

        VertexSet interior = index.piece_vertices(n - 1, q1, b);
        for (Vertex& x : interior) x = up(x);
        Branch br;
        br.kind = s.kind;
        br.clean = true;
        VertexSet all = interior;
        all.push_back(p1);
        all.push_back(p2);
        std::sort(all.begin(), all.end());
        br.vertices = s.expand(all);
        br.attachment_points = {s.members[p1], s.members[p2]};
        br.interior = s.expand(interior);
        if (s.kind == BranchKind::sc) {
          std::vector<char> allowed(static_cast<std::size_t>(n), 0);
          for (Vertex x : all) allowed[x] = 1;
          br.length = bfs_distances(h, p1, &allowed)[p2];
          if (*br.length < opt.min_length) continue;
        }
        br.mincut_value = separating_cut(*s.g, br.vertices, br.attachment_points[0],
                                         br.attachment_points[1]).value;
        if (!opt.accept || opt.accept(br)) here.push_back(std::move(br));
      }
    }
    out.insert(out.end(), here.begin(), here.end());
    if (opt.first_only && !out.empty()) break;
  }
  finish(out, opt);
  return out;
}

}  // namespace

std::vector<Branch> find_branches(const Graph& g, BranchQuery q, const BranchScanOptions& opt) {
  switch (q) {
    case BranchQuery::one_bg: return scan_one(make_base(g, BranchKind::bg), opt);
    case BranchQuery::one_sc: return scan_one(make_base(g, BranchKind::sc), opt);
    case BranchQuery::two_bg_clean: return scan_two(make_base(g, BranchKind::bg), opt);
    case BranchQuery::two_sc_clean: return scan_two(make_base(g, BranchKind::sc), opt);
  }
  return {};
}

std::vector<VertexSet> maximal_one_branch_interiors(const Graph& h) {
  const int n = h.vertex_count();
  PieceIndex index(h, std::vector<int>(static_cast<std::size_t>(n), 1));
  std::vector<VertexSet> out(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    if (!index.is_cut(v) || index.component_bad(v) == 0) continue;
    bool any_bad = false;
    VertexSet interior;
    for (int b : index.pieces(v)) {
      if (index.piece_bad(v, b) != 0) {
        any_bad = true;
        continue;
      }
      VertexSet piece = index.piece_vertices(n, v, b);
      interior.insert(interior.end(), piece.begin(), piece.end());
    }
    if (!any_bad) continue;
    std::sort(interior.begin(), interior.end());
    out[v] = std::move(interior);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Min-cut

MinCut separating_cut(const Graph& g, const VertexSet& within, const VertexSet& source,
                      const VertexSet& sink) {
  const int n = g.vertex_count();
  std::vector<int> node(static_cast<std::size_t>(n), -1);
  int count = 2;
  for (Vertex x : within) node[x] = count++;
  for (Vertex x : source) node[x] = 0;
  for (Vertex x : sink) {
    if (node[x] == 0) throw ContractError("separating_cut: source and sink overlap");
    node[x] = 1;
  }
  struct Arc {
    int to;
    int cap;
    std::size_t rev;
  };
  std::vector<std::vector<Arc>> arcs(static_cast<std::size_t>(count));
  std::vector<std::pair<Edge, std::pair<int, std::size_t>>> originals;
  for (Vertex x : within) {
    for (Vertex y : g.neighbors(x)) {
      if (y < x || node[y] < 0) continue;
      const int a = node[x];
      const int b = node[y];
      if (a == b) continue;
      arcs[a].push_back({b, 1, arcs[b].size()});
      arcs[b].push_back({a, 1, arcs[a].size() - 1});
      originals.push_back({Edge(x, y), {a, arcs[a].size() - 1}});
    }
  }
  int flow = 0;
  while (true) {
    std::vector<std::pair<int, std::size_t>> prev(static_cast<std::size_t>(count), {-1, 0});
    std::deque<int> queue{0};
    prev[0] = {0, 0};
    while (!queue.empty() && prev[1].first == -1) {
      const int u = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < arcs[u].size(); ++i) {
        const Arc& a = arcs[u][i];
        if (a.cap > 0 && prev[a.to].first == -1) {
          prev[a.to] = {u, i};
          queue.push_back(a.to);
        }
      }
    }
    if (prev[1].first == -1) break;
    for (int v = 1; v != 0;) {
      auto [u, i] = prev[v];
      Arc& a = arcs[u][i];
      a.cap -= 1;
      arcs[a.to][a.rev].cap += 1;
      v = u;
    }
    ++flow;
  }
  std::vector<char> reach(static_cast<std::size_t>(count), 0);
  std::deque<int> queue{0};
  reach[0] = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (const Arc& a : arcs[u]) {
      if (a.cap > 0 && !reach[a.to]) {
        reach[a.to] = 1;
        queue.push_back(a.to);
      }
    }
  }
  std::vector<Edge> cut;
  for (const auto& [e, where] : originals) {
    const int a = where.first;
    const int b = arcs[a][where.second].to;
    if (reach[a] != reach[b]) cut.push_back(e);
  }
  if (static_cast<int>(cut.size()) != flow) {
    throw std::logic_error("separating_cut: cut size differs from flow value");
  }
  return {EditSet(EditKind::deletion, std::move(cut)), flow};
}

MinCut branch_min_cut(const Graph& g, const Branch& b) {
  if (b.attachment_count() != 2) {
    throw ContractError("branch_min_cut needs a branch with two attachment points, got " +
                        std::to_string(b.attachment_count()));
  }
  return separating_cut(g, b.vertices, b.attachment_points[0], b.attachment_points[1]);
}

// ---------------------------------------------------------------------------
// Spanning subgraph statistics

SpanStats span_analysis(const Graph& g, std::span<const Vertex> a) {
  if (a.empty()) throw ContractError("span_analysis: A is empty");
  if (!is_valid_vertex_set(g, a)) throw ContractError("span_analysis: A has invalid or repeated ids");
  if (connected_components(g).size() != 1 || !is_block_graph(g)) {
    throw ContractError("span_analysis: input is not a connected block graph");
  }
  const auto d = biconnected_components(g);
  const auto t = block_cut_tree(g, d);
  const int nodes = t.node_count();
  std::vector<char> required(static_cast<std::size_t>(nodes), 0);
  for (Vertex v : a) required[t.node_of[v]] = 1;
  std::vector<int> degree(static_cast<std::size_t>(nodes));
  std::vector<char> alive(static_cast<std::size_t>(nodes), 1);
  std::vector<int> leaves;
  for (int x = 0; x < nodes; ++x) {
    degree[x] = static_cast<int>(t.adj[x].size());
    if (degree[x] <= 1 && !required[x]) leaves.push_back(x);
  }
  while (!leaves.empty()) {
    const int x = leaves.back();
    leaves.pop_back();
    if (!alive[x]) continue;
    alive[x] = 0;
    for (int y : t.adj[x]) {
      if (alive[y] && --degree[y] <= 1 && !required[y]) leaves.push_back(y);
    }
  }
  std::vector<char> in_t(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : a) in_t[v] = 1;
  for (std::size_t j = 0; j < t.cut_vertices.size(); ++j) {
    if (alive[t.block_count + static_cast<int>(j)]) in_t[t.cut_vertices[j]] = 1;
  }
  SpanStats s;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (in_t[v]) s.t_vertices.push_back(v);
  }
  std::vector<char> rest = in_t;
  for (Vertex v : a) rest[v] = 0;
  for (Vertex v : s.t_vertices) {
    int deg = 0;
    for (Vertex w : g.neighbors(v)) deg += in_t[w];
    if (deg >= 3) {
      s.high_degree.push_back(v);
      rest[v] = 0;
    }
  }
  s.component_count = static_cast<int>(connected_components(g, rest).size());
  return s;
}

// ---------------------------------------------------------------------------

bool validates_branch(const Graph& g, const Branch& b) {
  const int n = g.vertex_count();
  if (!is_valid_vertex_set(g, b.vertices) || !std::is_sorted(b.vertices.begin(), b.vertices.end())) {
    return false;
  }
  std::vector<char> in_b(static_cast<std::size_t>(n), 0);
  for (Vertex v : b.vertices) in_b[v] = 1;

  VertexSet attach_union;
  for (const auto& p : b.attachment_points) {
    attach_union.insert(attach_union.end(), p.begin(), p.end());
  }
  std::sort(attach_union.begin(), attach_union.end());
  VertexSet expected_interior;
  std::set_difference(b.vertices.begin(), b.vertices.end(), attach_union.begin(),
                      attach_union.end(), std::back_inserter(expected_interior));
  if (expected_interior != b.interior) return false;

  // Vertices with outside neighbors are exactly the attachment points.
  VertexSet with_outside;
  for (Vertex v : b.vertices) {
    for (Vertex w : g.neighbors(v)) {
      if (!in_b[w]) {
        with_outside.push_back(v);
        break;
      }
    }
  }

  if (b.kind == BranchKind::bg) {
    for (const auto& p : b.attachment_points) {
      if (p.size() != 1) return false;
    }
    if (with_outside != attach_union) return false;
    Graph sub = g.induced(b.vertices);
    if (connected_components(sub).size() != 1 || !is_block_graph(sub)) return false;
    if (b.attachment_count() == 2) {
      if (g.adjacent(b.attachment_points[0][0], b.attachment_points[1][0])) return false;
      if (!connected_subset(g, b.interior) || b.interior.empty()) return false;
    }
  } else {
    auto p = critical_cliques(g);
    std::vector<int> classes;
    for (Vertex v : b.vertices) {
      if (p.classes[p.class_of[v]].front() == v) classes.push_back(p.class_of[v]);
    }
    if (expand_classes(p, classes) != b.vertices) return false;
    for (const auto& ap : b.attachment_points) {
      if (ap != p.classes[p.class_of[ap.front()]]) return false;
    }
    // Attachment classes are exactly the classes with an outside neighbor.
    VertexSet outside_classes_members;
    for (int c : classes) {
      for (Vertex w : g.neighbors(p.classes[c].front())) {
        if (!in_b[w]) {
          outside_classes_members.insert(outside_classes_members.end(), p.classes[c].begin(),
                                         p.classes[c].end());
          break;
        }
      }
    }
    std::sort(outside_classes_members.begin(), outside_classes_members.end());
    if (outside_classes_members != attach_union) return false;
    Graph sub = p.quotient.induced(classes);
    if (connected_components(sub).size() != 1 || !is_block_graph(sub)) return false;
    if (b.attachment_count() == 2) {
      if (!connected_subset(g, b.interior) || b.interior.empty()) return false;
      std::vector<char> allowed(static_cast<std::size_t>(n), 0);
      for (Vertex v : b.vertices) allowed[v] = 1;
      const int dist = bfs_distances(g, b.attachment_points[0].front(), &allowed)
          [b.attachment_points[1].front()];
      if (!b.length || *b.length != dist) return false;
    }
  }
  if (b.attachment_count() == 2 && b.mincut_value) {
    if (branch_min_cut(g, b).value != *b.mincut_value) return false;
  }
  return true;
}

}  // namespace chordkern
