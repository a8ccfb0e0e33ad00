#include "chordkern/instance_gen.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "chordkern/blocks.hpp"
#include "chordkern/errors.hpp"
#include "chordkern/oracle.hpp"

namespace chordkern {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) { return next() % bound; }

int SplitMix64::between(int lo, int hi) {
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

namespace {

template <typename T>
void shuffle_in_place(std::vector<T>& v, SplitMix64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

Graph relabel_randomly(int n, std::vector<Edge> edges, SplitMix64& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  shuffle_in_place(perm, rng);
  for (Edge& e : edges) e = Edge(perm[e.u], perm[e.v]);
  std::sort(edges.begin(), edges.end());
  return Graph(n, edges);
}

// Connected block graph on n vertices: each step attaches a clique of 2..max
// vertices (including the attachment vertex) at a random existing vertex.
std::vector<Edge> grow_block_edges(int n, int max_clique, SplitMix64& rng) {
  std::vector<Edge> edges;
  int count = 1;
  while (count < n) {
    if (max_clique == 1) {
      ++count;
      continue;
    }
    const Vertex at = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(count)));
    const int extra = std::min(rng.between(1, max_clique - 1), n - count);
    std::vector<Vertex> clique{at};
    for (int i = 0; i < extra; ++i) clique.push_back(count++);
    for (std::size_t i = 0; i < clique.size(); ++i) {
      for (std::size_t j = i + 1; j < clique.size(); ++j) edges.emplace_back(clique[i], clique[j]);
    }
  }
  return edges;
}

}  // namespace

Graph generate_member(const GenSpec& spec) {
  if (spec.vertices <= 0 || spec.max_clique <= 0 || spec.twin_cap <= 0) {
    throw ContractError("generator parameters must be positive");
  }
  if (spec.cls == GraphClass::chordal) throw ContractError("generator supports block and strictly_chordal");
  SplitMix64 rng(spec.seed);
  const int n = spec.vertices;

  if (spec.cls == GraphClass::block) {
    return relabel_randomly(n, grow_block_edges(n, spec.max_clique, rng), rng);
  }

  // Base block graph, then true twins of (preferably) cut vertices.
  const int cap = spec.twin_cap;
  const int base_n = std::max((n + cap - 1) / cap, n - n / 3);
  const Graph base(base_n, grow_block_edges(base_n, spec.max_clique, rng));
  const auto cuts = biconnected_components(base).cut_vertices;

  std::vector<Vertex> origin(static_cast<std::size_t>(n));
  std::vector<int> class_size(static_cast<std::size_t>(base_n), 1);
  for (Vertex v = 0; v < base_n; ++v) origin[v] = v;
  std::vector<Edge> edges = base.edges();

  for (Vertex fresh = base_n; fresh < n; ++fresh) {
    std::vector<Vertex> pool;
    for (Vertex c : cuts) {
      if (class_size[c] < cap) pool.push_back(c);
    }
    if (pool.empty()) {
      for (Vertex v = 0; v < base_n; ++v) {
        if (class_size[v] < cap) pool.push_back(v);
      }
    }
    const Vertex root = pool[rng.below(pool.size())];
    ++class_size[root];
    origin[fresh] = root;
    // Twin of root: adjacent to root's whole class and to root's base neighbours' classes.
    for (Vertex w = 0; w < fresh; ++w) {
      const Vertex ow = origin[w];
      if (ow == root || base.adjacent(ow, root)) edges.emplace_back(w, fresh);
    }
  }
  return relabel_randomly(n, std::move(edges), rng);
}

PlantedInstance plant(const GenSpec& spec, int k, ProblemVariant variant, std::uint64_t seed) {
  if (k < 1) throw ContractError("plant requires k >= 1");
  if (spec.cls != target_class(variant)) throw ContractError("generator class does not match variant");
  const Graph base = generate_member(spec);
  SplitMix64 rng(seed);

  // Deletion is undone by adding edges, completion by removing them.
  const EditKind kind = edit_kind(variant);
  const EditKind perturb = kind == EditKind::deletion    ? EditKind::completion
                           : kind == EditKind::completion ? EditKind::deletion
                                                          : EditKind::edit;
  std::vector<Edge> pool = candidate_pairs(base, perturb);
  if (static_cast<int>(pool.size()) < k) {
    throw GenerationError("not enough legal pairs to plant " + std::to_string(k) + " edits");
  }
  for (int i = 0; i < k; ++i) {
    const std::size_t j = static_cast<std::size_t>(i) + rng.below(pool.size() - static_cast<std::size_t>(i));
    std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
  }
  pool.resize(static_cast<std::size_t>(k));
  const Graph perturbed = apply_edits(base, EditSet(perturb, pool));
  return {Instance{perturbed, k, variant}, EditSet(kind, std::move(pool))};
}

Instance reduce_from_cluster(const Graph& g, int k, ProblemVariant target) {
  if (k < 0) throw ContractError("k must be nonnegative");
  const int n = g.vertex_count();
  std::vector<Edge> edges = g.edges();
  switch (target) {
    case ProblemVariant::bg_deletion:
    case ProblemVariant::bg_editing:
      for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, n);
      return Instance{Graph(n + 1, edges), k, target};
    case ProblemVariant::sc_deletion:
    case ProblemVariant::sc_editing: {
      const int u = k + 1;
      for (Vertex a = n; a < n + u; ++a) {
        for (Vertex b = a + 1; b < n + u; ++b) edges.emplace_back(a, b);
        for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, a);
      }
      Vertex next = n + u;
      for (Vertex v = 0; v < n; ++v) {
        for (int i = 0; i < k + 1; ++i) edges.emplace_back(v, next++);
      }
      return Instance{Graph(next, edges), k, target};
    }
    default:
      throw ContractError("reduction targets are BG/SC deletion and editing");
  }
}

namespace {

bool mask_is_cluster(const MaskGraph& g) {
  for (int v = 0; v < g.n; ++v) {
    const std::uint64_t closed = g.rows[v] | (std::uint64_t{1} << v);
    for (std::uint64_t nb = g.rows[v]; nb; nb &= nb - 1) {
      const int w = std::countr_zero(nb);
      if ((g.rows[w] | (std::uint64_t{1} << w)) != closed) return false;
    }
  }
  return true;
}

bool cluster_search(MaskGraph& g, const std::vector<Edge>& pairs, std::size_t from, int left) {
  if (mask_is_cluster(g)) return true;
  if (left == 0) return false;
  for (std::size_t i = from; i < pairs.size(); ++i) {
    g.toggle(pairs[i].u, pairs[i].v);
    const bool ok = cluster_search(g, pairs, i + 1, left - 1);
    g.toggle(pairs[i].u, pairs[i].v);
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool is_cluster_graph(const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (Vertex w : g.neighbors(v)) {
      if (g.degree(w) != g.degree(v)) return false;
      for (Vertex x : g.neighbors(w)) {
        if (x != v && !g.adjacent(v, x)) return false;
      }
    }
  }
  return true;
}

std::optional<int> cluster_optimum(const Graph& g, int k, EditKind kind) {
  if (kind == EditKind::completion) throw ContractError("cluster completion is trivial and unsupported");
  MaskGraph m = MaskGraph::from(g);
  const auto pairs = candidate_pairs(g, kind);
  for (int s = 0; s <= k; ++s) {
    if (cluster_search(m, pairs, 0, s)) return s;
  }
  return std::nullopt;
}

}  // namespace chordkern
