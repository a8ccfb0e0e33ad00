#include "chordkern/recognition.hpp"

#include <algorithm>
#include <numeric>

#include "chordkern/errors.hpp"

namespace chordkern {

std::string to_string(GraphClass c) {
  switch (c) {
    case GraphClass::chordal: return "chordal";
    case GraphClass::block: return "block";
    case GraphClass::strictly_chordal: return "strictly_chordal";
  }
  return "?";
}

std::string to_string(ObstructionKind k) {
  switch (k) {
    case ObstructionKind::hole: return "hole";
    case ObstructionKind::diamond: return "diamond";
    case ObstructionKind::dart: return "dart";
    case ObstructionKind::gem: return "gem";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Chordality

std::vector<Vertex> mcs_elimination_order(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<Vertex>> buckets(static_cast<std::size_t>(n) + 1);
  for (Vertex v = n - 1; v >= 0; --v) buckets[0].push_back(v);
  std::vector<Vertex> visit;
  visit.reserve(static_cast<std::size_t>(n));
  int top = 0;
  while (static_cast<int>(visit.size()) < n) {
    Vertex v = -1;
    while (v == -1) {
      auto& b = buckets[top];
      while (!b.empty() && (done[b.back()] || weight[b.back()] != top)) b.pop_back();
      if (b.empty()) {
        --top;
      } else {
        v = b.back();
        b.pop_back();
      }
    }
    done[v] = 1;
    visit.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (done[w]) continue;
      ++weight[w];
      buckets[weight[w]].push_back(w);
      top = std::max(top, weight[w]);
    }
  }
  std::reverse(visit.begin(), visit.end());
  return visit;
}

bool is_perfect_elimination_order(const Graph& g, std::span<const Vertex> order) {
  const int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n || !is_valid_vertex_set(g, order)) return false;
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  for (Vertex v : order) {
    VertexSet later;
    for (Vertex w : g.neighbors(v)) {
      if (pos[w] > pos[v]) later.push_back(w);
    }
    if (!is_clique(g, later)) return false;
  }
  return true;
}

namespace {

struct PeoFailure {
  Vertex v;
  Vertex u;
  Vertex w;
};

// Linear-time check of an elimination order: every vertex's later
// neighbors, except the earliest one, must be adjacent to that earliest one.
std::optional<PeoFailure> first_peo_failure(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.vertex_count();
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  for (Vertex v : order) {
    Vertex parent = -1;
    for (Vertex w : g.neighbors(v)) {
      if (pos[w] > pos[v] && (parent == -1 || pos[w] < pos[parent])) parent = w;
    }
    if (parent == -1) continue;
    for (Vertex w : g.neighbors(v)) {
      if (pos[w] > pos[v] && w != parent && !g.adjacent(parent, w)) return PeoFailure{v, parent, w};
    }
  }
  return std::nullopt;
}

// Chordless cycle through v, u, w closed by a shortest u-w path avoiding N[v].
std::optional<std::vector<Vertex>> hole_through(const Graph& g, Vertex v, Vertex u, Vertex w) {
  std::vector<char> allowed(static_cast<std::size_t>(g.vertex_count()), 1);
  allowed[v] = 0;
  for (Vertex x : g.neighbors(v)) allowed[x] = 0;
  allowed[u] = 1;
  allowed[w] = 1;
  std::vector<int> dist = bfs_distances(g, w, &allowed);
  if (dist[u] < 0) return std::nullopt;
  std::vector<Vertex> cycle{v, u};
  Vertex cur = u;
  while (cur != w) {
    for (Vertex x : g.neighbors(cur)) {
      if (allowed[x] && dist[x] == dist[cur] - 1) {
        cur = x;
        break;
      }
    }
    cycle.push_back(cur);
  }
  return cycle;
}

}  // namespace

bool is_chordal(const Graph& g) {
  return !first_peo_failure(g, mcs_elimination_order(g)).has_value();
}

std::optional<Obstruction> find_hole(const Graph& g) {
  auto failure = first_peo_failure(g, mcs_elimination_order(g));
  if (!failure) return std::nullopt;
  if (auto cycle = hole_through(g, failure->v, failure->u, failure->w)) {
    return Obstruction{ObstructionKind::hole, std::move(*cycle)};
  }
  // Every hole passes through some vertex with two nonadjacent neighbors on it.
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        if (auto cycle = hole_through(g, v, nb[i], nb[j])) {
          return Obstruction{ObstructionKind::hole, std::move(*cycle)};
        }
      }
    }
  }
  throw std::logic_error("find_hole: elimination order failed but no hole found");
}

// ---------------------------------------------------------------------------
// Diamonds, darts, gems

std::optional<Obstruction> find_diamond(const Graph& g) {
  for (const Edge& e : g.edges()) {
    VertexSet common;
    std::set_intersection(g.neighbors(e.u).begin(), g.neighbors(e.u).end(),
                          g.neighbors(e.v).begin(), g.neighbors(e.v).end(),
                          std::back_inserter(common));
    for (std::size_t i = 0; i < common.size(); ++i) {
      for (std::size_t j = i + 1; j < common.size(); ++j) {
        if (!g.adjacent(common[i], common[j])) {
          return Obstruction{ObstructionKind::diamond, {e.u, e.v, common[i], common[j]}};
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

// Given a diamond h1 h2 x y and a fifth vertex e, the pattern it forms, if any.
std::optional<Obstruction> classify_fifth(const Graph& g, Vertex h1, Vertex h2, Vertex x, Vertex y,
                                          Vertex e) {
  const bool a1 = g.adjacent(e, h1);
  const bool a2 = g.adjacent(e, h2);
  const bool ax = g.adjacent(e, x);
  const bool ay = g.adjacent(e, y);
  if (a1 == a2) return std::nullopt;
  const Vertex hub = a1 ? h1 : h2;
  const Vertex other = a1 ? h2 : h1;
  if (!ax && !ay) return Obstruction{ObstructionKind::dart, {hub, other, x, y, e}};
  if (ax && !ay) return Obstruction{ObstructionKind::gem, {hub, e, x, other, y}};
  if (ay && !ax) return Obstruction{ObstructionKind::gem, {hub, e, y, other, x}};
  return Obstruction{ObstructionKind::hole, {e, x, other, y}};
}

}  // namespace

std::optional<Obstruction> find_dart_or_gem(const Graph& g) {
  const int n = g.vertex_count();
  for (const Edge& hub : g.edges()) {
    VertexSet common;
    std::set_intersection(g.neighbors(hub.u).begin(), g.neighbors(hub.u).end(),
                          g.neighbors(hub.v).begin(), g.neighbors(hub.v).end(),
                          std::back_inserter(common));
    for (std::size_t i = 0; i < common.size(); ++i) {
      for (std::size_t j = i + 1; j < common.size(); ++j) {
        const Vertex x = common[i];
        const Vertex y = common[j];
        if (g.adjacent(x, y)) continue;
        for (Vertex e = 0; e < n; ++e) {
          if (e == hub.u || e == hub.v || e == x || e == y) continue;
          auto o = classify_fifth(g, hub.u, hub.v, x, y, e);
          if (o && o->kind != ObstructionKind::hole) return o;
        }
      }
    }
  }
  return std::nullopt;
}

bool matches_obstruction(const Graph& g, const Obstruction& o) {
  const auto& vs = o.vertices;
  if (!is_valid_vertex_set(g, vs)) return false;
  const int s = static_cast<int>(vs.size());
  auto pattern = [&](int i, int j) -> bool {
    switch (o.kind) {
      case ObstructionKind::hole: return (i + 1) % s == j || (j + 1) % s == i;
      case ObstructionKind::diamond: return !(i >= 2 && j >= 2);
      case ObstructionKind::dart:
        if (i == 4 || j == 4) return i == 0 || j == 0;
        return !(i >= 2 && j >= 2);
      case ObstructionKind::gem:
        if (i == 0 || j == 0) return true;
        return i - j == 1 || j - i == 1;
    }
    return false;
  };
  switch (o.kind) {
    case ObstructionKind::hole:
      if (s < 4) return false;
      break;
    case ObstructionKind::diamond:
      if (s != 4) return false;
      break;
    case ObstructionKind::dart:
    case ObstructionKind::gem:
      if (s != 5) return false;
      break;
  }
  for (int i = 0; i < s; ++i) {
    for (int j = i + 1; j < s; ++j) {
      if (g.adjacent(vs[i], vs[j]) != pattern(i, j)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Recognizers

bool is_block_graph(const Graph& g) {
  return all_blocks_cliques(g, biconnected_components(g));
}

bool is_strictly_chordal(const Graph& g) {
  return is_block_graph(critical_cliques(g).quotient);
}

bool is_member(const Graph& g, GraphClass c) {
  switch (c) {
    case GraphClass::chordal: return is_chordal(g);
    case GraphClass::block: return is_block_graph(g);
    case GraphClass::strictly_chordal: return is_strictly_chordal(g);
  }
  return false;
}

namespace {

Obstruction block_obstruction(const Graph& g, const BlockDecomposition& d) {
  for (const auto& block : d.blocks) {
    if (is_clique(g, block)) continue;
    Graph sub = g.induced(block);
    auto o = find_diamond(sub);
    if (!o) o = find_hole(sub);
    for (Vertex& v : o->vertices) v = block[v];
    return *o;
  }
  throw std::logic_error("block_obstruction: every block is a clique");
}

Obstruction strictly_chordal_obstruction(const Graph& g, const CriticalCliquePartition& p) {
  if (auto hole = find_hole(g)) return *hole;
  // g is chordal, so the quotient (an induced subgraph on class representatives)
  // is chordal too and must contain a diamond.
  auto qd = find_diamond(p.quotient);
  if (!qd) throw std::logic_error("strictly_chordal_obstruction: quotient is a block graph");
  const Vertex h1 = p.classes[qd->vertices[0]].front();
  const Vertex h2 = p.classes[qd->vertices[1]].front();
  const Vertex x = p.classes[qd->vertices[2]].front();
  const Vertex y = p.classes[qd->vertices[3]].front();
  for (Vertex e = 0; e < g.vertex_count(); ++e) {
    if (e == h1 || e == h2) continue;
    if (auto o = classify_fifth(g, h1, h2, x, y, e)) return *o;
  }
  throw std::logic_error("strictly_chordal_obstruction: hubs are twins");
}

}  // namespace

Verdict recognize(const Graph& g, GraphClass c) {
  switch (c) {
    case GraphClass::chordal: {
      auto order = mcs_elimination_order(g);
      if (!first_peo_failure(g, order)) return {true, ChordalWitness{std::move(order)}};
      return {false, *find_hole(g)};
    }
    case GraphClass::block: {
      auto d = biconnected_components(g);
      if (all_blocks_cliques(g, d)) return {true, BlockWitness{std::move(d)}};
      return {false, block_obstruction(g, d)};
    }
    case GraphClass::strictly_chordal: {
      auto p = critical_cliques(g);
      auto qd = biconnected_components(p.quotient);
      if (all_blocks_cliques(p.quotient, qd)) {
        return {true, StrictlyChordalWitness{std::move(p), std::move(qd)}};
      }
      return {false, strictly_chordal_obstruction(g, p)};
    }
  }
  throw std::logic_error("recognize: unknown class");
}

namespace {

// Blocks are cliques covering every edge once, and the vertex-block incidence
// graph is a forest.
bool validates_block_structure(const Graph& g, const std::vector<VertexSet>& blocks) {
  const int n = g.vertex_count();
  std::size_t pair_total = 0;
  std::size_t incidences = 0;
  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  for (const auto& b : blocks) {
    if (b.empty() || !is_valid_vertex_set(g, b) || !is_clique(g, b)) return false;
    pair_total += b.size() * (b.size() - 1) / 2;
    incidences += b.size();
    for (Vertex v : b) covered[v] = 1;
  }
  if (pair_total != g.edge_count()) return false;
  if (std::find(covered.begin(), covered.end(), 0) != covered.end()) return false;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      VertexSet a = blocks[i];
      VertexSet b = blocks[j];
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      VertexSet both;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
      if (both.size() > 1) return false;
    }
  }
  const std::size_t components = connected_components(g).size();
  return incidences + components == static_cast<std::size_t>(n) + blocks.size();
}

}  // namespace

bool validates(const Graph& g, GraphClass c, const Verdict& v) {
  if (!v.member) {
    if (!std::holds_alternative<Obstruction>(v.certificate)) return false;
    const auto& o = v.obstruction();
    if (!matches_obstruction(g, o)) return false;
    switch (c) {
      case GraphClass::chordal: return o.kind == ObstructionKind::hole;
      case GraphClass::block:
        return o.kind == ObstructionKind::hole || o.kind == ObstructionKind::diamond;
      case GraphClass::strictly_chordal: return o.kind != ObstructionKind::diamond;
    }
    return false;
  }
  switch (c) {
    case GraphClass::chordal: {
      const auto* w = std::get_if<ChordalWitness>(&v.certificate);
      return w != nullptr && is_perfect_elimination_order(g, w->elimination_order);
    }
    case GraphClass::block: {
      const auto* w = std::get_if<BlockWitness>(&v.certificate);
      return w != nullptr && validates_block_structure(g, w->decomposition.blocks);
    }
    case GraphClass::strictly_chordal: {
      const auto* w = std::get_if<StrictlyChordalWitness>(&v.certificate);
      if (w == nullptr) return false;
      const auto& p = w->partition;
      std::vector<int> seen(static_cast<std::size_t>(g.vertex_count()), -1);
      for (int ci = 0; ci < p.size(); ++ci) {
        if (p.classes[ci].empty()) return false;
        for (Vertex x : p.classes[ci]) {
          if (x < 0 || x >= g.vertex_count() || seen[x] != -1) return false;
          seen[x] = ci;
        }
      }
      if (std::find(seen.begin(), seen.end(), -1) != seen.end()) return false;
      auto closed = [&](Vertex x) {
        VertexSet s = g.neighbors(x);
        s.insert(std::lower_bound(s.begin(), s.end(), x), x);
        return s;
      };
      std::vector<VertexSet> rep_closed;
      for (const auto& cls : p.classes) {
        const VertexSet first = closed(cls.front());
        for (Vertex x : cls) {
          if (closed(x) != first) return false;
        }
        rep_closed.push_back(first);
      }
      std::vector<VertexSet> sorted = rep_closed;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
      if (p.quotient.vertex_count() != p.size()) return false;
      for (int a = 0; a < p.size(); ++a) {
        for (int b = a + 1; b < p.size(); ++b) {
          if (p.quotient.adjacent(a, b) != g.adjacent(p.classes[a].front(), p.classes[b].front())) {
            return false;
          }
        }
      }
      return validates_block_structure(p.quotient, w->quotient_blocks.blocks);
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Characterizations

std::vector<VertexSet> minimal_separators(const Graph& g, int cap) {
  const int n = g.vertex_count();
  if (n > cap) {
    throw SizeLimitError("minimal separator enumeration supports n <= " + std::to_string(cap) +
                         ", got n = " + std::to_string(n));
  }
  std::vector<VertexSet> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<char> allowed(static_cast<std::size_t>(n), 1);
    VertexSet s;
    for (Vertex v = 0; v < n; ++v) {
      if (mask >> v & 1U) {
        allowed[v] = 0;
        s.push_back(v);
      }
    }
    int full = 0;
    for (const auto& comp : connected_components(g, allowed)) {
      if (open_neighborhood(g, comp) == s) ++full;
    }
    if (full >= 2) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Characterizations sc_characterizations(const Graph& g, int cap) {
  const int n = g.vertex_count();
  if (n > cap) {
    throw SizeLimitError("characterization cross-check supports n <= " + std::to_string(cap) +
                         ", got n = " + std::to_string(n));
  }
  Characterizations r;

  // (1) Peel true twins one by one, then test the block property.
  {
    Graph h = g;
    bool changed = true;
    while (changed) {
      changed = false;
      for (Vertex u = 0; u < h.vertex_count() && !changed; ++u) {
        for (Vertex v = u + 1; v < h.vertex_count() && !changed; ++v) {
          if (!h.adjacent(u, v)) continue;
          bool twins = true;
          for (Vertex x = 0; x < h.vertex_count() && twins; ++x) {
            if (x != u && x != v && h.adjacent(u, x) != h.adjacent(v, x)) twins = false;
          }
          if (twins) {
            const Vertex drop[] = {v};
            h = h.without(drop);
            changed = true;
          }
        }
      }
    }
    r.twin_reduction = is_block_graph(h);
  }

  // (2) Quotient graph.
  r.quotient_block = is_block_graph(critical_clique_graph(g));

  // (3) Forbidden patterns.
  const bool chordal = is_chordal(g);
  r.obstruction_free = chordal && !find_dart_or_gem(g).has_value();

  // (4) Pairwise disjoint minimal separators.
  if (chordal) {
    auto seps = minimal_separators(g, cap);
    bool disjoint = true;
    for (std::size_t i = 0; i < seps.size() && disjoint; ++i) {
      for (std::size_t j = i + 1; j < seps.size() && disjoint; ++j) {
        VertexSet both;
        std::set_intersection(seps[i].begin(), seps[i].end(), seps[j].begin(), seps[j].end(),
                              std::back_inserter(both));
        if (!both.empty()) disjoint = false;
      }
    }
    r.disjoint_separators = disjoint;
  }
  return r;
}

}  // namespace chordkern
