#include "chordkern/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "chordkern/blocks.hpp"
#include "chordkern/errors.hpp"
#include "chordkern/recognition.hpp"

namespace chordkern {

std::uint64_t search_space(std::size_t pairs, int k) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  std::uint64_t term = 1;  // C(p, i)
  for (int i = 0; i <= k && static_cast<std::size_t>(i) <= pairs; ++i) {
    if (i > 0) {
      const std::uint64_t num = pairs - static_cast<std::size_t>(i) + 1;
      // term * num / i without overflow where possible.
      if (term > kMax / num) return kMax;
      term = term * num / static_cast<std::uint64_t>(i);
    }
    if (total > kMax - term) return kMax;
    total += term;
  }
  return total;
}

std::vector<Edge> candidate_pairs(const Graph& g, EditKind kind) {
  std::vector<Edge> out;
  const int n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const bool edge = g.adjacent(u, v);
      if (kind == EditKind::edit || (kind == EditKind::completion && !edge) ||
          (kind == EditKind::deletion && edge)) {
        out.emplace_back(u, v);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

MaskGraph MaskGraph::from(const Graph& g) {
  if (g.vertex_count() > 64) throw ContractError("MaskGraph supports at most 64 vertices");
  MaskGraph m;
  m.n = g.vertex_count();
  for (const Edge& e : g.edges()) m.toggle(e.u, e.v);
  return m;
}

bool mask_is_chordal(const MaskGraph& g) {
  const int n = g.n;
  std::array<int, 64> weight{};
  std::array<int, 64> order{};  // elimination order: reverse of visit order
  std::uint64_t unvisited = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (int i = n - 1; i >= 0; --i) {
    int best = -1;
    for (std::uint64_t rest = unvisited; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (best == -1 || weight[v] > weight[best]) best = v;
    }
    order[i] = best;
    unvisited &= ~(std::uint64_t{1} << best);
    for (std::uint64_t nb = g.rows[best] & unvisited; nb; nb &= nb - 1) ++weight[std::countr_zero(nb)];
  }
  std::uint64_t later = 0;
  std::array<int, 64> pos{};
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  // Sweep from the end so `later` holds the vertices after position i.
  for (int i = n - 1; i >= 0; --i) {
    const int v = order[i];
    const std::uint64_t ln = g.rows[v] & later;
    if (ln) {
      int parent = -1;
      for (std::uint64_t rest = ln; rest; rest &= rest - 1) {
        const int w = std::countr_zero(rest);
        if (parent == -1 || pos[w] < pos[parent]) parent = w;
      }
      const std::uint64_t others = ln & ~(std::uint64_t{1} << parent);
      if (others & ~g.rows[parent]) return false;
    }
    later |= std::uint64_t{1} << v;
  }
  return true;
}

bool mask_is_block(const MaskGraph& g) {
  if (!mask_is_chordal(g)) return false;
  // Chordal and diamond-free: common neighbors of every edge form a clique.
  for (int u = 0; u < g.n; ++u) {
    for (std::uint64_t nb = g.rows[u] & ~((std::uint64_t{2} << u) - 1); nb; nb &= nb - 1) {
      const int v = std::countr_zero(nb);
      const std::uint64_t common = g.rows[u] & g.rows[v];
      for (std::uint64_t rest = common; rest; rest &= rest - 1) {
        const int x = std::countr_zero(rest);
        if ((common & ~(std::uint64_t{1} << x)) & ~g.rows[x]) return false;
      }
    }
  }
  return true;
}

bool mask_is_strictly_chordal(const MaskGraph& g) {
  std::array<std::uint64_t, 64> closed{};
  for (int v = 0; v < g.n; ++v) closed[v] = g.rows[v] | (std::uint64_t{1} << v);
  std::array<int, 64> reps{};
  int r = 0;
  for (int v = 0; v < g.n; ++v) {
    bool fresh = true;
    for (int i = 0; i < r && fresh; ++i) fresh = closed[reps[i]] != closed[v];
    if (fresh) reps[r++] = v;
  }
  MaskGraph q;
  q.n = r;
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      if (g.adjacent(reps[i], reps[j])) q.toggle(i, j);
    }
  }
  return mask_is_block(q);
}

bool mask_is_member(const MaskGraph& g, GraphClass c) {
  switch (c) {
    case GraphClass::chordal: return mask_is_chordal(g);
    case GraphClass::block: return mask_is_block(g);
    case GraphClass::strictly_chordal: return mask_is_strictly_chordal(g);
  }
  return false;
}

// ---------------------------------------------------------------------------

namespace {

// Calls visit(F) for every subset of `pairs` of size exactly s in
// lexicographic index order; stops when visit returns true.
template <typename Visit>
bool for_each_subset(std::size_t p, int s, Visit&& visit) {
  if (static_cast<std::size_t>(s) > p) return false;
  std::vector<std::size_t> idx(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) idx[i] = static_cast<std::size_t>(i);
  while (true) {
    if (visit(idx)) return true;
    int i = s - 1;
    while (i >= 0 && idx[i] == p - static_cast<std::size_t>(s - i)) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
}

class Searcher {
 public:
  Searcher(const Instance& inst, std::uint64_t budget)
      : inst_(inst), cls_(target_class(inst.variant)), kind_(edit_kind(inst.variant)),
        pairs_(candidate_pairs(inst.graph, kind_)) {
    if (inst.k < 0) throw ContractError("k must be nonnegative");
    const std::uint64_t need = search_space(pairs_.size(), inst.k);
    if (need > budget) throw BudgetExceeded(need, budget);
    use_mask_ = inst.graph.vertex_count() <= 64;
    if (use_mask_) mask_ = MaskGraph::from(inst.graph);
  }

  bool accepts(const std::vector<std::size_t>& idx) {
    if (use_mask_) {
      for (std::size_t i : idx) mask_.toggle(pairs_[i].u, pairs_[i].v);
      const bool ok = mask_is_member(mask_, cls_);
      for (std::size_t i : idx) mask_.toggle(pairs_[i].u, pairs_[i].v);
      return ok;
    }
    return is_member(apply_edits(inst_.graph, to_set(idx)), cls_);
  }

  EditSet to_set(const std::vector<std::size_t>& idx) const {
    std::vector<Edge> f;
    for (std::size_t i : idx) f.push_back(pairs_[i]);
    return EditSet(kind_, std::move(f));
  }

  std::size_t pair_count() const { return pairs_.size(); }

 private:
  const Instance& inst_;
  GraphClass cls_;
  EditKind kind_;
  std::vector<Edge> pairs_;
  bool use_mask_ = false;
  MaskGraph mask_;
};

}  // namespace

std::optional<EditSet> brute_force_optimum(const Instance& inst, std::uint64_t budget) {
  Searcher s(inst, budget);
  for (int size = 0; size <= inst.k; ++size) {
    std::optional<EditSet> found;
    for_each_subset(s.pair_count(), size, [&](const std::vector<std::size_t>& idx) {
      if (!s.accepts(idx)) return false;
      found = s.to_set(idx);
      return true;
    });
    if (found) return found;
  }
  return std::nullopt;
}

std::vector<EditSet> all_optimal_solutions(const Instance& inst, std::uint64_t budget) {
  Searcher s(inst, budget);
  std::vector<EditSet> out;
  for (int size = 0; size <= inst.k && out.empty(); ++size) {
    for_each_subset(s.pair_count(), size, [&](const std::vector<std::size_t>& idx) {
      if (s.accepts(idx)) out.push_back(s.to_set(idx));
      return false;
    });
  }
  return out;
}

EditSet block_completion_exact(const Graph& g) {
  std::vector<Edge> f;
  for (const auto& block : biconnected_components(g).blocks) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t j = i + 1; j < block.size(); ++j) {
        if (!g.adjacent(block[i], block[j])) f.emplace_back(block[i], block[j]);
      }
    }
  }
  return EditSet(EditKind::completion, std::move(f));
}

bool verify_solution(const Instance& inst, const EditSet& f) {
  if (f.kind() != edit_kind(inst.variant)) {
    throw ContractError("edit set kind does not match variant " + to_flag(inst.variant));
  }
  f.check_against(inst.graph);
  if (static_cast<int>(f.size()) > inst.k) return false;
  return is_member(apply_edits(inst.graph, f), target_class(inst.variant));
}

}  // namespace chordkern
