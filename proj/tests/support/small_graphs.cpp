#include "small_graphs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace chordkern::testing {

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 8) throw std::invalid_argument("canonical_code supports n <= 8");
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  // Cells of equal degree, in degree order; only permutations inside cells.
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::pair(g.degree(a), a) < std::pair(g.degree(b), b);
  });
  std::vector<std::pair<int, int>> cells;  // [begin, end)
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && g.degree(order[j]) == g.degree(order[i])) ++j;
    cells.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  auto code_of = [&] {
    std::uint64_t c = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) c = (c << 1) | (g.adjacent(order[i], order[j]) ? 1U : 0U);
    }
    return c;
  };
  // Odometer over per-cell permutations.
  auto recurse = [&](auto&& self, std::size_t cell) -> void {
    if (cell == cells.size()) {
      best = std::min(best, code_of());
      return;
    }
    auto first = order.begin() + cells[cell].first;
    auto last = order.begin() + cells[cell].second;
    std::sort(first, last);
    do {
      self(self, cell + 1);
    } while (std::next_permutation(first, last));
  };
  recurse(recurse, 0);
  return best;
}

const std::vector<Graph>& all_graphs(int n) {
  static std::map<int, std::vector<Graph>> cache;
  if (n < 0 || n > 8) throw std::invalid_argument("all_graphs supports 0 <= n <= 8");
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<Graph> out;
  if (n == 0) {
    out.emplace_back(0, std::initializer_list<Edge>{});
  } else {
    std::set<std::uint64_t> seen;
    for (const Graph& h : all_graphs(n - 1)) {
      const auto base = h.edges();
      for (unsigned mask = 0; mask < (1U << (n - 1)); ++mask) {
        auto edges = base;
        for (int v = 0; v < n - 1; ++v) {
          if ((mask >> v) & 1U) edges.emplace_back(v, n - 1);
        }
        Graph g(n, edges);
        if (seen.insert(canonical_code(g)).second) out.push_back(std::move(g));
      }
    }
  }
  return cache.emplace(n, std::move(out)).first->second;
}

Graph random_graph(int n, int p_per_mille, SplitMix64& rng) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (static_cast<int>(rng.below(1000)) < p_per_mille) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

}  // namespace chordkern::testing
