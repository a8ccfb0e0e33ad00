#include "chordkern/critical_clique.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace chordkern {

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<Vertex>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (Vertex x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace

CriticalCliquePartition critical_cliques(const Graph& g) {
  const int n = g.vertex_count();
  CriticalCliquePartition p;
  p.class_of.assign(static_cast<std::size_t>(n), -1);
  std::unordered_map<std::vector<Vertex>, int, VectorHash> index;
  index.reserve(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> closed = g.neighbors(v);
    closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);
    auto [it, inserted] = index.try_emplace(std::move(closed), p.size());
    if (inserted) p.classes.emplace_back();
    p.classes[it->second].push_back(v);
    p.class_of[v] = it->second;
  }

  // Classes are created in order of their smallest vertex, so no reordering is needed.
  std::vector<Edge> qedges;
  std::vector<std::string> labels;
  labels.reserve(p.classes.size());
  for (int c = 0; c < p.size(); ++c) {
    labels.push_back(std::to_string(p.classes[c].size()));
    const Vertex rep = p.classes[c].front();
    for (Vertex w : g.neighbors(rep)) {
      const int d = p.class_of[w];
      // Two adjacent vertices in different twin classes: their classes are
      // completely joined because each class is a module.
      if (d > c && p.classes[d].front() == w) qedges.emplace_back(c, d);
    }
  }
  p.quotient = Graph(p.size(), qedges, std::move(labels));
  return p;
}

Graph critical_clique_graph(const Graph& g) {
  return critical_cliques(g).quotient;
}

VertexSet expand_classes(const CriticalCliquePartition& p, std::span<const int> class_ids) {
  VertexSet out;
  for (int c : class_ids) out.insert(out.end(), p.classes[c].begin(), p.classes[c].end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace chordkern
