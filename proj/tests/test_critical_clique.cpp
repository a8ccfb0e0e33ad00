#include <gtest/gtest.h>

#include "chordkern/critical_clique.hpp"
#include "support/small_graphs.hpp"

namespace chordkern {
namespace {

bool closed_equal(const Graph& g, Vertex u, Vertex v) {
  if (!g.adjacent(u, v)) return false;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (x == u || x == v) continue;
    if (g.adjacent(u, x) != g.adjacent(v, x)) return false;
  }
  return true;
}

TEST(CriticalCliqueTest, Diamond) {
  const Graph d(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  const auto p = critical_cliques(d);
  EXPECT_EQ(p.classes, (std::vector<VertexSet>{{0, 1}, {2}, {3}}));
  EXPECT_EQ(p.class_of, (std::vector<int>{0, 0, 1, 2}));
  EXPECT_EQ(p.quotient, Graph(3, {{0, 1}, {0, 2}}).with_labels({"2", "1", "1"}));
  const Graph q = critical_clique_graph(d);
  EXPECT_EQ(q.degree(0), 2);
  EXPECT_EQ(q.label(0), "2");
  const std::vector<int> ids = {0, 2};
  EXPECT_EQ(expand_classes(p, ids), (VertexSet{0, 1, 3}));
}

TEST(CriticalCliqueTest, CompletePathAndCycle) {
  const Graph k5(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  const auto pk = critical_cliques(k5);
  ASSERT_EQ(pk.size(), 1);
  EXPECT_EQ(pk.class_size(0), 5);
  EXPECT_EQ(pk.quotient.vertex_count(), 1);

  const Graph p3(3, {{0, 1}, {1, 2}});
  const auto pp = critical_cliques(p3);
  EXPECT_EQ(pp.size(), 3);
  EXPECT_EQ(pp.quotient.edge_count(), 2u);

  const Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  const Graph q = critical_clique_graph(c4);
  EXPECT_EQ(q.vertex_count(), 4);
  EXPECT_EQ(q.edge_count(), 4u);
}

TEST(CriticalCliqueTest, TwoTriangles) {
  const Graph g(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  const Graph q = critical_clique_graph(g);
  EXPECT_EQ(q.vertex_count(), 2);
  EXPECT_EQ(q.edge_count(), 0u);
  EXPECT_EQ(q.label(0), "3");
  EXPECT_EQ(q.label(1), "3");
}

TEST(CriticalCliqueTest, EmptyGraph) {
  const auto p = critical_cliques(Graph());
  EXPECT_EQ(p.size(), 0);
}

// Classes are exactly the equivalence classes of N[u] = N[v].
TEST(CriticalCliqueTest, ExhaustiveAgainstPairwiseComparison) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : testing::all_graphs(n)) {
      const auto p = critical_cliques(g);
      int total = 0;
      for (const auto& c : p.classes) {
        total += static_cast<int>(c.size());
        EXPECT_TRUE(std::is_sorted(c.begin(), c.end()));
      }
      EXPECT_EQ(total, n);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          EXPECT_EQ(p.class_of[u] == p.class_of[v], closed_equal(g, u, v));
        }
      }
      for (int a = 0; a < p.size(); ++a) {
        EXPECT_EQ(p.quotient.label(a), std::to_string(p.class_size(a)));
        for (int b = a + 1; b < p.size(); ++b) {
          EXPECT_EQ(p.quotient.adjacent(a, b), g.adjacent(p.classes[a][0], p.classes[b][0]));
        }
      }
      // The quotient has no true twins of its own.
      EXPECT_EQ(critical_cliques(p.quotient).size(), p.size());
    }
  }
}

}  // namespace
}  // namespace chordkern
