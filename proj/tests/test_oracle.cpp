#include <gtest/gtest.h>

#include <map>

#include "chordkern/errors.hpp"
#include "chordkern/oracle.hpp"
#include "support/small_graphs.hpp"

namespace chordkern {
namespace {

const Graph kDiamond(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
const Graph kDart(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 4}});
const Graph kC4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
const Graph kC5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
const Graph kK3(3, {{0, 1}, {0, 2}, {1, 2}});

TEST(OracleTest, DiamondDeletionRemovesOuterEdge) {
  const auto f = brute_force_optimum({kDiamond, 1, ProblemVariant::bg_deletion});
  ASSERT_TRUE(f.has_value());
  ASSERT_EQ(f->size(), 1u);
  EXPECT_NE(f->pairs()[0], Edge(0, 1));
  EXPECT_TRUE(is_block_graph(apply_edits(kDiamond, *f)));
  EXPECT_FALSE(brute_force_optimum({kDiamond, 0, ProblemVariant::bg_deletion}).has_value());
}

TEST(OracleTest, DartEditing) {
  const auto f = brute_force_optimum({kDart, 1, ProblemVariant::sc_editing});
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->size(), 1u);
}

TEST(OracleTest, TriangleNeedsNothing) {
  for (ProblemVariant v : kAllVariants) {
    const auto f = brute_force_optimum({kK3, 2, v});
    ASSERT_TRUE(f.has_value());
    EXPECT_TRUE(f->empty());
    EXPECT_EQ(f->kind(), edit_kind(v));
  }
}

TEST(OracleTest, CycleCompletion) {
  const auto f = brute_force_optimum({kC4, 1, ProblemVariant::sc_completion});
  ASSERT_TRUE(f.has_value());
  ASSERT_EQ(f->size(), 1u);
  EXPECT_FALSE(kC4.adjacent(f->pairs()[0].u, f->pairs()[0].v));
  EXPECT_EQ(block_completion_exact(kC4).size(), 2u);
  EXPECT_EQ(block_completion_exact(kC5).size(), 5u);
  EXPECT_TRUE(block_completion_exact(kK3).empty());
  EXPECT_EQ(brute_force_optimum({kC5, 5, ProblemVariant::bg_completion})->size(), 5u);
}

TEST(OracleTest, VerifySolution) {
  const Instance inst{kDiamond, 1, ProblemVariant::bg_deletion};
  EXPECT_FALSE(verify_solution(inst, EditSet(EditKind::deletion, {Edge(0, 1)})));
  EXPECT_TRUE(verify_solution(inst, EditSet(EditKind::deletion, {Edge(0, 2)})));
  EXPECT_FALSE(verify_solution(inst, EditSet(EditKind::deletion, {})));
  EXPECT_TRUE(verify_solution({kK3, 0, ProblemVariant::bg_deletion}, EditSet(EditKind::deletion, {})));
  EXPECT_FALSE(verify_solution({kDiamond, 0, ProblemVariant::bg_deletion}, EditSet(EditKind::deletion, {Edge(0, 2)})));
  EXPECT_THROW(verify_solution(inst, EditSet(EditKind::edit, {Edge(0, 2)})), ContractError);
  EXPECT_THROW(verify_solution(inst, EditSet(EditKind::deletion, {Edge(2, 3)})), ContractError);
}

TEST(OracleTest, Budget) {
  EXPECT_EQ(search_space(10, 2), 1u + 10u + 45u);
  EXPECT_EQ(search_space(0, 5), 1u);
  EXPECT_EQ(search_space(1'000'000, 60), std::numeric_limits<std::uint64_t>::max());
  std::vector<Edge> e;
  for (int i = 0; i + 1 < 40; ++i) e.emplace_back(i, i + 1);
  const Instance big{Graph(40, e), 5, ProblemVariant::sc_editing};
  EXPECT_THROW(brute_force_optimum(big), BudgetExceeded);
  EXPECT_EQ(candidate_pairs(kDiamond, EditKind::deletion).size(), 5u);
  EXPECT_EQ(candidate_pairs(kDiamond, EditKind::completion), (std::vector<Edge>{Edge(2, 3)}));
  EXPECT_EQ(candidate_pairs(kDiamond, EditKind::edit).size(), 6u);
}

// Independent optimum by enumerating every subset of candidate pairs.
int exhaustive_optimum(const Graph& g, ProblemVariant v) {
  const auto pairs = candidate_pairs(g, edit_kind(v));
  const MaskGraph base = MaskGraph::from(g);
  int best = -1;
  for (std::uint32_t m = 0; m < (1U << pairs.size()); ++m) {
    const int size = std::popcount(m);
    if (best >= 0 && size >= best) continue;
    MaskGraph h = base;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (m >> i & 1U) h.toggle(pairs[i].u, pairs[i].v);
    }
    if (mask_is_member(h, target_class(v))) best = size;
  }
  return best;
}

TEST(OracleTest, OptimalOnSmallGraphs) {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : testing::all_graphs(n)) {
      for (ProblemVariant v : kAllVariants) {
        const int opt = exhaustive_optimum(g, v);
        const auto f = brute_force_optimum({g, n * n, v});
        ASSERT_TRUE(f.has_value());
        EXPECT_EQ(static_cast<int>(f->size()), opt);
        EXPECT_TRUE(verify_solution({g, opt, v}, *f));
        if (opt > 0) {
          EXPECT_FALSE(brute_force_optimum({g, opt - 1, v}).has_value());
        }
      }
      EXPECT_EQ(static_cast<int>(block_completion_exact(g).size()), exhaustive_optimum(g, ProblemVariant::bg_completion));
    }
  }
}

TEST(OracleTest, EditingNeverWorseThanOneSided) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : testing::all_graphs(n)) {
      auto opt = [&](ProblemVariant v) { return brute_force_optimum({g, 4, v}); };
      const auto be = opt(ProblemVariant::bg_editing);
      const auto bd = opt(ProblemVariant::bg_deletion);
      const auto se = opt(ProblemVariant::sc_editing);
      const auto sd = opt(ProblemVariant::sc_deletion);
      const auto sc = opt(ProblemVariant::sc_completion);
      if (bd) {
        ASSERT_TRUE(be);
        EXPECT_LE(be->size(), bd->size());
      }
      for (const auto& one_sided : {sd, sc}) {
        if (!one_sided) continue;
        ASSERT_TRUE(se);
        EXPECT_LE(se->size(), one_sided->size());
      }
      // A block graph is strictly chordal, so SC editing costs at most BG editing.
      if (be) {
        ASSERT_TRUE(se);
        EXPECT_LE(se->size(), be->size());
      }
    }
  }
}

// Some optimal solution never splits a critical clique: for every optimal F
// found, one exists where each class is affected uniformly.
TEST(OracleTest, SomeOptimumRespectsCriticalCliques) {
  int checked = 0;
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : testing::all_graphs(n)) {
      const auto p = critical_cliques(g);
      if (p.size() == n) continue;
      for (ProblemVariant v : {ProblemVariant::sc_editing, ProblemVariant::sc_completion, ProblemVariant::sc_deletion}) {
        const auto all = all_optimal_solutions({g, 3, v});
        if (all.empty()) continue;
        const bool some_uniform = std::any_of(all.begin(), all.end(), [&](const EditSet& f) {
          // Uniform: for each class C and outside vertex x, either all or none of C-x are edited.
          std::map<std::pair<int, Vertex>, int> touched;
          for (const Edge& e : f.pairs()) {
            if (p.class_of[e.u] == p.class_of[e.v]) return false;
            ++touched[{p.class_of[e.u], e.v}];
            ++touched[{p.class_of[e.v], e.u}];
          }
          for (const auto& [key, count] : touched) {
            if (count != p.class_size(key.first)) return false;
          }
          return true;
        });
        EXPECT_TRUE(some_uniform) << to_flag(v) << "\n" << to_edge_list(g);
        checked += all.front().empty() ? 0 : 1;
      }
    }
  }
  EXPECT_GT(checked, 50);
}

}  // namespace
}  // namespace chordkern
