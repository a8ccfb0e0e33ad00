#include <gtest/gtest.h>

#include <map>

#include "chordkern/errors.hpp"
#include "chordkern/instance_gen.hpp"
#include "chordkern/kernel.hpp"
#include "chordkern/oracle.hpp"
#include "support/small_graphs.hpp"

namespace chordkern {
namespace {

const Graph kDiamond(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});

// Disjoint union of graphs, ids shifted in order.
Graph disjoint(const std::vector<Graph>& parts) {
  std::vector<Edge> e;
  int n = 0;
  for (const Graph& p : parts) {
    for (const Edge& x : p.edges()) e.emplace_back(x.u + n, x.v + n);
    n += p.vertex_count();
  }
  return Graph(n, e);
}

Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return Graph(n, e);
}

const Graph kC4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
const Graph kGem(5, {{1, 2}, {2, 3}, {3, 4}, {0, 1}, {0, 2}, {0, 3}, {0, 4}});

int count_rule(const KernelResult& r, Rule rule) {
  int c = 0;
  for (const auto& a : r.trace) c += a.rule == rule ? 1 : 0;
  return c;
}

// Two small random graphs joined by a path of cliques.
Graph bridged(SplitMix64& rng) {
  std::vector<Edge> e;
  int n = 0;
  auto blob = [&](int size) {
    const int base = n;
    for (int i = 0; i < size; ++i) {
      for (int j = i + 1; j < size; ++j) {
        if (rng.below(100) < 60) e.emplace_back(base + i, base + j);
      }
    }
    n += size;
    return base;
  };
  const int a = blob(rng.between(3, 5));
  const int b = blob(rng.between(3, 5));
  std::vector<int> prev = {a};
  for (int len = rng.between(1, 5); len > 0; --len) {
    std::vector<int> cur;
    for (int s = rng.between(1, 3); s > 0; --s) cur.push_back(n++);
    for (std::size_t x = 0; x < cur.size(); ++x) {
      for (std::size_t y = x + 1; y < cur.size(); ++y) e.emplace_back(cur[x], cur[y]);
    }
    for (int x : prev) {
      for (int y : cur) e.emplace_back(x, y);
    }
    prev = cur;
  }
  for (int x : prev) e.emplace_back(x, b);
  return Graph(n, e);
}

// A strictly chordal member with a long path closing a cycle between two vertices.
Graph member_with_closing_path(SplitMix64& rng) {
  const Graph base = generate_member({GraphClass::strictly_chordal, rng.between(3, 6), 3, 2, rng.next()});
  std::vector<Edge> e = base.edges();
  int n = base.vertex_count();
  const Vertex s = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
  Vertex t = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
  if (t == s) t = (s + 1) % n;
  Vertex prev = s;
  for (int len = rng.between(3, 8); len > 0; --len) {
    e.emplace_back(prev, n);
    prev = n++;
  }
  if (prev != t) e.emplace_back(prev, t);
  return Graph(n, e);
}

TEST(KernelTest, NamesRoundTrip) {
  for (ProblemVariant v : kAllVariants) EXPECT_EQ(variant_from_flag(to_flag(v)), v);
  EXPECT_FALSE(variant_from_flag("bg").has_value());
  for (ProblemVariant v : kAllVariants) {
    for (Rule r : rules_for(v)) EXPECT_EQ(rule_from_name(rule_name(r)), r);
  }
  EXPECT_TRUE(rules_for(ProblemVariant::bg_completion).empty());
  EXPECT_EQ(rules_for(ProblemVariant::bg_editing).size(), 4u);
  EXPECT_EQ(rules_for(ProblemVariant::sc_editing).back(), Rule::r9_two_sc_branch_editing);
  EXPECT_EQ(rules_for(ProblemVariant::sc_completion).back(), Rule::r10_two_sc_branch_completion);
  EXPECT_EQ(rules_for(ProblemVariant::sc_deletion).back(), Rule::r11_two_sc_branch_deletion);
}

TEST(KernelTest, R2TrimsTwinClass) {
  const Instance inst{disjoint({complete(10), kC4}), 3, ProblemVariant::bg_editing};
  const auto out = apply_rule(inst, Rule::r2_bg_twin_trim);
  ASSERT_TRUE(out.has_value());
  EXPECT_EQ(out->first.graph.vertex_count(), 8 + 4);
  EXPECT_EQ(out->second.removed, (VertexSet{8, 9}));
  EXPECT_EQ(out->first.k, 3);
  EXPECT_FALSE(apply_rule(out->first, Rule::r2_bg_twin_trim).has_value());
}

TEST(KernelTest, R6TrimsTwinClass) {
  const Instance inst{disjoint({complete(10), kGem}), 3, ProblemVariant::sc_deletion};
  const auto out = apply_rule(inst, Rule::r6_sc_twin_trim);
  ASSERT_TRUE(out.has_value());
  EXPECT_EQ(out->first.graph.vertex_count(), 4 + 5);
  EXPECT_EQ(out->second.removed.size(), 6u);
}

// Vertex 0 lies on a C4 and carries five pendant leaves: |N_B(P)| = 5.
TEST(KernelTest, R7ReplacesInteriorWithClique) {
  std::vector<Edge> e = kC4.edges();
  for (Vertex leaf = 4; leaf < 9; ++leaf) e.emplace_back(0, leaf);
  const Instance inst{Graph(9, e), 3, ProblemVariant::sc_editing};
  const auto out = apply_rule(inst, Rule::r7_one_sc_branch);
  ASSERT_TRUE(out.has_value());
  const Graph& h = out->first.graph;
  EXPECT_EQ(out->second.removed, (VertexSet{4, 5, 6, 7, 8}));
  EXPECT_EQ(out->second.gadget.clique_sizes, (std::vector<int>{4}));
  EXPECT_EQ(h.vertex_count(), 8);
  EXPECT_EQ(h.degree(0), 6);
  EXPECT_EQ(h.edge_count(), 4u + 4u + 6u);
  EXPECT_FALSE(apply_rule(out->first, Rule::r7_one_sc_branch).has_value());
}

TEST(KernelTest, R1RemovesBlockComponent) {
  const Instance inst{disjoint({complete(4), kC4}), 2, ProblemVariant::bg_deletion};
  const auto out = apply_rule(inst, Rule::r1_block_component);
  ASSERT_TRUE(out.has_value());
  EXPECT_EQ(out->first.graph, kC4.with_labels({"4", "5", "6", "7"}));
  EXPECT_EQ(out->first.k, 2);
}

TEST(KernelTest, MemberGraphsVanish) {
  SplitMix64 rng(21);
  for (int i = 0; i < 100; ++i) {
    const Graph g = generate_member({GraphClass::block, rng.between(1, 40), 5, 1, rng.next()});
    EXPECT_EQ(kernelize({g, rng.between(0, 4), ProblemVariant::bg_editing}).reduced.graph.vertex_count(), 0);
    const Graph h = generate_member({GraphClass::strictly_chordal, rng.between(1, 40), 4, 3, rng.next()});
    EXPECT_EQ(kernelize({h, rng.between(0, 4), ProblemVariant::sc_completion}).reduced.graph.vertex_count(), 0);
  }
}

TEST(KernelTest, DiamondDeletion) {
  const Instance inst{kDiamond, 1, ProblemVariant::bg_deletion};
  const auto r = kernelize(inst);
  EXPECT_EQ(r.reduced.k, 1);
  EXPECT_TRUE(brute_force_optimum(inst).has_value());
  EXPECT_TRUE(brute_force_optimum(r.reduced).has_value());
}

TEST(KernelTest, Contracts) {
  EXPECT_THROW(kernelize({kDiamond, 1, ProblemVariant::bg_completion}), ContractError);
  EXPECT_THROW(apply_rule({kDiamond, 1, ProblemVariant::bg_editing}, Rule::r6_sc_twin_trim), ContractError);
  EXPECT_THROW(apply_rule({kDiamond, 1, ProblemVariant::sc_editing}, Rule::r11_two_sc_branch_deletion),
               ContractError);
  EXPECT_THROW(apply_rule({kDiamond, -1, ProblemVariant::sc_editing}, Rule::r5_sc_component), ContractError);
}

TEST(KernelTest, Bounds) {
  EXPECT_EQ(kernel_bound(ProblemVariant::bg_editing, 1), 52);
  EXPECT_EQ(kernel_bound(ProblemVariant::bg_editing, 2), 152);
  EXPECT_EQ(kernel_bound(ProblemVariant::bg_deletion, 2), 152);
  EXPECT_EQ(kernel_bound(ProblemVariant::bg_editing, 0), 0);
  EXPECT_EQ(kernel_bound(ProblemVariant::sc_editing, 0), 0);
  EXPECT_EQ(kernel_bound(ProblemVariant::sc_deletion, 2), 60 * 8);
  EXPECT_EQ(kernel_bound(ProblemVariant::sc_editing, 2, {1, 3}), 3 * 16);
  long long prev = 0;
  for (int k = 1; k <= 5; ++k) {
    const long long b = kernel_bound(ProblemVariant::sc_editing, k);
    EXPECT_GT(b, prev);
    prev = b;
  }
  EXPECT_THROW(kernel_bound(ProblemVariant::bg_completion, 2), ContractError);
  EXPECT_THROW(kernel_bound(ProblemVariant::bg_editing, -1), ContractError);
}

// Two gems joined by a 50-vertex path. R9 fires; the small-k gadget path has
// six cliques, so surviving clean paths are at most 6 long.
TEST(KernelTest, LongPathScEditing) {
  std::vector<Edge> e = kGem.edges();
  for (const Edge& x : kGem.edges()) e.emplace_back(x.u + 55, x.v + 55);
  e.emplace_back(4, 5);
  for (Vertex v = 5; v < 54; ++v) e.emplace_back(v, v + 1);
  e.emplace_back(54, 56);
  const Instance inst{Graph(60, e), 2, ProblemVariant::sc_editing};
  const auto r = kernelize(inst);
  EXPECT_GE(count_rule(r, Rule::r9_two_sc_branch_editing), 1);
  EXPECT_LT(r.reduced.graph.vertex_count(), 30);
  EXPECT_LE(r.reduced.graph.vertex_count(), kernel_bound(inst.variant, inst.k));
  for (const Branch& b : find_branches(r.reduced.graph, BranchQuery::two_sc_clean)) EXPECT_LE(*b.length, 6);
  const auto sol = brute_force_optimum(r.reduced);
  ASSERT_TRUE(sol.has_value());
  EXPECT_EQ(sol->size(), 2u);
}

// Two gems joined by a path of ten vertices: the attachments fall into
// different components once the path is gone.
TEST(KernelTest, R10ShortensBridgingPath) {
  std::vector<Edge> e = kGem.edges();
  for (const Edge& x : kGem.edges()) e.emplace_back(x.u + 15, x.v + 15);
  e.emplace_back(4, 5);
  for (Vertex v = 5; v < 14; ++v) e.emplace_back(v, v + 1);
  e.emplace_back(14, 16);
  const Instance inst{Graph(20, e), 1, ProblemVariant::sc_completion};
  const auto r = kernelize(inst);
  EXPECT_GE(count_rule(r, Rule::r10_two_sc_branch_completion), 1);
  EXPECT_LT(r.reduced.graph.vertex_count(), 20);
  EXPECT_EQ(brute_force_optimum(inst).has_value(), brute_force_optimum(r.reduced).has_value());
}

// Kernel output: k kept, replay identical, fixpoint reached, gadgets in class.
// R8 anchors to N, which need not be a clique before editing, so only its new
// vertices are checked; branch gadgets are checked with their attachments.
void check_structure(const Instance& inst, const KernelResult& r) {
  EXPECT_EQ(r.reduced.k, inst.k);
  EXPECT_EQ(replay(inst, r.trace).graph, r.reduced.graph);
  EXPECT_EQ(static_cast<int>(r.vertex_map.size()), r.reduced.graph.vertex_count());
  for (Rule rule : rules_for(inst.variant)) EXPECT_FALSE(apply_rule(r.reduced, rule).has_value()) << rule_name(rule);
  Graph g = inst.graph;
  int step = 1;
  for (const RuleApplication& app : r.trace) {
    if (!app.gadget.clique_sizes.empty()) {
      const bool with_anchors = app.rule != Rule::r8_common_neighborhood;
      VertexSet anchor_vs;
      for (const auto& [c, vs] : app.gadget.anchors) {
        if (with_anchors) anchor_vs.insert(anchor_vs.end(), vs.begin(), vs.end());
      }
      std::sort(anchor_vs.begin(), anchor_vs.end());
      anchor_vs.erase(std::unique(anchor_vs.begin(), anchor_vs.end()), anchor_vs.end());
      const Graph base = g.induced(anchor_vs);
      std::vector<Edge> e = base.edges();
      std::vector<int> first;
      int n = base.vertex_count();
      for (int s : app.gadget.clique_sizes) {
        first.push_back(n);
        for (int i = 0; i < s; ++i) {
          for (int j = i + 1; j < s; ++j) e.emplace_back(n + i, n + j);
        }
        n += s;
      }
      const auto& sizes = app.gadget.clique_sizes;
      for (const auto& [a, b] : app.gadget.links) {
        for (int i = 0; i < sizes[a]; ++i) {
          for (int j = 0; j < sizes[b]; ++j) e.emplace_back(first[a] + i, first[b] + j);
        }
      }
      for (const auto& [c, vs] : app.gadget.anchors) {
        if (!with_anchors) break;
        for (Vertex v : vs) {
          const auto local = static_cast<Vertex>(std::lower_bound(anchor_vs.begin(), anchor_vs.end(), v) -
                                                 anchor_vs.begin());
          for (int i = 0; i < sizes[c]; ++i) e.emplace_back(local, first[c] + i);
        }
      }
      EXPECT_TRUE(is_member(Graph(n, e), target_class(inst.variant))) << rule_name(app.rule);
    }
    g = apply_application(g, app, step++);
  }
  EXPECT_EQ(g, r.reduced.graph);
}

// Safety against the oracle on every graph with n <= 6 and k <= 2.
TEST(KernelTest, ExhaustiveSafetySmall) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : testing::all_graphs(n)) {
      for (ProblemVariant v : kAllVariants) {
        if (v == ProblemVariant::bg_completion) continue;
        for (int k = 0; k <= 2; ++k) {
          const Instance inst{g, k, v};
          const auto r = kernelize(inst);
          check_structure(inst, r);
          EXPECT_EQ(brute_force_optimum(inst).has_value(), brute_force_optimum(r.reduced).has_value())
              << to_flag(v) << " k=" << k << "\n" << to_edge_list(g);
        }
      }
    }
  }
}

// Larger shapes that exercise the 2-branch rules.
TEST(KernelTest, RandomSafetyWithTwoBranches) {
  SplitMix64 rng(11);
  std::map<Rule, int> fired;
  int compared = 0;
  for (int it = 0; it < 600; ++it) {
    const ProblemVariant v = std::vector<ProblemVariant>{
        ProblemVariant::sc_completion, ProblemVariant::bg_editing, ProblemVariant::bg_deletion,
        ProblemVariant::sc_editing, ProblemVariant::sc_deletion}[static_cast<std::size_t>(it % 5)];
    const Graph g = it % 2 == 0 ? bridged(rng) : member_with_closing_path(rng);
    const Instance inst{g, rng.between(0, 2), v};
    const auto r = kernelize(inst);
    for (const auto& a : r.trace) ++fired[a.rule];
    check_structure(inst, r);
    try {
      const bool before = brute_force_optimum(inst, 20'000'000).has_value();
      EXPECT_EQ(before, brute_force_optimum(r.reduced, 20'000'000).has_value())
          << to_flag(v) << " k=" << inst.k << "\n" << to_edge_list(g);
      ++compared;
    } catch (const BudgetExceeded&) {
    }
  }
  EXPECT_GT(compared, 500);
  EXPECT_GT(fired[Rule::r4_two_bg_branch], 0);
  EXPECT_GT(fired[Rule::r9_two_sc_branch_editing], 0);
  EXPECT_GT(fired[Rule::r11_two_sc_branch_deletion], 0);
}

TEST(KernelTest, Deterministic) {
  SplitMix64 rng(2);
  for (int i = 0; i < 20; ++i) {
    const Instance inst{bridged(rng), 1, ProblemVariant::sc_deletion};
    const auto a = kernelize(inst);
    const auto b = kernelize(inst);
    EXPECT_EQ(a.trace, b.trace);
    EXPECT_EQ(a.reduced.graph, b.reduced.graph);
    EXPECT_EQ(a.vertex_map, b.vertex_map);
  }
}

}  // namespace
}  // namespace chordkern
