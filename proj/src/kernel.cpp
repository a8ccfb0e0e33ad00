#include "chordkern/kernel.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "chordkern/critical_clique.hpp"
#include "chordkern/errors.hpp"

namespace chordkern {

std::string to_flag(ProblemVariant v) {
  switch (v) {
    case ProblemVariant::bg_editing: return "bg-edit";
    case ProblemVariant::bg_deletion: return "bg-del";
    case ProblemVariant::bg_completion: return "bg-compl";
    case ProblemVariant::sc_editing: return "sc-edit";
    case ProblemVariant::sc_completion: return "sc-compl";
    case ProblemVariant::sc_deletion: return "sc-del";
  }
  return "?";
}

std::optional<ProblemVariant> variant_from_flag(std::string_view flag) {
  for (ProblemVariant v : kAllVariants) {
    if (to_flag(v) == flag) return v;
  }
  return std::nullopt;
}

EditKind edit_kind(ProblemVariant v) {
  switch (v) {
    case ProblemVariant::bg_editing:
    case ProblemVariant::sc_editing: return EditKind::edit;
    case ProblemVariant::bg_completion:
    case ProblemVariant::sc_completion: return EditKind::completion;
    case ProblemVariant::bg_deletion:
    case ProblemVariant::sc_deletion: return EditKind::deletion;
  }
  return EditKind::edit;
}

GraphClass target_class(ProblemVariant v) {
  switch (v) {
    case ProblemVariant::bg_editing:
    case ProblemVariant::bg_deletion:
    case ProblemVariant::bg_completion: return GraphClass::block;
    default: return GraphClass::strictly_chordal;
  }
}

std::string rule_name(Rule r) {
  return "R" + std::to_string(static_cast<int>(r) + 1);
}

std::optional<Rule> rule_from_name(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(Rule::r11_two_sc_branch_deletion); ++i) {
    if (rule_name(static_cast<Rule>(i)) == name) return static_cast<Rule>(i);
  }
  return std::nullopt;
}

std::vector<Rule> rules_for(ProblemVariant v) {
  const std::vector<Rule> sc_common{Rule::r5_sc_component, Rule::r6_sc_twin_trim,
                                    Rule::r7_one_sc_branch, Rule::r8_common_neighborhood};
  switch (v) {
    case ProblemVariant::bg_editing:
    case ProblemVariant::bg_deletion:
      return {Rule::r1_block_component, Rule::r2_bg_twin_trim, Rule::r3_one_bg_branch,
              Rule::r4_two_bg_branch};
    case ProblemVariant::bg_completion: return {};
    case ProblemVariant::sc_editing: {
      auto r = sc_common;
      r.push_back(Rule::r9_two_sc_branch_editing);
      return r;
    }
    case ProblemVariant::sc_completion: {
      auto r = sc_common;
      r.push_back(Rule::r10_two_sc_branch_completion);
      return r;
    }
    case ProblemVariant::sc_deletion: {
      auto r = sc_common;
      r.push_back(Rule::r11_two_sc_branch_deletion);
      return r;
    }
  }
  return {};
}

int Gadget::vertex_count() const {
  int total = 0;
  for (int s : clique_sizes) total += s;
  return total;
}

// ---------------------------------------------------------------------------

Graph apply_application(const Graph& g, const RuleApplication& app, int step) {
  const int n = g.vertex_count();
  std::vector<int> new_id(static_cast<std::size_t>(n), -1);
  std::vector<char> gone(static_cast<std::size_t>(n), 0);
  for (Vertex v : app.removed) gone.at(v) = 1;
  std::vector<std::string> labels;
  int next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (gone[v]) continue;
    new_id[v] = next++;
    labels.push_back(g.label(v));
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (!gone[e.u] && !gone[e.v]) edges.emplace_back(new_id[e.u], new_id[e.v]);
  }
  const auto& sizes = app.gadget.clique_sizes;
  std::vector<int> start(sizes.size());
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    start[c] = next;
    for (int i = 0; i < sizes[c]; ++i) {
      labels.push_back("g" + std::to_string(step) + "." + std::to_string(c) + "." +
                       std::to_string(i));
      for (int j = 0; j < i; ++j) edges.emplace_back(start[c] + j, start[c] + i);
    }
    next += sizes[c];
  }
  for (auto [a, b] : app.gadget.links) {
    for (int i = 0; i < sizes[a]; ++i) {
      for (int j = 0; j < sizes[b]; ++j) edges.emplace_back(start[a] + i, start[b] + j);
    }
  }
  for (const auto& [c, targets] : app.gadget.anchors) {
    for (Vertex t : targets) {
      if (new_id.at(t) < 0) throw ContractError("gadget anchored to a removed vertex");
      for (int i = 0; i < sizes[c]; ++i) edges.emplace_back(start[c] + i, new_id[t]);
    }
  }
  return Graph(next, edges, std::move(labels));
}

namespace {

bool rule_allowed(ProblemVariant v, Rule r) {
  const auto rules = rules_for(v);
  return std::find(rules.begin(), rules.end(), r) != rules.end();
}

std::optional<RuleApplication> component_rule(const Graph& g, Rule rule, GraphClass c) {
  RuleApplication app{rule, {}, {}, std::nullopt};
  for (const auto& comp : connected_components(g)) {
    if (is_member(g.induced(comp), c)) app.removed.insert(app.removed.end(), comp.begin(), comp.end());
  }
  if (app.removed.empty()) return std::nullopt;
  std::sort(app.removed.begin(), app.removed.end());
  return app;
}

std::optional<RuleApplication> twin_trim(const Graph& g, Rule rule, int keep) {
  RuleApplication app{rule, {}, {}, std::nullopt};
  for (const auto& cls : critical_cliques(g).classes) {
    if (static_cast<int>(cls.size()) > keep) {
      app.removed.insert(app.removed.end(), cls.begin() + keep, cls.end());
    }
  }
  if (app.removed.empty()) return std::nullopt;
  std::sort(app.removed.begin(), app.removed.end());
  return app;
}

VertexSet neighbors_in(const Graph& g, Vertex of, const VertexSet& inside) {
  VertexSet out;
  std::set_intersection(g.neighbors(of).begin(), g.neighbors(of).end(), inside.begin(),
                        inside.end(), std::back_inserter(out));
  return out;
}

Gadget clique_path(const std::vector<int>& sizes, const VertexSet& first, const VertexSet& last) {
  Gadget gd;
  gd.clique_sizes = sizes;
  for (std::size_t i = 0; i + 1 < sizes.size(); ++i) {
    gd.links.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
  }
  gd.anchors.emplace_back(0, first);
  gd.anchors.emplace_back(static_cast<int>(sizes.size()) - 1, last);
  return gd;
}

std::optional<RuleApplication> rule3(const Graph& g) {
  auto found = find_branches(g, BranchQuery::one_bg, {0, 0, {}, true});
  if (found.empty()) return std::nullopt;
  RuleApplication app{Rule::r3_one_bg_branch, found[0].interior, {}, found[0]};
  return app;
}

std::optional<RuleApplication> rule4(const Graph& g, int k) {
  BranchScanOptions opt;
  opt.min_vertices = k + 3;
  opt.first_only = true;
  opt.accept = [k](const Branch& b) {
    const int mc = *b.mincut_value;
    const int gadget = 1 + std::min(mc - 1, k) + k;
    return static_cast<int>(b.interior.size()) > gadget;
  };
  auto found = find_branches(g, BranchQuery::two_bg_clean, opt);
  if (found.empty()) return std::nullopt;
  const Branch& b = found[0];
  const Vertex p1 = b.attachment_points[0][0];
  const Vertex p2 = b.attachment_points[1][0];
  const int side = std::min(*b.mincut_value - 1, k);
  Gadget gd;
  gd.clique_sizes.push_back(1);
  gd.anchors.emplace_back(0, VertexSet{p1, p2});
  if (side > 0) {
    const int c = static_cast<int>(gd.clique_sizes.size());
    gd.clique_sizes.push_back(side);
    gd.links.emplace_back(0, c);
    gd.anchors.emplace_back(c, VertexSet{p1});
  }
  if (k > 0) {
    const int c = static_cast<int>(gd.clique_sizes.size());
    gd.clique_sizes.push_back(k);
    gd.links.emplace_back(0, c);
    gd.anchors.emplace_back(c, VertexSet{p2});
  }
  return RuleApplication{Rule::r4_two_bg_branch, b.interior, gd, b};
}

std::optional<RuleApplication> rule7(const Graph& g, int k) {
  BranchScanOptions opt;
  opt.first_only = true;
  const auto p = critical_cliques(g);
  opt.accept = [&p, k](const Branch& b) {
    // Already a single critical clique of admissible size hanging on P.
    const int c = p.class_of[b.interior.front()];
    const bool single = p.classes[c] == b.interior;
    return !(single && static_cast<int>(b.interior.size()) <= k + 1);
  };
  auto found = find_branches(g, BranchQuery::one_sc, opt);
  if (found.empty()) return std::nullopt;
  const Branch& b = found[0];
  const VertexSet& att = b.attachment_points[0];
  const int nb = static_cast<int>(neighbors_in(g, att.front(), b.interior).size());
  Gadget gd;
  gd.clique_sizes.push_back(std::min(nb, k + 1));
  gd.anchors.emplace_back(0, att);
  return RuleApplication{Rule::r7_one_sc_branch, b.interior, gd, b};
}

std::optional<RuleApplication> rule8(const Graph& g, int k) {
  const auto p = critical_cliques(g);
  const Graph& q = p.quotient;
  const int m = q.vertex_count();
  const auto interiors = maximal_one_branch_interiors(q);

  std::map<VertexSet, VertexSet> by_key;  // key -> nodes with that key
  for (int x = 0; x < m; ++x) {
    VertexSet key;
    for (int y : q.neighbors(x)) {
      if (!std::binary_search(interiors[x].begin(), interiors[x].end(), y)) key.push_back(y);
    }
    key.insert(std::lower_bound(key.begin(), key.end(), x), x);
    by_key[key].push_back(x);
  }
  std::map<VertexSet, std::vector<VertexSet>> by_neighborhood;  // N -> cliques Q_j
  for (const auto& [key, nodes] : by_key) {
    VertexSet nset;
    std::set_difference(key.begin(), key.end(), nodes.begin(), nodes.end(), std::back_inserter(nset));
    if (!nset.empty()) by_neighborhood[nset].push_back(nodes);
  }

  std::optional<RuleApplication> best;
  std::vector<VertexSet> best_sig;
  for (const auto& [nset, cliques] : by_neighborhood) {
    std::vector<char> used(static_cast<std::size_t>(m), 0);
    bool disjoint = true;
    for (int y : nset) used[y] = 1;
    std::vector<int> attachments;
    std::vector<int> covered;
    for (const auto& qj : cliques) {
      for (int x : qj) {
        attachments.push_back(x);
        covered.push_back(x);
        covered.insert(covered.end(), interiors[x].begin(), interiors[x].end());
      }
    }
    for (int x : covered) {
      if (used[x]) disjoint = false;
      used[x] = 1;
    }
    if (!disjoint) continue;

    long long total = 0;
    long long largest = 0;
    for (const auto& qj : cliques) {
      long long size = 0;
      for (int x : qj) size += p.class_size(x);
      total += size;
      largest = std::max(largest, size);
    }
    const int r = static_cast<int>(cliques.size());
    if (total <= 2LL * k + 1) continue;
    if (r > 1 && total - largest <= k) continue;
    const VertexSet removed = expand_classes(p, covered);
    const long long gadget_size = r == 1 ? 2LL * k + 3 : 2LL * k + 2;
    if (static_cast<long long>(removed.size()) <= gadget_size) continue;

    std::sort(attachments.begin(), attachments.end());
    std::vector<VertexSet> sig;
    for (int x : attachments) sig.push_back(p.classes[x]);
    if (best && !(sig < best_sig)) continue;

    const VertexSet anchor = expand_classes(p, nset);
    Gadget gd;
    gd.clique_sizes = {k + 1, k + 1};
    gd.anchors = {{0, anchor}, {1, anchor}};
    if (r == 1) {
      gd.clique_sizes.push_back(1);
      gd.links = {{0, 1}, {0, 2}};
    }
    best = RuleApplication{Rule::r8_common_neighborhood, removed, gd, std::nullopt};
    best_sig = std::move(sig);
  }
  return best;
}

// Sizes of the clique path a 2-SC-branch rule would install.
std::vector<int> two_sc_sizes(const Graph& g, const Branch& b, int k, Rule rule) {
  const int a = std::min(static_cast<int>(neighbors_in(g, b.attachment_points[0].front(), b.interior).size()), k + 1);
  const int z = std::min(static_cast<int>(neighbors_in(g, b.attachment_points[1].front(), b.interior).size()), k + 1);
  const int mc = std::min(*b.mincut_value, k + 1);
  switch (rule) {
    case Rule::r9_two_sc_branch_editing: {
      std::vector<int> s{a, k + 1, 1, mc};
      for (int i = 0; i < std::max(0, k - 3); ++i) s.push_back(k + 1);
      s.push_back(z);
      return s;
    }
    case Rule::r10_two_sc_branch_completion: return {a, z};
    case Rule::r11_two_sc_branch_deletion: return {a, k + 1, 1, mc, z};
    default: throw std::logic_error("two_sc_sizes: not a 2-SC rule");
  }
}

bool attachments_split(const Graph& g, const Branch& b) {
  std::vector<char> allowed(static_cast<std::size_t>(g.vertex_count()), 1);
  for (Vertex v : b.interior) allowed[v] = 0;
  const auto dist = bfs_distances(g, b.attachment_points[0].front(), &allowed);
  return dist[b.attachment_points[1].front()] < 0;
}

std::optional<RuleApplication> two_sc_rule(const Graph& g, int k, Rule rule) {
  BranchScanOptions opt;
  opt.first_only = true;
  // Never lengthen a branch: the installed path of c cliques has length c + 1.
  const int stated = rule == Rule::r9_two_sc_branch_editing ? k + 3 : 3;
  const int installed = rule == Rule::r10_two_sc_branch_completion ? 3
                        : rule == Rule::r11_two_sc_branch_deletion  ? 6
                                                                    : 6 + std::max(0, k - 3);
  opt.min_length = std::max(stated, installed);
  // Apply only when (critical clique count, vertex count) drops strictly, so
  // replacing one gadget by an equal one cannot loop.
  const auto p = critical_cliques(g);
  opt.accept = [&g, &p, k, rule](const Branch& b) {
    if (rule == Rule::r10_two_sc_branch_completion && !attachments_split(g, b)) return false;
    std::set<int> classes;
    for (Vertex v : b.interior) classes.insert(p.class_of[v]);
    const auto sizes = two_sc_sizes(g, b, k, rule);
    const auto cliques = static_cast<std::size_t>(std::count_if(sizes.begin(), sizes.end(), [](int s) { return s > 0; }));
    const auto added = static_cast<std::size_t>(std::accumulate(sizes.begin(), sizes.end(), 0));
    if (classes.size() != cliques) return classes.size() > cliques;
    return b.interior.size() > added;
  };
  auto found = find_branches(g, BranchQuery::two_sc_clean, opt);
  if (found.empty()) return std::nullopt;
  const Branch& b = found[0];
  Gadget gd = clique_path(two_sc_sizes(g, b, k, rule), b.attachment_points[0], b.attachment_points[1]);
  return RuleApplication{rule, b.interior, gd, b};
}

std::optional<RuleApplication> find_application(const Graph& g, int k, Rule rule) {
  switch (rule) {
    case Rule::r1_block_component: return component_rule(g, rule, GraphClass::block);
    case Rule::r2_bg_twin_trim: return twin_trim(g, rule, 2 * k + 2);
    case Rule::r3_one_bg_branch: return rule3(g);
    case Rule::r4_two_bg_branch: return rule4(g, k);
    case Rule::r5_sc_component: return component_rule(g, rule, GraphClass::strictly_chordal);
    case Rule::r6_sc_twin_trim: return twin_trim(g, rule, k + 1);
    case Rule::r7_one_sc_branch: return rule7(g, k);
    case Rule::r8_common_neighborhood: return rule8(g, k);
    case Rule::r9_two_sc_branch_editing:
    case Rule::r10_two_sc_branch_completion:
    case Rule::r11_two_sc_branch_deletion: return two_sc_rule(g, k, rule);
  }
  return std::nullopt;
}

Graph with_default_labels(const Graph& g) {
  if (g.has_labels()) return g;
  std::vector<std::string> labels;
  for (Vertex v = 0; v < g.vertex_count(); ++v) labels.push_back(std::to_string(v));
  return g.with_labels(std::move(labels));
}

}  // namespace

std::optional<std::pair<Instance, RuleApplication>> apply_rule(const Instance& inst, Rule rule, int step) {
  if (inst.k < 0) throw ContractError("k must be nonnegative");
  if (!rule_allowed(inst.variant, rule)) {
    throw ContractError(rule_name(rule) + " does not apply to variant " + to_flag(inst.variant));
  }
  auto app = find_application(inst.graph, inst.k, rule);
  if (!app) return std::nullopt;
  Instance out{apply_application(inst.graph, *app, step), inst.k, inst.variant};
  return std::make_pair(std::move(out), std::move(*app));
}

KernelResult kernelize(const Instance& inst) {
  if (inst.variant == ProblemVariant::bg_completion) {
    throw ContractError(
        "bg-compl is solved exactly in polynomial time; use block_completion_exact (cli: solve) "
        "instead of kernelization");
  }
  if (inst.k < 0) throw ContractError("k must be nonnegative");
  const auto rules = rules_for(inst.variant);
  KernelResult result;
  Instance work{with_default_labels(inst.graph), inst.k, inst.variant};
  // Every application either shrinks the graph or replaces a branch interior
  // by a gadget the guard will not replace again; this cap only catches bugs.
  const std::size_t cap = 64 + 16 * static_cast<std::size_t>(inst.graph.vertex_count()) *
                                   static_cast<std::size_t>(inst.k + 2);
  bool progress = true;
  while (progress) {
    progress = false;
    for (Rule r : rules) {
      auto applied = apply_rule(work, r, static_cast<int>(result.trace.size()) + 1);
      if (!applied) continue;
      work = std::move(applied->first);
      result.trace.push_back(std::move(applied->second));
      if (result.trace.size() > cap) throw std::logic_error("kernelize: rule application cap exceeded");
      progress = true;
      break;
    }
  }
  result.vertex_map = work.graph.labels();
  result.reduced = std::move(work);
  return result;
}

Instance replay(const Instance& inst, std::span<const RuleApplication> trace) {
  Instance work{with_default_labels(inst.graph), inst.k, inst.variant};
  int step = 0;
  for (const auto& app : trace) work.graph = apply_application(work.graph, app, ++step);
  return work;
}

long long kernel_bound(ProblemVariant v, int k, EnvelopeConstants c) {
  if (k < 0) throw ContractError("kernel_bound: k must be nonnegative");
  if (v == ProblemVariant::bg_completion) {
    throw ContractError("kernel_bound: bg-compl has no kernel (it is solved exactly)");
  }
  if (k == 0) return 0;
  const long long kk = k;
  switch (v) {
    case ProblemVariant::bg_editing:
    case ProblemVariant::bg_deletion: return 24 * kk * kk + 28 * kk;
    case ProblemVariant::sc_completion:
    case ProblemVariant::sc_deletion: return c.c3 * kk * kk * kk;
    case ProblemVariant::sc_editing: return c.c4 * kk * kk * kk * kk;
    default: break;
  }
  return 0;
}

}  // namespace chordkern
