#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chordkern/branches.hpp"
#include "chordkern/graph.hpp"
#include "chordkern/recognition.hpp"

namespace chordkern {

enum class ProblemVariant { bg_editing, bg_deletion, bg_completion, sc_editing, sc_completion, sc_deletion };

inline constexpr ProblemVariant kAllVariants[] = {
    ProblemVariant::bg_editing, ProblemVariant::bg_deletion,   ProblemVariant::bg_completion,
    ProblemVariant::sc_editing, ProblemVariant::sc_completion, ProblemVariant::sc_deletion};

/// "bg-edit", "sc-compl", ...
std::string to_flag(ProblemVariant v);
std::optional<ProblemVariant> variant_from_flag(std::string_view flag);
EditKind edit_kind(ProblemVariant v);
GraphClass target_class(ProblemVariant v);

struct Instance {
  Graph graph;
  int k = 0;
  ProblemVariant variant = ProblemVariant::bg_editing;
};

enum class Rule {
  r1_block_component,
  r2_bg_twin_trim,
  r3_one_bg_branch,
  r4_two_bg_branch,
  r5_sc_component,
  r6_sc_twin_trim,
  r7_one_sc_branch,
  r8_common_neighborhood,
  r9_two_sc_branch_editing,
  r10_two_sc_branch_completion,
  r11_two_sc_branch_deletion,
};

/// "R1" ... "R11".
std::string rule_name(Rule r);
std::optional<Rule> rule_from_name(std::string_view name);

/// Rules used for a variant, in priority order. Empty for BG completion.
std::vector<Rule> rules_for(ProblemVariant v);

/// New vertices added by a rule: a list of cliques, complete joins between
/// some of them, and complete joins from a clique to existing vertices.
struct Gadget {
  std::vector<int> clique_sizes;
  std::vector<std::pair<int, int>> links;
  /// (gadget clique index, existing vertices it is completely joined to)
  std::vector<std::pair<int, VertexSet>> anchors;

  int vertex_count() const;
  friend bool operator==(const Gadget&, const Gadget&) = default;
};

struct RuleApplication {
  Rule rule = Rule::r1_block_component;
  /// Ids in the graph the rule was applied to.
  VertexSet removed;
  Gadget gadget;
  std::optional<Branch> branch;

  friend bool operator==(const RuleApplication&, const RuleApplication&) = default;
};

struct KernelResult {
  Instance reduced;
  std::vector<RuleApplication> trace;
  /// Label of each reduced vertex: the original id (or input label), or a
  /// gadget tag "g<step>.<clique>.<index>".
  std::vector<std::string> vertex_map;
};

/// Builds the graph after one application: survivors keep their relative
/// order, gadget vertices follow clique by clique. `step` names gadget labels.
Graph apply_application(const Graph& g, const RuleApplication& app, int step);

/// Throws ContractError when the rule does not belong to the instance's variant.
std::optional<std::pair<Instance, RuleApplication>> apply_rule(const Instance& inst, Rule rule,
                                                               int step = 1);

/// Applies the variant's rules to a fixpoint. Throws ContractError for BG completion.
KernelResult kernelize(const Instance& inst);

/// Re-applies a trace to an input instance.
Instance replay(const Instance& inst, std::span<const RuleApplication> trace);

struct EnvelopeConstants {
  long long c3 = 60;
  long long c4 = 200;
};

/// Vertex-count bound on reduced yes-instances. Throws ContractError for
/// BG completion or negative k.
long long kernel_bound(ProblemVariant v, int k, EnvelopeConstants c = {});

}  // namespace chordkern
