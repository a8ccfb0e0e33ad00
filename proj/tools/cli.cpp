#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "chordkern/errors.hpp"
#include "chordkern/instance_gen.hpp"
#include "chordkern/kernel.hpp"
#include "chordkern/oracle.hpp"
#include "chordkern/recognition.hpp"

namespace chordkern::cli {

using json = nlohmann::ordered_json;

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

/// Failure carrying its exit code; turned into a report by run().
struct CommandError {
  int code;
  std::string message;
};

struct LoadedGraph {
  Graph graph;
  std::string digest;
};

std::string hex_digest(std::string_view bytes) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

LoadedGraph load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandError{kInputError, "cannot open " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return {parse_graph(text), hex_digest(text)};
  } catch (const ParseError& e) {
    throw CommandError{kInputError, path + ": " + e.what()};
  }
}

GraphClass class_from_flag(const std::string& s) {
  if (s == "chordal") return GraphClass::chordal;
  if (s == "block") return GraphClass::block;
  return GraphClass::strictly_chordal;
}

std::string class_flag(GraphClass c) {
  switch (c) {
    case GraphClass::chordal: return "chordal";
    case GraphClass::block: return "block";
    case GraphClass::strictly_chordal: return "sc";
  }
  return "";
}

ProblemVariant variant_or_throw(const std::string& s) {
  auto v = variant_from_flag(s);
  if (!v) throw CommandError{kInputError, "unknown variant " + s};
  return *v;
}

json edges_json(const std::vector<Edge>& edges) {
  json a = json::array();
  for (const Edge& e : edges) a.push_back({e.u, e.v});
  return a;
}

std::string edit_summary(const EditSet& f) {
  std::ostringstream s;
  for (const Edge& e : f.pairs()) s << "  " << e.u << ' ' << e.v << '\n';
  return s.str();
}

// ---------------------------------------------------------------------------

struct Result {
  int code = kOk;
  json outcome = json::object();
};

Result cmd_recognize(const Graph& g, GraphClass c, std::ostream& err) {
  const Verdict v = recognize(g, c);
  Result r;
  r.outcome["class"] = class_flag(c);
  r.outcome["member"] = v.member;
  if (!v.member) {
    const Obstruction& o = v.obstruction();
    std::string text = to_string(o.kind) + ":";
    for (Vertex x : o.vertices) text += " " + g.label(x);
    r.outcome["certificate"] = {{"kind", to_string(o.kind)}, {"vertices", o.vertices}, {"text", text}};
    r.code = kNo;
    err << "not " << to_string(c) << "; certificate " << text << '\n';
    return r;
  }
  if (const auto* w = std::get_if<ChordalWitness>(&v.certificate)) {
    r.outcome["witness"] = {{"elimination_order", w->elimination_order}};
  } else if (const auto* w = std::get_if<BlockWitness>(&v.certificate)) {
    r.outcome["witness"] = {{"blocks", w->decomposition.blocks}};
  } else if (const auto* w = std::get_if<StrictlyChordalWitness>(&v.certificate)) {
    r.outcome["witness"] = {{"critical_cliques", w->partition.classes},
                            {"quotient_blocks", w->quotient_blocks.blocks}};
  }
  err << "member of " << to_string(c) << '\n';
  return r;
}

json trace_json(const std::vector<RuleApplication>& trace) {
  json a = json::array();
  int step = 0;
  for (const auto& app : trace) {
    json gadget = {{"clique_sizes", app.gadget.clique_sizes}, {"links", json::array()}, {"anchors", json::array()}};
    for (const auto& [x, y] : app.gadget.links) gadget["links"].push_back({x, y});
    for (const auto& [c, to] : app.gadget.anchors) gadget["anchors"].push_back({{"clique", c}, {"to", to}});
    json entry = {{"step", ++step}, {"rule", rule_name(app.rule)}, {"removed", app.removed}, {"gadget", gadget}};
    if (app.branch) {
      json b = {{"attachment_points", app.branch->attachment_points}, {"interior", app.branch->interior}};
      if (app.branch->length) b["length"] = *app.branch->length;
      if (app.branch->mincut_value) b["mincut"] = *app.branch->mincut_value;
      entry["branch"] = b;
    }
    a.push_back(entry);
  }
  return a;
}

Result cmd_kernelize(const Graph& g, int k, ProblemVariant v, const std::string& out_path, std::ostream& err) {
  if (v == ProblemVariant::bg_completion) {
    throw CommandError{kRouted,
                       "bg-compl is solved exactly in polynomial time; run `solve --variant bg-compl` instead"};
  }
  if (k < 0) throw CommandError{kInputError, "--k must be nonnegative"};
  const KernelResult res = kernelize(Instance{g, k, v});
  const Graph& h = res.reduced.graph;
  std::map<std::string, int> counts;
  for (Rule r : rules_for(v)) counts[rule_name(r)] = 0;
  for (const auto& app : res.trace) ++counts[rule_name(app.rule)];
  json fired = json::object();
  for (Rule r : rules_for(v)) fired[rule_name(r)] = counts[rule_name(r)];

  const long long bound = kernel_bound(v, k);
  Result r;
  r.outcome["variant"] = to_flag(v);
  r.outcome["k"] = k;
  r.outcome["original"] = {{"n", g.vertex_count()}, {"m", g.edge_count()}};
  r.outcome["reduced"] = {{"n", h.vertex_count()}, {"m", h.edge_count()}, {"k", res.reduced.k}};
  r.outcome["rules_fired"] = fired;
  r.outcome["bound"] = {{"value", bound}, {"reduced_within_bound", h.vertex_count() <= bound}};
  r.outcome["vertex_map"] = res.vertex_map;
  r.outcome["trace"] = trace_json(res.trace);
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw CommandError{kInputError, "cannot write " + out_path};
    const std::vector<std::string> comments = {"kernel of variant " + to_flag(v) + " with k=" + std::to_string(k)};
    write_graph(f, h, comments);
    r.outcome["written"] = out_path;
  }
  err << "kernel: n " << g.vertex_count() << " -> " << h.vertex_count() << ", m " << g.edge_count() << " -> "
      << h.edge_count() << ", " << res.trace.size() << " rule applications, bound " << bound << '\n';
  return r;
}

Result cmd_solve(const Graph& g, std::optional<int> k, ProblemVariant v, std::uint64_t budget, std::ostream& err) {
  Result r;
  r.outcome["variant"] = to_flag(v);
  if (k) r.outcome["k"] = *k;
  std::optional<EditSet> best;
  if (v == ProblemVariant::bg_completion) {
    EditSet f = block_completion_exact(g);
    r.outcome["method"] = "block_completion_exact";
    r.outcome["optimum"] = f.size();
    if (!k || static_cast<int>(f.size()) <= *k) best = std::move(f);
  } else {
    if (!k) throw CommandError{kInputError, "--k is required for " + to_flag(v)};
    if (*k < 0) throw CommandError{kInputError, "--k must be nonnegative"};
    best = brute_force_optimum(Instance{g, *k, v}, budget);
    r.outcome["method"] = "brute_force";
    r.outcome["budget"] = budget;
    if (best) r.outcome["optimum"] = best->size();
  }
  r.outcome["answer"] = best ? "yes" : "no";
  if (best) {
    r.outcome["edits"] = edges_json(best->pairs());
    err << "yes, " << best->size() << (best->size() == 1 ? " edit" : " edits") << '\n' << edit_summary(*best);
  } else {
    r.code = kNo;
    err << "no\n";
  }
  return r;
}

Result cmd_generate(GraphClass c, int n, int max_clique, int twin_cap, std::uint64_t seed, std::optional<int> k,
                    std::optional<std::string> variant, const std::string& out_path, std::ostream& err) {
  if (c == GraphClass::chordal) throw CommandError{kInputError, "generate supports --class block or sc"};
  const GenSpec spec{c, n, max_clique, twin_cap, seed};
  Result r;
  r.outcome["class"] = class_flag(c);
  r.outcome["spec"] = {{"n", n}, {"max_clique", max_clique}, {"twin_cap", twin_cap}, {"seed", seed}};
  Graph g;
  std::vector<std::string> comments = {"generated class=" + class_flag(c) + " n=" + std::to_string(n) +
                                       " max_clique=" + std::to_string(max_clique) +
                                       " twin_cap=" + std::to_string(twin_cap) + " seed=" + std::to_string(seed)};
  if (k) {
    if (!variant) throw CommandError{kInputError, "--k needs --variant for planting"};
    const ProblemVariant v = variant_or_throw(*variant);
    // Perturbation draws use seed + 1 so the base graph matches the unplanted run.
    const auto planted = plant(spec, *k, v, seed + 1);
    g = planted.instance.graph;
    r.outcome["planted"] = {{"variant", to_flag(v)}, {"k", *k}, {"edits", edges_json(planted.planted.pairs())}};
    comments.push_back("planted variant=" + to_flag(v) + " k=" + std::to_string(*k));
  } else {
    g = generate_member(spec);
  }
  const std::string text = to_edge_list(g, comments);
  r.outcome["n"] = g.vertex_count();
  r.outcome["m"] = g.edge_count();
  r.outcome["graph_digest"] = hex_digest(text);
  r.outcome["edge_list"] = text;
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw CommandError{kInputError, "cannot write " + out_path};
    f << text;
    r.outcome["written"] = out_path;
  }
  err << "generated n=" << g.vertex_count() << " m=" << g.edge_count() << '\n';
  return r;
}

Result cmd_verify(const Graph& g, int k, ProblemVariant v, const std::string& edits_path, std::ostream& err) {
  const LoadedGraph edits = load(edits_path);
  if (edits.graph.vertex_count() != g.vertex_count()) {
    throw CommandError{kInputError, "edit file vertex count does not match the graph"};
  }
  const EditSet f(edit_kind(v), edits.graph.edges());
  const bool ok = verify_solution(Instance{g, k, v}, f);
  Result r;
  r.outcome["variant"] = to_flag(v);
  r.outcome["k"] = k;
  r.outcome["edits_digest"] = edits.digest;
  r.outcome["size"] = f.size();
  r.outcome["valid"] = ok;
  r.code = ok ? kOk : kNo;
  err << (ok ? "valid" : "invalid") << " solution of size " << f.size() << '\n';
  return r;
}

Result cmd_xcheck(const Graph& g, std::ostream& err) {
  const Characterizations c = sc_characterizations(g);
  Result r;
  r.outcome["twin_reduction"] = c.twin_reduction;
  r.outcome["quotient_block"] = c.quotient_block;
  r.outcome["obstruction_free"] = c.obstruction_free;
  r.outcome["disjoint_separators"] = c.disjoint_separators;
  r.outcome["agree"] = c.agree();
  r.code = c.agree() ? kOk : kNo;
  err << std::boolalpha << c.twin_reduction << ' ' << c.quotient_block << ' ' << c.obstruction_free << ' '
      << c.disjoint_separators << '\n';
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"chordkern: block and strictly chordal graph modification"};
  app.require_subcommand(1);

  std::string path, cls = "block", variant, out_path, edits_path;
  int k = 0, n = 0, max_clique = 4, twin_cap = 3;
  std::uint64_t seed = 0, budget = kDefaultBudget;
  bool deterministic = false;

  auto common = [&](CLI::App* sub, bool takes_path) {
    if (takes_path) sub->add_option("path", path, "edge-list graph file")->required();
    sub->add_flag("--deterministic", deterministic, "report timing_ms as 0");
  };
  const std::vector<std::string> classes = {"chordal", "block", "sc"};
  const std::vector<std::string> variants = {"bg-edit", "bg-del", "bg-compl", "sc-edit", "sc-compl", "sc-del"};

  auto* rec = app.add_subcommand("recognize", "membership test with certificate");
  common(rec, true);
  rec->add_option("--class", cls)->check(CLI::IsMember(classes));

  auto* ker = app.add_subcommand("kernelize", "apply the reduction rules to a fixpoint");
  common(ker, true);
  ker->add_option("--k", k)->required();
  ker->add_option("--variant", variant)->required()->check(CLI::IsMember(variants));
  ker->add_option("--out", out_path, "write the reduced graph here");

  auto* sol = app.add_subcommand("solve", "exact optimum (brute force, or polynomial for bg-compl)");
  common(sol, true);
  auto* sol_k = sol->add_option("--k", k);
  sol->add_option("--variant", variant)->required()->check(CLI::IsMember(variants));
  sol->add_option("--budget", budget, "maximum candidate edit sets");

  auto* gen = app.add_subcommand("generate", "seeded random class member, optionally planted");
  common(gen, false);
  gen->add_option("--class", cls)->required()->check(CLI::IsMember(std::vector<std::string>{"block", "sc"}));
  gen->add_option("--n", n)->required();
  gen->add_option("--max-clique", max_clique);
  gen->add_option("--twin-cap", twin_cap);
  gen->add_option("--seed", seed);
  auto* gen_k = gen->add_option("--k", k, "plant k edits");
  auto* gen_variant = gen->add_option("--variant", variant)->check(CLI::IsMember(variants));
  gen->add_option("--out", out_path);

  auto* ver = app.add_subcommand("verify", "check an edit set against an instance");
  common(ver, true);
  ver->add_option("--k", k)->required();
  ver->add_option("--variant", variant)->required()->check(CLI::IsMember(variants));
  ver->add_option("--edits", edits_path, "edit pairs in edge-list format")->required();

  auto* xch = app.add_subcommand("xcheck", "evaluate the four strictly chordal characterizations");
  common(xch, true);

  std::vector<const char*> argv = {"chordkern"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    json report = {{"format_version", kFormatVersion}, {"command", "usage"}, {"outcome", {{"error", e.what()}}},
                   {"exit_code", kInputError}};
    out << report.dump(2) << '\n';
    return kInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  CLI::App* sub = app.get_subcommands().front();
  json flags = json::object();
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    const auto& res = opt->results();
    flags[opt->get_name()] = res.empty() ? std::string("true") : res.back();
  }

  Result result;
  std::string digest;
  try {
    if (sub == gen) {
      result = cmd_generate(class_from_flag(cls), n, max_clique, twin_cap, seed,
                            gen_k->count() ? std::optional<int>(k) : std::nullopt,
                            gen_variant->count() ? std::optional<std::string>(variant) : std::nullopt, out_path, err);
    } else {
      const LoadedGraph in = load(path);
      digest = in.digest;
      if (sub == rec) result = cmd_recognize(in.graph, class_from_flag(cls), err);
      if (sub == ker) result = cmd_kernelize(in.graph, k, variant_or_throw(variant), out_path, err);
      if (sub == sol) {
        result = cmd_solve(in.graph, sol_k->count() ? std::optional<int>(k) : std::nullopt,
                           variant_or_throw(variant), budget, err);
      }
      if (sub == ver) result = cmd_verify(in.graph, k, variant_or_throw(variant), edits_path, err);
      if (sub == xch) result = cmd_xcheck(in.graph, err);
    }
  } catch (const CommandError& e) {
    result = {e.code, {{"error", e.message}}};
  } catch (const SizeLimitError& e) {
    result = {kTooLarge, {{"error", e.what()}}};
  } catch (const ContractError& e) {
    result = {kInputError, {{"error", e.what()}}};
  } catch (const GenerationError& e) {
    result = {kInputError, {{"error", e.what()}}};
  }
  if (result.outcome.contains("error")) err << "error: " << result.outcome["error"].get<std::string>() << '\n';

  const double ms = deterministic ? 0.0
                                  : std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                                        .count();
  json report = {{"format_version", kFormatVersion}, {"command", sub->get_name()}, {"flags", flags}};
  if (!path.empty() && sub != gen) report["input"] = path;
  if (!digest.empty()) report["input_digest"] = digest;
  report["outcome"] = result.outcome;
  report["exit_code"] = result.code;
  report["timing_ms"] = ms;
  out << report.dump(2) << '\n';
  return result.code;
}

}  // namespace chordkern::cli
