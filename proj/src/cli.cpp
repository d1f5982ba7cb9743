#include "varg/cli.hpp"

#include <cstdint>
#include <fstream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "varg/analysis.hpp"
#include "varg/game.hpp"
#include "varg/graph.hpp"
#include "varg/policy.hpp"
#include "varg/setsystem.hpp"
#include "varg/types.hpp"

namespace varg {
namespace {

using nlohmann::ordered_json;

// Graph source options shared by every graph subcommand. Exactly one of
// --graph and --family must be given.
struct GraphInput {
  std::string file;
  std::string format = "graph6";
  std::string family;
  int n = 0;
  int k = 0;
  int pad = 0;
};

void add_graph_options(CLI::App* cmd, GraphInput& in) {
  CLI::Option* file = cmd->add_option("--graph", in.file, "graph file");
  cmd->add_option("--format", in.format, "file format (default graph6)")
      ->check(CLI::IsMember({"graph6", "edges"}));
  CLI::Option* fam =
      cmd->add_option("--family", in.family, "built-in family name");
  cmd->add_option("--n", in.n, "family size parameter");
  cmd->add_option("--k", in.k, "family second parameter");
  cmd->add_option("--pad", in.pad, "isolated vertices appended after loading")
      ->check(CLI::NonNegativeNumber);
  file->excludes(fam);
  fam->needs(cmd->get_option("--n"));
}

Graph load_input(const GraphInput& in, ordered_json& desc) {
  Graph g;
  if (!in.family.empty()) {
    std::optional<Family> fam = family_from_name(in.family);
    if (!fam) fail(ErrorKind::argument, "unknown family: " + in.family);
    g = make_family({*fam, in.n, in.k});
    desc["family"] = in.family;
    desc["n"] = in.n;
    if (in.k != 0) desc["k"] = in.k;
  } else if (!in.file.empty()) {
    std::ifstream f(in.file);
    if (!f) fail(ErrorKind::argument, "cannot open " + in.file);
    std::stringstream buf;
    buf << f.rdbuf();
    GraphFormat fmt =
        in.format == "edges" ? GraphFormat::edge_list : GraphFormat::graph6;
    g = load_graph(buf.str(), fmt);
    desc["file"] = in.file;
    desc["format"] = in.format;
  } else {
    fail(ErrorKind::argument, "either --graph or --family is required");
  }
  if (in.pad > 0) {
    g = add_isolated(g, in.pad);
    desc["pad"] = in.pad;
  }
  desc["graph6"] = encode_graph6(g);
  return g;
}

Policy named_policy(const std::string& name) {
  std::optional<Policy> p = policy_from_name(name);
  if (!p) fail(ErrorKind::argument, "unknown algorithm: " + name);
  return *p;
}

Problem named_problem(const std::string& name) {
  std::optional<Problem> p = problem_from_name(name);
  if (!p) fail(ErrorKind::argument, "unknown problem: " + name);
  return *p;
}

ordered_json score_json(GameScore s) {
  if (!s.feasible) return "infeasible";
  return s.value;
}

const char* decision_name(Decision d) {
  return d == Decision::accepted ? "accept" : "reject";
}

ordered_json strategy_json(const StrategyTable& table) {
  ordered_json obj = ordered_json::object();
  for (const auto& [key, dec] : table) obj[key] = decision_name(dec);
  return obj;
}

// Reduced num/den pair; null when no ordering contributed.
ordered_json mean_json(long long sum, long long count) {
  if (count <= 0) return nullptr;
  long long g = std::gcd(sum < 0 ? -sum : sum, count);
  if (g == 0) g = 1;
  return ordered_json{{"num", sum / g}, {"den", count / g}};
}

std::vector<int> parse_order(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      fail(ErrorKind::argument, "bad ordering entry: " + item);
    }
  }
  if (out.empty()) fail(ErrorKind::argument, "empty ordering");
  return out;
}

struct Output {
  std::string subcommand;
  ordered_json input = ordered_json::object();
  ordered_json value;
  std::optional<ordered_json> witness;
  GameStats stats;
};

void emit(const Output& o, bool human, std::ostream& out) {
  if (human) {
    out << o.subcommand << ": " << o.value.dump() << "\n";
    if (o.witness) out << "witness: " << o.witness->dump() << "\n";
    out << "nodes: " << o.stats.nodes << ", memo hits: " << o.stats.memo_hits
        << ", ms: " << o.stats.ms << "\n";
    return;
  }
  ordered_json doc;
  doc["subcommand"] = o.subcommand;
  doc["input"] = o.input;
  doc["value"] = o.value;
  if (o.witness) doc["witness"] = *o.witness;
  doc["stats"] = ordered_json{{"nodes", o.stats.nodes},
                              {"memo_hits", o.stats.memo_hits},
                              {"ms", o.stats.ms}};
  out << doc.dump() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact solver for online graph problems in the vertex-arrival "
               "model"};
  app.require_subcommand(1);

  bool human = false;
  bool witness = false;
  std::string cache_path;
  std::uint64_t node_budget = 0;
  int jobs = 1;
  int max_n = 0;
  app.add_flag("--human", human, "plain text output instead of JSON");
  app.add_flag("--witness", witness, "include the witness in the output");
  app.add_option("--cache", cache_path, "persistent result cache file");
  app.add_option("--node-budget", node_budget, "search node limit")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", jobs, "worker count (runs are sequential)")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-n", max_n, "vertex limit, 1..16")
      ->check(CLI::Range(1, kMaxVertices));

  GraphInput g_solve, g_worst, g_replay, g_freckle, g_compare, g_reduce,
      g_report, g_matching;
  std::string solve_problem, worst_alg, worst_problem, replay_alg,
      replay_problem, replay_order, compare_a, compare_b, compare_problem = "is",
      reduce_kind, mos_instance, mos_mode = "solve";
  int reduce_bound = 0;
  bool solve_conservative = false;
  bool mos_conservative = false;
  bool compare_bijective = false;

  CLI::App* solve = app.add_subcommand("solve", "exact online game value");
  add_graph_options(solve, g_solve);
  solve->add_option("--problem", solve_problem, "is, vc or ds")
      ->required()
      ->check(CLI::IsMember({"is", "vc", "ds"}));
  solve->add_flag("--conservative", solve_conservative,
                  "restrict the adversary to non-pointless reveals (is only)");

  CLI::App* worst = app.add_subcommand("worst", "worst case of a fixed policy");
  add_graph_options(worst, g_worst);
  worst->add_option("--alg", worst_alg, "policy name")
      ->required()
      ->check(CLI::IsMember(policy_names()));
  worst->add_option("--problem", worst_problem, "is, vc, ds or forest")
      ->required()
      ->check(CLI::IsMember({"is", "vc", "ds", "forest"}));

  CLI::App* rep = app.add_subcommand("replay", "run a policy on one ordering");
  add_graph_options(rep, g_replay);
  rep->add_option("--alg", replay_alg, "policy name")
      ->required()
      ->check(CLI::IsMember(policy_names()));
  rep->add_option("--problem", replay_problem, "is, vc, ds or forest")
      ->required()
      ->check(CLI::IsMember({"is", "vc", "ds", "forest"}));
  rep->add_option("--order", replay_order, "comma separated vertex ids")
      ->required();

  CLI::App* freckle =
      app.add_subcommand("freckle", "isolated-vertex optimality certificate");
  add_graph_options(freckle, g_freckle);

  CLI::App* compare = app.add_subcommand("compare", "compare two policies");
  add_graph_options(compare, g_compare);
  compare->add_option("--alg-a", compare_a, "first policy")
      ->required()
      ->check(CLI::IsMember(policy_names()));
  compare->add_option("--alg-b", compare_b, "second policy")
      ->required()
      ->check(CLI::IsMember(policy_names()));
  compare->add_option("--problem", compare_problem, "scoring problem")
      ->check(CLI::IsMember({"is", "vc", "ds", "forest"}));
  compare->add_flag("--bijective", compare_bijective,
                    "compare per ordering over all presentations");

  CLI::App* reduce = app.add_subcommand("reduce", "offline-to-online reduction");
  add_graph_options(reduce, g_reduce);
  reduce->add_option("--kind", reduce_kind, "reduction name")
      ->required()
      ->check(CLI::IsMember({"mmis-to-ois", "is-to-ods"}));
  reduce->add_option("--bound", reduce_bound, "offline bound to transport")
      ->required()
      ->check(CLI::NonNegativeNumber);

  CLI::App* mos = app.add_subcommand("mos", "online maximum-set game");
  mos->add_option("--instance", mos_instance, "set system JSON file")
      ->required();
  mos->add_option("--mode", mos_mode, "solve, greedy or stats")
      ->check(CLI::IsMember({"solve", "greedy", "stats"}));
  mos->add_flag("--conservative", mos_conservative,
                "adversary skips pointless requests when possible");

  CLI::App* report = app.add_subcommand("report", "full per-graph summary");
  add_graph_options(report, g_report);

  CLI::App* matching =
      app.add_subcommand("matching", "online matching number");
  add_graph_options(matching, g_matching);

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  ResultCache cache;
  Output o;
  try {
    if (max_n > 0) set_vertex_limit(max_n);
    if (!cache_path.empty()) cache.load(cache_path);
    SolveOptions opt;
    opt.node_budget = node_budget;
    if (!cache_path.empty()) opt.cache = &cache;

    if (solve->parsed()) {
      o.subcommand = "solve";
      Graph g = load_input(g_solve, o.input);
      o.input["problem"] = solve_problem;
      if (solve_conservative && solve_problem != "is")
        fail(ErrorKind::argument, "--conservative applies to --problem is only");
      opt.conservative = solve_conservative;
      opt.want_strategy = witness;
      GameResult r = solve_value(g, named_problem(solve_problem), opt);
      o.value = score_json(r.value);
      if (witness && r.strategy) o.witness = strategy_json(*r.strategy);
      o.stats = r.stats;
    } else if (worst->parsed()) {
      o.subcommand = "worst";
      Graph g = load_input(g_worst, o.input);
      o.input["alg"] = worst_alg;
      o.input["problem"] = worst_problem;
      GameResult r = policy_worst_case(g, named_problem(worst_problem),
                                       named_policy(worst_alg), opt);
      o.value = score_json(r.value);
      if (witness && r.ordering) o.witness = ordered_json{{"ordering", *r.ordering}};
      o.stats = r.stats;
    } else if (rep->parsed()) {
      o.subcommand = "replay";
      Graph g = load_input(g_replay, o.input);
      o.input["alg"] = replay_alg;
      o.input["problem"] = replay_problem;
      std::vector<int> order = parse_order(replay_order);
      o.input["order"] = order;
      ReplayResult rr = replay(g, order, named_policy(replay_alg),
                               named_problem(replay_problem));
      o.value = score_json(rr.score);
      if (witness) {
        std::vector<std::string> decisions;
        for (int i = 0; i < rr.trace.size(); ++i)
          decisions.emplace_back(decision_name(rr.trace[i].mark));
        o.witness = ordered_json{{"decisions", decisions}};
      }
    } else if (freckle->parsed()) {
      o.subcommand = "freckle";
      Graph g = load_input(g_freckle, o.input);
      FreckleCertificate c = freckle_check(g, opt);
      o.value = ordered_json{{"k", c.k},
                             {"s_size", c.s_size},
                             {"io_core", c.io_core ? ordered_json(*c.io_core)
                                                   : ordered_json(nullptr)},
                             {"is_freckle", c.is_freckle},
                             {"shortcut", c.shortcut}};
    } else if (compare->parsed()) {
      o.subcommand = "compare";
      Graph g = load_input(g_compare, o.input);
      o.input["alg_a"] = compare_a;
      o.input["alg_b"] = compare_b;
      o.input["problem"] = compare_problem;
      Problem p = named_problem(compare_problem);
      Policy pa = named_policy(compare_a);
      Policy pb = named_policy(compare_b);
      if (compare_bijective) {
        BijectiveReport br = bijective_compare(g, pa, pb, p);
        o.value = ordered_json{
            {"dominates", br.dominates},
            {"strict_witness", br.strict_witness
                                   ? ordered_json(*br.strict_witness)
                                   : ordered_json(nullptr)},
            {"orderings", br.orderings},
            {"mean_a", mean_json(br.sum_a, br.orderings - br.infeasible_a)},
            {"mean_b", mean_json(br.sum_b, br.orderings - br.infeasible_b)},
            {"infeasible_a", br.infeasible_a},
            {"infeasible_b", br.infeasible_b}};
      } else {
        GameResult ra = policy_worst_case(g, p, pa, opt);
        GameResult rb = policy_worst_case(g, p, pb, opt);
        o.value = ordered_json{{"worst_a", score_json(ra.value)},
                               {"worst_b", score_json(rb.value)}};
        o.stats.nodes = ra.stats.nodes + rb.stats.nodes;
        o.stats.memo_hits = ra.stats.memo_hits + rb.stats.memo_hits;
        o.stats.ms = ra.stats.ms + rb.stats.ms;
      }
    } else if (reduce->parsed()) {
      o.subcommand = "reduce";
      Graph g = load_input(g_reduce, o.input);
      o.input["kind"] = reduce_kind;
      o.input["bound"] = reduce_bound;
      ReductionOutput ro = reduce_kind == "mmis-to-ois"
                               ? reduce_mmis_to_online_is(g, reduce_bound)
                               : reduce_is_to_online_ds(g, reduce_bound);
      o.value = ordered_json{{"graph6", encode_graph6(ro.graph)},
                             {"bound", ro.bound}};
    } else if (mos->parsed()) {
      o.subcommand = "mos";
      std::ifstream f(mos_instance);
      if (!f) fail(ErrorKind::argument, "cannot open " + mos_instance);
      std::stringstream buf;
      buf << f.rdbuf();
      SetSystem sys = load_setsystem(buf.str());
      o.input["instance"] = mos_instance;
      o.input["elements"] = sys.size();
      o.input["mode"] = mos_mode;
      MosOptions mopt;
      mopt.conservative = mos_conservative;
      mopt.node_budget = node_budget;
      if (mos_mode == "stats") {
        SetSystemStats st = setsystem_stats(sys);
        o.value = ordered_json{
            {"isolated", st.isolated_count},
            {"s_size", st.s_size},
            {"core", ordered_json::parse(setsystem_to_json(st.core))}};
      } else {
        GameResult r = mos_mode == "greedy" ? gmos_worst(sys, mopt)
                                            : mso_value(sys, mopt);
        o.value = score_json(r.value);
        if (witness && r.ordering) {
          std::vector<std::string> names;
          for (int i : *r.ordering) names.push_back(sys.elements[i]);
          o.witness = ordered_json{{"ordering", names}};
        }
        o.stats = r.stats;
      }
    } else if (report->parsed()) {
      o.subcommand = "report";
      Graph g = load_input(g_report, o.input);
      o.value = theorem_report(g, opt);
    } else if (matching->parsed()) {
      o.subcommand = "matching";
      Graph g = load_input(g_matching, o.input);
      GameResult r = online_matching_number(g, opt);
      o.value = score_json(r.value);
      o.stats = r.stats;
    }

    if (!cache_path.empty()) cache.append_new(cache_path);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::limit || e.kind() == ErrorKind::budget ? 2
                                                                         : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  emit(o, human, out);
  return 0;
}

}  // namespace varg
