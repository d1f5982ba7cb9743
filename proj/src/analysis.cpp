#include "varg/analysis.hpp"

#include <algorithm>
#include <numeric>

#include "varg/policy.hpp"

namespace varg {

FreckleCertificate freckle_check(const Graph& g, const SolveOptions& opt) {
  IsolatedSplit split = split_isolated(g);
  FreckleCertificate cert;
  cert.k = split.k;
  cert.s_size = offline_oracle(split.core, OracleKind::min_maximal_is).value;
  if (2 * split.k >= g.size()) {
    // with half the vertices isolated the certificate inequality always
    // holds, so the game solver is not needed
    cert.shortcut = true;
    cert.is_freckle = true;
    return cert;
  }
  cert.io_core =
      solve_value(split.core, Problem::independent_set, opt).value.value;
  cert.is_freckle = cert.k + cert.s_size >= *cert.io_core;
  return cert;
}

BijectiveReport bijective_compare(const Graph& g, const Policy& a,
                                  const Policy& b, Problem p) {
  if (g.size() > 10)
    fail(ErrorKind::limit,
         "per-ordering comparison enumerates |V|! orderings, needs |V| <= 10");
  std::vector<int> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  BijectiveReport rep;
  rep.dominates = true;
  do {
    GameScore sa = replay(g, order, a, p).score;
    GameScore sb = replay(g, order, b, p).score;
    ++rep.orderings;
    if (sa.feasible)
      rep.sum_a += sa.value;
    else
      ++rep.infeasible_a;
    if (sb.feasible)
      rep.sum_b += sb.value;
    else
      ++rep.infeasible_b;
    if (better_for_algorithm(sb, sa, p)) rep.dominates = false;
    if (!rep.strict_witness && better_for_algorithm(sa, sb, p))
      rep.strict_witness = order;
  } while (std::next_permutation(order.begin(), order.end()));
  return rep;
}

ReductionOutput reduce_mmis_to_online_is(const Graph& g, int bound) {
  return {add_isolated(g, g.size()), bound + g.size()};
}

ReductionOutput reduce_is_to_online_ds(const Graph& g, int bound) {
  return {add_isolated(g, 1), bound + 1};
}

namespace {

nlohmann::ordered_json score_json(GameScore s) {
  if (s.feasible) return s.value;
  return "infeasible";
}

}  // namespace

nlohmann::ordered_json theorem_report(const Graph& g,
                                      const SolveOptions& opt) {
  nlohmann::ordered_json doc;
  doc["n"] = g.size();

  GameResult is = solve_value(g, Problem::independent_set, opt);
  GameResult vc = solve_value(g, Problem::vertex_cover, opt);
  GameResult ds = solve_value(g, Problem::dominating_set, opt);
  nlohmann::ordered_json values;
  values["is"] = score_json(is.value);
  values["vc"] = score_json(vc.value);
  values["ds"] = score_json(ds.value);
  doc["values"] = std::move(values);

  struct Entry {
    const char* name;
    Problem problem;
  };
  const Entry entries[] = {
      {"gis", Problem::independent_set},  {"gvc", Problem::vertex_cover},
      {"gds", Problem::dominating_set},   {"is-star", Problem::independent_set},
      {"is-star-bar", Problem::vertex_cover},
      {"almost-gis", Problem::independent_set},
      {"gf", Problem::forest},            {"forest-deg", Problem::forest},
  };
  nlohmann::ordered_json worst;
  GameScore gis_worst;
  GameScore gds_worst;
  for (const Entry& e : entries) {
    GameScore s = policy_worst_case(g, e.problem, *policy_from_name(e.name), opt)
                      .value;
    if (std::string(e.name) == "gis") gis_worst = s;
    if (std::string(e.name) == "gds") gds_worst = s;
    worst[e.name] = score_json(s);
  }
  doc["worst"] = std::move(worst);

  FreckleCertificate cert = freckle_check(g, opt);
  nlohmann::ordered_json fr;
  fr["k"] = cert.k;
  fr["s_size"] = cert.s_size;
  fr["io_core"] = cert.io_core ? nlohmann::ordered_json(*cert.io_core)
                               : nlohmann::ordered_json(nullptr);
  fr["is_freckle"] = cert.is_freckle;
  fr["shortcut"] = cert.shortcut;
  doc["freckle"] = std::move(fr);

  doc["is_vc_identity"] =
      is.value.feasible && vc.value.feasible &&
      is.value.value + vc.value.value == g.size();
  if (cert.is_freckle) doc["gis_optimal"] = gis_worst == is.value;
  if (cert.k >= 1) doc["gds_optimal"] = gds_worst == ds.value;
  return doc;
}

}  // namespace varg
