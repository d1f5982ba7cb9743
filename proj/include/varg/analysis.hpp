#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "varg/game.hpp"
#include "varg/graph.hpp"

#include "json.hpp"

namespace varg {

struct FreckleCertificate {
  int k = 0;                    // isolated vertices
  int s_size = 0;               // smallest maximal independent set of the core
  std::optional<int> io_core;   // game value of the core; empty if shortcut hit
  bool is_freckle = false;      // k + s_size >= io_core
  bool shortcut = false;        // at least half the vertices isolated
};

FreckleCertificate freckle_check(const Graph& g, const SolveOptions& opt = {});

// Per-ordering comparison of two policies over every presentation order.
struct BijectiveReport {
  bool dominates = false;  // a at least as good as b on every ordering
  std::optional<std::vector<int>> strict_witness;  // a strictly better here
  long long orderings = 0;
  long long sum_a = 0;  // sums over feasible orderings; means are exact
  long long sum_b = 0;  // rationals sum/orderings when nothing was infeasible
  int infeasible_a = 0;
  int infeasible_b = 0;
};

BijectiveReport bijective_compare(const Graph& g, const Policy& a,
                                  const Policy& b,
                                  Problem p = Problem::independent_set);

struct ReductionOutput {
  Graph graph;
  int bound = 0;
};

// minimum maximal independent set <= L iff online IS value <= bound
ReductionOutput reduce_mmis_to_online_is(const Graph& g, int bound);
// independence number >= L iff online DS value >= bound
ReductionOutput reduce_is_to_online_ds(const Graph& g, int bound);

nlohmann::ordered_json theorem_report(const Graph& g,
                                      const SolveOptions& opt = {});

}  // namespace varg
