#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "varg/canon.hpp"
#include "varg/policy.hpp"

namespace varg {

enum class Problem { independent_set, vertex_cover, dominating_set, forest };

bool is_maximization(Problem p);
std::string problem_name(Problem p);
std::optional<Problem> problem_from_name(const std::string& name);

// Final-score domain: a count, or the sentinel for an infeasible final
// solution (-inf for maximization problems, +inf for minimization).
struct GameScore {
  bool feasible = true;
  int value = 0;

  static GameScore finite(int v) { return {true, v}; }
  static GameScore infeasible() { return {false, 0}; }
  bool operator==(const GameScore& other) const = default;
};

// strictly better from the algorithm's point of view
bool better_for_algorithm(GameScore a, GameScore b, Problem p);

struct GameStats {
  std::uint64_t nodes = 0;
  std::uint64_t memo_hits = 0;
  double ms = 0.0;
};

// Append-only JSON-lines store of solved positions:
// {"key": <hex>, "problem": <tag>, "value": <int or "infeasible">}
class ResultCache {
 public:
  void load(const std::string& path);  // a missing file is an empty cache
  void append_new(const std::string& path) const;
  std::optional<GameScore> lookup(const std::string& problem_tag,
                                  const CanonicalKey& key) const;
  void record(const std::string& problem_tag, const CanonicalKey& key,
              GameScore value);
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, GameScore> entries_;  // "<tag>|<hex>" -> score
  std::vector<std::string> fresh_;
};

std::uint64_t default_node_budget();  // ONLINEGRAPH_NODE_BUDGET or 10^8

struct SolveOptions {
  bool conservative = false;  // IS only: skip pointless reveals when possible
  bool use_memo = true;
  bool want_strategy = false;
  std::uint64_t node_budget = 0;  // 0 = default_node_budget()
  ResultCache* cache = nullptr;
};

// pending-state key hex -> optimal decision
using StrategyTable = std::map<std::string, Decision>;

struct GameResult {
  GameScore value;
  std::optional<std::vector<int>> ordering;  // witness for policy games
  std::optional<StrategyTable> strategy;     // witness for optimal games
  GameStats stats;
};

// Exact minimax value of the online game on host: the adversary presents host
// in the worst order for the best possible online algorithm.
GameResult solve_value(const Graph& host, Problem p, const SolveOptions& opt = {});
GameResult solve_conservative_is(const Graph& host, const SolveOptions& opt = {});

// Worst-case value of a fixed policy; the witness ordering attains it.
GameResult policy_worst_case(const Graph& host, Problem p, const Policy& alg,
                             const SolveOptions& opt = {});

struct ReplayResult {
  RevealedState trace;
  GameScore score;
};

ReplayResult replay(const Graph& host, const std::vector<int>& ordering,
                    const Policy& alg, Problem p);

GameScore final_score(const RevealedState& final_state, Problem p);

// Online matching number: by construction the game value of the independent
// set problem on the line graph.
GameResult online_matching_number(const Graph& host, const SolveOptions& opt = {});

}  // namespace varg
