#pragma once

#include <string>
#include <vector>

#include "varg/game.hpp"
#include "varg/graph.hpp"
#include "varg/policy.hpp"
#include "varg/revealed.hpp"
#include "varg/setsystem.hpp"

// Independent reference implementations used to cross-check the engine, plus a
// few corpus builders. Everything here favors the most literal formulation
// available: no canonicalization, no memoization, no pruning.
namespace varg::testing {

// One representative per isomorphism class on exactly n vertices (n <= 6),
// deduplicated by minimizing the edge bitmask over all vertex permutations.
std::vector<Graph> graph_classes(int n);

// Final score of a fully revealed trace, recomputed from the raw arrivals.
GameScore score_oracle(const RevealedState& trace, Problem p);

// Every injective map arrivals -> host vertices that induces exactly the
// revealed edges.
std::vector<std::vector<int>> brute_embeddings(const Graph& host,
                                               const RevealedState& revealed);

// Every neighborhood a next arrival can present, found by enumerating all
// induced embeddings of the revealed prefix into the host.
std::vector<VertexSet> brute_moves(const Graph& host,
                                   const RevealedState& revealed);

// Game value by plain minimax over the literal observation tree.
GameScore minimax_oracle(const Graph& host, Problem p);

// Worst case of a policy by replaying every one of the n! orderings.
GameScore sweep_policy(const Graph& host, const Policy& alg, Problem p);

// Score of a policy on one fixed ordering, simulated directly.
GameScore replay_oracle(const Graph& host, const std::vector<int>& order,
                        const Policy& alg, Problem p);

// Color-preserving isomorphism by scanning all vertex permutations.
bool brute_iso(const MarkedGraph& a, const MarkedGraph& b);

// Greedy maximum-set worst case over all element orderings, simulated on the
// real element identities.
GameScore sweep_gmos(const SetSystem& s);

// Greedy maximum-set score on one fixed element ordering.
GameScore gmos_replay_oracle(const SetSystem& s, const std::vector<int>& order);

// Online maximum-set game value by minimax over literal traces.
GameScore mos_minimax_oracle(const SetSystem& s);

// Worst case against the full adversary of playing a solver's strategy table;
// used to validate strategy witnesses.
GameScore strategy_value(const Graph& host, Problem p,
                         const StrategyTable& table);

// Disjoint union, vertices of parts[i] shifted past those of parts[0..i-1].
Graph disjoint_union(const std::vector<Graph>& parts);

bool is_connected(const Graph& g);

}  // namespace varg::testing
