#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "varg/game.hpp"
#include "varg/graph.hpp"

namespace varg {

inline constexpr int kMaxElements = 10;

using ElementSet = std::uint32_t;  // low kMaxElements bits

// Base set plus the minimal forbidden subsets; a solution is feasible iff it
// contains no forbidden set.
struct SetSystem {
  std::vector<std::string> elements;
  std::vector<ElementSet> forbidden;  // antichain of nonempty masks

  int size() const { return static_cast<int>(elements.size()); }
};

// {"elements": ["a", ...], "forbidden": [["a","b"], ...]}
SetSystem load_setsystem(const std::string& json_text);
std::string setsystem_to_json(const SetSystem& s);

// vertices become elements, edges the forbidden pairs
SetSystem setsystem_from_graph(const Graph& g);

struct SetSystemStats {
  int isolated_count = 0;  // elements in no forbidden set
  SetSystem core;          // system restricted to the non-isolated elements
  int s_size = 0;          // minimum size of an inclusion-maximal feasible set
};

SetSystemStats setsystem_stats(const SetSystem& s);

struct MosOptions {
  bool conservative = false;  // adversary skips pointless requests if possible
  std::uint64_t node_budget = 0;  // 0 = default_node_budget()
};

// Exact game value of the online maximum-set problem: elements arrive
// unlabeled, each arrival reveals the minimal forbidden patterns it completes
// among earlier arrivals.
GameResult mso_value(const SetSystem& s, const MosOptions& opt = {});

// Worst case of the greedy that accepts whenever the solution stays feasible.
GameResult gmos_worst(const SetSystem& s, const MosOptions& opt = {});

}  // namespace varg
