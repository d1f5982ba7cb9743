#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "varg/revealed.hpp"

namespace varg {

// An online algorithm. decide sees the revealed history (decided arrivals
// only) and the new vertex's edges back into it, never host vertex ids.
// state_digest is the extra memo-key fragment for game search: histories with
// equal digests and canonically equal marked states must behave identically on
// all future requests.
struct Policy {
  std::string name;
  std::function<Decision(const RevealedState& history, VertexSet nbrs)> decide;
  std::function<std::string(const RevealedState& history)> state_digest;
};

enum class PolicyKind {
  gis,            // accept iff no accepted neighbor
  gvc,            // accept iff some revealed neighbor is not accepted
  gds,            // same decision rule as gis, scored as domination
  is_star,        // reject 1st; reject 2nd if adjacent to 1st; reject if >1 nbrs
  almost_gis,     // gis, but reject anything arriving with >= 2 neighbors
  gf,             // accept iff the accepted set stays acyclic
  forest_degree,  // accept iff deg <= 2 and all neighbors had degree >= 2
};

Policy make_policy(PolicyKind kind);
Policy complement_policy(const Policy& inner);

// CLI names: gis gvc gds is-star is-star-bar almost-gis gf forest-deg
std::optional<Policy> policy_from_name(const std::string& name);
std::vector<std::string> policy_names();

// ---- offline optima (exhaustive subset search) ----

enum class OracleKind { max_is, min_maximal_is, min_vc, min_ds };

struct OracleResult {
  int value = 0;
  VertexSet witness = 0;
};

OracleResult offline_oracle(const Graph& g, OracleKind kind);

}  // namespace varg
