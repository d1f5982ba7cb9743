#include "varg/policy.hpp"

#include <bit>

#include "varg/graph.hpp"

namespace varg {

namespace {

std::string empty_digest(const RevealedState&) { return {}; }

Decision gis_decide(const RevealedState& history, VertexSet nbrs) {
  return (nbrs & history.accepted_mask()) ? Decision::rejected
                                          : Decision::accepted;
}

Decision gvc_decide(const RevealedState& history, VertexSet nbrs) {
  return (nbrs & history.rejected_mask()) ? Decision::accepted
                                          : Decision::rejected;
}

Decision is_star_decide(const RevealedState& history, VertexSet nbrs) {
  int count = history.size();
  if (count == 0) return Decision::rejected;
  if (count == 1) return nbrs ? Decision::rejected : Decision::accepted;
  return std::popcount(nbrs) > 1 ? Decision::rejected : Decision::accepted;
}

// request count (saturated at 2) plus whether the second request was adjacent
// to the first
std::string is_star_digest(const RevealedState& history) {
  char count = static_cast<char>(history.size() < 2 ? history.size() : 2);
  char adj2 = history.size() >= 2 && (history[1].nbrs & vbit(0)) ? 1 : 0;
  return std::string{count, adj2};
}

Decision almost_gis_decide(const RevealedState& history, VertexSet nbrs) {
  if (std::popcount(nbrs) >= 2) return Decision::rejected;
  return gis_decide(history, nbrs);
}

// does accepting a vertex adjacent to `nbrs` keep the accepted set acyclic
bool accept_stays_forest(const RevealedState& history, VertexSet nbrs) {
  VertexSet acc = history.accepted_mask();
  VertexSet hit = nbrs & acc;
  if (std::popcount(hit) < 2) return true;
  // components of the accepted-induced subgraph
  int comp[kMaxVertices];
  for (int i = 0; i < history.size(); ++i) comp[i] = i;
  auto find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (int i = 0; i < history.size(); ++i) {
    if (!(acc & vbit(i))) continue;
    VertexSet within = history[i].nbrs & acc;
    for (int j = 0; j < i; ++j)
      if (within & vbit(j)) comp[find(i)] = find(j);
  }
  VertexSet seen = 0;
  for (int i = 0; i < history.size(); ++i) {
    if (!(hit & vbit(i))) continue;
    int root = find(i);
    if (seen & vbit(root)) return false;  // two new edges into one tree
    seen |= vbit(root);
  }
  return true;
}

Decision gf_decide(const RevealedState& history, VertexSet nbrs) {
  return accept_stays_forest(history, nbrs) ? Decision::accepted
                                            : Decision::rejected;
}

Decision forest_degree_decide(const RevealedState& history, VertexSet nbrs) {
  if (std::popcount(nbrs) > 2) return Decision::rejected;
  VertexSet rest = nbrs;
  while (rest) {
    int u = std::countr_zero(rest);
    rest &= rest - 1;
    if (history.degree(u) < 2) return Decision::rejected;
  }
  return Decision::accepted;
}

}  // namespace

Policy make_policy(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::gis:
      return {"gis", gis_decide, empty_digest};
    case PolicyKind::gvc:
      return {"gvc", gvc_decide, empty_digest};
    case PolicyKind::gds:
      return {"gds", gis_decide, empty_digest};
    case PolicyKind::is_star:
      return {"is-star", is_star_decide, is_star_digest};
    case PolicyKind::almost_gis:
      return {"almost-gis", almost_gis_decide, empty_digest};
    case PolicyKind::gf:
      return {"gf", gf_decide, empty_digest};
    case PolicyKind::forest_degree:
      return {"forest-deg", forest_degree_decide, empty_digest};
  }
  fail(ErrorKind::internal, "unknown policy kind");
}

Policy complement_policy(const Policy& inner) {
  auto flip_marks = [](const RevealedState& history) {
    RevealedState flipped;
    for (int i = 0; i < history.size(); ++i) {
      flipped.push(history[i].nbrs, history[i].mark == Decision::accepted
                                        ? Decision::rejected
                                        : Decision::accepted);
    }
    return flipped;
  };
  Policy out;
  out.name = inner.name + "-bar";
  out.decide = [inner, flip_marks](const RevealedState& history,
                                   VertexSet nbrs) {
    Decision d = inner.decide(flip_marks(history), nbrs);
    return d == Decision::accepted ? Decision::rejected : Decision::accepted;
  };
  out.state_digest = [inner, flip_marks](const RevealedState& history) {
    return inner.state_digest(flip_marks(history));
  };
  return out;
}

std::optional<Policy> policy_from_name(const std::string& name) {
  if (name == "gis") return make_policy(PolicyKind::gis);
  if (name == "gvc") return make_policy(PolicyKind::gvc);
  if (name == "gds") return make_policy(PolicyKind::gds);
  if (name == "is-star") return make_policy(PolicyKind::is_star);
  if (name == "almost-gis") return make_policy(PolicyKind::almost_gis);
  if (name == "gf") return make_policy(PolicyKind::gf);
  if (name == "forest-deg") return make_policy(PolicyKind::forest_degree);
  if (name.size() > 4 && name.substr(name.size() - 4) == "-bar") {
    auto inner = policy_from_name(name.substr(0, name.size() - 4));
    if (inner) return complement_policy(*inner);
  }
  return std::nullopt;
}

std::vector<std::string> policy_names() {
  return {"gis",        "gvc", "gds",        "is-star",
          "is-star-bar", "almost-gis", "gf", "forest-deg"};
}

// ---- offline optima ----

OracleResult offline_oracle(const Graph& g, OracleKind kind) {
  const int n = g.size();
  const VertexSet all = g.vertex_mask();
  auto independent = [&](VertexSet s) {
    for (VertexSet rest = s; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (g.neighbors(v) & s) return false;
    }
    return true;
  };
  auto maximal_independent = [&](VertexSet s) {
    if (!independent(s)) return false;
    for (VertexSet rest = all & ~s; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (!(g.neighbors(v) & s)) return false;
    }
    return true;
  };
  auto covers = [&](VertexSet s) {
    for (auto [u, v] : g.edges())
      if (!((s & vbit(u)) || (s & vbit(v)))) return false;
    return true;
  };
  auto dominates = [&](VertexSet s) {
    for (int v = 0; v < n; ++v)
      if (!((s & vbit(v)) || (g.neighbors(v) & s))) return false;
    return true;
  };

  bool maximize = kind == OracleKind::max_is;
  OracleResult best;
  bool found = false;
  for (VertexSet s = 0;; ++s) {
    bool ok = false;
    switch (kind) {
      case OracleKind::max_is: ok = independent(s); break;
      case OracleKind::min_maximal_is: ok = maximal_independent(s); break;
      case OracleKind::min_vc: ok = covers(s); break;
      case OracleKind::min_ds: ok = dominates(s); break;
    }
    if (ok) {
      int size = std::popcount(s);
      if (!found || (maximize ? size > best.value : size < best.value)) {
        best = {size, s};
        found = true;
      }
    }
    if (s == all) break;
  }
  if (!found) fail(ErrorKind::internal, "offline search found no solution");
  return best;
}

}  // namespace varg
