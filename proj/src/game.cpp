#include "varg/game.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <unordered_map>

#include "json.hpp"

namespace varg {

bool is_maximization(Problem p) {
  return p == Problem::independent_set || p == Problem::forest;
}

std::string problem_name(Problem p) {
  switch (p) {
    case Problem::independent_set: return "is";
    case Problem::vertex_cover: return "vc";
    case Problem::dominating_set: return "ds";
    case Problem::forest: return "forest";
  }
  fail(ErrorKind::internal, "unknown problem");
}

std::optional<Problem> problem_from_name(const std::string& name) {
  if (name == "is") return Problem::independent_set;
  if (name == "vc") return Problem::vertex_cover;
  if (name == "ds") return Problem::dominating_set;
  if (name == "forest") return Problem::forest;
  return std::nullopt;
}

bool better_for_algorithm(GameScore a, GameScore b, Problem p) {
  if (!a.feasible) return false;
  if (!b.feasible) return true;
  return is_maximization(p) ? a.value > b.value : a.value < b.value;
}

// ---- result cache ----

void ResultCache::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) return;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json rec;
    try {
      rec = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception&) {
      fail(ErrorKind::parse, "cache file contains an unparsable record");
    }
    if (!rec.is_object() || !rec.contains("key") || !rec.contains("problem") ||
        !rec.contains("value") || !rec["key"].is_string() ||
        !rec["problem"].is_string())
      fail(ErrorKind::parse, "cache record is missing a required field");
    GameScore score;
    const auto& val = rec["value"];
    if (val.is_string() && val.get<std::string>() == "infeasible")
      score = GameScore::infeasible();
    else if (val.is_number_integer())
      score = GameScore::finite(val.get<int>());
    else
      fail(ErrorKind::parse, "cache record has a malformed value");
    entries_.emplace(
        rec["problem"].get<std::string>() + "|" + rec["key"].get<std::string>(),
        score);
  }
}

void ResultCache::append_new(const std::string& path) const {
  if (fresh_.empty()) return;
  std::ofstream out(path, std::ios::app);
  if (!out) fail(ErrorKind::argument, "cannot open cache file for writing");
  for (const auto& line : fresh_) out << line << '\n';
}

std::optional<GameScore> ResultCache::lookup(const std::string& problem_tag,
                                             const CanonicalKey& key) const {
  auto it = entries_.find(problem_tag + "|" + key.hex());
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::record(const std::string& problem_tag,
                         const CanonicalKey& key, GameScore value) {
  std::string hex = key.hex();
  auto [it, fresh] = entries_.emplace(problem_tag + "|" + hex, value);
  if (!fresh) return;
  nlohmann::ordered_json rec;
  rec["key"] = hex;
  rec["problem"] = problem_tag;
  if (value.feasible)
    rec["value"] = value.value;
  else
    rec["value"] = "infeasible";
  fresh_.push_back(rec.dump());
}

std::uint64_t default_node_budget() {
  const char* env = std::getenv("ONLINEGRAPH_NODE_BUDGET");
  if (env == nullptr || *env == '\0') return 100'000'000;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0)
    fail(ErrorKind::argument, "ONLINEGRAPH_NODE_BUDGET must be a positive integer");
  return v;
}

// ---- scoring ----

namespace {

// the subgraph induced by the accepted vertices is acyclic
bool accepted_acyclic(const RevealedState& s, VertexSet accepted) {
  int comp[kMaxVertices];
  for (int i = 0; i < s.size(); ++i) comp[i] = i;
  auto find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (int i = 0; i < s.size(); ++i) {
    if (!(accepted & vbit(i))) continue;
    VertexSet back = s[i].nbrs & accepted;
    while (back) {
      int j = std::countr_zero(back);
      back &= back - 1;
      int ri = find(i);
      int rj = find(j);
      if (ri == rj) return false;
      comp[ri] = rj;
    }
  }
  return true;
}

}  // namespace

GameScore final_score(const RevealedState& final_state, Problem p) {
  VertexSet acc = final_state.accepted_mask();
  int count = std::popcount(acc);
  switch (p) {
    case Problem::independent_set:
      for (int i = 0; i < final_state.size(); ++i)
        if ((acc & vbit(i)) && (final_state[i].nbrs & acc))
          return GameScore::infeasible();
      return GameScore::finite(count);
    case Problem::vertex_cover:
      // an edge with both endpoints rejected is uncovered; every edge is
      // inspected at its later endpoint
      for (int i = 0; i < final_state.size(); ++i) {
        if (acc & vbit(i)) continue;
        if (final_state[i].nbrs & ~acc) return GameScore::infeasible();
      }
      return GameScore::finite(count);
    case Problem::dominating_set:
      for (int i = 0; i < final_state.size(); ++i)
        if (!((acc & vbit(i)) || (final_state.neighbors(i) & acc)))
          return GameScore::infeasible();
      return GameScore::finite(count);
    case Problem::forest:
      return accepted_acyclic(final_state, acc) ? GameScore::finite(count)
                                                : GameScore::infeasible();
  }
  fail(ErrorKind::internal, "unknown problem");
}

// ---- game search ----

namespace {

struct Solver {
  const Graph& host;
  Problem problem;
  const Policy* policy;  // null = optimal play
  SolveOptions opt;
  std::uint64_t budget;
  std::string cache_tag;
  std::string host_key_bytes;
  GameStats stats;
  std::unordered_map<std::string, GameScore> memo;
  StrategyTable strategy;

  Solver(const Graph& h, Problem p, const Policy* pol, const SolveOptions& o)
      : host(h), policy(pol), opt(o) {
    problem = p;
    budget = opt.node_budget != 0 ? opt.node_budget : default_node_budget();
    cache_tag = problem_name(problem);
    // conservative values depend on the alive embedding set, which a
    // class-keyed strategy table cannot express
    if (conservative_mode()) opt.want_strategy = false;
    ColoredGraph cg;
    cg.n = host.size();
    for (int v = 0; v < cg.n; ++v) {
      cg.adj[v] = host.neighbors(v);
      cg.color[v] = kColorPending;
    }
    host_key_bytes = canonical_form(cg).key.bytes();
  }

  bool conservative_mode() const {
    return policy == nullptr && opt.conservative &&
           problem == Problem::independent_set;
  }

  bool cache_enabled() const {
    return opt.cache != nullptr && policy == nullptr && !conservative_mode();
  }

  // decided host images of one embedding, by mark
  std::pair<VertexSet, VertexSet> decided_images(
      const RevealedState& seq,
      const std::array<std::uint8_t, kMaxVertices>& rep) const {
    VertexSet acc = 0, rej = 0;
    for (int i = 0; i < seq.size(); ++i) {
      if (seq[i].mark == Decision::accepted)
        acc |= vbit(rep[i]);
      else
        rej |= vbit(rep[i]);
    }
    return {acc, rej};
  }

  // under this identification every unrevealed host vertex neighbors an
  // accepted one, so only pointless requests remain
  bool only_pointless_remain(const RevealedState& seq,
                             const std::array<std::uint8_t, kMaxVertices>& rep)
      const {
    auto [acc, rej] = decided_images(seq, rep);
    VertexSet image = acc | rej;
    for (int w = 0; w < host.size(); ++w)
      if (!(image & vbit(w)) && !(host.neighbors(w) & acc)) return false;
    return true;
  }

  // bag of decided image pairs over the alive embeddings, order-free; a
  // conservative value is a function of the class together with this bag
  std::string alive_fingerprint(const RevealedState& seq,
                                const EmbeddingSet& embs) const {
    std::vector<std::uint32_t> sigs;
    sigs.reserve(embs.reps.size());
    for (const auto& rep : embs.reps) {
      auto [acc, rej] = decided_images(seq, rep);
      sigs.push_back(acc << 16 | rej);
    }
    std::sort(sigs.begin(), sigs.end());
    std::string out;
    out.reserve(sigs.size() * 4);
    for (std::uint32_t s : sigs)
      for (int shift = 24; shift >= 0; shift -= 8)
        out.push_back(static_cast<char>(s >> shift & 0xff));
    return out;
  }

  // cache keys carry the host so records from different hosts never collide
  CanonicalKey position_key(const CanonResult& canon) const {
    return CanonicalKey(host_key_bytes + canon.key.bytes());
  }

  static EmbeddingSet child_embeddings(const ExpandedMove& m,
                                       const RevealedState& child_seq) {
    EmbeddingSet embs = m.embeddings;
    dedup_embeddings(to_colored(child_seq), embs);
    return embs;
  }

  bool accept_allowed(RevealedState& seq, VertexSet nbhd) const {
    if (problem == Problem::independent_set)
      return (nbhd & seq.accepted_mask()) == 0;
    if (problem == Problem::forest) {
      seq.push(nbhd, Decision::accepted);
      bool ok = accepted_acyclic(seq, seq.accepted_mask());
      seq.pop();
      return ok;
    }
    return true;
  }

  bool reject_allowed(const RevealedState& seq, VertexSet nbhd) const {
    if (problem == Problem::vertex_cover)
      return (nbhd & seq.rejected_mask()) == 0;
    return true;
  }

  GameScore child_value(RevealedState& seq, const ExpandedMove& m, Decision d) {
    seq.push(m.neighborhood, d);
    EmbeddingSet embs = child_embeddings(m, seq);
    GameScore v = search(seq, embs);
    seq.pop();
    return v;
  }

  // value of the pending state reached by move m; in optimal mode also
  // records the chosen decision into the strategy table
  GameScore decide_pending(RevealedState& seq, const ExpandedMove& m) {
    if (policy != nullptr)
      return child_value(seq, m, policy->decide(seq, m.neighborhood));

    bool allow_a = accept_allowed(seq, m.neighborhood);
    bool allow_r = reject_allowed(seq, m.neighborhood);
    std::optional<GameScore> va, vr;
    if (allow_a) va = child_value(seq, m, Decision::accepted);
    if (allow_r) vr = child_value(seq, m, Decision::rejected);
    if (!va && !vr) fail(ErrorKind::internal, "both decisions pruned");

    GameScore best;
    Decision chosen;
    if (va && vr) {
      if (*va == *vr) {
        best = *va;
        chosen = Decision::accepted;
        if (opt.want_strategy) {
          // equal values: take the decision with the smaller decided key
          auto decided_key = [&](Decision d) {
            seq.push(m.neighborhood, d);
            std::string bytes = canonical_form(to_colored(seq)).key.bytes();
            seq.pop();
            return bytes;
          };
          if (decided_key(Decision::rejected) < decided_key(Decision::accepted))
            chosen = Decision::rejected;
        }
      } else if (better_for_algorithm(*va, *vr, problem)) {
        best = *va;
        chosen = Decision::accepted;
      } else {
        best = *vr;
        chosen = Decision::rejected;
      }
    } else if (va) {
      best = *va;
      chosen = Decision::accepted;
    } else {
      best = *vr;
      chosen = Decision::rejected;
    }
    if (opt.want_strategy) strategy.emplace(m.key.hex(), chosen);
    return best;
  }

  // minimax value of the decided state seq whose embedding set is embs
  GameScore search(RevealedState& seq, const EmbeddingSet& embs) {
    ++stats.nodes;
    if (stats.nodes > budget) fail(ErrorKind::budget, "node budget exceeded");
    if (seq.size() == host.size()) return final_score(seq, problem);

    CanonResult canon = canonical_form(to_colored(seq));
    std::string mkey = canon.key.bytes();
    if (policy != nullptr) {
      mkey.push_back('\0');
      mkey += policy->state_digest(seq);
    }
    if (conservative_mode()) {
      mkey.push_back('\0');
      mkey += alive_fingerprint(seq, embs);
    }
    if (opt.use_memo) {
      auto it = memo.find(mkey);
      if (it != memo.end()) {
        ++stats.memo_hits;
        return it->second;
      }
    }
    // a strategy must cover every reachable pending class, so cached values
    // cannot short-circuit the traversal while one is being recorded
    if (cache_enabled() && !opt.want_strategy) {
      auto hit = opt.cache->lookup(cache_tag, position_key(canon));
      if (hit) {
        ++stats.memo_hits;
        if (opt.use_memo) memo.emplace(mkey, *hit);
        return *hit;
      }
    }

    std::vector<ExpandedMove> moves =
        expand_moves(host, to_colored(seq), embs);
    if (moves.empty())
      fail(ErrorKind::internal, "no adversary move before the end of the game");
    if (conservative_mode()) {
      // a pointless reveal stays legal only under identifications where no
      // unrevealed vertex avoids the accepted set; those identifications are
      // the ones the move's alive set may carry forward
      VertexSet acc = seq.accepted_mask();
      std::vector<ExpandedMove> kept;
      for (auto& m : moves) {
        if ((m.neighborhood & acc) != 0) {
          std::vector<std::array<std::uint8_t, kMaxVertices>> alive;
          for (const auto& rep : m.embeddings.reps)
            if (only_pointless_remain(seq, rep)) alive.push_back(rep);
          if (alive.empty()) continue;
          m.embeddings.reps = std::move(alive);
        }
        kept.push_back(std::move(m));
      }
      if (kept.empty())
        fail(ErrorKind::internal, "conservative filter removed every move");
      moves = std::move(kept);
    }

    std::optional<GameScore> worst;
    for (const auto& m : moves) {
      GameScore v = decide_pending(seq, m);
      if (!worst || better_for_algorithm(*worst, v, problem)) worst = v;
    }
    if (opt.use_memo) memo.emplace(mkey, *worst);
    if (cache_enabled()) opt.cache->record(cache_tag, position_key(canon), *worst);
    return *worst;
  }

  // worst ordering for a fixed policy, replayed from the solved tree: at each
  // state take the first move, in key order, whose value attains the optimum
  std::vector<int> descend_ordering() {
    RevealedState seq;
    EmbeddingSet embs = seed_embeddings();
    while (seq.size() < host.size()) {
      std::vector<ExpandedMove> moves =
          expand_moves(host, to_colored(seq), embs);
      std::vector<GameScore> vals;
      vals.reserve(moves.size());
      std::optional<GameScore> worst;
      for (const auto& m : moves) {
        GameScore v = decide_pending(seq, m);
        vals.push_back(v);
        if (!worst || better_for_algorithm(*worst, v, problem)) worst = v;
      }
      std::size_t pick = 0;
      while (!(vals[pick] == *worst)) ++pick;
      Decision d = policy->decide(seq, moves[pick].neighborhood);
      seq.push(moves[pick].neighborhood, d);
      EmbeddingSet next = child_embeddings(moves[pick], seq);
      embs = std::move(next);
    }
    const auto* best = &embs.reps.front();
    for (const auto& r : embs.reps)
      if (std::lexicographical_compare(r.begin(), r.begin() + host.size(),
                                       best->begin(),
                                       best->begin() + host.size()))
        best = &r;
    std::vector<int> ordering(host.size());
    for (int i = 0; i < host.size(); ++i) ordering[i] = (*best)[i];
    return ordering;
  }
};

GameResult run_game(const Graph& host, Problem p, const Policy* pol,
                    const SolveOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  Solver solver(host, p, pol, opt);
  RevealedState seq;
  EmbeddingSet embs = seed_embeddings();
  GameResult out;
  out.value = solver.search(seq, embs);
  if (pol != nullptr) out.ordering = solver.descend_ordering();
  if (pol == nullptr && solver.opt.want_strategy)
    out.strategy = std::move(solver.strategy);
  out.stats = solver.stats;
  out.stats.ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return out;
}

}  // namespace

GameResult solve_value(const Graph& host, Problem p, const SolveOptions& opt) {
  return run_game(host, p, nullptr, opt);
}

GameResult solve_conservative_is(const Graph& host, const SolveOptions& opt) {
  SolveOptions o = opt;
  o.conservative = true;
  return run_game(host, Problem::independent_set, nullptr, o);
}

GameResult policy_worst_case(const Graph& host, Problem p, const Policy& alg,
                             const SolveOptions& opt) {
  return run_game(host, p, &alg, opt);
}

ReplayResult replay(const Graph& host, const std::vector<int>& ordering,
                    const Policy& alg, Problem p) {
  const int n = host.size();
  if (static_cast<int>(ordering.size()) != n)
    fail(ErrorKind::argument, "ordering length must equal the vertex count");
  VertexSet seen = 0;
  for (int v : ordering) {
    if (v < 0 || v >= n || (seen & vbit(v)))
      fail(ErrorKind::argument, "ordering must be a permutation of the vertices");
    seen |= vbit(v);
  }
  RevealedState trace;
  for (int i = 0; i < n; ++i) {
    VertexSet nbrs = 0;
    for (int j = 0; j < i; ++j)
      if (host.has_edge(ordering[i], ordering[j])) nbrs |= vbit(j);
    Decision d = alg.decide(trace, nbrs);
    trace.push(nbrs, d);
  }
  return {trace, final_score(trace, p)};
}

GameResult online_matching_number(const Graph& host, const SolveOptions& opt) {
  return solve_value(line_graph(host).lg, Problem::independent_set, opt);
}

}  // namespace varg
