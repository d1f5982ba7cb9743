#include "varg/setsystem.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

namespace varg {

// ---- loading and serialization ----

SetSystem load_setsystem(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception&) {
    fail(ErrorKind::parse, "set system is not valid JSON");
  }
  if (!doc.is_object() || !doc.contains("elements") ||
      !doc.contains("forbidden") || !doc["elements"].is_array() ||
      !doc["forbidden"].is_array())
    fail(ErrorKind::parse,
         "set system needs an elements array and a forbidden array");

  SetSystem s;
  std::map<std::string, int> index;
  for (const auto& el : doc["elements"]) {
    if (!el.is_string() || el.get<std::string>().empty())
      fail(ErrorKind::parse, "element names must be nonempty strings");
    std::string name = el.get<std::string>();
    if (index.count(name))
      fail(ErrorKind::parse, "duplicate element name: " + name);
    if (s.size() >= kMaxElements) fail(ErrorKind::limit, "too many elements");
    index[name] = s.size();
    s.elements.push_back(std::move(name));
  }
  for (const auto& fs : doc["forbidden"]) {
    if (!fs.is_array() || fs.empty())
      fail(ErrorKind::parse, "forbidden sets must be nonempty arrays");
    ElementSet mask = 0;
    for (const auto& el : fs) {
      if (!el.is_string())
        fail(ErrorKind::parse, "forbidden set members must be element names");
      auto it = index.find(el.get<std::string>());
      if (it == index.end())
        fail(ErrorKind::parse,
             "unknown element in forbidden set: " + el.get<std::string>());
      if (mask & vbit(it->second))
        fail(ErrorKind::parse, "repeated element in forbidden set");
      mask |= vbit(it->second);
    }
    s.forbidden.push_back(mask);
  }
  for (std::size_t i = 0; i < s.forbidden.size(); ++i)
    for (std::size_t j = 0; j < s.forbidden.size(); ++j)
      if (i != j && (s.forbidden[i] | s.forbidden[j]) == s.forbidden[j])
        fail(ErrorKind::parse, "forbidden sets must form an antichain");
  return s;
}

std::string setsystem_to_json(const SetSystem& s) {
  nlohmann::ordered_json doc;
  doc["elements"] = s.elements;
  auto forb = nlohmann::ordered_json::array();
  std::vector<ElementSet> sorted = s.forbidden;
  std::sort(sorted.begin(), sorted.end());
  for (ElementSet mask : sorted) {
    auto one = nlohmann::ordered_json::array();
    for (ElementSet rest = mask; rest;) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      one.push_back(s.elements[i]);
    }
    forb.push_back(std::move(one));
  }
  doc["forbidden"] = std::move(forb);
  return doc.dump();
}

SetSystem setsystem_from_graph(const Graph& g) {
  if (g.size() > kMaxElements)
    fail(ErrorKind::limit, "graph too large for a set system");
  SetSystem s;
  std::set<std::string> seen;
  bool unique = true;
  for (int v = 0; v < g.size(); ++v)
    unique = seen.insert(g.label(v)).second && unique;
  for (int v = 0; v < g.size(); ++v)
    s.elements.push_back(unique ? g.label(v) : std::to_string(v));
  for (auto [u, v] : g.edges()) s.forbidden.push_back(vbit(u) | vbit(v));
  return s;
}

SetSystemStats setsystem_stats(const SetSystem& s) {
  if (s.size() > kMaxElements)
    fail(ErrorKind::limit, "set system exceeds the element limit");
  SetSystemStats out;
  ElementSet covered = 0;
  for (ElementSet f : s.forbidden) covered |= f;
  ElementSet all = s.size() == 0 ? 0 : (ElementSet{1} << s.size()) - 1;
  out.isolated_count = std::popcount(all & ~covered);

  std::array<int, kMaxElements> remap{};
  for (int v = 0, next = 0; v < s.size(); ++v) {
    if (!(covered & vbit(v))) continue;
    remap[v] = next++;
    out.core.elements.push_back(s.elements[v]);
  }
  for (ElementSet f : s.forbidden) {
    ElementSet m = 0;
    for (ElementSet rest = f; rest;) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      m |= vbit(remap[i]);
    }
    out.core.forbidden.push_back(m);
  }

  auto feasible = [&](ElementSet x) {
    for (ElementSet f : s.forbidden)
      if ((f & ~x) == 0) return false;
    return true;
  };
  int best = s.size() + 1;
  for (ElementSet x = 0;; ++x) {
    if (feasible(x)) {
      bool maximal = true;
      for (ElementSet rest = all & ~x; rest && maximal;) {
        int y = std::countr_zero(rest);
        rest &= rest - 1;
        if (feasible(x | vbit(y))) maximal = false;
      }
      if (maximal) best = std::min(best, std::popcount(x));
    }
    if (x == all) break;
  }
  out.s_size = best <= s.size() ? best : 0;
  return out;
}

// ---- canonical form of a request trace ----

namespace {

// Arrivals with decision colors plus the family of forbidden patterns
// revealed so far, as masks over arrival indices.
struct ColoredTrace {
  int n = 0;
  std::vector<ElementSet> edges;
  std::array<std::uint8_t, kMaxElements> color{};
};

struct TraceCanon {
  std::string key;
  std::array<std::uint8_t, kMaxElements> labeling{};  // vertex -> position
};

std::string serialize_trace(const ColoredTrace& t,
                            const std::vector<int>& order) {
  std::array<std::uint8_t, kMaxElements> pos{};
  for (int p = 0; p < t.n; ++p) pos[order[p]] = static_cast<std::uint8_t>(p);
  std::string s;
  s.push_back(static_cast<char>(t.n));
  s.push_back(static_cast<char>(t.edges.size()));
  for (int p = 0; p < t.n; ++p)
    s.push_back(static_cast<char>(t.color[order[p]]));
  std::vector<ElementSet> rel;
  rel.reserve(t.edges.size());
  for (ElementSet e : t.edges) {
    ElementSet m = 0;
    for (ElementSet rest = e; rest;) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      m |= vbit(pos[i]);
    }
    rel.push_back(m);
  }
  std::sort(rel.begin(), rel.end());
  for (ElementSet e : rel) {
    s.push_back(static_cast<char>(e >> 8));
    s.push_back(static_cast<char>(e & 255));
  }
  return s;
}

using TCells = std::vector<std::vector<int>>;

TCells trace_color_blocks(const ColoredTrace& t) {
  std::vector<int> verts(t.n);
  for (int v = 0; v < t.n; ++v) verts[v] = v;
  std::stable_sort(verts.begin(), verts.end(),
                   [&](int a, int b) { return t.color[a] < t.color[b]; });
  TCells blocks;
  for (int v : verts) {
    if (blocks.empty() || t.color[blocks.back().front()] != t.color[v])
      blocks.emplace_back();
    blocks.back().push_back(v);
  }
  return blocks;
}

void refine_trace_cells(const ColoredTrace& t, TCells& cells) {
  for (;;) {
    std::array<int, kMaxElements> cell_of{};
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
    bool split = false;
    for (std::size_t c = 0; c < cells.size() && !split; ++c) {
      if (cells[c].size() <= 1) continue;
      // signature: multiset of member-cell profiles of the incident patterns
      using Sig = std::vector<std::vector<int>>;
      std::vector<std::pair<Sig, int>> sigs;
      sigs.reserve(cells[c].size());
      for (int v : cells[c]) {
        Sig sig;
        for (ElementSet e : t.edges) {
          if (!(e & vbit(v))) continue;
          std::vector<int> profile;
          for (ElementSet rest = e; rest;) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            profile.push_back(cell_of[u]);
          }
          std::sort(profile.begin(), profile.end());
          sig.push_back(std::move(profile));
        }
        std::sort(sig.begin(), sig.end());
        sigs.emplace_back(std::move(sig), v);
      }
      bool uniform = true;
      for (std::size_t i = 1; i < sigs.size(); ++i)
        if (sigs[i].first != sigs[0].first) uniform = false;
      if (uniform) continue;
      std::sort(sigs.begin(), sigs.end());
      TCells groups;
      for (std::size_t i = 0; i < sigs.size(); ++i) {
        if (i == 0 || sigs[i].first != sigs[i - 1].first) groups.emplace_back();
        groups.back().push_back(sigs[i].second);
      }
      TCells next;
      for (std::size_t j = 0; j < cells.size(); ++j) {
        if (j == c)
          next.insert(next.end(), groups.begin(), groups.end());
        else
          next.push_back(cells[j]);
      }
      cells = std::move(next);
      split = true;
    }
    if (!split) return;
  }
}

// swapping u and v maps the pattern family onto itself
bool trace_interchangeable(const ColoredTrace& t, int u, int v) {
  std::vector<ElementSet> a = t.edges;
  std::vector<ElementSet> b;
  b.reserve(a.size());
  for (ElementSet e : a) {
    bool at_u = (e & vbit(u)) != 0;
    bool at_v = (e & vbit(v)) != 0;
    b.push_back(at_u == at_v ? e : (e ^ (vbit(u) | vbit(v))));
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

struct TraceSearch {
  const ColoredTrace& t;
  std::string best;
  std::vector<int> best_order;

  void run(TCells cells) {
    refine_trace_cells(t, cells);
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].size() > 1) {
        target = c;
        break;
      }
    }
    if (target == cells.size()) {
      std::vector<int> order;
      order.reserve(cells.size());
      for (const auto& cell : cells) order.push_back(cell.front());
      std::string ser = serialize_trace(t, order);
      if (best.empty() || ser < best) {
        best = std::move(ser);
        best_order = std::move(order);
      }
      return;
    }
    std::vector<int> reps;
    for (int v : cells[target]) {
      bool covered = false;
      for (int r : reps)
        if (trace_interchangeable(t, r, v)) covered = true;
      if (!covered) reps.push_back(v);
    }
    for (int v : reps) {
      TCells next;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          next.push_back(cells[c]);
          continue;
        }
        next.push_back({v});
        std::vector<int> rest;
        for (int u : cells[target])
          if (u != v) rest.push_back(u);
        next.push_back(std::move(rest));
      }
      run(std::move(next));
    }
  }
};

TraceCanon canonical_trace(const ColoredTrace& t) {
  if (t.n == 0) {
    TraceCanon res;
    res.key = serialize_trace(t, {});
    return res;
  }
  TraceSearch search{t, {}, {}};
  search.run(trace_color_blocks(t));
  TraceCanon res;
  res.key = std::move(search.best);
  for (int p = 0; p < t.n; ++p)
    res.labeling[search.best_order[p]] = static_cast<std::uint8_t>(p);
  return res;
}

// ---- game over traces ----

using TraceEmb = std::array<std::uint8_t, kMaxElements>;

ColoredTrace make_colored_trace(const std::vector<ElementSet>& family,
                                const std::vector<Decision>& marks) {
  ColoredTrace t;
  t.n = static_cast<int>(marks.size());
  t.edges = family;
  for (int i = 0; i < t.n; ++i)
    t.color[i] =
        marks[i] == Decision::accepted ? kColorAccepted : kColorRejected;
  return t;
}

// patterns of the system completed inside the image of g, pulled back to
// arrival indices; injectivity keeps an antichain an antichain
std::vector<ElementSet> pullback_family(const SetSystem& sys,
                                        const TraceEmb& g, int m) {
  ElementSet im = 0;
  for (int i = 0; i < m; ++i) im |= vbit(g[i]);
  std::vector<ElementSet> out;
  for (ElementSet sset : sys.forbidden) {
    if (sset & ~im) continue;
    ElementSet b = 0;
    for (int i = 0; i < m; ++i)
      if (sset & vbit(g[i])) b |= vbit(i);
    out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct TraceMove {
  std::vector<ElementSet> family;  // successor patterns, class coordinates
  int witness_element = -1;
  std::string key;
  std::array<std::uint8_t, kMaxElements> labeling{};
  std::vector<TraceEmb> embeddings;
};

std::vector<TraceMove> expand_trace_moves(const SetSystem& sys,
                                          const std::vector<Decision>& marks,
                                          const std::vector<ElementSet>& family,
                                          const std::vector<TraceEmb>& embs) {
  const int k = static_cast<int>(marks.size());
  if (k >= sys.size()) return {};
  ColoredTrace succ = make_colored_trace(family, marks);
  succ.n = k + 1;
  succ.color[k] = kColorPending;

  std::map<std::vector<ElementSet>, TraceCanon> canon_by_family;
  std::unordered_map<std::string, std::size_t> class_index;
  std::vector<std::unordered_set<std::uint64_t>> class_sigs;
  std::vector<TraceMove> moves;

  for (const TraceEmb& e : embs) {
    ElementSet used = 0;
    for (int i = 0; i < k; ++i) used |= vbit(e[i]);
    for (int x = 0; x < sys.size(); ++x) {
      if (used & vbit(x)) continue;
      TraceEmb ext = e;
      ext[k] = static_cast<std::uint8_t>(x);
      std::vector<ElementSet> fam2 = pullback_family(sys, ext, k + 1);

      auto it = canon_by_family.find(fam2);
      if (it == canon_by_family.end()) {
        succ.edges = fam2;
        it = canon_by_family.emplace(fam2, canonical_trace(succ)).first;
      }
      const TraceCanon& here = it->second;

      auto [cit, fresh] = class_index.emplace(here.key, moves.size());
      if (fresh) {
        TraceMove m;
        m.family = std::move(fam2);
        m.witness_element = x;
        m.key = here.key;
        m.labeling = here.labeling;
        moves.push_back(std::move(m));
        class_sigs.emplace_back();
      }
      TraceMove& cls = moves[cit->second];

      // transport ext into the class representative's coordinates
      std::array<std::uint8_t, kMaxElements> inv_here{};
      for (int i = 0; i <= k; ++i)
        inv_here[here.labeling[i]] = static_cast<std::uint8_t>(i);
      TraceEmb f{};
      for (int i = 0; i <= k; ++i) f[i] = ext[inv_here[cls.labeling[i]]];

      std::uint64_t masks[3] = {0, 0, 0};
      for (int i = 0; i < k; ++i) masks[succ.color[i]] |= vbit(f[i]);
      masks[kColorPending] |= vbit(f[k]);
      std::uint64_t sig = masks[0] | (masks[1] << 16) | (masks[2] << 32);
      if (class_sigs[cit->second].insert(sig).second)
        cls.embeddings.push_back(f);
    }
  }

  std::sort(moves.begin(), moves.end(),
            [](const TraceMove& a, const TraceMove& b) { return a.key < b.key; });
  return moves;
}

void dedup_trace_embeddings(const std::vector<Decision>& marks,
                            std::vector<TraceEmb>& embs) {
  const int k = static_cast<int>(marks.size());
  std::unordered_set<std::uint64_t> seen;
  std::vector<TraceEmb> kept;
  kept.reserve(embs.size());
  for (const auto& e : embs) {
    std::uint64_t masks[2] = {0, 0};
    for (int i = 0; i < k; ++i)
      masks[marks[i] == Decision::accepted ? 0 : 1] |= vbit(e[i]);
    if (seen.insert(masks[0] | (masks[1] << 16)).second) kept.push_back(e);
  }
  embs = std::move(kept);
}

struct TraceSolver {
  const SetSystem& sys;
  bool greedy;  // fixed greedy play instead of optimal play
  MosOptions opt;
  std::uint64_t budget;
  GameStats stats;
  std::unordered_map<std::string, GameScore> memo;

  TraceSolver(const SetSystem& s, bool g, const MosOptions& o)
      : sys(s), greedy(g), opt(o) {
    budget = opt.node_budget != 0 ? opt.node_budget : default_node_budget();
  }

  static ElementSet accepted_of(const std::vector<Decision>& marks) {
    ElementSet acc = 0;
    for (std::size_t i = 0; i < marks.size(); ++i)
      if (marks[i] == Decision::accepted) acc |= vbit(static_cast<int>(i));
    return acc;
  }

  GameScore leaf_score(const std::vector<ElementSet>& family,
                       const std::vector<Decision>& marks) const {
    ElementSet acc = accepted_of(marks);
    for (ElementSet b : family)
      if ((b & ~acc) == 0) return GameScore::infeasible();
    return GameScore::finite(std::popcount(acc));
  }

  // accepting the pending arrival completes a forbidden pattern
  static bool accept_completes(const std::vector<ElementSet>& fam, int pending,
                               ElementSet acc) {
    for (ElementSet b : fam)
      if ((b & vbit(pending)) && (b & ~vbit(pending) & ~acc) == 0) return true;
    return false;
  }

  static bool pointless(const std::vector<ElementSet>& fam, int pending,
                        ElementSet acc) {
    for (ElementSet b : fam)
      if ((b & ~vbit(pending) & ~acc) == 0) return true;
    return false;
  }

  // decided actual-element images of one identification, by mark
  std::pair<ElementSet, ElementSet> decided_images(
      const std::vector<Decision>& marks, const TraceEmb& e) const {
    ElementSet acc = 0, rej = 0;
    for (std::size_t i = 0; i < marks.size(); ++i) {
      if (marks[i] == Decision::accepted)
        acc |= vbit(e[i]);
      else
        rej |= vbit(e[i]);
    }
    return {acc, rej};
  }

  // under this identification every unrevealed element completes a forbidden
  // set together with accepted ones, so only pointless requests remain
  bool only_pointless_remain(const std::vector<Decision>& marks,
                             const TraceEmb& e) const {
    auto [acc, rej] = decided_images(marks, e);
    ElementSet image = acc | rej;
    for (int x = 0; x < sys.size(); ++x) {
      if (image & vbit(x)) continue;
      bool covered = false;
      for (ElementSet b : sys.forbidden)
        if ((b & vbit(x)) && (b & ~vbit(x) & ~acc) == 0) {
          covered = true;
          break;
        }
      if (!covered) return false;
    }
    return true;
  }

  // bag of decided image pairs over the alive identifications, order-free; a
  // conservative value is a function of the class together with this bag
  std::string alive_fingerprint(const std::vector<Decision>& marks,
                                const std::vector<TraceEmb>& embs) const {
    std::vector<std::uint32_t> sigs;
    sigs.reserve(embs.size());
    for (const auto& e : embs) {
      auto [acc, rej] = decided_images(marks, e);
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

  // pointless reveals stay legal only under identifications where no
  // unrevealed element escapes the accepted set; each move carries forward
  // exactly the identifications that keep it legal
  std::vector<TraceMove> conservative_filter(std::vector<TraceMove> moves,
                                             const std::vector<Decision>& marks)
      const {
    int pending = static_cast<int>(marks.size());
    ElementSet acc = accepted_of(marks);
    std::vector<TraceMove> kept;
    for (auto& m : moves) {
      if (pointless(m.family, pending, acc)) {
        std::vector<TraceEmb> alive;
        for (const auto& e : m.embeddings)
          if (only_pointless_remain(marks, e)) alive.push_back(e);
        if (alive.empty()) continue;
        m.embeddings = std::move(alive);
      }
      kept.push_back(std::move(m));
    }
    if (kept.empty())
      fail(ErrorKind::internal, "conservative filter removed every move");
    return kept;
  }

  GameScore child_value(const TraceMove& m, std::vector<Decision>& marks,
                        Decision d) {
    marks.push_back(d);
    std::vector<TraceEmb> embs = m.embeddings;
    dedup_trace_embeddings(marks, embs);
    GameScore v = search(m.family, marks, embs);
    marks.pop_back();
    return v;
  }

  // the set problem is a maximization, so algorithm preference is the
  // independent-set sense
  GameScore pending_value(const TraceMove& m, std::vector<Decision>& marks) {
    int pending = static_cast<int>(marks.size());
    ElementSet acc = accepted_of(marks);
    if (greedy) {
      Decision d = accept_completes(m.family, pending, acc)
                       ? Decision::rejected
                       : Decision::accepted;
      return child_value(m, marks, d);
    }
    GameScore vr = child_value(m, marks, Decision::rejected);
    if (accept_completes(m.family, pending, acc)) return vr;
    GameScore va = child_value(m, marks, Decision::accepted);
    return better_for_algorithm(va, vr, Problem::independent_set) ? va : vr;
  }

  GameScore search(const std::vector<ElementSet>& family,
                   std::vector<Decision>& marks,
                   const std::vector<TraceEmb>& embs) {
    ++stats.nodes;
    if (stats.nodes > budget) fail(ErrorKind::budget, "node budget exceeded");
    if (static_cast<int>(marks.size()) == sys.size())
      return leaf_score(family, marks);

    TraceCanon canon = canonical_trace(make_colored_trace(family, marks));
    std::string mkey = canon.key;
    if (opt.conservative) {
      mkey.push_back('\0');
      mkey += alive_fingerprint(marks, embs);
    }
    auto it = memo.find(mkey);
    if (it != memo.end()) {
      ++stats.memo_hits;
      return it->second;
    }

    std::vector<TraceMove> moves =
        expand_trace_moves(sys, marks, family, embs);
    if (moves.empty())
      fail(ErrorKind::internal, "no adversary move before the end of the game");
    if (opt.conservative) moves = conservative_filter(std::move(moves), marks);

    std::optional<GameScore> worst;
    for (const auto& m : moves) {
      GameScore v = pending_value(m, marks);
      if (!worst || better_for_algorithm(*worst, v, Problem::independent_set))
        worst = v;
    }
    memo.emplace(mkey, *worst);
    return *worst;
  }

  std::vector<int> descend_ordering() {
    std::vector<ElementSet> family;
    std::vector<Decision> marks;
    std::vector<TraceEmb> embs = {TraceEmb{}};
    while (static_cast<int>(marks.size()) < sys.size()) {
      std::vector<TraceMove> moves =
          expand_trace_moves(sys, marks, family, embs);
      if (opt.conservative) moves = conservative_filter(std::move(moves), marks);
      std::vector<GameScore> vals;
      vals.reserve(moves.size());
      std::optional<GameScore> worst;
      for (const auto& m : moves) {
        GameScore v = pending_value(m, marks);
        vals.push_back(v);
        if (!worst || better_for_algorithm(*worst, v, Problem::independent_set))
          worst = v;
      }
      std::size_t pick = 0;
      while (!(vals[pick] == *worst)) ++pick;
      int pending = static_cast<int>(marks.size());
      ElementSet acc = accepted_of(marks);
      Decision d = accept_completes(moves[pick].family, pending, acc)
                       ? Decision::rejected
                       : Decision::accepted;
      marks.push_back(d);
      std::vector<TraceEmb> next = moves[pick].embeddings;
      dedup_trace_embeddings(marks, next);
      embs = std::move(next);
      family = std::move(moves[pick].family);
    }
    const TraceEmb* best = &embs.front();
    for (const TraceEmb& r : embs)
      if (std::lexicographical_compare(r.begin(), r.begin() + sys.size(),
                                       best->begin(),
                                       best->begin() + sys.size()))
        best = &r;
    std::vector<int> ordering(sys.size());
    for (int i = 0; i < sys.size(); ++i) ordering[i] = (*best)[i];
    return ordering;
  }
};

GameResult run_trace_game(const SetSystem& s, bool greedy,
                          const MosOptions& opt) {
  if (s.size() > kMaxElements)
    fail(ErrorKind::limit, "set system exceeds the element limit");
  auto start = std::chrono::steady_clock::now();
  TraceSolver solver(s, greedy, opt);
  std::vector<ElementSet> family;
  std::vector<Decision> marks;
  std::vector<TraceEmb> embs = {TraceEmb{}};
  GameResult out;
  out.value = solver.search(family, marks, embs);
  if (greedy) out.ordering = solver.descend_ordering();
  out.stats = solver.stats;
  out.stats.ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return out;
}

}  // namespace

GameResult mso_value(const SetSystem& s, const MosOptions& opt) {
  return run_trace_game(s, false, opt);
}

GameResult gmos_worst(const SetSystem& s, const MosOptions& opt) {
  return run_trace_game(s, true, opt);
}

}  // namespace varg
