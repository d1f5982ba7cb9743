#include "varg/canon.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

namespace varg {

// ---- RevealedState ----

void RevealedState::push(VertexSet nbrs, Decision mark) {
  if (size() >= kMaxVertices)
    fail(ErrorKind::limit, "revealed state is full");
  VertexSet prior = size() == 0 ? 0 : (VertexSet{1} << size()) - 1;
  if (nbrs & ~prior)
    fail(ErrorKind::argument, "arrival neighborhood references later arrivals");
  arrivals_.push_back({nbrs, mark});
}

VertexSet RevealedState::accepted_mask() const {
  VertexSet m = 0;
  for (int i = 0; i < size(); ++i)
    if (arrivals_[i].mark == Decision::accepted) m |= vbit(i);
  return m;
}

VertexSet RevealedState::rejected_mask() const {
  VertexSet m = 0;
  for (int i = 0; i < size(); ++i)
    if (arrivals_[i].mark == Decision::rejected) m |= vbit(i);
  return m;
}

VertexSet RevealedState::neighbors(int i) const {
  VertexSet m = arrivals_[i].nbrs;
  for (int j = i + 1; j < size(); ++j)
    if (arrivals_[j].nbrs & vbit(i)) m |= vbit(j);
  return m;
}

int RevealedState::degree(int i) const { return std::popcount(neighbors(i)); }

Graph RevealedState::to_graph() const {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < i; ++j)
      if (arrivals_[i].nbrs & vbit(j)) edges.emplace_back(j, i);
  return Graph::from_edges(size(), edges);
}

MarkedGraph to_marked_graph(const RevealedState& state) {
  MarkedGraph mg;
  mg.g = state.to_graph();
  mg.marks.reserve(state.size());
  for (int i = 0; i < state.size(); ++i) mg.marks.push_back(state[i].mark);
  return mg;
}

// ---- colored graphs ----

ColoredGraph to_colored(const MarkedGraph& mg) {
  if (mg.g.size() > kMaxVertices)
    fail(ErrorKind::limit, "marked graph too large");
  if (static_cast<int>(mg.marks.size()) != mg.g.size())
    fail(ErrorKind::argument, "mark count must match vertex count");
  ColoredGraph cg;
  cg.n = mg.g.size();
  for (int v = 0; v < cg.n; ++v) {
    cg.adj[v] = mg.g.neighbors(v);
    cg.color[v] =
        mg.marks[v] == Decision::accepted ? kColorAccepted : kColorRejected;
  }
  return cg;
}

ColoredGraph to_colored(const RevealedState& state, bool with_pending,
                        VertexSet pending_nbrs) {
  ColoredGraph cg;
  cg.n = state.size() + (with_pending ? 1 : 0);
  if (cg.n > kMaxVertices) fail(ErrorKind::limit, "revealed state too large");
  for (int i = 0; i < state.size(); ++i) {
    cg.adj[i] = state.neighbors(i);
    cg.color[i] =
        state[i].mark == Decision::accepted ? kColorAccepted : kColorRejected;
  }
  if (with_pending) {
    int p = state.size();
    cg.adj[p] = pending_nbrs;
    cg.color[p] = kColorPending;
    for (int i = 0; i < p; ++i)
      if (pending_nbrs & vbit(i)) cg.adj[i] |= vbit(p);
  }
  return cg;
}

// ---- canonical form ----

std::string CanonicalKey::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (unsigned char c : bytes_) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

CanonicalKey CanonicalKey::from_hex(const std::string& hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    fail(ErrorKind::parse, "invalid hex digit in key");
  };
  if (hex.size() % 2 != 0) fail(ErrorKind::parse, "odd-length hex key");
  std::string bytes;
  bytes.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2)
    bytes.push_back(static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  return CanonicalKey(bytes);
}

namespace {

// order[pos] = vertex occupying canonical position pos
std::string serialize_order(const ColoredGraph& cg, const int* order) {
  std::string s;
  s.push_back(static_cast<char>(cg.n));
  for (int pos = 0; pos < cg.n; ++pos)
    s.push_back(static_cast<char>(cg.color[order[pos]]));
  int bits = cg.n * (cg.n - 1) / 2;
  std::string body((bits + 7) / 8, 0);
  int pos = 0;
  for (int i = 0; i < cg.n; ++i) {
    for (int j = i + 1; j < cg.n; ++j, ++pos) {
      if (cg.adj[order[i]] & vbit(order[j]))
        body[pos / 8] |= char(1 << (7 - pos % 8));
    }
  }
  return s + body;
}

CanonResult result_from_order(const ColoredGraph& cg,
                              const std::vector<int>& order,
                              std::string bytes) {
  CanonResult res;
  res.key = CanonicalKey(std::move(bytes));
  for (int pos = 0; pos < cg.n; ++pos)
    res.labeling[order[pos]] = static_cast<std::uint8_t>(pos);
  return res;
}

std::vector<std::vector<int>> color_blocks(const ColoredGraph& cg) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> verts(cg.n);
  for (int v = 0; v < cg.n; ++v) verts[v] = v;
  std::stable_sort(verts.begin(), verts.end(), [&](int a, int b) {
    return cg.color[a] < cg.color[b];
  });
  for (int v : verts) {
    if (blocks.empty() || cg.color[blocks.back().front()] != cg.color[v])
      blocks.emplace_back();
    blocks.back().push_back(v);
  }
  return blocks;
}

// swapping u and v (same color) is an automorphism
bool interchangeable(const ColoredGraph& cg, int u, int v) {
  return (cg.adj[u] & ~vbit(v)) == (cg.adj[v] & ~vbit(u));
}

}  // namespace

CanonResult canonical_form_brute(const ColoredGraph& cg) {
  if (cg.n == 0) {
    CanonResult res;
    res.key = CanonicalKey(std::string(1, 0));
    return res;
  }
  auto blocks = color_blocks(cg);
  std::vector<int> order;
  std::string best;
  std::vector<int> best_order;
  auto consider = [&]() {
    order.clear();
    for (const auto& b : blocks) order.insert(order.end(), b.begin(), b.end());
    std::string ser = serialize_order(cg, order.data());
    if (best.empty() || ser < best) {
      best = std::move(ser);
      best_order = order;
    }
  };
  consider();
  auto advance = [&]() {
    for (auto& b : blocks)
      if (std::next_permutation(b.begin(), b.end())) return true;
    return false;
  };
  while (advance()) consider();
  return result_from_order(cg, best_order, std::move(best));
}

namespace {

using Cells = std::vector<std::vector<int>>;

void refine_cells(const ColoredGraph& cg, Cells& cells) {
  for (;;) {
    std::vector<VertexSet> masks(cells.size(), 0);
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (int v : cells[c]) masks[c] |= vbit(v);
    bool split = false;
    for (std::size_t c = 0; c < cells.size() && !split; ++c) {
      if (cells[c].size() <= 1) continue;
      std::vector<std::pair<std::vector<int>, int>> sigs;
      sigs.reserve(cells[c].size());
      for (int v : cells[c]) {
        std::vector<int> sig;
        sig.reserve(masks.size());
        for (VertexSet m : masks) sig.push_back(std::popcount(cg.adj[v] & m));
        sigs.emplace_back(std::move(sig), v);
      }
      bool uniform = true;
      for (std::size_t i = 1; i < sigs.size(); ++i)
        if (sigs[i].first != sigs[0].first) uniform = false;
      if (uniform) continue;
      std::sort(sigs.begin(), sigs.end());
      // group consecutive equal signatures
      Cells groups;
      for (std::size_t i = 0; i < sigs.size(); ++i) {
        if (i == 0 || sigs[i].first != sigs[i - 1].first) groups.emplace_back();
        groups.back().push_back(sigs[i].second);
      }
      Cells next;
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

struct RefineSearch {
  const ColoredGraph& cg;
  std::string best;
  std::vector<int> best_order;

  void run(Cells cells) {
    refine_cells(cg, cells);
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].size() > 1) {
        target = c;
        break;
      }
    }
    if (target == cells.size()) {
      std::vector<int> order;
      for (const auto& cell : cells) order.push_back(cell.front());
      std::string ser = serialize_order(cg, order.data());
      if (best.empty() || ser < best) {
        best = std::move(ser);
        best_order = std::move(order);
      }
      return;
    }
    // branch on one representative per interchangeability class
    std::vector<int> reps;
    for (int v : cells[target]) {
      bool covered = false;
      for (int r : reps)
        if (interchangeable(cg, r, v)) covered = true;
      if (!covered) reps.push_back(v);
    }
    for (int v : reps) {
      Cells next;
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

}  // namespace

CanonResult canonical_form_refined(const ColoredGraph& cg) {
  if (cg.n == 0) {
    CanonResult res;
    res.key = CanonicalKey(std::string(1, 0));
    return res;
  }
  RefineSearch search{cg, {}, {}};
  Cells cells = color_blocks(cg);
  search.run(std::move(cells));
  return result_from_order(cg, search.best_order, std::move(search.best));
}

CanonResult canonical_form(const ColoredGraph& cg) {
  if (cg.n > kMaxVertices) fail(ErrorKind::limit, "graph too large");
  return cg.n < 6 ? canonical_form_brute(cg) : canonical_form_refined(cg);
}

CanonicalKey canonical_key(const MarkedGraph& mg) {
  return canonical_form(to_colored(mg)).key;
}

// ---- isomorphism (independent backtracking search) ----

namespace {

bool iso_extend(const ColoredGraph& a, const ColoredGraph& b,
                std::array<int, kMaxVertices>& map, VertexSet used, int depth) {
  if (depth == a.n) return true;
  for (int w = 0; w < b.n; ++w) {
    if (used & vbit(w)) continue;
    if (a.color[depth] != b.color[w]) continue;
    if (std::popcount(a.adj[depth]) != std::popcount(b.adj[w])) continue;
    bool ok = true;
    for (int j = 0; j < depth && ok; ++j) {
      bool ea = (a.adj[depth] & vbit(j)) != 0;
      bool eb = (b.adj[w] & vbit(map[j])) != 0;
      if (ea != eb) ok = false;
    }
    if (!ok) continue;
    map[depth] = w;
    if (iso_extend(a, b, map, used | vbit(w), depth + 1)) return true;
  }
  return false;
}

}  // namespace

bool colored_isomorphic(const ColoredGraph& a, const ColoredGraph& b) {
  if (a.n != b.n) return false;
  std::vector<std::pair<int, int>> pa, pb;
  for (int v = 0; v < a.n; ++v) {
    pa.emplace_back(a.color[v], std::popcount(a.adj[v]));
    pb.emplace_back(b.color[v], std::popcount(b.adj[v]));
  }
  std::sort(pa.begin(), pa.end());
  std::sort(pb.begin(), pb.end());
  if (pa != pb) return false;
  std::array<int, kMaxVertices> map{};
  return iso_extend(a, b, map, 0, 0);
}

bool isomorphic(const MarkedGraph& a, const MarkedGraph& b) {
  return colored_isomorphic(to_colored(a), to_colored(b));
}

// ---- embeddings and move expansion ----

namespace {

std::uint64_t embedding_signature(const ColoredGraph& state,
                                  const std::array<std::uint8_t, kMaxVertices>& emb) {
  std::uint64_t masks[3] = {0, 0, 0};
  for (int i = 0; i < state.n; ++i) masks[state.color[i]] |= vbit(emb[i]);
  return masks[0] | (masks[1] << 16) | (masks[2] << 32);
}

VertexSet embedding_used(const std::array<std::uint8_t, kMaxVertices>& emb,
                         int n) {
  VertexSet used = 0;
  for (int i = 0; i < n; ++i) used |= vbit(emb[i]);
  return used;
}

}  // namespace

EmbeddingSet seed_embeddings() {
  EmbeddingSet out;
  out.reps.emplace_back();
  return out;
}

void dedup_embeddings(const ColoredGraph& state, EmbeddingSet& embs) {
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::array<std::uint8_t, kMaxVertices>> kept;
  kept.reserve(embs.reps.size());
  for (const auto& e : embs.reps)
    if (seen.insert(embedding_signature(state, e)).second) kept.push_back(e);
  embs.reps = std::move(kept);
}

std::vector<ExpandedMove> expand_moves(const Graph& host,
                                       const ColoredGraph& state,
                                       const EmbeddingSet& embs) {
  const int k = state.n;
  if (k >= host.size() || k >= kMaxVertices) return {};
  std::vector<ExpandedMove> moves;
  std::unordered_map<std::string, std::size_t> class_index;
  std::unordered_map<VertexSet, CanonResult> canon_by_n;
  std::vector<std::unordered_set<std::uint64_t>> class_sigs;

  // pending successor template shared by all candidate neighborhoods
  ColoredGraph succ = state;
  succ.n = k + 1;
  succ.color[k] = kColorPending;

  for (const auto& e : embs.reps) {
    VertexSet used = embedding_used(e, k);
    for (int w = 0; w < host.size(); ++w) {
      if (used & vbit(w)) continue;
      VertexSet nbhd = 0;
      for (int i = 0; i < k; ++i)
        if (host.neighbors(w) & vbit(e[i])) nbhd |= vbit(i);

      auto it = canon_by_n.find(nbhd);
      if (it == canon_by_n.end()) {
        succ.adj[k] = nbhd;
        for (int i = 0; i < k; ++i) {
          succ.adj[i] = state.adj[i];
          if (nbhd & vbit(i)) succ.adj[i] |= vbit(k);
        }
        it = canon_by_n.emplace(nbhd, canonical_form(succ)).first;
      }
      const CanonResult& here = it->second;

      auto [cit, fresh] =
          class_index.emplace(here.key.bytes(), moves.size());
      if (fresh) {
        ExpandedMove m;
        m.neighborhood = nbhd;
        m.witness_vertex = w;
        m.key = here.key;
        m.labeling = here.labeling;
        moves.push_back(std::move(m));
        class_sigs.emplace_back();
      }
      ExpandedMove& cls = moves[cit->second];

      // transport e+[k -> w] from this neighborhood's coordinates into the
      // class representative's coordinates
      std::array<std::uint8_t, kMaxVertices> inv_here{};
      for (int i = 0; i <= k; ++i) inv_here[here.labeling[i]] = static_cast<std::uint8_t>(i);
      std::array<std::uint8_t, kMaxVertices> ext{};
      for (int i = 0; i < k; ++i) ext[i] = e[i];
      ext[k] = static_cast<std::uint8_t>(w);
      std::array<std::uint8_t, kMaxVertices> f{};
      for (int x = 0; x <= k; ++x) f[x] = ext[inv_here[cls.labeling[x]]];

      // signature depends only on the colored host image
      std::uint64_t masks[3] = {0, 0, 0};
      for (int i = 0; i < k; ++i) masks[state.color[i]] |= vbit(f[i]);
      masks[kColorPending] |= vbit(f[k]);
      std::uint64_t sig = masks[0] | (masks[1] << 16) | (masks[2] << 32);
      if (class_sigs[cit->second].insert(sig).second)
        cls.embeddings.reps.push_back(f);
    }
  }

  std::sort(moves.begin(), moves.end(),
            [](const ExpandedMove& a, const ExpandedMove& b) {
              return a.key.bytes() < b.key.bytes();
            });
  return moves;
}

EmbeddingSet build_embeddings(const Graph& host, const RevealedState& state) {
  EmbeddingSet embs = seed_embeddings();
  RevealedState prefix;
  for (int i = 0; i < state.size(); ++i) {
    ColoredGraph cg = to_colored(prefix);
    std::vector<ExpandedMove> moves = expand_moves(host, cg, embs);
    CanonResult target =
        canonical_form(to_colored(prefix, true, state[i].nbrs));
    const ExpandedMove* match = nullptr;
    for (const auto& m : moves)
      if (m.key == target.key) match = &m;
    if (match == nullptr)
      fail(ErrorKind::argument, "revealed state does not embed into host");

    // align the class embeddings (representative coordinates) with the
    // concrete arrival sequence
    std::array<std::uint8_t, kMaxVertices> inv_rep{};
    for (int x = 0; x <= i; ++x) inv_rep[match->labeling[x]] = static_cast<std::uint8_t>(x);
    EmbeddingSet aligned;
    aligned.reps.reserve(match->embeddings.reps.size());
    for (const auto& f : match->embeddings.reps) {
      std::array<std::uint8_t, kMaxVertices> g{};
      for (int x = 0; x <= i; ++x) g[x] = f[inv_rep[target.labeling[x]]];
      aligned.reps.push_back(g);
    }

    prefix.push(state[i].nbrs, state[i].mark);
    dedup_embeddings(to_colored(prefix), aligned);
    embs = std::move(aligned);
  }
  return embs;
}

std::vector<Move> adversary_moves(const Graph& host,
                                  const RevealedState& revealed) {
  EmbeddingSet embs = build_embeddings(host, revealed);
  std::vector<ExpandedMove> expanded =
      expand_moves(host, to_colored(revealed), embs);
  std::vector<Move> out;
  out.reserve(expanded.size());
  for (const auto& m : expanded)
    out.push_back({m.neighborhood, m.witness_vertex});
  return out;
}

}  // namespace varg
