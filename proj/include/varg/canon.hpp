#pragma once

#include <array>
#include <string>
#include <vector>

#include "varg/graph.hpp"
#include "varg/revealed.hpp"
#include "varg/types.hpp"

namespace varg {

// Byte string identifying a colored graph up to color-preserving isomorphism.
// Stable across runs and platforms; the hex form is used in caches and witness
// tables.
class CanonicalKey {
 public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::string bytes) : bytes_(std::move(bytes)) {}
  const std::string& bytes() const { return bytes_; }
  std::string hex() const;
  static CanonicalKey from_hex(const std::string& hex);

  bool operator==(const CanonicalKey& other) const = default;
  bool operator<(const CanonicalKey& other) const {
    return bytes_ < other.bytes_;
  }

 private:
  std::string bytes_;
};

// Graph plus one small color per vertex. Game states use color 0 = accepted,
// 1 = rejected, 2 = pending.
struct ColoredGraph {
  int n = 0;
  std::array<VertexSet, kMaxVertices> adj{};
  std::array<std::uint8_t, kMaxVertices> color{};
};

inline constexpr std::uint8_t kColorAccepted = 0;
inline constexpr std::uint8_t kColorRejected = 1;
inline constexpr std::uint8_t kColorPending = 2;

ColoredGraph to_colored(const MarkedGraph& mg);
// colors from marks; if with_pending, one extra pending arrival with edges
// `pending_nbrs` is appended
ColoredGraph to_colored(const RevealedState& state, bool with_pending = false,
                        VertexSet pending_nbrs = 0);

struct CanonResult {
  CanonicalKey key;
  // labeling[v] = canonical position of vertex v
  std::array<std::uint8_t, kMaxVertices> labeling{};
};

// Deterministic canonical form. Below 6 vertices the minimum is taken over all
// color-preserving labelings directly; from 6 up, over the labelings generated
// by partition refinement with backtracking.
CanonResult canonical_form(const ColoredGraph& cg);
CanonResult canonical_form_brute(const ColoredGraph& cg);    // any n, exhaustive
CanonResult canonical_form_refined(const ColoredGraph& cg);  // any n

CanonicalKey canonical_key(const MarkedGraph& mg);

// Color-preserving isomorphism decided by backtracking search, independent of
// the canonical-form machinery.
bool isomorphic(const MarkedGraph& a, const MarkedGraph& b);
bool colored_isomorphic(const ColoredGraph& a, const ColoredGraph& b);

// ---- adversary move generation ----

struct Move {
  VertexSet neighborhood = 0;  // arrival-index mask for the new vertex
  int witness_vertex = -1;     // host vertex realizing the move
};

// One induced embedding of the revealed state into the host per signature
// class, where the signature is the host image together with the colors it
// receives. Keeping one representative per class plus isomorphism transport in
// expand_moves keeps the set complete without factorial blowup.
struct EmbeddingSet {
  std::vector<std::array<std::uint8_t, kMaxVertices>> reps;
};

EmbeddingSet seed_embeddings();
void dedup_embeddings(const ColoredGraph& state, EmbeddingSet& embs);
// Reconstructs the embedding set of a decided revealed state by folding its
// arrivals through expand_moves. Throws if the state does not embed into host.
EmbeddingSet build_embeddings(const Graph& host, const RevealedState& state);

struct ExpandedMove {
  VertexSet neighborhood = 0;
  int witness_vertex = -1;
  CanonicalKey key;  // successor with the new vertex pending
  std::array<std::uint8_t, kMaxVertices> labeling{};  // successor labeling
  EmbeddingSet embeddings;  // successor embeddings, successor coordinates
};

// All adversary moves from a decided state, one per isomorphism class of the
// pending successor, sorted by successor key. `state` must carry decided
// colors only; `embs` must belong to it.
std::vector<ExpandedMove> expand_moves(const Graph& host,
                                       const ColoredGraph& state,
                                       const EmbeddingSet& embs);

std::vector<Move> adversary_moves(const Graph& host,
                                  const RevealedState& revealed);

}  // namespace varg
