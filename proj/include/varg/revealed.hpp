#pragma once

#include <vector>

#include "varg/graph.hpp"
#include "varg/types.hpp"

namespace varg {

struct Arrival {
  VertexSet nbrs = 0;  // edges back to earlier arrivals, bit i = arrival i
  Decision mark = Decision::rejected;

  bool operator==(const Arrival& other) const = default;
};

// Prefix of a presentation in the vertex-arrival model: arrival i carries the
// edges to arrivals 0..i-1 plus the decision made on it. Arrival indices are
// the only vertex identities an algorithm ever sees.
class RevealedState {
 public:
  int size() const { return static_cast<int>(arrivals_.size()); }
  const Arrival& operator[](int i) const { return arrivals_[i]; }

  void push(VertexSet nbrs, Decision mark);
  void pop() { arrivals_.pop_back(); }

  VertexSet accepted_mask() const;
  VertexSet rejected_mask() const;
  // full adjacency of arrival i within the revealed prefix (both directions)
  VertexSet neighbors(int i) const;
  int degree(int i) const;

  Graph to_graph() const;

  bool operator==(const RevealedState& other) const = default;

 private:
  std::vector<Arrival> arrivals_;
};

struct MarkedGraph {
  Graph g;
  std::vector<Decision> marks;
};

MarkedGraph to_marked_graph(const RevealedState& state);

}  // namespace varg
