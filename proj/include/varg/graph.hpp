#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "varg/types.hpp"

namespace varg {

// Undirected simple graph on vertices 0..n-1, adjacency kept as one bitmask per
// vertex. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);  // no edges
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int size() const { return n_; }
  int edge_count() const;
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const;
  bool has_edge(int u, int v) const;
  VertexSet vertex_mask() const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  std::string label(int v) const;  // falls back to the index as text

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
  }

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

enum class GraphFormat { graph6, edge_list };

Graph load_graph(const std::string& text, GraphFormat format);
Graph load_graph(std::istream& in, GraphFormat format);
std::string encode_graph6(const Graph& g);

enum class Family {
  empty,
  path,
  complete,
  star,
  complete_bipartite,
  agi,
  forest_gadget,
};

struct FamilySpec {
  Family family;
  int n = 0;
  int k = 0;  // only forest_gadget uses the second parameter
};

Graph make_family(const FamilySpec& spec);
std::optional<Family> family_from_name(const std::string& name);
std::string family_name(Family f);

Graph add_isolated(const Graph& g, int k);

struct IsolatedSplit {
  int k = 0;     // number of isolated vertices removed
  Graph core;    // induced subgraph on the non-isolated vertices
  std::vector<int> core_vertices;  // core index -> original vertex
};
IsolatedSplit split_isolated(const Graph& g);

struct LineGraphResult {
  Graph lg;
  // line-graph vertex -> endpoints of the corresponding edge of g
  std::vector<std::pair<int, int>> edge_map;
};
LineGraphResult line_graph(const Graph& g);

}  // namespace varg
