#include "varg/graph.hpp"

#include <atomic>
#include <bit>
#include <istream>
#include <sstream>

namespace varg {

namespace {
std::atomic<int> g_vertex_limit{kMaxVertices};

void check_vertex_count(int n) {
  if (n < 0) fail(ErrorKind::argument, "vertex count must be non-negative");
  if (n > vertex_limit()) {
    fail(ErrorKind::limit, "graph has " + std::to_string(n) +
                               " vertices, limit is " +
                               std::to_string(vertex_limit()));
  }
}
}  // namespace

int vertex_limit() { return g_vertex_limit.load(); }

void set_vertex_limit(int n) {
  if (n < 1 || n > kMaxVertices) {
    fail(ErrorKind::argument, "vertex limit must be in 1.." +
                                  std::to_string(kMaxVertices));
  }
  g_vertex_limit.store(n);
}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

Graph::Graph(int n) : n_(n) {
  check_vertex_count(n);
  adj_.assign(n_, 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(ErrorKind::parse, "edge endpoint out of range");
    if (u == v) fail(ErrorKind::parse, "self-loops are not allowed");
    if (g.has_edge(u, v)) fail(ErrorKind::parse, "duplicate edge");
    g.adj_[u] |= vbit(v);
    g.adj_[v] |= vbit(u);
  }
  return g;
}

int Graph::edge_count() const {
  int total = 0;
  for (VertexSet row : adj_) total += std::popcount(row);
  return total / 2;
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

bool Graph::has_edge(int u, int v) const { return (adj_[u] & vbit(v)) != 0; }

VertexSet Graph::vertex_mask() const {
  return n_ == 0 ? 0 : (VertexSet{1} << n_) - 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (static_cast<int>(labels.size()) != n_)
    fail(ErrorKind::argument, "label count must match vertex count");
  labels_ = std::move(labels);
}

std::string Graph::label(int v) const {
  if (v >= 0 && v < static_cast<int>(labels_.size()) && !labels_[v].empty())
    return labels_[v];
  return std::to_string(v);
}

namespace {

// graph6: one byte n+63 for n <= 62, then the upper triangle column by column
// ((0,1),(0,2),(1,2),(0,3),...) packed big-endian into 6-bit groups, each +63.
Graph decode_graph6(const std::string& text) {
  std::string s = text;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' '))
    s.pop_back();
  if (s.empty()) fail(ErrorKind::parse, "empty graph6 string");
  for (char c : s)
    if (c < 63 || c > 126)
      fail(ErrorKind::parse, "graph6 byte out of printable range");
  int n = s[0] - 63;
  if (n == 63) fail(ErrorKind::parse, "multi-byte graph6 sizes not supported");
  check_vertex_count(n);
  int bits = n * (n - 1) / 2;
  int need = (bits + 5) / 6;
  if (static_cast<int>(s.size()) - 1 != need)
    fail(ErrorKind::parse, "graph6 string has wrong length");
  std::vector<std::pair<int, int>> edges;
  int pos = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++pos) {
      int value = s[1 + pos / 6] - 63;
      if ((value >> (5 - pos % 6)) & 1) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

int parse_int_token(std::istream& in, const char* what) {
  long long value;
  if (!(in >> value))
    fail(ErrorKind::parse, std::string("expected integer for ") + what);
  if (value < 0 || value > 1000000)
    fail(ErrorKind::parse, std::string(what) + " out of range");
  return static_cast<int>(value);
}

Graph decode_edge_list(const std::string& text) {
  std::istringstream in(text);
  int n = parse_int_token(in, "vertex count");
  int m = parse_int_token(in, "edge count");
  check_vertex_count(n);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) {
    int u = parse_int_token(in, "edge endpoint");
    int v = parse_int_token(in, "edge endpoint");
    edges.emplace_back(u, v);
  }
  std::string rest;
  if (in >> rest) fail(ErrorKind::parse, "trailing tokens after edge list");
  return Graph::from_edges(n, edges);
}

}  // namespace

Graph load_graph(const std::string& text, GraphFormat format) {
  switch (format) {
    case GraphFormat::graph6:
      return decode_graph6(text);
    case GraphFormat::edge_list:
      return decode_edge_list(text);
  }
  fail(ErrorKind::internal, "unknown graph format");
}

Graph load_graph(std::istream& in, GraphFormat format) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_graph(buf.str(), format);
}

std::string encode_graph6(const Graph& g) {
  int n = g.size();
  if (n > 62)
    fail(ErrorKind::limit, "graph6 encoding limited to 62 vertices");
  std::string out(1, static_cast<char>(n + 63));
  int bits = n * (n - 1) / 2;
  int groups = (bits + 5) / 6;
  std::string body(groups, 0);
  int pos = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++pos) {
      if (g.has_edge(u, v)) body[pos / 6] |= char(1 << (5 - pos % 6));
    }
  }
  for (char& c : body) c = static_cast<char>(c + 63);
  return out + body;
}

Graph make_family(const FamilySpec& spec) {
  const int n = spec.n;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;
  switch (spec.family) {
    case Family::empty: {
      return Graph(n);
    }
    case Family::path: {
      if (n < 0) fail(ErrorKind::argument, "path needs n >= 0");
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      return Graph::from_edges(n, edges);
    }
    case Family::complete: {
      if (n < 0) fail(ErrorKind::argument, "complete needs n >= 0");
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      return Graph::from_edges(n, edges);
    }
    case Family::star: {
      // center is vertex 0, leaves 1..n
      if (n < 1) fail(ErrorKind::argument, "star needs n >= 1 leaves");
      for (int leaf = 1; leaf <= n; ++leaf) edges.emplace_back(0, leaf);
      Graph g = Graph::from_edges(n + 1, edges);
      labels.push_back("c");
      for (int leaf = 1; leaf <= n; ++leaf)
        labels.push_back("l" + std::to_string(leaf));
      g.set_labels(std::move(labels));
      return g;
    }
    case Family::complete_bipartite: {
      if (n < 1) fail(ErrorKind::argument, "complete_bipartite needs n >= 1");
      for (int u = 0; u < n; ++u)
        for (int v = n; v < 2 * n; ++v) edges.emplace_back(u, v);
      return Graph::from_edges(2 * n, edges);
    }
    case Family::agi: {
      // x_i -- y_i, y_i -- z, z -- u_i; vertices x: 0..n-1, y: n..2n-1,
      // z: 2n, u: 2n+1..3n
      if (n < 2) fail(ErrorKind::argument, "agi needs n >= 2");
      int z = 2 * n;
      for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, n + i);
        edges.emplace_back(n + i, z);
        edges.emplace_back(z, z + 1 + i);
      }
      Graph g = Graph::from_edges(3 * n + 1, edges);
      for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
      for (int i = 1; i <= n; ++i) labels.push_back("y" + std::to_string(i));
      labels.push_back("z");
      for (int i = 1; i <= n; ++i) labels.push_back("u" + std::to_string(i));
      g.set_labels(std::move(labels));
      return g;
    }
    case Family::forest_gadget: {
      // x=0, y=1, v_i=2..n+1, then k isolated vertices
      if (n < 1 || spec.k < 0)
        fail(ErrorKind::argument, "forest_gadget needs n >= 1, k >= 0");
      edges.emplace_back(0, 1);
      for (int i = 2; i <= n + 1; ++i) {
        edges.emplace_back(0, i);
        edges.emplace_back(1, i);
      }
      Graph g = Graph::from_edges(n + 2 + spec.k, edges);
      labels.push_back("x");
      labels.push_back("y");
      for (int i = 1; i <= n; ++i) labels.push_back("v" + std::to_string(i));
      for (int i = 1; i <= spec.k; ++i) labels.push_back("w" + std::to_string(i));
      g.set_labels(std::move(labels));
      return g;
    }
  }
  fail(ErrorKind::internal, "unknown family");
}

std::optional<Family> family_from_name(const std::string& name) {
  if (name == "empty") return Family::empty;
  if (name == "path") return Family::path;
  if (name == "complete") return Family::complete;
  if (name == "star") return Family::star;
  if (name == "complete_bipartite" || name == "kn_n")
    return Family::complete_bipartite;
  if (name == "agi") return Family::agi;
  if (name == "forest_gadget") return Family::forest_gadget;
  return std::nullopt;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::empty: return "empty";
    case Family::path: return "path";
    case Family::complete: return "complete";
    case Family::star: return "star";
    case Family::complete_bipartite: return "complete_bipartite";
    case Family::agi: return "agi";
    case Family::forest_gadget: return "forest_gadget";
  }
  return "?";
}

Graph add_isolated(const Graph& g, int k) {
  if (k < 0) fail(ErrorKind::argument, "cannot add a negative vertex count");
  std::vector<std::pair<int, int>> edges = g.edges();
  return Graph::from_edges(g.size() + k, edges);
}

IsolatedSplit split_isolated(const Graph& g) {
  IsolatedSplit out;
  std::vector<int> remap(g.size(), -1);
  for (int v = 0; v < g.size(); ++v) {
    if (g.degree(v) == 0) {
      ++out.k;
    } else {
      remap[v] = static_cast<int>(out.core_vertices.size());
      out.core_vertices.push_back(v);
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(remap[u], remap[v]);
  out.core = Graph::from_edges(static_cast<int>(out.core_vertices.size()), edges);
  return out;
}

LineGraphResult line_graph(const Graph& g) {
  LineGraphResult out;
  out.edge_map = g.edges();
  int m = static_cast<int>(out.edge_map.size());
  check_vertex_count(m);
  std::vector<std::pair<int, int>> ledges;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      auto [u1, v1] = out.edge_map[a];
      auto [u2, v2] = out.edge_map[b];
      if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2)
        ledges.emplace_back(a, b);
    }
  }
  out.lg = Graph::from_edges(m, ledges);
  return out;
}

}  // namespace varg
