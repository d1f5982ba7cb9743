#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "varg/graph.hpp"
#include "varg/types.hpp"

using namespace varg;
using namespace varg::testing;

TEST_CASE("graph6 decoding of fixed strings") {
  Graph k1 = load_graph("@", GraphFormat::graph6);
  CHECK(k1.size() == 1);
  CHECK(k1.edge_count() == 0);

  Graph p3 = load_graph("Bg", GraphFormat::graph6);
  CHECK(p3.size() == 3);
  CHECK(p3.edge_count() == 2);
  CHECK(p3.has_edge(0, 1));
  CHECK(p3.has_edge(1, 2));
  CHECK(!p3.has_edge(0, 2));

  // trailing newline is tolerated
  CHECK(load_graph("Bg\n", GraphFormat::graph6) == p3);
}

TEST_CASE("graph6 round-trips on the class corpus") {
  for (int n = 0; n <= 6; ++n) {
    for (const Graph& g : graph_classes(n)) {
      Graph back = load_graph(encode_graph6(g), GraphFormat::graph6);
      CHECK(back == g);
    }
  }
}

TEST_CASE("graph6 round-trips on random graphs with 7 and 8 vertices") {
  std::mt19937 rng(20240817);
  for (int n : {7, 8}) {
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<std::pair<int, int>> edges;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (rng() & 1) edges.emplace_back(u, v);
      Graph g = Graph::from_edges(n, edges);
      CHECK(load_graph(encode_graph6(g), GraphFormat::graph6) == g);
    }
  }
}

TEST_CASE("graph6 parse failures") {
  CHECK_THROWS_AS(load_graph("", GraphFormat::graph6), Error);
  // wrong body length for n = 5
  CHECK_THROWS_AS(load_graph("D", GraphFormat::graph6), Error);
  CHECK_THROWS_AS(load_graph("Dg", GraphFormat::graph6), Error);
  CHECK_THROWS_AS(load_graph("Dgggg", GraphFormat::graph6), Error);
  // byte below the printable range
  CHECK_THROWS_AS(load_graph("B\x20", GraphFormat::graph6), Error);
  // 63 in the size byte announces a multi-byte size
  CHECK_THROWS_AS(load_graph("~??", GraphFormat::graph6), Error);
  try {
    load_graph("Dg", GraphFormat::graph6);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::parse);
  }
}

TEST_CASE("graphs above the vertex limit are rejected") {
  // 'c' encodes n = 36, beyond the compiled cap of 16
  std::string big(1, char(36 + 63));
  big += std::string((36 * 35 / 2 + 5) / 6, '?');
  try {
    load_graph(big, GraphFormat::graph6);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::limit);
  }
}

TEST_CASE("edge list format") {
  Graph g = load_graph("4 3\n0 1\n1 2\n2 3\n", GraphFormat::edge_list);
  CHECK(g.size() == 4);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});

  CHECK_THROWS_AS(load_graph("3 1\n0 0\n", GraphFormat::edge_list), Error);
  CHECK_THROWS_AS(load_graph("3 1\n0 5\n", GraphFormat::edge_list), Error);
  CHECK_THROWS_AS(load_graph("3 2\n0 1\n0 1\n", GraphFormat::edge_list), Error);
  CHECK_THROWS_AS(load_graph("3 1\n0 1\n7\n", GraphFormat::edge_list), Error);
  CHECK_THROWS_AS(load_graph("3", GraphFormat::edge_list), Error);
}

TEST_CASE("family shapes") {
  Graph s4 = make_family({Family::star, 4});
  CHECK(s4.size() == 5);
  CHECK(s4.edge_count() == 4);
  CHECK(s4.degree(0) == 4);
  CHECK(s4.label(0) == "c");
  CHECK(s4.label(2) == "l2");

  Graph a2 = make_family({Family::agi, 2});
  CHECK(a2.size() == 7);
  CHECK(a2.edge_count() == 6);
  CHECK(a2.label(4) == "z");
  CHECK(a2.has_edge(0, 2));  // x1 -- y1
  CHECK(a2.has_edge(2, 4));  // y1 -- z
  CHECK(a2.has_edge(4, 5));  // z -- u1
  CHECK(!a2.has_edge(0, 1));

  Graph a4 = make_family({Family::agi, 4});
  CHECK(a4.size() == 13);
  CHECK(a4.edge_count() == 12);

  Graph fg = make_family({Family::forest_gadget, 5, 0});
  CHECK(fg.size() == 7);
  CHECK(fg.edge_count() == 11);
  Graph fg1 = make_family({Family::forest_gadget, 4, 1});
  CHECK(fg1.size() == 7);
  CHECK(fg1.degree(6) == 0);
  CHECK(fg1.label(6) == "w1");

  Graph kb = make_family({Family::complete_bipartite, 3});
  CHECK(kb.size() == 6);
  CHECK(kb.edge_count() == 9);

  CHECK_THROWS_AS(make_family({Family::agi, 1}), Error);
  CHECK_THROWS_AS(make_family({Family::star, 0}), Error);
}

TEST_CASE("add_isolated and split_isolated invert each other") {
  for (const Graph& g : graph_classes(4)) {
    IsolatedSplit before = split_isolated(g);
    Graph padded = add_isolated(g, 2);
    IsolatedSplit after = split_isolated(padded);
    CHECK(after.k == before.k + 2);
    CHECK(after.core == before.core);
    // core_vertices maps the core back onto the original adjacency
    for (int i = 0; i < after.core.size(); ++i)
      for (int j = 0; j < after.core.size(); ++j)
        if (i != j)
          CHECK(after.core.has_edge(i, j) ==
                padded.has_edge(after.core_vertices[i], after.core_vertices[j]));
  }
}

TEST_CASE("line graph construction") {
  Graph p3 = make_family({Family::path, 3});
  LineGraphResult l1 = line_graph(p3);
  CHECK(l1.lg.size() == 2);
  CHECK(l1.lg.edge_count() == 1);
  CHECK(l1.edge_map == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

  Graph k3 = make_family({Family::complete, 3});
  CHECK(line_graph(k3).lg == k3);

  Graph s3 = make_family({Family::star, 3});
  CHECK(line_graph(s3).lg == make_family({Family::complete, 3}));

  // two disjoint edges give two isolated line-graph vertices
  Graph m2 = disjoint_union({make_family({Family::path, 2}),
                             make_family({Family::path, 2})});
  LineGraphResult l2 = line_graph(m2);
  CHECK(l2.lg.size() == 2);
  CHECK(l2.lg.edge_count() == 0);
}

TEST_CASE("class corpus has the expected sizes") {
  const int expected[] = {1, 1, 2, 4, 11, 34, 156};
  for (int n = 0; n <= 6; ++n)
    CHECK(static_cast<int>(graph_classes(n).size()) == expected[n]);
}

TEST_CASE("labels default to the vertex index") {
  Graph g(3);
  CHECK(g.label(2) == "2");
  g.set_labels({"a", "b", "c"});
  CHECK(g.label(2) == "c");
  CHECK_THROWS_AS(g.set_labels({"a"}), Error);
}
