#include <doctest.h>

#include <random>

#include "copath/graph.hpp"
#include "support/corpus.hpp"
#include "support/reference.hpp"

using namespace copath;

TEST_CASE("parse smallest path") {
  Graph g = parse_graph("p edge 3 2\ne 1 2\ne 2 3\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(2) == 2);
}

TEST_CASE("parse golden instance") {
  Graph g = parse_graph(testing::golden_dimacs());
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 7);
  CHECK(g == testing::golden_graph());
}

TEST_CASE("parse errors are distinct") {
  auto kind_of = [](const std::string& text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.kind();
    }
    FAIL("expected a parse error");
    return ParseError::Kind::kHeader;
  };
  CHECK(kind_of("p edge x 1\ne 1 2\n") == ParseError::Kind::kHeader);
  CHECK(kind_of("e 1 2\n") == ParseError::Kind::kHeader);
  CHECK(kind_of("p edge 2 1\np edge 2 1\ne 1 2\n") == ParseError::Kind::kHeader);
  CHECK(kind_of("p edge 2 1\ne 1\n") == ParseError::Kind::kEdgeLine);
  CHECK(kind_of("p edge 2 1\ne 1 3\n") == ParseError::Kind::kEndpoint);
  CHECK(kind_of("p edge 2 1\ne 0 1\n") == ParseError::Kind::kEndpoint);
  CHECK(kind_of("p edge 2 1\ne 1 1\n") == ParseError::Kind::kSelfLoop);
  CHECK(kind_of("p edge 2 2\ne 1 2\ne 2 1\n") ==
        ParseError::Kind::kDuplicateEdge);
  CHECK(kind_of("p edge 2 5\ne 1 2\n") == ParseError::Kind::kEdgeCount);
}

TEST_CASE("comments and blank lines are skipped") {
  Graph g = parse_graph("c hello\n\np edge 2 1\nc mid\ne 1 2\n");
  CHECK(g.edge_count() == 1);
}

TEST_CASE("linear forest basics") {
  CHECK(is_linear_forest(Graph(5, {})));  // isolates are length-0 paths
  CHECK_FALSE(is_linear_forest(Graph(3, {{1, 2}, {2, 3}, {1, 3}})));
  Graph golden = testing::golden_graph();
  CHECK_FALSE(is_linear_forest(golden));
  // Dropping edges 1-2 and 3-4 (ids 0 and 3) leaves the single path
  // 1-3-5-6-4-2.
  CHECK(is_linear_forest(golden.delete_edges({0, 3})));
}

TEST_CASE("delete_edges keeps ids stable") {
  Graph golden = testing::golden_graph();
  CHECK(golden.delete_edges({}) == golden);
  Graph g = golden.delete_edges({0, 3});
  CHECK(g.edge_count() == 5);
  CHECK_FALSE(g.has_edge_id(0));
  CHECK(g.has_edge_id(6));
  CHECK(g.edge(6) == Edge{5, 6});
  CHECK_THROWS_AS(g.delete_edges({0}), std::invalid_argument);

  Graph triangle(3, {{1, 2}, {2, 3}, {1, 3}});
  CHECK(is_linear_forest(triangle.delete_edges({1})));
}

TEST_CASE("degree histogram") {
  DegreeHistogram tri = degree_histogram(Graph(3, {{1, 2}, {2, 3}, {1, 3}}));
  CHECK(tri.count(2) == 3);
  CHECK(tri.max_degree == 2);

  DegreeHistogram golden = degree_histogram(testing::golden_graph());
  CHECK(golden.count(2) == 4);
  CHECK(golden.count(3) == 2);
  CHECK(golden.max_degree == 3);

  DegreeHistogram star =
      degree_histogram(Graph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}}));
  CHECK(star.count(1) == 4);
  CHECK(star.count(4) == 1);

  std::int64_t total = 0;
  for (std::int64_t c : golden.counts) total += c;
  CHECK(total == 6);
}

TEST_CASE("components and isolates") {
  auto c1 = components_and_isolates(Graph(4, {}));
  CHECK(c1.components == 4);
  CHECK(c1.isolates == 4);
  auto c2 = components_and_isolates(Graph(4, {{1, 2}, {2, 3}, {1, 3}}));
  CHECK(c2.components == 2);
  CHECK(c2.isolates == 1);
  auto c3 = components_and_isolates(testing::golden_graph());
  CHECK(c3.components == 1);
  CHECK(c3.isolates == 0);
}

TEST_CASE("linear forest agrees with the count formula on random graphs") {
  for (const Graph& g : testing::random_corpus(101, 120, 9)) {
    CHECK(is_linear_forest(g) == testing::linear_forest_by_formula(g));
    // And on a few subgraphs, which are likelier to be forests.
    std::mt19937_64 rng(g.edge_count() * 7919 + g.vertex_count());
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<int> drop;
      for (int id : g.edge_ids())
        if (rng() & 1) drop.push_back(id);
      Graph sub = g.delete_edges(drop);
      CHECK(is_linear_forest(sub) == testing::linear_forest_by_formula(sub));
    }
  }
}

TEST_CASE("deletion composes over disjoint id sets") {
  std::mt19937_64 rng(55);
  for (const Graph& g : testing::random_corpus(55, 40, 8)) {
    std::vector<int> a, b;
    for (int id : g.edge_ids()) {
      switch (rng() % 3) {
        case 0: a.push_back(id); break;
        case 1: b.push_back(id); break;
        default: break;
      }
    }
    std::vector<int> both = a;
    both.insert(both.end(), b.begin(), b.end());
    CHECK(g.delete_edges(a).delete_edges(b) == g.delete_edges(both));
  }
}

TEST_CASE("parse of serialize is the identity on edge sets") {
  for (const Graph& g : testing::random_corpus(77, 60, 10)) {
    Graph back = parse_graph(serialize_graph(g));
    CHECK(back.vertex_count() == g.vertex_count());
    REQUIRE(back.edge_count() == g.edge_count());
    CHECK(back.edges() == g.edges());
  }
}
