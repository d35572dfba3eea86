#include <random>
#include <set>

#include "doctest.h"

#include "graph.hpp"
#include "json_io.hpp"
#include "oracles.hpp"

using namespace ltop;

TEST_CASE("triangle with unit lengths") {
  WeightedGraph g;
  for (auto id : {"a", "b", "c"}) g.add_vertex(id);
  g.add_edge("e1", "a", "b", 1.0);
  g.add_edge("e2", "b", "c", 1.0);
  g.add_edge("e3", "a", "c", 1.0);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.total_length() == 3.0);
  g.check();
}

TEST_CASE("construction rejects bad input") {
  WeightedGraph g;
  g.add_vertex("a");
  g.add_vertex("b");
  CHECK_THROWS_WITH_AS(g.add_edge("e", "a", "b", 0.0), doctest::Contains("nonpositive length on edge e"),
                       error);
  CHECK_THROWS_WITH_AS(g.add_edge("e", "a", "zz", 1.0), doctest::Contains("undeclared vertex zz"), error);
  CHECK_THROWS_AS(g.add_vertex("a"), error);
  g.add_edge("e", "a", "b", 1.0);
  CHECK_THROWS_AS(g.add_edge("e", "a", "b", 1.0), error);
}

TEST_CASE("line graph of a two-edge path") {
  WeightedGraph g;
  for (auto id : {"a", "b", "c"}) g.add_vertex(id);
  g.add_edge("e1", "a", "b", 1.0);
  g.add_edge("e2", "b", "c", 2.0);
  WeightedGraph L = line_graph(g);
  CHECK(L.vertex_count() == 2);
  CHECK(L.edge_count() == 1);
  CHECK(L.edge(0).len == 1.5);
}

TEST_CASE("line graph of a triangle is a unit triangle") {
  WeightedGraph g;
  for (auto id : {"a", "b", "c"}) g.add_vertex(id);
  g.add_edge("e1", "a", "b", 1.0);
  g.add_edge("e2", "b", "c", 1.0);
  g.add_edge("e3", "a", "c", 1.0);
  WeightedGraph L = line_graph(g);
  CHECK(L.vertex_count() == 3);
  CHECK(L.edge_count() == 3);
  for (const Edge& e : L.edges()) CHECK(e.len == 1.0);
}

TEST_CASE("line graph of a star K_1,3") {
  WeightedGraph g;
  for (auto id : {"c", "x", "y", "z"}) g.add_vertex(id);
  g.add_edge("a", "c", "x", 0.5);
  g.add_edge("b", "c", "y", 0.25);
  g.add_edge("d", "c", "z", 2.0);
  WeightedGraph L = line_graph(g);
  CHECK(L.vertex_count() == 3);
  CHECK(L.edge_count() == 3);
  std::multiset<double> lens;
  for (const Edge& e : L.edges()) lens.insert(e.len);
  CHECK(lens == std::multiset<double>{0.375, 1.25, 1.125});
}

TEST_CASE("loops pair with neighbours but not with themselves") {
  WeightedGraph g;
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_edge("loop", "a", "a", 1.0);
  g.add_edge("e", "a", "b", 2.0);
  WeightedGraph L = line_graph(g);
  // two slots of the loop at `a`, each pairing once with `e`
  CHECK(L.vertex_count() == 2);
  CHECK(L.edge_count() == 2);
  for (const Edge& le : L.edges()) CHECK(le.len == 1.5);
}

TEST_CASE("parallel edges yield one line edge per shared endpoint") {
  WeightedGraph g;
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_edge("e1", "a", "b", 1.0);
  g.add_edge("e2", "a", "b", 3.0);
  WeightedGraph L = line_graph(g);
  CHECK(L.vertex_count() == 2);
  CHECK(L.edge_count() == 2);  // one pairing at a, one at b
  for (const Edge& le : L.edges()) CHECK(le.len == 2.0);
}

TEST_CASE("line graph degree law on random simple graphs") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 30; ++it) {
    WeightedGraph g = test::random_connected(rng, 6, 5);
    WeightedGraph L = line_graph(g);
    for (const Edge& e : g.edges()) {
      int lv = L.require_vertex(e.id);
      CHECK(L.degree(lv) == g.degree(e.u) + g.degree(e.v) - 2);
    }
  }
}

TEST_CASE("induced lengths telescope around closed walks") {
  std::mt19937_64 rng(8);
  for (int it = 0; it < 20; ++it) {
    WeightedGraph g = test::random_eulerian(rng, 10);
    // any cyclic edge sequence: the sum of pairwise means equals the plain sum
    std::vector<double> lens;
    for (const Edge& e : g.edges()) lens.push_back(e.len);
    double plain = 0.0, mean = 0.0;
    for (size_t i = 0; i < lens.size(); ++i) {
      plain += lens[i];
      mean += 0.5 * (lens[i] + lens[(i + 1) % lens.size()]);
    }
    CHECK(plain == mean);
  }
}

TEST_CASE("graph JSON round-trips exactly") {
  std::mt19937_64 rng(9);
  WeightedGraph g = test::random_connected(rng, 7, 6);
  std::string once = graph_to_json(g).dump();
  WeightedGraph h = graph_from_json(once);
  CHECK(h.vertex_count() == g.vertex_count());
  CHECK(h.edge_count() == g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    CHECK(h.edge(e).id == g.edge(e).id);
    CHECK(h.edge(e).len == g.edge(e).len);
  }
  CHECK(graph_to_json(h).dump() == once);
}

TEST_CASE("graph JSON parse failures carry the parse code") {
  CHECK_THROWS_AS(graph_from_json("{nope"), error);
  try {
    graph_from_json(R"({"vertices":[],"edges":[{"id":"e"}]})");
    FAIL("should have thrown");
  } catch (const error& e) {
    CHECK(e.code() == errc::parse);
  }
}

TEST_CASE("DOT export carries the len attribute") {
  WeightedGraph g;
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_edge("e", "a", "b", 0.5);
  std::string dot = graph_to_dot(g);
  CHECK(dot.find("len=0.5") != std::string::npos);
  CHECK(dot.find("\"a\" -- \"b\"") != std::string::npos);
}
