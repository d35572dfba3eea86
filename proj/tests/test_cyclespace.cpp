#include <random>
#include <set>

#include "doctest.h"

#include "cyclespace.hpp"
#include "lazy.hpp"
#include "oracles.hpp"

using namespace ltop;

namespace {

WeightedGraph complete(int n, std::mt19937_64& rng) {
  WeightedGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      g.add_edge("e" + std::to_string(k++), "v" + std::to_string(i), "v" + std::to_string(j),
                 test::dyadic_len(rng));
  return g;
}

}  // namespace

TEST_CASE("cycle basis sizes") {
  std::mt19937_64 rng(21);
  SUBCASE("trees have empty bases") {
    WeightedGraph g = test::random_connected(rng, 6, 0);
    CHECK(cycle_basis(g).empty());
  }
  SUBCASE("a triangle is its own basis") {
    WeightedGraph g;
    for (auto id : {"a", "b", "c"}) g.add_vertex(id);
    g.add_edge("e1", "a", "b", 1.0);
    g.add_edge("e2", "b", "c", 1.0);
    g.add_edge("e3", "a", "c", 1.0);
    auto basis = cycle_basis(g);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].edges == std::vector<std::string>{"e1", "e2", "e3"});
    CHECK(basis[0].total_length == 3.0);
  }
  SUBCASE("K4 has three independent cycles") {
    WeightedGraph g = complete(4, rng);
    auto basis = cycle_basis(g);
    REQUIRE(basis.size() == 3);  // |E|-|V|+1 = 6-4+1
    std::vector<std::vector<std::string>> sets;
    for (const auto& b : basis) sets.push_back(b.edges);
    CHECK(gf2_rank(g, sets) == 3);
  }
  SUBCASE("dimension and membership on random graphs") {
    for (int it = 0; it < 20; ++it) {
      int n = std::uniform_int_distribution<int>(3, 7)(rng);
      WeightedGraph g = test::random_connected(rng, n, 5);
      auto basis = cycle_basis(g);
      CHECK(static_cast<int>(basis.size()) == g.edge_count() - g.vertex_count() + 1);
      std::vector<std::vector<std::string>> sets;
      for (const auto& b : basis) {
        std::string odd;
        CHECK(in_cycle_space(g, b.edges, &odd));
        sets.push_back(b.edges);
      }
      CHECK(gf2_rank(g, sets) == static_cast<int>(basis.size()));
    }
  }
}

TEST_CASE("thin sums") {
  SUBCASE("the first k fan triangles sum to the two hub legs plus the ray prefix") {
    auto fan = make_generator("fan?len=shrinking");
    WeightedGraph g = fan->truncate(6).graph;
    // triangles at x: {xv_i, xv_{i+1}, h_i}
    std::vector<std::vector<std::string>> fam;
    int k = 4;
    for (int i = 0; i < k; ++i)
      fam.push_back({"xv" + std::to_string(i), "xv" + std::to_string(i + 1), "h" + std::to_string(i)});
    ThinSumResult r = thin_sum(g, fam);
    std::vector<std::string> want{"h0", "h1", "h2", "h3", "xv0", "xv4"};
    CHECK(r.sum.edges == want);
    CHECK(r.sum.edges == test::gf2_fold(fam));
    CHECK(r.max_occurrence == 2);
  }
  SUBCASE("a family {C, C} cancels") {
    std::mt19937_64 rng(22);
    WeightedGraph g = complete(4, rng);
    auto basis = cycle_basis(g);
    ThinSumResult r = thin_sum(g, {basis[0].edges, basis[0].edges});
    CHECK(r.sum.edges.empty());
    CHECK(r.sum.total_length == 0.0);
  }
  SUBCASE("random families on K5 match the independent fold") {
    std::mt19937_64 rng(23);
    WeightedGraph g = complete(5, rng);
    auto cycles = enumerate_cycles(g);
    for (int it = 0; it < 20; ++it) {
      std::vector<std::vector<std::string>> fam;
      for (const auto& c : cycles)
        if (std::uniform_int_distribution<int>(0, 1)(rng)) fam.push_back(c);
      if (fam.empty()) continue;
      ThinSumResult r = thin_sum(g, fam);
      CHECK(r.sum.edges == test::gf2_fold(fam));
    }
  }
  SUBCASE("non-circuit members are rejected") {
    std::mt19937_64 rng(24);
    WeightedGraph g = complete(4, rng);
    CHECK_THROWS_AS(thin_sum(g, {{"e0", "e1"}}), error);
  }
}

TEST_CASE("circuit decomposition") {
  std::mt19937_64 rng(25);
  SUBCASE("a triangle decomposes into itself") {
    WeightedGraph g;
    for (auto id : {"a", "b", "c"}) g.add_vertex(id);
    g.add_edge("e1", "a", "b", 1.0);
    g.add_edge("e2", "b", "c", 1.0);
    g.add_edge("e3", "a", "c", 1.0);
    CircuitFamily f = circuit_decomposition(g, {"e1", "e2", "e3"});
    REQUIRE(f.circuits.size() == 1);
    CHECK(f.circuits[0].edges == std::vector<std::string>{"e1", "e2", "e3"});
  }
  SUBCASE("two triangles sharing a vertex split apart") {
    WeightedGraph g;
    for (auto id : {"m", "a", "b", "c", "d"}) g.add_vertex(id);
    g.add_edge("t1", "m", "a", 1.0);
    g.add_edge("t2", "a", "b", 1.0);
    g.add_edge("t3", "b", "m", 1.0);
    g.add_edge("s1", "m", "c", 1.0);
    g.add_edge("s2", "c", "d", 1.0);
    g.add_edge("s3", "d", "m", 1.0);
    CircuitFamily f = circuit_decomposition(g, {"t1", "t2", "t3", "s1", "s2", "s3"});
    REQUIRE(f.circuits.size() == 2);
    CHECK(f.circuits[0].edges.size() == 3);
    CHECK(f.circuits[1].edges.size() == 3);
  }
  SUBCASE("the full edge set of K5 splits into disjoint cycles covering it") {
    WeightedGraph g = complete(5, rng);
    std::vector<std::string> all;
    for (const Edge& e : g.edges()) all.push_back(e.id);
    CircuitFamily f = circuit_decomposition(g, all);
    std::set<std::string> covered;
    for (const auto& c : f.circuits) {
      std::string odd;
      CHECK(in_cycle_space(g, c.edges, &odd));  // each piece is even
      for (const std::string& id : c.edges) CHECK(covered.insert(id).second);
    }
    CHECK(covered.size() == all.size());
    for (auto& [id, count] : f.occurrence) CHECK(count == 1);
  }
  SUBCASE("odd degrees are rejected with a witness") {
    WeightedGraph g = complete(4, rng);
    CHECK_THROWS_WITH_AS(circuit_decomposition(g, {"e0"}), doctest::Contains("odd degree"), error);
  }
}

TEST_CASE("geodetic generation") {
  std::mt19937_64 rng(26);
  SUBCASE("geodetic input comes back unchanged") {
    WeightedGraph g;
    for (auto id : {"a", "b", "c"}) g.add_vertex(id);
    g.add_edge("e1", "a", "b", 1.0);
    g.add_edge("e2", "b", "c", 1.0);
    g.add_edge("e3", "a", "c", 1.0);
    GeodeticFamily f = geodetic_generate(g, {"e1", "e2", "e3"});
    REQUIRE(f.family.circuits.size() == 1);
    CHECK(f.family.circuits[0].edges == std::vector<std::string>{"e1", "e2", "e3"});
    CHECK(f.trace.empty());
  }
  SUBCASE("a chorded square splits into the two chord triangles") {
    WeightedGraph g;
    for (auto id : {"a", "b", "c", "d"}) g.add_vertex(id);
    g.add_edge("s1", "a", "b", 1.0);
    g.add_edge("s2", "b", "c", 1.0);
    g.add_edge("s3", "c", "d", 1.0);
    g.add_edge("s4", "d", "a", 1.0);
    g.add_edge("x", "a", "c", 1.0);
    GeodeticFamily f = geodetic_generate(g, {"s1", "s2", "s3", "s4"});
    REQUIRE(f.family.circuits.size() == 2);
    std::vector<std::vector<std::string>> sets;
    for (const auto& c : f.family.circuits) {
      CHECK(is_geodetic_cycle(g, c.edges).geodetic);
      CHECK(c.edges.size() == 3);
      CHECK(std::find(c.edges.begin(), c.edges.end(), "x") != c.edges.end());
      sets.push_back(c.edges);
    }
    CHECK(test::gf2_fold(sets) == std::vector<std::string>{"s1", "s2", "s3", "s4"});
    REQUIRE(f.trace.size() == 1);
    for (double piece : f.trace[0].piece_lengths) CHECK(piece < f.trace[0].replaced_length);
  }
  SUBCASE("the empty element yields the empty family") {
    WeightedGraph g = complete(4, rng);
    CHECK(geodetic_generate(g, {}).family.circuits.empty());
  }
  SUBCASE("odd-degree elements are rejected") {
    WeightedGraph g = complete(4, rng);
    CHECK_THROWS_AS(geodetic_generate(g, {"e0"}), error);
  }
  SUBCASE("random sweep: geodetic outputs, exact sums, shrinking splits") {
    for (int it = 0; it < 40; ++it) {
      int n = std::uniform_int_distribution<int>(3, 6)(rng);
      WeightedGraph g = test::random_connected(rng, n, 5);
      for (const CycleSpaceElement& z : cycle_basis(g)) {
        GeodeticFamily f = geodetic_generate(g, z.edges);
        std::vector<std::vector<std::string>> sets;
        for (const auto& c : f.family.circuits) {
          CHECK(is_geodetic_cycle(g, c.edges).geodetic);
          sets.push_back(c.edges);
        }
        CHECK(test::gf2_fold(sets) == z.edges);
        for (const SplitStep& s : f.trace)
          for (double piece : s.piece_lengths) CHECK(piece < s.replaced_length);
      }
    }
  }
}

TEST_CASE("geodetic cycles span the cycle space of small graphs") {
  std::mt19937_64 rng(27);
  for (int it = 0; it < 25; ++it) {
    int n = std::uniform_int_distribution<int>(3, 6)(rng);
    WeightedGraph g = test::random_connected(rng, n, 6);
    auto cycles = enumerate_cycles(g);
    std::vector<std::vector<std::string>> geodetic;
    for (const auto& c : cycles)
      if (is_geodetic_cycle(g, c).geodetic) geodetic.push_back(c);
    CHECK(gf2_rank(g, geodetic) == g.edge_count() - g.vertex_count() + 1);
  }
}
