#include <cmath>
#include <queue>
#include <random>
#include <set>

#include "doctest.h"

#include "completion.hpp"
#include "oracles.hpp"

using namespace ltop;

TEST_CASE("summable ladder has a one-cluster boundary") {
  auto g = make_generator("ladder-strip?len=halving");
  BoundaryProfile prof = boundary_profile(*g, {6}, 10, {0.5, 0.25, 0.125});
  for (const BoundaryEpsSlice& s : prof.levels[0].per_eps) {
    CHECK(s.clusters.size() == 1);
    CHECK(s.linked_group_count == 1);
  }
}

TEST_CASE("cluster counts are nonincreasing in eps and cells partition the frontier") {
  auto g = make_generator("binary-tree?len=quarter");
  std::vector<double> eps{0.5, 0.25, 0.125, 0.0625, 0.03125};
  BoundaryProfile prof = boundary_profile(*g, {5}, 9, eps);
  const BoundaryLevel& lvl = prof.levels[0];
  size_t prev = 0;
  for (const BoundaryEpsSlice& s : lvl.per_eps) {
    CHECK(s.clusters.size() >= prev);
    prev = s.clusters.size();
    // partition: every frontier vertex in exactly one cluster
    std::set<std::string> covered;
    for (const BoundaryCluster& c : s.clusters)
      for (const std::string& m : c.members) CHECK(covered.insert(m).second);
    CHECK(covered.size() == lvl.frontier.size());
    // centers pairwise at least eps apart
    for (size_t a = 0; a < s.clusters.size(); ++a)
      for (size_t b = a + 1; b < s.clusters.size(); ++b) CHECK(s.center_dist[a][b] >= s.eps);
  }
  // deep in the tree the quarter lengths separate the branches: more
  // clusters at the finest eps than at the coarsest
  CHECK(lvl.per_eps.back().clusters.size() > lvl.per_eps.front().clusters.size());
}

TEST_CASE("every cluster sits inside one end component") {
  auto g = make_generator("binary-tree?len=quarter");
  // resolutions below the cheapest frontier path through the removed core
  // (two quarter-length steps through a depth-2 vertex cost ~0.039)
  BoundaryProfile prof = boundary_profile(*g, {4}, 8, {0.02, 0.01});
  EndDecomposition dec = ends(*g, 4, true);
  REQUIRE(!dec.components.empty());
  for (const BoundaryEpsSlice& s : prof.levels[0].per_eps)
    for (const BoundaryCluster& c : s.clusters) {
      REQUIRE(c.end_component >= 0);
      const EndComponent& ec = dec.components[c.end_component];
      for (const std::string& m : c.members)
        CHECK(std::find(ec.vertices.begin(), ec.vertices.end(), m) != ec.vertices.end());
    }
}

TEST_CASE("boundary profile rejects a shallow depth") {
  auto g = make_generator("ladder-strip");
  CHECK_THROWS_AS(boundary_profile(*g, {6}, 6, {0.5}), error);
}

TEST_CASE("hop reweighting basics") {
  auto base = std::shared_ptr<const LazyGraph>(make_generator("ladder-strip"));
  SUBCASE("edges at the basepoint get f(0)") {
    auto fl = floyd_lengths(base, "a0", DecayFunction::parse("pow2"));
    Truncation t = fl->truncate(2);
    CHECK(t.graph.edge(t.graph.require_edge("r0")).len == 1.0);   // hop 0
    CHECK(t.graph.edge(t.graph.require_edge("ra0")).len == 1.0);  // hop 0 at a0
    CHECK(t.graph.edge(t.graph.require_edge("rb0")).len == 0.5);  // hop 1 at b0
  }
  SUBCASE("constant decay scales uniformly") {
    auto fl = floyd_lengths(base, "a0", DecayFunction::parse("const:2"));
    Truncation t = fl->truncate(3);
    for (const Edge& e : t.graph.edges()) CHECK(e.len == 2.0);
  }
  SUBCASE("lengths are stable across levels") {
    auto fl = floyd_lengths(base, "a0", DecayFunction::parse("pow2"));
    Truncation a = fl->truncate(3);
    Truncation b = fl->truncate(5);
    for (const Edge& e : a.graph.edges()) CHECK(b.graph.edge(b.graph.require_edge(e.id)).len == e.len);
  }
  SUBCASE("missing basepoint is rejected") {
    auto fl = floyd_lengths(base, "a9", DecayFunction::parse("pow2"));
    CHECK_THROWS_AS(fl->truncate(2), error);
  }
}

TEST_CASE("hop reweighting against an independent breadth-first oracle") {
  auto base = std::shared_ptr<const LazyGraph>(make_generator("hyperbolic-strip"));
  auto fl = floyd_lengths(base, "h0_0", DecayFunction::parse("pow2"));
  Truncation raw = base->truncate(4);
  Truncation t = fl->truncate(4);
  // breadth-first hops in the raw truncation
  std::map<std::string, int> hop;
  std::queue<std::string> q;
  hop["h0_0"] = 0;
  q.push("h0_0");
  while (!q.empty()) {
    std::string u = q.front();
    q.pop();
    int ui = raw.graph.require_vertex(u);
    for (int e : raw.graph.incident(ui)) {
      std::string w = raw.graph.vertex_id(raw.graph.other_end(e, ui));
      if (!hop.count(w)) {
        hop[w] = hop[u] + 1;
        q.push(w);
      }
    }
  }
  for (const Edge& e : t.graph.edges()) {
    int h = std::min(hop[t.graph.vertex_id(e.u)], hop[t.graph.vertex_id(e.v)]);
    CHECK(e.len == std::ldexp(1.0, -h));
  }
  // every column-3 perpendicular edge sits at hop 3
  for (const Edge& e : t.graph.edges())
    if (e.id.rfind("p3_", 0) == 0) CHECK(e.len == std::ldexp(1.0, -3));
}

TEST_CASE("decay parsing and admissibility") {
  CHECK(DecayFunction::parse("pow4")(2) == 0.0625);
  CHECK(DecayFunction::parse("exp:1")(1) == doctest::Approx(std::exp(-1.0)));
  CHECK_THROWS_AS(DecayFunction::parse("pow9"), error);
  CHECK_THROWS_AS(DecayFunction::parse("exp"), error);
  FloydAdmissibility adm = floyd_admissibility(DecayFunction::parse("pow2"), 16);
  CHECK(adm.ok);
  CHECK(adm.lambda_min == 0.5);
}

TEST_CASE("depth-first tree lengths") {
  SUBCASE("root-child edge gets one half") {
    WeightedGraph g;
    g.add_vertex("r");
    g.add_vertex("a");
    g.add_edge("e", "r", "a", 5.0);
    NstAssignment nst = nst_lengths(g, "r");
    CHECK(nst.assignment["e"] == 0.5);
    CHECK(nst.level["r"] == 0);
    CHECK(nst.level["a"] == 1);
  }
  SUBCASE("an edge spanning levels 1 to 3 gets 3/8") {
    // path r-a-b-c plus the chord a-c
    WeightedGraph g;
    for (auto id : {"r", "a", "b", "c"}) g.add_vertex(id);
    g.add_edge("e1", "r", "a", 1.0);
    g.add_edge("e2", "a", "b", 1.0);
    g.add_edge("e3", "b", "c", 1.0);
    g.add_edge("x", "a", "c", 1.0);  // sorts after e*, so the path is the tree
    NstAssignment nst = nst_lengths(g, "r");
    CHECK(nst.level["a"] == 1);
    CHECK(nst.level["c"] == 3);
    CHECK(nst.assignment["x"] == 0.375);  // 1/4 + 1/8
  }
  SUBCASE("assignments agree with independently recomputed levels") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 30; ++it) {
      int n = std::uniform_int_distribution<int>(2, 8)(rng);
      WeightedGraph g = test::random_connected(rng, n, 5);
      NstAssignment nst = nst_lengths(g, "v0");
      // independent recursive depth-first search with the same order rule
      std::map<std::string, int> depth;
      std::function<void(int, int)> dfs = [&](int v, int d) {
        depth[g.vertex_id(v)] = d;
        std::vector<int> es = g.incident(v);
        std::sort(es.begin(), es.end(), [&](int a, int b) { return g.edge(a).id < g.edge(b).id; });
        for (int e : es) {
          int w = g.other_end(e, v);
          if (!depth.count(g.vertex_id(w))) dfs(w, d + 1);
        }
      };
      dfs(g.require_vertex("v0"), 0);
      CHECK(depth == nst.level);
      for (const Edge& e : g.edges()) {
        int lo = std::min(depth[g.vertex_id(e.u)], depth[g.vertex_id(e.v)]);
        int hi = std::max(depth[g.vertex_id(e.u)], depth[g.vertex_id(e.v)]);
        CHECK(lo != hi);  // depth-first trees of finite graphs are normal
        CHECK(nst.assignment[e.id] == std::ldexp(1.0, -lo) - std::ldexp(1.0, -hi));
      }
      // tree-path distances telescope
      const std::string far = g.vertex_id(n - 1);
      std::set<std::string> tree(nst.tree_edges.begin(), nst.tree_edges.end());
      // walk up from `far` to the root accumulating assignments
      double acc = 0.0;
      std::string cur = far;
      while (cur != "v0") {
        bool stepped = false;
        for (const std::string& te : nst.tree_edges) {
          const Edge& e = g.edge(g.require_edge(te));
          std::string a = g.vertex_id(e.u), b = g.vertex_id(e.v);
          if ((a == cur && depth[b] == depth[cur] - 1) || (b == cur && depth[a] == depth[cur] - 1)) {
            acc += nst.assignment[te];
            cur = a == cur ? b : a;
            stepped = true;
            break;
          }
        }
        REQUIRE(stepped);
      }
      CHECK(acc == 1.0 - std::ldexp(1.0, -depth[far]));  // sum over levels 1..depth
    }
  }
  SUBCASE("disconnected and loopy inputs are rejected") {
    WeightedGraph g;
    g.add_vertex("a");
    g.add_vertex("b");
    CHECK_THROWS_AS(nst_lengths(g, "a"), error);
    WeightedGraph h;
    h.add_vertex("a");
    h.add_edge("l", "a", "a", 1.0);
    CHECK_THROWS_AS(nst_lengths(h, "a"), error);
  }
}

TEST_CASE("lind columns realize the sample distances") {
  SUBCASE("two points at distance one") {
    auto g = make_lind(MetricSample{{"a", "b"}, {{0.0, 1.0}, {1.0, 0.0}}});
    Truncation t = g->truncate(8);
    DistanceResult d = dist(t.graph, "z8:a", "z8:b");
    CHECK(d.value == 1.0);
  }
  SUBCASE("square sample at three increasing depths") {
    double s2 = std::sqrt(2.0);
    MetricSample sq{{"p", "q", "r", "s"},
                    {{0, 1, s2, 1}, {1, 0, 1, s2}, {s2, 1, 0, 1}, {1, s2, 1, 0}}};
    auto g = make_lind(sq);
    double prev_worst = std::numeric_limits<double>::infinity();
    for (int depth : {5, 8, 11}) {
      Truncation t = g->truncate(depth);
      double worst = 0.0;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
          DistanceResult d = dist(t.graph, "z" + std::to_string(depth) + ":" + sq.points[i],
                                  "z" + std::to_string(depth) + ":" + sq.points[j]);
          worst = std::max(worst, std::abs(d.value - sq.d[i][j]));
        }
      CHECK(worst <= prev_worst);
      prev_worst = worst;
      CHECK(worst <= std::ldexp(1.0, -8));
    }
  }
}

TEST_CASE("end counts across the catalog") {
  CHECK(ends(*make_generator("ladder-strip"), 6, true).components.size() == 1);
  CHECK(ends(*make_generator("double-ray"), 6, true).components.size() == 2);
  CHECK(ends(*make_generator("double-ray"), 6, false).components.size() == 2);
  EndDecomposition fan = ends(*make_generator("fan"), 8, true);
  CHECK(fan.components.size() == 1);
  CHECK(!fan.components[0].ray.empty());
  // the binary tree keeps splitting: more components at deeper levels
  auto tree = make_generator("binary-tree?len=quarter");
  CHECK(ends(*tree, 8, true).components.size() > ends(*tree, 4, true).components.size());
  CHECK_THROWS_AS(ends(*tree, 0, true), error);
}

TEST_CASE("comb or star extraction") {
  SUBCASE("sequence along a ray yields a comb with trivial teeth") {
    auto g = make_generator("double-ray");
    CombOrStar r = comb_or_star(*g, {"v1", "v3", "v5", "v7"}, 10);
    CHECK(r.kind == "comb");
    CHECK(r.count >= 4);
    CHECK(!r.spine.empty());
  }
  SUBCASE("spaced hub neighbours force a star at the hub") {
    auto g = make_generator("fan");
    CombOrStar r = comb_or_star(*g, {"v0", "v3", "v6", "v9", "v12"}, 14);
    CHECK(r.kind == "star");
    CHECK(r.center == "x");
    CHECK(r.count >= 4);
    // legs pairwise disjoint except for the center
    std::set<std::string> seen;
    for (const auto& leg : r.legs) {
      CHECK(leg.front() == "x");
      for (size_t i = 1; i < leg.size(); ++i) CHECK(seen.insert(leg[i]).second);
    }
  }
  SUBCASE("bounded degree forbids stars") {
    auto g = make_generator("grid");
    CombOrStar r = comb_or_star(*g, {"g0_0", "g2_2", "g4_4", "g6_6"}, 8);
    CHECK(r.kind == "comb");
    std::set<std::string> seen;  // teeth disjoint, first vertex on the spine
    std::set<std::string> spine(r.spine.begin(), r.spine.end());
    for (const auto& tooth : r.legs) {
      CHECK(spine.count(tooth.front()) == 1);
      for (size_t i = 1; i < tooth.size(); ++i) {
        CHECK(!spine.count(tooth[i]));
        CHECK(seen.insert(tooth[i]).second);
      }
    }
  }
  SUBCASE("unemitted sequence vertices are a precondition failure") {
    auto g = make_generator("double-ray");
    CHECK_THROWS_AS(comb_or_star(*g, {"v1", "v2", "v99"}, 5), error);
  }
}

TEST_CASE("strip crossing distances are positive and stable in depth") {
  auto base = std::shared_ptr<const LazyGraph>(make_generator("hyperbolic-strip"));
  auto fl = floyd_lengths(base, "h0_0", DecayFunction::parse("pow2"));
  // distance between the two boundary rays at column k, computed at
  // increasing depths: once deep enough the value stops moving
  for (int k : {3, 4}) {
    std::string top = "h" + std::to_string(k) + "_0";
    std::string bottom = "h" + std::to_string(k) + "_" + std::to_string(1 << k);
    double at_depth[3];
    int i = 0;
    for (int depth : {9, 10, 11}) {
      Truncation t = fl->truncate(depth);
      at_depth[i++] = dist(t.graph, top, bottom).value;
    }
    CHECK(at_depth[0] > 0.0);
    CHECK(at_depth[0] == at_depth[1]);
    CHECK(at_depth[1] == at_depth[2]);
  }
}
