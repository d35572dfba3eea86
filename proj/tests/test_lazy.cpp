#include <map>

#include "doctest.h"

#include "lazy.hpp"
#include "oracles.hpp"

using namespace ltop;

namespace {

// Exhaustion contract: truncate(n) is a subgraph of truncate(n+1) and
// shared edges keep their lengths.
void check_monotone(const LazyGraph& g, int up_to) {
  for (int n = 0; n < up_to; ++n) {
    Truncation a = g.truncate(n);
    Truncation b = g.truncate(n + 1);
    for (int v = 0; v < a.graph.vertex_count(); ++v)
      CHECK(b.graph.vertex_index(a.graph.vertex_id(v)) >= 0);
    for (const Edge& e : a.graph.edges()) {
      int be = b.graph.edge_index(e.id);
      REQUIRE(be >= 0);
      CHECK(b.graph.edge(be).len == e.len);
      CHECK(b.graph.vertex_id(b.graph.edge(be).u) == a.graph.vertex_id(e.u));
      CHECK(b.graph.vertex_id(b.graph.edge(be).v) == a.graph.vertex_id(e.v));
    }
    // frontier vertices exist and the frontier is exactly the set of
    // vertices that gain edges later
    std::map<std::string, int> deg_now, deg_next;
    for (const Edge& e : a.graph.edges()) {
      deg_now[a.graph.vertex_id(e.u)]++;
      deg_now[a.graph.vertex_id(e.v)]++;
    }
    for (const Edge& e : b.graph.edges()) {
      deg_next[b.graph.vertex_id(e.u)]++;
      deg_next[b.graph.vertex_id(e.v)]++;
    }
    for (const std::string& f : a.frontier) CHECK(a.graph.vertex_index(f) >= 0);
    for (int v = 0; v < a.graph.vertex_count(); ++v) {
      std::string id = a.graph.vertex_id(v);
      bool grows = deg_next[id] > deg_now[id];
      bool in_frontier = std::find(a.frontier.begin(), a.frontier.end(), id) != a.frontier.end();
      if (grows) CHECK(in_frontier);
    }
  }
}

}  // namespace

TEST_CASE("exhaustion monotonicity across the catalog") {
  for (const char* spec : {"ladder-strip", "ladder-strip?len=halving", "double-ray?len=halving", "fan",
                           "fan?len=shrinking", "grid", "binary-tree?len=quarter", "hyperbolic-strip",
                           "wild-circle"}) {
    CAPTURE(spec);
    auto g = make_generator(spec);
    check_monotone(*g, 4);
  }
}

TEST_CASE("ladder-strip base case") {
  auto g = make_generator("ladder-strip");
  Truncation t = g->truncate(0);
  CHECK(t.graph.vertex_count() == 2);
  CHECK(t.graph.edge_count() == 1);  // one rung
  CHECK(!t.frontier.empty());
}

TEST_CASE("hyperbolic strip column sizes") {
  auto g = make_generator("hyperbolic-strip");
  Truncation t = g->truncate(3);
  int col3 = 0;
  for (const Edge& e : t.graph.edges())
    if (e.id.rfind("p3_", 0) == 0) ++col3;
  CHECK(col3 == 8);  // perpendicular path of 2^3 edges at level 3
}

TEST_CASE("generator parsing failures") {
  CHECK_THROWS_AS(make_generator("no-such-generator"), error);
  CHECK_THROWS_AS(make_generator("fan?len=bogus"), error);
  CHECK_THROWS_AS(make_generator("fan?unknown=1"), error);
  CHECK_THROWS_AS(make_generator("fan?broken"), error);
  try {
    make_generator("no-such-generator");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_found);
  }
}

TEST_CASE("total length report verdicts") {
  auto halving = make_generator("ladder-strip?len=halving");
  TotalLengthReport rep = total_length_report(*halving, {0, 2, 4, 6});
  CHECK(rep.verdict == Summability::converging);
  REQUIRE(rep.declared_total.has_value());
  CHECK(*rep.declared_total == Rational(4));
  for (size_t i = 1; i < rep.partial_sums.size(); ++i)
    CHECK(rep.partial_sums[i].second > rep.partial_sums[i - 1].second);
  CHECK(rep.partial_sums.back().second < 4.0);

  auto unit = make_generator("ladder-strip");
  TotalLengthReport urep = total_length_report(*unit, {1, 2, 3, 4});
  CHECK(urep.verdict == Summability::diverging);
  // constant per-column growth
  double d1 = urep.partial_sums[1].second - urep.partial_sums[0].second;
  double d2 = urep.partial_sums[3].second - urep.partial_sums[2].second;
  CHECK(d1 == d2);
}

TEST_CASE("wild circle emission log matches the declared schedule") {
  WildCircleGraph g(Rational(1), Rational(3, 2));
  int level = 6;
  Truncation t = g.truncate(level);

  // ray edges: exact emitted total against the closed form, remainder to s
  Rational ray_sum(0);
  std::map<long long, int> connector_counts;  // length class -> count
  for (const Edge& e : t.graph.edges()) {
    if (e.id.rfind("T:", 0) == 0) {
      ray_sum += Rational::from_double(e.len);
    } else {
      Rational len = Rational::from_double(e.len);
      CHECK(len.num() == 1);  // c = 1: connector lengths are exact powers of two
      long long cls = 0;
      while ((1LL << cls) < len.den()) ++cls;
      CHECK((1LL << cls) == len.den());
      connector_counts[cls] += 1;
    }
  }
  CHECK(ray_sum == g.ray_emitted(level));
  CHECK(ray_sum + g.ray_tail(level) == Rational(3, 2));
  for (auto& [cls, count] : connector_counts) {
    CHECK(count == g.connector_count(static_cast<int>(cls)));
    CHECK(g.connector_length(static_cast<int>(cls)) == Rational(1, 1LL << cls));
  }
  // emitted classes are exactly 1..level
  CHECK(connector_counts.begin()->first == 1);
  CHECK(connector_counts.rbegin()->first == level);

  CHECK(g.schedule().verdict == Summability::diverging);
}

TEST_CASE("wild circle cyclic order visits every ray vertex once") {
  WildCircleGraph g(Rational(1), Rational(3, 2));
  int level = 5;
  Truncation t = g.truncate(level);
  std::vector<std::string> order = g.circle_order(level);
  CHECK(order.size() == static_cast<size_t>(t.graph.vertex_count()));
  std::set<std::string> seen(order.begin(), order.end());
  CHECK(seen.size() == order.size());
  for (const std::string& v : order) CHECK(t.graph.vertex_index(v) >= 0);
  // circle edges are exactly the ray edges
  std::vector<std::string> ce = g.circle_edges(level);
  for (const std::string& id : ce) CHECK(id.rfind("T:", 0) == 0);
}

TEST_CASE("lind generator validates the metric") {
  MetricSample bad_sym{{"a", "b"}, {{0.0, 1.0}, {2.0, 0.0}}};
  CHECK_THROWS_WITH_AS(make_lind(bad_sym), doctest::Contains("asymmetric"), error);
  MetricSample bad_tri{{"a", "b", "c"}, {{0, 1, 5}, {1, 0, 1}, {5, 1, 0}}};
  CHECK_THROWS_WITH_AS(make_lind(bad_tri), doctest::Contains("triangle inequality"), error);
  MetricSample bad_pos{{"a", "b"}, {{0.0, 0.0}, {0.0, 0.0}}};
  CHECK_THROWS_AS(make_lind(bad_pos), error);
}

TEST_CASE("lind single point is a ray with halving lengths") {
  auto g = make_lind(MetricSample{{"p"}, {{0.0}}});
  Truncation t = g->truncate(5);
  CHECK(t.graph.vertex_count() == 5);
  CHECK(t.graph.edge_count() == 4);
  for (const Edge& e : t.graph.edges()) {
    // vertical edge n has length 2^-n
    CHECK(e.len > 0.0);
    CHECK(Rational::from_double(e.len).num() == 1);
  }
  CHECK(t.frontier == std::vector<std::string>{"z5:p"});
  check_monotone(*g, 4);
}
