// Exercises the shared library strictly through the C interface.
#include <cstring>
#include <string>

#include "doctest.h"

#include "json.hpp"
#include "ltop/ltop.h"

namespace {

const char* kTriangle = R"({"vertices":[{"id":"a"},{"id":"b"},{"id":"c"}],
  "edges":[{"id":"e1","u":"a","v":"b","len":1.0},
           {"id":"e2","u":"b","v":"c","len":1.0},
           {"id":"e3","u":"a","v":"c","len":3.0}]})";

std::string take(char* s) {
  std::string out = s ? s : "";
  ltop_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("graph round trip and counts") {
  ltop_graph* g = nullptr;
  REQUIRE(ltop_graph_from_json(kTriangle, &g) == LTOP_OK);
  int64_t nv = 0, ne = 0;
  CHECK(ltop_graph_counts(g, &nv, &ne) == LTOP_OK);
  CHECK(nv == 3);
  CHECK(ne == 3);
  char* out = nullptr;
  REQUIRE(ltop_graph_to_json(g, &out) == LTOP_OK);
  std::string text = take(out);
  ltop_graph* h = nullptr;
  REQUIRE(ltop_graph_from_json(text.c_str(), &h) == LTOP_OK);
  char* again = nullptr;
  REQUIRE(ltop_graph_to_json(h, &again) == LTOP_OK);
  CHECK(take(again) == text);
  ltop_graph_free(g);
  ltop_graph_free(h);
}

TEST_CASE("error codes and messages") {
  ltop_graph* g = nullptr;
  CHECK(ltop_graph_from_json("{bad", &g) == LTOP_E_PARSE);
  CHECK(std::string(ltop_last_error()).find("malformed") != std::string::npos);

  const char* zero = R"({"vertices":[{"id":"a"},{"id":"b"}],
    "edges":[{"id":"e","u":"a","v":"b","len":0.0}]})";
  CHECK(ltop_graph_from_json(zero, &g) == LTOP_E_INVALID);
  CHECK(std::string(ltop_last_error()).find("nonpositive") != std::string::npos);

  ltop_lazy* lz = nullptr;
  CHECK(ltop_lazy_open("no-such", &lz) == LTOP_E_NOT_FOUND);
  CHECK(ltop_graph_from_json(nullptr, &g) == LTOP_E_INVALID);
}

TEST_CASE("distances through the C surface") {
  ltop_graph* g = nullptr;
  REQUIRE(ltop_graph_from_json(kTriangle, &g) == LTOP_OK);
  char* out = nullptr;
  REQUIRE(ltop_dist(g, "a", "c", &out) == LTOP_OK);
  auto j = nlohmann::json::parse(take(out));
  CHECK(j["value"] == 2.0);
  CHECK(j["witness"] == nlohmann::json({"e1", "e2"}));
  CHECK(ltop_dist(g, "a", "zz", &out) == LTOP_E_NOT_FOUND);
  ltop_graph_free(g);
}

TEST_CASE("generators, truncation, frontier") {
  ltop_lazy* lz = nullptr;
  REQUIRE(ltop_lazy_open("fan?len=shrinking", &lz) == LTOP_OK);
  char* root = nullptr;
  REQUIRE(ltop_lazy_root(lz, &root) == LTOP_OK);
  CHECK(take(root) == "x");

  ltop_graph* t = nullptr;
  char* frontier = nullptr;
  REQUIRE(ltop_lazy_truncate(lz, 3, &t, &frontier) == LTOP_OK);
  auto fr = nlohmann::json::parse(take(frontier));
  CHECK(fr == nlohmann::json({"x", "y", "v3"}));
  int64_t nv = 0, ne = 0;
  ltop_graph_counts(t, &nv, &ne);
  CHECK(nv == 6);   // x, y, v0..v3
  CHECK(ne == 11);  // 4+4 legs, 3 rails
  ltop_graph_free(t);

  char* rep = nullptr;
  int levels[] = {1, 3, 5};
  REQUIRE(ltop_lazy_total_length(lz, levels, 3, &rep) == LTOP_OK);
  auto j = nlohmann::json::parse(take(rep));
  CHECK(j["verdict"] == "converging");
  CHECK(j["declared_total"] == "5");
  ltop_lazy_free(lz);
}

TEST_CASE("floyd wrapper and boundary through the C surface") {
  ltop_lazy* base = nullptr;
  REQUIRE(ltop_lazy_open("hyperbolic-strip", &base) == LTOP_OK);
  ltop_lazy* fl = nullptr;
  REQUIRE(ltop_floyd_open(base, "h0_0", "pow2", &fl) == LTOP_OK);
  ltop_lazy_free(base);  // the wrapper keeps its own reference

  int levels[] = {4};
  double eps[] = {0.5, 0.25};
  char* json = nullptr;
  char* csv = nullptr;
  REQUIRE(ltop_boundary_profile(fl, levels, 1, 8, eps, 2, &json, &csv) == LTOP_OK);
  auto j = nlohmann::json::parse(take(json));
  CHECK(j["levels"][0]["frontier_size"] == 17);  // column 4 has 2^4+1 vertices
  std::string table = take(csv);
  CHECK(table.rfind("level,eps,cluster_count\n", 0) == 0);
  CHECK(ltop_boundary_profile(fl, levels, 1, 4, eps, 2, &json, &csv) == LTOP_E_PRECONDITION);
  ltop_lazy_free(fl);
}

TEST_CASE("tours through the C surface") {
  ltop_graph* g = nullptr;
  const char* sq = R"({"vertices":[{"id":"a"},{"id":"b"},{"id":"c"},{"id":"d"}],
    "edges":[{"id":"e1","u":"a","v":"b","len":0.5},{"id":"e2","u":"b","v":"c","len":0.5},
             {"id":"e3","u":"c","v":"d","len":0.5},{"id":"e4","u":"d","v":"a","len":0.5}]})";
  REQUIRE(ltop_graph_from_json(sq, &g) == LTOP_OK);
  char* out = nullptr;
  REQUIRE(ltop_hamilton_from_euler(g, &out) == LTOP_OK);
  auto j = nlohmann::json::parse(take(out));
  CHECK(j["verified"]["ok"] == true);
  CHECK(j["cycle_length"] == j["total_length"]);
  ltop_graph_free(g);
}
