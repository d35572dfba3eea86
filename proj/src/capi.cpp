#include "ltop/ltop.h"

#include <cmath>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>

#include "completion.hpp"
#include "cyclespace.hpp"
#include "graph.hpp"
#include "json_io.hpp"
#include "lazy.hpp"
#include "metric.hpp"
#include "tours.hpp"

struct ltop_graph {
  ltop::WeightedGraph g;
};

struct ltop_lazy {
  std::shared_ptr<const ltop::LazyGraph> g;
};

namespace {

thread_local std::string g_last_error;

ltop_status map_code(ltop::errc c) {
  switch (c) {
    case ltop::errc::invalid_argument: return LTOP_E_INVALID;
    case ltop::errc::parse: return LTOP_E_PARSE;
    case ltop::errc::not_found: return LTOP_E_NOT_FOUND;
    case ltop::errc::precondition: return LTOP_E_PRECONDITION;
    default: return LTOP_E_INTERNAL;
  }
}

template <typename Fn>
ltop_status guard(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return LTOP_OK;
  } catch (const ltop::error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LTOP_E_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

char* dup_json(const ltop::ordered_json& j) { return dup_string(j.dump(2)); }

std::vector<int> int_list(const int* data, int n) {
  if (n < 0 || (n > 0 && !data)) ltop::fail(ltop::errc::invalid_argument, "bad level list");
  return std::vector<int>(data, data + n);
}

void require(const void* p, const char* what) {
  if (!p) ltop::fail(ltop::errc::invalid_argument, std::string("null ") + what);
}

std::vector<std::string> split_ids(const char* csv) {
  require(csv, "edge list");
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string id;
  while (std::getline(ss, id, ','))
    if (!id.empty()) out.push_back(id);
  return out;
}

}  // namespace

extern "C" {

const char* ltop_version(void) { return "0.1.0"; }

const char* ltop_last_error(void) { return g_last_error.c_str(); }

void ltop_string_free(char* s) { std::free(s); }

ltop_status ltop_graph_from_json(const char* json, ltop_graph** out) {
  return guard([&] {
    require(json, "json");
    require(out, "out");
    auto h = std::make_unique<ltop_graph>();
    h->g = ltop::graph_from_json(json);
    *out = h.release();
  });
}

ltop_status ltop_graph_to_json(const ltop_graph* g, char** out_json) {
  return guard([&] {
    require(g, "graph");
    require(out_json, "out");
    *out_json = dup_json(ltop::graph_to_json(g->g));
  });
}

ltop_status ltop_graph_to_dot(const ltop_graph* g, char** out_dot) {
  return guard([&] {
    require(g, "graph");
    require(out_dot, "out");
    *out_dot = dup_string(ltop::graph_to_dot(g->g));
  });
}

ltop_status ltop_graph_counts(const ltop_graph* g, int64_t* vertices, int64_t* edges) {
  return guard([&] {
    require(g, "graph");
    if (vertices) *vertices = g->g.vertex_count();
    if (edges) *edges = g->g.edge_count();
  });
}

void ltop_graph_free(ltop_graph* g) { delete g; }

ltop_status ltop_lazy_open(const char* spec, ltop_lazy** out) {
  return guard([&] {
    require(spec, "spec");
    require(out, "out");
    auto h = std::make_unique<ltop_lazy>();
    h->g = ltop::make_generator(spec);
    *out = h.release();
  });
}

ltop_status ltop_lind_open(const char* sample_json, ltop_lazy** out) {
  return guard([&] {
    require(sample_json, "sample");
    require(out, "out");
    auto h = std::make_unique<ltop_lazy>();
    h->g = ltop::make_lind(ltop::sample_from_json(sample_json));
    *out = h.release();
  });
}

ltop_status ltop_floyd_open(const ltop_lazy* base, const char* basepoint, const char* decay, ltop_lazy** out) {
  return guard([&] {
    require(base, "base");
    require(basepoint, "basepoint");
    require(decay, "decay");
    require(out, "out");
    auto h = std::make_unique<ltop_lazy>();
    h->g = ltop::floyd_lengths(base->g, basepoint, ltop::DecayFunction::parse(decay));
    *out = h.release();
  });
}

void ltop_lazy_free(ltop_lazy* g) { delete g; }

ltop_status ltop_lazy_truncate(const ltop_lazy* g, int level, ltop_graph** out_graph,
                               char** out_frontier_json) {
  return guard([&] {
    require(g, "generator");
    ltop::Truncation t = g->g->truncate(level);
    if (out_graph) {
      auto h = std::make_unique<ltop_graph>();
      h->g = std::move(t.graph);
      *out_graph = h.release();
    }
    if (out_frontier_json) *out_frontier_json = dup_json(ltop::ordered_json(t.frontier));
  });
}

ltop_status ltop_lazy_total_length(const ltop_lazy* g, const int* levels, int n_levels, char** out_json) {
  return guard([&] {
    require(g, "generator");
    require(out_json, "out");
    *out_json = dup_json(ltop::to_json(ltop::total_length_report(*g->g, int_list(levels, n_levels))));
  });
}

ltop_status ltop_lazy_root(const ltop_lazy* g, char** out_vertex) {
  return guard([&] {
    require(g, "generator");
    require(out_vertex, "out");
    *out_vertex = dup_string(g->g->root());
  });
}

ltop_status ltop_frontier_distances(const ltop_lazy* g, int level, char** out_json) {
  return guard([&] {
    require(g, "generator");
    require(out_json, "out");
    ltop::Truncation t = g->g->truncate(level);
    std::vector<std::string> frontier = t.frontier;
    ltop::ordered_json j;
    j["level"] = level;
    j["frontier"] = frontier;
    ltop::ordered_json matrix = ltop::ordered_json::array();
    for (const std::string& a : frontier) {
      std::vector<double> d = ltop::dijkstra(t.graph, t.graph.require_vertex(a));
      ltop::ordered_json row = ltop::ordered_json::array();
      for (const std::string& b : frontier) {
        double v = d[t.graph.require_vertex(b)];
        row.push_back(std::isinf(v) ? ltop::ordered_json(nullptr) : ltop::ordered_json(v));
      }
      matrix.push_back(std::move(row));
    }
    j["matrix"] = std::move(matrix);
    *out_json = dup_json(j);
  });
}

ltop_status ltop_gen_list(char** out_json) {
  return guard([&] {
    require(out_json, "out");
    *out_json = dup_json(ltop::catalog_json());
  });
}

ltop_status ltop_dist(const ltop_graph* g, const char* from, const char* to, char** out_json) {
  return guard([&] {
    require(g, "graph");
    require(from, "from");
    require(to, "to");
    require(out_json, "out");
    *out_json = dup_json(ltop::to_json(ltop::dist(g->g, from, to)));
  });
}

ltop_status ltop_dist_limit(const ltop_lazy* g, const char* from, const char* to, const int* levels,
                            int n_levels, char** out_json) {
  return guard([&] {
    require(g, "generator");
    require(from, "from");
    require(to, "to");
    require(out_json, "out");
    *out_json = dup_json(ltop::to_json(ltop::dist_limit(*g->g, from, to, int_list(levels, n_levels))));
  });
}

ltop_status ltop_quotient(const ltop_lazy* g, int level, double tau, char** out_json) {
  return guard([&] {
    require(g, "generator");
    require(out_json, "out");
    *out_json = dup_json(ltop::to_json(ltop::quotient(*g->g, level, tau)));
  });
}

ltop_status ltop_midpoint(const ltop_graph* g, const char* x, const char* y, double eps, char** out_json) {
  return guard([&] {
    require(g, "graph");
    require(x, "x");
    require(y, "y");
    require(out_json, "out");
    *out_json = dup_json(ltop::to_json(ltop::approximate_midpoint(g->g, x, y, eps)));
  });
}

ltop_status ltop_boundary_profile(const ltop_lazy* g, const int* levels, int n_levels, int depth,
                                  const double* eps, int n_eps, char** out_json, char** out_csv) {
  return guard([&] {
    require(g, "generator");
    if (n_eps <= 0 || !eps) ltop::fail(ltop::errc::invalid_argument, "eps grid is empty");
    ltop::BoundaryProfile prof =
        ltop::boundary_profile(*g->g, int_list(levels, n_levels), depth, std::vector<double>(eps, eps + n_eps));
    if (out_json) *out_json = dup_json(ltop::to_json(prof));
    if (out_csv) *out_csv = dup_string(ltop::boundary_csv(prof));
  });
}

ltop_status ltop_ends(const ltop_lazy* g, int level, int vertex_mode, char** out_json) {
  return guard([&] {
    require(g, "generator");
    require(out_json, "out");
    *out_json = dup_json(ltop::to_json(ltop::ends(*g->g, level, vertex_mode != 0)));
  });
}

ltop_status ltop_nst_lengths(const ltop_graph* g, const char* root, char** out_json) {
  return guard([&] {
    require(g, "graph");
    require(root, "root");
    require(out_json, "out");
    *out_json = dup_json(ltop::to_json(ltop::nst_lengths(g->g, root)));
  });
}

ltop_status ltop_cycle_basis(const ltop_graph* g, char** out_json) {
  return guard([&] {
    require(g, "graph");
    require(out_json, "out");
    ltop::ordered_json arr = ltop::ordered_json::array();
    for (const auto& el : ltop::cycle_basis(g->g)) arr.push_back(ltop::to_json(el));
    *out_json = dup_json(arr);
  });
}

ltop_status ltop_geodetic_generate(const ltop_graph* g, const char* element, char** out_json) {
  return guard([&] {
    require(g, "graph");
    require(out_json, "out");
    *out_json = dup_json(ltop::to_json(ltop::geodetic_generate(g->g, split_ids(element))));
  });
}

ltop_status ltop_line_graph(const ltop_graph* g, ltop_graph** out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    auto h = std::make_unique<ltop_graph>();
    h->g = ltop::line_graph(g->g);
    *out = h.release();
  });
}

ltop_status ltop_euler_tour(const ltop_graph* g, int with_log, char** out_json) {
  return guard([&] {
    require(g, "graph");
    require(out_json, "out");
    ltop::EulerResult r = ltop::euler_tour(g->g);
    *out_json = dup_json(with_log ? ltop::to_json(r) : ltop::to_json(r.tour));
  });
}

ltop_status ltop_hamilton_from_euler(const ltop_graph* g, char** out_json) {
  return guard([&] {
    require(g, "graph");
    require(out_json, "out");
    ltop::EulerResult euler = ltop::euler_tour(g->g);
    ltop::HamiltonResult ham = ltop::euler_to_hamilton(g->g, euler.tour);
    ltop::WeightedGraph L = ltop::line_graph(g->g);
    ltop::HamiltonCheck chk = ltop::hamilton_verify(L, ham.tour);
    ltop::ordered_json j;
    j["euler"] = ltop::to_json(euler.tour);
    j["hamilton"] = ltop::to_json(ham.tour);
    j["cycle_length"] = ham.cycle_length;
    j["total_length"] = g->g.total_length();
    j["verified"] = ltop::to_json(chk);
    *out_json = dup_json(j);
  });
}

}  // extern "C"
