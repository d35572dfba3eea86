// ltop command line: generator invocation, metric and boundary analysis,
// cycle-space and tour transforms. Talks to the library exclusively through
// the C API in ltop/ltop.h.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ltop/ltop.h"

namespace {

using ordered_json = nlohmann::ordered_json;

template <typename T, void (*Free)(T*)>
struct Owned {
  T* p = nullptr;
  Owned() = default;
  Owned(const Owned&) = delete;
  Owned& operator=(const Owned&) = delete;
  Owned(Owned&& o) noexcept : p(o.p) { o.p = nullptr; }
  Owned& operator=(Owned&& o) noexcept {
    if (this != &o) {
      Free(p);
      p = o.p;
      o.p = nullptr;
    }
    return *this;
  }
  ~Owned() { Free(p); }
};

struct StringOut : Owned<char, ltop_string_free> {
  std::string str() const { return p ? std::string(p) : std::string(); }
};
using GraphHandle = Owned<ltop_graph, ltop_graph_free>;
using LazyHandle = Owned<ltop_lazy, ltop_lazy_free>;

int exit_code(ltop_status s) {
  switch (s) {
    case LTOP_OK: return 0;
    case LTOP_E_PARSE: return 3;
    case LTOP_E_INVALID: return 4;
    case LTOP_E_NOT_FOUND: return 5;
    case LTOP_E_PRECONDITION: return 6;
    default: return 70;
  }
}

[[noreturn]] void die(ltop_status s) {
  ordered_json err;
  err["error"] = exit_code(s);
  err["message"] = ltop_last_error();
  std::cerr << err.dump() << "\n";
  std::exit(exit_code(s));
}

void check(ltop_status s) {
  if (s != LTOP_OK) die(s);
}

[[noreturn]] void die_usage(const std::string& msg) {
  ordered_json err;
  err["error"] = 2;
  err["message"] = msg;
  std::cerr << err.dump() << "\n";
  std::exit(2);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) die_usage("cannot open file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(std::stoi(tok));
  return out;
}

std::vector<double> parse_double_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(std::stod(tok));
  return out;
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string resolve_out(const std::string& path) {
  if (path.empty() || path.front() == '/') return path;
  const char* dir = std::getenv("LTOP_OUT_DIR");
  if (!dir || !*dir) return path;
  return std::string(dir) + "/" + path;
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(resolve_out(path), std::ios::binary);
  if (!out) die_usage("cannot write file: " + path);
  out << bytes;
}

struct Emitter {
  std::string subcommand;
  ordered_json inputs;
  long long seed = 0;
  std::string out_path;

  void emit(ordered_json results) const {
    ordered_json rep;
    rep["subcommand"] = subcommand;
    rep["inputs"] = inputs;
    rep["results"] = std::move(results);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a(subcommand + inputs.dump() + std::to_string(seed))));
    rep["provenance"] = {{"tool", "ltop"}, {"version", ltop_version()}, {"config_hash", buf}, {"seed", seed}};
    std::string bytes = rep.dump(2) + "\n";
    std::cout << bytes;
    if (!out_path.empty()) write_file(out_path, bytes);
  }
};

GraphHandle load_graph(const std::string& path) {
  GraphHandle g;
  check(ltop_graph_from_json(read_file(path).c_str(), &g.p));
  return g;
}

LazyHandle open_gen(const std::string& spec, const std::string& floyd, const std::string& basepoint) {
  LazyHandle base;
  check(ltop_lazy_open(spec.c_str(), &base.p));
  if (floyd.empty()) return base;
  // "--floyd f=pow2" or "--floyd pow2"
  std::string decay = floyd.rfind("f=", 0) == 0 ? floyd.substr(2) : floyd;
  std::string p = basepoint;
  if (p.empty()) {
    StringOut root;
    check(ltop_lazy_root(base.p, &root.p));
    p = root.str();
  }
  LazyHandle wrapped;
  check(ltop_floyd_open(base.p, p.c_str(), decay.c_str(), &wrapped.p));
  return wrapped;
}

ordered_json parse_result(const StringOut& s) { return ordered_json::parse(s.str()); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"metric completions of edge-weighted graphs at desk scale"};
  app.require_subcommand(1);

  std::string out_path;
  long long seed = 0;
  app.add_option("--out", out_path, "also write the report JSON to this file (LTOP_OUT_DIR prefixes relative paths)");
  app.add_option("--seed", seed, "seed echoed into the report provenance");

  // common option holders
  std::string graph_path, gen_spec, from, to, root_vertex, element, metric_path;
  std::string floyd_decay, basepoint, levels_csv, eps_csv, csv_path, dot_path;
  int level = 0, depth = 0;
  double tau = 0.0, eps_mid = 1e-9;
  bool with_log = false, vertex_mode = true;

  auto* c_dist = app.add_subcommand("dist", "shortest-path distance with witness");
  c_dist->add_option("--graph", graph_path, "graph JSON file")->required();
  c_dist->add_option("--from", from)->required();
  c_dist->add_option("--to", to)->required();

  auto* c_quot = app.add_subcommand("quotient", "distance-tolerance vertex partition of a truncation");
  c_quot->add_option("--gen", gen_spec, "generator spec name?k=v&...")->required();
  c_quot->add_option("--level", level)->required();
  c_quot->add_option("--tau", tau)->required();

  auto* c_bound = app.add_subcommand("boundary", "frontier clustering profile over an exhaustion");
  c_bound->add_option("--gen", gen_spec)->required();
  c_bound->add_option("--floyd", floyd_decay, "reweight first: pow2, pow4, exp:L, const:S (f=... accepted)");
  c_bound->add_option("--basepoint", basepoint, "hop origin for --floyd (default: generator root)");
  c_bound->add_option("--levels", levels_csv, "comma-separated levels")->required();
  c_bound->add_option("--depth", depth, "distance depth, must exceed every level")->required();
  c_bound->add_option("--eps", eps_csv, "comma-separated resolutions (default 2^-1..2^-10)");
  c_bound->add_option("--csv", csv_path, "write the level,eps,cluster_count table here");

  auto* c_floyd = app.add_subcommand("floyd", "emit a hop-distance reweighted truncation");
  c_floyd->add_option("--gen", gen_spec)->required();
  c_floyd->add_option("--f", floyd_decay, "decay: pow2, pow4, exp:L, const:S")->required();
  c_floyd->add_option("--basepoint", basepoint);
  c_floyd->add_option("--level", level)->required();

  auto* c_nst = app.add_subcommand("nst", "depth-first tree length assignment");
  c_nst->add_option("--graph", graph_path)->required();
  c_nst->add_option("--root", root_vertex)->required();

  auto* c_lind = app.add_subcommand("lind", "boundary realization of a finite metric sample");
  c_lind->add_option("--metric", metric_path, "metric sample JSON file")->required();
  c_lind->add_option("--depth", depth)->required();

  auto* c_cyc = app.add_subcommand("cyclebasis", "fundamental cycles of a spanning forest");
  c_cyc->add_option("--graph", graph_path)->required();

  auto* c_geo = app.add_subcommand("geodetic", "write an element as a sum of geodetic cycles");
  c_geo->add_option("--graph", graph_path)->required();
  c_geo->add_option("--element", element, "comma-separated edge ids")->required();

  auto* c_euler = app.add_subcommand("euler", "Euler tour by circuit insertion");
  c_euler->add_option("--graph", graph_path)->required();
  c_euler->add_flag("--log", with_log, "include the insertion log");

  auto* c_ham = app.add_subcommand("hamilton-from-euler", "Hamilton cycle of the line graph from an Euler tour");
  c_ham->add_option("--graph", graph_path)->required();

  auto* c_lg = app.add_subcommand("linegraph", "line graph with induced lengths");
  c_lg->add_option("--graph", graph_path)->required();
  c_lg->add_option("--dot", dot_path, "also write DOT to this file");

  auto* c_ends = app.add_subcommand("ends", "growing components behind the canonical separator");
  c_ends->add_option("--gen", gen_spec)->required();
  c_ends->add_option("--level", level)->required();
  c_ends->add_flag("--edge-mode{false}", vertex_mode, "separate by core edges instead of core vertices");

  auto* c_mid = app.add_subcommand("midpoint", "approximate midpoint of a vertex pair");
  c_mid->add_option("--graph", graph_path)->required();
  c_mid->add_option("--from", from)->required();
  c_mid->add_option("--to", to)->required();
  c_mid->add_option("--eps", eps_mid);

  app.add_subcommand("gen-list", "generator catalog");
  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    die_usage(e.what());
  }

  Emitter em;
  em.seed = seed;
  em.out_path = out_path;
  CLI::App* sub = app.get_subcommands().front();
  em.subcommand = sub->get_name();

  if (sub == c_dist) {
    em.inputs = {{"graph", graph_path}, {"from", from}, {"to", to}};
    GraphHandle g = load_graph(graph_path);
    StringOut r;
    check(ltop_dist(g.p, from.c_str(), to.c_str(), &r.p));
    em.emit(parse_result(r));
  } else if (sub == c_quot) {
    em.inputs = {{"gen", gen_spec}, {"level", level}, {"tau", tau}};
    LazyHandle g = open_gen(gen_spec, "", "");
    StringOut r;
    check(ltop_quotient(g.p, level, tau, &r.p));
    em.emit(parse_result(r));
  } else if (sub == c_bound) {
    em.inputs = {{"gen", gen_spec}, {"floyd", floyd_decay}, {"levels", levels_csv},
                 {"depth", depth},  {"eps", eps_csv}};
    LazyHandle g = open_gen(gen_spec, floyd_decay, basepoint);
    std::vector<int> levels = parse_int_list(levels_csv);
    std::vector<double> eps = parse_double_list(eps_csv);
    if (eps.empty())
      for (int k = 1; k <= 10; ++k) eps.push_back(std::ldexp(1.0, -k));
    StringOut r, csv;
    check(ltop_boundary_profile(g.p, levels.data(), static_cast<int>(levels.size()), depth, eps.data(),
                                static_cast<int>(eps.size()), &r.p, &csv.p));
    if (!csv_path.empty()) write_file(csv_path, csv.str());
    em.emit(parse_result(r));
  } else if (sub == c_floyd) {
    em.inputs = {{"gen", gen_spec}, {"f", floyd_decay}, {"level", level}};
    LazyHandle g = open_gen(gen_spec, floyd_decay, basepoint);
    GraphHandle t;
    StringOut frontier;
    check(ltop_lazy_truncate(g.p, level, &t.p, &frontier.p));
    StringOut gj;
    check(ltop_graph_to_json(t.p, &gj.p));
    em.emit({{"graph", parse_result(gj)}, {"frontier", parse_result(frontier)}});
  } else if (sub == c_nst) {
    em.inputs = {{"graph", graph_path}, {"root", root_vertex}};
    GraphHandle g = load_graph(graph_path);
    StringOut r;
    check(ltop_nst_lengths(g.p, root_vertex.c_str(), &r.p));
    em.emit(parse_result(r));
  } else if (sub == c_lind) {
    em.inputs = {{"metric", metric_path}, {"depth", depth}};
    LazyHandle g;
    check(ltop_lind_open(read_file(metric_path).c_str(), &g.p));
    GraphHandle t;
    StringOut frontier;
    check(ltop_lazy_truncate(g.p, depth, &t.p, &frontier.p));
    StringOut gj, fd;
    check(ltop_graph_to_json(t.p, &gj.p));
    check(ltop_frontier_distances(g.p, depth, &fd.p));
    em.emit({{"graph", parse_result(gj)}, {"frontier_distances", parse_result(fd)}});
  } else if (sub == c_cyc) {
    em.inputs = {{"graph", graph_path}};
    GraphHandle g = load_graph(graph_path);
    StringOut r;
    check(ltop_cycle_basis(g.p, &r.p));
    em.emit(parse_result(r));
  } else if (sub == c_geo) {
    em.inputs = {{"graph", graph_path}, {"element", element}};
    GraphHandle g = load_graph(graph_path);
    StringOut r;
    check(ltop_geodetic_generate(g.p, element.c_str(), &r.p));
    em.emit(parse_result(r));
  } else if (sub == c_euler) {
    em.inputs = {{"graph", graph_path}, {"log", with_log}};
    GraphHandle g = load_graph(graph_path);
    StringOut r;
    check(ltop_euler_tour(g.p, with_log ? 1 : 0, &r.p));
    em.emit(parse_result(r));
  } else if (sub == c_ham) {
    em.inputs = {{"graph", graph_path}};
    GraphHandle g = load_graph(graph_path);
    StringOut r;
    check(ltop_hamilton_from_euler(g.p, &r.p));
    em.emit(parse_result(r));
  } else if (sub == c_lg) {
    em.inputs = {{"graph", graph_path}};
    GraphHandle g = load_graph(graph_path);
    GraphHandle L;
    check(ltop_line_graph(g.p, &L.p));
    StringOut gj;
    check(ltop_graph_to_json(L.p, &gj.p));
    if (!dot_path.empty()) {
      StringOut dot;
      check(ltop_graph_to_dot(L.p, &dot.p));
      write_file(dot_path, dot.str());
    }
    em.emit({{"graph", parse_result(gj)}});
  } else if (sub == c_ends) {
    em.inputs = {{"gen", gen_spec}, {"level", level}, {"mode", vertex_mode ? "vertex" : "edge"}};
    LazyHandle g = open_gen(gen_spec, "", "");
    StringOut r;
    check(ltop_ends(g.p, level, vertex_mode ? 1 : 0, &r.p));
    em.emit(parse_result(r));
  } else if (sub == c_mid) {
    em.inputs = {{"graph", graph_path}, {"from", from}, {"to", to}, {"eps", eps_mid}};
    GraphHandle g = load_graph(graph_path);
    StringOut r;
    check(ltop_midpoint(g.p, from.c_str(), to.c_str(), eps_mid, &r.p));
    em.emit(parse_result(r));
  } else {  // gen-list
    em.inputs = ordered_json::object();
    StringOut r;
    check(ltop_gen_list(&r.p));
    em.emit(parse_result(r));
  }
  return 0;
}
