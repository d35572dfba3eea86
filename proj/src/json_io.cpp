#include "json_io.hpp"

#include <cmath>
#include <sstream>

namespace ltop {

namespace {

nlohmann::ordered_json parse(const std::string& text, const char* what) {
  try {
    return nlohmann::ordered_json::parse(text);
  } catch (const std::exception& e) {
    fail(errc::parse, std::string("malformed ") + what + " JSON: " + e.what());
  }
}

}  // namespace

WeightedGraph graph_from_json(const std::string& text) {
  ordered_json j = parse(text, "graph");
  WeightedGraph g;
  try {
    for (const auto& v : j.at("vertices")) g.add_vertex(v.at("id").get<std::string>());
    for (const auto& e : j.at("edges"))
      g.add_edge(e.at("id").get<std::string>(), e.at("u").get<std::string>(), e.at("v").get<std::string>(),
                 e.at("len").get<double>());
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse, std::string("graph JSON needs vertices[{id}] and edges[{id,u,v,len}]: ") + e.what());
  }
  return g;
}

ordered_json graph_to_json(const WeightedGraph& g) {
  ordered_json j;
  j["vertices"] = ordered_json::array();
  for (int v = 0; v < g.vertex_count(); ++v) j["vertices"].push_back({{"id", g.vertex_id(v)}});
  j["edges"] = ordered_json::array();
  for (const Edge& e : g.edges())
    j["edges"].push_back(
        {{"id", e.id}, {"u", g.vertex_id(e.u)}, {"v", g.vertex_id(e.v)}, {"len", e.len}});
  return j;
}

std::string graph_to_dot(const WeightedGraph& g) {
  std::ostringstream os;
  os << "graph {\n";
  for (int v = 0; v < g.vertex_count(); ++v) os << "  \"" << g.vertex_id(v) << "\";\n";
  char buf[64];
  for (const Edge& e : g.edges()) {
    std::snprintf(buf, sizeof buf, "%.17g", e.len);
    os << "  \"" << g.vertex_id(e.u) << "\" -- \"" << g.vertex_id(e.v) << "\" [id=\"" << e.id
       << "\", len=" << buf << "];\n";
  }
  os << "}\n";
  return os.str();
}

MetricSample sample_from_json(const std::string& text) {
  ordered_json j = parse(text, "metric sample");
  MetricSample s;
  try {
    for (const auto& p : j.at("points")) s.points.push_back(p.get<std::string>());
    for (const auto& row : j.at("d")) {
      std::vector<double> r;
      for (const auto& x : row) r.push_back(x.get<double>());
      s.d.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse, std::string("metric sample JSON needs {points:[...], d:[[...]]}: ") + e.what());
  }
  return s;
}

ordered_json to_json(const DistanceResult& r) {
  ordered_json j;
  j["from"] = r.from;
  j["to"] = r.to;
  j["unreachable"] = r.unreachable;
  j["value"] = r.unreachable ? ordered_json(nullptr) : ordered_json(r.value);
  j["witness"] = r.witness;
  return j;
}

ordered_json to_json(const std::vector<LevelDistance>& seq) {
  ordered_json arr = ordered_json::array();
  for (const LevelDistance& ld : seq) {
    ordered_json j;
    j["level"] = ld.level;
    if (ld.skipped) {
      j["skipped"] = true;
      j["note"] = "vertex not yet emitted at this level";
    } else {
      j["result"] = to_json(ld.result);
    }
    arr.push_back(std::move(j));
  }
  return arr;
}

ordered_json to_json(const QuotientPartition& p) {
  ordered_json j;
  j["tau"] = p.tau;
  j["level"] = p.level;
  j["class_count"] = p.classes.size();
  j["classes"] = ordered_json::array();
  for (const QuotientClass& c : p.classes)
    j["classes"].push_back({{"members", c.members}, {"shrinking", c.shrinking}});
  return j;
}

ordered_json to_json(const GeodeticCheck& c) {
  ordered_json j;
  j["geodetic"] = c.geodetic;
  if (!c.geodetic) {
    j["violation"] = {{"x", c.x},
                      {"y", c.y},
                      {"arc_min", c.arc_min},
                      {"distance", c.distance},
                      {"shorter_path", c.shorter_path}};
  }
  return j;
}

ordered_json to_json(const PointRef& p) {
  if (p.is_vertex()) return {{"vertex", p.vertex}};
  return {{"edge", p.edge}, {"offset", p.offset}};
}

ordered_json to_json(const EndDecomposition& d) {
  ordered_json j;
  j["level"] = d.level;
  j["mode"] = d.vertex_mode ? "vertex" : "edge";
  j["separator_level"] = d.separator_level;
  j["end_count"] = d.components.size();
  j["components"] = ordered_json::array();
  for (const EndComponent& c : d.components)
    j["components"].push_back({{"size", c.vertices.size()}, {"ray", c.ray}, {"vertices", c.vertices}});
  return j;
}

ordered_json to_json(const BoundaryProfile& p) {
  ordered_json j;
  j["depth"] = p.depth;
  j["eps"] = p.eps;
  j["levels"] = ordered_json::array();
  for (const BoundaryLevel& lvl : p.levels) {
    ordered_json lj;
    lj["level"] = lvl.level;
    lj["frontier_size"] = lvl.frontier.size();
    lj["frontier"] = lvl.frontier;
    lj["per_eps"] = ordered_json::array();
    for (const BoundaryEpsSlice& s : lvl.per_eps) {
      ordered_json sj;
      sj["eps"] = s.eps;
      sj["cluster_count"] = s.clusters.size();
      sj["linked_group_count"] = s.linked_group_count;
      sj["clusters"] = ordered_json::array();
      for (const BoundaryCluster& c : s.clusters)
        sj["clusters"].push_back(
            {{"center", c.center}, {"end_component", c.end_component}, {"members", c.members}});
      sj["center_dist"] = s.center_dist;
      lj["per_eps"].push_back(std::move(sj));
    }
    j["levels"].push_back(std::move(lj));
  }
  return j;
}

std::string boundary_csv(const BoundaryProfile& p) {
  std::ostringstream os;
  os << "level,eps,cluster_count\n";
  char buf[64];
  for (const BoundaryLevel& lvl : p.levels)
    for (const BoundaryEpsSlice& s : lvl.per_eps) {
      std::snprintf(buf, sizeof buf, "%.17g", s.eps);
      os << lvl.level << "," << buf << "," << s.clusters.size() << "\n";
    }
  return os.str();
}

ordered_json to_json(const NstAssignment& a) {
  ordered_json j;
  j["root"] = a.root;
  j["levels"] = a.level;
  j["tree_edges"] = a.tree_edges;
  j["assignment"] = a.assignment;
  return j;
}

ordered_json to_json(const CombOrStar& c) {
  ordered_json j;
  j["kind"] = c.kind;
  j["count"] = c.count;
  j["budget"] = c.budget_used;
  if (c.kind == "comb") j["spine"] = c.spine;
  if (c.kind == "star") j["center"] = c.center;
  if (c.kind != "inconclusive") j["legs"] = c.legs;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

ordered_json to_json(const CycleSpaceElement& e) {
  return {{"edges", e.edges}, {"total_length", e.total_length}};
}

ordered_json to_json(const CircuitFamily& f) {
  ordered_json j;
  j["circuits"] = ordered_json::array();
  for (const CycleSpaceElement& c : f.circuits) j["circuits"].push_back(to_json(c));
  j["total_length"] = f.total_length;
  j["occurrence"] = f.occurrence;
  return j;
}

ordered_json to_json(const GeodeticFamily& f) {
  ordered_json j = to_json(f.family);
  ordered_json trace = ordered_json::array();
  for (const SplitStep& s : f.trace)
    trace.push_back({{"replaced_length", s.replaced_length}, {"piece_lengths", s.piece_lengths}});
  j["trace"] = std::move(trace);
  return j;
}

ordered_json to_json(const ThinSumResult& r) {
  ordered_json j;
  j["sum"] = to_json(r.sum);
  j["family_total_length"] = r.family_total;
  j["max_occurrence"] = r.max_occurrence;
  j["thin"] = true;  // finite families are always thin; the figure above is the admissibility datum
  return j;
}

ordered_json to_json(const Tour& t) {
  if (t.kind == "euler") return {{"kind", "euler"}, {"edges", t.edges}};
  return {{"kind", "hamilton"}, {"vertices", t.vertices}};
}

Tour tour_from_json(const std::string& text) {
  ordered_json j = parse(text, "tour");
  Tour t;
  try {
    t.kind = j.at("kind").get<std::string>();
    if (t.kind == "euler")
      for (const auto& e : j.at("edges")) t.edges.push_back(e.get<std::string>());
    else if (t.kind == "hamilton")
      for (const auto& v : j.at("vertices")) t.vertices.push_back(v.get<std::string>());
    else
      fail(errc::parse, "tour kind must be euler or hamilton");
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse, std::string("malformed tour JSON: ") + e.what());
  }
  return t;
}

ordered_json to_json(const EulerResult& r) {
  ordered_json j;
  j["tour"] = to_json(r.tour);
  j["initial_cycle"] = r.initial_cycle;
  j["insertions"] = ordered_json::array();
  for (const InsertionStep& s : r.log) j["insertions"].push_back({{"at", s.at}, {"circuit", s.circuit}});
  return j;
}

ordered_json to_json(const OddCutReport& r) {
  ordered_json j;
  j["pass"] = r.pass;
  j["odd_vertices"] = r.odd_vertices;
  j["odd_frontier"] = r.odd_frontier;
  if (!r.pass) j["witness"] = r.odd_vertices.front();
  return j;
}

ordered_json to_json(const HamiltonCheck& c) {
  ordered_json j;
  j["ok"] = c.ok;
  if (!c.ok) {
    j["violation"] = c.violation;
    j["detail"] = c.detail;
  }
  return j;
}

ordered_json to_json(const TotalLengthReport& r) {
  ordered_json j;
  j["partial_sums"] = ordered_json::array();
  for (auto& [level, sum] : r.partial_sums) j["partial_sums"].push_back({{"level", level}, {"sum", sum}});
  switch (r.verdict) {
    case Summability::converging: j["verdict"] = "converging"; break;
    case Summability::diverging: j["verdict"] = "diverging"; break;
    default: j["verdict"] = "unknown"; break;
  }
  if (r.declared_total) j["declared_total"] = r.declared_total->str();
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

ordered_json catalog_json() {
  ordered_json arr = ordered_json::array();
  for (const GeneratorInfo& info : generator_catalog()) {
    ordered_json j;
    j["name"] = info.name;
    j["status"] = info.available ? "available" : "unavailable";
    j["doc"] = info.doc;
    j["params"] = ordered_json::array();
    for (const ParamDoc& p : info.params)
      j["params"].push_back({{"name", p.name}, {"default", p.value}, {"doc", p.doc}});
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace ltop
