#include "tours.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace ltop {

OddCutReport odd_cut_check(const WeightedGraph& g, const std::vector<std::string>& frontier) {
  std::unordered_set<std::string> fr(frontier.begin(), frontier.end());
  OddCutReport rep;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) % 2 == 0) continue;
    if (fr.count(g.vertex_id(v)))
      rep.odd_frontier.push_back(g.vertex_id(v));
    else
      rep.odd_vertices.push_back(g.vertex_id(v));
  }
  rep.pass = rep.odd_vertices.empty();
  return rep;
}

namespace {

// Greedy closed walk from `start` over the unused edges, smallest edge id
// first. With all unused degrees even the walk can only get stuck back at
// the start.
std::vector<int> closed_walk(const WeightedGraph& g, int start, std::set<int>& unused) {
  std::vector<int> walk;
  int cur = start;
  while (true) {
    int next = -1;
    for (int e : g.incident(cur))
      if (unused.count(e) && (next < 0 || g.edge(e).id < g.edge(next).id)) next = e;
    if (next < 0) break;
    unused.erase(next);
    walk.push_back(next);
    cur = g.other_end(next, cur);
  }
  if (cur != start) fail(errc::internal, "closed walk ended away from its start");
  return walk;
}

}  // namespace

EulerResult euler_tour(const WeightedGraph& g) {
  if (g.edge_count() == 0) fail(errc::precondition, "graph has no edges");
  OddCutReport parity = odd_cut_check(g);
  if (!parity.pass)
    fail(errc::precondition, "odd cut witness: vertex " + parity.odd_vertices.front() + " has odd degree");
  {
    // connectivity over the vertices that carry edges
    auto comp = g.component_ids();
    int want = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) == 0) continue;
      if (want < 0) want = comp[v];
      if (comp[v] != want) fail(errc::precondition, "graph is disconnected");
    }
  }

  std::set<int> unused;
  for (int e = 0; e < g.edge_count(); ++e) unused.insert(e);

  EulerResult res;
  // initial simple cycle through the smallest edge id
  int first = 0;
  for (int e = 0; e < g.edge_count(); ++e)
    if (g.edge(e).id < g.edge(first).id) first = e;
  {
    // walk greedily until a vertex repeats, keep the enclosed cycle
    std::vector<int> walk;
    std::vector<int> at{g.edge(first).u};
    std::unordered_map<int, int> pos{{g.edge(first).u, 0}};
    int cur = g.edge(first).u;
    std::set<int> taken = unused;
    while (true) {
      int next = -1;
      for (int e : g.incident(cur))
        if (taken.count(e) && (next < 0 || g.edge(e).id < g.edge(next).id)) next = e;
      if (next < 0) fail(errc::internal, "even-degree walk got stuck");
      taken.erase(next);
      walk.push_back(next);
      cur = g.other_end(next, cur);
      auto it = pos.find(cur);
      if (it != pos.end()) {
        for (size_t i = it->second; i < walk.size(); ++i) {
          res.tour.edges.push_back(g.edge(walk[i]).id);
          unused.erase(walk[i]);
        }
        break;
      }
      pos[cur] = static_cast<int>(at.size());
      at.push_back(cur);
    }
  }
  res.tour.kind = "euler";
  res.initial_cycle = res.tour.edges;

  // tour as an explicit vertex/edge alternation for splicing
  auto tour_vertices = [&]() {
    std::vector<int> vs;
    int e0 = g.require_edge(res.tour.edges.front());
    // find the starting endpoint consistent with the full walk
    for (int cand : {g.edge(e0).u, g.edge(e0).v}) {
      int cur = cand;
      bool ok = true;
      for (const std::string& id : res.tour.edges) {
        const Edge& ed = g.edge(g.require_edge(id));
        if (ed.u == cur)
          cur = ed.v;
        else if (ed.v == cur)
          cur = ed.u;
        else {
          ok = false;
          break;
        }
      }
      if (ok && cur == cand) {
        vs.clear();
        cur = cand;
        vs.push_back(cur);
        for (const std::string& id : res.tour.edges) {
          cur = g.other_end(g.require_edge(id), cur);
          vs.push_back(cur);
        }
        return vs;
      }
    }
    fail(errc::internal, "tour lost its vertex alternation");
  };

  while (!unused.empty()) {
    std::vector<int> vs = tour_vertices();
    std::unordered_set<int> on_tour(vs.begin(), vs.end());
    // remainder components and their attachment vertices
    std::unordered_map<int, int> comp;
    int ncomp = 0;
    for (int e : unused) {
      for (int v : {g.edge(e).u, g.edge(e).v})
        if (!comp.count(v)) {
          // flood this remainder component
          std::vector<int> stack{v};
          comp[v] = ncomp;
          while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int f : g.incident(u)) {
              if (!unused.count(f)) continue;
              int w = g.other_end(f, u);
              if (!comp.count(w)) {
                comp[w] = ncomp;
                stack.push_back(w);
              }
            }
          }
          ++ncomp;
        }
    }
    // smallest attachment vertex per component that touches the tour
    std::vector<int> attach(ncomp, -1);
    for (auto& [v, c] : comp) {
      if (!on_tour.count(v)) continue;
      if (attach[c] < 0 || g.vertex_id(v) < g.vertex_id(attach[c])) attach[c] = v;
    }
    bool progressed = false;
    for (int c = 0; c < ncomp; ++c) {
      if (attach[c] < 0) continue;  // reached through a later splice
      int v = attach[c];
      std::vector<int> circuit = closed_walk(g, v, unused);
      if (circuit.empty()) continue;
      InsertionStep step;
      step.at = g.vertex_id(v);
      for (int e : circuit) step.circuit.push_back(g.edge(e).id);
      // splice at the first occurrence of v in the current tour
      vs = tour_vertices();
      size_t at_pos = 0;
      while (at_pos < vs.size() && vs[at_pos] != v) ++at_pos;
      if (at_pos >= vs.size()) fail(errc::internal, "attachment vertex fell off the tour");
      res.tour.edges.insert(res.tour.edges.begin() + at_pos, step.circuit.begin(), step.circuit.end());
      res.log.push_back(std::move(step));
      progressed = true;
    }
    if (!progressed) fail(errc::internal, "no remainder component touches the tour");
  }

  std::string why;
  if (!euler_verify(g, res.tour, &why)) fail(errc::internal, "constructed tour is invalid: " + why);
  return res;
}

bool euler_verify(const WeightedGraph& g, const Tour& t, std::string* why) {
  auto explain = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (t.kind != "euler") return explain("tour kind is not euler");
  if (t.edges.empty()) return explain("tour is empty");
  if (t.edges.size() != static_cast<size_t>(g.edge_count()))
    return explain("tour does not traverse every edge exactly once");
  std::unordered_set<std::string> seen;
  for (const std::string& id : t.edges) {
    if (g.edge_index(id) < 0) return explain("unknown edge " + id);
    if (!seen.insert(id).second) return explain("edge " + id + " traversed twice");
  }
  // consecutive edges must chain through shared endpoints, closing up
  int e0 = g.require_edge(t.edges.front());
  for (int start : {g.edge(e0).u, g.edge(e0).v}) {
    int cur = start;
    bool ok = true;
    for (const std::string& id : t.edges) {
      const Edge& ed = g.edge(g.require_edge(id));
      if (ed.u == cur)
        cur = ed.v;
      else if (ed.v == cur)
        cur = ed.u;
      else {
        ok = false;
        break;
      }
    }
    if (ok && cur == start) return true;
  }
  return explain("edges do not chain into a closed walk");
}

HamiltonResult euler_to_hamilton(const WeightedGraph& g, const Tour& euler) {
  std::string why;
  if (!euler_verify(g, euler, &why)) fail(errc::precondition, "invalid Euler tour: " + why);
  HamiltonResult res;
  res.tour.kind = "hamilton";
  res.tour.vertices = euler.edges;  // edge ids of g are the vertex ids of L(g)
  double len = 0.0;
  size_t m = euler.edges.size();
  for (size_t i = 0; i < m; ++i) {
    const Edge& a = g.edge(g.require_edge(euler.edges[i]));
    const Edge& b = g.edge(g.require_edge(euler.edges[(i + 1) % m]));
    len += 0.5 * (a.len + b.len);
  }
  res.cycle_length = len;
  return res;
}

HamiltonCheck hamilton_verify(const WeightedGraph& h, const Tour& t) {
  HamiltonCheck res;
  if (t.kind != "hamilton") {
    res.violation = "closure";
    res.detail = "tour kind is not hamilton";
    return res;
  }
  std::unordered_set<std::string> seen;
  for (const std::string& v : t.vertices) {
    if (h.vertex_index(v) < 0) {
      res.violation = "coverage";
      res.detail = "unknown vertex " + v;
      return res;
    }
    if (!seen.insert(v).second) {
      res.violation = "injectivity";
      res.detail = "vertex " + v + " repeats";
      return res;
    }
  }
  if (static_cast<int>(t.vertices.size()) != h.vertex_count()) {
    for (int v = 0; v < h.vertex_count(); ++v)
      if (!seen.count(h.vertex_id(v))) {
        res.violation = "coverage";
        res.detail = "vertex " + h.vertex_id(v) + " missing";
        return res;
      }
  }
  auto adjacent = [&](const std::string& a, const std::string& b) {
    int ai = h.require_vertex(a);
    for (int e : h.incident(ai))
      if (h.vertex_id(h.other_end(e, ai)) == b) return true;
    return false;
  };
  size_t n = t.vertices.size();
  if (n == 0) {
    res.violation = "coverage";
    res.detail = "empty sequence";
    return res;
  }
  for (size_t i = 0; i + 1 < n; ++i)
    if (!adjacent(t.vertices[i], t.vertices[i + 1])) {
      res.violation = "adjacency";
      res.detail = t.vertices[i] + " and " + t.vertices[i + 1] + " are not adjacent";
      return res;
    }
  if (n > 1 && !adjacent(t.vertices[n - 1], t.vertices[0])) {
    res.violation = "closure";
    res.detail = "sequence does not close up";
    return res;
  }
  res.ok = true;
  return res;
}

}  // namespace ltop
