#include "graph.hpp"

#include <algorithm>
#include <queue>

namespace ltop {

int WeightedGraph::add_vertex(const std::string& id) {
  if (id.empty()) fail(errc::invalid_argument, "empty vertex id");
  auto [it, fresh] = vertex_ix_.try_emplace(id, vertex_count());
  if (!fresh) fail(errc::invalid_argument, "duplicate vertex id: " + id);
  vertices_.push_back(id);
  adj_.emplace_back();
  return it->second;
}

int WeightedGraph::add_edge(const std::string& id, const std::string& u, const std::string& v, double len) {
  if (id.empty()) fail(errc::invalid_argument, "empty edge id");
  if (!(len > 0.0)) fail(errc::invalid_argument, "nonpositive length on edge " + id);
  int ui = vertex_index(u);
  int vi = vertex_index(v);
  if (ui < 0) fail(errc::invalid_argument, "edge " + id + " references undeclared vertex " + u);
  if (vi < 0) fail(errc::invalid_argument, "edge " + id + " references undeclared vertex " + v);
  auto [it, fresh] = edge_ix_.try_emplace(id, edge_count());
  if (!fresh) fail(errc::invalid_argument, "duplicate edge id: " + id);
  edges_.push_back(Edge{id, ui, vi, len});
  int e = it->second;
  adj_[ui].push_back(e);
  if (vi != ui) adj_[vi].push_back(e);
  return e;
}

int WeightedGraph::vertex_index(const std::string& id) const {
  auto it = vertex_ix_.find(id);
  return it == vertex_ix_.end() ? -1 : it->second;
}

int WeightedGraph::require_vertex(const std::string& id) const {
  int i = vertex_index(id);
  if (i < 0) fail(errc::not_found, "unknown vertex: " + id);
  return i;
}

int WeightedGraph::edge_index(const std::string& id) const {
  auto it = edge_ix_.find(id);
  return it == edge_ix_.end() ? -1 : it->second;
}

int WeightedGraph::require_edge(const std::string& id) const {
  int i = edge_index(id);
  if (i < 0) fail(errc::not_found, "unknown edge: " + id);
  return i;
}

int WeightedGraph::degree(int v) const {
  int d = 0;
  for (int e : adj_[v]) d += edges_[e].is_loop() ? 2 : 1;
  return d;
}

int WeightedGraph::other_end(int e, int v) const {
  const Edge& ed = edges_[e];
  return ed.u == v ? ed.v : ed.u;
}

std::vector<int> WeightedGraph::component_ids() const {
  std::vector<int> comp(vertex_count(), -1);
  int next = 0;
  for (int s = 0; s < vertex_count(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int e : adj_[u]) {
        int w = other_end(e, u);
        if (comp[w] < 0) {
          comp[w] = next;
          q.push(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

bool WeightedGraph::connected() const {
  if (vertex_count() == 0) return true;
  auto comp = component_ids();
  return *std::max_element(comp.begin(), comp.end()) == 0;
}

double WeightedGraph::total_length() const {
  double s = 0.0;
  for (const Edge& e : edges_) s += e.len;
  return s;
}

void WeightedGraph::check() const {
  std::vector<int> seen(edge_count(), 0);
  for (int v = 0; v < vertex_count(); ++v) {
    for (int e : adj_[v]) {
      if (e < 0 || e >= edge_count()) fail(errc::internal, "adjacency index out of range");
      const Edge& ed = edges_[e];
      if (ed.u != v && ed.v != v) fail(errc::internal, "adjacency lists edge not incident to vertex");
      ++seen[e];
    }
  }
  for (int e = 0; e < edge_count(); ++e) {
    const Edge& ed = edges_[e];
    if (!(ed.len > 0.0)) fail(errc::internal, "nonpositive length on edge " + ed.id);
    int expect = ed.is_loop() ? 1 : 2;
    if (seen[e] != expect) fail(errc::internal, "adjacency inconsistent for edge " + ed.id);
  }
}

WeightedGraph line_graph(const WeightedGraph& g) {
  WeightedGraph L;
  for (const Edge& e : g.edges()) L.add_vertex(e.id);

  // Slot list per vertex: a non-loop edge contributes one slot at each
  // endpoint, a loop two slots at its vertex.
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> slots;
    for (int e : g.incident(v)) {
      slots.push_back(e);
      if (g.edge(e).is_loop()) slots.push_back(e);
    }
    std::sort(slots.begin(), slots.end(),
              [&](int a, int b) { return g.edge(a).id < g.edge(b).id; });
    std::unordered_map<std::string, int> dup;
    for (size_t i = 0; i < slots.size(); ++i) {
      for (size_t j = i + 1; j < slots.size(); ++j) {
        int a = slots[i], b = slots[j];
        if (a == b) continue;  // the two slots of one loop
        const Edge& ea = g.edge(a);
        const Edge& eb = g.edge(b);
        std::string base = ea.id + "~" + eb.id + "@" + g.vertex_id(v);
        int n = dup[base]++;
        std::string id = n == 0 ? base : base + "#" + std::to_string(n);
        L.add_edge(id, ea.id, eb.id, 0.5 * (ea.len + eb.len));
      }
    }
  }
  return L;
}

}  // namespace ltop
