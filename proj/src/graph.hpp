#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "error.hpp"

namespace ltop {

struct Edge {
  std::string id;
  int u = -1;
  int v = -1;
  double len = 0.0;

  bool is_loop() const { return u == v; }
};

// Finite edge-weighted multigraph with strictly positive lengths. Vertices
// and edges carry stable string ids; parallel edges and loops are allowed.
// Immutable once handed out: all analysis functions take it by const ref.
class WeightedGraph {
public:
  int add_vertex(const std::string& id);
  // Endpoints must already exist; len must be > 0.
  int add_edge(const std::string& id, const std::string& u, const std::string& v, double len);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  int vertex_index(const std::string& id) const;  // -1 when absent
  int require_vertex(const std::string& id) const;
  const std::string& vertex_id(int i) const { return vertices_[i]; }

  int edge_index(const std::string& id) const;  // -1 when absent
  int require_edge(const std::string& id) const;
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Incident edge indices (a loop appears once).
  const std::vector<int>& incident(int v) const { return adj_[v]; }
  int degree(int v) const;  // loops count twice
  int other_end(int e, int v) const;

  bool connected() const;                // ignores the empty graph (true)
  std::vector<int> component_ids() const;
  double total_length() const;

  // Checks the structural invariants (positive lengths, endpoints in range,
  // adjacency consistent with the edge list). Throws on violation.
  void check() const;

private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::unordered_map<std::string, int> vertex_ix_;
  std::unordered_map<std::string, int> edge_ix_;
};

// Line graph with induced lengths: one vertex per edge of g, one edge per
// shared-endpoint pairing of two distinct edges, with length equal to the
// mean of the two member lengths. A loop pairs with another edge once per
// loop slot but never with itself.
WeightedGraph line_graph(const WeightedGraph& g);

}  // namespace ltop
