#pragma once

#include <string>
#include <vector>

#include "graph.hpp"

namespace ltop {

struct Tour {
  std::string kind;                   // "euler" | "hamilton"
  std::vector<std::string> edges;     // euler: ordered closed edge walk
  std::vector<std::string> vertices;  // hamilton: ordered closed vertex sequence
};

struct OddCutReport {
  bool pass = false;
  std::vector<std::string> odd_vertices;       // interior vertices of odd degree
  std::vector<std::string> odd_frontier;       // frontier vertices of odd degree, reported separately
};

// All-degrees-even check (equivalent to having no odd cut on a finite
// graph). Frontier vertices, when given, are excluded from the verdict and
// reported on the side: their degrees are still growing.
OddCutReport odd_cut_check(const WeightedGraph& g, const std::vector<std::string>& frontier = {});

struct InsertionStep {
  std::string at;                   // attachment vertex
  std::vector<std::string> circuit; // closed walk spliced in at that vertex
};

struct EulerResult {
  Tour tour;
  std::vector<std::string> initial_cycle;
  std::vector<InsertionStep> log;
};

// Euler tour by circuit insertion: start from a cycle, then repeatedly
// close up a remainder component through a vertex the tour already visits
// and splice the walk in there. Deterministic (smallest edge id first).
EulerResult euler_tour(const WeightedGraph& g);

// Validity check for an Euler tour of g.
bool euler_verify(const WeightedGraph& g, const Tour& t, std::string* why = nullptr);

struct HamiltonResult {
  Tour tour;              // vertex sequence in line_graph(g): g's edges in tour order
  double cycle_length;    // induced length of the Hamilton cycle
};

// Reads a Hamilton cycle of line_graph(g) straight off an Euler tour: the
// tour's edge order is the vertex order, and the induced cycle length
// telescopes to the total edge length of g.
HamiltonResult euler_to_hamilton(const WeightedGraph& g, const Tour& euler);

struct HamiltonCheck {
  bool ok = false;
  std::string violation;  // "injectivity" | "coverage" | "adjacency" | "closure"
  std::string detail;
};

// Checks closure, adjacency, full coverage, and injectivity for a Hamilton
// cycle of h.
HamiltonCheck hamilton_verify(const WeightedGraph& h, const Tour& t);

}  // namespace ltop
