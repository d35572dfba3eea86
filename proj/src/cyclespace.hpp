#pragma once

#include <map>
#include <string>
#include <vector>

#include "graph.hpp"
#include "metric.hpp"

namespace ltop {

// An element of the cycle space over GF(2): an edge set in which every
// vertex has even degree, plus its total length.
struct CycleSpaceElement {
  std::vector<std::string> edges;  // sorted, unique
  double total_length = 0.0;
};

CycleSpaceElement make_element(const WeightedGraph& g, std::vector<std::string> edges);

// True iff every vertex has even degree in the edge set (the membership
// certificate for the cycle space of a finite graph).
bool in_cycle_space(const WeightedGraph& g, const std::vector<std::string>& edges, std::string* odd_vertex);

struct CircuitFamily {
  std::vector<CycleSpaceElement> circuits;
  double total_length = 0.0;                  // sum over all members
  std::map<std::string, int> occurrence;      // per-edge occurrence counts
};

// Fundamental cycles of a breadth-first spanning forest; |E|-|V|+#components
// elements, each a simple cycle.
std::vector<CycleSpaceElement> cycle_basis(const WeightedGraph& g);

struct ThinSumResult {
  CycleSpaceElement sum;       // symmetric difference of the members
  double family_total = 0.0;   // admissibility figure: total length of the family
  int max_occurrence = 0;
};

// GF(2) sum of a family of circuits. Every member must be the edge set of a
// simple cycle.
ThinSumResult thin_sum(const WeightedGraph& g, const std::vector<std::vector<std::string>>& family);

// Splits an even-degree edge set into pairwise edge-disjoint simple cycles
// (deterministic greedy peeling in edge-id order).
CircuitFamily circuit_decomposition(const WeightedGraph& g, const std::vector<std::string>& element);

struct SplitStep {
  double replaced_length = 0.0;
  std::vector<double> piece_lengths;  // each strictly below replaced_length
};

struct GeodeticFamily {
  CircuitFamily family;          // every member passes is_geodetic_cycle
  std::vector<SplitStep> trace;  // one entry per non-geodetic cycle replaced
};

// Writes a cycle-space element as a GF(2) sum of geodetic cycles: decompose
// into cycles, then repeatedly replace a non-geodetic cycle C (witness pair
// x,y with shorter path P) by the two strictly shorter closed sets
// arc1 xor P and arc2 xor P. Terminates because each replacement trades a
// cycle for finitely many strictly shorter ones.
GeodeticFamily geodetic_generate(const WeightedGraph& g, const std::vector<std::string>& element);

// All simple cycles of a small graph, as sorted edge-id sets.
std::vector<std::vector<std::string>> enumerate_cycles(const WeightedGraph& g);

// GF(2) rank of a set of edge sets over the edges of g.
int gf2_rank(const WeightedGraph& g, const std::vector<std::vector<std::string>>& sets);

}  // namespace ltop
