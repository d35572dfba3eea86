#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "lazy.hpp"

namespace ltop {

struct DistanceResult {
  std::string from;
  std::string to;
  double value = 0.0;
  bool unreachable = false;            // value is meaningless when set
  std::vector<std::string> witness;    // edge ids of a shortest path, empty when unreachable
};

// Exact shortest-path distance under the edge lengths, with a deterministic
// witness (ties resolved toward lexicographically smaller edge ids, walking
// back from the target over tight edges).
DistanceResult dist(const WeightedGraph& g, const std::string& from, const std::string& to);

// Single-source distances by vertex index; +inf for unreachable.
std::vector<double> dijkstra(const WeightedGraph& g, int src);
// Early-exit variant: stops once `target` is settled (target < 0 disables)
// and never expands labels beyond `cutoff`.
std::vector<double> dijkstra(const WeightedGraph& g, int src, int target, double cutoff);

// A point of the 1-complex: either a vertex or an interior point of an
// edge, addressed by (edge id, offset from the edge's u endpoint).
struct PointRef {
  std::string vertex;  // set for vertex points
  std::string edge;    // set for interior points
  double offset = 0.0;

  static PointRef at_vertex(std::string id) { return {std::move(id), "", 0.0}; }
  static PointRef on_edge(std::string id, double offset) { return {"", std::move(id), offset}; }
  bool is_vertex() const { return !vertex.empty(); }
};

// Distance between two points, splitting edges transiently when a point is
// interior.
double dist_points(const WeightedGraph& g, const PointRef& a, const PointRef& b);

struct LevelDistance {
  int level = 0;
  bool skipped = false;  // vertex not yet emitted at this level
  DistanceResult result;
};

// Per-level distances over a truncation sequence; nonincreasing in level.
std::vector<LevelDistance> dist_limit(const LazyGraph& g, const std::string& from, const std::string& to,
                                      const std::vector<int>& levels);

struct QuotientClass {
  std::vector<std::string> members;
  bool shrinking = false;  // some intra-class distance still strictly drops at the next level
};

struct QuotientPartition {
  double tau = 0.0;
  int level = 0;
  std::vector<QuotientClass> classes;
};

// Transitive closure of {(x,y) : d(x,y) <= tau} on a finite graph.
QuotientPartition quotient(const WeightedGraph& g, double tau);
// Same over a truncation, with the shrinking flag filled in by comparing
// intra-class distances against level+1.
QuotientPartition quotient(const LazyGraph& g, int level, double tau);

// Certified lower bound on the ideal distance between x and y: any path
// either stays inside the truncation (>= in-graph distance) or leaves
// through a frontier vertex w and pays d(x,w) plus the generator's declared
// minimum future edge length at w. Returns nothing when the generator
// cannot bound its future edges.
std::optional<double> separation_lower_bound(const LazyGraph& g, int level, const std::string& x,
                                             const std::string& y);

struct GeodeticCheck {
  bool geodetic = false;
  // witness on failure: a vertex pair on the cycle whose short arc exceeds
  // the graph distance, plus the shorter path
  std::string x, y;
  double arc_min = 0.0;
  double distance = 0.0;
  std::vector<std::string> shorter_path;
};

// True iff for every vertex pair on the cycle one of the two arcs realizes
// the graph distance. `cycle` must be the edge set of a simple cycle.
GeodeticCheck is_geodetic_cycle(const WeightedGraph& g, const std::vector<std::string>& cycle);

// Point z with |d(x,z) - d(z,y)| <= eps lying on a path of length at most
// d(x,y) + eps; computed by halving an exact shortest path.
PointRef approximate_midpoint(const WeightedGraph& g, const std::string& x, const std::string& y, double eps);

// Sum of consecutive point distances along a sampled walk; a lower bound on
// the length of any curve through the samples, monotone under refinement.
double curve_length(const WeightedGraph& g, const std::vector<PointRef>& walk, bool closed);

struct EpsLevelEntry {
  double eps = 0.0;
  int min_prefix = 0;  // minimal n such that removing the first n emitted edges
                       // leaves only components of diameter < eps
};

// Diagnostic over the truncation at `depth`: for each eps, the minimal
// prefix of the emission order whose removal breaks the graph into pieces
// of full-graph diameter below eps. Nonincreasing in eps.
std::vector<EpsLevelEntry> eps_nlf_report(const LazyGraph& g, int depth, const std::vector<double>& eps);

}  // namespace ltop
