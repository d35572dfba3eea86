#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "lazy.hpp"
#include "metric.hpp"

namespace ltop {

// ----------------------------------------------------------- end structure

struct EndComponent {
  std::vector<std::string> vertices;
  std::vector<std::string> ray;  // greedy ray witness inside the component
};

struct EndDecomposition {
  int level = 0;
  bool vertex_mode = true;
  int separator_level = 0;
  std::vector<EndComponent> components;  // only the still-growing ones
};

// Components of the level-n truncation minus the level-ceil(n/2) core,
// filtered to those that still gain vertices at level n+1. Mode picks a
// vertex separator or an edge separator.
EndDecomposition ends(const LazyGraph& g, int level, bool vertex_mode);

// ---------------------------------------------------------- boundary

struct BoundaryCluster {
  std::string center;
  std::vector<std::string> members;
  int end_component = -1;  // index into the level's EndDecomposition
};

struct BoundaryEpsSlice {
  double eps = 0.0;
  std::vector<BoundaryCluster> clusters;          // farthest-point eps-net cells
  std::vector<std::vector<double>> center_dist;   // pairwise center distances
  int linked_group_count = 0;                     // transitive closure of {d < eps}
};

struct BoundaryLevel {
  int level = 0;
  std::vector<std::string> frontier;
  std::vector<BoundaryEpsSlice> per_eps;
};

struct BoundaryProfile {
  int depth = 0;
  std::vector<double> eps;
  std::vector<BoundaryLevel> levels;
};

// Frontier clustering per level and resolution, with distances measured in
// the strictly deeper truncation at `depth`. Cluster centers are chosen by
// farthest-point sampling, so cluster counts are nonincreasing in eps and
// centers are pairwise at least eps apart; the transitive-closure group
// count is reported alongside.
BoundaryProfile boundary_profile(const LazyGraph& g, const std::vector<int>& levels, int depth,
                                 const std::vector<double>& eps);

// ------------------------------------------------------------- reweighting

struct DecayFunction {
  std::string name;    // pow2 | pow4 | exp | const
  double param = 0.0;  // lambda for exp, scale for const

  double operator()(int n) const;
  static DecayFunction parse(const std::string& text);  // "pow2", "exp:0.5", "const:2"
};

// Hop-distance reweighting: every edge of the base generator gets length
// f(least number of edges from the basepoint to an endvertex). Hop
// distances are computed inside each truncation; the base generator must
// emit hop balls monotonically for lengths to be stable across levels
// (all catalog generators do).
std::unique_ptr<LazyGraph> floyd_lengths(std::shared_ptr<const LazyGraph> base, const std::string& basepoint,
                                         DecayFunction f);

struct FloydAdmissibility {
  bool ok = true;
  double lambda_min = 1.0;  // min f(n)/f(n-1) over the checked range
  std::string note;
};
FloydAdmissibility floyd_admissibility(const DecayFunction& f, int range);

// ------------------------------------------------------- tree reweighting

struct NstAssignment {
  std::string root;
  std::map<std::string, int> level;           // vertex id -> depth-first depth
  std::vector<std::string> tree_edges;        // edge ids of the depth-first tree
  std::map<std::string, double> assignment;   // edge id -> new length
};

// Depth-first tree lengths: edge uv with levels r(u) < r(v) gets
// 2^-r(u) - 2^-r(v), the dyadic sum over the levels it spans. Requires a
// connected loop-free graph.
NstAssignment nst_lengths(const WeightedGraph& g, const std::string& root);

// ----------------------------------------------------------- comb or star

struct CombOrStar {
  std::string kind;  // "comb" | "star" | "inconclusive"
  std::vector<std::string> spine;              // comb
  std::string center;                          // star
  std::vector<std::vector<std::string>> legs;  // teeth or leaf paths, as vertex lists
  int count = 0;
  int budget_used = 0;
  std::string note;
};

// Connects consecutive sequence vertices by shortest paths inside the
// level-`budget` truncation and tries to certify a comb (spine plus
// pairwise disjoint teeth) or a subdivided star (leaf paths disjoint except
// for one center). Returns "inconclusive" rather than guessing.
CombOrStar comb_or_star(const LazyGraph& g, const std::vector<std::string>& vseq, int budget);

}  // namespace ltop
