#pragma once

#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace ltop {

// One member of an exhaustion: the finite graph emitted at some level plus
// its frontier, the vertices incident with edges that a deeper level will
// still add.
struct Truncation {
  int level = 0;
  WeightedGraph graph;
  std::vector<std::string> frontier;
};

enum class Summability { converging, diverging, unknown };

struct LengthSchedule {
  Summability verdict = Summability::unknown;
  std::optional<Rational> declared_total;  // set when converging
  std::string note;
};

struct ParamDoc {
  std::string name;
  std::string value;  // default, echoed canonically
  std::string doc;
};

// Generator-backed infinite graph reachable only through finite
// truncations. Contract: truncate(n) is a pure function of (params, n);
// truncate(n) is a subgraph of truncate(n+1) with identical lengths on
// shared edges, and every edge of the ideal graph appears at some level.
class LazyGraph {
public:
  virtual ~LazyGraph() = default;

  virtual std::string name() const = 0;
  virtual std::vector<ParamDoc> params() const = 0;
  virtual std::string doc() const = 0;

  // Levels beyond max_level() return the full graph with empty frontier.
  virtual int max_level() const { return std::numeric_limits<int>::max(); }
  virtual Truncation truncate(int level) const = 0;
  virtual LengthSchedule schedule() const = 0;

  // Canonical basepoint, e.g. for hop-distance reweighting.
  virtual std::string root() const = 0;

  // Smallest length among the not-yet-emitted edges incident with a
  // frontier vertex, when the schedule makes that provable. Feeds the
  // separation certificate in the quotient report.
  virtual std::optional<double> min_future_edge(const std::string& /*vertex*/, int /*level*/) const {
    return std::nullopt;
  }

  std::string spec_string() const;  // "name?k=v&..." canonical echo
};

// Wild-circle generator, exposed concretely: the acceptance experiments
// need its cyclic sample order and its exact length bookkeeping.
class WildCircleGraph : public LazyGraph {
public:
  WildCircleGraph(Rational c, Rational s);

  std::string name() const override { return "wild-circle"; }
  std::vector<ParamDoc> params() const override;
  std::string doc() const override;
  Truncation truncate(int level) const override;
  LengthSchedule schedule() const override;
  std::string root() const override { return "r:0"; }

  // Vertices of level `level`, in the cyclic order in which the circle
  // through all double rays visits them.
  std::vector<std::string> circle_order(int level) const;
  // Ids of the double-ray edges emitted by `level` (the circle's edges).
  std::vector<std::string> circle_edges(int level) const;

  Rational ray_total() const { return s_; }                   // sum over all double-ray edges
  Rational ray_emitted(int level) const;                       // exact emitted sub-sum
  Rational ray_tail(int level) const { return s_ - ray_emitted(level); }
  // Declared per-class connector schedule: count(cls) edges of length c*2^-cls.
  long long connector_count(int cls) const;
  Rational connector_length(int cls) const;

private:
  Rational c_, s_;
  Rational ray_budget(int depth) const;  // per-ray edge-length total at tree depth
};

// Metric sample for the boundary-realization generator.
struct MetricSample {
  std::vector<std::string> points;
  std::vector<std::vector<double>> d;

  // Validates the metric axioms; throws with a witness on violation.
  void check() const;
};

std::unique_ptr<LazyGraph> make_lind(MetricSample sample);

// Builds a generator from an invocation string "name?param=value&...".
std::unique_ptr<LazyGraph> make_generator(const std::string& spec);

struct GeneratorInfo {
  std::string name;
  std::string doc;
  std::vector<ParamDoc> params;
  bool available = true;
};
std::vector<GeneratorInfo> generator_catalog();

// Per-level partial sums plus the declared verdict.
struct TotalLengthReport {
  std::vector<std::pair<int, double>> partial_sums;
  Summability verdict = Summability::unknown;
  std::optional<Rational> declared_total;
  std::string note;
};
TotalLengthReport total_length_report(const LazyGraph& g, const std::vector<int>& levels);

}  // namespace ltop
