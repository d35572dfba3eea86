#pragma once

#include <string>

#include "json.hpp"

#include "completion.hpp"
#include "cyclespace.hpp"
#include "graph.hpp"
#include "lazy.hpp"
#include "metric.hpp"
#include "tours.hpp"

namespace ltop {

using ordered_json = nlohmann::ordered_json;

// Graph interchange format:
//   {"vertices":[{"id":"a"}],"edges":[{"id":"e","u":"a","v":"b","len":1.0}]}
// Lengths round-trip exactly (shortest lossless decimal).
WeightedGraph graph_from_json(const std::string& text);
ordered_json graph_to_json(const WeightedGraph& g);
std::string graph_to_dot(const WeightedGraph& g);

MetricSample sample_from_json(const std::string& text);

ordered_json to_json(const DistanceResult& r);
ordered_json to_json(const std::vector<LevelDistance>& seq);
ordered_json to_json(const QuotientPartition& p);
ordered_json to_json(const GeodeticCheck& c);
ordered_json to_json(const PointRef& p);
ordered_json to_json(const EndDecomposition& d);
ordered_json to_json(const BoundaryProfile& p);
std::string boundary_csv(const BoundaryProfile& p);
ordered_json to_json(const NstAssignment& a);
ordered_json to_json(const CombOrStar& c);
ordered_json to_json(const CycleSpaceElement& e);
ordered_json to_json(const CircuitFamily& f);
ordered_json to_json(const GeodeticFamily& f);
ordered_json to_json(const ThinSumResult& r);
ordered_json to_json(const Tour& t);
ordered_json to_json(const EulerResult& r);
ordered_json to_json(const OddCutReport& r);
ordered_json to_json(const HamiltonCheck& c);
ordered_json to_json(const TotalLengthReport& r);
ordered_json catalog_json();

Tour tour_from_json(const std::string& text);

}  // namespace ltop
