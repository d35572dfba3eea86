#include "lazy.hpp"

#include <sstream>

namespace ltop {

std::string LazyGraph::spec_string() const {
  std::ostringstream os;
  os << name();
  bool first = true;
  for (const ParamDoc& p : params()) {
    os << (first ? "?" : "&") << p.name << "=" << p.value;
    first = false;
  }
  return os.str();
}

TotalLengthReport total_length_report(const LazyGraph& g, const std::vector<int>& levels) {
  TotalLengthReport rep;
  for (int n : levels) {
    if (n < 0) fail(errc::invalid_argument, "negative truncation level");
    rep.partial_sums.emplace_back(n, g.truncate(n).graph.total_length());
  }
  LengthSchedule sch = g.schedule();
  rep.verdict = sch.verdict;
  rep.declared_total = sch.declared_total;
  rep.note = sch.note;
  return rep;
}

void MetricSample::check() const {
  size_t n = points.size();
  if (n == 0) fail(errc::invalid_argument, "metric sample is empty");
  if (d.size() != n) fail(errc::invalid_argument, "metric matrix row count does not match point count");
  for (size_t i = 0; i < n; ++i) {
    if (d[i].size() != n) fail(errc::invalid_argument, "metric matrix is not square");
    if (d[i][i] != 0.0)
      fail(errc::precondition, "metric axiom violation: d(" + points[i] + "," + points[i] + ") != 0");
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (d[i][j] != d[j][i])
        fail(errc::precondition, "metric axiom violation: asymmetric pair (" + points[i] + "," + points[j] + ")");
      if (!(d[i][j] > 0.0))
        fail(errc::precondition, "metric axiom violation: nonpositive distance (" + points[i] + "," + points[j] + ")");
    }
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        if (d[i][j] > d[i][k] + d[k][j])
          fail(errc::precondition, "metric axiom violation: triangle inequality fails on (" + points[i] + "," +
                                       points[j] + "," + points[k] + ")");
}

}  // namespace ltop
