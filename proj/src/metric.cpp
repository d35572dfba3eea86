#include "metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace ltop {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct PQEntry {
  double d;
  int v;
  bool operator>(const PQEntry& o) const { return d > o.d || (d == o.d && v > o.v); }
};

using MinQueue = std::priority_queue<PQEntry, std::vector<PQEntry>, std::greater<PQEntry>>;

}  // namespace

std::vector<double> dijkstra(const WeightedGraph& g, int src, int target, double cutoff) {
  std::vector<double> d(g.vertex_count(), kInf);
  d[src] = 0.0;
  MinQueue pq;
  pq.push({0.0, src});
  while (!pq.empty()) {
    auto [du, u] = pq.top();
    pq.pop();
    if (du > d[u]) continue;
    if (u == target) break;
    for (int e : g.incident(u)) {
      int w = g.other_end(e, u);
      double nd = du + g.edge(e).len;
      if (nd > cutoff) continue;
      if (nd < d[w]) {
        d[w] = nd;
        pq.push({nd, w});
      }
    }
  }
  return d;
}

std::vector<double> dijkstra(const WeightedGraph& g, int src) { return dijkstra(g, src, -1, kInf); }

DistanceResult dist(const WeightedGraph& g, const std::string& from, const std::string& to) {
  int s = g.require_vertex(from);
  int t = g.require_vertex(to);
  DistanceResult r;
  r.from = from;
  r.to = to;
  if (s == t) {
    r.value = 0.0;
    return r;
  }
  std::vector<double> d = dijkstra(g, s, t, kInf);
  if (d[t] == kInf) {
    r.unreachable = true;
    r.value = kInf;
    return r;
  }
  r.value = d[t];
  // Witness: walk back over tight edges, preferring the smallest edge id so
  // equal-length paths resolve the same way on every run.
  int cur = t;
  while (cur != s) {
    int best = -1;
    for (int e : g.incident(cur)) {
      int w = g.other_end(e, cur);
      if (w == cur) continue;
      if (d[w] + g.edge(e).len == d[cur]) {
        if (best < 0 || g.edge(e).id < g.edge(best).id) best = e;
      }
    }
    if (best < 0) fail(errc::internal, "witness reconstruction lost the shortest path");
    r.witness.push_back(g.edge(best).id);
    cur = g.other_end(best, cur);
  }
  std::reverse(r.witness.begin(), r.witness.end());
  return r;
}

namespace {

// Copies g, splitting edges under interior points; returns the temp vertex
// id hosting each point.
std::pair<WeightedGraph, std::vector<std::string>> split_graph(const WeightedGraph& g,
                                                               const std::vector<PointRef>& pts) {
  struct Split {
    double offset;
    int point_ix;
  };
  std::vector<std::vector<Split>> by_edge(g.edge_count());
  std::vector<std::string> anchor(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    const PointRef& p = pts[i];
    if (p.is_vertex()) {
      g.require_vertex(p.vertex);
      anchor[i] = p.vertex;
      continue;
    }
    int e = g.require_edge(p.edge);
    const Edge& ed = g.edge(e);
    if (p.offset < 0.0 || p.offset > ed.len)
      fail(errc::invalid_argument, "offset outside edge " + ed.id);
    if (p.offset == 0.0) {
      anchor[i] = g.vertex_id(ed.u);
    } else if (p.offset == ed.len) {
      anchor[i] = g.vertex_id(ed.v);
    } else {
      anchor[i] = "__pt" + std::to_string(i);
      by_edge[e].push_back({p.offset, static_cast<int>(i)});
    }
  }
  WeightedGraph h;
  for (int v = 0; v < g.vertex_count(); ++v) h.add_vertex(g.vertex_id(v));
  for (size_t i = 0; i < pts.size(); ++i)
    if (anchor[i].rfind("__pt", 0) == 0) h.add_vertex(anchor[i]);
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (by_edge[e].empty()) {
      h.add_edge(ed.id, g.vertex_id(ed.u), g.vertex_id(ed.v), ed.len);
      continue;
    }
    auto splits = by_edge[e];
    std::sort(splits.begin(), splits.end(), [](const Split& a, const Split& b) { return a.offset < b.offset; });
    std::string prev = g.vertex_id(ed.u);
    double at = 0.0;
    int piece = 0;
    for (const Split& s : splits) {
      if (s.offset > at) {
        h.add_edge(ed.id + "#" + std::to_string(piece++), prev, anchor[s.point_ix], s.offset - at);
        at = s.offset;
      }
      prev = anchor[s.point_ix];
    }
    if (ed.len > at) h.add_edge(ed.id + "#" + std::to_string(piece), prev, g.vertex_id(ed.v), ed.len - at);
  }
  return {std::move(h), std::move(anchor)};
}

}  // namespace

double dist_points(const WeightedGraph& g, const PointRef& a, const PointRef& b) {
  if (a.is_vertex() && b.is_vertex()) {
    DistanceResult r = dist(g, a.vertex, b.vertex);
    return r.unreachable ? kInf : r.value;
  }
  auto [h, anchors] = split_graph(g, {a, b});
  std::vector<double> d = dijkstra(h, h.require_vertex(anchors[0]), h.require_vertex(anchors[1]), kInf);
  return d[h.require_vertex(anchors[1])];
}

std::vector<LevelDistance> dist_limit(const LazyGraph& g, const std::string& from, const std::string& to,
                                      const std::vector<int>& levels) {
  std::vector<LevelDistance> out;
  for (int n : levels) {
    Truncation t = g.truncate(n);
    LevelDistance ld;
    ld.level = n;
    if (t.graph.vertex_index(from) < 0 || t.graph.vertex_index(to) < 0) {
      ld.skipped = true;
      ld.result.from = from;
      ld.result.to = to;
    } else {
      ld.result = dist(t.graph, from, to);
    }
    out.push_back(std::move(ld));
  }
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) {
    for (int i = 0; i < n; ++i) p[i] = i;
  }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

std::vector<std::vector<int>> partition_classes(const WeightedGraph& g, double tau) {
  UnionFind uf(g.vertex_count());
  for (int s = 0; s < g.vertex_count(); ++s) {
    std::vector<double> d = dijkstra(g, s, -1, tau);
    for (int v = 0; v < g.vertex_count(); ++v)
      if (v != s && d[v] <= tau) uf.unite(s, v);
  }
  std::vector<std::vector<int>> by_root(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) by_root[uf.find(v)].push_back(v);
  std::vector<std::vector<int>> classes;
  for (auto& c : by_root)
    if (!c.empty()) classes.push_back(std::move(c));
  // order classes by their smallest member id
  for (auto& c : classes)
    std::sort(c.begin(), c.end(), [&](int a, int b) { return g.vertex_id(a) < g.vertex_id(b); });
  std::sort(classes.begin(), classes.end(),
            [&](const auto& a, const auto& b) { return g.vertex_id(a[0]) < g.vertex_id(b[0]); });
  return classes;
}

}  // namespace

QuotientPartition quotient(const WeightedGraph& g, double tau) {
  if (!(tau > 0.0)) fail(errc::invalid_argument, "tau must be positive");
  QuotientPartition part;
  part.tau = tau;
  for (const auto& c : partition_classes(g, tau)) {
    QuotientClass qc;
    for (int v : c) qc.members.push_back(g.vertex_id(v));
    part.classes.push_back(std::move(qc));
  }
  return part;
}

QuotientPartition quotient(const LazyGraph& g, int level, double tau) {
  Truncation t = g.truncate(level);
  QuotientPartition part = quotient(t.graph, tau);
  part.level = level;
  // Shrinking flag: does any intra-class distance strictly drop one level deeper?
  Truncation deeper = g.truncate(level + 1);
  for (QuotientClass& qc : part.classes) {
    if (qc.members.size() < 2) continue;
    for (size_t i = 0; i < qc.members.size() && !qc.shrinking; ++i) {
      std::vector<double> now = dijkstra(t.graph, t.graph.require_vertex(qc.members[i]), -1, tau);
      std::vector<double> nxt = dijkstra(deeper.graph, deeper.graph.require_vertex(qc.members[i]), -1, tau);
      for (size_t j = i + 1; j < qc.members.size(); ++j) {
        double a = now[t.graph.require_vertex(qc.members[j])];
        double b = nxt[deeper.graph.require_vertex(qc.members[j])];
        if (b < a) {
          qc.shrinking = true;
          break;
        }
      }
    }
  }
  return part;
}

std::optional<double> separation_lower_bound(const LazyGraph& g, int level, const std::string& x,
                                             const std::string& y) {
  Truncation t = g.truncate(level);
  int s = t.graph.require_vertex(x);
  int target = t.graph.require_vertex(y);
  std::vector<double> d = dijkstra(t.graph, s);
  double bound = d[target];
  for (const std::string& w : t.frontier) {
    int wi = t.graph.require_vertex(w);
    if (d[wi] == kInf) continue;
    std::optional<double> mfe = g.min_future_edge(w, level);
    if (!mfe) return std::nullopt;  // generator cannot bound its future edges here
    bound = std::min(bound, d[wi] + *mfe);
  }
  return bound;
}

GeodeticCheck is_geodetic_cycle(const WeightedGraph& g, const std::vector<std::string>& cycle) {
  if (cycle.empty()) fail(errc::precondition, "cycle edge set is empty");
  std::vector<int> edges;
  for (const std::string& id : cycle) edges.push_back(g.require_edge(id));
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    fail(errc::precondition, "cycle edge set has duplicates");

  // Degree-2 everywhere and a single closed walk.
  std::unordered_map<int, std::vector<int>> inc;  // vertex -> incident cycle edges
  for (int e : edges) {
    const Edge& ed = g.edge(e);
    inc[ed.u].push_back(e);
    if (!ed.is_loop()) inc[ed.v].push_back(e);
  }
  for (auto& [v, es] : inc) {
    int deg = 0;
    for (int e : es) deg += g.edge(e).is_loop() ? 2 : 1;
    if (deg != 2) fail(errc::precondition, "not a simple cycle: vertex " + g.vertex_id(v) + " has degree " +
                                               std::to_string(deg) + " in the edge set");
  }
  // canonical traversal from the smallest vertex id
  int start = -1;
  for (auto& [v, es] : inc)
    if (start < 0 || g.vertex_id(v) < g.vertex_id(start)) start = v;
  std::vector<int> walk_v{start};
  std::vector<int> walk_e;
  std::unordered_map<int, bool> used;
  int cur = start;
  while (true) {
    int next_e = -1;
    for (int e : inc[cur])
      if (!used[e] && (next_e < 0 || g.edge(e).id < g.edge(next_e).id)) next_e = e;
    if (next_e < 0) break;
    used[next_e] = true;
    walk_e.push_back(next_e);
    cur = g.other_end(next_e, cur);
    if (cur == start) break;
    walk_v.push_back(cur);
  }
  if (walk_e.size() != edges.size() || cur != start)
    fail(errc::precondition, "edge set is not a single cycle");

  int m = static_cast<int>(walk_v.size());
  std::vector<double> pre(m + 1, 0.0);
  for (int i = 0; i < m; ++i) pre[i + 1] = pre[i] + g.edge(walk_e[i]).len;
  double total = pre[m];

  std::vector<std::vector<double>> dm(m);
  for (int i = 0; i < m; ++i) dm[i] = dijkstra(g, walk_v[i]);

  GeodeticCheck res;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      double arc = pre[j] - pre[i];
      double best_arc = std::min(arc, total - arc);
      double d = dm[i][walk_v[j]];
      if (best_arc > d) {
        res.geodetic = false;
        res.x = g.vertex_id(walk_v[i]);
        res.y = g.vertex_id(walk_v[j]);
        res.arc_min = best_arc;
        res.distance = d;
        res.shorter_path = dist(g, res.x, res.y).witness;
        return res;
      }
    }
  }
  res.geodetic = true;
  return res;
}

PointRef approximate_midpoint(const WeightedGraph& g, const std::string& x, const std::string& y, double eps) {
  if (eps < 0.0) fail(errc::invalid_argument, "eps must be nonnegative");
  DistanceResult r = dist(g, x, y);
  if (r.unreachable) fail(errc::precondition, "vertices are not connected: " + x + ", " + y);
  if (r.value == 0.0) return PointRef::at_vertex(x);
  double half = r.value / 2.0;
  int cur = g.require_vertex(x);
  double acc = 0.0;
  for (const std::string& eid : r.witness) {
    int e = g.require_edge(eid);
    const Edge& ed = g.edge(e);
    if (acc + ed.len >= half) {
      double into = half - acc;  // measured from the entry endpoint `cur`
      if (into == 0.0) return PointRef::at_vertex(g.vertex_id(cur));
      if (into == ed.len) return PointRef::at_vertex(g.vertex_id(g.other_end(e, cur)));
      double offset = (ed.u == cur) ? into : ed.len - into;
      return PointRef::on_edge(ed.id, offset);
    }
    acc += ed.len;
    cur = g.other_end(e, cur);
  }
  return PointRef::at_vertex(y);  // numeric slack put the midpoint at the far end
}

double curve_length(const WeightedGraph& g, const std::vector<PointRef>& walk, bool closed) {
  if (walk.size() < 2) return 0.0;
  double sum = 0.0;
  for (size_t i = 0; i + 1 < walk.size(); ++i) sum += dist_points(g, walk[i], walk[i + 1]);
  if (closed) sum += dist_points(g, walk.back(), walk.front());
  return sum;
}

namespace {

// Components of g with the first n emitted edges removed; returns component
// id per vertex.
std::vector<int> prefix_components(const WeightedGraph& g, int n) {
  std::vector<int> comp(g.vertex_count(), -1);
  int next = 0;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int e : g.incident(u)) {
        if (e < n) continue;  // removed prefix
        int w = g.other_end(e, u);
        if (comp[w] < 0) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

}  // namespace

std::vector<EpsLevelEntry> eps_nlf_report(const LazyGraph& g, int depth, const std::vector<double>& eps) {
  Truncation t = g.truncate(depth);
  const WeightedGraph& G = t.graph;
  if (G.vertex_count() > 2000)
    fail(errc::invalid_argument, "eps_nlf_report: truncation too large for the all-pairs diagnostic");
  std::vector<std::vector<double>> ap(G.vertex_count());
  for (int v = 0; v < G.vertex_count(); ++v) ap[v] = dijkstra(G, v);

  auto max_component_diameter = [&](int n) {
    std::vector<int> comp = prefix_components(G, n);
    int k = *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<std::vector<int>> members(k);
    for (int v = 0; v < G.vertex_count(); ++v) members[comp[v]].push_back(v);
    double worst = 0.0;
    for (auto& ms : members)
      for (size_t i = 0; i < ms.size(); ++i)
        for (size_t j = i + 1; j < ms.size(); ++j) worst = std::max(worst, ap[ms[i]][ms[j]]);
    return worst;
  };

  std::vector<EpsLevelEntry> out;
  for (double e : eps) {
    if (!(e > 0.0)) fail(errc::invalid_argument, "eps values must be positive");
    int lo = 0, hi = G.edge_count();  // removing everything always succeeds
    while (lo < hi) {
      int mid = (lo + hi) / 2;
      if (max_component_diameter(mid) < e)
        hi = mid;
      else
        lo = mid + 1;
    }
    out.push_back({e, lo});
  }
  return out;
}

}  // namespace ltop
