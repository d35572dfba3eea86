#include "completion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_set>

namespace ltop {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

// ------------------------------------------------------------------- ends

namespace {

// Component ids over the vertices of g that survive the separator; -1 for
// removed vertices.
std::vector<int> separated_components(const WeightedGraph& g, const std::unordered_set<std::string>& cut_vertices,
                                      const std::unordered_set<std::string>& cut_edges, bool vertex_mode) {
  std::vector<int> comp(g.vertex_count(), -1);
  std::vector<bool> removed(g.vertex_count(), false);
  if (vertex_mode)
    for (int v = 0; v < g.vertex_count(); ++v)
      if (cut_vertices.count(g.vertex_id(v))) removed[v] = true;
  int next = 0;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (removed[s] || comp[s] >= 0) continue;
    comp[s] = next;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int e : g.incident(u)) {
        if (!vertex_mode && cut_edges.count(g.edge(e).id)) continue;
        int w = g.other_end(e, u);
        if (removed[w] || comp[w] >= 0) continue;
        comp[w] = next;
        stack.push_back(w);
      }
    }
    ++next;
  }
  return comp;
}

}  // namespace

EndDecomposition ends(const LazyGraph& g, int level, bool vertex_mode) {
  if (level < 1) fail(errc::invalid_argument, "ends: level must be >= 1");
  int sep_level = (level + 1) / 2;
  Truncation core = g.truncate(sep_level);
  Truncation now = g.truncate(level);
  Truncation next = g.truncate(level + 1);

  std::unordered_set<std::string> cut_vertices, cut_edges;
  for (int v = 0; v < core.graph.vertex_count(); ++v) cut_vertices.insert(core.graph.vertex_id(v));
  for (const Edge& e : core.graph.edges()) cut_edges.insert(e.id);

  std::vector<int> comp_now = separated_components(now.graph, cut_vertices, cut_edges, vertex_mode);
  std::vector<int> comp_next = separated_components(next.graph, cut_vertices, cut_edges, vertex_mode);

  int k = 0;
  for (int c : comp_now) k = std::max(k, c + 1);
  std::vector<std::vector<int>> members(k);
  for (int v = 0; v < now.graph.vertex_count(); ++v)
    if (comp_now[v] >= 0) members[comp_now[v]].push_back(v);

  // sizes of the level+1 components, to detect growth
  int k2 = 0;
  for (int c : comp_next) k2 = std::max(k2, c + 1);
  std::vector<int> next_size(k2, 0);
  for (int c : comp_next)
    if (c >= 0) ++next_size[c];

  EndDecomposition dec;
  dec.level = level;
  dec.vertex_mode = vertex_mode;
  dec.separator_level = sep_level;
  for (auto& ms : members) {
    if (ms.empty()) continue;
    // locate this component one level deeper
    int image = comp_next[next.graph.require_vertex(now.graph.vertex_id(ms[0]))];
    if (image < 0 || next_size[image] <= static_cast<int>(ms.size())) continue;  // not growing
    EndComponent ec;
    std::sort(ms.begin(), ms.end(),
              [&](int a, int b) { return now.graph.vertex_id(a) < now.graph.vertex_id(b); });
    for (int v : ms) ec.vertices.push_back(now.graph.vertex_id(v));
    // greedy ray witness: BFS tree path from the smallest member to the
    // hop-farthest member, inside the component
    std::vector<int> parent(now.graph.vertex_count(), -2);
    std::queue<int> q;
    int src = ms[0];
    parent[src] = -1;
    q.push(src);
    int far = src;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      far = u;
      for (int e : now.graph.incident(u)) {
        if (!vertex_mode && cut_edges.count(now.graph.edge(e).id)) continue;
        int w = now.graph.other_end(e, u);
        if (comp_now[w] != comp_now[src] || parent[w] != -2) continue;
        parent[w] = u;
        q.push(w);
      }
    }
    for (int v = far; v != -1; v = parent[v]) ec.ray.push_back(now.graph.vertex_id(v));
    std::reverse(ec.ray.begin(), ec.ray.end());
    dec.components.push_back(std::move(ec));
  }
  return dec;
}

// --------------------------------------------------------------- boundary

BoundaryProfile boundary_profile(const LazyGraph& g, const std::vector<int>& levels, int depth,
                                 const std::vector<double>& eps) {
  if (levels.empty()) fail(errc::invalid_argument, "boundary_profile: no levels given");
  for (int n : levels)
    if (depth <= n) fail(errc::precondition, "boundary_profile: depth must exceed every level");
  for (double e : eps)
    if (!(e > 0.0)) fail(errc::invalid_argument, "boundary_profile: eps values must be positive");

  Truncation deep = g.truncate(depth);
  BoundaryProfile prof;
  prof.depth = depth;
  prof.eps = eps;

  for (int n : levels) {
    Truncation t = g.truncate(n);
    BoundaryLevel lvl;
    lvl.level = n;
    lvl.frontier = t.frontier;
    std::sort(lvl.frontier.begin(), lvl.frontier.end());
    int m = static_cast<int>(lvl.frontier.size());

    // pairwise frontier distances measured in the deep truncation
    std::vector<int> fidx(m);
    for (int i = 0; i < m; ++i) fidx[i] = deep.graph.require_vertex(lvl.frontier[i]);
    std::vector<std::vector<double>> dm(m, std::vector<double>(m, 0.0));
    for (int i = 0; i < m; ++i) {
      std::vector<double> d = dijkstra(deep.graph, fidx[i]);
      for (int j = 0; j < m; ++j) dm[i][j] = d[fidx[j]];
    }

    // farthest-point ordering: one center sequence serves every eps
    std::vector<int> order;
    std::vector<double> radius;  // distance to previous centers at selection time
    std::vector<double> best(m, kInf);
    order.push_back(0);  // frontier is sorted, so index 0 is the smallest id
    radius.push_back(kInf);
    for (int j = 0; j < m; ++j) best[j] = dm[0][j];
    while (static_cast<int>(order.size()) < m) {
      int pick = -1;
      for (int j = 0; j < m; ++j) {
        if (best[j] == 0.0 && j != order[0]) continue;
        bool taken = std::find(order.begin(), order.end(), j) != order.end();
        if (taken) continue;
        if (pick < 0 || best[j] > best[pick]) pick = j;
      }
      if (pick < 0 || best[pick] == 0.0) break;
      order.push_back(pick);
      radius.push_back(best[pick]);
      for (int j = 0; j < m; ++j) best[j] = std::min(best[j], dm[pick][j]);
    }

    EndDecomposition dec = n >= 1 ? ends(g, n, true) : EndDecomposition{};
    auto end_component_of = [&](const std::string& vid) {
      for (size_t c = 0; c < dec.components.size(); ++c)
        if (std::binary_search(dec.components[c].vertices.begin(), dec.components[c].vertices.end(), vid))
          return static_cast<int>(c);
      return -1;
    };

    for (double e : eps) {
      BoundaryEpsSlice slice;
      slice.eps = e;
      int k = 1;
      while (k < static_cast<int>(order.size()) && radius[k] >= e) ++k;
      std::vector<BoundaryCluster> clusters(k);
      for (int c = 0; c < k; ++c) clusters[c].center = lvl.frontier[order[c]];
      for (int j = 0; j < m; ++j) {
        int bestc = 0;
        for (int c = 1; c < k; ++c)
          if (dm[order[c]][j] < dm[order[bestc]][j]) bestc = c;
        clusters[bestc].members.push_back(lvl.frontier[j]);
      }
      for (int c = 0; c < k; ++c) clusters[c].end_component = end_component_of(clusters[c].center);
      slice.clusters = std::move(clusters);
      slice.center_dist.assign(k, std::vector<double>(k, 0.0));
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) slice.center_dist[a][b] = dm[order[a]][order[b]];

      // transitive closure of {d < eps}
      std::vector<int> group(m, -1);
      int groups = 0;
      for (int s = 0; s < m; ++s) {
        if (group[s] >= 0) continue;
        group[s] = groups;
        std::vector<int> stack{s};
        while (!stack.empty()) {
          int u = stack.back();
          stack.pop_back();
          for (int v = 0; v < m; ++v)
            if (group[v] < 0 && dm[u][v] < e) {
              group[v] = groups;
              stack.push_back(v);
            }
        }
        ++groups;
      }
      slice.linked_group_count = groups;
      lvl.per_eps.push_back(std::move(slice));
    }
    prof.levels.push_back(std::move(lvl));
  }
  return prof;
}

// ------------------------------------------------------------- reweighting

double DecayFunction::operator()(int n) const {
  if (name == "pow2") return std::ldexp(1.0, -n);
  if (name == "pow4") return std::ldexp(1.0, -2 * n);
  if (name == "exp") return std::exp(-param * n);
  if (name == "const") return param;
  fail(errc::invalid_argument, "unknown decay function: " + name);
}

DecayFunction DecayFunction::parse(const std::string& text) {
  auto colon = text.find(':');
  DecayFunction f;
  f.name = text.substr(0, colon);
  if (f.name == "pow2" || f.name == "pow4") {
    if (colon != std::string::npos) fail(errc::invalid_argument, f.name + " takes no parameter");
    return f;
  }
  if (f.name == "exp") {
    if (colon == std::string::npos) fail(errc::invalid_argument, "exp needs a rate, e.g. exp:0.7");
    f.param = std::stod(text.substr(colon + 1));
    if (!(f.param > 0.0)) fail(errc::invalid_argument, "exp rate must be positive");
    return f;
  }
  if (f.name == "const") {
    f.param = colon == std::string::npos ? 1.0 : std::stod(text.substr(colon + 1));
    if (!(f.param > 0.0)) fail(errc::invalid_argument, "const scale must be positive");
    return f;
  }
  fail(errc::invalid_argument, "unknown decay function: " + text);
}

FloydAdmissibility floyd_admissibility(const DecayFunction& f, int range) {
  FloydAdmissibility a;
  double prev = f(0);
  if (!(prev > 0.0)) return {false, 0.0, "f(0) is nonpositive"};
  for (int n = 1; n <= range; ++n) {
    double cur = f(n);
    if (!(cur > 0.0)) return {false, 0.0, "f(" + std::to_string(n) + ") is nonpositive"};
    if (cur > prev) return {false, 0.0, "f increases at n=" + std::to_string(n)};
    a.lambda_min = std::min(a.lambda_min, cur / prev);
    prev = cur;
  }
  return a;
}

namespace {

class FloydGraph final : public LazyGraph {
public:
  FloydGraph(std::shared_ptr<const LazyGraph> base, std::string basepoint, DecayFunction f)
      : base_(std::move(base)), basepoint_(std::move(basepoint)), f_(f) {
    if (!(f_(0) > 0.0)) fail(errc::invalid_argument, "decay function must be positive");
  }

  std::string name() const override { return "floyd(" + base_->name() + ")"; }
  std::vector<ParamDoc> params() const override {
    std::vector<ParamDoc> p = base_->params();
    p.push_back({"basepoint", basepoint_, "hop-distance origin"});
    p.push_back({"f", f_.name + (f_.param != 0.0 ? ":" + std::to_string(f_.param) : ""), "decay function"});
    return p;
  }
  std::string doc() const override { return "hop-distance reweighting of " + base_->name(); }
  std::string root() const override { return basepoint_; }
  int max_level() const override { return base_->max_level(); }

  Truncation truncate(int level) const override {
    Truncation t = base_->truncate(level);
    int p = t.graph.vertex_index(basepoint_);
    if (p < 0) fail(errc::precondition, "basepoint " + basepoint_ + " not emitted at level " + std::to_string(level));
    // unit-step hop distances
    std::vector<int> hop(t.graph.vertex_count(), -1);
    std::queue<int> q;
    hop[p] = 0;
    q.push(p);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int e : t.graph.incident(u)) {
        int w = t.graph.other_end(e, u);
        if (hop[w] < 0) {
          hop[w] = hop[u] + 1;
          q.push(w);
        }
      }
    }
    int max_hop = 0;
    for (int h : hop) max_hop = std::max(max_hop, h);
    FloydAdmissibility adm = floyd_admissibility(f_, max_hop);
    if (!adm.ok) fail(errc::precondition, "inadmissible decay function: " + adm.note);

    Truncation out;
    out.level = level;
    out.frontier = t.frontier;
    for (int v = 0; v < t.graph.vertex_count(); ++v) out.graph.add_vertex(t.graph.vertex_id(v));
    for (const Edge& e : t.graph.edges()) {
      if (hop[e.u] < 0 && hop[e.v] < 0)
        fail(errc::precondition, "basepoint does not reach edge " + e.id);
      int h = hop[e.u] < 0 ? hop[e.v] : (hop[e.v] < 0 ? hop[e.u] : std::min(hop[e.u], hop[e.v]));
      double len = f_(h);
      if (!(len > 0.0)) fail(errc::invalid_argument, "decay function vanishes at hop " + std::to_string(h));
      out.graph.add_edge(e.id, t.graph.vertex_id(e.u), t.graph.vertex_id(e.v), len);
    }
    return out;
  }

  LengthSchedule schedule() const override {
    return {Summability::unknown, std::nullopt, "depends on the balance of hop-ball growth against the decay"};
  }

private:
  std::shared_ptr<const LazyGraph> base_;
  std::string basepoint_;
  DecayFunction f_;
};

}  // namespace

std::unique_ptr<LazyGraph> floyd_lengths(std::shared_ptr<const LazyGraph> base, const std::string& basepoint,
                                         DecayFunction f) {
  return std::make_unique<FloydGraph>(std::move(base), basepoint, f);
}

// ------------------------------------------------------- tree reweighting

NstAssignment nst_lengths(const WeightedGraph& g, const std::string& root) {
  if (!g.connected()) fail(errc::precondition, "nst_lengths needs a connected graph");
  for (const Edge& e : g.edges())
    if (e.is_loop()) fail(errc::precondition, "nst_lengths: loop " + e.id + " would receive length zero");
  int r = g.require_vertex(root);

  NstAssignment out;
  out.root = root;
  std::vector<int> depth(g.vertex_count(), -1);
  // depth-first, children explored in edge-id order
  struct Frame {
    int v;
    std::vector<int> edges;
    size_t next = 0;
  };
  auto sorted_incident = [&](int v) {
    std::vector<int> es = g.incident(v);
    std::sort(es.begin(), es.end(), [&](int a, int b) { return g.edge(a).id < g.edge(b).id; });
    return es;
  };
  std::vector<Frame> stack;
  depth[r] = 0;
  stack.push_back({r, sorted_incident(r)});
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next >= f.edges.size()) {
      stack.pop_back();
      continue;
    }
    int e = f.edges[f.next++];
    int w = g.other_end(e, f.v);
    if (depth[w] >= 0) continue;
    depth[w] = depth[f.v] + 1;
    out.tree_edges.push_back(g.edge(e).id);
    stack.push_back({w, sorted_incident(w)});
  }

  for (int v = 0; v < g.vertex_count(); ++v) out.level[g.vertex_id(v)] = depth[v];
  for (const Edge& e : g.edges()) {
    int lo = std::min(depth[e.u], depth[e.v]);
    int hi = std::max(depth[e.u], depth[e.v]);
    if (lo == hi) fail(errc::internal, "depth-first tree produced a cross edge at " + e.id);
    out.assignment[e.id] = std::ldexp(1.0, -lo) - std::ldexp(1.0, -hi);
  }
  return out;
}

// ----------------------------------------------------------- comb or star

namespace {

std::vector<std::string> path_vertices(const WeightedGraph& g, const std::string& from,
                                       const std::vector<std::string>& edge_witness) {
  std::vector<std::string> vs{from};
  int cur = g.require_vertex(from);
  for (const std::string& eid : edge_witness) {
    cur = g.other_end(g.require_edge(eid), cur);
    vs.push_back(g.vertex_id(cur));
  }
  return vs;
}

}  // namespace

CombOrStar comb_or_star(const LazyGraph& g, const std::vector<std::string>& vseq, int budget) {
  CombOrStar res;
  res.budget_used = budget;
  if (vseq.size() < 3) fail(errc::precondition, "comb_or_star needs at least three sequence vertices");
  Truncation t = g.truncate(budget);
  const WeightedGraph& G = t.graph;
  for (const std::string& v : vseq)
    if (G.vertex_index(v) < 0)
      fail(errc::precondition, "sequence vertex " + v + " not emitted within budget level " + std::to_string(budget));

  // consecutive near-shortest (here: exact) connecting paths
  std::vector<std::vector<std::string>> paths;  // vertex lists
  for (size_t i = 0; i + 1 < vseq.size(); ++i) {
    if (vseq[i] == vseq[i + 1]) continue;
    DistanceResult r = dist(G, vseq[i], vseq[i + 1]);
    if (r.unreachable) {
      res.kind = "inconclusive";
      res.note = "sequence vertices " + vseq[i] + " and " + vseq[i + 1] + " are disconnected at this budget";
      return res;
    }
    paths.push_back(path_vertices(G, vseq[i], r.witness));
  }
  if (paths.empty()) {
    res.kind = "inconclusive";
    res.note = "sequence is constant";
    return res;
  }

  // union subgraph R'
  std::set<std::string> rp_vertices;
  std::set<std::pair<std::string, std::string>> rp_pairs;
  WeightedGraph R;
  for (const auto& pv : paths)
    for (const std::string& v : pv)
      if (rp_vertices.insert(v).second) R.add_vertex(v);
  int tag = 0;
  for (const auto& pv : paths)
    for (size_t i = 0; i + 1 < pv.size(); ++i) {
      auto key = std::minmax(pv[i], pv[i + 1]);
      if (rp_pairs.insert(key).second)
        R.add_edge("u" + std::to_string(tag++), pv[i], pv[i + 1], 1.0);
    }

  // --- star attempt: a vertex lying on every connecting path
  std::vector<std::vector<std::string>> star_legs;
  std::string center;
  {
    std::set<std::string> common(paths[0].begin(), paths[0].end());
    for (size_t i = 1; i < paths.size() && !common.empty(); ++i) {
      std::set<std::string> cur(paths[i].begin(), paths[i].end());
      std::set<std::string> inter;
      std::set_intersection(common.begin(), common.end(), cur.begin(), cur.end(),
                            std::inserter(inter, inter.begin()));
      common = std::move(inter);
    }
    if (!common.empty()) {
      center = *common.begin();
      std::set<std::string> used{center};
      std::set<std::string> reached;
      for (size_t i = 0; i < paths.size(); ++i) {
        const auto& pv = paths[i];
        auto cpos = std::find(pv.begin(), pv.end(), center);
        // two candidate legs: center -> both endpoints of this path
        for (bool forward : {false, true}) {
          std::vector<std::string> leg;
          if (forward)
            leg.assign(cpos, pv.end());
          else {
            leg.assign(pv.begin(), cpos + 1);
            std::reverse(leg.begin(), leg.end());
          }
          if (leg.size() < 2) continue;             // center is the sequence point itself
          if (reached.count(leg.back())) continue;  // already have a leg to this sequence point
          bool clean = true;
          for (size_t j = 1; j < leg.size() && clean; ++j)
            if (used.count(leg[j])) clean = false;
          if (!clean) continue;
          for (size_t j = 1; j < leg.size(); ++j) used.insert(leg[j]);
          reached.insert(leg.back());
          star_legs.push_back(std::move(leg));
        }
      }
    }
  }

  // --- comb attempt: spine from the first to the last sequence vertex,
  // teeth = disjoint connections from the other sequence vertices
  std::vector<std::vector<std::string>> comb_teeth;
  std::vector<std::string> spine;
  {
    DistanceResult sp = dist(R, vseq.front(), vseq.back());
    if (!sp.unreachable) {
      spine = path_vertices(R, vseq.front(), sp.witness);
      std::set<std::string> on_spine(spine.begin(), spine.end());
      std::set<std::string> used;  // vertices consumed by teeth (never spine vertices)
      std::set<std::string> attachments;
      for (const std::string& x : vseq) {
        if (on_spine.count(x)) {
          if (attachments.insert(x).second) comb_teeth.push_back({x});  // trivial tooth
          continue;
        }
        if (used.count(x)) continue;
        // shortest R-path from x to the spine
        int src = R.vertex_index(x);
        if (src < 0) continue;
        std::vector<double> d = dijkstra(R, src);
        std::string bestv;
        for (const std::string& s : spine) {
          int si = R.vertex_index(s);
          if (d[si] == kInf) continue;
          if (bestv.empty() || d[si] < d[R.vertex_index(bestv)] ||
              (d[si] == d[R.vertex_index(bestv)] && s < bestv))
            bestv = s;
        }
        if (bestv.empty()) continue;
        DistanceResult leg = dist(R, bestv, x);
        std::vector<std::string> tooth = path_vertices(R, bestv, leg.witness);
        // first vertex on the spine, everything else fresh
        bool clean = !attachments.count(tooth.front());
        for (size_t j = 1; j < tooth.size() && clean; ++j)
          if (on_spine.count(tooth[j]) || used.count(tooth[j])) clean = false;
        if (!clean) continue;
        attachments.insert(tooth.front());
        for (size_t j = 1; j < tooth.size(); ++j) used.insert(tooth[j]);
        comb_teeth.push_back(std::move(tooth));
      }
    }
  }

  int star_count = static_cast<int>(star_legs.size());
  int comb_count = static_cast<int>(comb_teeth.size());
  if (star_count < 3) star_count = 0;
  if (comb_count < 3) comb_count = 0;
  if (star_count == 0 && comb_count == 0) {
    res.kind = "inconclusive";
    res.note = "no certificate with at least three teeth or leaves within budget";
    return res;
  }
  if (star_count > comb_count) {
    res.kind = "star";
    res.center = center;
    res.legs = std::move(star_legs);
    res.count = star_count;
  } else {
    res.kind = "comb";
    res.spine = std::move(spine);
    res.legs = std::move(comb_teeth);
    res.count = comb_count;
  }
  return res;
}

}  // namespace ltop
