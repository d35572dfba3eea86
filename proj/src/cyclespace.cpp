#include "cyclespace.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <queue>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace ltop {

CycleSpaceElement make_element(const WeightedGraph& g, std::vector<std::string> edges) {
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    fail(errc::invalid_argument, "edge set has duplicates");
  CycleSpaceElement el;
  for (const std::string& id : edges) el.total_length += g.edge(g.require_edge(id)).len;
  el.edges = std::move(edges);
  return el;
}

bool in_cycle_space(const WeightedGraph& g, const std::vector<std::string>& edges, std::string* odd_vertex) {
  std::unordered_map<int, int> deg;
  for (const std::string& id : edges) {
    const Edge& e = g.edge(g.require_edge(id));
    deg[e.u] += e.is_loop() ? 2 : 1;
    if (!e.is_loop()) deg[e.v] += 1;
  }
  for (auto& [v, d] : deg)
    if (d % 2 != 0) {
      if (odd_vertex) *odd_vertex = g.vertex_id(v);
      return false;
    }
  return true;
}

std::vector<CycleSpaceElement> cycle_basis(const WeightedGraph& g) {
  // breadth-first spanning forest, children in edge-id order
  std::vector<int> parent_edge(g.vertex_count(), -1);
  std::vector<int> parent(g.vertex_count(), -1);
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<bool> tree_edge(g.edge_count(), false);
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      std::vector<int> es = g.incident(u);
      std::sort(es.begin(), es.end(), [&](int a, int b) { return g.edge(a).id < g.edge(b).id; });
      for (int e : es) {
        int w = g.other_end(e, u);
        if (seen[w]) continue;
        seen[w] = true;
        parent[w] = u;
        parent_edge[w] = e;
        tree_edge[e] = true;
        q.push(w);
      }
    }
  }
  // depths for the tree-path walk
  std::vector<int> depth(g.vertex_count(), 0);
  {
    std::vector<int> order;
    std::vector<bool> done(g.vertex_count(), false);
    for (int v = 0; v < g.vertex_count(); ++v) {
      int u = v;
      std::vector<int> chain;
      while (u >= 0 && !done[u]) {
        chain.push_back(u);
        u = parent[u];
      }
      for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        depth[*it] = parent[*it] < 0 ? 0 : depth[parent[*it]] + 1;
        done[*it] = true;
      }
    }
  }

  std::vector<CycleSpaceElement> basis;
  std::vector<int> nontree;
  for (int e = 0; e < g.edge_count(); ++e)
    if (!tree_edge[e]) nontree.push_back(e);
  std::sort(nontree.begin(), nontree.end(), [&](int a, int b) { return g.edge(a).id < g.edge(b).id; });
  for (int e : nontree) {
    const Edge& ed = g.edge(e);
    std::vector<std::string> cyc{ed.id};
    int a = ed.u, b = ed.v;
    while (a != b) {
      if (depth[a] >= depth[b]) {
        cyc.push_back(g.edge(parent_edge[a]).id);
        a = parent[a];
      } else {
        cyc.push_back(g.edge(parent_edge[b]).id);
        b = parent[b];
      }
    }
    basis.push_back(make_element(g, std::move(cyc)));
  }
  return basis;
}

namespace {

// Validates that `edges` is the edge set of one simple cycle.
void require_circuit(const WeightedGraph& g, const std::vector<std::string>& edges) {
  if (edges.empty()) fail(errc::precondition, "circuit is empty");
  std::unordered_map<int, int> deg;
  std::vector<int> eix;
  for (const std::string& id : edges) eix.push_back(g.require_edge(id));
  std::sort(eix.begin(), eix.end());
  if (std::adjacent_find(eix.begin(), eix.end()) != eix.end())
    fail(errc::precondition, "circuit has duplicate edges");
  std::unordered_map<int, std::vector<int>> inc;
  for (int e : eix) {
    const Edge& ed = g.edge(e);
    deg[ed.u] += ed.is_loop() ? 2 : 1;
    if (!ed.is_loop()) deg[ed.v] += 1;
    inc[ed.u].push_back(e);
    if (!ed.is_loop()) inc[ed.v].push_back(e);
  }
  for (auto& [v, d] : deg)
    if (d != 2)
      fail(errc::precondition, "not a circuit: vertex " + g.vertex_id(v) + " has degree " + std::to_string(d));
  // connectivity over the incident vertices
  std::unordered_set<int> used;
  std::vector<int> stack{g.edge(eix[0]).u};
  std::unordered_set<int> seen{g.edge(eix[0]).u};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int e : inc[u]) {
      if (used.count(e)) continue;
      used.insert(e);
      int w = g.other_end(e, u);
      if (!seen.count(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
    }
  }
  if (used.size() != eix.size()) fail(errc::precondition, "circuit is not connected");
}

std::vector<std::string> sym_diff(std::vector<std::string> a, std::vector<std::string> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<std::string> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

ThinSumResult thin_sum(const WeightedGraph& g, const std::vector<std::vector<std::string>>& family) {
  ThinSumResult res;
  std::map<std::string, int> occ;
  for (const auto& member : family) {
    require_circuit(g, member);
    for (const std::string& id : member) {
      res.family_total += g.edge(g.require_edge(id)).len;
      occ[id] += 1;
    }
  }
  std::vector<std::string> sum;
  for (auto& [id, count] : occ) {
    res.max_occurrence = std::max(res.max_occurrence, count);
    if (count % 2 == 1) sum.push_back(id);
  }
  res.sum = make_element(g, std::move(sum));
  return res;
}

CircuitFamily circuit_decomposition(const WeightedGraph& g, const std::vector<std::string>& element) {
  std::string odd;
  if (!in_cycle_space(g, element, &odd))
    fail(errc::precondition, "not in the cycle space: vertex " + odd + " has odd degree");

  CircuitFamily fam;
  std::set<int> remaining;
  for (const std::string& id : element) {
    int e = g.require_edge(id);
    if (!remaining.insert(e).second) fail(errc::invalid_argument, "edge set has duplicates");
  }
  auto smallest_unused_at = [&](int v) {
    int best = -1;
    for (int e : g.incident(v))
      if (remaining.count(e) && (best < 0 || g.edge(e).id < g.edge(best).id)) best = e;
    return best;
  };
  while (!remaining.empty()) {
    // walk from the lexicographically smallest remaining edge until a vertex
    // repeats, then peel off the enclosed simple cycle
    int first = *std::min_element(remaining.begin(), remaining.end(), [&](int a, int b) {
      return g.edge(a).id < g.edge(b).id;
    });
    std::vector<int> walk_v{g.edge(first).u};
    std::vector<int> walk_e;
    std::unordered_map<int, int> pos{{g.edge(first).u, 0}};
    int cur = g.edge(first).u;
    while (true) {
      int e = smallest_unused_at(cur);
      if (e < 0) fail(errc::internal, "even-degree walk got stuck");
      remaining.erase(e);
      walk_e.push_back(e);
      cur = g.other_end(e, cur);
      auto it = pos.find(cur);
      if (it != pos.end()) {
        int start = it->second;
        std::vector<std::string> cyc;
        for (size_t i = start; i < walk_e.size(); ++i) cyc.push_back(g.edge(walk_e[i]).id);
        // return the unused prefix to the pool
        for (int i = 0; i < start; ++i) remaining.insert(walk_e[i]);
        fam.circuits.push_back(make_element(g, std::move(cyc)));
        break;
      }
      pos[cur] = static_cast<int>(walk_v.size());
      walk_v.push_back(cur);
    }
  }
  for (const CycleSpaceElement& c : fam.circuits) {
    fam.total_length += c.total_length;
    for (const std::string& id : c.edges) fam.occurrence[id] += 1;
  }
  return fam;
}

GeodeticFamily geodetic_generate(const WeightedGraph& g, const std::vector<std::string>& element) {
  GeodeticFamily out;
  if (element.empty()) return out;
  CircuitFamily start = circuit_decomposition(g, element);

  std::deque<CycleSpaceElement> work(start.circuits.begin(), start.circuits.end());
  std::vector<CycleSpaceElement> done;
  size_t guard = 0;
  while (!work.empty()) {
    if (++guard > 1000000) fail(errc::internal, "geodetic splitting did not terminate");
    CycleSpaceElement c = std::move(work.front());
    work.pop_front();
    GeodeticCheck chk = is_geodetic_cycle(g, c.edges);
    if (chk.geodetic) {
      done.push_back(std::move(c));
      continue;
    }
    // split at the witness pair: both arcs between x and y, against the
    // strictly shorter path
    std::vector<std::string> arc1, arc2;
    {
      // canonical walk of the cycle to separate the two arcs
      int x = g.require_vertex(chk.x);
      int y = g.require_vertex(chk.y);
      std::unordered_map<int, std::vector<int>> inc;
      for (const std::string& id : c.edges) {
        int e = g.require_edge(id);
        inc[g.edge(e).u].push_back(e);
        if (!g.edge(e).is_loop()) inc[g.edge(e).v].push_back(e);
      }
      std::unordered_set<int> used;
      int cur = x;
      bool in_first = true;
      while (true) {
        int next_e = -1;
        for (int e : inc[cur])
          if (!used.count(e) && (next_e < 0 || g.edge(e).id < g.edge(next_e).id)) next_e = e;
        if (next_e < 0) break;
        used.insert(next_e);
        (in_first ? arc1 : arc2).push_back(g.edge(next_e).id);
        cur = g.other_end(next_e, cur);
        if (cur == y) in_first = false;
        if (cur == x) break;
      }
    }
    SplitStep step;
    step.replaced_length = c.total_length;
    for (auto& piece_edges : {sym_diff(arc1, chk.shorter_path), sym_diff(arc2, chk.shorter_path)}) {
      if (piece_edges.empty()) fail(errc::internal, "geodetic split produced an empty piece");
      CircuitFamily pieces = circuit_decomposition(g, piece_edges);
      for (CycleSpaceElement& p : pieces.circuits) {
        if (!(p.total_length < c.total_length))
          fail(errc::internal, "geodetic split piece is not strictly shorter");
        step.piece_lengths.push_back(p.total_length);
        work.push_back(std::move(p));
      }
    }
    out.trace.push_back(std::move(step));
  }
  out.family.circuits = std::move(done);
  for (const CycleSpaceElement& c : out.family.circuits) {
    out.family.total_length += c.total_length;
    for (const std::string& id : c.edges) out.family.occurrence[id] += 1;
  }
  return out;
}

std::vector<std::vector<std::string>> enumerate_cycles(const WeightedGraph& g) {
  // DFS over edge sequences, keeping only cycles reported from their
  // smallest edge to avoid duplicates; intended for small graphs.
  std::vector<std::vector<std::string>> out;
  std::set<std::vector<int>> seen;
  int m = g.edge_count();
  std::vector<int> path_edges;
  std::vector<bool> on_path_vertex(g.vertex_count(), false);

  std::function<void(int, int, int)> extend = [&](int start_v, int cur, int first_edge) {
    for (int e : g.incident(cur)) {
      if (e < first_edge) continue;
      if (!path_edges.empty() && e == path_edges.back()) continue;
      if (std::find(path_edges.begin(), path_edges.end(), e) != path_edges.end()) continue;
      int w = g.other_end(e, cur);
      if (w == start_v) {
        if (path_edges.empty() && !g.edge(e).is_loop()) continue;  // parallel pair handled below
        std::vector<int> cyc = path_edges;
        cyc.push_back(e);
        std::sort(cyc.begin(), cyc.end());
        if (seen.insert(cyc).second) {
          std::vector<std::string> ids;
          for (int ce : cyc) ids.push_back(g.edge(ce).id);
          out.push_back(std::move(ids));
        }
        continue;
      }
      if (on_path_vertex[w]) continue;
      on_path_vertex[w] = true;
      path_edges.push_back(e);
      extend(start_v, w, first_edge);
      path_edges.pop_back();
      on_path_vertex[w] = false;
    }
  };

  for (int e0 = 0; e0 < m; ++e0) {
    const Edge& ed = g.edge(e0);
    if (ed.is_loop()) {
      out.push_back({ed.id});
      continue;
    }
    on_path_vertex[ed.u] = true;
    on_path_vertex[ed.v] = true;
    path_edges = {e0};
    extend(ed.u, ed.v, e0);  // walks back toward ed.u close a cycle through e0
    path_edges.clear();
    on_path_vertex[ed.u] = false;
    on_path_vertex[ed.v] = false;
  }
  return out;
}

int gf2_rank(const WeightedGraph& g, const std::vector<std::vector<std::string>>& sets) {
  int m = g.edge_count();
  std::vector<std::vector<uint64_t>> rows;
  int words = (m + 63) / 64;
  for (const auto& s : sets) {
    std::vector<uint64_t> row(words, 0);
    for (const std::string& id : s) {
      int e = g.require_edge(id);
      row[e / 64] ^= (1ULL << (e % 64));
    }
    rows.push_back(std::move(row));
  }
  int rank = 0;
  for (int col = 0; col < m && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][col / 64] & (1ULL << (col % 64))) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank) continue;
      if (rows[r][col / 64] & (1ULL << (col % 64)))
        for (int w = 0; w < words; ++w) rows[r][w] ^= rows[rank][w];
    }
    ++rank;
  }
  return rank;
}

}  // namespace ltop
