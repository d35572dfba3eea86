#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "json.hpp"
#include "lazy.hpp"

namespace ltop {
namespace {

constexpr int kMaxLevel = 20;  // keeps exponential truncations within memory

void check_level(int level) {
  if (level < 0) fail(errc::invalid_argument, "truncation level must be >= 0");
  if (level > kMaxLevel) fail(errc::invalid_argument, "truncation level exceeds supported maximum of 20");
}

double pow2d(int k) { return std::ldexp(1.0, k); }

std::string itos(long long v) { return std::to_string(v); }

// ---------------------------------------------------------------- ladder

class LadderStrip final : public LazyGraph {
public:
  explicit LadderStrip(std::string mode) : mode_(std::move(mode)) {
    if (mode_ != "unit" && mode_ != "halving") fail(errc::invalid_argument, "ladder-strip: len must be unit or halving");
  }

  std::string name() const override { return "ladder-strip"; }
  std::vector<ParamDoc> params() const override {
    return {{"len", mode_, "edge lengths: unit, or halving (column i edges ~ 2^-i)"}};
  }
  std::string doc() const override {
    return "one-ended ladder; level n emits columns 0..n (rungs r<i>, rails ra<i>/rb<i>)";
  }
  std::string root() const override { return "a0"; }

  Truncation truncate(int n) const override {
    check_level(n);
    Truncation t;
    t.level = n;
    for (int i = 0; i <= n; ++i) {
      t.graph.add_vertex("a" + itos(i));
      t.graph.add_vertex("b" + itos(i));
    }
    for (int i = 0; i <= n; ++i) {
      t.graph.add_edge("r" + itos(i), "a" + itos(i), "b" + itos(i), rung(i));
      if (i < n) {
        t.graph.add_edge("ra" + itos(i), "a" + itos(i), "a" + itos(i + 1), rail(i));
        t.graph.add_edge("rb" + itos(i), "b" + itos(i), "b" + itos(i + 1), rail(i));
      }
    }
    t.frontier = {"a" + itos(n), "b" + itos(n)};
    return t;
  }

  LengthSchedule schedule() const override {
    if (mode_ == "unit") return {Summability::diverging, std::nullopt, "three unit edges per column"};
    return {Summability::converging, Rational(4), "rungs sum to 2, rails sum to 2"};
  }

  std::optional<double> min_future_edge(const std::string& v, int level) const override {
    if (v != "a" + itos(level) && v != "b" + itos(level)) return std::nullopt;
    return mode_ == "unit" ? 1.0 : rail(level);
  }

private:
  double rung(int i) const { return mode_ == "unit" ? 1.0 : pow2d(-i); }
  double rail(int i) const { return mode_ == "unit" ? 1.0 : pow2d(-(i + 1)); }
  std::string mode_;
};

// ------------------------------------------------------------- double ray

class DoubleRay final : public LazyGraph {
public:
  explicit DoubleRay(std::string mode) : mode_(std::move(mode)) {
    if (mode_ != "unit" && mode_ != "halving") fail(errc::invalid_argument, "double-ray: len must be unit or halving");
  }

  std::string name() const override { return "double-ray"; }
  std::vector<ParamDoc> params() const override {
    return {{"len", mode_, "edge lengths: unit, or halving (edge i ~ 2^-|i|)"}};
  }
  std::string doc() const override { return "two-ended path; level n emits vertices v-n..vn"; }
  std::string root() const override { return "v0"; }

  Truncation truncate(int n) const override {
    check_level(n);
    Truncation t;
    t.level = n;
    for (int i = -n; i <= n; ++i) t.graph.add_vertex("v" + itos(i));
    for (int i = -n; i < n; ++i)
      t.graph.add_edge("e" + itos(i), "v" + itos(i), "v" + itos(i + 1), len(i));
    t.frontier = n == 0 ? std::vector<std::string>{"v0"} : std::vector<std::string>{"v" + itos(-n), "v" + itos(n)};
    return t;
  }

  LengthSchedule schedule() const override {
    if (mode_ == "unit") return {Summability::diverging, std::nullopt, "unit edges"};
    return {Summability::converging, Rational(2), "each half-ray sums to 1"};
  }

  std::optional<double> min_future_edge(const std::string& v, int level) const override {
    if (v == "v" + itos(level)) return len(level);
    if (v == "v" + itos(-level)) return len(-level - 1);
    return std::nullopt;
  }

private:
  double len(int i) const { return mode_ == "unit" ? 1.0 : pow2d(-std::max(i + 1, -i)); }
  std::string mode_;
};

// ------------------------------------------------------- hyperbolic strip

// Columns k = 0,1,...; column k is a path of 2^k unit edges between the two
// boundary rays, and every column vertex branches to two children in the
// next column, so all of column k sits at hop distance k from h0_0.
class HyperbolicStrip final : public LazyGraph {
public:
  std::string name() const override { return "hyperbolic-strip"; }
  std::vector<ParamDoc> params() const override { return {}; }
  std::string doc() const override {
    return "binary-branching strip; level n emits columns 0..n, column k is a perpendicular path of 2^k edges";
  }
  std::string root() const override { return "h0_0"; }
  int max_level() const override { return kMaxLevel; }

  Truncation truncate(int n) const override {
    check_level(n);
    if (n > 16) fail(errc::invalid_argument, "hyperbolic-strip: level above 16 is too large");
    Truncation t;
    t.level = n;
    for (int k = 0; k <= n; ++k)
      for (long long j = 0; j <= (1LL << k); ++j) t.graph.add_vertex(vid(k, j));
    for (int k = 0; k <= n; ++k) {
      long long w = 1LL << k;
      for (long long j = 0; j < w; ++j)
        t.graph.add_edge("p" + itos(k) + "_" + itos(j), vid(k, j), vid(k, j + 1), 1.0);
      if (k < n) {
        for (long long j = 0; j <= w; ++j) {
          t.graph.add_edge("c" + itos(k) + "_" + itos(j) + "a", vid(k, j), vid(k + 1, 2 * j), 1.0);
          if (j < w)
            t.graph.add_edge("c" + itos(k) + "_" + itos(j) + "b", vid(k, j), vid(k + 1, 2 * j + 1), 1.0);
        }
      }
    }
    for (long long j = 0; j <= (1LL << n); ++j) t.frontier.push_back(vid(n, j));
    return t;
  }

  LengthSchedule schedule() const override {
    return {Summability::diverging, std::nullopt, "roughly 3*2^k unit edges at column k"};
  }

  static std::string vid(int k, long long j) { return "h" + itos(k) + "_" + itos(j); }
};

// -------------------------------------------------------------------- fan

// Two hubs x,y joined to every vertex of a horizontal ray.
class FanGraph final : public LazyGraph {
public:
  explicit FanGraph(std::string mode) : mode_(std::move(mode)) {
    if (mode_ != "unit" && mode_ != "shrinking") fail(errc::invalid_argument, "fan: len must be unit or shrinking");
  }

  std::string name() const override { return "fan"; }
  std::vector<ParamDoc> params() const override {
    return {{"len", mode_, "edge lengths: unit, or shrinking (hub legs xv_i,yv_i ~ 2^-i, ray ~ 2^-(i+1))"}};
  }
  std::string doc() const override {
    return "hubs x,y joined to every ray vertex v0,v1,...; level n emits v0..vn";
  }
  std::string root() const override { return "x"; }

  Truncation truncate(int n) const override {
    check_level(n);
    Truncation t;
    t.level = n;
    t.graph.add_vertex("x");
    t.graph.add_vertex("y");
    for (int i = 0; i <= n; ++i) t.graph.add_vertex("v" + itos(i));
    for (int i = 0; i <= n; ++i) {
      t.graph.add_edge("xv" + itos(i), "x", "v" + itos(i), leg(i));
      t.graph.add_edge("yv" + itos(i), "y", "v" + itos(i), leg(i));
      if (i < n) t.graph.add_edge("h" + itos(i), "v" + itos(i), "v" + itos(i + 1), rail(i));
    }
    t.frontier = {"x", "y", "v" + itos(n)};
    return t;
  }

  LengthSchedule schedule() const override {
    if (mode_ == "unit") return {Summability::diverging, std::nullopt, "unit edges, three per ray vertex"};
    return {Summability::converging, Rational(5), "hub legs sum to 2+2, ray sums to 1"};
  }

  std::optional<double> min_future_edge(const std::string& v, int level) const override {
    if (v == "x" || v == "y") return leg(level + 1);
    if (v == "v" + itos(level)) return rail(level);
    return std::nullopt;
  }

private:
  double leg(int i) const { return mode_ == "unit" ? 1.0 : pow2d(-i); }
  double rail(int i) const { return mode_ == "unit" ? 1.0 : pow2d(-(i + 1)); }
  std::string mode_;
};

// ------------------------------------------------------------------- grid

class GridGraph final : public LazyGraph {
public:
  std::string name() const override { return "grid"; }
  std::vector<ParamDoc> params() const override { return {}; }
  std::string doc() const override { return "quarter grid with unit lengths; level n emits [0..n]^2"; }
  std::string root() const override { return "g0_0"; }

  Truncation truncate(int n) const override {
    check_level(n);
    Truncation t;
    t.level = n;
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) t.graph.add_vertex(vid(i, j));
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        if (i < n) t.graph.add_edge("gr" + itos(i) + "_" + itos(j), vid(i, j), vid(i + 1, j), 1.0);
        if (j < n) t.graph.add_edge("gd" + itos(i) + "_" + itos(j), vid(i, j), vid(i, j + 1), 1.0);
      }
    for (int i = 0; i <= n; ++i) {
      t.frontier.push_back(vid(i, n));
      if (i < n) t.frontier.push_back(vid(n, i));
    }
    return t;
  }

  LengthSchedule schedule() const override { return {Summability::diverging, std::nullopt, "unit edges"}; }

  static std::string vid(int i, int j) { return "g" + itos(i) + "_" + itos(j); }
};

// ------------------------------------------------------------ binary tree

class BinaryTree final : public LazyGraph {
public:
  explicit BinaryTree(std::string mode) : mode_(std::move(mode)) {
    if (mode_ != "unit" && mode_ != "half" && mode_ != "quarter")
      fail(errc::invalid_argument, "binary-tree: len must be unit, half, or quarter");
  }

  std::string name() const override { return "binary-tree"; }
  std::vector<ParamDoc> params() const override {
    return {{"len", mode_, "edge lengths at depth d: unit, half (2^-d), or quarter (4^-d, summable)"}};
  }
  std::string doc() const override { return "rooted binary tree; level n emits depth <= n"; }
  std::string root() const override { return "t"; }
  int max_level() const override { return kMaxLevel; }

  Truncation truncate(int n) const override {
    check_level(n);
    if (n > 18) fail(errc::invalid_argument, "binary-tree: level above 18 is too large");
    Truncation t;
    t.level = n;
    t.graph.add_vertex("t");
    std::vector<std::string> prev = {""};
    for (int d = 1; d <= n; ++d) {
      std::vector<std::string> cur;
      cur.reserve(prev.size() * 2);
      for (const std::string& w : prev)
        for (char b : {'0', '1'}) {
          std::string c = w + b;
          t.graph.add_vertex("t" + c);
          t.graph.add_edge("e" + c, w.empty() ? "t" : "t" + w, "t" + c, len(d));
          cur.push_back(c);
        }
      prev = std::move(cur);
    }
    for (const std::string& w : prev) t.frontier.push_back(w.empty() ? "t" : "t" + w);
    return t;
  }

  LengthSchedule schedule() const override {
    if (mode_ == "unit") return {Summability::diverging, std::nullopt, "2^d unit edges at depth d"};
    if (mode_ == "half") return {Summability::diverging, std::nullopt, "depth d contributes 2^d * 2^-d = 1"};
    return {Summability::converging, Rational(2), "depth d contributes 2^d * 4^-d = 2^-d"};
  }

  std::optional<double> min_future_edge(const std::string&, int level) const override {
    return len(level + 1);
  }

private:
  double len(int d) const {
    if (mode_ == "unit") return 1.0;
    if (mode_ == "half") return pow2d(-d);
    return pow2d(-2 * d);
  }
  std::string mode_;
};

}  // namespace

// ------------------------------------------------------------ wild circle

// Double rays D_w indexed by the empty string and by binary strings that
// start with '0'. Ray D_w carries a total edge length of (2s/3)*4^-|w|; its
// vertices v(w,k), k in Z, accumulate dyadically toward both ray ends.
// Connector edges tie each ray's tails to the chains of deeper rays that
// close in on the same circle point; the connector joining v(w,+-k) to the
// k-th chain ray has length c*2^-(|w|+1+k). In the cyclic (in-order) ray
// ordering the union of all double rays closes up into a single circle
// whose edge lengths sum to s while the circle itself is longer.
WildCircleGraph::WildCircleGraph(Rational c, Rational s) : c_(c), s_(s) {
  if (!(Rational(0) < c_)) fail(errc::invalid_argument, "wild-circle: c must be positive");
  if (!(Rational(0) < s_)) fail(errc::invalid_argument, "wild-circle: s must be positive");
}

std::vector<ParamDoc> WildCircleGraph::params() const {
  return {{"c", c_.str(), "connector length scale: class m connectors have length c*2^-m"},
          {"s", s_.str(), "total length of all double-ray (circle) edges"}};
}

std::string WildCircleGraph::doc() const {
  return "self-similar circle of double rays; level n emits rays of tree depth <= n, each clipped to "
         "2(n-depth)+1 vertices";
}

Rational WildCircleGraph::ray_budget(int depth) const {
  return s_ * Rational(2, 3) / Rational(1LL << (2 * depth));
}

namespace {

// Enumerates the ray index strings of tree depth <= n: "" plus strings
// beginning with '0'.
std::vector<std::string> wild_rays(int n) {
  std::vector<std::string> rays = {""};
  std::vector<std::string> cur;
  if (n >= 1) cur = {"0"};
  int d = 1;
  while (d <= n) {
    rays.insert(rays.end(), cur.begin(), cur.end());
    std::vector<std::string> next;
    next.reserve(cur.size() * 2);
    for (const std::string& w : cur)
      for (char b : {'0', '1'}) next.push_back(w + b);
    cur = std::move(next);
    ++d;
  }
  return rays;
}

std::string wild_vid(const std::string& w, int k) { return "r" + w + ":" + std::to_string(k); }

}  // namespace

Truncation WildCircleGraph::truncate(int n) const {
  check_level(n);
  Truncation t;
  t.level = n;
  std::vector<std::string> rays = wild_rays(n);
  for (const std::string& w : rays) {
    int span = n - static_cast<int>(w.size());
    for (int k = -span; k <= span; ++k) t.graph.add_vertex(wild_vid(w, k));
  }
  for (const std::string& w : rays) {
    int span = n - static_cast<int>(w.size());
    double tw = ray_budget(static_cast<int>(w.size())).to_double();
    for (int k = -span; k < span; ++k) {
      int m = std::max(k + 1, -k);
      t.graph.add_edge("T:" + w + ":" + std::to_string(k), wild_vid(w, k), wild_vid(w, k + 1),
                       tw * pow2d(-(m + 1)));
    }
  }
  // Connectors: v(w,-k) to the center of ray w·0·1^k, and v(w,+k) to the
  // center of ray w·1·0^k (the root wraps onto its single subtree).
  for (const std::string& w : rays) {
    int depth = static_cast<int>(w.size());
    for (int k = 0; depth + 1 + k <= n; ++k) {
      double ln = c_.to_double() * pow2d(-(depth + 1 + k));
      std::string chain_l = w + "0" + std::string(k, '1');
      t.graph.add_edge("L:" + w + ":" + std::to_string(k), wild_vid(w, -k), wild_vid(chain_l, 0), ln);
      std::string chain_r = (w.empty() ? std::string("0") : w + "1") + std::string(k, '0');
      t.graph.add_edge("R:" + w + ":" + std::to_string(k), wild_vid(w, k), wild_vid(chain_r, 0), ln);
    }
  }
  for (const std::string& w : rays) {
    int span = n - static_cast<int>(w.size());
    t.frontier.push_back(wild_vid(w, -span));
    if (span > 0) t.frontier.push_back(wild_vid(w, span));
  }
  return t;
}

LengthSchedule WildCircleGraph::schedule() const {
  return {Summability::diverging, std::nullopt,
          "double-ray edges sum to s; connector class m holds 2^m edges of length c*2^-m, so the "
          "total diverges"};
}

Rational WildCircleGraph::ray_emitted(int level) const {
  Rational sum(0);
  for (int d = 0; d <= level; ++d) {
    long long count = d == 0 ? 1 : (1LL << (d - 1));
    int span = level - d;
    Rational per = ray_budget(d) * (Rational(1) - Rational::pow2neg(span));
    sum += per * Rational(count);
  }
  return sum;
}

long long WildCircleGraph::connector_count(int cls) const {
  if (cls < 1) return 0;
  return 1LL << cls;
}

Rational WildCircleGraph::connector_length(int cls) const { return c_ * Rational::pow2neg(cls); }

std::vector<std::string> WildCircleGraph::circle_order(int level) const {
  std::vector<std::string> seq;
  auto emit_ray = [&](const std::string& w) {
    int span = level - static_cast<int>(w.size());
    for (int k = -span; k <= span; ++k) seq.push_back(wild_vid(w, k));
  };
  // In-order traversal: left subtree, ray, right subtree; the root ray is
  // followed by its single subtree, closing the circle.
  std::function<void(const std::string&)> rec = [&](const std::string& w) {
    if (static_cast<int>(w.size()) > level) return;
    rec(w + "0");
    emit_ray(w);
    rec(w + "1");
  };
  emit_ray("");
  if (level >= 1) rec("0");
  return seq;
}

std::vector<std::string> WildCircleGraph::circle_edges(int level) const {
  std::vector<std::string> out;
  for (const std::string& w : wild_rays(level)) {
    int span = level - static_cast<int>(w.size());
    for (int k = -span; k < span; ++k) out.push_back("T:" + w + ":" + std::to_string(k));
  }
  return out;
}

// ---------------------------------------------------------------- lind

namespace {

class LindGraph final : public LazyGraph {
public:
  explicit LindGraph(MetricSample sample) : sample_(std::move(sample)) {
    sample_.check();
    min_d_ = 0.0;
    for (size_t i = 0; i < sample_.points.size(); ++i)
      for (size_t j = i + 1; j < sample_.points.size(); ++j)
        min_d_ = min_d_ == 0.0 ? sample_.d[i][j] : std::min(min_d_, sample_.d[i][j]);
  }

  std::string name() const override { return "lind"; }
  std::vector<ParamDoc> params() const override {
    return {{"points", std::to_string(sample_.points.size()), "sample size (from the metric file)"}};
  }
  std::string doc() const override {
    return "one column of vertices per sample point, vertical edge n has length 2^-n, row n joins the "
           "first n columns by their sample distances; level n emits rows 1..n";
  }
  std::string root() const override { return vid(1, 0); }

  Truncation truncate(int n) const override {
    check_level(n);
    int rows = std::max(1, n);
    int cols = static_cast<int>(sample_.points.size());
    Truncation t;
    t.level = n;
    for (int r = 1; r <= rows; ++r)
      for (int i = 0; i < cols; ++i) t.graph.add_vertex(vid(r, i));
    for (int r = 1; r <= rows; ++r) {
      if (r < rows)
        for (int i = 0; i < cols; ++i)
          t.graph.add_edge("w" + itos(r) + ":" + sample_.points[i], vid(r, i), vid(r + 1, i), pow2d(-r));
      int reach = std::min(r, cols);
      for (int i = 0; i < reach; ++i)
        for (int j = i + 1; j < reach; ++j)
          t.graph.add_edge("d" + itos(r) + ":" + sample_.points[i] + ":" + sample_.points[j], vid(r, i),
                           vid(r, j), sample_.d[i][j]);
    }
    for (int i = 0; i < cols; ++i) t.frontier.push_back(vid(rows, i));
    return t;
  }

  LengthSchedule schedule() const override {
    if (sample_.points.size() == 1) return {Summability::converging, Rational(1), "a single ray of lengths 2^-n"};
    return {Summability::diverging, std::nullopt,
            "every deep row repeats all pairwise sample distances, so the total diverges"};
  }

  std::optional<double> min_future_edge(const std::string& v, int level) const override {
    int rows = std::max(1, level);
    for (size_t i = 0; i < sample_.points.size(); ++i)
      if (v == vid(rows, static_cast<int>(i)))
        return sample_.points.size() > 1 ? std::min(pow2d(-rows), min_d_) : pow2d(-rows);
    return std::nullopt;
  }

private:
  std::string vid(int row, int col) const { return "z" + itos(row) + ":" + sample_.points[col]; }
  MetricSample sample_;
  double min_d_;
};

// -------------------------------------------------- factory and catalog

using ParamMap = std::map<std::string, std::string>;

std::pair<std::string, ParamMap> parse_spec(const std::string& spec) {
  auto q = spec.find('?');
  std::string name = spec.substr(0, q);
  ParamMap params;
  if (q != std::string::npos) {
    std::stringstream ss(spec.substr(q + 1));
    std::string kv;
    while (std::getline(ss, kv, '&')) {
      if (kv.empty()) continue;
      auto eq = kv.find('=');
      if (eq == std::string::npos) fail(errc::parse, "malformed generator parameter: " + kv);
      params[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
  }
  return {name, params};
}

std::string take(ParamMap& p, const std::string& key, const std::string& dflt) {
  auto it = p.find(key);
  if (it == p.end()) return dflt;
  std::string v = it->second;
  p.erase(it);
  return v;
}

void reject_leftovers(const std::string& name, const ParamMap& p) {
  if (!p.empty()) fail(errc::invalid_argument, "unknown parameter for " + name + ": " + p.begin()->first);
}

MetricSample read_sample_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::not_found, "cannot open metric sample file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(errc::parse, std::string("malformed metric sample JSON: ") + e.what());
  }
  MetricSample s;
  try {
    for (const auto& p : j.at("points")) s.points.push_back(p.get<std::string>());
    for (const auto& row : j.at("d")) {
      std::vector<double> r;
      for (const auto& x : row) r.push_back(x.get<double>());
      s.d.push_back(std::move(r));
    }
  } catch (const std::exception& e) {
    fail(errc::parse, std::string("metric sample JSON needs {points:[...], d:[[...]]}: ") + e.what());
  }
  return s;
}

}  // namespace

std::unique_ptr<LazyGraph> make_lind(MetricSample sample) {
  return std::make_unique<LindGraph>(std::move(sample));
}

std::unique_ptr<LazyGraph> make_generator(const std::string& spec) {
  auto [name, params] = parse_spec(spec);
  std::unique_ptr<LazyGraph> g;
  if (name == "ladder-strip") {
    g = std::make_unique<LadderStrip>(take(params, "len", "unit"));
  } else if (name == "double-ray") {
    g = std::make_unique<DoubleRay>(take(params, "len", "unit"));
  } else if (name == "hyperbolic-strip") {
    g = std::make_unique<HyperbolicStrip>();
  } else if (name == "fan") {
    g = std::make_unique<FanGraph>(take(params, "len", "unit"));
  } else if (name == "grid") {
    g = std::make_unique<GridGraph>();
  } else if (name == "binary-tree") {
    g = std::make_unique<BinaryTree>(take(params, "len", "unit"));
  } else if (name == "wild-circle") {
    Rational c = Rational::parse(take(params, "c", "1"));
    Rational s = Rational::parse(take(params, "s", "1.5"));
    g = std::make_unique<WildCircleGraph>(c, s);
  } else if (name == "lind") {
    std::string file = take(params, "file", "");
    if (file.empty()) fail(errc::invalid_argument, "lind requires file=<metric sample JSON>");
    g = make_lind(read_sample_file(file));
  } else {
    fail(errc::not_found, "unknown generator: " + name);
  }
  reject_leftovers(name, params);
  return g;
}

std::vector<GeneratorInfo> generator_catalog() {
  std::vector<GeneratorInfo> out;
  auto add = [&](const LazyGraph& g) { out.push_back({g.name(), g.doc(), g.params(), true}); };
  add(LadderStrip("unit"));
  add(DoubleRay("unit"));
  add(HyperbolicStrip());
  add(FanGraph("unit"));
  add(GridGraph());
  add(BinaryTree("unit"));
  add(WildCircleGraph(Rational(1), Rational(3, 2)));
  MetricSample one{{"a"}, {{0.0}}};
  add(LindGraph(std::move(one)));
  out.push_back({"slow-decay-strip",
                 "one-ended strip whose lengths decay too slowly to be summable; deferred, no canonical "
                 "schedule chosen",
                 {},
                 false});
  return out;
}

}  // namespace ltop
