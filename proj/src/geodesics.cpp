#include "asdimlab/geodesics.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace asdim {

std::string to_string(FamilyKind kind) { return kind == FamilyKind::All ? "all" : "canonical"; }

GeodesicFamily::GeodesicFamily(const MetricGraph& g, FamilyKind kind, std::size_t cap)
    : GeodesicFamily(std::make_shared<const DistanceTable>(g), kind, cap) {}

GeodesicFamily::GeodesicFamily(std::shared_ptr<const DistanceTable> distances, FamilyKind kind,
                               std::size_t cap)
    : distances_(std::move(distances)), kind_(kind), cap_(cap) {
  if (!distances_) throw std::invalid_argument("geodesic family needs a distance table");
  if (cap_ == 0) throw std::invalid_argument("geodesic cap must be positive");
}

void GeodesicFamily::require_connected(VertexId u, VertexId v) const {
  if ((*distances_)(u, v) == kUnreachable)
    throw GraphError("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                     " lie in different components");
}

Path GeodesicFamily::canonical_path(VertexId u, VertexId v) const {
  require_connected(u, v);
  const auto& g = graph();
  const auto to_v = distances_->from(v);
  Path out{u};
  VertexId w = u;
  while (w != v) {
    const auto want = to_v[w] - 1;
    for (VertexId x : g.neighbors(w)) {
      if (to_v[x] == want) {
        w = x;
        break;
      }
    }
    out.push_back(w);
  }
  return out;
}

GeodesicList GeodesicFamily::resolve(VertexId u, VertexId v) const {
  require_connected(u, v);
  if (kind_ == FamilyKind::Canonical) return {{canonical_path(u, v)}, false};
  return all_geodesics(graph(), u, v, cap_);
}

bool GeodesicFamily::on_geodesic(VertexId u, VertexId v, VertexId w) const {
  graph().check(w);
  require_connected(u, v);
  if (kind_ == FamilyKind::All) {
    const auto& d = *distances_;
    const auto uw = d(u, w);
    return uw != kUnreachable && uw + d(w, v) == d(u, v);
  }
  const auto p = canonical_path(u, v);
  return std::find(p.begin(), p.end(), w) != p.end();
}

namespace {

/// Vertices of the geodesic interval from u to v reachable without touching
/// `blocked`, layer by layer from u.
template <class Blocked>
std::vector<std::vector<VertexId>> interval_layers(const MetricGraph& g, const DistanceRow& to_v,
                                                   VertexId u, const Blocked& blocked) {
  std::vector<std::vector<VertexId>> layers;
  if (blocked(u)) return layers;
  layers.push_back({u});
  for (auto left = to_v[u]; left > 0; --left) {
    std::vector<VertexId> next;
    for (VertexId w : layers.back())
      for (VertexId x : g.neighbors(w))
        if (to_v[x] == left - 1 && !blocked(x)) next.push_back(x);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (next.empty()) break;
    layers.push_back(std::move(next));
  }
  return layers;
}

/// A geodesic from u to v avoiding `blocked`, least-id at each step from v back.
template <class Blocked>
std::optional<Path> avoid(const MetricGraph& g, const DistanceTable& dist, VertexId u, VertexId v,
                          const Blocked& blocked) {
  const auto to_v = dist.from(v);
  const auto layers = interval_layers(g, to_v, u, blocked);
  if (layers.empty() || layers.size() != static_cast<std::size_t>(to_v[u]) + 1) return std::nullopt;
  Path back{v};
  for (auto i = layers.size() - 1; i-- > 0;) {
    const auto& layer = layers[i];
    const VertexId w = back.back();
    for (VertexId x : layer) {
      if (g.adjacent(x, w)) {
        back.push_back(x);
        break;
      }
    }
  }
  std::reverse(back.begin(), back.end());
  return back;
}

}  // namespace

std::vector<VertexId> GeodesicFamily::g_set(VertexId u, VertexId v) const {
  require_connected(u, v);
  if (kind_ == FamilyKind::Canonical) {
    auto p = canonical_path(u, v);
    std::sort(p.begin(), p.end());
    return p;
  }
  std::vector<VertexId> out;
  for (auto& layer : interval_layers(graph(), distances_->from(v), u, [](VertexId) { return false; }))
    out.insert(out.end(), layer.begin(), layer.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Path> GeodesicFamily::avoiding_geodesic(VertexId u, VertexId v,
                                                      const std::function<bool(VertexId)>& blocked) const {
  require_connected(u, v);
  if (kind_ == FamilyKind::Canonical) {
    auto p = canonical_path(u, v);
    if (std::any_of(p.begin(), p.end(), blocked)) return std::nullopt;
    return p;
  }
  return avoid(graph(), *distances_, u, v, blocked);
}

std::vector<VertexId> GeodesicFamily::crossings(VertexId x, VertexId target, std::uint32_t level) const {
  require_connected(x, target);
  const auto to_t = distances_->from(target);
  if (level > to_t[x])
    throw std::invalid_argument("crossing level " + std::to_string(level) + " exceeds d(x, target) = " +
                                std::to_string(to_t[x]));
  if (kind_ == FamilyKind::Canonical) {
    for (VertexId w : canonical_path(x, target))
      if (to_t[w] == level) return {w};
    throw std::logic_error("canonical geodesic skipped a distance level");
  }
  const auto& g = graph();
  std::vector<VertexId> front{x};
  for (auto left = to_t[x]; left > level; --left) {
    std::vector<VertexId> next;
    for (VertexId w : front)
      for (VertexId y : g.neighbors(w))
        if (to_t[y] == left - 1) next.push_back(y);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    front = std::move(next);
  }
  return front;
}

std::vector<VertexId> g_set(const GeodesicFamily& fam, VertexId a, VertexId b) { return fam.g_set(a, b); }

std::vector<VertexId> g_set_r(const GeodesicFamily& fam, VertexId a, VertexId b, std::uint32_t r) {
  const auto& g = fam.graph();
  const auto A = ball(g, a, r);
  const auto B = ball(g, b, r);
  std::vector<char> mark(g.vertex_count(), 0);
  for (VertexId x : A)
    for (VertexId y : B)
      for (VertexId v : fam.g_set(x, y)) mark[v] = 1;
  std::vector<VertexId> out;
  for (VertexId v = 0; v < mark.size(); ++v)
    if (mark[v]) out.push_back(v);
  return out;
}

std::uint32_t triangle_thinness(const DistanceTable& dist, const std::array<Path, 3>& sides) {
  std::uint32_t worst = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (VertexId p : sides[i]) {
      std::uint32_t nearest = kUnreachable;
      for (std::size_t j = 0; j < 3 && nearest > 0; ++j) {
        if (j == i) continue;
        for (VertexId w : sides[j]) nearest = std::min(nearest, dist(p, w));
      }
      worst = std::max(worst, nearest);
    }
  }
  return worst;
}

namespace {

/// F(p; u, v) = max over geodesics from u to v of their distance to p.
class FarthestGeodesic {
 public:
  explicit FarthestGeodesic(const DistanceTable& dist) : dist_(dist), g_(dist.graph()) {}

  std::uint32_t value(VertexId p, VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    const auto n = static_cast<std::uint64_t>(g_.vertex_count());
    const auto key = (p * n + u) * n + v;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const auto out = solve(p, u, v, nullptr);
    memo_.emplace(key, out);
    return out;
  }

  /// A geodesic from u to v attaining value(p, u, v).
  Path witness(VertexId p, VertexId u, VertexId v) {
    Path out;
    solve(p, u, v, &out);
    return out;
  }

  void clear_if_large() {
    if (memo_.size() > 4'000'000) memo_.clear();
  }

 private:
  std::uint32_t solve(VertexId p, VertexId u, VertexId v, Path* path) {
    const auto to_v = dist_.from(v);
    const auto from_p = dist_.from(p);
    const auto layers = interval_layers(g_, to_v, u, [](VertexId) { return false; });
    if (value_.empty()) {
      value_.resize(g_.vertex_count());
      hop_.resize(g_.vertex_count());
    }
    value_[v] = from_p[v];
    hop_[v] = v;
    for (auto i = layers.size() - 1; i-- > 0;) {
      for (VertexId w : layers[i]) {
        std::uint32_t down = 0;
        VertexId hop = w;
        for (VertexId x : g_.neighbors(w)) {
          if (to_v[x] + 1 != to_v[w]) continue;
          // Layers are processed from v outward, so value_[x] is current.
          const auto val = value_[x];
          if (val > down || hop == w) {
            down = val;
            hop = x;
          }
        }
        value_[w] = std::min(from_p[w], down);
        hop_[w] = hop;
      }
    }
    if (path) {
      path->assign({u});
      for (VertexId w = u; w != v;) {
        w = hop_[w];
        path->push_back(w);
      }
    }
    return value_[u];
  }

  const DistanceTable& dist_;
  const MetricGraph& g_;
  std::unordered_map<std::uint64_t, std::uint32_t> memo_;
  std::vector<std::uint32_t> value_;  // scratch, valid on the current interval
  std::vector<VertexId> hop_;
};

std::uint64_t multiset_triples(std::uint64_t n) { return n * (n + 1) * (n + 2) / 6; }

Path join_through(const GeodesicFamily& fam, VertexId u, VertexId p, VertexId v) {
  auto first = canonical_geodesic(fam.graph(), u, p);
  const auto second = canonical_geodesic(fam.graph(), p, v);
  first.insert(first.end(), second.begin() + 1, second.end());
  return first;
}

}  // namespace

HyperbolicityReport thin_delta(const GeodesicFamily& fam, std::uint64_t budget, std::uint64_t seed) {
  const auto& g = fam.graph();
  const auto& dist = fam.distances();
  const auto n = static_cast<VertexId>(g.vertex_count());
  if (n == 0) throw GraphError("thin_delta on an empty graph");
  if (!g.is_connected()) throw GraphError("thin_delta needs a connected graph");

  HyperbolicityReport rep;
  rep.triangles_total = multiset_triples(n);

  // Triangles in a tree are tripods whatever the family.
  if (g.is_tree() && rep.triangles_total > budget) {
    const VertexId y = std::min<VertexId>(1, n - 1);
    const VertexId z = std::min<VertexId>(2, n - 1);
    rep.witness = {canonical_geodesic(g, 0, y), canonical_geodesic(g, y, z), canonical_geodesic(g, 0, z)};
    rep.delta = triangle_thinness(dist, rep.witness);
    rep.exhaustive = true;
    rep.method = "acyclic";
    return rep;
  }

  std::vector<std::array<VertexId, 3>> triples;
  if (rep.triangles_total <= budget) {
    rep.exhaustive = true;
    rep.method = "scan";
  } else {
    rep.method = "sample";
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<VertexId> pick(0, n - 1);
    triples.resize(budget);
    for (auto& t : triples) {
      t = {pick(rng), pick(rng), pick(rng)};
      std::sort(t.begin(), t.end());
    }
    std::sort(triples.begin(), triples.end());
  }

  FarthestGeodesic far(dist);
  std::uint32_t best = 0;
  bool have = false;
  std::array<Path, 3> witness;

  auto visit = [&](VertexId x, VertexId y, VertexId z) {
    ++rep.triangles_checked;
    if (fam.kind() == FamilyKind::Canonical) {
      std::array<Path, 3> sides{fam.resolve(x, y).paths.front(), fam.resolve(y, z).paths.front(),
                                fam.resolve(x, z).paths.front()};
      const auto t = triangle_thinness(dist, sides);
      if (!have || t > best) {
        best = t;
        witness = std::move(sides);
        have = true;
      }
      return;
    }
    const std::array<std::pair<VertexId, VertexId>, 3> pairs{{{x, y}, {y, z}, {x, z}}};
    for (std::size_t i = 0; i < 3; ++i) {
      const auto [u, v] = pairs[i];
      const auto& o1 = pairs[(i + 1) % 3];
      const auto& o2 = pairs[(i + 2) % 3];
      const auto to_v = dist.from(v);
      // A point of this side is within d(u, v) / 2 of u or v.
      if (have && to_v[u] / 2 <= best) continue;
      for (auto& layer : interval_layers(g, to_v, u, [](VertexId) { return false; })) {
        for (VertexId p : layer) {
          // Every geodesic holds its endpoints, so F(p; a, b) <= min(d(p, a), d(p, b)).
          if (have) {
            const auto from_p = dist.from(p);
            const auto cap = std::min({from_p[o1.first], from_p[o1.second], from_p[o2.first], from_p[o2.second]});
            if (cap <= best) continue;
          }
          const auto t =std::min(far.value(p, o1.first, o1.second), far.value(p, o2.first, o2.second));
          if (have && t <= best) continue;
          best = t;
          have = true;
          witness[i] = join_through(fam, u, p, v);
          witness[(i + 1) % 3] = far.witness(p, o1.first, o1.second);
          witness[(i + 2) % 3] = far.witness(p, o2.first, o2.second);
        }
      }
    }
    far.clear_if_large();
  };

  if (rep.exhaustive) {
    for (VertexId x = 0; x < n; ++x)
      for (VertexId y = x; y < n; ++y)
        for (VertexId z = y; z < n; ++z) visit(x, y, z);
  } else {
    for (const auto& t : triples) visit(t[0], t[1], t[2]);
  }

  rep.delta = best;
  rep.witness = std::move(witness);
  if (triangle_thinness(dist, rep.witness) != rep.delta)
    throw std::logic_error("thin_delta witness does not realize the reported delta");
  return rep;
}

// ---------------------------------------------------------------------------
// Property B

namespace {

/// Truncated BFS shells: vertices by distance then id, with layer ends.
class Shells {
 public:
  Shells(const MetricGraph& g, std::uint32_t radius)
      : g_(g), radius_(radius), seen_(g.vertex_count(), 0) {}

  struct Entry {
    std::vector<VertexId> verts;
    std::vector<std::uint32_t> ends;  // ends[r] = one past the last vertex at distance r

    std::span<const VertexId> ball(std::uint32_t r) const {
      return {verts.data(), ends[std::min<std::size_t>(r, ends.size() - 1)]};
    }
    std::span<const VertexId> sphere(std::uint32_t r) const {
      if (r >= ends.size()) return {};
      const auto lo = r == 0 ? 0u : ends[r - 1];
      return {verts.data() + lo, ends[r] - lo};
    }
  };

  std::shared_ptr<const Entry> get(VertexId v) {
    auto it = cache_.find(v);
    if (it != cache_.end()) return it->second;
    if (cache_.size() > 200000) cache_.clear();
    return cache_.emplace(v, std::make_shared<const Entry>(compute(v))).first->second;
  }

 private:
  Entry compute(VertexId s) {
    Entry e;
    e.verts.push_back(s);
    e.ends.push_back(1);
    seen_[s] = 1;
    std::size_t lo = 0;
    for (std::uint32_t r = 1; r <= radius_; ++r) {
      const auto hi = e.verts.size();
      for (auto i = lo; i < hi; ++i)
        for (VertexId x : g_.neighbors(e.verts[i]))
          if (!seen_[x]) {
            seen_[x] = 1;
            e.verts.push_back(x);
          }
      std::sort(e.verts.begin() + static_cast<std::ptrdiff_t>(hi), e.verts.end());
      e.ends.push_back(static_cast<std::uint32_t>(e.verts.size()));
      lo = hi;
    }
    for (VertexId v : e.verts) seen_[v] = 0;
    return e;
  }

  const MetricGraph& g_;
  std::uint32_t radius_;
  std::vector<char> seen_;
  std::unordered_map<VertexId, std::shared_ptr<const Entry>> cache_;
};

class PropertyBScan {
 public:
  PropertyBScan(const GeodesicFamily& fam, const PropertyBOptions& opts, PropertyBReport& rep)
      : fam_(fam),
        g_(fam.graph()),
        dist_(fam.distances()),
        opts_(opts),
        rep_(rep),
        shells_(g_, std::max(opts.r_max, opts.k)) {
    const auto n = g_.vertex_count();
    if (fam.kind() == FamilyKind::All && n <= 160) memo_.assign(n * n * n, -1);
  }

  Shells& shells() { return shells_; }

  void record_D(std::uint64_t count, VertexId a, VertexId b, std::uint32_t r, VertexId c) {
    const std::array<std::uint32_t, 4> key{a, b, r, c};
    if (count > rep_.observed_D || (count == rep_.observed_D && rep_.D_witness && key < *rep_.D_witness)) {
      rep_.observed_D = count;
      rep_.D_witness = key;
    }
  }

  void record_violation(VertexId a, VertexId b, std::uint32_t r, VertexId c, Path p) {
    ++rep_.violation_count;
    if (rep_.intersection_violations.size() < kMaxListedViolations)
      rep_.intersection_violations.push_back({a, b, r, c, std::move(p)});
  }

  /// All instances (a, b, r, c) for one pair, r from 0 to r_max.
  void visit_pair(VertexId a, VertexId b) {
    const auto dab = dist_(a, b);
    if (dab == kUnreachable) return;
    for (std::uint32_t r = 0; r <= opts_.r_max; ++r) {
      if (dab < 2 * (r + opts_.ell)) break;
      visit(a, b, r);
    }
  }

  void visit(VertexId a, VertexId b, std::uint32_t r) {
    const auto L = r + opts_.ell;
    const auto from_a = dist_.from(a);
    const auto from_b = dist_.from(b);
    std::vector<VertexId> Q;
    const auto gab = fam_.g_set(a, b);
    for (VertexId c : gab)
      if (from_a[c] >= L && from_b[c] >= L) Q.push_back(c);
    if (Q.empty()) return;

    const auto sa = shells_.get(a);
    const auto A = sa->ball(r);
    std::vector<VertexId> both;  // A ∩ B
    for (VertexId v : A)
      if (from_b[v] <= r) both.push_back(v);

    std::optional<std::vector<VertexId>> g_r;  // G(a, b; r), built on demand
    auto in_g_r = [&](VertexId v) {
      if (std::binary_search(gab.begin(), gab.end(), v)) return true;
      if (!g_r) g_r = union_set(a, b, r);
      return std::binary_search(g_r->begin(), g_r->end(), v);
    };

    for (VertexId c : Q) {
      ++rep_.samples_checked;
      const auto around_c = shells_.get(c);
      const auto X = around_c->ball(opts_.k);
      std::uint64_t count = 0;
      for (VertexId v : X)
        if (in_g_r(v)) ++count;
      record_D(count, a, b, r, c);

      if (auto p = find_miss(a, b, r, c, both)) record_violation(a, b, r, c, std::move(*p));
    }
  }

 private:
  std::vector<VertexId> union_set(VertexId a, VertexId b, std::uint32_t r) {
    std::vector<VertexId> out;
    const auto sa = shells_.get(a);
    const auto sb = shells_.get(b);
    if (fam_.kind() == FamilyKind::All) {
      // Any geodesic between the balls leaves A through S(a; r) and enters B
      // through S(b; r), so sphere pairs suffice.
      out.assign(sa->ball(r).begin(), sa->ball(r).end());
      out.insert(out.end(), sb->ball(r).begin(), sb->ball(r).end());
      for (VertexId x : sa->sphere(r))
        for (VertexId y : sb->sphere(r)) {
          auto part = fam_.g_set(x, y);
          out.insert(out.end(), part.begin(), part.end());
        }
    } else {
      for (VertexId x : sa->ball(r))
        for (VertexId y : sb->ball(r)) {
          auto part = fam_.g_set(x, y);
          out.insert(out.end(), part.begin(), part.end());
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::optional<Path> find_miss(VertexId a, VertexId b, std::uint32_t r, VertexId c,
                                const std::vector<VertexId>& both) {
    const auto from_c = dist_.from(c);
    const auto k = opts_.k;
    auto blocked = [&](VertexId v) { return from_c[v] <= k; };
    const auto sa = shells_.get(a);
    const auto sb = shells_.get(b);

    if (fam_.kind() == FamilyKind::Canonical) {
      for (VertexId x : sa->ball(r))
        for (VertexId y : sb->ball(r))
          if (auto p = fam_.avoiding_geodesic(x, y, blocked)) return p;
      return std::nullopt;
    }

    for (VertexId v : both)
      if (!blocked(v)) return Path{v};
    const auto n = g_.vertex_count();
    for (VertexId x : sa->sphere(r)) {
      for (VertexId y : sb->sphere(r)) {
        if (!memo_.empty()) {
          auto& slot = memo_[(static_cast<std::size_t>(x) * n + y) * n + c];
          if (slot == 0) continue;
          auto p = avoid(g_, dist_, x, y, blocked);
          slot = p ? 1 : 0;
          if (p) return p;
          continue;
        }
        if (auto p = avoid(g_, dist_, x, y, blocked)) return p;
      }
    }
    return std::nullopt;
  }

  const GeodesicFamily& fam_;
  const MetricGraph& g_;
  const DistanceTable& dist_;
  const PropertyBOptions& opts_;
  PropertyBReport& rep_;
  Shells shells_;
  std::vector<std::int8_t> memo_;  // (x, y, c) -> some geodesic avoids N(c; k)
};

/// Rooted BFS of a tree.
struct RootedTree {
  std::vector<std::uint32_t> depth;
  std::vector<VertexId> parent;

  RootedTree(const MetricGraph& g, VertexId root)
      : depth(g.vertex_count(), kUnreachable), parent(g.vertex_count(), root) {
    std::vector<VertexId> queue{root};
    depth[root] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const VertexId w = queue[i];
      for (VertexId x : g.neighbors(w))
        if (depth[x] == kUnreachable) {
          depth[x] = depth[w] + 1;
          parent[x] = w;
          queue.push_back(x);
        }
    }
  }

  VertexId up(VertexId v, std::uint32_t steps) const {
    while (steps-- > 0) v = parent[v];
    return v;
  }

  VertexId meet(VertexId u, VertexId v) const {
    while (depth[u] > depth[v]) u = parent[u];
    while (depth[v] > depth[u]) v = parent[v];
    while (u != v) {
      u = parent[u];
      v = parent[v];
    }
    return u;
  }

  std::uint32_t distance(VertexId u, VertexId v) const { return depth[u] + depth[v] - 2 * depth[meet(u, v)]; }

  /// The vertex `steps` along the path from u to v.
  VertexId along(VertexId u, VertexId v, std::uint32_t steps) const {
    const auto m = meet(u, v);
    const auto rise = depth[u] - depth[m];
    if (steps <= rise) return up(u, steps);
    return up(v, depth[u] + depth[v] - 2 * depth[m] - steps);
  }
};

/// Tree evaluation for the All family with k = 0, root a, far end b.
///
/// Geodesics are unique, so G(a, b) is the path and, with k = 0, N(c; k) ∩
/// G(a, b; r) = {c}. Rooting at a, the qualifying c form the segment from
/// q1 (depth L) to q2 (depth d - L) with L = r + ell. Every geodesic from a
/// point of S(a; r) (depth r <= L) to b* runs through the whole segment iff
/// q2 is an ancestor of b*; it then contains q1 too. Points of S(a; r) never
/// sit strictly below q1, so only S(b; r) needs checking. A ∩ B is at most
/// {q1} and that case has q1 = q2 in X.
class TreeScan {
 public:
  TreeScan(PropertyBScan& generic, const PropertyBOptions& opts, PropertyBReport& rep)
      : generic_(generic), opts_(opts), rep_(rep) {}

  /// `t` is rooted at a.
  void visit(const RootedTree& t, VertexId a, VertexId b, std::uint32_t r) {
    const auto L = r + opts_.ell;
    const auto dab = t.depth[b];
    if (dab < 2 * L) return;
    const VertexId q2 = t.up(b, L);
    const auto dq = t.depth[q2];
    bool ok = true;
    const auto around_b = generic_.shells().get(b);
    for (VertexId y : around_b->sphere(r)) {
      if (y == q2) continue;
      if (t.depth[y] <= dq || t.up(y, t.depth[y] - dq) != q2) {
        ok = false;
        break;
      }
    }
    finish(ok, a, b, r, dab, [&](std::uint32_t s) { return t.up(b, s); });
  }

  /// Same test with `t` rooted anywhere: q2 lies above y as seen from a iff
  /// it lies on the path from y to a.
  void visit_any_root(const RootedTree& t, VertexId a, VertexId b, std::uint32_t r) {
    const auto L = r + opts_.ell;
    const auto dab = t.distance(a, b);
    if (dab < 2 * L) return;
    const VertexId q2 = t.along(b, a, L);
    const auto q2a = dab - L;
    bool ok = true;
    const auto around_b = generic_.shells().get(b);
    for (VertexId y : around_b->sphere(r)) {
      if (y == q2) continue;
      if (t.distance(y, a) != t.distance(y, q2) + q2a) {
        ok = false;
        break;
      }
    }
    finish(ok, a, b, r, dab, [&](std::uint32_t s) { return t.along(b, a, s); });
  }

 private:
  /// `step(s)` is the vertex s along the path from b to a.
  template <class Step>
  void finish(bool ok, VertexId a, VertexId b, std::uint32_t r, std::uint32_t dab, const Step& step) {
    const auto L = r + opts_.ell;
    const auto lo = std::min(a, b);
    const auto hi = std::max(a, b);
    if (!ok) {
      generic_.visit(lo, hi, r);
      return;
    }
    rep_.samples_checked += dab - 2 * L + 1;
    const std::array<std::uint32_t, 4> key{lo, hi, r, 0};
    if (rep_.observed_D < 1 || !rep_.D_witness || key < *rep_.D_witness) {
      VertexId c = step(L);
      for (auto s = L + 1; s <= dab - L; ++s) c = std::min(c, step(s));
      generic_.record_D(1, lo, hi, r, c);
    }
  }

  PropertyBScan& generic_;
  const PropertyBOptions& opts_;
  PropertyBReport& rep_;
};

std::vector<std::pair<VertexId, VertexId>> sample_pairs(std::uint64_t n, std::uint64_t count, bool ordered,
                                                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
  std::vector<std::pair<VertexId, VertexId>> out(count);
  for (auto& [a, b] : out) {
    a = static_cast<VertexId>(pick(rng));
    b = static_cast<VertexId>(pick(rng));
    if (!ordered && a > b) std::swap(a, b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

PropertyBReport check_property_b(const GeodesicFamily& fam, const PropertyBOptions& opts) {
  const auto& g = fam.graph();
  const auto n = static_cast<std::uint64_t>(g.vertex_count());
  const bool ordered = fam.kind() == FamilyKind::Canonical;

  PropertyBReport rep;
  rep.ell = opts.ell;
  rep.k = opts.k;
  rep.r_max = opts.r_max;
  rep.pairs_total = ordered ? n * n : n * (n + 1) / 2;
  rep.exhaustive = rep.pairs_total <= opts.pair_budget;

  std::vector<std::pair<VertexId, VertexId>> pairs;
  if (!rep.exhaustive) pairs = sample_pairs(n, std::min(opts.sample_pairs, rep.pairs_total), ordered, opts.seed);
  rep.pairs_checked = rep.exhaustive ? rep.pairs_total : pairs.size();

  PropertyBScan generic(fam, opts, rep);
  const bool tree = opts.allow_tree_strategy && fam.kind() == FamilyKind::All && opts.k == 0 && n > 0 &&
                    g.is_tree();
  rep.strategy = tree ? "tree" : "generic";

  if (!tree) {
    if (rep.exhaustive) {
      for (VertexId a = 0; a < n; ++a)
        for (VertexId b = ordered ? 0 : a; b < n; ++b) generic.visit_pair(a, b);
    } else {
      for (auto [a, b] : pairs) generic.visit_pair(a, b);
    }
  } else {
    TreeScan scan(generic, opts, rep);
    auto& shells = generic.shells();
    if (rep.exhaustive) {
      // Each unordered pair is rooted at the end with the larger sphere so the
      // scan walks the smaller one.
      std::vector<std::vector<std::uint32_t>> sphere_size(opts.r_max + 1, std::vector<std::uint32_t>(n));
      for (VertexId v = 0; v < n; ++v)
        for (std::uint32_t r = 0; r <= opts.r_max; ++r)
          sphere_size[r][v] = static_cast<std::uint32_t>(shells.get(v)->sphere(r).size());
      for (VertexId a = 0; a < n; ++a) {
        const RootedTree t(g, a);
        for (std::uint32_t r = 0; r <= opts.r_max; ++r) {
          const auto& size = sphere_size[r];
          if (r + opts.ell == 0) scan.visit(t, a, a, r);
          for (VertexId b = 0; b < n; ++b) {
            if (b == a) continue;
            if (size[b] < size[a] || (size[b] == size[a] && a < b)) scan.visit(t, a, b, r);
          }
        }
      }
    } else {
      const RootedTree t(g, 0);
      for (auto [a, b] : pairs)
        for (std::uint32_t r = 0; r <= opts.r_max; ++r) scan.visit_any_root(t, a, b, r);
    }
  }

  auto& v = rep.intersection_violations;
  std::sort(v.begin(), v.end(), [](const PropertyBViolation& x, const PropertyBViolation& y) {
    return std::tie(x.a, x.b, x.r, x.c) < std::tie(y.a, y.b, y.r, y.c);
  });
  if (v.size() > kMaxListedViolations) v.resize(kMaxListedViolations);
  return rep;
}

}  // namespace asdim
