#include "asdimlab/a1.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace asdim {

namespace {

/// Breadth-first search reusing its marks between calls.
class LocalBfs {
 public:
  explicit LocalBfs(const MetricGraph& g) : g_(g), stamp_(g.vertex_count(), 0), dist_(g.vertex_count(), 0) {}

  /// Visits every vertex within `radius` of the sources, allowed(v) permitting.
  template <class Allowed>
  const std::vector<VertexId>& run(std::span<const VertexId> sources, std::uint32_t radius, const Allowed& allowed,
                                   std::uint32_t start = 0) {
    ++tick_;
    order_.clear();
    for (VertexId s : sources) {
      if (stamp_[s] == tick_) continue;
      stamp_[s] = tick_;
      dist_[s] = start;
      order_.push_back(s);
    }
    for (std::size_t i = 0; i < order_.size(); ++i) {
      const VertexId v = order_[i];
      if (dist_[v] - start >= radius) continue;
      for (VertexId x : g_.neighbors(v)) {
        if (stamp_[x] == tick_ || !allowed(x)) continue;
        stamp_[x] = tick_;
        dist_[x] = dist_[v] + 1;
        order_.push_back(x);
      }
    }
    return order_;
  }

  bool reached(VertexId v) const { return stamp_[v] == tick_; }
  std::uint32_t dist(VertexId v) const { return dist_[v]; }

 private:
  const MetricGraph& g_;
  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint32_t> dist_;
  std::vector<VertexId> order_;
  std::uint32_t tick_ = 0;
};

constexpr auto kAnywhere = [](VertexId) { return true; };

}  // namespace

std::uint32_t FatSet::depth_of(VertexId x) const {
  auto it = std::lower_bound(members.begin(), members.end(), x);
  if (it == members.end() || *it != x) return 0;
  return depth[static_cast<std::size_t>(it - members.begin())];
}

bool FatCover::in_safe_core(VertexId x) const { return std::binary_search(safe_core.begin(), safe_core.end(), x); }

FatCover build_fat_cover(const GeodesicFamily& fam, std::uint32_t r, std::uint32_t delta, std::uint64_t D,
                         VertexId basepoint) {
  if (r == 0) throw std::invalid_argument("a1 parameter r must be at least 1");
  if (D == 0) throw std::invalid_argument("property-B constant D must be at least 1");
  const auto& g = fam.graph();
  const auto n = g.vertex_count();

  FatCover fc;
  fc.base_r = r;
  fc.D = D;
  fc.base = build_cover(fam, {10 * r, 10 * delta, delta, basepoint});
  if (fc.base.complete_annuli == 0)
    throw ScopeTooSmall("no complete annulus at width " + std::to_string(fc.base.params.width()) +
                        "; basepoint eccentricity is " + std::to_string(fc.base.max_depth));

  LocalBfs bfs(g);
  std::vector<char> inside(n, 0);
  fc.containing.resize(n);
  for (std::size_t i = 0; i < fc.base.sets.size(); ++i) {
    const auto& u = fc.base.sets[i].members;
    FatSet fat;
    fat.origin = i;
    fat.members = bfs.run(u, 2 * r, kAnywhere);
    std::sort(fat.members.begin(), fat.members.end());
    if (fat.members.size() == n)
      throw ScopeTooSmall("fattened set " + std::to_string(i) + " is the whole graph at r = " + std::to_string(r));

    // Nearest complement points are reached through members, starting from
    // those adjacent to the complement.
    for (VertexId v : fat.members) inside[v] = 1;
    std::vector<VertexId> rim;
    for (VertexId v : fat.members)
      if (std::any_of(g.neighbors(v).begin(), g.neighbors(v).end(), [&](VertexId x) { return !inside[x]; }))
        rim.push_back(v);
    bfs.run(rim, kUnreachable, [&](VertexId x) { return inside[x] != 0; }, 1);
    fat.depth.resize(fat.members.size());
    for (std::size_t k = 0; k < fat.members.size(); ++k) {
      const auto v = fat.members[k];
      fat.depth[k] = bfs.dist(v);
      fc.containing[v].emplace_back(static_cast<std::uint32_t>(fc.sets.size()), fat.depth[k]);
    }
    for (VertexId v : fat.members) inside[v] = 0;
    fc.sets.push_back(std::move(fat));
  }

  for (const auto& s : fc.base.sets)
    fc.base_diameter = std::max(fc.base_diameter, set_diameter(g, s.members).raw());

  const auto depth = fam.distances().from(basepoint);
  const auto limit = fc.base.complete_radius();
  for (VertexId x = 0; x < n; ++x) {
    if (depth[x] + 5 * r > limit) continue;
    fc.safe_core.push_back(x);
    const auto k = static_cast<std::uint32_t>(fc.containing[x].size());
    if (!fc.order_witness || k > fc.order) {
      fc.order = k;
      fc.order_witness = x;
    }
  }
  return fc;
}

LebesgueReport lebesgue_check(const MetricGraph& g, const FatCover& fc) {
  (void)g;
  LebesgueReport rep;
  rep.ball_radius = (fc.base_r - 1) / 2;
  for (VertexId x : fc.safe_core) {
    const auto& in = fc.containing[x];
    const bool held = std::any_of(in.begin(), in.end(), [&](const auto& e) { return e.second > rep.ball_radius; });
    if (!held) {
      rep.pass = false;
      rep.witness = x;
      break;
    }
  }
  return rep;
}

std::vector<std::pair<std::size_t, Rational>> phi(const FatCover& fc, VertexId x) {
  if (x >= fc.containing.size()) throw InvalidVertex(x);
  std::int64_t total = 0;
  for (const auto& [set, d] : fc.containing[x]) total += d;
  std::vector<std::pair<std::size_t, Rational>> out;
  for (const auto& [set, d] : fc.containing[x]) out.emplace_back(set, Rational(d, total));
  return out;
}

std::vector<VertexId> select_anchors(const FatCover& fc) {
  std::vector<VertexId> out;
  out.reserve(fc.sets.size());
  for (const auto& s : fc.sets) {
    const auto best = std::max_element(s.depth.begin(), s.depth.end());
    out.push_back(s.members[static_cast<std::size_t>(best - s.depth.begin())]);
  }
  return out;
}

Rational A1Map::l1() const {
  Rational total;
  for (const auto& [z, v] : entries) total += abs(v);
  return total;
}

A1Map a1_map(const FatCover& fc, const std::vector<VertexId>& anchors, VertexId x) {
  std::map<VertexId, Rational> mass;
  for (const auto& [set, value] : phi(fc, x)) mass[anchors.at(set)] += value;
  A1Map out;
  out.x = x;
  out.entries.assign(mass.begin(), mass.end());
  return out;
}

Rational l1_distance(const A1Map& a, const A1Map& b) {
  Rational total;
  auto i = a.entries.begin();
  auto j = b.entries.begin();
  while (i != a.entries.end() || j != b.entries.end()) {
    if (j == b.entries.end() || (i != a.entries.end() && i->first < j->first)) {
      total += abs(i++->second);
    } else if (i == a.entries.end() || j->first < i->first) {
      total += abs(j++->second);
    } else {
      total += abs(i++->second - j++->second);
    }
  }
  return total;
}

Variation variation(const FatCover& fc, const std::vector<VertexId>& anchors, VertexId z, VertexId w) {
  Variation out;
  out.l1 = l1_distance(a1_map(fc, anchors, z), a1_map(fc, anchors, w));
  const auto pz = phi(fc, z);
  const auto pw = phi(fc, w);
  std::map<std::size_t, std::pair<Rational, Rational>> both;
  for (const auto& [s, v] : pz) both[s].first = v;
  for (const auto& [s, v] : pw) both[s].second = v;
  for (const auto& [s, vals] : both) out.max_dphi = std::max(out.max_dphi, abs(vals.first - vals.second));

  std::map<std::size_t, std::pair<std::uint32_t, std::uint32_t>> depths;
  for (const auto& [s, d] : fc.containing.at(z)) depths[s].first = d;
  for (const auto& [s, d] : fc.containing.at(w)) depths[s].second = d;
  for (const auto& [s, d] : depths) {
    const auto diff = d.first > d.second ? d.first - d.second : d.second - d.first;
    out.sum_ddist += diff;
    out.max_ddist = std::max(out.max_ddist, diff);
  }
  return out;
}

A1Audit audit_a1(const MetricGraph& g, const FatCover& fc, const std::vector<VertexId>& anchors) {
  A1Audit a;
  const auto r = fc.base_r;
  const auto D = static_cast<std::int64_t>(fc.D);
  a.safe_core_size = fc.safe_core.size();
  a.lebesgue = lebesgue_check(g, fc);
  a.support_radius_bound = 4 * r + fc.base_diameter;
  a.variation_bound = Rational((4 * D + 1) * (4 * D + 1), r);
  a.dphi_bound = Rational(4 * D + 1, r);
  a.sum_ddist_bound = static_cast<std::uint64_t>(4 * D);

  std::vector<std::int64_t> slot(g.vertex_count(), -1);
  for (std::size_t i = 0; i < fc.safe_core.size(); ++i) slot[fc.safe_core[i]] = static_cast<std::int64_t>(i);

  std::vector<A1Map> maps;
  maps.reserve(fc.safe_core.size());
  bool first = true;
  for (VertexId x : fc.safe_core) {
    std::uint32_t total = 0;
    for (const auto& e : fc.containing[x]) total += e.second;
    a.min_denominator = first ? total : std::min(a.min_denominator, total);
    first = false;
    Rational sum;
    for (const auto& [s, v] : phi(fc, x)) sum += v;
    if (sum != Rational(1)) ++a.phi_sum_failures;
    auto m = a1_map(fc, anchors, x);
    if (m.l1() != Rational(1)) ++a.l1_failures;
    for (const auto& e : m.entries)
      if (e.second <= Rational(0)) ++a.nonpositive_entries;
    a.max_support = std::max(a.max_support, m.entries.size());
    maps.push_back(std::move(m));
  }

  // Support radius: distance from each safe member of a set to its anchor.
  LocalBfs bfs(g);
  for (std::size_t i = 0; i < fc.sets.size(); ++i) {
    const auto& s = fc.sets[i];
    if (std::none_of(s.members.begin(), s.members.end(), [&](VertexId v) { return slot[v] >= 0; })) continue;
    const VertexId anchor = anchors.at(i);
    bfs.run(std::span<const VertexId>(&anchor, 1), a.support_radius_bound + 1, kAnywhere);
    for (VertexId v : s.members) {
      if (slot[v] < 0) continue;
      const auto d = bfs.reached(v) ? bfs.dist(v) : a.support_radius_bound + 2;
      a.max_support_radius = std::max(a.max_support_radius, d);
    }
  }

  for (VertexId z : fc.safe_core) {
    for (VertexId w : g.neighbors(z)) {
      if (w <= z || slot[w] < 0) continue;
      ++a.adjacent_pairs;
      const auto v = variation(fc, anchors, z, w);
      a.sup_variation = std::max(a.sup_variation, v.l1);
      a.sup_dphi = std::max(a.sup_dphi, v.max_dphi);
      a.max_sum_ddist = std::max(a.max_sum_ddist, v.sum_ddist);
      a.max_ddist = std::max(a.max_ddist, v.max_ddist);
    }
  }
  return a;
}

std::string store_a1(const FatCover& fc, const std::vector<VertexId>& anchors) {
  std::ostringstream out;
  for (VertexId x : fc.safe_core) {
    out << "a x=" << x << " :";
    for (const auto& [z, v] : a1_map(fc, anchors, x).entries) out << " " << z << "=" << v.str();
    out << "\n";
  }
  return out.str();
}

}  // namespace asdim
