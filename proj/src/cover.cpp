#include "asdimlab/cover.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace asdim {

Cover build_cover(const GeodesicFamily& fam, const CoverParams& params) {
  const auto& g = fam.graph();
  if (params.r == 0) throw std::invalid_argument("cover parameter r must be at least 1");
  if (params.ell < 10 * params.delta)
    throw std::invalid_argument("ell = " + std::to_string(params.ell) + " is below 10 delta = " +
                                std::to_string(10 * params.delta));
  g.check(params.basepoint);
  const auto depth = fam.distances().from(params.basepoint);

  Cover c;
  c.params = params;
  const auto n_vertices = static_cast<VertexId>(g.vertex_count());
  for (VertexId x = 0; x < n_vertices; ++x) {
    if (depth[x] == kUnreachable)
      throw GraphError("vertex " + std::to_string(x) + " cannot reach the basepoint");
    c.max_depth = std::max(c.max_depth, depth[x]);
  }

  const auto w = params.width();
  const auto count = std::max<std::uint32_t>(1, (c.max_depth + w - 1) / w);
  c.annuli.resize(count);
  c.spheres.resize(count);
  for (VertexId x = 0; x < n_vertices; ++x) {
    const auto d = depth[x];
    const auto n = std::max<std::uint32_t>(1, (d + w - 1) / w);
    c.annuli[n - 1].push_back(x);
    if (d % w == 0 && d > 0) {
      c.spheres[n - 1].push_back(x);
      if (n < count) c.annuli[n].push_back(x);
    }
  }
  for (auto& a : c.annuli) std::sort(a.begin(), a.end());

  const auto margin = params.r + params.ell;
  while (c.complete_annuli < count && (c.complete_annuli + 1) * w + margin <= c.max_depth) ++c.complete_annuli;

  for (std::uint32_t n = 1; n <= count; ++n) {
    const auto& annulus = c.annuli[n - 1];
    if (annulus.empty()) continue;
    if (n <= 2) {
      c.sets.push_back({n, std::nullopt, annulus});
      continue;
    }
    std::map<VertexId, std::vector<VertexId>> by_anchor;
    for (VertexId x : annulus)
      for (VertexId s : fam.crossings(x, params.basepoint, (n - 2) * w)) by_anchor[s].push_back(x);
    for (auto& [s, members] : by_anchor) c.sets.push_back({n, s, std::move(members)});
  }
  return c;
}

Cover build_cover_for_radius(const GeodesicFamily& fam, std::uint32_t radius, std::uint32_t ell,
                             std::uint32_t delta, VertexId basepoint) {
  if (radius == 0) throw std::invalid_argument("multiplicity radius must be at least 1");
  return build_cover(fam, {2 * radius, ell, delta, basepoint});
}

DiameterReport verify_diameters(const MetricGraph& g, const Cover& c) {
  DiameterReport rep;
  rep.bound = 4 * c.params.width();
  for (std::size_t i = 0; i < c.sets.size(); ++i) {
    const auto d = set_diameter(g, c.sets[i].members).raw();
    rep.max_diam_all = std::max(rep.max_diam_all, d);
    if (!c.complete(c.sets[i].n)) continue;
    if (!rep.witness || d > rep.max_diam) {
      rep.max_diam = d;
      rep.witness = i;
    }
  }
  rep.pass = rep.max_diam <= rep.bound;
  return rep;
}

std::vector<std::uint32_t> multiplicity_profile(const MetricGraph& g, const Cover& c, std::uint32_t radius) {
  std::vector<std::uint32_t> count(g.vertex_count(), 0);
  std::vector<std::uint32_t> seen(g.vertex_count(), 0);
  std::uint32_t stamp = 0;
  std::vector<VertexId> frontier, next;
  for (const auto& set : c.sets) {
    ++stamp;
    frontier.clear();
    for (VertexId v : set.members) {
      seen[v] = stamp;
      ++count[v];
      frontier.push_back(v);
    }
    for (std::uint32_t step = 0; step < radius && !frontier.empty(); ++step) {
      next.clear();
      for (VertexId v : frontier)
        for (VertexId x : g.neighbors(v))
          if (seen[x] != stamp) {
            seen[x] = stamp;
            ++count[x];
            next.push_back(x);
          }
      std::swap(frontier, next);
    }
  }
  return count;
}

MultiplicityReport multiplicity(const MetricGraph& g, const Cover& c, std::uint32_t radius, std::uint64_t D) {
  MultiplicityReport rep;
  rep.radius = radius;
  rep.bound_2D = 2 * D;
  const auto count = multiplicity_profile(g, c, radius);
  const auto depth = bfs_distances(g, c.params.basepoint);
  const auto limit = c.complete_radius();
  for (VertexId x = 0; x < count.size(); ++x) {
    if (!rep.witness_all || count[x] > rep.max_multiplicity_all) {
      rep.max_multiplicity_all = count[x];
      rep.witness_all = x;
    }
    if (depth[x] + radius > limit) continue;
    ++rep.scope_size;
    if (!rep.witness || count[x] > rep.max_multiplicity) {
      rep.max_multiplicity = count[x];
      rep.witness = x;
    }
  }
  rep.pass = rep.max_multiplicity <= rep.bound_2D;
  return rep;
}

std::uint64_t asdim_upper_from_D(std::uint64_t D) {
  if (D == 0) throw std::invalid_argument("D must be at least 1");
  return 2 * D - 1;
}

std::string store_cover(const Cover& c) {
  std::ostringstream out;
  out << "cover r=" << c.params.r << " ell=" << c.params.ell << " base=" << c.params.basepoint << "\n";
  for (const auto& s : c.sets) {
    out << "set n=" << s.n << " anchor=";
    if (s.anchor)
      out << *s.anchor;
    else
      out << "-";
    out << " :";
    for (VertexId v : s.members) out << " " << v;
    out << "\n";
  }
  return out.str();
}

}  // namespace asdim
