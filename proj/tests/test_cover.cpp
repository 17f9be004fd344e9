#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <random>

#include "asdimlab/cover.hpp"
#include "asdimlab/spaces.hpp"
#include "oracles.hpp"

using namespace asdim;

namespace {

/// Cover sets from their definition: A_1, A_2 whole; for n >= 3 one set per
/// s in S_{n-2} holding the x in A_n with s on a family geodesic from x to x0.
std::map<std::pair<std::uint32_t, std::int64_t>, std::vector<VertexId>> reference_sets(const MetricGraph& g,
                                                                                      VertexId x0,
                                                                                      std::uint32_t w, bool all) {
  const auto d = oracle::floyd_warshall(g);
  std::map<std::pair<std::uint32_t, std::int64_t>, std::vector<VertexId>> out;
  const auto n_vertices = static_cast<VertexId>(g.vertex_count());
  std::uint32_t max_depth = 0;
  for (VertexId x = 0; x < n_vertices; ++x) max_depth = std::max(max_depth, d[x0][x]);
  for (std::uint32_t n = 1; (n - 1) * w < std::max<std::uint32_t>(max_depth, 1); ++n) {
    for (VertexId x = 0; x < n_vertices; ++x) {
      const auto dx = d[x0][x];
      if (dx < (n - 1) * w || dx > n * w) continue;
      if (n <= 2) {
        out[{n, -1}].push_back(x);
        continue;
      }
      const auto level = (n - 2) * w;
      if (all) {
        for (VertexId s = 0; s < n_vertices; ++s)
          if (d[x0][s] == level && d[x][s] + level == dx) out[{n, s}].push_back(x);
      } else {
        // Lexicographically least geodesic: always the least-id step closer to x0.
        VertexId at = x;
        while (d[x0][at] > level) {
          VertexId best = kUnreachable;
          for (VertexId y : g.neighbors(at))
            if (d[x0][y] + 1 == d[x0][at]) best = std::min(best, y);
          at = best;
        }
        out[{n, at}].push_back(x);
      }
    }
  }
  return out;
}

std::map<std::pair<std::uint32_t, std::int64_t>, std::vector<VertexId>> as_map(const Cover& c) {
  std::map<std::pair<std::uint32_t, std::int64_t>, std::vector<VertexId>> out;
  for (const auto& s : c.sets) out[{s.n, s.anchor ? std::int64_t(*s.anchor) : -1}] = s.members;
  return out;
}

/// A long random graph: a path with short chords, so annuli n >= 3 exist.
MetricGraph stringy(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> e;
  std::set<std::pair<VertexId, VertexId>> seen;
  for (VertexId v = 1; v < n; ++v) seen.emplace(v - 1, v);
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
  std::uniform_int_distribution<VertexId> span(2, 4);
  for (std::size_t i = 0; i < n / 3; ++i) {
    const auto u = pick(rng);
    const auto v = u + span(rng);
    if (v < n) seen.emplace(u, v);
  }
  std::uniform_int_distribution<VertexId> leaf(0, static_cast<VertexId>(n - 1));
  auto total = static_cast<VertexId>(n);
  for (std::size_t i = 0; i < n / 4; ++i) seen.emplace(leaf(rng), total++);
  e.assign(seen.begin(), seen.end());
  return MetricGraph::from_edges("stringy", total, e);
}

}  // namespace

TEST_CASE("broom cover structure") {
  const auto b = broom_tree(120);
  const auto fam = GeodesicFamily::all(b.graph);
  const auto c = build_cover(fam, {1, 0, 0, b.basepoint});
  CHECK(c.params.width() == 10);
  for (std::uint32_t n = 1; n <= c.annulus_count(); ++n)
    for (VertexId s : c.spheres[n - 1]) CHECK(distance(b.graph, b.basepoint, s).value() == 10 * n);
  std::vector<char> covered(b.graph.vertex_count(), 0);
  for (const auto& s : c.sets) {
    for (VertexId v : s.members) covered[v] = 1;
    if (s.n < 3) continue;
    // Every U set lies on a single ray.
    std::set<std::string> rays;
    for (VertexId v : s.members) {
      const auto& l = b.labels[v];
      rays.insert(l.substr(0, l.find('.')));
    }
    CHECK(rays.size() == 1);
  }
  CHECK(std::all_of(covered.begin(), covered.end(), [](char x) { return x != 0; }));
  CHECK(c.complete_annuli == 11);
  const auto diam = verify_diameters(b.graph, c);
  CHECK(diam.pass);
  CHECK(diam.max_diam <= 40);
  const auto m0 = multiplicity(b.graph, c, 0, 1);
  CHECK(m0.max_multiplicity <= 2);
  CHECK(m0.pass);
}

TEST_CASE("small graphs give only the first two annuli") {
  const auto g = grid(5);
  const auto c = build_cover(GeodesicFamily::all(g.graph), {1, 0, 0, g.basepoint});
  CHECK(c.sets.size() == 1);
  CHECK(c.sets[0].n == 1);
  const auto t = broom_tree(15);
  const auto c2 = build_cover(GeodesicFamily::all(t.graph), {1, 0, 0, t.basepoint});
  for (const auto& s : c2.sets) CHECK(s.n <= 2);
  CHECK(c2.sets.size() == 2);
  const auto m = multiplicity(g.graph, c, 3, 1);
  CHECK(m.max_multiplicity_all == 1);
}

TEST_CASE("cover sets match the definition") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 12; ++trial) {
    const auto g = stringy(rng, 60 + 5 * trial);
    for (bool all : {true, false}) {
      const GeodesicFamily fam(g, all ? FamilyKind::All : FamilyKind::Canonical);
      const auto c = build_cover(fam, {1, 0, 0, 0});
      CHECK(as_map(c) == reference_sets(g, 0, 10, all));
      const auto r2 = build_cover(fam, {1, 1, 0, 0});
      CHECK(as_map(r2) == reference_sets(g, 0, 20, all));
    }
  }
  const auto gr = grid(25);
  CHECK(as_map(build_cover(GeodesicFamily::all(gr.graph), {1, 0, 0, 0})) == reference_sets(gr.graph, 0, 10, true));
}

TEST_CASE("diameter and multiplicity against brute force") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 8; ++trial) {
    const auto g = stringy(rng, 90);
    const auto d = oracle::floyd_warshall(g);
    const auto c = build_cover(GeodesicFamily::all(g), {1, 0, 0, 0});
    std::uint32_t diam = 0, diam_all = 0;
    for (const auto& s : c.sets) {
      std::uint32_t m = 0;
      for (VertexId a : s.members)
        for (VertexId b : s.members) m = std::max(m, d[a][b]);
      diam_all = std::max(diam_all, m);
      if (c.complete(s.n)) diam = std::max(diam, m);
    }
    const auto rep = verify_diameters(g, c);
    CHECK(rep.max_diam == diam);
    CHECK(rep.max_diam_all == diam_all);
    for (std::uint32_t radius : {0u, 1u, 3u}) {
      const auto prof = multiplicity_profile(g, c, radius);
      for (VertexId x = 0; x < g.vertex_count(); ++x) {
        std::uint32_t count = 0;
        for (const auto& s : c.sets)
          if (std::any_of(s.members.begin(), s.members.end(), [&](VertexId v) { return d[x][v] <= radius; })) ++count;
        REQUIRE(prof[x] == count);
      }
    }
  }
}

TEST_CASE("hand-built violating cover fails") {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId v = 1; v < 100; ++v) e.emplace_back(v - 1, v);
  const auto g = MetricGraph::from_edges("path", 100, e);
  Cover c;
  c.params = {1, 0, 0, 0};
  c.max_depth = 99;
  c.complete_annuli = 2;
  c.sets.push_back({1, std::nullopt, {0, 41}});
  c.sets.push_back({2, std::nullopt, {50}});
  const auto rep = verify_diameters(g, c);
  CHECK(rep.max_diam == 41);
  CHECK_FALSE(rep.pass);
  CHECK(rep.witness == std::optional<std::size_t>(0));
}

TEST_CASE("complete annuli follow the margin rule") {
  const auto b = broom_tree(57);
  for (std::uint32_t r : {1u, 2u}) {
    const auto c = build_cover(GeodesicFamily::all(b.graph), {r, 0, 0, b.basepoint});
    const auto w = c.params.width();
    CHECK(c.complete_annuli * w + r <= c.max_depth);
    CHECK((c.complete_annuli + 1) * w + r > c.max_depth);
  }
}

TEST_CASE("radius wiring runs the construction at 2 radius") {
  const auto b = broom_tree(120);
  const auto fam = GeodesicFamily::all(b.graph);
  for (std::uint32_t radius : {1u, 2u}) {
    const auto c = build_cover_for_radius(fam, radius, 0, 0, b.basepoint);
    CHECK(c.params.r == 2 * radius);
    const auto m = multiplicity(b.graph, c, radius, 1);
    CHECK(m.max_multiplicity <= 2);
    CHECK(verify_diameters(b.graph, c).pass);
  }
}

TEST_CASE("guards") {
  const auto b = broom_tree(5);
  const auto fam = GeodesicFamily::all(b.graph);
  CHECK_THROWS_AS(build_cover(fam, {0, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(build_cover(fam, {1, 9, 1, 0}), std::invalid_argument);
  CHECK_NOTHROW(build_cover(fam, {1, 10, 1, 0}));
  const auto two = MetricGraph::from_edges("two", 3, std::vector<std::pair<VertexId, VertexId>>{{0, 1}});
  CHECK_THROWS_AS(build_cover(GeodesicFamily::all(two), {1, 0, 0, 0}), GraphError);
  CHECK_THROWS_AS(build_cover_for_radius(fam, 0, 0, 0, 0), std::invalid_argument);
}

TEST_CASE("asdim bound from D") {
  CHECK(asdim_upper_from_D(1) == 1);
  CHECK(asdim_upper_from_D(3) == 5);
  CHECK(asdim_upper_from_D(16) == 31);  // s = 2, delta = 2
  CHECK_THROWS_AS(asdim_upper_from_D(0), std::invalid_argument);
}

TEST_CASE("farey cover covers the safe core") {
  const auto f = farey_truncation(200);
  const auto safe = farey_safe_radius(200);
  const auto c = build_cover(GeodesicFamily::all(f.graph), {1, 0, 0, f.basepoint});
  std::vector<char> covered(f.graph.vertex_count(), 0);
  for (const auto& s : c.sets)
    for (VertexId v : s.members) covered[v] = 1;
  for (VertexId v : ball(f.graph, f.basepoint, safe.radius)) CHECK(covered[v]);
  CHECK(verify_diameters(f.graph, c).pass);
}

TEST_CASE("cover serialization") {
  const auto b = broom_tree(3);
  const auto c = build_cover(GeodesicFamily::all(b.graph), {1, 0, 0, b.basepoint});
  CHECK(store_cover(c) == "cover r=1 ell=0 base=0\nset n=1 anchor=- : 0 1 2 3 4 5 6\n");
}
