#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <deque>
#include <limits>
#include <map>

#include "asdimlab/a1.hpp"
#include "asdimlab/spaces.hpp"
#include "oracles.hpp"

using namespace asdim;

namespace {

/// Plain multi-source BFS, unrestricted.
std::vector<std::uint32_t> bfs(const MetricGraph& g, const std::vector<VertexId>& sources) {
  std::vector<std::uint32_t> d(g.vertex_count(), oracle::kInf);
  std::deque<VertexId> q;
  for (VertexId s : sources) {
    d[s] = 0;
    q.push_back(s);
  }
  while (!q.empty()) {
    const auto v = q.front();
    q.pop_front();
    for (VertexId w : g.neighbors(v))
      if (d[w] == oracle::kInf) {
        d[w] = d[v] + 1;
        q.push_back(w);
      }
  }
  return d;
}

struct Fixture {
  LabeledGraph space;
  FatCover fc;
  std::vector<VertexId> anchors;
  Fixture(std::uint32_t m, std::uint32_t r)
      : space(broom_tree(m)), fc(build_fat_cover(GeodesicFamily::all(space.graph), r, 0, 1, space.basepoint)) {
    anchors = select_anchors(fc);
  }
};

}  // namespace

TEST_CASE("rational arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(0, 7).str() == "0/1");
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(abs(Rational(-5, 3)) == Rational(5, 3));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  const Rational big(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big + big, RationalOverflow);
  CHECK_THROWS_AS(big * big, RationalOverflow);
  CHECK(Rational(std::numeric_limits<std::int64_t>::max(), 3) * Rational(3, 7) ==
        Rational(std::numeric_limits<std::int64_t>::max(), 7));
}

TEST_CASE("anchors pick the deepest member, least id on ties") {
  FatCover fc;
  fc.sets.push_back({0, {3, 4, 5}, {1, 2, 1}});
  fc.sets.push_back({1, {3, 4, 5, 6}, {1, 2, 2, 1}});
  const auto a = select_anchors(fc);
  CHECK(a == std::vector<VertexId>{4, 4});
  CHECK(select_anchors(fc) == a);
}

TEST_CASE("single containing set gives unit mass") {
  FatCover fc;
  fc.base_r = 1;
  fc.D = 1;
  fc.sets.push_back({0, {7}, {3}});
  fc.containing.resize(8);
  fc.containing[7] = {{0, 3}};
  const auto p = phi(fc, 7);
  REQUIRE(p.size() == 1);
  CHECK(p[0].second == Rational(1));
  const auto m = a1_map(fc, {7}, 7);
  REQUIRE(m.entries.size() == 1);
  CHECK(m.entries[0] == std::pair<VertexId, Rational>{7, Rational(1)});
  CHECK(variation(fc, {7}, 7, 7).l1 == Rational(0));
}

TEST_CASE("fat sets and depths match brute force on broom 400") {
  const Fixture f(400, 1);
  const auto& g = f.space.graph;
  CHECK(f.fc.order <= 2);
  for (std::size_t i = 0; i < f.fc.sets.size(); ++i) {
    const auto& s = f.fc.sets[i];
    const auto from_u = bfs(g, f.fc.base.sets[s.origin].members);
    std::vector<VertexId> expect, complement;
    for (VertexId v = 0; v < g.vertex_count(); ++v) (from_u[v] <= 2 ? expect : complement).push_back(v);
    REQUIRE(s.members == expect);
    const auto to_out = bfs(g, complement);
    for (std::size_t k = 0; k < s.members.size(); ++k) REQUIRE(s.depth[k] == to_out[s.members[k]]);
    // Every x in N(U; 2r) sees U within 5r.
    for (VertexId x : s.members) CHECK(from_u[x] <= 5);
  }
}

TEST_CASE("partition of unity recomputed from depths") {
  for (std::uint32_t r : {1u, 2u}) {
    const Fixture f(400, r);
    CHECK(lebesgue_check(f.space.graph, f.fc).pass);
    // Independent a_x: depths by set, normalized, summed at the anchors.
    for (std::size_t i = 0; i < f.fc.safe_core.size(); i += 37) {
      const auto x = f.fc.safe_core[i];
      std::int64_t total = 0;
      std::map<VertexId, std::int64_t> weight;
      for (std::size_t s = 0; s < f.fc.sets.size(); ++s) {
        const auto d = f.fc.sets[s].depth_of(x);
        total += d;
        if (d > 0) weight[f.anchors[s]] += d;
      }
      CHECK(total >= r);
      const auto m = a1_map(f.fc, f.anchors, x);
      REQUIRE(m.entries.size() == weight.size());
      std::size_t k = 0;
      for (const auto& [z, w] : weight) {
        CHECK(m.entries[k].first == z);
        CHECK(m.entries[k].second == Rational(w, total));
        ++k;
      }
      CHECK(m.l1() == Rational(1));
    }
  }
}

TEST_CASE("audit on broom 400") {
  for (std::uint32_t r : {1u, 2u}) {
    const Fixture f(400, r);
    const auto a = audit_a1(f.space.graph, f.fc, f.anchors);
    CHECK(a.lebesgue.pass);
    CHECK(a.phi_sum_failures == 0);
    CHECK(a.denominator_ok(r));
    CHECK(a.l1_failures == 0);
    CHECK(a.nonpositive_entries == 0);
    CHECK(a.support_ok(1));
    CHECK(a.support_radius_ok());
    CHECK(a.variation_ok());
    CHECK(a.dphi_ok());
    CHECK(a.sum_ddist_ok());
    CHECK(a.max_ddist <= 1);
    CHECK(a.variation_bound == Rational(25, r));
    CHECK(a.adjacent_pairs > 0);
  }
}

TEST_CASE("variation against a direct recomputation") {
  const Fixture f(400, 1);
  const auto& g = f.space.graph;
  Rational sup;
  for (VertexId z : f.fc.safe_core)
    for (VertexId w : g.neighbors(z)) {
      if (w <= z || !f.fc.in_safe_core(w)) continue;
      const auto a = a1_map(f.fc, f.anchors, z);
      const auto b = a1_map(f.fc, f.anchors, w);
      std::map<VertexId, Rational> diff;
      for (const auto& [v, x] : a.entries) diff[v] += x;
      for (const auto& [v, x] : b.entries) diff[v] -= x;
      Rational l1;
      for (const auto& [v, x] : diff) l1 += abs(x);
      CHECK(variation(f.fc, f.anchors, z, w).l1 == l1);
      sup = std::max(sup, l1);
    }
  CHECK(audit_a1(g, f.fc, f.anchors).sup_variation == sup);
}

TEST_CASE("lebesgue check catches a deleted set") {
  Fixture f(400, 1);
  VertexId victim = kUnreachable;
  for (VertexId x : f.fc.safe_core)
    if (f.fc.containing[x].size() == 1) {
      victim = x;
      break;
    }
  REQUIRE(victim != kUnreachable);
  const auto set = f.fc.containing[victim][0].first;
  for (auto& in : f.fc.containing)
    std::erase_if(in, [&](const auto& e) { return e.first == set; });
  const auto rep = lebesgue_check(f.space.graph, f.fc);
  CHECK_FALSE(rep.pass);
  REQUIRE(rep.witness);
  CHECK(f.fc.containing[*rep.witness].empty());
}

TEST_CASE("scope guards") {
  const auto b = broom_tree(40);
  CHECK_THROWS_AS(build_fat_cover(GeodesicFamily::all(b.graph), 1, 0, 1, b.basepoint), ScopeTooSmall);
  CHECK_THROWS_AS(build_fat_cover(GeodesicFamily::all(b.graph), 0, 0, 1, b.basepoint), std::invalid_argument);
  CHECK_THROWS_AS(build_fat_cover(GeodesicFamily::all(b.graph), 1, 0, 0, b.basepoint), std::invalid_argument);
}

TEST_CASE("dump format") {
  const Fixture f(400, 1);
  const auto text = store_a1(f.fc, f.anchors);
  CHECK(text.rfind("a x=0 : ", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == static_cast<long>(f.fc.safe_core.size()));
}
