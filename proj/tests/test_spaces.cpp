#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "asdimlab/geodesics.hpp"
#include "asdimlab/spaces.hpp"
#include <set>

#include "oracles.hpp"

using namespace asdim;

TEST_CASE("fractions") {
  CHECK(Fraction::make(2, 4).str() == "1/2");
  CHECK(Fraction::make(3, -6).str() == "-1/2");
  CHECK(Fraction::make(0, 5).str() == "0/1");
  CHECK(Fraction::make(-4, 0).is_infinity());
  CHECK(parse_fraction("1/0") == Fraction::infinity());
  CHECK(farey_adjacent(Fraction::make(1, 2), Fraction::make(1, 3)));
  CHECK_FALSE(farey_adjacent(Fraction::make(1, 2), Fraction::make(1, 4)));
}

TEST_CASE("broom tree") {
  const auto b3 = broom_tree(3);
  CHECK(b3.graph.vertex_count() == 7);
  CHECK(b3.graph.degree(b3.basepoint) == 3);
  CHECK(b3.graph.is_tree());
  const auto b1 = broom_tree(1);
  CHECK(b1.graph.vertex_count() == 2);
  CHECK(b1.graph.edge_count() == 1);
  const auto b = broom_tree(12);
  for (std::uint32_t i = 1; i <= 12; ++i) {
    const auto leaf = b.find("r" + std::to_string(i) + "." + std::to_string(i)).value();
    CHECK(distance(b.graph, b.basepoint, leaf).value() == i);
    CHECK(b.graph.degree(leaf) == 1);
  }
}

TEST_CASE("regular tree") {
  CHECK(regular_tree(3, 1).graph.vertex_count() == 4);
  for (std::uint32_t v = 3; v <= 5; ++v)
    for (std::uint32_t d = 1; d <= 4; ++d) {
      std::uint64_t pw = 1;
      for (std::uint32_t i = 0; i < d; ++i) pw *= v - 1;
      const auto t = regular_tree(v, d);
      CHECK(t.graph.vertex_count() == 1 + v * (pw - 1) / (v - 2));
      CHECK(t.graph.is_tree());
    }
  const auto t = regular_tree(4, 3);
  CHECK(thin_delta(GeodesicFamily::all(t.graph)).delta == 0);
}

TEST_CASE("grid") {
  const auto g2 = grid(2);
  CHECK(g2.graph.vertex_count() == 4);
  CHECK(g2.graph.edge_count() == 4);
  for (VertexId v = 0; v < 4; ++v) CHECK(g2.graph.degree(v) == 2);
  for (std::uint32_t n = 2; n <= 7; ++n) {
    const auto g = grid(n);
    CHECK(g.graph.vertex_count() == n * n);
    const auto far = g.find("(" + std::to_string(n - 1) + "," + std::to_string(n - 1) + ")").value();
    CHECK(distance(g.graph, g.basepoint, far).value() == 2 * (n - 1));
  }
}

TEST_CASE("farey edges") {
  const auto f = farey_truncation(20);
  const auto zero = f.find("0/1").value();
  CHECK(f.basepoint == zero);
  const auto inf = f.find("1/0").value();
  for (int q = 1; q <= 20; ++q) CHECK(f.graph.adjacent(zero, f.find("1/" + std::to_string(q)).value()));
  for (int n = -20; n <= 20; ++n) CHECK(f.graph.adjacent(inf, f.find(std::to_string(n) + "/1").value()));
  CHECK(f.graph.adjacent(f.find("1/2").value(), f.find("1/3").value()));
  CHECK_FALSE(f.graph.adjacent(f.find("1/2").value(), f.find("1/4").value()));
}

TEST_CASE("farey adjacency is the determinant rule on every pair") {
  for (std::uint32_t qmax : {1u, 5u, 17u, 30u}) {
    const auto f = farey_truncation(qmax);
    const auto n = static_cast<VertexId>(f.graph.vertex_count());
    std::vector<std::pair<std::int64_t, std::int64_t>> frac;
    for (const auto& l : f.labels) {
      const auto pq = oracle::fraction_label(l);
      CHECK(oracle::gcd(pq.first, pq.second) == 1);
      CHECK(pq.second <= qmax);
      frac.push_back(pq);
    }
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v) REQUIRE(f.graph.adjacent(u, v) == oracle::determinant_rule(frac[u], frac[v]));
  }
}

TEST_CASE("sphere around 0/1 counts reduced +-1/q") {
  const auto f = farey_truncation(50);
  std::size_t count = 0;
  for (const auto& l : f.labels) {
    const auto [p, q] = oracle::fraction_label(l);
    if ((p == 1 || p == -1) && q >= 1) ++count;
  }
  // 1/0 is also a neighbor of 0/1.
  CHECK(sphere(f.graph, f.basepoint, 1).size() == count + 1);
}

TEST_CASE("generators round trip through the file format") {
  for (const auto& s : {broom_tree(6), regular_tree(3, 3), farey_truncation(6), grid(4)}) {
    const auto text = store_graph(s.graph);
    CHECK(store_graph(load_graph(text)) == text);
    std::set<std::string> distinct(s.labels.begin(), s.labels.end());
    CHECK(distinct.size() == s.labels.size());
  }
}

TEST_CASE("farey safe radius") {
  const auto s = farey_safe_radius(10);
  CHECK(s.radius >= 1);
  const auto small = farey_truncation(10);
  const auto large = farey_truncation(20);
  const auto ds = bfs_distances(small.graph, small.basepoint);
  const auto dl = bfs_distances(large.graph, large.basepoint);
  for (VertexId v = 0; v < small.labels.size(); ++v) {
    const auto w = large.find(small.labels[v]).value();
    // Truncation can only lengthen paths.
    CHECK(ds[v] >= dl[w]);
    if (ds[v] <= s.radius) CHECK(ds[v] == dl[w]);
  }
}
