#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "asdimlab/calculator.hpp"

using namespace asdim;

TEST_CASE("surface invariants") {
  CHECK(complexity({1, 1}) == 1);
  CHECK(complexity({0, 5}) == 2);
  CHECK(euler({0, 5}) == -3);
  CHECK(euler({2, 0}) == -2);
}

TEST_CASE("vcd table") {
  CHECK(vcd_mod({0, 7}) == 4);
  CHECK(vcd_mod({1, 0}) == 1);
  CHECK(vcd_mod({2, 0}) == 3);
  CHECK(vcd_mod({0, 3}) == 0);
  CHECK(vcd_mod({1, 3}) == 3);
  CHECK(vcd_mod({3, 2}) == 10);
}

TEST_CASE("surface groups") {
  CHECK(asdim_pi1({1, 0}) == 2);
  CHECK(asdim_pi1({3, 2}) == 1);
  CHECK(asdim_pi1({0, 1}) == 0);
  CHECK(asdim_pi1({0, 4}) == 1);
}

TEST_CASE("mapping class groups") {
  const auto s06 = asdim_mod({0, 6});
  CHECK(s06.exact());
  CHECK(*s06.upper == 3);
  CHECK(s06.str() == "lower=3 upper=3 exact=y");
  const auto s23 = asdim_mod({2, 3});
  CHECK(s23.exact());
  CHECK(*s23.upper == 7);
  const auto s30 = asdim_mod({3, 0});
  CHECK(*s30.lower == 7);
  CHECK_FALSE(s30.upper);
  CHECK(s30.str() == "lower=7 upper=unknown exact=n");
  CHECK(*asdim_mod({0, 4}).upper == 1);
  CHECK(*asdim_mod({1, 1}).upper == 1);
  CHECK(*asdim_mod({2, 0}).upper == 3);
  for (std::uint32_t p = 5; p <= 9; ++p) CHECK(*asdim_mod({0, p}).upper == p - 3);
  for (std::uint32_t p = 2; p <= 9; ++p) CHECK(*asdim_mod({1, p}).upper == p);
  CHECK_FALSE(asdim_mod({0, 2}).upper);
  for (std::uint32_t g = 0; g <= 4; ++g)
    for (std::uint32_t p = 0; p <= 6; ++p) {
      const auto b = asdim_mod({g, p});
      CHECK_FALSE(b.provenance.empty());
      if (b.upper) CHECK(*b.lower <= *b.upper);
      if (b.exact() && euler({g, p}) < 0) CHECK(vcd_mod({g, p}) <= *b.upper);
    }
}

TEST_CASE("puncture recursion") {
  const auto closed = *asdim_mod({2, 0}).upper;
  for (std::uint32_t p = 1; p <= 6; ++p) {
    CHECK(*asdim_mod({2, p}).upper <= puncture_bound({2, p}, closed));
    CHECK(puncture_bound({2, p}, closed) == p + 4);
    CHECK(puncture_chain({2, p}, closed) == p + 4);
  }
  CHECK_THROWS_AS(puncture_bound({1, 0}, 2), std::invalid_argument);
}

TEST_CASE("braid and Artin groups") {
  CHECK(*braid_bound(3).upper == 1);
  CHECK(*braid_bound(10).upper == 8);
  CHECK_THROWS_AS(braid_bound(2), std::invalid_argument);
  CHECK(*artin_bound(ArtinFamily::A, 4).upper == 4);
  const auto affine = artin_bound(ArtinFamily::AffineA, 4);
  CHECK(affine.exact());
  CHECK(*affine.upper == 3);
  CHECK_THROWS_AS(artin_bound(ArtinFamily::A, 2), std::invalid_argument);
  CHECK(parse_artin_family("C") == ArtinFamily::B);
  CHECK_THROWS_AS(parse_artin_family("E"), std::invalid_argument);
}

TEST_CASE("remaining formulas") {
  CHECK(torelli(2).exact());
  CHECK(*torelli(2).upper == 1);
  CHECK_FALSE(torelli(3).upper);
  CHECK(farey_asdim() == 1);
  CHECK(property_b_bound(1) == 1);
  CHECK(hyp_group_bound(2, 1) == 7);
  CHECK_THROWS_AS(hyp_group_bound(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(hyp_group_bound(10, 40), std::overflow_error);
}
