#include "asdimlab/calculator.hpp"

#include <algorithm>
#include <limits>

#include "asdimlab/cover.hpp"

namespace asdim {

namespace {

std::string surface_name(const Surface& s) {
  return "S_{" + std::to_string(s.g) + "," + std::to_string(s.p) + "}";
}

constexpr const char* kVcdTable = "Ivanov vcd table";
constexpr const char* kVcdLower = "Dranishnikov: vcd <= asdim for VFP groups";
constexpr const char* kComplexity = "complexity lower bound";
constexpr const char* kLowGenus = "low-genus equalities";
constexpr const char* kGenusTwo = "genus-2 formula";
constexpr const char* kRecursion = "puncture recursion";

}  // namespace

std::int64_t complexity(const Surface& s) { return 3 * static_cast<std::int64_t>(s.g) - 3 + s.p; }

std::int64_t euler(const Surface& s) { return 2 - 2 * static_cast<std::int64_t>(s.g) - s.p; }

std::string Bound::str() const {
  std::string out = "lower=" + (lower ? std::to_string(*lower) : std::string("none"));
  out += " upper=" + (upper ? std::to_string(*upper) : std::string("unknown"));
  out += std::string(" exact=") + (exact() ? "y" : "n");
  return out;
}

std::uint64_t vcd_mod(const Surface& s) {
  if (s.g == 0) return s.p <= 3 ? 0 : s.p - 3;
  if (s.g == 1) return s.p == 0 ? 1 : s.p;
  return s.p == 0 ? 4ULL * s.g - 5 : 4ULL * s.g - 4 + s.p;
}

std::uint64_t asdim_pi1(const Surface& s) {
  if (s.g == 0) return s.p <= 1 ? 0 : 1;
  return s.p > 0 ? 1 : 2;
}

Bound asdim_mod(const Surface& s) {
  Bound b;
  const auto name = surface_name(s);
  const auto xi = complexity(s);
  std::uint64_t lower = xi > 0 ? static_cast<std::uint64_t>(xi) : 0;
  b.provenance.push_back({"3g-3+p = " + std::to_string(xi), kComplexity});
  if (euler(s) < 0) {
    const auto v = vcd_mod(s);
    b.provenance.push_back({"vcd Mod(" + name + ") = " + std::to_string(v), kVcdTable});
    b.provenance.push_back({"asdim >= vcd = " + std::to_string(v), kVcdLower});
    lower = std::max(lower, v);
  }
  b.lower = lower;

  auto exact = [&](std::uint64_t value, const std::string& step, const char* citation) {
    b.upper = value;
    b.provenance.push_back({step, citation});
    if (*b.lower > value) throw std::logic_error("lower bound exceeds the exact value for " + name);
    b.lower = value;
  };

  if (s.g == 0 && s.p == 4) {
    exact(1, "Mod(S_{0,4}) is commensurable with PSL(2,Z), quasi-isometric to a tree", kLowGenus);
  } else if (s.g == 0 && s.p >= 5) {
    exact(s.p - 3ULL, "asdim Mod(S_{0,p}) = p - 3", kLowGenus);
  } else if (s.g == 1 && s.p == 1) {
    exact(1, "Mod(S_{1,1}) = SL(2,Z), virtually free", kLowGenus);
  } else if (s.g == 1 && s.p >= 2) {
    exact(s.p, "asdim Mod(S_{1,p}) = p", kLowGenus);
  } else if (s.g == 2 && s.p == 0) {
    exact(3, "Z/2 -> Mod(S_{2,0}) -> Mod(S_{0,6}) gives asdim <= 0 + 3", kGenusTwo);
  } else if (s.g == 2) {
    exact(s.p + 4ULL, "asdim Mod(S_{2,p}) <= asdim Mod(S_{2,0}) + p + 1 = p + 4", kGenusTwo);
  } else if (s.g >= 3) {
    b.provenance.push_back({"if asdim Mod(S_{" + std::to_string(s.g) + ",0}) = m is finite then asdim Mod(" + name +
                                ") <= m + " + std::to_string(s.p + 1ULL) + "; finiteness for g >= 3 is open",
                            kRecursion});
  } else {
    b.provenance.push_back({"outside the formula corpus: " + name + " has no entry", kLowGenus});
  }
  return b;
}

std::uint64_t puncture_bound(const Surface& s, std::uint64_t asdim_closed) {
  if (euler(s) >= 0)
    throw std::invalid_argument("the puncture recursion needs 2 - 2g - p < 0, got " + surface_name(s));
  return asdim_closed + s.p + 1;
}

std::uint64_t puncture_chain(const Surface& s, std::uint64_t asdim_closed) {
  if (euler(s) >= 0)
    throw std::invalid_argument("the puncture recursion needs 2 - 2g - p < 0, got " + surface_name(s));
  std::uint64_t total = asdim_closed;
  for (std::uint32_t q = 0; q < s.p; ++q) total += asdim_pi1({s.g, q});
  return total;
}

Bound braid_bound(std::uint32_t n) {
  if (n < 3) throw std::invalid_argument("braid bound needs n >= 3 strands");
  Bound b;
  b.upper = n - 2ULL;
  b.provenance.push_back({"B_" + std::to_string(n) + " embeds in Mod(S_{0," + std::to_string(n + 1) + "})",
                          "braid groups as disk mapping class groups"});
  b.provenance.push_back({"asdim Mod(S_{0," + std::to_string(n + 1) + "}) = " + std::to_string(n - 2), kLowGenus});
  return b;
}

ArtinFamily parse_artin_family(const std::string& text) {
  if (text == "A") return ArtinFamily::A;
  if (text == "B" || text == "C") return ArtinFamily::B;
  if (text == "affine-A") return ArtinFamily::AffineA;
  if (text == "affine-C") return ArtinFamily::AffineC;
  throw std::invalid_argument("unknown Artin family '" + text + "' (A, B, affine-A, affine-C)");
}

Bound artin_bound(ArtinFamily family, std::uint32_t n) {
  if (n < 3) throw std::invalid_argument("Artin bound needs n >= 3");
  Bound b;
  const auto sphere = "Mod(S_{0," + std::to_string(n + 2) + "})";
  if (family == ArtinFamily::AffineA || family == ArtinFamily::AffineC) {
    b.lower = b.upper = n - 1ULL;
    b.provenance.push_back({"centerless finite-index subgroup of " + sphere, "affine Artin groups"});
  } else {
    b.upper = n;
    b.provenance.push_back({"quotient by the infinite cyclic center is finite index in " + sphere +
                                ", adding asdim Z = 1",
                            "finite-type Artin groups"});
  }
  b.provenance.push_back({"asdim " + sphere + " = " + std::to_string(n - 1), kLowGenus});
  return b;
}

Bound torelli(std::uint32_t g) {
  Bound b;
  if (g <= 1) {
    b.lower = b.upper = 0;
    b.provenance.push_back({"I_" + std::to_string(g) + " is trivial", "Torelli groups"});
  } else if (g == 2) {
    b.lower = b.upper = 1;
    b.provenance.push_back({"I_2 is free, not finitely generated, contains a bi-infinite geodesic", "Torelli groups"});
  } else {
    b.provenance.push_back({"asdim I_" + std::to_string(g) + " is finite iff asdim Mod(S_{" + std::to_string(g) +
                                ",0}) is; the latter is open",
                            "Torelli groups"});
  }
  return b;
}

std::uint64_t farey_asdim() { return 1; }

std::uint64_t property_b_bound(std::uint64_t D) { return asdim_upper_from_D(D); }

std::uint64_t hyp_group_bound(std::uint64_t s, std::uint64_t delta) {
  if (s == 0) throw std::invalid_argument("generator count s must be at least 1");
  std::uint64_t power = 1;
  for (std::uint64_t i = 0; i < 2 * delta; ++i) {
    if (power > std::numeric_limits<std::uint64_t>::max() / s / 2) throw std::overflow_error("s^(2 delta) overflows");
    power *= s;
  }
  return 2 * power - 1;
}

}  // namespace asdim
