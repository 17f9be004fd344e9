#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace asdim {

/// Compact orientable surface of genus g with p punctures.
struct Surface {
  std::uint32_t g = 0;
  std::uint32_t p = 0;
};

std::int64_t complexity(const Surface& s);  // 3g - 3 + p
std::int64_t euler(const Surface& s);       // 2 - 2g - p

struct ProvenanceStep {
  std::string step;
  std::string citation;
};

/// Interval for an asymptotic dimension. A missing upper bound means
/// unknown, never a large number.
struct Bound {
  std::optional<std::uint64_t> lower;
  std::optional<std::uint64_t> upper;
  std::vector<ProvenanceStep> provenance;

  bool exact() const { return lower && upper && *lower == *upper; }
  /// `lower=<n|none> upper=<n|unknown> exact=<y|n>`
  std::string str() const;
};

/// Virtual cohomological dimension of Mod(S) from Ivanov's table; the two
/// genus-0 rows agree at p = 3.
std::uint64_t vcd_mod(const Surface& s);

/// Asymptotic dimension of the surface group, extended to genus 0 as the
/// trivial group (p <= 1) or a free group (p >= 2).
std::uint64_t asdim_pi1(const Surface& s);

Bound asdim_mod(const Surface& s);

/// asdim Mod(S_{g,0}) + p + 1, for 2 - 2g - p < 0.
std::uint64_t puncture_bound(const Surface& s, std::uint64_t asdim_closed);

/// The puncture recursion step by step: asdim Mod(S_{g,0}) plus the
/// surface-group dimensions for 0..p-1 punctures.
std::uint64_t puncture_chain(const Surface& s, std::uint64_t asdim_closed);

Bound braid_bound(std::uint32_t n);

enum class ArtinFamily { A, B, AffineA, AffineC };

ArtinFamily parse_artin_family(const std::string& text);
Bound artin_bound(ArtinFamily family, std::uint32_t n);

Bound torelli(std::uint32_t g);

std::uint64_t farey_asdim();
std::uint64_t property_b_bound(std::uint64_t D);
/// 2 s^(2 delta) - 1
std::uint64_t hyp_group_bound(std::uint64_t s, std::uint64_t delta);

}  // namespace asdim
