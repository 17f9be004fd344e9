#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asdimlab/cover.hpp"
#include "asdimlab/geodesics.hpp"
#include "asdimlab/rational.hpp"

namespace asdim {

/// N(U; 2r) for one base cover set U, with d(x, complement) for each member.
struct FatSet {
  std::size_t origin = 0;                // index into the base cover's sets
  std::vector<VertexId> members;         // sorted
  std::vector<std::uint32_t> depth;      // depth[i] = d(members[i], complement), always >= 1

  /// d(x, complement), 0 when x is not a member.
  std::uint32_t depth_of(VertexId x) const;
};

struct FatCover {
  std::uint32_t base_r = 0;   // r; the base cover is built at 10r
  std::uint64_t D = 0;
  Cover base;
  std::vector<FatSet> sets;
  /// containing[x] = (fat set index, d(x, complement)) for every set holding x.
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> containing;
  std::uint32_t base_diameter = 0;   // max diameter over the base cover's sets
  std::vector<VertexId> safe_core;   // sorted; d(x, x0) + 5r inside the complete annuli
  std::uint32_t order = 0;           // max sets containing one safe point
  std::optional<VertexId> order_witness;

  bool order_ok() const { return order <= 2 * D; }
  bool in_safe_core(VertexId x) const;
};

/// Base cover at parameter 10r with ell = 10 delta, every set fattened by 2r.
/// Throws ScopeTooSmall when no annulus is complete or a fat set is the
/// whole graph.
FatCover build_fat_cover(const GeodesicFamily& fam, std::uint32_t r, std::uint32_t delta, std::uint64_t D,
                         VertexId basepoint);

struct LebesgueReport {
  std::uint32_t ball_radius = 0;  // floor((r - 1) / 2): balls of diameter < r
  bool pass = true;
  std::optional<VertexId> witness;
};

/// For each safe x, some fat set contains N(x; floor((r - 1) / 2)).
LebesgueReport lebesgue_check(const MetricGraph& g, const FatCover& fc);

/// Nonzero phi_V(x) = d(x, V') / sum_W d(x, W') by fat set index.
std::vector<std::pair<std::size_t, Rational>> phi(const FatCover& fc, VertexId x);

/// Per fat set: a member of greatest depth, least id among ties.
std::vector<VertexId> select_anchors(const FatCover& fc);

struct A1Map {
  VertexId x = 0;
  std::vector<std::pair<VertexId, Rational>> entries;  // by anchor id, values > 0

  Rational l1() const;
};

A1Map a1_map(const FatCover& fc, const std::vector<VertexId>& anchors, VertexId x);

Rational l1_distance(const A1Map& a, const A1Map& b);

struct Variation {
  Rational l1;                     // |a_z - a_w|_1
  Rational max_dphi;               // max_V |phi_V(z) - phi_V(w)|
  std::uint64_t sum_ddist = 0;     // sum_V |d(z, V') - d(w, V')|
  std::uint32_t max_ddist = 0;     // max_V |d(z, V') - d(w, V')|
};

Variation variation(const FatCover& fc, const std::vector<VertexId>& anchors, VertexId z, VertexId w);

/// Every Lipschitz inequality for the a1 map over the safe core, with adjacent safe pairs
/// for the variation bounds.
struct A1Audit {
  std::size_t safe_core_size = 0;
  std::uint64_t adjacent_pairs = 0;

  LebesgueReport lebesgue;
  std::uint64_t phi_sum_failures = 0;
  std::uint32_t min_denominator = 0;     // min over x of sum_W d(x, W')
  std::uint64_t l1_failures = 0;
  std::uint64_t nonpositive_entries = 0;
  std::size_t max_support = 0;
  std::uint32_t max_support_radius = 0;
  std::uint32_t support_radius_bound = 0;  // 4r + diam of the base cover
  Rational sup_variation;
  Rational variation_bound;                // (4D + 1)^2 / r
  Rational sup_dphi;
  Rational dphi_bound;                     // (4D + 1) / r
  std::uint64_t max_sum_ddist = 0;
  std::uint64_t sum_ddist_bound = 0;       // 4D
  std::uint32_t max_ddist = 0;             // complement-distance step, at most 1

  bool denominator_ok(std::uint32_t r) const { return safe_core_size == 0 || min_denominator >= r; }
  bool support_ok(std::uint64_t D) const { return max_support <= 2 * D; }
  bool support_radius_ok() const { return max_support_radius <= support_radius_bound; }
  bool variation_ok() const { return sup_variation <= variation_bound; }
  bool dphi_ok() const { return sup_dphi <= dphi_bound; }
  bool sum_ddist_ok() const { return max_sum_ddist <= sum_ddist_bound; }
};

A1Audit audit_a1(const MetricGraph& g, const FatCover& fc, const std::vector<VertexId>& anchors);

/// One line per safe vertex: `a x=<id> : <anchor>=<num>/<den> ...`.
std::string store_a1(const FatCover& fc, const std::vector<VertexId>& anchors);

}  // namespace asdim
