#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <optional>
#include <string>
#include <vector>

#include "asdimlab/distance_table.hpp"
#include "asdimlab/graph.hpp"

namespace asdim {

enum class FamilyKind { All, Canonical };

std::string to_string(FamilyKind kind);

/// A choice of geodesics joining every pair of vertices.
///
/// `All` is every geodesic; its path enumeration is capped, but set-valued
/// queries (g_set, on_geodesic, avoiding_geodesic) are answered exactly from
/// the geodesic interval and never truncate. `Canonical` is the single
/// lexicographically least geodesic, chosen step by step from the source.
class GeodesicFamily {
 public:
  GeodesicFamily(const MetricGraph& g, FamilyKind kind, std::size_t cap = kDefaultGeodesicCap);
  GeodesicFamily(std::shared_ptr<const DistanceTable> distances, FamilyKind kind,
                 std::size_t cap = kDefaultGeodesicCap);

  static GeodesicFamily all(const MetricGraph& g, std::size_t cap = kDefaultGeodesicCap) {
    return {g, FamilyKind::All, cap};
  }
  static GeodesicFamily canonical(const MetricGraph& g) { return {g, FamilyKind::Canonical}; }

  FamilyKind kind() const { return kind_; }
  std::size_t cap() const { return cap_; }
  const MetricGraph& graph() const { return distances_->graph(); }
  const DistanceTable& distances() const { return *distances_; }
  std::shared_ptr<const DistanceTable> shared_distances() const { return distances_; }

  /// Family geodesics from u to v. Throws GraphError when v is unreachable.
  GeodesicList resolve(VertexId u, VertexId v) const;

  /// Does some family geodesic from u to v pass through w?
  bool on_geodesic(VertexId u, VertexId v, VertexId w) const;

  /// Union of the vertex sets of the family geodesics from u to v, sorted.
  std::vector<VertexId> g_set(VertexId u, VertexId v) const;

  /// A family geodesic from u to v that avoids every vertex flagged by
  /// `blocked`, if one exists.
  std::optional<Path> avoiding_geodesic(VertexId u, VertexId v,
                                        const std::function<bool(VertexId)>& blocked) const;

  /// Vertices w with d(w, target) == level that lie on a family geodesic
  /// from x to target. Requires level <= d(x, target).
  std::vector<VertexId> crossings(VertexId x, VertexId target, std::uint32_t level) const;

 private:
  void require_connected(VertexId u, VertexId v) const;
  Path canonical_path(VertexId u, VertexId v) const;

  std::shared_ptr<const DistanceTable> distances_;
  FamilyKind kind_;
  std::size_t cap_;
};

/// G(a, b)
std::vector<VertexId> g_set(const GeodesicFamily& fam, VertexId a, VertexId b);

/// G(a, b; r): union over family geodesics from N(a; r) to N(b; r).
std::vector<VertexId> g_set_r(const GeodesicFamily& fam, VertexId a, VertexId b, std::uint32_t r);

/// Least delta for which the triangle with these sides is delta-thin.
std::uint32_t triangle_thinness(const DistanceTable& dist, const std::array<Path, 3>& sides);

struct HyperbolicityReport {
  std::uint32_t delta = 0;
  std::array<Path, 3> witness;
  std::uint64_t triangles_checked = 0;  // vertex triples, each over all family side choices
  std::uint64_t triangles_total = 0;
  bool exhaustive = false;
  std::string method;  // "scan", "sample" or "acyclic"
};

inline constexpr std::uint64_t kDefaultTriangleBudget = 200000;

/// Max over geodesic triangles of the least delta making each delta-thin.
/// Scans every vertex triple when there are at most `budget` of them,
/// otherwise a seeded sample of `budget` triples.
HyperbolicityReport thin_delta(const GeodesicFamily& fam, std::uint64_t budget = kDefaultTriangleBudget,
                               std::uint64_t seed = 0);

struct PropertyBViolation {
  VertexId a = 0;
  VertexId b = 0;
  std::uint32_t r = 0;
  VertexId c = 0;
  Path geodesic;  // a family geodesic between N(a; r) and N(b; r) missing N(c; k)
};

struct PropertyBReport {
  std::uint32_t ell = 0;
  std::uint32_t k = 0;
  std::uint32_t r_max = 0;
  std::uint64_t observed_D = 0;
  std::optional<std::array<std::uint32_t, 4>> D_witness;  // (a, b, r, c)
  std::vector<PropertyBViolation> intersection_violations;  // first kMaxListedViolations
  std::uint64_t violation_count = 0;
  std::uint64_t samples_checked = 0;  // qualifying (a, b, r, c) instances
  std::uint64_t pairs_checked = 0;
  std::uint64_t pairs_total = 0;
  bool exhaustive = false;
  std::string strategy;  // "generic" or "tree"

  /// No qualifying instance was found; observed_D = 0 says nothing.
  bool vacuous() const { return samples_checked == 0; }
  bool clause_holds() const { return violation_count == 0; }
};

inline constexpr std::size_t kMaxListedViolations = 100;
inline constexpr std::uint64_t kDefaultPairBudget = 50'000'000;

struct PropertyBOptions {
  std::uint32_t ell = 0;
  std::uint32_t k = 0;
  std::uint32_t r_max = 0;
  std::uint64_t pair_budget = kDefaultPairBudget;
  /// Pairs drawn when the pair count exceeds pair_budget.
  std::uint64_t sample_pairs = 20000;
  std::uint64_t seed = 0;
  /// Use the rooted-ancestry evaluation on trees with k = 0 (All family).
  bool allow_tree_strategy = true;
};

/// Measures property B on the graph: over (a, b) pairs, r <= r_max and
/// c in G(a, b) with d(c, {a, b}) >= r + ell, the largest |G(a, b; r) ∩ N(c; k)|
/// and every family geodesic from N(a; r) to N(b; r) that misses N(c; k).
PropertyBReport check_property_b(const GeodesicFamily& fam, const PropertyBOptions& opts);

}  // namespace asdim
