#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "asdimlab/geodesics.hpp"
#include "asdimlab/graph.hpp"

namespace asdim {

/// The truncation is too small to host the requested construction.
class ScopeTooSmall : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CoverParams {
  std::uint32_t r = 1;
  std::uint32_t ell = 0;
  std::uint32_t delta = 0;
  VertexId basepoint = 0;

  /// Annulus width 10(r + ell).
  std::uint32_t width() const { return 10 * (r + ell); }
};

struct CoverSet {
  std::uint32_t n = 0;                // annulus index, from 1
  std::optional<VertexId> anchor;     // the sphere point s_i, none for n <= 2
  std::vector<VertexId> members;      // sorted
};

/// Annuli A_n = {w(n-1) <= d(x, x0) <= wn} and spheres S_n = {d(x, x0) = wn}
/// for w = 10(r + ell), with one set per sphere point of S_{n-2}.
struct Cover {
  CoverParams params;
  std::vector<CoverSet> sets;                     // ordered by (n, anchor)
  std::vector<std::vector<VertexId>> annuli;      // annuli[n - 1] = A_n
  std::vector<std::vector<VertexId>> spheres;     // spheres[n - 1] = S_n
  std::uint32_t max_depth = 0;                    // eccentricity of the basepoint
  std::uint32_t complete_annuli = 0;              // A_1 .. A_c are complete

  std::uint32_t annulus_count() const { return static_cast<std::uint32_t>(annuli.size()); }
  bool complete(std::uint32_t n) const { return n >= 1 && n <= complete_annuli; }
  /// Outer radius of the last complete annulus; 0 when there is none.
  std::uint32_t complete_radius() const { return complete_annuli * params.width(); }
};

/// Builds the cover. Throws std::invalid_argument when r = 0 or
/// ell < 10 delta, GraphError when some vertex cannot reach the basepoint.
Cover build_cover(const GeodesicFamily& fam, const CoverParams& params);

/// The cover whose floor(r/2)-multiplicity bound serves balls of `radius`:
/// the construction run at r = 2 * radius (radius >= 1).
Cover build_cover_for_radius(const GeodesicFamily& fam, std::uint32_t radius, std::uint32_t ell,
                             std::uint32_t delta, VertexId basepoint);

struct DiameterReport {
  std::uint32_t max_diam = 0;            // over sets of complete annuli
  std::optional<std::size_t> witness;    // index into cover.sets
  std::uint32_t max_diam_all = 0;        // over every set
  std::uint32_t bound = 0;               // 40(r + ell)
  bool pass = true;
};

DiameterReport verify_diameters(const MetricGraph& g, const Cover& c);

struct MultiplicityReport {
  std::uint32_t radius = 0;
  std::uint32_t max_multiplicity = 0;    // over x with d(x, x0) + radius <= complete_radius
  std::optional<VertexId> witness;
  std::size_t scope_size = 0;
  std::uint32_t max_multiplicity_all = 0;  // over every vertex
  std::optional<VertexId> witness_all;
  std::uint64_t bound_2D = 0;
  bool pass = true;
};

/// Number of cover sets meeting N(x; radius), maximized over x.
MultiplicityReport multiplicity(const MetricGraph& g, const Cover& c, std::uint32_t radius, std::uint64_t D);

/// Per-vertex count of cover sets meeting N(x; radius).
std::vector<std::uint32_t> multiplicity_profile(const MetricGraph& g, const Cover& c, std::uint32_t radius);

/// 2D - 1; throws std::invalid_argument for D = 0.
std::uint64_t asdim_upper_from_D(std::uint64_t D);

std::string store_cover(const Cover& c);

}  // namespace asdim
