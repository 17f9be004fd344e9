#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "asdimlab/graph.hpp"
#include "asdimlab/spaces.hpp"

namespace asdim {

enum class CapacityMethod { Greedy, Exact };

std::string to_string(CapacityMethod m);

struct DiscreteSubsetReport {
  std::uint32_t D = 0;
  VertexId container_center = 0;
  std::uint32_t container_radius = 0;
  std::vector<VertexId> subset;  // sorted
  std::size_t cardinality = 0;
  std::size_t candidates = 0;    // |ball(center, radius)|
  CapacityMethod method = CapacityMethod::Greedy;
};

inline constexpr std::size_t kDefaultExactLimit = 40;

/// Largest D-discrete subset of ball(center, radius): exact branch and bound
/// when the ball has at most exact_limit (<= 64) vertices, otherwise greedy
/// by ascending id (a lower bound).
DiscreteSubsetReport discrete_capacity(const MetricGraph& g, std::uint32_t D, VertexId center, std::uint32_t radius,
                                       std::size_t exact_limit = kDefaultExactLimit);

/// Pairwise distances in `subset` are all >= D.
bool is_discrete(const MetricGraph& g, const std::vector<VertexId>& subset, std::uint32_t D);

/// The depth-D vertex of every broom ray of length >= D; {root} for D = 0.
std::vector<VertexId> ray_points(const LabeledGraph& broom, std::uint32_t D);

enum class GrowthVerdict { UnboundedTrend, Bounded, Inconclusive };

std::string to_string(GrowthVerdict v);

struct GrowthReport {
  std::vector<std::uint64_t> params;
  std::vector<DiscreteSubsetReport> probes;
  GrowthVerdict verdict = GrowthVerdict::Inconclusive;
};

/// Capacity of ball(basepoint, radius) across a family of truncations.
/// Strictly increasing cardinalities give UnboundedTrend; equal last two
/// give Bounded.
GrowthReport growth_probe(const std::function<LabeledGraph(std::uint64_t)>& generate,
                          const std::vector<std::uint64_t>& params, std::uint32_t D, std::uint32_t radius,
                          std::size_t exact_limit = kDefaultExactLimit);

}  // namespace asdim
