#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "asdimlab/graph.hpp"

namespace asdim {

/// Reduced fraction p/q, sign on p. The point at infinity is the single vertex 1/0.
class Fraction {
 public:
  static Fraction make(std::int64_t p, std::int64_t q);
  static Fraction infinity() { return Fraction{1, 0}; }

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  bool is_infinity() const { return q_ == 0; }
  std::string str() const;

  friend bool operator==(const Fraction&, const Fraction&) = default;

 private:
  Fraction(std::int64_t p, std::int64_t q) : p_(p), q_(q) {}
  std::int64_t p_;
  std::int64_t q_;
};

Fraction parse_fraction(std::string_view text);

/// |ps - rq| = 1
bool farey_adjacent(const Fraction& a, const Fraction& b);

/// A generated space: graph, one injective label per vertex, and a basepoint.
struct LabeledGraph {
  MetricGraph graph;
  std::vector<std::string> labels;
  VertexId basepoint = 0;

  std::optional<VertexId> find(const std::string& label) const;

 private:
  mutable std::unordered_map<std::string, VertexId> index_;
};

/// Root with attached subdivided paths of lengths 1..m.
LabeledGraph broom_tree(std::uint32_t m);

/// Rooted tree with every non-leaf of degree `valence`, truncated at `depth`.
/// Vertex ids follow breadth-first order from the root.
LabeledGraph regular_tree(std::uint32_t valence, std::uint32_t depth);

/// Farey graph on {1/0} and reduced p/q with 1 <= q <= qmax, |p| <= qmax.
LabeledGraph farey_truncation(std::uint32_t qmax);

/// n-by-n square lattice, basepoint at corner (0,0).
LabeledGraph grid(std::uint32_t n);

struct SafeRadius {
  std::uint32_t radius = 0;
  /// true when no distance from 0/1 changed between qmax and 2*qmax.
  bool whole_window = false;
};

/// Largest R with ball(0/1, R) at qmax equal to ball(0/1, R) at 2*qmax
/// restricted to the qmax window.
SafeRadius farey_safe_radius(std::uint32_t qmax);

}  // namespace asdim
