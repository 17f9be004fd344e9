#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace asdim {

using VertexId = std::uint32_t;

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Shortest-path distance; UNREACHABLE is a value, not an error.
class Distance {
 public:
  constexpr Distance() = default;
  constexpr explicit Distance(std::uint32_t v) : value_(v) {}
  static constexpr Distance unreachable() { return Distance{}; }

  constexpr bool reachable() const { return value_ != kUnreachable; }
  std::uint32_t value() const {
    if (!reachable()) throw std::logic_error("distance is UNREACHABLE");
    return value_;
  }
  constexpr std::uint32_t raw() const { return value_; }

  friend constexpr bool operator==(Distance, Distance) = default;

 private:
  std::uint32_t value_ = kUnreachable;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidVertex : public std::out_of_range {
 public:
  explicit InvalidVertex(VertexId v)
      : std::out_of_range("invalid vertex id " + std::to_string(v)), id_(v) {}
  VertexId id() const { return id_; }

 private:
  VertexId id_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Sequence of vertices, consecutive ones adjacent.
using Path = std::vector<VertexId>;

/// Finite simple undirected graph with unit edge lengths. Immutable once built.
class MetricGraph {
 public:
  MetricGraph() = default;

  /// Builds from an undirected edge list; rejects loops, duplicate edges, bad ids.
  static MetricGraph from_edges(std::string name, std::size_t vertex_count,
                                std::span<const std::pair<VertexId, VertexId>> edges);

  /// Builds from explicit adjacency lists; rejects asymmetric lists.
  static MetricGraph from_adjacency(std::string name, std::vector<std::vector<VertexId>> adjacency);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  const std::string& name() const { return name_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    check(v);
    return adjacency_[v];
  }
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }
  bool adjacent(VertexId u, VertexId v) const;
  std::size_t max_degree() const;

  bool valid(VertexId v) const { return v < adjacency_.size(); }
  void check(VertexId v) const {
    if (!valid(v)) throw InvalidVertex(v);
  }

  /// Connected and acyclic.
  bool is_tree() const;
  bool is_connected() const;

 private:
  std::string name_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t edge_count_ = 0;
  bool connected_ = true;
};

/// BFS distances from `source`; kUnreachable for other components.
std::vector<std::uint32_t> bfs_distances(const MetricGraph& g, VertexId source);

/// BFS truncated at `radius`; vertices farther away stay kUnreachable.
std::vector<std::uint32_t> bfs_distances(const MetricGraph& g, VertexId source, std::uint32_t radius);

/// Multi-source BFS; distance to the nearest source.
std::vector<std::uint32_t> bfs_from_set(const MetricGraph& g, std::span<const VertexId> sources);

Distance distance(const MetricGraph& g, VertexId u, VertexId v);

std::vector<VertexId> ball(const MetricGraph& g, VertexId x, std::uint32_t r);
std::vector<VertexId> sphere(const MetricGraph& g, VertexId x, std::uint32_t r);

struct GeodesicList {
  std::vector<Path> paths;
  bool truncated = false;
};

inline constexpr std::size_t kDefaultGeodesicCap = 10000;

/// Enumerates geodesics from u to v in lexicographic order, stopping after `cap`.
GeodesicList all_geodesics(const MetricGraph& g, VertexId u, VertexId v,
                           std::size_t cap = kDefaultGeodesicCap);

/// Lexicographically least geodesic, chosen step by step from u.
Path canonical_geodesic(const MetricGraph& g, VertexId u, VertexId v);

/// Max pairwise distance in g (not the induced subgraph).
Distance set_diameter(const MetricGraph& g, std::span<const VertexId> s);

bool is_path(const MetricGraph& g, std::span<const VertexId> p);
bool is_geodesic(const MetricGraph& g, std::span<const VertexId> p);

MetricGraph load_graph(std::string_view text);
std::string store_graph(const MetricGraph& g);

}  // namespace asdim
