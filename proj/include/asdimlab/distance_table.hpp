#pragma once

#include <cstdint>
#include <list>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "asdimlab/graph.hpp"

namespace asdim {

/// All-pairs distance lookup over an immutable graph.
///
/// Small graphs get a dense 16-bit matrix built up front. Larger graphs keep
/// an LRU cache of BFS rows, filled on demand. Lookups are thread-safe.
class DistanceTable;

/// Distances from one fixed vertex; cheap to copy.
class DistanceRow {
 public:
  std::uint32_t operator[](VertexId v) const {
    if (dense_ != nullptr) {
      const auto d = dense_[v];
      return d == 0xFFFF ? kUnreachable : d;
    }
    return (*row_)[v];
  }

 private:
  friend class DistanceTable;
  const std::uint16_t* dense_ = nullptr;
  std::shared_ptr<const std::vector<std::uint32_t>> row_;
};

class DistanceTable {
 public:
  static constexpr std::size_t kDenseLimit = 8192;
  static constexpr std::size_t kDefaultRowCache = 256;

  explicit DistanceTable(const MetricGraph& g, std::size_t row_cache = kDefaultRowCache);

  const MetricGraph& graph() const { return *graph_; }
  bool dense() const { return !dense_.empty() || graph_->vertex_count() == 0; }

  std::uint32_t operator()(VertexId u, VertexId v) const;

  DistanceRow from(VertexId source) const;

  /// Full BFS row from `source`, shared with the cache.
  std::shared_ptr<const std::vector<std::uint32_t>> row(VertexId source) const;

 private:
  const MetricGraph* graph_;
  std::size_t n_;
  std::vector<std::uint16_t> dense_;

  std::size_t capacity_;
  mutable std::mutex mu_;
  mutable std::list<VertexId> lru_;
  mutable std::unordered_map<VertexId,
                             std::pair<std::shared_ptr<const std::vector<std::uint32_t>>,
                                       std::list<VertexId>::iterator>>
      rows_;
};

}  // namespace asdim
