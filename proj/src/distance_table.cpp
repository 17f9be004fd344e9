#include "asdimlab/distance_table.hpp"

namespace asdim {

namespace {
constexpr std::uint16_t kDenseUnreachable = 0xFFFF;
}

DistanceTable::DistanceTable(const MetricGraph& g, std::size_t row_cache)
    : graph_(&g), n_(g.vertex_count()), capacity_(std::max<std::size_t>(row_cache, 4)) {
  if (n_ == 0 || n_ > kDenseLimit) return;
  dense_.assign(n_ * n_, kDenseUnreachable);
  for (VertexId s = 0; s < n_; ++s) {
    const auto d = bfs_distances(g, s);
    auto* out = dense_.data() + static_cast<std::size_t>(s) * n_;
    for (std::size_t v = 0; v < n_; ++v)
      out[v] = d[v] == kUnreachable ? kDenseUnreachable : static_cast<std::uint16_t>(d[v]);
  }
}

std::uint32_t DistanceTable::operator()(VertexId u, VertexId v) const {
  if (u >= n_) throw InvalidVertex(u);
  if (v >= n_) throw InvalidVertex(v);
  if (!dense_.empty()) {
    const auto d = dense_[static_cast<std::size_t>(u) * n_ + v];
    return d == kDenseUnreachable ? kUnreachable : d;
  }
  if (u == v) return 0;
  {
    std::lock_guard lock(mu_);
    if (auto it = rows_.find(v); it != rows_.end() && rows_.find(u) == rows_.end())
      return (*it->second.first)[u];
  }
  return (*row(u))[v];
}

DistanceRow DistanceTable::from(VertexId source) const {
  if (source >= n_) throw InvalidVertex(source);
  DistanceRow out;
  if (!dense_.empty())
    out.dense_ = dense_.data() + static_cast<std::size_t>(source) * n_;
  else
    out.row_ = row(source);
  return out;
}

std::shared_ptr<const std::vector<std::uint32_t>> DistanceTable::row(VertexId source) const {
  if (source >= n_) throw InvalidVertex(source);
  if (!dense_.empty()) {
    auto out = std::make_shared<std::vector<std::uint32_t>>(n_);
    const auto* in = dense_.data() + static_cast<std::size_t>(source) * n_;
    for (std::size_t v = 0; v < n_; ++v) (*out)[v] = in[v] == kDenseUnreachable ? kUnreachable : in[v];
    return out;
  }
  {
    std::lock_guard lock(mu_);
    if (auto it = rows_.find(source); it != rows_.end()) {
      lru_.splice(lru_.begin(), lru_, it->second.second);
      return it->second.first;
    }
  }
  auto fresh = std::make_shared<const std::vector<std::uint32_t>>(bfs_distances(*graph_, source));
  std::lock_guard lock(mu_);
  if (auto it = rows_.find(source); it != rows_.end()) return it->second.first;
  lru_.push_front(source);
  rows_.emplace(source, std::make_pair(fresh, lru_.begin()));
  while (rows_.size() > capacity_) {
    rows_.erase(lru_.back());
    lru_.pop_back();
  }
  return fresh;
}

}  // namespace asdim
