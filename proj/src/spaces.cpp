#include "asdimlab/spaces.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace asdim {

Fraction Fraction::make(std::int64_t p, std::int64_t q) {
  if (q == 0) {
    if (p == 0) throw std::invalid_argument("0/0 is not a fraction");
    return infinity();
  }
  if (q < 0) {
    p = -p;
    q = -q;
  }
  const auto g = std::gcd(p < 0 ? -p : p, q);
  return Fraction{p / g, q / g};
}

std::string Fraction::str() const { return std::to_string(p_) + "/" + std::to_string(q_); }

Fraction parse_fraction(std::string_view text) {
  const auto slash = text.find('/');
  std::int64_t p = 0;
  std::int64_t q = 1;
  auto parse = [&](std::string_view s, std::int64_t& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
      throw std::invalid_argument("malformed fraction '" + std::string(text) + "'");
  };
  if (slash == std::string_view::npos) {
    parse(text, p);
  } else {
    parse(text.substr(0, slash), p);
    parse(text.substr(slash + 1), q);
  }
  return Fraction::make(p, q);
}

bool farey_adjacent(const Fraction& a, const Fraction& b) {
  const __int128 det = static_cast<__int128>(a.p()) * b.q() - static_cast<__int128>(b.p()) * a.q();
  return det == 1 || det == -1;
}

std::optional<VertexId> LabeledGraph::find(const std::string& label) const {
  if (index_.size() != labels.size()) {
    index_.clear();
    for (VertexId v = 0; v < labels.size(); ++v) index_.emplace(labels[v], v);
  }
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

LabeledGraph broom_tree(std::uint32_t m) {
  if (m == 0) throw std::invalid_argument("broom_tree needs at least one ray (m >= 1)");
  LabeledGraph out;
  std::vector<std::pair<VertexId, VertexId>> edges;
  out.labels.push_back("x0");
  VertexId next = 1;
  for (std::uint32_t ray = 1; ray <= m; ++ray) {
    VertexId prev = 0;
    for (std::uint32_t depth = 1; depth <= ray; ++depth) {
      edges.emplace_back(prev, next);
      out.labels.push_back("r" + std::to_string(ray) + "." + std::to_string(depth));
      prev = next++;
    }
  }
  out.graph = MetricGraph::from_edges("broom:" + std::to_string(m), next, edges);
  out.basepoint = 0;
  return out;
}

LabeledGraph regular_tree(std::uint32_t valence, std::uint32_t depth) {
  if (valence < 2) throw std::invalid_argument("regular_tree needs valence >= 2");
  if (depth < 1) throw std::invalid_argument("regular_tree needs depth >= 1");
  LabeledGraph out;
  std::vector<std::pair<VertexId, VertexId>> edges;
  out.labels.push_back("e");
  std::vector<VertexId> frontier{0};
  for (std::uint32_t level = 1; level <= depth; ++level) {
    std::vector<VertexId> next_frontier;
    for (VertexId parent : frontier) {
      const std::uint32_t children = parent == 0 ? valence : valence - 1;
      for (std::uint32_t c = 0; c < children; ++c) {
        const auto child = static_cast<VertexId>(out.labels.size());
        edges.emplace_back(parent, child);
        out.labels.push_back(parent == 0 ? std::to_string(c)
                                         : out.labels[parent] + "." + std::to_string(c));
        next_frontier.push_back(child);
      }
    }
    frontier = std::move(next_frontier);
  }
  out.graph = MetricGraph::from_edges("tree:" + std::to_string(valence) + "," + std::to_string(depth),
                                      out.labels.size(), edges);
  return out;
}

namespace {

/// Inverse of a modulo m, for gcd(a, m) = 1 and m >= 2.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = ((a % m) + m) % m, r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const auto quot = old_r / r;
    old_r = std::exchange(r, old_r - quot * r);
    old_s = std::exchange(s, old_s - quot * s);
  }
  return ((old_s % m) + m) % m;
}

}  // namespace

LabeledGraph farey_truncation(std::uint32_t qmax) {
  if (qmax == 0) throw std::invalid_argument("farey_truncation needs qmax >= 1");
  const std::int64_t Q = qmax;
  LabeledGraph out;
  std::vector<Fraction> vertices{Fraction::infinity()};
  for (std::int64_t q = 1; q <= Q; ++q)
    for (std::int64_t p = -Q; p <= Q; ++p)
      if (std::gcd(p < 0 ? -p : p, q) == 1) vertices.push_back(Fraction::make(p, q));

  const auto key = [Q](std::int64_t p, std::int64_t q) { return (p + Q) * (Q + 1) + q; };
  std::unordered_map<std::int64_t, VertexId> id_of;
  id_of.reserve(vertices.size() * 2);
  for (VertexId v = 0; v < vertices.size(); ++v) {
    id_of.emplace(key(vertices[v].p(), vertices[v].q()), v);
    out.labels.push_back(vertices[v].str());
    if (vertices[v].p() == 0) out.basepoint = v;
  }

  // Neighbors r/s of p/q solve p*s - r*q = eps for eps = +-1; s runs over an
  // arithmetic progression modulo q.
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 1; u < vertices.size(); ++u) {
    const auto p = vertices[u].p();
    const auto q = vertices[u].q();
    for (const std::int64_t eps : {1, -1}) {
      const std::int64_t s0 = q == 1 ? 0 : (((eps * inverse_mod(p, q)) % q) + q) % q;
      for (std::int64_t s = s0; s <= Q; s += q) {
        const std::int64_t num = p * s - eps;
        if (num % q != 0) throw std::logic_error("farey neighbor arithmetic");
        const std::int64_t r = num / q;
        if (s == 0) {
          if (eps == 1) edges.emplace_back(0, u);  // both signs give 1/0
          continue;
        }
        if (r < -Q || r > Q) continue;
        const auto v = id_of.at(key(r, s));
        if (u < v) edges.emplace_back(u, v);
      }
    }
  }
  out.graph = MetricGraph::from_edges("farey:" + std::to_string(qmax), vertices.size(), edges);
  return out;
}

LabeledGraph grid(std::uint32_t n) {
  if (n < 2) throw std::invalid_argument("grid needs n >= 2");
  LabeledGraph out;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      const VertexId v = i * n + j;
      out.labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (j + 1 < n) edges.emplace_back(v, v + 1);
      if (i + 1 < n) edges.emplace_back(v, v + n);
    }
  }
  out.graph = MetricGraph::from_edges("grid:" + std::to_string(n), std::size_t{n} * n, edges);
  out.basepoint = 0;
  return out;
}

SafeRadius farey_safe_radius(std::uint32_t qmax) {
  const auto small = farey_truncation(qmax);
  const auto large = farey_truncation(2 * qmax);
  const auto d_small = bfs_distances(small.graph, small.basepoint);
  const auto d_large = bfs_distances(large.graph, large.basepoint);

  std::uint32_t eccentricity = 0;
  std::uint32_t first_change = kUnreachable;
  for (VertexId v = 0; v < small.labels.size(); ++v) {
    const auto w = large.find(small.labels[v]).value();
    eccentricity = std::max(eccentricity, d_small[v]);
    if (d_small[v] != d_large[w]) first_change = std::min(first_change, std::min(d_small[v], d_large[w]));
  }
  if (first_change == kUnreachable) return {eccentricity, true};
  return {first_change == 0 ? 0 : first_change - 1, false};
}

}  // namespace asdim
