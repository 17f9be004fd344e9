#include "asdimlab/probes.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace asdim {

std::string to_string(CapacityMethod m) { return m == CapacityMethod::Exact ? "EXACT" : "GREEDY"; }

std::string to_string(GrowthVerdict v) {
  switch (v) {
    case GrowthVerdict::UnboundedTrend:
      return "UNBOUNDED-TREND";
    case GrowthVerdict::Bounded:
      return "BOUNDED";
    case GrowthVerdict::Inconclusive:
      break;
  }
  return "INCONCLUSIVE";
}

namespace {

/// Maximum independent set over at most 64 vertices given conflict masks.
class MaxIndependent {
 public:
  explicit MaxIndependent(std::vector<std::uint64_t> conflicts) : conflicts_(std::move(conflicts)) {}

  std::uint64_t solve() {
    const auto n = conflicts_.size();
    const std::uint64_t all = n == 64 ? ~0ULL : (1ULL << n) - 1;
    search(all, 0);
    return best_;
  }

 private:
  void search(std::uint64_t open, std::uint64_t chosen) {
    if (std::popcount(chosen) + std::popcount(open) <= std::popcount(best_) && best_ != 0) return;
    if (open == 0) {
      if (std::popcount(chosen) > std::popcount(best_) ||
          (std::popcount(chosen) == std::popcount(best_) && chosen_less(chosen, best_)))
        best_ = chosen;
      return;
    }
    const int v = std::countr_zero(open);
    const auto bit = 1ULL << v;
    search(open & ~bit & ~conflicts_[v], chosen | bit);
    search(open & ~bit, chosen);
  }

  /// Lexicographically smaller as sorted index lists.
  static bool chosen_less(std::uint64_t a, std::uint64_t b) {
    while (a != 0 && b != 0) {
      const int x = std::countr_zero(a);
      const int y = std::countr_zero(b);
      if (x != y) return x < y;
      a &= a - 1;
      b &= b - 1;
    }
    return a != 0 && b == 0;
  }

  std::vector<std::uint64_t> conflicts_;
  std::uint64_t best_ = 0;
};

}  // namespace

DiscreteSubsetReport discrete_capacity(const MetricGraph& g, std::uint32_t D, VertexId center, std::uint32_t radius,
                                       std::size_t exact_limit) {
  g.check(center);
  if (exact_limit > 64) throw std::invalid_argument("exact_limit cannot exceed 64");
  DiscreteSubsetReport rep;
  rep.D = D;
  rep.container_center = center;
  rep.container_radius = radius;
  const auto cand = ball(g, center, radius);
  rep.candidates = cand.size();

  if (D == 0 || D == 1) {
    rep.subset = cand;
    rep.method = CapacityMethod::Exact;
  } else if (cand.size() <= exact_limit) {
    rep.method = CapacityMethod::Exact;
    std::vector<std::uint64_t> conflicts(cand.size(), 0);
    for (std::size_t i = 0; i < cand.size(); ++i) {
      const auto near = bfs_distances(g, cand[i], D - 1);
      for (std::size_t j = 0; j < cand.size(); ++j)
        if (j != i && near[cand[j]] != kUnreachable) conflicts[i] |= 1ULL << j;
    }
    const auto chosen = MaxIndependent(std::move(conflicts)).solve();
    for (std::size_t i = 0; i < cand.size(); ++i)
      if (chosen >> i & 1) rep.subset.push_back(cand[i]);
  } else {
    rep.method = CapacityMethod::Greedy;
    std::vector<char> blocked(g.vertex_count(), 0);
    std::vector<std::uint32_t> seen(g.vertex_count(), 0);
    std::uint32_t stamp = 0;
    std::vector<VertexId> frontier, next;
    for (VertexId v : cand) {
      if (blocked[v]) continue;
      rep.subset.push_back(v);
      // Block everything closer than D to v.
      ++stamp;
      seen[v] = stamp;
      blocked[v] = 1;
      frontier.assign({v});
      for (std::uint32_t step = 1; step < D && !frontier.empty(); ++step) {
        next.clear();
        for (VertexId w : frontier)
          for (VertexId x : g.neighbors(w))
            if (seen[x] != stamp) {
              seen[x] = stamp;
              blocked[x] = 1;
              next.push_back(x);
            }
        std::swap(frontier, next);
      }
    }
  }
  rep.cardinality = rep.subset.size();
  if (!is_discrete(g, rep.subset, D)) throw std::logic_error("capacity subset failed the discreteness re-check");
  return rep;
}

bool is_discrete(const MetricGraph& g, const std::vector<VertexId>& subset, std::uint32_t D) {
  if (D <= 1) {
    auto s = subset;
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
  }
  std::vector<char> member(g.vertex_count(), 0);
  for (VertexId v : subset) {
    if (member[v]) return false;
    member[v] = 1;
  }
  for (VertexId v : subset) {
    const auto d = bfs_distances(g, v, D - 1);
    for (VertexId w : subset)
      if (w != v && d[w] != kUnreachable) return false;
  }
  return true;
}

std::vector<VertexId> ray_points(const LabeledGraph& broom, std::uint32_t D) {
  if (D == 0) return {broom.basepoint};
  std::vector<VertexId> out;
  const auto suffix = "." + std::to_string(D);
  for (std::uint32_t ray = 1;; ++ray) {
    if (!broom.find("r" + std::to_string(ray) + ".1")) break;
    if (auto v = broom.find("r" + std::to_string(ray) + suffix)) out.push_back(*v);
  }
  if (out.empty()) throw std::invalid_argument("no broom ray reaches depth " + std::to_string(D));
  std::sort(out.begin(), out.end());
  return out;
}

GrowthReport growth_probe(const std::function<LabeledGraph(std::uint64_t)>& generate,
                          const std::vector<std::uint64_t>& params, std::uint32_t D, std::uint32_t radius,
                          std::size_t exact_limit) {
  if (params.empty()) throw std::invalid_argument("growth_probe needs at least one parameter");
  for (std::size_t i = 1; i < params.size(); ++i)
    if (params[i] <= params[i - 1]) throw std::invalid_argument("growth_probe parameters must increase");
  GrowthReport rep;
  rep.params = params;
  for (auto p : params) {
    const auto space = generate(p);
    rep.probes.push_back(discrete_capacity(space.graph, D, space.basepoint, radius, exact_limit));
  }
  bool increasing = rep.probes.size() >= 2;
  for (std::size_t i = 1; i < rep.probes.size(); ++i)
    if (rep.probes[i].cardinality <= rep.probes[i - 1].cardinality) increasing = false;
  if (increasing)
    rep.verdict = GrowthVerdict::UnboundedTrend;
  else if (rep.probes.size() >= 2 &&
           rep.probes.back().cardinality == rep.probes[rep.probes.size() - 2].cardinality)
    rep.verdict = GrowthVerdict::Bounded;
  return rep;
}

}  // namespace asdim
