#include "asdimlab/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace asdim {

namespace {

std::string checked_name(std::string name) {
  if (name.empty()) return "unnamed";
  if (std::any_of(name.begin(), name.end(), [](unsigned char c) { return std::isspace(c); }))
    throw GraphError("graph name must not contain whitespace: '" + name + "'");
  return name;
}

}  // namespace

MetricGraph MetricGraph::from_edges(std::string name, std::size_t vertex_count,
                                    std::span<const std::pair<VertexId, VertexId>> edges) {
  std::vector<std::vector<VertexId>> adj(vertex_count);
  for (auto [u, v] : edges) {
    if (u >= vertex_count) throw InvalidVertex(u);
    if (v >= vertex_count) throw InvalidVertex(v);
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return from_adjacency(std::move(name), std::move(adj));
}

MetricGraph MetricGraph::from_adjacency(std::string name, std::vector<std::vector<VertexId>> adjacency) {
  MetricGraph g;
  g.name_ = checked_name(std::move(name));
  const auto n = adjacency.size();
  std::size_t half_edges = 0;
  for (VertexId v = 0; v < n; ++v) {
    auto& nb = adjacency[v];
    std::sort(nb.begin(), nb.end());
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] >= n) throw InvalidVertex(nb[i]);
      if (nb[i] == v) throw GraphError("self-loop at vertex " + std::to_string(v));
      if (i > 0 && nb[i] == nb[i - 1])
        throw GraphError("duplicate edge " + std::to_string(v) + "-" + std::to_string(nb[i]));
    }
    half_edges += nb.size();
  }
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : adjacency[v]) {
      if (!std::binary_search(adjacency[w].begin(), adjacency[w].end(), v))
        throw GraphError("asymmetric edge " + std::to_string(v) + "-" + std::to_string(w));
    }
  }
  g.adjacency_ = std::move(adjacency);
  g.edge_count_ = half_edges / 2;
  if (n > 0) {
    const auto d = bfs_distances(g, 0);
    g.connected_ = std::none_of(d.begin(), d.end(), [](std::uint32_t x) { return x == kUnreachable; });
  }
  return g;
}

bool MetricGraph::adjacent(VertexId u, VertexId v) const {
  auto nb = neighbors(u);
  check(v);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t MetricGraph::max_degree() const {
  std::size_t best = 0;
  for (const auto& nb : adjacency_) best = std::max(best, nb.size());
  return best;
}

bool MetricGraph::is_connected() const { return connected_; }

bool MetricGraph::is_tree() const {
  return !adjacency_.empty() && edge_count_ + 1 == adjacency_.size() && is_connected();
}

std::vector<std::uint32_t> bfs_distances(const MetricGraph& g, VertexId source) {
  return bfs_distances(g, source, kUnreachable);
}

std::vector<std::uint32_t> bfs_distances(const MetricGraph& g, VertexId source, std::uint32_t radius) {
  g.check(source);
  std::vector<std::uint32_t> dist(g.vertex_count(), kUnreachable);
  std::vector<VertexId> queue;
  queue.reserve(64);
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId v = queue[head];
    if (dist[v] >= radius) continue;
    for (VertexId w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<std::uint32_t> bfs_from_set(const MetricGraph& g, std::span<const VertexId> sources) {
  std::vector<std::uint32_t> dist(g.vertex_count(), kUnreachable);
  std::vector<VertexId> queue;
  for (VertexId s : sources) {
    g.check(s);
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId v = queue[head];
    for (VertexId w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

Distance distance(const MetricGraph& g, VertexId u, VertexId v) {
  g.check(u);
  g.check(v);
  if (u == v) return Distance{0};
  auto d = bfs_distances(g, u);
  return Distance{d[v]};
}

std::vector<VertexId> ball(const MetricGraph& g, VertexId x, std::uint32_t r) {
  auto d = bfs_distances(g, x, r);
  std::vector<VertexId> out;
  for (VertexId v = 0; v < d.size(); ++v)
    if (d[v] <= r) out.push_back(v);
  return out;
}

std::vector<VertexId> sphere(const MetricGraph& g, VertexId x, std::uint32_t r) {
  auto d = bfs_distances(g, x, r);
  std::vector<VertexId> out;
  for (VertexId v = 0; v < d.size(); ++v)
    if (d[v] == r) out.push_back(v);
  return out;
}

GeodesicList all_geodesics(const MetricGraph& g, VertexId u, VertexId v, std::size_t cap) {
  g.check(u);
  const auto to_v = bfs_distances(g, v);
  if (to_v[u] == kUnreachable)
    throw GraphError("no geodesic: vertices " + std::to_string(u) + " and " + std::to_string(v) +
                     " are in different components");
  GeodesicList out;
  if (cap == 0) {
    out.truncated = true;
    return out;
  }
  // Depth-first over the geodesic DAG, neighbors ascending, so paths come out
  // in lexicographic order.
  Path current{u};
  std::vector<std::size_t> cursor{0};
  while (!cursor.empty()) {
    const VertexId at = current.back();
    if (at == v) {
      if (out.paths.size() == cap) {
        out.truncated = true;
        return out;
      }
      out.paths.push_back(current);
      current.pop_back();
      cursor.pop_back();
      continue;
    }
    auto nb = g.neighbors(at);
    auto& i = cursor.back();
    while (i < nb.size() && to_v[nb[i]] + 1 != to_v[at]) ++i;
    if (i == nb.size()) {
      current.pop_back();
      cursor.pop_back();
      continue;
    }
    current.push_back(nb[i]);
    ++i;
    cursor.push_back(0);
  }
  return out;
}

Path canonical_geodesic(const MetricGraph& g, VertexId u, VertexId v) {
  g.check(u);
  const auto to_v = bfs_distances(g, v);
  if (to_v[u] == kUnreachable)
    throw GraphError("no geodesic: vertices " + std::to_string(u) + " and " + std::to_string(v) +
                     " are in different components");
  Path p{u};
  while (p.back() != v) {
    for (VertexId w : g.neighbors(p.back())) {
      if (to_v[w] + 1 == to_v[p.back()]) {
        p.push_back(w);
        break;
      }
    }
  }
  return p;
}

Distance set_diameter(const MetricGraph& g, std::span<const VertexId> s) {
  if (s.empty()) throw std::invalid_argument("set_diameter of an empty set");
  for (VertexId v : s) g.check(v);

  std::vector<char> member(g.vertex_count(), 0);
  std::size_t distinct = 0;
  for (VertexId v : s)
    if (!member[v]) {
      member[v] = 1;
      ++distinct;
    }
  std::vector<std::uint32_t> dist(g.vertex_count(), kUnreachable);
  std::vector<VertexId> queue;

  // BFS from u that stops once every member is reached; returns the member
  // distances in the order of `s` and leaves `dist` clean.
  auto sweep = [&](VertexId u) {
    queue.assign({u});
    dist[u] = 0;
    std::size_t found = member[u] ? 1 : 0;
    for (std::size_t i = 0; i < queue.size() && found < distinct; ++i) {
      const VertexId w = queue[i];
      for (VertexId x : g.neighbors(w)) {
        if (dist[x] != kUnreachable) continue;
        dist[x] = dist[w] + 1;
        queue.push_back(x);
        if (member[x]) ++found;
      }
    }
    std::vector<std::uint32_t> out;
    out.reserve(s.size());
    for (VertexId v : s) out.push_back(dist[v]);
    for (VertexId v : queue) dist[v] = kUnreachable;
    return out;
  };
  auto farthest = [&](const std::vector<std::uint32_t>& d) {
    return static_cast<std::size_t>(std::max_element(d.begin(), d.end()) - d.begin());
  };

  const auto d0 = sweep(s.front());
  const auto ia = farthest(d0);
  if (d0[ia] == kUnreachable) return Distance::unreachable();
  const auto da = sweep(s[ia]);
  const auto ib = farthest(da);
  std::uint32_t best = da[ib];
  // The double sweep is exact in a tree.
  if (g.is_tree()) return Distance{best};
  const auto db = sweep(s[ib]);
  best = std::max(best, db[farthest(db)]);

  // Pairs not yet examined lie within 2 * d(center, u) of each other, so a
  // central start lets the scan stop early.
  std::size_t ic = 0;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (std::max(da[i], db[i]) < std::max(da[ic], db[ic])) ic = i;
  const auto dc = sweep(s[ic]);
  std::vector<std::size_t> order(s.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return dc[a] != dc[b] ? dc[a] > dc[b] : s[a] < s[b];
  });
  for (std::size_t i : order) {
    if (2ULL * dc[i] <= best) break;
    const auto du = sweep(s[i]);
    best = std::max(best, du[farthest(du)]);
  }
  return Distance{best};
}

bool is_path(const MetricGraph& g, std::span<const VertexId> p) {
  if (p.empty()) return false;
  for (VertexId v : p)
    if (!g.valid(v)) return false;
  for (std::size_t i = 1; i < p.size(); ++i)
    if (!g.adjacent(p[i - 1], p[i])) return false;
  return true;
}

bool is_geodesic(const MetricGraph& g, std::span<const VertexId> p) {
  if (!is_path(g, p)) return false;
  const auto d = distance(g, p.front(), p.back());
  return d.reachable() && d.value() + 1 == p.size();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_number(std::string_view tok, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  return value;
}

}  // namespace

MetricGraph load_graph(std::string_view text) {
  std::string name;
  std::size_t n = 0;
  bool have_header = false;
  std::vector<std::vector<VertexId>> adj;
  std::vector<std::size_t> line_of;
  std::size_t next_vertex = 0;

  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (!have_header) {
      const auto tok = split_ws(line);
      if (tok.size() != 3 || tok[0] != "graph")
        throw ParseError(line_no, "expected header 'graph <name> <vertex_count>'");
      name = std::string(tok[1]);
      n = parse_number(tok[2], line_no);
      adj.assign(n, {});
      line_of.assign(n, 0);
      have_header = true;
      continue;
    }

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(line_no, "expected '<id>: <neighbors>'");
    const auto id = parse_number(trim(line.substr(0, colon)), line_no);
    if (id >= n) throw ParseError(line_no, "vertex id " + std::to_string(id) + " out of range");
    if (id != next_vertex)
      throw ParseError(line_no, "expected vertex " + std::to_string(next_vertex) + ", got " +
                                    std::to_string(id));
    ++next_vertex;
    line_of[id] = line_no;
    for (auto tok : split_ws(line.substr(colon + 1))) {
      const auto w = parse_number(tok, line_no);
      if (w >= n) throw ParseError(line_no, "neighbor id " + std::to_string(w) + " out of range");
      if (w == id) throw ParseError(line_no, "self-loop at vertex " + std::to_string(id));
      adj[id].push_back(static_cast<VertexId>(w));
    }
    auto& nb = adj[id];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw ParseError(line_no, "duplicate neighbor at vertex " + std::to_string(id));
  }
  if (!have_header) throw ParseError(line_no, "missing 'graph' header");
  if (next_vertex != n)
    throw ParseError(line_no, "expected " + std::to_string(n) + " vertex lines, got " +
                                  std::to_string(next_vertex));
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : adj[v]) {
      if (!std::binary_search(adj[w].begin(), adj[w].end(), v))
        throw ParseError(line_of[v], "asymmetric edge " + std::to_string(v) + "-" + std::to_string(w) +
                                         ": " + std::to_string(w) + " does not list " +
                                         std::to_string(v));
    }
  }
  return MetricGraph::from_adjacency(std::move(name), std::move(adj));
}

std::string store_graph(const MetricGraph& g) {
  std::ostringstream out;
  out << "graph " << g.name() << ' ' << g.vertex_count() << '\n';
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << v << ':';
    for (VertexId w : g.neighbors(v)) out << ' ' << w;
    out << '\n';
  }
  return out.str();
}

}  // namespace asdim
