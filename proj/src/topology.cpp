#include "apflood/topology.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <ostream>
#include <queue>
#include <sstream>

#include "apflood/rng.hpp"

namespace apflood {

CostedGraph::CostedGraph(Graph g) : graph_(std::move(g)), costs_(graph_.node_count()) {
  for (NodeId u = 0; u < graph_.node_count(); ++u) costs_[u].assign(graph_.degree(u), 1.0);
}

namespace {

std::size_t neighbor_index(const Graph& g, NodeId u, NodeId v) {
  auto nb = g.neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) {
    throw std::invalid_argument("no link " + std::to_string(u) + "-" + std::to_string(v));
  }
  return static_cast<std::size_t>(it - nb.begin());
}

}  // namespace

double CostedGraph::cost(NodeId u, NodeId v) const {
  return costs_.at(u)[neighbor_index(graph_, u, v)];
}

void CostedGraph::set_cost(NodeId u, NodeId v, double c) {
  if (!(c > 0.0)) throw std::invalid_argument("link costs must be positive");
  costs_.at(u)[neighbor_index(graph_, u, v)] = c;
  costs_.at(v)[neighbor_index(graph_, v, u)] = c;
}

// ---------------------------------------------------------------------------
// Edge-list I/O

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

NodeId parse_id(std::string_view tok, std::size_t line) {
  if (!tok.empty() && tok.front() == '-') {
    throw ParseError(line, "negative node id '" + std::string(tok) + "'");
  }
  std::uint64_t value = 0;
  auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || end != tok.data() + tok.size()) {
    throw ParseError(line, "expected integer node id, got '" + std::string(tok) + "'");
  }
  if (value >= std::numeric_limits<NodeId>::max()) {
    throw ParseError(line, "node id too large '" + std::string(tok) + "'");
  }
  return static_cast<NodeId>(value);
}

}  // namespace

Graph parse_topology(std::string_view text) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  NodeId max_id = 0;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string_view> tokens;
    while (!line.empty()) {
      const auto sp = line.find_first_of(" \t");
      tokens.push_back(line.substr(0, sp));
      line = sp == std::string_view::npos ? std::string_view{} : trim(line.substr(sp));
    }
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected two node ids, got " + std::to_string(tokens.size()) + " tokens");
    }
    const NodeId u = parse_id(tokens[0], line_no);
    const NodeId v = parse_id(tokens[1], line_no);
    if (u == v) throw ParseError(line_no, "self-loop on node " + std::to_string(u));
    edges.emplace_back(u, v);
    max_id = std::max({max_id, u, v});
  }
  if (edges.empty()) throw ParseError(line_no, "topology has no links");

  Graph g(static_cast<std::size_t>(max_id) + 1);
  for (auto [u, v] : edges) g.add_edge(u, v);
  if (!g.is_connected()) throw ValidationError("topology is not connected");
  return g;
}

Graph load_topology(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open topology file " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_topology(buf.str());
}

void write_topology(std::ostream& os, const Graph& g) {
  for (const Link& l : g.links()) os << l.a << ' ' << l.b << '\n';
}

void save_topology(const std::filesystem::path& file, const Graph& g) {
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot write topology file " + file.string());
  write_topology(out, g);
}

// ---------------------------------------------------------------------------
// Random generator

Graph random_graph(std::size_t n, double target_mean_degree, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("random_graph needs at least 3 nodes");
  const double lo = 2.0 * static_cast<double>(n - 1) / static_cast<double>(n);
  const double hi = static_cast<double>(n - 1);
  constexpr double eps = 1e-9;
  if (!(target_mean_degree >= lo - eps && target_mean_degree <= hi + eps)) {
    throw std::invalid_argument("mean degree " + std::to_string(target_mean_degree) +
                                " infeasible for a connected simple graph on " + std::to_string(n) +
                                " nodes");
  }
  const std::size_t max_links = n * (n - 1) / 2;
  auto links = static_cast<std::size_t>(std::llround(target_mean_degree * static_cast<double>(n) / 2.0));
  links = std::clamp(links, n - 1, max_links);

  std::vector<Link> pool;
  pool.reserve(max_links);
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) pool.emplace_back(u, v);

  Rng rng(seed);
  for (std::size_t attempt = 0; attempt < kRandomGraphMaxAttempts; ++attempt) {
    // Partial Fisher-Yates: the first `links` slots become a uniform sample.
    for (std::size_t i = 0; i < links; ++i) {
      const auto j = i + static_cast<std::size_t>(rng.below(max_links - i));
      std::swap(pool[i], pool[j]);
    }
    Graph g(n);
    for (std::size_t i = 0; i < links; ++i) g.add_edge(pool[i].a, pool[i].b);
    if (g.is_connected()) return g;
  }
  throw std::runtime_error("random_graph: no connected sample after " +
                           std::to_string(kRandomGraphMaxAttempts) + " attempts");
}

// ---------------------------------------------------------------------------
// Shortest paths

std::vector<std::uint32_t> bfs_distances(const Graph& g, NodeId src) {
  if (!g.contains(src)) throw std::out_of_range("bfs source " + std::to_string(src) + " out of range");
  std::vector<std::uint32_t> dist(g.node_count(), kUnreachable);
  std::vector<NodeId> queue{src};
  dist[src] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    for (NodeId v : g.neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

namespace {

constexpr double kCostTolerance = 1e-9;

std::vector<double> dijkstra_costs(const CostedGraph& cg, NodeId src) {
  const Graph& g = cg.graph();
  std::vector<double> dist(g.node_count(), std::numeric_limits<double>::infinity());
  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[src] = 0.0;
  heap.emplace(0.0, src);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    auto nb = g.neighbors(u);
    for (std::size_t k = 0; k < nb.size(); ++k) {
      const double nd = d + cg.cost_at(u, k);
      if (nd < dist[nb[k]]) {
        dist[nb[k]] = nd;
        heap.emplace(nd, nb[k]);
      }
    }
  }
  return dist;
}

// Distances are taken toward dst; walking forward from src and always
// taking the smallest neighbor that stays on a min-cost route yields the
// lexicographically smallest optimal sequence.
Path walk_to(const CostedGraph& cg, const std::vector<double>& to_dst, NodeId src, NodeId dst) {
  const Graph& g = cg.graph();
  std::vector<NodeId> nodes{src};
  NodeId u = src;
  while (u != dst) {
    auto nb = g.neighbors(u);
    NodeId next = u;
    for (std::size_t k = 0; k < nb.size(); ++k) {
      if (std::abs(to_dst[nb[k]] + cg.cost_at(u, k) - to_dst[u]) <= kCostTolerance) {
        next = nb[k];
        break;
      }
    }
    nodes.push_back(next);
    u = next;
  }
  return Path(std::move(nodes));
}

}  // namespace

WeightedPath dijkstra_path(const CostedGraph& cg, NodeId src, NodeId dst) {
  const Graph& g = cg.graph();
  if (!g.contains(src) || !g.contains(dst)) throw std::out_of_range("dijkstra endpoint out of range");
  const auto to_dst = dijkstra_costs(cg, dst);
  if (std::isinf(to_dst[src])) {
    throw ValidationError("node " + std::to_string(dst) + " unreachable from " + std::to_string(src));
  }
  return {walk_to(cg, to_dst, src, dst), to_dst[src]};
}

std::vector<WeightedPath> dijkstra_paths_to(const CostedGraph& cg, NodeId dst) {
  const Graph& g = cg.graph();
  if (!g.contains(dst)) throw std::out_of_range("dijkstra endpoint out of range");
  const auto to_dst = dijkstra_costs(cg, dst);
  std::vector<WeightedPath> out;
  out.reserve(g.node_count());
  for (NodeId s = 0; s < g.node_count(); ++s) {
    if (std::isinf(to_dst[s])) {
      throw ValidationError("node " + std::to_string(dst) + " unreachable from " + std::to_string(s));
    }
    out.push_back({walk_to(cg, to_dst, s, dst), to_dst[s]});
  }
  return out;
}

WeightedPath dijkstra_path(const Graph& g, NodeId src, NodeId dst) {
  return dijkstra_path(CostedGraph(g), src, dst);
}

std::uint32_t diameter(const Graph& g) {
  std::uint32_t best = 0;
  for (NodeId s = 0; s < g.node_count(); ++s) {
    for (std::uint32_t d : bfs_distances(g, s)) {
      if (d == kUnreachable) throw ValidationError("diameter of a disconnected graph");
      best = std::max(best, d);
    }
  }
  return best;
}

}  // namespace apflood
