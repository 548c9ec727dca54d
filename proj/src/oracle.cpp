#include "apflood/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace apflood {

std::size_t similarity(const Path& a, const Path& b) {
  auto la = a.links();
  std::sort(la.begin(), la.end());
  std::size_t shared = 0;
  for (const Link& l : b.links()) {
    if (std::binary_search(la.begin(), la.end(), l)) ++shared;
  }
  return shared;
}

std::size_t intermediate_node_overlap(const Path& a, const Path& b) {
  if (a.size() < 3 || b.size() < 3) return 0;
  auto inner_a = a.nodes().subspan(1, a.size() - 2);
  auto inner_b = b.nodes().subspan(1, b.size() - 2);
  std::size_t shared = 0;
  for (NodeId v : inner_b) {
    if (std::find(inner_a.begin(), inner_a.end(), v) != inner_a.end()) ++shared;
  }
  return shared;
}

CostedGraph modified_graph(const Graph& g, const Path& primary, std::uint32_t diam) {
  require_valid_path(g, primary);
  CostedGraph cg(g);
  const double penalized = 1.0 + static_cast<double>(diam);
  for (const Link& l : primary.links()) cg.set_cost(l.a, l.b, penalized);
  return cg;
}

CostedGraph secondary_search_graph(const Graph& g, const Path& primary, std::uint32_t diam) {
  require_valid_path(g, primary);
  CostedGraph cg(g);
  const double surcharge = 1.0 / (2.0 * static_cast<double>(g.node_count() + 1));
  const double penalized = 1.0 + static_cast<double>(diam) + surcharge;
  for (const Link& l : primary.links()) cg.set_cost(l.a, l.b, penalized);
  return cg;
}

CostedGraph modified_graph(const Graph& g, const Path& primary) {
  return modified_graph(g, primary, diameter(g));
}

namespace {

SecondaryVerdict verdict_from(const CostedGraph& search, const Path& primary) {
  if (primary.hops() == 0) throw std::invalid_argument("primary must join two distinct nodes");
  auto found = dijkstra_path(search, primary.front(), primary.back());
  SecondaryVerdict v;
  v.oracle_similarity = similarity(primary, found.path);
  v.oracle_length = found.path.hops();
  v.distinct = found.path != primary;
  v.oracle_path = std::move(found.path);
  return v;
}

}  // namespace

SecondaryVerdict optimal_secondary(const Graph& g, const Path& primary) {
  return verdict_from(secondary_search_graph(g, primary, diameter(g)), primary);
}

BruteForceSecondary brute_force_secondary(const Graph& g, const Path& primary) {
  if (g.node_count() > kBruteForceMaxNodes) {
    throw std::invalid_argument("brute_force_secondary limited to " + std::to_string(kBruteForceMaxNodes) +
                                " nodes");
  }
  require_valid_path(g, primary);
  if (primary.hops() == 0) throw std::invalid_argument("primary must join two distinct nodes");

  const std::size_t penalty = diameter(g);
  auto primary_links = primary.links();
  std::sort(primary_links.begin(), primary_links.end());
  const NodeId dst = primary.back();

  BruteForceSecondary best;
  bool found = false;
  std::vector<NodeId> stack{primary.front()};
  std::vector<char> on_path(g.node_count(), 0);
  on_path[primary.front()] = 1;

  // Neighbors are visited in ascending order, so paths come out in
  // lexicographic order and the first minimizer found is the smallest.
  std::size_t best_shared = 0;
  auto dfs = [&](auto&& self, std::size_t cost, std::size_t shared_links) -> void {
    const NodeId u = stack.back();
    if (u == dst) {
      if (!found || cost < best.min_cost || (cost == best.min_cost && shared_links < best_shared)) {
        found = true;
        best.min_cost = cost;
        best_shared = shared_links;
        best.path = Path(stack);
      }
      return;
    }
    for (NodeId v : g.neighbors(u)) {
      if (on_path[v]) continue;
      const bool shared = std::binary_search(primary_links.begin(), primary_links.end(), Link(u, v));
      on_path[v] = 1;
      stack.push_back(v);
      self(self, cost + 1 + (shared ? penalty : 0), shared_links + (shared ? 1 : 0));
      stack.pop_back();
      on_path[v] = 0;
    }
  };
  dfs(dfs, 0, 0);
  return best;
}

bool is_primary_optimal(const Graph& g, const Path& p) {
  require_valid_path(g, p);
  return p.hops() == bfs_distances(g, p.front())[p.back()];
}

bool matches_verdict(const SecondaryVerdict& verdict, const Path& p, const Path& s) {
  return similarity(p, s) == verdict.oracle_similarity && s.hops() == verdict.oracle_length;
}

namespace {

void require_same_endpoints(const Path& p, const Path& s) {
  if (p.empty() || s.empty() || p.front() != s.front() || p.back() != s.back()) {
    throw std::invalid_argument("paths " + to_string(p) + " and " + to_string(s) +
                                " do not share endpoints");
  }
}

}  // namespace

bool is_secondary_optimal(const Graph& g, const Path& p, const Path& s) {
  require_same_endpoints(p, s);
  require_valid_path(g, s);
  return matches_verdict(optimal_secondary(g, p), p, s);
}

// ---------------------------------------------------------------------------

Oracle::Oracle(const Graph& g) : graph_(&g) {
  dist_.reserve(g.node_count());
  for (NodeId s = 0; s < g.node_count(); ++s) {
    dist_.push_back(bfs_distances(g, s));
    for (std::uint32_t d : dist_.back()) {
      if (d == kUnreachable) throw ValidationError("oracle requires a connected graph");
      diameter_ = std::max(diameter_, d);
    }
  }
}

CostedGraph Oracle::modified_graph(const Path& primary) const {
  return apflood::modified_graph(*graph_, primary, diameter_);
}

CostedGraph Oracle::secondary_search_graph(const Path& primary) const {
  return apflood::secondary_search_graph(*graph_, primary, diameter_);
}

SecondaryVerdict Oracle::optimal_secondary(const Path& primary) const {
  return verdict_from(secondary_search_graph(primary), primary);
}

bool Oracle::is_primary_optimal(const Path& p) const {
  require_valid_path(*graph_, p);
  return p.hops() == dist_[p.front()][p.back()];
}

bool Oracle::is_secondary_optimal(const Path& p, const Path& s) const {
  require_same_endpoints(p, s);
  require_valid_path(*graph_, s);
  return matches_verdict(optimal_secondary(p), p, s);
}

Path Oracle::canonical_primary(NodeId u, NodeId v) const {
  std::vector<NodeId> nodes{u};
  while (nodes.back() != v) {
    const NodeId at = nodes.back();
    for (NodeId w : graph_->neighbors(at)) {
      if (dist_[w][v] + 1 == dist_[at][v]) {
        nodes.push_back(w);
        break;
      }
    }
  }
  return Path(std::move(nodes));
}

}  // namespace apflood
