#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "apflood/graph.hpp"

namespace apflood {

/// Edge weights aligned with a Graph's neighbor lists.
class CostedGraph {
 public:
  /// Unit cost on every link.
  explicit CostedGraph(Graph g);

  const Graph& graph() const noexcept { return graph_; }
  double cost(NodeId u, NodeId v) const;
  /// Cost of the k-th entry of neighbors(u).
  double cost_at(NodeId u, std::size_t k) const { return costs_[u][k]; }
  void set_cost(NodeId u, NodeId v, double c);

 private:
  Graph graph_;
  std::vector<std::vector<double>> costs_;
};

/// Reads the edge-list format: one "u v" pair per line, '#' starts a comment
/// line, blank lines ignored. N is one more than the largest id seen.
/// Throws ParseError for malformed lines and ValidationError for a
/// disconnected result.
Graph parse_topology(std::string_view text);
Graph load_topology(const std::filesystem::path& file);

/// Writes links sorted by (min endpoint, max endpoint).
void write_topology(std::ostream& os, const Graph& g);
void save_topology(const std::filesystem::path& file, const Graph& g);

/// Connected simple graph on n nodes with round(n * mean_degree / 2) links,
/// drawn uniformly and resampled until connected. Identical arguments give
/// identical graphs.
Graph random_graph(std::size_t n, double target_mean_degree, std::uint64_t seed);

inline constexpr std::size_t kRandomGraphMaxAttempts = 100000;

/// Hop distances from src. Unreachable nodes get kUnreachable.
inline constexpr std::uint32_t kUnreachable = ~std::uint32_t{0};
std::vector<std::uint32_t> bfs_distances(const Graph& g, NodeId src);

struct WeightedPath {
  Path path;
  double cost = 0.0;
};

/// Minimum-cost path. Among equal-cost paths the lexicographically smallest
/// node sequence wins, so the result is a pure function of the inputs.
WeightedPath dijkstra_path(const CostedGraph& g, NodeId src, NodeId dst);
WeightedPath dijkstra_path(const Graph& g, NodeId src, NodeId dst);

/// dijkstra_path(g, s, dst) for every source s, from a single search.
std::vector<WeightedPath> dijkstra_paths_to(const CostedGraph& g, NodeId dst);

/// Largest hop distance over all pairs. Requires a connected graph.
std::uint32_t diameter(const Graph& g);

struct TopologyStats {
  std::size_t node_count = 0;
  double mean_degree = 0.0;
  double degree_stddev = 0.0;  // population standard deviation
  std::uint32_t diameter = 0;
  /// Largest hop count of any min-cost path, over every modified graph built
  /// from an ordered pair's optimal primary.
  std::uint32_t modified_diameter_max = 0;
  double mean_optimal_primary_len = 0.0;
  double mean_optimal_secondary_len = 0.0;
};

TopologyStats topology_stats(const Graph& g);

}  // namespace apflood
