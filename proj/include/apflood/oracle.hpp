#pragma once

#include <cstdint>
#include <vector>

#include "apflood/graph.hpp"
#include "apflood/topology.hpp"

namespace apflood {

/// Number of undirected links present in both paths.
std::size_t similarity(const Path& a, const Path& b);

/// Number of nodes shared by both paths, excluding each path's endpoints.
std::size_t intermediate_node_overlap(const Path& a, const Path& b);

/// Copy of g where every link of `primary` costs 1 + D (D the hop diameter
/// of g) and every other link costs 1. Nodes are untouched.
CostedGraph modified_graph(const Graph& g, const Path& primary);
CostedGraph modified_graph(const Graph& g, const Path& primary, std::uint32_t diameter);

/// The graph the secondary search runs on: modified_graph plus a tie-break
/// surcharge on penalized links, smaller than 1 / N, so that among paths of
/// equal modified cost the one sharing fewer links with the primary wins.
/// Integer cost order is unchanged.
CostedGraph secondary_search_graph(const Graph& g, const Path& primary, std::uint32_t diameter);

/// Ground-truth secondary for a given primary: the min-cost path S' in the
/// modified graph. Cost ties go to fewer shared links, then to the
/// lexicographically smallest sequence.
struct SecondaryVerdict {
  Path oracle_path;
  std::size_t oracle_similarity = 0;
  std::size_t oracle_length = 0;
  /// False when S' is the primary itself, i.e. no distinct alternative
  /// exists (bridges, path graphs).
  bool distinct = true;
};

SecondaryVerdict optimal_secondary(const Graph& g, const Path& primary);

/// Exhaustive check of the modified-graph construction: minimum of
/// hops(p) + D * similarity(p, primary) over every simple path p between the
/// primary's endpoints. Ties resolve to fewer shared links, then to the
/// lexicographically smallest path, matching optimal_secondary.
struct BruteForceSecondary {
  std::size_t min_cost = 0;
  Path path;
};

inline constexpr std::size_t kBruteForceMaxNodes = 14;

BruteForceSecondary brute_force_secondary(const Graph& g, const Path& primary);

/// Hop length equals the BFS distance between the endpoints.
bool is_primary_optimal(const Graph& g, const Path& p);

/// (similarity to p, length) of s matches the oracle's verdict for p.
/// Throws std::invalid_argument if p and s have different endpoints.
bool is_secondary_optimal(const Graph& g, const Path& p, const Path& s);

/// True when s reaches the verdict's (similarity, length) pair against p.
bool matches_verdict(const SecondaryVerdict& verdict, const Path& p, const Path& s);

/// Caches the per-graph quantities (diameter, all-pairs hop distances) the
/// predicates above need, for evaluating many pairs on one topology.
class Oracle {
 public:
  explicit Oracle(const Graph& g);

  const Graph& graph() const noexcept { return *graph_; }
  std::uint32_t diameter() const noexcept { return diameter_; }
  std::uint32_t distance(NodeId u, NodeId v) const { return dist_[u][v]; }

  CostedGraph modified_graph(const Path& primary) const;
  CostedGraph secondary_search_graph(const Path& primary) const;
  SecondaryVerdict optimal_secondary(const Path& primary) const;
  bool is_primary_optimal(const Path& p) const;
  bool is_secondary_optimal(const Path& p, const Path& s) const;

  /// Lexicographically smallest shortest path between u and v.
  Path canonical_primary(NodeId u, NodeId v) const;

 private:
  const Graph* graph_;
  std::uint32_t diameter_ = 0;
  std::vector<std::vector<std::uint32_t>> dist_;
};

}  // namespace apflood
