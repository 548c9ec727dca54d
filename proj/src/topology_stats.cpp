#include <algorithm>
#include <cmath>

#include "apflood/oracle.hpp"
#include "apflood/topology.hpp"

namespace apflood {

TopologyStats topology_stats(const Graph& g) {
  const Oracle oracle(g);
  const std::size_t n = g.node_count();

  TopologyStats st;
  st.node_count = n;
  st.mean_degree = g.mean_degree();
  double var = 0.0;
  for (NodeId u = 0; u < n; ++u) {
    const double d = static_cast<double>(g.degree(u)) - st.mean_degree;
    var += d * d;
  }
  st.degree_stddev = n ? std::sqrt(var / static_cast<double>(n)) : 0.0;
  st.diameter = oracle.diameter();
  if (n < 2) return st;

  double primary_sum = 0.0;
  double secondary_sum = 0.0;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = 0; j < n; ++j) {
      if (i == j) continue;
      const Path primary = oracle.canonical_primary(i, j);
      primary_sum += static_cast<double>(primary.hops());
      const CostedGraph modified = oracle.secondary_search_graph(primary);
      secondary_sum += static_cast<double>(oracle.optimal_secondary(primary).oracle_length);
      for (NodeId dst = 0; dst < n; ++dst) {
        for (const WeightedPath& wp : dijkstra_paths_to(modified, dst)) {
          st.modified_diameter_max =
              std::max(st.modified_diameter_max, static_cast<std::uint32_t>(wp.path.hops()));
        }
      }
    }
  }
  const double pairs = static_cast<double>(n * (n - 1));
  st.mean_optimal_primary_len = primary_sum / pairs;
  st.mean_optimal_secondary_len = secondary_sum / pairs;
  return st;
}

}  // namespace apflood
