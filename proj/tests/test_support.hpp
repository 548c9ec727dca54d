#pragma once

// Fixtures and brute-force reference computations shared by the unit tests.
// Nothing here calls into the library's search routines.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "apflood/graph.hpp"

namespace apflood::testing {

inline Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {2, 0}}); }
inline Graph path3() { return Graph(3, {{0, 1}, {1, 2}}); }
inline Graph path4() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}}); }
inline Graph cycle4() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

inline std::string data_file(const std::string& name) {
  return std::string(APFLOOD_DATA_DIR) + "/topologies/" + name;
}

/// G(n, p) resampled until connected; uses its own engine so fixtures do not
/// depend on the library's generator.
inline Graph random_connected(std::size_t n, double p, std::mt19937_64& eng) {
  std::bernoulli_distribution coin(p);
  for (;;) {
    Graph g(n);
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = u + 1; v < n; ++v)
        if (coin(eng)) g.add_edge(u, v);
    if (g.is_connected()) return g;
  }
}

/// Every simple path from s to t, in lexicographic order.
inline std::vector<std::vector<NodeId>> all_simple_paths(const Graph& g, NodeId s, NodeId t) {
  std::vector<std::vector<NodeId>> out;
  std::vector<NodeId> stack{s};
  std::vector<char> on(g.node_count(), 0);
  on[s] = 1;
  auto rec = [&](auto&& self) -> void {
    if (stack.back() == t) {
      out.push_back(stack);
      return;
    }
    for (NodeId v : g.neighbors(stack.back())) {
      if (on[v]) continue;
      on[v] = 1;
      stack.push_back(v);
      self(self);
      stack.pop_back();
      on[v] = 0;
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

/// Floyd-Warshall hop distances.
inline std::vector<std::vector<std::uint32_t>> all_pairs_hops(const Graph& g) {
  const std::size_t n = g.node_count();
  constexpr std::uint32_t inf = std::numeric_limits<std::uint32_t>::max() / 4;
  std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, inf));
  for (NodeId u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (NodeId v : g.neighbors(u)) d[u][v] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

/// Links shared by two node sequences, counted directly on unordered pairs.
inline std::size_t shared_links(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
  std::size_t n = 0;
  for (std::size_t i = 1; i < a.size(); ++i)
    for (std::size_t j = 1; j < b.size(); ++j)
      if ((a[i - 1] == b[j - 1] && a[i] == b[j]) || (a[i - 1] == b[j] && a[i] == b[j - 1])) ++n;
  return n;
}

}  // namespace apflood::testing
