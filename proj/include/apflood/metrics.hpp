#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "apflood/engine.hpp"
#include "apflood/graph.hpp"
#include "apflood/protocol.hpp"

namespace apflood {

/// Per-node message bound for a full round: N (mean_degree - 1) / (1 - beta).
double message_bound(std::size_t n, double mean_degree, double beta);

/// message_bound plus mean_degree, accounting for each source's own
/// initial transmission on every one of its links.
double message_bound_corrected(std::size_t n, double mean_degree, double beta);

struct QualityReport {
  double pc = 0.0;  ///< ordered pairs holding a primary
  double sc = 0.0;  ///< ordered pairs holding a secondary
  double po = 0.0;  ///< ordered pairs whose primary is a shortest path
  double so = 0.0;  ///< pairs whose secondary matches the oracle verdict
  /// Mean number of shared intermediate nodes between primary and secondary,
  /// over pairs whose secondary exists but is not optimal. Absent when no
  /// such pair exists.
  std::optional<double> mean_suboptimal_node_overlap;
  double n_m = 0.0;
  double bound_paper = 0.0;
  double bound_corrected = 0.0;

  std::size_t pairs = 0;
  /// Pairs whose oracle secondary coincides with the primary; they are left
  /// out of the so denominator.
  std::size_t pairs_without_distinct_secondary = 0;
  std::size_t suboptimal_secondaries = 0;
};

/// Connectivity and optimality over all ordered pairs (i, j), i != j, where
/// tables[i].route(j) is node i's entry toward j.
QualityReport path_quality(const Graph& g, std::span<const NodeState> tables);

/// path_quality plus n_m and both bounds for a completed full round.
QualityReport evaluate_round(const Graph& g, const RunReport& run, double beta);

/// floor(window / t_refresh) times the summed hop length of every stored
/// primary and secondary (absent paths count 0).
std::uint64_t refresh_count(double window, double t_refresh, std::span<const NodeState> tables);

/// floor(a / b) with slack for decimal inputs such as 1 / 0.05.
std::uint64_t periods_in(double window, double period);

struct OverheadReport {
  double window = 0.0;
  double t_adv = 0.0;
  double t_refresh = 0.0;
  std::uint64_t n_refresh = 0;
  std::uint64_t n_adv = 0;
  double adv_share = 0.0;
  /// t_adv lies outside [t_refresh, window]; the numbers are still computed.
  bool t_adv_out_of_range = false;
};

OverheadReport overhead_report(double window, double t_adv, double t_refresh, const RunReport& run);

}  // namespace apflood
