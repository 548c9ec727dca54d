#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "apflood/graph.hpp"
#include "apflood/metrics.hpp"

namespace apflood {

struct ExperimentConfig {
  std::vector<double> betas;
  std::vector<std::uint64_t> seeds;
  double window = 1.0;      // seconds
  double t_adv = 1.0;       // seconds
  double t_refresh = 0.05;  // seconds
  bool trace = false;
};

/// Throws std::invalid_argument on an empty beta or seed list, a beta outside
/// [0, 1), or a non-positive time parameter.
void validate(const ExperimentConfig& config);

/// betas 0.1, 0.2, ..., 0.9
std::vector<double> default_sweep_betas();

/// n consecutive seeds starting at first.
std::vector<std::uint64_t> seed_range(std::uint64_t first, std::size_t n);

struct NamedTopology {
  std::string name;
  Graph graph;
};

struct RunRow {
  std::string topology;
  std::size_t node_count = 0;
  double beta = 0.0;
  std::uint64_t seed = 0;
  QualityReport quality;
  OverheadReport overhead;
  std::uint32_t slots_elapsed = 0;
  std::vector<std::uint64_t> trace;  // filled when config.trace
};

/// Means over the runs of one (topology, beta) cell.
struct SummaryRow {
  std::string topology;
  std::size_t node_count = 0;
  double beta = 0.0;
  std::size_t runs = 0;
  double n_m = 0.0;
  double bound_paper = 0.0;
  double bound_corrected = 0.0;
  double pc = 0.0;
  double sc = 0.0;
  double po = 0.0;
  double so = 0.0;
  std::optional<double> overlap_suboptimal;  // over runs where it is defined
  double n_adv = 0.0;
  double n_refresh = 0.0;
  double adv_share = 0.0;
  double slots_elapsed = 0.0;
};

/// One full round plus all metrics.
RunRow run_one(const NamedTopology& topology, double beta, std::uint64_t seed, const ExperimentConfig& config);

/// Every (topology, beta, seed) combination, ordered that way regardless of
/// which worker finished first. threads == 0 picks the hardware count.
std::vector<RunRow> run_grid(std::span<const NamedTopology> topologies, const ExperimentConfig& config,
                             unsigned threads = 0);

std::vector<SummaryRow> summarize(std::span<const RunRow> rows);

/// Column order of the per-run CSV.
inline constexpr const char* kCsvHeader =
    "topology,N,beta,seed,n_m,bound_paper,bound_corrected,pc,sc,po,so,overlap_suboptimal,n_adv,n_refresh,"
    "adv_share,slots_elapsed";

/// Comment line emitted before the header stating how n_refresh is aggregated.
inline constexpr const char* kCsvConvention = "# n_refresh aggregates refresh messages over all ordered pairs";

/// Per-run rows followed by one summary row per (topology, beta) whose seed
/// column reads "mean".
void write_csv(std::ostream& os, std::span<const RunRow> rows, std::span<const SummaryRow> summary);
void write_json(std::ostream& os, std::span<const RunRow> rows, std::span<const SummaryRow> summary);

/// Rows of (topology, beta, seed, slot, transmissions).
void write_trace_csv(std::ostream& os, std::span<const RunRow> rows);

struct OracleRow {
  NodeId src = 0;
  NodeId dst = 0;
  std::size_t primary_len = 0;
  std::size_t oracle_similarity = 0;
  std::size_t oracle_secondary_len = 0;
  bool distinct_secondary = true;
};

/// All ordered pairs, using the lexicographically smallest shortest path as
/// the primary.
std::vector<OracleRow> oracle_rows(const Graph& g);

/// Rows plus a trailing "mean" row.
void write_oracle_csv(std::ostream& os, std::span<const OracleRow> rows);

/// Shortest round-trip decimal rendering used for every real-valued field.
std::string format_real(double v);

}  // namespace apflood
