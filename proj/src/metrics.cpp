#include "apflood/metrics.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "apflood/oracle.hpp"

namespace apflood {

double message_bound(std::size_t n, double mean_degree, double beta) {
  require_valid_beta(beta);
  return static_cast<double>(n) * (mean_degree - 1.0) / (1.0 - beta);
}

double message_bound_corrected(std::size_t n, double mean_degree, double beta) {
  return message_bound(n, mean_degree, beta) + mean_degree;
}

QualityReport path_quality(const Graph& g, std::span<const NodeState> tables) {
  const std::size_t n = g.node_count();
  if (tables.size() != n) throw std::invalid_argument("one route table per node required");

  const Oracle oracle(g);
  std::map<Path, SecondaryVerdict> verdicts;
  QualityReport q;
  q.pairs = n * (n - 1);
  std::size_t with_primary = 0;
  std::size_t with_secondary = 0;
  std::size_t primary_optimal = 0;
  std::size_t secondary_optimal = 0;
  std::size_t overlap_sum = 0;

  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = 0; j < n; ++j) {
      if (i == j) continue;
      const RouteEntry& entry = tables[i].route(j);
      if (entry.secondary) {
        require_valid_path(g, *entry.secondary);
        ++with_secondary;
      }
      if (!entry.primary) continue;
      const Path& primary = *entry.primary;
      require_valid_path(g, primary);
      ++with_primary;
      if (oracle.is_primary_optimal(primary)) ++primary_optimal;

      auto it = verdicts.find(primary);
      if (it == verdicts.end()) it = verdicts.emplace(primary, oracle.optimal_secondary(primary)).first;
      const SecondaryVerdict& verdict = it->second;
      if (!verdict.distinct) {
        ++q.pairs_without_distinct_secondary;
        continue;
      }
      if (!entry.secondary) continue;
      if (matches_verdict(verdict, primary, *entry.secondary)) {
        ++secondary_optimal;
      } else {
        ++q.suboptimal_secondaries;
        overlap_sum += intermediate_node_overlap(primary, *entry.secondary);
      }
    }
  }

  if (q.pairs == 0) return q;
  const auto pairs = static_cast<double>(q.pairs);
  q.pc = static_cast<double>(with_primary) / pairs;
  q.sc = static_cast<double>(with_secondary) / pairs;
  q.po = static_cast<double>(primary_optimal) / pairs;
  const std::size_t so_den = q.pairs - q.pairs_without_distinct_secondary;
  q.so = so_den ? static_cast<double>(secondary_optimal) / static_cast<double>(so_den) : 0.0;
  if (q.suboptimal_secondaries > 0) {
    q.mean_suboptimal_node_overlap =
        static_cast<double>(overlap_sum) / static_cast<double>(q.suboptimal_secondaries);
  }
  return q;
}

QualityReport evaluate_round(const Graph& g, const RunReport& run, double beta) {
  QualityReport q = path_quality(g, run.route_tables);
  const std::size_t n = g.node_count();
  q.n_m = n ? static_cast<double>(run.transmissions_total) / static_cast<double>(n) : 0.0;
  q.bound_paper = message_bound(n, g.mean_degree(), beta);
  q.bound_corrected = message_bound_corrected(n, g.mean_degree(), beta);
  return q;
}

std::uint64_t periods_in(double window, double period) {
  if (!(period > 0.0)) throw std::invalid_argument("period must be positive");
  if (!(window >= 0.0)) throw std::invalid_argument("window must be non-negative");
  return static_cast<std::uint64_t>(std::floor(window / period + 1e-9));
}

std::uint64_t refresh_count(double window, double t_refresh, std::span<const NodeState> tables) {
  const std::uint64_t periods = periods_in(window, t_refresh);
  std::uint64_t hops = 0;
  for (const NodeState& st : tables) {
    for (NodeId d = 0; d < st.routes().size(); ++d) {
      if (d == st.id()) continue;
      const RouteEntry& e = st.routes()[d];
      if (e.primary) hops += e.primary->hops();
      if (e.secondary) hops += e.secondary->hops();
    }
  }
  return periods * hops;
}

OverheadReport overhead_report(double window, double t_adv, double t_refresh, const RunReport& run) {
  OverheadReport r;
  r.window = window;
  r.t_adv = t_adv;
  r.t_refresh = t_refresh;
  r.t_adv_out_of_range = t_adv < t_refresh || t_adv > window;
  r.n_adv = run.transmissions_total * periods_in(window, t_adv);
  r.n_refresh = refresh_count(window, t_refresh, run.route_tables);
  const std::uint64_t all = r.n_adv + r.n_refresh;
  r.adv_share = all ? static_cast<double>(r.n_adv) / static_cast<double>(all) : 0.0;
  return r;
}

}  // namespace apflood
