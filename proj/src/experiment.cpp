#include "apflood/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "apflood/engine.hpp"
#include "apflood/oracle.hpp"

namespace apflood {

void validate(const ExperimentConfig& config) {
  if (config.betas.empty()) throw std::invalid_argument("at least one beta required");
  if (config.seeds.empty()) throw std::invalid_argument("at least one seed required");
  for (double b : config.betas) require_valid_beta(b);
  if (!(config.window > 0.0)) throw std::invalid_argument("window must be positive");
  if (!(config.t_adv > 0.0)) throw std::invalid_argument("t_adv must be positive");
  if (!(config.t_refresh > 0.0)) throw std::invalid_argument("t_refresh must be positive");
}

std::vector<double> default_sweep_betas() {
  std::vector<double> out;
  for (int k = 1; k <= 9; ++k) out.push_back(k / 10.0);
  return out;
}

std::vector<std::uint64_t> seed_range(std::uint64_t first, std::size_t n) {
  std::vector<std::uint64_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = first + i;
  return out;
}

RunRow run_one(const NamedTopology& topology, double beta, std::uint64_t seed, const ExperimentConfig& config) {
  const RunReport run = run_full_round(topology.graph, beta, seed);
  RunRow row;
  row.topology = topology.name;
  row.node_count = topology.graph.node_count();
  row.beta = beta;
  row.seed = seed;
  row.quality = evaluate_round(topology.graph, run, beta);
  row.overhead = overhead_report(config.window, config.t_adv, config.t_refresh, run);
  row.slots_elapsed = run.slots_elapsed;
  if (config.trace) row.trace = run.transmissions_per_slot;
  return row;
}

std::vector<RunRow> run_grid(std::span<const NamedTopology> topologies, const ExperimentConfig& config,
                             unsigned threads) {
  validate(config);
  struct Job {
    const NamedTopology* topology;
    double beta;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (const NamedTopology& t : topologies)
    for (double b : config.betas)
      for (std::uint64_t s : config.seeds) jobs.push_back({&t, b, s});

  std::vector<RunRow> rows(jobs.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, jobs.size()));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      try {
        rows[k] = run_one(*jobs[k].topology, jobs[k].beta, jobs[k].seed, config);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::vector<SummaryRow> summarize(std::span<const RunRow> rows) {
  std::vector<SummaryRow> out;
  std::vector<std::size_t> overlap_runs;
  for (const RunRow& r : rows) {
    if (out.empty() || out.back().topology != r.topology || out.back().beta != r.beta) {
      SummaryRow s;
      s.topology = r.topology;
      s.node_count = r.node_count;
      s.beta = r.beta;
      out.push_back(s);
      overlap_runs.push_back(0);
    }
    SummaryRow& s = out.back();
    ++s.runs;
    s.n_m += r.quality.n_m;
    s.bound_paper += r.quality.bound_paper;
    s.bound_corrected += r.quality.bound_corrected;
    s.pc += r.quality.pc;
    s.sc += r.quality.sc;
    s.po += r.quality.po;
    s.so += r.quality.so;
    if (r.quality.mean_suboptimal_node_overlap) {
      s.overlap_suboptimal = s.overlap_suboptimal.value_or(0.0) + *r.quality.mean_suboptimal_node_overlap;
      ++overlap_runs.back();
    }
    s.n_adv += static_cast<double>(r.overhead.n_adv);
    s.n_refresh += static_cast<double>(r.overhead.n_refresh);
    s.adv_share += r.overhead.adv_share;
    s.slots_elapsed += r.slots_elapsed;
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    SummaryRow& s = out[i];
    const auto k = static_cast<double>(s.runs);
    for (double* f : {&s.n_m, &s.bound_paper, &s.bound_corrected, &s.pc, &s.sc, &s.po, &s.so, &s.n_adv,
                      &s.n_refresh, &s.adv_share, &s.slots_elapsed}) {
      *f /= k;
    }
    if (s.overlap_suboptimal) *s.overlap_suboptimal /= static_cast<double>(overlap_runs[i]);
  }
  return out;
}

std::string format_real(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw std::runtime_error("cannot format number");
  return std::string(buf, end);
}

namespace {

std::string optional_real(const std::optional<double>& v) { return v ? format_real(*v) : std::string(); }

}  // namespace

void write_csv(std::ostream& os, std::span<const RunRow> rows, std::span<const SummaryRow> summary) {
  os << kCsvConvention << '\n' << kCsvHeader << '\n';
  for (const RunRow& r : rows) {
    const QualityReport& q = r.quality;
    os << r.topology << ',' << r.node_count << ',' << format_real(r.beta) << ',' << r.seed << ','
       << format_real(q.n_m) << ',' << format_real(q.bound_paper) << ',' << format_real(q.bound_corrected) << ','
       << format_real(q.pc) << ',' << format_real(q.sc) << ',' << format_real(q.po) << ',' << format_real(q.so)
       << ',' << optional_real(q.mean_suboptimal_node_overlap) << ',' << r.overhead.n_adv << ','
       << r.overhead.n_refresh << ',' << format_real(r.overhead.adv_share) << ',' << r.slots_elapsed << '\n';
  }
  for (const SummaryRow& s : summary) {
    os << s.topology << ',' << s.node_count << ',' << format_real(s.beta) << ",mean," << format_real(s.n_m) << ','
       << format_real(s.bound_paper) << ',' << format_real(s.bound_corrected) << ',' << format_real(s.pc) << ','
       << format_real(s.sc) << ',' << format_real(s.po) << ',' << format_real(s.so) << ','
       << optional_real(s.overlap_suboptimal) << ',' << format_real(s.n_adv) << ',' << format_real(s.n_refresh)
       << ',' << format_real(s.adv_share) << ',' << format_real(s.slots_elapsed) << '\n';
  }
}

void write_json(std::ostream& os, std::span<const RunRow> rows, std::span<const SummaryRow> summary) {
  using nlohmann::json;
  auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
  json doc;
  doc["convention"] = "n_refresh aggregates refresh messages over all ordered pairs";
  doc["runs"] = json::array();
  for (const RunRow& r : rows) {
    const QualityReport& q = r.quality;
    json row = {{"topology", r.topology},
                {"N", r.node_count},
                {"beta", r.beta},
                {"seed", r.seed},
                {"n_m", q.n_m},
                {"bound_paper", q.bound_paper},
                {"bound_corrected", q.bound_corrected},
                {"pc", q.pc},
                {"sc", q.sc},
                {"po", q.po},
                {"so", q.so},
                {"overlap_suboptimal", opt(q.mean_suboptimal_node_overlap)},
                {"n_adv", r.overhead.n_adv},
                {"n_refresh", r.overhead.n_refresh},
                {"adv_share", r.overhead.adv_share},
                {"slots_elapsed", r.slots_elapsed}};
    if (!r.trace.empty()) row["trace"] = r.trace;
    doc["runs"].push_back(std::move(row));
  }
  doc["summary"] = json::array();
  for (const SummaryRow& s : summary) {
    doc["summary"].push_back({{"topology", s.topology},
                              {"N", s.node_count},
                              {"beta", s.beta},
                              {"runs", s.runs},
                              {"n_m", s.n_m},
                              {"bound_paper", s.bound_paper},
                              {"bound_corrected", s.bound_corrected},
                              {"pc", s.pc},
                              {"sc", s.sc},
                              {"po", s.po},
                              {"so", s.so},
                              {"overlap_suboptimal", opt(s.overlap_suboptimal)},
                              {"n_adv", s.n_adv},
                              {"n_refresh", s.n_refresh},
                              {"adv_share", s.adv_share},
                              {"slots_elapsed", s.slots_elapsed}});
  }
  os << doc.dump(2) << '\n';
}

void write_trace_csv(std::ostream& os, std::span<const RunRow> rows) {
  os << "topology,beta,seed,slot,transmissions\n";
  for (const RunRow& r : rows) {
    for (std::size_t t = 0; t < r.trace.size(); ++t) {
      os << r.topology << ',' << format_real(r.beta) << ',' << r.seed << ',' << t << ',' << r.trace[t] << '\n';
    }
  }
}

std::vector<OracleRow> oracle_rows(const Graph& g) {
  const Oracle oracle(g);
  std::vector<OracleRow> rows;
  for (NodeId i = 0; i < g.node_count(); ++i) {
    for (NodeId j = 0; j < g.node_count(); ++j) {
      if (i == j) continue;
      const Path primary = oracle.canonical_primary(i, j);
      const SecondaryVerdict v = oracle.optimal_secondary(primary);
      rows.push_back({i, j, primary.hops(), v.oracle_similarity, v.oracle_length, v.distinct});
    }
  }
  return rows;
}

void write_oracle_csv(std::ostream& os, std::span<const OracleRow> rows) {
  os << "src,dst,primary_len,oracle_similarity,oracle_secondary_len,distinct_secondary\n";
  double lp = 0.0, sim = 0.0, ls = 0.0;
  for (const OracleRow& r : rows) {
    os << r.src << ',' << r.dst << ',' << r.primary_len << ',' << r.oracle_similarity << ','
       << r.oracle_secondary_len << ',' << (r.distinct_secondary ? 1 : 0) << '\n';
    lp += static_cast<double>(r.primary_len);
    sim += static_cast<double>(r.oracle_similarity);
    ls += static_cast<double>(r.oracle_secondary_len);
  }
  if (rows.empty()) return;
  const auto k = static_cast<double>(rows.size());
  os << "mean,," << format_real(lp / k) << ',' << format_real(sim / k) << ',' << format_real(ls / k) << ",\n";
}

}  // namespace apflood
