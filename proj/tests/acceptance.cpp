// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "apflood/engine.hpp"
#include "apflood/experiment.hpp"
#include "apflood/metrics.hpp"
#include "apflood/oracle.hpp"
#include "apflood/rng.hpp"
#include "apflood/topology.hpp"

using namespace apflood;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::printf("%s criterion %d (%s): %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::vector<NamedTopology> shipped_topologies() {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(fs::path(APFLOOD_DATA_DIR) / "topologies"))
    if (e.path().extension() == ".txt") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<NamedTopology> out;
  for (const auto& f : files) out.push_back({f.stem().string(), load_topology(f)});
  return out;
}

const NamedTopology& find(const std::vector<NamedTopology>& ts, const std::string& name) {
  for (const auto& t : ts)
    if (t.name == name) return t;
  throw std::runtime_error("missing topology " + name);
}

// Same graphs as `apflood gen --n 22 --degree 3.2 --count 10 --seed 1`.
std::vector<NamedTopology> random_22(std::size_t count) {
  std::vector<NamedTopology> out;
  for (std::size_t k = 0; k < count; ++k) {
    const auto sub = mix_seed(1, k);
    out.push_back({"random_" + std::to_string(k), random_graph(22, 3.2, sub)});
  }
  return out;
}

const std::vector<std::string> kReal{"abilene", "geant", "tiger2"};
const std::vector<std::string> k22{"geant", "tiger2"};

const SummaryRow& cell(const std::vector<SummaryRow>& s, const std::string& topo, double beta) {
  for (const auto& r : s)
    if (r.topology == topo && std::abs(r.beta - beta) < 1e-12) return r;
  throw std::runtime_error("missing cell " + topo);
}

// Dijkstra-on-G' cost against exhaustive enumeration for every ordered pair
// of g with its canonical shortest primary. Returns mismatches.
std::size_t oracle_mismatches(const Graph& g, std::size_t& checked) {
  const Oracle o(g);
  std::size_t bad = 0;
  for (NodeId s = 0; s < g.node_count(); ++s) {
    for (NodeId t = 0; t < g.node_count(); ++t) {
      if (s == t) continue;
      const Path p = o.canonical_primary(s, t);
      const auto v = o.optimal_secondary(p);
      const auto bf = brute_force_secondary(g, p);
      ++checked;
      if (v.oracle_length + o.diameter() * v.oracle_similarity != bf.min_cost) ++bad;
    }
  }
  return bad;
}

void criterion_5() {
  std::size_t graphs = 0, checked = 0, bad = 0;
  // Every connected labelled graph on 3..6 nodes.
  for (std::size_t n = 3; n <= 6; ++n) {
    std::vector<Link> all;
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = u + 1; v < n; ++v) all.push_back({u, v});
    for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
      Graph g(n);
      for (std::size_t i = 0; i < all.size(); ++i)
        if (mask >> i & 1u) g.add_edge(all[i].a, all[i].b);
      if (!g.is_connected()) continue;
      ++graphs;
      bad += oracle_mismatches(g, checked);
    }
  }
  const std::size_t exhaustive = graphs;
  // 200 random connected graphs with 7..10 nodes.
  for (std::uint64_t k = 0; k < 200; ++k) {
    const std::size_t n = 7 + k % 4;
    Rng rng(mix_seed(99, k));
    const double deg = 2.0 + rng.uniform() * (static_cast<double>(n) - 3.0);
    const Graph g = random_graph(n, deg, mix_seed(100, k));
    ++graphs;
    bad += oracle_mismatches(g, checked);
  }
  report(5, "oracle equivalence", bad == 0,
         std::to_string(exhaustive) + " exhaustive graphs (N<=6) + 200 random (N 7..10), " + std::to_string(checked) +
             " pairs, " + std::to_string(bad) + " mismatches");
}

}  // namespace

int main() {
  try {
    const auto shipped = shipped_topologies();
    const auto randoms = random_22(10);
    const auto betas = default_sweep_betas();

    ExperimentConfig cfg;
    cfg.betas = betas;
    cfg.seeds = seed_range(1, 10);
    cfg.trace = true;
    const auto rows = run_grid(shipped, cfg);
    const auto summary = summarize(rows);

    ExperimentConfig rcfg = cfg;
    rcfg.betas = {0.1, 0.3, 0.5, 0.7, 0.8, 0.9};
    rcfg.trace = false;
    const auto rrows = run_grid(randoms, rcfg);
    const auto rsummary = summarize(rrows);

    // 1. primary guarantees
    {
      std::size_t bad = 0;
      for (const auto& r : rows)
        if (r.quality.pc != 1.0 || r.quality.po != 1.0) ++bad;
      report(1, "primary pc = po = 1", bad == 0,
             std::to_string(rows.size()) + " runs over " + std::to_string(shipped.size()) + " topologies, " +
                 std::to_string(bad) + " violations");
    }

    // 2. secondary connectivity
    {
      bool ok = true;
      double worst = 1.0;
      std::string where;
      auto check = [&](const std::vector<SummaryRow>& s, const std::string& topo) {
        for (double b : {0.7, 0.8, 0.9}) {
          const double sc = cell(s, topo, b).sc;
          if (sc < worst) {
            worst = sc;
            where = topo + " beta=" + fmt(b);
          }
          ok = ok && sc >= 0.99;
        }
      };
      check(summary, "abilene");
      for (const auto& t : randoms) check(rsummary, t.name);
      // Pairs joined by a single simple path can never hold a secondary; list
      // graphs whose structure alone keeps sc below the threshold.
      std::string capped;
      for (const auto& t : randoms) {
        const auto orows = oracle_rows(t.graph);
        const auto lone = std::count_if(orows.begin(), orows.end(), [](const OracleRow& r) { return !r.distinct_secondary; });
        const double ceiling = 1.0 - static_cast<double>(lone) / static_cast<double>(orows.size());
        if (ceiling < 0.99) capped += " " + t.name + " (max " + fmt(ceiling) + ")";
      }
      report(2, "secondary connectivity sc >= 0.99", ok,
             "min sc " + fmt(worst) + " at " + where + "; structurally capped:" + (capped.empty() ? " none" : capped));
    }

    // 3. secondary optimality
    {
      bool ok = true;
      std::string detail;
      for (const auto& t : kReal) {
        const double hi = cell(summary, t, 0.8).so;
        const double lo = cell(summary, t, 0.1).so;
        ok = ok && hi >= 0.85 && lo >= 0.55;
        detail += t + " so(0.8)=" + fmt(hi) + " so(0.1)=" + fmt(lo) + "; ";
      }
      report(3, "secondary optimality", ok, detail);
    }

    // 4. bound compliance
    {
      std::size_t over_corrected = 0;
      double worst_ratio = 0.0;
      for (const auto* rs : {&rows, &rrows}) {
        for (const auto& r : *rs) {
          if (r.quality.n_m > r.quality.bound_corrected) ++over_corrected;
          worst_ratio = std::max(worst_ratio, r.quality.n_m / r.quality.bound_corrected);
        }
      }
      // The uncorrected bound is checked on the shipped topologies with N >= 11.
      std::size_t over_uncorrected = 0, uncorrected_checked = 0;
      for (const auto& r : rows) {
        if (r.node_count >= 11 && r.beta >= 0.3 - 1e-12) {
          ++uncorrected_checked;
          if (r.quality.n_m > r.quality.bound_paper) ++over_uncorrected;
        }
      }
      report(4, "message bounds", over_corrected == 0 && over_uncorrected == 0,
             std::to_string(rows.size() + rrows.size()) + " runs, " + std::to_string(over_corrected) +
                 " over corrected bound (max n_m/bound " + fmt(worst_ratio) + "); " +
                 std::to_string(over_uncorrected) + "/" + std::to_string(uncorrected_checked) +
                 " shipped runs over uncorrected bound");
    }

    criterion_5();

    // 6. overlap statistic
    {
      bool ok = true;
      std::string detail;
      for (const auto& t : kReal) {
        const auto& c = cell(summary, t, 0.1);
        const bool in = c.overlap_suboptimal && *c.overlap_suboptimal >= 0.5 && *c.overlap_suboptimal <= 2.0;
        ok = ok && in;
        detail += t + "=" + (c.overlap_suboptimal ? fmt(*c.overlap_suboptimal) : std::string("undefined")) + "; ";
      }
      report(6, "suboptimal node overlap in [0.5, 2.0]", ok, detail);
    }

    // 7. auto-termination and trace shape
    {
      bool ok = true;
      std::string detail;
      for (const auto& r : rows)
        if (r.trace.empty() || r.trace.back() != 0) ok = false;
      for (const auto& t : k22) {
        std::vector<std::uint64_t> sum;  // seed sum; same shape as the mean
        for (const auto& r : rows) {
          if (r.topology != t || std::abs(r.beta - 0.9) > 1e-12) continue;
          if (sum.size() < r.trace.size()) sum.resize(r.trace.size(), 0);
          for (std::size_t i = 0; i < r.trace.size(); ++i) sum[i] += r.trace[i];
        }
        const auto peak = static_cast<std::size_t>(std::max_element(sum.begin(), sum.end()) - sum.begin());
        bool shape = peak > 0;
        for (std::size_t i = peak + 2; i + 1 < sum.size(); ++i)
          if (sum[i + 1] > sum[i]) shape = false;
        ok = ok && shape;
        detail += t + " peak slot " + std::to_string(peak) + " of " + std::to_string(sum.size()) +
                  (shape ? " ok" : " not monotone") + "; ";
      }
      report(7, "auto-termination and trace shape", ok, detail);
    }

    // 8. overhead model
    {
      bool ok = true;
      std::string detail;
      for (const auto& t : k22) {
        const auto& c = cell(summary, t, 0.9);
        ok = ok && c.adv_share < 0.5;
        detail += t + " adv_share=" + fmt(c.adv_share) + "; ";
      }
      report(8, "overhead adv_share < 0.5", ok, detail);
    }

    // 9. determinism and micro-cases
    {
      auto render = [&](unsigned threads) {
        const std::vector<NamedTopology> ts{find(shipped, "abilene"), find(shipped, "tiger2")};
        ExperimentConfig c;
        c.betas = {0.1, 0.5, 0.9};
        c.seeds = seed_range(7, 3);
        const auto rs = run_grid(ts, c, threads);
        std::ostringstream os;
        write_csv(os, rs, summarize(rs));
        return os.str();
      };
      const std::string a = render(0);
      const bool same = a == render(0) && a == render(1);

      const Graph tri = find(shipped, "triangle").graph;
      const auto round = run_full_round(tri, 0.0, 1);
      const auto q = evaluate_round(tri, round, 0.0);

      const Graph p3 = find(shipped, "path3").graph;
      auto states = initial_states(p3);
      Rng rng(1);
      const auto single = run_advertisement(p3, 0, 0.5, states, rng);

      const bool micro = round.transmissions_total == 12 && q.n_m == 4.0 && single.transmissions_total == 2;
      report(9, "determinism and micro-cases", same && micro,
             std::string("csv ") + (same ? "identical" : "differs") + ", triangle total " +
                 std::to_string(round.transmissions_total) + " n_m " + fmt(q.n_m) + ", path single-source " +
                 std::to_string(single.transmissions_total));
    }
  } catch (const std::exception& e) {
    std::printf("FAIL acceptance aborted: %s\n", e.what());
    return 1;
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
