// Experiment runner: run | sweep | gen | oracle.
//
// Exit status: 0 success, 2 usage error, 1 runtime error.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "apflood/experiment.hpp"
#include "apflood/protocol.hpp"
#include "apflood/rng.hpp"
#include "apflood/topology.hpp"

namespace fs = std::filesystem;
using namespace apflood;

namespace {

constexpr int kUsageError = 2;
constexpr int kRuntimeError = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GridOptions {
  std::vector<std::string> topologies;
  std::vector<double> betas;
  std::size_t runs = 10;
  std::uint64_t seed = 1;
  double t_adv = 1.0;
  double t_refresh = 0.05;
  double window = 1.0;
  bool trace = false;
  std::string out;
  std::string format = "csv";
  unsigned threads = 0;
};

void add_grid_options(CLI::App* cmd, GridOptions& o) {
  cmd->add_option("--topology", o.topologies, "Edge-list file, or a directory of *.txt files")
      ->required()
      ->delimiter(',');
  cmd->add_option("--beta", o.betas, "Backoff parameter(s) in [0,1)")->delimiter(',');
  cmd->add_option("--runs", o.runs, "Seeds per beta")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.seed, "First seed");
  cmd->add_option("--t-adv", o.t_adv, "Advertisement period [s]")->check(CLI::PositiveNumber);
  cmd->add_option("--t-refresh", o.t_refresh, "Refresh period [s]")->check(CLI::PositiveNumber);
  cmd->add_option("--window", o.window, "Observation window [s]")->check(CLI::PositiveNumber);
  cmd->add_flag("--trace", o.trace, "Also write per-slot transmission traces");
  cmd->add_option("--out", o.out, "Output file (default stdout)");
  cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
}

std::vector<NamedTopology> load_topologies(const std::vector<std::string>& specs) {
  std::vector<fs::path> files;
  for (const std::string& spec : specs) {
    const fs::path p(spec);
    if (fs::is_directory(p)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::directory_iterator(p)) {
        if (entry.is_regular_file() && entry.path().extension() == ".txt") found.push_back(entry.path());
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(p);
    }
  }
  std::vector<NamedTopology> out;
  for (const fs::path& f : files) out.push_back({f.stem().string(), load_topology(f)});
  if (out.empty()) throw std::runtime_error("no topology files found");
  return out;
}

// Writes to --out when given, otherwise stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

int run_grid_command(GridOptions& o, bool sweep) {
  if (o.betas.empty()) {
    if (!sweep) throw UsageError("--beta is required");
    o.betas = default_sweep_betas();
  }
  ExperimentConfig config;
  config.betas = o.betas;
  config.seeds = seed_range(o.seed, o.runs);
  config.window = o.window;
  config.t_adv = o.t_adv;
  config.t_refresh = o.t_refresh;
  config.trace = o.trace;
  try {
    validate(config);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (config.t_adv < config.t_refresh || config.t_adv > config.window) {
    std::cerr << "warning: t_adv outside [t_refresh, window]\n";
  }

  const auto topologies = load_topologies(o.topologies);
  const auto rows = run_grid(topologies, config, o.threads);
  const auto summary = summarize(rows);

  Sink sink(o.out);
  if (o.format == "json") {
    write_json(sink.stream(), rows, summary);
  } else {
    write_csv(sink.stream(), rows, summary);
    if (o.trace) {
      if (o.out.empty()) {
        std::cout << '\n';
        write_trace_csv(std::cout, rows);
      } else {
        Sink trace(o.out + ".trace.csv");
        write_trace_csv(trace.stream(), rows);
      }
    }
  }
  return 0;
}

struct GenOptions {
  std::size_t n = 22;
  double degree = 3.2;
  std::size_t count = 50;
  std::uint64_t seed = 1;
  std::string out_dir = ".";
};

std::string degree_tag(double d) {
  std::ostringstream os;
  os << d;
  return os.str();
}

int gen_command(const GenOptions& o) {
  fs::create_directories(o.out_dir);
  for (std::size_t k = 0; k < o.count; ++k) {
    const std::uint64_t sub = mix_seed(o.seed, k);
    Graph g;
    try {
      g = random_graph(o.n, o.degree, sub);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    const fs::path file = fs::path(o.out_dir) /
                          ("random_n" + std::to_string(o.n) + "_d" + degree_tag(o.degree) + "_s" +
                           std::to_string(sub) + ".txt");
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    out << "# random graph n=" << o.n << " degree=" << degree_tag(o.degree) << " seed=" << sub << '\n';
    write_topology(out, g);
    std::cout << file.string() << '\n';
  }
  return 0;
}

struct OracleOptions {
  std::string topology;
  std::string out;
};

int oracle_command(const OracleOptions& o) {
  const Graph g = load_topology(o.topology);
  Sink sink(o.out);
  write_oracle_csv(sink.stream(), oracle_rows(g));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive probabilistic flooding: multipath discovery simulator"};
  app.require_subcommand(1);

  GridOptions run_opts;
  auto* run = app.add_subcommand("run", "Full discovery rounds for each (beta, seed)");
  add_grid_options(run, run_opts);

  GridOptions sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "Beta sweep (default 0.1..0.9) over one or more topologies");
  add_grid_options(sweep, sweep_opts);

  GenOptions gen_opts;
  auto* gen = app.add_subcommand("gen", "Write connected random topologies");
  gen->add_option("--n", gen_opts.n, "Nodes")->required();
  gen->add_option("--degree", gen_opts.degree, "Target mean degree")->required();
  gen->add_option("--count", gen_opts.count, "Number of graphs");
  gen->add_option("--seed", gen_opts.seed, "Master seed");
  gen->add_option("--out-dir", gen_opts.out_dir, "Destination directory");

  OracleOptions oracle_opts;
  auto* oracle = app.add_subcommand("oracle", "Per-pair optimal primary/secondary lengths");
  oracle->add_option("--topology", oracle_opts.topology, "Edge-list file")->required();
  oracle->add_option("--out", oracle_opts.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageError;
  }

  try {
    if (*run) return run_grid_command(run_opts, false);
    if (*sweep) return run_grid_command(sweep_opts, true);
    if (*gen) return gen_command(gen_opts);
    if (*oracle) return oracle_command(oracle_opts);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
  return kUsageError;
}
