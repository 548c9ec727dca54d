#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "apflood/engine.hpp"
#include "apflood/experiment.hpp"
#include "apflood/metrics.hpp"
#include "apflood/oracle.hpp"
#include "apflood/protocol.hpp"
#include "apflood/topology.hpp"

namespace py = pybind11;
using namespace apflood;

namespace {

using NodeList = std::vector<NodeId>;

Path to_path(const NodeList& nodes) { return Path(nodes); }

NodeList nodes_of(const Path& p) { return NodeList(p.nodes().begin(), p.nodes().end()); }

py::object maybe_path(const std::optional<Path>& p) {
  if (!p) return py::none();
  return py::cast(nodes_of(*p));
}

Graph make_graph(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

py::dict quality_dict(const QualityReport& q) {
  py::dict d;
  d["pc"] = q.pc;
  d["sc"] = q.sc;
  d["po"] = q.po;
  d["so"] = q.so;
  d["overlap_suboptimal"] = q.mean_suboptimal_node_overlap ? py::cast(*q.mean_suboptimal_node_overlap) : py::none();
  d["n_m"] = q.n_m;
  d["bound_paper"] = q.bound_paper;
  d["bound_corrected"] = q.bound_corrected;
  d["pairs"] = q.pairs;
  d["pairs_without_distinct_secondary"] = q.pairs_without_distinct_secondary;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "C++ core of the apflood package";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("node_count"), py::arg("edges") = std::vector<std::pair<NodeId, NodeId>>{})
      .def("add_edge", &Graph::add_edge)
      .def("has_edge", &Graph::has_edge)
      .def_property_readonly("node_count", &Graph::node_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("neighbors", [](const Graph& g, NodeId u) { return NodeList(g.neighbors(u).begin(), g.neighbors(u).end()); })
      .def("links",
           [](const Graph& g) {
             std::vector<std::pair<NodeId, NodeId>> out;
             for (const Link& l : g.links()) out.emplace_back(l.a, l.b);
             return out;
           })
      .def("is_connected", &Graph::is_connected)
      .def("mean_degree", &Graph::mean_degree)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(node_count=" + std::to_string(g.node_count()) + ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  // topology
  m.def("parse_topology", [](const std::string& text) { return parse_topology(text); }, py::arg("text"));
  m.def("load_topology", [](const std::string& file) { return load_topology(file); }, py::arg("path"));
  m.def("write_topology", [](const Graph& g) {
    std::ostringstream os;
    write_topology(os, g);
    return os.str();
  });
  m.def("random_graph", &random_graph, py::arg("n"), py::arg("mean_degree"), py::arg("seed"));
  m.def("bfs_distances", &bfs_distances, py::arg("graph"), py::arg("source"));
  m.def("diameter", &diameter);
  m.def("topology_stats", [](const Graph& g) {
    const auto s = topology_stats(g);
    py::dict d;
    d["N"] = s.node_count;
    d["mean_degree"] = s.mean_degree;
    d["degree_stddev"] = s.degree_stddev;
    d["diameter"] = s.diameter;
    d["modified_diameter_max"] = s.modified_diameter_max;
    d["mean_primary_len"] = s.mean_optimal_primary_len;
    d["mean_secondary_len"] = s.mean_optimal_secondary_len;
    return d;
  });

  // oracle
  m.def("similarity", [](const NodeList& a, const NodeList& b) { return similarity(to_path(a), to_path(b)); });
  m.def(
      "modified_graph",
      [](const Graph& g, const NodeList& primary) {
        const CostedGraph cg = modified_graph(g, to_path(primary));
        py::dict costs;
        for (const Link& l : g.links()) costs[py::make_tuple(l.a, l.b)] = cg.cost(l.a, l.b);
        return costs;
      },
      "Link costs of the modified graph, keyed by (u, v) with u < v.");
  m.def("optimal_secondary", [](const Graph& g, const NodeList& primary) {
    const auto v = optimal_secondary(g, to_path(primary));
    py::dict d;
    d["path"] = nodes_of(v.oracle_path);
    d["similarity"] = v.oracle_similarity;
    d["length"] = v.oracle_length;
    d["distinct"] = v.distinct;
    return d;
  });
  m.def("brute_force_secondary", [](const Graph& g, const NodeList& primary) {
    const auto b = brute_force_secondary(g, to_path(primary));
    return py::make_tuple(b.min_cost, nodes_of(b.path));
  });
  m.def("is_primary_optimal", [](const Graph& g, const NodeList& p) { return is_primary_optimal(g, to_path(p)); });
  m.def("is_secondary_optimal", [](const Graph& g, const NodeList& p, const NodeList& s) {
    return is_secondary_optimal(g, to_path(p), to_path(s));
  });

  // protocol / metrics
  m.def("flood_probability", &flood_probability, py::arg("beta"), py::arg("n"));
  m.def("message_bound", &message_bound, py::arg("n"), py::arg("mean_degree"), py::arg("beta"));
  m.def("message_bound_corrected", &message_bound_corrected, py::arg("n"), py::arg("mean_degree"), py::arg("beta"));

  // engine
  m.def(
      "run_full_round",
      [](const Graph& g, double beta, std::uint64_t seed) {
        const RunReport r = [&] {
          py::gil_scoped_release release;
          return run_full_round(g, beta, seed);
        }();
        py::dict routes;
        for (NodeId i = 0; i < g.node_count(); ++i)
          for (NodeId j = 0; j < g.node_count(); ++j)
            if (i != j) {
              const auto& e = r.route_tables[i].route(j);
              routes[py::make_tuple(i, j)] = py::make_tuple(maybe_path(e.primary), maybe_path(e.secondary));
            }
        py::dict d;
        d["transmissions"] = r.transmissions_total;
        d["per_slot"] = r.transmissions_per_slot;
        d["per_node"] = r.transmissions_per_node;
        d["slots_elapsed"] = r.slots_elapsed;
        d["routes"] = routes;
        d["quality"] = quality_dict(evaluate_round(g, r, beta));
        return d;
      },
      py::arg("graph"), py::arg("beta"), py::arg("seed"),
      "One full round; routes maps (i, j) to (primary, secondary) of node i toward j.");

  m.def(
      "run_one",
      [](const Graph& g, double beta, std::uint64_t seed, double window, double t_adv, double t_refresh) {
        ExperimentConfig c;
        c.betas = {beta};
        c.seeds = {seed};
        c.window = window;
        c.t_adv = t_adv;
        c.t_refresh = t_refresh;
        validate(c);
        const RunRow row = run_one(NamedTopology{"graph", g}, beta, seed, c);
        py::dict d = quality_dict(row.quality);
        d["n_adv"] = row.overhead.n_adv;
        d["n_refresh"] = row.overhead.n_refresh;
        d["adv_share"] = row.overhead.adv_share;
        d["slots_elapsed"] = row.slots_elapsed;
        return d;
      },
      py::arg("graph"), py::arg("beta"), py::arg("seed"), py::arg("window") = 1.0, py::arg("t_adv") = 1.0,
      py::arg("t_refresh") = 0.05);

  m.def(
      "sweep_csv",
      [](const std::vector<std::pair<std::string, Graph>>& topologies, const std::vector<double>& betas,
         std::size_t runs, std::uint64_t seed, unsigned threads) {
        std::vector<NamedTopology> ts;
        for (const auto& [name, g] : topologies) ts.push_back({name, g});
        ExperimentConfig c;
        c.betas = betas;
        c.seeds = seed_range(seed, runs);
        validate(c);
        std::ostringstream os;
        {
          py::gil_scoped_release release;
          const auto rows = run_grid(ts, c, threads);
          write_csv(os, rows, summarize(rows));
        }
        return os.str();
      },
      py::arg("topologies"), py::arg("betas"), py::arg("runs") = 10, py::arg("seed") = 1, py::arg("threads") = 0,
      "Same CSV as the `sweep`/`run` command line for [(name, graph), ...].");
}
