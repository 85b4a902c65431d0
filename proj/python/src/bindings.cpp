#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "batrel/appbat.hpp"
#include "batrel/bat.hpp"
#include "batrel/error.hpp"
#include "batrel/implicit_bat.hpp"
#include "batrel/network.hpp"
#include "batrel/oracle.hpp"
#include "batrel/plsa.hpp"

namespace py = pybind11;
using namespace batrel;

namespace {

// States cross the boundary as bit strings, arc 0 first ("11100").
StateVector state_for(const Network& net, const std::string& text) {
    const StateVector x = StateVector::parse(text);
    if (x.size() != net.arc_count()) {
        throw InputError("state has " + std::to_string(x.size()) + " arcs, network has " +
                         std::to_string(net.arc_count()));
    }
    return x;
}

using Instance = std::pair<Network, std::vector<double>>;

Instance to_python(const NetworkInstance& inst) {
    const auto p = inst.distribution.probabilities();
    return {inst.network, std::vector<double>(p.begin(), p.end())};
}

ArcDistribution distribution(const Network& net, const std::vector<double>& p) {
    ArcDistribution dist(p);
    require_compatible(net, dist);
    return dist;
}

BatOrder order_named(const std::string& name) {
    if (name == "forward") return BatOrder::forward;
    if (name == "backward") return BatOrder::backward;
    throw InputError("order must be 'forward' or 'backward'");
}

Direction direction_named(const std::string& name) {
    if (name == "descending") return Direction::descending;
    if (name == "ascending") return Direction::ascending;
    throw InputError("direction must be 'descending' or 'ascending'");
}

py::dict level_dict(const LevelStats& s) {
    py::dict d;
    d["level"] = s.level;
    d["total"] = s.total_vectors;
    d["connected"] = s.connected_vectors;
    d["mass"] = s.mass;
    d["elapsed_s"] = s.elapsed_seconds;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Binary-addition-tree network reliability";

    // Later registrations are tried first, so the base class goes first.
    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<CapabilityError>(m, "CapabilityError", PyExc_RuntimeError);

    py::class_<Network>(m, "Network")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& arcs, bool directed,
                         int source, int sink) {
                 std::vector<Arc> list;
                 for (auto [t, h] : arcs) list.push_back({t, h});
                 return Network(n, std::move(list),
                                directed ? Orientation::directed : Orientation::undirected,
                                source, sink);
             }),
             py::arg("node_count"), py::arg("arcs"), py::arg("directed") = true,
             py::arg("source") = 1, py::arg("sink") = 0)
        .def_property_readonly("node_count", &Network::node_count)
        .def_property_readonly("arc_count", &Network::arc_count)
        .def_property_readonly("directed", &Network::directed)
        .def_property_readonly("source", &Network::source)
        .def_property_readonly("sink", &Network::sink)
        .def_property_readonly("arcs",
                               [](const Network& net) {
                                   std::vector<std::pair<int, int>> out;
                                   for (const Arc& a : net.arcs()) out.emplace_back(a.tail, a.head);
                                   return out;
                               })
        .def("__eq__", [](const Network& a, const Network& b) { return a == b; })
        .def("__repr__", [](const Network& net) {
            return "Network(nodes=" + std::to_string(net.node_count()) +
                   ", arcs=" + std::to_string(net.arc_count()) + ", " +
                   std::string(to_string(net.orientation())) + ")";
        });

    m.def("parse_network", [](const std::string& text) { return to_python(parse_network(text)); },
          py::arg("text"), "Parse network text; returns (network, probabilities).");
    m.def("load_network", [](const std::string& path) { return to_python(load_network(path)); },
          py::arg("path"));
    m.def("render_network",
          [](const Network& net, const std::vector<double>& p) {
              return render_network({net, distribution(net, p)});
          },
          py::arg("network"), py::arg("probabilities"));
    m.def("bridge_fixture", [](double p) { return to_python(bridge_fixture(p)); },
          py::arg("p") = 0.9);
    m.def("generate_random_network",
          [](int n, int arcs, bool directed, std::uint64_t seed) {
              return generate_random_network(
                  n, arcs, directed ? Orientation::directed : Orientation::undirected, seed);
          },
          py::arg("node_count"), py::arg("arc_count"), py::arg("directed") = true,
          py::arg("seed") = 0);

    m.def("is_connected",
          [](const Network& net, const std::string& state) {
              return is_connected(net, state_for(net, state));
          },
          py::arg("network"), py::arg("state"));
    m.def("layer_trace",
          [](const Network& net, const std::string& state) {
              const LayerTrace t = layer_trace(net, state_for(net, state));
              return std::make_pair(t.layers, t.connected);
          },
          py::arg("network"), py::arg("state"),
          "Returns (layers, connected) of the layered search.");

    m.def("enumerate_states",
          [](int arcs, const std::string& order) {
              std::vector<std::string> out;
              for (const StateVector& x : enumerate_all(arcs, order_named(order))) {
                  out.push_back(x.to_string());
              }
              return out;
          },
          py::arg("arc_count"), py::arg("order") = "forward");
    m.def("level_states",
          [](int arcs, int z) {
              std::vector<std::string> out;
              LevelCursor cursor(arcs, z);
              do out.push_back(cursor.state().to_string());
              while (cursor.advance());
              return out;
          },
          py::arg("arc_count"), py::arg("ones"), "States with `ones` working arcs, in level order.");
    m.def("count_level", &count_level, py::arg("arc_count"), py::arg("ones"));
    m.def("rank_indicator",
          [](int arcs, std::vector<int> entries) {
              return rank_indicator(IndicatorVector(arcs, std::move(entries)));
          },
          py::arg("arc_count"), py::arg("indicator"));
    m.def("unrank_indicator",
          [](int arcs, int z, std::uint64_t rank) {
              const IndicatorVector ind = unrank_indicator(arcs, z, rank);
              return std::vector<int>(ind.entries().begin(), ind.entries().end());
          },
          py::arg("arc_count"), py::arg("ones"), py::arg("rank"));
    m.def("complement_indicator",
          [](int arcs, std::vector<int> entries) {
              const IndicatorVector ind = complement(IndicatorVector(arcs, std::move(entries)));
              return std::vector<int>(ind.entries().begin(), ind.entries().end());
          },
          py::arg("arc_count"), py::arg("indicator"));

    m.def("level_mass",
          [](const Network& net, const std::vector<double>& p, int level, int workers) {
              const auto dist = distribution(net, p);
              LevelStats s;
              {
                  py::gil_scoped_release release;
                  s = level_mass(net, dist, level, workers);
              }
              return level_dict(s);
          },
          py::arg("network"), py::arg("probabilities"), py::arg("level"), py::arg("workers") = 1);
    m.def("approximate_reliability",
          [](const Network& net, const std::vector<double>& p, int min_ones,
             std::optional<double> delta, std::optional<double> time_limit,
             const std::string& direction, int workers) {
              const auto dist = distribution(net, p);
              AppBatOptions options;
              options.delta_threshold = delta;
              if (time_limit) options.time_budget = std::chrono::duration<double>(*time_limit);
              options.direction = direction_named(direction);
              options.workers = workers;
              ReliabilityReport report;
              {
                  py::gil_scoped_release release;
                  report = approximate_reliability(net, dist, min_ones, options);
              }
              py::list levels;
              for (const auto& s : report.levels) levels.append(level_dict(s));
              py::dict d;
              d["reliability"] = report.reliability;
              d["levels"] = levels;
              d["termination"] = std::string(to_string(report.termination));
              d["direction"] = std::string(to_string(report.direction));
              d["min_ones"] = report.min_ones;
              return d;
          },
          py::arg("network"), py::arg("probabilities"), py::arg("min_ones"),
          py::arg("delta") = py::none(), py::arg("time_limit") = py::none(),
          py::arg("direction") = "descending", py::arg("workers") = 1);
    m.def("exact_reliability",
          [](const Network& net, const std::vector<double>& p, int cap) {
              const auto dist = distribution(net, p);
              py::gil_scoped_release release;
              return exact_reliability(net, dist, cap);
          },
          py::arg("network"), py::arg("probabilities"), py::arg("cap") = kDefaultExactArcCap);
    m.def("mcs_estimate",
          [](const Network& net, const std::vector<double>& p, std::uint64_t samples,
             std::uint64_t seed, int workers) {
              const auto dist = distribution(net, p);
              McsEstimate e;
              {
                  py::gil_scoped_release release;
                  e = mcs_estimate(net, dist, samples, seed, workers);
              }
              py::dict d;
              d["estimate"] = e.estimate;
              d["standard_error"] = e.standard_error;
              d["samples"] = e.samples;
              d["seed"] = e.seed;
              return d;
          },
          py::arg("network"), py::arg("probabilities"), py::arg("samples"), py::arg("seed") = 0,
          py::arg("workers") = 1);
}
