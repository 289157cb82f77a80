#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "mutvis/directed_decomposition.hpp"
#include "mutvis/errors.hpp"
#include "mutvis/generators.hpp"
#include "mutvis/graph.hpp"
#include "mutvis/io.hpp"
#include "mutvis/mu_algorithm.hpp"
#include "mutvis/split_decomposition.hpp"
#include "mutvis/visibility_oracle.hpp"

namespace py = pybind11;
using namespace mutvis;

namespace {

std::vector<Vertex> to_list(const VertexSet& s) { return {s.begin(), s.end()}; }

std::string decomposition_dot(const Graph& g, bool tree) {
  DirectedDecomposition dd = orient(canonical_decomposition(g));
  std::ostringstream out;
  if (tree) {
    write_tree_dot(dd, out);
  } else {
    write_decomposition_dot(dd, out);
  }
  return out.str();
}

py::dict decomposition_summary(const Graph& g) {
  DirectedDecomposition dd = orient(canonical_decomposition(g));
  const MarkedGraph& d = dd.base();
  py::list bags;
  for (const Bag& b : d.bags()) {
    py::dict bag;
    bag["type"] = to_string(b.type);
    bag["members"] = b.members;
    bag["center"] = b.type == BagType::Star ? py::cast(b.center) : py::none();
    bags.append(bag);
  }
  py::list marked;
  for (const MarkedEdge& e : d.marked_edges()) marked.append(py::make_tuple(e.u, e.v));
  py::list arrows;
  for (const Arrow& a : dd.arrows()) arrows.append(py::make_tuple(a.tail, a.head));
  TArrowReport report = t_arrows(dd);

  py::dict out;
  out["graph_order"] = d.graph_order();
  out["vertex_count"] = d.vertex_count();
  out["bags"] = bags;
  out["marked_edges"] = marked;
  out["arrows"] = arrows;
  out["sigma"] = to_list(dd.sigma());
  out["t_arrows"] = report.t_arrows;
  out["shape"] = to_string(report.shape);
  return out;
}

}  // namespace

PYBIND11_MODULE(_mutvis, m) {
  m.doc() = "Mutual-visibility sets of distance-hereditary graphs";

  static py::exception<NotDistanceHereditaryError> not_dh(m, "NotDistanceHereditaryError",
                                                          PyExc_ValueError);
  static py::exception<DisconnectedGraphError> disconnected(m, "DisconnectedGraphError",
                                                            PyExc_ValueError);
  static py::exception<CapExceededError> cap(m, "CapExceededError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const NotDistanceHereditaryError& e) {
      py::set_error(not_dh, e.what());
    } catch (const DisconnectedGraphError& e) {
      py::set_error(disconnected, e.what());
    } catch (const CapExceededError& e) {
      py::set_error(cap, e.what());
    } catch (const InputError& e) {
      py::set_error(PyExc_ValueError, e.what());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph(n, edges); }),
           py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("n", &Graph::order)
      .def_property_readonly("m", &Graph::size)
      .def("edges", &Graph::edges)
      .def("neighbors", [](const Graph& g, Vertex v) {
        if (!g.contains(v)) throw py::index_error("no such vertex");
        auto span = g.neighbors(v);
        return std::vector<Vertex>(span.begin(), span.end());
      })
      .def("adjacent", &Graph::adjacent)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
      });

  py::class_<MuResult>(m, "MuResult")
      .def_readonly("mu", &MuResult::mu)
      .def_property_readonly("set", [](const MuResult& r) { return to_list(r.set); })
      .def_property_readonly("removed_sigma", [](const MuResult& r) { return to_list(r.removed_sigma); })
      .def_property_readonly("removed_extra",
                             [](const MuResult& r) {
                               std::vector<std::pair<Vertex, std::string>> out;
                               for (const Removal& e : r.removed_extra) {
                                 out.emplace_back(e.vertex, to_string(e.reason));
                               }
                               return out;
                             })
      .def_property_readonly("shape", [](const MuResult& r) { return std::string(to_string(r.shape)); })
      .def("__repr__", [](const MuResult& r) {
        return "<MuResult mu=" + std::to_string(r.mu) + " shape=" + to_string(r.shape) + ">";
      });

  m.def("mu_set", py::overload_cast<const Graph&>(&mu_set), py::arg("g"),
        "Maximum mutual-visibility set of a connected distance-hereditary graph.");
  m.def("mu_number", &mu_number, py::arg("g"));
  m.def(
      "is_distance_hereditary",
      [](const Graph& g) {
        for (const auto& comp : connected_components(g)) {
          if (!recognize_dh(induced_subgraph(g, comp)).accepted()) return false;
        }
        return true;
      },
      py::arg("g"));
  m.def("is_dh_metric", &is_dh_metric, py::arg("g"), py::arg("n_cap") = kDefaultMetricCap);
  m.def(
      "mu_bruteforce",
      [](const Graph& g, int cap, int jobs) {
        BruteForceResult r = mu_bruteforce(g, cap, jobs);
        return std::make_pair(r.mu, to_list(r.witness));
      },
      py::arg("g"), py::arg("n_cap") = kDefaultMuCap, py::arg("jobs") = 1,
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "is_mutual_visibility_set",
      [](const Graph& g, const std::vector<Vertex>& x) {
        return is_mutual_visibility_set(g, VertexSet(x));
      },
      py::arg("g"), py::arg("x"));
  m.def(
      "pair_visible",
      [](const Graph& g, const std::vector<Vertex>& x, Vertex u, Vertex v) {
        return pair_visible(g, VertexSet(x), u, v);
      },
      py::arg("g"), py::arg("x"), py::arg("u"), py::arg("v"));
  m.def("cut_vertices", [](const Graph& g) { return to_list(cut_vertices(g)); }, py::arg("g"));
  m.def("bfs_distances", &bfs_distances, py::arg("g"), py::arg("source"));

  m.def(
      "random_dh",
      [](int n, std::uint64_t seed, std::tuple<double, double, double> w) {
        auto [p, t, f] = w;
        return random_dh({seed, n, {p, t, f}});
      },
      py::arg("n"), py::arg("seed") = 1, py::arg("weights") = std::make_tuple(0.30, 0.35, 0.35));
  m.attr("SPARSE_WEIGHTS") = py::make_tuple(kSparseWeights.pendant, kSparseWeights.true_twin,
                                             kSparseWeights.false_twin);
  m.def(
      "family",
      [](const std::string& name, const std::vector<int>& params) {
        return family(parse_family(name), params);
      },
      py::arg("name"), py::arg("params") = std::vector<int>{});
  m.def(
      "parse_edge_list",
      [](const std::string& text) {
        std::istringstream in(text);
        return parse_edge_list(in);
      },
      py::arg("text"));
  m.def(
      "to_edge_list",
      [](const Graph& g) {
        std::ostringstream out;
        write_edge_list(g, out);
        return out.str();
      },
      py::arg("g"));

  m.def("decompose", &decomposition_summary, py::arg("g"),
        "Bags, marked edges, arrows, sigma-vertices and t-arrows as plain Python data.");
  m.def("decomposition_dot", &decomposition_dot, py::arg("g"), py::arg("tree") = false);
}
