#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trispectra/error.hpp"
#include "trispectra/io.hpp"
#include "trispectra/iterated.hpp"
#include "trispectra/mutation.hpp"
#include "trispectra/rational.hpp"
#include "trispectra/spectral.hpp"
#include "trispectra/transfer.hpp"
#include "trispectra/triangulation.hpp"
#include "trispectra/verify.hpp"
#include "trispectra/walk_metrics.hpp"

namespace py = pybind11;
using namespace trispectra;

namespace {

Route parse_route(const std::string& name) {
  if (name == "spectral") return Route::Spectral;
  if (name == "oracle") return Route::Oracle;
  throw Error(ErrorKind::InvalidArgument, "route must be 'spectral' or 'oracle', got '" + name + "'");
}

std::vector<std::pair<int, int>> edge_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

py::dict quantities_dict(const Quantities<double>& x) {
  py::dict d;
  d["kemeny"] = x.kemeny;
  d["multiplicative"] = x.multiplicative;
  d["additive"] = x.additive;
  d["kirchhoff"] = x.kirchhoff;
  return d;
}

py::dict quantities_dict(const Quantities<Rational>& x) {
  const py::object fraction = py::module_::import("fractions").attr("Fraction");
  py::dict d;
  d["kemeny"] = fraction(x.kemeny.str());
  d["multiplicative"] = fraction(x.multiplicative.str());
  d["additive"] = fraction(x.additive.str());
  d["kirchhoff"] = fraction(x.kirchhoff.str());
  return d;
}

template <class Scalar>
Quantities<Scalar> quantities_from(const py::dict& d, auto convert) {
  return {convert(d["kemeny"]), convert(d["multiplicative"]), convert(d["additive"]), convert(d["kirchhoff"])};
}

Rational to_rational(const py::handle& h) {
  const py::object f = py::module_::import("fractions").attr("Fraction")(h);
  return Rational(py::str(f.attr("numerator")).cast<std::string>()) /
         Rational(py::str(f.attr("denominator")).cast<std::string>());
}

}  // namespace

PYBIND11_MODULE(_trispectra, m) {
  m.doc() = "q-triangulation spectra, random-walk metrics and closed-form transfers";

  py::register_exception<Error>(m, "TrispectraError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) { return Graph(n, edges); }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("node_count", &Graph::node_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("edges", &edge_pairs)
      .def("degree", &Graph::degree)
      .def("degrees", &Graph::degree_vector)
      .def("edge_index", &Graph::edge_index)
      .def("is_bipartite", [](const Graph& g) { return is_bipartite(g).bipartite; })
      .def("adjacency", [](const Graph& g) { return Eigen::MatrixXd(adjacency_matrix(g).cast<double>()); })
      .def("incidence", [](const Graph& g) { return Eigen::MatrixXd(incidence_matrix(g).cast<double>()); })
      .def("normalized_adjacency", &normalized_adjacency)
      .def("__repr__", [](const Graph& g) { return "Graph(" + describe_graph(g) + ")"; });

  m.def("builtin_graph", [](const std::string& name) { return builtin_graph(name); });
  m.def("load_graph", &load_graph, py::arg("name_or_path"));

  py::class_<TriangulationResult>(m, "TriangulationResult")
      .def_readonly("graph", &TriangulationResult::graph)
      .def_readonly("base", &TriangulationResult::base)
      .def_readonly("q", &TriangulationResult::q)
      .def("is_new", &TriangulationResult::is_new)
      .def("origin", [](const TriangulationResult& t, int node) {
        const auto o = t.origin(node);
        return std::pair<int, int>(o.edge, o.copy);
      })
      .def("new_node", &TriangulationResult::new_node);
  m.def("q_triangulate", &q_triangulate, py::arg("g"), py::arg("q"));
  m.def("iterate_triangulation", &iterate_triangulation, py::arg("g"), py::arg("q"), py::arg("k"));
  m.def("predicted_counts", [](std::uint64_t n, std::uint64_t e, int q, int k) {
    const auto c = predicted_counts(n, e, q, k);
    return std::pair<std::uint64_t, std::uint64_t>(c.nodes, c.edges);
  });

  py::class_<Spectrum>(m, "Spectrum")
      .def_readonly("eigenvalues", &Spectrum::eigenvalues)
      .def_readonly("eigenvectors", &Spectrum::eigenvectors);
  py::class_<LiftedSpectrum>(m, "LiftedSpectrum")
      .def_property_readonly("eigenvalues", [](const LiftedSpectrum& s) { return s.spectrum.eigenvalues; })
      .def_property_readonly("eigenvectors", [](const LiftedSpectrum& s) { return s.spectrum.eigenvectors; })
      .def_property_readonly("branches",
                             [](const LiftedSpectrum& s) {
                               std::vector<std::string> out;
                               for (const Branch b : s.branches) out.emplace_back(to_string(b));
                               return out;
                             })
      .def_readonly("source", &LiftedSpectrum::source)
      .def_readonly("kernel_basis", &LiftedSpectrum::kernel_basis)
      .def_readonly("bipartite", &LiftedSpectrum::bipartite);
  m.def("eigendecompose", &eigendecompose);
  m.def("lift_spectrum", &lift_spectrum, py::arg("spectrum"), py::arg("g"), py::arg("q"));
  m.def("kernel_basis", &kernel_basis, py::arg("g"), py::arg("q"));

  py::class_<MetricsReport>(m, "MetricsReport")
      .def_readonly("hitting", &MetricsReport::hitting)
      .def_readonly("resistance", &MetricsReport::resistance)
      .def_readonly("kemeny", &MetricsReport::kemeny)
      .def_property_readonly("kirchhoff", [](const MetricsReport& r) { return r.indices.kirchhoff; })
      .def_property_readonly("additive", [](const MetricsReport& r) { return r.indices.additive; })
      .def_property_readonly("multiplicative", [](const MetricsReport& r) { return r.indices.multiplicative; });
  m.def(
      "compute_metrics", [](const Graph& g, const std::string& route) { return compute_metrics(g, parse_route(route)); },
      py::arg("g"), py::arg("route") = "spectral");

  py::class_<OldNode>(m, "OldNode").def(py::init<int>(), py::arg("node")).def_readonly("node", &OldNode::node);
  py::class_<NewNode>(m, "NewNode")
      .def(py::init<int, int, int>(), py::arg("s"), py::arg("t"), py::arg("copy") = 1)
      .def_readonly("s", &NewNode::s)
      .def_readonly("t", &NewNode::t)
      .def_readonly("copy", &NewNode::copy);

  py::class_<GraphSummary>(m, "GraphSummary")
      .def_readonly("nodes", &GraphSummary::nodes)
      .def_readonly("edges", &GraphSummary::edges)
      .def_readonly("kemeny", &GraphSummary::kemeny)
      .def_readonly("kirchhoff", &GraphSummary::kirchhoff)
      .def_readonly("additive", &GraphSummary::additive)
      .def_readonly("multiplicative", &GraphSummary::multiplicative);
  m.def(
      "summarize", [](const Graph& g, const std::string& route) { return summarize(g, parse_route(route)); },
      py::arg("g"), py::arg("route") = "spectral");
  m.def("node_ref", &node_ref, py::arg("tri"), py::arg("node"));
  m.def("node_id", &node_id, py::arg("tri"), py::arg("ref"));
  m.def("transfer_hitting", &transfer_hitting, py::arg("q"), py::arg("summary"), py::arg("source"), py::arg("target"));
  m.def("transfer_resistance", &transfer_resistance, py::arg("q"), py::arg("summary"), py::arg("a"), py::arg("b"));
  m.def("transfer_kemeny", &transfer_kemeny, py::arg("q"), py::arg("summary"));
  m.def("transfer_multiplicative", &transfer_multiplicative, py::arg("q"), py::arg("summary"));
  m.def("transfer_additive", &transfer_additive, py::arg("q"), py::arg("summary"));
  m.def("transfer_kirchhoff", &transfer_kirchhoff, py::arg("q"), py::arg("summary"));
  m.def("old_new_resistance_sum", &old_new_resistance_sum, py::arg("q"), py::arg("summary"));
  m.def("new_pair_resistance_sum", &new_pair_resistance_sum, py::arg("q"), py::arg("summary"));

  m.def(
      "iterated_quantities",
      [](long long n, long long edges, const py::dict& base, int q, int k, bool exact) -> py::dict {
        if (exact) {
          const auto b = quantities_from<Rational>(base, [](const py::handle& h) { return to_rational(h); });
          return quantities_dict(iterated_quantities(IteratedQuery<Rational>{n, edges, b, q, k}));
        }
        const auto b = quantities_from<double>(base, [](const py::handle& h) { return h.cast<double>(); });
        return quantities_dict(iterated_quantities(IteratedQuery<double>{n, edges, b, q, k}));
      },
      py::arg("n"), py::arg("m"), py::arg("base"), py::arg("q"), py::arg("k"), py::arg("exact") = false);
  m.def(
      "pseudofractal_metrics",
      [](int q, int k, bool exact) -> py::dict {
        return exact ? quantities_dict(pseudofractal_metrics<Rational>(q, k))
                     : quantities_dict(pseudofractal_metrics<double>(q, k));
      },
      py::arg("q"), py::arg("k"), py::arg("exact") = false);

  m.def("formula_terms", [] {
    std::vector<std::string> out;
    for (const FormulaTerm t : all_formula_terms()) out.emplace_back(to_string(t));
    return out;
  });
  m.def(
      "run_verify",
      [](std::uint64_t seed, int trials, int nmax, int qmax, int kmax, std::optional<Graph> graph,
         std::optional<int> q, std::optional<std::string> mutate) {
        VerifyOptions opt;
        opt.seed = seed;
        opt.trials = trials;
        opt.nmax = nmax;
        opt.qmax = qmax;
        opt.kmax = kmax;
        opt.graph = std::move(graph);
        opt.q = q;
        opt.tolerances = Tolerances::from_environment();
        std::optional<FormulaTerm> term;
        if (mutate) {
          term = formula_term_from_string(*mutate);
          if (!term) throw Error(ErrorKind::InvalidArgument, "unknown formula term '" + *mutate + "'");
        }
        VerifyReport report;
        {
          py::gil_scoped_release release;
          const ScopedMutation guard(term);
          report = run_verify(opt);
        }
        py::dict out;
        py::list suites;
        for (const auto& s : report.suites) {
          py::dict d;
          d["name"] = s.name;
          d["checks"] = s.checks;
          d["failures"] = s.failures;
          d["max_deviation"] = s.max_deviation;
          d["tolerance"] = s.tolerance;
          d["passed"] = s.passed();
          suites.append(d);
        }
        out["passed"] = report.passed();
        out["suites"] = suites;
        out["first_failure"] = report.first_failure;
        return out;
      },
      py::arg("seed") = 7, py::arg("trials") = 50, py::arg("nmax") = 10, py::arg("qmax") = 3, py::arg("kmax") = 6,
      py::arg("graph") = std::nullopt, py::arg("q") = std::nullopt, py::arg("mutate") = std::nullopt);
}
