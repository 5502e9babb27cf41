#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gluing/calculus.hpp"
#include "gluing/canonical.hpp"
#include "gluing/composer.hpp"
#include "gluing/counting.hpp"
#include "gluing/decomposition.hpp"
#include "gluing/distribution.hpp"
#include "gluing/enumerate.hpp"
#include "gluing/errors.hpp"
#include "gluing/graph_io.hpp"
#include "gluing/lab.hpp"
#include "gluing/named.hpp"
#include "gluing/oracle.hpp"
#include "gluing/structure.hpp"

namespace py = pybind11;
using namespace gluing;

namespace {

py::int_ to_py(const Integer& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::tuple keys_tuple(const KeyMultiset& keys) {
  py::tuple t(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) t[i] = keys[i].code;
  return t;
}

py::dict table_dict(const CoefficientTable& table) {
  py::dict d;
  for (const auto& [monomial, c] : table.terms) d[keys_tuple(monomial)] = to_py(c);
  return d;
}

py::dict certificate_dict(const CompositionCertificate& c) {
  py::list sites;
  for (const auto& s : c.glue_sites) {
    sites.append(py::dict(py::arg("first") = s.first, py::arg("second") = s.second,
                          py::arg("first_vertices") = s.first_vertices,
                          py::arg("second_vertices") = s.second_vertices));
  }
  return py::dict(py::arg("graph") = c.result, py::arg("case") = to_string(c.case_used),
                  py::arg("components") = c.components, py::arg("glue_sites") = sites,
                  py::arg("uniqueness_verified") = c.uniqueness_verified,
                  py::arg("s") = c.s_value, py::arg("fallback") = c.fallback);
}

py::list masses(const DistributionSpec& spec) {
  py::list out;
  for (const auto& m : spec.mass) {
    out.append(py::make_tuple(to_py(boost::multiprecision::numerator(m)),
                              to_py(boost::multiprecision::denominator(m))));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Copy counts of disconnected graphs and gluing expansions.";
  m.attr("__version__") = std::string(library_version());

  auto base = py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<UnsupportedError>(m, "UnsupportedError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<SizeError>(m, "SizeError", PyExc_OverflowError);
  py::register_exception<VerificationError>(m, "VerificationError", PyExc_RuntimeError);
  (void)base;

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::size_t>(), py::arg("order"))
      .def(py::init([](std::size_t order, const std::vector<Edge>& edges) {
             return Graph(order, edges);
           }),
           py::arg("order"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("edges", &Graph::edges)
      .def("has_edge", &Graph::has_edge)
      .def("degree", &Graph::degree)
      .def("neighbors", &Graph::neighbors)
      .def("to_graph6", [](const Graph& g) { return to_graph6(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "Graph('" + to_graph6(g) + "')"; });

  m.def("from_graph6", [](const std::string& s) { return from_graph6(s); });
  m.def("to_graph6", &to_graph6);
  m.def("from_edgelist", [](const std::string& s) { return from_edgelist(s); });
  m.def("to_edgelist", &to_edgelist);
  m.def("named_graph", [](const std::string& name) { return named_graph(name); });
  m.def("enumerate_graphs", &enumerate_graphs, py::arg("n"), py::arg("connected_only") = false);

  m.def("canonical_code", [](const Graph& g) { return canonical_key(g).code; });
  m.def("are_isomorphic", &are_isomorphic);
  m.def("is_connected", &is_connected);

  m.def("count_copies", &count_copies, py::arg("pattern"), py::arg("host"));
  m.def("count_embeddings", &count_embeddings, py::arg("pattern"), py::arg("host"));
  m.def("oracle_count", &oracle_count, py::arg("pattern"), py::arg("host"),
        py::arg("host_guard") = kOracleHostGuard);

  m.def(
      "enumerate_gluings",
      [](const std::vector<Graph>& comps) {
        py::list out;
        for (const auto& r : enumerate_gluings(comps)) {
          out.append(py::dict(py::arg("graph") = r.host, py::arg("code") = r.key.code,
                              py::arg("s") = r.s));
        }
        return out;
      },
      py::arg("components"));
  m.def("count_decompositions",
        [](const Graph& host, const std::vector<Graph>& comps) {
          return count_decompositions(host, comps);
        });

  m.def("two_component_count", [](const Graph& a, const Graph& b, const Graph& host) {
    return two_component_count(a, b, host);
  });
  m.def("multi_component_count", [](const std::vector<Graph>& comps, const Graph& host) {
    return multi_component_count(comps, host);
  });
  m.def("coefficient_table",
        [](const std::vector<Graph>& comps) { return table_dict(coefficient_table(comps)); });
  m.def("fit_coefficient_table",
        [](const std::vector<Graph>& comps) { return table_dict(fit_coefficient_table(comps)); });
  m.def("connected_coefficient", [](const std::vector<Graph>& comps, const Graph& h) {
    return to_py(connected_coefficient(comps, h));
  });

  m.def("glue_at_vertices", &glue_at_vertices);
  m.def("compose_pair",
        [](const Graph& a, const Graph& b) { return certificate_dict(compose_pair(a, b)); });
  m.def("compose_chain", [](const std::vector<Graph>& comps) {
    return certificate_dict(compose_chain(comps));
  });

  m.def(
      "classify_pair_distribution",
      [](const Graph& a, const Graph& b, std::uint64_t q, std::uint64_t n) {
        const auto spec = classify_pair_distribution(a, b, q, n);
        return py::make_tuple(spec.law, masses(spec));
      },
      py::arg("g1"), py::arg("g2"), py::arg("q"), py::arg("n"));

  m.def("sample_gnp", &sample_gnp, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("sample_seed", &sample_seed);
  m.def(
      "mod_q_histogram",
      [](const std::vector<Graph>& comps, std::size_t n, double p, std::uint64_t q,
         std::uint64_t samples, std::uint64_t seed, unsigned jobs, const std::string& method) {
        ExperimentConfig c;
        c.components = comps;
        c.n = n;
        c.p = p;
        c.q = q;
        c.samples = samples;
        c.seed = seed;
        c.jobs = jobs;
        c.method = method == "formula" ? CountMethod::formula : CountMethod::direct;
        py::gil_scoped_release release;
        return mod_q_histogram(c).counts;
      },
      py::arg("components"), py::arg("n"), py::arg("p"), py::arg("q"), py::arg("samples"),
      py::arg("seed"), py::arg("jobs") = 1, py::arg("method") = "direct");
  m.def(
      "run_experiment_json",
      [](const std::vector<Graph>& comps, std::size_t n, double p, std::uint64_t q,
         std::uint64_t samples, std::uint64_t seed, unsigned jobs, const std::string& predict) {
        ExperimentConfig c;
        c.components = comps;
        c.n = n;
        c.p = p;
        c.q = q;
        c.samples = samples;
        c.seed = seed;
        c.jobs = jobs;
        const auto prediction =
            predict == "uniform" ? Prediction::uniform() : Prediction::automatic();
        py::gil_scoped_release release;
        return report_json(run_experiment(c, prediction));
      },
      py::arg("components"), py::arg("n"), py::arg("p"), py::arg("q"), py::arg("samples"),
      py::arg("seed"), py::arg("jobs") = 1, py::arg("predict") = "auto");
}
