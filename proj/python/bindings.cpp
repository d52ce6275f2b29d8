// Copyright 2026 The gensat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <sstream>

#include "gensat/bounds.hpp"
#include "gensat/canonical.hpp"
#include "gensat/cli.hpp"
#include "gensat/constructions.hpp"
#include "gensat/count.hpp"
#include "gensat/errors.hpp"
#include "gensat/graph6.hpp"
#include "gensat/saturation.hpp"
#include "gensat/search.hpp"
#include "gensat/star_optimizer.hpp"
#include "gensat/version.hpp"

namespace py = pybind11;
using namespace py::literals;

namespace gensat {
namespace {

// Exact integers cross as Python ints whatever their width.
py::int_ to_py(Wide v) {
  if (fits_int64(v)) return py::int_(static_cast<long long>(v));
  return py::int_(py::reinterpret_steal<py::object>(
      PyLong_FromString(to_string(v).c_str(), nullptr, 10)));
}

Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (const auto& [u, v] : edges) es.push_back({u, v});
  return build_graph(n, es);
}

std::vector<std::pair<int, int>> edge_list(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

Pattern as_pattern(const py::handle& h) {
  if (py::isinstance<Pattern>(h)) return h.cast<Pattern>();
  return Pattern::parse(h.cast<std::string>());
}

Family as_family(const py::object& obj) {
  Family fs;
  if (py::isinstance<py::str>(obj) || py::isinstance<Pattern>(obj)) {
    fs.push_back(as_pattern(obj));
  } else {
    for (const py::handle& h : obj) fs.push_back(as_pattern(h));
  }
  return fs;
}

py::dict search_dict(const SearchReport& r) {
  return py::dict("n"_a = r.n, "target"_a = r.target, "counted"_a = r.counted,
                  "minimum"_a = to_py(r.minimum), "witnesses"_a = r.witnesses,
                  "witness_total"_a = r.witness_total,
                  "graphs_examined"_a = r.graphs_examined,
                  "saturated_found"_a = r.saturated_found);
}

py::dict m0_dict(const M0Result& r) {
  py::list values;
  for (const auto& v : r.values) values.append(v ? py::object(to_py(*v)) : py::object(py::none()));
  return py::dict("m0"_a = r.m0, "tie"_a = r.tie, "satnum"_a = to_py(r.satnum),
                  "values"_a = values);
}

SearchOptions options(int workers) {
  SearchOptions o;
  o.workers = workers;
  return o;
}

}  // namespace
}  // namespace gensat

PYBIND11_MODULE(_core, m) {
  using namespace gensat;
  m.doc() = "Generalized saturation numbers: graphs, counts, certificates and exact search.";
  m.attr("__version__") = kVersion;

  static py::exception<DomainError> domain_error(m, "DomainError", PyExc_ValueError);
  static py::exception<ParseError> parse_error(m, "ParseError", domain_error.ptr());
  // str(exc) is the message; exc.code carries the machine-readable code.
  py::register_exception_translator([](std::exception_ptr p) {
    const auto raise = [](const py::object& type, const DomainError& e) {
      py::object exc = type(e.what());
      exc.attr("code") = e.code();
      PyErr_SetObject(type.ptr(), exc.ptr());
    };
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      raise(parse_error, e);
    } catch (const DomainError& e) {
      raise(domain_error, e);
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), "n"_a = 0)
      .def(py::init(&from_edges), "n"_a, "edges"_a)
      .def_static("from_graph6", &decode_graph6, "text"_a)
      .def("graph6", [](const Graph& g) { return encode_graph6(g); })
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("edges", &edge_list)
      .def("degree", &Graph::degree, "v"_a)
      .def("degrees", &Graph::degrees)
      .def("adjacent", &Graph::adjacent, "u"_a, "v"_a)
      .def("with_edge", &Graph::with_edge, "u"_a, "v"_a)
      .def("is_connected", &Graph::is_connected)
      .def("canonical", [](const Graph& g) { return canonical_graph(g); })
      .def("isomorphic", [](const Graph& a, const Graph& b) { return isomorphic(a, b); })
      .def(py::self == py::self)
      .def("__len__", &Graph::order)
      .def("__repr__", [](const Graph& g) {
        std::ostringstream s;
        s << "Graph(order=" << g.order() << ", size=" << g.size() << ", graph6='"
          << encode_graph6(g) << "')";
        return s.str();
      });

  py::class_<Pattern>(m, "Pattern")
      .def(py::init(&Pattern::parse), "spec"_a)
      .def_property_readonly("spec", &Pattern::spec)
      .def_property_readonly("graph", [](const Pattern& p) { return p.graph(); })
      .def("__repr__", [](const Pattern& p) { return "Pattern('" + p.spec() + "')"; });
  py::implicitly_convertible<std::string, Pattern>();

  // Graphs.
  m.def("complete_graph", &complete_graph, "n"_a);
  m.def("empty_graph", &empty_graph, "n"_a);
  m.def("path_graph", &path_graph, "k"_a);
  m.def("cycle_graph", &cycle_graph, "k"_a);
  m.def("star_graph", &star_graph, "r"_a);
  m.def("split_graph", &split_graph, "n"_a, "t"_a);
  m.def("kr_graph", &kr_graph, "t"_a, "n"_a, "m"_a);
  m.def("g4n", &g4n, "n"_a);
  m.def("gtn", &gtn, "t"_a, "n"_a);
  m.def("construct", [](const std::string& family, const std::map<std::string, int>& params) {
    const ConstructionResult c = construct(family, params);
    py::dict d("graph"_a = c.graph, "family"_a = c.family, "recipe"_a = c.recipe);
    if (!c.part.empty()) d["partition"] = c.part;
    return d;
  }, "family"_a, "params"_a = std::map<std::string, int>{});
  m.def("construction_families", &construction_families);

  // Counting.
  m.def("count", [](const Graph& g, const py::object& p) { return to_py(count_pattern(g, as_pattern(p))); },
        "graph"_a, "pattern"_a);
  m.def("count_cliques", [](const Graph& g, int r) { return to_py(count_cliques(g, r)); }, "graph"_a, "r"_a);
  m.def("count_stars", [](const Graph& g, int r) { return to_py(count_stars(g, r)); }, "graph"_a, "r"_a);
  m.def("count_paths", [](const Graph& g, int k) { return to_py(count_paths(g, k)); }, "graph"_a, "k"_a);
  m.def("independence_number", &independence_number, "graph"_a);

  // Saturation.
  m.def("is_saturated", [](const Graph& g, const py::object& forbid) {
    return family_saturated(g, as_family(forbid));
  }, "graph"_a, "forbid"_a);
  m.def("certificate", [](const Graph& g, const py::object& forbid) {
    const Pattern f = as_pattern(forbid);
    const SaturationCertificate cert = is_saturated(g, f);
    py::dict d("free"_a = cert.is_free, "saturated"_a = cert.is_saturated,
               "checked_nonedges"_a = cert.checked_nonedges,
               "validated"_a = validate_certificate(g, {f}, cert).empty());
    if (cert.unsaturated_witness) {
      d["unsaturated_witness"] = py::make_tuple(cert.unsaturated_witness->u, cert.unsaturated_witness->v);
    }
    return d;
  }, "graph"_a, "forbid"_a);

  // Star optimiser.
  m.def("sr_kr_formula", [](int t, int n, int mm, int r) { return to_py(sr_kr_formula(t, n, mm, r)); },
        "t"_a, "n"_a, "m"_a, "r"_a);
  m.def("m0", [](int n, int r, int t) { return m0_dict(m0(n, r, t)); }, "n"_a, "r"_a, "t"_a);
  m.def("satnum_star_star", [](int n, int r, int t) {
    const StarStarResult s = satnum_star_star(n, r, t);
    py::dict d("satnum"_a = to_py(s.satnum), "note"_a = s.note);
    if (s.scan) d["scan"] = m0_dict(*s.scan);
    return d;
  }, "n"_a, "r"_a, "t"_a);
  m.def("xbar", &xbar, "r"_a, "t"_a);
  m.def("tie_ts", [](int i_max) {
    py::list out;
    for (Wide v : tie_ts(i_max)) out.append(to_py(v));
    return out;
  }, "i_max"_a);

  // Bounds.
  m.def("ehm_value", [](int n, int t) { return to_py(ehm_value(n, t)); }, "n"_a, "t"_a);
  m.def("cl_value", [](int n, int r, int t) { return to_py(cl_value(n, r, t)); }, "n"_a, "r"_a, "t"_a);
  m.def("bound_names", &bound_names);
  m.def("evaluate_bound", [](const std::string& name, const std::map<std::string, std::string>& params) {
    const BoundReport b = evaluate_bound(name, params);
    py::dict d("name"_a = b.name, "exact"_a = b.exact, "value"_a = b.value, "note"_a = b.note);
    if (b.satisfied) d["satisfied"] = *b.satisfied;
    for (const auto& [k, v] : b.fields) d[py::str(k)] = v;
    return d;
  }, "name"_a, "params"_a = std::map<std::string, std::string>{});

  // Search. The GIL is released around the exhaustive runs.
  m.def("count_graphs", [](int n, int workers) {
    py::gil_scoped_release release;
    return count_graphs(n, {}, options(workers));
  }, "n"_a, "workers"_a = 0);
  m.def("enumerate_graphs", [](int n, int workers) {
    py::gil_scoped_release release;
    return enumerate_graphs(n, {}, options(workers));
  }, "n"_a, "workers"_a = 0);
  m.def("satnum_exact", [](int n, const py::object& forbid, const py::object& counted,
                           const std::string& property, int workers, bool prune) {
    const Pattern f = as_pattern(forbid);
    const Pattern h = as_pattern(counted);
    const SearchConstraints c = property.empty() ? SearchConstraints{} : parse_property(property);
    SearchReport rep;
    {
      py::gil_scoped_release release;
      rep = satnum_exact(n, f, h, c, options(workers), prune);
    }
    return search_dict(rep);
  }, "n"_a, "forbid"_a, "count"_a, "property"_a = "", "workers"_a = 0, "prune"_a = true);
  m.def("exists_saturated_with", [](int n, const py::object& forbid, const std::string& property,
                                    int workers) -> std::optional<Graph> {
    const Pattern f = as_pattern(forbid);
    py::gil_scoped_release release;
    return exists_saturated_with(n, f, property, options(workers)).witness;
  }, "n"_a, "forbid"_a, "property"_a, "workers"_a = 0);

  // Command line, in-process.
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int status = run_cli(args, out, err);
    return py::make_tuple(status, out.str(), err.str());
  }, "args"_a);
}
