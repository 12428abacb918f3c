#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "commgraph/errors.hpp"
#include "commgraph/io.hpp"
#include "commgraph/verify.hpp"

namespace py = pybind11;
using namespace commgraph;

namespace {

struct Built {
  GroupSpec spec;
  GroupPtr group;
  std::shared_ptr<const Lattice> lattice;
};

Built build(const std::string& spec_text, std::size_t order_cap, std::size_t lattice_cap) {
  Built b{parse_group_spec(spec_text), nullptr, nullptr};
  b.group = construct(b.spec, order_cap);
  b.lattice = std::make_shared<const Lattice>(enumerate_subgroups(b.group, lattice_cap));
  return b;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Subgroup lattices and p-local commensurability graphs (JSON in, JSON out)";

  auto base = py::register_exception<Error>(m, "CommgraphError", PyExc_RuntimeError);
  py::register_exception<SyntaxError>(m, "SpecSyntaxError", base.ptr());
  py::register_exception<OrderCapExceeded>(m, "OrderCapExceeded", base.ptr());
  py::register_exception<LatticeCapExceeded>(m, "LatticeCapExceeded", base.ptr());

  m.attr("DEFAULT_ORDER_CAP") = kDefaultOrderCap;
  m.attr("DEFAULT_LATTICE_CAP") = kDefaultLatticeCap;

  m.def(
      "group_info",
      [](const std::string& spec_text, std::size_t order_cap) {
        const GroupSpec spec = parse_group_spec(spec_text);
        py::gil_scoped_release release;
        return group_info_json(spec, construct(spec, order_cap)).dump();
      },
      py::arg("spec"), py::arg("order_cap") = kDefaultOrderCap);

  m.def(
      "subgroups",
      [](const std::string& spec_text, std::size_t order_cap, std::size_t lattice_cap) {
        py::gil_scoped_release release;
        return subgroups_json(*build(spec_text, order_cap, lattice_cap).lattice).dump();
      },
      py::arg("spec"), py::arg("order_cap") = kDefaultOrderCap, py::arg("lattice_cap") = kDefaultLatticeCap);

  m.def(
      "graph",
      [](const std::string& spec_text, std::uint64_t p, const std::string& kind, std::size_t order_cap) {
        py::gil_scoped_release release;
        const Built b = build(spec_text, order_cap, kDefaultLatticeCap);
        const CommGraph g = build_graph(b.lattice, p, parse_kind(kind));
        return graph_json(b.spec, g, components_and_diameters(g)).dump();
      },
      py::arg("spec"), py::arg("p"), py::arg("kind") = "comm", py::arg("order_cap") = kDefaultOrderCap);

  m.def(
      "analyze",
      [](const std::string& spec_text, std::uint64_t p, const std::string& kind, std::size_t order_cap) {
        py::gil_scoped_release release;
        const Built b = build(spec_text, order_cap, kDefaultLatticeCap);
        const CommGraph g = build_graph(b.lattice, p, parse_kind(kind));
        return analysis_json(b.spec, g, components_and_diameters(g)).dump();
      },
      py::arg("spec"), py::arg("p"), py::arg("kind") = "comm", py::arg("order_cap") = kDefaultOrderCap);

  m.def(
      "dot",
      [](const std::string& spec_text, std::uint64_t p, const std::string& kind, std::size_t order_cap) {
        py::gil_scoped_release release;
        const Built b = build(spec_text, order_cap, kDefaultLatticeCap);
        return export_dot(build_graph(b.lattice, p, parse_kind(kind)));
      },
      py::arg("spec"), py::arg("p"), py::arg("kind") = "comm", py::arg("order_cap") = kDefaultOrderCap);

  m.def(
      "verify",
      [](const std::string& suite, std::size_t trials, std::uint64_t seed) {
        py::gil_scoped_release release;
        VerifyOptions options;
        options.trials = trials;
        options.seed = seed;
        return reports_json(suite, run_suite(suite, options), false).dump();
      },
      py::arg("suite"), py::arg("trials") = kDefaultTrials, py::arg("seed") = kDefaultSeed);

  m.def("suite_names", &suite_names);
}
