// Python bindings. Graphs go in as text (JSON or edge list) and reports come
// back as JSON strings; the Python package decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "flowtri/report.hpp"

namespace py = pybind11;
using namespace flowtri;

namespace {

Options options(std::uint64_t seed) {
  Options o;
  o.seed = seed;
  return o;
}

Dag load_full(const std::string& text) {
  Dag g = read_graph_text(text);
  if (is_full(g)) return g;
  if (!is_valid(g)) fail(ErrorKind::NotValid, "the graph has no full contraction");
  return complete_contraction(g).result;
}

std::string with_checks(Json report, const std::vector<Check>& checks) {
  report["checks"] = checks_to_json(checks);
  return report.dump();
}

}  // namespace

PYBIND11_MODULE(_flowtri, m) {
  m.doc() = "Flow polytope triangulations, tau-tilting posets and h*-vectors";

  // The message starts with the error kind, e.g. "NotAmple: ...".
  py::register_exception<Error>(m, "FlowtriError", PyExc_ValueError);

  m.def("generate", [](const std::string& family, const std::vector<int>& args) {
    return graph_to_json(generate(family, args)).dump();
  });
  m.def("contract", [](const std::string& text, bool strip) {
    return contract_report(read_graph_text(text), strip).dump();
  }, py::arg("text"), py::arg("strip") = true);
  m.def("framings", [](const std::string& text, bool enumerate) {
    return framings_report(read_graph_text(text), enumerate).dump();
  }, py::arg("text"), py::arg("enumerate") = false);
  m.def("analyze", [](const std::string& text, const std::string& framing, std::uint64_t seed) {
    Dag g = load_full(text);
    FramedDag fd(g, resolve_framing(g, framing));
    return analyze(fd, options(seed)).report.dump();
  }, py::arg("text"), py::arg("framing") = "length", py::arg("seed") = 1);
  m.def("oracle", [](const std::string& text) {
    auto o = oracle_report(read_graph_text(text), options(1));
    return with_checks(o.report, o.checks);
  });
  m.def("fuzz", [](int count, std::uint64_t seed) {
    return fuzz(count, options(seed)).report.dump();
  }, py::arg("count") = 200, py::arg("seed") = 1);
}
