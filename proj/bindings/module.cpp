#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "scf/cli.hpp"
#include "scf/models.hpp"
#include "scf/pipeline.hpp"

namespace py = pybind11;
using namespace scf;

namespace {

Hamiltonian model_from(const std::string &spec) {
  if (is_builtin_model(spec))
    return resolve_model(spec);
  if (spec.find('\n') != std::string::npos)
    return parse_hamiltonian_text(spec);
  return load_hamiltonian(spec);
}

PipelineOptions options_from(double tol, std::size_t qubit_cap,
                             const std::string &sector_method,
                             int max_hole_len) {
  PipelineOptions opt;
  opt.tol = tol;
  opt.qubit_cap = qubit_cap;
  opt.max_hole_len = max_hole_len;
  if (sector_method == "algebraic")
    opt.sector_method = SectorMethod::Algebraic;
  else if (sector_method != "ed")
    throw Error("sector_method must be 'ed' or 'algebraic'");
  return opt;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Frustration-graph free-fermion solver core";

  // Translator registration order matters: the most derived type last
  // so its translator runs first.
  auto base = py::register_exception<Error>(m, "SolverError");
  py::register_exception<NonScfError>(m, "NonScfError", base.ptr());

  m.def(
      "analyze_json",
      [](const std::string &model, double tol, std::size_t cap,
         const std::string &method, int hole_len) {
        return analyze_report(model_from(model),
                              options_from(tol, cap, method, hole_len))
            .dump();
      },
      py::arg("model"), py::arg("tol") = 1e-8, py::arg("qubit_cap") = 12,
      py::arg("sector_method") = "ed", py::arg("max_hole_len") = 0,
      "Graph facts for a model (builtin:<name>, file path, or model text); "
      "returns a JSON string");
  m.def(
      "solve_json",
      [](const std::string &model, double tol, std::size_t cap,
         const std::string &method, int hole_len) {
        return solve_report(model_from(model),
                            options_from(tol, cap, method, hole_len))
            .dump();
      },
      py::arg("model"), py::arg("tol") = 1e-8, py::arg("qubit_cap") = 12,
      py::arg("sector_method") = "ed", py::arg("max_hole_len") = 0,
      "Analytic free-fermion solution; returns a JSON string");
  m.def(
      "verify_json",
      [](const std::string &model, double tol, std::size_t cap,
         const std::string &method, int hole_len) {
        return verify_report(model_from(model),
                             options_from(tol, cap, method, hole_len))
            .dump();
      },
      py::arg("model"), py::arg("tol") = 1e-8, py::arg("qubit_cap") = 12,
      py::arg("sector_method") = "ed", py::arg("max_hole_len") = 0,
      "Solve plus the ED oracle and operator-identity checks; returns a "
      "JSON string");
  m.def(
      "realize",
      [](const std::string &graph_text, double b) {
        Graph g = graph_text.find('\n') != std::string::npos
                      ? parse_graph_text(graph_text)
                      : load_graph(graph_text);
        return realize_model_text(g, b);
      },
      py::arg("graph"), py::arg("b") = 1.0,
      "Fiducial bosonization of a graph (text or file path) into model "
      "text");
  m.def(
      "run_cli",
      [](const std::vector<std::string> &args) {
        auto r = run_cli(args);
        return py::make_tuple(r.exit_code, r.out, r.err);
      },
      py::arg("args"), "Run the command-line interface in-process");
}
