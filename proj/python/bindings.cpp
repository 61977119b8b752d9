#include "hodgekit/cli.hpp"
#include "hodgekit/errors.hpp"
#include "hodgekit/models.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace hodgekit;

namespace {

RunResult run_json(const std::string& command, const std::string& model, const std::vector<std::string>& flavors,
                   const std::vector<std::string>& checks, std::uint64_t seed) {
  RunConfig cfg;
  cfg.command = command;
  cfg.model = model;
  cfg.flavors = flavors;
  cfg.checks = checks;
  cfg.output = OutputFormat::json;
  cfg.seed = seed;
  return run(cfg);
}

}  // namespace

PYBIND11_MODULE(_hodgekit, m) {
  m.doc() = "Exact cohomology of bigraded complexes";

  py::register_exception<Error>(m, "HodgekitError", PyExc_RuntimeError);

  m.attr("DEFAULT_SEED") = kDefaultSeed;

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        RunResult r = run_cli(args);
        return py::make_tuple(r.exit_code, r.out, r.err);
      },
      py::arg("args"), "Runs the command line with the given arguments; returns (exit_code, stdout, stderr).");

  m.def(
      "run_json",
      [](const std::string& command, const std::string& model, const std::vector<std::string>& flavors,
         const std::vector<std::string>& checks, std::uint64_t seed) {
        RunResult r = run_json(command, model, flavors, checks, seed);
        return py::make_tuple(r.exit_code, r.out, r.err);
      },
      py::arg("command"), py::arg("model"), py::arg("flavors") = std::vector<std::string>{},
      py::arg("checks") = std::vector<std::string>{}, py::arg("seed") = kDefaultSeed);

  m.def("catalog_names", [] {
    std::vector<std::string> names;
    for (const auto& spec : catalog()) names.push_back(spec.name);
    return names;
  });

  m.def("catalog_text", &catalog_text, py::arg("name"));

  m.def(
      "normalize_model",
      [](const std::string& text) { return serialize(parse_model_file(text)); }, py::arg("text"),
      "Parses a model file and returns its canonical text.");

  m.def(
      "homotopy_coefficients",
      [](const std::string& a, const std::string& b) {
        HomotopySolution s = homotopy_coefficients(GaussianRational::parse(a), GaussianRational::parse(b));
        return py::make_tuple(s.y1.str(), s.y2.str(), s.field);
      },
      py::arg("a"), py::arg("b"));
}
