#include <pybind11/pybind11.h>

#include "eisenres/cli_run.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_eisenres, m) {
  m.doc() = "Exact residue calculus for Eisenstein series";
  m.attr("schema_version") = eisenres::kSchemaVersion;
  m.def(
      "run_json",
      [](const std::string& config) {
        eisenres::RunResult r;
        {
          py::gil_scoped_release release;
          eisenres::Json j;
          try {
            j = eisenres::Json::parse(config);
          } catch (const eisenres::Json::parse_error& e) {
            throw py::value_error(e.what());
          }
          r = eisenres::run_json(j);
        }
        return py::make_tuple(r.exit_code, r.report.dump(), r.text, r.svg);
      },
      py::arg("config"),
      "Run a config given as a JSON string; returns (exit_code, report_json, text, svg).");
}
