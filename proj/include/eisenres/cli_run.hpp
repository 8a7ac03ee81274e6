#pragma once

// The command surface shared by the executable and the Python module.

#include <optional>
#include <string>
#include <vector>

#include "eisenres/json_io.hpp"

namespace eisenres {

struct RunConfig {
  std::string command;  // deform, cfun-check, poles-deg, poles-gln, verify-paper
  std::string group;
  std::optional<RatVec> sigma0;
  std::optional<std::vector<RatVec>> tangents;
  std::vector<RatVec> audit_sigma0;
  std::string parabolic;  // simple root excluded from the Levi
  Json kappa = "principal";
  Json speh;
  std::vector<std::string> select;  // verify-paper: case ids; empty runs all
  bool empty_suite = false;         // verify-paper over no cases
  std::string out_json;
  std::string out_text;
  std::string svg;
};

/// Validates keys and value shapes; ConfigError with a JSON pointer.
RunConfig parse_run_config(const Json& j);

struct RunResult {
  int exit_code = 0;  // 0 ok, 1 engine or mathematical error, 2 config error
  Json report;
  std::string text;
  std::string svg;
};

/// Never throws on engine errors; they land in the report.
RunResult run(const RunConfig& cfg);
RunResult run_json(const Json& j);

/// Writes report, text and SVG to the configured paths.
void write_outputs(const RunConfig& cfg, const RunResult& result);

}  // namespace eisenres
