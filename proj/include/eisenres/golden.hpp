#pragma once

// Reference values checked by `verify-paper`.

#include <functional>
#include <string>
#include <vector>

namespace eisenres {

struct GoldenOutcome {
  bool pass = false;
  std::string expected;
  std::string computed;
};

struct GoldenCase {
  std::string id;
  std::string description;
  std::string anchor;  // where the value is displayed, in words
  std::function<GoldenOutcome()> run;
};

struct GoldenRow {
  std::string id;
  std::string anchor;
  std::string expected;
  std::string computed;
  bool pass = false;
  std::string error;  // engine error raised while running the case
};

struct GoldenSummary {
  std::vector<GoldenRow> rows;
  bool pass = true;  // conjunction of the rows; true for an empty suite
};

std::vector<GoldenCase> reference_cases();

/// Runs the cases in order; an engine error marks the case failed.
GoldenSummary run_golden(const std::vector<GoldenCase>& cases);

/// Fixed-width table: id, expected, computed, status.
std::string golden_table(const GoldenSummary& summary);

}  // namespace eisenres
