#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "contactgeo/models.hpp"
#include "contactgeo/suites.hpp"

namespace contactgeo {

enum class ReportFormat { json, text };

// Full verification request as the front end sees it.  suites may be the
// single entry "all", which expands to every suite the model supports.
struct RunConfig {
  std::string model = "heisenberg";
  std::vector<std::string> suites = {"all"};
  int points = 64;
  std::uint64_t seed = 42;
  double tol = 1e-8;
  ReportFormat format = ReportFormat::json;
  std::string out;  // empty: write to stdout
  Exec exec = Exec::serial;
};

struct RunReport {
  std::string model;
  std::uint64_t seed = 0;
  double tol = 0.0;
  int points = 0;
  bool has_calibration = false;
  CalibrationResult calibration;
  std::vector<SuiteResult> suites;
  std::vector<std::string> notes;
  bool pass = false;
  std::string timestamp;
};

// Builds the model (running the calibration search for the group model),
// expands and validates the suite list, runs every suite, and assembles the
// report.  Exceptions from construction, calibration, or unknown suites
// propagate to the caller.
RunReport run_verification(const RunConfig& cfg);

// Serializations.  Two runs with the same RunConfig agree byte for byte
// except for the timestamp field (JSON) / timestamp line (text).
std::string render_json(const RunReport& r);
std::string render_text(const RunReport& r);

}  // namespace contactgeo
