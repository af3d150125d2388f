#pragma once

#include <stdexcept>
#include <string>

namespace contactgeo {

// Precondition / dimension-contract violations.
struct ContractError : std::runtime_error {
  explicit ContractError(const std::string& msg) : std::runtime_error(msg) {}
};

// Metric not positive definite (Cholesky pivot failure) at an evaluation point.
struct DegenerateMetricError : std::runtime_error {
  explicit DegenerateMetricError(const std::string& msg) : std::runtime_error(msg) {}
};

// Model construction or calibration failure; carries the worst residual seen.
struct ModelError : std::runtime_error {
  double worst_residual;
  ModelError(const std::string& msg, double worst)
      : std::runtime_error(msg), worst_residual(worst) {}
};

// Unknown suite id, suite not applicable to the model, bad run configuration.
struct SuiteError : std::runtime_error {
  explicit SuiteError(const std::string& msg) : std::runtime_error(msg) {}
};

// A field was differentiated deeper than the supported jet tower.
struct FieldDepthError : std::runtime_error {
  explicit FieldDepthError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace contactgeo
