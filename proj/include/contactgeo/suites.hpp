#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "contactgeo/contact.hpp"
#include "contactgeo/curvature.hpp"
#include "contactgeo/models.hpp"
#include "contactgeo/pointops.hpp"
#include "contactgeo/prng.hpp"

namespace contactgeo {

// A residual check passes when its worst sampled magnitude stays BELOW a
// threshold; a witness check passes when its best sampled magnitude rises
// ABOVE a floor.  Witness results certify "nonvanishing witnessed" at the
// sampled arguments, never a proof of nonvanishing everywhere.
enum class CheckKind { residual, witness };

enum class Exec { serial, parallel };

// Everything a check needs at one sampled point, precomputed once and shared
// by all checks of the suite.  sigma is the vertical connection covector,
// dsigma_uv the value (d sigma)(U,V); both are filled only for suites that
// consume them and are zero otherwise.
struct PointEval {
  const ModelInstance* model = nullptr;
  Point p;
  CurvatureData cd;
  bool has_bundle = false;
  BundleAtPoint bp;
  Vec sigma{};
  double dsigma_uv = 0.0;
};

// One named check.  The function returns a single nonnegative magnitude per
// point: max-norm of a residual for CheckKind::residual, the witnessed
// magnitude for CheckKind::witness.  Thresholds: a residual check passes when
// max <= tol * tol_scale, unless abs_tol >= 0 pins a fixed absolute bound
// that ignores the configured tolerance; a witness check passes when
// max >= floor_val.
struct CheckDef {
  std::string id;
  std::string anchor;
  CheckKind kind = CheckKind::residual;
  double tol_scale = 1.0;
  double abs_tol = -1.0;
  double floor_val = 1e-3;
  std::function<double(const PointEval&, SplitMix64&)> fn;
};

struct CheckResult {
  std::string id;
  std::string anchor;
  CheckKind kind = CheckKind::residual;
  double threshold = 0.0;
  double max_value = 0.0;
  double mean_value = 0.0;
  bool pass = false;
};

struct SuiteConfig {
  int points = 64;
  std::uint64_t seed = 42;
  double tol = 1e-8;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass = false;
};

// Fixed catalog order; reports list suites and checks in this order.
std::vector<std::string> suite_names();

// Suites that can run on the given model: every suite for models carrying a
// contact bundle, only the engine suite otherwise.
std::vector<std::string> suites_for(const ModelInstance& m);

// The checks of one suite, specialized to the model (the engine suite gains
// model-specific exact-value checks on the control geometries).  Throws
// SuiteError for an unknown suite id or for a bundle suite requested on a
// model without a contact bundle.
std::vector<CheckDef> suite_checks(const ModelInstance& m, const std::string& suite);

// Runs one suite: samples cfg.points chart points from a stream derived from
// (seed, suite), precomputes PointEvals, evaluates every check at every point
// with a per-(check, point) random stream, and reduces in index order so the
// result is identical for serial and parallel execution.
SuiteResult run_suite(const ModelInstance& m, const std::string& suite,
                      const SuiteConfig& cfg, Exec exec = Exec::serial);

// Replay of the constant-Ricci elimination used by the B-flatness
// contradiction probes: a hypothetical B = 0 forces
//   rho(X,X) = rho_hat = -(a0 + a1 + 4p*a2 + tau*a8) / a5
// for all unit X.  The elimination divides by a5 and later by a0 + a1, so
// coefficient vectors violating either are rejected, with the reason naming
// the offending division step.
struct RicciReplay {
  bool applicable = false;
  std::string reason;
  double rho_hat = 0.0;
};

RicciReplay b_flat_ricci_replay(const BCoefficients& c, int rank_p, double tau);

}  // namespace contactgeo
