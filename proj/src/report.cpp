#include "contactgeo/report.hpp"

#include <algorithm>
#include <cstdio>
#include <ctime>
#include <sstream>

#include "json.hpp"

#include "contactgeo/errors.hpp"

namespace contactgeo {
namespace {

std::string utc_now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<std::string> notes_for(const ModelInstance& m) {
  std::vector<std::string> notes;
  notes.push_back(
      "Conventions: R(X,Y) = nabla_X nabla_Y - nabla_Y nabla_X - "
      "nabla_[X,Y]; R(X,Y,Z,W) = g(R(X,Y)Z,W); the exterior derivative of a "
      "1-form carries the 1/2 weight, dw(X,Y) = (X w(Y) - Y w(X) - "
      "w([X,Y]))/2; the wedge of 1-forms is plain, (a^b)(X,Y) = a(X)b(Y) - "
      "a(Y)b(X).");
  if (m.bundle.has_value()) {
    notes.push_back(
        "The a10 slot of the generalized tensor multiplies g(X,Y)g(Z,W), "
        "completing the symmetric pattern of the a8 and a9 metric-pair "
        "terms.");
    notes.push_back(
        "Vertical Ricci constant: rho(U,U) = rho(V,V) = 4p with p the "
        "complex rank of the horizontal bundle; p = 1 here, so the "
        "B-flatness replay uses 4p = 4.");
    notes.push_back(
        "For unit horizontal X the model satisfies k(X,GX) + k(X,HX) + "
        "k(X,JX) = -6; the sign is pinned by the identity g(R(X,GX)GX,X) + "
        "g(R(X,HX)HX,X) + g(R(X,JX)JX,X) = -6 g(X,X), which the "
        "gh-curvature-symmetries suite verifies directly.");
  }
  return notes;
}

const char* kind_name(CheckKind k) {
  return k == CheckKind::residual ? "residual" : "witness";
}

}  // namespace

RunReport run_verification(const RunConfig& cfg) {
  if (cfg.points < 1) throw ContractError("points must be >= 1");
  if (!(cfg.tol > 0.0)) throw ContractError("tol must be > 0");

  ModelInstance m = model_by_name(cfg.model);

  std::vector<std::string> wanted = cfg.suites;
  if (wanted.size() == 1 && wanted[0] == "all") {
    wanted = suites_for(m);
  } else {
    auto names = suite_names();
    for (const std::string& s : wanted)
      if (std::find(names.begin(), names.end(), s) == names.end())
        throw SuiteError("unknown suite: " + s);
  }

  RunReport rep;
  rep.model = m.name;
  rep.seed = cfg.seed;
  rep.tol = cfg.tol;
  rep.points = cfg.points;
  rep.notes = notes_for(m);

  if (m.name == "heisenberg") {
    rep.has_calibration = true;
    rep.calibration = calibrate_heisenberg();
  }

  SuiteConfig scfg;
  scfg.points = cfg.points;
  scfg.seed = cfg.seed;
  scfg.tol = cfg.tol;

  rep.pass = true;
  for (const std::string& s : wanted) {
    SuiteResult sr = run_suite(m, s, scfg, cfg.exec);
    rep.pass = rep.pass && sr.pass;
    rep.suites.push_back(std::move(sr));
  }

  rep.timestamp = utc_now();
  return rep;
}

std::string render_json(const RunReport& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["model"] = r.model;
  j["seed"] = r.seed;
  j["tol"] = r.tol;
  j["points"] = r.points;

  if (r.has_calibration) {
    nlohmann::ordered_json cal;
    cal["lambda"] = r.calibration.lambda;
    cal["mu"] = r.calibration.mu;
    nlohmann::ordered_json flags;
    flags["pairing_axis"] = r.calibration.flags.pairing_axis;
    flags["pairing_sign"] = r.calibration.flags.pairing_sign;
    flags["coframe_scale"] = r.calibration.flags.coframe_scale;
    flags["exterior_weight"] = r.calibration.flags.exterior_weight;
    cal["flags"] = flags;
    cal["residual"] = r.calibration.residual;
    cal["runner_up"] = r.calibration.runner_up;
    cal["rejected_count"] = r.calibration.rejected.size();
    j["calibration"] = cal;
  } else {
    j["calibration"] = nullptr;
  }

  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  int total = 0, passed = 0;
  for (const SuiteResult& sr : r.suites)
    for (const CheckResult& c : sr.checks) {
      nlohmann::ordered_json jc;
      jc["id"] = c.id;
      jc["suite"] = sr.suite;
      jc["anchor"] = c.anchor;
      jc["kind"] = kind_name(c.kind);
      jc["threshold"] = c.threshold;
      jc["max_residual"] = c.max_value;
      jc["mean_residual"] = c.mean_value;
      jc["pass"] = c.pass;
      checks.push_back(std::move(jc));
      ++total;
      if (c.pass) ++passed;
    }
  j["checks"] = std::move(checks);
  j["checks_total"] = total;
  j["checks_passed"] = passed;
  j["pass"] = r.pass;
  j["notes"] = r.notes;
  j["timestamp"] = r.timestamp;
  return j.dump(2) + "\n";
}

std::string render_text(const RunReport& r) {
  std::ostringstream os;
  os << "model " << r.model << "  seed " << r.seed << "  points " << r.points
     << "  tol " << r.tol << "\n";
  if (r.has_calibration) {
    os << "calibration: lambda " << r.calibration.lambda << ", mu "
       << r.calibration.mu << ", axis " << r.calibration.flags.pairing_axis
       << ", sign " << r.calibration.flags.pairing_sign << ", coframe scale "
       << r.calibration.flags.coframe_scale << ", d-weight "
       << r.calibration.flags.exterior_weight << ", residual "
       << r.calibration.residual << ", runner-up " << r.calibration.runner_up
       << "\n";
  }
  for (const SuiteResult& sr : r.suites) {
    os << "[" << sr.suite << "] " << (sr.pass ? "PASS" : "FAIL") << "\n";
    for (const CheckResult& c : sr.checks) {
      char line[160];
      std::snprintf(line, sizeof line, "  %-34s %-8s max %.3e  %s", c.id.c_str(),
                    kind_name(c.kind), c.max_value,
                    c.pass ? "PASS" : "FAIL");
      os << line << "  | " << c.anchor << "\n";
    }
  }
  for (const std::string& n : r.notes) os << "note: " << n << "\n";
  os << (r.pass ? "ALL CHECKS PASS" : "CHECK FAILURES PRESENT") << "\n";
  os << "timestamp " << r.timestamp << "\n";
  return os.str();
}

}  // namespace contactgeo
