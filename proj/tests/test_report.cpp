#include <string>

#include "doctest.h"
#include "json.hpp"

#include "contactgeo/report.hpp"

using namespace contactgeo;
using nlohmann::json;

TEST_CASE("sphere engine report carries no calibration block") {
  RunConfig cfg;
  cfg.model = "sphere";
  cfg.suites = {"engine-calibration"};
  cfg.points = 8;
  RunReport rep = run_verification(cfg);
  CHECK(rep.pass);
  CHECK(!rep.has_calibration);
  REQUIRE(rep.suites.size() == 1);
  CHECK(rep.suites[0].suite == "engine-calibration");
  CHECK(rep.suites[0].checks.size() == 16);

  json j = json::parse(render_json(rep));
  CHECK(j.at("schema_version").get<int>() == 1);
  CHECK(j.at("model").get<std::string>() == "sphere");
  CHECK(j.at("seed").get<std::uint64_t>() == 42);
  CHECK(j.at("tol").get<double>() == 1e-8);
  CHECK(j.at("points").get<int>() == 8);
  CHECK(j.at("calibration").is_null());
  CHECK(j.at("pass").get<bool>());
  CHECK(j.at("timestamp").is_string());
  CHECK(j.at("notes").is_array());

  const json& checks = j.at("checks");
  REQUIRE(checks.is_array());
  CHECK(checks.size() == 16);
  CHECK(j.at("checks_total").get<int>() == 16);
  CHECK(j.at("checks_passed").get<int>() == 16);
  for (const json& c : checks) {
    CHECK(c.contains("id"));
    CHECK(c.contains("suite"));
    CHECK(c.contains("anchor"));
    CHECK(c.contains("kind"));
    CHECK(c.contains("threshold"));
    CHECK(c.contains("max_residual"));
    CHECK(c.contains("mean_residual"));
    CHECK(c.contains("pass"));
  }
}

TEST_CASE("group model report records the calibration") {
  RunConfig cfg;
  cfg.points = 4;
  cfg.suites = {"structure-laws"};
  RunReport rep = run_verification(cfg);
  CHECK(rep.pass);
  CHECK(rep.has_calibration);
  CHECK(rep.calibration.lambda == 0.25);
  CHECK(rep.calibration.mu == 0.25);

  json j = json::parse(render_json(rep));
  const json& cal = j.at("calibration");
  REQUIRE(!cal.is_null());
  CHECK(cal.at("lambda").get<double>() == 0.25);
  CHECK(cal.at("mu").get<double>() == 0.25);
  CHECK(cal.at("flags").at("pairing_axis").get<int>() == 3);
  CHECK(cal.at("flags").at("pairing_sign").get<int>() == -1);
  CHECK(cal.at("flags").at("coframe_scale").get<double>() == 0.5);
  CHECK(cal.at("flags").at("exterior_weight").get<double>() == 0.5);
  CHECK(cal.at("residual").get<double>() <= 1e-8);
  CHECK(cal.at("runner_up").get<double>() > 1e-3);
  CHECK(cal.at("rejected_count").get<int>() > 0);

  std::string text = render_text(rep);
  CHECK(text.find("[structure-laws] PASS") != std::string::npos);
  CHECK(text.find("ALL CHECKS PASS") != std::string::npos);
  CHECK(text.find("struct.h_eq_gj") != std::string::npos);
}

TEST_CASE("reports agree byte for byte apart from the timestamp") {
  RunConfig cfg;
  cfg.points = 4;
  cfg.suites = {"structure-laws", "sectional-relations"};

  RunReport r1 = run_verification(cfg);
  RunReport r2 = run_verification(cfg);
  RunConfig par = cfg;
  par.exec = Exec::parallel;
  RunReport r3 = run_verification(par);

  json j1 = json::parse(render_json(r1));
  json j2 = json::parse(render_json(r2));
  json j3 = json::parse(render_json(r3));
  j1.erase("timestamp");
  j2.erase("timestamp");
  j3.erase("timestamp");
  CHECK(j1.dump() == j2.dump());
  CHECK(j1.dump() == j3.dump());
}

TEST_CASE("unknown names are rejected up front") {
  RunConfig bad_model;
  bad_model.model = "torus";
  CHECK_THROWS_AS(run_verification(bad_model), ContractError);

  RunConfig bad_suite;
  bad_suite.suites = {"structure-laws", "mystery-suite"};
  CHECK_THROWS_AS(run_verification(bad_suite), SuiteError);

  RunConfig no_bundle;
  no_bundle.model = "flat-kahler";
  no_bundle.suites = {"curvature-identities"};
  CHECK_THROWS_WITH_AS(run_verification(no_bundle),
                       doctest::Contains("no contact bundle"), SuiteError);
}

TEST_CASE("the all token expands to every supported suite") {
  RunConfig cfg;
  cfg.model = "flat-kahler";
  cfg.suites = {"all"};
  cfg.points = 4;
  RunReport rep = run_verification(cfg);
  REQUIRE(rep.suites.size() == 1);
  CHECK(rep.suites[0].suite == "engine-calibration");
  CHECK(!rep.has_calibration);
}
