#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"

#include "contactgeo/models.hpp"
#include "contactgeo/suites.hpp"

using namespace contactgeo;

namespace {

std::vector<std::string> ids_of(const std::vector<CheckDef>& defs) {
  std::vector<std::string> out;
  out.reserve(defs.size());
  for (const CheckDef& d : defs) out.push_back(d.id);
  return out;
}

const CheckResult& find_check(const SuiteResult& r, const std::string& id) {
  for (const CheckResult& c : r.checks)
    if (c.id == id) return c;
  REQUIRE_MESSAGE(false, "missing check ", id);
  static CheckResult dummy;
  return dummy;
}

}  // namespace

TEST_CASE("suite catalog order is fixed") {
  std::vector<std::string> expected = {
      "engine-calibration",   "structure-laws",
      "sasakian-definition",  "normality",
      "curvature-identities", "gh-curvature-symmetries",
      "sectional-relations",  "ricci-identities",
      "flatness-probes"};
  CHECK(suite_names() == expected);
}

TEST_CASE("suite availability follows the bundle") {
  ModelInstance h = heisenberg_model(0.25, 0.25);
  CHECK(suites_for(h) == suite_names());

  ModelInstance flat = flat_kahler_model();
  CHECK(suites_for(flat) == std::vector<std::string>{"engine-calibration"});

  ModelInstance sph = sphere_model(5, 1.0);
  CHECK(suites_for(sph) == std::vector<std::string>{"engine-calibration"});
}

TEST_CASE("check catalog is complete per suite") {
  ModelInstance h = heisenberg_model(0.25, 0.25);

  CHECK(ids_of(suite_checks(h, "engine-calibration")) ==
        std::vector<std::string>{
            "eng.metric_compat", "eng.torsion_free", "eng.bianchi1",
            "eng.r04_skew_front", "eng.r04_skew_back", "eng.r04_pair",
            "eng.ricci_routes", "eng.ricci_sym", "eng.christoffel_fd",
            "eng.frame_orthonormal", "eng.ginv"});

  CHECK(ids_of(suite_checks(h, "structure-laws")) ==
        std::vector<std::string>{
            "struct.h_eq_gj", "struct.gj_anti", "struct.g_sq", "struct.h_sq",
            "struct.j_sq", "struct.g_skew", "struct.h_skew", "struct.j_compat",
            "struct.g_compat", "struct.h_compat", "struct.g_kernel",
            "struct.h_kernel", "struct.j_vertical", "struct.g_coker",
            "struct.h_coker", "struct.uv_j", "struct.duality", "struct.norms",
            "struct.hg", "struct.gh", "struct.jh"});

  CHECK(ids_of(suite_checks(h, "sasakian-definition")) ==
        std::vector<std::string>{
            "sas.nabla_g", "sas.nabla_h", "sas.nabla_j", "sas.nabla_u",
            "sas.nabla_v", "sas.sigma", "sas.du", "sas.dv",
            "sas.vertical_nabla"});

  CHECK(ids_of(suite_checks(h, "normality")) ==
        std::vector<std::string>{
            "norm.s_horizontal", "norm.t_horizontal", "norm.s_u", "norm.t_v",
            "norm.s_xv", "norm.t_xu", "norm.ik_probe", "norm.thm_g",
            "norm.thm_h", "norm.nabla_j_general", "norm.j_integrable",
            "norm.dsigma"});

  CHECK(ids_of(suite_checks(h, "curvature-identities")) ==
        std::vector<std::string>{
            "curv.r_uv_v", "curv.r_xu_u", "curv.r_xv_v", "curv.r_xu_v",
            "curv.r_xv_u", "curv.r_xy_u", "curv.r_xy_v", "curv.r_uv_x",
            "curv.r_xu_y", "curv.r_xv_y"});

  CHECK(ids_of(suite_checks(h, "gh-curvature-symmetries")) ==
        std::vector<std::string>{
            "ghsym.g_invariance", "ghsym.h_invariance", "ghsym.triple_sum",
            "ghsym.g_plane_expansion", "ghsym.h_plane_expansion",
            "ghsym.jg_mixed", "ghsym.jh_mixed", "ghsym.gh_plane",
            "ghsym.gj_plane", "ghsym.j_plane", "ghsym.j_rotation",
            "ghsym.j_exchange", "ghsym.j_cross", "ghsym.j_bianchi",
            "ghsym.j_sum"});

  CHECK(ids_of(suite_checks(h, "sectional-relations")) ==
        std::vector<std::string>{
            "sect.k_uv", "sect.k_xu", "sect.triple_sum", "sect.gh_vs_j",
            "sect.gh_spread", "sect.gh_plus", "sect.gh_const"});

  CHECK(ids_of(suite_checks(h, "ricci-identities")) ==
        std::vector<std::string>{
            "ric.uu_vv", "ric.uv", "ric.xu", "ric.xv", "ric.g_invariance",
            "ric.h_invariance", "ric.tau"});

  CHECK(ids_of(suite_checks(h, "flatness-probes")) ==
        std::vector<std::string>{
            "flat.nonflat_witness", "flat.r_xuux_unit", "flat.b_witness_riemann",
            "flat.b_witness_conformal", "flat.b_witness_conharmonic",
            "flat.b_witness_concircular", "flat.b_witness_projective",
            "flat.b_witness_quasi_conformal", "flat.replay_riemann",
            "flat.replay_conformal", "flat.replay_conharmonic",
            "flat.replay_quasi_conformal", "flat.gh_b_equality_riemann",
            "flat.gh_b_equality_conformal", "flat.ghb_witness_g",
            "flat.ghb_witness_h", "flat.conformal_trace"});
}

TEST_CASE("every check carries a unique id and a nonempty anchor") {
  ModelInstance h = heisenberg_model(0.25, 0.25);
  std::vector<std::string> seen;
  for (const std::string& s : suites_for(h))
    for (const CheckDef& d : suite_checks(h, s)) {
      CHECK(!d.id.empty());
      CHECK(!d.anchor.empty());
      CHECK(d.fn != nullptr);
      for (const std::string& prev : seen) CHECK(prev != d.id);
      seen.push_back(d.id);
    }
  CHECK(seen.size() == 109);
}

TEST_CASE("engine suite gains exact-value checks on control geometries") {
  ModelInstance sph = sphere_model(5, 1.0);
  std::vector<std::string> sph_ids = ids_of(suite_checks(sph, "engine-calibration"));
  CHECK(sph_ids.size() == 16);
  CHECK(sph_ids[11] == "eng.sphere_sectional");
  CHECK(sph_ids[12] == "eng.sphere_tau");
  CHECK(sph_ids[13] == "eng.sphere_ricci");
  CHECK(sph_ids[14] == "eng.sphere_concircular");
  CHECK(sph_ids[15] == "eng.sphere_projective");

  ModelInstance flat = flat_kahler_model();
  std::vector<std::string> flat_ids = ids_of(suite_checks(flat, "engine-calibration"));
  CHECK(flat_ids.size() == 15);
  CHECK(flat_ids[11] == "eng.flat_gamma");
  CHECK(flat_ids[12] == "eng.flat_riemann");
  CHECK(flat_ids[13] == "eng.flat_ricci");
  CHECK(flat_ids[14] == "eng.flat_tau");
}

TEST_CASE("bundle suites are refused without a bundle") {
  ModelInstance flat = flat_kahler_model();
  CHECK_THROWS_WITH_AS(suite_checks(flat, "curvature-identities"),
                       doctest::Contains("no contact bundle"), SuiteError);
  CHECK_THROWS_WITH_AS(suite_checks(flat, "mystery-suite"),
                       doctest::Contains("unknown suite"), SuiteError);
}

TEST_CASE("suite runs are deterministic and execution independent") {
  ModelInstance h = heisenberg_model(0.25, 0.25);
  SuiteConfig cfg;
  cfg.points = 8;
  cfg.seed = 77;

  SuiteResult a = run_suite(h, "structure-laws", cfg, Exec::serial);
  SuiteResult b = run_suite(h, "structure-laws", cfg, Exec::serial);
  SuiteResult c = run_suite(h, "structure-laws", cfg, Exec::parallel);

  REQUIRE(a.checks.size() == b.checks.size());
  REQUIRE(a.checks.size() == c.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].id == b.checks[i].id);
    CHECK(a.checks[i].max_value == b.checks[i].max_value);
    CHECK(a.checks[i].mean_value == b.checks[i].mean_value);
    CHECK(a.checks[i].max_value == c.checks[i].max_value);
    CHECK(a.checks[i].mean_value == c.checks[i].mean_value);
    CHECK(a.checks[i].pass == c.checks[i].pass);
    CHECK(a.checks[i].mean_value <= a.checks[i].max_value + 1e-300);
  }
  CHECK(a.pass);
  CHECK(c.pass);
}

TEST_CASE("pinned absolute bounds ignore the configured tolerance") {
  ModelInstance h = heisenberg_model(0.25, 0.25);
  SuiteConfig cfg;
  cfg.points = 4;
  cfg.tol = 1e-2;
  SuiteResult r = run_suite(h, "engine-calibration", cfg);
  CHECK(find_check(r, "eng.christoffel_fd").threshold == 1e-5);
  CHECK(find_check(r, "eng.metric_compat").threshold == 1e-2);
}

TEST_CASE("witness checks pass by exceeding their floor") {
  ModelInstance h = heisenberg_model(0.25, 0.25);
  SuiteConfig cfg;
  cfg.points = 8;
  SuiteResult r = run_suite(h, "flatness-probes", cfg);
  const CheckResult& w = find_check(r, "flat.nonflat_witness");
  CHECK(w.kind == CheckKind::witness);
  CHECK(w.threshold == 1e-3);
  CHECK(w.max_value >= w.threshold);
  CHECK(w.pass);
  const CheckResult& res = find_check(r, "flat.r_xuux_unit");
  CHECK(res.kind == CheckKind::residual);
  CHECK(res.pass);
  CHECK(r.pass);
}

TEST_CASE("suite configuration is validated") {
  ModelInstance h = heisenberg_model(0.25, 0.25);
  SuiteConfig bad;
  bad.points = 0;
  CHECK_THROWS_AS(run_suite(h, "structure-laws", bad), ContractError);
  SuiteConfig bad2;
  bad2.tol = 0.0;
  CHECK_THROWS_AS(run_suite(h, "structure-laws", bad2), ContractError);
}

TEST_CASE("engine suite passes on the control geometries") {
  SuiteConfig cfg;
  cfg.points = 8;
  CHECK(run_suite(sphere_model(5, 1.0), "engine-calibration", cfg).pass);
  CHECK(run_suite(flat_kahler_model(), "engine-calibration", cfg).pass);
}

TEST_CASE("constant-trace replay applies exactly when its divisions exist") {
  const int n = 6;
  const double tau = -8.0;

  RicciReplay conf = b_flat_ricci_replay(b_preset("conformal", n), 1, tau);
  CHECK(conf.applicable);
  CHECK(conf.rho_hat == doctest::Approx(-1.6).epsilon(1e-12));

  RicciReplay conh = b_flat_ricci_replay(b_preset("conharmonic", n), 1, tau);
  CHECK(conh.applicable);
  CHECK(conh.rho_hat == doctest::Approx(0.0).epsilon(1e-12));

  RicciReplay conc = b_flat_ricci_replay(b_preset("concircular", n), 1, tau);
  CHECK(!conc.applicable);
  CHECK(conc.reason.find("a5") != std::string::npos);

  RicciReplay proj = b_flat_ricci_replay(b_preset("projective", n), 1, tau);
  CHECK(!proj.applicable);
  CHECK(proj.reason.find("a5") != std::string::npos);

  BCoefficients degenerate;
  degenerate.name = "degenerate";
  degenerate.a[0] = 1.0;
  degenerate.a[1] = -1.0;
  degenerate.a[5] = 1.0;
  RicciReplay deg = b_flat_ricci_replay(degenerate, 1, tau);
  CHECK(!deg.applicable);
  CHECK(deg.reason.find("a0 + a1") != std::string::npos);

  // The hypothetical constant tracks the coefficients; the model's Ricci
  // values do not, which is what makes the contradiction a real exhibit.
  BCoefficients shifted = b_preset("conformal", n);
  shifted.a[8] += 0.125;
  RicciReplay moved = b_flat_ricci_replay(shifted, 1, tau);
  CHECK(moved.applicable);
  CHECK(moved.rho_hat != conf.rho_hat);
}
