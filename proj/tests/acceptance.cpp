// Acceptance gate: one line per criterion, exit 0 only if every criterion
// passes.  Tolerances are pinned here, independent of any runtime knobs.
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "json.hpp"

#include "contactgeo/models.hpp"
#include "contactgeo/report.hpp"
#include "contactgeo/suites.hpp"

using namespace contactgeo;

namespace {

int g_failures = 0;

void verdict(int n, bool ok, const char* what) {
  std::printf("criterion %2d: %s  %s\n", n, ok ? "PASS" : "FAIL", what);
  if (!ok) ++g_failures;
}

const CheckResult* find_check(const SuiteResult& r, const std::string& id) {
  for (const CheckResult& c : r.checks)
    if (c.id == id) return &c;
  return nullptr;
}

bool check_passes(const SuiteResult& r, const std::string& id) {
  const CheckResult* c = find_check(r, id);
  return c != nullptr && c->pass;
}

SuiteResult run64(const ModelInstance& m, const std::string& suite) {
  SuiteConfig cfg;  // 64 points, seed 42, tol 1e-8
  return run_suite(m, suite, cfg);
}

}  // namespace

int main() {
  try {
    ModelInstance flat = flat_kahler_model();
    ModelInstance sphere = sphere_model(5, 1.0);
    ModelInstance heis = heisenberg_model(0.25, 0.25);

    // 1. Engine gate: the flat model has vanishing curvature data at 1e-10
    //    and the unit round 5-sphere hits sectional 1 at 1e-8 on 64 sampled
    //    planes and scalar curvature 20 at 1e-6.
    {
      SuiteResult fe = run64(flat, "engine-calibration");
      SuiteResult se = run64(sphere, "engine-calibration");
      bool ok = check_passes(fe, "eng.flat_gamma") &&
                check_passes(fe, "eng.flat_riemann") &&
                check_passes(fe, "eng.flat_ricci") &&
                check_passes(fe, "eng.flat_tau") &&
                check_passes(se, "eng.sphere_sectional") &&
                check_passes(se, "eng.sphere_tau") && fe.pass && se.pass;
      verdict(1, ok, "engine gate on the flat and round control geometries");
    }

    // 2. Calibration isolates exactly one configuration at 1e-8 with every
    //    rejected configuration missing by more than 1e-3.
    {
      bool ok = false;
      try {
        CalibrationResult cal = calibrate_heisenberg();
        ok = cal.residual <= 1e-8 && cal.runner_up > 1e-3 &&
             cal.lambda == 0.25 && cal.mu == 0.25 &&
             cal.flags.pairing_axis == 3 && cal.flags.pairing_sign == -1;
      } catch (const std::exception&) {
        ok = false;
      }
      verdict(2, ok, "scale and sign calibration isolates one configuration");
    }

    // 3. Pointwise structure laws at 64 seeded points, residuals <= 1e-8.
    verdict(3, run64(heis, "structure-laws").pass,
            "frame algebra and structure tensor laws");

    // 4. Covariant derivative laws of the calibrated model: the closed-form
    //    derivative rules for G, H, J, U, V, the vanishing connection form,
    //    and the exterior derivative laws, all <= 1e-8.
    verdict(4, run64(heis, "sasakian-definition").pass,
            "covariant derivative and exterior derivative laws");

    // 5. Torsion tensors vanish on the required slots at 1e-8 while the
    //    complementary slots witness magnitude >= 1e-3.
    {
      SuiteResult nr = run64(heis, "normality");
      bool ok = nr.pass && check_passes(nr, "norm.ik_probe") &&
                check_passes(nr, "norm.s_horizontal") &&
                check_passes(nr, "norm.t_horizontal") &&
                check_passes(nr, "norm.s_u") && check_passes(nr, "norm.t_v");
      verdict(5, ok, "torsion slots vanish and the complementary probe fires");
    }

    // 6. Ten vertical curvature identities at 1e-8 plus the fifteen-member
    //    invariance and plane-expansion block at 1e-7.
    {
      bool ok = run64(heis, "curvature-identities").pass &&
                run64(heis, "gh-curvature-symmetries").pass;
      verdict(6, ok, "curvature identities and invariance block");
    }

    // 7. Ricci constants and structure invariance: vertical values 4, mixed
    //    values through u and v, invariance under G and H at 1e-7.
    verdict(7, run64(heis, "ricci-identities").pass,
            "Ricci constants and structure invariance");

    // 8. Sectional constants: vertical plane 0, mixed planes 1, the
    //    horizontal triple sum and rotation-invariant plane relations at
    //    their pinned constants.
    {
      SuiteResult sr = run64(heis, "sectional-relations");
      bool ok = check_passes(sr, "sect.k_uv") && check_passes(sr, "sect.k_xu") &&
                check_passes(sr, "sect.triple_sum") &&
                check_passes(sr, "sect.gh_vs_j") &&
                check_passes(sr, "sect.gh_spread") && sr.pass;
      verdict(8, ok, "sectional constants and rotation independence");
    }

    // 9. Coefficient presets pass their oracles (conformal first-slot trace,
    //    space-form vanishing of the concircular and projective tensors) and
    //    every flatness probe produces its witness, with the constant-trace
    //    replay applicable exactly when its divisions exist.
    {
      SuiteResult fp = run64(heis, "flatness-probes");
      SuiteResult se = run64(sphere, "engine-calibration");
      bool witnesses =
          check_passes(fp, "flat.nonflat_witness") &&
          check_passes(fp, "flat.b_witness_riemann") &&
          check_passes(fp, "flat.b_witness_conformal") &&
          check_passes(fp, "flat.b_witness_conharmonic") &&
          check_passes(fp, "flat.b_witness_concircular") &&
          check_passes(fp, "flat.b_witness_projective") &&
          check_passes(fp, "flat.b_witness_quasi_conformal") &&
          check_passes(fp, "flat.replay_riemann") &&
          check_passes(fp, "flat.replay_conformal") &&
          check_passes(fp, "flat.replay_conharmonic") &&
          check_passes(fp, "flat.replay_quasi_conformal") &&
          check_passes(fp, "flat.ghb_witness_g") &&
          check_passes(fp, "flat.ghb_witness_h");
      bool oracles = check_passes(fp, "flat.conformal_trace") &&
                     check_passes(se, "eng.sphere_concircular") &&
                     check_passes(se, "eng.sphere_projective");
      RicciReplay conf = b_flat_ricci_replay(b_preset("conformal", 6), 1, -8.0);
      RicciReplay conc = b_flat_ricci_replay(b_preset("concircular", 6), 1, -8.0);
      RicciReplay proj = b_flat_ricci_replay(b_preset("projective", 6), 1, -8.0);
      bool replays = conf.applicable && !conc.applicable && !proj.applicable;
      verdict(9, witnesses && oracles && replays && fp.pass,
              "coefficient presets, flatness witnesses, replay gating");
    }

    // 10. Jet-based connection coefficients match the central-difference
    //     oracle to 1e-5 relative at 16 points on every model.
    {
      SuiteConfig cfg;
      cfg.points = 16;
      bool ok = true;
      for (const ModelInstance* m : {&heis, &flat, &sphere})
        ok = ok && check_passes(run_suite(*m, "engine-calibration", cfg),
                                "eng.christoffel_fd");
      verdict(10, ok, "independent finite-difference connection oracle");
    }

    // 11. Two identical runs agree byte for byte once the timestamp field is
    //     dropped, and parallel execution reproduces the serial bytes.
    {
      RunConfig cfg;  // heisenberg, all suites, 64 points, seed 42
      RunReport a = run_verification(cfg);
      RunReport b = run_verification(cfg);
      RunConfig par = cfg;
      par.exec = Exec::parallel;
      RunReport c = run_verification(par);
      nlohmann::json ja = nlohmann::json::parse(render_json(a));
      nlohmann::json jb = nlohmann::json::parse(render_json(b));
      nlohmann::json jc = nlohmann::json::parse(render_json(c));
      ja.erase("timestamp");
      jb.erase("timestamp");
      jc.erase("timestamp");
      bool ok = ja.dump() == jb.dump() && ja.dump() == jc.dump() && a.pass;
      verdict(11, ok, "byte-identical reports modulo timestamp");
    }
  } catch (const std::exception& e) {
    std::printf("acceptance aborted: %s\n", e.what());
    return 1;
  }

  if (g_failures == 0) {
    std::printf("acceptance: all 11 criteria pass\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failing\n", g_failures);
  return 1;
}
