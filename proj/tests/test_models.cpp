#include <cmath>
#include <cstddef>

#include "doctest.h"

#include "contactgeo/curvature.hpp"
#include "contactgeo/models.hpp"
#include "contactgeo/prng.hpp"

using namespace contactgeo;

TEST_CASE("calibration isolates the canonical configuration") {
  CalibrationResult cal = calibrate_heisenberg();
  CHECK(cal.lambda == 0.25);
  CHECK(cal.mu == 0.25);
  CHECK(cal.flags.pairing_axis == 3);
  CHECK(cal.flags.pairing_sign == -1);
  CHECK(cal.flags.coframe_scale == 0.5);
  CHECK(cal.flags.exterior_weight == 0.5);
  CHECK(cal.residual <= 1e-8);
  CHECK(cal.runner_up > 1e-3);
  CHECK(!cal.rejected.empty());
  for (const CalibrationCandidate& c : cal.rejected) CHECK(c.residual > 1e-3);
}

TEST_CASE("calibration is deterministic") {
  CalibrationResult a = calibrate_heisenberg();
  CalibrationResult b = calibrate_heisenberg();
  CHECK(a.residual == b.residual);
  CHECK(a.runner_up == b.runner_up);
  CHECK(a.rejected.size() == b.rejected.size());
}

TEST_CASE("the validation gate refuses detuned scales") {
  CHECK_THROWS_AS(heisenberg_model(0.5, 0.25), ModelError);
  CHECK_THROWS_AS(heisenberg_model(0.25, 0.5), ModelError);
  ModelInstance m = heisenberg_model(0.25, 0.25);
  CHECK(m.name == "heisenberg");
  CHECK(m.bundle.has_value());
  CHECK(m.chart.dim == 6);
  CHECK(structure_law_max_residual(m, 8, 7) <= 1e-10);
}

TEST_CASE("model lookup covers the catalog and rejects strangers") {
  ModelInstance flat = model_by_name("flat-kahler");
  CHECK(flat.name == "flat-kahler");
  CHECK(!flat.bundle.has_value());

  ModelInstance sph = model_by_name("sphere");
  CHECK(sph.name == "sphere");
  CHECK(sph.sphere_dim == 5);
  CHECK(sph.sphere_radius == 1.0);
  CHECK(!sph.bundle.has_value());

  CHECK_THROWS_AS(model_by_name("nonsense"), ContractError);
}

TEST_CASE("sphere construction validates its arguments") {
  CHECK_THROWS_AS(sphere_model(1, 1.0), ContractError);
  CHECK_THROWS_AS(sphere_model(kMaxDim + 1, 1.0), ContractError);
  CHECK_THROWS_AS(sphere_model(5, -1.0), ContractError);
  CHECK_THROWS_AS(sphere_model(5, 0.0), ContractError);
  ModelInstance s2 = sphere_model(2, 2.0);
  CHECK(s2.chart.dim == 2);
  CHECK(s2.sphere_radius == 2.0);
}

TEST_CASE("structure law scan requires a contact bundle") {
  ModelInstance flat = flat_kahler_model();
  CHECK_THROWS_AS(structure_law_max_residual(flat, 2, 1), ContractError);
}

TEST_CASE("horizontal unit draws are reproducible and lawful") {
  ModelInstance m = heisenberg_model(0.25, 0.25);
  SplitMix64 rng(31);
  Point p = sample_point(m.chart, rng);

  Vec a = random_unit_horizontal(m, p, 123);
  Vec b = random_unit_horizontal(m, p, 123);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);

  LeviCivita lc(m.g);
  CurvatureData cd = lc.at(p);
  BundleAtPoint bp = bundle_at(*m.bundle, p);
  CHECK(metric_dot(cd, a, a) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(covec_pair(m.chart.dim, bp.u, a)) <= 1e-10);
  CHECK(std::abs(covec_pair(m.chart.dim, bp.v, a)) <= 1e-10);
}

TEST_CASE("the flat model is metrically trivial") {
  ModelInstance flat = flat_kahler_model();
  LeviCivita lc(flat.g);
  SplitMix64 rng(5);
  Point p = sample_point(flat.chart, rng);
  CurvatureData cd = lc.at(p);
  double worst = 0.0;
  for (double x : cd.gamma) worst = std::max(worst, std::abs(x));
  for (double x : cd.riem) worst = std::max(worst, std::abs(x));
  CHECK(worst <= 1e-12);
  CHECK(std::abs(cd.tau) <= 1e-12);
}
