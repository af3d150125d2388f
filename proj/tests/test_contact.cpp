#include <array>
#include <cmath>
#include <vector>

#include "doctest.h"

#include "contactgeo/contact.hpp"
#include "contactgeo/models.hpp"
#include "contactgeo/prng.hpp"

using namespace contactgeo;

namespace {

Vec sample_vec(int d, SplitMix64& rng) {
  Vec x{};
  for (int i = 0; i < d; ++i)
    x[static_cast<std::size_t>(i)] = rng.next_symmetric();
  return x;
}

}  // namespace

TEST_CASE("bundle snapshot satisfies the pointwise frame algebra") {
  ModelInstance m = heisenberg_model(0.25, 0.25);
  REQUIRE(m.bundle.has_value());
  const int d = m.chart.dim;
  SplitMix64 rng(substream(2024, 11));
  for (int trial = 0; trial < 4; ++trial) {
    Point p = sample_point(m.chart, rng);
    BundleAtPoint bp = bundle_at(*m.bundle, p);

    Mat hg = mat_mul(d, bp.G, bp.J);
    CHECK(max_abs(hg - bp.H) <= 1e-12);

    Mat j2 = mat_mul(d, bp.J, bp.J) + mat_identity(d);
    CHECK(max_abs(j2) <= 1e-12);

    CHECK(covec_pair(d, bp.u, bp.U) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(covec_pair(d, bp.v, bp.V) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(covec_pair(d, bp.u, bp.V)) <= 1e-12);
    CHECK(std::abs(covec_pair(d, bp.v, bp.U)) <= 1e-12);

    // G annihilates the vertical pair and u, v annihilate the range of G.
    CHECK(max_abs(mat_apply(d, bp.G, bp.U)) <= 1e-12);
    CHECK(max_abs(mat_apply(d, bp.G, bp.V)) <= 1e-12);
    Vec x = sample_vec(d, rng);
    Vec gx = mat_apply(d, bp.G, x);
    CHECK(std::abs(covec_pair(d, bp.u, gx)) <= 1e-12);
    CHECK(std::abs(covec_pair(d, bp.v, gx)) <= 1e-12);
  }
}

TEST_CASE("horizontal projection reconstructs the input") {
  ModelInstance m = heisenberg_model(0.25, 0.25);
  const int d = m.chart.dim;
  SplitMix64 rng(substream(2024, 12));
  for (int trial = 0; trial < 4; ++trial) {
    Point p = sample_point(m.chart, rng);
    BundleAtPoint bp = bundle_at(*m.bundle, p);
    Vec x = sample_vec(d, rng);
    SplitVector s = horizontal_project_point(bp, x);

    Vec rebuilt = s.horizontal + s.u_coeff * bp.U + s.v_coeff * bp.V;
    CHECK(max_abs(rebuilt - x) <= 1e-12);
    CHECK(std::abs(covec_pair(d, bp.u, s.horizontal)) <= 1e-12);
    CHECK(std::abs(covec_pair(d, bp.v, s.horizontal)) <= 1e-12);
    CHECK(s.u_coeff == doctest::Approx(covec_pair(d, bp.u, x)).epsilon(1e-12));
    CHECK(s.v_coeff == doctest::Approx(covec_pair(d, bp.v, x)).epsilon(1e-12));
  }
}

TEST_CASE("the vertical connection form vanishes on the group model") {
  ModelInstance m = heisenberg_model(0.25, 0.25);
  LeviCivita lc(m.g);
  SplitMix64 rng(substream(2024, 13));
  for (int trial = 0; trial < 3; ++trial) {
    Point p = sample_point(m.chart, rng);
    CurvatureData cd = lc.at(p);
    BundleAtPoint bp = bundle_at(*m.bundle, p);
    CHECK(max_abs(sigma_covector(cd, bp)) <= 1e-10);
    CHECK(std::abs(dsigma_uv_at(m.g, *m.bundle, p)) <= 1e-8);
  }
}

TEST_CASE("random horizontal draws are unit length and horizontal") {
  ModelInstance m = heisenberg_model(0.25, 0.25);
  LeviCivita lc(m.g);
  const int d = m.chart.dim;
  SplitMix64 prng(substream(2024, 14));
  Point p = sample_point(m.chart, prng);
  CurvatureData cd = lc.at(p);
  BundleAtPoint bp = bundle_at(*m.bundle, p);
  SplitMix64 rng(substream(2024, 15));
  for (int trial = 0; trial < 8; ++trial) {
    Vec x = random_horizontal_unit(cd, bp, rng);
    CHECK(metric_dot(cd, x, x) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(covec_pair(d, bp.u, x)) <= 1e-10);
    CHECK(std::abs(covec_pair(d, bp.v, x)) <= 1e-10);
  }
  Vec y = random_unit_vector(cd, rng);
  CHECK(metric_dot(cd, y, y) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("torsion tensors act on the vertical pair by the structure maps") {
  ModelInstance m = heisenberg_model(0.25, 0.25);
  LeviCivita lc(m.g);
  const int d = m.chart.dim;
  SplitMix64 rng(substream(2024, 16));
  for (int trial = 0; trial < 3; ++trial) {
    Point p = sample_point(m.chart, rng);
    CurvatureData cd = lc.at(p);
    BundleAtPoint bp = bundle_at(*m.bundle, p);
    Vec sigma = sigma_covector(cd, bp);
    Vec x = sample_vec(d, rng);

    Vec s_xv = tensor_S_point(cd, bp, sigma, x, bp.V);
    CHECK(max_abs(s_xv - 2.0 * mat_apply(d, bp.H, x)) <= 1e-10);

    Vec t_xu = tensor_T_point(cd, bp, sigma, x, bp.U);
    CHECK(max_abs(t_xu - 2.0 * mat_apply(d, bp.G, x)) <= 1e-10);

    // S vanishes on horizontal pairs and on (X, U); T on (X, V).
    Vec y = random_horizontal_unit(cd, bp, rng);
    Vec h = horizontal_project_point(bp, x).horizontal;
    CHECK(max_abs(tensor_S_point(cd, bp, sigma, h, y)) <= 1e-10);
    CHECK(max_abs(tensor_S_point(cd, bp, sigma, x, bp.U)) <= 1e-10);
    CHECK(max_abs(tensor_T_point(cd, bp, sigma, x, bp.V)) <= 1e-10);
  }
}

TEST_CASE("the complex structure is torsion free on the group model") {
  ModelInstance m = heisenberg_model(0.25, 0.25);
  LeviCivita lc(m.g);
  const int d = m.chart.dim;
  SplitMix64 rng(substream(2024, 17));
  for (int trial = 0; trial < 3; ++trial) {
    Point p = sample_point(m.chart, rng);
    CurvatureData cd = lc.at(p);
    BundleAtPoint bp = bundle_at(*m.bundle, p);
    Vec x = sample_vec(d, rng);
    Vec y = sample_vec(d, rng);
    CHECK(max_abs(nijenhuis_point(cd, bp.J, bp.dJ, x, y)) <= 1e-10);
  }
}

TEST_CASE("covariant derivative laws hold on the calibrated model") {
  ModelInstance m = heisenberg_model(0.25, 0.25);
  LeviCivita lc(m.g);
  const int d = m.chart.dim;
  SplitMix64 rng(substream(2024, 18));
  for (int trial = 0; trial < 3; ++trial) {
    Point p = sample_point(m.chart, rng);
    CurvatureData cd = lc.at(p);
    BundleAtPoint bp = bundle_at(*m.bundle, p);
    Vec sigma = sigma_covector(cd, bp);
    Vec x = sample_vec(d, rng);
    Vec y = sample_vec(d, rng);

    EndResiduals res = sasakian_residuals_point(cd, bp, x, y);
    CHECK(max_abs(res.res_g) <= 1e-10);
    CHECK(max_abs(res.res_h) <= 1e-10);

    CHECK(max_abs(nabla_j_residual_point(cd, bp, x, y)) <= 1e-10);
    CHECK(std::abs(du_law_residual_point(cd, bp, sigma, x, y)) <= 1e-10);
    CHECK(std::abs(dv_law_residual_point(cd, bp, sigma, x, y)) <= 1e-10);
  }
}

TEST_CASE("detuned scales break the covariant derivative laws") {
  // Raw construction skips the validation gate, so the broken configuration
  // can be inspected directly.
  ModelInstance m = heisenberg_model_raw(0.5, 0.25, CalibrationFlags{});
  CHECK(structure_law_max_residual(m, 6, 99) > 1e-2);

  LeviCivita lc(m.g);
  const int d = m.chart.dim;
  SplitMix64 rng(substream(2024, 19));
  Point p = sample_point(m.chart, rng);
  CurvatureData cd = lc.at(p);
  BundleAtPoint bp = bundle_at(*m.bundle, p);
  double worst = 0.0;
  for (int trial = 0; trial < 4; ++trial) {
    Vec x = sample_vec(d, rng);
    Vec y = sample_vec(d, rng);
    EndResiduals res = sasakian_residuals_point(cd, bp, x, y);
    worst = std::max({worst, max_abs(res.res_g), max_abs(res.res_h)});
  }
  CHECK(worst > 1e-2);
}
