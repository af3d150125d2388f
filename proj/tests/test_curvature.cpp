#include <cmath>

#include "doctest.h"

#include "contactgeo/contact.hpp"
#include "contactgeo/curvature.hpp"
#include "contactgeo/errors.hpp"
#include "contactgeo/models.hpp"
#include "contactgeo/pointops.hpp"
#include "contactgeo/prng.hpp"

using namespace contactgeo;

TEST_CASE("dual-number Christoffel symbols match the finite-difference oracle") {
  for (const char* name : {"heisenberg", "flat-kahler", "sphere"}) {
    ModelInstance m = model_by_name(name);
    LeviCivita lc(m.g);
    SplitMix64 rng{substream(11u, 0u)};
    for (int it = 0; it < 4; ++it) {
      Point p = sample_point(m.chart, rng);
      CurvatureData cd = lc.at(p);
      auto fd = christoffel_fd(m.g, p, 1e-4);
      for (int k = 0; k < cd.dim; ++k)
        for (int i = 0; i < cd.dim; ++i)
          for (int j = 0; j < cd.dim; ++j) {
            double a = cd.gamma[idx3(k, i, j)];
            double rel = std::abs(a - fd[idx3(k, i, j)]) / (1.0 + std::abs(a));
            CHECK(rel <= 1e-5);
          }
    }
  }
}

TEST_CASE("r04 is the metric lowering of the endomorphism-valued curvature") {
  ModelInstance m = model_by_name("heisenberg");
  LeviCivita lc(m.g);
  SplitMix64 rng{substream(12u, 0u)};
  Point p = sample_point(m.chart, rng);
  CurvatureData cd = lc.at(p);
  for (int i = 0; i < cd.dim; ++i)
    for (int j = 0; j < cd.dim; ++j)
      for (int k = 0; k < cd.dim; ++k)
        for (int mm = 0; mm < cd.dim; ++mm) {
          double low = 0.0;
          for (int l = 0; l < cd.dim; ++l)
            low += cd.riem[idx4(i, j, k, l)] * cd.g[idx2(l, mm)];
          CHECK(cd.r04[idx4(i, j, k, mm)] == doctest::Approx(low).epsilon(1e-12));
        }
}

TEST_CASE("field-level covariant derivative agrees with the cached point route") {
  ModelInstance m = model_by_name("heisenberg");
  VectorField y = VectorField::zero(6);
  y[0] = ScalarField::coordinate(2) * ScalarField::coordinate(2);
  y[3] = ScalarField::coordinate(0) * ScalarField::coordinate(1);
  y[4] = ScalarField::coordinate(5);
  const double xv[6] = {0.2, -0.5, 0.7, 0.1, -0.3, 0.4};
  VectorField x = constant_vector(std::span<const double>(xv, 6));

  VectorField nab = covariant_derivative(m.g, x, y);
  const Point p = {0.3, -0.2, 0.5, -0.4, 0.1, 0.6};
  auto field_route = eval_vector(nab, p);

  LeviCivita lc(m.g);
  CurvatureData cd = lc.at(p);
  std::array<Vec, kMaxDim> jets = eval_vector_jet1(y, p);
  Vec val = eval_vector(y, p);
  Vec xd{};
  for (int i = 0; i < 6; ++i) xd[i] = xv[i];
  Vec point_route = nabla_vector_point(cd, jets, val, xd);

  for (int i = 0; i < 6; ++i)
    CHECK(field_route[static_cast<size_t>(i)] ==
          doctest::Approx(point_route[static_cast<size_t>(i)]).epsilon(1e-10));
}

TEST_CASE("space form constants") {
  ModelInstance m = model_by_name("sphere");
  LeviCivita lc(m.g);
  SplitMix64 rng{substream(13u, 0u)};
  Point p = sample_point(m.chart, rng);
  CurvatureData cd = lc.at(p);
  CHECK(cd.tau == doctest::Approx(20.0).epsilon(1e-10));

  ModelInstance f = model_by_name("flat-kahler");
  LeviCivita lcf(f.g);
  Point q = sample_point(f.chart, rng);
  CurvatureData cdf = lcf.at(q);
  CHECK(std::abs(cdf.tau) <= 1e-12);
  for (double v : cdf.riem) CHECK(std::abs(v) <= 1e-12);
}

TEST_CASE("sectional curvature rejects a degenerate plane") {
  ModelInstance m = model_by_name("sphere");
  LeviCivita lc(m.g);
  Point p = {0.1, 0.2, 0.3, 0.1, -0.2};
  CurvatureData cd = lc.at(p);
  Vec x{};
  x[0] = 1.0;
  Vec y = 2.0 * x;
  CHECK_THROWS_AS((void)sectional(cd, x, y), ContractError);
}

TEST_CASE("a singular metric is rejected") {
  MetricTensor g = MetricTensor::zero(2);
  g(0, 0) = ScalarField::coordinate(0);
  g(1, 1) = ScalarField::constant(1.0);
  LeviCivita lc(g);
  const Point origin = {0.0, 0.0};
  CHECK_THROWS_AS((void)lc.at(origin), DegenerateMetricError);
}

TEST_CASE("b_tensor reductions and linearity") {
  ModelInstance m = model_by_name("heisenberg");
  LeviCivita lc(m.g);
  SplitMix64 rng{substream(14u, 0u)};
  Point p = sample_point(m.chart, rng);
  CurvatureData cd = lc.at(p);

  Vec x{}, y{}, z{}, w{};
  for (int i = 0; i < 6; ++i) {
    x[i] = rng.next_symmetric();
    y[i] = rng.next_symmetric();
    z[i] = rng.next_symmetric();
    w[i] = rng.next_symmetric();
  }

  BCoefficients zero;
  zero.name = "zero";
  CHECK(b_tensor(cd, zero, x, y, z, w) == 0.0);

  BCoefficients pure;
  pure.name = "riemann";
  pure.a[0] = 1.0;
  CHECK(b_tensor(cd, pure, x, y, z, w) ==
        doctest::Approx(r04_contract(cd, x, y, z, w)).epsilon(1e-14));

  BCoefficients c1, c2, sum;
  for (int i = 0; i < 11; ++i) {
    c1.a[static_cast<size_t>(i)] = rng.next_symmetric();
    c2.a[static_cast<size_t>(i)] = rng.next_symmetric();
    sum.a[static_cast<size_t>(i)] =
        c1.a[static_cast<size_t>(i)] + c2.a[static_cast<size_t>(i)];
  }
  double lhs = b_tensor(cd, sum, x, y, z, w);
  double rhs = b_tensor(cd, c1, x, y, z, w) + b_tensor(cd, c2, x, y, z, w);
  CHECK(std::abs(lhs - rhs) <= 1e-10);
}

TEST_CASE("preset coefficient vectors pass their oracles") {
  const int n = 6;
  BCoefficients conf = b_preset("conformal", n);
  BCoefficients quasi = b_preset("quasi-conformal", n, 1.0, -1.0 / (n - 2));
  for (int i = 0; i < 11; ++i)
    CHECK(quasi.a[static_cast<size_t>(i)] ==
          doctest::Approx(conf.a[static_cast<size_t>(i)]).epsilon(1e-14));

  // Conharmonic = conformal with the scalar-curvature part removed.
  BCoefficients conh = b_preset("conharmonic", n);
  ModelInstance m = model_by_name("heisenberg");
  LeviCivita lc(m.g);
  SplitMix64 rng{substream(15u, 0u)};
  Point p = sample_point(m.chart, rng);
  CurvatureData cd = lc.at(p);
  Vec x{}, y{}, z{}, w{};
  for (int i = 0; i < 6; ++i) {
    x[i] = rng.next_symmetric();
    y[i] = rng.next_symmetric();
    z[i] = rng.next_symmetric();
    w[i] = rng.next_symmetric();
  }
  double diff = b_tensor(cd, conf, x, y, z, w) -
                cd.tau * (conf.a[8] * metric_dot(cd, x, w) * metric_dot(cd, y, z) +
                          conf.a[9] * metric_dot(cd, x, z) * metric_dot(cd, y, w));
  CHECK(b_tensor(cd, conh, x, y, z, w) == doctest::Approx(diff).epsilon(1e-12));

  CHECK_THROWS_AS((void)b_preset("mystery", n), ContractError);
  CHECK_THROWS_AS((void)b_preset("conformal", 2), ContractError);
}

TEST_CASE("first-slot contraction identity for arbitrary coefficients") {
  // sum_a B(E_a,Y,Z,E_a) = rho(Y,Z)(a0+a1+n a2+a3+a4+a6+a7)
  //                        + g(Y,Z) tau (a5+n a8+a9+a10)
  ModelInstance m = model_by_name("heisenberg");
  const int n = m.chart.dim;
  LeviCivita lc(m.g);
  SplitMix64 rng{substream(16u, 0u)};
  Point p = sample_point(m.chart, rng);
  CurvatureData cd = lc.at(p);

  BCoefficients c;
  for (int i = 0; i < 11; ++i) c.a[static_cast<size_t>(i)] = rng.next_symmetric();
  Vec y{}, z{};
  for (int i = 0; i < n; ++i) {
    y[i] = rng.next_symmetric();
    z[i] = rng.next_symmetric();
  }

  double tr = 0.0;
  for (int a = 0; a < n; ++a) {
    Vec ea{};
    for (int i = 0; i < n; ++i) ea[i] = cd.frame[idx2(a, i)];
    tr += b_tensor(cd, c, ea, y, z, ea);
  }
  double rho_coef = c.a[0] + c.a[1] + n * c.a[2] + c.a[3] + c.a[4] + c.a[6] +
                    c.a[7];
  double g_coef = c.a[5] + n * c.a[8] + c.a[9] + c.a[10];
  double want = ricci_pair(cd, y, z) * rho_coef +
                metric_dot(cd, y, z) * cd.tau * g_coef;
  CHECK(tr == doctest::Approx(want).epsilon(1e-10));
}
