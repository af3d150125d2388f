#include <cmath>
#include <vector>

#include "doctest.h"

#include "contactgeo/curvature.hpp"
#include "contactgeo/errors.hpp"
#include "contactgeo/fields.hpp"
#include "contactgeo/models.hpp"

using namespace contactgeo;

namespace {

ScalarField test_scalar() {
  return ScalarField::make([](auto xs) {
    using T = typename decltype(xs)::value_type;
    using std::sqrt;
    T x = xs[0], y = xs[1];
    return x * x * y + sqrt(T(1) + x * x) - T(3) * y;
  });
}

double eval_at(const ScalarField& f, double x, double y) {
  const double p[2] = {x, y};
  return f.at_point(std::span<const double>(p, 2));
}

}  // namespace

TEST_CASE("second-order jets agree with finite differences") {
  ScalarField f = test_scalar();
  const Point p = {0.3, -0.4};
  Jet2Scalar jet = eval_jet2(f, p);

  const double h = 1e-4;
  for (int i = 0; i < 2; ++i) {
    double pp[2] = {p[0], p[1]};
    pp[i] += h;
    double fp = eval_at(f, pp[0], pp[1]);
    pp[i] -= 2 * h;
    double fm = eval_at(f, pp[0], pp[1]);
    CHECK(jet.gradient[i] == doctest::Approx((fp - fm) / (2 * h)).epsilon(1e-7));
  }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      double fpp = eval_at(f, p[0] + h * (i == 0) + h * (j == 0),
                           p[1] + h * (i == 1) + h * (j == 1));
      double fpm = eval_at(f, p[0] + h * (i == 0) - h * (j == 0),
                           p[1] + h * (i == 1) - h * (j == 1));
      double fmp = eval_at(f, p[0] - h * (i == 0) + h * (j == 0),
                           p[1] - h * (i == 1) + h * (j == 1));
      double fmm = eval_at(f, p[0] - h * (i == 0) - h * (j == 0),
                           p[1] - h * (i == 1) - h * (j == 1));
      double fd = (fpp - fpm - fmp + fmm) / (4 * h * h);
      CHECK(jet.hessian[idx2(i, j)] == doctest::Approx(fd).epsilon(1e-5));
    }
}

TEST_CASE("nested partials match the jet hessian") {
  ScalarField f = test_scalar();
  const Point p = {0.3, -0.4};
  Jet2Scalar jet = eval_jet2(f, p);
  ScalarField fxy = partial(partial(f, 0), 1);
  CHECK(fxy.at_point(p) == doctest::Approx(jet.hessian[idx2(0, 1)]));
}

TEST_CASE("exterior derivative of x dy in both weight conventions") {
  OneForm w = OneForm::zero(2);
  w[1] = ScalarField::coordinate(0);
  const Point p = {0.7, 0.2};

  TwoForm half = exterior_d_1form(w);
  auto mh = eval_two_form(half, p);
  CHECK(mh[idx2(0, 1)] == doctest::Approx(0.5));
  CHECK(mh[idx2(1, 0)] == doctest::Approx(-0.5));

  TwoForm full = exterior_d_1form(w, 1.0);
  auto mf = eval_two_form(full, p);
  CHECK(mf[idx2(0, 1)] == doctest::Approx(1.0));
}

TEST_CASE("wedge of 1-forms is the plain antisymmetrization") {
  const double av[2] = {1.0, 2.0};
  const double bv[2] = {-3.0, 5.0};
  OneForm a = constant_one_form(std::span<const double>(av, 2));
  OneForm b = constant_one_form(std::span<const double>(bv, 2));
  TwoForm w = wedge_1forms(a, b);
  const Point p = {0.0, 0.0};
  auto m = eval_two_form(w, p);
  // (a^b)(e0,e1) = a0 b1 - a1 b0 = 5 + 6 = 11.
  CHECK(m[idx2(0, 1)] == doctest::Approx(11.0));
  CHECK(m[idx2(1, 0)] == doctest::Approx(-11.0));
}

TEST_CASE("lie bracket of x d/dy with d/dx") {
  VectorField x = VectorField::zero(2);
  x[1] = ScalarField::coordinate(0);
  const double ev[2] = {1.0, 0.0};
  VectorField y = constant_vector(std::span<const double>(ev, 2));
  VectorField br = lie_bracket(x, y);
  const Point p = {0.4, 0.9};
  auto v = eval_vector(br, p);
  CHECK(v[0] == doctest::Approx(0.0));
  CHECK(v[1] == doctest::Approx(-1.0));
}

TEST_CASE("metric_pair is bitwise symmetric and repeatable") {
  ModelInstance m = model_by_name("heisenberg");
  const double xv[6] = {0.3, -0.7, 0.2, 0.9, -0.4, 0.6};
  const double yv[6] = {-0.5, 0.1, 0.8, -0.2, 0.7, 0.3};
  VectorField x = constant_vector(std::span<const double>(xv, 6));
  VectorField y = constant_vector(std::span<const double>(yv, 6));
  ScalarField xy = metric_pair(m.g, x, y);
  ScalarField yx = metric_pair(m.g, y, x);
  const Point p = {0.1, 0.2, -0.3, 0.4, 0.5, -0.6};
  double a = xy.at_point(p);
  double b = yx.at_point(p);
  double a2 = xy.at_point(p);
  CHECK(a == b);   // exact, not approximate
  CHECK(a == a2);  // pure evaluation
}

TEST_CASE("depth-limited fields refuse a fourth derivative") {
  ScalarField f = ScalarField::make_depth_limited([](auto xs) {
    auto x = xs[0];
    return x * x * x * x;
  });
  ScalarField d3 = partial(partial(partial(f, 0), 0), 0);
  const Point p = {2.0};
  CHECK(d3.at_point(p) == doctest::Approx(48.0));
  ScalarField d4 = partial(d3, 0);
  CHECK_THROWS_AS((void)d4.at_point(p), FieldDepthError);
}
