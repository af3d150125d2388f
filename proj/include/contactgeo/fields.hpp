#pragma once

#include <array>
#include <cmath>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "contactgeo/errors.hpp"
#include "contactgeo/jets.hpp"
#include "contactgeo/prng.hpp"

namespace contactgeo {

// Fixed stride for point-local buffers; charts larger than this are rejected.
inline constexpr int kMaxDim = 8;

// Antisymmetrization weight of the exterior derivative on 1-forms:
// (dw)(X,Y) = kExteriorWeight * (X w(Y) - Y w(X) - w([X,Y])).
inline constexpr double kExteriorWeight = 0.5;

using Point = std::vector<double>;

namespace detail {

// Type-erased scalar field evaluable over the whole jet tower.  Every
// concrete field must behave identically on each ring; the derivative
// combinators rely on this to climb one level per differentiation.
class FieldExpr {
 public:
  virtual ~FieldExpr() = default;
  virtual double eval(std::span<const double> x) const = 0;
  virtual D1 eval(std::span<const D1> x) const = 0;
  virtual D2 eval(std::span<const D2> x) const = 0;
  virtual D3 eval(std::span<const D3> x) const = 0;
  virtual D4 eval(std::span<const D4> x) const = 0;
};

template <class F>
class FieldFn final : public FieldExpr {
 public:
  explicit FieldFn(F f) : f_(std::move(f)) {}
  double eval(std::span<const double> x) const override { return f_(x); }
  D1 eval(std::span<const D1> x) const override { return f_(x); }
  D2 eval(std::span<const D2> x) const override { return f_(x); }
  D3 eval(std::span<const D3> x) const override { return f_(x); }
  D4 eval(std::span<const D4> x) const override { return f_(x); }

 private:
  F f_;
};

// For evaluators that internally climb one ring (e.g. anything building the
// connection on the fly): the lambda is only instantiated up to D3, and a D4
// request fails at runtime instead of demanding a ring above the tower.
template <class F>
class FieldFnDepth3 final : public FieldExpr {
 public:
  explicit FieldFnDepth3(F f) : f_(std::move(f)) {}
  double eval(std::span<const double> x) const override { return f_(x); }
  D1 eval(std::span<const D1> x) const override { return f_(x); }
  D2 eval(std::span<const D2> x) const override { return f_(x); }
  D3 eval(std::span<const D3> x) const override { return f_(x); }
  D4 eval(std::span<const D4> x) const override {
    (void)x;
    throw FieldDepthError(
        "depth-limited field evaluated at the top of the jet tower");
  }

 private:
  F f_;
};

}  // namespace detail

// Value-semantic handle to an immutable scalar field expression.
class ScalarField {
 public:
  ScalarField() = default;

  explicit ScalarField(std::shared_ptr<const detail::FieldExpr> e)
      : expr_(std::move(e)) {}

  // f must accept std::span<const T> for every ring T in the tower and
  // return T; generic lambdas mixing ring values with double literals work.
  template <class F>
  static ScalarField make(F f) {
    return ScalarField(
        std::make_shared<const detail::FieldFn<F>>(std::move(f)));
  }

  // f is instantiated for rings double..D3 only; see FieldFnDepth3.
  template <class F>
  static ScalarField make_depth_limited(F f) {
    return ScalarField(
        std::make_shared<const detail::FieldFnDepth3<F>>(std::move(f)));
  }

  static ScalarField constant(double c) {
    return make([c](auto xs) {
      using T = typename decltype(xs)::value_type;
      (void)xs;
      return T(c);
    });
  }

  static ScalarField coordinate(int index) {
    return make([index](auto xs) { return xs[static_cast<std::size_t>(index)]; });
  }

  template <class T>
  T at(std::span<const T> x) const {
    return expr_->eval(x);
  }

  double at_point(std::span<const double> x) const { return expr_->eval(x); }

  explicit operator bool() const { return static_cast<bool>(expr_); }

 private:
  std::shared_ptr<const detail::FieldExpr> expr_;
};

inline ScalarField operator+(const ScalarField& a, const ScalarField& b) {
  return ScalarField::make([a, b](auto xs) { return a.at(xs) + b.at(xs); });
}
inline ScalarField operator-(const ScalarField& a, const ScalarField& b) {
  return ScalarField::make([a, b](auto xs) { return a.at(xs) - b.at(xs); });
}
inline ScalarField operator*(const ScalarField& a, const ScalarField& b) {
  return ScalarField::make([a, b](auto xs) { return a.at(xs) * b.at(xs); });
}
inline ScalarField operator/(const ScalarField& a, const ScalarField& b) {
  return ScalarField::make([a, b](auto xs) { return a.at(xs) / b.at(xs); });
}
inline ScalarField operator-(const ScalarField& a) {
  return ScalarField::make([a](auto xs) { return -a.at(xs); });
}
inline ScalarField operator*(double c, const ScalarField& a) {
  return ScalarField::make([c, a](auto xs) {
    using T = typename decltype(xs)::value_type;
    return T(c) * a.at(xs);
  });
}
inline ScalarField operator*(const ScalarField& a, double c) { return c * a; }
inline ScalarField operator+(const ScalarField& a, double c) {
  return a + ScalarField::constant(c);
}
inline ScalarField operator+(double c, const ScalarField& a) { return a + c; }
inline ScalarField operator-(const ScalarField& a, double c) {
  return a + (-c);
}
inline ScalarField operator-(double c, const ScalarField& a) {
  return ScalarField::constant(c) - a;
}
inline ScalarField operator/(const ScalarField& a, double c) {
  return (1.0 / c) * a;
}
inline ScalarField operator/(double c, const ScalarField& a) {
  return ScalarField::constant(c) / a;
}

namespace detail {

// d/dx_dir of an inner field, computed by lifting the evaluation point one
// ring up.  Evaluation at the top ring D4 cannot climb further and throws.
class PartialExpr final : public FieldExpr {
 public:
  PartialExpr(ScalarField inner, int dir)
      : inner_(std::move(inner)), dir_(dir) {}

  double eval(std::span<const double> x) const override { return lift(x); }
  D1 eval(std::span<const D1> x) const override { return lift(x); }
  D2 eval(std::span<const D2> x) const override { return lift(x); }
  D3 eval(std::span<const D3> x) const override { return lift(x); }
  D4 eval(std::span<const D4> x) const override {
    (void)x;
    throw FieldDepthError(
        "scalar field differentiated beyond the supported jet depth");
  }

 private:
  template <class T>
  T lift(std::span<const T> x) const {
    const int d = static_cast<int>(x.size());
    if (d > kMaxDim) throw ContractError("point dimension exceeds kMaxDim");
    std::array<Dual<T>, kMaxDim> xs;
    for (int i = 0; i < d; ++i)
      xs[static_cast<std::size_t>(i)] =
          Dual<T>(x[static_cast<std::size_t>(i)], T(i == dir_ ? 1.0 : 0.0));
    Dual<T> r = inner_.at(
        std::span<const Dual<T>>(xs.data(), static_cast<std::size_t>(d)));
    return r.dot;
  }

  ScalarField inner_;
  int dir_;
};

}  // namespace detail

inline ScalarField partial(const ScalarField& f, int dir) {
  return ScalarField(std::make_shared<const detail::PartialExpr>(f, dir));
}

// Value, gradient, and symmetric Hessian of a scalar field at one point.
struct Jet2Scalar {
  double value = 0.0;
  std::array<double, kMaxDim> gradient{};
  std::array<double, kMaxDim * kMaxDim> hessian{};  // kMaxDim row stride
};

Jet2Scalar eval_jet2(const ScalarField& f, std::span<const double> p);

std::array<double, kMaxDim> eval_gradient(const ScalarField& f,
                                          std::span<const double> p);

// Coordinate chart: dimension, axis labels, and the half-width of the box
// test points are sampled from.
struct Chart {
  int dim = 0;
  std::vector<std::string> names;
  double box = 1.0;
};

Point sample_point(const Chart& chart, SplitMix64& rng);

struct VectorField {
  int dim = 0;
  std::vector<ScalarField> comp;  // comp[i] = X^i

  static VectorField zero(int dim);
  const ScalarField& operator[](int i) const {
    return comp[static_cast<std::size_t>(i)];
  }
  ScalarField& operator[](int i) { return comp[static_cast<std::size_t>(i)]; }
};

struct OneForm {
  int dim = 0;
  std::vector<ScalarField> comp;  // comp[i] = w_i

  static OneForm zero(int dim);
  const ScalarField& operator[](int i) const {
    return comp[static_cast<std::size_t>(i)];
  }
  ScalarField& operator[](int i) { return comp[static_cast<std::size_t>(i)]; }
};

struct TwoForm {
  int dim = 0;
  std::vector<ScalarField> comp;  // comp[i*dim+j] = w(e_i, e_j), antisymmetric

  static TwoForm zero(int dim);
  const ScalarField& operator()(int i, int j) const {
    return comp[static_cast<std::size_t>(i * dim + j)];
  }
  ScalarField& operator()(int i, int j) {
    return comp[static_cast<std::size_t>(i * dim + j)];
  }
};

// Endomorphism field acting on vectors as (A X)^i = sum_j A(i,j) X^j.
struct EndField {
  int dim = 0;
  std::vector<ScalarField> comp;  // row-major

  static EndField zero(int dim);
  static EndField identity(int dim);
  const ScalarField& operator()(int i, int j) const {
    return comp[static_cast<std::size_t>(i * dim + j)];
  }
  ScalarField& operator()(int i, int j) {
    return comp[static_cast<std::size_t>(i * dim + j)];
  }
};

struct MetricTensor {
  int dim = 0;
  std::vector<ScalarField> comp;  // row-major, kept symmetric by builders

  static MetricTensor zero(int dim);
  const ScalarField& operator()(int i, int j) const {
    return comp[static_cast<std::size_t>(i * dim + j)];
  }
  ScalarField& operator()(int i, int j) {
    return comp[static_cast<std::size_t>(i * dim + j)];
  }
};

VectorField constant_vector(std::span<const double> vals);
OneForm constant_one_form(std::span<const double> vals);

VectorField operator+(const VectorField& a, const VectorField& b);
VectorField operator-(const VectorField& a, const VectorField& b);
VectorField operator-(const VectorField& a);
VectorField operator*(const ScalarField& s, const VectorField& a);
VectorField operator*(double c, const VectorField& a);

OneForm operator+(const OneForm& a, const OneForm& b);
OneForm operator-(const OneForm& a, const OneForm& b);
OneForm operator*(const ScalarField& s, const OneForm& a);
OneForm operator*(double c, const OneForm& a);

EndField operator+(const EndField& a, const EndField& b);
EndField operator-(const EndField& a, const EndField& b);
EndField operator*(const ScalarField& s, const EndField& a);
EndField operator*(double c, const EndField& a);

VectorField apply(const EndField& a, const VectorField& x);
EndField compose(const EndField& a, const EndField& b);
ScalarField contract(const OneForm& w, const VectorField& x);

// g(X,Y) accumulated in a canonical order (diagonal first, then each i<j
// pair once) so that metric_pair(g,X,Y) and metric_pair(g,Y,X) are
// bit-identical.
ScalarField metric_pair(const MetricTensor& g, const VectorField& x,
                        const VectorField& y);

VectorField lie_bracket(const VectorField& x, const VectorField& y);

// Plain wedge without combinatorial weight: (u^v)(X,Y) = u(X)v(Y) - u(Y)v(X).
TwoForm wedge_1forms(const OneForm& u, const OneForm& v);

// Coordinate components c*(d_i w_j - d_j w_i) with c = kExteriorWeight by
// default; pass weight explicitly to change the convention locally.
TwoForm exterior_d_1form(const OneForm& w, double weight = kExteriorWeight);

ScalarField two_form_pair(const TwoForm& w, const VectorField& x,
                          const VectorField& y);

// Point-level numeric evaluation.
std::array<double, kMaxDim> eval_vector(const VectorField& x,
                                        std::span<const double> p);
std::array<double, kMaxDim> eval_one_form(const OneForm& w,
                                          std::span<const double> p);
std::array<double, kMaxDim * kMaxDim> eval_end(const EndField& a,
                                               std::span<const double> p);
std::array<double, kMaxDim * kMaxDim> eval_two_form(const TwoForm& w,
                                                    std::span<const double> p);
std::array<double, kMaxDim * kMaxDim> eval_metric(const MetricTensor& g,
                                                  std::span<const double> p);

// First coordinate jets: out[k][...] is the d/dx_k derivative of each
// component at p.
std::array<std::array<double, kMaxDim>, kMaxDim> eval_vector_jet1(
    const VectorField& x, std::span<const double> p);
std::array<std::array<double, kMaxDim>, kMaxDim> eval_one_form_jet1(
    const OneForm& w, std::span<const double> p);
std::array<std::array<double, kMaxDim * kMaxDim>, kMaxDim> eval_end_jet1(
    const EndField& a, std::span<const double> p);

}  // namespace contactgeo
