#include "contactgeo/fields.hpp"

namespace contactgeo {

namespace {

void check_dim(int dim) {
  if (dim < 1 || dim > kMaxDim)
    throw ContractError("chart dimension out of supported range");
}

void check_same(int a, int b) {
  if (a != b) throw ContractError("dimension mismatch between field objects");
}

std::vector<ScalarField> zeros(int n) {
  std::vector<ScalarField> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v.push_back(ScalarField::constant(0.0));
  return v;
}

}  // namespace

Jet2Scalar eval_jet2(const ScalarField& f, std::span<const double> p) {
  const int d = static_cast<int>(p.size());
  check_dim(d);
  Jet2Scalar out;
  std::array<D2, kMaxDim> xs;
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      // Seed two independent first-order directions; the (i,j) second
      // derivative lands in r.dot.dot.
      for (int k = 0; k < d; ++k) {
        const double di = (k == i) ? 1.0 : 0.0;
        const double dj = (k == j) ? 1.0 : 0.0;
        xs[static_cast<std::size_t>(k)] =
            D2(D1(p[static_cast<std::size_t>(k)], di), D1(dj, 0.0));
      }
      D2 r = f.at(std::span<const D2>(xs.data(), static_cast<std::size_t>(d)));
      if (i == 0 && j == 0) out.value = r.val.val;
      if (j == i) out.gradient[static_cast<std::size_t>(i)] = r.val.dot;
      out.hessian[static_cast<std::size_t>(i * kMaxDim + j)] = r.dot.dot;
      out.hessian[static_cast<std::size_t>(j * kMaxDim + i)] = r.dot.dot;
    }
  }
  return out;
}

std::array<double, kMaxDim> eval_gradient(const ScalarField& f,
                                          std::span<const double> p) {
  const int d = static_cast<int>(p.size());
  check_dim(d);
  std::array<double, kMaxDim> out{};
  std::array<D1, kMaxDim> xs;
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k)
      xs[static_cast<std::size_t>(k)] =
          D1(p[static_cast<std::size_t>(k)], k == i ? 1.0 : 0.0);
    out[static_cast<std::size_t>(i)] =
        f.at(std::span<const D1>(xs.data(), static_cast<std::size_t>(d))).dot;
  }
  return out;
}

Point sample_point(const Chart& chart, SplitMix64& rng) {
  check_dim(chart.dim);
  Point p(static_cast<std::size_t>(chart.dim));
  for (int i = 0; i < chart.dim; ++i)
    p[static_cast<std::size_t>(i)] = chart.box * rng.next_symmetric();
  return p;
}

VectorField VectorField::zero(int dim) {
  check_dim(dim);
  return VectorField{dim, zeros(dim)};
}

OneForm OneForm::zero(int dim) {
  check_dim(dim);
  return OneForm{dim, zeros(dim)};
}

TwoForm TwoForm::zero(int dim) {
  check_dim(dim);
  return TwoForm{dim, zeros(dim * dim)};
}

EndField EndField::zero(int dim) {
  check_dim(dim);
  return EndField{dim, zeros(dim * dim)};
}

EndField EndField::identity(int dim) {
  EndField a = EndField::zero(dim);
  for (int i = 0; i < dim; ++i) a(i, i) = ScalarField::constant(1.0);
  return a;
}

MetricTensor MetricTensor::zero(int dim) {
  check_dim(dim);
  return MetricTensor{dim, zeros(dim * dim)};
}

VectorField constant_vector(std::span<const double> vals) {
  const int d = static_cast<int>(vals.size());
  VectorField x = VectorField::zero(d);
  for (int i = 0; i < d; ++i)
    x[i] = ScalarField::constant(vals[static_cast<std::size_t>(i)]);
  return x;
}

OneForm constant_one_form(std::span<const double> vals) {
  const int d = static_cast<int>(vals.size());
  OneForm w = OneForm::zero(d);
  for (int i = 0; i < d; ++i)
    w[i] = ScalarField::constant(vals[static_cast<std::size_t>(i)]);
  return w;
}

VectorField operator+(const VectorField& a, const VectorField& b) {
  check_same(a.dim, b.dim);
  VectorField r = VectorField::zero(a.dim);
  for (int i = 0; i < a.dim; ++i) r[i] = a[i] + b[i];
  return r;
}

VectorField operator-(const VectorField& a, const VectorField& b) {
  check_same(a.dim, b.dim);
  VectorField r = VectorField::zero(a.dim);
  for (int i = 0; i < a.dim; ++i) r[i] = a[i] - b[i];
  return r;
}

VectorField operator-(const VectorField& a) {
  VectorField r = VectorField::zero(a.dim);
  for (int i = 0; i < a.dim; ++i) r[i] = -a[i];
  return r;
}

VectorField operator*(const ScalarField& s, const VectorField& a) {
  VectorField r = VectorField::zero(a.dim);
  for (int i = 0; i < a.dim; ++i) r[i] = s * a[i];
  return r;
}

VectorField operator*(double c, const VectorField& a) {
  VectorField r = VectorField::zero(a.dim);
  for (int i = 0; i < a.dim; ++i) r[i] = c * a[i];
  return r;
}

OneForm operator+(const OneForm& a, const OneForm& b) {
  check_same(a.dim, b.dim);
  OneForm r = OneForm::zero(a.dim);
  for (int i = 0; i < a.dim; ++i) r[i] = a[i] + b[i];
  return r;
}

OneForm operator-(const OneForm& a, const OneForm& b) {
  check_same(a.dim, b.dim);
  OneForm r = OneForm::zero(a.dim);
  for (int i = 0; i < a.dim; ++i) r[i] = a[i] - b[i];
  return r;
}

OneForm operator*(const ScalarField& s, const OneForm& a) {
  OneForm r = OneForm::zero(a.dim);
  for (int i = 0; i < a.dim; ++i) r[i] = s * a[i];
  return r;
}

OneForm operator*(double c, const OneForm& a) {
  OneForm r = OneForm::zero(a.dim);
  for (int i = 0; i < a.dim; ++i) r[i] = c * a[i];
  return r;
}

EndField operator+(const EndField& a, const EndField& b) {
  check_same(a.dim, b.dim);
  EndField r = EndField::zero(a.dim);
  for (int i = 0; i < a.dim * a.dim; ++i)
    r.comp[static_cast<std::size_t>(i)] =
        a.comp[static_cast<std::size_t>(i)] + b.comp[static_cast<std::size_t>(i)];
  return r;
}

EndField operator-(const EndField& a, const EndField& b) {
  check_same(a.dim, b.dim);
  EndField r = EndField::zero(a.dim);
  for (int i = 0; i < a.dim * a.dim; ++i)
    r.comp[static_cast<std::size_t>(i)] =
        a.comp[static_cast<std::size_t>(i)] - b.comp[static_cast<std::size_t>(i)];
  return r;
}

EndField operator*(const ScalarField& s, const EndField& a) {
  EndField r = EndField::zero(a.dim);
  for (int i = 0; i < a.dim * a.dim; ++i)
    r.comp[static_cast<std::size_t>(i)] = s * a.comp[static_cast<std::size_t>(i)];
  return r;
}

EndField operator*(double c, const EndField& a) {
  EndField r = EndField::zero(a.dim);
  for (int i = 0; i < a.dim * a.dim; ++i)
    r.comp[static_cast<std::size_t>(i)] = c * a.comp[static_cast<std::size_t>(i)];
  return r;
}

VectorField apply(const EndField& a, const VectorField& x) {
  check_same(a.dim, x.dim);
  VectorField r = VectorField::zero(a.dim);
  for (int i = 0; i < a.dim; ++i) {
    ScalarField acc = a(i, 0) * x[0];
    for (int j = 1; j < a.dim; ++j) acc = acc + a(i, j) * x[j];
    r[i] = acc;
  }
  return r;
}

EndField compose(const EndField& a, const EndField& b) {
  check_same(a.dim, b.dim);
  EndField r = EndField::zero(a.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      ScalarField acc = a(i, 0) * b(0, j);
      for (int k = 1; k < a.dim; ++k) acc = acc + a(i, k) * b(k, j);
      r(i, j) = acc;
    }
  return r;
}

ScalarField contract(const OneForm& w, const VectorField& x) {
  check_same(w.dim, x.dim);
  ScalarField acc = w[0] * x[0];
  for (int i = 1; i < w.dim; ++i) acc = acc + w[i] * x[i];
  return acc;
}

ScalarField metric_pair(const MetricTensor& g, const VectorField& x,
                        const VectorField& y) {
  check_same(g.dim, x.dim);
  check_same(g.dim, y.dim);
  const int d = g.dim;
  return ScalarField::make([g, x, y, d](auto xs) {
    using T = typename decltype(xs)::value_type;
    T acc(0.0);
    for (int i = 0; i < d; ++i)
      acc += g(i, i).at(xs) * (x[i].at(xs) * y[i].at(xs));
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        acc += g(i, j).at(xs) *
               (x[i].at(xs) * y[j].at(xs) + x[j].at(xs) * y[i].at(xs));
    return acc;
  });
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  check_same(x.dim, y.dim);
  VectorField r = VectorField::zero(x.dim);
  for (int i = 0; i < x.dim; ++i) {
    ScalarField acc = x[0] * partial(y[i], 0) - y[0] * partial(x[i], 0);
    for (int j = 1; j < x.dim; ++j)
      acc = acc + x[j] * partial(y[i], j) - y[j] * partial(x[i], j);
    r[i] = acc;
  }
  return r;
}

TwoForm wedge_1forms(const OneForm& u, const OneForm& v) {
  check_same(u.dim, v.dim);
  TwoForm w = TwoForm::zero(u.dim);
  for (int i = 0; i < u.dim; ++i)
    for (int j = 0; j < u.dim; ++j) {
      if (i == j) continue;
      w(i, j) = u[i] * v[j] - u[j] * v[i];
    }
  return w;
}

TwoForm exterior_d_1form(const OneForm& w, double weight) {
  TwoForm d = TwoForm::zero(w.dim);
  for (int i = 0; i < w.dim; ++i)
    for (int j = 0; j < w.dim; ++j) {
      if (i == j) continue;
      d(i, j) = weight * (partial(w[j], i) - partial(w[i], j));
    }
  return d;
}

ScalarField two_form_pair(const TwoForm& w, const VectorField& x,
                          const VectorField& y) {
  check_same(w.dim, x.dim);
  check_same(w.dim, y.dim);
  const int d = w.dim;
  return ScalarField::make([w, x, y, d](auto xs) {
    using T = typename decltype(xs)::value_type;
    T acc(0.0);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        if (i == j) continue;
        acc += w(i, j).at(xs) * (x[i].at(xs) * y[j].at(xs));
      }
    return acc;
  });
}

std::array<double, kMaxDim> eval_vector(const VectorField& x,
                                        std::span<const double> p) {
  std::array<double, kMaxDim> out{};
  for (int i = 0; i < x.dim; ++i)
    out[static_cast<std::size_t>(i)] = x[i].at_point(p);
  return out;
}

std::array<double, kMaxDim> eval_one_form(const OneForm& w,
                                          std::span<const double> p) {
  std::array<double, kMaxDim> out{};
  for (int i = 0; i < w.dim; ++i)
    out[static_cast<std::size_t>(i)] = w[i].at_point(p);
  return out;
}

std::array<double, kMaxDim * kMaxDim> eval_end(const EndField& a,
                                               std::span<const double> p) {
  std::array<double, kMaxDim * kMaxDim> out{};
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      out[static_cast<std::size_t>(i * kMaxDim + j)] = a(i, j).at_point(p);
  return out;
}

std::array<double, kMaxDim * kMaxDim> eval_two_form(const TwoForm& w,
                                                    std::span<const double> p) {
  std::array<double, kMaxDim * kMaxDim> out{};
  for (int i = 0; i < w.dim; ++i)
    for (int j = 0; j < w.dim; ++j)
      out[static_cast<std::size_t>(i * kMaxDim + j)] = w(i, j).at_point(p);
  return out;
}

std::array<double, kMaxDim * kMaxDim> eval_metric(const MetricTensor& g,
                                                  std::span<const double> p) {
  std::array<double, kMaxDim * kMaxDim> out{};
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j)
      out[static_cast<std::size_t>(i * kMaxDim + j)] = g(i, j).at_point(p);
  return out;
}

namespace {

template <class Evaluate>
void foreach_dir_jet(int dim, std::span<const double> p, Evaluate&& fn) {
  const int d = static_cast<int>(p.size());
  check_dim(d);
  (void)dim;
  std::array<D1, kMaxDim> xs;
  for (int k = 0; k < d; ++k) {
    for (int m = 0; m < d; ++m)
      xs[static_cast<std::size_t>(m)] =
          D1(p[static_cast<std::size_t>(m)], m == k ? 1.0 : 0.0);
    fn(k, std::span<const D1>(xs.data(), static_cast<std::size_t>(d)));
  }
}

}  // namespace

std::array<std::array<double, kMaxDim>, kMaxDim> eval_vector_jet1(
    const VectorField& x, std::span<const double> p) {
  std::array<std::array<double, kMaxDim>, kMaxDim> out{};
  foreach_dir_jet(x.dim, p, [&](int k, std::span<const D1> xs) {
    for (int i = 0; i < x.dim; ++i)
      out[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] =
          x[i].at(xs).dot;
  });
  return out;
}

std::array<std::array<double, kMaxDim>, kMaxDim> eval_one_form_jet1(
    const OneForm& w, std::span<const double> p) {
  std::array<std::array<double, kMaxDim>, kMaxDim> out{};
  foreach_dir_jet(w.dim, p, [&](int k, std::span<const D1> xs) {
    for (int i = 0; i < w.dim; ++i)
      out[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] =
          w[i].at(xs).dot;
  });
  return out;
}

std::array<std::array<double, kMaxDim * kMaxDim>, kMaxDim> eval_end_jet1(
    const EndField& a, std::span<const double> p) {
  std::array<std::array<double, kMaxDim * kMaxDim>, kMaxDim> out{};
  foreach_dir_jet(a.dim, p, [&](int k, std::span<const D1> xs) {
    for (int i = 0; i < a.dim; ++i)
      for (int j = 0; j < a.dim; ++j)
        out[static_cast<std::size_t>(k)]
           [static_cast<std::size_t>(i * kMaxDim + j)] = a(i, j).at(xs).dot;
  });
  return out;
}

}  // namespace contactgeo
