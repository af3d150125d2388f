#include "contactgeo/curvature.hpp"

namespace contactgeo {

namespace {

constexpr double kFramePivotTol = 1e-10;

std::size_t u(int i) { return static_cast<std::size_t>(i); }

// Positive-definiteness gate; the factor itself is discarded.
void cholesky_check(int d, const std::array<double, kMaxDim * kMaxDim>& g) {
  std::array<double, kMaxDim * kMaxDim> l{};
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = g[u(idx2(i, j))];
      for (int k = 0; k < j; ++k) s -= l[u(idx2(i, k))] * l[u(idx2(j, k))];
      if (i == j) {
        if (s < 1e-12)
          throw DegenerateMetricError(
              "metric is not positive definite at evaluation point");
        l[u(idx2(i, i))] = std::sqrt(s);
      } else {
        l[u(idx2(i, j))] = s / l[u(idx2(j, j))];
      }
    }
  }
}

double dot_with(const std::array<double, kMaxDim * kMaxDim>& g, int d,
                const double* x, const double* y) {
  double acc = 0.0;
  for (int i = 0; i < d; ++i) acc += g[u(idx2(i, i))] * x[i] * y[i];
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      acc += g[u(idx2(i, j))] * (x[i] * y[j] + x[j] * y[i]);
  return acc;
}

}  // namespace

LeviCivita::LeviCivita(MetricTensor g) : g_(std::move(g)) {
  if (g_.dim < 1 || g_.dim > kMaxDim)
    throw ContractError("metric dimension out of supported range");
  if (static_cast<int>(g_.comp.size()) != g_.dim * g_.dim)
    throw ContractError("metric component count does not match dimension");
}

ChristoffelAtPoint LeviCivita::christoffel(std::span<const double> p) const {
  return christoffel_ring<double>(g_, p);
}

CurvatureData LeviCivita::at(std::span<const double> p) const {
  const int d = g_.dim;
  if (static_cast<int>(p.size()) != d)
    throw ContractError("point dimension does not match metric dimension");

  CurvatureData cd;
  cd.dim = d;
  std::array<double, kMaxDim * kMaxDim * kMaxDim * kMaxDim> ddg{};
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      Jet2Scalar jet = eval_jet2(g_(i, j), p);
      cd.g[u(idx2(i, j))] = jet.value;
      cd.g[u(idx2(j, i))] = jet.value;
      for (int k = 0; k < d; ++k) {
        cd.dg[u(idx3(k, i, j))] = jet.gradient[u(k)];
        cd.dg[u(idx3(k, j, i))] = jet.gradient[u(k)];
      }
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          const double h = jet.hessian[u(idx2(k, l))];
          ddg[u(idx4(k, l, i, j))] = h;
          ddg[u(idx4(k, l, j, i))] = h;
        }
    }

  cholesky_check(d, cd.g);
  detail::ring_invert<double>(d, cd.g, cd.ginv);

  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        double acc = 0.0;
        for (int l = 0; l < d; ++l)
          acc += cd.ginv[u(idx2(k, l))] *
                 (cd.dg[u(idx3(i, j, l))] + cd.dg[u(idx3(j, i, l))] -
                  cd.dg[u(idx3(l, i, j))]);
        cd.gamma[u(idx3(k, i, j))] = 0.5 * acc;
      }

  // d_i g^{lm} = -g^{la} (d_i g_{ab}) g^{bm}
  std::array<double, kMaxDim * kMaxDim * kMaxDim> dginv{};
  for (int i = 0; i < d; ++i)
    for (int l = 0; l < d; ++l)
      for (int m = 0; m < d; ++m) {
        double acc = 0.0;
        for (int a = 0; a < d; ++a)
          for (int b = 0; b < d; ++b)
            acc += cd.ginv[u(idx2(l, a))] * cd.dg[u(idx3(i, a, b))] *
                   cd.ginv[u(idx2(b, m))];
        dginv[u(idx3(i, l, m))] = -acc;
      }

  // dgamma[idx4(i,l,j,k)] = d_i Gamma^l_jk
  std::array<double, kMaxDim * kMaxDim * kMaxDim * kMaxDim> dgamma{};
  for (int i = 0; i < d; ++i)
    for (int l = 0; l < d; ++l)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          double acc = 0.0;
          for (int m = 0; m < d; ++m) {
            acc += dginv[u(idx3(i, l, m))] *
                   (cd.dg[u(idx3(j, k, m))] + cd.dg[u(idx3(k, j, m))] -
                    cd.dg[u(idx3(m, j, k))]);
            acc += cd.ginv[u(idx2(l, m))] *
                   (ddg[u(idx4(i, j, k, m))] + ddg[u(idx4(i, k, j, m))] -
                    ddg[u(idx4(i, m, j, k))]);
          }
          dgamma[u(idx4(i, l, j, k))] = 0.5 * acc;
        }

  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          double acc =
              dgamma[u(idx4(i, l, j, k))] - dgamma[u(idx4(j, l, i, k))];
          for (int m = 0; m < d; ++m)
            acc += cd.gamma[u(idx3(l, i, m))] * cd.gamma[u(idx3(m, j, k))] -
                   cd.gamma[u(idx3(l, j, m))] * cd.gamma[u(idx3(m, i, k))];
          cd.riem[u(idx4(i, j, k, l))] = acc;
        }

  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int m = 0; m < d; ++m) {
          double acc = 0.0;
          for (int l = 0; l < d; ++l)
            acc += cd.riem[u(idx4(i, j, k, l))] * cd.g[u(idx2(l, m))];
          cd.r04[u(idx4(i, j, k, m))] = acc;
        }

  // Orthonormal frame by modified Gram-Schmidt on the coordinate basis.
  for (int a = 0; a < d; ++a) {
    double v[kMaxDim] = {0.0};
    v[a] = 1.0;
    for (int b = 0; b < a; ++b) {
      const double* eb = &cd.frame[u(idx2(b, 0))];
      double c = dot_with(cd.g, d, v, eb);
      for (int i = 0; i < d; ++i) v[i] -= c * eb[i];
    }
    double n2 = dot_with(cd.g, d, v, v);
    if (n2 < kFramePivotTol)
      throw DegenerateMetricError("frame construction hit a degenerate pivot");
    const double inv = 1.0 / std::sqrt(n2);
    for (int i = 0; i < d; ++i) cd.frame[u(idx2(a, i))] = v[i] * inv;
  }

  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      double acc = 0.0;
      for (int a = 0; a < d; ++a)
        for (int i = 0; i < d; ++i)
          for (int m = 0; m < d; ++m)
            acc += cd.frame[u(idx2(a, i))] * cd.frame[u(idx2(a, m))] *
                   cd.r04[u(idx4(i, j, k, m))];
      cd.ricci[u(idx2(j, k))] = acc;
    }

  double tau = 0.0;
  for (int b = 0; b < d; ++b)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        tau += cd.frame[u(idx2(b, j))] * cd.frame[u(idx2(b, k))] *
               cd.ricci[u(idx2(j, k))];
  cd.tau = tau;

  return cd;
}

VectorField covariant_derivative(const MetricTensor& g, const VectorField& x,
                                 const VectorField& y) {
  if (g.dim != x.dim || g.dim != y.dim)
    throw ContractError("dimension mismatch in covariant derivative");
  const int d = g.dim;
  VectorField r = VectorField::zero(d);
  for (int k = 0; k < d; ++k) {
    r[k] = ScalarField::make_depth_limited([g, x, y, d, k](auto xs) {
      using S = typename decltype(xs)::value_type;
      RingChristoffel<S> ch = christoffel_ring<S>(g, xs);
      S acc(0.0);
      std::array<Dual<S>, kMaxDim> lifted;
      for (int i = 0; i < d; ++i) {
        for (int m = 0; m < d; ++m)
          lifted[u(m)] = Dual<S>(xs[u(m)], S(m == i ? 1.0 : 0.0));
        S dyk = y[k]
                    .at(std::span<const Dual<S>>(lifted.data(),
                                                 static_cast<std::size_t>(d)))
                    .dot;
        acc += x[i].at(xs) * dyk;
      }
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          acc += ch.gamma[u(idx3(k, i, j))] * (x[i].at(xs) * y[j].at(xs));
      return acc;
    });
  }
  return r;
}

double metric_dot(const CurvatureData& cd, std::span<const double> x,
                  std::span<const double> y) {
  return dot_with(cd.g, cd.dim, x.data(), y.data());
}

double r04_contract(const CurvatureData& cd, std::span<const double> x,
                    std::span<const double> y, std::span<const double> z,
                    std::span<const double> w) {
  const int d = cd.dim;
  double acc = 0.0;
  for (int i = 0; i < d; ++i) {
    if (x[u(i)] == 0.0) continue;
    for (int j = 0; j < d; ++j) {
      if (y[u(j)] == 0.0) continue;
      const double xy = x[u(i)] * y[u(j)];
      for (int k = 0; k < d; ++k) {
        if (z[u(k)] == 0.0) continue;
        const double xyz = xy * z[u(k)];
        for (int m = 0; m < d; ++m)
          acc += xyz * w[u(m)] * cd.r04[u(idx4(i, j, k, m))];
      }
    }
  }
  return acc;
}

std::array<double, kMaxDim> riem_apply(const CurvatureData& cd,
                                       std::span<const double> x,
                                       std::span<const double> y,
                                       std::span<const double> z) {
  const int d = cd.dim;
  std::array<double, kMaxDim> out{};
  for (int i = 0; i < d; ++i) {
    if (x[u(i)] == 0.0) continue;
    for (int j = 0; j < d; ++j) {
      if (y[u(j)] == 0.0) continue;
      const double xy = x[u(i)] * y[u(j)];
      for (int k = 0; k < d; ++k) {
        if (z[u(k)] == 0.0) continue;
        const double xyz = xy * z[u(k)];
        for (int l = 0; l < d; ++l)
          out[u(l)] += xyz * cd.riem[u(idx4(i, j, k, l))];
      }
    }
  }
  return out;
}

double ricci_pair(const CurvatureData& cd, std::span<const double> x,
                  std::span<const double> y) {
  const int d = cd.dim;
  double acc = 0.0;
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      acc += x[u(j)] * y[u(k)] * cd.ricci[u(idx2(j, k))];
  return acc;
}

double sectional(const CurvatureData& cd, std::span<const double> x,
                 std::span<const double> y) {
  const double gxx = metric_dot(cd, x, x);
  const double gyy = metric_dot(cd, y, y);
  const double gxy = metric_dot(cd, x, y);
  const double den = gxx * gyy - gxy * gxy;
  if (den < 1e-12)
    throw ContractError("sectional curvature of a degenerate plane");
  return r04_contract(cd, x, y, y, x) / den;
}

std::array<double, kMaxDim * kMaxDim> ricci_trace_route(
    const CurvatureData& cd) {
  const int d = cd.dim;
  std::array<double, kMaxDim * kMaxDim> out{};
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      double acc = 0.0;
      for (int i = 0; i < d; ++i) acc += cd.riem[u(idx4(i, j, k, i))];
      out[u(idx2(j, k))] = acc;
    }
  return out;
}

std::array<double, kMaxDim * kMaxDim * kMaxDim> christoffel_fd(
    const MetricTensor& g, std::span<const double> p, double h) {
  const int d = g.dim;
  if (static_cast<int>(p.size()) != d)
    throw ContractError("point dimension does not match metric dimension");
  std::array<double, kMaxDim * kMaxDim * kMaxDim> dg{};
  Point shifted(p.begin(), p.end());
  for (int k = 0; k < d; ++k) {
    shifted[u(k)] = p[u(k)] + h;
    auto plus = eval_metric(g, shifted);
    shifted[u(k)] = p[u(k)] - h;
    auto minus = eval_metric(g, shifted);
    shifted[u(k)] = p[u(k)];
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        dg[u(idx3(k, i, j))] =
            (plus[u(idx2(i, j))] - minus[u(idx2(i, j))]) / (2.0 * h);
  }
  auto g0 = eval_metric(g, p);
  std::array<double, kMaxDim * kMaxDim> ginv{};
  detail::ring_invert<double>(d, g0, ginv);
  std::array<double, kMaxDim * kMaxDim * kMaxDim> gamma{};
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        double acc = 0.0;
        for (int l = 0; l < d; ++l)
          acc += ginv[u(idx2(k, l))] *
                 (dg[u(idx3(i, j, l))] + dg[u(idx3(j, i, l))] -
                  dg[u(idx3(l, i, j))]);
        gamma[u(idx3(k, i, j))] = 0.5 * acc;
      }
  return gamma;
}

BCoefficients b_preset(const std::string& name, int n, double alpha,
                       double beta) {
  if (n < 3) throw ContractError("coefficient presets need dimension >= 3");
  BCoefficients c;
  c.name = name;
  auto& a = c.a;
  const double cn2 = 1.0 / (n - 2.0);
  const double cn12 = 1.0 / ((n - 1.0) * (n - 2.0));
  if (name == "pure-r") {
    a[0] = 1.0;
  } else if (name == "conformal") {
    a[0] = 1.0;
    a[2] = -cn2;
    a[3] = cn2;
    a[5] = -cn2;
    a[6] = cn2;
    a[8] = cn12;
    a[9] = -cn12;
  } else if (name == "conharmonic") {
    a[0] = 1.0;
    a[2] = -cn2;
    a[3] = cn2;
    a[5] = -cn2;
    a[6] = cn2;
  } else if (name == "concircular") {
    a[0] = 1.0;
    a[8] = -1.0 / (n * (n - 1.0));
    a[9] = 1.0 / (n * (n - 1.0));
  } else if (name == "projective") {
    a[0] = 1.0;
    a[2] = -1.0 / (n - 1.0);
    a[3] = 1.0 / (n - 1.0);
  } else if (name == "quasi-conformal") {
    a[0] = alpha;
    a[2] = beta;
    a[3] = -beta;
    a[5] = beta;
    a[6] = -beta;
    const double s = (alpha / (n - 1.0) + 2.0 * beta) / n;
    a[8] = -s;
    a[9] = s;
  } else {
    throw ContractError("unknown coefficient preset: " + name);
  }
  return c;
}

double b_tensor(const CurvatureData& cd, const BCoefficients& c,
                std::span<const double> x, std::span<const double> y,
                std::span<const double> z, std::span<const double> w) {
  const auto& a = c.a;
  double acc = 0.0;
  if (a[0] != 0.0) acc += a[0] * r04_contract(cd, x, y, z, w);
  if (a[1] != 0.0) acc += a[1] * r04_contract(cd, x, z, y, w);
  if (a[2] != 0.0) acc += a[2] * ricci_pair(cd, y, z) * metric_dot(cd, x, w);
  if (a[3] != 0.0) acc += a[3] * ricci_pair(cd, x, z) * metric_dot(cd, y, w);
  if (a[4] != 0.0) acc += a[4] * ricci_pair(cd, x, y) * metric_dot(cd, z, w);
  if (a[5] != 0.0) acc += a[5] * ricci_pair(cd, x, w) * metric_dot(cd, y, z);
  if (a[6] != 0.0) acc += a[6] * ricci_pair(cd, y, w) * metric_dot(cd, x, z);
  if (a[7] != 0.0) acc += a[7] * ricci_pair(cd, z, w) * metric_dot(cd, x, y);
  if (a[8] != 0.0) acc += cd.tau * a[8] * metric_dot(cd, x, w) * metric_dot(cd, y, z);
  if (a[9] != 0.0) acc += cd.tau * a[9] * metric_dot(cd, x, z) * metric_dot(cd, y, w);
  if (a[10] != 0.0) acc += cd.tau * a[10] * metric_dot(cd, x, y) * metric_dot(cd, z, w);
  return acc;
}

std::array<double, kMaxDim> b_tensor_13(const CurvatureData& cd,
                                        const BCoefficients& c,
                                        std::span<const double> x,
                                        std::span<const double> y,
                                        std::span<const double> z) {
  const int d = cd.dim;
  std::array<double, kMaxDim> low{};
  std::array<double, kMaxDim> basis{};
  for (int m = 0; m < d; ++m) {
    basis.fill(0.0);
    basis[u(m)] = 1.0;
    low[u(m)] = b_tensor(cd, c, x, y, z, basis);
  }
  std::array<double, kMaxDim> out{};
  for (int i = 0; i < d; ++i) {
    double acc = 0.0;
    for (int m = 0; m < d; ++m) acc += cd.ginv[u(idx2(i, m))] * low[u(m)];
    out[u(i)] = acc;
  }
  return out;
}

}  // namespace contactgeo
