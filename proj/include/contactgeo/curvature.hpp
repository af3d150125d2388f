#pragma once

#include <array>
#include <cmath>
#include <span>
#include <string>

#include "contactgeo/errors.hpp"
#include "contactgeo/fields.hpp"

namespace contactgeo {

// Fixed-stride flattened indices; all tensors use kMaxDim strides regardless
// of the active dimension so layouts never depend on the chart.
constexpr int idx2(int i, int j) { return i * kMaxDim + j; }
constexpr int idx3(int i, int j, int k) {
  return (i * kMaxDim + j) * kMaxDim + k;
}
constexpr int idx4(int i, int j, int k, int l) {
  return ((i * kMaxDim + j) * kMaxDim + k) * kMaxDim + l;
}

// Metric, inverse, first metric derivatives, and connection coefficients at
// one point, over an arbitrary scalar ring T.
// Layout: dg[idx3(k,i,j)] = d_k g_ij, gamma[idx3(k,i,j)] = Gamma^k_ij.
template <class T>
struct RingChristoffel {
  int dim = 0;
  std::array<T, kMaxDim * kMaxDim> g{};
  std::array<T, kMaxDim * kMaxDim> ginv{};
  std::array<T, kMaxDim * kMaxDim * kMaxDim> dg{};
  std::array<T, kMaxDim * kMaxDim * kMaxDim> gamma{};
};

using ChristoffelAtPoint = RingChristoffel<double>;

namespace detail {

// Gauss-Jordan inverse over ring T with partial pivoting on the scalar part.
template <class T>
void ring_invert(int d, std::array<T, kMaxDim * kMaxDim> a,
                 std::array<T, kMaxDim * kMaxDim>& inv) {
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) inv[static_cast<std::size_t>(idx2(i, j))] = T(i == j ? 1.0 : 0.0);
  for (int col = 0; col < d; ++col) {
    int piv = col;
    double best = std::abs(value_of(a[static_cast<std::size_t>(idx2(col, col))]));
    for (int r = col + 1; r < d; ++r) {
      double m = std::abs(value_of(a[static_cast<std::size_t>(idx2(r, col))]));
      if (m > best) {
        best = m;
        piv = r;
      }
    }
    if (best < 1e-12)
      throw DegenerateMetricError("metric is singular at evaluation point");
    if (piv != col) {
      for (int j = 0; j < d; ++j) {
        std::swap(a[static_cast<std::size_t>(idx2(piv, j))], a[static_cast<std::size_t>(idx2(col, j))]);
        std::swap(inv[static_cast<std::size_t>(idx2(piv, j))], inv[static_cast<std::size_t>(idx2(col, j))]);
      }
    }
    T pivot = a[static_cast<std::size_t>(idx2(col, col))];
    for (int j = 0; j < d; ++j) {
      a[static_cast<std::size_t>(idx2(col, j))] = a[static_cast<std::size_t>(idx2(col, j))] / pivot;
      inv[static_cast<std::size_t>(idx2(col, j))] = inv[static_cast<std::size_t>(idx2(col, j))] / pivot;
    }
    for (int r = 0; r < d; ++r) {
      if (r == col) continue;
      T f = a[static_cast<std::size_t>(idx2(r, col))];
      if (value_of(f) == 0.0) continue;
      for (int j = 0; j < d; ++j) {
        a[static_cast<std::size_t>(idx2(r, j))] = a[static_cast<std::size_t>(idx2(r, j))] - f * a[static_cast<std::size_t>(idx2(col, j))];
        inv[static_cast<std::size_t>(idx2(r, j))] = inv[static_cast<std::size_t>(idx2(r, j))] - f * inv[static_cast<std::size_t>(idx2(col, j))];
      }
    }
  }
}

}  // namespace detail

// Connection data over ring T.  The metric components are differentiated by
// one ring lift, so T may be at most one level below the top of the tower.
template <class T>
RingChristoffel<T> christoffel_ring(const MetricTensor& g,
                                    std::span<const T> xs) {
  const int d = g.dim;
  if (static_cast<int>(xs.size()) != d)
    throw ContractError("point dimension does not match metric dimension");
  RingChristoffel<T> out;
  out.dim = d;
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      T v = g(i, j).at(xs);
      out.g[static_cast<std::size_t>(idx2(i, j))] = v;
      out.g[static_cast<std::size_t>(idx2(j, i))] = v;
    }
  std::array<Dual<T>, kMaxDim> lifted;
  for (int k = 0; k < d; ++k) {
    for (int m = 0; m < d; ++m)
      lifted[static_cast<std::size_t>(m)] =
          Dual<T>(xs[static_cast<std::size_t>(m)], T(m == k ? 1.0 : 0.0));
    std::span<const Dual<T>> lspan(lifted.data(), static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j) {
        T v = g(i, j).at(lspan).dot;
        out.dg[static_cast<std::size_t>(idx3(k, i, j))] = v;
        out.dg[static_cast<std::size_t>(idx3(k, j, i))] = v;
      }
  }
  detail::ring_invert<T>(d, out.g, out.ginv);
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        T acc(0.0);
        for (int l = 0; l < d; ++l)
          acc += out.ginv[static_cast<std::size_t>(idx2(k, l))] *
                 (out.dg[static_cast<std::size_t>(idx3(i, j, l))] +
                  out.dg[static_cast<std::size_t>(idx3(j, i, l))] -
                  out.dg[static_cast<std::size_t>(idx3(l, i, j))]);
        out.gamma[static_cast<std::size_t>(idx3(k, i, j))] = 0.5 * acc;
      }
  return out;
}

// Full curvature state at a point.
// riem[idx4(i,j,k,l)] = l-th component of R(d_i, d_j) d_k with
// R(X,Y) = [grad_X, grad_Y] - grad_[X,Y];
// r04[idx4(i,j,k,m)] = g(R(d_i,d_j) d_k, d_m);
// ricci[idx2(j,k)] = sum_a g(R(E_a, d_j) d_k, E_a) over an orthonormal frame;
// frame[idx2(a,i)] = i-th coordinate component of frame vector E_a.
struct CurvatureData {
  int dim = 0;
  std::array<double, kMaxDim * kMaxDim> g{};
  std::array<double, kMaxDim * kMaxDim> ginv{};
  std::array<double, kMaxDim * kMaxDim * kMaxDim> dg{};
  std::array<double, kMaxDim * kMaxDim * kMaxDim> gamma{};
  std::array<double, kMaxDim * kMaxDim * kMaxDim * kMaxDim> riem{};
  std::array<double, kMaxDim * kMaxDim * kMaxDim * kMaxDim> r04{};
  std::array<double, kMaxDim * kMaxDim> ricci{};
  std::array<double, kMaxDim * kMaxDim> frame{};
  double tau = 0.0;
};

class LeviCivita {
 public:
  explicit LeviCivita(MetricTensor g);

  const MetricTensor& metric() const { return g_; }
  int dim() const { return g_.dim; }

  ChristoffelAtPoint christoffel(std::span<const double> p) const;
  CurvatureData at(std::span<const double> p) const;

 private:
  MetricTensor g_;
};

// grad_X Y as a field; evaluation recomputes the connection at each call, so
// this is for oracles and spot checks, not inner loops.
VectorField covariant_derivative(const MetricTensor& g, const VectorField& x,
                                 const VectorField& y);

// Point-level contractions against cached curvature state.
double metric_dot(const CurvatureData& cd, std::span<const double> x,
                  std::span<const double> y);
double r04_contract(const CurvatureData& cd, std::span<const double> x,
                    std::span<const double> y, std::span<const double> z,
                    std::span<const double> w);
std::array<double, kMaxDim> riem_apply(const CurvatureData& cd,
                                       std::span<const double> x,
                                       std::span<const double> y,
                                       std::span<const double> z);
double ricci_pair(const CurvatureData& cd, std::span<const double> x,
                  std::span<const double> y);
double sectional(const CurvatureData& cd, std::span<const double> x,
                 std::span<const double> y);

// Coordinate-trace Ricci, kept as an independent route for cross-checking
// the frame-contraction values stored in CurvatureData.
std::array<double, kMaxDim * kMaxDim> ricci_trace_route(
    const CurvatureData& cd);

// Christoffel symbols assembled from central finite differences of the
// metric; independent oracle for the jet-based route.  Layout matches
// CurvatureData::gamma.
std::array<double, kMaxDim * kMaxDim * kMaxDim> christoffel_fd(
    const MetricTensor& g, std::span<const double> p, double h);

// Coefficient vector of the generalized curvature-type tensor
// B(X,Y,Z,W) = a0 R(X,Y,Z,W) + a1 R(X,Z,Y,W)
//            + a2 rho(Y,Z)g(X,W) + a3 rho(X,Z)g(Y,W) + a4 rho(X,Y)g(Z,W)
//            + a5 rho(X,W)g(Y,Z) + a6 rho(Y,W)g(X,Z) + a7 rho(Z,W)g(X,Y)
//            + tau * (a8 g(X,W)g(Y,Z) + a9 g(X,Z)g(Y,W) + a10 g(X,Y)g(Z,W))
// with R(X,Y,Z,W) = g(R(X,Y)Z, W).
struct BCoefficients {
  std::string name;
  std::array<double, 11> a{};
};

// Named coefficient vectors in dimension n: "pure-r", "conformal",
// "concircular", "projective", "conharmonic", "quasi-conformal" (the last
// takes the alpha/beta pair, the others ignore it).
BCoefficients b_preset(const std::string& name, int n, double alpha = 1.0,
                       double beta = 0.0);

double b_tensor(const CurvatureData& cd, const BCoefficients& c,
                std::span<const double> x, std::span<const double> y,
                std::span<const double> z, std::span<const double> w);

// B with the last slot raised: (B(X,Y)Z)^i = ginv^{im} B(X,Y,Z,d_m).
std::array<double, kMaxDim> b_tensor_13(const CurvatureData& cd,
                                        const BCoefficients& c,
                                        std::span<const double> x,
                                        std::span<const double> y,
                                        std::span<const double> z);

}  // namespace contactgeo
