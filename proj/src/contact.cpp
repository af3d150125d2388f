#include "contactgeo/contact.hpp"

#include <cmath>
#include <cstddef>

namespace contactgeo {

namespace {

std::size_t u(int i) { return static_cast<std::size_t>(i); }

double bilinear_pair(int d, const Mat& m, std::span<const double> x,
                     std::span<const double> y) {
  double acc = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) acc += m[u(i * kMaxDim + j)] * x[u(i)] * y[u(j)];
  return acc;
}

}  // namespace

BundleAtPoint bundle_at(const ContactStructureBundle& b, std::span<const double> p) {
  if (b.dim == 0) throw ContractError("model carries no contact bundle");
  if (static_cast<int>(p.size()) != b.dim)
    throw ContractError("point dimension does not match bundle dimension");
  BundleAtPoint out;
  out.dim = b.dim;
  out.J = eval_end(b.J, p);
  out.G = eval_end(b.G, p);
  out.H = eval_end(b.H, p);
  out.U = eval_vector(b.U, p);
  out.V = eval_vector(b.V, p);
  out.u = eval_one_form(b.u, p);
  out.v = eval_one_form(b.v, p);
  out.dJ = eval_end_jet1(b.J, p);
  out.dG = eval_end_jet1(b.G, p);
  out.dH = eval_end_jet1(b.H, p);
  out.dU = eval_vector_jet1(b.U, p);
  out.dV = eval_vector_jet1(b.V, p);
  out.du = eval_two_form(exterior_d_1form(b.u, b.exterior_weight), p);
  out.dv = eval_two_form(exterior_d_1form(b.v, b.exterior_weight), p);
  return out;
}

Vec nabla_vector_point(const CurvatureData& cd, const std::array<Vec, kMaxDim>& jet,
                       const Vec& val, std::span<const double> dir) {
  const int d = cd.dim;
  Vec r{};
  for (int k = 0; k < d; ++k) {
    double acc = 0.0;
    for (int i = 0; i < d; ++i) {
      double term = jet[u(i)][u(k)];
      for (int m = 0; m < d; ++m)
        term += cd.gamma[u(idx3(k, i, m))] * val[u(m)];
      acc += dir[u(i)] * term;
    }
    r[u(k)] = acc;
  }
  return r;
}

Mat nabla_end_point(const CurvatureData& cd, const Mat& a,
                    const std::array<Mat, kMaxDim>& da, std::span<const double> dir) {
  const int d = cd.dim;
  Mat r{};
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      double acc = 0.0;
      for (int k = 0; k < d; ++k) {
        double term = da[u(k)][u(i * kMaxDim + j)];
        for (int m = 0; m < d; ++m) {
          term += cd.gamma[u(idx3(i, k, m))] * a[u(m * kMaxDim + j)];
          term -= cd.gamma[u(idx3(m, k, j))] * a[u(i * kMaxDim + m)];
        }
        acc += dir[u(k)] * term;
      }
      r[u(i * kMaxDim + j)] = acc;
    }
  return r;
}

Vec sigma_covector(const CurvatureData& cd, const BundleAtPoint& bp) {
  const int d = cd.dim;
  Vec sig{};
  for (int i = 0; i < d; ++i) {
    Vec w{};
    for (int k = 0; k < d; ++k) {
      double term = bp.dU[u(i)][u(k)];
      for (int l = 0; l < d; ++l)
        term += cd.gamma[u(idx3(k, i, l))] * bp.U[u(l)];
      w[u(k)] = term;
    }
    sig[u(i)] = metric_dot(cd, w, bp.V);
  }
  return sig;
}

Vec nijenhuis_point(const CurvatureData& cd, const Mat& a,
                    const std::array<Mat, kMaxDim>& da, std::span<const double> x,
                    std::span<const double> y) {
  const int d = cd.dim;
  Vec ax = mat_apply(d, a, x);
  Vec ay = mat_apply(d, a, y);
  Mat n_ax = nabla_end_point(cd, a, da, ax);
  Mat n_ay = nabla_end_point(cd, a, da, ay);
  Mat n_x = nabla_end_point(cd, a, da, x);
  Mat n_y = nabla_end_point(cd, a, da, y);
  Vec t1 = mat_apply(d, n_ax, y);
  Vec t2 = mat_apply(d, n_ay, x);
  Vec t3 = mat_apply(d, a, mat_apply(d, n_x, y));
  Vec t4 = mat_apply(d, a, mat_apply(d, n_y, x));
  return t1 - t2 - t3 + t4;
}

Vec tensor_S_point(const CurvatureData& cd, const BundleAtPoint& bp, const Vec& sigma,
                   std::span<const double> x, std::span<const double> y) {
  const int d = cd.dim;
  Vec Gx = mat_apply(d, bp.G, x);
  Vec Gy = mat_apply(d, bp.G, y);
  Vec Hx = mat_apply(d, bp.H, x);
  Vec Hy = mat_apply(d, bp.H, y);
  Mat GH = mat_mul(d, bp.G, bp.H);
  Vec GHx = mat_apply(d, GH, x);
  Vec GHy = mat_apply(d, GH, y);
  double g_x_Gy = metric_dot(cd, x, Gy);
  double g_x_Hy = metric_dot(cd, x, Hy);
  double vx = covec_pair(d, bp.v, x);
  double vy = covec_pair(d, bp.v, y);
  double s_x = covec_pair(d, sigma, x);
  double s_y = covec_pair(d, sigma, y);
  double s_gx = covec_pair(d, sigma, Gx);
  double s_gy = covec_pair(d, sigma, Gy);
  Vec nij = nijenhuis_point(cd, bp.G, bp.dG, x, y);
  return nij + (2.0 * g_x_Gy) * bp.U - (2.0 * g_x_Hy) * bp.V +
         2.0 * (vy * Hx - vx * Hy) + s_gy * Hx - s_gx * Hy + s_x * GHy -
         s_y * GHx;
}

Vec tensor_T_point(const CurvatureData& cd, const BundleAtPoint& bp, const Vec& sigma,
                   std::span<const double> x, std::span<const double> y) {
  const int d = cd.dim;
  Vec Gx = mat_apply(d, bp.G, x);
  Vec Gy = mat_apply(d, bp.G, y);
  Vec Hx = mat_apply(d, bp.H, x);
  Vec Hy = mat_apply(d, bp.H, y);
  Mat GH = mat_mul(d, bp.G, bp.H);
  Vec GHx = mat_apply(d, GH, x);
  Vec GHy = mat_apply(d, GH, y);
  double g_x_Gy = metric_dot(cd, x, Gy);
  double g_x_Hy = metric_dot(cd, x, Hy);
  double ux = covec_pair(d, bp.u, x);
  double uy = covec_pair(d, bp.u, y);
  double s_x = covec_pair(d, sigma, x);
  double s_y = covec_pair(d, sigma, y);
  double s_hx = covec_pair(d, sigma, Hx);
  double s_hy = covec_pair(d, sigma, Hy);
  Vec nij = nijenhuis_point(cd, bp.H, bp.dH, x, y);
  return nij - (2.0 * g_x_Gy) * bp.U + (2.0 * g_x_Hy) * bp.V +
         2.0 * (uy * Gx - ux * Gy) + s_hx * Gy - s_hy * Gx + s_x * GHy -
         s_y * GHx;
}

SplitVector horizontal_project_point(const BundleAtPoint& bp, std::span<const double> x) {
  const int d = bp.dim;
  SplitVector out;
  out.u_coeff = covec_pair(d, bp.u, x);
  out.v_coeff = covec_pair(d, bp.v, x);
  out.horizontal = to_vec(x) - out.u_coeff * bp.U - out.v_coeff * bp.V;
  return out;
}

EndResiduals sasakian_residuals_point(const CurvatureData& cd, const BundleAtPoint& bp,
                                      std::span<const double> x,
                                      std::span<const double> y) {
  const int d = cd.dim;
  Mat nG = nabla_end_point(cd, bp.G, bp.dG, x);
  Mat nH = nabla_end_point(cd, bp.H, bp.dH, x);
  Vec nGy = mat_apply(d, nG, y);
  Vec nHy = mat_apply(d, nH, y);
  Vec Jx = mat_apply(d, bp.J, x);
  Mat HG = mat_mul(d, bp.H, bp.G);
  Vec HGy = mat_apply(d, HG, y);
  double ux = covec_pair(d, bp.u, x);
  double uy = covec_pair(d, bp.u, y);
  double vx = covec_pair(d, bp.v, x);
  double vy = covec_pair(d, bp.v, y);
  double gxy = metric_dot(cd, x, y);
  double gJxy = metric_dot(cd, Jx, y);
  Vec xs = to_vec(x);
  Vec rhs_g =
      (-2.0 * vx) * HGy - uy * xs - vy * Jx + gxy * bp.U + gJxy * bp.V;
  Vec rhs_h =
      (2.0 * ux) * HGy + uy * Jx - vy * xs - gJxy * bp.U + gxy * bp.V;
  return {nGy - rhs_g, nHy - rhs_h};
}

EndResiduals normality_residuals_point(const CurvatureData& cd, const BundleAtPoint& bp,
                                       const Vec& sigma, double dsigma_uv,
                                       std::span<const double> x,
                                       std::span<const double> y) {
  const int d = cd.dim;
  Mat nG = nabla_end_point(cd, bp.G, bp.dG, x);
  Mat nH = nabla_end_point(cd, bp.H, bp.dH, x);
  Vec nGy = mat_apply(d, nG, y);
  Vec nHy = mat_apply(d, nH, y);
  Vec Jx = mat_apply(d, bp.J, x);
  Vec Gy = mat_apply(d, bp.G, y);
  Vec Hy = mat_apply(d, bp.H, y);
  Mat HG = mat_mul(d, bp.H, bp.G);
  Vec HGy = mat_apply(d, HG, y);
  double ux = covec_pair(d, bp.u, x);
  double uy = covec_pair(d, bp.u, y);
  double vx = covec_pair(d, bp.v, x);
  double vy = covec_pair(d, bp.v, y);
  double sx = covec_pair(d, sigma, x);
  double gxy = metric_dot(cd, x, y);
  double gJxy = metric_dot(cd, Jx, y);
  Vec xs = to_vec(x);
  Vec y0 = horizontal_project_point(bp, y).horizontal;
  Vec Jy0 = mat_apply(d, bp.J, y0);
  Vec Gy0 = mat_apply(d, bp.G, y0);
  Mat nUJ = nabla_end_point(cd, bp.J, bp.dJ, bp.U);
  Vec nUJGy0 = mat_apply(d, nUJ, Gy0);
  Vec vert = uy * bp.V - vy * bp.U;
  Vec rhs_g = sx * Hy + (-2.0 * vx) * HGy - uy * xs - vy * Jx +
              vx * (2.0 * Jy0 + nUJGy0) + gxy * bp.U + gJxy * bp.V -
              (dsigma_uv * vx) * vert;
  Vec rhs_h = (-sx) * Gy + (2.0 * ux) * HGy + uy * Jx - vy * xs +
              ux * (-2.0 * Jy0 - nUJGy0) - gJxy * bp.U + gxy * bp.V +
              (dsigma_uv * ux) * vert;
  return {nGy - rhs_g, nHy - rhs_h};
}

Vec nabla_j_residual_point(const CurvatureData& cd, const BundleAtPoint& bp,
                           std::span<const double> x, std::span<const double> y) {
  const int d = cd.dim;
  Mat nJ = nabla_end_point(cd, bp.J, bp.dJ, x);
  Vec nJy = mat_apply(d, nJ, y);
  Vec Gy = mat_apply(d, bp.G, y);
  Vec Hy = mat_apply(d, bp.H, y);
  double ux = covec_pair(d, bp.u, x);
  double vx = covec_pair(d, bp.v, x);
  return nJy - ((-2.0 * ux) * Hy + (2.0 * vx) * Gy);
}

Vec nabla_j_normal_residual_point(const CurvatureData& cd, const BundleAtPoint& bp,
                                  std::span<const double> x, std::span<const double> y) {
  const int d = cd.dim;
  Mat nJ = nabla_end_point(cd, bp.J, bp.dJ, x);
  Vec nJy = mat_apply(d, nJ, y);
  Vec Gy = mat_apply(d, bp.G, y);
  Vec Hy = mat_apply(d, bp.H, y);
  double ux = covec_pair(d, bp.u, x);
  double vx = covec_pair(d, bp.v, x);
  Vec y0 = horizontal_project_point(bp, y).horizontal;
  Vec Hy0 = mat_apply(d, bp.H, y0);
  Vec Gy0 = mat_apply(d, bp.G, y0);
  Vec Jy0 = mat_apply(d, bp.J, y0);
  Mat nUJ = nabla_end_point(cd, bp.J, bp.dJ, bp.U);
  Vec rhs = (-2.0 * ux) * Hy + (2.0 * vx) * Gy +
            ux * (2.0 * Hy0 + mat_apply(d, nUJ, y0)) +
            vx * ((-2.0) * Gy0 + mat_apply(d, nUJ, Jy0));
  return nJy - rhs;
}

double du_law_residual_point(const CurvatureData& cd, const BundleAtPoint& bp,
                             const Vec& sigma, std::span<const double> x,
                             std::span<const double> y) {
  const int d = cd.dim;
  double lhs = bilinear_pair(d, bp.du, x, y);
  Vec Gy = mat_apply(d, bp.G, y);
  double sx = covec_pair(d, sigma, x);
  double sy = covec_pair(d, sigma, y);
  double vx = covec_pair(d, bp.v, x);
  double vy = covec_pair(d, bp.v, y);
  double rhs = metric_dot(cd, x, Gy) + (sx * vy - sy * vx);
  return std::abs(lhs - rhs);
}

double dv_law_residual_point(const CurvatureData& cd, const BundleAtPoint& bp,
                             const Vec& sigma, std::span<const double> x,
                             std::span<const double> y) {
  const int d = cd.dim;
  double lhs = bilinear_pair(d, bp.dv, x, y);
  Vec Hy = mat_apply(d, bp.H, y);
  double sx = covec_pair(d, sigma, x);
  double sy = covec_pair(d, sigma, y);
  double ux = covec_pair(d, bp.u, x);
  double uy = covec_pair(d, bp.u, y);
  double rhs = metric_dot(cd, x, Hy) - (sx * uy - sy * ux);
  return std::abs(lhs - rhs);
}

OneForm sigma_form(const MetricTensor& g, const VectorField& U, const VectorField& V) {
  const int d = g.dim;
  OneForm out = OneForm::zero(d);
  for (int i = 0; i < d; ++i) {
    out[i] = ScalarField::make_depth_limited([g, U, V, i, d](auto xs) {
      using T = typename decltype(xs)::value_type;
      auto ch = christoffel_ring<T>(g, xs);
      std::array<Dual<T>, kMaxDim> lifted;
      for (int m = 0; m < d; ++m)
        lifted[u(m)] = Dual<T>(xs[u(m)], T(m == i ? 1.0 : 0.0));
      std::span<const Dual<T>> lspan(lifted.data(), static_cast<std::size_t>(d));
      std::array<T, kMaxDim> uval{};
      std::array<T, kMaxDim> dui{};
      for (int k = 0; k < d; ++k) {
        Dual<T> lifted_uk = U[k].at(lspan);
        uval[u(k)] = lifted_uk.val;
        dui[u(k)] = lifted_uk.dot;
      }
      std::array<T, kMaxDim> w{};
      for (int k = 0; k < d; ++k) {
        T term = dui[u(k)];
        for (int l = 0; l < d; ++l)
          term += ch.gamma[u(idx3(k, i, l))] * uval[u(l)];
        w[u(k)] = term;
      }
      T acc(0.0);
      for (int m = 0; m < d; ++m) {
        T vm = V[m].at(xs);
        for (int k = 0; k < d; ++k)
          acc += ch.g[u(idx2(k, m))] * w[u(k)] * vm;
      }
      return acc;
    });
  }
  return out;
}

double dsigma_uv_at(const MetricTensor& g, const ContactStructureBundle& b,
                    std::span<const double> p) {
  OneForm sig = sigma_form(g, b.U, b.V);
  TwoForm ds = exterior_d_1form(sig, b.exterior_weight);
  Mat m = eval_two_form(ds, p);
  auto uv = eval_vector(b.U, p);
  auto vv = eval_vector(b.V, p);
  return bilinear_pair(g.dim, m, uv, vv);
}

Vec random_horizontal_unit(const CurvatureData& cd, const BundleAtPoint& bp,
                           SplitMix64& rng) {
  const int d = cd.dim;
  for (;;) {
    Vec raw{};
    for (int i = 0; i < d; ++i) raw[u(i)] = rng.next_symmetric();
    Vec h = horizontal_project_point(bp, raw).horizontal;
    double n2 = metric_dot(cd, h, h);
    if (n2 > 1e-4) return (1.0 / std::sqrt(n2)) * h;
  }
}

Vec random_unit_vector(const CurvatureData& cd, SplitMix64& rng) {
  const int d = cd.dim;
  for (;;) {
    Vec raw{};
    for (int i = 0; i < d; ++i) raw[u(i)] = rng.next_symmetric();
    double n2 = metric_dot(cd, raw, raw);
    if (n2 > 1e-4) return (1.0 / std::sqrt(n2)) * raw;
  }
}

}  // namespace contactgeo
