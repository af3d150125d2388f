#include "contactgeo/suites.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string_view>
#include <utility>

#include "contactgeo/errors.hpp"

namespace contactgeo {
namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Vec draw_vec(const PointEval& pe, SplitMix64& rng) {
  Vec x{};
  for (int i = 0; i < pe.cd.dim; ++i) x[i] = rng.next_symmetric();
  return x;
}

Vec draw_horiz(const PointEval& pe, SplitMix64& rng) {
  return horizontal_project_point(pe.bp, draw_vec(pe, rng)).horizontal;
}

double gg(const PointEval& pe, const Vec& a, const Vec& b) {
  return metric_dot(pe.cd, a, b);
}

double r4(const PointEval& pe, const Vec& a, const Vec& b, const Vec& c,
          const Vec& d) {
  return r04_contract(pe.cd, a, b, c, d);
}

Vec app(const PointEval& pe, const Mat& m, const Vec& x) {
  return mat_apply(pe.cd.dim, m, x);
}

double cp(const PointEval& pe, const Vec& w, const Vec& x) {
  return covec_pair(pe.cd.dim, w, x);
}

Vec frame_leg(const CurvatureData& cd, int a) {
  Vec e{};
  for (int i = 0; i < cd.dim; ++i) e[i] = cd.frame[idx2(a, i)];
  return e;
}

using CheckFn = std::function<double(const PointEval&, SplitMix64&)>;

CheckDef mk_res(std::string id, std::string anchor, double scale, CheckFn fn) {
  CheckDef c;
  c.id = std::move(id);
  c.anchor = std::move(anchor);
  c.kind = CheckKind::residual;
  c.tol_scale = scale;
  c.fn = std::move(fn);
  return c;
}

CheckDef mk_res_abs(std::string id, std::string anchor, double abs_tol,
                    CheckFn fn) {
  CheckDef c;
  c.id = std::move(id);
  c.anchor = std::move(anchor);
  c.kind = CheckKind::residual;
  c.abs_tol = abs_tol;
  c.fn = std::move(fn);
  return c;
}

CheckDef mk_wit(std::string id, std::string anchor, CheckFn fn) {
  CheckDef c;
  c.id = std::move(id);
  c.anchor = std::move(anchor);
  c.kind = CheckKind::witness;
  c.fn = std::move(fn);
  return c;
}

std::vector<CheckDef> engine_checks(const ModelInstance& m) {
  std::vector<CheckDef> cs;

  cs.push_back(mk_res(
      "eng.metric_compat",
      "d_k g_ij = Gamma^m_ki g_mj + Gamma^m_kj g_im", 1.0,
      [](const PointEval& pe, SplitMix64&) {
        const auto& cd = pe.cd;
        double r = 0.0;
        for (int k = 0; k < cd.dim; ++k)
          for (int i = 0; i < cd.dim; ++i)
            for (int j = 0; j < cd.dim; ++j) {
              double s = cd.dg[idx3(k, i, j)];
              for (int mm = 0; mm < cd.dim; ++mm)
                s -= cd.gamma[idx3(mm, k, i)] * cd.g[idx2(mm, j)] +
                     cd.gamma[idx3(mm, k, j)] * cd.g[idx2(i, mm)];
              r = std::max(r, std::abs(s));
            }
        return r;
      }));

  cs.push_back(mk_res(
      "eng.torsion_free", "Gamma^k_ij = Gamma^k_ji", 1.0,
      [](const PointEval& pe, SplitMix64&) {
        const auto& cd = pe.cd;
        double r = 0.0;
        for (int k = 0; k < cd.dim; ++k)
          for (int i = 0; i < cd.dim; ++i)
            for (int j = 0; j < cd.dim; ++j)
              r = std::max(r, std::abs(cd.gamma[idx3(k, i, j)] -
                                       cd.gamma[idx3(k, j, i)]));
        return r;
      }));

  cs.push_back(mk_res(
      "eng.bianchi1", "R(X,Y)Z + R(Y,Z)X + R(Z,X)Y = 0", 1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        Vec x = draw_vec(pe, rng), y = draw_vec(pe, rng), z = draw_vec(pe, rng);
        Vec s = riem_apply(pe.cd, x, y, z);
        s = s + riem_apply(pe.cd, y, z, x);
        s = s + riem_apply(pe.cd, z, x, y);
        return max_abs(s);
      }));

  cs.push_back(mk_res(
      "eng.r04_skew_front", "R(X,Y,Z,W) = -R(Y,X,Z,W)", 1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        Vec x = draw_vec(pe, rng), y = draw_vec(pe, rng);
        Vec z = draw_vec(pe, rng), w = draw_vec(pe, rng);
        return std::abs(r4(pe, x, y, z, w) + r4(pe, y, x, z, w));
      }));

  cs.push_back(mk_res(
      "eng.r04_skew_back", "R(X,Y,Z,W) = -R(X,Y,W,Z)", 1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        Vec x = draw_vec(pe, rng), y = draw_vec(pe, rng);
        Vec z = draw_vec(pe, rng), w = draw_vec(pe, rng);
        return std::abs(r4(pe, x, y, z, w) + r4(pe, x, y, w, z));
      }));

  cs.push_back(mk_res(
      "eng.r04_pair", "R(X,Y,Z,W) = R(Z,W,X,Y)", 1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        Vec x = draw_vec(pe, rng), y = draw_vec(pe, rng);
        Vec z = draw_vec(pe, rng), w = draw_vec(pe, rng);
        return std::abs(r4(pe, x, y, z, w) - r4(pe, z, w, x, y));
      }));

  cs.push_back(mk_res(
      "eng.ricci_routes",
      "coordinate-trace Ricci agrees with the orthonormal-frame route", 1.0,
      [](const PointEval& pe, SplitMix64&) {
        auto alt = ricci_trace_route(pe.cd);
        double r = 0.0;
        for (int i = 0; i < pe.cd.dim; ++i)
          for (int j = 0; j < pe.cd.dim; ++j)
            r = std::max(r, std::abs(alt[idx2(i, j)] - pe.cd.ricci[idx2(i, j)]));
        return r;
      }));

  cs.push_back(mk_res(
      "eng.ricci_sym", "rho(X,Y) = rho(Y,X)", 1.0,
      [](const PointEval& pe, SplitMix64&) {
        double r = 0.0;
        for (int i = 0; i < pe.cd.dim; ++i)
          for (int j = 0; j < pe.cd.dim; ++j)
            r = std::max(r, std::abs(pe.cd.ricci[idx2(i, j)] -
                                     pe.cd.ricci[idx2(j, i)]));
        return r;
      }));

  cs.push_back(mk_res_abs(
      "eng.christoffel_fd",
      "dual-number Christoffel symbols match a central-difference oracle",
      1e-5,
      [](const PointEval& pe, SplitMix64&) {
        auto fd = christoffel_fd(pe.model->g, pe.p, 1e-4);
        double r = 0.0;
        for (int k = 0; k < pe.cd.dim; ++k)
          for (int i = 0; i < pe.cd.dim; ++i)
            for (int j = 0; j < pe.cd.dim; ++j) {
              double gij = pe.cd.gamma[idx3(k, i, j)];
              r = std::max(r, std::abs(gij - fd[idx3(k, i, j)]) /
                                  (1.0 + std::abs(gij)));
            }
        return r;
      }));

  cs.push_back(mk_res(
      "eng.frame_orthonormal", "g(E_a, E_b) = delta_ab", 1.0,
      [](const PointEval& pe, SplitMix64&) {
        double r = 0.0;
        for (int a = 0; a < pe.cd.dim; ++a) {
          Vec ea = frame_leg(pe.cd, a);
          for (int b = 0; b < pe.cd.dim; ++b) {
            Vec eb = frame_leg(pe.cd, b);
            double want = (a == b) ? 1.0 : 0.0;
            r = std::max(r, std::abs(gg(pe, ea, eb) - want));
          }
        }
        return r;
      }));

  cs.push_back(mk_res(
      "eng.ginv", "g . g^{-1} = I", 1.0,
      [](const PointEval& pe, SplitMix64&) {
        const auto& cd = pe.cd;
        double r = 0.0;
        for (int i = 0; i < cd.dim; ++i)
          for (int j = 0; j < cd.dim; ++j) {
            double s = (i == j) ? -1.0 : 0.0;
            for (int mm = 0; mm < cd.dim; ++mm)
              s += cd.g[idx2(i, mm)] * cd.ginv[idx2(mm, j)];
            r = std::max(r, std::abs(s));
          }
        return r;
      }));

  if (m.name == "sphere") {
    const double rsq = m.sphere_radius * m.sphere_radius;
    const int n = m.sphere_dim;
    const BCoefficients conc = b_preset("concircular", n);
    const BCoefficients proj = b_preset("projective", n);

    cs.push_back(mk_res_abs(
        "eng.sphere_sectional", "sectional curvature = 1/r^2 on every plane",
        1e-8,
        [rsq](const PointEval& pe, SplitMix64& rng) {
          Vec x = random_unit_vector(pe.cd, rng);
          Vec y{};
          double nrm = 0.0;
          do {
            y = random_unit_vector(pe.cd, rng);
            y = y - gg(pe, x, y) * x;
            nrm = std::sqrt(gg(pe, y, y));
          } while (nrm < 1e-6);
          y = (1.0 / nrm) * y;
          return std::abs(sectional(pe.cd, x, y) - 1.0 / rsq);
        }));

    cs.push_back(mk_res_abs(
        "eng.sphere_tau", "tau = n(n-1)/r^2", 1e-6,
        [rsq, n](const PointEval& pe, SplitMix64&) {
          return std::abs(pe.cd.tau - n * (n - 1.0) / rsq);
        }));

    cs.push_back(mk_res(
        "eng.sphere_ricci", "rho(X,Y) = ((n-1)/r^2) g(X,Y)", 10.0,
        [rsq, n](const PointEval& pe, SplitMix64& rng) {
          Vec x = draw_vec(pe, rng), y = draw_vec(pe, rng);
          return std::abs(ricci_pair(pe.cd, x, y) -
                          (n - 1.0) / rsq * gg(pe, x, y));
        }));

    cs.push_back(mk_res(
        "eng.sphere_concircular",
        "concircular coefficients vanish on a space form", 1.0,
        [conc](const PointEval& pe, SplitMix64& rng) {
          Vec x = draw_vec(pe, rng), y = draw_vec(pe, rng);
          Vec z = draw_vec(pe, rng), w = draw_vec(pe, rng);
          return std::abs(b_tensor(pe.cd, conc, x, y, z, w));
        }));

    cs.push_back(mk_res(
        "eng.sphere_projective",
        "projective coefficients vanish on a space form", 1.0,
        [proj](const PointEval& pe, SplitMix64& rng) {
          Vec x = draw_vec(pe, rng), y = draw_vec(pe, rng);
          Vec z = draw_vec(pe, rng), w = draw_vec(pe, rng);
          return std::abs(b_tensor(pe.cd, proj, x, y, z, w));
        }));
  }

  if (m.name == "flat-kahler") {
    cs.push_back(mk_res_abs(
        "eng.flat_gamma", "Gamma = 0 in flat coordinates", 1e-10,
        [](const PointEval& pe, SplitMix64&) {
          double r = 0.0;
          for (double gv : pe.cd.gamma) r = std::max(r, std::abs(gv));
          return r;
        }));
    cs.push_back(mk_res_abs(
        "eng.flat_riemann", "R = 0 on flat space", 1e-10,
        [](const PointEval& pe, SplitMix64&) {
          double r = 0.0;
          for (double rv : pe.cd.riem) r = std::max(r, std::abs(rv));
          return r;
        }));
    cs.push_back(mk_res_abs(
        "eng.flat_ricci", "rho = 0 on flat space", 1e-10,
        [](const PointEval& pe, SplitMix64&) {
          double r = 0.0;
          for (double rv : pe.cd.ricci) r = std::max(r, std::abs(rv));
          return r;
        }));
    cs.push_back(mk_res_abs(
        "eng.flat_tau", "tau = 0 on flat space", 1e-10,
        [](const PointEval& pe, SplitMix64&) { return std::abs(pe.cd.tau); }));
  }

  return cs;
}

std::vector<CheckDef> structure_checks() {
  std::vector<CheckDef> cs;

  cs.push_back(mk_res(
      "struct.h_eq_gj", "H = GJ", 1.0,
      [](const PointEval& pe, SplitMix64&) {
        const auto& bp = pe.bp;
        return max_abs(bp.H - mat_mul(pe.cd.dim, bp.G, bp.J));
      }));

  cs.push_back(mk_res(
      "struct.gj_anti", "GJ + JG = 0", 1.0,
      [](const PointEval& pe, SplitMix64&) {
        const auto& bp = pe.bp;
        return max_abs(mat_mul(pe.cd.dim, bp.G, bp.J) +
                       mat_mul(pe.cd.dim, bp.J, bp.G));
      }));

  cs.push_back(mk_res(
      "struct.g_sq", "G^2 X = -X + u(X)U + v(X)V", 1.0,
      [](const PointEval& pe, SplitMix64&) {
        const auto& bp = pe.bp;
        const int d = pe.cd.dim;
        Mat r = mat_mul(d, bp.G, bp.G) + mat_identity(d);
        r = r - outer(d, bp.U, bp.u) - outer(d, bp.V, bp.v);
        return max_abs(r);
      }));

  cs.push_back(mk_res(
      "struct.h_sq", "H^2 X = -X + u(X)U + v(X)V", 1.0,
      [](const PointEval& pe, SplitMix64&) {
        const auto& bp = pe.bp;
        const int d = pe.cd.dim;
        Mat r = mat_mul(d, bp.H, bp.H) + mat_identity(d);
        r = r - outer(d, bp.U, bp.u) - outer(d, bp.V, bp.v);
        return max_abs(r);
      }));

  cs.push_back(mk_res(
      "struct.j_sq", "J^2 X = -X", 1.0,
      [](const PointEval& pe, SplitMix64&) {
        const auto& bp = pe.bp;
        const int d = pe.cd.dim;
        return max_abs(mat_mul(d, bp.J, bp.J) + mat_identity(d));
      }));

  cs.push_back(mk_res(
      "struct.g_skew", "g(GX,Y) + g(X,GY) = 0", 1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        Vec x = draw_vec(pe, rng), y = draw_vec(pe, rng);
        return std::abs(gg(pe, app(pe, pe.bp.G, x), y) +
                        gg(pe, x, app(pe, pe.bp.G, y)));
      }));

  cs.push_back(mk_res(
      "struct.h_skew", "g(HX,Y) + g(X,HY) = 0", 1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        Vec x = draw_vec(pe, rng), y = draw_vec(pe, rng);
        return std::abs(gg(pe, app(pe, pe.bp.H, x), y) +
                        gg(pe, x, app(pe, pe.bp.H, y)));
      }));

  cs.push_back(mk_res(
      "struct.j_compat", "g(JX,JY) = g(X,Y)", 1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        Vec x = draw_vec(pe, rng), y = draw_vec(pe, rng);
        return std::abs(gg(pe, app(pe, pe.bp.J, x), app(pe, pe.bp.J, y)) -
                        gg(pe, x, y));
      }));

  cs.push_back(mk_res(
      "struct.g_compat", "g(GX,GY) = g(X,Y) - u(X)u(Y) - v(X)v(Y)", 1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        const auto& bp = pe.bp;
        Vec x = draw_vec(pe, rng), y = draw_vec(pe, rng);
        return std::abs(gg(pe, app(pe, bp.G, x), app(pe, bp.G, y)) -
                        gg(pe, x, y) + cp(pe, bp.u, x) * cp(pe, bp.u, y) +
                        cp(pe, bp.v, x) * cp(pe, bp.v, y));
      }));

  cs.push_back(mk_res(
      "struct.h_compat", "g(HX,HY) = g(X,Y) - u(X)u(Y) - v(X)v(Y)", 1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        const auto& bp = pe.bp;
        Vec x = draw_vec(pe, rng), y = draw_vec(pe, rng);
        return std::abs(gg(pe, app(pe, bp.H, x), app(pe, bp.H, y)) -
                        gg(pe, x, y) + cp(pe, bp.u, x) * cp(pe, bp.u, y) +
                        cp(pe, bp.v, x) * cp(pe, bp.v, y));
      }));

  cs.push_back(mk_res(
      "struct.g_kernel", "GU = 0, GV = 0", 1.0,
      [](const PointEval& pe, SplitMix64&) {
        const auto& bp = pe.bp;
        return std::max(max_abs(app(pe, bp.G, bp.U)),
                        max_abs(app(pe, bp.G, bp.V)));
      }));

  cs.push_back(mk_res(
      "struct.h_kernel", "HU = 0, HV = 0", 1.0,
      [](const PointEval& pe, SplitMix64&) {
        const auto& bp = pe.bp;
        return std::max(max_abs(app(pe, bp.H, bp.U)),
                        max_abs(app(pe, bp.H, bp.V)));
      }));

  cs.push_back(mk_res(
      "struct.j_vertical", "JU = -V, JV = U", 1.0,
      [](const PointEval& pe, SplitMix64&) {
        const auto& bp = pe.bp;
        return std::max(max_abs(app(pe, bp.J, bp.U) + bp.V),
                        max_abs(app(pe, bp.J, bp.V) - bp.U));
      }));

  cs.push_back(mk_res(
      "struct.g_coker", "u(GX) = 0, v(GX) = 0", 1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        const auto& bp = pe.bp;
        Vec x = draw_vec(pe, rng);
        Vec gx = app(pe, bp.G, x);
        return std::max(std::abs(cp(pe, bp.u, gx)), std::abs(cp(pe, bp.v, gx)));
      }));

  cs.push_back(mk_res(
      "struct.h_coker", "u(HX) = 0, v(HX) = 0", 1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        const auto& bp = pe.bp;
        Vec x = draw_vec(pe, rng);
        Vec hx = app(pe, bp.H, x);
        return std::max(std::abs(cp(pe, bp.u, hx)), std::abs(cp(pe, bp.v, hx)));
      }));

  cs.push_back(mk_res(
      "struct.uv_j", "v(X) = u(JX)", 1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        const auto& bp = pe.bp;
        Vec x = draw_vec(pe, rng);
        return std::abs(cp(pe, bp.v, x) - cp(pe, bp.u, app(pe, bp.J, x)));
      }));

  cs.push_back(mk_res(
      "struct.duality", "u(X) = g(X,U), v(X) = g(X,V)", 1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        const auto& bp = pe.bp;
        Vec x = draw_vec(pe, rng);
        return std::max(std::abs(cp(pe, bp.u, x) - gg(pe, x, bp.U)),
                        std::abs(cp(pe, bp.v, x) - gg(pe, x, bp.V)));
      }));

  cs.push_back(mk_res(
      "struct.norms", "u(U) = v(V) = 1, u(V) = v(U) = 0", 1.0,
      [](const PointEval& pe, SplitMix64&) {
        const auto& bp = pe.bp;
        double r = std::abs(cp(pe, bp.u, bp.U) - 1.0);
        r = std::max(r, std::abs(cp(pe, bp.v, bp.V) - 1.0));
        r = std::max(r, std::abs(cp(pe, bp.u, bp.V)));
        r = std::max(r, std::abs(cp(pe, bp.v, bp.U)));
        return r;
      }));

  cs.push_back(mk_res(
      "struct.hg", "HGX = JX + u(X)V - v(X)U", 1.0,
      [](const PointEval& pe, SplitMix64&) {
        const auto& bp = pe.bp;
        const int d = pe.cd.dim;
        Mat r = mat_mul(d, bp.H, bp.G) - bp.J;
        r = r - outer(d, bp.V, bp.u) + outer(d, bp.U, bp.v);
        return max_abs(r);
      }));

  cs.push_back(mk_res(
      "struct.gh", "GHX = -JX - u(X)V + v(X)U", 1.0,
      [](const PointEval& pe, SplitMix64&) {
        const auto& bp = pe.bp;
        const int d = pe.cd.dim;
        Mat r = mat_mul(d, bp.G, bp.H) + bp.J;
        r = r + outer(d, bp.V, bp.u) - outer(d, bp.U, bp.v);
        return max_abs(r);
      }));

  cs.push_back(mk_res(
      "struct.jh", "JH = G, HJ = -G", 1.0,
      [](const PointEval& pe, SplitMix64&) {
        const auto& bp = pe.bp;
        const int d = pe.cd.dim;
        return std::max(max_abs(mat_mul(d, bp.J, bp.H) - bp.G),
                        max_abs(mat_mul(d, bp.H, bp.J) + bp.G));
      }));

  return cs;
}

std::vector<CheckDef> sasakian_checks() {
  std::vector<CheckDef> cs;

  cs.push_back(mk_res(
      "sas.nabla_g",
      "(nabla_X G)Y = -2v(X)HGY - u(Y)X - v(Y)JX + g(X,Y)U + g(JX,Y)V", 1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        Vec x = draw_vec(pe, rng), y = draw_vec(pe, rng);
        return max_abs(sasakian_residuals_point(pe.cd, pe.bp, x, y).res_g);
      }));

  cs.push_back(mk_res(
      "sas.nabla_h",
      "(nabla_X H)Y = 2u(X)HGY + u(Y)JX - v(Y)X - g(JX,Y)U + g(X,Y)V", 1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        Vec x = draw_vec(pe, rng), y = draw_vec(pe, rng);
        return max_abs(sasakian_residuals_point(pe.cd, pe.bp, x, y).res_h);
      }));

  cs.push_back(mk_res(
      "sas.nabla_j", "(nabla_X J)Y = -2u(X)HY + 2v(X)GY", 1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        Vec x = draw_vec(pe, rng), y = draw_vec(pe, rng);
        return max_abs(nabla_j_residual_point(pe.cd, pe.bp, x, y));
      }));

  cs.push_back(mk_res(
      "sas.nabla_u", "nabla_X U = -GX", 1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        Vec x = draw_vec(pe, rng);
        Vec nu = nabla_vector_point(pe.cd, pe.bp.dU, pe.bp.U, x);
        return max_abs(nu + app(pe, pe.bp.G, x));
      }));

  cs.push_back(mk_res(
      "sas.nabla_v", "nabla_X V = -HX", 1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        Vec x = draw_vec(pe, rng);
        Vec nv = nabla_vector_point(pe.cd, pe.bp.dV, pe.bp.V, x);
        return max_abs(nv + app(pe, pe.bp.H, x));
      }));

  cs.push_back(mk_res(
      "sas.sigma", "sigma(X) = g(nabla_X U, V) = 0", 1.0,
      [](const PointEval& pe, SplitMix64&) { return max_abs(pe.sigma); }));

  cs.push_back(mk_res(
      "sas.du", "du(X,Y) = g(X,GY) + (sigma^v)(X,Y)", 1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        Vec x = draw_vec(pe, rng), y = draw_vec(pe, rng);
        return std::abs(du_law_residual_point(pe.cd, pe.bp, pe.sigma, x, y));
      }));

  cs.push_back(mk_res(
      "sas.dv", "dv(X,Y) = g(X,HY) - (sigma^u)(X,Y)", 1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        Vec x = draw_vec(pe, rng), y = draw_vec(pe, rng);
        return std::abs(dv_law_residual_point(pe.cd, pe.bp, pe.sigma, x, y));
      }));

  cs.push_back(mk_res(
      "sas.vertical_nabla",
      "nabla_U U = sigma(U)V, nabla_U V = -sigma(U)U, "
      "nabla_V U = sigma(V)V, nabla_V V = -sigma(V)U",
      1.0,
      [](const PointEval& pe, SplitMix64&) {
        const auto& bp = pe.bp;
        double su = cp(pe, pe.sigma, bp.U);
        double sv = cp(pe, pe.sigma, bp.V);
        double r = max_abs(nabla_vector_point(pe.cd, bp.dU, bp.U, bp.U) -
                           su * bp.V);
        r = std::max(r, max_abs(nabla_vector_point(pe.cd, bp.dV, bp.V, bp.U) +
                                su * bp.U));
        r = std::max(r, max_abs(nabla_vector_point(pe.cd, bp.dU, bp.U, bp.V) -
                                sv * bp.V));
        r = std::max(r, max_abs(nabla_vector_point(pe.cd, bp.dV, bp.V, bp.V) +
                                sv * bp.U));
        return r;
      }));

  return cs;
}

std::vector<CheckDef> normality_checks() {
  std::vector<CheckDef> cs;

  cs.push_back(mk_res(
      "norm.s_horizontal", "S(X,Y) = 0 for horizontal X, Y", 1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        Vec x = draw_horiz(pe, rng), y = draw_horiz(pe, rng);
        return max_abs(tensor_S_point(pe.cd, pe.bp, pe.sigma, x, y));
      }));

  cs.push_back(mk_res(
      "norm.t_horizontal", "T(X,Y) = 0 for horizontal X, Y", 1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        Vec x = draw_horiz(pe, rng), y = draw_horiz(pe, rng);
        return max_abs(tensor_T_point(pe.cd, pe.bp, pe.sigma, x, y));
      }));

  cs.push_back(mk_res(
      "norm.s_u", "S(X,U) = 0", 1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        Vec x = draw_vec(pe, rng);
        return max_abs(tensor_S_point(pe.cd, pe.bp, pe.sigma, x, pe.bp.U));
      }));

  cs.push_back(mk_res(
      "norm.t_v", "T(X,V) = 0", 1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        Vec x = draw_vec(pe, rng);
        return max_abs(tensor_T_point(pe.cd, pe.bp, pe.sigma, x, pe.bp.V));
      }));

  cs.push_back(mk_res(
      "norm.s_xv", "S(X,V) = 2HX", 1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        Vec x = draw_vec(pe, rng);
        Vec s = tensor_S_point(pe.cd, pe.bp, pe.sigma, x, pe.bp.V);
        return max_abs(s - 2.0 * app(pe, pe.bp.H, x));
      }));

  cs.push_back(mk_res(
      "norm.t_xu", "T(X,U) = 2GX", 1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        Vec x = draw_vec(pe, rng);
        Vec t = tensor_T_point(pe.cd, pe.bp, pe.sigma, x, pe.bp.U);
        return max_abs(t - 2.0 * app(pe, pe.bp.G, x));
      }));

  cs.push_back(mk_wit(
      "norm.ik_probe",
      "S(X,V) = 2HX and T(X,U) = 2GX do not vanish "
      "(nonvanishing witnessed, not proved)",
      [](const PointEval& pe, SplitMix64& rng) {
        Vec x = random_horizontal_unit(pe.cd, pe.bp, rng);
        double s = max_abs(tensor_S_point(pe.cd, pe.bp, pe.sigma, x, pe.bp.V));
        double t = max_abs(tensor_T_point(pe.cd, pe.bp, pe.sigma, x, pe.bp.U));
        return std::max(s, t);
      }));

  cs.push_back(mk_res(
      "norm.thm_g",
      "(nabla_X G)Y = sigma(X)HY - 2v(X)HGY - u(Y)X - v(Y)JX "
      "+ v(X)(2JY0 + (nabla_U J)GY0) + g(X,Y)U + g(JX,Y)V "
      "- dsigma(U,V) v(X)(u(Y)V - v(Y)U)",
      1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        Vec x = draw_vec(pe, rng), y = draw_vec(pe, rng);
        return max_abs(normality_residuals_point(pe.cd, pe.bp, pe.sigma,
                                                 pe.dsigma_uv, x, y)
                           .res_g);
      }));

  cs.push_back(mk_res(
      "norm.thm_h",
      "(nabla_X H)Y = -sigma(X)GY + 2u(X)HGY + u(Y)JX - v(Y)X "
      "+ u(X)(-2JY0 - (nabla_U J)GY0) - g(JX,Y)U + g(X,Y)V "
      "+ dsigma(U,V) u(X)(u(Y)V - v(Y)U)",
      1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        Vec x = draw_vec(pe, rng), y = draw_vec(pe, rng);
        return max_abs(normality_residuals_point(pe.cd, pe.bp, pe.sigma,
                                                 pe.dsigma_uv, x, y)
                           .res_h);
      }));

  cs.push_back(mk_res(
      "norm.nabla_j_general",
      "(nabla_X J)Y = -2u(X)HY + 2v(X)GY + u(X)(2HY0 + (nabla_U J)Y0) "
      "+ v(X)(-2GY0 + (nabla_U J)JY0)",
      1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        Vec x = draw_vec(pe, rng), y = draw_vec(pe, rng);
        return max_abs(nabla_j_normal_residual_point(pe.cd, pe.bp, x, y));
      }));

  cs.push_back(mk_res(
      "norm.j_integrable", "[J,J](X,Y) = 0", 1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        Vec x = draw_vec(pe, rng), y = draw_vec(pe, rng);
        return max_abs(nijenhuis_point(pe.cd, pe.bp.J, pe.bp.dJ, x, y));
      }));

  cs.push_back(mk_res(
      "norm.dsigma", "sigma = 0 forces (d sigma)(U,V) = 0", 1.0,
      [](const PointEval& pe, SplitMix64&) { return std::abs(pe.dsigma_uv); }));

  return cs;
}

std::vector<CheckDef> curvature_checks() {
  std::vector<CheckDef> cs;

  cs.push_back(mk_res(
      "curv.r_uv_v", "R(U,V)V = 0, R(V,U)U = 0", 1.0,
      [](const PointEval& pe, SplitMix64&) {
        const auto& bp = pe.bp;
        return std::max(max_abs(riem_apply(pe.cd, bp.U, bp.V, bp.V)),
                        max_abs(riem_apply(pe.cd, bp.V, bp.U, bp.U)));
      }));

  cs.push_back(mk_res(
      "curv.r_xu_u", "R(X,U)U = X - u(X)U - v(X)V", 1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        const auto& bp = pe.bp;
        Vec x = draw_vec(pe, rng);
        Vec lhs = riem_apply(pe.cd, x, bp.U, bp.U);
        Vec rhs = x - cp(pe, bp.u, x) * bp.U - cp(pe, bp.v, x) * bp.V;
        return max_abs(lhs - rhs);
      }));

  cs.push_back(mk_res(
      "curv.r_xv_v", "R(X,V)V = X - u(X)U - v(X)V", 1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        const auto& bp = pe.bp;
        Vec x = draw_vec(pe, rng);
        Vec lhs = riem_apply(pe.cd, x, bp.V, bp.V);
        Vec rhs = x - cp(pe, bp.u, x) * bp.U - cp(pe, bp.v, x) * bp.V;
        return max_abs(lhs - rhs);
      }));

  cs.push_back(mk_res(
      "curv.r_xu_v", "R(X,U)V = JX + u(X)V - v(X)U", 1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        const auto& bp = pe.bp;
        Vec x = draw_vec(pe, rng);
        Vec lhs = riem_apply(pe.cd, x, bp.U, bp.V);
        Vec rhs = app(pe, bp.J, x) + cp(pe, bp.u, x) * bp.V -
                  cp(pe, bp.v, x) * bp.U;
        return max_abs(lhs - rhs);
      }));

  cs.push_back(mk_res(
      "curv.r_xv_u", "R(X,V)U = -JX - u(X)V + v(X)U", 1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        const auto& bp = pe.bp;
        Vec x = draw_vec(pe, rng);
        Vec lhs = riem_apply(pe.cd, x, bp.V, bp.U);
        Vec rhs = -1.0 * app(pe, bp.J, x) - cp(pe, bp.u, x) * bp.V +
                  cp(pe, bp.v, x) * bp.U;
        return max_abs(lhs - rhs);
      }));

  cs.push_back(mk_res(
      "curv.r_xy_u",
      "R(X,Y)U = v(X)JY - v(Y)JX + 2(v(X)u(Y) - v(Y)u(X))V "
      "+ u(Y)X - u(X)Y - 2g(JX,Y)V",
      1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        const auto& bp = pe.bp;
        Vec x = draw_vec(pe, rng), y = draw_vec(pe, rng);
        double ux = cp(pe, bp.u, x), uy = cp(pe, bp.u, y);
        double vx = cp(pe, bp.v, x), vy = cp(pe, bp.v, y);
        Vec lhs = riem_apply(pe.cd, x, y, bp.U);
        Vec rhs = vx * app(pe, bp.J, y) - vy * app(pe, bp.J, x) +
                  (2.0 * (vx * uy - vy * ux)) * bp.V + uy * x - ux * y -
                  (2.0 * gg(pe, app(pe, bp.J, x), y)) * bp.V;
        return max_abs(lhs - rhs);
      }));

  cs.push_back(mk_res(
      "curv.r_xy_v",
      "R(X,Y)V = -u(X)JY + u(Y)JX + 2(u(X)v(Y) - u(Y)v(X))U "
      "+ v(Y)X - v(X)Y + 2g(JX,Y)U",
      1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        const auto& bp = pe.bp;
        Vec x = draw_vec(pe, rng), y = draw_vec(pe, rng);
        double ux = cp(pe, bp.u, x), uy = cp(pe, bp.u, y);
        double vx = cp(pe, bp.v, x), vy = cp(pe, bp.v, y);
        Vec lhs = riem_apply(pe.cd, x, y, bp.V);
        Vec rhs = -ux * app(pe, bp.J, y) + uy * app(pe, bp.J, x) +
                  (2.0 * (ux * vy - uy * vx)) * bp.U + vy * x - vx * y +
                  (2.0 * gg(pe, app(pe, bp.J, x), y)) * bp.U;
        return max_abs(lhs - rhs);
      }));

  cs.push_back(mk_res(
      "curv.r_uv_x", "R(U,V)X = -2JX - 2u(X)V + 2v(X)U", 1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        const auto& bp = pe.bp;
        Vec x = draw_vec(pe, rng);
        Vec lhs = riem_apply(pe.cd, bp.U, bp.V, x);
        Vec rhs = -2.0 * app(pe, bp.J, x) - (2.0 * cp(pe, bp.u, x)) * bp.V +
                  (2.0 * cp(pe, bp.v, x)) * bp.U;
        return max_abs(lhs - rhs);
      }));

  cs.push_back(mk_res(
      "curv.r_xu_y",
      "R(X,U)Y = v(Y)JX + 2v(X)JY - 2v(X)v(Y)U + 2v(X)u(Y)V "
      "- g(X,Y)U + u(Y)X + g(JY,X)V",
      1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        const auto& bp = pe.bp;
        Vec x = draw_vec(pe, rng), y = draw_vec(pe, rng);
        double uy = cp(pe, bp.u, y);
        double vx = cp(pe, bp.v, x), vy = cp(pe, bp.v, y);
        Vec lhs = riem_apply(pe.cd, x, bp.U, y);
        Vec rhs = vy * app(pe, bp.J, x) + (2.0 * vx) * app(pe, bp.J, y) -
                  (2.0 * vx * vy) * bp.U + (2.0 * vx * uy) * bp.V -
                  gg(pe, x, y) * bp.U + uy * x +
                  gg(pe, app(pe, bp.J, y), x) * bp.V;
        return max_abs(lhs - rhs);
      }));

  cs.push_back(mk_res(
      "curv.r_xv_y",
      "R(X,V)Y = -u(Y)JX - 2u(X)JY - g(JY,X)U - 2u(X)u(Y)V "
      "+ 2u(X)v(Y)U - g(X,Y)V + v(Y)X",
      1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        const auto& bp = pe.bp;
        Vec x = draw_vec(pe, rng), y = draw_vec(pe, rng);
        double ux = cp(pe, bp.u, x), uy = cp(pe, bp.u, y);
        double vy = cp(pe, bp.v, y);
        Vec lhs = riem_apply(pe.cd, x, bp.V, y);
        Vec rhs = -uy * app(pe, bp.J, x) - (2.0 * ux) * app(pe, bp.J, y) -
                  gg(pe, app(pe, bp.J, y), x) * bp.U -
                  (2.0 * ux * uy) * bp.V + (2.0 * ux * vy) * bp.U -
                  gg(pe, x, y) * bp.V + vy * x;
        return max_abs(lhs - rhs);
      }));

  return cs;
}

std::vector<CheckDef> ghsym_checks() {
  std::vector<CheckDef> cs;
  const double s = 10.0;

  cs.push_back(mk_res(
      "ghsym.g_invariance", "g(R(GX,GY)GZ,GW) = g(R(X,Y)Z,W)", s,
      [](const PointEval& pe, SplitMix64& rng) {
        const auto& bp = pe.bp;
        Vec x = random_horizontal_unit(pe.cd, bp, rng);
        Vec y = random_horizontal_unit(pe.cd, bp, rng);
        Vec z = random_horizontal_unit(pe.cd, bp, rng);
        Vec w = random_horizontal_unit(pe.cd, bp, rng);
        return std::abs(r4(pe, app(pe, bp.G, x), app(pe, bp.G, y),
                           app(pe, bp.G, z), app(pe, bp.G, w)) -
                        r4(pe, x, y, z, w));
      }));

  cs.push_back(mk_res(
      "ghsym.h_invariance", "g(R(HX,HY)HZ,HW) = g(R(X,Y)Z,W)", s,
      [](const PointEval& pe, SplitMix64& rng) {
        const auto& bp = pe.bp;
        Vec x = random_horizontal_unit(pe.cd, bp, rng);
        Vec y = random_horizontal_unit(pe.cd, bp, rng);
        Vec z = random_horizontal_unit(pe.cd, bp, rng);
        Vec w = random_horizontal_unit(pe.cd, bp, rng);
        return std::abs(r4(pe, app(pe, bp.H, x), app(pe, bp.H, y),
                           app(pe, bp.H, z), app(pe, bp.H, w)) -
                        r4(pe, x, y, z, w));
      }));

  cs.push_back(mk_res(
      "ghsym.triple_sum",
      "g(R(X,GX)GX,X) + g(R(X,HX)HX,X) + g(R(X,JX)JX,X) = -6 g(X,X)", s,
      [](const PointEval& pe, SplitMix64& rng) {
        const auto& bp = pe.bp;
        Vec x = random_horizontal_unit(pe.cd, bp, rng);
        Vec gx = app(pe, bp.G, x), hx = app(pe, bp.H, x), jx = app(pe, bp.J, x);
        double sum = r4(pe, x, gx, gx, x) + r4(pe, x, hx, hx, x) +
                     r4(pe, x, jx, jx, x);
        return std::abs(sum + 6.0 * gg(pe, x, x));
      }));

  cs.push_back(mk_res(
      "ghsym.g_plane_expansion",
      "g(R(X,GX)Y,GY) = g(R(X,Y)X,Y) + g(R(X,GY)X,GY) - 2g(GX,Y)^2 "
      "- 4g(HX,Y)^2 - 2g(X,Y)^2 + 2g(X,X)g(Y,Y) - 4g(JX,Y)^2",
      s,
      [](const PointEval& pe, SplitMix64& rng) {
        const auto& bp = pe.bp;
        Vec x = random_horizontal_unit(pe.cd, bp, rng);
        Vec y = random_horizontal_unit(pe.cd, bp, rng);
        Vec gx = app(pe, bp.G, x), gy = app(pe, bp.G, y);
        Vec hx = app(pe, bp.H, x), jx = app(pe, bp.J, x);
        double lhs = r4(pe, x, gx, y, gy);
        double rhs = r4(pe, x, y, x, y) + r4(pe, x, gy, x, gy) -
                     2.0 * gg(pe, gx, y) * gg(pe, gx, y) -
                     4.0 * gg(pe, hx, y) * gg(pe, hx, y) -
                     2.0 * gg(pe, x, y) * gg(pe, x, y) +
                     2.0 * gg(pe, x, x) * gg(pe, y, y) -
                     4.0 * gg(pe, jx, y) * gg(pe, jx, y);
        return std::abs(lhs - rhs);
      }));

  cs.push_back(mk_res(
      "ghsym.h_plane_expansion",
      "g(R(X,HX)Y,HY) = g(R(X,Y)X,Y) + g(R(X,HY)X,HY) - 2g(HX,Y)^2 "
      "- 4g(GX,Y)^2 - 2g(X,Y)^2 + 2g(X,X)g(Y,Y) - 4g(JX,Y)^2",
      s,
      [](const PointEval& pe, SplitMix64& rng) {
        const auto& bp = pe.bp;
        Vec x = random_horizontal_unit(pe.cd, bp, rng);
        Vec y = random_horizontal_unit(pe.cd, bp, rng);
        Vec hx = app(pe, bp.H, x), hy = app(pe, bp.H, y);
        Vec gx = app(pe, bp.G, x), jx = app(pe, bp.J, x);
        double lhs = r4(pe, x, hx, y, hy);
        double rhs = r4(pe, x, y, x, y) + r4(pe, x, hy, x, hy) -
                     2.0 * gg(pe, hx, y) * gg(pe, hx, y) -
                     4.0 * gg(pe, gx, y) * gg(pe, gx, y) -
                     2.0 * gg(pe, x, y) * gg(pe, x, y) +
                     2.0 * gg(pe, x, x) * gg(pe, y, y) -
                     4.0 * gg(pe, jx, y) * gg(pe, jx, y);
        return std::abs(lhs - rhs);
      }));

  cs.push_back(mk_res(
      "ghsym.jg_mixed", "g(R(X,HX)JX,GX) = -g(R(X,HX)HX,X) - 4g(X,X)^2", s,
      [](const PointEval& pe, SplitMix64& rng) {
        const auto& bp = pe.bp;
        Vec x = random_horizontal_unit(pe.cd, bp, rng);
        Vec gx = app(pe, bp.G, x), hx = app(pe, bp.H, x), jx = app(pe, bp.J, x);
        double xx = gg(pe, x, x);
        return std::abs(r4(pe, x, hx, jx, gx) + r4(pe, x, hx, hx, x) +
                        4.0 * xx * xx);
      }));

  cs.push_back(mk_res(
      "ghsym.jh_mixed", "g(R(X,JX)HX,GX) = g(R(X,JX)JX,X) - 2g(X,X)^2", s,
      [](const PointEval& pe, SplitMix64& rng) {
        const auto& bp = pe.bp;
        Vec x = random_horizontal_unit(pe.cd, bp, rng);
        Vec gx = app(pe, bp.G, x), hx = app(pe, bp.H, x), jx = app(pe, bp.J, x);
        double xx = gg(pe, x, x);
        return std::abs(r4(pe, x, jx, hx, gx) - r4(pe, x, jx, jx, x) +
                        2.0 * xx * xx);
      }));

  cs.push_back(mk_res(
      "ghsym.gh_plane", "g(R(GX,HX)HX,GX) = g(R(X,JX)JX,X)", s,
      [](const PointEval& pe, SplitMix64& rng) {
        const auto& bp = pe.bp;
        Vec x = random_horizontal_unit(pe.cd, bp, rng);
        Vec gx = app(pe, bp.G, x), hx = app(pe, bp.H, x), jx = app(pe, bp.J, x);
        return std::abs(r4(pe, gx, hx, hx, gx) - r4(pe, x, jx, jx, x));
      }));

  cs.push_back(mk_res(
      "ghsym.gj_plane", "g(R(GX,JX)JX,GX) = g(R(X,HX)HX,X)", s,
      [](const PointEval& pe, SplitMix64& rng) {
        const auto& bp = pe.bp;
        Vec x = random_horizontal_unit(pe.cd, bp, rng);
        Vec gx = app(pe, bp.G, x), hx = app(pe, bp.H, x), jx = app(pe, bp.J, x);
        return std::abs(r4(pe, gx, jx, jx, gx) - r4(pe, x, hx, hx, x));
      }));

  cs.push_back(mk_res(
      "ghsym.j_plane", "g(R(JX,JY)JY,JX) = g(R(X,Y)Y,X)", s,
      [](const PointEval& pe, SplitMix64& rng) {
        const auto& bp = pe.bp;
        Vec x = random_horizontal_unit(pe.cd, bp, rng);
        Vec y = random_horizontal_unit(pe.cd, bp, rng);
        Vec jx = app(pe, bp.J, x), jy = app(pe, bp.J, y);
        return std::abs(r4(pe, jx, jy, jy, jx) - r4(pe, x, y, y, x));
      }));

  cs.push_back(mk_res(
      "ghsym.j_rotation",
      "g(R(X,Y)JY,JX) = g(R(X,Y)Y,X) + 4g(X,GY)^2 + 4g(X,HY)^2", s,
      [](const PointEval& pe, SplitMix64& rng) {
        const auto& bp = pe.bp;
        Vec x = random_horizontal_unit(pe.cd, bp, rng);
        Vec y = random_horizontal_unit(pe.cd, bp, rng);
        Vec jx = app(pe, bp.J, x), jy = app(pe, bp.J, y);
        Vec gy = app(pe, bp.G, y), hy = app(pe, bp.H, y);
        double lhs = r4(pe, x, y, jy, jx);
        double rhs = r4(pe, x, y, y, x) + 4.0 * gg(pe, x, gy) * gg(pe, x, gy) +
                     4.0 * gg(pe, x, hy) * gg(pe, x, hy);
        return std::abs(lhs - rhs);
      }));

  cs.push_back(mk_res(
      "ghsym.j_exchange", "g(R(Y,JX)JX,Y) = g(R(X,JY)JY,X)", s,
      [](const PointEval& pe, SplitMix64& rng) {
        const auto& bp = pe.bp;
        Vec x = random_horizontal_unit(pe.cd, bp, rng);
        Vec y = random_horizontal_unit(pe.cd, bp, rng);
        Vec jx = app(pe, bp.J, x), jy = app(pe, bp.J, y);
        return std::abs(r4(pe, y, jx, jx, y) - r4(pe, x, jy, jy, x));
      }));

  cs.push_back(mk_res(
      "ghsym.j_cross",
      "g(R(X,JY)JX,Y) = g(R(X,JY)JY,X) + 4g(X,HY)^2 + 4g(X,GY)^2", s,
      [](const PointEval& pe, SplitMix64& rng) {
        const auto& bp = pe.bp;
        Vec x = random_horizontal_unit(pe.cd, bp, rng);
        Vec y = random_horizontal_unit(pe.cd, bp, rng);
        Vec jx = app(pe, bp.J, x), jy = app(pe, bp.J, y);
        Vec gy = app(pe, bp.G, y), hy = app(pe, bp.H, y);
        double lhs = r4(pe, x, jy, jx, y);
        double rhs = r4(pe, x, jy, jy, x) +
                     4.0 * gg(pe, x, hy) * gg(pe, x, hy) +
                     4.0 * gg(pe, x, gy) * gg(pe, x, gy);
        return std::abs(lhs - rhs);
      }));

  cs.push_back(mk_res(
      "ghsym.j_bianchi",
      "g(R(X,JX)JY,Y) = -g(R(JX,JY)X,Y) - g(R(JY,X)JX,Y)", s,
      [](const PointEval& pe, SplitMix64& rng) {
        const auto& bp = pe.bp;
        Vec x = random_horizontal_unit(pe.cd, bp, rng);
        Vec y = random_horizontal_unit(pe.cd, bp, rng);
        Vec jx = app(pe, bp.J, x), jy = app(pe, bp.J, y);
        return std::abs(r4(pe, x, jx, jy, y) + r4(pe, jx, jy, x, y) +
                        r4(pe, jy, x, jx, y));
      }));

  cs.push_back(mk_res(
      "ghsym.j_sum",
      "g(R(X,JX)JY,Y) = g(R(X,Y)Y,X) + g(R(X,JY)JY,X) "
      "+ 8(g(X,GY)^2 + g(X,HY)^2)",
      s,
      [](const PointEval& pe, SplitMix64& rng) {
        const auto& bp = pe.bp;
        Vec x = random_horizontal_unit(pe.cd, bp, rng);
        Vec y = random_horizontal_unit(pe.cd, bp, rng);
        Vec jx = app(pe, bp.J, x), jy = app(pe, bp.J, y);
        Vec gy = app(pe, bp.G, y), hy = app(pe, bp.H, y);
        double lhs = r4(pe, x, jx, jy, y);
        double rhs = r4(pe, x, y, y, x) + r4(pe, x, jy, jy, x) +
                     8.0 * (gg(pe, x, gy) * gg(pe, x, gy) +
                            gg(pe, x, hy) * gg(pe, x, hy));
        return std::abs(lhs - rhs);
      }));

  return cs;
}

// k(X, aGX + bHX) for unit horizontal X and a random unit (a, b).
double gh_sectional(const PointEval& pe, const Vec& x, SplitMix64& rng) {
  const auto& bp = pe.bp;
  double th = 2.0 * std::numbers::pi * rng.next_unit();
  Vec y = std::cos(th) * app(pe, bp.G, x) + std::sin(th) * app(pe, bp.H, x);
  return sectional(pe.cd, x, y);
}

std::vector<CheckDef> sectional_checks() {
  std::vector<CheckDef> cs;

  cs.push_back(mk_res(
      "sect.k_uv", "k(U,V) = 0", 1.0,
      [](const PointEval& pe, SplitMix64&) {
        return std::abs(sectional(pe.cd, pe.bp.U, pe.bp.V));
      }));

  cs.push_back(mk_res(
      "sect.k_xu", "k(X,U) = 1 for horizontal X", 1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        Vec x = random_horizontal_unit(pe.cd, pe.bp, rng);
        return std::abs(sectional(pe.cd, x, pe.bp.U) - 1.0);
      }));

  cs.push_back(mk_res(
      "sect.triple_sum", "k(X,GX) + k(X,HX) + k(X,JX) = -6", 10.0,
      [](const PointEval& pe, SplitMix64& rng) {
        const auto& bp = pe.bp;
        Vec x = random_horizontal_unit(pe.cd, bp, rng);
        double sum = sectional(pe.cd, x, app(pe, bp.G, x)) +
                     sectional(pe.cd, x, app(pe, bp.H, x)) +
                     sectional(pe.cd, x, app(pe, bp.J, x));
        return std::abs(sum + 6.0);
      }));

  cs.push_back(mk_res(
      "sect.gh_vs_j", "k(X,JX) = GH(X) + 3", 10.0,
      [](const PointEval& pe, SplitMix64& rng) {
        Vec x = random_horizontal_unit(pe.cd, pe.bp, rng);
        double kj = sectional(pe.cd, x, app(pe, pe.bp.J, x));
        return std::abs(kj - gh_sectional(pe, x, rng) - 3.0);
      }));

  cs.push_back(mk_res(
      "sect.gh_spread", "GH(X) = k(X, aGX + bHX) independent of (a,b)", 10.0,
      [](const PointEval& pe, SplitMix64& rng) {
        Vec x = random_horizontal_unit(pe.cd, pe.bp, rng);
        double lo = 0.0, hi = 0.0;
        for (int i = 0; i < 8; ++i) {
          double k = gh_sectional(pe, x, rng);
          if (i == 0) {
            lo = hi = k;
          } else {
            lo = std::min(lo, k);
            hi = std::max(hi, k);
          }
        }
        return hi - lo;
      }));

  cs.push_back(mk_res(
      "sect.gh_plus", "k(X,GX) + k(X,HX) + GH(X) = -9", 10.0,
      [](const PointEval& pe, SplitMix64& rng) {
        const auto& bp = pe.bp;
        Vec x = random_horizontal_unit(pe.cd, bp, rng);
        double sum = sectional(pe.cd, x, app(pe, bp.G, x)) +
                     sectional(pe.cd, x, app(pe, bp.H, x)) +
                     gh_sectional(pe, x, rng);
        return std::abs(sum + 9.0);
      }));

  cs.push_back(mk_res(
      "sect.gh_const", "GH(X) = -3 on this model", 10.0,
      [](const PointEval& pe, SplitMix64& rng) {
        Vec x = random_horizontal_unit(pe.cd, pe.bp, rng);
        return std::abs(gh_sectional(pe, x, rng) + 3.0);
      }));

  return cs;
}

std::vector<CheckDef> ricci_checks(const ModelInstance& m) {
  std::vector<CheckDef> cs;
  const double fourp = 4.0 * m.bundle->rank_p;

  cs.push_back(mk_res(
      "ric.uu_vv", "rho(U,U) = rho(V,V) = 4p", 1.0,
      [fourp](const PointEval& pe, SplitMix64&) {
        const auto& bp = pe.bp;
        return std::max(
            std::abs(ricci_pair(pe.cd, bp.U, bp.U) - fourp),
            std::abs(ricci_pair(pe.cd, bp.V, bp.V) - fourp));
      }));

  cs.push_back(mk_res(
      "ric.uv", "rho(U,V) = 0", 1.0,
      [](const PointEval& pe, SplitMix64&) {
        return std::abs(ricci_pair(pe.cd, pe.bp.U, pe.bp.V));
      }));

  cs.push_back(mk_res(
      "ric.xu", "rho(X,U) = 4p u(X)", 1.0,
      [fourp](const PointEval& pe, SplitMix64& rng) {
        Vec x = draw_vec(pe, rng);
        return std::abs(ricci_pair(pe.cd, x, pe.bp.U) -
                        fourp * cp(pe, pe.bp.u, x));
      }));

  cs.push_back(mk_res(
      "ric.xv", "rho(X,V) = 4p v(X)", 1.0,
      [fourp](const PointEval& pe, SplitMix64& rng) {
        Vec x = draw_vec(pe, rng);
        return std::abs(ricci_pair(pe.cd, x, pe.bp.V) -
                        fourp * cp(pe, pe.bp.v, x));
      }));

  cs.push_back(mk_res(
      "ric.g_invariance",
      "rho(X,Y) = rho(GX,GY) + 4p(u(X)u(Y) + v(X)v(Y))", 10.0,
      [fourp](const PointEval& pe, SplitMix64& rng) {
        const auto& bp = pe.bp;
        Vec x = draw_vec(pe, rng), y = draw_vec(pe, rng);
        return std::abs(ricci_pair(pe.cd, x, y) -
                        ricci_pair(pe.cd, app(pe, bp.G, x), app(pe, bp.G, y)) -
                        fourp * (cp(pe, bp.u, x) * cp(pe, bp.u, y) +
                                 cp(pe, bp.v, x) * cp(pe, bp.v, y)));
      }));

  cs.push_back(mk_res(
      "ric.h_invariance",
      "rho(X,Y) = rho(HX,HY) + 4p(u(X)u(Y) + v(X)v(Y))", 10.0,
      [fourp](const PointEval& pe, SplitMix64& rng) {
        const auto& bp = pe.bp;
        Vec x = draw_vec(pe, rng), y = draw_vec(pe, rng);
        return std::abs(ricci_pair(pe.cd, x, y) -
                        ricci_pair(pe.cd, app(pe, bp.H, x), app(pe, bp.H, y)) -
                        fourp * (cp(pe, bp.u, x) * cp(pe, bp.u, y) +
                                 cp(pe, bp.v, x) * cp(pe, bp.v, y)));
      }));

  cs.push_back(mk_res(
      "ric.tau", "tau = -8 on this model", 1.0,
      [](const PointEval& pe, SplitMix64&) {
        return std::abs(pe.cd.tau + 8.0);
      }));

  return cs;
}

std::vector<CheckDef> flatness_checks(const ModelInstance& m) {
  std::vector<CheckDef> cs;
  const int n = m.chart.dim;
  const int rank_p = m.bundle->rank_p;

  BCoefficients pure_r;
  pure_r.name = "riemann";
  pure_r.a[0] = 1.0;
  const BCoefficients conformal = b_preset("conformal", n);
  const BCoefficients conharmonic = b_preset("conharmonic", n);
  const BCoefficients concircular = b_preset("concircular", n);
  const BCoefficients projective = b_preset("projective", n);
  const BCoefficients quasi = b_preset("quasi-conformal", n, 2.0, 0.5);

  cs.push_back(mk_wit(
      "flat.nonflat_witness",
      "R(X,U,U,X) stays near 1 on unit horizontal X, so R != 0 "
      "(nonvanishing witnessed, not proved)",
      [](const PointEval& pe, SplitMix64& rng) {
        Vec x = random_horizontal_unit(pe.cd, pe.bp, rng);
        return std::abs(r4(pe, x, pe.bp.U, pe.bp.U, x));
      }));

  cs.push_back(mk_res(
      "flat.r_xuux_unit", "R(X,U,U,X) = 1 for unit horizontal X", 1.0,
      [](const PointEval& pe, SplitMix64& rng) {
        Vec x = random_horizontal_unit(pe.cd, pe.bp, rng);
        return std::abs(r4(pe, x, pe.bp.U, pe.bp.U, x) - 1.0);
      }));

  struct Probe {
    const char* id;
    const BCoefficients* c;
  };
  const Probe probes[] = {
      {"flat.b_witness_riemann", &pure_r},
      {"flat.b_witness_conformal", &conformal},
      {"flat.b_witness_conharmonic", &conharmonic},
      {"flat.b_witness_concircular", &concircular},
      {"flat.b_witness_projective", &projective},
      {"flat.b_witness_quasi_conformal", &quasi},
  };
  for (const Probe& pr : probes) {
    BCoefficients c = *pr.c;
    cs.push_back(mk_wit(
        pr.id,
        "max |B(X,Y,Z,W)| with " + c.name +
            " coefficients stays above the floor "
            "(nonvanishing witnessed, not proved)",
        [c](const PointEval& pe, SplitMix64& rng) {
          Vec x = draw_vec(pe, rng), y = draw_vec(pe, rng);
          Vec z = draw_vec(pe, rng), w = draw_vec(pe, rng);
          return std::abs(b_tensor(pe.cd, c, x, y, z, w));
        }));
  }

  cs.push_back(mk_wit(
      "flat.replay_riemann",
      "R = 0 would force rho = 0, but rho(U,U) = 4p != 0 (witnessed)",
      [](const PointEval& pe, SplitMix64&) {
        return std::abs(ricci_pair(pe.cd, pe.bp.U, pe.bp.U));
      }));

  const Probe replays[] = {
      {"flat.replay_conformal", &conformal},
      {"flat.replay_conharmonic", &conharmonic},
      {"flat.replay_quasi_conformal", &quasi},
  };
  for (const Probe& pr : replays) {
    BCoefficients c = *pr.c;
    cs.push_back(mk_wit(
        std::string(pr.id),
        "B = 0 with " + c.name +
            " coefficients would force rho(X,X) = "
            "-(a0 + a1 + 4p a2 + tau a8)/a5 for unit X; sampled rho(X,X) "
            "misses that constant (witnessed)",
        [c, rank_p](const PointEval& pe, SplitMix64& rng) {
          RicciReplay rp = b_flat_ricci_replay(c, rank_p, pe.cd.tau);
          if (!rp.applicable) throw ContractError(rp.reason);
          Vec x = random_unit_vector(pe.cd, rng);
          double gap_u =
              std::abs(ricci_pair(pe.cd, pe.bp.U, pe.bp.U) - rp.rho_hat);
          double gap_x = std::abs(ricci_pair(pe.cd, x, x) - rp.rho_hat);
          return std::max(gap_u, gap_x);
        }));
  }

  const Probe ghb_eq[] = {
      {"flat.gh_b_equality_riemann", &pure_r},
      {"flat.gh_b_equality_conformal", &conformal},
  };
  for (const Probe& pr : ghb_eq) {
    BCoefficients c = *pr.c;
    cs.push_back(mk_res(
        std::string(pr.id),
        "B(GX,GY,GZ,GW) = B(X,Y,Z,W) for horizontal arguments, " + c.name +
            " coefficients",
        10.0,
        [c](const PointEval& pe, SplitMix64& rng) {
          const auto& bp = pe.bp;
          Vec x = draw_horiz(pe, rng), y = draw_horiz(pe, rng);
          Vec z = draw_horiz(pe, rng), w = draw_horiz(pe, rng);
          return std::abs(b_tensor(pe.cd, c, app(pe, bp.G, x),
                                   app(pe, bp.G, y), app(pe, bp.G, z),
                                   app(pe, bp.G, w)) -
                          b_tensor(pe.cd, c, x, y, z, w));
        }));
  }

  cs.push_back(mk_wit(
      "flat.ghb_witness_g",
      "G^2(B(GX,GY)GZ) != 0 for conformal coefficients "
      "(nonvanishing witnessed, not proved)",
      [conformal](const PointEval& pe, SplitMix64& rng) {
        const auto& bp = pe.bp;
        Vec x = draw_horiz(pe, rng), y = draw_horiz(pe, rng);
        Vec z = draw_horiz(pe, rng);
        Vec w = b_tensor_13(pe.cd, conformal, app(pe, bp.G, x),
                            app(pe, bp.G, y), app(pe, bp.G, z));
        return max_abs(app(pe, bp.G, app(pe, bp.G, w)));
      }));

  cs.push_back(mk_wit(
      "flat.ghb_witness_h",
      "H^2(B(HX,HY)HZ) != 0 for conformal coefficients "
      "(nonvanishing witnessed, not proved)",
      [conformal](const PointEval& pe, SplitMix64& rng) {
        const auto& bp = pe.bp;
        Vec x = draw_horiz(pe, rng), y = draw_horiz(pe, rng);
        Vec z = draw_horiz(pe, rng);
        Vec w = b_tensor_13(pe.cd, conformal, app(pe, bp.H, x),
                            app(pe, bp.H, y), app(pe, bp.H, z));
        return max_abs(app(pe, bp.H, app(pe, bp.H, w)));
      }));

  cs.push_back(mk_res(
      "flat.conformal_trace",
      "conformal coefficients are totally trace-free: "
      "sum_a B(E_a,Y,Z,E_a) = 0",
      10.0,
      [conformal](const PointEval& pe, SplitMix64& rng) {
        Vec y = draw_vec(pe, rng), z = draw_vec(pe, rng);
        double tr = 0.0;
        for (int a = 0; a < pe.cd.dim; ++a) {
          Vec ea = frame_leg(pe.cd, a);
          tr += b_tensor(pe.cd, conformal, ea, y, z, ea);
        }
        return std::abs(tr);
      }));

  return cs;
}

PointEval make_point_eval(const ModelInstance& m, const LeviCivita& lc,
                          const Point& p, bool need_bundle, bool need_dsigma) {
  PointEval pe;
  pe.model = &m;
  pe.p = p;
  pe.cd = lc.at(p);
  if (need_bundle) {
    pe.has_bundle = true;
    pe.bp = bundle_at(*m.bundle, p);
    pe.sigma = sigma_covector(pe.cd, pe.bp);
    if (need_dsigma) pe.dsigma_uv = dsigma_uv_at(m.g, *m.bundle, p);
  }
  return pe;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {
      "engine-calibration",  "structure-laws",
      "sasakian-definition", "normality",
      "curvature-identities", "gh-curvature-symmetries",
      "sectional-relations", "ricci-identities",
      "flatness-probes",
  };
}

std::vector<std::string> suites_for(const ModelInstance& m) {
  if (m.bundle.has_value()) return suite_names();
  return {"engine-calibration"};
}

std::vector<CheckDef> suite_checks(const ModelInstance& m,
                                   const std::string& suite) {
  auto names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw SuiteError("unknown suite: " + suite);
  if (suite == "engine-calibration") return engine_checks(m);
  if (!m.bundle.has_value()) throw SuiteError("model has no contact bundle");
  if (suite == "structure-laws") return structure_checks();
  if (suite == "sasakian-definition") return sasakian_checks();
  if (suite == "normality") return normality_checks();
  if (suite == "curvature-identities") return curvature_checks();
  if (suite == "gh-curvature-symmetries") return ghsym_checks();
  if (suite == "sectional-relations") return sectional_checks();
  if (suite == "ricci-identities") return ricci_checks(m);
  return flatness_checks(m);
}

SuiteResult run_suite(const ModelInstance& m, const std::string& suite,
                      const SuiteConfig& cfg, Exec exec) {
  if (cfg.points < 1) throw ContractError("suite sample count must be >= 1");
  if (!(cfg.tol > 0.0)) throw ContractError("suite tolerance must be > 0");

  std::vector<CheckDef> checks = suite_checks(m, suite);
  const bool need_bundle = suite != "engine-calibration";
  const bool need_dsigma = suite == "normality";
  const int np = cfg.points;
  const int nc = static_cast<int>(checks.size());

  SplitMix64 point_rng{substream(cfg.seed, fnv1a(suite))};
  std::vector<Point> pts;
  pts.reserve(static_cast<size_t>(np));
  for (int i = 0; i < np; ++i) pts.push_back(sample_point(m.chart, point_rng));

  LeviCivita lc(m.g);
  std::vector<PointEval> evals(static_cast<size_t>(np));
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < np; ++i)
      evals[static_cast<size_t>(i)] =
          make_point_eval(m, lc, pts[static_cast<size_t>(i)], need_bundle,
                          need_dsigma);
  } else {
    for (int i = 0; i < np; ++i)
      evals[static_cast<size_t>(i)] =
          make_point_eval(m, lc, pts[static_cast<size_t>(i)], need_bundle,
                          need_dsigma);
  }

  // One magnitude per (check, point); the stream depends only on
  // (seed, check id, point index) so execution order cannot matter.
  std::vector<double> vals(static_cast<size_t>(nc) * np);
  auto eval_one = [&](int ci, int pi) {
    SplitMix64 rng{substream(cfg.seed, fnv1a(checks[static_cast<size_t>(ci)].id),
                             static_cast<std::uint64_t>(pi) + 1)};
    vals[static_cast<size_t>(ci) * np + pi] =
        checks[static_cast<size_t>(ci)].fn(evals[static_cast<size_t>(pi)], rng);
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < nc * np; ++k) eval_one(k / np, k % np);
  } else {
    for (int ci = 0; ci < nc; ++ci)
      for (int pi = 0; pi < np; ++pi) eval_one(ci, pi);
  }

  SuiteResult sr;
  sr.suite = suite;
  sr.pass = true;
  sr.checks.reserve(checks.size());
  for (int ci = 0; ci < nc; ++ci) {
    const CheckDef& c = checks[static_cast<size_t>(ci)];
    double mx = 0.0, mean = 0.0;
    for (int pi = 0; pi < np; ++pi) {
      double v = vals[static_cast<size_t>(ci) * np + pi];
      mx = std::max(mx, v);
      mean += v;
    }
    mean /= np;

    CheckResult r;
    r.id = c.id;
    r.anchor = c.anchor;
    r.kind = c.kind;
    if (c.kind == CheckKind::residual) {
      r.threshold = c.abs_tol >= 0.0 ? c.abs_tol : cfg.tol * c.tol_scale;
      r.pass = mx <= r.threshold;
    } else {
      r.threshold = c.floor_val;
      r.pass = mx >= r.threshold;
    }
    r.max_value = mx;
    r.mean_value = mean;
    sr.pass = sr.pass && r.pass;
    sr.checks.push_back(std::move(r));
  }
  return sr;
}

RicciReplay b_flat_ricci_replay(const BCoefficients& c, int rank_p,
                                double tau) {
  RicciReplay r;
  if (std::abs(c.a[5]) < 1e-15) {
    r.reason = "coefficient a5 vanishes: the replay isolates the Ricci "
               "constant by dividing by a5";
    return r;
  }
  if (std::abs(c.a[0] + c.a[1]) < 1e-15) {
    r.reason = "a0 + a1 vanishes: the replay's elimination step divides "
               "by a0 + a1";
    return r;
  }
  r.applicable = true;
  r.rho_hat =
      -(c.a[0] + c.a[1] + 4.0 * rank_p * c.a[2] + tau * c.a[8]) / c.a[5];
  return r;
}

}  // namespace contactgeo
