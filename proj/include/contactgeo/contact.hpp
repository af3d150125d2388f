#pragma once

#include <span>

#include "contactgeo/curvature.hpp"
#include "contactgeo/fields.hpp"
#include "contactgeo/pointops.hpp"
#include "contactgeo/prng.hpp"

namespace contactgeo {

// Almost contact metric 3-structure data carried by a model: the complex
// structure J, the pair of structure endomorphisms G, H = GJ, the two Reeb
// fields U, V and their metric duals u, v.  The metric itself lives on the
// owning model; every consumer receives it separately.
struct ContactStructureBundle {
  int dim = 0;
  int rank_p = 1;  // quaternionic-like rank: dim = 4*rank_p + 2
  // Weight the exterior derivative uses on this bundle's forms; calibration
  // probes both conventions before committing to one.
  double exterior_weight = kExteriorWeight;
  EndField J;
  EndField G;
  EndField H;
  VectorField U;
  VectorField V;
  OneForm u;
  OneForm v;
};

// Frozen first-order snapshot of the bundle at one point.  Endomorphism
// matrices use row i = output component, column j = input component, with
// kMaxDim stride.  dJ[k] holds the matrix of partial_k J, dU[k] the vector
// of partial_k U.  du/dv are the coordinate matrices of the exterior
// derivatives of u and v (antisymmetric, weight already applied).
struct BundleAtPoint {
  int dim = 0;
  Mat J{};
  Mat G{};
  Mat H{};
  Vec U{};
  Vec V{};
  Vec u{};
  Vec v{};
  std::array<Mat, kMaxDim> dJ{};
  std::array<Mat, kMaxDim> dG{};
  std::array<Mat, kMaxDim> dH{};
  std::array<Vec, kMaxDim> dU{};
  std::array<Vec, kMaxDim> dV{};
  Mat du{};
  Mat dv{};
};

BundleAtPoint bundle_at(const ContactStructureBundle& b, std::span<const double> p);

// Levi-Civita covariant derivative of a vector field along a direction,
// from cached jets: (nabla_dir X)^k = dir^i (d_i X^k + Gamma^k_{im} X^m).
Vec nabla_vector_point(const CurvatureData& cd, const std::array<Vec, kMaxDim>& jet,
                       const Vec& val, std::span<const double> dir);

// Covariant derivative of an endomorphism field along a direction:
// (nabla_dir A)^i_j = dir^k (d_k A^i_j + Gamma^i_{km} A^m_j - Gamma^m_{kj} A^i_m).
Mat nabla_end_point(const CurvatureData& cd, const Mat& a,
                    const std::array<Mat, kMaxDim>& da, std::span<const double> dir);

// The connection form of the vertical pair: sigma(X) = g(nabla_X U, V),
// returned as the covector sigma_i = sigma(partial_i).
Vec sigma_covector(const CurvatureData& cd, const BundleAtPoint& bp);

// Nijenhuis torsion of an endomorphism via covariant derivatives:
// [A,A](X,Y) = (nabla_{AX}A)Y - (nabla_{AY}A)X - A(nabla_X A)Y + A(nabla_Y A)X.
Vec nijenhuis_point(const CurvatureData& cd, const Mat& a,
                    const std::array<Mat, kMaxDim>& da, std::span<const double> x,
                    std::span<const double> y);

// Normality defect tensors built on the G / H torsions.  dsigma_uv is the
// value of (d sigma)(U, V) at the point; sigma the covector above.
Vec tensor_S_point(const CurvatureData& cd, const BundleAtPoint& bp, const Vec& sigma,
                   std::span<const double> x, std::span<const double> y);
Vec tensor_T_point(const CurvatureData& cd, const BundleAtPoint& bp, const Vec& sigma,
                   std::span<const double> x, std::span<const double> y);

struct SplitVector {
  Vec horizontal{};
  double u_coeff = 0.0;
  double v_coeff = 0.0;
};

// x = horizontal + u_coeff*U + v_coeff*V with u(horizontal) = v(horizontal) = 0.
SplitVector horizontal_project_point(const BundleAtPoint& bp, std::span<const double> x);

struct EndResiduals {
  Vec res_g{};  // defect of the nabla G law
  Vec res_h{};  // defect of the nabla H law
};

// Residuals of the closed-form covariant derivative laws that hold when the
// vertical connection form vanishes:
//   (nabla_X G)Y = -2 v(X) HGY - u(Y) X - v(Y) JX + g(X,Y) U + g(JX,Y) V
//   (nabla_X H)Y = +2 u(X) HGY + u(Y) JX - v(Y) X - g(JX,Y) U + g(X,Y) V
EndResiduals sasakian_residuals_point(const CurvatureData& cd, const BundleAtPoint& bp,
                                      std::span<const double> x,
                                      std::span<const double> y);

// Residuals of the general normal-structure laws, valid for arbitrary sigma:
//   (nabla_X G)Y = sigma(X) HY - 2 v(X) HGY - u(Y) X - v(Y) JX
//                  + v(X) (2 J Y0 + (nabla_U J) G Y0) + g(X,Y) U + g(JX,Y) V
//                  - (d sigma)(U,V) v(X) (u(Y) V - v(Y) U)
//   (nabla_X H)Y = -sigma(X) GY + 2 u(X) HGY + u(Y) JX - v(Y) X
//                  + u(X) (-2 J Y0 - (nabla_U J) G Y0) - g(JX,Y) U + g(X,Y) V
//                  + (d sigma)(U,V) u(X) (u(Y) V - v(Y) U)
// where Y0 is the horizontal part of Y.
EndResiduals normality_residuals_point(const CurvatureData& cd, const BundleAtPoint& bp,
                                       const Vec& sigma, double dsigma_uv,
                                       std::span<const double> x,
                                       std::span<const double> y);

// Residual of (nabla_X J)Y = -2u(X) HY + 2v(X) GY (sigma = 0 form).
Vec nabla_j_residual_point(const CurvatureData& cd, const BundleAtPoint& bp,
                           std::span<const double> x, std::span<const double> y);

// Residual of the general form
//   (nabla_X J)Y = -2u(X) HY + 2v(X) GY + u(X) (2 H Y0 + (nabla_U J) Y0)
//                  + v(X) (-2 G Y0 + (nabla_U J) J Y0).
Vec nabla_j_normal_residual_point(const CurvatureData& cd, const BundleAtPoint& bp,
                                  std::span<const double> x, std::span<const double> y);

// Residuals of the fundamental 2-form laws
//   du(X,Y) = g(X,GY) + (sigma^v)(X,Y),  dv(X,Y) = g(X,HY) - (sigma^u)(X,Y)
// with (a^b)(X,Y) = a(X)b(Y) - a(Y)b(X).
double du_law_residual_point(const CurvatureData& cd, const BundleAtPoint& bp,
                             const Vec& sigma, std::span<const double> x,
                             std::span<const double> y);
double dv_law_residual_point(const CurvatureData& cd, const BundleAtPoint& bp,
                             const Vec& sigma, std::span<const double> x,
                             std::span<const double> y);

// The connection form as a scalar-field covector, for exterior calculus on
// it.  Components are depth-limited: they consume two jet levels internally,
// so they may be differentiated at most twice more.
OneForm sigma_form(const MetricTensor& g, const VectorField& U, const VectorField& V);

// (d sigma)(U, V) evaluated at p via the field route above.
double dsigma_uv_at(const MetricTensor& g, const ContactStructureBundle& b,
                    std::span<const double> p);

// Unit-norm g-random vector in the kernel of both u and v at the point.
Vec random_horizontal_unit(const CurvatureData& cd, const BundleAtPoint& bp,
                           SplitMix64& rng);

// Unit-norm g-random vector with no horizontality constraint.
Vec random_unit_vector(const CurvatureData& cd, SplitMix64& rng);

}  // namespace contactgeo
