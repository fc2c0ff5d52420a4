#pragma once

#include <optional>
#include <vector>

#include "skewgeo/linalg.hpp"

namespace skewgeo {

/// Ambient data for a complex quadric in coordinates where the real
/// structure is entrywise conjugation.
struct QuadricContext {
  SesquilinearForm h;
  BilinearForm b;
  AntilinearStructure a;
};

QuadricContext standard_quadric_context(Eigen::Index n);

/// A point [z] of the quadric, stored through a representative with
/// h(z,z) = 1 and b(z,z) = 0.
struct QuadricPoint {
  Vector z;
};

/// Normalizes the representative to unit h-norm; throws NumericalError if z
/// is not b-isotropic.
QuadricPoint make_quadric_point(const QuadricContext& ctx, Vector z,
                                double tol = 1e-10);

double quadric_point_residual(const QuadricContext& ctx, const QuadricPoint& p);

/// A plane of a 2-Grassmannian: orthonormal basis columns. Quaternionic
/// planes carry the ambient structure and store a J-adapted basis
/// (b1, J b1, b2, J b2).
struct PlanePoint {
  Matrix basis;
  bool quaternionic = false;
  std::optional<AntilinearStructure> j;
};

PlanePoint make_plane_point(Matrix spanning,
                            std::optional<AntilinearStructure> j = std::nullopt,
                            double tol = 1e-9);

Matrix plane_projector(const PlanePoint& p);
double plane_point_residual(const PlanePoint& p);

/// Tangent vector at a plane as L in Hom(Z0, Z0_perp), together with the
/// orthonormal bases it is written in.
struct TangentAtPlane {
  Matrix hom;         // (n-k) x k
  Matrix plane_basis; // n x k
  Matrix perp_basis;  // n x (n-k)
};

/// Cartan splitting of the ambient transvection algebra at a base point.
struct CartanSplitting {
  std::vector<Matrix> k_basis;
  std::vector<Matrix> m_basis;
};

/// Max bracket-relation residual ([k,k] in k, [k,m] in m, [m,m] in k).
double splitting_bracket_residual(const CartanSplitting& s);

/// Component of x along the real span of a trace-orthonormal family.
Matrix project_real_span(const std::vector<Matrix>& family, const Matrix& x);

/// Splitting of the skew algebra of the real form at a quadric point:
/// W1 = span{RE(sqrt(2) z), IM(sqrt(2) z)}, W2 its real complement; k-part
/// preserves both, m-part exchanges them. Bases are unit Frobenius norm.
CartanSplitting quadric_splitting(const QuadricContext& ctx, const QuadricPoint& p);

/// The two real subspaces W1 (n x 2) and W2 (n x (n-2)) above.
std::pair<Matrix, Matrix> quadric_w_spaces(const QuadricContext& ctx,
                                           const QuadricPoint& p);

/// Splitting of an ambient algebra (trace-orthonormalized working basis)
/// into the stabilizer of a plane and its trace-orthogonal complement.
CartanSplitting stabilizer_splitting(const std::vector<Matrix>& ambient_basis,
                                     const Matrix& plane_basis,
                                     double rel_tol = 1e-9);

/// exp(t*direction) applied to the point; direction must lie in the span of
/// the splitting's m-part (residual-checked).
QuadricPoint geodesic(const QuadricContext& ctx, const QuadricPoint& p,
                      const Matrix& direction, const CartanSplitting& s, double t,
                      double tol = 1e-8);
PlanePoint geodesic(const PlanePoint& p, const Matrix& direction,
                    const CartanSplitting& s, double t, double tol = 1e-8);

/// Tangent vector of the orbit direction X (an ambient operator) at a point.
Vector tangent_from_algebra(const QuadricContext& ctx, const QuadricPoint& p,
                            const Matrix& x);
TangentAtPlane tangent_from_algebra(const PlanePoint& p, const Matrix& x);

/// Characteristic angle in [0, pi/4] of a tangent vector of the quadric:
/// phi = arccos(|b(w,w)| / h(w,w)) / 2.
double characteristic_angle_quadric(const QuadricContext& ctx, const Vector& w);

/// Characteristic angle of a Grassmannian tangent vector from the singular
/// values of its Hom representative. Quaternionic singular values must come
/// in pairs (tolerance 1e-8 relative).
double characteristic_angle_grassmann(const TangentAtPlane& l, bool quaternionic);

}  // namespace skewgeo
