#pragma once

#include <array>

#include "skewgeo/linalg.hpp"

namespace skewgeo {

using Matrix3 = Eigen::Matrix3cd;

// Coordinate chart for complex symmetric 3x3 matrices, orthonormal for
// H(X,Y) = tr(X * conj(Y)). Basis order:
//   0: (E12+E21)/sqrt(2)   1: (E13+E31)/sqrt(2)   2: (E23+E32)/sqrt(2)
//   3: diag(1,-1,0)/sqrt(2)  4: diag(1,1,-2)/sqrt(6)  5: id/sqrt(3)
// The first five span the trace-free subspace; all six the full symmetric
// space. All basis matrices are real, so in these coordinates the standard
// Hermitian/bilinear forms and entrywise conjugation realize the trace
// forms and the conjugation real structure.
const std::array<Matrix3, 6>& sym3_basis();

/// Coordinates of a symmetric matrix; dim = 5 (trace-free) or 6.
Vector sym3_coords(const Matrix3& x, Eigen::Index dim);

/// Inverse chart; coords.size() must be 5 or 6.
Matrix3 sym3_matrix(const Vector& coords);

// Fixed matrices used by the sphere-in-quadric and plane-in-Grassmannian
// constructions.
Matrix3 quadric_base_matrix();   // Z0, unit norm, beta-isotropic
Matrix3 quadric_tangent1();      // Y1 = X1 Z0 - Z0 X1
Matrix3 quadric_tangent2();      // Y2 = X2 Z0 - Z0 X2
Matrix3 plane_basis1();          // A1
Matrix3 plane_basis2();          // A2
Matrix3 so3_generator_12();      // X1, rotation generator in the (1,2) plane
Matrix3 so3_generator_13();      // X2
Matrix3 so3_generator_23();      // X3

}  // namespace skewgeo
