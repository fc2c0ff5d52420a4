#include "skewgeo/sym3.hpp"

#include <cmath>

namespace skewgeo {

namespace {

Matrix3 sym_pair(int a, int b) {
  Matrix3 m = Matrix3::Zero();
  m(a, b) = 1.0 / std::sqrt(2.0);
  m(b, a) = 1.0 / std::sqrt(2.0);
  return m;
}

std::array<Matrix3, 6> make_basis() {
  std::array<Matrix3, 6> basis;
  basis[0] = sym_pair(0, 1);
  basis[1] = sym_pair(0, 2);
  basis[2] = sym_pair(1, 2);
  basis[3] = Matrix3::Zero();
  basis[3].diagonal() << 1, -1, 0;
  basis[3] /= std::sqrt(2.0);
  basis[4] = Matrix3::Zero();
  basis[4].diagonal() << 1, 1, -2;
  basis[4] /= std::sqrt(6.0);
  basis[5] = Matrix3::Identity() / std::sqrt(3.0);
  return basis;
}

}  // namespace

const std::array<Matrix3, 6>& sym3_basis() {
  static const std::array<Matrix3, 6> basis = make_basis();
  return basis;
}

Vector sym3_coords(const Matrix3& x, Eigen::Index dim) {
  if (dim != 5 && dim != 6) throw UsageError("sym3 chart dimension must be 5 or 6");
  if ((x - x.transpose()).norm() > 1e-12 * std::max(1.0, x.norm())) {
    throw UsageError("sym3 chart expects a symmetric matrix");
  }
  const auto& basis = sym3_basis();
  Vector coords(dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    // H(x, E_k) with real E_k reduces to the entrywise product.
    coords(k) = (x.array() * basis[k].array()).sum();
  }
  if (dim == 5 && std::abs(x.trace()) > 1e-12 * std::max(1.0, x.norm())) {
    throw UsageError("trace-free chart applied to a matrix with trace");
  }
  return coords;
}

Matrix3 sym3_matrix(const Vector& coords) {
  if (coords.size() != 5 && coords.size() != 6) {
    throw UsageError("sym3 coordinates must have dimension 5 or 6");
  }
  const auto& basis = sym3_basis();
  Matrix3 x = Matrix3::Zero();
  for (Eigen::Index k = 0; k < coords.size(); ++k) x += coords(k) * basis[k];
  return x;
}

Matrix3 quadric_base_matrix() {
  Matrix3 z;
  const Complex i(0.0, 1.0);
  z << 0, 1, i,
       1, 0, 0,
       i, 0, 0;
  return 0.5 * z;
}

Matrix3 quadric_tangent1() {
  Matrix3 y;
  const Complex i(0.0, 1.0);
  y << 1, 0, 0,
       0, -1, -0.5 * i,
       0, -0.5 * i, 0;
  return y;
}

Matrix3 quadric_tangent2() {
  Matrix3 y;
  const Complex i(0.0, 1.0);
  y << i, 0, 0,
       0, 0, -0.5,
       0, -0.5, -i;
  return y;
}

Matrix3 plane_basis1() {
  Matrix3 a = Matrix3::Zero();
  a(0, 1) = a(1, 0) = 1.0;
  return a;
}

Matrix3 plane_basis2() {
  Matrix3 a = Matrix3::Zero();
  a(0, 2) = a(2, 0) = 1.0;
  return a;
}

Matrix3 so3_generator_12() {
  Matrix3 x = Matrix3::Zero();
  x(0, 1) = 1.0;
  x(1, 0) = -1.0;
  return x;
}

Matrix3 so3_generator_13() {
  Matrix3 x = Matrix3::Zero();
  x(0, 2) = 1.0;
  x(2, 0) = -1.0;
  return x;
}

Matrix3 so3_generator_23() {
  Matrix3 x = Matrix3::Zero();
  x(1, 2) = 1.0;
  x(2, 1) = -1.0;
  return x;
}

}  // namespace skewgeo
