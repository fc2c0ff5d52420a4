#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skewgeo/reps.hpp"
#include "skewgeo/spaces.hpp"
#include "skewgeo/sym3.hpp"

using namespace skewgeo;

namespace {

const Complex I(0.0, 1.0);

QuadricPoint base_point(const QuadricContext& ctx) {
  return make_quadric_point(ctx, sym3_coords(quadric_base_matrix(), 5));
}

}  // namespace

TEST_CASE("quadric base point invariants") {
  const QuadricContext ctx = standard_quadric_context(5);
  const QuadricPoint p = base_point(ctx);
  CHECK(std::abs(ctx.h.eval(p.z, p.z) - Complex(1.0)) < 1e-14);
  CHECK(std::abs(ctx.b.eval(p.z, p.z)) < 1e-14);
  CHECK(quadric_point_residual(ctx, p) < 1e-14);

  Vector not_isotropic = Vector::Zero(5);
  not_isotropic(0) = 1.0;
  CHECK_THROWS_AS(make_quadric_point(ctx, not_isotropic), NumericalError);
}

TEST_CASE("distinguished tangent vectors of the sphere in the quadric") {
  const QuadricContext ctx = standard_quadric_context(5);
  const Vector y1 = sym3_coords(quadric_tangent1(), 5);
  const Vector y2 = sym3_coords(quadric_tangent2(), 5);

  CHECK(std::abs(ctx.b.eval(y1, y1) - Complex(1.5)) < 1e-14);
  CHECK(std::abs(ctx.b.eval(y2, y2) + Complex(1.5)) < 1e-14);
  CHECK(std::abs(ctx.h.eval(y1, y1) - Complex(2.5)) < 1e-14);
  CHECK(std::abs(ctx.h.eval(y2, y2) - Complex(2.5)) < 1e-14);

  const double expected = std::atan(0.5);
  CHECK(std::abs(characteristic_angle_quadric(ctx, y1) - expected) < 1e-14);
  CHECK(std::abs(characteristic_angle_quadric(ctx, y2) - expected) < 1e-14);

  // real/imaginary split: one part is twice as long as the other
  // (the real part for the first vector, the imaginary one for the second)
  {
    const auto [re1, im1] = re_im_split(ctx.a, y1);
    CHECK(std::abs(re1.norm() - 2.0 * im1.norm()) < 1e-14);
    const auto [re2, im2] = re_im_split(ctx.a, y2);
    CHECK(std::abs(im2.norm() - 2.0 * re2.norm()) < 1e-14);
  }
}

TEST_CASE("algebra action formulas in explicit blocks") {
  // Y = t(E21 - E12) + s(E31 - E13) acting on symmetric X by YX - XY.
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double t = u(rng), s = u(rng);
    const double a = u(rng), b = u(rng), d = u(rng);
    const double c = -a - b;
    Matrix3 y = Matrix3::Zero();
    y(1, 0) = t; y(0, 1) = -t;
    y(2, 0) = s; y(0, 2) = -s;

    // first type: X couples the first coordinate axis to the other two
    Matrix3 x1 = Matrix3::Zero();
    x1(0, 1) = x1(1, 0) = a;
    x1(0, 2) = x1(2, 0) = b;
    Matrix3 expected1 = Matrix3::Zero();
    expected1(0, 0) = -2.0 * t * a - 2.0 * s * b;
    expected1(1, 1) = 2.0 * t * a;
    expected1(2, 2) = 2.0 * s * b;
    expected1(1, 2) = expected1(2, 1) = s * a + t * b;
    CHECK((Matrix3(y * x1 - x1 * y) - expected1).norm() < 1e-14);

    // second type: trace-free X living on the complementary block
    Matrix3 x2 = Matrix3::Zero();
    x2(0, 0) = a; x2(1, 1) = b; x2(2, 2) = c;
    x2(1, 2) = x2(2, 1) = d;
    Matrix3 expected2 = Matrix3::Zero();
    expected2(0, 1) = expected2(1, 0) = (a - b) * t - d * s;
    expected2(0, 2) = expected2(2, 0) = -d * t + (a - c) * s;
    CHECK((Matrix3(y * x2 - x2 * y) - expected2).norm() < 1e-14);

    // and the same identities through the coordinate representation
    const Representation rep = cartan_so3();
    const Matrix op = rep.act_algebra(Matrix(y));
    CHECK((op * sym3_coords(x1, 5) - sym3_coords(expected1, 5)).norm() < 1e-13);
    CHECK((op * sym3_coords(x2, 5) - sym3_coords(expected2, 5)).norm() < 1e-13);
  }
}

TEST_CASE("quadric splitting") {
  const QuadricContext ctx = standard_quadric_context(5);
  const QuadricPoint p = base_point(ctx);
  const auto [w1, w2] = quadric_w_spaces(ctx, p);
  CHECK(w1.cols() == 2);
  CHECK(w2.cols() == 3);
  CHECK(w1.imag().norm() < 1e-14);
  CHECK(w2.imag().norm() < 1e-14);
  CHECK((w1.adjoint() * w2).norm() < 1e-12);

  const CartanSplitting s = quadric_splitting(ctx, p);
  CHECK(s.k_basis.size() == 4);
  CHECK(s.m_basis.size() == 6);
  CHECK(splitting_bracket_residual(s) < 1e-12);
}

TEST_CASE("stabilizer splittings of the two Grassmannian base planes") {
  // complex plane inside the 6-dim coordinates
  Matrix spanning(6, 2);
  spanning.col(0) = sym3_coords(plane_basis1(), 6);
  spanning.col(1) = sym3_coords(plane_basis2(), 6);
  const PlanePoint plane = make_plane_point(spanning);
  CHECK(plane_point_residual(plane) < 1e-14);
  const CartanSplitting s = stabilizer_splitting(make_sun(6).ortho_basis, plane.basis);
  CHECK(s.k_basis.size() == 19);
  CHECK(s.m_basis.size() == 16);
  CHECK(splitting_bracket_residual(s) < 1e-10);

  // quaternionic plane inside the 14-dim coordinates
  const Sp3FundamentalData& data = sp3_fundamental_v1();
  Matrix qspan = Matrix::Zero(14, 4);
  qspan(0, 0) = 1.0;
  qspan.col(1) = data.rep.antilinear->apply(qspan.col(0));
  qspan(1, 2) = 1.0;
  qspan.col(3) = data.rep.antilinear->apply(qspan.col(2));
  const PlanePoint qplane = make_plane_point(qspan, data.rep.antilinear);
  CHECK(plane_point_residual(qplane) < 1e-12);
  const CartanSplitting qs = stabilizer_splitting(make_sp(7).ortho_basis, qplane.basis);
  CHECK(qs.k_basis.size() == 65);
  CHECK(qs.m_basis.size() == 40);
}

TEST_CASE("geodesics stay on the quadric and reject bad directions") {
  const QuadricContext ctx = standard_quadric_context(5);
  const QuadricPoint p = base_point(ctx);
  const CartanSplitting s = quadric_splitting(ctx, p);

  Matrix dir = Matrix::Zero(5, 5);
  for (std::size_t i = 0; i < s.m_basis.size(); ++i) {
    dir += (0.3 + 0.1 * static_cast<double>(i)) * s.m_basis[i];
  }
  for (double t : {0.0, 0.5, 1.3, 3.0}) {
    const QuadricPoint moved = geodesic(ctx, p, dir, s, t);
    CHECK(quadric_point_residual(ctx, moved) < 1e-12);
  }
  CHECK_THROWS_AS(geodesic(ctx, p, s.k_basis[0], s, 1.0), UsageError);
}

TEST_CASE("characteristic angles from singular values") {
  Matrix plane = Matrix::Zero(6, 2);
  plane(0, 0) = 1.0;
  plane(1, 1) = 1.0;
  const PlanePoint p = make_plane_point(plane);
  Matrix x = Matrix::Zero(6, 6);
  x(2, 0) = 1.0;  // singular value 1 on the first column
  x(3, 1) = 0.5;  // singular value 1/2 on the second
  const TangentAtPlane tangent = tangent_from_algebra(p, x);
  CHECK(std::abs(characteristic_angle_grassmann(tangent, false) - std::atan(0.5)) <
        1e-14);

  TangentAtPlane bad = tangent;
  bad.hom = Matrix::Zero(2, 4);
  bad.hom(0, 0) = 1.0;
  bad.hom(1, 1) = 0.3;
  CHECK_THROWS_AS(characteristic_angle_grassmann(bad, true), NumericalError);
}

TEST_CASE("plane geodesics preserve the quaternionic structure") {
  const Sp3FundamentalData& data = sp3_fundamental_v1();
  Matrix qspan = Matrix::Zero(14, 4);
  qspan(0, 0) = 1.0;
  qspan.col(1) = data.rep.antilinear->apply(qspan.col(0));
  qspan(1, 2) = 1.0;
  qspan.col(3) = data.rep.antilinear->apply(qspan.col(2));
  const PlanePoint plane = make_plane_point(qspan, data.rep.antilinear);
  const CartanSplitting s = stabilizer_splitting(make_sp(7).ortho_basis, plane.basis);
  const PlanePoint moved = geodesic(plane, s.m_basis[0], s, 0.7);
  CHECK(plane_point_residual(moved) < 1e-10);
  CHECK(moved.quaternionic);
}
