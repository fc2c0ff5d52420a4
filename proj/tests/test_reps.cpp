#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewgeo/reps.hpp"

using namespace skewgeo;

namespace {
const Complex I(0.0, 1.0);
}

TEST_CASE("group families: dimensions and relations") {
  const MatrixLieGroup so3 = make_so3();
  const MatrixLieGroup su3 = make_su3();
  const MatrixLieGroup sp3 = make_sp3();
  const MatrixLieGroup sp7 = make_sp(7);
  CHECK(so3.dim() == 3);
  CHECK(su3.dim() == 8);
  CHECK(sp3.dim() == 21);
  CHECK(sp7.dim() == 105);

  for (const MatrixLieGroup* g : {&so3, &su3, &sp3, &sp7}) {
    for (std::uint64_t s = 1; s <= 3; ++s) {
      const Matrix x = g->random_algebra_element(s);
      CHECK(g->algebra_relation_residual(x) < 1e-12);
      CHECK(g->group_relation_residual(g->random_group_element(s)) < 1e-12);
    }
    // the working basis is trace-orthonormal
    for (std::size_t i = 0; i < g->ortho_basis.size(); ++i) {
      for (std::size_t j = i; j < g->ortho_basis.size(); ++j) {
        const double ip = (g->ortho_basis[i].adjoint() * g->ortho_basis[j]).trace().real();
        CHECK(std::abs(ip - (i == j ? 1.0 : 0.0)) < 1e-12);
      }
    }
  }
}

TEST_CASE("five-dimensional conjugation action of SO(3)") {
  const Representation rep = cartan_so3();
  CHECK(rep.dim == 5);
  CHECK(rep.bilinear.has_value());
  CHECK(rep.antilinear.has_value());
  CHECK(representation_residual(rep, 10, 7) < 1e-10);
}

TEST_CASE("six-dimensional action of SU(3)") {
  const Representation rep = cartan_su3();
  CHECK(rep.dim == 6);
  CHECK(representation_residual(rep, 10, 7) < 1e-10);

  // diag(e^{2i t}, e^{-i t}, e^{-i t}) scales the off-diagonal pair basis
  // elements by e^{i t}.
  const double t = 0.4;
  Matrix b = Matrix::Zero(3, 3);
  b(0, 0) = std::exp(2.0 * I * t);
  b(1, 1) = b(2, 2) = std::exp(-I * t);
  const Matrix op = rep.act_group(b);
  const Vector a1 = sym3_coords(plane_basis1(), 6);
  const Vector a2 = sym3_coords(plane_basis2(), 6);
  CHECK((op * a1 - std::exp(I * t) * a1).norm() < 1e-14);
  CHECK((op * a2 - std::exp(I * t) * a2).norm() < 1e-14);
}

TEST_CASE("fourteen-dimensional piece of the Sp(3) trivector action") {
  const Sp3FundamentalData& data = sp3_fundamental_v1();
  CHECK(data.rep.dim == 14);
  CHECK(data.v1_basis.cols() == 14);
  CHECK(data.rep.antilinear.has_value());
  CHECK(data.rep.antilinear->sign() == -1);

  // restricted structure is the standard block form
  Matrix block = Matrix::Zero(14, 14);
  block.topRightCorner(7, 7) = -Matrix::Identity(7, 7);
  block.bottomLeftCorner(7, 7) = Matrix::Identity(7, 7);
  CHECK((data.j_restricted - block).norm() < 1e-12);

  CHECK(representation_residual(data.rep, 5, 7) < 1e-9);
  CHECK(commutant_dimension_j_commuting(data.rep) == 1);
}

TEST_CASE("embeddings preserve the relations at both levels") {
  const GroupEmbedding e = su3_in_sp3();
  const Matrix y = e.sub.random_algebra_element(3);
  CHECK(e.big.algebra_relation_residual(e.algebra(y)) < 1e-12);
  CHECK((e.group(expm(y)) - expm(e.algebra(y))).norm() < 1e-12);

  const GroupEmbedding f = so3_in_su3();
  const Matrix x = f.sub.random_algebra_element(4);
  CHECK(f.big.algebra_relation_residual(f.algebra(x)) < 1e-12);
}

TEST_CASE("restriction of the six-dimensional action to SO(3) splits as 1 + 5") {
  const Representation rep = restrict_rep(cartan_su3(), so3_in_su3());
  const std::vector<Matrix> comps = invariant_subspaces(rep, 11);
  std::vector<Eigen::Index> dims;
  for (const Matrix& q : comps) dims.push_back(q.cols());
  std::sort(dims.begin(), dims.end());
  REQUIRE(dims == std::vector<Eigen::Index>{1, 5});

  for (const Matrix& q : comps) {
    if (q.cols() != 5) continue;
    const Representation five = subrepresentation(rep, q);
    const auto itw = find_intertwiner(five, cartan_so3(), 13);
    REQUIRE(itw.has_value());
    CHECK(itw->cond < 1e3);
    // spot check the intertwining property on a random generator
    const Matrix x = five.group.random_algebra_element(5);
    CHECK((itw->t * five.act_algebra(x) - cartan_so3().act_algebra(x) * itw->t).norm() <
          1e-9);
  }
}

TEST_CASE("subrepresentation rejects non-invariant subspaces") {
  const Representation rep = cartan_so3();
  Matrix q = Matrix::Zero(5, 2);
  q(0, 0) = 1.0;
  q(3, 1) = 1.0;
  CHECK_THROWS_AS(subrepresentation(rep, q), NumericalError);
}

TEST_CASE("quaternionic commutant of the Sp(1) fundamental representation") {
  Representation rep;
  rep.group = make_sp(1);
  rep.dim = 2;
  rep.metric = SesquilinearForm::standard(2);
  Matrix m(2, 2);
  m << 0, -1, 1, 0;
  rep.antilinear = AntilinearStructure(m, -1);
  rep.act_group = [](const Matrix& g) { return g; };
  rep.act_algebra = [](const Matrix& x) { return x; };
  CHECK(commutant_dimension_j_commuting(rep) == 1);
}

TEST_CASE("intertwiner between inequivalent representations is absent") {
  // the conjugate of the SU(3) action is not equivalent to it
  const Representation rep = cartan_su3();
  Representation conj = rep;
  conj.act_group = [rep](const Matrix& g) { return Matrix(rep.act_group(g).conjugate()); };
  conj.act_algebra = [rep](const Matrix& x) {
    return Matrix(rep.act_algebra(x).conjugate());
  };
  const auto itw = find_intertwiner(conj, rep, 17);
  CHECK(!itw.has_value());
}
