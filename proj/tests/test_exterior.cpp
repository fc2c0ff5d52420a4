#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewgeo/exterior.hpp"
#include "skewgeo/reps.hpp"

using namespace skewgeo;

namespace {

Vector unit6(int j) {  // 1-based
  Vector e = Vector::Zero(6);
  e(j - 1) = 1.0;
  return e;
}

}  // namespace

TEST_CASE("lexicographic triple indexing") {
  const auto& triples = triple_indices();
  CHECK(triples[0].j == 1);
  CHECK(triples[0].k == 2);
  CHECK(triples[0].l == 3);
  CHECK(triples[19].j == 4);
  CHECK(triples[19].k == 5);
  CHECK(triples[19].l == 6);
  for (int p = 0; p < kTrivectorDim; ++p) {
    CHECK(triple_position(triples[p].j, triples[p].k, triples[p].l) == p);
  }
  CHECK_THROWS_AS(triple_position(2, 1, 3), UsageError);
}

TEST_CASE("wedge antisymmetry and coefficients") {
  // e2 ^ e1 ^ e4 = -(e1 ^ e2 ^ e4)
  const Vector w = wedge3(unit6(2), unit6(1), unit6(4));
  for (int p = 0; p < kTrivectorDim; ++p) {
    const double expected = (p == triple_position(1, 2, 4)) ? -1.0 : 0.0;
    CHECK(std::abs(w(p) - expected) < 1e-15);
  }
  CHECK(wedge3(unit6(1), unit6(1), unit6(4)).norm() < 1e-15);
}

TEST_CASE("induced map of a diagonal matrix") {
  Vector lambda(6);
  lambda << 2.0, 3.0, 5.0, 7.0, 11.0, 13.0;
  const Matrix a = lambda.asDiagonal();
  const Matrix a3 = induced_map3(a);
  const auto& triples = triple_indices();
  for (int p = 0; p < kTrivectorDim; ++p) {
    for (int q = 0; q < kTrivectorDim; ++q) {
      const Complex expected =
          (p == q) ? lambda(triples[p].j - 1) * lambda(triples[p].k - 1) *
                         lambda(triples[p].l - 1)
                   : Complex(0.0);
      CHECK(std::abs(a3(p, q) - expected) < 1e-12);
    }
  }
}

TEST_CASE("induced map is multiplicative and derivation is its derivative") {
  const Matrix a = random_matrix(6, 6, 51);
  const Matrix b = random_matrix(6, 6, 52);
  CHECK((induced_map3(Matrix(a * b)) - induced_map3(a) * induced_map3(b)).norm() <
        1e-10 * induced_map3(a).norm() * induced_map3(b).norm());

  const MatrixLieGroup sp3 = make_sp3();
  const Matrix y = sp3.random_algebra_element(53);
  CHECK((induced_map3(expm(y)) - expm(derivation_map3(y))).norm() < 1e-10);
}

TEST_CASE("hermitian product on trivectors is standard for the standard form") {
  const SesquilinearForm h20 = hermitian_product_cube(SesquilinearForm::standard(6));
  CHECK((h20.gram() - Matrix::Identity(kTrivectorDim, kTrivectorDim)).norm() < 1e-14);
}

TEST_CASE("quaternionic structure and symplectic form on C^6") {
  const AntilinearStructure j = quaternionic_structure_c6();
  CHECK(j.sign() == -1);
  CHECK((j.apply(unit6(1)) - unit6(4)).norm() < 1e-15);
  CHECK((j.apply(unit6(4)) + unit6(1)).norm() < 1e-15);

  const BilinearForm omega = symplectic_form_c6();
  CHECK(omega.sign() == -1);
  const SesquilinearForm h6 = SesquilinearForm::standard(6);
  const Vector v = random_vector(6, 61), w = random_vector(6, 62);
  CHECK(std::abs(omega.eval(v, w) - h6.eval(v, j.apply(w))) < 1e-13);
}

TEST_CASE("contraction example") {
  const BilinearForm omega = symplectic_form_c6();
  // kappa(e1 ^ e4 ^ e2) = omega(e1,e4) e2 + omega(e4,e2) e1 + omega(e2,e1) e4
  const Vector out = contraction(omega, wedge3(unit6(1), unit6(4), unit6(2)));
  CHECK((out + unit6(2)).norm() < 1e-14);
}

TEST_CASE("contraction kernel geometry") {
  const BilinearForm omega = symplectic_form_c6();
  const SesquilinearForm h20 = hermitian_product_cube(SesquilinearForm::standard(6));
  const Matrix kappa = contraction_matrix(omega);
  CHECK(numeric_rank(kappa) == 6);

  const Matrix kernel = contraction_kernel(omega, h20);
  CHECK(kernel.cols() == 14);
  CHECK((kappa * kernel).norm() < 1e-12);

  const Matrix complement = contraction_kernel_complement(omega, h20);
  CHECK(complement.cols() == 6);
  CHECK((kernel.transpose() * h20.gram() * complement.conjugate()).norm() < 1e-10);

  // kappa intertwines the induced and ambient quaternionic structures.
  const AntilinearStructure j6 = quaternionic_structure_c6();
  const AntilinearStructure j20 = induced_antilinear3(j6);
  CHECK(j20.sign() == -1);
  CHECK((kappa * j20.mat() - j6.mat() * kappa.conjugate()).norm() < 1e-13);
}

TEST_CASE("the seven spanning trivectors") {
  const BilinearForm omega = symplectic_form_c6();
  const AntilinearStructure j20 = induced_antilinear3(quaternionic_structure_c6());
  const auto seven = kernel_spanning_trivectors();

  Matrix span(kTrivectorDim, 14);
  for (int k = 0; k < 7; ++k) {
    CHECK(contraction(omega, seven[static_cast<std::size_t>(k)]).norm() < 1e-13);
    span.col(k) = seven[static_cast<std::size_t>(k)];
    span.col(7 + k) = j20.apply(seven[static_cast<std::size_t>(k)]);
  }
  CHECK(numeric_rank(span) == 14);

  // The two distinguished seeds in explicit coordinates.
  const Vector xi1 = seven[5];
  CHECK(std::abs(xi1(triple_position(1, 2, 4)) + 1.0) < 1e-15);
  CHECK(std::abs(xi1(triple_position(2, 3, 6)) + 1.0) < 1e-15);
  const SesquilinearForm h20 = hermitian_product_cube(SesquilinearForm::standard(6));
  CHECK(std::abs(h20.eval(xi1, xi1) - Complex(2.0)) < 1e-14);
  const Vector xi2 = seven[6];
  CHECK(std::abs(xi2(triple_position(1, 3, 4)) + 1.0) < 1e-15);
  CHECK(std::abs(xi2(triple_position(2, 3, 5)) - 1.0) < 1e-15);
}

TEST_CASE("restricted symplectic pairing recovers the quaternionic structure") {
  const SesquilinearForm h20 = hermitian_product_cube(SesquilinearForm::standard(6));
  const AntilinearStructure j20 = induced_antilinear3(quaternionic_structure_c6());
  // omega-hat(v, w) = h20(v, J w); its gram is j20's matrix (real entries).
  const Matrix gram = h20.gram() * j20.mat().conjugate();
  CHECK((gram - j20.mat()).norm() < 1e-14);
  const AntilinearStructure recovered =
      structure_from_forms(h20, BilinearForm(gram, -1));
  CHECK(recovered.sign() == -1);
  CHECK((recovered.mat() - j20.mat()).norm() < 1e-12);
}
