#include "skewgeo/exterior.hpp"

#include <cmath>

namespace skewgeo {

namespace {

std::array<TripleIndex, kTrivectorDim> make_indices() {
  std::array<TripleIndex, kTrivectorDim> out{};
  int pos = 0;
  for (int j = 1; j <= 6; ++j)
    for (int k = j + 1; k <= 6; ++k)
      for (int l = k + 1; l <= 6; ++l) out[pos++] = {j, k, l};
  return out;
}

Complex det3(const Matrix& cols, int j, int k, int l) {
  // 3x3 minor of rows j,k,l (1-based) of a 6x3 matrix.
  const Eigen::Index a = j - 1, b = k - 1, c = l - 1;
  return cols(a, 0) * (cols(b, 1) * cols(c, 2) - cols(b, 2) * cols(c, 1)) -
         cols(a, 1) * (cols(b, 0) * cols(c, 2) - cols(b, 2) * cols(c, 0)) +
         cols(a, 2) * (cols(b, 0) * cols(c, 1) - cols(b, 1) * cols(c, 0));
}

Vector basis_vec6(int j) {
  Vector e = Vector::Zero(6);
  e(j - 1) = 1.0;
  return e;
}

}  // namespace

const std::array<TripleIndex, kTrivectorDim>& triple_indices() {
  static const auto indices = make_indices();
  return indices;
}

int triple_position(int j, int k, int l) {
  if (!(1 <= j && j < k && k < l && l <= 6)) {
    throw UsageError("triple index must be strictly increasing in 1..6");
  }
  const auto& idx = triple_indices();
  for (int p = 0; p < kTrivectorDim; ++p) {
    if (idx[p].j == j && idx[p].k == k && idx[p].l == l) return p;
  }
  throw NumericalError("triple index table corrupt");
}

Vector wedge3(const Vector& v1, const Vector& v2, const Vector& v3) {
  if (v1.size() != 6 || v2.size() != 6 || v3.size() != 6) {
    throw UsageError("wedge3 expects 6-dimensional vectors");
  }
  Matrix cols(6, 3);
  cols.col(0) = v1;
  cols.col(1) = v2;
  cols.col(2) = v3;
  Vector out(kTrivectorDim);
  const auto& idx = triple_indices();
  for (int p = 0; p < kTrivectorDim; ++p) {
    out(p) = det3(cols, idx[p].j, idx[p].k, idx[p].l);
  }
  return out;
}

Matrix induced_map3(const Matrix& a) {
  if (a.rows() != 6 || a.cols() != 6) throw UsageError("induced_map3 expects a 6x6 matrix");
  Matrix out(kTrivectorDim, kTrivectorDim);
  const auto& idx = triple_indices();
  for (int p = 0; p < kTrivectorDim; ++p) {
    out.col(p) = wedge3(a.col(idx[p].j - 1), a.col(idx[p].k - 1), a.col(idx[p].l - 1));
  }
  return out;
}

AntilinearStructure induced_antilinear3(const AntilinearStructure& a) {
  if (a.dim() != 6) throw UsageError("induced_antilinear3 expects dimension 6");
  // (a^(3))(sum c_P e_P) = sum conj(c_P) (a e_j ^ a e_k ^ a e_l).
  const int sign = (a.sign() == -1) ? -1 : +1;  // (-1)^3 = -1 for quaternionic a
  return AntilinearStructure(induced_map3(a.mat()), sign);
}

Matrix derivation_map3(const Matrix& y) {
  if (y.rows() != 6 || y.cols() != 6) throw UsageError("derivation_map3 expects a 6x6 matrix");
  Matrix out(kTrivectorDim, kTrivectorDim);
  const auto& idx = triple_indices();
  for (int p = 0; p < kTrivectorDim; ++p) {
    const Vector ej = basis_vec6(idx[p].j);
    const Vector ek = basis_vec6(idx[p].k);
    const Vector el = basis_vec6(idx[p].l);
    out.col(p) = wedge3(y * ej, ek, el) + wedge3(ej, y * ek, el) + wedge3(ej, ek, y * el);
  }
  return out;
}

SesquilinearForm hermitian_product_cube(const SesquilinearForm& h6) {
  if (h6.dim() != 6) throw UsageError("hermitian_product_cube expects dimension 6");
  const auto& idx = triple_indices();
  Matrix gram(kTrivectorDim, kTrivectorDim);
  for (int p = 0; p < kTrivectorDim; ++p) {
    const int u[3] = {idx[p].j, idx[p].k, idx[p].l};
    for (int q = 0; q < kTrivectorDim; ++q) {
      const int v[3] = {idx[q].j, idx[q].k, idx[q].l};
      Eigen::Matrix3cd g;
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) g(r, c) = h6.gram()(u[r] - 1, v[c] - 1);
      gram(p, q) = g.determinant();
    }
  }
  return SesquilinearForm(std::move(gram));
}

Matrix contraction_matrix(const BilinearForm& omega) {
  if (omega.dim() != 6) throw UsageError("contraction expects a form on C^6");
  if (omega.sign() != -1) throw UsageError("contraction expects an antisymmetric form");
  const auto& idx = triple_indices();
  Matrix kappa = Matrix::Zero(6, kTrivectorDim);
  for (int p = 0; p < kTrivectorDim; ++p) {
    const Vector ej = basis_vec6(idx[p].j);
    const Vector ek = basis_vec6(idx[p].k);
    const Vector el = basis_vec6(idx[p].l);
    kappa.col(p) = omega.eval(ej, ek) * el + omega.eval(ek, el) * ej +
                   omega.eval(el, ej) * ek;
  }
  return kappa;
}

Vector contraction(const BilinearForm& omega, const Vector& xi) {
  if (xi.size() != kTrivectorDim) throw UsageError("trivector must have dimension 20");
  return contraction_matrix(omega) * xi;
}

Matrix contraction_kernel(const BilinearForm& omega, const SesquilinearForm& h20) {
  if (h20.dim() != kTrivectorDim) throw UsageError("h20 must act on trivectors");
  const Matrix kappa = contraction_matrix(omega);
  double margin = 0.0;
  const Eigen::Index rank = numeric_rank(kappa, 1e-9, &margin);
  if (rank != 6) throw NumericalError("contraction rank is not 6");
  const Matrix kernel = nullspace(kappa, 1e-9);
  return orthonormalize(h20, kernel);
}

Matrix contraction_kernel_complement(const BilinearForm& omega,
                                     const SesquilinearForm& h20) {
  const Matrix kernel = contraction_kernel(omega, h20);
  // h20-orthogonal complement: nullspace of the pairing against the kernel.
  Matrix pairing(kernel.cols(), kTrivectorDim);
  for (Eigen::Index i = 0; i < kernel.cols(); ++i) {
    // row i: xi -> h20(xi, kernel_i), linear in xi.
    pairing.row(i) = (h20.gram() * kernel.col(i).conjugate()).transpose();
  }
  const Matrix comp = nullspace(pairing, 1e-9);
  if (comp.cols() != 6) throw NumericalError("kernel complement dimension is not 6");
  return orthonormalize(h20, comp);
}

AntilinearStructure quaternionic_structure_c6() {
  Matrix m = Matrix::Zero(6, 6);
  for (int a = 0; a < 3; ++a) {
    m(a + 3, a) = 1.0;   // J e_a = e_{a+3}
    m(a, a + 3) = -1.0;  // J e_{a+3} = -e_a
  }
  return AntilinearStructure(std::move(m), -1);
}

BilinearForm symplectic_form_c6() {
  const AntilinearStructure j = quaternionic_structure_c6();
  // omega(v, w) = H(v, J w) = v^T conj(M conj(w)) = v^T conj(M) w.
  return BilinearForm(j.mat().conjugate(), -1);
}

std::array<Vector, 7> kernel_spanning_trivectors() {
  const AntilinearStructure j = quaternionic_structure_c6();
  auto e = [](int k) { return basis_vec6(k); };
  auto je = [&](int k) { return j.apply(basis_vec6(k)); };
  std::array<Vector, 7> out = {
      wedge3(e(1), e(2), e(3)),
      wedge3(je(1), e(2), e(3)),
      wedge3(e(1), je(2), e(3)),
      wedge3(e(1), e(2), je(3)),
      wedge3(e(1), e(2), je(2)) - wedge3(e(1), e(3), je(3)),
      wedge3(e(2), e(1), je(1)) - wedge3(e(2), e(3), je(3)),
      wedge3(e(3), e(1), je(1)) - wedge3(e(3), e(2), je(2)),
  };
  return out;
}

}  // namespace skewgeo
