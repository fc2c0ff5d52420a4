#include "skewgeo/linalg.hpp"

#include <cmath>
#include <limits>
#include <random>

#include <unsupported/Eigen/MatrixFunctions>
#include <nlohmann/json.hpp>

namespace skewgeo {

namespace {

void require_same_dim(Eigen::Index form_dim, const Vector& x, const Vector& y) {
  if (x.size() != form_dim || y.size() != form_dim) {
    throw UsageError("form/vector dimension mismatch");
  }
}

}  // namespace

SesquilinearForm::SesquilinearForm(Matrix gram, double tol) : gram_(std::move(gram)) {
  if (gram_.rows() == 0 || gram_.rows() != gram_.cols()) {
    throw UsageError("sesquilinear gram must be square and nonempty");
  }
  const double scale = std::max(1.0, gram_.norm());
  if ((gram_ - gram_.adjoint()).norm() > tol * scale) {
    throw UsageError("sesquilinear gram must be Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() <= 0.0) {
    throw UsageError("sesquilinear gram must be positive definite");
  }
}

SesquilinearForm SesquilinearForm::standard(Eigen::Index n) {
  return SesquilinearForm(Matrix::Identity(n, n));
}

Complex SesquilinearForm::eval(const Vector& x, const Vector& y) const {
  require_same_dim(dim(), x, y);
  return x.transpose() * gram_ * y.conjugate();
}

double SesquilinearForm::norm(const Vector& x) const {
  return std::sqrt(std::max(0.0, eval(x, x).real()));
}

BilinearForm::BilinearForm(Matrix gram, int sign, double tol)
    : gram_(std::move(gram)), sign_(sign) {
  if (sign_ != 1 && sign_ != -1) throw UsageError("bilinear sign must be +1 or -1");
  if (gram_.rows() == 0 || gram_.rows() != gram_.cols()) {
    throw UsageError("bilinear gram must be square and nonempty");
  }
  const double scale = std::max(1.0, gram_.norm());
  if ((gram_.transpose() - double(sign_) * gram_).norm() > tol * scale) {
    throw UsageError("bilinear gram has the wrong symmetry");
  }
  Eigen::JacobiSVD<Matrix> svd(gram_);
  if (svd.singularValues().minCoeff() <= tol * scale) {
    throw UsageError("bilinear gram must be nondegenerate");
  }
}

BilinearForm BilinearForm::standard_symmetric(Eigen::Index n) {
  return BilinearForm(Matrix::Identity(n, n), +1);
}

Complex BilinearForm::eval(const Vector& x, const Vector& y) const {
  require_same_dim(dim(), x, y);
  return x.transpose() * gram_ * y;
}

AntilinearStructure::AntilinearStructure(Matrix mat, int sign, double tol)
    : mat_(std::move(mat)), sign_(sign) {
  if (sign_ != 1 && sign_ != -1) throw UsageError("structure sign must be +1 or -1");
  if (mat_.rows() == 0 || mat_.rows() != mat_.cols()) {
    throw UsageError("structure matrix must be square and nonempty");
  }
  const Eigen::Index n = mat_.rows();
  const Matrix square = mat_ * mat_.conjugate();
  if ((square - double(sign_) * Matrix::Identity(n, n)).norm() > tol * std::sqrt(double(n))) {
    throw NumericalError("antilinear structure does not square to sign * id");
  }
}

AntilinearStructure AntilinearStructure::conjugation(Eigen::Index n) {
  return AntilinearStructure(Matrix::Identity(n, n), +1);
}

AntilinearStructure structure_from_forms(const SesquilinearForm& h,
                                         const BilinearForm& b, double tol) {
  if (h.dim() != b.dim()) throw UsageError("form dimensions differ");
  const Eigen::Index n = h.dim();
  // h(v, Aw) = b(v, w) for all v,w  <=>  G_h * conj(M) = G_b.
  const Matrix m = (h.gram().inverse() * b.gram()).conjugate();

  const Matrix square = m * m.conjugate();
  const Matrix id = Matrix::Identity(n, n);
  int sign;
  if ((square - id).norm() < tol * std::sqrt(double(n))) {
    sign = +1;
  } else if ((square + id).norm() < tol * std::sqrt(double(n))) {
    sign = -1;
  } else {
    throw NumericalError("bilinear form is not compatible with the Hermitian product: "
                         "induced antilinear map is not (anti-)involutive");
  }
  // Anti-isometry: h(Av, Aw) = conj(h(v, w))  <=>  M^T G M_bar = conj(G).
  const Matrix iso = m.transpose() * h.gram() * m.conjugate() - h.gram().conjugate();
  if (iso.norm() > tol * std::max(1.0, h.gram().norm())) {
    throw NumericalError("bilinear form is not compatible with the Hermitian product: "
                         "induced antilinear map is not an isometry");
  }
  return AntilinearStructure(m, sign, tol);
}

std::pair<Vector, Vector> re_im_split(const AntilinearStructure& a, const Vector& v) {
  if (a.sign() != +1) {
    throw UsageError("re/im split requires a real structure (sign +1)");
  }
  if (v.size() != a.dim()) throw UsageError("vector dimension mismatch");
  const Vector av = a.apply(v);
  const Vector x = 0.5 * (v + av);
  const Vector y = (v - av) / Complex(0.0, 2.0);
  return {x, y};
}

Matrix orthonormalize(const SesquilinearForm& h, const Matrix& m, double tol) {
  if (m.rows() != h.dim()) throw UsageError("spanning set dimension mismatch");
  Matrix q = m;
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index i = 0; i < j; ++i) {
        q.col(j) -= h.eval(q.col(j), q.col(i)) * q.col(i);
      }
    }
    const double nrm = h.norm(q.col(j));
    if (nrm < tol * std::max(1.0, m.col(j).norm())) {
      throw NumericalError("orthonormalize: numerically dependent columns");
    }
    q.col(j) /= nrm;
  }
  return q;
}

Matrix nullspace(const Matrix& m, double rel_tol) {
  Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = sv.size() > 0 ? rel_tol * sv(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) ++rank;
  }
  return svd.matrixV().rightCols(m.cols() - rank);
}

Eigen::Index numeric_rank(const Matrix& m, double rel_tol, double* margin) {
  Eigen::BDCSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) {
    if (margin) *margin = std::numeric_limits<double>::infinity();
    return 0;
  }
  const double cutoff = rel_tol * sv(0);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) ++rank;
  }
  if (margin) {
    if (rank == 0) {
      *margin = 0.0;
    } else if (rank == sv.size()) {
      *margin = std::numeric_limits<double>::infinity();
    } else {
      const double discarded = std::max(sv(rank), sv(0) * 1e-300);
      *margin = sv(rank - 1) / discarded;
    }
  }
  return rank;
}

Matrix expm(const Matrix& m) {
  if (m.rows() != m.cols()) throw UsageError("expm requires a square matrix");
  return m.exp();
}

Matrix span_projector(const Matrix& spanning, double rel_tol) {
  Eigen::BDCSVD<Matrix> svd(spanning, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double cutoff = sv.size() > 0 ? rel_tol * sv(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) ++rank;
  }
  const Matrix u = svd.matrixU().leftCols(rank);
  return u * u.adjoint();
}

Matrix orthogonal_complement(const Matrix& basis) {
  const Eigen::Index n = basis.rows();
  const Eigen::Index k = basis.cols();
  Eigen::HouseholderQR<Matrix> qr(basis);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  return q.rightCols(n - k);
}

Matrix random_matrix(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      m(i, j) = Complex(re, im);
    }
  }
  return m;
}

Vector random_vector(Eigen::Index n, std::uint64_t seed) {
  return random_matrix(n, 1, seed).col(0);
}

RealVector random_real_vector(Eigen::Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  RealVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = gauss(rng);
  return v;
}

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back({m(i, j).real(), m(i, j).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw UsageError("matrix json must be a nonempty array of rows");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(j.at(0).size());
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = j.at(i);
    if (static_cast<Eigen::Index>(row.size()) != cols) {
      throw UsageError("matrix json rows have inconsistent length");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto& entry = row.at(c);
      m(i, c) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
    }
  }
  return m;
}

}  // namespace skewgeo
