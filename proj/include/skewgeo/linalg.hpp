#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>

namespace skewgeo {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Raised when arguments violate a precondition (dimension mismatch, wrong
/// structure sign, ...).
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical construction fails its internal consistency
/// checks (incompatible forms, ambiguous rank, lost invariants).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Positive definite Hermitian form h(x,y) = x^T G conj(y).
/// Convention: linear in the first argument, antilinear in the second.
class SesquilinearForm {
public:
  explicit SesquilinearForm(Matrix gram, double tol = 1e-10);
  static SesquilinearForm standard(Eigen::Index n);

  Complex eval(const Vector& x, const Vector& y) const;
  double norm(const Vector& x) const;
  Eigen::Index dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }

private:
  Matrix gram_;
};

/// Nondegenerate bilinear form b(x,y) = x^T G y with G^T = sign * G.
/// sign = +1 for symmetric forms, -1 for antisymmetric (symplectic) ones.
class BilinearForm {
public:
  BilinearForm(Matrix gram, int sign, double tol = 1e-10);
  static BilinearForm standard_symmetric(Eigen::Index n);

  Complex eval(const Vector& x, const Vector& y) const;
  Eigen::Index dim() const { return gram_.rows(); }
  int sign() const { return sign_; }
  const Matrix& gram() const { return gram_; }

private:
  Matrix gram_;
  int sign_;
};

/// Antilinear map v -> mat * conj(v) with mat * conj(mat) = sign * id.
/// sign = +1: real structure; sign = -1: quaternionic structure.
class AntilinearStructure {
public:
  AntilinearStructure(Matrix mat, int sign, double tol = 1e-8);
  static AntilinearStructure conjugation(Eigen::Index n);

  Vector apply(const Vector& v) const { return mat_ * v.conjugate(); }
  Eigen::Index dim() const { return mat_.rows(); }
  int sign() const { return sign_; }
  const Matrix& mat() const { return mat_; }

private:
  Matrix mat_;
  int sign_;
};

/// The unique antilinear A with h(v, Aw) = b(v, w) for all v, w.
/// Throws NumericalError if A fails to be an (anti-)involutive anti-isometry
/// of h, i.e. if b is not compatible with h.
AntilinearStructure structure_from_forms(const SesquilinearForm& h,
                                         const BilinearForm& b,
                                         double tol = 1e-10);

/// Decomposition v = x + i*y with A(x) = x and A(y) = y for a real
/// structure A. Only defined for sign +1.
std::pair<Vector, Vector> re_im_split(const AntilinearStructure& a,
                                      const Vector& v);

// --- dense plumbing -------------------------------------------------------

/// Gram-Schmidt orthonormalization of the columns of m against h.
/// Throws NumericalError if the columns are numerically dependent.
Matrix orthonormalize(const SesquilinearForm& h, const Matrix& m,
                      double tol = 1e-10);

/// Orthonormal basis of the kernel, singular values below
/// rel_tol * sigma_max counting as zero.
Matrix nullspace(const Matrix& m, double rel_tol = 1e-9);

/// Numeric rank with the same relative threshold. If margin is non-null it
/// receives (smallest kept sv) / (largest discarded sv), +inf when nothing
/// is discarded.
Eigen::Index numeric_rank(const Matrix& m, double rel_tol = 1e-9,
                          double* margin = nullptr);

/// Matrix exponential (scaling-and-squaring).
Matrix expm(const Matrix& m);

/// Orthogonal projector onto the column span of a (not necessarily
/// orthonormal) spanning set, standard Hermitian product.
Matrix span_projector(const Matrix& spanning, double rel_tol = 1e-9);

/// Orthonormal basis of the standard-orthogonal complement of the
/// (orthonormal) columns of basis.
Matrix orthogonal_complement(const Matrix& basis);

/// Seeded complex Gaussian matrices/vectors; entries N(0,1/2) + i N(0,1/2).
Matrix random_matrix(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed);
Vector random_vector(Eigen::Index n, std::uint64_t seed);
RealVector random_real_vector(Eigen::Index n, std::uint64_t seed);

/// JSON matrix dump: array of rows, every entry a [re, im] pair.
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

}  // namespace skewgeo
