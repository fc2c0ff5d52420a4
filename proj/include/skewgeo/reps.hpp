#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "skewgeo/linalg.hpp"
#include "skewgeo/sym3.hpp"

namespace skewgeo {

/// A compact matrix Lie group given by a real-spanning Lie algebra basis and
/// membership predicates (unitarity, realness, J-commutation).
struct MatrixLieGroup {
  std::string name;
  Eigen::Index ambient;                 // matrix size
  std::vector<Matrix> algebra_basis;    // documented basis
  std::vector<Matrix> ortho_basis;      // trace-orthonormalized working basis
  bool real_entries = false;            // SO(n)
  bool trace_free = true;               // su/so yes; full u(n) would be false
  std::optional<Matrix> j_mat;          // sp(n): X * J = J * conj(X)

  Eigen::Index dim() const { return static_cast<Eigen::Index>(algebra_basis.size()); }

  /// Max residual of the group relations for g (unitarity, det 1, realness,
  /// J-commutation).
  double group_relation_residual(const Matrix& g) const;
  /// Max residual of the algebra relations for x.
  double algebra_relation_residual(const Matrix& x) const;

  /// Real linear combination of the working basis with Gaussian
  /// coefficients, normalized to unit Frobenius norm.
  Matrix random_algebra_element(std::uint64_t seed) const;
  Matrix random_group_element(std::uint64_t seed) const;
};

MatrixLieGroup make_son(Eigen::Index n);  // real skew matrices
MatrixLieGroup make_sun(Eigen::Index n);  // trace-free skew-Hermitian
/// sp(n) acting on C^{2n} with J v = M conj(v), M = [[0,-I],[I,0]];
/// elements are [[A,B],[-conj(B),conj(A)]], A in u(n), B complex symmetric.
MatrixLieGroup make_sp(Eigen::Index n);

MatrixLieGroup make_so3();
MatrixLieGroup make_su3();
MatrixLieGroup make_sp3();

/// A unitary representation in fixed coordinates: group and algebra maps to
/// operators on C^dim, plus the structures the image provably preserves.
struct Representation {
  MatrixLieGroup group;
  Eigen::Index dim;
  std::function<Matrix(const Matrix&)> act_group;
  std::function<Matrix(const Matrix&)> act_algebra;
  SesquilinearForm metric = SesquilinearForm::standard(1);
  std::optional<BilinearForm> bilinear;
  std::optional<AntilinearStructure> antilinear;

  /// act_algebra over the documented algebra basis.
  std::vector<Matrix> algebra_images() const;
};

/// Conjugation action of SO(3) on trace-free symmetric matrices, in the
/// 5-dim sym3 coordinates: B -> (X -> B X B^-1), Y -> (X -> YX - XY).
/// Preserves the standard H, the standard symmetric bilinear form and
/// coordinate conjugation.
Representation cartan_so3();

/// Action of SU(3) on symmetric matrices in the 6-dim sym3 coordinates:
/// B -> (X -> B X B^t), Y -> (X -> YX + XY^t). Preserves H only.
Representation cartan_su3();

/// The irreducible 14-dim piece of Sp(3) acting on trivectors: restriction
/// of B -> B^(3) to the kernel of the contraction, in a J-adapted
/// orthonormal basis (columns b_1..b_7, J b_1..J b_7 of the 20x14 matrix;
/// the first two quaternionic basis vectors are the two distinguished
/// kernel trivectors that seed the base plane).
struct Sp3FundamentalData {
  Representation rep;
  Matrix v1_basis;     // 20x14, h20-orthonormal, J-adapted
  Matrix j_restricted; // 14x14 antilinear matrix of the restricted structure
};
const Sp3FundamentalData& sp3_fundamental_v1();

/// Lie group/algebra embedding with both levels spelled out.
struct GroupEmbedding {
  MatrixLieGroup sub;
  MatrixLieGroup big;
  std::function<Matrix(const Matrix&)> group;
  std::function<Matrix(const Matrix&)> algebra;
};

/// Y -> diag(Y, conj(Y)); commutes with the standard quaternionic structure.
GroupEmbedding su3_in_sp3();
/// Identity inclusion of real skew matrices.
GroupEmbedding so3_in_su3();

/// Composition of a representation with an embedding. Validates that the
/// embedded algebra basis satisfies the big group's relations.
Representation restrict_rep(const Representation& rep, const GroupEmbedding& e,
                            double tol = 1e-9);

/// Restriction to an invariant subspace (orthonormal columns). Throws
/// NumericalError if the subspace is not invariant within tol.
Representation subrepresentation(const Representation& rep, const Matrix& basis,
                                 double tol = 1e-9);

/// Minimal invariant subspaces from a random Hermitian commutant element
/// (seeded): returns orthonormal bases whose dimensions sum to rep.dim.
std::vector<Matrix> invariant_subspaces(const Representation& rep,
                                        std::uint64_t seed,
                                        double tol = 1e-9);

struct Intertwiner {
  Matrix t;
  double cond;
};

/// Solves T * rho1(X_i) = rho2(X_i) * T over the algebra basis and returns
/// an invertible solution with its condition number, or nullopt when the
/// solution space contains no invertible element.
std::optional<Intertwiner> find_intertwiner(const Representation& rep1,
                                            const Representation& rep2,
                                            std::uint64_t seed);

/// Real dimension of { T : T commutes with all algebra images and with the
/// representation's antilinear structure }. Equals 1 exactly when the
/// representation is irreducible of quaternionic type.
Eigen::Index commutant_dimension_j_commuting(const Representation& rep);

/// Check homomorphism, exp-compatibility and structure preservation on
/// seeded random samples; returns the max residual.
double representation_residual(const Representation& rep, int samples,
                               std::uint64_t seed);

}  // namespace skewgeo
