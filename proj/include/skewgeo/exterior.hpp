#pragma once

#include <array>

#include "skewgeo/linalg.hpp"

namespace skewgeo {

// The third exterior power of C^6: 20-dimensional coefficient space indexed
// by strictly increasing triples (j,k,l), 1 <= j < k < l <= 6, in
// lexicographic order.

struct TripleIndex {
  int j, k, l;  // 1-based, strictly increasing
};

inline constexpr int kTrivectorDim = 20;

const std::array<TripleIndex, kTrivectorDim>& triple_indices();

/// Lexicographic position of a strictly increasing triple.
int triple_position(int j, int k, int l);

/// v1 ^ v2 ^ v3 as a 20-dim coefficient vector; the coefficient at (j,k,l)
/// is the 3x3 minor of rows j,k,l of [v1 v2 v3].
Vector wedge3(const Vector& v1, const Vector& v2, const Vector& v3);

/// The 20x20 matrix of the induced linear map a^(3) on coefficients,
/// a^(3)(v1^v2^v3) = a v1 ^ a v2 ^ a v3.
Matrix induced_map3(const Matrix& a);

/// Induced antilinear map: a^(3) for an antilinear a. Sign flips for odd
/// exterior degree, so a quaternionic structure stays quaternionic.
AntilinearStructure induced_antilinear3(const AntilinearStructure& a);

/// Derivation extension of an algebra element,
/// y^(3)(v1^v2^v3) = yv1^v2^v3 + v1^yv2^v3 + v1^v2^yv3.
Matrix derivation_map3(const Matrix& y);

/// Hermitian product with Gram determinants,
/// h3(u1^u2^u3, v1^v2^v3) = det(h6(u_k, v_l)).
SesquilinearForm hermitian_product_cube(const SesquilinearForm& h6);

/// The 6x20 matrix of the contraction
/// kappa(v1^v2^v3) = w(v1,v2) v3 + w(v2,v3) v1 + w(v3,v1) v2
/// for an antisymmetric nondegenerate form w on C^6.
Matrix contraction_matrix(const BilinearForm& omega);

Vector contraction(const BilinearForm& omega, const Vector& xi);

/// Orthonormal basis (w.r.t. h20) of ker kappa; throws NumericalError if the
/// numeric rank of kappa is not 6 (kernel dimension 14).
Matrix contraction_kernel(const BilinearForm& omega, const SesquilinearForm& h20);

/// Orthonormal basis of the h20-orthogonal complement of ker kappa (6-dim).
Matrix contraction_kernel_complement(const BilinearForm& omega,
                                     const SesquilinearForm& h20);

// --- the fixed quaternionic setup on C^6 ----------------------------------

/// J e_1 = e_4, J e_2 = e_5, J e_3 = e_6, J e_4 = -e_1, ...
AntilinearStructure quaternionic_structure_c6();

/// omega(v, w) = H(v, J w) for the standard H and the structure above.
BilinearForm symplectic_form_c6();

/// Seven trivectors whose quaternionic span is ker kappa:
///   e1^e2^e3, Je1^e2^e3, e1^Je2^e3, e1^e2^Je3,
///   e1^e2^Je2 - e1^e3^Je3, e2^e1^Je1 - e2^e3^Je3, e3^e1^Je1 - e3^e2^Je2.
std::array<Vector, 7> kernel_spanning_trivectors();

}  // namespace skewgeo
