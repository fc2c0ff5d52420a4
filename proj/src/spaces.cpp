#include "skewgeo/spaces.hpp"

#include <algorithm>
#include <cmath>

namespace skewgeo {

namespace {

Matrix skew_pair(const Vector& a, const Vector& b) {
  // unit Frobenius norm for orthonormal a, b
  return (a * b.transpose() - b * a.transpose()) / std::sqrt(2.0);
}

}  // namespace

QuadricContext standard_quadric_context(Eigen::Index n) {
  return QuadricContext{SesquilinearForm::standard(n),
                        BilinearForm::standard_symmetric(n),
                        AntilinearStructure::conjugation(n)};
}

QuadricPoint make_quadric_point(const QuadricContext& ctx, Vector z, double tol) {
  if (z.size() != ctx.h.dim()) throw UsageError("point dimension mismatch");
  const double nrm = ctx.h.norm(z);
  if (nrm < tol) throw UsageError("zero representative");
  z /= nrm;
  if (std::abs(ctx.b.eval(z, z)) > tol) {
    throw NumericalError("representative is not isotropic for the bilinear form");
  }
  return QuadricPoint{std::move(z)};
}

double quadric_point_residual(const QuadricContext& ctx, const QuadricPoint& p) {
  return std::max(std::abs(ctx.h.eval(p.z, p.z) - Complex(1.0, 0.0)),
                  std::abs(ctx.b.eval(p.z, p.z)));
}

PlanePoint make_plane_point(Matrix spanning, std::optional<AntilinearStructure> j,
                            double tol) {
  const Eigen::Index n = spanning.rows();
  if (!j) {
    PlanePoint p;
    p.basis = orthonormalize(SesquilinearForm::standard(n), spanning);
    return p;
  }
  if (j->dim() != n) throw UsageError("structure dimension mismatch");
  if (spanning.cols() % 2 != 0) {
    throw UsageError("quaternionic plane needs an even number of spanning columns");
  }
  // J-adapted orthonormal basis (b1, J b1, b2, J b2, ...).
  const SesquilinearForm h = SesquilinearForm::standard(n);
  const Eigen::Index pairs = spanning.cols() / 2;
  Matrix basis(n, 2 * pairs);
  Eigen::Index built = 0;
  for (Eigen::Index c = 0; c < spanning.cols() && built < pairs; ++c) {
    Vector v = spanning.col(c);
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index k = 0; k < 2 * built; ++k) {
        v -= h.eval(v, basis.col(k)) * basis.col(k);
      }
    }
    const double nrm = h.norm(v);
    if (nrm < tol * std::max(1.0, spanning.col(c).norm())) continue;
    v /= nrm;
    basis.col(2 * built) = v;
    basis.col(2 * built + 1) = j->apply(v);
    ++built;
  }
  if (built != pairs) throw NumericalError("spanning set does not span a quaternionic plane");
  PlanePoint p;
  p.basis = std::move(basis);
  p.quaternionic = true;
  p.j = std::move(j);
  if (plane_point_residual(p) > 1e-9) {
    throw NumericalError("plane is not invariant under the quaternionic structure");
  }
  return p;
}

Matrix plane_projector(const PlanePoint& p) { return p.basis * p.basis.adjoint(); }

double plane_point_residual(const PlanePoint& p) {
  const Eigen::Index k = p.basis.cols();
  double r = (p.basis.adjoint() * p.basis - Matrix::Identity(k, k)).norm();
  if (p.quaternionic && p.j) {
    // projector must commute with J: P M = M conj(P)
    const Matrix proj = plane_projector(p);
    const Matrix& m = p.j->mat();
    r = std::max(r, (proj * m - m * proj.conjugate()).norm());
  }
  return r;
}

double splitting_bracket_residual(const CartanSplitting& s) {
  auto bracket = [](const Matrix& a, const Matrix& b) { return Matrix(a * b - b * a); };
  double worst = 0.0;
  auto check = [&](const Matrix& br, const std::vector<Matrix>& target) {
    const double nrm = br.norm();
    if (nrm < 1e-14) return;
    worst = std::max(worst, (br - project_real_span(target, br)).norm() / nrm);
  };
  for (std::size_t i = 0; i < s.k_basis.size(); ++i) {
    for (std::size_t j = i + 1; j < s.k_basis.size(); ++j) {
      check(bracket(s.k_basis[i], s.k_basis[j]), s.k_basis);
    }
    for (const Matrix& m : s.m_basis) check(bracket(s.k_basis[i], m), s.m_basis);
  }
  for (std::size_t i = 0; i < s.m_basis.size(); ++i) {
    for (std::size_t j = i + 1; j < s.m_basis.size(); ++j) {
      check(bracket(s.m_basis[i], s.m_basis[j]), s.k_basis);
    }
  }
  return worst;
}

Matrix project_real_span(const std::vector<Matrix>& family, const Matrix& x) {
  Matrix out = Matrix::Zero(x.rows(), x.cols());
  for (const Matrix& f : family) {
    out += (f.adjoint() * x).trace().real() * f;
  }
  return out;
}

std::pair<Matrix, Matrix> quadric_w_spaces(const QuadricContext& ctx,
                                           const QuadricPoint& p) {
  const auto [re, im] = re_im_split(ctx.a, Vector(std::sqrt(2.0) * p.z));
  if (re.imag().norm() > 1e-10 || im.imag().norm() > 1e-10) {
    throw NumericalError("real-structure coordinates are not conjugation-adapted");
  }
  const double nr = re.norm(), ni = im.norm();
  if (std::abs(nr - 1.0) > 1e-9 || std::abs(ni - 1.0) > 1e-9 ||
      std::abs(re.real().dot(im.real())) > 1e-9) {
    throw NumericalError("point representative is not normalized (RE/IM not orthonormal)");
  }
  const Eigen::Index n = ctx.h.dim();
  // Complement computed in real arithmetic: the W spaces live in the real form.
  RealMatrix w1_real(n, 2);
  w1_real.col(0) = re.real();
  w1_real.col(1) = im.real();
  Eigen::HouseholderQR<RealMatrix> qr(w1_real);
  const RealMatrix q = qr.householderQ() * RealMatrix::Identity(n, n);
  return {w1_real.cast<Complex>(), q.rightCols(n - 2).cast<Complex>()};
}

CartanSplitting quadric_splitting(const QuadricContext& ctx, const QuadricPoint& p) {
  const auto [w1, w2] = quadric_w_spaces(ctx, p);
  CartanSplitting s;
  s.k_basis.push_back(skew_pair(w1.col(0), w1.col(1)));
  for (Eigen::Index i = 0; i < w2.cols(); ++i) {
    for (Eigen::Index j = i + 1; j < w2.cols(); ++j) {
      s.k_basis.push_back(skew_pair(w2.col(i), w2.col(j)));
    }
  }
  for (Eigen::Index a = 0; a < 2; ++a) {
    for (Eigen::Index i = 0; i < w2.cols(); ++i) {
      s.m_basis.push_back(skew_pair(w1.col(a), w2.col(i)));
    }
  }
  return s;
}

CartanSplitting stabilizer_splitting(const std::vector<Matrix>& ambient_basis,
                                     const Matrix& plane_basis, double rel_tol) {
  if (ambient_basis.empty()) throw UsageError("empty ambient basis");
  const Eigen::Index n = plane_basis.rows();
  const Eigen::Index k = plane_basis.cols();
  const Matrix proj_out = Matrix::Identity(n, n) - plane_basis * plane_basis.adjoint();

  RealMatrix system(2 * n * k, static_cast<Eigen::Index>(ambient_basis.size()));
  for (std::size_t j = 0; j < ambient_basis.size(); ++j) {
    const Matrix c = proj_out * ambient_basis[j] * plane_basis;
    for (Eigen::Index e = 0; e < n * k; ++e) {
      system(2 * e, static_cast<Eigen::Index>(j)) = c.data()[e].real();
      system(2 * e + 1, static_cast<Eigen::Index>(j)) = c.data()[e].imag();
    }
  }
  Eigen::BDCSVD<RealMatrix> svd(system, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = sv.size() > 0 ? rel_tol * sv(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) ++rank;
  }
  CartanSplitting s;
  const RealMatrix v = svd.matrixV();
  auto combine = [&](Eigen::Index col) {
    Matrix x = Matrix::Zero(ambient_basis[0].rows(), ambient_basis[0].cols());
    for (std::size_t j = 0; j < ambient_basis.size(); ++j) {
      x += v(static_cast<Eigen::Index>(j), col) * ambient_basis[j];
    }
    return x;
  };
  for (Eigen::Index c = rank; c < v.cols(); ++c) s.k_basis.push_back(combine(c));
  for (Eigen::Index c = 0; c < rank; ++c) s.m_basis.push_back(combine(c));
  return s;
}

namespace {

void require_transvection_direction(const Matrix& direction, const CartanSplitting& s,
                                    double tol) {
  const double nrm = direction.norm();
  if (nrm == 0.0) return;
  const Matrix k_part = project_real_span(s.k_basis, direction);
  if (k_part.norm() > tol * nrm) {
    throw UsageError("direction has a component in the isotropy part of the splitting");
  }
  const Matrix m_part = project_real_span(s.m_basis, direction);
  if ((direction - k_part - m_part).norm() > tol * nrm) {
    throw UsageError("direction is not in the ambient transvection algebra");
  }
}

}  // namespace

QuadricPoint geodesic(const QuadricContext& ctx, const QuadricPoint& p,
                      const Matrix& direction, const CartanSplitting& s, double t,
                      double tol) {
  require_transvection_direction(direction, s, tol);
  const Matrix u = expm(t * direction);
  return make_quadric_point(ctx, u * p.z);
}

PlanePoint geodesic(const PlanePoint& p, const Matrix& direction,
                    const CartanSplitting& s, double t, double tol) {
  require_transvection_direction(direction, s, tol);
  const Matrix u = expm(t * direction);
  return make_plane_point(u * p.basis, p.j);
}

Vector tangent_from_algebra(const QuadricContext& ctx, const QuadricPoint& p,
                            const Matrix& x) {
  if (x.rows() != ctx.h.dim() || x.cols() != ctx.h.dim()) {
    throw UsageError("operator dimension mismatch");
  }
  const Vector xz = x * p.z;
  return xz - (ctx.h.eval(xz, p.z) / ctx.h.eval(p.z, p.z)) * p.z;
}

TangentAtPlane tangent_from_algebra(const PlanePoint& p, const Matrix& x) {
  if (x.rows() != p.basis.rows() || x.cols() != p.basis.rows()) {
    throw UsageError("operator dimension mismatch");
  }
  TangentAtPlane t;
  t.plane_basis = p.basis;
  t.perp_basis = orthogonal_complement(p.basis);
  t.hom = t.perp_basis.adjoint() * x * p.basis;
  return t;
}

double characteristic_angle_quadric(const QuadricContext& ctx, const Vector& w) {
  const double hw = ctx.h.eval(w, w).real();
  if (hw < 1e-28) throw UsageError("characteristic angle of a zero tangent vector");
  const double ratio = std::clamp(std::abs(ctx.b.eval(w, w)) / hw, 0.0, 1.0);
  return std::clamp(0.5 * std::acos(ratio), 0.0, std::acos(-1.0) / 4.0);
}

double characteristic_angle_grassmann(const TangentAtPlane& l, bool quaternionic) {
  Eigen::JacobiSVD<Matrix> svd(l.hom);
  const auto& sv = svd.singularValues();
  if (sv.size() < 2 || sv(0) < 1e-14) {
    throw UsageError("characteristic angle of a zero tangent vector");
  }
  double big, small;
  if (!quaternionic) {
    if (l.hom.cols() != 2) throw UsageError("complex plane tangent must have 2 columns");
    big = sv(0);
    small = sv(1);
  } else {
    if (l.hom.cols() != 4) throw UsageError("quaternionic plane tangent must have 4 columns");
    if (std::abs(sv(0) - sv(1)) > 1e-8 * sv(0) || std::abs(sv(2) - sv(3)) > 1e-8 * sv(0)) {
      throw NumericalError("quaternionic singular values do not pair up");
    }
    big = sv(0);
    small = sv(2);
  }
  return std::atan2(small, big);
}

}  // namespace skewgeo
