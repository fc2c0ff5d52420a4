#include "skewgeo/reps.hpp"

#include <cmath>
#include <random>

#include <unsupported/Eigen/KroneckerProduct>

#include "skewgeo/exterior.hpp"

namespace skewgeo {

namespace {

double re_trace_inner(const Matrix& x, const Matrix& y) {
  return (x.adjoint() * y).trace().real();
}

/// Gram-Schmidt over R with <X,Y> = Re tr(X^H Y).
std::vector<Matrix> orthonormalize_real_span(const std::vector<Matrix>& basis) {
  std::vector<Matrix> out;
  out.reserve(basis.size());
  for (const Matrix& b : basis) {
    Matrix v = b;
    for (int pass = 0; pass < 2; ++pass) {
      for (const Matrix& u : out) v -= re_trace_inner(u, v) * u;
    }
    const double nrm = v.norm();
    if (nrm < 1e-12 * std::max(1.0, b.norm())) {
      throw NumericalError("algebra basis is not linearly independent");
    }
    out.push_back(v / nrm);
  }
  return out;
}

Matrix unit_entry(Eigen::Index n, Eigen::Index p, Eigen::Index q, Complex c) {
  Matrix m = Matrix::Zero(n, n);
  m(p, q) = c;
  return m;
}

Matrix sp_embed(const Matrix& a, const Matrix& b) {
  const Eigen::Index n = a.rows();
  Matrix y = Matrix::Zero(2 * n, 2 * n);
  y.topLeftCorner(n, n) = a;
  y.topRightCorner(n, n) = b;
  y.bottomLeftCorner(n, n) = -b.conjugate();
  y.bottomRightCorner(n, n) = a.conjugate();
  return y;
}

Matrix sp_j_mat(Eigen::Index n) {
  Matrix m = Matrix::Zero(2 * n, 2 * n);
  m.topRightCorner(n, n) = -Matrix::Identity(n, n);
  m.bottomLeftCorner(n, n) = Matrix::Identity(n, n);
  return m;
}

MatrixLieGroup finish(MatrixLieGroup g) {
  g.ortho_basis = orthonormalize_real_span(g.algebra_basis);
  return g;
}

Matrix unvec(const Vector& v, Eigen::Index d) {
  return Eigen::Map<const Matrix>(v.data(), d, d);
}

}  // namespace

double MatrixLieGroup::group_relation_residual(const Matrix& g) const {
  if (g.rows() != ambient || g.cols() != ambient) {
    throw UsageError("group element has the wrong size");
  }
  double r = (g.adjoint() * g - Matrix::Identity(ambient, ambient)).norm();
  r = std::max(r, std::abs(g.determinant() - Complex(1.0, 0.0)));
  if (real_entries) r = std::max(r, g.imag().norm());
  if (j_mat) r = std::max(r, (g * (*j_mat) - (*j_mat) * g.conjugate()).norm());
  return r;
}

double MatrixLieGroup::algebra_relation_residual(const Matrix& x) const {
  if (x.rows() != ambient || x.cols() != ambient) {
    throw UsageError("algebra element has the wrong size");
  }
  double r = (x.adjoint() + x).norm();
  if (trace_free) r = std::max(r, std::abs(x.trace()));
  if (real_entries) r = std::max(r, x.imag().norm());
  if (j_mat) r = std::max(r, (x * (*j_mat) - (*j_mat) * x.conjugate()).norm());
  return r;
}

Matrix MatrixLieGroup::random_algebra_element(std::uint64_t seed) const {
  const RealVector c = random_real_vector(dim(), seed);
  Matrix x = Matrix::Zero(ambient, ambient);
  for (Eigen::Index i = 0; i < dim(); ++i) x += c(i) * ortho_basis[i];
  const double nrm = x.norm();
  if (nrm == 0.0) throw NumericalError("degenerate random algebra element");
  return x / nrm;
}

Matrix MatrixLieGroup::random_group_element(std::uint64_t seed) const {
  return expm(random_algebra_element(seed));
}

MatrixLieGroup make_son(Eigen::Index n) {
  MatrixLieGroup g;
  g.name = "SO(" + std::to_string(n) + ")";
  g.ambient = n;
  g.real_entries = true;
  for (Eigen::Index p = 0; p < n; ++p)
    for (Eigen::Index q = p + 1; q < n; ++q)
      g.algebra_basis.push_back(unit_entry(n, p, q, 1.0) - unit_entry(n, q, p, 1.0));
  return finish(std::move(g));
}

MatrixLieGroup make_sun(Eigen::Index n) {
  MatrixLieGroup g;
  g.name = "SU(" + std::to_string(n) + ")";
  g.ambient = n;
  const Complex i(0.0, 1.0);
  for (Eigen::Index p = 0; p < n; ++p) {
    for (Eigen::Index q = p + 1; q < n; ++q) {
      g.algebra_basis.push_back(unit_entry(n, p, q, 1.0) - unit_entry(n, q, p, 1.0));
      g.algebra_basis.push_back(unit_entry(n, p, q, i) + unit_entry(n, q, p, i));
    }
  }
  for (Eigen::Index p = 0; p + 1 < n; ++p) {
    g.algebra_basis.push_back(unit_entry(n, p, p, i) - unit_entry(n, p + 1, p + 1, i));
  }
  return finish(std::move(g));
}

MatrixLieGroup make_sp(Eigen::Index n) {
  MatrixLieGroup g;
  g.name = "Sp(" + std::to_string(n) + ")";
  g.ambient = 2 * n;
  g.j_mat = sp_j_mat(n);
  const Complex i(0.0, 1.0);
  const Matrix zero = Matrix::Zero(n, n);
  // A block: u(n)
  for (Eigen::Index p = 0; p < n; ++p) {
    for (Eigen::Index q = p + 1; q < n; ++q) {
      g.algebra_basis.push_back(
          sp_embed(unit_entry(n, p, q, 1.0) - unit_entry(n, q, p, 1.0), zero));
      g.algebra_basis.push_back(
          sp_embed(unit_entry(n, p, q, i) + unit_entry(n, q, p, i), zero));
    }
    g.algebra_basis.push_back(sp_embed(unit_entry(n, p, p, i), zero));
  }
  // B block: complex symmetric
  for (Eigen::Index p = 0; p < n; ++p) {
    for (Eigen::Index q = p; q < n; ++q) {
      Matrix s = unit_entry(n, p, q, 1.0);
      if (p != q) s += unit_entry(n, q, p, 1.0);
      g.algebra_basis.push_back(sp_embed(zero, s));
      g.algebra_basis.push_back(sp_embed(zero, i * s));
    }
  }
  return finish(std::move(g));
}

MatrixLieGroup make_so3() { return make_son(3); }
MatrixLieGroup make_su3() { return make_sun(3); }
MatrixLieGroup make_sp3() { return make_sp(3); }

std::vector<Matrix> Representation::algebra_images() const {
  std::vector<Matrix> out;
  out.reserve(group.algebra_basis.size());
  for (const Matrix& x : group.algebra_basis) out.push_back(act_algebra(x));
  return out;
}

Representation cartan_so3() {
  Representation rep;
  rep.group = make_so3();
  rep.dim = 5;
  rep.metric = SesquilinearForm::standard(5);
  rep.bilinear = BilinearForm::standard_symmetric(5);
  rep.antilinear = AntilinearStructure::conjugation(5);
  rep.act_group = [](const Matrix& b) {
    if (b.rows() != 3 || b.cols() != 3) throw UsageError("expected a 3x3 group element");
    const auto& basis = sym3_basis();
    Matrix op(5, 5);
    for (Eigen::Index a = 0; a < 5; ++a) {
      const Matrix3 image = b * basis[a] * b.transpose();
      op.col(a) = sym3_coords(image, 5);
    }
    return op;
  };
  rep.act_algebra = [](const Matrix& y) {
    if (y.rows() != 3 || y.cols() != 3) throw UsageError("expected a 3x3 algebra element");
    const auto& basis = sym3_basis();
    Matrix op(5, 5);
    for (Eigen::Index a = 0; a < 5; ++a) {
      const Matrix3 image = y * basis[a] - basis[a] * y;
      op.col(a) = sym3_coords(image, 5);
    }
    return op;
  };
  return rep;
}

Representation cartan_su3() {
  Representation rep;
  rep.group = make_su3();
  rep.dim = 6;
  rep.metric = SesquilinearForm::standard(6);
  rep.act_group = [](const Matrix& b) {
    if (b.rows() != 3 || b.cols() != 3) throw UsageError("expected a 3x3 group element");
    const auto& basis = sym3_basis();
    Matrix op(6, 6);
    for (Eigen::Index a = 0; a < 6; ++a) {
      const Matrix3 image = b * basis[a] * b.transpose();
      op.col(a) = sym3_coords(image, 6);
    }
    return op;
  };
  rep.act_algebra = [](const Matrix& y) {
    if (y.rows() != 3 || y.cols() != 3) throw UsageError("expected a 3x3 algebra element");
    const auto& basis = sym3_basis();
    Matrix op(6, 6);
    for (Eigen::Index a = 0; a < 6; ++a) {
      const Matrix3 image = y * basis[a] + basis[a] * y.transpose();
      op.col(a) = sym3_coords(image, 6);
    }
    return op;
  };
  return rep;
}

namespace {

Sp3FundamentalData build_sp3_fundamental() {
  const SesquilinearForm h6 = SesquilinearForm::standard(6);
  const SesquilinearForm h20 = hermitian_product_cube(h6);
  const AntilinearStructure j3 = induced_antilinear3(quaternionic_structure_c6());
  const BilinearForm omega = symplectic_form_c6();
  const Matrix kappa = contraction_matrix(omega);

  const auto seven = kernel_spanning_trivectors();
  // Quaternionic Gram-Schmidt with the two base-plane seeds first.
  const std::array<int, 7> order = {5, 6, 0, 1, 2, 3, 4};
  std::vector<Vector> b;
  b.reserve(7);
  for (int idx : order) {
    Vector v = seven[static_cast<std::size_t>(idx)];
    for (int pass = 0; pass < 2; ++pass) {
      for (const Vector& u : b) {
        v -= h20.eval(v, u) * u;
        const Vector ju = j3.apply(u);
        v -= h20.eval(v, ju) * ju;
      }
    }
    const double nrm = h20.norm(v);
    if (nrm < 1e-9) throw NumericalError("kernel spanning vectors are quaternionically dependent");
    b.push_back(v / nrm);
  }

  Matrix q(kTrivectorDim, 14);
  for (int k = 0; k < 7; ++k) {
    q.col(k) = b[static_cast<std::size_t>(k)];
    q.col(7 + k) = j3.apply(b[static_cast<std::size_t>(k)]);
  }
  if ((kappa * q).norm() > 1e-10) {
    throw NumericalError("constructed basis does not lie in the contraction kernel");
  }
  if ((q.transpose() * h20.gram() * q.conjugate() -
       Matrix::Identity(14, 14)).norm() > 1e-10) {
    throw NumericalError("kernel basis failed orthonormality");
  }

  Sp3FundamentalData data;
  data.v1_basis = q;
  data.j_restricted = q.adjoint() * j3.mat() * q.conjugate();

  Representation rep;
  rep.group = make_sp3();
  rep.dim = 14;
  rep.metric = SesquilinearForm::standard(14);
  rep.antilinear = AntilinearStructure(data.j_restricted, -1);
  rep.act_group = [q](const Matrix& g) { return Matrix(q.adjoint() * induced_map3(g) * q); };
  rep.act_algebra = [q](const Matrix& y) { return Matrix(q.adjoint() * derivation_map3(y) * q); };

  // Invariance of the kernel under every generator.
  const Matrix pq = q * q.adjoint();
  const Matrix complement = Matrix::Identity(kTrivectorDim, kTrivectorDim) - pq;
  for (const Matrix& y : rep.group.algebra_basis) {
    const Matrix d3 = derivation_map3(y);
    if ((complement * d3 * q).norm() >= 1e-9 * std::max(1.0, (d3 * q).norm())) {
      throw NumericalError("contraction kernel is not invariant under a generator");
    }
  }
  data.rep = std::move(rep);
  return data;
}

}  // namespace

const Sp3FundamentalData& sp3_fundamental_v1() {
  static const Sp3FundamentalData data = build_sp3_fundamental();
  return data;
}

GroupEmbedding su3_in_sp3() {
  GroupEmbedding e;
  e.sub = make_su3();
  e.big = make_sp3();
  auto embed = [](const Matrix& y) {
    if (y.rows() != 3 || y.cols() != 3) throw UsageError("expected a 3x3 matrix");
    Matrix out = Matrix::Zero(6, 6);
    out.topLeftCorner(3, 3) = y;
    out.bottomRightCorner(3, 3) = y.conjugate();
    return out;
  };
  e.group = embed;
  e.algebra = embed;
  return e;
}

GroupEmbedding so3_in_su3() {
  GroupEmbedding e;
  e.sub = make_so3();
  e.big = make_su3();
  auto ident = [](const Matrix& y) {
    if (y.rows() != 3 || y.cols() != 3) throw UsageError("expected a 3x3 matrix");
    return y;
  };
  e.group = ident;
  e.algebra = ident;
  return e;
}

Representation restrict_rep(const Representation& rep, const GroupEmbedding& e,
                            double tol) {
  for (const Matrix& x : e.sub.algebra_basis) {
    const Matrix image = e.algebra(x);
    if (e.big.algebra_relation_residual(image) >= tol * std::max(1.0, image.norm())) {
      throw NumericalError("embedding image violates the big algebra's relations");
    }
  }
  Representation out = rep;
  out.group = e.sub;
  auto base_group = rep.act_group;
  auto base_algebra = rep.act_algebra;
  auto embed_group = e.group;
  auto embed_algebra = e.algebra;
  out.act_group = [base_group, embed_group](const Matrix& g) { return base_group(embed_group(g)); };
  out.act_algebra = [base_algebra, embed_algebra](const Matrix& x) {
    return base_algebra(embed_algebra(x));
  };
  return out;
}

Representation subrepresentation(const Representation& rep, const Matrix& basis,
                                 double tol) {
  if (basis.rows() != rep.dim) throw UsageError("subspace basis has the wrong ambient dimension");
  const Matrix proj_out = Matrix::Identity(rep.dim, rep.dim) - basis * basis.adjoint();
  for (const Matrix& a : rep.algebra_images()) {
    const double scale = std::max(1.0, (a * basis).norm());
    if ((proj_out * a * basis).norm() >= tol * scale) {
      throw NumericalError("subspace is not invariant under the representation");
    }
  }
  Representation out;
  out.group = rep.group;
  out.dim = basis.cols();
  out.metric = SesquilinearForm::standard(basis.cols());
  auto base_group = rep.act_group;
  auto base_algebra = rep.act_algebra;
  const Matrix q = basis;
  out.act_group = [base_group, q](const Matrix& g) { return Matrix(q.adjoint() * base_group(g) * q); };
  out.act_algebra = [base_algebra, q](const Matrix& x) {
    return Matrix(q.adjoint() * base_algebra(x) * q);
  };
  return out;
}

std::vector<Matrix> invariant_subspaces(const Representation& rep,
                                        std::uint64_t seed, double tol) {
  const std::vector<Matrix> images = rep.algebra_images();
  const Eigen::Index d = rep.dim;
  const Matrix id = Matrix::Identity(d, d);

  Matrix system(static_cast<Eigen::Index>(images.size()) * d * d, d * d);
  for (std::size_t i = 0; i < images.size(); ++i) {
    const Matrix block = Eigen::kroneckerProduct(id, images[i]).eval() -
                         Eigen::kroneckerProduct(images[i].transpose(), id).eval();
    system.middleRows(static_cast<Eigen::Index>(i) * d * d, d * d) = block;
  }
  const Matrix commutant = nullspace(system, 1e-9);
  if (commutant.cols() == 0) throw NumericalError("commutant computation failed");

  for (int attempt = 0; attempt < 8; ++attempt) {
    const Vector coeffs = random_vector(commutant.cols(), seed + static_cast<std::uint64_t>(attempt));
    const Matrix t = unvec(commutant * coeffs, d);
    const Matrix herm = 0.5 * (t + t.adjoint());
    if (herm.norm() < 1e-8) continue;

    Eigen::SelfAdjointEigenSolver<Matrix> es(herm);
    const RealVector ev = es.eigenvalues();
    const double spread = std::max(1.0, ev(d - 1) - ev(0));

    std::vector<Matrix> spaces;
    Eigen::Index start = 0;
    bool ok = true;
    for (Eigen::Index i = 1; i <= d; ++i) {
      if (i == d || ev(i) - ev(i - 1) > 1e-6 * spread) {
        spaces.push_back(es.eigenvectors().middleCols(start, i - start));
        start = i;
      }
    }
    for (const Matrix& q : spaces) {
      const Matrix proj_out = Matrix::Identity(d, d) - q * q.adjoint();
      for (const Matrix& a : images) {
        if ((proj_out * a * q).norm() >= tol * std::max(1.0, (a * q).norm())) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) return spaces;
  }
  throw NumericalError("invariant subspace splitting did not converge");
}

std::optional<Intertwiner> find_intertwiner(const Representation& rep1,
                                            const Representation& rep2,
                                            std::uint64_t seed) {
  if (rep1.group.name != rep2.group.name || rep1.group.ambient != rep2.group.ambient) {
    throw UsageError("intertwiner requires representations of the same group");
  }
  if (rep1.dim != rep2.dim) throw UsageError("intertwiner requires equal target dimensions");
  const Eigen::Index d = rep1.dim;
  const Matrix id = Matrix::Identity(d, d);
  const auto& basis = rep1.group.algebra_basis;

  Matrix system(static_cast<Eigen::Index>(basis.size()) * d * d, d * d);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Matrix a = rep1.act_algebra(basis[i]);
    const Matrix b = rep2.act_algebra(basis[i]);
    const Matrix block = Eigen::kroneckerProduct(id, b).eval() -
                         Eigen::kroneckerProduct(a.transpose(), id).eval();
    system.middleRows(static_cast<Eigen::Index>(i) * d * d, d * d) = block;
  }
  const Matrix solutions = nullspace(system, 1e-9);
  if (solutions.cols() == 0) return std::nullopt;

  std::optional<Intertwiner> best;
  for (int attempt = 0; attempt < 5; ++attempt) {
    const Vector coeffs = random_vector(solutions.cols(), seed + static_cast<std::uint64_t>(attempt));
    Matrix t = unvec(solutions * coeffs, d);
    const double scale = t.norm();
    if (scale < 1e-12) continue;
    t /= scale;
    Eigen::JacobiSVD<Matrix> svd(t);
    const double smin = svd.singularValues()(d - 1);
    const double smax = svd.singularValues()(0);
    if (smin <= 1e-12 * smax) continue;
    const double cond = smax / smin;
    if (!best || cond < best->cond) best = Intertwiner{t, cond};
  }
  return best;
}

Eigen::Index commutant_dimension_j_commuting(const Representation& rep) {
  if (!rep.antilinear) throw UsageError("representation carries no antilinear structure");
  const Eigen::Index d = rep.dim;
  const std::vector<Matrix> images = rep.algebra_images();
  const Matrix& m = rep.antilinear->mat();

  const Eigen::Index params = 2 * d * d;
  const Eigen::Index block = 2 * d * d;  // real+imag entries of one constraint
  RealMatrix system(static_cast<Eigen::Index>(images.size() + 1) * block, params);

  Eigen::Index col = 0;
  for (Eigen::Index p = 0; p < d; ++p) {
    for (Eigen::Index q = 0; q < d; ++q) {
      for (int part = 0; part < 2; ++part, ++col) {
        Matrix e = Matrix::Zero(d, d);
        e(p, q) = (part == 0) ? Complex(1, 0) : Complex(0, 1);
        Eigen::Index row = 0;
        for (const Matrix& a : images) {
          const Matrix c = e * a - a * e;
          for (Eigen::Index k = 0; k < d * d; ++k) {
            system(row + 2 * k, col) = c.data()[k].real();
            system(row + 2 * k + 1, col) = c.data()[k].imag();
          }
          row += block;
        }
        const Matrix cj = e * m - m * e.conjugate();
        for (Eigen::Index k = 0; k < d * d; ++k) {
          system(row + 2 * k, col) = cj.data()[k].real();
          system(row + 2 * k + 1, col) = cj.data()[k].imag();
        }
      }
    }
  }
  Eigen::BDCSVD<RealMatrix> svd(system);
  const auto& sv = svd.singularValues();
  const double cutoff = 1e-9 * sv(0);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) ++rank;
  }
  return params - rank;
}

double representation_residual(const Representation& rep, int samples,
                               std::uint64_t seed) {
  double worst = 0.0;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int s = 0; s < samples; ++s) {
    const std::uint64_t s1 = rng(), s2 = rng(), s3 = rng();
    const Matrix g1 = rep.group.random_group_element(s1);
    const Matrix g2 = rep.group.random_group_element(s2);
    const Matrix r1 = rep.act_group(g1);
    const Matrix r2 = rep.act_group(g2);
    worst = std::max(worst, (rep.act_group(Matrix(g1 * g2)) - r1 * r2).norm());

    const Matrix x = rep.group.random_algebra_element(s3);
    const double t = unit(rng);
    worst = std::max(worst, (rep.act_group(expm(t * x)) - expm(t * rep.act_algebra(x))).norm());

    worst = std::max(worst,
                     (r1.adjoint() * rep.metric.gram() * r1 - rep.metric.gram()).norm());
    if (rep.bilinear) {
      worst = std::max(worst,
                       (r1.transpose() * rep.bilinear->gram() * r1 - rep.bilinear->gram()).norm());
    }
    if (rep.antilinear) {
      const Matrix& m = rep.antilinear->mat();
      worst = std::max(worst, (r1 * m - m * r1.conjugate()).norm());
    }
  }
  return worst;
}

}  // namespace skewgeo
