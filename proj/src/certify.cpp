#include "skewgeo/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "skewgeo/exterior.hpp"

namespace skewgeo {

namespace {

constexpr double kExpectedAngleRatio = 0.5;  // tan of the characteristic angle

double finite(double x) {
  if (std::isnan(x)) return -1.0;
  return std::clamp(x, -1e300, 1e300);
}

Matrix real_combo(const std::vector<Matrix>& family, std::mt19937_64& rng) {
  if (family.empty()) throw UsageError("empty family in random combination");
  std::normal_distribution<double> n01(0.0, 1.0);
  Matrix x = Matrix::Zero(family[0].rows(), family[0].cols());
  for (const Matrix& f : family) x += n01(rng) * f;
  const double nrm = x.norm();
  if (nrm < 1e-12) throw NumericalError("degenerate random combination");
  return x / nrm;
}

/// Real matrix of the tangent map: column j holds the (re, im interleaved)
/// coordinates of the orbit direction of the j-th working-basis element.
RealMatrix tangent_system(const Construction& c) {
  const auto& basis = c.rep.group.ortho_basis;
  auto column = [&](const Matrix& x) -> Vector {
    const Matrix op = c.rep.act_algebra(x);
    if (c.quadric_base) {
      return tangent_from_algebra(*c.quadric_ctx, *c.quadric_base, op);
    }
    const TangentAtPlane t = tangent_from_algebra(*c.plane_base, op);
    return Eigen::Map<const Vector>(t.hom.data(), t.hom.size());
  };
  const Vector first = column(basis[0]);
  RealMatrix system(2 * first.size(), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const Vector t = (j == 0) ? first : column(basis[j]);
    for (Eigen::Index e = 0; e < t.size(); ++e) {
      system(2 * e, static_cast<Eigen::Index>(j)) = t(e).real();
      system(2 * e + 1, static_cast<Eigen::Index>(j)) = t(e).imag();
    }
  }
  return system;
}

Matrix point_projector(const Construction& c) {
  if (c.quadric_base) {
    return c.quadric_base->z * c.quadric_base->z.adjoint();
  }
  return plane_projector(*c.plane_base);
}

}  // namespace

std::optional<ConstructionId> parse_construction_id(std::string_view s) {
  if (s == "q3-sphere") return ConstructionId::q3_sphere;
  if (s == "g2c6-cp2") return ConstructionId::g2c6_cp2;
  if (s == "g2h7-hp2") return ConstructionId::g2h7_hp2;
  return std::nullopt;
}

std::string to_string(ConstructionId id) {
  switch (id) {
    case ConstructionId::q3_sphere: return "q3-sphere";
    case ConstructionId::g2c6_cp2: return "g2c6-cp2";
    case ConstructionId::g2h7_hp2: return "g2h7-hp2";
  }
  throw UsageError("unknown construction id");
}

const std::vector<ConstructionId>& all_construction_ids() {
  static const std::vector<ConstructionId> ids = {
      ConstructionId::q3_sphere, ConstructionId::g2c6_cp2, ConstructionId::g2h7_hp2};
  return ids;
}

std::optional<Defect> parse_defect(std::string_view s) {
  if (s == "none") return Defect::none;
  if (s == "base") return Defect::base_point;
  if (s == "phi") return Defect::phi_contamination;
  if (s == "embedding") return Defect::embedding;
  return std::nullopt;
}

Construction make_construction(ConstructionId id) {
  Construction c;
  c.id = id;
  switch (id) {
    case ConstructionId::q3_sphere: {
      c.rep = cartan_so3();
      c.ambient = make_son(5);
      c.quadric_ctx = standard_quadric_context(5);
      c.quadric_base =
          make_quadric_point(*c.quadric_ctx, sym3_coords(quadric_base_matrix(), 5));
      c.expected_isotropy_dim = 1;
      c.expected_orbit_dim = 2;
      c.isotropy_name = "SO(2)";
      break;
    }
    case ConstructionId::g2c6_cp2: {
      c.rep = cartan_su3();
      c.ambient = make_sun(6);
      Matrix spanning(6, 2);
      spanning.col(0) = sym3_coords(plane_basis1(), 6);
      spanning.col(1) = sym3_coords(plane_basis2(), 6);
      c.plane_base = make_plane_point(spanning);
      c.expected_isotropy_dim = 4;
      c.expected_orbit_dim = 4;
      c.isotropy_name = "S(U(1)xU(2))";
      break;
    }
    case ConstructionId::g2h7_hp2: {
      const Sp3FundamentalData& data = sp3_fundamental_v1();
      c.rep = data.rep;
      c.ambient = make_sp(7);
      Matrix spanning = Matrix::Zero(14, 4);
      spanning(0, 0) = 1.0;
      spanning.col(1) = c.rep.antilinear->apply(spanning.col(0));
      spanning(1, 2) = 1.0;
      spanning.col(3) = c.rep.antilinear->apply(spanning.col(2));
      c.plane_base = make_plane_point(spanning, c.rep.antilinear);
      c.expected_isotropy_dim = 13;
      c.expected_orbit_dim = 8;
      c.isotropy_name = "Sp(1)xSp(2)";
      break;
    }
  }
  return c;
}

Construction inject_defect(Construction c, Defect d, double eps, std::uint64_t seed) {
  c.defect = d;
  switch (d) {
    case Defect::none:
    case Defect::embedding:
      // The embedding defect acts inside branch_chain.
      return c;
    case Defect::base_point: {
      if (c.quadric_base) {
        const auto [w1, w2] = quadric_w_spaces(*c.quadric_ctx, *c.quadric_base);
        RealVector u = w1.col(0).real();
        RealVector v = w1.col(1).real();
        u += eps * random_real_vector(u.size(), seed);
        u.normalize();
        v += eps * random_real_vector(v.size(), seed + 1);
        v -= v.dot(u) * u;
        v.normalize();
        const Complex i(0.0, 1.0);
        const Vector z = (u.cast<Complex>() + i * v.cast<Complex>()) / std::sqrt(2.0);
        c.quadric_base = make_quadric_point(*c.quadric_ctx, z);
      } else {
        const Eigen::Index n = c.plane_base->basis.rows();
        if (c.plane_base->quaternionic) {
          Matrix spanning(n, 4);
          spanning.col(0) =
              c.plane_base->basis.col(0) + eps * random_vector(n, seed);
          spanning.col(1) =
              c.plane_base->basis.col(2) + eps * random_vector(n, seed + 1);
          spanning.col(2) = c.plane_base->j->apply(spanning.col(0));
          spanning.col(3) = c.plane_base->j->apply(spanning.col(1));
          c.plane_base = make_plane_point(spanning, c.plane_base->j);
        } else {
          const Matrix spanning =
              c.plane_base->basis + eps * random_matrix(n, c.plane_base->basis.cols(), seed);
          c.plane_base = make_plane_point(spanning);
        }
      }
      return c;
    }
    case Defect::phi_contamination: {
      const CartanSplitting amb = ambient_splitting(c);
      const Matrix k0 = amb.k_basis.front();
      auto base = c.rep.act_algebra;
      c.rep.act_algebra = [base, k0, eps](const Matrix& x) {
        const Matrix d = base(x);
        return Matrix(d + eps * d.norm() * k0);
      };
      return c;
    }
  }
  throw UsageError("unknown defect");
}

IsotropyResult isotropy_algebra(const Construction& c, double rel_tol) {
  const RealMatrix system = tangent_system(c);
  Eigen::BDCSVD<RealMatrix> svd(system, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = sv.size() > 0 ? rel_tol * sv(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) ++rank;
  }
  IsotropyResult out;
  if (rank == sv.size() || rank == system.cols()) {
    out.margin = std::numeric_limits<double>::infinity();
  } else {
    out.margin = sv(rank - 1) / sv(rank);
  }
  if (out.margin < 10.0) {
    throw NumericalError("isotropy dimension is numerically ambiguous");
  }
  const RealMatrix v = svd.matrixV();
  const auto& basis = c.rep.group.ortho_basis;
  auto combine = [&](Eigen::Index col) {
    Matrix x = Matrix::Zero(basis[0].rows(), basis[0].cols());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      x += v(static_cast<Eigen::Index>(j), col) * basis[j];
    }
    return x;
  };
  for (Eigen::Index col = rank; col < v.cols(); ++col) out.k_basis.push_back(combine(col));
  for (Eigen::Index col = 0; col < rank; ++col) out.m_basis.push_back(combine(col));
  return out;
}

int orbit_dimension(const Construction& c, const IsotropyResult& iso) {
  const int rank = static_cast<int>(numeric_rank(tangent_system(c).cast<Complex>()));
  const int by_dims =
      static_cast<int>(c.rep.group.dim()) - static_cast<int>(iso.k_basis.size());
  if (rank != by_dims) {
    throw NumericalError("orbit dimension disagrees with the isotropy codimension");
  }
  return rank;
}

CartanSplitting ambient_splitting(const Construction& c) {
  if (c.quadric_base) return quadric_splitting(*c.quadric_ctx, *c.quadric_base);
  return stabilizer_splitting(c.ambient.ortho_basis, c.plane_base->basis);
}

double cartan_compatibility(const Construction& c, const IsotropyResult& iso,
                            const CartanSplitting& ambient) {
  double worst = 0.0;
  for (const Matrix& x : iso.m_basis) {
    const Matrix d = c.rep.act_algebra(x);
    const double nrm = d.norm();
    if (nrm < 1e-14) {
      throw NumericalError("transvection direction maps to a zero operator");
    }
    const Matrix k_part = project_real_span(ambient.k_basis, d);
    const Matrix m_part = project_real_span(ambient.m_basis, d);
    worst = std::max(worst, k_part.norm() / nrm);
    worst = std::max(worst, (d - k_part - m_part).norm() / nrm);
  }
  return worst;
}

double geodesic_orbit_check(const Construction& c, const IsotropyResult& iso,
                            const CartanSplitting& ambient, int directions,
                            int grid_points, std::uint64_t seed) {
  if (directions < 1 || grid_points < 2) throw UsageError("degenerate geodesic grid");
  std::mt19937_64 rng(seed);
  const double two_pi = 2.0 * std::acos(-1.0);
  double worst = 0.0;
  for (int dir = 0; dir < directions; ++dir) {
    const Matrix x = real_combo(iso.m_basis, rng);
    const Matrix d = c.rep.act_algebra(x);
    for (int i = 0; i < grid_points; ++i) {
      const double t = two_pi * i / (grid_points - 1);
      const Matrix r = c.rep.act_group(expm(t * x));
      Matrix p1, p2;
      if (c.quadric_base) {
        const QuadricPoint moved = geodesic(*c.quadric_ctx, *c.quadric_base, d, ambient, t);
        p1 = moved.z * moved.z.adjoint();
        const Vector z2 = r * c.quadric_base->z;
        p2 = z2 * z2.adjoint() / z2.squaredNorm();
      } else {
        const PlanePoint moved = geodesic(*c.plane_base, d, ambient, t);
        p1 = plane_projector(moved);
        p2 = span_projector(r * c.plane_base->basis);
      }
      worst = std::max(worst, (p1 - p2).norm());
    }
  }
  return worst;
}

AngleStats angle_census(const Construction& c, const IsotropyResult& iso, int samples,
                        std::uint64_t seed) {
  if (samples < 1) throw UsageError("angle census needs at least one sample");
  std::mt19937_64 rng(seed);
  AngleStats stats;
  stats.min_angle = std::numeric_limits<double>::infinity();
  stats.max_angle = -std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (int s = 0; s < samples; ++s) {
    const Matrix x = real_combo(iso.m_basis, rng);
    const Matrix op = c.rep.act_algebra(x);
    double phi;
    if (c.quadric_base) {
      phi = characteristic_angle_quadric(
          *c.quadric_ctx, tangent_from_algebra(*c.quadric_ctx, *c.quadric_base, op));
    } else {
      phi = characteristic_angle_grassmann(tangent_from_algebra(*c.plane_base, op),
                                           c.plane_base->quaternionic);
    }
    stats.min_angle = std::min(stats.min_angle, phi);
    stats.max_angle = std::max(stats.max_angle, phi);
    sum += phi;
  }
  stats.samples = samples;
  stats.mean_angle = sum / samples;
  return stats;
}

bool isotropy_membership_test(const Construction& c, const Matrix& g, double tol) {
  if (c.rep.group.group_relation_residual(g) > 1e-6) {
    throw UsageError("candidate fails the group relations");
  }
  const Matrix r = c.rep.act_group(g);
  Matrix moved;
  if (c.quadric_base) {
    const Vector z2 = r * c.quadric_base->z;
    moved = z2 * z2.adjoint() / z2.squaredNorm();
  } else {
    moved = span_projector(r * c.plane_base->basis);
  }
  return (moved - point_projector(c)).norm() <= tol;
}

nlohmann::json CertificationReport::to_json() const {
  nlohmann::json j;
  j["construction"] = construction;
  nlohmann::json arr = nlohmann::json::array();
  for (const CheckRecord& c : checks) {
    arr.push_back({{"name", c.name},
                   {"measured", finite(c.measured)},
                   {"tolerance", finite(c.tolerance)},
                   {"pass", c.pass}});
  }
  j["checks"] = arr;
  j["pass"] = pass;
  j["seed"] = seed;
  j["tolerances"] = {{"algebraic", config.effective(config.tol_algebraic)},
                     {"exact", config.effective(config.tol_exact)},
                     {"angle", config.effective(config.tol_angle)},
                     {"geodesic", config.effective(config.tol_geodesic)}};
  j["samples"] = config.samples;
  j["versions"] = {{"skewgeo", "0.1.0"}, {"report", 1}};
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

nlohmann::json BranchReport::to_json() const {
  nlohmann::json j;
  nlohmann::json arr = nlohmann::json::array();
  for (const CheckRecord& c : checks) {
    arr.push_back({{"name", c.name},
                   {"measured", finite(c.measured)},
                   {"tolerance", finite(c.tolerance)},
                   {"pass", c.pass}});
  }
  j["checks"] = arr;
  j["pass"] = pass;
  j["vc_dim"] = vc_dim;
  j["su3_intertwiner_cond"] = finite(su3_cond);
  j["so3_dims"] = so3_dims;
  j["so3_intertwiner_cond"] = finite(so3_cond);
  j["seed"] = seed;
  return j;
}

BranchReport branch_chain(const CertifyConfig& cfg, Defect defect) {
  BranchReport report;
  report.seed = cfg.seed;
  auto add = [&](const std::string& name, double measured, double tol, bool pass) {
    report.checks.push_back({name, measured, tol, pass});
    report.pass = report.pass && pass;
  };
  try {
    const Sp3FundamentalData& data = sp3_fundamental_v1();
    GroupEmbedding e = su3_in_sp3();
    if (defect == Defect::embedding) {
      const Matrix k = e.big.random_algebra_element(cfg.seed + 17);
      auto base = e.algebra;
      e.algebra = [base, k](const Matrix& x) {
        const Matrix d = base(x);
        return Matrix(d + 1e-3 * d.norm() * k);
      };
    }
    const Representation under_su3 = restrict_rep(data.rep, e);
    const std::vector<Matrix> comps = invariant_subspaces(under_su3, cfg.seed);

    std::vector<int> dims;
    for (const Matrix& q : comps) dims.push_back(static_cast<int>(q.cols()));
    std::sort(dims.begin(), dims.end());
    const bool dims_ok = dims == std::vector<int>{1, 1, 6, 6};
    add("branch_component_dims", static_cast<double>(dims.size()), 4.0, dims_ok);

    // The six-dimensional component equivalent to the symmetric-square
    // action; its conjugate partner admits no invertible intertwiner.
    std::optional<Representation> vc;
    std::optional<Intertwiner> su3_itw;
    const Representation model_su3 = cartan_su3();
    for (const Matrix& q : comps) {
      if (q.cols() != 6) continue;
      Representation sub = subrepresentation(under_su3, q);
      auto itw = find_intertwiner(sub, model_su3, cfg.seed + 1);
      if (itw && itw->cond < cfg.max_intertwiner_cond) {
        if (!su3_itw || itw->cond < su3_itw->cond) {
          vc = std::move(sub);
          su3_itw = itw;
        }
      }
    }
    report.vc_dim = vc ? 6 : 0;
    add("branch_vc_dim", static_cast<double>(report.vc_dim), 6.0, vc.has_value());
    if (!vc) {
      report.pass = false;
      return report;
    }
    report.su3_cond = su3_itw->cond;
    add("branch_su3_intertwiner_cond", su3_itw->cond, cfg.max_intertwiner_cond,
        su3_itw->cond < cfg.max_intertwiner_cond);

    const Representation under_so3 = restrict_rep(*vc, so3_in_su3());
    const std::vector<Matrix> so3_comps = invariant_subspaces(under_so3, cfg.seed + 2);
    for (const Matrix& q : so3_comps) report.so3_dims.push_back(static_cast<int>(q.cols()));
    std::sort(report.so3_dims.begin(), report.so3_dims.end());
    const bool so3_ok = report.so3_dims == std::vector<int>{1, 5};
    add("branch_so3_dims", static_cast<double>(report.so3_dims.size()), 2.0, so3_ok);
    if (!so3_ok) {
      report.pass = false;
      return report;
    }
    for (const Matrix& q : so3_comps) {
      if (q.cols() != 5) continue;
      const Representation five = subrepresentation(under_so3, q);
      const auto itw = find_intertwiner(five, cartan_so3(), cfg.seed + 3);
      const double cond = itw ? itw->cond : std::numeric_limits<double>::infinity();
      report.so3_cond = cond;
      add("branch_so3_intertwiner_cond", cond, cfg.max_intertwiner_cond,
          itw.has_value() && cond < cfg.max_intertwiner_cond);
    }
  } catch (const std::exception& ex) {
    add(std::string("branch_error(") + ex.what() + ")", 1.0, 0.0, false);
  }
  return report;
}

namespace {

void run_exterior_checks(CertificationReport& report, const CertifyConfig& cfg) {
  auto add = [&](const std::string& name, double measured, double tol, bool pass) {
    report.checks.push_back({name, measured, tol, pass});
    report.pass = report.pass && pass;
  };
  const SesquilinearForm h6 = SesquilinearForm::standard(6);
  const AntilinearStructure j6 = quaternionic_structure_c6();
  const AntilinearStructure j20 = induced_antilinear3(j6);
  const BilinearForm omega = symplectic_form_c6();
  const Matrix kappa = contraction_matrix(omega);

  double margin = 0.0;
  const Eigen::Index rank = numeric_rank(kappa, 1e-9, &margin);
  add("contraction_rank", static_cast<double>(rank), 6.0, rank == 6);
  const Matrix kernel = nullspace(kappa);
  add("contraction_kernel_dim", static_cast<double>(kernel.cols()), 14.0,
      kernel.cols() == 14);

  const double j_resid = (kappa * j20.mat() - j6.mat() * kappa.conjugate()).norm();
  add("contraction_j_intertwine", j_resid, cfg.effective(cfg.tol_exact),
      j_resid < cfg.effective(cfg.tol_exact));

  const MatrixLieGroup sp3 = make_sp3();
  double equiv = 0.0;
  for (int s = 0; s < 20; ++s) {
    const Matrix g = sp3.random_group_element(cfg.seed + 100 + static_cast<std::uint64_t>(s));
    equiv = std::max(
        equiv, (kappa * induced_map3(g) - g * kappa).norm() / kappa.norm());
  }
  add("contraction_equivariance", equiv, cfg.effective(1e-10),
      equiv < cfg.effective(1e-10));

  const auto seven = kernel_spanning_trivectors();
  double in_kernel = 0.0;
  Matrix span(kTrivectorDim, 14);
  for (int k = 0; k < 7; ++k) {
    const Vector& v = seven[static_cast<std::size_t>(k)];
    in_kernel = std::max(in_kernel, (kappa * v).norm() / v.norm());
    span.col(k) = v;
    span.col(7 + k) = j20.apply(v);
  }
  add("kernel_spanning_residual", in_kernel, cfg.effective(cfg.tol_exact),
      in_kernel < cfg.effective(cfg.tol_exact));
  const Eigen::Index span_rank = numeric_rank(span);
  add("kernel_spanning_rank", static_cast<double>(span_rank), 14.0, span_rank == 14);

  const Eigen::Index cdim = commutant_dimension_j_commuting(sp3_fundamental_v1().rep);
  add("quaternionic_commutant_dim", static_cast<double>(cdim), 1.0, cdim == 1);
}

}  // namespace

CertificationReport run_all(const Construction& c, const CertifyConfig& cfg) {
  CertificationReport report;
  report.construction = to_string(c.id);
  report.seed = cfg.seed;
  report.config = cfg;
  auto add = [&](const std::string& name, double measured, double tol, bool pass) {
    report.checks.push_back({name, measured, tol, pass});
    report.pass = report.pass && pass;
  };

  try {
    // Base point invariants.
    const double base_resid = c.quadric_base
                                  ? quadric_point_residual(*c.quadric_ctx, *c.quadric_base)
                                  : plane_point_residual(*c.plane_base);
    add("base_point_residual", base_resid, cfg.effective(cfg.tol_exact),
        base_resid < cfg.effective(cfg.tol_exact));

    if (c.id == ConstructionId::q3_sphere) {
      // The distinguished tangent frame: orbit directions of the two
      // rotation generators, and the 2:1 split of their real/imaginary parts.
      const Vector y1 = sym3_coords(quadric_tangent1(), 5);
      const Vector y2 = sym3_coords(quadric_tangent2(), 5);
      const Vector t1 = c.rep.act_algebra(so3_generator_12()) * c.quadric_base->z;
      const Vector t2 = c.rep.act_algebra(so3_generator_13()) * c.quadric_base->z;
      const double frame = std::max((t1 - y1).norm(), (t2 - y2).norm());
      add("tangent_frame_residual", frame, cfg.effective(cfg.tol_exact),
          frame < cfg.effective(cfg.tol_exact));
      double ratio = 0.0;
      double ortho = 0.0;
      for (const Vector& y : {y1, y2}) {
        const auto [re, im] = re_im_split(*c.rep.antilinear, y);
        const double big = std::max(re.norm(), im.norm());
        const double small = std::min(re.norm(), im.norm());
        ratio = std::max(ratio, std::abs(big - 2.0 * small));
        ortho = std::max(ortho, std::abs(c.quadric_ctx->h.eval(re, im)));
      }
      add("tangent_norm_ratio", ratio, cfg.effective(cfg.tol_exact),
          ratio < cfg.effective(cfg.tol_exact));
      add("tangent_re_im_orthogonal", ortho, cfg.effective(cfg.tol_exact),
          ortho < cfg.effective(cfg.tol_exact));
    }

    // Isotropy and orbit dimensions.
    const IsotropyResult iso = isotropy_algebra(c);
    add("isotropy_dim", static_cast<double>(iso.k_basis.size()),
        static_cast<double>(c.expected_isotropy_dim),
        static_cast<int>(iso.k_basis.size()) == c.expected_isotropy_dim);
    add("rank_margin", iso.margin, cfg.min_rank_margin, iso.margin >= cfg.min_rank_margin);
    const int orbit = orbit_dimension(c, iso);
    add("orbit_dim", static_cast<double>(orbit), static_cast<double>(c.expected_orbit_dim),
        orbit == c.expected_orbit_dim);

    // Ambient splitting at the base point.
    const CartanSplitting ambient = ambient_splitting(c);
    const int ambient_dim = static_cast<int>(c.ambient.dim());
    const int expected_k = [&] {
      switch (c.id) {
        case ConstructionId::q3_sphere: return 4;
        case ConstructionId::g2c6_cp2: return 19;
        case ConstructionId::g2h7_hp2: return 65;
      }
      return -1;
    }();
    add("ambient_isotropy_dim", static_cast<double>(ambient.k_basis.size()),
        static_cast<double>(expected_k),
        static_cast<int>(ambient.k_basis.size()) == expected_k);
    add("ambient_transvection_dim", static_cast<double>(ambient.m_basis.size()),
        static_cast<double>(ambient_dim - expected_k),
        static_cast<int>(ambient.m_basis.size()) == ambient_dim - expected_k);
    const double bracket = splitting_bracket_residual(ambient);
    add("splitting_bracket_residual", bracket, cfg.effective(cfg.tol_algebraic),
        bracket < cfg.effective(cfg.tol_algebraic));

    // The totally geodesic certificate.
    const double compat = cartan_compatibility(c, iso, ambient);
    add("cartan_compatibility", compat, cfg.effective(cfg.tol_algebraic),
        compat < cfg.effective(cfg.tol_algebraic));

    const double rep_resid = representation_residual(c.rep, 20, cfg.seed + 5);
    add("representation_residual", rep_resid, cfg.effective(cfg.tol_algebraic),
        rep_resid < cfg.effective(cfg.tol_algebraic));

    const double geo = geodesic_orbit_check(c, iso, ambient, cfg.geodesic_directions,
                                            std::max(2, cfg.samples), cfg.seed + 6);
    add("geodesic_deviation", geo, cfg.effective(cfg.tol_geodesic),
        geo < cfg.effective(cfg.tol_geodesic));

    const AngleStats angles = angle_census(c, iso, cfg.samples, cfg.seed + 7);
    const double expected_angle = std::atan(kExpectedAngleRatio);
    const double angle_dev = std::max(std::abs(angles.min_angle - expected_angle),
                                      std::abs(angles.max_angle - expected_angle));
    add("angle_deviation", angle_dev, cfg.effective(cfg.tol_angle),
        angle_dev < cfg.effective(cfg.tol_angle));

    // Isotropy membership spot checks.
    Matrix member, outsider;
    switch (c.id) {
      case ConstructionId::q3_sphere: {
        const double a = std::cos(0.7), s = std::sin(0.7);
        member = Matrix::Identity(3, 3);
        member(1, 1) = a; member(1, 2) = -s;
        member(2, 1) = s; member(2, 2) = a;
        outsider = Matrix::Zero(3, 3);
        outsider(0, 1) = outsider(1, 0) = 1.0;
        outsider(2, 2) = -1.0;
        break;
      }
      case ConstructionId::g2c6_cp2: {
        const Complex i(0.0, 1.0);
        const double th = 0.4;
        member = Matrix::Zero(3, 3);
        member(0, 0) = std::exp(2.0 * i * th);
        member(1, 1) = member(2, 2) = std::exp(-i * th);
        const double a = std::cos(0.5), s = std::sin(0.5);
        outsider = Matrix::Identity(3, 3);
        outsider(0, 0) = a; outsider(0, 1) = -s;
        outsider(1, 0) = s; outsider(1, 1) = a;
        break;
      }
      case ConstructionId::g2h7_hp2: {
        if (iso.k_basis.empty() || iso.m_basis.empty()) {
          throw NumericalError("empty splitting for membership examples");
        }
        member = expm(0.8 * iso.k_basis.front());
        outsider = expm(0.5 * iso.m_basis.front());
        break;
      }
    }
    const bool member_ok = isotropy_membership_test(c, member);
    const bool outsider_in = isotropy_membership_test(c, outsider);
    add("isotropy_membership_positive", member_ok ? 0.0 : 1.0, 0.5, member_ok);
    add("isotropy_membership_negative", outsider_in ? 0.0 : 1.0, 0.5, !outsider_in);

    if (c.id == ConstructionId::g2h7_hp2) {
      run_exterior_checks(report, cfg);
      const BranchReport branch = branch_chain(
          cfg, c.defect == Defect::embedding ? Defect::embedding : Defect::none);
      for (const CheckRecord& rec : branch.checks) {
        report.checks.push_back(rec);
        report.pass = report.pass && rec.pass;
      }
      report.notes.push_back(
          "isotropy group identified with Sp(1)xSp(2) at the Lie algebra level "
          "(dimension and splitting); the group-level isomorphism is not "
          "certified numerically");
    }
  } catch (const std::exception& ex) {
    report.pass = false;
    report.notes.push_back(std::string("certification aborted: ") + ex.what());
  }
  return report;
}

}  // namespace skewgeo
