#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "skewgeo/reps.hpp"
#include "skewgeo/spaces.hpp"

namespace skewgeo {

enum class ConstructionId { q3_sphere, g2c6_cp2, g2h7_hp2 };

std::optional<ConstructionId> parse_construction_id(std::string_view s);
std::string to_string(ConstructionId id);
const std::vector<ConstructionId>& all_construction_ids();

/// Structured perturbations for negative controls.
enum class Defect { none, base_point, phi_contamination, embedding };

std::optional<Defect> parse_defect(std::string_view s);

/// One of the three embedded submanifolds: a representation acting on the
/// ambient coordinates, a base point, the ambient transvection group, and
/// the expected invariants.
struct Construction {
  ConstructionId id;
  Representation rep;
  MatrixLieGroup ambient;
  std::optional<QuadricContext> quadric_ctx;
  std::optional<QuadricPoint> quadric_base;
  std::optional<PlanePoint> plane_base;
  int expected_isotropy_dim = 0;
  int expected_orbit_dim = 0;
  std::string isotropy_name;
  // Set by inject_defect so downstream stages (branching) see the defect too.
  Defect defect = Defect::none;
};

Construction make_construction(ConstructionId id);

Construction inject_defect(Construction c, Defect d, double eps = 1e-3,
                           std::uint64_t seed = 99);

/// Isotropy subalgebra (elements whose action fixes the base point) and its
/// trace-orthogonal complement inside the acting group's algebra. margin is
/// the singular-value gap around the rank threshold.
struct IsotropyResult {
  std::vector<Matrix> k_basis;
  std::vector<Matrix> m_basis;
  double margin = 0.0;
};

IsotropyResult isotropy_algebra(const Construction& c, double rel_tol = 1e-9);

/// dim(G) - dim(k), cross-checked against the rank of the tangent map.
int orbit_dimension(const Construction& c, const IsotropyResult& iso);

/// Cartan splitting of the ambient transvection algebra at the base point.
CartanSplitting ambient_splitting(const Construction& c);

/// Totally-geodesic certificate: max over the m-basis of the relative
/// component of the algebra image inside the ambient isotropy part.
double cartan_compatibility(const Construction& c, const IsotropyResult& iso,
                            const CartanSplitting& ambient);

/// Max deviation between the operator-exponential curve and the
/// group-conjugation curve over a t-grid in [0, 2*pi].
double geodesic_orbit_check(const Construction& c, const IsotropyResult& iso,
                            const CartanSplitting& ambient, int directions,
                            int grid_points, std::uint64_t seed);

struct AngleStats {
  double min_angle = 0.0;
  double max_angle = 0.0;
  double mean_angle = 0.0;
  int samples = 0;
};

AngleStats angle_census(const Construction& c, const IsotropyResult& iso,
                        int samples, std::uint64_t seed);

/// True iff the group element maps the base point to itself. Throws
/// UsageError if g fails the group relations.
bool isotropy_membership_test(const Construction& c, const Matrix& g,
                              double tol = 1e-10);

struct CheckRecord {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct CertifyConfig {
  double tol_algebraic = 1e-9;
  double tol_exact = 1e-12;
  double tol_angle = 1e-8;
  double tol_geodesic = 1e-8;
  double max_intertwiner_cond = 1e6;
  double min_rank_margin = 1e3;
  std::optional<double> tol_override;  // replaces every residual tolerance
  int samples = 100;
  int geodesic_directions = 10;
  std::uint64_t seed = 1;

  double effective(double default_tol) const {
    return tol_override.value_or(default_tol);
  }
};

struct CertificationReport {
  std::string construction;
  std::vector<CheckRecord> checks;
  bool pass = true;
  std::uint64_t seed = 0;
  CertifyConfig config;
  std::vector<std::string> notes;

  nlohmann::json to_json() const;
};

/// The restriction chain of the 14-dim representation: invariant 6-dim
/// subspace under SU(3) equivalent to its Cartan representation, then the
/// 1+5 split under SO(3) with the 5-dim part equivalent to the SO(3)
/// Cartan representation.
struct BranchReport {
  std::vector<CheckRecord> checks;
  bool pass = true;
  int vc_dim = 0;
  double su3_cond = 0.0;
  std::vector<int> so3_dims;
  double so3_cond = 0.0;
  std::uint64_t seed = 0;

  nlohmann::json to_json() const;
};

BranchReport branch_chain(const CertifyConfig& cfg, Defect defect = Defect::none);

/// Runs every certification check for one construction and aggregates the
/// report. Exceptions from sub-checks mark the report failed with a note.
CertificationReport run_all(const Construction& c, const CertifyConfig& cfg);

}  // namespace skewgeo
