#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "skewgeo/certify.hpp"

using namespace skewgeo;

namespace {

CertifyConfig quick_config() {
  CertifyConfig cfg;
  cfg.samples = 25;
  cfg.geodesic_directions = 3;
  return cfg;
}

bool has_check(const CertificationReport& r, const std::string& name, bool pass) {
  for (const CheckRecord& c : r.checks) {
    if (c.name == name) return c.pass == pass;
  }
  return false;
}

}  // namespace

TEST_CASE("construction ids round trip") {
  for (ConstructionId id : all_construction_ids()) {
    const auto back = parse_construction_id(to_string(id));
    REQUIRE(back.has_value());
    CHECK(*back == id);
  }
  CHECK(!parse_construction_id("nope").has_value());
  CHECK(parse_defect("base") == Defect::base_point);
  CHECK(!parse_defect("wat").has_value());
}

TEST_CASE("sphere in the quadric: dimensions and compatibility") {
  const Construction c = make_construction(ConstructionId::q3_sphere);
  const IsotropyResult iso = isotropy_algebra(c);
  CHECK(iso.k_basis.size() == 1);
  CHECK(iso.m_basis.size() == 2);
  CHECK(iso.margin >= 1e3);
  CHECK(orbit_dimension(c, iso) == 2);

  const CartanSplitting ambient = ambient_splitting(c);
  CHECK(cartan_compatibility(c, iso, ambient) < 1e-12);
  CHECK(geodesic_orbit_check(c, iso, ambient, 3, 25, 5) < 1e-10);

  const AngleStats angles = angle_census(c, iso, 50, 6);
  CHECK(std::abs(angles.min_angle - std::atan(0.5)) < 1e-10);
  CHECK(std::abs(angles.max_angle - std::atan(0.5)) < 1e-10);
}

TEST_CASE("complex projective plane in the complex Grassmannian") {
  const Construction c = make_construction(ConstructionId::g2c6_cp2);
  const IsotropyResult iso = isotropy_algebra(c);
  CHECK(iso.k_basis.size() == 4);
  CHECK(orbit_dimension(c, iso) == 4);
  const CartanSplitting ambient = ambient_splitting(c);
  CHECK(cartan_compatibility(c, iso, ambient) < 1e-12);
  const AngleStats angles = angle_census(c, iso, 50, 6);
  CHECK(std::abs(angles.max_angle - std::atan(0.5)) < 1e-10);
}

TEST_CASE("quaternionic projective plane in the quaternionic Grassmannian") {
  const Construction c = make_construction(ConstructionId::g2h7_hp2);
  const IsotropyResult iso = isotropy_algebra(c);
  CHECK(iso.k_basis.size() == 13);
  CHECK(orbit_dimension(c, iso) == 8);
  const CartanSplitting ambient = ambient_splitting(c);
  CHECK(cartan_compatibility(c, iso, ambient) < 1e-10);
  const AngleStats angles = angle_census(c, iso, 50, 6);
  CHECK(std::abs(angles.min_angle - std::atan(0.5)) < 1e-8);
  CHECK(std::abs(angles.max_angle - std::atan(0.5)) < 1e-8);
}

TEST_CASE("membership spot checks through the full report") {
  const CertificationReport report =
      run_all(make_construction(ConstructionId::q3_sphere), quick_config());
  CHECK(report.pass);
  CHECK(has_check(report, "isotropy_membership_positive", true));
  CHECK(has_check(report, "isotropy_membership_negative", true));
  CHECK(has_check(report, "tangent_frame_residual", true));
  CHECK(has_check(report, "tangent_norm_ratio", true));
}

TEST_CASE("branching chain of the fourteen-dimensional representation") {
  const BranchReport report = branch_chain(quick_config());
  CHECK(report.pass);
  CHECK(report.vc_dim == 6);
  CHECK(report.su3_cond < 1e6);
  CHECK(report.so3_dims == std::vector<int>{1, 5});
  CHECK(report.so3_cond < 1e6);
}

TEST_CASE("negative control: perturbed base point fails the certificate") {
  const Construction c = inject_defect(
      make_construction(ConstructionId::q3_sphere), Defect::base_point);
  const CertificationReport report = run_all(c, quick_config());
  CHECK(!report.pass);
  // the perturbed point is still a valid quadric point...
  CHECK(has_check(report, "base_point_residual", true));
  // ...but the isotropy collapses and the angles spread out
  CHECK(has_check(report, "isotropy_dim", false));
}

TEST_CASE("negative control: contaminated algebra map fails compatibility") {
  const Construction c = inject_defect(
      make_construction(ConstructionId::q3_sphere), Defect::phi_contamination);
  const IsotropyResult iso = isotropy_algebra(c);
  CHECK(iso.k_basis.size() == 1);  // contamination is invisible to the orbit
  const double compat = cartan_compatibility(c, iso, ambient_splitting(c));
  CHECK(compat > 1e-4);
  const CertificationReport report = run_all(c, quick_config());
  CHECK(!report.pass);
}

TEST_CASE("negative control: broken embedding fails the branch chain") {
  const BranchReport report = branch_chain(quick_config(), Defect::embedding);
  CHECK(!report.pass);
}

TEST_CASE("reports are deterministic") {
  const CertifyConfig cfg = quick_config();
  const std::string a =
      run_all(make_construction(ConstructionId::q3_sphere), cfg).to_json().dump();
  const std::string b =
      run_all(make_construction(ConstructionId::q3_sphere), cfg).to_json().dump();
  CHECK(a == b);
}
