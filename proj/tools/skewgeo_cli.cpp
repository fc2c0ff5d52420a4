#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "skewgeo/certify.hpp"
#include "skewgeo/exterior.hpp"
#include "skewgeo/sym3.hpp"

namespace {

using nlohmann::json;
using namespace skewgeo;

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file '" << out_path << "'\n";
    return 2;
  }
  out << text << "\n";
  return 0;
}

std::string report_text(const CertificationReport& r) {
  std::ostringstream os;
  os << "construction: " << r.construction << "\n";
  for (const CheckRecord& c : r.checks) {
    os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name
       << "  measured=" << c.measured << "  tolerance=" << c.tolerance << "\n";
  }
  for (const std::string& n : r.notes) os << "  note: " << n << "\n";
  os << (r.pass ? "PASS" : "FAIL") << " (seed " << r.seed << ")";
  return os.str();
}

json construct_json(ConstructionId id) {
  const Construction c = make_construction(id);
  json j;
  j["construction"] = to_string(id);
  j["representation"] = {{"group", c.rep.group.name},
                         {"dim", c.rep.dim},
                         {"isotropy", c.isotropy_name}};
  // Orbit tangent basis at the base point, as orbit directions of the
  // transvection part of the acting algebra.
  const IsotropyResult iso = isotropy_algebra(c);
  json tangent = json::array();
  for (const Matrix& x : iso.m_basis) {
    if (c.quadric_base) {
      tangent.push_back(matrix_to_json(
          tangent_from_algebra(*c.quadric_ctx, *c.quadric_base, c.rep.act_algebra(x))));
    } else {
      tangent.push_back(
          matrix_to_json(tangent_from_algebra(*c.plane_base, c.rep.act_algebra(x)).hom));
    }
  }
  j["tangent_basis"] = tangent;
  switch (id) {
    case ConstructionId::q3_sphere: {
      j["Z0"] = matrix_to_json(quadric_base_matrix());
      j["Y1"] = matrix_to_json(quadric_tangent1());
      j["Y2"] = matrix_to_json(quadric_tangent2());
      j["base_coords"] = matrix_to_json(c.quadric_base->z);
      break;
    }
    case ConstructionId::g2c6_cp2: {
      j["A1"] = matrix_to_json(plane_basis1());
      j["A2"] = matrix_to_json(plane_basis2());
      j["plane_basis"] = matrix_to_json(c.plane_base->basis);
      break;
    }
    case ConstructionId::g2h7_hp2: {
      j["dim_V1"] = 14;
      j["trivector_dim"] = kTrivectorDim;
      j["base_plane"] = matrix_to_json(c.plane_base->basis);
      break;
    }
  }
  return j;
}

std::string construct_text(ConstructionId id) {
  const json j = construct_json(id);
  std::ostringstream os;
  os << "construction: " << to_string(id) << "\n";
  for (const auto& [key, value] : j.items()) {
    if (key == "construction") continue;
    os << key << " = " << value.dump() << "\n";
  }
  std::string s = os.str();
  if (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical construction and certification of three totally "
               "geodesic embeddings in rank-2 symmetric spaces"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_path;
  std::optional<double> tol_override;
  int samples = 100;
  std::uint64_t seed = 1;
  std::string perturb = "none";

  auto add_common = [&](CLI::App* cmd, bool with_tols) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->envname("SKEWGEO_FORMAT");
    cmd->add_option("--out", out_path, "write output to a file")
        ->envname("SKEWGEO_OUT");
    cmd->add_option("--seed", seed, "random seed")->envname("SKEWGEO_SEED");
    if (with_tols) {
      cmd->add_option("--tol", tol_override,
                      "override every residual tolerance with one value")
          ->check(CLI::PositiveNumber)
          ->envname("SKEWGEO_TOL");
      cmd->add_option("--samples", samples, "sample / grid count")
          ->check(CLI::PositiveNumber)
          ->envname("SKEWGEO_SAMPLES");
    }
  };

  std::string construct_id;
  CLI::App* construct = app.add_subcommand("construct", "print the data of one construction");
  construct->add_option("id", construct_id, "q3-sphere | g2c6-cp2 | g2h7-hp2")->required();
  add_common(construct, false);

  std::string certify_id;
  CLI::App* certify = app.add_subcommand("certify", "run the certification checks");
  certify->add_option("id", certify_id, "q3-sphere | g2c6-cp2 | g2h7-hp2 | all")->required();
  add_common(certify, true);
  certify->add_option("--perturb", perturb, "")->group("");  // negative controls

  CLI::App* branch = app.add_subcommand("branch", "restriction chain of the 14-dim representation");
  add_common(branch, true);
  branch->add_option("--perturb", perturb, "")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto defect = parse_defect(perturb);
  if (!defect) {
    std::cerr << "error: unknown perturbation '" << perturb << "'\n";
    return 2;
  }

  CertifyConfig cfg;
  cfg.tol_override = tol_override;
  cfg.samples = samples;
  cfg.seed = seed;

  try {
    if (construct->parsed()) {
      const auto id = parse_construction_id(construct_id);
      if (!id) {
        std::cerr << "error: unknown construction '" << construct_id << "'\n";
        return 2;
      }
      const std::string text =
          format == "json" ? construct_json(*id).dump(2) : construct_text(*id);
      return emit(text, out_path);
    }

    if (certify->parsed()) {
      std::vector<ConstructionId> ids;
      if (certify_id == "all") {
        ids = all_construction_ids();
      } else {
        const auto id = parse_construction_id(certify_id);
        if (!id) {
          std::cerr << "error: unknown construction '" << certify_id << "'\n";
          return 2;
        }
        ids.push_back(*id);
      }
      bool all_pass = true;
      json arr = json::array();
      std::ostringstream text;
      for (std::size_t i = 0; i < ids.size(); ++i) {
        Construction c = make_construction(ids[i]);
        if (*defect != Defect::none) c = inject_defect(c, *defect, 1e-3, seed + 41);
        const CertificationReport report = run_all(c, cfg);
        all_pass = all_pass && report.pass;
        arr.push_back(report.to_json());
        if (i > 0) text << "\n";
        text << report_text(report);
      }
      const std::string payload =
          format == "json" ? (ids.size() == 1 ? arr.front().dump(2) : arr.dump(2))
                           : text.str();
      const int io = emit(payload, out_path);
      if (io != 0) return io;
      return all_pass ? 0 : 1;
    }

    if (branch->parsed()) {
      const BranchReport report = branch_chain(cfg, *defect);
      std::string payload;
      if (format == "json") {
        payload = report.to_json().dump(2);
      } else {
        std::ostringstream os;
        for (const CheckRecord& c : report.checks) {
          os << (c.pass ? "PASS" : "FAIL") << "  " << c.name
             << "  measured=" << c.measured << "  tolerance=" << c.tolerance << "\n";
        }
        os << (report.pass ? "PASS" : "FAIL");
        payload = os.str();
      }
      const int io = emit(payload, out_path);
      if (io != 0) return io;
      return report.pass ? 0 : 1;
    }
  } catch (const UsageError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 2;
}
