#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "epwstab/catalog.hpp"
#include "epwstab/conedecomp.hpp"
#include "epwstab/epwgeom.hpp"
#include "epwstab/json_io.hpp"
#include "epwstab/oneps.hpp"
#include "epwstab/strata.hpp"

namespace {

using epws::Json;

std::string triple_name(std::size_t idx) {
  const auto& t = epws::triples()[idx];
  return std::to_string(t[0]) + std::to_string(t[1]) + std::to_string(t[2]);
}

Json chart_to_json(const epws::Chart& c) {
  Json v0 = Json::array();
  for (const auto& x : c.v0) v0.push_back(epws::rational_str(x));
  return Json{{"v0", v0}, {"frame", epws::matrix_to_json(c.frame)}};
}

int cmd_mu(const std::string& lag_path, const std::string& ps) {
  auto a = epws::lagrangian_from_json(epws::load_json_file(lag_path));
  epws::OnePS lambda(epws::parse_weight_list(ps));
  auto type = epws::lambda_type(a, lambda);
  Json out{{"mu", epws::mu_value(a, lambda)},
           {"type", type.d},
           {"reduced_type", type.reduced}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_ordering_ps(const std::string& spec_name, bool as_json) {
  auto spec = epws::builtin_spec(spec_name);
  auto rays = epws::ordering_rays(spec);
  Json list = Json::array();
  for (const auto& ray : rays) {
    Json entry{{"x", ray}};
    Json groups = Json::array();
    if (!spec.to_sl6_weights.empty()) {
      auto r = epws::x_to_sl6(spec, ray);
      entry["r"] = r;
      auto dec = epws::induced_decomposition(epws::ray_to_oneps(spec, ray));
      for (const auto& level : dec.levels) {
        if (level.weight <= 0) continue;
        Json names = Json::array();
        for (auto idx : level.coords) names.push_back(triple_name(idx));
        groups.push_back(Json{{"weight", level.weight}, {"monomials", names}});
      }
    }
    entry["positive_isotypic"] = groups;
    list.push_back(entry);
  }
  if (as_json) {
    std::cout << Json{{"spec", spec_name}, {"rays", list}}.dump(2) << "\n";
    return 0;
  }
  for (const auto& e : list) {
    std::cout << "x = " << e["x"].dump();
    if (e.contains("r")) std::cout << "  r = " << e["r"].dump();
    std::cout << "\n";
    for (const auto& g : e["positive_isotypic"]) {
      std::cout << "    weight " << g["weight"] << ":";
      for (const auto& m : g["monomials"]) std::cout << " " << m.get<std::string>();
      std::cout << "\n";
    }
  }
  std::cout << rays.size() << " rays\n";
  return 0;
}

int cmd_stability(const std::string& lag_path, const std::string& basis_path,
                  const std::string& cert_path) {
  auto a = epws::lagrangian_from_json(epws::load_json_file(lag_path));
  epws::QMatrix basis = epws::QMatrix::identity(6);
  if (!basis_path.empty())
    basis = epws::matrix_from_json(epws::load_json_file(basis_path));
  Json scan = Json::array();
  for (const auto& entry : epws::table_scan(a, basis)) {
    Json matched = Json::array();
    for (const auto& [id, flag_ok] : entry.matched)
      matched.push_back(Json{{"stratum", id.str()}, {"flag_check", flag_ok}});
    scan.push_back(Json{{"lambda", entry.lambda},
                        {"mu", entry.mu},
                        {"reduced_type", entry.type},
                        {"matched", matched}});
  }
  Json out{{"table_scan", scan}};
  if (!cert_path.empty()) {
    auto cert = epws::certificate_from_json(epws::load_json_file(cert_path));
    auto verdict = epws::verify_certificate(a, cert);
    const char* name = verdict == epws::CertVerdict::StableExcluded
                           ? "StableExcluded"
                           : verdict == epws::CertVerdict::SemistableExcluded
                                 ? "SemistableExcluded"
                                 : "Invalid";
    out["certificate_verdict"] = name;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_epw_sextic(const std::string& lag_path) {
  auto a = epws::lagrangian_from_json(epws::load_json_file(lag_path));
  auto y = epws::epw_sextic(a);
  Json out{{"form", epws::poly_to_json(y.form)},
           {"degenerate", y.degenerate_flag},
           {"chart", chart_to_json(y.chart)}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_plane_sextic(const std::string& lag_path, const std::string& plane_path) {
  auto a = epws::lagrangian_from_json(epws::load_json_file(lag_path));
  auto w = epws::subspace_from_json(epws::load_json_file(plane_path));
  auto c = epws::plane_sextic(w, a);
  Json out{{"form", epws::poly_to_json(c.form)},
           {"full_plane", c.full_plane_flag},
           {"w_frame", epws::matrix_to_json(c.w_frame)},
           {"chart", chart_to_json(c.chart)}};
  if (!c.full_plane_flag) {
    auto shah = epws::shah_probe(c);
    out["shah_report"] = Json{{"matched", shah.matched}, {"notes", shah.notes}};
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_catalog(const std::string& action, const std::string& name) {
  if (action == "list") {
    for (const auto& n : epws::catalog_names()) std::cout << n << "\n";
    return 0;
  }
  if (action == "build") {
    auto entry = epws::build(name);
    Json out = epws::lagrangian_to_json(entry.a);
    out["name"] = entry.name;
    if (!entry.params.empty()) out["params"] = entry.params;
    out["note"] = entry.note;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cerr << "catalog: unknown action " << action << "\n";
  return 2;
}

int cmd_reproduce(std::vector<std::string> claims, bool all, bool as_json) {
  if (all) claims = epws::claim_ids();
  if (claims.empty()) {
    std::cerr << "reproduce: no claims requested (use --claim or --all)\n";
    return 2;
  }
  bool ok = true;
  Json results = Json::array();
  for (const auto& id : claims) {
    auto r = epws::run_claim(id);
    ok = ok && r.pass;
    if (as_json) {
      results.push_back(Json{{"id", r.id}, {"pass", r.pass}, {"details", r.details}});
    } else {
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << "\n";
      for (const auto& d : r.details) std::cout << "    " << d << "\n";
    }
  }
  if (as_json)
    std::cout << Json{{"results", results}, {"all_pass", ok}}.dump(2) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations for lagrangian degeneracy sextics"};
  app.require_subcommand(1);

  std::string lag_path, ps, spec_name = "sl6-wedge3", basis_path, cert_path,
              plane_path, catalog_action, catalog_name;
  std::vector<std::string> claims;
  bool as_json = false, all_claims = false;

  auto* mu = app.add_subcommand("mu", "Hilbert-Mumford value for a 1-PS");
  mu->add_option("--lagrangian", lag_path)->required();
  mu->add_option("--ps", ps, "six weights, e.g. \"5,-1,-1,-1,-1,-1\"")->required();

  auto* ops = app.add_subcommand("ordering-ps", "enumerate ordering rays");
  ops->add_option("--spec", spec_name);
  ops->add_flag("--json", as_json);

  auto* stab = app.add_subcommand("stability", "covering-table scan");
  stab->add_option("--lagrangian", lag_path)->required();
  stab->add_option("--basis", basis_path);
  stab->add_option("--certificate", cert_path);

  auto* epw = app.add_subcommand("epw-sextic", "degeneracy sextic in P^5");
  epw->add_option("--lagrangian", lag_path)->required();

  auto* pls = app.add_subcommand("plane-sextic", "degeneracy curve on a plane");
  pls->add_option("--lagrangian", lag_path)->required();
  pls->add_option("--plane", plane_path)->required();

  auto* cat = app.add_subcommand("catalog", "named lagrangians");
  cat->add_option("action", catalog_action, "list | build")->required();
  cat->add_option("name", catalog_name);

  auto* rep = app.add_subcommand("reproduce", "re-derive published equations");
  rep->add_option("--claim", claims);
  rep->add_flag("--all", all_claims);
  rep->add_flag("--json", as_json);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(mu)) return cmd_mu(lag_path, ps);
    if (app.got_subcommand(ops)) return cmd_ordering_ps(spec_name, as_json);
    if (app.got_subcommand(stab)) return cmd_stability(lag_path, basis_path, cert_path);
    if (app.got_subcommand(epw)) return cmd_epw_sextic(lag_path);
    if (app.got_subcommand(pls)) return cmd_plane_sextic(lag_path, plane_path);
    if (app.got_subcommand(cat)) return cmd_catalog(catalog_action, catalog_name);
    if (app.got_subcommand(rep)) return cmd_reproduce(claims, all_claims, as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
