#include "toralg/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

#include "toralg/json_io.hpp"

namespace toralg {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string report_version() {
  const char* v = std::getenv("TORALG_VERSION");
  return v ? v : "0.1.0";
}

/// Resolves verb inputs: an explicit flag wins, otherwise the key is looked
/// up in the --input document.
struct InputResolver {
  Json doc;  // from --input, may be null

  Json get(const std::string& inline_json, const char* key) const {
    if (!inline_json.empty()) return Json::parse(inline_json);
    if (doc.is_object() && doc.contains(key)) return doc.at(key);
    throw UsageError(std::string("missing input: --") + key);
  }
};

std::string sweep_csv(long dmax) {
  std::ostringstream os;
  os << "d,e,e_prime,|J|,strong_adp,codim,ell_bound\n";
  for (long d = 2; d <= dmax; ++d)
    for (long e = 1; e < d; ++e) {
      if (std::gcd(d, e) != 1) continue;
      auto p = surface_profile(d, e);
      os << d << "," << e << "," << p.params.e_prime << "," << p.J.size() << ","
         << (p.strong_adp ? "true" : "false") << "," << p.codim << ","
         << p.ell_bound << "\n";
    }
  return os.str();
}

Json sweep_json(long dmax) {
  Json rows = Json::array();
  for (long d = 2; d <= dmax; ++d)
    for (long e = 1; e < d; ++e) {
      if (std::gcd(d, e) != 1) continue;
      rows.push_back(profile_to_json(surface_profile(d, e)));
    }
  return Json{{"rows", std::move(rows)}};
}

Json faces_json(const RationalCone& sigma) {
  Json faces = Json::array();
  for (const auto& f : sigma.faces())
    faces.push_back(Json{
        {"ray_indices", f.ray_indices}, {"dim", f.dim}, {"smooth", f.smooth}});
  return Json{{"rays", cone_to_json(sigma).at("rays")}, {"faces", std::move(faces)}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact algebraic vector fields on affine toric varieties"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string input_path, output_path;
  app.add_option("--input", input_path, "JSON document with named inputs ('-' for stdin)");
  app.add_option("--output", output_path, "write the report to this path");

  std::string cone_s, field_s, f1_s, f2_s, face_s, y_s, cert_s, request_s;
  long d = 0, e = 0, dmax = 0, bound = 12, ell_max = -1;
  std::string format = "csv";

  std::function<void(const InputResolver&, Json&, std::string&, int&)> action;

  auto cone_cmd = app.add_subcommand("cone", "cone combinatorics");
  cone_cmd->require_subcommand(1);
  cone_cmd->fallthrough();
  auto cone_dual = cone_cmd->add_subcommand("dual", "dual cone");
  cone_dual->add_option("--cone", cone_s, "cone JSON");
  cone_dual->callback([&] {
    action = [&](const InputResolver& in, Json& payload, std::string&, int&) {
      payload = cone_to_json(json_to_cone(in.get(cone_s, "cone")).dual());
    };
  });
  auto cone_faces = cone_cmd->add_subcommand("faces", "face lattice");
  cone_faces->add_option("--cone", cone_s, "cone JSON");
  cone_faces->callback([&] {
    action = [&](const InputResolver& in, Json& payload, std::string&, int&) {
      payload = faces_json(json_to_cone(in.get(cone_s, "cone")));
    };
  });

  auto field_cmd = app.add_subcommand("field", "homogeneous fields");
  field_cmd->require_subcommand(1);
  field_cmd->fallthrough();
  auto field_classify = field_cmd->add_subcommand("classify", "trichotomy and predicates");
  field_classify->add_option("--cone", cone_s, "cone JSON");
  field_classify->add_option("--field", field_s, "field JSON");
  field_classify->callback([&] {
    action = [&](const InputResolver& in, Json& payload, std::string&, int&) {
      auto sigma = json_to_cone(in.get(cone_s, "cone"));
      auto f = json_to_field(in.get(field_s, "field"));
      payload = classification_to_json(classify(sigma, f));
    };
  });
  auto field_bracket = field_cmd->add_subcommand("bracket", "closed-form bracket, oracle-checked");
  field_bracket->add_option("--f1", f1_s, "field JSON");
  field_bracket->add_option("--f2", f2_s, "field JSON");
  field_bracket->callback([&] {
    action = [&](const InputResolver& in, Json& payload, std::string&, int&) {
      auto f1 = json_to_field(in.get(f1_s, "f1"));
      auto f2 = json_to_field(in.get(f2_s, "f2"));
      auto br = bracket(f1, f2);
      auto oracle = bracket_oracle(to_laurent(f1), to_laurent(f2));
      auto closed = br ? to_laurent(*br) : LaurentVectorField(f1.e.rank());
      if (!(closed == oracle))
        throw std::logic_error("bracket: closed form disagrees with the oracle");
      payload = br ? field_to_json(*br) : Json{{"zero", true}};
    };
  });
  auto field_vanishes = field_cmd->add_subcommand("vanishes", "vanishing on an orbit closure");
  field_vanishes->add_option("--cone", cone_s, "cone JSON");
  field_vanishes->add_option("--field", field_s, "field JSON");
  field_vanishes->add_option("--face", face_s, "ray-index array JSON");
  field_vanishes->callback([&] {
    action = [&](const InputResolver& in, Json& payload, std::string&, int&) {
      auto sigma = json_to_cone(in.get(cone_s, "cone"));
      auto f = json_to_field(in.get(field_s, "field"));
      auto idx = in.get(face_s, "face").get<std::vector<std::size_t>>();
      const Face& tau = sigma.face_by_indices(idx);
      payload = Json{{"vanishes", vanishes_on_orbit_closure(sigma, f, tau)}};
    };
  });

  auto adp_cmd = app.add_subcommand("adp", "algebraic density property");
  adp_cmd->require_subcommand(1);
  adp_cmd->fallthrough();
  auto adp_decide = adp_cmd->add_subcommand("decide", "ADP relative to Y");
  adp_decide->add_option("--cone", cone_s, "cone JSON");
  adp_decide->add_option("--y", y_s, "invariant subvariety JSON");
  adp_decide->callback([&] {
    action = [&](const InputResolver& in, Json& payload, std::string&, int&) {
      auto sigma = json_to_cone(in.get(cone_s, "cone"));
      auto y = json_to_subvariety(sigma, in.get(y_s, "y"));
      payload = Json{{"adp", decide_adp(sigma, y)},
                     {"closure_inserted", y.closure_inserted()},
                     {"faces", subvariety_to_json(y).at("faces")}};
    };
  });
  auto adp_certify = adp_cmd->add_subcommand("certify", "build a verifiable certificate");
  adp_certify->add_option("--cone", cone_s, "cone JSON");
  adp_certify->add_option("--y", y_s, "invariant subvariety JSON");
  adp_certify->callback([&] {
    action = [&](const InputResolver& in, Json& payload, std::string&, int&) {
      auto sigma = json_to_cone(in.get(cone_s, "cone"));
      auto y = json_to_subvariety(sigma, in.get(y_s, "y"));
      auto cert = build_certificate(sigma, y);
      auto check = verify_certificate(sigma, y, cert);
      if (!check.ok) throw std::logic_error("emitted certificate failed self-verification");
      payload = certificate_to_json(cert);
    };
  });
  auto adp_verify = adp_cmd->add_subcommand("verify", "re-check a certificate");
  adp_verify->add_option("--cone", cone_s, "cone JSON");
  adp_verify->add_option("--y", y_s, "invariant subvariety JSON");
  adp_verify->add_option("--cert", cert_s, "certificate JSON");
  adp_verify->callback([&] {
    action = [&](const InputResolver& in, Json& payload, std::string&, int& code) {
      auto sigma = json_to_cone(in.get(cone_s, "cone"));
      auto y = json_to_subvariety(sigma, in.get(y_s, "y"));
      auto cert = json_to_certificate(in.get(cert_s, "cert"));
      auto res = verify_certificate(sigma, y, cert);
      payload = Json{{"ok", res.ok}, {"reasons", res.reasons}};
      if (!res.ok) code = 1;
    };
  });

  auto surf_cmd = app.add_subcommand("surface", "cyclic quotient surfaces V_{d,e}");
  surf_cmd->require_subcommand(1);
  surf_cmd->fallthrough();
  auto surf_profile = surf_cmd->add_subcommand("profile", "modular profile");
  surf_profile->add_option("d", d, "order of the cyclic group")->required();
  surf_profile->add_option("e", e, "weight of the action")->required();
  surf_profile->callback([&] {
    action = [&](const InputResolver&, Json& payload, std::string&, int&) {
      payload = profile_to_json(surface_profile(d, e));
    };
  });
  auto surf_closure = surf_cmd->add_subcommand("closure", "bracket closure vs predicted structure");
  surf_closure->add_option("d", d)->required();
  surf_closure->add_option("e", e)->required();
  surf_closure->add_option("--bound", bound, "bidegree bound (default 12)");
  surf_closure->add_option("--ell-max", ell_max, "cap for the empirical minimal ell");
  surf_closure->callback([&] {
    action = [&](const InputResolver&, Json& payload, std::string&, int&) {
      auto prof = surface_profile(d, e);
      auto table = lie_closure(prof.params, bound);
      auto predicted = predicted_structure(prof.params, bound);
      std::string diff;
      bool match = tables_match(table, predicted, &diff);
      long cap = ell_max >= 0 ? ell_max : prof.ell_bound + 2;
      payload = Json{{"profile", profile_to_json(prof)},
                     {"table", closure_table_to_json(table)},
                     {"matches_predicted", match},
                     {"diff", diff},
                     {"minimal_ell", minimal_ell_estimate(prof.params, table, cap)},
                     {"minimal_ell_is_empirical", true}};
    };
  });
  auto surf_template = surf_cmd->add_subcommand("template", "validate a complete-field normal form");
  surf_template->add_option("d", d)->required();
  surf_template->add_option("e", e)->required();
  surf_template->add_option("--request", request_s, "template request JSON");
  surf_template->callback([&] {
    action = [&](const InputResolver& in, Json& payload, std::string&, int&) {
      auto sp = SurfaceParams::make(d, e);
      auto req = json_to_template_request(in.get(request_s, "request"));
      payload = template_result_to_json(validate_complete_template(sp, req));
    };
  });
  auto surf_member = surf_cmd->add_subcommand("member", "Lie-algebra membership");
  surf_member->add_option("d", d)->required();
  surf_member->add_option("e", e)->required();
  surf_member->add_option("--field", field_s, "term-list JSON");
  surf_member->callback([&] {
    action = [&](const InputResolver& in, Json& payload, std::string&, int&) {
      auto sp = SurfaceParams::make(d, e);
      auto f = json_to_termlist(in.get(field_s, "field"));
      auto res = decide_lie_membership(sp, f);
      payload = Json{{"member", res.member},
                     {"witness", res.witness
                                     ? Json::array({res.witness->first, res.witness->second})
                                     : Json()}};
    };
  });
  auto surf_sweep = surf_cmd->add_subcommand("sweep", "profile table over all coprime (d,e)");
  surf_sweep->add_option("dmax", dmax, "largest d")->required();
  surf_sweep->add_option("--format", format, "csv (default) or json")
      ->check(CLI::IsMember({"csv", "json"}));
  surf_sweep->callback([&] {
    action = [&](const InputResolver&, Json& payload, std::string& raw, int&) {
      if (dmax < 2) throw std::invalid_argument("sweep needs dmax >= 2");
      if (format == "csv")
        raw = sweep_csv(dmax);
      else
        payload = sweep_json(dmax);
    };
  });

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& pe) {
    int rc = app.exit(pe, out, err);
    return rc == 0 ? 0 : 2;
  }

  auto emit = [&](const Json& report, const std::string& raw) {
    std::ostream* sink = &out;
    std::ofstream file;
    if (!output_path.empty()) {
      file.open(output_path);
      sink = &file;
    }
    if (!raw.empty())
      *sink << raw;
    else
      *sink << report.dump(2) << "\n";
  };

  std::string code = "DOMAIN";
  std::string message;
  int fail_exit = 1;
  try {
    InputResolver in;
    if (!input_path.empty()) {
      if (input_path == "-") {
        in.doc = Json::parse(std::cin);
      } else {
        std::ifstream f(input_path);
        if (!f) throw UsageError("cannot open --input file: " + input_path);
        in.doc = Json::parse(f);
      }
    }
    Json payload;
    std::string raw;
    int exit_code = 0;
    action(in, payload, raw, exit_code);
    Json report{{"version", report_version()}, {"status", "ok"}, {"payload", payload}};
    emit(report, raw);
    return exit_code;
  } catch (const UsageError& ex) {
    code = "USAGE";
    message = ex.what();
    fail_exit = 2;
  } catch (const Json::exception& ex) {
    code = "BAD_INPUT";
    message = ex.what();
    fail_exit = 2;
  } catch (const SurfaceParamError& ex) {
    code = ex.code;
    message = ex.what();
  } catch (const PointednessError& ex) {
    code = "NOT_POINTED";
    message = ex.what();
  } catch (const SearchExhausted& ex) {
    code = "SEARCH_EXHAUSTED";
    message = ex.what();
  } catch (const DimensionError& ex) {
    code = "DIMENSION";
    message = ex.what();
  } catch (const std::invalid_argument& ex) {
    message = ex.what();
  } catch (const std::exception& ex) {
    code = "INTERNAL";
    message = ex.what();
  }
  Json report{{"version", report_version()},
              {"status", "error"},
              {"code", code},
              {"diagnostics", Json::array({message})}};
  emit(report, "");
  err << code << ": " << message << "\n";
  return fail_exit;
}

}  // namespace toralg
