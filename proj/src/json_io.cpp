#include "toralg/json_io.hpp"

#include <sstream>

namespace toralg {

namespace {
const Int kSafeMax = (Int(1) << 53) - 1;
}

Json int_to_json(const Int& v) {
  if (abs(v) <= kSafeMax) return static_cast<std::int64_t>(v);
  return v.str();
}

Int json_to_int(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected integer or decimal string");
}

Json rat_to_json(const Rat& v) {
  std::ostringstream os;
  os << numerator(v);
  if (denominator(v) != 1) os << "/" << denominator(v);
  return os.str();
}

Rat json_to_rat(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
  if (!j.is_string()) throw std::invalid_argument("expected rational string");
  std::string s = j.get<std::string>();
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

Json vector_to_json(const LatticeVector& v) {
  Json out = Json::array();
  for (const auto& c : v.coords()) out.push_back(int_to_json(c));
  return out;
}

LatticeVector json_to_vector(const Json& j, Ambient ambient) {
  if (!j.is_array()) throw std::invalid_argument("expected coordinate array");
  std::vector<Int> coords;
  for (const auto& c : j) coords.push_back(json_to_int(c));
  return LatticeVector(std::move(coords), ambient);
}

Json cone_to_json(const RationalCone& sigma) {
  Json out;
  out["rays"] = Json::array();
  for (const auto& r : sigma.rays()) out["rays"].push_back(vector_to_json(r));
  out["dual_rays"] = Json::array();
  for (const auto& r : sigma.dual_rays()) out["dual_rays"].push_back(vector_to_json(r));
  out["facet_normals"] = out["dual_rays"];
  return out;
}

RationalCone json_to_cone(const Json& j, Ambient ambient) {
  if (!j.is_object() || !j.contains("rays"))
    throw std::invalid_argument("cone JSON needs a \"rays\" array");
  std::vector<LatticeVector> gens;
  for (const auto& row : j.at("rays")) gens.push_back(json_to_vector(row, ambient));
  return RationalCone(std::move(gens));
}

Json field_to_json(const HomogeneousField& f) {
  return Json{{"e", vector_to_json(f.e)}, {"p", vector_to_json(f.p)}};
}

HomogeneousField json_to_field(const Json& j) {
  if (!j.is_object() || !j.contains("e") || !j.contains("p"))
    throw std::invalid_argument("field JSON needs \"e\" and \"p\" arrays");
  return HomogeneousField(json_to_vector(j.at("e"), Ambient::M),
                          json_to_vector(j.at("p"), Ambient::N));
}

Json termlist_to_json(const LaurentVectorField& f) {
  Json terms = Json::array();
  for (const auto& [e, q] : f.terms()) {
    // split the rational direction into a primitive integer direction and
    // a rational coefficient
    Int lcm = 1;
    for (const auto& c : q) lcm = lcm / gcd(lcm, denominator(c)) * denominator(c);
    std::vector<Int> dir;
    for (const auto& c : q) dir.push_back(numerator(Rat(c * lcm)));
    LatticeVector d(dir, Ambient::N);
    Int content = d.content();
    if (content == 0) continue;
    d = d.primitivized();
    // fix the sign on the first nonzero entry
    for (const auto& c : d.coords()) {
      if (c == 0) continue;
      if (c < 0) {
        d = -d;
        content = -content;
      }
      break;
    }
    Json term;
    term["coeff"] = rat_to_json(Rat(content, lcm));
    term["exp"] = Json::array();
    for (const auto& c : e) term["exp"].push_back(int_to_json(c));
    term["dir"] = vector_to_json(d);
    terms.push_back(std::move(term));
  }
  return Json{{"terms", std::move(terms)}};
}

LaurentVectorField json_to_termlist(const Json& j) {
  if (!j.is_object() || !j.contains("terms"))
    throw std::invalid_argument("term-list JSON needs a \"terms\" array");
  const auto& terms = j.at("terms");
  std::size_t rank = 0;
  for (const auto& t : terms) {
    rank = t.at("exp").size();
    break;
  }
  LaurentVectorField out(rank == 0 ? 2 : rank);
  for (const auto& t : terms) {
    Rat coeff = t.contains("coeff") ? json_to_rat(t.at("coeff")) : Rat(1);
    Exponent e;
    for (const auto& c : t.at("exp")) e.push_back(json_to_int(c));
    std::vector<Rat> q;
    for (const auto& c : t.at("dir")) q.push_back(coeff * Rat(json_to_int(c)));
    out.add_term(e, q);
  }
  return out;
}

InvariantSubvariety json_to_subvariety(const RationalCone& sigma, const Json& j) {
  if (!j.is_object() || !j.contains("faces"))
    throw std::invalid_argument("Y JSON needs a \"faces\" array");
  std::vector<std::vector<std::size_t>> face_sets;
  for (const auto& f : j.at("faces")) {
    std::vector<std::size_t> idx;
    for (const auto& i : f) idx.push_back(i.get<std::size_t>());
    face_sets.push_back(std::move(idx));
  }
  return InvariantSubvariety(sigma, face_sets);
}

Json subvariety_to_json(const InvariantSubvariety& y) {
  Json faces = Json::array();
  for (const auto& f : y.faces()) faces.push_back(f);
  return Json{{"faces", std::move(faces)}};
}

Json classification_to_json(const ClassificationRecord& r) {
  Json out;
  out["kind"] = field_kind_name(r.kind);
  out["distinguished_ray"] =
      r.distinguished_ray ? vector_to_json(*r.distinguished_ray) : Json();
  out["is_lnd"] = r.is_lnd;
  out["is_semisimple"] = r.is_semisimple;
  out["is_complete"] = r.is_complete;
  out["preserves_haar"] = r.preserves_haar;
  out["is_root"] = r.is_root;
  return out;
}

Json certificate_to_json(const AdpCertificate& c) {
  Json out;
  out["witness_ray"] = vector_to_json(c.witness_ray);
  out["root_e1"] = vector_to_json(c.root_e1);
  out["e3"] = vector_to_json(c.e3);
  out["e4"] = vector_to_json(c.e4);
  out["p4"] = vector_to_json(c.p4);
  out["bracket_e"] = vector_to_json(c.bracket_e);
  out["bracket_p"] = vector_to_json(c.bracket_p);
  out["spanning_degrees"] = Json::array();
  for (const auto& v : c.spanning_degrees)
    out["spanning_degrees"].push_back(vector_to_json(v));
  out["spanning_directions"] = Json::array();
  for (const auto& v : c.spanning_directions)
    out["spanning_directions"].push_back(vector_to_json(v));
  return out;
}

AdpCertificate json_to_certificate(const Json& j) {
  AdpCertificate c{json_to_vector(j.at("witness_ray"), Ambient::N),
                   json_to_vector(j.at("root_e1"), Ambient::M),
                   json_to_vector(j.at("e3"), Ambient::M),
                   json_to_vector(j.at("e4"), Ambient::M),
                   json_to_vector(j.at("p4"), Ambient::N),
                   json_to_vector(j.at("bracket_e"), Ambient::M),
                   json_to_vector(j.at("bracket_p"), Ambient::N),
                   {},
                   {}};
  for (const auto& v : j.at("spanning_degrees"))
    c.spanning_degrees.push_back(json_to_vector(v, Ambient::M));
  for (const auto& v : j.at("spanning_directions"))
    c.spanning_directions.push_back(json_to_vector(v, Ambient::N));
  return c;
}

Json profile_to_json(const SurfaceProfile& p) {
  Json jj = Json::array();
  for (const auto& [i, j] : p.J) jj.push_back(Json::array({i, j}));
  return Json{{"d", p.params.d},          {"e", p.params.e},
              {"e_prime", p.params.e_prime}, {"J", std::move(jj)},
              {"strong_adp", p.strong_adp},  {"codim", p.codim},
              {"ell_bound", p.ell_bound}};
}

Json closure_table_to_json(const ClosureTable& t) {
  Json vf = Json::array();
  for (const auto& [key, basis] : t.vf) {
    Json rows = Json::array();
    for (const auto& row : basis) {
      Json r = Json::array();
      for (const auto& c : row) r.push_back(int_to_json(c));
      rows.push_back(std::move(r));
    }
    vf.push_back(Json{{"i", key.first},
                      {"j", key.second},
                      {"dim", basis.empty() ? 0 : mat_rank(basis)},
                      {"basis", std::move(rows)}});
  }
  return Json{{"bound", t.bound},
              {"vf", std::move(vf)},
              {"lnd_u", t.lnd_u},
              {"lnd_v", t.lnd_v}};
}

TemplateRequest json_to_template_request(const Json& j) {
  TemplateRequest req;
  req.case_tag = j.at("case").get<std::string>();
  if (j.contains("a")) req.a = json_to_rat(j.at("a"));
  auto poly = [&](const char* key, SparsePoly& dst) {
    if (!j.contains(key)) return;
    for (const auto& t : j.at(key))
      dst.emplace_back(t.at(0).get<long>(), json_to_rat(t.at(1)));
  };
  poly("A", req.A);
  poly("B", req.B);
  poly("p", req.p);
  if (j.contains("m")) req.m = j.at("m").get<long>();
  if (j.contains("n")) req.n = j.at("n").get<long>();
  if (j.contains("l")) req.l = j.at("l").get<long>();
  return req;
}

Json template_result_to_json(const TemplateResult& r) {
  Json out;
  out["accepted"] = r.accepted;
  out["reason"] = r.reason;
  out["field"] = r.accepted ? termlist_to_json(r.field) : Json();
  return out;
}

}  // namespace toralg
