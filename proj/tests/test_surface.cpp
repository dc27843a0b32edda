#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "toralg/surface.hpp"

using namespace toralg;

namespace {
Exponent ex(long a, long b) { return Exponent{Int(a), Int(b)}; }
std::vector<Rat> dir(long a, long b) { return {Rat(a), Rat(b)}; }
}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(SurfaceParams::make(6, 3), SurfaceParamError);
  try {
    SurfaceParams::make(6, 3);
  } catch (const SurfaceParamError& err) {
    CHECK(err.code == "NON_COPRIME");
  }
  try {
    SurfaceParams::make(1, 0);
  } catch (const SurfaceParamError& err) {
    CHECK(err.code == "OUT_OF_RANGE");
  }
  CHECK_THROWS_AS(SurfaceParams::make(5, 5), SurfaceParamError);
  CHECK(SurfaceParams::make(7, 3).e_prime == 5);
  CHECK(SurfaceParams::make(8, 5).e_prime == 5);
}

TEST_CASE("surface profiles") {
  using P = std::vector<std::pair<long, long>>;

  auto pr = surface_profile(2, 1);
  CHECK(pr.params.e_prime == 1);
  CHECK(pr.J.empty());
  CHECK(pr.strong_adp);
  CHECK(pr.codim == 0);
  CHECK(pr.ell_bound == 0);

  pr = surface_profile(3, 2);
  CHECK(pr.params.e_prime == 2);
  CHECK(pr.J == P{{1, 1}});
  CHECK(!pr.strong_adp);  // e^2 = d+1
  CHECK(pr.codim == 1);
  CHECK(pr.ell_bound == 2);
  CHECK(pr.e_equals_eprime);

  pr = surface_profile(5, 2);
  CHECK(pr.params.e_prime == 3);
  CHECK(pr.J == P{{1, 2}});
  CHECK(pr.strong_adp);
  CHECK(pr.codim == 0);
  CHECK(pr.ell_bound == 3);
  CHECK(!pr.e_equals_eprime);

  pr = surface_profile(7, 3);
  CHECK(pr.params.e_prime == 5);
  CHECK(pr.J == P{{1, 2}, {2, 4}});
  CHECK(!pr.strong_adp);
  CHECK(pr.codim == 1);
  CHECK(pr.ell_bound == 6);

  pr = surface_profile(8, 5);
  CHECK(pr.J == P{{1, 3}, {3, 1}, {4, 4}});
  CHECK(!pr.strong_adp);
  CHECK(pr.codim == 3);
  CHECK(pr.ell_bound == 8);
}

TEST_CASE("|J| <= 1 iff e divides d+1, d up to 60") {
  for (long d = 2; d <= 60; ++d)
    for (long e = 1; e < d; ++e) {
      if (std::gcd(d, e) != 1) continue;
      auto pr = surface_profile(d, e);  // ctor cross-checks the lemma
      CHECK((pr.J.size() <= 1) == ((d + 1) % e == 0));
    }
}

TEST_CASE("component classification") {
  auto sp = SurfaceParams::make(3, 2);

  // uv(u d/du - v d/dv)
  auto c = classify_component(sp, ex(1, 1), dir(1, -1));
  REQUIRE(c.has_value());
  CHECK(c->kind == ComponentKind::CVF);
  CHECK(c->i == 1);
  CHECK(c->j == 1);

  // u^2 d/dv has exponent (2,-1), direction (0,1)
  c = classify_component(sp, ex(2, -1), dir(0, 1));
  REQUIRE(c.has_value());
  CHECK(c->kind == ComponentKind::LNDv);
  CHECK(c->monomial_degree == 2);
  CHECK(c->k == 1);

  // u d/dv is not invariant
  CHECK(!classify_component(sp, ex(1, -1), dir(0, 1)).has_value());

  // v^5 d/du: M = 5 = e' + d, second member of the LNDu family
  c = classify_component(sp, ex(-1, 5), dir(1, 0));
  REQUIRE(c.has_value());
  CHECK(c->kind == ComponentKind::LNDu);
  CHECK(c->k == 2);

  // genuinely Laurent terms are errors
  CHECK_THROWS_AS(classify_component(sp, ex(-2, 1), dir(1, 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(classify_component(sp, ex(-1, 1), dir(1, 1)),
                  std::invalid_argument);
}

TEST_CASE("bracket of components against the oracle") {
  auto sp = SurfaceParams::make(5, 2);
  auto lu = classify_component(sp, ex(-1, 3), dir(1, 0));  // v^3 d/du
  auto lv = classify_component(sp, ex(2, -1), dir(0, 1));  // u^2 d/dv
  REQUIRE(lu.has_value());
  REQUIRE(lv.has_value());
  CHECK(lu->kind == ComponentKind::LNDu);
  CHECK(lv->kind == ComponentKind::LNDv);

  auto br = bracket_component(sp, *lu, *lv);
  REQUIRE(br.has_value());
  CHECK(br->kind == ComponentKind::VF);  // not complete: degrees 3 != 2
  CHECK(br->i == 1);
  CHECK(br->j == 2);
  CHECK(br->dir == dir(-3, 2));

  // [c, c] = 0
  CHECK(!bracket_component(sp, *lu, *lu).has_value());

  // CVF x CVF stays on the CVF line; parallel pairs commute
  auto sp3 = SurfaceParams::make(3, 2);
  auto c1 = classify_component(sp3, ex(1, 1), dir(1, -1));
  auto c2 = classify_component(sp3, ex(0, 3), dir(1, 0));
  auto b2 = bracket_component(sp3, *c1, *c2);
  REQUIRE(b2.has_value());
  CHECK(b2->kind == ComponentKind::CVF);
  CHECK(b2->i == 1);
  CHECK(b2->j == 4);
  auto c3 = classify_component(sp3, ex(2, 2), dir(1, -1));
  CHECK(!bracket_component(sp3, *c1, *c3).has_value());

  // matching LND degrees produce a complete bracket
  auto sp2 = SurfaceParams::make(2, 1);
  auto u1 = classify_component(sp2, ex(-1, 3), dir(1, 0));
  auto v1 = classify_component(sp2, ex(3, -1), dir(0, 1));
  auto b3 = bracket_component(sp2, *u1, *v1);
  REQUIRE(b3.has_value());
  CHECK(b3->kind == ComponentKind::CVF);
  CHECK(b3->i == 2);
  CHECK(b3->j == 2);
}

TEST_CASE("lie closure matches the predicted structure") {
  {
    auto sp = SurfaceParams::make(3, 2);
    auto got = lie_closure(sp, 12);
    auto want = predicted_structure(sp, 12);
    std::string diff;
    CHECK(tables_match(got, want, &diff));
    CHECK(diff.empty());
    // the lone J component is the CVF line only
    REQUIRE(got.vf.count({1, 1}) == 1);
    CHECK(got.vf.at({1, 1}).size() == 1);
  }
  {
    auto sp = SurfaceParams::make(5, 2);
    auto got = lie_closure(sp, 12);
    CHECK(tables_match(got, predicted_structure(sp, 12)));
    // (1,2) = (e-1, e'-1) is fully reached through the LND bracket
    REQUIRE(got.vf.count({1, 2}) == 1);
    CHECK(got.vf.at({1, 2}).size() == 2);
  }
  {
    auto sp = SurfaceParams::make(2, 1);
    auto got = lie_closure(sp, 8);
    CHECK(tables_match(got, predicted_structure(sp, 8)));
    for (auto& [key, basis] : got.vf) CHECK(basis.size() == 2);
  }
  {
    auto sp = SurfaceParams::make(7, 3);
    auto want = predicted_structure(sp, 12);
    CHECK(want.vf.at({1, 2}).size() == 1);  // CVF-only
    CHECK(want.vf.at({2, 4}).size() == 2);  // the exempt component
    CHECK(tables_match(lie_closure(sp, 12), want));
  }
}

TEST_CASE("membership decisions") {
  auto sp = SurfaceParams::make(3, 2);
  {
    LaurentVectorField f = LaurentVectorField::term(ex(1, 1), dir(1, -1));
    auto r = decide_lie_membership(sp, f);
    CHECK(r.member);
    CHECK(!r.witness);
  }
  {
    // u^2 v d/du = u v * (u d/du)
    LaurentVectorField f = LaurentVectorField::term(ex(1, 1), dir(1, 0));
    auto r = decide_lie_membership(sp, f);
    CHECK(!r.member);
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == std::make_pair(1L, 1L));
  }
  {
    auto sp5 = SurfaceParams::make(5, 2);
    // u v^2 (u d/du + v d/dv): the exempt component
    LaurentVectorField f = LaurentVectorField::term(ex(1, 2), dir(1, 1));
    CHECK(decide_lie_membership(sp5, f).member);
  }
  {
    LaurentVectorField f = LaurentVectorField::term(ex(1, 0), dir(1, 0));
    CHECK_THROWS_AS(decide_lie_membership(sp, f), SurfaceParamError);
  }
}

TEST_CASE("membership agrees with bounded closure") {
  auto sp = SurfaceParams::make(7, 3);
  auto table = lie_closure(sp, 12);
  for (long i = 0; i <= 10; ++i)
    for (long j = 0; i + j <= 10; ++j) {
      if (!sp.in_I(i, j)) continue;
      for (auto d2 : {dir(1, 0), dir(0, 1), dir(j, -i), dir(1, 1)}) {
        if (d2[0] == 0 && d2[1] == 0) continue;
        LaurentVectorField f = LaurentVectorField::term(ex(i, j), d2);
        bool member = decide_lie_membership(sp, f).member;
        std::vector<Int> row{numerator(d2[0]), numerator(d2[1])};
        auto trial = table.vf.at({i, j});
        std::size_t before = trial.empty() ? 0 : mat_rank(trial);
        trial.push_back(row);
        bool reached = mat_rank(trial) == before;
        CHECK(member == reached);
      }
    }
}

TEST_CASE("complete-field templates") {
  auto sp = SurfaceParams::make(3, 2);
  {
    TemplateRequest req;
    req.case_tag = "1a";
    req.a = 1;
    req.A = {{0, Rat(1)}, {1, Rat(1)}};  // 1 + t
    req.B = {{1, Rat(1)}};               // t
    auto res = validate_complete_template(sp, req);
    REQUIRE(res.accepted);
    // u d/du + ((1+u^3) v + u^2) d/dv
    LaurentVectorField want = LaurentVectorField::term(ex(0, 0), dir(1, 0)) +
                              LaurentVectorField::term(ex(0, 0), dir(0, 1)) +
                              LaurentVectorField::term(ex(3, 0), dir(0, 1)) +
                              LaurentVectorField::term(ex(2, -1), dir(0, 1));
    CHECK(res.field == want);
  }
  {
    TemplateRequest req;
    req.case_tag = "3a";
    req.l = 1;
    req.m = 3;
    req.n = 1;
    req.p = {{0, Rat(1)}};
    req.A = {{0, Rat(1)}};
    req.a = 3;
    auto res = validate_complete_template(sp, req);
    REQUIRE(res.accepted);
    LaurentVectorField want = LaurentVectorField::term(ex(0, 0), dir(1, -1));
    CHECK(res.field == want);
    req.a = 1;  // the division no longer cancels
    res = validate_complete_template(sp, req);
    CHECK(!res.accepted);
    CHECK(res.reason == "POLYNOMIALITY");
  }
  {
    auto sp4 = SurfaceParams::make(4, 3);
    TemplateRequest req;
    req.case_tag = "2b";
    req.a = 0;
    req.A = {{1, Rat(1)}};  // t
    auto res = validate_complete_template(sp4, req);
    REQUIRE(res.accepted);
    // every component invariant; none lands in J
    auto prof = surface_profile(4, 3);
    for (const auto& [e, q] : res.field.terms()) {
      auto c = classify_component(sp4, e, q);
      REQUIRE(c.has_value());
      if (c->kind == ComponentKind::VF || c->kind == ComponentKind::CVF)
        CHECK(!sp4.in_J(c->i, c->j));
    }
    CHECK(prof.J == std::vector<std::pair<long, long>>{{1, 1}, {2, 2}});
  }
  {
    auto sp6 = SurfaceParams::make(6, 5);
    TemplateRequest req;
    req.case_tag = "2b";
    auto res = validate_complete_template(sp6, req);
    CHECK(!res.accepted);
    CHECK(res.reason == "CASE_2B_SHAPE");
  }
  {
    TemplateRequest req;
    req.case_tag = "2a";
    req.m = 1;
    req.n = 2;  // 1 + 2*2 = 5, not 0 mod 3
    req.A = {{0, Rat(1)}};
    auto res = validate_complete_template(sp, req);
    CHECK(!res.accepted);
    CHECK(res.reason == "CASE_2A_CLASS");
    req.m = 2;
    req.n = 2;  // class fine (2+4=6), gcd not
    res = validate_complete_template(sp, req);
    CHECK(!res.accepted);
    CHECK(res.reason == "CASE_2A_GCD");
    req.m = 1;
    req.n = 4;  // 1+8=9
    res = validate_complete_template(sp, req);
    CHECK(res.accepted);
  }
  {
    TemplateRequest req;
    req.case_tag = "zz";
    CHECK(validate_complete_template(sp, req).reason == "CASE_TAG_UNKNOWN");
  }
}

TEST_CASE("accepted templates stay inside the Lie algebra away from J") {
  // homogeneous parts of cases 1 and 2a are individually complete lines;
  // cases 2b/3 have zero component at every (i,j) in J
  auto check_field = [](const SurfaceParams& sp, const LaurentVectorField& f,
                        bool line_case) {
    for (const auto& [e, q] : f.terms()) {
      auto c = classify_component(sp, e, q);
      REQUIRE(c.has_value());
      if (c->kind == ComponentKind::VF) {
        bool exempt = sp.e != sp.e_prime && c->i == sp.e - 1 && c->j == sp.e_prime - 1;
        CHECK((!sp.in_J(c->i, c->j) || exempt));
        if (line_case) CHECK(c->i == 0);  // only the Euler part is plain VF
      }
    }
  };
  {
    auto sp = SurfaceParams::make(5, 2);
    TemplateRequest req;
    req.case_tag = "1b";
    req.a = Rat(2);
    req.A = {{0, Rat(1)}, {2, Rat(-3)}};
    req.B = {{1, Rat(1)}};
    auto res = validate_complete_template(sp, req);
    REQUIRE(res.accepted);
    check_field(sp, res.field, false);
  }
  {
    // d' odd: the leading (u^2-v^2)^{d'} term can land on J, but only as
    // the complete CVF line
    auto sp = SurfaceParams::make(4, 3);
    TemplateRequest req;
    req.case_tag = "2b";
    req.a = Rat(1);
    req.A = {{0, Rat(2)}};
    auto res = validate_complete_template(sp, req);
    REQUIRE(res.accepted);
    bool found_j_cvf = false;
    for (const auto& [e, q] : res.field.terms()) {
      auto c = classify_component(sp, e, q);
      REQUIRE(c.has_value());
      if (sp.in_J(c->i, c->j) &&
          (c->kind == ComponentKind::VF || c->kind == ComponentKind::CVF)) {
        CHECK(c->kind == ComponentKind::CVF);
        found_j_cvf = true;
      }
    }
    CHECK(found_j_cvf);  // (1,1) carries 2uv(u d/du - v d/dv)
  }
  {
    // d' even: the complete invariant field (u^2-v^2)^2 (v d/du + u d/dv)
    // carries a component at (3,1) in J that is NOT on the CVF line
    auto sp = SurfaceParams::make(8, 5);
    TemplateRequest req;
    req.case_tag = "2b";  // d = 8 = 4*2, e = 5 = 2*2+1
    req.a = Rat(0);
    req.A = {{0, Rat(1)}};
    auto res = validate_complete_template(sp, req);
    REQUIRE(res.accepted);
    auto c31 = classify_component(sp, ex(3, 1), res.field.terms().at(ex(3, 1)));
    REQUIRE(c31.has_value());
    CHECK(sp.in_J(3, 1));
    CHECK(c31->kind == ComponentKind::VF);
    CHECK(c31->dir == dir(1, -2));
  }
  {
    auto sp = SurfaceParams::make(3, 2);
    TemplateRequest req;
    req.case_tag = "3a";
    req.l = 4;
    req.m = 3;
    req.n = 1;
    req.p = {{0, Rat(1)}, {3, Rat(2)}};
    req.A = {{0, Rat(0)}};  // A = 0 keeps only the a-part; needs a = 0 too
    req.a = 0;
    auto res = validate_complete_template(sp, req);
    REQUIRE(res.accepted);
    CHECK(res.field.is_zero());
  }
}

TEST_CASE("case 3 side-condition rejections") {
  auto sp = SurfaceParams::make(3, 2);
  TemplateRequest req;
  req.case_tag = "3a";
  req.l = 1;
  req.m = 3;
  req.n = 1;
  req.p = {{0, Rat(1)}};
  req.A = {{0, Rat(1)}};
  req.a = 3;

  auto r = req;
  r.m = 2;
  CHECK(validate_complete_template(sp, r).reason == "CASE_3_M_CLASS");
  r = req;
  r.l = 2;
  CHECK(validate_complete_template(sp, r).reason == "CASE_3_L_CLASS");
  r = req;
  r.l = 4;
  r.p = {{1, Rat(1)}};
  CHECK(validate_complete_template(sp, r).reason == "CASE_3_P_CLASS");
  r = req;
  r.p = {{0, Rat(1)}, {3, Rat(1)}};
  CHECK(validate_complete_template(sp, r).reason == "CASE_3_P_DEGREE");
  r = req;
  r.l = 4;
  r.p = {{3, Rat(1)}};
  CHECK(validate_complete_template(sp, r).reason == "CASE_3_P_ORIGIN");
  r = req;
  r.n = 0;
  CHECK(validate_complete_template(sp, r).reason == "CASE_3_RANGE");
}

TEST_CASE("surface cone construction") {
  for (auto [d, e] : std::vector<std::pair<long, long>>{
           {2, 1}, {3, 2}, {5, 2}, {7, 3}, {8, 5}, {12, 7}}) {
    auto sp = SurfaceParams::make(d, e);
    auto sc = surface_cone(sp);
    CHECK(sc.sigma.is_pointed());
    CHECK(sc.sigma.is_full_dimensional());
    CHECK(surface_cone_matches(sc, 2 * d));
  }
}

TEST_CASE("minimal ell estimate") {
  {
    auto sp = SurfaceParams::make(2, 1);
    CHECK(minimal_ell_estimate(sp, lie_closure(sp, 8), 4) == 0);
  }
  {
    auto sp = SurfaceParams::make(5, 2);
    CHECK(minimal_ell_estimate(sp, lie_closure(sp, 12), 4) == 0);
  }
  {
    auto sp = SurfaceParams::make(3, 2);
    long est = minimal_ell_estimate(sp, lie_closure(sp, 12), 6);
    CHECK(est == 2);
    CHECK(est <= surface_profile(3, 2).ell_bound);
  }
  {
    auto sp = SurfaceParams::make(7, 3);
    long est = minimal_ell_estimate(sp, lie_closure(sp, 14), 8);
    CHECK(est >= 1);
    CHECK(est <= surface_profile(7, 3).ell_bound);
  }
}
