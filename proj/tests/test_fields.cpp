#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "toralg/adp.hpp"
#include "toralg/config.hpp"
#include "toralg/fields.hpp"

using namespace toralg;

namespace {
LatticeVector mk(std::vector<int> v, Ambient a) {
  std::vector<Int> c(v.begin(), v.end());
  return LatticeVector(std::move(c), a);
}
const RationalCone& half_weighted() {
  static RationalCone c = RationalCone::from_rays({{1, 0}, {1, 2}});
  return c;
}
}  // namespace

TEST_CASE("classification trichotomy on Cone((1,0),(1,2))") {
  const auto& sigma = half_weighted();

  auto r = classify(sigma, HomogeneousField::make({-1, 1}, {1, 0}));
  CHECK(r.kind == FieldKind::TypeII);
  REQUIRE(r.distinguished_ray.has_value());
  CHECK(*r.distinguished_ray == mk({1, 0}, Ambient::N));
  CHECK(r.is_lnd);
  CHECK(r.is_complete);
  CHECK(r.is_root);
  CHECK(!r.is_semisimple);

  r = classify(sigma, HomogeneousField::make({0, 0}, {1, 1}));
  CHECK(r.kind == FieldKind::TypeI);
  CHECK(r.is_semisimple);
  CHECK(r.is_complete);
  CHECK(r.preserves_haar);
  CHECK(!r.is_lnd);

  r = classify(sigma, HomogeneousField::make({1, 0}, {0, 1}));
  CHECK(r.kind == FieldKind::TypeI);
  CHECK(!r.is_lnd);
  CHECK(!r.is_semisimple);
  CHECK(r.is_complete);  // <e,p> = 0
  CHECK(r.preserves_haar);

  r = classify(sigma, HomogeneousField::make({-1, 0}, {1, 0}));
  CHECK(r.kind == FieldKind::NotExtendable);
  CHECK(!r.is_complete);
}

TEST_CASE("Type I with nonzero Haar pairing is not complete") {
  auto r = classify(half_weighted(), HomogeneousField::make({1, 1}, {1, 0}));
  CHECK(r.kind == FieldKind::TypeI);
  CHECK(!r.preserves_haar);
  CHECK(!r.is_complete);
}

TEST_CASE("extendability agrees with polynomiality of the action") {
  // A field extends iff it maps every semigroup monomial to a semigroup
  // monomial (or kills it); checked against the dual-semigroup sweep.
  const auto& sigma = half_weighted();
  auto monoms = dual_semigroup_monomials(sigma, Config::oracle_degree_bound);
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int t = 0; t < 200; ++t) {
    std::vector<int> e{d(rng), d(rng)}, p{d(rng), d(rng)};
    if (p[0] == 0 && p[1] == 0) continue;
    auto f = HomogeneousField::make(e, p);
    bool extends = classify(sigma, f).kind != FieldKind::NotExtendable;
    bool oracle = true;
    for (const auto& m : monoms) {
      auto term = apply_monomial(f, m);
      if (term.is_zero()) continue;
      if (!sigma.dual().contains(term.exponent, RationalCone::Membership::Boundary)) {
        oracle = false;
        break;
      }
    }
    CHECK(extends == oracle);
  }
}

TEST_CASE("iterated application matches repeated application") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 2 + rng() % 2;
    std::vector<int> e(n), p(n), m(n);
    for (auto& x : e) x = d(rng);
    for (auto& x : p) x = d(rng);
    for (auto& x : m) x = d(rng);
    if (std::all_of(p.begin(), p.end(), [](int x) { return x == 0; })) continue;
    auto f = HomogeneousField::make(e, p);
    std::vector<Int> mc(m.begin(), m.end());
    LatticeVector mv(mc, Ambient::M);
    unsigned long l = rng() % 6;
    MonomialTerm step{Int(1), mv};
    for (unsigned long k = 0; k < l && !step.is_zero(); ++k) {
      auto next = apply_monomial(f, step.exponent);
      step = MonomialTerm{step.coeff * next.coeff, next.exponent};
    }
    CHECK(iterate_apply(f, mv, l) == step);
  }
}

TEST_CASE("Type II fields are nilpotent with the predicted order") {
  const auto& sigma = half_weighted();
  auto f = HomogeneousField::make({-1, 1}, {1, 0});
  auto rec = classify(sigma, f);
  REQUIRE(rec.kind == FieldKind::TypeII);
  for (const auto& m : dual_semigroup_monomials(sigma, 6)) {
    unsigned long order =
        static_cast<unsigned long>(pairing(m, *rec.distinguished_ray)) + 1;
    CHECK(iterate_apply(f, m, order).is_zero());
    if (order > 1) CHECK(!iterate_apply(f, m, order - 1).is_zero());
  }
}

TEST_CASE("bracket closed form") {
  auto f1 = HomogeneousField::make({-1, 1}, {1, 0});
  auto f2 = HomogeneousField::make({1, 0}, {0, 1});
  auto br = bracket(f1, f2);
  REQUIRE(br.has_value());
  CHECK(br->e == mk({0, 1}, Ambient::M));
  // <e2,p1> p2 - <e1,p2> p1 = 1*(0,1) - 1*(1,0)
  CHECK(br->p == mk({-1, 1}, Ambient::N));
  // bracket with itself vanishes
  CHECK(!bracket(f1, f1).has_value());
}

TEST_CASE("vanishing on orbit closures") {
  const auto& sigma = half_weighted();
  auto f = HomogeneousField::make({-1, 1}, {1, 0});
  const Face& tau12 = sigma.face_by_indices({1});  // ray (1,2)
  CHECK(sigma.rays()[1] == mk({1, 2}, Ambient::N));
  CHECK(vanishes_on_orbit_closure(sigma, f, tau12));
  // on its own distinguished ray the root does not vanish
  const Face& tau10 = sigma.face_by_indices({0});
  CHECK(!vanishes_on_orbit_closure(sigma, f, tau10));

  // Type I residual branch: semisimple field with p in span(tau)
  auto s = HomogeneousField::make({0, 0}, {1, 0});
  CHECK(vanishes_on_orbit_closure(sigma, s, tau10));
  CHECK(!vanishes_on_orbit_closure(sigma, s, tau12));
}

TEST_CASE("vanishing lemma matches the ideal-membership oracle") {
  const auto& sigma = half_weighted();
  auto monoms = dual_semigroup_monomials(sigma, 8);
  std::vector<std::pair<std::vector<int>, std::vector<int>>> cases = {
      {{-1, 1}, {1, 0}}, {{0, 0}, {1, 1}}, {{1, 0}, {0, 1}}, {{2, 1}, {1, -1}}};
  for (const auto& [e, p] : cases) {
    auto f = HomogeneousField::make(e, p);
    for (const auto& face : sigma.faces()) {
      if (face.rays.empty()) continue;
      bool lemma = vanishes_on_orbit_closure(sigma, f, face);
      // the field vanishes along V(tau) iff every image monomial lies in I(tau)
      bool oracle = true;
      for (const auto& m : monoms) {
        auto t = apply_monomial(f, m);
        if (t.is_zero()) continue;
        if (!orbit_ideal_contains(sigma, face, t.exponent)) {
          oracle = false;
          break;
        }
      }
      CHECK(lemma == oracle);
    }
  }
}
