#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "toralg/fields.hpp"
#include "toralg/laurent.hpp"

using namespace toralg;

namespace {
Exponent ex(std::vector<int> v) { return Exponent(v.begin(), v.end()); }

LaurentVectorField random_field(std::mt19937& rng, std::size_t n, int nterms) {
  std::uniform_int_distribution<int> e(-3, 3), c(-4, 4);
  LaurentVectorField v(n);
  for (int t = 0; t < nterms; ++t) {
    Exponent exp(n);
    std::vector<Rat> q(n);
    for (auto& x : exp) x = e(rng);
    for (auto& x : q) x = Rat(c(rng), 1 + (rng() % 3));
    v.add_term(exp, q);
  }
  return v;
}

LaurentPolynomial random_poly(std::mt19937& rng, std::size_t n, int nterms) {
  std::uniform_int_distribution<int> e(-3, 3), c(-4, 4);
  LaurentPolynomial p(n);
  for (int t = 0; t < nterms; ++t) {
    Exponent exp(n);
    for (auto& x : exp) x = e(rng);
    p.add_term(exp, Rat(c(rng), 1 + (rng() % 3)));
  }
  return p;
}
}  // namespace

TEST_CASE("derive acts monomially") {
  // chi^{(-1,1)} d_{(1,0)} applied to chi^{(2,1)} gives 2 chi^{(1,2)}
  auto v = LaurentVectorField::term_int(ex({-1, 1}), {Int(1), Int(0)});
  auto f = LaurentPolynomial::monomial(ex({2, 1}));
  auto out = derive(v, f);
  CHECK(out.coefficient(ex({1, 2})) == 2);
  CHECK(out.terms().size() == 1);
}

TEST_CASE("derive satisfies the Leibniz rule") {
  std::mt19937 rng(7);
  for (int i = 0; i < 40; ++i) {
    std::size_t n = 2 + rng() % 2;
    auto v = random_field(rng, n, 3);
    auto f = random_poly(rng, n, 3);
    auto g = random_poly(rng, n, 3);
    CHECK(derive(v, f * g) == derive(v, f) * g + f * derive(v, g));
  }
}

TEST_CASE("oracle bracket matches the closed-form homogeneous bracket") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int i = 0; i < 60; ++i) {
    std::size_t n = 2 + rng() % 3;
    std::vector<Int> e1(n), e2(n), p1(n), p2(n);
    for (auto& x : e1) x = d(rng);
    for (auto& x : e2) x = d(rng);
    for (auto& x : p1) x = d(rng);
    for (auto& x : p2) x = d(rng);
    LatticeVector E1(e1, Ambient::M), E2(e2, Ambient::M);
    LatticeVector P1(p1, Ambient::N), P2(p2, Ambient::N);
    if (P1.is_zero() || P2.is_zero()) continue;
    HomogeneousField f1(E1, P1), f2(E2, P2);
    auto closed = bracket(f1, f2);
    auto oracle = bracket_oracle(to_laurent(f1), to_laurent(f2));
    if (!closed) {
      CHECK(oracle.is_zero());
    } else {
      CHECK(oracle == to_laurent(*closed));
    }
  }
}

TEST_CASE("oracle bracket is antisymmetric and satisfies Jacobi") {
  std::mt19937 rng(13);
  for (int i = 0; i < 20; ++i) {
    std::size_t n = 2;
    auto a = random_field(rng, n, 2);
    auto b = random_field(rng, n, 2);
    auto c = random_field(rng, n, 2);
    CHECK((bracket_oracle(a, b) + bracket_oracle(b, a)).is_zero());
    auto jac = bracket_oracle(a, bracket_oracle(b, c)) +
               bracket_oracle(b, bracket_oracle(c, a)) +
               bracket_oracle(c, bracket_oracle(a, b));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("decompose partitions and sums back") {
  std::mt19937 rng(17);
  for (int i = 0; i < 20; ++i) {
    auto v = random_field(rng, 2, 5);
    for (const Grading& g : {Grading(Bidegree{}), Grading(ZdClass{5, 2})}) {
      auto parts = decompose(v, g);
      LaurentVectorField sum(2);
      for (const auto& [key, part] : parts) {
        CHECK(!part.is_zero());
        sum = sum + part;
      }
      CHECK(sum == v);
    }
  }
}

TEST_CASE("Zd grading classes are residues of m_u + e m_v") {
  auto v = LaurentVectorField::term_int(ex({1, 2}), {Int(1), Int(0)}) +
           LaurentVectorField::term_int(ex({-1, 3}), {Int(0), Int(1)});
  auto parts = decompose(v, ZdClass{5, 2});
  REQUIRE(parts.size() == 1);  // 1+4 = 5 = 0, -1+6 = 5 = 0 mod 5
  CHECK(parts.begin()->first == ex({0, 0}));
}

TEST_CASE("polynomiality predicate") {
  CHECK(LaurentPolynomial::monomial(ex({2, 0})).is_polynomial());
  CHECK(!LaurentPolynomial::monomial(ex({-1, 3})).is_polynomial());
}
