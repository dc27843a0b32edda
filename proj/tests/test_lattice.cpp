#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toralg/intmat.hpp"
#include "toralg/lattice.hpp"

using namespace toralg;

namespace {
LatticeVector mk(std::vector<int> v, Ambient a) {
  std::vector<Int> c(v.begin(), v.end());
  return LatticeVector(std::move(c), a);
}
}  // namespace

TEST_CASE("pairing is the dot product across dual lattices") {
  CHECK(pairing(mk({-1, 1}, Ambient::M), mk({1, 2}, Ambient::N)) == 1);
  CHECK(pairing(mk({3, -1}, Ambient::M), mk({1, 2}, Ambient::N)) == 1);
  CHECK_THROWS_AS(pairing(mk({1}, Ambient::M), mk({1, 2}, Ambient::N)), DimensionError);
  CHECK_THROWS_AS(pairing(mk({1, 0}, Ambient::M), mk({1, 2}, Ambient::M)), DimensionError);
}

TEST_CASE("primitivization divides by the content") {
  auto v = mk({4, -6}, Ambient::N);
  CHECK(v.content() == 2);
  CHECK(v.primitivized() == mk({2, -3}, Ambient::N));
  CHECK(v.primitivized().is_primitive());
  CHECK(mk({0, 0}, Ambient::N).is_zero());
}

TEST_CASE("vector arithmetic") {
  auto a = mk({1, 2}, Ambient::M), b = mk({3, -1}, Ambient::M);
  CHECK(a + b == mk({4, 1}, Ambient::M));
  CHECK(a - b == mk({-2, 3}, Ambient::M));
  CHECK(a * Int(3) == mk({3, 6}, Ambient::M));
  CHECK(-a == mk({-1, -2}, Ambient::M));
  CHECK_THROWS_AS(a + mk({1, 0}, Ambient::N), DimensionError);
}

TEST_CASE("rank and hermite form") {
  IntMat m = {{Int(2), Int(4)}, {Int(1), Int(2)}};
  CHECK(mat_rank(m) == 1);
  IntMat id = {{Int(1), Int(0)}, {Int(1), Int(2)}};
  CHECK(mat_rank(id) == 2);
  auto div = smith_divisors(id);
  REQUIRE(div.size() == 2);
  CHECK(div[0] == 1);
  CHECK(div[1] == 2);
}

TEST_CASE("kernel lattice and integer solve") {
  // x + 2y - z = 0 over the integers
  IntMat a = {{Int(1), Int(2), Int(-1)}};
  auto ker = kernel_lattice(a);
  REQUIRE(ker.size() == 2);
  for (const auto& k : ker) CHECK(k[0] + 2 * k[1] - k[2] == 0);
  CHECK(mat_rank(ker) == 2);

  auto sol = solve_integer({{Int(1), Int(2)}, {Int(1), Int(0)}}, {Int(-1), Int(1)});
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == 1);
  CHECK((*sol)[1] == -1);
  // 2x = 1 has no integer solution
  CHECK(!solve_integer({{Int(2)}}, {Int(1)}).has_value());
}
