#include <doctest.h>

#include <random>

#include "vcoh/linalg.hpp"
#include "vcoh/poly.hpp"

using namespace vcoh;

TEST_CASE("scalar parsing and printing") {
  CHECK(parse_scalar("3/6") == Scalar(1, 2));
  CHECK(parse_scalar("-4") == Scalar(-4));
  CHECK(to_string(parse_scalar("-3/9")) == "-1/3");
  CHECK_THROWS_AS(parse_scalar("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar(""), std::invalid_argument);
}

TEST_CASE("generalized binomials") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(-1, 3) == -1);
  CHECK(binomial(-2, 2) == 3);
  CHECK(binomial(3, 5) == 0);
  CHECK(factorial(6) == 720);
  for (long n = -6; n <= 6; ++n)
    for (long k = 1; k <= 6; ++k) CHECK(binomial(n, k) == binomial(n - 1, k) + binomial(n - 1, k - 1));
}

TEST_CASE("polynomial ring laws") {
  std::mt19937 rng(11);
  auto rnd = [&] {
    Poly p(3);
    for (int t = 0; t < 4; ++t) {
      Mono m;
      for (int i = 0; i < 3; ++i) m.set(i, rng() % 3);
      Scalar c(static_cast<long>(rng() % 7) - 3, static_cast<long>(1 + rng() % 3));
      c.canonicalize();
      p.add(m, c);
    }
    return p;
  };
  for (int k = 0; k < 30; ++k) {
    Poly a = rnd(), b = rnd(), c = rnd();
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
  }
  Poly x = Poly::var(2, 0), y = Poly::var(2, 1);
  CHECK((x - y).pow(2) == x * x - Scalar(2) * x * y + y * y);
  Poly q(2);
  CHECK(((x - y).pow(3) * (x + y)).divide_pair(0, 1, q));
  CHECK(q == (x - y).pow(2) * (x + y));
  CHECK_FALSE((x + y).divide_pair(0, 1, q));
}

TEST_CASE("echelon rank, reduction and dependencies") {
  Echelon e(true);
  CHECK(e.insert({{0, 1}, {1, 2}}));
  CHECK(e.insert({{1, 1}, {2, 1}}));
  CHECK_FALSE(e.insert({{0, 1}, {1, 3}, {2, 1}}));
  CHECK(e.rank() == 2);
  REQUIRE(e.dependencies().size() == 1);
  SVec c;
  SVec r = e.reduce({{0, 2}, {1, 5}, {2, 1}}, &c);
  CHECK(r.empty());
  CHECK(c == SVec{{0, 2}, {1, 1}});
}

TEST_CASE("kernel and quotient dimensions") {
  auto M = LinearMapMatrix::from_dense({{1, 2, 3}, {2, 4, 6}});
  CHECK(rank(M) == 1);
  auto K = kernel_basis(M);
  CHECK(K.size() == 2);
  for (const auto& k : K) {
    Scalar s = 0;
    for (const auto& [i, a] : k) s += M.get(0, i) * a;
    CHECK(s == 0);
  }
  std::vector<SVec> A{{{0, 1}}, {{1, 1}}, {{2, 1}}}, B{{{0, 1}, {1, 1}}};
  CHECK(quotient_dimension(A, B) == 2);
  CHECK_THROWS_AS(quotient_dimension(B, A), std::invalid_argument);
  CHECK(span_dimension({}) == 0);
}

TEST_CASE("solve_columns reports unique and missing solutions") {
  auto M = LinearMapMatrix::from_dense({{1, 0}, {0, 2}, {1, 1}});
  auto s = solve_columns(M, {{{0, 1}, {1, 4}, {2, 3}}, {{0, 1}}});
  CHECK(s.unique);
  REQUIRE(s.solutions[0].has_value());
  CHECK((*s.solutions[0])[0] == 1);
  CHECK((*s.solutions[0])[1] == 2);
  CHECK_FALSE(s.solutions[1].has_value());
}
