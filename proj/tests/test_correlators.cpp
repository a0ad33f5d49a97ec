#include <doctest.h>

#include "vcoh/correlators.hpp"

using namespace vcoh;

namespace {

EngineOptions opts(int dual) {
  EngineOptions o;
  o.dual_cutoff = dual;
  return o;
}

}  // namespace

TEST_CASE("two-point function against the mode expansion") {
  auto H = make_heisenberg(12);
  int a = H->id(1, 0), one = H->vacuum();
  RatFun f = correlator(*H, *H, one, {a, a}, one, opts(2));
  CHECK(f.str() == "1/(z1-z2)^2");
  // sum over k of <1', a(k) a(-k) 1> z1^{-k-1} z2^{k-1}
  auto slab = expand(f, Region::total_order({0, 1}), 8);
  for (long k = 1; k <= 8; ++k) {
    SVec v;
    for (const auto& [i, c] : H->mode(a, -k, one)) axpy(v, c, H->mode(a, k, i));
    Mono m;
    m.set(0, static_cast<int>(-k - 1));
    m.set(1, static_cast<int>(k - 1));
    CHECK(slab.coeffs.at(m) == v[one]);
  }
}

TEST_CASE("Wick contractions at four points") {
  auto H = make_heisenberg(12);
  int a = H->id(1, 0), one = H->vacuum();
  RatFun f = correlator(*H, *H, one, {a, a, a, a}, one, opts(2));
  RatFun g = parse_ratfun("1/((z1-z2)^2*(z3-z4)^2) + 1/((z1-z3)^2*(z2-z4)^2) + 1/((z1-z4)^2*(z2-z3)^2)", 4);
  CHECK(f == g);
  CHECK(correlator(*H, *H, one, {a, a, a}, one, opts(2)).is_zero());
}

TEST_CASE("identity insertions give constants") {
  auto H = make_heisenberg(8);
  int one = H->vacuum(), a = H->id(1, 0);
  CHECK(correlator(*H, *H, one, {one, one}, one, opts(2)) == RatFun(2, 1));
  CHECK(correlator(*H, *H, a, {one, a}, one, opts(2)) == RatFun(2, 1));
}

TEST_CASE("Fock module one-point function") {
  auto H = make_heisenberg(8);
  auto F = make_fock_module(H, Scalar(3, 2), Weight(9, 8) + 6);
  int a = H->id(1, 0);
  CHECK(correlator(*H, *F, 0, {a}, 0, opts(3)) == Scalar(3, 2) * parse_ratfun("1/z1", 1));
  // <w', Y(a,z1)Y(a,z2)w> = lambda^2/(z1 z2) + 1/(z1-z2)^2
  RatFun two = correlator(*H, *F, 0, {a, a}, 0, opts(3));
  CHECK(two == Scalar(9, 4) * parse_ratfun("1/(z1*z2)", 2) + parse_ratfun("1/(z1-z2)^2", 2));
}

TEST_CASE("commutative algebra correlators are polynomial") {
  auto C = make_commutative(8);
  int t = 1;
  // <(t^2)', Y(t,z1)Y(t,z2)1> reads off the t^2 coefficient of e^{z1 D}t e^{z2 D}t
  CHECK(correlator(*C, *C, 2, {t, t}, 0, opts(2)) == RatFun(2, 1));
  RatFun f = correlator(*C, *C, 3, {t, t}, 0, opts(3));
  CHECK(f == parse_ratfun("z1+z2", 2));
}

TEST_CASE("duality propositions on small inputs") {
  auto H = make_heisenberg(16);
  auto o = opts(2);
  int a = H->id(1, 0), b = H->id(2, 0), one = H->vacuum();
  auto v1 = verify_commutativity(*H, *H, {a, b, a}, one, {2, 0, 1}, o);
  CHECK(v1.pass);
  CHECK(v1.compared > 0);
  CHECK(verify_associativity(*H, *H, 0, {a, H->id(2, 1), a}, one, o).pass);
  CHECK(verify_associativity(*H, *H, 1, {a, a, b}, a, o).pass);
  CHECK(verify_wv_vw(*H, *H, {a, a}, a, o).pass);
  CHECK(verify_zeta_specialization(*H, *H, {a, a}, a, o).pass);
  CHECK(verify_mixed_commutativity(*H, *H, 1, {a, 0, a, a}, a, a, {0, 1, 3, 2}, o).pass);
  CHECK(verify_mixed_associativity(*H, *H, 0, 1, {0, a, a}, a, a, o).pass);
}

TEST_CASE("duality with a Fock module") {
  auto H = make_heisenberg(10);
  auto F = make_fock_module(H, Scalar(1), Weight(1, 2) + 8);
  auto o = opts(3);
  int a = H->id(1, 0);
  CHECK(verify_commutativity(*H, *F, {a, a, H->id(2, 0)}, 0, {1, 2, 0}, o).pass);
  CHECK(verify_factorization(*H, *F, {{a}, {a, a}}, 0, o).pass);
}

TEST_CASE("factorization through intermediate projections") {
  auto H = make_heisenberg(12);
  auto o = opts(4);
  int a = H->id(1, 0), one = H->vacuum();
  auto v = verify_factorization(*H, *H, {{a, a}, {a}}, one, o);
  CHECK(v.pass);
  CHECK(v.compared > 0);
}

TEST_CASE("reconstruction failure is diagnosed") {
  auto H = make_heisenberg(4);
  int a = H->id(1, 0);
  EngineOptions o = opts(4);
  o.retry_cap = 1;
  // four insertions need intermediate weights above the cutoff
  CHECK_THROWS_AS(correlator(*H, *H, H->id(4, 0), {a, a, a, a}, H->id(4, 0), o), ReconstructError);
}
