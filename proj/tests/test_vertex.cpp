#include <doctest.h>

#include <fstream>
#include <sstream>

#include "vcoh/axioms.hpp"
#include "vcoh/vertex.hpp"

using namespace vcoh;

namespace {

// partitions of k into positive parts
long partitions(int k) {
  std::vector<long> p(k + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= k; ++part)
    for (int s = part; s <= k; ++s) p[s] += p[s - part];
  return p[k];
}

std::string read(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("Heisenberg graded dimensions are partition numbers") {
  auto H = make_heisenberg(8);
  for (int k = 0; k <= 8; ++k) CHECK(H->dim(k) == partitions(k));
  auto F = make_fock_module(H, Scalar(3), 6);
  CHECK(F->min_weight() == Scalar(9, 2));
  for (int k = 0; k <= 1; ++k) CHECK(F->dim(Scalar(9, 2) + k) == partitions(k));
}

TEST_CASE("Heisenberg modes") {
  auto H = make_heisenberg(8);
  int a = H->id(1, 0), one = H->vacuum();
  CHECK(H->mode(a, 1, a) == SVec{{one, 1}});
  CHECK(H->mode(a, -1, one) == SVec{{a, 1}});
  CHECK(H->mode(a, 0, a).empty());
  CHECK(H->pole_order(a, a) == 2);
  CHECK(H->pole_order(one, a) == 0);
  // the conformal vector 1/2 a(-1)^2 1 gives L(0) as its weight-one mode
  int aa = H->id(2, 1);
  CHECK(H->label(aa) == "a(-1)a(-1)1");
  for (int x : H->basis_upto(4)) {
    SVec l0 = H->mode(aa, 1, x);
    for (auto& [i, c] : l0) c /= 2;
    CHECK(l0 == H->L0(x));
  }
  // commutator [a(m), a(n)] = m delta_{m+n,0} on a weight-3 vector
  int x = H->id(3, 1);
  for (long m = -3; m <= 3; ++m)
    for (long n = -3; n <= 3; ++n) {
      SVec l, r;
      for (const auto& [i, c] : H->mode(a, n, x)) axpy(l, c, H->mode(a, m, i));
      for (const auto& [i, c] : H->mode(a, m, x)) axpy(r, -c, H->mode(a, n, i));
      axpy(l, 1, r);
      prune(l);
      SVec expect;
      if (m + n == 0 && m != 0) expect[x] = Scalar(m);
      if (H->weight(x) - m - n <= H->cutoff()) CHECK(l == expect);
    }
}

TEST_CASE("parity is preserved by the modes") {
  auto H = make_heisenberg(6);
  for (int u : H->basis_upto(3))
    for (int x : H->basis_upto(3))
      for (long n = -3; n <= 3; ++n)
        for (const auto& [y, c] : H->mode(u, n, x)) CHECK(H->parity(y) == (H->parity(u) + H->parity(x)) % 2);
  CHECK(H->parity(H->id(1, 0)) == 1);
  CHECK(make_commutative(4)->parity(1) == 0);
}

TEST_CASE("Fock module zero mode acts by lambda") {
  auto H = make_heisenberg(6);
  auto F = make_fock_module(H, Scalar(2, 3), Weight(2, 9) + 4);
  int a = H->id(1, 0);
  for (int w : F->basis_upto(F->min_weight() + 3)) CHECK(F->mode(a, 0, w) == SVec{{w, Scalar(2, 3)}});
}

TEST_CASE("commutative algebra structure") {
  auto C = make_commutative(6);
  // Y(t^a, x) t^b = (e^{xD} t^a) t^b
  CHECK(C->mode(1, -1, 1) == SVec{{2, 1}});
  CHECK(C->mode(1, -2, 1) == SVec{{3, 1}});
  CHECK(C->mode(2, -2, 1) == SVec{{4, 2}});
  CHECK(C->mode(1, 0, 3).empty());
  CHECK(C->Lm1(2) == SVec{{3, 2}});
  CHECK(C->pole_order(2, 3) == 0);
}

TEST_CASE("axiom suites pass on built-in examples") {
  EngineOptions o;
  o.dual_cutoff = 2;
  auto H = make_heisenberg(6);
  auto C = make_commutative(7);
  auto F = make_fock_module(H, Scalar(1), Weight(1, 2) + 6);
  for (const Space* s : {static_cast<const Space*>(H.get()), static_cast<const Space*>(C.get()),
                         static_cast<const Space*>(F.get())}) {
    auto r = check_axioms(*s, 2, o);
    for (const auto& x : r.results) {
      INFO(s->tag(), ": ", x.axiom, " ", x.witness);
      CHECK(x.pass);
      CHECK(x.checked > 0);
    }
  }
}

TEST_CASE("spec files round-trip and corruption is caught") {
  auto H = make_heisenberg(4);
  auto T = load_algebra_json(dump_spec_json(*H, 4));
  REQUIRE(T->size() == H->size());
  for (int u : H->basis_upto(4))
    for (int x : H->basis_upto(4))
      for (long n = -4; n <= 4; ++n) CHECK(T->mode(u, n, x) == H->mode(u, n, x));
  auto bad = load_algebra_json(read(std::string(VCOH_DATA_DIR) + "/heisenberg_w4_corrupt.json"));
  EngineOptions o;
  o.dual_cutoff = 2;
  auto r = check_axioms(*bad, 2, o);
  CHECK_FALSE(r.all_pass());
  for (const auto& x : r.results)
    if (!x.pass) CHECK_FALSE(x.witness.empty());
}

TEST_CASE("spec errors carry diagnostics") {
  try {
    load_algebra_json("{\n  \"weights\": [\"0\"],\n  \"dims\": {\"0\": 1},\n  oops\n}");
    FAIL("no error");
  } catch (const SpecError& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
  CHECK_THROWS_AS(load_algebra_json("{\"cutoff\": \"2\", \"weights\": [\"0\"], \"dims\": {\"0\": -1}}"),
                  SpecError);
  CHECK_THROWS_AS(resolve_algebra("/nonexistent/spec.json", 4), SpecError);
}

TEST_CASE("skew-symmetry vertex operator") {
  auto H = make_heisenberg(8);
  int a = H->id(1, 0);
  // Y_WV(w, z) v = e^{z L(-1)} Y(v, -z) w; at leading order the z^{-2} term of Y(a,-z)a is 1
  auto s = skew_vertex(*H, H->basis_vector(a), H->basis_vector(a));
  REQUIRE(s.count(-2));
  CHECK(H->from_graded(s.at(-2)) == SVec{{H->vacuum(), 1}});
  auto pb = pole_bounds(*H, *H, 2);
  CHECK(pb.N.at({a, a}) == 2);
}
