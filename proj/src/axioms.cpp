#include "vcoh/axioms.hpp"

#include <functional>

namespace vcoh {

bool AxiomReport::all_pass() const {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

std::string vec_str(const Space& S, const SVec& v) {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& [i, c] : v) {
    std::string cs = to_string(c);
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    Scalar a = abs(c);
    if (a != 1) s += to_string(a) + "*";
    s += S.label(i);
  }
  return s;
}

namespace {

struct Checker {
  const Space& S;
  AxiomResult r;
  Checker(const Space& s, std::string name) : S(s) { r.axiom = std::move(name); }
  // returns false after the first failure so callers can stop early
  bool expect(const SVec& lhs, const SVec& rhs, const std::function<std::string()>& what) {
    ++r.checked;
    if (lhs == rhs) return true;
    if (r.pass) {
      r.pass = false;
      r.witness = what() + ": " + vec_str(S, lhs) + " != " + vec_str(S, rhs);
    }
    return false;
  }
};

SVec apply_L0(const Space& S, const SVec& v) {
  SVec out;
  for (const auto& [i, c] : v) axpy(out, c, S.L0(i));
  return out;
}

SVec apply_Lm1(const Space& S, const SVec& v) {
  SVec out;
  for (const auto& [i, c] : v) axpy(out, c, S.Lm1(i));
  return out;
}

SVec apply_mode(const Space& S, const SVec& u, long n, const SVec& x) {
  SVec out;
  for (const auto& [a, ca] : u)
    for (const auto& [b, cb] : x) axpy(out, ca * cb, S.mode(a, n, b));
  return out;
}

SVec single(int i) { return SVec{{i, Scalar(1)}}; }

// modes whose result weight lies in [min_weight, cutoff - slack]
template <class F>
void for_modes(const Space& S, const Weight& wu, const Weight& wx, long slack, F f) {
  long hi = floor_weight(wu + wx - 1 - S.min_weight());
  long lo = -floor_weight(S.cutoff() - slack - (wu + wx - 1));
  for (long n = lo; n <= hi; ++n) f(n);
}

}  // namespace

AxiomReport check_axioms(const Space& S, const Weight& weight_max, const EngineOptions& opts,
                         bool duality) {
  if (weight_max > S.cutoff()) throw std::invalid_argument("weight_max exceeds the cutoff");
  const Space& V = S.algebra();
  AxiomReport rep;
  rep.space = S.tag();
  rep.weight_max = weight_max;
  auto us = V.basis_upto(weight_max);
  auto xs = S.basis_upto(weight_max);
  auto lab = [&](int u, long n, int x) {
    return "u=" + V.label(u) + " n=" + std::to_string(n) + " x=" + S.label(x);
  };

  {
    Checker c(S, "grading restriction");
    ++c.r.checked;
    if (V.vacuum() < 0 || V.weight(V.vacuum()) != 0) {
      c.r.pass = false;
      c.r.witness = "vacuum missing or not of weight 0";
    }
    for (const auto& w : S.weights()) {
      ++c.r.checked;
      if (S.dim(w) <= 0 && c.r.pass) {
        c.r.pass = false;
        c.r.witness = "empty weight space " + to_string(w);
      }
    }
    rep.results.push_back(c.r);
  }
  {
    Checker c(S, "identity");
    int one = V.vacuum();
    for (int x : xs)
      for_modes(S, 0, S.weight(x), 0, [&](long n) {
        c.expect(S.mode(one, n, x), n == -1 ? single(x) : SVec{}, [&] { return lab(one, n, x); });
      });
    rep.results.push_back(c.r);
  }
  if (S.is_algebra()) {
    Checker c(S, "creation");
    int one = S.vacuum();
    for (int u : us) {
      for (long n = 0; n <= floor_weight(V.weight(u) - 1 - S.min_weight()); ++n)
        c.expect(S.mode(u, n, one), {}, [&] { return lab(u, n, one); });
      c.expect(S.mode(u, -1, one), single(u), [&] { return lab(u, -1, one); });
    }
    rep.results.push_back(c.r);
  }
  {
    Checker c(S, "lower truncation");
    for (int u : us)
      for (int x : xs) {
        ++c.r.checked;
        int N = S.pole_order(u, x);
        for (long n = N; n <= floor_weight(V.weight(u) + S.weight(x) - 1 - S.min_weight()); ++n)
          if (!S.mode(u, n, x).empty() && c.r.pass) {
            c.r.pass = false;
            c.r.witness = lab(u, n, x) + ": nonzero above the pole order";
          }
      }
    rep.results.push_back(c.r);
  }
  {
    Checker c(S, "grading bookkeeping");
    for (int u : us)
      for (int x : xs)
        for_modes(S, V.weight(u), S.weight(x), 0, [&](long n) {
          Weight t = V.weight(u) + S.weight(x) - n - 1;
          for (const auto& [i, v] : S.mode(u, n, x)) {
            ++c.r.checked;
            if (S.weight(i) != t && c.r.pass) {
              c.r.pass = false;
              c.r.witness = lab(u, n, x) + ": component " + S.label(i) + " has weight " +
                            to_string(S.weight(i)) + ", expected " + to_string(t);
            }
          }
        });
    rep.results.push_back(c.r);
  }
  {
    // [L(0), u_n] = (L(0)u)_n - (n+1) u_n
    Checker c(S, "L(0)-bracket");
    for (int u : us)
      for (int x : xs)
        for_modes(S, V.weight(u), S.weight(x), 0, [&](long n) {
          SVec un = S.mode(u, n, x);
          SVec lhs = apply_L0(S, un);
          axpy(lhs, -1, apply_mode(S, single(u), n, apply_L0(S, single(x))));
          SVec rhs = apply_mode(S, apply_L0(V, single(u)), n, single(x));
          axpy(rhs, -Scalar(n + 1), un);
          c.expect(lhs, rhs, [&] { return lab(u, n, x); });
        });
    rep.results.push_back(c.r);
  }
  {
    // (L(-1)u)_n = -n u_{n-1}; one weight of headroom below the cutoff
    Checker c(S, "L(-1)-derivative");
    for (int u : us) {
      if (V.weight(u) + 1 > V.cutoff()) continue;
      SVec lu = apply_Lm1(V, single(u));
      for (int x : xs)
        for_modes(S, V.weight(u) + 1, S.weight(x), 0, [&](long n) {
          SVec rhs = S.mode(u, n - 1, x);
          for (auto& [i, v] : rhs) v *= -n;
          prune(rhs);
          c.expect(apply_mode(S, lu, n, single(x)), rhs, [&] { return lab(u, n, x); });
        });
    }
    rep.results.push_back(c.r);
  }
  {
    // [L(-1), u_n] = -n u_{n-1}
    Checker c(S, "L(-1)-commutator");
    for (int u : us)
      for (int x : xs) {
        if (S.weight(x) + 1 > S.cutoff()) continue;
        for_modes(S, V.weight(u), S.weight(x), 1, [&](long n) {
          SVec lhs = apply_Lm1(S, S.mode(u, n, x));
          axpy(lhs, -1, apply_mode(S, single(u), n, apply_Lm1(S, single(x))));
          SVec rhs = S.mode(u, n - 1, x);
          for (auto& [i, v] : rhs) v *= -n;
          prune(rhs);
          c.expect(lhs, rhs, [&] { return lab(u, n, x); });
        });
      }
    rep.results.push_back(c.r);
  }
  if (S.is_algebra()) {
    // Y(u,z)v = e^{zL(-1)}Y(v,-z)u, coefficient of z^{-n-1}
    Checker c(S, "skew-symmetry");
    for (int u : us)
      for (int v : us)
        for_modes(S, V.weight(u), V.weight(v), 0, [&](long n) {
          SVec rhs;
          // z^{-n-1} = sum_k z^k/k! L^k (v)_j u (-z)^{-j-1}, j = n + k
          SVec cur;
          for (long k = 0;; ++k) {
            long j = n + k;
            Weight t = V.weight(u) + V.weight(v) - j - 1;
            if (t < S.min_weight()) break;
            SVec y = S.mode(v, j, u);
            Scalar sgn = (j % 2 == 0) ? -1 : 1;
            for (long s = 0; s < k; ++s) y = apply_Lm1(S, y);
            axpy(rhs, sgn / factorial(k), y);
          }
          c.expect(S.mode(u, n, v), rhs, [&] { return "u=" + V.label(u) + " v=" + V.label(v) +
                                                       " n=" + std::to_string(n); });
        });
    rep.results.push_back(c.r);
  }
  if (duality) {
    AxiomResult d;
    d.axiom = "duality";
    EngineOptions o = opts;
    for (int u1 : us)
      for (int u2 : us)
        for (int x : xs) {
          if (!d.pass) break;
          if (V.weight(u1) + V.weight(u2) + S.weight(x) > weight_max) continue;
          try {
            Verdict a = verify_commutativity(V, S, {u1, u2}, x, {1, 0}, o);
            Verdict b = verify_associativity(V, S, 0, {u1, u2}, x, o);
            d.checked += a.compared + b.compared;
            if (!a.pass || !b.pass) {
              d.pass = false;
              d.witness = !a.pass ? a.witness : b.witness;
            }
          } catch (const std::exception& e) {
            d.pass = false;
            d.witness = "u1=" + V.label(u1) + " u2=" + V.label(u2) + " x=" + S.label(x) + ": " +
                        e.what();
          }
        }
    rep.results.push_back(d);
  }
  return rep;
}

}  // namespace vcoh
