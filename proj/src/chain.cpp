#include "vcoh/chain.hpp"

#include <cmath>
#include <stdexcept>

namespace vcoh {

long floor_weight(const Weight& w) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), w.get_num_mpz_t(), w.get_den_mpz_t());
  return q.get_si();
}

static long ceil_weight(const Weight& w) { return -floor_weight(-w); }

size_t Series::terms() const {
  size_t s = 0;
  for (const auto& [k, v] : t) s += v.size();
  return s;
}

static std::vector<int> indicator(uint32_t vars, int m) {
  std::vector<int> c(m, 0);
  for (int j = 0; j < m; ++j)
    if (vars >> j & 1u) c[j] = 1;
  return c;
}

static void merge_windows(Window& into, const Window& from) {
  for (const auto& c : from.cons) into.cons.push_back(c);
}

Series basis_series(const Space& sp, int id, int m) {
  Series s;
  s.m = m;
  s.sp = &sp;
  s.base = sp.weight(id);
  s.t[Mono{}][id] = 1;
  return s;
}

Series vector_series(const Space& sp, const SVec& v, const Weight& base, int m) {
  Series s;
  s.m = m;
  s.sp = &sp;
  s.base = base;
  for (const auto& [i, c] : v)
    if (sp.weight(i) != base) throw std::invalid_argument("vector_series needs a homogeneous vector");
  if (!v.empty()) s.t[Mono{}] = v;
  return s;
}

Series vertex(const Space& target, const Series& arg, int var, const Series& x, const Weight& cap,
              bool negate) {
  const Space& alg = target.algebra();
  if (arg.sp != &alg) throw std::invalid_argument("vertex argument lives in the wrong space");
  if (x.sp != &target) throw std::invalid_argument("vertex target lives in the wrong space");
  if ((arg.vars | x.vars) >> var & 1u) throw std::invalid_argument("series variable reused");
  Series out;
  out.m = x.m;
  out.sp = &target;
  out.base = arg.base + x.base;
  out.vars = arg.vars | x.vars | (1u << var);
  out.win = x.win;
  merge_windows(out.win, arg.win);
  Weight top = std::min(cap, target.cutoff());
  out.win.add(indicator(out.vars, out.m), floor_weight(top - out.base));
  for (const auto& [ma, ua] : arg.t)
    for (const auto& [mx, xv] : x.t) {
      Mono mm = ma + mx;
      for (const auto& [u, cu] : ua)
        for (const auto& [b, cb] : xv) {
          Weight s = alg.weight(u) + target.weight(b) - 1;
          long lo = ceil_weight(s - top);
          long hi = target.pole_order(u, b) - 1;
          for (long n = hi; n >= lo; --n) {
            SVec y = target.mode(u, n, b);
            if (y.empty()) continue;
            Mono key = mm;
            key.set(var, -n - 1);
            Scalar c = cu * cb;
            if (negate && (n % 2 == 0)) c = -c;
            axpy(out.t[key], c, y);
          }
        }
    }
  for (auto it = out.t.begin(); it != out.t.end();) it = it->second.empty() ? out.t.erase(it) : std::next(it);
  return out;
}

Series translate(const Space& sp, const Series& x, int var, const Weight& cap) {
  if (x.sp != &sp) throw std::invalid_argument("translate in the wrong space");
  Series out;
  out.m = x.m;
  out.sp = &sp;
  out.base = x.base;
  out.vars = x.vars | (1u << var);
  out.win = x.win;
  Weight top = std::min(cap, sp.cutoff());
  out.win.add(indicator(out.vars, out.m), floor_weight(top - out.base));
  for (const auto& [m, v] : x.t) {
    SVec cur = v;
    Scalar fact = 1;
    for (int k = 0; !cur.empty(); ++k) {
      if (k) fact *= k;
      Mono key = m;
      key.set(var, m[var] + k);
      axpy(out.t[key], 1 / fact, cur);
      SVec next;
      for (const auto& [i, c] : cur)
        if (sp.weight(i) + 1 <= top) axpy(next, c, sp.Lm1(i));
      cur = std::move(next);
    }
  }
  for (auto it = out.t.begin(); it != out.t.end();) it = it->second.empty() ? out.t.erase(it) : std::next(it);
  return out;
}

Series skew(const Space& W, const Series& w, int var, const Series& x, const Weight& cap) {
  return translate(W, vertex(W, x, var, w, cap, true), var, cap);
}

Series truncate(const Series& x, const Weight& cap) {
  Series out = x;
  long b = floor_weight(cap - x.base);
  out.win.add(indicator(out.vars, out.m), b);
  for (auto it = out.t.begin(); it != out.t.end();) it = it->first.total() > b ? out.t.erase(it) : std::next(it);
  return out;
}

void accumulate(Series& a, const Series& b, const Scalar& c) {
  if (a.sp == nullptr) {
    a = b;
    for (auto& [m, v] : a.t)
      for (auto& [i, x] : v) x *= c;
    return;
  }
  if (a.sp != b.sp || a.base != b.base) throw std::invalid_argument("accumulate: incompatible series");
  a.vars |= b.vars;
  merge_windows(a.win, b.win);
  for (const auto& [m, v] : b.t) axpy(a.t[m], c, v);
  for (auto it = a.t.begin(); it != a.t.end();) it = it->second.empty() ? a.t.erase(it) : std::next(it);
}

std::map<int, Terms> pair_dual(const Series& x, const Weight& dual_cutoff) {
  std::map<int, Terms> out;
  for (const auto& [m, v] : x.t)
    for (const auto& [i, c] : v)
      if (x.sp->weight(i) <= dual_cutoff) out[i].emplace(m, c);
  return out;
}

}  // namespace vcoh
