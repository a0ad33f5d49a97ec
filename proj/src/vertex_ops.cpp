#include <cmath>

#include "vcoh/vertex.hpp"

namespace vcoh {

namespace {

long floor_of(const Weight& w) { return static_cast<long>(std::floor(w.get_d() + 1e-9)); }

void add_into(GradedVector& g, const Space& sp, const SVec& v, const Scalar& c) {
  for (const auto& [i, x] : v) g.add(sp.weight(i), sp.local(i), c * x);
}

GradedVector zero_of(const Space& sp) {
  GradedVector g;
  g.space = sp.tag();
  g.cutoff = sp.cutoff();
  return g;
}

}  // namespace

GradedVector mode_act(const Space& sp, const GradedVector& u, long n, const GradedVector& w) {
  const Space& alg = sp.algebra();
  SVec uu = alg.from_graded(u), ww = sp.from_graded(w);
  GradedVector out = zero_of(sp);
  out.overflow = u.overflow || w.overflow;
  for (const auto& [a, ca] : uu)
    for (const auto& [b, cb] : ww) {
      Weight t = alg.weight(a) + sp.weight(b) - n - 1;
      if (t > sp.cutoff()) {
        // the table cannot see this component; flag it only if it might be nonzero
        if (t >= sp.min_weight()) out.overflow = true;
        continue;
      }
      add_into(out, sp, sp.mode(a, n, b), ca * cb);
    }
  return out;
}

std::vector<GradedVector> translate(const Space& sp, int order, const GradedVector& w) {
  std::vector<GradedVector> out;
  SVec cur = sp.from_graded(w);
  bool over = w.overflow;
  Scalar fact = 1;
  for (int k = 0; k <= order; ++k) {
    if (k) fact *= k;
    GradedVector g = zero_of(sp);
    g.overflow = over;
    add_into(g, sp, cur, 1 / fact);
    out.push_back(g);
    SVec next;
    for (const auto& [i, c] : cur) {
      if (sp.weight(i) + 1 > sp.cutoff()) {
        over = true;
        continue;
      }
      axpy(next, c, sp.Lm1(i));
    }
    cur = std::move(next);
  }
  return out;
}

std::map<long, GradedVector> skew_vertex(const Space& W, const GradedVector& w,
                                         const GradedVector& v) {
  const Space& V = W.algebra();
  SVec ww = W.from_graded(w), vv = V.from_graded(v);
  std::map<long, GradedVector> out;
  for (const auto& [b, cb] : ww)
    for (const auto& [a, ca] : vv) {
      Weight base = V.weight(a) + W.weight(b);
      int ord = W.pole_order(a, b);
      long pmax = floor_of(W.cutoff() - base);
      for (long n = ord - 1; -n - 1 <= pmax; --n) {
        SVec y = W.mode(a, n, b);
        Scalar sign = (n + 1) % 2 == 0 ? 1 : -1;
        Scalar fact = 1;
        for (long k = 0; !y.empty() && -n - 1 + k <= pmax; ++k) {
          if (k) fact *= k;
          long p = -n - 1 + k;
          auto it = out.find(p);
          if (it == out.end()) it = out.emplace(p, zero_of(W)).first;
          add_into(it->second, W, y, sign * ca * cb / fact);
          SVec next;
          for (const auto& [i, c] : y) axpy(next, c, W.Lm1(i));
          y = std::move(next);
        }
      }
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

PoleBound pole_bounds(const Space& V, const Space& W, const Weight& weight_max) {
  PoleBound pb;
  auto vb = V.basis_upto(weight_max);
  for (int u : vb)
    for (int v : vb) pb.N[{u, v}] = std::max(1, V.pole_order(u, v));
  for (int u : vb)
    for (int w : W.basis_upto(weight_max)) pb.K[{u, w}] = std::max(1, W.pole_order(u, w));
  return pb;
}

}  // namespace vcoh
