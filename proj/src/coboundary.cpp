#include <algorithm>
#include <climits>
#include <mutex>

#include "vcoh/cochain.hpp"

namespace vcoh {

namespace {

RatFun of_poly(const Poly& p, int n) {
  return RatFun(p, std::vector<int>(n * n, 0), std::vector<int>(n, 0));
}

RatFun zpow(int n, int i, long e) {
  if (e >= 0) return of_poly(Poly::monomial(n, unit_mono(i, static_cast<int>(e))), n);
  return RatFun::pole_origin(n, i, static_cast<int>(-e));
}

// exponent of variable p -> coefficient polynomial with that variable removed
std::map<int, Poly> split_by_var(const Poly& q, int p, int n) {
  std::map<int, Poly> out;
  for (const auto& [m, c] : q.terms()) {
    Mono r = m;
    r.set(p, 0);
    auto it = out.try_emplace(m[p], Poly(n)).first;
    it->second.add(r, c);
  }
  return out;
}

void add_into(std::map<long, RatFun>& s, long e, const RatFun& f) {
  auto it = s.find(e);
  if (it == s.end()) s.emplace(e, f);
  else it->second += f;
}

using Series1 = std::map<long, RatFun>;

// F = sum_e z_p^e g_e with g_e free of z_p, exact for e >= exact_from. The
// true F has poles (z_p - z_j)^{caps[j]} and no pole at z_p = 0; its degree in
// z_p is at most growth.
RatFun reconstruct_outer(int n, int p, const Series1& s, long exact_from, const std::vector<int>& caps,
                         long growth, const std::string& what) {
  if (s.empty()) return RatFun(n);
  Poly Q(n, 1);
  int C = 0;
  for (int j = 0; j < n; ++j) {
    if (j == p || caps[j] == 0) continue;
    Q = Q * (Poly::var(n, p) - Poly::var(n, j)).pow(caps[j]);
    C += caps[j];
  }
  auto qs = split_by_var(Q, p, n);
  long lo = exact_from == LONG_MIN ? s.begin()->first : exact_from + C;
  long hi = s.rbegin()->first + C;
  if (lo > 0)
    throw ReconstructError(ReconStatus::Underdetermined,
                           what + ": series too short for the numerator (needs exponent " +
                               std::to_string(-C) + ", exact from " + std::to_string(exact_from) + ")");
  RatFun acc(n);
  for (long e = lo; e <= hi; ++e) {
    RatFun G(n);
    for (const auto& [sp, q] : qs) {
      auto it = s.find(e - sp);
      if (it != s.end()) G += it->second * of_poly(q, n);
    }
    if (G.is_zero()) continue;
    if (e < 0)
      throw ReconstructError(ReconStatus::NoSolution,
                             what + ": pole at the origin or above the pole caps");
    if (e > growth + C)
      throw ReconstructError(ReconStatus::NoSolution, what + ": growth bound exceeded");
    acc += G * zpow(n, p, e);
  }
  for (int j = 0; j < n; ++j)
    if (j != p && caps[j]) acc = acc * RatFun::pole_pair(n, p, j, caps[j]);
  return acc;
}

// F = sum_e t^e h_e with t = z_i - z_k and h_e free of z_i, exact for
// e <= exact_to. Poles (z_i - z_j)^{caps[j]}; degree in z_i at most growth.
RatFun reconstruct_inner(int n, int i, int k, const Series1& h, long exact_to,
                         const std::vector<int>& caps, long growth, const std::string& what) {
  if (h.empty()) return RatFun(n);
  Poly t = Poly::var(n, i);
  Poly Q(n, 1);
  int C = 0;
  for (int j = 0; j < n; ++j) {
    if (j == i || caps[j] == 0) continue;
    Poly f = j == k ? t : t + Poly::var(n, k) - Poly::var(n, j);
    Q = Q * f.pow(caps[j]);
    C += caps[j];
  }
  auto qs = split_by_var(Q, i, n);
  long hi = exact_to + caps[k];
  if (hi < growth + C)
    throw ReconstructError(ReconStatus::Underdetermined,
                           what + ": iterate series too short (exact to " + std::to_string(exact_to) +
                               ", needs " + std::to_string(growth + C - caps[k]) + ")");
  long lo = h.begin()->first + caps[k];
  Poly diff = Poly::var(n, i) - Poly::var(n, k);
  RatFun acc(n);
  for (long e = lo; e <= hi; ++e) {
    RatFun G(n);
    for (const auto& [sp, q] : qs) {
      auto it = h.find(e - sp);
      if (it != h.end()) G += it->second * of_poly(q, n);
    }
    if (G.is_zero()) continue;
    if (e < 0) throw ReconstructError(ReconStatus::NoSolution, what + ": pole above the caps");
    if (e > growth + C)
      throw ReconstructError(ReconStatus::NoSolution, what + ": growth bound exceeded");
    acc += G * of_poly(diff.pow(static_cast<int>(e)), n);
  }
  for (int j = 0; j < n; ++j)
    if (j != i && caps[j]) acc = acc * RatFun::pole_pair(n, i, j, caps[j]);
  return acc;
}

long ceil_weight(const Weight& w) { return -floor_weight(-w); }

// <w', E^{W;(1)}_{WV}(x; v)(z)> for all w' of weight r, as c z^e: the skew
// vertex operator chain Y^W_WV(x, zeta) Y_V(v, z) 1 reconstructed and then
// specialized at zeta = 0
const std::map<int, Scalar>& skew_coefficients(const Space& V, const Space& W, int x, int v,
                                               const Weight& r) {
  static std::mutex mu;
  static std::map<std::tuple<const Space*, int, int, Weight>, std::map<int, Scalar>> memo;
  auto key = std::make_tuple(&W, x, v, r);
  {
    std::lock_guard<std::mutex> g(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  std::map<int, Scalar> out;
  Weight d = r - V.weight(v) - W.weight(x);
  if (is_integer(d) && W.has_weight(r)) {
    Chain ch;
    ch.items.push_back({ChainItem::Skew, x, 0});
    ch.items.push_back({ChainItem::YV, v, 1});
    ch.terminal = V.vacuum();
    EngineOptions o;
    o.dual_cutoff = r;
    auto only = W.basis_at(r);
    auto res = evaluate_chain(ch, V, W, o, &only);
    for (const auto& [w, f] : res.entries) {
      RatFun g = f.specialize_zero(0);
      Scalar c = g.eval({Scalar(1)});
      RatFun mono = c * zpow(1, 0, to_long(d));
      if (g != mono)
        throw ReconstructError(ReconStatus::NoSolution,
                               "skew coefficient is not homogeneous: " + g.str());
      if (sgn(c) != 0) out.emplace(w, c);
    }
  }
  std::lock_guard<std::mutex> g(mu);
  return memo.emplace(key, std::move(out)).first->second;
}

std::vector<int> drop(const std::vector<int>& vs, int p) {
  std::vector<int> r;
  for (int k = 0; k < static_cast<int>(vs.size()); ++k)
    if (k != p) r.push_back(vs[k]);
  return r;
}

// Y_W(v, z_p) Phi(rest)(z_rest), with the coefficient of each intermediate
// basis vector x taken from the mode action (left) or from the skew vertex
// operator (skew); p = 0 for the left composite and p = n for the skew one
class OuterComposite : public Cochain {
 public:
  OuterComposite(CochainPtr phi, bool skew)
      : Cochain(phi->V(), phi->W(), phi->arity() + 1, skew ? "skew-composite" : "left-composite"),
        phi_(std::move(phi)),
        skew_(skew) {}
  int extra_cap() const override { return phi_->extra_cap(); }
  int extra_growth() const override { return phi_->extra_growth(); }
  int degree_spread() const override { return phi_->degree_spread(); }
  bool translation_covariant() const override { return phi_->translation_covariant(); }
  int slot_extra(int a) const override {
    int n = phi_->arity();
    if (skew_) return a == n ? 0 : phi_->slot_extra(a);
    return a == 0 ? 0 : phi_->slot_extra(a - 1);
  }

 protected:
  std::map<int, RatFun> compute(const std::vector<int>& vs, const Weight& r) const override {
    const Space& V = this->V();
    const Space& W = this->W();
    int n = phi_->arity();
    int N = std::max(n + 1, 1);
    int p = skew_ ? n : 0;
    int v = vs[p];
    auto rest = drop(vs, p);
    std::vector<int> map;
    if (n == 0) map = {0};
    else
      for (int k = 0; k < n; ++k) map.push_back(skew_ ? k : k + 1);
    std::vector<int> caps(N, 0);
    int C = 0;
    for (int j = 0; j < N; ++j)
      if (j != p) C += caps[j] = cap(vs, p, j);
    long lam_need = ceil_weight(r - V.weight(v)) + C;
    auto topd = phi_->top_dual();
    Weight lam;
    long exact_from;
    if (n == 0) {
      if (!topd || *topd > W.cutoff())
        throw ReconstructError(ReconStatus::Underdetermined, label + ": element above the cutoff");
      lam = *topd;
      exact_from = LONG_MIN;
    } else if (topd && *topd <= Weight(lam_need)) {
      lam = *topd;
      exact_from = LONG_MIN;
    } else {
      if (Weight(lam_need) > W.cutoff())
        throw ReconstructError(ReconStatus::Underdetermined,
                               label + ": needs intermediate weight " + std::to_string(lam_need) +
                                   " above the module cutoff");
      lam = Weight(lam_need);
      exact_from = ceil_weight(r - V.weight(v) - lam);
    }
    std::map<int, Series1> series;
    for (const auto& rho : W.weights()) {
      if (rho > lam) break;
      Weight dw = r - V.weight(v) - rho;
      if (!is_integer(dw)) continue;
      long e = to_long(dw);
      const auto& ph = phi_->at_weight(rest, rho);
      for (const auto& [x, f] : ph) {
        RatFun g = f.relabel(map, N);
        if (skew_) {
          for (const auto& [w, c] : skew_coefficients(V, W, x, v, r)) add_into(series[w], e, c * g);
        } else {
          Weight k = V.weight(v) + rho - r - 1;
          for (const auto& [w, c] : W.mode(v, to_long(k), x))
            if (W.weight(w) == r) add_into(series[w], e, c * g);
        }
      }
    }
    std::map<int, RatFun> out;
    for (auto& [w, s] : series) {
      if (n == 0) {
        RatFun acc(1);
        for (const auto& [e, g] : s) acc += g * zpow(1, 0, e);
        out.emplace(w, acc);
        continue;
      }
      out.emplace(w, reconstruct_outer(N, p, s, exact_from, caps, growth(vs, w, p),
                                       label + " at " + describe(V, vs)));
    }
    return out;
  }

 private:
  CochainPtr phi_;
  bool skew_;
};

// Phi(v_0 .. Y_V(v_i, z_i - z_{i+1}) v_{i+1} ..)(z_0 .. z_{i+1} ..)
class InnerComposite : public Cochain {
 public:
  InnerComposite(CochainPtr phi, int i)
      : Cochain(phi->V(), phi->W(), phi->arity() + 1, "iterate-composite"), phi_(std::move(phi)), i_(i) {
    if (i < 0 || i >= phi_->arity()) throw std::invalid_argument("composition slot out of range");
  }
  int extra_cap() const override { return phi_->extra_cap(); }
  int extra_growth() const override { return phi_->extra_growth(); }
  int degree_spread() const override { return phi_->degree_spread(); }
  bool translation_covariant() const override { return phi_->translation_covariant(); }
  int slot_extra(int a) const override { return phi_->slot_extra(a <= i_ ? a : a - 1); }

 protected:
  std::map<int, RatFun> compute(const std::vector<int>& vs, const Weight& r) const override {
    const Space& V = this->V();
    const Space& W = this->W();
    int n = phi_->arity();
    int N = n + 1;
    int i = i_, k = i_ + 1;
    std::vector<int> map;
    for (int s = 0; s < n; ++s) map.push_back(s < i ? s : s + 1);
    if (vs[k] == V.vacuum() && phi_->translation_covariant()) {
      // Y(v, t)1 = e^{t L(-1)} v, and the derivative property turns the
      // translation into the shift z_{i+1} -> z_i
      std::vector<int> m;
      for (int s = 0; s < n; ++s) m.push_back(s <= i ? s : s + 1);
      std::map<int, RatFun> out;
      for (const auto& [w, f] : phi_->at_weight(drop(vs, k), r)) out.emplace(w, f.relabel(m, N));
      return out;
    }
    std::vector<int> caps(N, 0);
    int C = 0;
    for (int j = 0; j < N; ++j)
      if (j != i) C += caps[j] = cap(vs, i, j);
    auto duals = W.basis_at(r);
    if (duals.empty()) return {};
    long g = growth(vs, duals[0], i);
    long e_need = g + C - caps[k];
    long e_avail = floor_weight(V.cutoff() - V.weight(vs[i]) - V.weight(vs[k]));
    if (e_need > e_avail)
      throw ReconstructError(ReconStatus::Underdetermined,
                             label + ": iterate needs algebra weight above the cutoff at " +
                                 describe(V, vs));
    long e_top = e_need;
    long e_lo = -V.pole_order(vs[i], vs[k]);
    std::vector<int> in = drop(vs, k);
    std::map<int, Series1> h;
    for (long e = e_lo; e <= e_top; ++e) {
      SVec u = V.mode(vs[i], -e - 1, vs[k]);
      for (const auto& [b, cb] : u) {
        in[i] = b;
        for (const auto& [w, f] : phi_->at_weight(in, r)) add_into(h[w], e, cb * f.relabel(map, N));
      }
    }
    std::map<int, RatFun> out;
    for (auto& [w, s] : h)
      out.emplace(w, reconstruct_inner(N, i, k, s, e_top, caps, g, label + " at " + describe(V, vs)));
    return out;
  }

 private:
  CochainPtr phi_;
  int i_;
};

Window shifted(const Window& w, int var, long e) {
  Window r = w;
  for (auto& c : r.cons) c.bound -= c.c[var] * e;
  return r;
}

void add_shifted(Terms& acc, const RatFun& f, const Region& R, const Window& win, int var, long e,
                 const Scalar& c) {
  if (f.is_zero() || sgn(c) == 0) return;
  auto slab = expand(f, R, shifted(win, var, e));
  Mono sh = unit_mono(var, static_cast<int>(e));
  for (const auto& [m, a] : slab.coeffs) add_to(acc, m + sh, c * a);
}

class HalfCoboundary : public Cochain {
 public:
  explicit HalfCoboundary(CochainPtr phi)
      : Cochain(phi->V(), phi->W(), 3, "half-coboundary"), phi_(std::move(phi)) {
    if (phi_->arity() != 2) throw std::invalid_argument("coboundary_half takes a 2-cochain");
  }
  int extra_cap() const override { return phi_->extra_cap(); }
  int extra_growth() const override { return phi_->extra_growth(); }
  int degree_spread() const override { return phi_->degree_spread(); }
  bool translation_covariant() const override { return phi_->translation_covariant(); }
  int slot_extra(int) const override { return std::max(phi_->slot_extra(0), phi_->slot_extra(1)); }

 protected:
  std::map<int, RatFun> compute(const std::vector<int>& vs, const Weight& r) const override {
    const Space& V = this->V();
    Weight in = V.weight(vs[0]) + V.weight(vs[1]) + V.weight(vs[2]);
    if (!is_integer(r - in)) return {};
    int d = static_cast<int>(to_long(r - in));
    auto duals = W().basis_at(r);
    if (duals.empty()) return {};
    PoleCaps pc(3);
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) pc(a, b) = cap(vs, a, b);
    pc.zdeg.assign(3, 0);
    for (int a = 0; a < 3; ++a) {
      long z = growth(vs, duals[0], a);
      for (int b = 0; b < 3; ++b)
        if (b != a) z += pc(a, b);
      pc.zdeg[a] = static_cast<int>(std::max(0L, z));
    }
    auto b1 = bracket(vs, r, d, pc, true);
    auto b2 = bracket(vs, r, d, pc, false);
    std::map<int, RatFun> out;
    for (int w : duals) {
      RatFun f = b1[w] - b2[w];
      if (!f.is_zero()) out.emplace(w, f);
    }
    return out;
  }

 private:
  // first = R(E o_2 Phi + Phi o_2 E^(2)) over |z1| > |z3| > |z2 - z3|;
  // second = R(Phi o_1 E^(2) + skew) over |z3| > |z2| > |z1 - z2|
  std::map<int, RatFun> bracket(const std::vector<int>& vs, const Weight& r, int d,
                                const PoleCaps& pc, bool first) const {
    const Space& V = this->V();
    const Space& W = this->W();
    Region R = first ? Region::linear({{1, 0, 0}, {0, 1, 1}, {0, 1, 0}}, {"z1", "z3", "z2-z3"},
                                      "|z1|>|z3|>|z2-z3|>0")
                     : Region::linear({{0, 1, 1}, {0, 1, 0}, {1, 0, 0}}, {"z3", "z2", "z1-z2"},
                                      "|z3|>|z2|>|z1-z2|>0");
    // outer vector and the merged pair
    int vo = first ? vs[0] : vs[2];
    int va = first ? vs[1] : vs[0], vb = first ? vs[2] : vs[1];
    std::vector<int> outer_in = first ? std::vector<int>{vs[1], vs[2]} : std::vector<int>{vs[0], vs[1]};
    std::vector<int> outer_map = first ? std::vector<int>{1, 2} : std::vector<int>{0, 1};
    std::vector<int> inner_map = first ? std::vector<int>{0, 2} : std::vector<int>{1, 2};
    Weight pair_wt = V.weight(va) + V.weight(vb);
    long e_avail = floor_weight(V.cutoff() - pair_wt);
    long e_lo = -V.pole_order(va, vb);
    int spread = phi_->degree_spread();
    long lam = ceil_weight(r - V.weight(vo)) + pc.pair[0 * 3 + 1] + pc.pair[0 * 3 + 2] +
               pc.pair[1 * 3 + 2] + 2;
    long e_b = std::min(e_avail, static_cast<long>(pc.zdeg[first ? 1 : 0]) + 2);
    for (int attempt = 0;; ++attempt) {
      Weight laml = std::min(Weight(lam), W.cutoff());
      Window win;
      win.add({0, 1, 1}, floor_weight(laml - (first ? V.weight(vs[1]) + V.weight(vs[2])
                                                    : V.weight(vs[0]) + V.weight(vs[1]))) -
                             spread);
      win.add({0, 0, 1}, e_b);
      std::map<int, Terms> slab;
      for (const auto& rho : W.weights()) {
        if (rho > laml) break;
        Weight dw = r - V.weight(vo) - rho;
        if (!is_integer(dw)) continue;
        long e = to_long(dw);
        for (const auto& [x, f] : phi_->at_weight(outer_in, rho)) {
          RatFun g = f.relabel(outer_map, 3);
          if (first) {
            Weight k = V.weight(vo) + rho - r - 1;
            for (const auto& [w, c] : W.mode(vo, to_long(k), x))
              if (W.weight(w) == r) add_shifted(slab[w], g, R, win, 0, e, c);
          } else {
            for (const auto& [w, c] : skew_coefficients(V, W, x, vo, r))
              add_shifted(slab[w], g, R, win, 0, e, c);
          }
        }
      }
      for (long e = e_lo; e <= e_b; ++e) {
        SVec u = V.mode(va, -e - 1, vb);
        for (const auto& [b, cb] : u) {
          std::vector<int> in = first ? std::vector<int>{vs[0], b} : std::vector<int>{b, vs[2]};
          for (const auto& [w, f] : phi_->at_weight(in, r))
            add_shifted(slab[w], f.relabel(inner_map, 3), R, win, 2, e, cb);
        }
      }
      std::map<int, RatFun> out;
      bool retry = false;
      std::string why;
      for (auto& [w, t] : slab) {
        LaurentSlab ls;
        ls.m = 3;
        ls.window = win;
        for (auto& [m, c] : t)
          if (sgn(c) != 0 && win.contains(m)) ls.coeffs.emplace(m, c);
        auto res = try_reconstruct(ls, R, pc, spread ? std::nullopt : std::optional<int>(d));
        if (res.status == ReconStatus::Underdetermined) {
          retry = true;
          why = res.detail;
          break;
        }
        if (!res.ok())
          throw HalfError(std::string("paired sum does not reconstruct (") + status_name(res.status) +
                          ") at " + describe(V, vs) + ": " + res.detail);
        if (!res.f.is_zero()) out.emplace(w, res.f);
      }
      if (!retry) return out;
      bool can = Weight(lam) < W.cutoff() || e_b < e_avail;
      if (!can || attempt > 6)
        throw HalfError("paired sum underdetermined at the cutoff at " + describe(V, vs) + ": " + why);
      lam += 2;
      e_b = std::min(e_avail, e_b + 2);
    }
  }

  CochainPtr phi_;
};

std::string suffix(const CochainPtr& phi) { return "(" + phi->label + ")"; }

CochainPtr named(std::shared_ptr<Cochain> c, std::string label) {
  c->label = std::move(label);
  return c;
}

}  // namespace

CochainPtr compose_E1_left(const CochainPtr& phi) {
  return named(std::make_shared<OuterComposite>(phi, false), "E1 o_2 " + suffix(phi));
}

CochainPtr compose_E_left(const CochainPtr& phi, int p) {
  if (p < 1) throw std::invalid_argument("compose_E_left needs p >= 1");
  CochainPtr c = phi;
  for (int k = 0; k < p; ++k) c = compose_E1_left(c);
  return c;
}

CochainPtr compose_E_skew(const CochainPtr& phi, int p) {
  if (p < 1) throw std::invalid_argument("compose_E_skew needs p >= 1");
  CochainPtr c = phi;
  for (int k = 0; k < p; ++k) c = named(std::make_shared<OuterComposite>(c, true), "E_WV o_0 " + suffix(c));
  return c;
}

CochainPtr compose_E2_at(const CochainPtr& phi, int i) {
  return named(std::make_shared<InnerComposite>(phi, i),
               suffix(phi) + " o_" + std::to_string(i + 1) + " E2");
}

CochainPtr compose_with_E(const CochainPtr& phi, const std::vector<int>& l) {
  if (static_cast<int>(l.size()) != phi->arity()) throw std::invalid_argument("partition length");
  CochainPtr c = phi;
  int start = 0;
  for (int li : l) {
    if (li < 1) throw std::invalid_argument("partition parts must be >= 1");
    for (int s = 0; s + 1 < li; ++s) c = compose_E2_at(c, start + s);
    start += li;
  }
  return c;
}

CochainPtr coboundary(const CochainPtr& phi, int m) {
  int n = phi->arity();
  std::vector<std::pair<Scalar, CochainPtr>> t;
  t.emplace_back(Scalar(1), compose_E1_left(phi));
  for (int i = 1; i <= n; ++i) t.emplace_back(Scalar(i % 2 ? -1 : 1), compose_E2_at(phi, i - 1));
  t.emplace_back(Scalar((n + 1) % 2 ? -1 : 1), compose_E_skew(phi, 1));
  auto c = lincomb(t);
  std::const_pointer_cast<Cochain>(c)->label =
      "delta^" + std::to_string(n) + "_" + std::to_string(m) + suffix(phi);
  return c;
}

CochainPtr coboundary_symbolic(const Space& V, const Space& W, int n,
                               const std::vector<SymbolicTerm>& terms, const EngineOptions& opts) {
  int N = n + 1;
  std::vector<SymbolicTerm> out;
  for (const auto& t : terms) {
    std::vector<int> shift, same;
    for (int k = 0; k < n; ++k) {
      shift.push_back(k + 1);
      same.push_back(k);
    }
    RatFun g = t.f.relabel(shift, N);
    for (int i = 0; i < n; ++i) {
      std::vector<int> m;
      for (int k = 0; k < n; ++k) m.push_back(k < i ? k : k + 1);
      g += Scalar((i + 1) % 2 ? -1 : 1) * t.f.relabel(m, N);
    }
    g += Scalar((n + 1) % 2 ? -1 : 1) * t.f.relabel(same, N);
    out.push_back({g, t.w});
  }
  return named(std::const_pointer_cast<Cochain>(symbolic_cochain(V, W, N, out, opts)),
               "delta(symbolic, closed form)");
}

CochainPtr coboundary_half(const CochainPtr& phi) {
  return named(std::make_shared<HalfCoboundary>(phi), "delta^2_1/2" + suffix(phi));
}

ComposabilityCertificate check_composable(const CochainPtr& phi, int m, const Weight& input_bound,
                                          const Weight& dual_cutoff) {
  ComposabilityCertificate cert;
  cert.m = m;
  cert.dual_cutoff = dual_cutoff;
  cert.input_bound = input_bound;
  cert.extra_cap = phi->extra_cap();
  for (int a = 0; a < phi->arity(); ++a) cert.slot_extra.push_back(phi->slot_extra(a));
  cert.v_cutoff = phi->V().cutoff();
  cert.w_cutoff = phi->W().cutoff();
  int n = phi->arity();
  if (m < 0) throw std::invalid_argument("composability level must be >= 0");
  if (m == 0 || n == 0) {
    cert.notes.push_back("vacuous: no compositions required");
    return cert;
  }
  // condition 1: compositions l_1 + .. + l_n = m + n, each zeta at the last
  // point of its group versus at the first point
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int parts) {
    if (parts == 0) {
      if (left == 0) cert.partitions.push_back(cur);
      return;
    }
    for (int l = 1; l <= left - (parts - 1); ++l) {
      cur.push_back(l);
      rec(left - l, parts - 1);
      cur.pop_back();
    }
  };
  rec(m + n, n);
  auto inputs = basis_tensors(phi->V(), m + n, input_bound, true);
  for (const auto& l : cert.partitions) {
    std::vector<int> rot;
    int s = 0;
    for (int li : l) {
      for (int k = 1; k < li; ++k) rot.push_back(s + k);
      rot.push_back(s);
      s += li;
    }
    auto A = compose_with_E(phi, l);
    auto B = sn_act_cochain(rot, A);
    std::string part;
    for (int li : l) part += (part.empty() ? "" : ",") + std::to_string(li);
    auto res = check_equal(A, B, inputs, dual_cutoff, "zeta-independence");
    cert.checked += res.checked;
    if (!res.pass) {
      cert.condition1 = false;
      cert.notes.push_back("partition (" + part + "): " + res.witness);
    }
  }
  // condition 2: left compositions with up to m vertex operators reconstruct
  // within the caps
  for (int p = 1; p <= m; ++p) {
    auto L = compose_E_left(phi, p);
    auto in = basis_tensors(phi->V(), n + p, input_bound, true);
    CheckResult res;
    res.check = "left composition";
    for (const auto& vs : in) {
      try {
        auto f = L->value(vs, dual_cutoff);
        res.checked += static_cast<long>(f.entries.size()) + 1;
      } catch (const std::exception& e) {
        res.pass = false;
        res.witness = "p=" + std::to_string(p) + " at " + describe(phi->V(), vs) + ": " + e.what();
        break;
      }
    }
    cert.checked += res.checked;
    if (!res.pass) {
      cert.condition2 = false;
      cert.notes.push_back(res.witness);
    }
  }
  return cert;
}

}  // namespace vcoh
