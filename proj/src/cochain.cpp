#include "vcoh/cochain.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

namespace vcoh {

// ---- base ----

const std::map<int, RatFun>& Cochain::at_weight(const std::vector<int>& vs, const Weight& r) const {
  if (static_cast<int>(vs.size()) != n_) throw std::invalid_argument("cochain arity mismatch");
  auto key = std::make_pair(vs, r);
  {
    std::lock_guard<std::mutex> g(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  std::map<int, RatFun> e;
  if (W_.has_weight(r) && (!top_dual() || r <= *top_dual())) e = compute(vs, r);
  for (auto it = e.begin(); it != e.end();) it = it->second.is_zero() ? e.erase(it) : std::next(it);
  std::lock_guard<std::mutex> g(mu_);
  return memo_.emplace(key, std::move(e)).first->second;
}

RatFun Cochain::entry(const std::vector<int>& vs, int wdual) const {
  const auto& m = at_weight(vs, W_.weight(wdual));
  auto it = m.find(wdual);
  return it == m.end() ? RatFun(std::max(n_, 1)) : it->second;
}

RatFun Cochain::entry(const std::vector<SVec>& vs, int wdual) const {
  RatFun acc(std::max(n_, 1));
  std::vector<int> cur(n_);
  std::function<void(int, Scalar)> rec = [&](int k, Scalar c) {
    if (k == n_) {
      RatFun f = entry(cur, wdual);
      if (!f.is_zero()) acc += c * f;
      return;
    }
    for (const auto& [id, a] : vs[k]) {
      cur[k] = id;
      rec(k + 1, c * a);
    }
  };
  rec(0, 1);
  return acc;
}

WValuedRatFun Cochain::value(const std::vector<int>& vs, const Weight& dual_cutoff) const {
  WValuedRatFun f;
  f.n = std::max(n_, 1);
  f.dual_cutoff = dual_cutoff;
  f.poles_at_origin_allowed = false;
  for (const auto& r : W_.weights()) {
    if (r > dual_cutoff) break;
    for (const auto& [k, e] : at_weight(vs, r)) f.entries.emplace(k, e);
  }
  return f;
}

int Cochain::cap(const std::vector<int>& vs, int a, int b) const {
  int N = std::max(V_.pole_order(vs[a], vs[b]), V_.pole_order(vs[b], vs[a]));
  return extra_cap() + (N == 0 ? 0 : N + slot_extra(a) + slot_extra(b));
}

long Cochain::growth(const std::vector<int>& vs, int wdual, int a) const {
  Weight lo = std::min(Weight(0), W_.min_weight());
  return floor_weight(W_.weight(wdual) - V_.weight(vs[a]) - lo) + extra_growth();
}

size_t Cochain::memo_size() const {
  std::lock_guard<std::mutex> g(mu_);
  return memo_.size();
}

namespace {

RatFun monomial_fn(int n, const Mono& m, const Scalar& c) {
  Mono pos, neg;
  for (int i = 0; i < n; ++i) (m[i] >= 0 ? pos : neg).set(i, m[i] >= 0 ? m[i] : -m[i]);
  std::vector<int> org(n);
  for (int i = 0; i < n; ++i) org[i] = neg[i];
  return RatFun(Poly::monomial(n, pos, c), std::vector<int>(n * n, 0), org);
}

// ---- elementary cochains ----

class ElementCochain : public Cochain {
 public:
  ElementCochain(const Space& V, const Space& W, SVec w) : Cochain(V, W, 0, "element"), w_(std::move(w)) {
    prune(w_);
  }
  std::optional<Weight> top_dual() const override {
    Weight t = W().min_weight();
    for (const auto& [i, c] : w_) t = std::max(t, W().weight(i));
    return t;
  }

 protected:
  std::map<int, RatFun> compute(const std::vector<int>&, const Weight& r) const override {
    std::map<int, RatFun> out;
    for (const auto& [i, c] : w_)
      if (W().weight(i) == r) out.emplace(i, RatFun(1, c));
    return out;
  }

 private:
  SVec w_;
};

int symbolic_extra_growth(const RatFun& f) {
  int g = 0;
  int n = f.nvars();
  for (int i = 0; i < n; ++i) {
    int top = 0;
    for (const auto& [m, c] : f.numerator().terms()) top = std::max(top, m[i]);
    int den = f.origin_exp(i);
    for (int j = 0; j < n; ++j)
      if (j != i) den += f.pair_exp(std::min(i, j), std::max(i, j));
    g = std::max(g, top - den);
  }
  return g;
}

class SymbolicCochain : public Cochain {
 public:
  SymbolicCochain(const Space& V, const Space& W, int n, std::vector<SymbolicTerm> terms,
                  const EngineOptions& opts)
      : Cochain(V, W, n, "symbolic"), terms_(std::move(terms)), opts_(opts) {
    for (auto& t : terms_) {
      if (t.f.nvars() != n) throw std::invalid_argument("symbolic cochain: f has wrong arity");
      auto d = t.f.homogeneity_degree();
      if (!t.f.is_zero() && (!d || *d != 0))
        throw std::invalid_argument("symbolic cochain: f must be homogeneous of degree 0");
      if (t.f.has_origin_poles())
        throw std::invalid_argument("symbolic cochain: f has poles at the origin");
      prune(t.w);
      for (const auto& [i, c] : t.w)
        if (!vacuum_like(W, i))
          throw NotVacuumLike("symbolic cochain: " + W.label(i) + " is not vacuum-like");
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) extra_ = std::max(extra_, t.f.pair_exp(a, b));
      growth_ = std::max(growth_, symbolic_extra_growth(t.f));
    }
  }
  int extra_cap() const override { return extra_; }
  int extra_growth() const override { return growth_; }
  bool translation_covariant() const override {
    for (const auto& t : terms_)
      if (t.f.numerator().size() > 1 || !t.f.numerator().homogeneous() || t.f.pole_total() > 0)
        return false;
    return true;
  }
  const std::vector<SymbolicTerm>& terms() const { return terms_; }

 protected:
  std::map<int, RatFun> compute(const std::vector<int>& vs, const Weight& r) const override {
    std::map<int, RatFun> out;
    auto duals = W().basis_at(r);
    EngineOptions o = opts_;
    o.dual_cutoff = r;
    for (const auto& t : terms_)
      for (const auto& [x, c] : t.w) {
        Chain ch;
        for (int k = 0; k < arity(); ++k) ch.items.push_back({ChainItem::YW, vs[k], k});
        ch.terminal = x;
        auto res = evaluate_chain(ch, V(), W(), o, &duals);
        for (const auto& [k, f] : res.entries) {
          RatFun g = c * (t.f * f);
          auto it = out.find(k);
          if (it == out.end()) out.emplace(k, g);
          else it->second += g;
        }
      }
    return out;
  }

 private:
  std::vector<SymbolicTerm> terms_;
  EngineOptions opts_;
  int extra_ = 0, growth_ = 0;
};

class TableCochain : public Cochain {
 public:
  TableCochain(const Space& V, const Space& W, int n, EntryTable t)
      : Cochain(V, W, n, "table"), t_(std::move(t)) {
    for (const auto& [k, f] : t_) {
      if (static_cast<int>(k.size()) != n) throw std::invalid_argument("table: arity mismatch");
      if (f.has_origin_poles()) throw std::invalid_argument("table: entry has poles at the origin");
    }
  }

 protected:
  std::map<int, RatFun> compute(const std::vector<int>& vs, const Weight& r) const override {
    auto it = t_.find(vs);
    if (it == t_.end()) throw std::out_of_range("table cochain: no entry for " + describe(V(), vs));
    if (r > it->second.dual_cutoff)
      throw std::out_of_range("table cochain: dual weight " + to_string(r) + " beyond the table");
    std::map<int, RatFun> out;
    for (const auto& [k, f] : it->second.entries)
      if (W().weight(k) == r) out.emplace(k, f);
    return out;
  }

 private:
  EntryTable t_;
};

class GeneratedCochain : public Cochain {
 public:
  GeneratedCochain(const Space& V, const Space& W, int n, EntryGenerator g, CochainBounds b)
      : Cochain(V, W, n, "tabulated"), g_(std::move(g)), b_(std::move(b)) {}
  int extra_cap() const override { return b_.extra_cap; }
  int extra_growth() const override { return b_.extra_growth; }
  int degree_spread() const override { return b_.degree_spread; }
  bool translation_covariant() const override { return b_.translation_covariant; }
  int slot_extra(int a) const override {
    return a < static_cast<int>(b_.slot_extra.size()) ? b_.slot_extra[a] : 0;
  }

 protected:
  std::map<int, RatFun> compute(const std::vector<int>& vs, const Weight& r) const override {
    return g_(vs, r);
  }

 private:
  EntryGenerator g_;
  CochainBounds b_;
};

class LinComb : public Cochain {
 public:
  LinComb(std::vector<std::pair<Scalar, CochainPtr>> t)
      : Cochain(t.at(0).second->V(), t.at(0).second->W(), t.at(0).second->arity(), "combination"),
        t_(std::move(t)) {
    for (const auto& [c, p] : t_)
      if (p->arity() != arity() || &p->W() != &W())
        throw std::invalid_argument("combination of incompatible cochains");
  }
  int extra_cap() const override {
    int e = 0;
    for (const auto& [c, p] : t_) e = std::max(e, p->extra_cap());
    return e;
  }
  int extra_growth() const override {
    int e = 0;
    for (const auto& [c, p] : t_) e = std::max(e, p->extra_growth());
    return e;
  }
  int degree_spread() const override {
    int e = 0;
    for (const auto& [c, p] : t_) e = std::max(e, p->degree_spread());
    return e;
  }
  bool translation_covariant() const override {
    for (const auto& [c, p] : t_)
      if (!p->translation_covariant()) return false;
    return true;
  }
  int slot_extra(int a) const override {
    int e = 0;
    for (const auto& [c, p] : t_) e = std::max(e, p->slot_extra(a));
    return e;
  }
  std::optional<Weight> top_dual() const override {
    std::optional<Weight> t;
    for (const auto& [c, p] : t_) {
      auto d = p->top_dual();
      if (!d) return std::nullopt;
      t = t ? std::max(*t, *d) : *d;
    }
    return t;
  }

 protected:
  std::map<int, RatFun> compute(const std::vector<int>& vs, const Weight& r) const override {
    std::map<int, RatFun> out;
    for (const auto& [c, p] : t_) {
      if (sgn(c) == 0) continue;
      for (const auto& [k, f] : p->at_weight(vs, r)) {
        auto it = out.find(k);
        if (it == out.end()) out.emplace(k, c * f);
        else it->second += c * f;
      }
    }
    return out;
  }

 private:
  std::vector<std::pair<Scalar, CochainPtr>> t_;
};

class Permuted : public Cochain {
 public:
  Permuted(std::vector<int> s, CochainPtr p)
      : Cochain(p->V(), p->W(), p->arity(), "permuted"), s_(std::move(s)), p_(std::move(p)) {}
  int extra_cap() const override { return p_->extra_cap(); }
  int extra_growth() const override { return p_->extra_growth(); }
  int degree_spread() const override { return p_->degree_spread(); }
  bool translation_covariant() const override { return p_->translation_covariant(); }
  int slot_extra(int a) const override {
    for (size_t k = 0; k < s_.size(); ++k)
      if (s_[k] == a) return p_->slot_extra(static_cast<int>(k));
    return 0;
  }
  std::optional<Weight> top_dual() const override { return p_->top_dual(); }

 protected:
  std::map<int, RatFun> compute(const std::vector<int>& vs, const Weight& r) const override {
    std::vector<int> us(vs.size());
    for (size_t k = 0; k < vs.size(); ++k) us[k] = vs[s_[k]];
    std::map<int, RatFun> out;
    for (const auto& [k, f] : p_->at_weight(us, r)) out.emplace(k, sn_act(s_, f));
    return out;
  }

 private:
  std::vector<int> s_;
  CochainPtr p_;
};

SVec lm1_power(const Space& S, int v, long k) {
  SVec x{{v, Scalar(1)}};
  for (long i = 0; i < k; ++i) {
    SVec y;
    for (const auto& [j, c] : x) axpy(y, c, S.Lm1(j));
    x = std::move(y);
  }
  return x;
}

}  // namespace

CochainPtr element_cochain(const Space& V, const Space& W, const SVec& w) {
  auto p = std::make_shared<ElementCochain>(V, W, w);
  p->label = "element";
  return p;
}

CochainPtr symbolic_cochain(const Space& V, const Space& W, int n, std::vector<SymbolicTerm> terms,
                            const EngineOptions& opts) {
  if (n < 1) throw std::invalid_argument("symbolic cochains have arity >= 1");
  auto p = std::make_shared<SymbolicCochain>(V, W, n, std::move(terms), opts);
  p->label = "E^(" + std::to_string(n) + ")";
  return p;
}

CochainPtr table_cochain(const Space& V, const Space& W, int n, EntryTable table) {
  auto p = std::make_shared<TableCochain>(V, W, n, std::move(table));
  p->label = "table";
  return p;
}

CochainPtr tabulated_cochain(const Space& V, const Space& W, int n, EntryGenerator gen,
                             CochainBounds bounds, std::string label) {
  auto p = std::make_shared<GeneratedCochain>(V, W, n, std::move(gen), std::move(bounds));
  p->label = std::move(label);
  return p;
}

CochainPtr random_tabulated(const Space& V, int n, unsigned seed, const EngineOptions& opts) {
  if (n < 1) throw std::invalid_argument("random_tabulated: arity >= 1");
  std::mt19937 rng(seed);
  std::vector<Scalar> coef(1u << n);
  bool any = false;
  for (auto& c : coef) {
    int num = static_cast<int>(rng() % 7) - 3;
    int den = 1 + static_cast<int>(rng() % 3);
    c = Scalar(num, den);
    c.canonicalize();
    any = any || num != 0;
  }
  if (!any) coef[0] = 1;
  SVec vac{{V.vacuum(), Scalar(1)}};
  auto E = symbolic_cochain(V, V, n, {{RatFun(n, 1), vac}}, opts);
  const Space* Vp = &V;
  auto gen = [E, coef, n, Vp](const std::vector<int>& vs, const Weight& r) {
    // theta^{a_k} v_k = (-1)^{a_k parity(v_k)} v_k
    Scalar c = 0;
    for (size_t a = 0; a < coef.size(); ++a) {
      int odd = 0;
      for (int k = 0; k < n; ++k) odd += static_cast<int>((a >> k) & 1) * Vp->parity(vs[k]);
      c += odd % 2 ? -coef[a] : coef[a];
    }
    std::map<int, RatFun> out;
    if (sgn(c) == 0) return out;
    for (const auto& [w, f] : E->at_weight(vs, r)) out.emplace(w, c * f);
    return out;
  };
  std::string lab = "tabulated(seed " + std::to_string(seed) + ", n " + std::to_string(n) + ")";
  CochainBounds b;
  b.translation_covariant = true;
  return tabulated_cochain(V, V, n, gen, b, lab);
}

CochainPtr derivation_cochain(const Space& V) {
  const Space* Vp = &V;
  auto gen = [Vp](const std::vector<int>& vs, const Weight& r) {
    std::map<int, RatFun> out;
    Weight d = r - Vp->weight(vs[0]) - 1;
    if (!is_integer(d) || d < 0) return out;
    long k = to_long(d);
    SVec x = lm1_power(*Vp, vs[0], k + 1);
    for (const auto& [i, c] : x)
      if (Vp->weight(i) == r) out.emplace(i, monomial_fn(1, unit_mono(0, static_cast<int>(k)), c / factorial(k)));
    if (Vp->weight(vs[0]) + k + 1 > Vp->cutoff())
      throw ReconstructError(ReconStatus::Underdetermined, "derivation cochain above the cutoff");
    return out;
  };
  CochainBounds b;
  b.degree_spread = 1;
  b.slot_extra = {1};
  b.translation_covariant = true;
  return tabulated_cochain(V, V, 1, gen, b, "Phi_L(-1)");
}

CochainPtr lincomb(const std::vector<std::pair<Scalar, CochainPtr>>& terms) {
  if (terms.empty()) throw std::invalid_argument("empty combination");
  auto p = std::make_shared<LinComb>(terms);
  std::string s;
  for (const auto& [c, q] : terms) s += (s.empty() ? "" : " + ") + to_string(c) + "*" + q->label;
  p->label = s;
  return p;
}

CochainPtr sn_act_cochain(const std::vector<int>& sigma, const CochainPtr& phi) {
  if (static_cast<int>(sigma.size()) != phi->arity())
    throw std::invalid_argument("sn_act_cochain: arity mismatch");
  auto p = std::make_shared<Permuted>(sigma, phi);
  std::string s;
  for (int x : sigma) s += std::to_string(x + 1);
  p->label = "sigma_" + s + "(" + phi->label + ")";
  return p;
}

// ---- shuffles ----

int permutation_sign(const std::vector<int>& s) {
  int inv = 0;
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (s[i] > s[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

ShuffleSet shuffles(int n, int p) {
  if (p < 1 || p > n - 1) throw std::invalid_argument("shuffles need 1 <= p <= n-1");
  ShuffleSet s;
  s.n = n;
  s.p = p;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + p, true);
  do {
    std::vector<int> perm;
    for (int i = 0; i < n; ++i)
      if (pick[i]) perm.push_back(i);
    for (int i = 0; i < n; ++i)
      if (!pick[i]) perm.push_back(i);
    s.perms.push_back(perm);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return s;
}

CochainPtr shuffle_defect(const CochainPtr& phi, int p) {
  auto J = shuffles(phi->arity(), p);
  std::vector<std::pair<Scalar, CochainPtr>> t;
  // the sum runs over shuffle products of the two blocks, so each sigma enters through its inverse
  for (const auto& s : J.perms) {
    std::vector<int> inv(s.size());
    for (size_t k = 0; k < s.size(); ++k) inv[s[k]] = static_cast<int>(k);
    t.emplace_back(Scalar(permutation_sign(s)), sn_act_cochain(inv, phi));
  }
  auto c = lincomb(t);
  std::const_pointer_cast<Cochain>(c)->label = "shuffle_defect_" + std::to_string(p) + "(" + phi->label + ")";
  return c;
}

// ---- checks ----

std::vector<std::vector<int>> basis_tensors(const Space& V, int n, const Weight& bound, bool total) {
  std::vector<std::vector<int>> out;
  auto ids = V.basis_upto(bound);
  std::vector<int> cur;
  std::function<void(Weight)> rec = [&](Weight used) {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int i : ids) {
      Weight w = used + V.weight(i);
      if (total && w > bound) continue;
      cur.push_back(i);
      rec(total ? w : Weight(0));
      cur.pop_back();
    }
  };
  rec(0);
  std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    for (size_t k = 0; k < a.size(); ++k)
      if (V.weight(a[k]) != V.weight(b[k])) return V.weight(a[k]) < V.weight(b[k]);
    return a < b;
  });
  return out;
}

namespace {

template <class F>
void for_inputs(const std::vector<std::vector<int>>& inputs, CheckResult& res, F f) {
  std::vector<CheckResult> part(inputs.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < static_cast<long>(inputs.size()); ++k) {
    try {
      f(inputs[k], part[k]);
    } catch (const std::exception& e) {
      part[k].pass = false;
      part[k].witness = e.what();
    }
  }
  for (const auto& p : part) {
    res.checked += p.checked;
    if (!p.pass && res.pass) {
      res.pass = false;
      res.witness = p.witness;
    }
  }
}

std::string where(const Cochain& c, const std::vector<int>& vs, int w) {
  return "inputs " + describe(c.V(), vs) + ", dual " + c.W().label(w);
}

}  // namespace

std::vector<WValuedRatFun> evaluate_inputs(const CochainPtr& phi,
                                           const std::vector<std::vector<int>>& inputs,
                                           const Weight& dual_cutoff, bool parallel) {
  std::vector<WValuedRatFun> out(inputs.size());
  if (!parallel) {
    for (size_t k = 0; k < inputs.size(); ++k) out[k] = phi->value(inputs[k], dual_cutoff);
    return out;
  }
  std::vector<std::string> err(inputs.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < static_cast<long>(inputs.size()); ++k) {
    try {
      out[k] = phi->value(inputs[k], dual_cutoff);
    } catch (const std::exception& e) {
      err[k] = e.what();
    }
  }
  for (const auto& e : err)
    if (!e.empty()) throw std::runtime_error(e);
  return out;
}

CheckResult check_zero(const CochainPtr& phi, const std::vector<std::vector<int>>& inputs,
                       const Weight& dual_cutoff, const std::string& name) {
  CheckResult res;
  res.check = name;
  for_inputs(inputs, res, [&](const std::vector<int>& vs, CheckResult& r) {
    for (int w : phi->W().basis_upto(dual_cutoff)) {
      ++r.checked;
      RatFun f = phi->entry(vs, w);
      if (!f.is_zero()) {
        r.pass = false;
        r.witness = where(*phi, vs, w) + ": " + f.str() + " != 0";
        return;
      }
    }
  });
  return res;
}

CheckResult check_equal(const CochainPtr& a, const CochainPtr& b,
                        const std::vector<std::vector<int>>& inputs, const Weight& dual_cutoff,
                        const std::string& name) {
  CheckResult res;
  res.check = name;
  for_inputs(inputs, res, [&](const std::vector<int>& vs, CheckResult& r) {
    for (int w : a->W().basis_upto(dual_cutoff)) {
      ++r.checked;
      RatFun f = a->entry(vs, w), g = b->entry(vs, w);
      if (f != g) {
        r.pass = false;
        r.witness = where(*a, vs, w) + ": " + f.str() + " != " + g.str();
        return;
      }
    }
  });
  return res;
}

CheckResult check_L_minus1(const CochainPtr& phi, const std::vector<std::vector<int>>& inputs,
                           const Weight& dual_cutoff) {
  CheckResult res;
  res.check = "L(-1)-derivative";
  int n = phi->arity();
  if (n == 0) return res;
  const Space& V = phi->V();
  const Space& W = phi->W();
  for_inputs(inputs, res, [&](const std::vector<int>& vs, CheckResult& r) {
    for (int w : W.basis_upto(dual_cutoff)) {
      RatFun f = phi->entry(vs, w);
      // clause (i): d/dz_a Phi = Phi(.. L(-1) v_a ..)
      for (int a = 0; a < n; ++a) {
        if (V.weight(vs[a]) + 1 > V.cutoff()) continue;
        std::vector<SVec> in;
        for (int k = 0; k < n; ++k) in.push_back(k == a ? V.Lm1(vs[k]) : SVec{{vs[k], Scalar(1)}});
        ++r.checked;
        RatFun g = phi->entry(in, w);
        if (f.derivative(a) != g) {
          r.pass = false;
          r.witness = where(*phi, vs, w) + ", clause (i) slot " + std::to_string(a + 1) + ": d/dz = " +
                      f.derivative(a).str() + " but insertion gives " + g.str();
          return;
        }
      }
      // clause (ii): sum_a d/dz_a <w', Phi> = <w', L_W(-1) Phi>
      RatFun lhs(n);
      for (int a = 0; a < n; ++a) lhs += f.derivative(a);
      RatFun rhs(n);
      Weight below = W.weight(w) - 1;
      if (W.has_weight(below))
        for (int x : W.basis_at(below)) {
          auto lx = W.Lm1(x);
          auto it = lx.find(w);
          if (it != lx.end()) rhs += it->second * phi->entry(vs, x);
        }
      ++r.checked;
      if (lhs != rhs) {
        r.pass = false;
        r.witness = where(*phi, vs, w) + ", clause (ii): " + lhs.str() + " != " + rhs.str();
        return;
      }
    }
  });
  return res;
}

CheckResult check_L0(const CochainPtr& phi, const std::vector<std::vector<int>>& inputs,
                     const Weight& dual_cutoff) {
  if (!phi->W().semisimple())
    throw NonSemisimpleUnsupported("L(0)-conjugation check needs semisimple L(0) on the module");
  CheckResult res;
  res.check = "L(0)-conjugation";
  if (phi->arity() == 0) return res;
  for_inputs(inputs, res, [&](const std::vector<int>& vs, CheckResult& r) {
    Weight in = 0;
    for (int v : vs) in += phi->V().weight(v);
    for (int w : phi->W().basis_upto(dual_cutoff)) {
      ++r.checked;
      RatFun f = phi->entry(vs, w);
      if (f.is_zero()) continue;
      Weight want = phi->W().weight(w) - in;
      auto d = f.homogeneity_degree();
      if (!d || Weight(*d) != want) {
        r.pass = false;
        r.witness = where(*phi, vs, w) + ": " + f.str() + " is not homogeneous of degree " +
                    to_string(want);
        return;
      }
    }
  });
  return res;
}

bool ComposabilityCertificate::covers(const ComposabilityCertificate& lower) const {
  return pass() && lower.m <= m && dual_cutoff >= lower.dual_cutoff &&
         input_bound >= lower.input_bound && extra_cap == lower.extra_cap &&
         slot_extra == lower.slot_extra &&
         v_cutoff == lower.v_cutoff && w_cutoff == lower.w_cutoff;
}

std::string cochain_json(const CochainPtr& phi, const std::vector<std::vector<int>>& inputs,
                         const Weight& dual_cutoff) {
  nlohmann::ordered_json j;
  j["arity"] = phi->arity();
  j["kind"] = phi->kind();
  j["label"] = phi->label;
  j["dual_cutoff"] = to_string(dual_cutoff);
  auto& e = j["entries"] = nlohmann::ordered_json::array();
  for (const auto& vs : inputs) {
    auto f = phi->value(vs, dual_cutoff);
    for (const auto& [w, g] : f.entries) {
      nlohmann::ordered_json x;
      std::vector<std::string> in;
      for (int v : vs) in.push_back(phi->V().label(v));
      x["inputs"] = in;
      x["dual"] = phi->W().label(w);
      x["value"] = g.str();
      e.push_back(x);
    }
  }
  return j.dump(2);
}

}  // namespace vcoh
