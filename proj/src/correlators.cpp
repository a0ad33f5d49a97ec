#include "vcoh/correlators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace vcoh {

bool WValuedRatFun::operator==(const WValuedRatFun& o) const {
  if (n != o.n) return false;
  for (const auto& [k, f] : entries) {
    auto it = o.entries.find(k);
    if (it == o.entries.end() ? !f.is_zero() : it->second != f) return false;
  }
  for (const auto& [k, f] : o.entries)
    if (!entries.count(k) && !f.is_zero()) return false;
  return true;
}

bool WValuedRatFun::has_origin_poles() const {
  for (const auto& [k, f] : entries)
    if (f.has_origin_poles()) return true;
  return false;
}

WValuedRatFun WValuedRatFun::relabel(const std::vector<int>& map, int m) const {
  WValuedRatFun out = *this;
  out.n = m;
  for (auto& [k, f] : out.entries) f = f.relabel(map, m);
  return out;
}

int Chain::nz() const {
  int n = 0;
  for (const auto& it : items) n += it.sub_vec >= 0 ? 2 : 1;
  return n;
}

bool Chain::terminal_in_module() const { return !items.empty() && items.back().kind == ChainItem::YW; }

std::string describe(const Space& S, const std::vector<int>& ids) {
  std::string s;
  for (size_t k = 0; k < ids.size(); ++k) s += (k ? "," : "") + S.label(ids[k]);
  return s;
}

namespace {

struct Point {
  bool module;
  int id;
};

int point_cap(const Space& V, const Space& W, const Point& a, const Point& b) {
  if (a.module && b.module) throw std::invalid_argument("two module vectors in one product");
  if (!a.module && !b.module) return V.pole_order(a.id, b.id);
  return a.module ? W.pole_order(b.id, a.id) : W.pole_order(a.id, b.id);
}

std::vector<Point> chain_points(const Chain& c) {
  std::vector<Point> pts(c.nz(), Point{false, -1});
  for (const auto& it : c.items) {
    if (it.pos < 0 || it.pos >= c.nz() || pts[it.pos].id >= 0)
      throw std::invalid_argument("chain positions must be a permutation of 0..n-1");
    pts[it.pos] = {it.kind == ChainItem::Skew, it.vec};
    if (it.sub_vec >= 0) {
      if (it.sub_pos < 0 || it.sub_pos >= c.nz() || pts[it.sub_pos].id >= 0)
        throw std::invalid_argument("chain positions must be a permutation of 0..n-1");
      pts[it.sub_pos] = {false, it.sub_vec};
    }
  }
  return pts;
}

Region chain_region(const Chain& c) {
  int n = c.nz(), k = 0, u = static_cast<int>(c.items.size());
  std::vector<std::vector<Scalar>> T(n, std::vector<Scalar>(n, 0));
  std::vector<std::string> names(n);
  std::string desc;
  bool iter = false;
  for (const auto& it : c.items) {
    T[it.pos][k] = 1;
    names[k] = "z" + std::to_string(it.pos + 1);
    desc += (k ? ">" : "") + ("|" + names[k] + "|");
    if (it.sub_vec >= 0) {
      if (iter) throw std::invalid_argument("at most one iterate per chain");
      iter = true;
      T[it.sub_pos][k] = 1;
      T[it.sub_pos][u] = 1;
      names[u] = "z" + std::to_string(it.sub_pos + 1) + "-" + names[k];
    }
    ++k;
  }
  desc += ">0";
  if (iter) desc += ", " + names[u] + " innermost";
  return Region::linear(std::move(T), std::move(names), desc);
}

Weight chain_base(const Chain& c, const Space& V, const Space& W) {
  Weight b = c.terminal_in_module() ? W.weight(c.terminal) : V.weight(c.terminal);
  for (const auto& it : c.items) {
    b += it.kind == ChainItem::Skew ? W.weight(it.vec) : V.weight(it.vec);
    if (it.sub_vec >= 0) b += V.weight(it.sub_vec);
  }
  return b;
}

Series chain_series(const Chain& c, const Space& V, const Space& W, const Weight& lambda) {
  int m = c.nz();
  bool in_w = c.terminal_in_module();
  Series x = basis_series(in_w ? W : V, c.terminal, m);
  int u = static_cast<int>(c.items.size());
  for (int k = static_cast<int>(c.items.size()) - 1; k >= 0; --k) {
    const auto& it = c.items[k];
    if (it.kind == ChainItem::Skew) {
      if (in_w) throw std::invalid_argument("skew vertex must act on a V-valued series");
      x = skew(W, basis_series(W, it.vec, m), k, x, lambda);
      in_w = true;
      continue;
    }
    if ((it.kind == ChainItem::YW) != in_w)
      throw std::invalid_argument("vertex operator kind does not match the space it acts on");
    Series arg = basis_series(V, it.vec, m);
    if (it.sub_vec >= 0) arg = vertex(V, basis_series(V, it.sub_vec, m), u, arg, lambda);
    x = vertex(in_w ? W : V, arg, k, x, lambda);
  }
  if (!in_w) throw std::invalid_argument("chain must end in the module");
  return x;
}

std::optional<int> integral(const Weight& w) {
  if (!is_integer(w)) return std::nullopt;
  return static_cast<int>(to_long(w));
}

}  // namespace

PoleCaps chain_caps(const Chain& chain, const Space& V, const Space& W) {
  auto pts = chain_points(chain);
  int n = chain.nz();
  Point term{chain.terminal_in_module(), chain.terminal};
  PoleCaps caps(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) caps(a, b) = point_cap(V, W, pts[a], pts[b]);
    caps.origin[a] = point_cap(V, W, pts[a], term);
  }
  return caps;
}

ChainResult evaluate_chain(const Chain& chain, const Space& V, const Space& W,
                           const EngineOptions& opts, const std::vector<int>* only) {
  if (chain.items.empty()) throw std::invalid_argument("empty chain");
  if (chain.nz() > kMaxVars) throw std::invalid_argument("too many variables");
  ChainResult out;
  out.region = chain_region(chain);
  PoleCaps caps = chain_caps(chain, V, W);
  auto pts = chain_points(chain);
  Weight base = chain_base(chain, V, W);
  std::vector<int> targets = only ? *only : W.basis_upto(opts.dual_cutoff);
  long maxdeg = 0;
  for (int t : targets) {
    Weight d = W.weight(t) - base;
    maxdeg = std::max(maxdeg, std::abs(floor_weight(d)) + 1);
  }
  // depth per variable: caps meeting that variable plus |degree| plus 2
  long capv = 0;
  for (int a = 0; a < chain.nz(); ++a) {
    long c = caps.origin[a];
    for (int b = 0; b < chain.nz(); ++b)
      if (b != a) c += caps(a, b);
    capv = std::max(capv, c);
  }
  long d0 = capv + maxdeg + 2;
  Weight floor_w = std::max(base, opts.dual_cutoff);
  std::string last;
  for (int attempt = 0; attempt <= opts.retry_cap; ++attempt) {
    long depth = d0 << attempt;
    Weight lambda = std::min(W.cutoff(), Weight(floor_w + depth));
    bool at_cap = lambda == W.cutoff();
    Series x = chain_series(chain, V, W, lambda);
    auto pd = pair_dual(x, opts.dual_cutoff);
    bool under = false;
    out.entries.clear();
    for (int t : targets) {
      auto deg = integral(W.weight(t) - base);
      if (!deg) continue;
      LaurentSlab slab;
      slab.m = chain.nz();
      slab.window = x.win;
      auto it = pd.find(t);
      if (it != pd.end()) slab.coeffs = it->second;
      PoleCaps cz = caps;
      cz.zdeg.assign(chain.nz(), -1);
      for (int a = 0; a < chain.nz(); ++a) {
        if (pts[a].module) continue;
        long d = floor_weight(W.weight(t) - V.weight(pts[a].id) - W.min_weight()) + cz.origin[a];
        for (int b = 0; b < chain.nz(); ++b)
          if (b != a) d += cz(a, b);
        cz.zdeg[a] = static_cast<int>(std::max(d, 0L));
      }
      ReconResult r = try_reconstruct(slab, out.region, cz, *deg);
      if (r.status == ReconStatus::NoSolution)
        throw ReconstructError(r.status, "no rational function for <" + W.label(t) + ", ...> in " +
                                             out.region.desc + ": " + r.detail);
      if (r.status == ReconStatus::Underdetermined) {
        under = true;
        last = "<" + W.label(t) + ", ...>: " + r.detail;
        break;
      }
      if (!r.f.is_zero()) out.entries.emplace(t, r.f);
    }
    out.depth = static_cast<int>(depth);
    out.lambda = lambda;
    if (!under) return out;
    if (at_cap) break;
  }
  throw ReconstructError(ReconStatus::Underdetermined,
                         "slab still underdetermined at weight cap " + to_string(out.lambda) +
                             " (cutoff " + to_string(W.cutoff()) + "); " + last);
}

RatFun correlator(const Space& V, const Space& W, int wdual, const std::vector<int>& vs, int w,
                  const EngineOptions& opts) {
  Chain c;
  for (size_t k = 0; k < vs.size(); ++k) c.items.push_back({ChainItem::YW, vs[k], int(k)});
  c.terminal = w;
  std::vector<int> only{wdual};
  auto r = evaluate_chain(c, V, W, opts, &only);
  auto it = r.entries.find(wdual);
  return it == r.entries.end() ? RatFun(c.nz()) : it->second;
}

bool vacuum_like(const Space& W, int w) {
  const Space& V = W.algebra();
  for (int u = 0; u < V.size(); ++u)
    if (W.pole_order(u, w) > 0) return false;
  return true;
}

static WValuedRatFun wrap(int n, const EngineOptions& opts, std::map<int, RatFun> e) {
  WValuedRatFun f;
  f.n = n;
  f.dual_cutoff = opts.dual_cutoff;
  f.entries = std::move(e);
  return f;
}

WValuedRatFun e_n_w(const Space& V, const Space& W, const std::vector<int>& vs, int w,
                    const EngineOptions& opts, bool require_vacuum_like) {
  if (require_vacuum_like && !vacuum_like(W, w))
    throw NotVacuumLike("Y_W(v, x)" + W.label(w) + " has negative powers of x");
  Chain c;
  for (size_t k = 0; k < vs.size(); ++k) c.items.push_back({ChainItem::YW, vs[k], int(k)});
  c.terminal = w;
  auto f = wrap(c.nz(), opts, evaluate_chain(c, V, W, opts).entries);
  f.poles_at_origin_allowed = !require_vacuum_like;
  return f;
}

WValuedRatFun e_n1_w(const Space& V, const Space& W, const std::vector<int>& vs, int w,
                     const EngineOptions& opts) {
  Chain c;
  int n = static_cast<int>(vs.size());
  for (int k = 0; k < n; ++k) c.items.push_back({ChainItem::YW, vs[k], k});
  c.items.push_back({ChainItem::Skew, w, n});
  c.terminal = V.vacuum();
  auto f = wrap(n + 1, opts, evaluate_chain(c, V, W, opts).entries);
  f.poles_at_origin_allowed = false;
  return f;
}

WValuedRatFun e_w1n_wv(const Space& V, const Space& W, int w, const std::vector<int>& vs,
                       const EngineOptions& opts) {
  Chain c;
  int n = static_cast<int>(vs.size());
  c.items.push_back({ChainItem::Skew, w, 0});
  for (int k = 0; k < n; ++k) c.items.push_back({ChainItem::YV, vs[k], k + 1});
  c.terminal = V.vacuum();
  auto f = wrap(n + 1, opts, evaluate_chain(c, V, W, opts).entries);
  f.poles_at_origin_allowed = false;
  return f;
}

namespace {

Verdict compare(const std::string& check, const Space& W, const std::map<int, RatFun>& a,
                const std::map<int, RatFun>& b, const std::string& inputs,
                const std::string& trunc) {
  Verdict v;
  v.check = check;
  v.truncation = trunc;
  std::set<int> keys;
  for (const auto& [k, f] : a) keys.insert(k);
  for (const auto& [k, f] : b) keys.insert(k);
  for (int k : keys) {
    ++v.compared;
    auto ia = a.find(k);
    auto ib = b.find(k);
    RatFun fa = ia == a.end() ? RatFun(ib->second.nvars()) : ia->second;
    RatFun fb = ib == b.end() ? RatFun(ia->second.nvars()) : ib->second;
    if (fa != fb) {
      v.pass = false;
      v.witness = inputs + "; w'=" + W.label(k) + "'; lhs=" + fa.str() + "; rhs=" + fb.str();
      return v;
    }
  }
  return v;
}

std::string trunc_text(const ChainResult& a, const ChainResult& b, const EngineOptions& o) {
  return "dual_cutoff=" + to_string(o.dual_cutoff) + " depth=" + std::to_string(a.depth) + "/" +
         std::to_string(b.depth) + " lambda=" + to_string(a.lambda) + "/" + to_string(b.lambda);
}

Chain plain_chain(const std::vector<int>& vs, const std::vector<int>& order, int w) {
  Chain c;
  for (int p : order) c.items.push_back({ChainItem::YW, vs[p], p});
  c.terminal = w;
  return c;
}

std::vector<int> iota(int n) {
  std::vector<int> v(n);
  for (int k = 0; k < n; ++k) v[k] = k;
  return v;
}

Chain mixed_chain(int i, const std::vector<int>& vs, int w, int v, const std::vector<int>& order) {
  Chain c;
  for (int p : order) {
    if (p == i)
      c.items.push_back({ChainItem::Skew, w, i});
    else
      c.items.push_back({p < i ? ChainItem::YW : ChainItem::YV, vs[p], p});
  }
  c.terminal = v;
  return c;
}

}  // namespace

Verdict verify_commutativity(const Space& V, const Space& W, const std::vector<int>& vs, int w,
                             const std::vector<int>& sigma, const EngineOptions& opts) {
  int n = static_cast<int>(vs.size());
  if (static_cast<int>(sigma.size()) != n) throw std::invalid_argument("permutation size");
  auto a = evaluate_chain(plain_chain(vs, iota(n), w), V, W, opts);
  auto b = evaluate_chain(plain_chain(vs, sigma, w), V, W, opts);
  std::string s;
  for (int k = 0; k < n; ++k) s += (k ? "," : "") + std::to_string(sigma[k] + 1);
  return compare("commutativity", W, a.entries, b.entries,
                 "v=(" + describe(V, vs) + ") w=" + W.label(w) + " sigma=(" + s + ")",
                 trunc_text(a, b, opts));
}

Verdict verify_associativity(const Space& V, const Space& W, int i, const std::vector<int>& vs,
                             int w, const EngineOptions& opts) {
  int n = static_cast<int>(vs.size());
  if (i < 0 || i + 1 >= n) throw std::invalid_argument("associativity index out of range");
  auto a = evaluate_chain(plain_chain(vs, iota(n), w), V, W, opts);
  Chain c;
  for (int p = 0; p < n; ++p) {
    if (p == i) continue;
    ChainItem it{ChainItem::YW, vs[p], p};
    if (p == i + 1) {
      it.sub_vec = vs[i];
      it.sub_pos = i;
    }
    c.items.push_back(it);
  }
  c.terminal = w;
  auto b = evaluate_chain(c, V, W, opts);
  return compare("associativity", W, a.entries, b.entries,
                 "v=(" + describe(V, vs) + ") w=" + W.label(w) + " i=" + std::to_string(i + 1),
                 trunc_text(a, b, opts));
}

Verdict verify_mixed_commutativity(const Space& V, const Space& W, int i,
                                   const std::vector<int>& vs, int w, int v,
                                   const std::vector<int>& sigma, const EngineOptions& opts) {
  int n = static_cast<int>(vs.size());
  if (static_cast<int>(sigma.size()) != n || sigma[i] != i)
    throw std::invalid_argument("permutation must fix the skew slot");
  for (int k = 0; k < n; ++k)
    if ((k < i) != (sigma[k] < i)) throw std::invalid_argument("permutation must act within each side");
  auto a = evaluate_chain(mixed_chain(i, vs, w, v, iota(n)), V, W, opts);
  auto b = evaluate_chain(mixed_chain(i, vs, w, v, sigma), V, W, opts);
  std::string s;
  for (int k = 0; k < n; ++k) s += (k ? "," : "") + std::to_string(sigma[k] + 1);
  return compare("mixed commutativity", W, a.entries, b.entries,
                 "v=(" + describe(V, vs) + ") skew at " + std::to_string(i + 1) + " w=" +
                     W.label(w) + " terminal=" + V.label(v) + " sigma=(" + s + ")",
                 trunc_text(a, b, opts));
}

Verdict verify_mixed_associativity(const Space& V, const Space& W, int i, int j,
                                   const std::vector<int>& vs, int w, int v,
                                   const EngineOptions& opts) {
  int n = static_cast<int>(vs.size());
  if (j < 0 || j + 1 >= n || j == i || j + 1 == i)
    throw std::invalid_argument("iterate must avoid the skew slot");
  auto a = evaluate_chain(mixed_chain(i, vs, w, v, iota(n)), V, W, opts);
  Chain c = mixed_chain(i, vs, w, v, iota(n));
  c.items.erase(c.items.begin() + j);
  c.items[j].sub_vec = vs[j];
  c.items[j].sub_pos = j;
  auto b = evaluate_chain(c, V, W, opts);
  return compare("mixed associativity", W, a.entries, b.entries,
                 "v=(" + describe(V, vs) + ") skew at " + std::to_string(i + 1) + " w=" +
                     W.label(w) + " terminal=" + V.label(v) + " j=" + std::to_string(j + 1),
                 trunc_text(a, b, opts));
}

Verdict verify_wv_vw(const Space& V, const Space& W, const std::vector<int>& vs, int w,
                     const EngineOptions& opts) {
  int n = static_cast<int>(vs.size());
  auto a = e_w1n_wv(V, W, w, vs, opts);
  auto b = e_n1_w(V, W, vs, w, opts);
  std::vector<int> map(n + 1);
  map[0] = n;
  for (int k = 1; k <= n; ++k) map[k] = k - 1;
  auto ar = a.relabel(map, n + 1);
  return compare("wv=vw", W, ar.entries, b.entries,
                 "w=" + W.label(w) + " v=(" + describe(V, vs) + ")",
                 "dual_cutoff=" + to_string(opts.dual_cutoff));
}

Verdict verify_zeta_specialization(const Space& V, const Space& W, const std::vector<int>& vs,
                                   int w, const EngineOptions& opts) {
  int n = static_cast<int>(vs.size());
  auto a = e_n1_w(V, W, vs, w, opts);
  auto b = e_n_w(V, W, vs, w, opts, false);
  std::map<int, RatFun> sa;
  for (const auto& [k, f] : a.entries) {
    RatFun g = f.specialize_zero(n);
    if (!g.is_zero()) sa.emplace(k, g);
  }
  return compare("zeta=0", W, sa, b.entries, "v=(" + describe(V, vs) + ") w=" + W.label(w),
                 "dual_cutoff=" + to_string(opts.dual_cutoff));
}

Verdict verify_factorization(const Space& V, const Space& W,
                             const std::vector<std::vector<int>>& groups, int w,
                             const EngineOptions& opts) {
  int g = static_cast<int>(groups.size());
  std::vector<int> flat, group_of;
  for (int i = 0; i < g; ++i) {
    if (groups[i].empty()) throw std::invalid_argument("factorization groups must be nonempty");
    for (int v : groups[i]) {
      flat.push_back(v);
      group_of.push_back(i);
    }
  }
  int N = static_cast<int>(flat.size()), m = g + N;
  if (m > kMaxVars) throw std::invalid_argument("too many variables for factorization");
  Verdict out;
  out.check = "factorization";
  std::string inputs = "groups=";
  for (int i = 0; i < g; ++i) inputs += "(" + describe(V, groups[i]) + ")";
  inputs += " w=" + W.label(w);

  auto F = e_n1_w(V, W, flat, w, opts);
  auto F0 = e_n_w(V, W, flat, w, opts, false);

  Weight base = W.weight(w);
  for (int v : flat) base += V.weight(v);
  Weight lambda = std::min(W.cutoff(), Weight(std::max(base, opts.dual_cutoff) + 2));
  Weight R = lambda;

  auto group_series = [&](const Space& S, int i, int start, Series x) {
    int first = 0;
    for (int k = 0; k < N; ++k)
      if (group_of[k] == i) {
        first = k;
        break;
      }
    for (int p = static_cast<int>(groups[i].size()) - 1; p >= 0; --p)
      x = vertex(S, basis_series(V, groups[i][p], m), start + first + p, x, lambda);
    return truncate(x, R);
  };
  Series x = group_series(W, g - 1, g, basis_series(W, w, m));
  x = translate(W, x, g - 1, lambda);
  for (int i = g - 2; i >= 0; --i) {
    Series psi = group_series(V, i, g, basis_series(V, V.vacuum(), m));
    x = vertex(W, psi, i, x, lambda);
  }
  auto pd = pair_dual(x, opts.dual_cutoff);

  std::vector<std::vector<Scalar>> T(N + 1, std::vector<Scalar>(m, 0)), T0(N, std::vector<Scalar>(m, 0));
  for (int k = 0; k < N; ++k) {
    T[k][group_of[k]] = 1;
    T[k][g + k] = 1;
    if (group_of[k] != g - 1) T0[k][group_of[k]] = 1;
    T0[k][g + k] = 1;
  }
  T[N][g - 1] = 1;
  Region shifted = Region::linear(T, {}, "|z0_1|>..>|z0_g|>|z^(i)_p|");
  Region shifted0 = Region::linear(T0, {}, "z0_g=0");

  for (int t : W.basis_upto(opts.dual_cutoff)) {
    Terms lhs;
    if (auto it = pd.find(t); it != pd.end())
      for (const auto& [mo, c] : it->second)
        if (x.win.contains(mo)) lhs.emplace(mo, c);
    Terms rhs, rhs0;
    if (auto it = F.entries.find(t); it != F.entries.end()) rhs = expand(it->second, shifted, x.win).coeffs;
    if (auto it = F0.entries.find(t); it != F0.entries.end())
      rhs0 = expand(it->second, shifted0, x.win).coeffs;
    std::set<Mono> keys;
    for (const auto& [mo, c] : lhs) keys.insert(mo);
    for (const auto& [mo, c] : rhs) keys.insert(mo);
    for (const auto& [mo, c] : rhs0) keys.insert(mo);
    for (const Mono& mo : keys) {
      auto get = [&](const Terms& s) {
        auto it = s.find(mo);
        return it == s.end() ? Scalar(0) : it->second;
      };
      Scalar a = get(lhs), b = get(rhs);
      ++out.compared;
      bool ok = a == b;
      if (ok && mo[g - 1] == 0) {
        ++out.compared;
        ok = a == get(rhs0);
        b = get(rhs0);
      }
      if (!ok) {
        out.pass = false;
        std::string e;
        for (int j = 0; j < m; ++j) e += (j ? "," : "") + std::to_string(mo[j]);
        out.witness = inputs + "; w'=" + W.label(t) + "'; exponent (" + e + "): partial sum " +
                      to_string(a) + " vs expansion " + to_string(b);
        return out;
      }
    }
  }
  out.truncation = "R=" + to_string(R) + " lambda=" + to_string(lambda) +
                   " dual_cutoff=" + to_string(opts.dual_cutoff);
  return out;
}

}  // namespace vcoh
