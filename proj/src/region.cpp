#include "vcoh/region.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "vcoh/linalg.hpp"

namespace vcoh {

Region Region::total_order(const std::vector<int>& order) {
  int n = static_cast<int>(order.size());
  Region r;
  r.n = n;
  r.T.assign(n, std::vector<Scalar>(n, 0));
  std::string d;
  for (int k = 0; k < n; ++k) {
    r.T.at(order[k]).at(k) = 1;
    r.names.push_back("z" + std::to_string(order[k] + 1));
    d += (k ? ">" : "") + std::string("|z") + std::to_string(order[k] + 1) + "|";
  }
  r.desc = d + ">0";
  return r;
}

Region Region::associativity(int n, int j) {
  if (j < 0 || j + 1 >= n) throw std::invalid_argument("associativity region index");
  Region r;
  r.n = n;
  r.T.assign(n, std::vector<Scalar>(n, 0));
  auto pos = [&](int k) { return k < j ? k : k - 1; };
  for (int k = 0; k < n; ++k) {
    if (k == j) continue;
    r.T[k][pos(k)] = 1;
    r.names.push_back("z" + std::to_string(k + 1));
  }
  r.T[j][n - 1] = 1;
  r.T[j][pos(j + 1)] = 1;
  r.names.push_back("u");
  std::string a = std::to_string(j + 1), b = std::to_string(j + 2);
  r.desc = "|z" + b + "|>|z" + a + "-z" + b + "|>0";
  return r;
}

Region Region::linear(std::vector<std::vector<Scalar>> T, std::vector<std::string> names,
                      std::string desc) {
  Region r;
  r.n = static_cast<int>(T.size());
  r.T = std::move(T);
  r.names = std::move(names);
  r.desc = std::move(desc);
  return r;
}

std::vector<Scalar> Region::form(const std::vector<Scalar>& zcoef) const {
  int m = cols();
  std::vector<Scalar> y(m, 0);
  for (int i = 0; i < n; ++i) {
    if (sgn(zcoef[i]) == 0) continue;
    for (int j = 0; j < m; ++j) y[j] += zcoef[i] * T[i][j];
  }
  return y;
}

std::vector<std::vector<Scalar>> Region::inverse() const {
  if (cols() != n) throw std::invalid_argument("region transform is not square");
  std::vector<std::vector<Scalar>> a = T, inv(n, std::vector<Scalar>(n, 0));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) throw std::invalid_argument("region transform is singular");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Scalar s = 1 / a[c][c];
    for (int k = 0; k < n; ++k) {
      a[c][k] *= s;
      inv[c][k] *= s;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || sgn(a[r][c]) == 0) continue;
      Scalar f = a[r][c];
      for (int k = 0; k < n; ++k) {
        a[r][k] -= f * a[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

Window Window::tails(int m, const std::vector<long>& bounds) {
  Window w;
  for (int k = 0; k + 1 < m; ++k) {
    std::vector<int> c(m, 0);
    for (int j = k + 1; j < m; ++j) c[j] = 1;
    w.add(std::move(c), bounds.at(k));
  }
  return w;
}

Window Window::uniform(int m, long bound) { return tails(m, std::vector<long>(std::max(m - 1, 0), bound)); }

long Window::value(size_t k, const Mono& x) const {
  long s = 0;
  const auto& c = cons[k].c;
  for (size_t j = 0; j < c.size(); ++j) s += static_cast<long>(c[j]) * x[static_cast<int>(j)];
  return s;
}

bool Window::contains(const Mono& x) const {
  for (size_t k = 0; k < cons.size(); ++k)
    if (value(k, x) > cons[k].bound) return false;
  return true;
}

LaurentSlab LaurentSlab::restricted(const Window& w) const {
  LaurentSlab s;
  s.m = m;
  s.window = w;
  for (const auto& [x, c] : coeffs)
    if (w.contains(x)) s.coeffs.emplace(x, c);
  return s;
}

int PoleCaps::total() const {
  int s = 0;
  for (int e : pair) s += e;
  for (int e : origin) s += e;
  return s;
}

PoleCaps PoleCaps::of(const RatFun& f) {
  int n = f.nvars();
  PoleCaps c(n);
  for (int i = 0; i < n; ++i) {
    c.origin[i] = f.origin_exp(i);
    for (int j = i + 1; j < n; ++j) c.pair[i * n + j] = f.pair_exp(i, j);
  }
  return c;
}

const char* status_name(ReconStatus s) {
  switch (s) {
    case ReconStatus::Ok:
      return "ok";
    case ReconStatus::NoSolution:
      return "NoSolution";
    case ReconStatus::Underdetermined:
      return "Underdetermined";
  }
  return "?";
}

namespace {

struct Factor {
  int lead = 0;
  Scalar c;
  std::vector<std::pair<Mono, Scalar>> ratios;
  int e = 0;
};

long depth(const Mono& m, int n) {
  long d = 0;
  for (int j = 0; j < n; ++j) d += static_cast<long>(j) * m[j];
  return d;
}

Factor make_factor(const std::vector<Scalar>& y, int e, const Window& w) {
  Factor f;
  f.e = e;
  int n = static_cast<int>(y.size());
  f.lead = -1;
  for (int j = 0; j < n; ++j)
    if (sgn(y[j]) != 0) {
      f.lead = j;
      break;
    }
  if (f.lead < 0) throw std::invalid_argument("pole along a vanishing linear form");
  f.c = y[f.lead];
  for (int s = f.lead + 1; s < n; ++s) {
    if (sgn(y[s]) == 0) continue;
    Mono r = unit_mono(s) - unit_mono(f.lead);
    for (size_t k = 0; k < w.cons.size(); ++k)
      if (w.value(k, r) < 0)
        throw std::invalid_argument("window is not compatible with the region expansion");
    f.ratios.emplace_back(r, y[s] / f.c);
  }
  return f;
}

std::vector<Factor> factors_of(const Region& region, const std::vector<int>& pair,
                               const std::vector<int>& origin, const Window& w) {
  int n = region.n;
  std::vector<Factor> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int e = pair[i * n + j];
      if (!e) continue;
      std::vector<Scalar> z(n, 0);
      z[i] = 1;
      z[j] = -1;
      out.push_back(make_factor(region.form(z), e, w));
    }
  for (int i = 0; i < n; ++i) {
    if (!origin[i]) continue;
    std::vector<Scalar> z(n, 0);
    z[i] = 1;
    out.push_back(make_factor(region.form(z), origin[i], w));
  }
  return out;
}

// Y = H / (1 + X) on the window, by recursion in increasing depth
Terms divide_one(const Terms& h, const Factor& f, const Window& w, int n) {
  if (f.ratios.empty()) return h;
  std::unordered_set<Mono> seen;
  std::vector<Mono> order, stack;
  for (const auto& [m, c] : h)
    if (w.contains(m) && seen.insert(m).second) stack.push_back(m);
  while (!stack.empty()) {
    Mono m = stack.back();
    stack.pop_back();
    order.push_back(m);
    for (const auto& [r, a] : f.ratios) {
      Mono x = m + r;
      if (w.contains(x) && seen.insert(x).second) stack.push_back(x);
    }
  }
  std::sort(order.begin(), order.end(), [n](const Mono& a, const Mono& b) {
    long da = depth(a, n), db = depth(b, n);
    return da != db ? da < db : a < b;
  });
  std::unordered_map<Mono, Scalar> y;
  y.reserve(order.size());
  Terms out;
  for (const Mono& m : order) {
    Scalar v = 0;
    auto it = h.find(m);
    if (it != h.end()) v = it->second;
    for (const auto& [r, a] : f.ratios) {
      auto jt = y.find(m - r);
      if (jt != y.end()) v -= a * jt->second;
    }
    if (sgn(v) != 0) {
      y.emplace(m, v);
      out.emplace(m, v);
    }
  }
  return out;
}

// (1 + X) * S restricted to the window
Terms multiply_one(const Terms& s, const Factor& f, const Window& w) {
  Terms out;
  for (const auto& [m, c] : s) {
    if (!w.contains(m)) continue;
    add_to(out, m, c);
    for (const auto& [r, a] : f.ratios) {
      Mono x = m + r;
      if (w.contains(x)) add_to(out, x, a * c);
    }
  }
  return out;
}

// per-series-variable bound on numerator exponents implied by caps.zdeg
std::vector<int> numerator_box(const Region& region, const PoleCaps& caps, int degn) {
  int n = region.cols();
  std::vector<int> box(n, degn);
  if (caps.zdeg.empty()) return box;
  for (int k = 0; k < n; ++k) {
    long s = 0;
    bool bounded = true;
    for (int i = 0; i < region.n; ++i) {
      if (sgn(region.T[i][k]) == 0) continue;
      if (caps.zdeg[i] < 0) bounded = false;
      s += std::max(caps.zdeg[i], 0);
    }
    if (bounded) box[k] = static_cast<int>(std::min<long>(s, degn));
  }
  return box;
}

// max of c.x over x >= 0, |x| = total, x <= box
long box_max(const std::vector<int>& c, const std::vector<int>& box, int total) {
  std::vector<int> idx(c.size());
  for (size_t j = 0; j < c.size(); ++j) idx[j] = static_cast<int>(j);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return c[a] > c[b]; });
  long left = total, s = 0;
  for (int j : idx) {
    long take = std::min<long>(left, box[j]);
    s += take * c[j];
    left -= take;
  }
  return s;
}

Scalar power(const Scalar& c, int e) {
  Scalar r = 1;
  for (int k = 0; k < e; ++k) r *= c;
  return r;
}

}  // namespace

LaurentSlab expand(const RatFun& f, const Region& region, const Window& window) {
  int n = region.cols();
  if (f.nvars() != region.n) throw std::invalid_argument("expand: variable count mismatch");
  PoleCaps caps = PoleCaps::of(f);
  auto fac = factors_of(region, caps.pair, caps.origin, window);
  Poly ny = f.numerator().substitute_linear(region.T, n);
  Mono shift;
  Scalar scale = 1;
  for (const auto& x : fac) {
    shift.set(x.lead, shift[x.lead] - x.e);
    scale /= power(x.c, x.e);
  }
  Terms h;
  for (const auto& [m, c] : ny.terms()) {
    Mono x = m + shift;
    if (window.contains(x)) h.emplace(x, c * scale);
  }
  for (const auto& x : fac)
    for (int k = 0; k < x.e; ++k) h = divide_one(h, x, window, n);
  LaurentSlab s;
  s.m = n;
  s.window = window;
  s.coeffs = std::move(h);
  return s;
}

LaurentSlab expand(const RatFun& f, const Region& region, int order) {
  return expand(f, region, Window::uniform(region.cols(), order));
}

ReconResult try_reconstruct(const LaurentSlab& slab, const Region& region, const PoleCaps& caps,
                            std::optional<int> degree) {
  int n = region.n;
  ReconResult res;
  res.f = RatFun(n);
  if (!degree) {
    std::map<int, Terms> parts;
    for (const auto& [m, c] : slab.coeffs)
      if (slab.window.contains(m)) parts[m.total()].emplace(m, c);
    for (auto& [d, t] : parts) {
      LaurentSlab s;
      s.m = slab.m;
      s.window = slab.window;
      s.coeffs = std::move(t);
      ReconResult r = try_reconstruct(s, region, caps, d);
      if (!r.ok()) return r;
      res.f += r.f;
    }
    return res;
  }
  auto fac = factors_of(region, caps.pair, caps.origin, slab.window);
  Terms p;
  for (const auto& [m, c] : slab.coeffs)
    if (slab.window.contains(m)) p.emplace(m, c);
  for (const auto& x : fac)
    for (int k = 0; k < x.e; ++k) p = multiply_one(p, x, slab.window);
  Mono mu;
  Scalar scale = 1;
  for (const auto& x : fac) {
    mu.set(x.lead, mu[x.lead] + x.e);
    scale *= power(x.c, x.e);
  }
  int degn = *degree + caps.total();
  if (degn < 0) {
    if (p.empty()) return res;
    res.status = ReconStatus::NoSolution;
    res.detail = "nonzero slab for a function of negative numerator degree";
    return res;
  }
  auto box = numerator_box(region, caps, degn);
  for (size_t k = 0; k < slab.window.cons.size(); ++k) {
    const auto& con = slab.window.cons[k];
    long need = box_max(con.c, box, degn);
    long reach = con.bound + slab.window.value(k, mu);
    if (need > reach) {
      res.status = ReconStatus::Underdetermined;
      res.detail = "window constraint " + std::to_string(k) + " reaches " + std::to_string(reach) +
                   " but numerator degree " + std::to_string(degn) + " needs " +
                   std::to_string(need);
      return res;
    }
  }
  Poly ny(n);
  for (const auto& [m, c] : p) {
    Mono x = m + mu;
    bool inside = x.nonnegative() && x.total() == degn;
    for (int j = 0; j < n && inside; ++j) inside = x[j] <= box[j];
    if (!inside) {
      res.status = ReconStatus::NoSolution;
      std::string e;
      for (int j = 0; j < n; ++j) e += (j ? "," : "") + std::to_string(x[j]);
      res.detail = "numerator coefficient at exponent (" + e + ") outside the capped support";
      return res;
    }
    ny.add(x, c * scale);
  }
  Poly nz = ny.substitute_linear(region.inverse(), n);
  res.f = RatFun(std::move(nz), caps.pair, caps.origin);
  return res;
}

RatFun reconstruct(const LaurentSlab& slab, const Region& region, const PoleCaps& caps,
                   std::optional<int> degree) {
  ReconResult r = try_reconstruct(slab, region, caps, degree);
  if (!r.ok()) throw ReconstructError(r.status, r.detail);
  return r.f;
}

std::vector<Mono> monomials_of_degree(int n, int d) {
  std::vector<Mono> out;
  if (d < 0) return out;
  Mono cur;
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      cur.set(i, left);
      out.push_back(cur);
      return;
    }
    for (int k = left; k >= 0; --k) {
      cur.set(i, k);
      rec(i + 1, left - k);
    }
  };
  rec(0, d);
  return out;
}

std::vector<ReconResult> reconstruct_joint(const std::vector<Region>& regions,
                                           const std::vector<Window>& windows,
                                           const PoleCaps& caps, int degree,
                                           const std::vector<std::vector<Terms>>& rhs_sets) {
  int n = regions.at(0).n;
  int degn = degree + caps.total();
  auto mons = monomials_of_degree(n, degn);
  std::map<std::pair<int, Mono>, int> rowid;
  auto row = [&](int reg, const Mono& m) {
    auto [it, fresh] = rowid.emplace(std::make_pair(reg, m), static_cast<int>(rowid.size()));
    return it->second;
  };
  LinearMapMatrix a(0, static_cast<int>(mons.size()));
  for (size_t k = 0; k < mons.size(); ++k) {
    RatFun basis(Poly::monomial(n, mons[k]), caps.pair, caps.origin);
    for (size_t r = 0; r < regions.size(); ++r) {
      LaurentSlab s = expand(basis, regions[r], windows[r]);
      for (const auto& [m, c] : s.coeffs) a.columns[k][row(static_cast<int>(r), m)] = c;
    }
  }
  std::vector<SVec> rhs;
  for (const auto& set : rhs_sets) {
    SVec b;
    for (size_t r = 0; r < set.size(); ++r)
      for (const auto& [m, c] : set[r])
        if (windows[r].contains(m) && sgn(c) != 0) b[row(static_cast<int>(r), m)] = c;
    rhs.push_back(std::move(b));
  }
  a.rows = static_cast<int>(rowid.size());
  SolveResult sol = solve_columns(a, rhs);
  std::vector<ReconResult> out;
  for (const auto& x : sol.solutions) {
    ReconResult r;
    r.f = RatFun(n);
    if (!x) {
      r.status = ReconStatus::NoSolution;
      r.detail = "no function within the caps matches all regions";
    } else {
      Poly num(n);
      for (size_t k = 0; k < mons.size(); ++k) num.add(mons[k], (*x)[k]);
      r.f = RatFun(std::move(num), caps.pair, caps.origin);
      if (!sol.unique) {
        r.status = ReconStatus::Underdetermined;
        r.detail = "rank " + std::to_string(sol.rank) + " of " + std::to_string(mons.size());
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace vcoh
