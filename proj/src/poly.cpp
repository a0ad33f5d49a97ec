#include "vcoh/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace vcoh {

void Mono::set(int i, int v) {
  if (v < -127 || v > 127) throw std::overflow_error("monomial exponent out of range");
  e[i] = static_cast<int8_t>(v);
}

Mono operator+(const Mono& a, const Mono& b) {
  Mono r;
  for (int i = 0; i < kMaxVars; ++i) r.set(i, a.e[i] + b.e[i]);
  return r;
}

Mono operator-(const Mono& a, const Mono& b) {
  Mono r;
  for (int i = 0; i < kMaxVars; ++i) r.set(i, a.e[i] - b.e[i]);
  return r;
}

Mono unit_mono(int i, int power) {
  Mono m;
  m.set(i, power);
  return m;
}

void add_to(Terms& t, const Mono& m, const Scalar& c) {
  if (sgn(c) == 0) return;
  auto it = t.find(m);
  if (it == t.end()) {
    t.emplace(m, c);
  } else {
    it->second += c;
    if (sgn(it->second) == 0) t.erase(it);
  }
}

Poly::Poly(int n, const Scalar& c) : n_(n) {
  if (sgn(c) != 0) t_.emplace(Mono{}, c);
}

Poly Poly::var(int n, int i) { return monomial(n, unit_mono(i)); }

Poly Poly::monomial(int n, const Mono& m, const Scalar& c) {
  Poly p(n);
  p.add(m, c);
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [m, c] : o.t_) add_to(t_, m, c);
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  Poly r(std::max(n_, o.n_));
  for (const auto& [a, x] : t_)
    for (const auto& [b, y] : o.t_) add_to(r.t_, a + b, x * y);
  return r;
}

Poly& Poly::operator*=(const Scalar& s) {
  if (sgn(s) == 0) {
    t_.clear();
    return *this;
  }
  for (auto& [m, c] : t_) c *= s;
  return *this;
}

Poly operator*(const Scalar& s, const Poly& p) {
  Poly r = p;
  r *= s;
  return r;
}

Poly Poly::pow(int k) const {
  Poly r(n_, 1);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

int Poly::min_degree() const {
  if (t_.empty()) throw std::logic_error("degree of zero polynomial");
  int d = t_.begin()->first.total();
  for (const auto& [m, c] : t_) d = std::min(d, m.total());
  return d;
}

int Poly::max_degree() const {
  if (t_.empty()) throw std::logic_error("degree of zero polynomial");
  int d = t_.begin()->first.total();
  for (const auto& [m, c] : t_) d = std::max(d, m.total());
  return d;
}

int Poly::min_exponent(int i) const {
  if (t_.empty()) throw std::logic_error("exponent of zero polynomial");
  int d = t_.begin()->first[i];
  for (const auto& [m, c] : t_) d = std::min(d, m[i]);
  return d;
}

Poly Poly::substitute_linear(const std::vector<std::vector<Scalar>>& rows, int m) const {
  std::vector<Poly> lin(n_);
  for (int i = 0; i < n_; ++i) {
    lin[i] = Poly(m);
    for (int j = 0; j < m; ++j) lin[i].add(unit_mono(j), rows[i][j]);
  }
  std::vector<std::vector<Poly>> pw(n_);
  auto power = [&](int i, int k) -> const Poly& {
    auto& v = pw[i];
    if (v.empty()) v.emplace_back(m, Scalar(1));
    while (static_cast<int>(v.size()) <= k) v.push_back(v.back() * lin[i]);
    return v[k];
  };
  Poly r(m);
  for (const auto& [mono, c] : t_) {
    if (!mono.nonnegative()) throw std::invalid_argument("substitute_linear needs a polynomial");
    Poly term(m, c);
    for (int i = 0; i < n_; ++i)
      if (mono[i] > 0) term = term * power(i, mono[i]);
    r += term;
  }
  return r;
}

Poly Poly::relabel(const std::vector<int>& map, int m) const {
  Poly r(m);
  for (const auto& [mono, c] : t_) {
    Mono out;
    bool zero = false;
    for (int i = 0; i < n_; ++i) {
      if (mono[i] == 0) continue;
      if (map[i] < 0) {
        if (mono[i] < 0) throw std::invalid_argument("relabel: negative power sent to zero");
        zero = true;
        break;
      }
      out.set(map[i], out[map[i]] + mono[i]);
    }
    if (!zero) r.add(out, c);
  }
  return r;
}

Poly Poly::derivative(int i) const {
  Poly r(n_);
  for (const auto& [mono, c] : t_) {
    if (mono[i] == 0) continue;
    Mono d = mono;
    d.set(i, mono[i] - 1);
    r.add(d, c * mono[i]);
  }
  return r;
}

Poly Poly::shift(const Mono& s) const {
  Poly r(n_);
  for (const auto& [mono, c] : t_) r.t_.emplace(mono + s, c);
  return r;
}

Scalar Poly::eval(const std::vector<Scalar>& pt) const {
  Scalar s = 0;
  for (const auto& [mono, c] : t_) {
    Scalar x = c;
    for (int i = 0; i < n_; ++i) {
      int k = mono[i];
      if (k < 0) throw std::invalid_argument("eval needs a polynomial");
      for (int j = 0; j < k; ++j) x *= pt[i];
    }
    s += x;
  }
  return s;
}

bool Poly::divide_pair(int i, int j, Poly& q) const {
  // synthetic division by (z_i - z_j) in the variable z_i
  std::map<int, Terms, std::greater<int>> by;  // z_i power -> coefficient
  for (const auto& [mono, c] : t_) {
    if (mono[i] < 0) return false;
    Mono rest = mono;
    rest.set(i, 0);
    by[mono[i]].emplace(rest, c);
  }
  q = Poly(n_);
  if (t_.empty()) return true;
  int top = by.begin()->first;
  Terms b;  // running coefficient b_k
  Mono zj = unit_mono(j);
  for (int k = top; k >= 0; --k) {
    Terms next;
    auto it = by.find(k);
    if (it != by.end()) next = it->second;
    for (const auto& [m, c] : b) add_to(next, m + zj, c);
    if (k == 0) return next.empty();
    for (const auto& [m, c] : next) {
      Mono mm = m;
      mm.set(i, k - 1);
      q.add(mm, c);
    }
    b = std::move(next);
  }
  return true;
}

bool Poly::divide_var(int i, Poly& q) const {
  q = Poly(n_);
  for (const auto& [mono, c] : t_) {
    if (mono[i] < 1) return false;
    Mono m = mono;
    m.set(i, mono[i] - 1);
    q.add(m, c);
  }
  return true;
}

std::vector<std::string> default_names(int n) {
  std::vector<std::string> v;
  for (int i = 0; i < n; ++i) v.push_back("z" + std::to_string(i + 1));
  return v;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (t_.empty()) return "0";
  std::vector<std::pair<Mono, Scalar>> v(t_.begin(), t_.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    int da = a.first.total(), db = b.first.total();
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : v) {
    Scalar a = abs(c);
    std::string mono;
    for (int i = 0; i < n_; ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(i);
      if (m[i] != 1) mono += "^" + std::to_string(m[i]);
    }
    if (sgn(c) < 0)
      out += "-";
    else if (!first)
      out += "+";
    if (mono.empty())
      out += to_string(a);
    else if (a == 1)
      out += mono;
    else
      out += to_string(a) + "*" + mono;
    first = false;
  }
  return out;
}

}  // namespace vcoh
