#include "vcoh/ratfun.hpp"

#include <cctype>

namespace vcoh {

RatFun::RatFun(int n) : n_(n), num_(n), pair_(n * n, 0), origin_(n, 0) {
  if (n < 1 || n > kMaxVars) throw std::invalid_argument("RatFun variable count out of range");
}

RatFun::RatFun(int n, const Scalar& c) : RatFun(n) { num_ = Poly(n, c); }

RatFun::RatFun(Poly num, std::vector<int> pair, std::vector<int> origin)
    : n_(static_cast<int>(origin.size())), num_(std::move(num)), pair_(std::move(pair)),
      origin_(std::move(origin)) {
  if (n_ < 1 || n_ > kMaxVars) throw std::invalid_argument("RatFun variable count out of range");
  if (static_cast<int>(pair_.size()) != n_ * n_) throw std::invalid_argument("pair table size");
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j <= i; ++j)
      if (pair_[i * n_ + j] != 0) throw std::invalid_argument("pair exponents live on i<j");
  if (num_.nvars() != n_) num_ = num_.relabel([&] {
      std::vector<int> id(num_.nvars());
      for (int i = 0; i < num_.nvars(); ++i) id[i] = i;
      return id;
    }(), n_);
  reduce();
}

RatFun RatFun::pole_pair(int n, int i, int j, int e) {
  RatFun f(n, 1);
  if (i == j) throw std::invalid_argument("pole_pair needs i != j");
  if (i < j) {
    f.pair_[i * n + j] = e;
  } else {
    f.pair_[j * n + i] = e;
    if (e % 2) f.num_ = -f.num_;
  }
  return f;
}

RatFun RatFun::pole_origin(int n, int i, int e) {
  RatFun f(n, 1);
  f.origin_[i] = e;
  return f;
}

RatFun RatFun::var(int n, int i) {
  RatFun f(n);
  f.num_ = Poly::var(n, i);
  return f;
}

void RatFun::reduce() {
  if (num_.is_zero()) {
    std::fill(pair_.begin(), pair_.end(), 0);
    std::fill(origin_.begin(), origin_.end(), 0);
    return;
  }
  for (int i = 0; i < n_; ++i) {
    int mn = num_.min_exponent(i);
    if (mn < 0) {
      origin_[i] -= mn;
      num_ = num_.shift(unit_mono(i, -mn));
    }
  }
  Poly q;
  for (int i = 0; i < n_; ++i) {
    while (origin_[i] > 0 && num_.divide_var(i, q)) {
      num_ = std::move(q);
      --origin_[i];
    }
    for (int j = i + 1; j < n_; ++j) {
      int& e = pair_[i * n_ + j];
      while (e > 0 && num_.divide_pair(i, j, q)) {
        num_ = std::move(q);
        --e;
      }
    }
  }
}

bool RatFun::has_origin_poles() const {
  for (int e : origin_)
    if (e) return true;
  return false;
}

int RatFun::pole_total() const {
  int s = 0;
  for (int e : pair_) s += e;
  for (int e : origin_) s += e;
  return s;
}

static Poly factor_poly(int n, const std::vector<int>& pair, const std::vector<int>& origin) {
  Poly p(n, 1);
  Mono shift;
  for (int i = 0; i < n; ++i) shift.set(i, origin[i]);
  p = p.shift(shift);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int e = pair[i * n + j];
      if (!e) continue;
      Poly l = Poly::var(n, i) - Poly::var(n, j);
      p = p * l.pow(e);
    }
  return p;
}

Poly RatFun::denominator() const { return factor_poly(n_, pair_, origin_); }

RatFun RatFun::operator+(const RatFun& o) const {
  if (n_ != o.n_) throw std::invalid_argument("RatFun variable counts differ");
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  std::vector<int> p(n_ * n_), org(n_), da(n_ * n_), db(n_ * n_), oa(n_), ob(n_);
  for (int k = 0; k < n_ * n_; ++k) {
    p[k] = std::max(pair_[k], o.pair_[k]);
    da[k] = p[k] - pair_[k];
    db[k] = p[k] - o.pair_[k];
  }
  for (int k = 0; k < n_; ++k) {
    org[k] = std::max(origin_[k], o.origin_[k]);
    oa[k] = org[k] - origin_[k];
    ob[k] = org[k] - o.origin_[k];
  }
  Poly num = num_ * factor_poly(n_, da, oa) + o.num_ * factor_poly(n_, db, ob);
  return RatFun(std::move(num), std::move(p), std::move(org));
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator*(const RatFun& o) const {
  if (n_ != o.n_) throw std::invalid_argument("RatFun variable counts differ");
  std::vector<int> p(n_ * n_), org(n_);
  for (int k = 0; k < n_ * n_; ++k) p[k] = pair_[k] + o.pair_[k];
  for (int k = 0; k < n_; ++k) org[k] = origin_[k] + o.origin_[k];
  return RatFun(num_ * o.num_, std::move(p), std::move(org));
}

RatFun operator*(const Scalar& s, const RatFun& f) {
  RatFun r = f;
  r.num_ *= s;
  if (r.num_.is_zero()) r.reduce();
  return r;
}

bool RatFun::operator==(const RatFun& o) const {
  return n_ == o.n_ && num_ == o.num_ && pair_ == o.pair_ && origin_ == o.origin_;
}

RatFun RatFun::divide(const RatFun& g) const {
  if (g.is_zero()) throw std::domain_error("division by zero rational function");
  Poly rest = g.num_;
  std::vector<int> p = pair_, org = origin_;
  Poly q;
  for (int i = 0; i < n_; ++i) {
    while (rest.divide_var(i, q)) {
      rest = std::move(q);
      ++org[i];
    }
    for (int j = i + 1; j < n_; ++j)
      while (rest.divide_pair(i, j, q)) {
        rest = std::move(q);
        ++p[i * n_ + j];
      }
  }
  if (rest.size() != 1 || !(rest.terms().begin()->first == Mono{}))
    throw std::domain_error("divisor has factors outside z_i - z_j and z_i");
  Scalar c = rest.terms().begin()->second;
  Poly num = (1 / c) * (num_ * g.denominator());
  return RatFun(std::move(num), std::move(p), std::move(org));
}

std::optional<int> RatFun::homogeneity_degree() const {
  if (is_zero() || !num_.homogeneous()) return std::nullopt;
  return num_.min_degree() - pole_total();
}

RatFun RatFun::derivative(int i) const {
  RatFun r(num_.derivative(i), pair_, origin_);
  for (int a = 0; a < n_; ++a) {
    if (origin_[a] && a == i) {
      std::vector<int> org = origin_;
      ++org[a];
      r += RatFun(Scalar(-origin_[a]) * num_, pair_, org);
    }
    for (int b = a + 1; b < n_; ++b) {
      int e = pair_[a * n_ + b];
      if (!e || (i != a && i != b)) continue;
      std::vector<int> p = pair_;
      ++p[a * n_ + b];
      Scalar d = i == a ? -e : e;
      r += RatFun(d * num_, p, origin_);
    }
  }
  return r;
}

RatFun RatFun::specialize_zero(int i) const {
  if (origin_[i]) throw std::domain_error("specialize_zero: pole at the origin");
  if (n_ == 1) throw std::invalid_argument("specialize_zero needs at least two variables");
  int m = n_ - 1;
  std::vector<int> map(n_);
  for (int k = 0; k < n_; ++k) map[k] = k < i ? k : (k == i ? -1 : k - 1);
  Poly num = num_.relabel(map, m);
  std::vector<int> p(m * m, 0), org(m, 0);
  int sign = 1;
  for (int k = 0; k < n_; ++k) {
    if (k == i) continue;
    org[map[k]] += origin_[k];
  }
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b) {
      int e = pair_[a * n_ + b];
      if (!e) continue;
      if (a == i) {
        org[map[b]] += e;
        if (e % 2) sign = -sign;
      } else if (b == i) {
        org[map[a]] += e;
      } else {
        p[map[a] * m + map[b]] += e;
      }
    }
  if (sign < 0) num = -num;
  return RatFun(std::move(num), std::move(p), std::move(org));
}

RatFun RatFun::merge_vars(int i, int j) const {
  if (i == j) return *this;
  if (pair_[std::min(i, j) * n_ + std::max(i, j)])
    throw std::domain_error("merge_vars: pole along the merged hyperplane");
  int m = n_ - 1;
  std::vector<int> map(n_);
  for (int k = 0; k < n_; ++k) map[k] = k < i ? k : k - 1;
  map[i] = map[j];
  Poly num = num_.relabel(map, m);
  std::vector<int> p(m * m, 0), org(m, 0);
  for (int k = 0; k < n_; ++k) org[map[k]] += origin_[k];
  bool neg = false;
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b) {
      int e = pair_[a * n_ + b];
      if (!e) continue;
      int x = map[a], y = map[b];
      if (x < y) {
        p[x * m + y] += e;
      } else {
        p[y * m + x] += e;
        if (e % 2) neg = !neg;
      }
    }
  if (neg) num = -num;
  return RatFun(std::move(num), std::move(p), std::move(org));
}

RatFun RatFun::relabel(const std::vector<int>& map, int m) const {
  Poly num = num_.relabel(map, m);
  std::vector<int> p(m * m, 0), org(m, 0);
  for (int k = 0; k < n_; ++k) org[map[k]] += origin_[k];
  bool neg = false;
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b) {
      int e = pair_[a * n_ + b];
      if (!e) continue;
      int x = map[a], y = map[b];
      if (x == y) throw std::invalid_argument("relabel must be injective on poles");
      if (x < y) {
        p[x * m + y] += e;
      } else {
        p[y * m + x] += e;
        if (e % 2) neg = !neg;
      }
    }
  if (neg) num = -num;
  return RatFun(std::move(num), std::move(p), std::move(org));
}

Scalar RatFun::eval(const std::vector<Scalar>& pt) const {
  Scalar d = denominator().eval(pt);
  if (sgn(d) == 0) throw std::domain_error("evaluation on a pole");
  return num_.eval(pt) / d;
}

RatFun sn_act(const std::vector<int>& sigma, const RatFun& f) {
  if (static_cast<int>(sigma.size()) != f.nvars()) throw std::invalid_argument("sn_act arity");
  return f.relabel(sigma, f.nvars());
}

std::string RatFun::str() const { return str(default_names(n_)); }

std::string RatFun::str(const std::vector<std::string>& names) const {
  std::string num = num_.str(names);
  std::vector<std::string> fac;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      int e = pair_[i * n_ + j];
      if (!e) continue;
      std::string f = "(" + names[i] + "-" + names[j] + ")";
      if (e > 1) f += "^" + std::to_string(e);
      fac.push_back(f);
    }
  for (int i = 0; i < n_; ++i) {
    if (!origin_[i]) continue;
    std::string f = names[i];
    if (origin_[i] > 1) f += "^" + std::to_string(origin_[i]);
    fac.push_back(f);
  }
  if (fac.empty()) return num;
  if (num_.size() > 1) num = "(" + num + ")";
  std::string den;
  for (size_t k = 0; k < fac.size(); ++k) den += (k ? "*" : "") + fac[k];
  if (fac.size() > 1) den = "(" + den + ")";
  return num + "/" + den;
}

namespace {

struct Parser {
  const std::string& s;
  int n;
  size_t i = 0;

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("ratfun parse error at offset " + std::to_string(i) + ": " + what);
  }
  bool eat(char c) {
    ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  long integer() {
    ws();
    size_t st = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (st == i) fail("expected integer");
    return std::stol(s.substr(st, i - st));
  }
  RatFun expr() {
    RatFun r = term();
    for (;;) {
      if (eat('+'))
        r = r + term();
      else if (eat('-'))
        r = r - term();
      else
        return r;
    }
  }
  RatFun term() {
    RatFun r = unary();
    for (;;) {
      if (eat('*'))
        r = r * unary();
      else if (eat('/'))
        r = r.divide(unary());
      else
        return r;
    }
  }
  RatFun unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  RatFun power() {
    RatFun a = atom();
    if (eat('^')) {
      long k = integer();
      RatFun r(n, 1);
      for (long j = 0; j < k; ++j) r = r * a;
      return r;
    }
    return a;
  }
  RatFun atom() {
    ws();
    if (eat('(')) {
      RatFun r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (i < s.size() && s[i] == 'z') {
      ++i;
      long k = integer();
      if (k < 1 || k > n) fail("variable index out of range");
      return RatFun::var(n, static_cast<int>(k - 1));
    }
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      size_t st = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      return RatFun(n, Scalar(s.substr(st, i - st)));
    }
    fail("unexpected character");
  }
};

}  // namespace

RatFun parse_ratfun(const std::string& text, int n) {
  Parser p{text, n};
  RatFun r = p.expr();
  p.ws();
  if (p.i != text.size()) p.fail("trailing input");
  return r;
}

}  // namespace vcoh
