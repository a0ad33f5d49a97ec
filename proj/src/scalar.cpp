#include "vcoh/scalar.hpp"

#include <stdexcept>

namespace vcoh {

Scalar parse_scalar(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  bool slash = false, digit = false;
  for (size_t k = i; k < s.size(); ++k) {
    char c = s[k];
    if (c >= '0' && c <= '9') {
      digit = true;
    } else if (c == '/' && !slash && digit && k + 1 < s.size()) {
      slash = true;
      digit = false;
    } else {
      throw std::invalid_argument("bad rational '" + s + "'");
    }
  }
  if (!digit) throw std::invalid_argument("bad rational '" + s + "'");
  std::string t = s[0] == '+' ? s.substr(1) : s;
  Scalar q;
  q.set_str(t, 10);
  if (slash && q.get_den() == 0) throw std::invalid_argument("zero denominator");
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& q) { return q.get_str(10); }

bool is_integer(const Scalar& q) { return q.get_den() == 1; }

long to_long(const Scalar& q) {
  if (!is_integer(q)) throw std::invalid_argument("not an integer: " + to_string(q));
  return q.get_num().get_si();
}

Scalar binomial(long n, long k) {
  if (k < 0) return 0;
  Scalar r = 1;
  for (long i = 0; i < k; ++i) {
    r *= Scalar(n - i);
    r /= Scalar(i + 1);
  }
  return r;
}

Scalar factorial(long n) {
  Scalar r = 1;
  for (long i = 2; i <= n; ++i) r *= Scalar(i);
  return r;
}

void axpy(SVec& y, const Scalar& a, const SVec& x) {
  if (sgn(a) == 0) return;
  for (const auto& [i, c] : x) {
    auto it = y.find(i);
    if (it == y.end()) {
      y.emplace(i, a * c);
    } else {
      it->second += a * c;
      if (sgn(it->second) == 0) y.erase(it);
    }
  }
}

void add_term(SVec& y, int idx, const Scalar& a) {
  if (sgn(a) == 0) return;
  auto it = y.find(idx);
  if (it == y.end()) {
    y.emplace(idx, a);
  } else {
    it->second += a;
    if (sgn(it->second) == 0) y.erase(it);
  }
}

void prune(SVec& y) {
  for (auto it = y.begin(); it != y.end();) {
    if (sgn(it->second) == 0)
      it = y.erase(it);
    else
      ++it;
  }
}

}  // namespace vcoh
