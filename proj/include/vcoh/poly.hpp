#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "vcoh/scalar.hpp"

namespace vcoh {

constexpr int kMaxVars = 8;

struct Mono {
  std::array<int8_t, kMaxVars> e{};

  int operator[](int i) const { return e[i]; }
  int total() const {
    int s = 0;
    for (auto x : e) s += x;
    return s;
  }
  bool nonnegative() const {
    for (auto x : e)
      if (x < 0) return false;
    return true;
  }
  void set(int i, int v);
  auto operator<=>(const Mono&) const = default;
  bool operator==(const Mono&) const = default;
};

Mono operator+(const Mono& a, const Mono& b);
Mono operator-(const Mono& a, const Mono& b);
Mono unit_mono(int i, int power = 1);

using Terms = std::map<Mono, Scalar>;

void add_to(Terms& t, const Mono& m, const Scalar& c);

// Laurent polynomial in n variables with rational coefficients
class Poly {
 public:
  Poly() = default;
  explicit Poly(int n) : n_(n) {}
  Poly(int n, const Scalar& c);
  static Poly var(int n, int i);
  static Poly monomial(int n, const Mono& m, const Scalar& c = 1);

  int nvars() const { return n_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }
  void add(const Mono& m, const Scalar& c) { add_to(t_, m, c); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator*=(const Scalar& s);
  friend Poly operator*(const Scalar& s, const Poly& p);
  bool operator==(const Poly& o) const { return n_ == o.n_ && t_ == o.t_; }

  Poly pow(int k) const;
  // min and max of total degree; requires nonzero
  int min_degree() const;
  int max_degree() const;
  bool homogeneous() const { return is_zero() || min_degree() == max_degree(); }
  int min_exponent(int i) const;  // requires nonzero

  // z_i -> sum_j rows[i][j] y_j, result in m variables; polynomial only
  Poly substitute_linear(const std::vector<std::vector<Scalar>>& rows, int m) const;
  // z_i -> variable map[i] in an m-variable ring (map[i] may be -1 for zero)
  Poly relabel(const std::vector<int>& map, int m) const;
  Poly derivative(int i) const;
  Poly shift(const Mono& m) const;
  Scalar eval(const std::vector<Scalar>& pt) const;  // polynomial only

  // exact quotient by (z_i - z_j), or by z_i; false when not divisible
  bool divide_pair(int i, int j, Poly& q) const;
  bool divide_var(int i, Poly& q) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  int n_ = 0;
  Terms t_;
};

std::vector<std::string> default_names(int n);

}  // namespace vcoh

template <>
struct std::hash<vcoh::Mono> {
  size_t operator()(const vcoh::Mono& m) const noexcept {
    uint64_t x;
    std::memcpy(&x, m.e.data(), 8);
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return static_cast<size_t>(x);
  }
};
