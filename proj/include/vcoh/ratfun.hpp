#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vcoh/poly.hpp"

namespace vcoh {

// N(z) / (prod_{i<j} (z_i - z_j)^{pair(i,j)} * prod_i z_i^{origin(i)}), reduced
class RatFun {
 public:
  RatFun() : RatFun(1) {}
  explicit RatFun(int n);
  RatFun(int n, const Scalar& c);
  RatFun(Poly num, std::vector<int> pair, std::vector<int> origin);  // reduces
  static RatFun pole_pair(int n, int i, int j, int e);  // 1/(z_i - z_j)^e, any i != j
  static RatFun pole_origin(int n, int i, int e);
  static RatFun var(int n, int i);

  int nvars() const { return n_; }
  const Poly& numerator() const { return num_; }
  int pair_exp(int i, int j) const { return pair_[i * n_ + j]; }  // i < j
  int origin_exp(int i) const { return origin_[i]; }
  bool is_zero() const { return num_.is_zero(); }
  bool has_origin_poles() const;
  int pole_total() const;

  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator*(const RatFun& o) const;
  RatFun operator-() const;
  friend RatFun operator*(const Scalar& s, const RatFun& f);
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  bool operator==(const RatFun& o) const;
  bool operator!=(const RatFun& o) const { return !(*this == o); }

  // f / g where g's numerator is a constant times hyperplane factors
  RatFun divide(const RatFun& g) const;

  // degree of a homogeneous function; nullopt when zero or not homogeneous
  std::optional<int> homogeneity_degree() const;

  RatFun derivative(int i) const;
  // z_i -> 0, dropping the variable; throws if z_i has an origin pole
  RatFun specialize_zero(int i) const;
  // z_i -> z_j, dropping z_i; throws on a pole along z_i = z_j
  RatFun merge_vars(int i, int j) const;
  // variable k goes to map[k] in an m-variable function; map injective
  RatFun relabel(const std::vector<int>& map, int m) const;
  Scalar eval(const std::vector<Scalar>& pt) const;

  std::string str() const;
  std::string str(const std::vector<std::string>& names) const;

  // full denominator as a polynomial
  Poly denominator() const;

 private:
  void reduce();

  int n_;
  Poly num_;
  std::vector<int> pair_;    // n*n, upper triangle used
  std::vector<int> origin_;  // n
};

// sigma(f)(z_1..z_n) = f(z_{sigma(1)}, ..., z_{sigma(n)}), sigma 0-based
RatFun sn_act(const std::vector<int>& sigma, const RatFun& f);

// parses the canonical text and ordinary arithmetic over z1..zn
RatFun parse_ratfun(const std::string& text, int n);

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace vcoh
