#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vcoh/ratfun.hpp"

namespace vcoh {

// Expansion region as a linear change of variables z = T y. The series
// variables y are ordered outermost first: |y_0| > |y_1| > ... > 0, and each
// linear form is expanded around its first nonzero y.
struct Region {
  int n = 0;
  std::vector<std::vector<Scalar>> T;  // n x cols(); square and invertible for reconstruction
  std::vector<std::string> names;      // series variable names
  std::string desc;

  // order[k] = index of the z at position k (outermost first)
  static Region total_order(const std::vector<int>& order);
  // |z_{j+1}| > |z_j - z_{j+1}| > 0, other z as in ascending order, difference innermost
  static Region associativity(int n, int j);
  static Region linear(std::vector<std::vector<Scalar>> T, std::vector<std::string> names,
                       std::string desc);

  int cols() const { return T.empty() ? 0 : static_cast<int>(T[0].size()); }

  // linear form sum_i c_i z_i in series variables
  std::vector<Scalar> form(const std::vector<Scalar>& zcoef) const;
  std::vector<std::vector<Scalar>> inverse() const;
};

// Monomials m with sum_j c_j m_j <= bound for every constraint (c >= 0).
struct Window {
  struct Constraint {
    std::vector<int> c;
    long bound;
  };
  std::vector<Constraint> cons;

  // t_k = sum_{j>k} m_j <= bounds[k], k = 0..m-2
  static Window tails(int m, const std::vector<long>& bounds);
  static Window uniform(int m, long bound);
  void add(std::vector<int> c, long bound) { cons.push_back({std::move(c), bound}); }
  bool contains(const Mono& x) const;
  long value(size_t k, const Mono& x) const;
};

struct LaurentSlab {
  int m = 0;
  Window window;
  Terms coeffs;  // exact on window, absent = 0

  bool operator==(const LaurentSlab& o) const { return coeffs == o.coeffs; }
  LaurentSlab restricted(const Window& w) const;
};

struct PoleCaps {
  int n = 0;
  std::vector<int> pair;    // n*n, i<j
  std::vector<int> origin;  // n
  // optional bound on the numerator degree in each z_i, -1 = none
  std::vector<int> zdeg;
  PoleCaps() = default;
  explicit PoleCaps(int n_) : n(n_), pair(n_ * n_, 0), origin(n_, 0) {}
  int& operator()(int i, int j) { return pair[std::min(i, j) * n + std::max(i, j)]; }
  int total() const;
  static PoleCaps of(const RatFun& f);
};

LaurentSlab expand(const RatFun& f, const Region& region, const Window& window);
LaurentSlab expand(const RatFun& f, const Region& region, int order);

enum class ReconStatus { Ok, NoSolution, Underdetermined };
const char* status_name(ReconStatus s);

struct ReconResult {
  ReconStatus status = ReconStatus::Ok;
  RatFun f;
  std::string detail;
  bool ok() const { return status == ReconStatus::Ok; }
};

struct ReconstructError : std::runtime_error {
  ReconStatus status;
  ReconstructError(ReconStatus s, const std::string& what) : std::runtime_error(what), status(s) {}
};

// Triangular reconstruction: multiply the slab by the capped denominator and
// read off the numerator. degree = total homogeneity degree of the function;
// nullopt reconstructs every degree component present in the slab.
ReconResult try_reconstruct(const LaurentSlab& slab, const Region& region, const PoleCaps& caps,
                            std::optional<int> degree);
RatFun reconstruct(const LaurentSlab& slab, const Region& region, const PoleCaps& caps,
                   std::optional<int> degree);

// Dense linear solve over several regions at once; each rhs set holds one
// slab per region. Used as the oracle for the triangular solver and for
// overdetermined multi-region consistency checks.
std::vector<ReconResult> reconstruct_joint(const std::vector<Region>& regions,
                                           const std::vector<Window>& windows,
                                           const PoleCaps& caps, int degree,
                                           const std::vector<std::vector<Terms>>& rhs_sets);

// numerator monomials of degree d in n variables, lexicographic
std::vector<Mono> monomials_of_degree(int n, int d);

}  // namespace vcoh
