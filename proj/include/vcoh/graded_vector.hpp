#pragma once

#include <map>
#include <string>
#include <vector>

#include "vcoh/scalar.hpp"

namespace vcoh {

// element of a truncated completion: weight -> (local basis index -> coeff)
struct GradedVector {
  std::string space;
  Weight cutoff = 0;
  std::map<Weight, std::map<int, Scalar>> comps;
  bool overflow = false;  // nonzero components above cutoff were dropped

  bool is_zero() const;
  std::vector<Weight> weights() const;
  void add(const Weight& r, int idx, const Scalar& c);
  bool operator==(const GradedVector& o) const;  // ignores the overflow flag
};

GradedVector project(const GradedVector& v, const Weight& r);
GradedVector operator+(const GradedVector& a, const GradedVector& b);
GradedVector operator*(const Scalar& s, const GradedVector& a);

}  // namespace vcoh
