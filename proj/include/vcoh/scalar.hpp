#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace vcoh {

using Scalar = mpq_class;
using Weight = mpq_class;

// "p/q", "p", "-p/q"; throws std::invalid_argument on junk
Scalar parse_scalar(const std::string& s);
std::string to_string(const Scalar& q);

bool is_integer(const Scalar& q);
long to_long(const Scalar& q);  // requires is_integer

Scalar binomial(long n, long k);  // generalized: n may be negative, k >= 0
Scalar factorial(long n);

// sparse coefficient vector over a flat index set
using SVec = std::map<int, Scalar>;

void axpy(SVec& y, const Scalar& a, const SVec& x);
void add_term(SVec& y, int idx, const Scalar& a);
void prune(SVec& y);

}  // namespace vcoh
