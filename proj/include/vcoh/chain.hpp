#pragma once

#include <cstdint>
#include <map>

#include "vcoh/region.hpp"
#include "vcoh/space.hpp"

namespace vcoh {

// Truncated formal series sum_m y^m x_m with x_m in a space. Every term has
// weight base + |m|; `win` collects the constraints under which no
// contribution was lost to the weight cutoff, so coefficients are exact there.
struct Series {
  int m = 0;
  const Space* sp = nullptr;
  Weight base;
  uint32_t vars = 0;
  std::map<Mono, SVec> t;
  Window win;

  bool empty() const { return t.empty(); }
  size_t terms() const;
};

Series basis_series(const Space& sp, int id, int m);
Series vector_series(const Space& sp, const SVec& v, const Weight& base, int m);

// Y(arg, y_var) applied to x, arg over target.algebra(); negate uses -y_var
Series vertex(const Space& target, const Series& arg, int var, const Series& x, const Weight& cap,
              bool negate = false);
// e^{y_var L(-1)} x
Series translate(const Space& sp, const Series& x, int var, const Weight& cap);
// Y^W_WV(w, y_var)x = e^{y L(-1)} Y_W(x, -y) w with w over W and x over V
Series skew(const Space& W, const Series& w, int var, const Series& x, const Weight& cap);
// drop weights above cap and record the constraint
Series truncate(const Series& x, const Weight& cap);
// a + c b, same space and base weight
void accumulate(Series& a, const Series& b, const Scalar& c = 1);

// <w', x> for each basis w' of weight <= dual_cutoff
std::map<int, Terms> pair_dual(const Series& x, const Weight& dual_cutoff);

long floor_weight(const Weight& w);

}  // namespace vcoh
