#pragma once

#include <random>

#include "vcoh/region.hpp"

namespace vcoh::testing {

// random reduced function of n <= 3 variables: numerator degree <= 4, every
// pole exponent <= 3
inline RatFun random_ratfun(std::mt19937& rng, int n) {
  auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };
  Poly num(n);
  int terms = pick(1, 4);
  for (int t = 0; t < terms; ++t) {
    Mono m;
    int left = pick(0, 4);
    for (int i = 0; i < n; ++i) {
      int e = i + 1 == n ? left : pick(0, left);
      m.set(i, e);
      left -= e;
    }
    Scalar c(pick(-5, 5), pick(1, 4));
    c.canonicalize();
    num.add(m, c);
  }
  if (num.is_zero()) num = Poly(n, 1);
  std::vector<int> pair(n * n, 0), origin(n, 0);
  for (int i = 0; i < n; ++i) {
    origin[i] = pick(0, 3);
    for (int j = i + 1; j < n; ++j) pair[i * n + j] = pick(0, 3);
  }
  return RatFun(num, pair, origin);
}

// expansion order large enough for the triangular solve to see the whole numerator
inline int round_trip_order(const RatFun& f) {
  return f.numerator().max_degree() + 2 * f.pole_total() + 2;
}

inline RatFun round_trip(const RatFun& f, const Region& region) {
  auto slab = expand(f, region, round_trip_order(f));
  return reconstruct(slab, region, PoleCaps::of(f), std::nullopt);
}

}  // namespace vcoh::testing
