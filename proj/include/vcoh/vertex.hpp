#pragma once

#include <map>
#include <string>
#include <vector>

#include "vcoh/space.hpp"

namespace vcoh {

// (Y)_n(u)w; components above the cutoff set w.overflow
GradedVector mode_act(const Space& sp, const GradedVector& u, long n, const GradedVector& w);

// coefficients of z^k, k = 0..order, of e^{z L(-1)} w
std::vector<GradedVector> translate(const Space& sp, int order, const GradedVector& w);

// coefficient of z^p in Y^W_WV(w, z)v = e^{z L(-1)} Y_W(v, -z) w, for every p whose
// component fits under the cutoff
std::map<long, GradedVector> skew_vertex(const Space& W, const GradedVector& w,
                                         const GradedVector& v);

struct PoleBound {
  // N(u,v) for algebra basis pairs and K(u,w) for (algebra, module) pairs;
  // values follow the positive-integer convention max(1, pole order)
  std::map<std::pair<int, int>, int> N;
  std::map<std::pair<int, int>, int> K;
};

PoleBound pole_bounds(const Space& V, const Space& W, const Weight& weight_max);

}  // namespace vcoh
